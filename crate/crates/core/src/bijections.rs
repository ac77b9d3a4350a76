//! Maps between vacancy-osculation sets and generalized oscillating tableaux.
//!
//! `theta` reads a set along the progression induced by an ordering pair. Its inverses
//! place each step `k` at the unique point with level `t_k` and content `Ω_k`:
//! `phi` for complete ordering pairs, `psi_hat` and `psi_check` for the lexicographic
//! and antilexicographic pairs when the boundary allows it.

use crate::error::{Error, Result};
use crate::grid::{PathTuple, Point};
use crate::orders::{g_q, induced_progression, LevelFunction, OrderingPair, TotalOrder};
use crate::partitions::Partition;
use crate::tableaux::{got_ssyt, got_violation, GenOscTableau, OscillatingTableau, Tableau};
use crate::vos::{self, VOSet};

/// `((L(s_1), …, L(s_l)), ε(s))` for the progression `s` induced by `pair`.
pub fn theta(s: &VOSet, pair: &OrderingPair) -> Result<GenOscTableau> {
    s.edges()?;
    let prog = induced_progression(s, pair)?;
    let t = prog
        .iter()
        .map(|&p| {
            let u = pair.level().level_of(p);
            usize::try_from(u).ok().filter(|&u| u > 0).ok_or_else(|| Error::domain(format!("level {u} at {p:?} is not positive")))
        })
        .collect::<Result<Vec<_>>>()?;
    let profile: Vec<i64> = prog.iter().map(|&p| crate::grid::content(p)).collect();
    let eps = OscillatingTableau::from_profile(&profile)?;
    GenOscTableau::new(t, eps)
}

/// Grid `(max(n, n−q), max(n, n+q))` on which `GOT([n], ≺_q, …)` lives.
pub fn grid_for(n: usize, q: i64) -> (usize, usize) {
    let n = n as i64;
    ((n.max(n - q)) as usize, (n.max(n + q)) as usize)
}

/// Smallest `n` for which `GOT([n], ≺_q, λ, l)` can be nonempty: `L_q(ℓ(λ), λ_1)`.
pub fn min_n(q: i64, lambda: &Partition) -> i64 {
    LevelFunction::Lq(q).level(lambda.len(), lambda.first())
}

fn place(a: usize, b: usize, g: &GenOscTableau, at: impl Fn(i64, i64) -> (i64, i64)) -> Result<VOSet> {
    let profile = g.eps.profile();
    let mut pts: Vec<Point> = Vec::with_capacity(g.len());
    for (k, (&t, &z)) in g.t.iter().zip(&profile).enumerate() {
        let (i, j) = at(t as i64, z);
        if i < 1 || j < 1 || i > a as i64 || j > b as i64 {
            return Err(Error::domain(format!("step {} lands at ({i},{j}), outside {a}x{b}", k + 1)));
        }
        pts.push((i as usize, j as usize));
    }
    let s = VOSet::unchecked(a, b, pts);
    if s.len() != g.len() {
        return Err(Error::domain("two steps land on the same point"));
    }
    let s = VOSet::new(a, b, s.points)?;
    if &s.partition()? != g.eps.shape() {
        return Err(Error::domain("image set has a different boundary partition"));
    }
    Ok(s)
}

/// `{G_q(t_k, Ω_k)}` on the grid for `[n]` and `q`.
///
/// Checks that `≺` is a `q`-order on the grid's contents, that `n ≥ L_q(ℓ(λ), λ_1)`,
/// and that the input lies in `GOT([n], ≺, λ, l)`; then checks the image.
pub fn phi(q: i64, n: usize, order: &TotalOrder, g: &GenOscTableau) -> Result<VOSet> {
    let (a, b) = grid_for(n, q);
    let lambda = g.eps.shape();
    let lo = (1 - a as i64).min(-(g.len() as i64));
    let hi = (b as i64 - 1).max(g.len() as i64);
    if !order.is_q_order(q, lo.min(q), hi.max(q)) {
        return Err(Error::domain(format!("order is not a {q}-order on contents [{lo},{hi}]")));
    }
    if (n as i64) < min_n(q, lambda) {
        return Err(Error::domain(format!(
            "n = {n} is below L_q(ℓ(λ), λ_1) = {}, so no tableau of shape {lambda} exists here",
            min_n(q, lambda)
        )));
    }
    if let Some(why) = got_violation(n, order, lambda, g.len(), g) {
        return Err(Error::domain(format!("input is not a generalized oscillating tableau: {why}")));
    }
    place(a, b, g, |t, z| g_q(q, t, z))
}

/// Inverse of `theta` with the lexicographic pair when `α = [a]`: points `(t_k, t_k + Ω_k)`.
pub fn psi_hat(a: usize, b: usize, g: &GenOscTableau) -> Result<VOSet> {
    let lambda = g.eps.shape();
    if !(lambda.fits(a, b) && a <= b && lambda.first() <= b - a) {
        return Err(Error::domain(format!("shape {lambda} does not give α = [{a}] on {a}x{b}")));
    }
    if let Some(why) = got_violation(a, &TotalOrder::NaturalAsc, lambda, g.len(), g) {
        return Err(Error::domain(format!("input is not in GOT([{a}], <): {why}")));
    }
    place(a, b, g, |t, z| (t, t + z))
}

/// Inverse of `theta` with the antilexicographic pair when `β = [b]`: points `(t_k − Ω_k, t_k)`.
pub fn psi_check(a: usize, b: usize, g: &GenOscTableau) -> Result<VOSet> {
    let lambda = g.eps.shape();
    if !(lambda.fits(a, b) && b <= a && lambda.len() <= a - b) {
        return Err(Error::domain(format!("shape {lambda} does not give β = [{b}] on {a}x{b}")));
    }
    if let Some(why) = got_violation(b, &TotalOrder::NaturalDesc, lambda, g.len(), g) {
        return Err(Error::domain(format!("input is not in GOT([{b}], >): {why}")));
    }
    place(a, b, g, |t, z| (t - z, t))
}

/// The semistandard tableau of a set without osculations: `theta` with the
/// lexicographic pair, read as a tableau.
pub fn upsilon(s: &VOSet) -> Result<Tableau> {
    let lambda = s.partition()?;
    if s.len() != lambda.size() {
        return Err(Error::domain(format!("set has {} osculations", s.chi()?)));
    }
    let g = theta(s, &OrderingPair::lex(s.a, s.b))?;
    got_ssyt(&g)
}

/// Path tuple to tableau through `(L_{b−a}, ≺)`; `≺` must be a `(b−a)`-order.
pub fn paths_to_got(p: &PathTuple, order: &TotalOrder) -> Result<GenOscTableau> {
    let q = p.b as i64 - p.a as i64;
    let pair = OrderingPair::new(LevelFunction::Lq(q), order.clone(), p.a, p.b)?;
    let s = vos::zset(p)?;
    theta(&s, &pair)
}

/// Tableau back to paths on the grid `(max(n, n−q), max(n, n+q))`.
pub fn got_to_paths(n: usize, q: i64, order: &TotalOrder, g: &GenOscTableau) -> Result<PathTuple> {
    phi(q, n, order, g)?.to_paths()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_dimensions() {
        assert_eq!(grid_for(4, 2), (4, 6));
        assert_eq!(grid_for(3, -1), (4, 3));
    }

    #[test]
    fn empty_tableau_maps_to_empty_set() {
        let s = phi(0, 2, &TotalOrder::CanonicalQ(0), &GenOscTableau::empty()).unwrap();
        assert!(s.is_empty());
        let s = psi_hat(2, 3, &GenOscTableau::empty());
        assert!(s.unwrap().is_empty());
    }

    #[test]
    fn below_min_n_is_rejected() {
        let eps = OscillatingTableau::from_profile(&[0, 1]).unwrap();
        let g = GenOscTableau::new(vec![1, 1], eps).unwrap();
        // L_0(1, 2) = 2
        assert!(phi(0, 1, &TotalOrder::CanonicalQ(0), &g).is_err());
    }
}
