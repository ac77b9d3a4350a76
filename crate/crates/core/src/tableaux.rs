//! Oscillating tableaux and their generalisations, plus standard and semistandard
//! Young tableaux.
//!
//! An oscillating tableau is a walk from `∅` in which each step adds or removes one
//! square. The contents of the changed squares form its profile, and the profile
//! alone determines the walk.

use std::collections::HashMap;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::arith::{binomial, double_factorial, exact_div, factorial};
use crate::error::{Error, Result};
use crate::orders::TotalOrder;
use crate::partitions::{differs_by_square, Partition};

/// Partitions `ε_0 = ∅, ε_1, …, ε_l` with consecutive ones differing by a square.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct OscillatingTableau(Vec<Partition>);

impl<'de> Deserialize<'de> for OscillatingTableau {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<Partition>::deserialize(d)?;
        OscillatingTableau::new(v).map_err(serde::de::Error::custom)
    }
}

impl OscillatingTableau {
    pub fn new(eps: Vec<Partition>) -> Result<Self> {
        match eps.first() {
            Some(p) if p.is_empty() => {}
            _ => return Err(Error::domain("an oscillating tableau starts with the empty partition")),
        }
        for k in 1..eps.len() {
            if differs_by_square(&eps[k - 1], &eps[k]).is_none() {
                return Err(Error::domain(format!("step {k}: {} and {} do not differ by a square", eps[k - 1], eps[k])));
            }
        }
        Ok(OscillatingTableau(eps))
    }

    /// The tableau of length 0.
    pub fn empty() -> Self {
        OscillatingTableau(vec![Partition::empty()])
    }

    /// Rebuilds the walk from its contents. Each content must be a change diagonal
    /// of the partition reached so far.
    pub fn from_profile(profile: &[i64]) -> Result<Self> {
        let mut eps = Vec::with_capacity(profile.len() + 1);
        let mut cur = Partition::empty();
        eps.push(cur.clone());
        for (k, &d) in profile.iter().enumerate() {
            cur = cur
                .neighbor(d)
                .map_err(|_| Error::domain(format!("step {}: {d} is not a change diagonal of {cur}", k + 1)))?;
            eps.push(cur.clone());
        }
        Ok(OscillatingTableau(eps))
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.0
    }

    /// `ε_k`.
    pub fn get(&self, k: usize) -> &Partition {
        &self.0[k]
    }

    /// The number of steps `l`.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn shape(&self) -> &Partition {
        self.0.last().unwrap()
    }

    /// `Ω_k` for `k = 1..=l`.
    pub fn profile(&self) -> Vec<i64> {
        self.0.windows(2).map(|w| differs_by_square(&w[0], &w[1]).unwrap()).collect()
    }

    /// Steps (1-based) that remove a square.
    pub fn deletions(&self) -> Vec<usize> {
        (1..=self.len()).filter(|&k| self.0[k].size() < self.0[k - 1].size()).collect()
    }

    /// `{k ∈ [l−1] : Ω_k ≺ Ω_{k+1}}`.
    pub fn ascents(&self, order: &TotalOrder) -> Result<Vec<usize>> {
        let p = self.profile();
        let mut out = Vec::new();
        for k in 1..p.len() {
            if order.precedes(p[k - 1], p[k])? {
                out.push(k);
            }
        }
        Ok(out)
    }
}

/// Number of squares in exactly one of the two diagrams.
fn diagram_distance(m: &Partition, l: &Partition) -> usize {
    let n = m.len().max(l.len());
    (1..=n).map(|i| m.part(i).abs_diff(l.part(i))).sum()
}

/// Every oscillating tableau of shape `λ` and length `l`, in lexicographic order of profiles.
pub fn enumerate_ot(lambda: &Partition, l: usize) -> Vec<OscillatingTableau> {
    let mut out = Vec::new();
    if l < lambda.size() || (l - lambda.size()) % 2 != 0 {
        return out;
    }
    let mut path = vec![Partition::empty()];
    fn rec(lambda: &Partition, l: usize, path: &mut Vec<Partition>, out: &mut Vec<OscillatingTableau>) {
        let cur = path.last().unwrap().clone();
        let k = path.len() - 1;
        if k == l {
            if &cur == lambda {
                out.push(OscillatingTableau(path.clone()));
            }
            return;
        }
        for d in cur.change_diagonals() {
            let next = cur.neighbor(d).unwrap();
            if diagram_distance(&next, lambda) > l - k - 1 {
                continue;
            }
            path.push(next);
            rec(lambda, l, path, out);
            path.pop();
        }
    }
    rec(lambda, l, &mut path, &mut out);
    out
}

/// `f^λ` by the hook-length formula.
pub fn f_lambda(lambda: &Partition) -> BigUint {
    let conj = lambda.conjugate();
    let mut hooks = BigUint::from(1u32);
    for (i, j) in lambda.cells() {
        let h = (lambda.part(i) - j) + (conj.part(j) - i) + 1;
        hooks *= h as u64;
    }
    exact_div(&factorial(lambda.size() as u64), &hooks)
}

/// `C(l, |λ|) · (l−|λ|−1)!! · f^λ`, zero unless `l − |λ|` is even and nonnegative.
pub fn count_ot(lambda: &Partition, l: usize) -> BigUint {
    let n = lambda.size();
    if l < n || (l - n) % 2 != 0 {
        return BigUint::zero();
    }
    binomial(l as u64, n as u64) * double_factorial(l as i64 - n as i64 - 1) * f_lambda(lambda)
}

type DistKey = (Partition, usize, Vec<i64>);

fn dist_cache() -> &'static Mutex<HashMap<DistKey, Vec<BigUint>>> {
    static CACHE: OnceLock<Mutex<HashMap<DistKey, Vec<BigUint>>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `𝒩(λ,l,≺,i)` for `i = 0..l` (index `i`), counting tableaux of `OT(λ,l)` by ascents.
///
/// Runs a walk over states `(partition, last content)` carrying a histogram of
/// ascents, so tableaux are never listed one by one.
pub fn ascent_distribution(lambda: &Partition, l: usize, order: &TotalOrder) -> Result<Vec<BigUint>> {
    let w = l as i64;
    let fingerprint: Vec<i64> = {
        let mut v: Vec<i64> = (-w..=w).filter(|&z| order.key(z).is_some()).collect();
        v.sort_by_key(|&z| order.key(z).unwrap());
        v
    };
    let key = (lambda.clone(), l, fingerprint);
    if let Some(v) = dist_cache().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let v = ascent_distribution_uncached(lambda, l, order)?;
    dist_cache().lock().unwrap().insert(key, v.clone());
    Ok(v)
}

fn ascent_distribution_uncached(lambda: &Partition, l: usize, order: &TotalOrder) -> Result<Vec<BigUint>> {
    let width = l.max(1);
    let mut out = vec![BigUint::zero(); width];
    if l < lambda.size() || (l - lambda.size()) % 2 != 0 {
        return Ok(out);
    }
    if l == 0 {
        out[0] = BigUint::from(1u32);
        return Ok(out);
    }
    let add = |h: &mut Vec<u128>, i: usize, x: u128| {
        h[i] = h[i].checked_add(x).expect("ascent histogram overflowed u128");
    };
    let mut layer: HashMap<(Partition, i64), Vec<u128>> = HashMap::new();
    if diagram_distance(&Partition::new(vec![1]).unwrap(), lambda) <= l - 1 {
        let mut h = vec![0u128; width];
        h[0] = 1;
        layer.insert((Partition::new(vec![1]).unwrap(), 0), h);
    }
    for k in 1..l {
        let mut next: HashMap<(Partition, i64), Vec<u128>> = HashMap::new();
        for ((mu, last), hist) in &layer {
            for d in mu.change_diagonals() {
                let nu = mu.neighbor(d).unwrap();
                if diagram_distance(&nu, lambda) > l - k - 1 {
                    continue;
                }
                let up = order.precedes(*last, d)? as usize;
                let entry = next.entry((nu, d)).or_insert_with(|| vec![0u128; width]);
                for (i, &c) in hist.iter().enumerate() {
                    if c != 0 {
                        add(entry, i + up, c);
                    }
                }
            }
        }
        layer = next;
    }
    for ((mu, _), hist) in layer {
        if &mu == lambda {
            for (i, c) in hist.into_iter().enumerate() {
                out[i] += BigUint::from(c);
            }
        }
    }
    Ok(out)
}

/// `|GOT([n],≺,λ,l)| = Σ_i 𝒩(λ,l,≺,i) · C(n+i, l)`.
pub fn count_got(n: usize, order: &TotalOrder, lambda: &Partition, l: usize) -> Result<BigUint> {
    let dist = ascent_distribution(lambda, l, order)?;
    Ok(dist
        .iter()
        .enumerate()
        .map(|(i, c)| c * binomial((n + i) as u64, l as u64))
        .sum())
}

/// A Young tableau given by its rows.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Tableau {
    pub rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect()).expect("rows of a tableau have weakly decreasing lengths")
    }

    /// Entry at `(i,j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> usize {
        self.rows[i - 1][j - 1]
    }

    fn well_shaped(&self) -> bool {
        self.rows.iter().all(|r| !r.is_empty()) && self.rows.windows(2).all(|w| w[0].len() >= w[1].len())
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        self.well_shaped()
            && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
            && self.rows.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(lo, hi)| hi < lo))
    }

    /// Semistandard with entries `1..=|λ|` each used once.
    pub fn is_standard(&self) -> bool {
        let mut e: Vec<usize> = self.rows.iter().flatten().copied().collect();
        e.sort_unstable();
        self.is_semistandard() && e.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    /// For a standard tableau: `k` such that `k+1` sits in the same row as `k` or higher.
    pub fn ascents(&self) -> Vec<usize> {
        let n: usize = self.rows.iter().map(|r| r.len()).sum();
        let mut row_of = vec![0usize; n + 2];
        for (i, r) in self.rows.iter().enumerate() {
            for &x in r {
                row_of[x] = i;
            }
        }
        (1..n).filter(|&k| row_of[k + 1] <= row_of[k]).collect()
    }
}

fn fill(
    lambda: &Partition,
    cells: &[(usize, usize)],
    k: usize,
    rows: &mut Vec<Vec<usize>>,
    choices: &dyn Fn(&Vec<Vec<usize>>, usize, usize) -> Vec<usize>,
    out: &mut Vec<Tableau>,
) {
    if k == cells.len() {
        out.push(Tableau { rows: rows.clone() });
        return;
    }
    let (i, j) = cells[k];
    for x in choices(rows, i, j) {
        rows[i - 1].push(x);
        fill(lambda, cells, k + 1, rows, choices, out);
        rows[i - 1].pop();
    }
}

/// Standard Young tableaux of shape `λ`, by placing `1, 2, …` on outer corners.
pub fn enumerate_syt(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.size();
    let mut out = Vec::new();
    fn rec(lambda: &Partition, n: usize, k: usize, rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if k > n {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for i in 0..lambda.len() {
            let len = rows[i].len();
            let fits_row = len < lambda.part(i + 1);
            let fits_col = i == 0 || rows[i - 1].len() > len;
            if fits_row && fits_col {
                rows[i].push(k);
                rec(lambda, n, k + 1, rows, out);
                rows[i].pop();
            }
        }
    }
    rec(lambda, n, 1, &mut vec![Vec::new(); lambda.len()], &mut out);
    out.sort();
    out
}

/// `|SSYT([n], λ)|` as `Σ_σ C(n + asc(σ), |λ|)` over standard tableaux `σ` of shape `λ`.
pub fn count_ssyt(n: usize, lambda: &Partition) -> BigUint {
    enumerate_syt(lambda)
        .iter()
        .map(|sigma| binomial((n + sigma.ascents().len()) as u64, lambda.size() as u64))
        .sum()
}

/// Semistandard tableaux of shape `λ` with entries in `[n]`.
pub fn enumerate_ssyt(n: usize, lambda: &Partition) -> Vec<Tableau> {
    let cells: Vec<(usize, usize)> = lambda.cells().collect();
    let mut out = Vec::new();
    let choices = move |rows: &Vec<Vec<usize>>, i: usize, j: usize| -> Vec<usize> {
        let lo_row = if j > 1 { rows[i - 1][j - 2] } else { 1 };
        let lo_col = if i > 1 { rows[i - 2][j - 1] + 1 } else { 1 };
        (lo_row.max(lo_col)..=n).collect()
    };
    fill(lambda, &cells, 0, &mut vec![Vec::new(); lambda.len()], &choices, &mut out);
    out
}

/// Semistandard with `τ_{i,λ_i} ≤ b − λ_i + i` on every row, entries in `[a]`.
pub fn is_sssyt(a: usize, b: usize, tau: &Tableau) -> bool {
    tau.is_semistandard()
        && tau.rows.iter().flatten().all(|&x| (1..=a).contains(&x))
        && tau.rows.iter().enumerate().all(|(i, r)| *r.last().unwrap() + r.len() <= b + i + 1)
}

/// The oscillating tableau that adds the square holding `k` at step `k`.
pub fn syt_ot(sigma: &Tableau) -> Result<OscillatingTableau> {
    if !sigma.is_standard() {
        return Err(Error::domain("not a standard Young tableau"));
    }
    let n: usize = sigma.rows.iter().map(|r| r.len()).sum();
    let mut pos = vec![(0, 0); n + 1];
    for (i, r) in sigma.rows.iter().enumerate() {
        for (j, &x) in r.iter().enumerate() {
            pos[x] = (i + 1, j + 1);
        }
    }
    let profile: Vec<i64> = (1..=n).map(|k| pos[k].1 as i64 - pos[k].0 as i64).collect();
    OscillatingTableau::from_profile(&profile)
}

/// Inverse of [`syt_ot`]; the tableau must have no deletions.
pub fn ot_syt(eps: &OscillatingTableau) -> Result<Tableau> {
    if !eps.deletions().is_empty() {
        return Err(Error::domain("oscillating tableau has deletions"));
    }
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); eps.shape().len()];
    for k in 1..=eps.len() {
        let row = (1..).find(|&i| eps.get(k).part(i) > eps.get(k - 1).part(i)).unwrap();
        rows[row - 1].push(k);
    }
    Ok(Tableau { rows })
}

/// A level sequence `t` paired with an oscillating tableau of the same length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GenOscTableau {
    pub t: Vec<usize>,
    pub eps: OscillatingTableau,
}

impl GenOscTableau {
    pub fn new(t: Vec<usize>, eps: OscillatingTableau) -> Result<Self> {
        if t.len() != eps.len() {
            return Err(Error::domain(format!("t has {} entries but the tableau has {} steps", t.len(), eps.len())));
        }
        Ok(GenOscTableau { t, eps })
    }

    pub fn empty() -> Self {
        GenOscTableau { t: Vec::new(), eps: OscillatingTableau::empty() }
    }

    pub fn len(&self) -> usize {
        self.t.len()
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_empty()
    }
}

/// Why `(t, ε)` fails to lie in `GOT([n], ≺, λ, l)`, or `None` if it does.
pub fn got_violation(n: usize, order: &TotalOrder, lambda: &Partition, l: usize, g: &GenOscTableau) -> Option<String> {
    if g.t.len() != l || g.eps.len() != l {
        return Some(format!("length is {} rather than {l}", g.eps.len()));
    }
    if g.eps.shape() != lambda {
        return Some(format!("shape is {} rather than {lambda}", g.eps.shape()));
    }
    if let Some(k) = g.t.iter().position(|&x| x == 0 || x > n) {
        return Some(format!("t_{} = {} lies outside [{n}]", k + 1, g.t[k]));
    }
    let p = g.eps.profile();
    for k in 1..l {
        if g.t[k - 1] > g.t[k] {
            return Some(format!("t decreases at step {k}"));
        }
        if g.t[k - 1] == g.t[k] {
            match order.precedes(p[k - 1], p[k]) {
                Ok(true) => {}
                Ok(false) => return Some(format!("t_{k} = t_{} but step {k} is not an ascent", k + 1)),
                Err(e) => return Some(e.to_string()),
            }
        }
    }
    None
}

/// Membership in `GOT([n], ≺, λ, l)`.
pub fn validate_got(n: usize, order: &TotalOrder, lambda: &Partition, l: usize, g: &GenOscTableau) -> bool {
    got_violation(n, order, lambda, l, g).is_none()
}

/// `GOT([n], ≺, λ, l)` by filtering every weakly increasing `t` over every tableau.
pub fn enumerate_got(n: usize, order: &TotalOrder, lambda: &Partition, l: usize) -> Vec<GenOscTableau> {
    let mut out = Vec::new();
    let ts = weakly_increasing(n, l);
    for eps in enumerate_ot(lambda, l) {
        for t in &ts {
            let g = GenOscTableau { t: t.clone(), eps: eps.clone() };
            if validate_got(n, order, lambda, l, &g) {
                out.push(g);
            }
        }
    }
    out
}

fn weakly_increasing(n: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    fn rec(n: usize, l: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(1);
        for x in lo..=n {
            cur.push(x);
            rec(n, l, cur, out);
            cur.pop();
        }
    }
    rec(n, l, &mut Vec::new(), &mut out);
    out
}

/// `τ` with the square added at step `k` holding `t_k`. Needs zero deletions.
pub fn got_ssyt(g: &GenOscTableau) -> Result<Tableau> {
    let sigma = ot_syt(&g.eps)?;
    let rows = sigma.rows.iter().map(|r| r.iter().map(|&k| g.t[k - 1]).collect()).collect();
    Ok(Tableau { rows })
}

/// Inverse of [`got_ssyt`]: cells sorted by entry, then by content.
pub fn ssyt_got(tau: &Tableau) -> Result<GenOscTableau> {
    if !tau.is_semistandard() {
        return Err(Error::domain("not a semistandard Young tableau"));
    }
    let mut cells: Vec<(usize, i64)> = Vec::new();
    for (i, r) in tau.rows.iter().enumerate() {
        for (j, &x) in r.iter().enumerate() {
            cells.push((x, j as i64 - i as i64));
        }
    }
    cells.sort_unstable();
    let eps = OscillatingTableau::from_profile(&cells.iter().map(|c| c.1).collect::<Vec<_>>())?;
    Ok(GenOscTableau { t: cells.iter().map(|c| c.0).collect(), eps })
}
