//! Exhaustive generation of configurations and the closed-form, ascent-sum and
//! determinant formulas that count them.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::arith::{bareiss_det, binomial, binomial_signed, exact_div, factorial};
use crate::error::{Error, Result};
use crate::grid::{edges_to_paths, EdgeMatrices, PathTuple};
use crate::orders::TotalOrder;
use crate::partitions::{boundary_to_partition, BoundaryPair};
use crate::tableaux::ascent_distribution;
use crate::vos::VOSet;

/// Restrictions applied while generating.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OpFilter {
    pub alpha: Option<Vec<usize>>,
    pub beta: Option<Vec<usize>>,
    /// Number of vacancies plus osculations.
    pub l: Option<usize>,
}

impl OpFilter {
    pub fn boundary(bp: &BoundaryPair) -> Self {
        OpFilter { alpha: Some(bp.alpha.clone()), beta: Some(bp.beta.clone()), l: None }
    }

    pub fn with_l(mut self, l: usize) -> Self {
        self.l = Some(l);
        self
    }
}

struct Gen<'f> {
    a: usize,
    b: usize,
    alpha: Option<Vec<bool>>,
    beta: Option<Vec<bool>>,
    filter: &'f OpFilter,
    e: EdgeMatrices,
    set: Vec<(usize, usize)>,
    out: Vec<(VOSet, EdgeMatrices)>,
}

impl Gen<'_> {
    fn run(&mut self, idx: usize) {
        let total = self.a * self.b;
        if let Some(l) = self.filter.l {
            if self.set.len() > l || self.set.len() + (total - idx) < l {
                return;
            }
        }
        if idx == total {
            self.out.push((VOSet { a: self.a, b: self.b, points: self.set.clone() }, self.e.clone()));
            return;
        }
        let (i, j) = (idx / self.b + 1, idx % self.b + 1);
        let left = self.e.h(i, j - 1);
        let above = self.e.v(i - 1, j);
        // in the set: outputs copy inputs; outside: exactly one path passes
        let options: &[bool] = if left == above { &[true, false] } else { &[false] };
        for &in_set in options {
            let (v, h) = if in_set { (left, above) } else { (1 - left, 1 - above) };
            if j == self.b {
                if let Some(al) = &self.alpha {
                    if al[i] != (h == 1) {
                        continue;
                    }
                }
            }
            if i == self.a {
                if let Some(be) = &self.beta {
                    if be[j] != (v == 1) {
                        continue;
                    }
                }
            }
            self.e.set_v(i, j, v);
            self.e.set_h(i, j, h);
            if in_set {
                self.set.push((i, j));
            }
            self.run(idx + 1);
            if in_set {
                self.set.pop();
            }
        }
        self.e.set_v(i, j, 0);
        self.e.set_h(i, j, 0);
    }
}

fn indicator(n: usize, s: &[usize]) -> Result<Vec<bool>> {
    let mut v = vec![false; n + 1];
    for &x in s {
        if x == 0 || x > n {
            return Err(Error::domain(format!("boundary index {x} outside [1,{n}]")));
        }
        v[x] = true;
    }
    Ok(v)
}

/// Every configuration on `a × b` passing the filter, as (set, edges) pairs sorted by set.
pub fn generate(a: usize, b: usize, filter: &OpFilter) -> Result<Vec<(VOSet, EdgeMatrices)>> {
    if a == 0 || b == 0 {
        return Err(Error::domain("grid dimensions must be positive"));
    }
    let alpha = filter.alpha.as_ref().map(|s| indicator(a, s)).transpose()?;
    let beta = filter.beta.as_ref().map(|s| indicator(b, s)).transpose()?;
    let mut g = Gen { a, b, alpha, beta, filter, e: EdgeMatrices::zero(a, b), set: Vec::new(), out: Vec::new() };
    g.run(0);
    let mut out = g.out;
    out.sort_by(|x, y| x.0.cmp(&y.0));
    Ok(out)
}

pub fn generate_edges(a: usize, b: usize, filter: &OpFilter) -> Result<Vec<EdgeMatrices>> {
    Ok(generate(a, b, filter)?.into_iter().map(|x| x.1).collect())
}

pub fn generate_vos(a: usize, b: usize, filter: &OpFilter) -> Result<Vec<VOSet>> {
    Ok(generate(a, b, filter)?.into_iter().map(|x| x.0).collect())
}

/// `OP(a, b[, α, β][, l])`, sorted by vacancy-osculation set.
pub fn generate_op(a: usize, b: usize, filter: &OpFilter) -> Result<Vec<PathTuple>> {
    generate(a, b, filter)?.iter().map(|x| edges_to_paths(&x.1)).collect()
}

/// `l ↦ |OP(a,b,α,β,l)|`.
pub fn count_l_histogram(bp: &BoundaryPair) -> Result<BTreeMap<usize, BigUint>> {
    let mut h = BTreeMap::new();
    for (s, _) in generate(bp.a, bp.b, &OpFilter::boundary(bp))? {
        *h.entry(s.len()).or_insert_with(BigUint::zero) += 1u32;
    }
    Ok(h)
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct CountKey {
    pub a: usize,
    pub b: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
    pub l: usize,
}

/// Exact counts keyed by boundary pair and `l`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CountTable {
    pub rows: BTreeMap<CountKey, BigUint>,
}

impl CountTable {
    /// Brute-force counts for every boundary pair and `l` on `a × b`, in one pass.
    pub fn brute(a: usize, b: usize) -> Result<Self> {
        let mut rows = BTreeMap::new();
        for (s, e) in generate(a, b, &OpFilter::default())? {
            let bp = e.boundary();
            let key = CountKey { a, b, alpha: bp.alpha, beta: bp.beta, l: s.len() };
            *rows.entry(key).or_insert_with(BigUint::zero) += 1u32;
        }
        Ok(CountTable { rows })
    }

    pub fn get(&self, bp: &BoundaryPair, l: usize) -> BigUint {
        let key = CountKey { a: bp.a, b: bp.b, alpha: bp.alpha.clone(), beta: bp.beta.clone(), l };
        self.rows.get(&key).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.rows.values().sum()
    }

    /// Columns `a,b,alpha,beta,l,count`; sets written as `1 2 3`, the empty set as `-`.
    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::Writer::from_writer(Vec::new());
        let set = |s: &[usize]| {
            if s.is_empty() {
                "-".to_string()
            } else {
                s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
            }
        };
        let io = |e: csv::Error| Error::domain(format!("csv: {e}"));
        w.write_record(["a", "b", "alpha", "beta", "l", "count"]).map_err(io)?;
        for (k, v) in &self.rows {
            w.write_record([k.a.to_string(), k.b.to_string(), set(&k.alpha), set(&k.beta), k.l.to_string(), v.to_string()])
                .map_err(io)?;
        }
        let bytes = w.into_inner().map_err(|e| Error::domain(format!("csv: {e}")))?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

fn ascent_sum(base: usize, order: &TotalOrder, bp: &BoundaryPair, l: usize) -> Result<BigUint> {
    let lambda = boundary_to_partition(bp);
    let dist = ascent_distribution(&lambda, l, order)?;
    Ok(dist.iter().enumerate().map(|(i, c)| c * binomial((base + i) as u64, l as u64)).sum())
}

/// `Σ_ε C(min(a,b) + asc(ε), l)` over `OT(λ, l)`; `≺` must be a `(b−a)`-order.
pub fn count_cor14(bp: &BoundaryPair, l: usize, order: &TotalOrder) -> Result<BigUint> {
    let q = bp.b as i64 - bp.a as i64;
    let w = l as i64;
    if !order.is_q_order(q, (-w).min(q), w.max(q)) {
        return Err(Error::domain(format!("order is not a {q}-order on [{}, {}]", (-w).min(q), w.max(q))));
    }
    ascent_sum(bp.a.min(bp.b), order, bp, l)
}

/// Ascent sum with base `a` and `<` when `α = [a]`, or base `b` and `>` when `β = [b]`.
pub fn count_cor17(bp: &BoundaryPair, l: usize) -> Result<BigUint> {
    if bp.alpha_full() {
        ascent_sum(bp.a, &TotalOrder::NaturalAsc, bp, l)
    } else if bp.beta_full() {
        ascent_sum(bp.b, &TotalOrder::NaturalDesc, bp, l)
    } else {
        Err(Error::domain("needs α = [a] or β = [b]"))
    }
}

/// The alternating-sign-matrix families with product formulas.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// `|OP(n,n,[n],[n])|`.
    Asm { n: usize },
    /// `|OP(n, n+1, [n], [n+1] ∖ {n+1−m})|`, `m ∈ [0,n]`.
    Refined { n: usize, m: usize },
    /// `|OP(n, n+m, [n], [n−1] ∪ {n+m})|`, `n ≥ 1`.
    Quasi { n: usize, m: usize },
    /// `|OP(n, 2n−1, [n], {1,3,…,2n−1})|`, `n ≥ 1`.
    HSym { n: usize },
    /// `|OP(n, n, odd, odd)|` with odd = `{1,3,…,2⌈n/2⌉−1}`.
    HvSym { n: usize },
}

impl Family {
    /// The boundary pair whose configurations the family counts.
    pub fn boundary(&self) -> Result<BoundaryPair> {
        let full = |k: usize| (1..=k).collect::<Vec<_>>();
        match *self {
            Family::Asm { n } => BoundaryPair::new(n, n, full(n), full(n)),
            Family::Refined { n, m } => {
                if m > n {
                    return Err(Error::domain("refined count needs m ≤ n"));
                }
                BoundaryPair::new(n, n + 1, full(n), (1..=n + 1).filter(|&j| j != n + 1 - m).collect())
            }
            Family::Quasi { n, m } => {
                let mut beta = full(n.saturating_sub(1));
                beta.push(n + m);
                BoundaryPair::new(n, n + m, full(n), beta)
            }
            Family::HSym { n } => BoundaryPair::new(n, 2 * n - 1, full(n), (1..2 * n).step_by(2).collect()),
            Family::HvSym { n } => {
                let odd: Vec<usize> = (1..=2 * n.div_ceil(2) - 1).step_by(2).collect();
                BoundaryPair::new(n, n, odd.clone(), odd)
            }
        }
    }
}

fn fact_prod(it: impl IntoIterator<Item = u64>) -> BigUint {
    it.into_iter().map(factorial).product()
}

fn refined(n: u64, m: u64) -> BigUint {
    let num = factorial(2 * n - m) * factorial(n + m) * fact_prod((1..=n).map(|i| 3 * i - 2));
    let den = factorial(n) * factorial(m) * factorial(n - m) * fact_prod((1..=n).map(|i| n + i));
    exact_div(&num, &den)
}

fn asm(n: u64) -> BigUint {
    exact_div(&fact_prod((0..n).map(|i| 3 * i + 1)), &fact_prod((0..n).map(|i| n + i)))
}

/// Evaluates a family's product formula exactly.
pub fn closed_form(f: Family) -> Result<BigUint> {
    Ok(match f {
        Family::Asm { n } => asm(n as u64),
        Family::Refined { n, m } => {
            if m > n {
                return Err(Error::domain("refined count needs m ≤ n"));
            }
            refined(n as u64, m as u64)
        }
        Family::Quasi { n, m } => {
            if n == 0 {
                return Err(Error::domain("quasi count needs n ≥ 1"));
            }
            let (n, m) = (n as u64, m as u64);
            // 1/((n−1)! m!) · Π_{i<n−1} (3i+1)!/(n+i)! · Σ_i (2n−2−i)!(n−1+i)!(m+i)! / (i!² (n−1−i)!)
            let mut num = BigUint::zero();
            let common: BigUint = (0..n).map(|i| factorial(i).pow(2) * factorial(n - 1 - i)).product();
            for i in 0..n {
                let term = factorial(2 * n - 2 - i) * factorial(n - 1 + i) * factorial(m + i);
                let den_i = factorial(i).pow(2) * factorial(n - 1 - i);
                num += term * exact_div(&common, &den_i);
            }
            let num = num * fact_prod((0..n - 1).map(|i| 3 * i + 1));
            let den = common * factorial(n - 1) * factorial(m) * fact_prod((0..n - 1).map(|i| n + i));
            exact_div(&num, &den)
        }
        Family::HSym { n } => {
            if n == 0 {
                return Err(Error::domain("horizontally symmetric count needs n ≥ 1"));
            }
            let n = n as u64;
            exact_div(&fact_prod((1..=n).map(|i| 6 * i - 2)), &fact_prod((1..=n).map(|i| 2 * n + 2 * i)))
        }
        Family::HvSym { n } => {
            let n = n as u64;
            let h = n / 2;
            let num = factorial(3 * n / 2 + 1) * fact_prod((1..=n).map(|i| 3 * i));
            let den = BigUint::from(3u32).pow(h as u32) * factorial(2 * n + 1) * factorial(h) * fact_prod((1..=n).map(|i| n + i));
            exact_div(&num, &den)
        }
    })
}

/// The quasi family as a weighted sum of refined counts one size down.
pub fn quasi_by_refined(n: usize, m: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::domain("quasi count needs n ≥ 1"));
    }
    Ok((0..n)
        .map(|i| refined(n as u64 - 1, i as u64) * binomial((m + i) as u64, i as u64))
        .sum())
}

fn to_biguint(x: BigInt) -> BigUint {
    assert!(!x.is_negative(), "count came out negative: {x}");
    x.to_biguint().unwrap()
}

/// Nonintersecting count as `det C(i+j, i)` over `i = a − α_k`, `j = b − β_l`.
pub fn np_count_lgv(bp: &BoundaryPair) -> BigUint {
    let m = bp
        .alpha
        .iter()
        .map(|&al| {
            bp.beta
                .iter()
                .map(|&be| {
                    let (i, j) = ((bp.a - al) as u64, (bp.b - be) as u64);
                    BigInt::from(binomial(i + j, i))
                })
                .collect()
        })
        .collect();
    to_biguint(bareiss_det(m))
}

/// Nonintersecting count as an `ℓ(λ) × ℓ(λ)` determinant over the rows of `λ`.
pub fn np_count_rows(bp: &BoundaryPair) -> BigUint {
    let lambda = boundary_to_partition(bp);
    let len = lambda.len();
    let m = (1..=len)
        .map(|i| {
            let li = lambda.part(i) as i64;
            let top_extra = ((bp.b as i64) - li + i as i64).min(bp.a as i64) - 1;
            (1..=len)
                .map(|j| {
                    let k = li - i as i64 + j as i64;
                    binomial_signed(k + top_extra, k)
                })
                .collect()
        })
        .collect();
    to_biguint(bareiss_det(m))
}

/// A polynomial with integer coefficients, lowest degree first, no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPolynomial::new(vec![c.into()])
    }

    /// `c · x^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k];
        v.push(c.into());
        IntPolynomial::new(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.coeffs.len().max(o.coeffs.len());
        IntPolynomial::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }

    pub fn neg(&self) -> Self {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return IntPolynomial::new(Vec::new());
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, x) in self.coeffs.iter().enumerate() {
            for (j, y) in o.coeffs.iter().enumerate() {
                v[i + j] += x * y;
            }
        }
        IntPolynomial::new(v)
    }
}

/// Cofactor expansion along the first row; fine for the small matrices used here.
pub fn poly_det(m: &[Vec<IntPolynomial>]) -> IntPolynomial {
    let n = m.len();
    if n == 0 {
        return IntPolynomial::constant(1);
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut total = IntPolynomial::new(Vec::new());
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<IntPolynomial>> =
            m[1..].iter().map(|row| row.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, x)| x.clone()).collect()).collect();
        let term = m[0][c].mul(&poly_det(&minor));
        total = if c % 2 == 0 { total.add(&term) } else { total.add(&term.neg()) };
    }
    total
}

/// `det(C(i+j, i) − x^i δ_{i,j+1})` over `i, j = 0..n−1`: the ASM count graded by
/// half the number of vacancies plus osculations, as far as checked.
pub fn asm_generating_det(n: usize) -> Result<IntPolynomial> {
    if n == 0 {
        return Err(Error::domain("n must be positive"));
    }
    let m: Vec<Vec<IntPolynomial>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let b = IntPolynomial::constant(BigInt::from(binomial((i + j) as u64, i as u64)));
                    if i == j + 1 {
                        b.add(&IntPolynomial::monomial(-1, i))
                    } else {
                        b
                    }
                })
                .collect()
        })
        .collect();
    Ok(poly_det(&m))
}
