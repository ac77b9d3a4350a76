//! Partitions, Young diagrams, Frobenius coordinates, diagonal ranks, and the
//! correspondence between boundary pairs of a rectangle and partitions fitting in it.
//!
//! Rows and columns of Young diagrams are 1-based; the content of the cell
//! `(i, j)` is `j - i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An integer partition stored as its nonzero parts in weakly decreasing order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "()");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl Partition {
    /// Builds a partition from weakly decreasing parts; trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::domain(format!("parts {parts:?} are not weakly decreasing")));
        }
        if parts.contains(&0) {
            return Err(Error::domain("zero part before a nonzero part"));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` for 1-based `i`, zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    /// Number of nonzero parts, `ℓ(λ)`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `|λ|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_1`, or zero for the empty partition.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn contains_cell(&self, i: usize, j: usize) -> bool {
        i >= 1 && j >= 1 && j <= self.part(i)
    }

    /// Cells of the Young diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (1..=p).map(move |c| (r + 1, c)))
    }

    /// Whether the diagram fits in the `a × b` rectangle.
    pub fn fits(&self, a: usize, b: usize) -> bool {
        self.len() <= a && self.first() <= b
    }

    /// Diagram reflected in the main diagonal.
    pub fn conjugate(&self) -> Partition {
        let parts = (1..=self.first())
            .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition(parts)
    }

    /// Number of diagonal cells, the Frobenius rank.
    pub fn rank(&self) -> usize {
        self.0.iter().enumerate().take_while(|(i, &p)| p > *i).count()
    }

    pub fn frobenius(&self) -> FrobeniusForm {
        let r = self.rank();
        let t = self.conjugate();
        FrobeniusForm {
            gammas: (1..=r).map(|i| self.part(i) - i).collect(),
            deltas: (1..=r).map(|i| t.part(i) - i).collect(),
        }
    }

    pub fn from_frobenius(f: &FrobeniusForm) -> Result<Partition> {
        f.check()?;
        let r = f.gammas.len();
        let mut parts: Vec<usize> = (0..r).map(|i| f.gammas[i] + i + 1).collect();
        // rows below the Durfee square: row i holds the columns k <= r whose leg reaches it
        let depth = f.deltas.first().map_or(0, |d| d + 1);
        for i in r + 1..=depth {
            parts.push((0..r).filter(|&k| f.deltas[k] + k + 1 >= i).count());
        }
        Partition::new(parts)
    }

    /// `ρ_d(λ)`: number of cells of content `d`.
    pub fn rho(&self, d: i64) -> usize {
        self.0
            .iter()
            .enumerate()
            .filter(|(i, &p)| {
                let j = *i as i64 + 1 + d;
                j >= 1 && j <= p as i64
            })
            .count()
    }

    /// `ρ_d(λ)` evaluated from Frobenius coordinates instead of the diagram.
    pub fn rho_frobenius(&self, d: i64) -> usize {
        let f = self.frobenius();
        if d <= 0 {
            f.deltas.iter().filter(|&&x| x as i64 >= -d).count()
        } else {
            f.gammas.iter().filter(|&&x| x as i64 >= d).count()
        }
    }

    /// Contents of the removable cells.
    pub fn removable_contents(&self) -> Vec<i64> {
        (1..=self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| self.part(i) as i64 - i as i64)
            .collect()
    }

    /// Contents of the addable cells.
    pub fn addable_contents(&self) -> Vec<i64> {
        (1..=self.len() + 1)
            .filter(|&i| i == 1 || self.part(i - 1) > self.part(i))
            .map(|i| self.part(i) as i64 + 1 - i as i64)
            .collect()
    }

    /// Contents at which one cell can be added or removed, ascending.
    pub fn change_diagonals(&self) -> Vec<i64> {
        let mut ds = self.removable_contents();
        ds.extend(self.addable_contents());
        ds.sort_unstable();
        ds
    }

    /// Change diagonals found from the differences of the diagonal ranks alone.
    pub fn change_diagonals_by_rank(&self) -> Vec<i64> {
        let lo = -(self.len() as i64) - 1;
        let hi = self.first() as i64 + 1;
        (lo..=hi)
            .filter(|&d| self.rank_step(d).is_some())
            .collect()
    }

    /// Classifies diagonal `d` as a removal (`Some(false)`) or addition (`Some(true)`) site.
    fn rank_step(&self, d: i64) -> Option<bool> {
        let r = |x: i64| self.rho(x) as i64;
        let pair = (r(d) - r(d - 1), r(d + 1) - r(d));
        match d.cmp(&0) {
            std::cmp::Ordering::Less => match pair {
                (1, 0) => Some(false),
                (0, 1) => Some(true),
                _ => None,
            },
            std::cmp::Ordering::Equal => match pair {
                (1, -1) => Some(false),
                (0, 0) => Some(true),
                _ => None,
            },
            std::cmp::Ordering::Greater => match pair {
                (0, -1) => Some(false),
                (-1, 0) => Some(true),
                _ => None,
            },
        }
    }

    /// The unique partition differing from `self` by one cell of content `d`.
    pub fn neighbor(&self, d: i64) -> Result<Partition> {
        let mut parts = self.0.clone();
        for i in 1..=self.len() {
            if self.part(i) > self.part(i + 1) && self.part(i) as i64 - i as i64 == d {
                parts[i - 1] -= 1;
                return Partition::new(parts);
            }
        }
        for i in 1..=self.len() + 1 {
            if (i == 1 || self.part(i - 1) > self.part(i)) && self.part(i) as i64 + 1 - i as i64 == d {
                if i > self.len() {
                    parts.push(1);
                } else {
                    parts[i - 1] += 1;
                }
                return Partition::new(parts);
            }
        }
        Err(Error::domain(format!("{d} is not a change diagonal of {self}")))
    }

    /// `(b − λ_a, …, b − λ_1)`, the cells of `[a]×[b]` outside the diagram, rotated.
    pub fn complement(&self, a: usize, b: usize) -> Result<Partition> {
        if !self.fits(a, b) {
            return Err(Error::domain(format!("{self} does not fit in {a}x{b}")));
        }
        Partition::new((1..=a).rev().map(|i| b - self.part(i)).collect())
    }
}

/// `ρ_d` of the full `a × b` rectangle.
pub fn rect_rank(a: usize, b: usize, d: i64) -> usize {
    let (a, b) = (a as i64, b as i64);
    [a, b, a + d, b - d].into_iter().min().unwrap().max(0) as usize
}

/// Content of the single cell by which `l` and `m` differ, if they differ by one cell.
pub fn differs_by_square(l: &Partition, m: &Partition) -> Option<i64> {
    let (small, big) = match m.size().checked_sub(l.size()) {
        Some(1) => (l, m),
        Some(_) => return None,
        None if l.size() == m.size() + 1 => (m, l),
        None => return None,
    };
    let rows = big.len().max(small.len());
    let mut found = None;
    for i in 1..=rows {
        match big.part(i) as i64 - small.part(i) as i64 {
            0 => {}
            1 if found.is_none() => found = Some(big.part(i) as i64 - i as i64),
            _ => return None,
        }
    }
    found
}

/// Frobenius coordinates `(γ_1,…,γ_r | δ_1,…,δ_r)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrobeniusForm {
    pub gammas: Vec<usize>,
    pub deltas: Vec<usize>,
}

impl FrobeniusForm {
    pub fn new(gammas: Vec<usize>, deltas: Vec<usize>) -> Result<Self> {
        let f = FrobeniusForm { gammas, deltas };
        f.check()?;
        Ok(f)
    }

    pub fn rank(&self) -> usize {
        self.gammas.len()
    }

    fn check(&self) -> Result<()> {
        if self.gammas.len() != self.deltas.len() {
            return Err(Error::domain("Frobenius arms and legs differ in length"));
        }
        for v in [&self.gammas, &self.deltas] {
            if v.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::domain(format!("{v:?} is not strictly decreasing")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for FrobeniusForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({}|{})", join(&self.gammas), join(&self.deltas))
    }
}

/// End rows `alpha` on the right edge and start columns `beta` on the bottom edge of `[a]×[b]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawBoundaryPair")]
pub struct BoundaryPair {
    pub a: usize,
    pub b: usize,
    pub alpha: Vec<usize>,
    pub beta: Vec<usize>,
}

#[derive(Deserialize)]
struct RawBoundaryPair {
    a: usize,
    b: usize,
    alpha: Vec<usize>,
    beta: Vec<usize>,
}

impl TryFrom<RawBoundaryPair> for BoundaryPair {
    type Error = Error;
    fn try_from(r: RawBoundaryPair) -> Result<Self> {
        BoundaryPair::new(r.a, r.b, r.alpha, r.beta)
    }
}

fn check_subset(name: &str, set: &[usize], n: usize) -> Result<()> {
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::domain(format!("{name} = {set:?} is not strictly increasing")));
    }
    if set.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::domain(format!("{name} = {set:?} leaves [1,{n}]")));
    }
    Ok(())
}

impl BoundaryPair {
    pub fn new(a: usize, b: usize, alpha: Vec<usize>, beta: Vec<usize>) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::domain("grid dimensions must be positive"));
        }
        check_subset("alpha", &alpha, a)?;
        check_subset("beta", &beta, b)?;
        if alpha.len() != beta.len() {
            return Err(Error::domain("alpha and beta differ in size"));
        }
        Ok(BoundaryPair { a, b, alpha, beta })
    }

    pub fn r(&self) -> usize {
        self.alpha.len()
    }

    /// The boundary pair of `[a]×[b]` with `α = β = [min(a,b)]` (staircase, empty partition).
    pub fn staircase(a: usize, b: usize) -> Self {
        let m = a.min(b);
        BoundaryPair { a, b, alpha: (1..=m).collect(), beta: (1..=m).collect() }
    }

    pub fn alpha_full(&self) -> bool {
        self.alpha.len() == self.a
    }

    pub fn beta_full(&self) -> bool {
        self.beta.len() == self.b
    }

    /// Swaps the roles of rows and columns.
    pub fn reflect(&self) -> Self {
        BoundaryPair { a: self.b, b: self.a, alpha: self.beta.clone(), beta: self.alpha.clone() }
    }

    /// Number of paths meeting the diagonal of content `d`.
    pub fn crossings(&self, d: i64) -> usize {
        let (a, b) = (self.a as i64, self.b as i64);
        if d <= b - a {
            self.beta.iter().filter(|&&x| x as i64 <= a + d).count()
        } else {
            self.alpha.iter().filter(|&&x| x as i64 <= b - d).count()
        }
    }
}

/// The partition attached to a boundary pair: the rectangle minus the
/// partition with Frobenius coordinates `(b−β_1,…,b−β_r | a−α_1,…,a−α_r)`.
pub fn boundary_to_partition(bp: &BoundaryPair) -> Partition {
    let f = FrobeniusForm {
        gammas: bp.beta.iter().map(|&x| bp.b - x).collect(),
        deltas: bp.alpha.iter().map(|&x| bp.a - x).collect(),
    };
    let comp = Partition::from_frobenius(&f).expect("sorted subsets give valid coordinates");
    comp.complement(bp.a, bp.b).expect("coordinates fit the rectangle")
}

pub fn partition_to_boundary(a: usize, b: usize, l: &Partition) -> Result<BoundaryPair> {
    let comp = l.complement(a, b)?;
    let f = comp.frobenius();
    let mut alpha: Vec<usize> = f.deltas.iter().map(|&d| a - d).collect();
    let mut beta: Vec<usize> = f.gammas.iter().map(|&g| b - g).collect();
    alpha.sort_unstable();
    beta.sort_unstable();
    BoundaryPair::new(a, b, alpha, beta)
}

/// All partitions fitting in `[a]×[b]`, in lexicographic order of their parts.
pub fn partitions_in_box(a: usize, b: usize) -> Vec<Partition> {
    fn rec(rows: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition(cur.clone()));
        if rows == 0 {
            return;
        }
        for p in 1..=max {
            cur.push(p);
            rec(rows - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(a, b, &mut Vec::new(), &mut out);
    out.sort();
    out
}

/// All partitions of `n`.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    partitions_in_box(n, n).into_iter().filter(|p| p.size() == n).collect()
}

fn subsets_of_size(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            rec(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(1, n, k, &mut Vec::new(), &mut out);
    out
}

/// All boundary pairs of `[a]×[b]`.
pub fn boundary_pairs(a: usize, b: usize) -> Vec<BoundaryPair> {
    let mut out = Vec::new();
    for r in 0..=a.min(b) {
        for alpha in subsets_of_size(a, r) {
            for beta in subsets_of_size(b, r) {
                out.push(BoundaryPair { a, b, alpha: alpha.clone(), beta });
            }
        }
    }
    out
}
