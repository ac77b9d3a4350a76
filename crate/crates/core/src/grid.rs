//! Three encodings of one configuration of osculating paths on the `a × b` grid:
//! path tuples, edge-matrix pairs `(H, V)`, and alternating sign matrices.
//!
//! Row 1 is the top row. Paths take right steps `(0,+1)` and up steps `(-1,0)`;
//! path `k` enters at the bottom of column `β_k` and leaves at the right of row `α_k`.
//! `H[i][j] = 1` when a path uses the edge from `(i,j)` to `(i,j+1)`, and
//! `V[i][j] = 1` when a path uses the edge from `(i+1,j)` to `(i,j)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::BoundaryPair;

/// A lattice point `(row, column)`, 1-based.
pub type Point = (usize, usize);

/// Content `j − i` of a point.
pub fn content(p: Point) -> i64 {
    p.1 as i64 - p.0 as i64
}

/// A tuple of pairwise osculating paths. The implied entry and exit edges
/// outside the rectangle are not stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathTuple {
    pub a: usize,
    pub b: usize,
    pub paths: Vec<Vec<Point>>,
}

impl PathTuple {
    /// Validates by converting to edges and back: one code path for every rule.
    pub fn new(a: usize, b: usize, paths: Vec<Vec<Point>>) -> Result<Self> {
        let p = PathTuple { a, b, paths };
        let e = p.raw_edges()?;
        let back = edges_to_paths(&e)?;
        if back.paths != p.paths {
            return Err(Error::domain("paths cross or are not listed left to right"));
        }
        Ok(p)
    }

    /// The empty tuple on `a × b`.
    pub fn empty(a: usize, b: usize) -> Self {
        PathTuple { a, b, paths: Vec::new() }
    }

    /// Path `i` goes up column `i` from the bottom to row `i`, then right to the edge.
    pub fn staircase(a: usize, b: usize) -> Self {
        let paths = (1..=a.min(b))
            .map(|i| {
                let mut p: Vec<Point> = (i..=a).rev().map(|r| (r, i)).collect();
                p.extend((i + 1..=b).map(|c| (i, c)));
                p
            })
            .collect();
        PathTuple { a, b, paths }
    }

    fn raw_edges(&self) -> Result<EdgeMatrices> {
        let (a, b) = (self.a, self.b);
        if a == 0 || b == 0 {
            return Err(Error::domain("grid dimensions must be positive"));
        }
        let mut e = EdgeMatrices::zero(a, b);
        for path in &self.paths {
            let (&first, &last) = match (path.first(), path.last()) {
                (Some(f), Some(l)) => (f, l),
                _ => return Err(Error::domain("a path has no points")),
            };
            for &(i, j) in path {
                if i == 0 || i > a || j == 0 || j > b {
                    return Err(Error::domain(format!("point ({i},{j}) is outside the grid")));
                }
            }
            if first.0 != a {
                return Err(Error::domain(format!("path starting at {first:?} does not start on row {a}")));
            }
            if last.1 != b {
                return Err(Error::domain(format!("path ending at {last:?} does not end on column {b}")));
            }
            let mark = |m: &mut Vec<Vec<u8>>, r: usize, c: usize, at: Point| -> Result<()> {
                if m[r][c] == 1 {
                    return Err(Error::Vertex { i: at.0, j: at.1, reason: "two paths share an edge".into() });
                }
                m[r][c] = 1;
                Ok(())
            };
            mark(&mut e.v, a, first.1 - 1, first)?;
            for w in path.windows(2) {
                let ((i, j), (i2, j2)) = (w[0], w[1]);
                if i2 == i && j2 == j + 1 {
                    mark(&mut e.h, i - 1, j, w[0])?;
                } else if j2 == j && i2 + 1 == i {
                    mark(&mut e.v, i2, j - 1, w[0])?;
                } else {
                    return Err(Error::domain(format!("illegal step {:?} -> {:?}", w[0], w[1])));
                }
            }
            mark(&mut e.h, last.0 - 1, b, last)?;
        }
        e.check()?;
        Ok(e)
    }

    pub fn boundary(&self) -> BoundaryPair {
        let mut alpha: Vec<usize> = self.paths.iter().map(|p| p.last().unwrap().0).collect();
        let mut beta: Vec<usize> = self.paths.iter().map(|p| p.first().unwrap().1).collect();
        alpha.sort_unstable();
        beta.sort_unstable();
        BoundaryPair { a: self.a, b: self.b, alpha, beta }
    }
}

/// The edge-matrix pair `(H, V)`. `h` is `a × (b+1)` with column 0 first;
/// `v` is `(a+1) × b` with row 0 first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeMatrices {
    pub a: usize,
    pub b: usize,
    h: Vec<Vec<u8>>,
    v: Vec<Vec<u8>>,
}

/// JSON form with explicit index origins.
#[derive(Serialize, Deserialize)]
struct EdgeJson {
    a: usize,
    b: usize,
    h: Vec<Vec<u8>>,
    v: Vec<Vec<u8>>,
    h_origin: [usize; 2],
    v_origin: [usize; 2],
}

impl Serialize for EdgeMatrices {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        EdgeJson { a: self.a, b: self.b, h: self.h.clone(), v: self.v.clone(), h_origin: [1, 0], v_origin: [0, 1] }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for EdgeMatrices {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = EdgeJson::deserialize(d)?;
        if j.h_origin != [1, 0] || j.v_origin != [0, 1] {
            return Err(serde::de::Error::custom("edge matrices must use origins h:[1,0], v:[0,1]"));
        }
        Ok(EdgeMatrices { a: j.a, b: j.b, h: j.h, v: j.v })
    }
}

impl EdgeMatrices {
    pub fn zero(a: usize, b: usize) -> Self {
        EdgeMatrices { a, b, h: vec![vec![0; b + 1]; a], v: vec![vec![0; b]; a + 1] }
    }

    /// Builds from full matrices: `h` rows `1..=a`, columns `0..=b`; `v` rows `0..=a`, columns `1..=b`.
    pub fn new(a: usize, b: usize, h: Vec<Vec<u8>>, v: Vec<Vec<u8>>) -> Result<Self> {
        let e = EdgeMatrices { a, b, h, v };
        e.check()?;
        Ok(e)
    }

    /// `H_ij` for `i ∈ [1,a]`, `j ∈ [0,b]`.
    pub fn h(&self, i: usize, j: usize) -> u8 {
        self.h[i - 1][j]
    }

    /// `V_ij` for `i ∈ [0,a]`, `j ∈ [1,b]`.
    pub fn v(&self, i: usize, j: usize) -> u8 {
        self.v[i][j - 1]
    }

    pub(crate) fn set_h(&mut self, i: usize, j: usize, x: u8) {
        self.h[i - 1][j] = x;
    }

    pub(crate) fn set_v(&mut self, i: usize, j: usize, x: u8) {
        self.v[i][j - 1] = x;
    }

    pub fn h_rows(&self) -> &[Vec<u8>] {
        &self.h
    }

    pub fn v_rows(&self) -> &[Vec<u8>] {
        &self.v
    }

    /// Shape, binary entries, zero first column of `H` and first row of `V`, and
    /// conservation `H_{i,j−1} + V_ij = V_{i−1,j} + H_ij` at every vertex.
    pub fn check(&self) -> Result<()> {
        let (a, b) = (self.a, self.b);
        if a == 0 || b == 0 {
            return Err(Error::domain("grid dimensions must be positive"));
        }
        if self.h.len() != a || self.h.iter().any(|r| r.len() != b + 1) {
            return Err(Error::domain(format!("H must be {a}x{}", b + 1)));
        }
        if self.v.len() != a + 1 || self.v.iter().any(|r| r.len() != b) {
            return Err(Error::domain(format!("V must be {}x{b}", a + 1)));
        }
        if self.h.iter().chain(&self.v).flatten().any(|&x| x > 1) {
            return Err(Error::domain("edge matrices must be binary"));
        }
        if let Some(i) = (1..=a).find(|&i| self.h(i, 0) != 0) {
            return Err(Error::Vertex { i, j: 1, reason: "H has a nonzero entry in column 0".into() });
        }
        if let Some(j) = (1..=b).find(|&j| self.v(0, j) != 0) {
            return Err(Error::Vertex { i: 1, j, reason: "V has a nonzero entry in row 0".into() });
        }
        for i in 1..=a {
            for j in 1..=b {
                if self.h(i, j - 1) + self.v(i, j) != self.v(i - 1, j) + self.h(i, j) {
                    return Err(Error::Vertex { i, j, reason: "arrow conservation fails".into() });
                }
            }
        }
        Ok(())
    }

    /// `α` from the last column of `H`, `β` from the last row of `V`.
    pub fn boundary(&self) -> BoundaryPair {
        BoundaryPair {
            a: self.a,
            b: self.b,
            alpha: (1..=self.a).filter(|&i| self.h(i, self.b) == 1).collect(),
            beta: (1..=self.b).filter(|&j| self.v(self.a, j) == 1).collect(),
        }
    }

    /// The four incident edge values `(left, below, above, right)` at `(i,j)`.
    pub fn incident(&self, i: usize, j: usize) -> [u8; 4] {
        [self.h(i, j - 1), self.v(i, j), self.v(i - 1, j), self.h(i, j)]
    }

    /// Vacancies and osculations, row-major.
    pub fn zset(&self) -> Vec<Point> {
        let mut out = Vec::new();
        for i in 1..=self.a {
            for j in 1..=self.b {
                if self.h(i, j - 1) == self.v(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// The six vertex configurations, labelled by the incident edges
/// `(left, below, above, right)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum VertexType {
    /// `(1,1,1,1)`: two paths touch.
    Osculation = 1,
    /// `(0,0,0,0)`: no path.
    Vacancy = 2,
    /// `(1,0,0,1)`.
    Horizontal = 3,
    /// `(0,1,1,0)`.
    Vertical = 4,
    /// `(1,0,1,0)`: a turn up, an ASM entry −1.
    TurnUp = 5,
    /// `(0,1,0,1)`: a turn right, an ASM entry +1.
    TurnRight = 6,
}

impl VertexType {
    pub fn label(self) -> usize {
        self as usize
    }

    pub fn from_incident(x: [u8; 4]) -> Option<Self> {
        use VertexType::*;
        Some(match x {
            [1, 1, 1, 1] => Osculation,
            [0, 0, 0, 0] => Vacancy,
            [1, 0, 0, 1] => Horizontal,
            [0, 1, 1, 0] => Vertical,
            [1, 0, 1, 0] => TurnUp,
            [0, 1, 0, 1] => TurnRight,
            _ => return None,
        })
    }
}

pub fn vertex_type(e: &EdgeMatrices, i: usize, j: usize) -> Result<VertexType> {
    if i == 0 || i > e.a || j == 0 || j > e.b {
        return Err(Error::domain(format!("vertex ({i},{j}) is outside {}x{}", e.a, e.b)));
    }
    VertexType::from_incident(e.incident(i, j))
        .ok_or_else(|| Error::Vertex { i, j, reason: "incident edges match none of the six types".into() })
}

pub fn paths_to_edges(p: &PathTuple) -> Result<EdgeMatrices> {
    p.raw_edges()
}

/// Follows the arrows. At an osculation the path arriving from the left turns up
/// and the one arriving from below turns right, so paths touch without crossing.
pub fn edges_to_paths(e: &EdgeMatrices) -> Result<PathTuple> {
    e.check()?;
    let (a, b) = (e.a, e.b);
    let mut paths = Vec::new();
    for start in (1..=b).filter(|&j| e.v(a, j) == 1) {
        let mut path = vec![(a, start)];
        let (mut i, mut j) = (a, start);
        let mut from_left = false;
        loop {
            let osc = e.h(i, j - 1) == 1 && e.v(i, j) == 1;
            let go_up = if osc { from_left } else { e.v(i - 1, j) == 1 };
            if go_up {
                i -= 1;
                from_left = false;
            } else {
                if j == b {
                    break;
                }
                j += 1;
                from_left = true;
            }
            path.push((i, j));
        }
        paths.push(path);
    }
    Ok(PathTuple { a, b, paths })
}

/// An `a × b` matrix with entries in `{−1, 0, 1}` whose nonzero entries alternate
/// along every row and column, starting with 1 from the left and from the top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AsmMatrix {
    pub a: usize,
    pub b: usize,
    pub entries: Vec<Vec<i8>>,
}

impl AsmMatrix {
    /// Validates with running partial sums, which must stay in `{0, 1}`.
    pub fn new(a: usize, b: usize, entries: Vec<Vec<i8>>) -> Result<Self> {
        if a == 0 || b == 0 {
            return Err(Error::domain("grid dimensions must be positive"));
        }
        if entries.len() != a || entries.iter().any(|r| r.len() != b) {
            return Err(Error::domain(format!("ASM must be {a}x{b}")));
        }
        for i in 0..a {
            let mut s = 0i32;
            for j in 0..b {
                s += entries[i][j] as i32;
                if !(0..=1).contains(&s) || entries[i][j].abs() > 1 {
                    return Err(Error::Vertex { i: i + 1, j: j + 1, reason: "row signs do not alternate from +1".into() });
                }
            }
        }
        for j in 0..b {
            let mut s = 0i32;
            for i in 0..a {
                s += entries[i][j] as i32;
                if !(0..=1).contains(&s) {
                    return Err(Error::Vertex { i: i + 1, j: j + 1, reason: "column signs do not alternate from +1".into() });
                }
            }
        }
        Ok(AsmMatrix { a, b, entries })
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i - 1][j - 1] as i64
    }

    /// Number of −1 entries.
    pub fn minus_ones(&self) -> usize {
        self.entries.iter().flatten().filter(|&&x| x == -1).count()
    }

    pub fn boundary(&self) -> BoundaryPair {
        BoundaryPair {
            a: self.a,
            b: self.b,
            alpha: (1..=self.a).filter(|&i| self.entries[i - 1].iter().map(|&x| x as i32).sum::<i32>() == 1).collect(),
            beta: (1..=self.b).filter(|&j| (1..=self.a).map(|i| self.get(i, j)).sum::<i64>() == 1).collect(),
        }
    }
}

/// `A_ij = H_ij − H_{i,j−1}`.
pub fn edges_to_asm(e: &EdgeMatrices) -> AsmMatrix {
    let entries = (1..=e.a)
        .map(|i| (1..=e.b).map(|j| e.h(i, j) as i8 - e.h(i, j - 1) as i8).collect())
        .collect();
    AsmMatrix { a: e.a, b: e.b, entries }
}

/// Partial row sums give `H`, partial column sums give `V`.
pub fn asm_to_edges(m: &AsmMatrix) -> Result<EdgeMatrices> {
    let checked = AsmMatrix::new(m.a, m.b, m.entries.clone())?;
    let mut e = EdgeMatrices::zero(checked.a, checked.b);
    for i in 1..=m.a {
        let mut s = 0;
        for j in 1..=m.b {
            s += m.get(i, j);
            e.set_h(i, j, s as u8);
        }
    }
    for j in 1..=m.b {
        let mut s = 0;
        for i in 1..=m.a {
            s += m.get(i, j);
            e.set_v(i, j, s as u8);
        }
    }
    e.check()?;
    Ok(e)
}

/// Inversion number `Σ A_ij A_i'j'` over `i' > i`, `j' < j`.
pub fn inversion_number(m: &AsmMatrix) -> i64 {
    let mut total = 0;
    for i in 1..=m.a {
        for j in 1..=m.b {
            let x = m.get(i, j);
            if x == 0 {
                continue;
            }
            for i2 in i + 1..=m.a {
                for j2 in 1..j {
                    total += x * m.get(i2, j2);
                }
            }
        }
    }
    total
}

/// Osculation count from the ASM: `Σ A_ij A_i'j'` over `i' ≥ i`, `j' < j`.
pub fn asm_osculations(m: &AsmMatrix) -> i64 {
    let mut total = 0;
    for i in 1..=m.a {
        for j in 1..=m.b {
            let x = m.get(i, j);
            if x == 0 {
                continue;
            }
            for i2 in i..=m.a {
                for j2 in 1..j {
                    total += x * m.get(i2, j2);
                }
            }
        }
    }
    total
}

/// The same count with the other half-open region, `i' > i`, `j' ≤ j`.
pub fn asm_osculations_transposed(m: &AsmMatrix) -> i64 {
    let mut total = 0;
    for i in 1..=m.a {
        for j in 1..=m.b {
            let x = m.get(i, j);
            if x == 0 {
                continue;
            }
            for i2 in i + 1..=m.a {
                for j2 in 1..=j {
                    total += x * m.get(i2, j2);
                }
            }
        }
    }
    total
}

/// Osculation count as `Σ H_{i,j−1} V_ij`.
pub fn edge_osculations(e: &EdgeMatrices) -> usize {
    let mut n = 0;
    for i in 1..=e.a {
        for j in 1..=e.b {
            n += (e.h(i, j - 1) * e.v(i, j)) as usize;
        }
    }
    n
}

/// Vacancies, osculations and boundary of a path tuple.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Statistics {
    pub vacancies: Vec<Point>,
    pub osculations: Vec<Point>,
    pub chi: usize,
    pub boundary: BoundaryPair,
}

/// Computes the osculation count three ways and asserts they agree.
pub fn statistics(p: &PathTuple) -> Result<Statistics> {
    let e = paths_to_edges(p)?;
    let mut vacancies = Vec::new();
    let mut osculations = Vec::new();
    for i in 1..=e.a {
        for j in 1..=e.b {
            match vertex_type(&e, i, j)? {
                VertexType::Vacancy => vacancies.push((i, j)),
                VertexType::Osculation => osculations.push((i, j)),
                _ => {}
            }
        }
    }
    let chi = osculations.len();
    let asm = edges_to_asm(&e);
    assert_eq!(chi, edge_osculations(&e));
    assert_eq!(chi as i64, asm_osculations(&asm));
    assert_eq!(chi as i64, asm_osculations_transposed(&asm));
    Ok(Statistics { vacancies, osculations, chi, boundary: e.boundary() })
}

/// Per-diagonal counts of the six vertex types.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalCensus {
    pub a: usize,
    pub b: usize,
    /// `counts[d][t-1]` is the number of type-`t` vertices of content `d`.
    pub counts: BTreeMap<i64, [usize; 6]>,
}

impl DiagonalCensus {
    fn get(&self, d: i64) -> [usize; 6] {
        self.counts.get(&d).copied().unwrap_or([0; 6])
    }

    pub fn vacancies(&self, d: i64) -> usize {
        self.get(d)[1]
    }

    pub fn osculations(&self, d: i64) -> usize {
        self.get(d)[0]
    }

    /// Points of content `d` visited by exactly one path (types 3–6).
    pub fn singles(&self, d: i64) -> usize {
        self.get(d)[2..].iter().sum()
    }

    /// Path visits on diagonal `d`, counting osculations twice.
    pub fn crossings(&self, d: i64) -> usize {
        self.singles(d) + 2 * self.osculations(d)
    }
}

pub fn diagonal_census(p: &PathTuple) -> Result<DiagonalCensus> {
    let e = paths_to_edges(p)?;
    census_of_edges(&e)
}

pub(crate) fn census_of_edges(e: &EdgeMatrices) -> Result<DiagonalCensus> {
    let mut counts = BTreeMap::new();
    for d in 1 - e.a as i64..=e.b as i64 - 1 {
        counts.insert(d, [0usize; 6]);
    }
    for i in 1..=e.a {
        for j in 1..=e.b {
            let t = vertex_type(e, i, j)?;
            counts.get_mut(&content((i, j))).unwrap()[t.label() - 1] += 1;
        }
    }
    Ok(DiagonalCensus { a: e.a, b: e.b, counts })
}

/// Reflection in the main diagonal: `(i,j) ↦ (j,i)` on `b × a`, paths reversed.
pub fn reflect(p: &PathTuple) -> PathTuple {
    let mut paths: Vec<Vec<Point>> = p
        .paths
        .iter()
        .map(|path| path.iter().rev().map(|&(i, j)| (j, i)).collect())
        .collect();
    paths.sort_by_key(|path| path[0].1);
    PathTuple { a: p.b, b: p.a, paths }
}

/// Shifts every path by `(ā, b̄)` into an `(ā+a) × (b̄+b)` grid; the new top rows
/// and left columns are all vacancies.
pub fn translate(p: &PathTuple, abar: usize, bbar: usize) -> PathTuple {
    let paths = p
        .paths
        .iter()
        .map(|path| path.iter().map(|&(i, j)| (i + abar, j + bbar)).collect())
        .collect();
    PathTuple { a: p.a + abar, b: p.b + bbar, paths }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_tuple_has_zero_edges() {
        let e = paths_to_edges(&PathTuple::empty(2, 2)).unwrap();
        assert_eq!(e, EdgeMatrices::zero(2, 2));
        assert_eq!(vertex_type(&e, 1, 2).unwrap(), VertexType::Vacancy);
        assert!(vertex_type(&e, 3, 1).is_err());
    }

    #[test]
    fn staircase_has_no_vacancies_or_osculations() {
        for (a, b) in [(3, 3), (2, 4), (4, 2)] {
            let p = PathTuple::staircase(a, b);
            let e = paths_to_edges(&p).unwrap();
            assert!(e.zset().is_empty());
            assert_eq!(edges_to_paths(&e).unwrap(), p);
        }
    }

    #[test]
    fn identity_asm_is_the_staircase() {
        let id = AsmMatrix::new(3, 3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]]).unwrap();
        let e = asm_to_edges(&id).unwrap();
        assert_eq!(edges_to_paths(&e).unwrap(), PathTuple::staircase(3, 3));
        assert_eq!(inversion_number(&id), 0);
    }

    #[test]
    fn crossing_paths_are_rejected() {
        // two paths sharing the edge (2,1) -> (1,1)
        let p = PathTuple::new(2, 2, vec![vec![(2, 1), (1, 1), (1, 2)], vec![(2, 1), (2, 2)]]);
        assert!(p.is_err());
    }
}
