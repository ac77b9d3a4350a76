//! Vacancy-osculation sets: the points of the grid visited by zero or two paths.
//! The set alone determines the whole configuration.
//!
//! Reconstruction sweeps the grid row by row. At a point outside the set exactly one
//! path passes, which forces the outgoing edges; at a point inside the set the two
//! incoming edges must agree, and the outgoing edges copy them.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{self, content, EdgeMatrices, PathTuple, Point};
use crate::partitions::{boundary_to_partition, BoundaryPair, Partition};

/// A vacancy-osculation set on the `a × b` grid, points sorted lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct VOSet {
    pub a: usize,
    pub b: usize,
    pub points: Vec<Point>,
}

#[derive(Deserialize)]
struct RawVOSet {
    a: usize,
    b: usize,
    points: Vec<Point>,
}

impl<'de> Deserialize<'de> for VOSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RawVOSet::deserialize(d)?;
        Ok(VOSet::unchecked(r.a, r.b, r.points))
    }
}

impl VOSet {
    /// Validates that the points form a vacancy-osculation set.
    pub fn new(a: usize, b: usize, points: Vec<Point>) -> Result<Self> {
        let s = VOSet::unchecked(a, b, points);
        reconstruct(a, b, &s.points)?;
        Ok(s)
    }

    /// Sorts and deduplicates without checking membership.
    pub fn unchecked(a: usize, b: usize, mut points: Vec<Point>) -> Self {
        points.sort_unstable();
        points.dedup();
        VOSet { a, b, points }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: Point) -> bool {
        self.points.binary_search(&p).is_ok()
    }

    /// The 0/1 matrix `M(S)`.
    pub fn matrix(&self) -> Vec<Vec<u8>> {
        let mut m = vec![vec![0u8; self.b]; self.a];
        for &(i, j) in &self.points {
            m[i - 1][j - 1] = 1;
        }
        m
    }

    /// `M(S)` as text, one row per line.
    pub fn render(&self) -> String {
        self.matrix()
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect::<Vec<_>>()
            .join("\n")
    }

    pub fn edges(&self) -> Result<EdgeMatrices> {
        reconstruct(self.a, self.b, &self.points)
    }

    pub fn boundary(&self) -> Result<BoundaryPair> {
        Ok(self.edges()?.boundary())
    }

    pub fn partition(&self) -> Result<Partition> {
        Ok(boundary_to_partition(&self.boundary()?))
    }

    /// Points of the set through which two paths pass.
    pub fn osculations(&self) -> Result<Vec<Point>> {
        let e = self.edges()?;
        Ok(self.points.iter().copied().filter(|&(i, j)| e.h(i, j - 1) == 1).collect())
    }

    pub fn vacancies(&self) -> Result<Vec<Point>> {
        let e = self.edges()?;
        Ok(self.points.iter().copied().filter(|&(i, j)| e.h(i, j - 1) == 0).collect())
    }

    pub fn chi(&self) -> Result<usize> {
        Ok(self.osculations()?.len())
    }

    pub fn to_paths(&self) -> Result<PathTuple> {
        grid::edges_to_paths(&self.edges()?)
    }

    /// The set with `p` added or removed, without validation.
    pub fn flipped(&self, p: Point) -> VOSet {
        let mut pts = self.points.clone();
        match pts.binary_search(&p) {
            Ok(k) => {
                pts.remove(k);
            }
            Err(k) => pts.insert(k, p),
        }
        VOSet { a: self.a, b: self.b, points: pts }
    }
}

/// `Z(P)`: vacancies and osculations of a path tuple.
pub fn zset(p: &PathTuple) -> Result<VOSet> {
    let e = grid::paths_to_edges(p)?;
    Ok(VOSet { a: p.a, b: p.b, points: e.zset() })
}

/// Row-major sweep. Fails at the first point of the set whose incoming edges disagree.
pub fn reconstruct(a: usize, b: usize, points: &[Point]) -> Result<EdgeMatrices> {
    if a == 0 || b == 0 {
        return Err(Error::domain("grid dimensions must be positive"));
    }
    let mut m = vec![vec![false; b + 1]; a + 1];
    for &(i, j) in points {
        if i == 0 || i > a || j == 0 || j > b {
            return Err(Error::domain(format!("point ({i},{j}) is outside {a}x{b}")));
        }
        m[i][j] = true;
    }
    let mut e = EdgeMatrices::zero(a, b);
    for i in 1..=a {
        for j in 1..=b {
            let left = e.h(i, j - 1);
            let above = e.v(i - 1, j);
            if m[i][j] {
                if left != above {
                    return Err(Error::Vertex { i, j, reason: "incoming edges disagree at a set point".into() });
                }
                e.set_v(i, j, left);
                e.set_h(i, j, above);
            } else {
                e.set_v(i, j, 1 - left);
                e.set_h(i, j, 1 - above);
            }
        }
    }
    Ok(e)
}

pub fn vos_to_edges(s: &VOSet) -> Result<EdgeMatrices> {
    reconstruct(s.a, s.b, &s.points)
}

/// `H` and `V` from the diagonal parity formulas. The result is only meaningful
/// (and equals the sweep) when `S` is a vacancy-osculation set.
pub fn closed_form_edges(s: &VOSet) -> EdgeMatrices {
    let m = s.matrix();
    let mm = |i: usize, j: usize| -> usize { m[i - 1][j - 1] as usize };
    let mut e = EdgeMatrices::zero(s.a, s.b);
    for i in 1..=s.a {
        for j in 0..=s.b {
            let mut x = (i <= j) as usize;
            for k in 0..i.min(j) {
                x += mm(i - k, j - k);
            }
            for k in 0..(i - 1).min(j) {
                x += mm(i - k - 1, j - k);
            }
            e.set_h(i, j, (x % 2) as u8);
        }
    }
    for i in 0..=s.a {
        for j in 1..=s.b {
            let mut x = (i >= j) as usize;
            for k in 0..i.min(j) {
                x += mm(i - k, j - k);
            }
            for k in 0..i.min(j - 1) {
                x += mm(i - k, j - k - 1);
            }
            e.set_v(i, j, (x % 2) as u8);
        }
    }
    e
}

/// Membership test with the failing vertex as diagnostic.
pub fn is_vos(a: usize, b: usize, points: &[Point]) -> std::result::Result<(), Error> {
    reconstruct(a, b, points).map(|_| ())
}

/// `B(a,b,i,j)`: points of the diagonal through `(i,j)` weakly below and to its right.
pub fn b_set(a: usize, b: usize, i: usize, j: usize) -> Vec<Point> {
    if i == 0 || j == 0 || i > a || j > b {
        return Vec::new();
    }
    (0..=(a - i).min(b - j)).map(|k| (i + k, j + k)).collect()
}

fn b_condition(s: &VOSet, (i, j): Point) -> bool {
    b_set(s.a, s.b, i, j + 1)
        .into_iter()
        .chain(b_set(s.a, s.b, i + 1, j))
        .all(|p| !s.contains(p))
}

/// How change points are characterised; all methods agree on valid sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChangePointMethod {
    /// Empty neighbouring diagonals, plus `H_ij = V_ij` at the point itself for additions.
    EdgeTest,
    /// Empty neighbouring diagonals and `H_kl = V_kl` along the whole diagonal below.
    Diagonal,
    /// Empty neighbouring diagonals and, for additions, a change diagonal of the partition.
    PartitionDiagonal,
    /// Toggle every point and rerun the reconstruction.
    Toggle,
}

/// Points of `S` whose removal leaves a vacancy-osculation set.
pub fn deletion_points(s: &VOSet) -> Vec<Point> {
    s.points.iter().copied().filter(|&p| b_condition(s, p)).collect()
}

/// Points outside `S` whose insertion gives a vacancy-osculation set.
pub fn addition_points(s: &VOSet) -> Result<Vec<Point>> {
    let e = s.edges()?;
    Ok(grid_points(s.a, s.b)
        .filter(|&p| !s.contains(p) && b_condition(s, p) && e.h(p.0, p.1) == e.v(p.0, p.1))
        .collect())
}

fn grid_points(a: usize, b: usize) -> impl Iterator<Item = Point> {
    (1..=a).flat_map(move |i| (1..=b).map(move |j| (i, j)))
}

pub fn change_points(s: &VOSet) -> Result<Vec<Point>> {
    change_points_with(s, ChangePointMethod::Diagonal)
}

pub fn change_points_with(s: &VOSet, method: ChangePointMethod) -> Result<Vec<Point>> {
    let e = s.edges()?;
    let pts: Vec<Point> = match method {
        ChangePointMethod::EdgeTest => grid_points(s.a, s.b)
            .filter(|&p| b_condition(s, p) && (s.contains(p) || e.h(p.0, p.1) == e.v(p.0, p.1)))
            .collect(),
        ChangePointMethod::Diagonal => grid_points(s.a, s.b)
            .filter(|&p| b_condition(s, p) && b_set(s.a, s.b, p.0, p.1).iter().all(|&(k, l)| e.h(k, l) == e.v(k, l)))
            .collect(),
        ChangePointMethod::PartitionDiagonal => {
            let diags = boundary_to_partition(&e.boundary()).change_diagonals();
            grid_points(s.a, s.b)
                .filter(|&p| b_condition(s, p) && (s.contains(p) || diags.contains(&content(p))))
                .collect()
        }
        ChangePointMethod::Toggle => grid_points(s.a, s.b)
            .filter(|&p| reconstruct(s.a, s.b, &s.flipped(p).points).is_ok())
            .collect(),
    };
    Ok(pts)
}

/// The neighbouring set differing by `p`; `p` must be a change point.
pub fn toggle(s: &VOSet, p: Point) -> Result<VOSet> {
    let t = s.flipped(p);
    match reconstruct(t.a, t.b, &t.points) {
        Ok(_) => Ok(t),
        Err(_) => Err(Error::domain(format!("({},{}) is not a change point", p.0, p.1))),
    }
}

/// `k < l` implies `i_k < i_l` or `j_k < j_l`.
pub fn is_canonical(ordering: &[Point]) -> bool {
    for (k, p) in ordering.iter().enumerate() {
        for q in &ordering[k + 1..] {
            if !(p.0 < q.0 || p.1 < q.1) {
                return false;
            }
        }
    }
    true
}

/// Every prefix of the ordering is a vacancy-osculation set of `a × b`.
pub fn is_progression(a: usize, b: usize, ordering: &[Point]) -> bool {
    let mut sorted = ordering.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ordering.len() {
        return false;
    }
    (0..=ordering.len()).all(|k| reconstruct(a, b, &ordering[..k]).is_ok())
}

/// Partitions of the prefixes of a progression, starting from the empty prefix.
pub fn prefix_partitions(a: usize, b: usize, ordering: &[Point]) -> Result<Vec<Partition>> {
    (0..=ordering.len())
        .map(|k| Ok(boundary_to_partition(&reconstruct(a, b, &ordering[..k])?.boundary())))
        .collect()
}
