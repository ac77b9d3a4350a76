//! Running-example fixtures and small independent oracles shared by the integration tests.
#![allow(dead_code)]

use oscu::grid::{edges_to_paths, EdgeMatrices, PathTuple, Point};
use oscu::partitions::Partition;
use oscu::tableaux::{GenOscTableau, OscillatingTableau};
use oscu::vos::VOSet;

pub const EX_H: [[u8; 7]; 4] = [
    [0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 1, 1, 1],
    [0, 1, 1, 1, 1, 0, 1],
    [0, 0, 0, 0, 0, 1, 0],
];

pub const EX_V: [[u8; 6]; 5] = [
    [0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 1, 0],
    [1, 0, 0, 1, 0, 1],
    [1, 0, 0, 1, 1, 0],
];

pub const EX_ASM: [[i8; 6]; 4] = [
    [0, 0, 0, 0, 1, 0],
    [0, 0, 0, 1, 0, 0],
    [1, 0, 0, 0, -1, 1],
    [0, 0, 0, 0, 1, -1],
];

pub const EX_S: [Point; 11] =
    [(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2), (2, 3), (2, 5), (3, 4), (4, 2), (4, 3)];

pub const EX_M: [&str; 4] = ["111100", "111010", "000100", "011000"];

pub const EX_PROG: [Point; 11] =
    [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (2, 3), (1, 4), (3, 4), (2, 5), (4, 2), (4, 3)];

pub const EX_T: [usize; 11] = [1, 1, 1, 2, 2, 2, 2, 3, 3, 4, 4];

pub const EX_PROFILE: [i64; 11] = [0, 1, 2, -1, 0, 1, 3, 1, 3, -2, -1];

pub fn ex_edges() -> EdgeMatrices {
    EdgeMatrices::new(4, 6, EX_H.iter().map(|r| r.to_vec()).collect(), EX_V.iter().map(|r| r.to_vec()).collect())
        .unwrap()
}

/// The running example's path tuple, read off its edge matrices.
pub fn ex_paths() -> PathTuple {
    edges_to_paths(&ex_edges()).unwrap()
}

pub fn ex_s() -> VOSet {
    VOSet::new(4, 6, EX_S.to_vec()).unwrap()
}

pub fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

pub fn ex_eps() -> Vec<Partition> {
    [&[][..], &[1], &[2], &[3], &[3, 1], &[3, 2], &[3, 3], &[4, 3], &[4, 2], &[3, 2], &[3, 2, 1], &[3, 2, 2]]
        .iter()
        .map(|p| part(p))
        .collect()
}

pub fn ex_got() -> GenOscTableau {
    GenOscTableau::new(EX_T.to_vec(), OscillatingTableau::new(ex_eps()).unwrap()).unwrap()
}

/// Sweeps a candidate set row by row, top to bottom, left to right, and returns
/// `(H, V)` if it is a vacancy-osculation set. Written from the vertex rules alone.
pub fn oracle_sweep(a: usize, b: usize, s: &[Point]) -> Option<(Vec<Vec<u8>>, Vec<Vec<u8>>)> {
    let mut h = vec![vec![0u8; b + 1]; a + 2];
    let mut v = vec![vec![0u8; b + 2]; a + 1];
    for i in 1..=a {
        for j in 1..=b {
            let left = h[i][j - 1];
            let above = v[i - 1][j];
            if s.contains(&(i, j)) {
                if left != above {
                    return None;
                }
                h[i][j] = left;
                v[i][j] = left;
            } else {
                h[i][j] = 1 - above;
                v[i][j] = 1 - left;
            }
        }
    }
    // the bottom row of V and the right column of H are boundary edges: no constraint
    let h: Vec<Vec<u8>> = (1..=a).map(|i| h[i].clone()).collect();
    let v: Vec<Vec<u8>> = (0..=a).map(|i| v[i][1..=b].to_vec()).collect();
    Some((h, v))
}

/// All vacancy-osculation sets of `a × b` by testing every subset.
pub fn oracle_all_sets(a: usize, b: usize) -> Vec<Vec<Point>> {
    let cells: Vec<Point> = (1..=a).flat_map(|i| (1..=b).map(move |j| (i, j))).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1 << cells.len()) {
        let s: Vec<Point> = cells.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &p)| p).collect();
        if oracle_sweep(a, b, &s).is_some() {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// `n × n` alternating sign matrices counted through their column partial sums:
/// consecutive 0/1 vectors whose difference alternates `+1, −1, …, +1`.
pub fn oracle_asm_count(n: usize) -> u64 {
    fn row_ok(prev: &[u8], next: &[u8]) -> bool {
        let mut want = 1i8;
        for (p, q) in prev.iter().zip(next) {
            let d = *q as i8 - *p as i8;
            if d != 0 {
                if d != want {
                    return false;
                }
                want = -want;
            }
        }
        want == -1
    }
    fn rec(n: usize, k: usize, prev: Vec<u8>) -> u64 {
        if k == n {
            return u64::from(prev.iter().all(|&x| x == 1));
        }
        let mut total = 0;
        for mask in 0u32..(1 << n) {
            let next: Vec<u8> = (0..n).map(|j| (mask >> j & 1) as u8).collect();
            if next.iter().filter(|&&x| x == 1).count() == k + 1 && row_ok(&prev, &next) {
                total += rec(n, k + 1, next);
            }
        }
        total
    }
    rec(n, 0, vec![0; n])
}

/// Number of standard Young tableaux by removing corners recursively.
pub fn oracle_syt_count(shape: &[usize]) -> u64 {
    let shape: Vec<usize> = shape.iter().copied().filter(|&x| x > 0).collect();
    if shape.is_empty() {
        return 1;
    }
    let mut total = 0;
    for i in 0..shape.len() {
        let is_corner = i + 1 == shape.len() || shape[i + 1] < shape[i];
        if is_corner {
            let mut s = shape.clone();
            s[i] -= 1;
            total += oracle_syt_count(&s);
        }
    }
    total
}

/// Canonical `q`-order precedence written directly from its definition:
/// farther from `q` first, and at equal distance the value below `q` first.
pub fn oracle_canonical_precedes(q: i64, z: i64, w: i64) -> bool {
    let (dz, dw) = ((z - q).abs(), (w - q).abs());
    dz > dw || (dz == dw && z < w)
}

/// Partitions of `n` into at most `rows` parts of size at most `cols`, as vectors.
pub fn oracle_partitions_in_box(rows: usize, cols: usize) -> Vec<Vec<usize>> {
    fn rec(rows: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(prefix.clone());
        if prefix.len() == rows {
            return;
        }
        for x in 1..=max {
            prefix.push(x);
            rec(rows, x, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out
}
