//! Level functions, total orders on contents, and the ordering pairs built from them.
//!
//! An ordering pair sorts any vacancy-osculation set into a canonical progression:
//! first by level, then by content under the order.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::grid::{content, Point};
use crate::vos::VOSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LevelFunction {
    /// `L_q(i,j) = max(min(i, i+q), min(j, j−q))`.
    Lq(i64),
    /// The row index.
    Lex,
    /// The column index.
    AntiLex,
}

impl LevelFunction {
    pub fn level(&self, i: usize, j: usize) -> i64 {
        let (i, j) = (i as i64, j as i64);
        match *self {
            LevelFunction::Lq(q) => i.min(i + q).max(j.min(j - q)),
            LevelFunction::Lex => i,
            LevelFunction::AntiLex => j,
        }
    }

    pub fn level_of(&self, p: Point) -> i64 {
        self.level(p.0, p.1)
    }
}

/// A total strict order on integers, used on contents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TotalOrder {
    NaturalAsc,
    NaturalDesc,
    /// `z ≺ z'` iff `|z−q| > |z'−q|`, or the distances tie and `z < q < z'`.
    CanonicalQ(i64),
    /// Contents listed from smallest to largest; comparisons outside the list fail.
    ExplicitTable(Vec<i64>),
}

impl TotalOrder {
    /// Validates that the table lists distinct values.
    pub fn table(ranks: Vec<i64>) -> Result<Self> {
        let mut s = ranks.clone();
        s.sort_unstable();
        s.dedup();
        if s.len() != ranks.len() {
            return Err(Error::domain("order table repeats a value"));
        }
        Ok(TotalOrder::ExplicitTable(ranks))
    }

    /// A `q`-order different from the canonical one on `[lo, hi]`:
    /// every value above `q` (descending) precedes every value below `q` (ascending), then `q`.
    pub fn upper_first_q_order(q: i64, lo: i64, hi: i64) -> Self {
        let mut r: Vec<i64> = (q + 1..=hi).rev().collect();
        r.extend(lo..q);
        r.push(q);
        TotalOrder::ExplicitTable(r)
    }

    /// A sort key realising the order, or `None` outside a table's window.
    pub fn key(&self, z: i64) -> Option<(i64, i64)> {
        match self {
            TotalOrder::NaturalAsc => Some((z, 0)),
            TotalOrder::NaturalDesc => Some((-z, 0)),
            TotalOrder::CanonicalQ(q) => Some((-(z - q).abs(), (z > *q) as i64)),
            TotalOrder::ExplicitTable(t) => t.iter().position(|&x| x == z).map(|p| (p as i64, 0)),
        }
    }

    pub fn compare(&self, z: i64, w: i64) -> Result<Ordering> {
        match (self.key(z), self.key(w)) {
            (Some(x), Some(y)) => Ok(x.cmp(&y)),
            _ => Err(Error::domain(format!("contents {z} and {w} are not both in the order table"))),
        }
    }

    pub fn precedes(&self, z: i64, w: i64) -> Result<bool> {
        Ok(self.compare(z, w)? == Ordering::Less)
    }

    /// The values of `[lo, hi]` listed from smallest to largest; a fingerprint for caching.
    pub fn ranking(&self, lo: i64, hi: i64) -> Result<Vec<i64>> {
        let mut v: Vec<i64> = (lo..=hi).collect();
        for &z in &v {
            if self.key(z).is_none() {
                return Err(Error::domain(format!("content {z} is not in the order table")));
            }
        }
        v.sort_by_key(|&z| self.key(z).unwrap());
        Ok(v)
    }

    /// Whether the order increases towards `q` from both sides on `[lo, hi]`.
    pub fn is_q_order(&self, q: i64, lo: i64, hi: i64) -> bool {
        let Ok(r) = self.ranking(lo, hi) else { return false };
        let pos = |z: i64| r.iter().position(|&x| x == z).unwrap();
        (lo..=hi).all(|z| {
            (z + 1..=hi).all(|w| {
                if w <= q {
                    pos(z) < pos(w)
                } else if z >= q {
                    pos(w) < pos(z)
                } else {
                    true
                }
            })
        })
    }
}

/// Whether `(level, order)` satisfies the ordering-pair implication for all
/// pairs of points of `[a] × [b]`.
pub fn validate_ordering_pair(level: LevelFunction, order: &TotalOrder, a: usize, b: usize) -> bool {
    first_violation(level, order, a, b).is_none()
}

fn first_violation(level: LevelFunction, order: &TotalOrder, a: usize, b: usize) -> Option<(Point, Point)> {
    let pts: Vec<Point> = (1..=a).flat_map(|i| (1..=b).map(move |j| (i, j))).collect();
    for &p in &pts {
        for &p2 in &pts {
            let (l, l2) = (level.level_of(p), level.level_of(p2));
            let before = l < l2
                || (l == l2
                    && match order.compare(content(p), content(p2)) {
                        Ok(o) => o == Ordering::Less,
                        Err(_) => return Some((p, p2)),
                    });
            if before && !(p.0 < p2.0 || p.1 < p2.1) {
                return Some((p, p2));
            }
        }
    }
    None
}

/// A level function and an order, checked to form an ordering pair on `[a] × [b]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderingPair {
    level: LevelFunction,
    order: TotalOrder,
    a: usize,
    b: usize,
}

impl OrderingPair {
    pub fn new(level: LevelFunction, order: TotalOrder, a: usize, b: usize) -> Result<Self> {
        if let Some((p, p2)) = first_violation(level, &order, a, b) {
            return Err(Error::domain(format!(
                "{level:?} with {order:?} is not an ordering pair on {a}x{b}: {p:?} is placed before {p2:?}"
            )));
        }
        Ok(OrderingPair { level, order, a, b })
    }

    /// `(L_q, ≺_q)` with the canonical `q`-order.
    pub fn complete(q: i64, a: usize, b: usize) -> Result<Self> {
        OrderingPair::new(LevelFunction::Lq(q), TotalOrder::CanonicalQ(q), a, b)
    }

    pub fn lex(a: usize, b: usize) -> Self {
        OrderingPair { level: LevelFunction::Lex, order: TotalOrder::NaturalAsc, a, b }
    }

    pub fn antilex(a: usize, b: usize) -> Self {
        OrderingPair { level: LevelFunction::AntiLex, order: TotalOrder::NaturalDesc, a, b }
    }

    pub fn level(&self) -> LevelFunction {
        self.level
    }

    pub fn order(&self) -> &TotalOrder {
        &self.order
    }

    pub fn window(&self) -> (usize, usize) {
        (self.a, self.b)
    }

    fn key(&self, p: Point) -> (i64, (i64, i64)) {
        (self.level.level_of(p), self.order.key(content(p)).expect("validated window"))
    }
}

/// Solves `(L_q(i,j), j−i) = (u,z)` for `(i,j)`.
pub fn g_q(q: i64, u: i64, z: i64) -> (i64, i64) {
    if q <= 0.min(z) {
        (u - z, u)
    } else if z <= q && q <= 0 {
        (u - q, u - q + z)
    } else if 0 <= q && q <= z {
        (u + q - z, u + q)
    } else {
        (u, u + z)
    }
}

/// The canonical ordering of `S` sorted by level, then content under the order.
pub fn induced_progression(s: &VOSet, pair: &OrderingPair) -> Result<Vec<Point>> {
    if s.a > pair.a || s.b > pair.b {
        return Err(Error::domain(format!(
            "ordering pair was checked on {}x{}, set lives on {}x{}",
            pair.a, pair.b, s.a, s.b
        )));
    }
    let mut pts = s.points.clone();
    pts.sort_by_key(|&p| pair.key(p));
    Ok(pts)
}

/// The order specifiers accepted on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OrderSpec {
    Lex,
    AntiLex,
    /// Canonical `q`-order with `q = b − a` taken from the grid.
    Q,
    QFixed(i64),
    /// Ascending rank list; the level function is `L_q` with `q` the largest value.
    Table(Vec<i64>),
}

impl std::str::FromStr for OrderSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "lex" => return Ok(OrderSpec::Lex),
            "antilex" => return Ok(OrderSpec::AntiLex),
            "q" => return Ok(OrderSpec::Q),
            _ => {}
        }
        if let Some(v) = s.strip_prefix("q:") {
            let q = v.trim().parse().map_err(|_| Error::parse(format!("bad q in order spec {s:?}")))?;
            return Ok(OrderSpec::QFixed(q));
        }
        if let Some(v) = s.strip_prefix("table:") {
            let vals = v
                .split(',')
                .map(|x| x.trim().parse::<i64>())
                .collect::<std::result::Result<Vec<_>, _>>()
                .map_err(|_| Error::parse(format!("bad table in order spec {s:?}")))?;
            if vals.is_empty() {
                return Err(Error::parse("empty order table"));
            }
            return Ok(OrderSpec::Table(vals));
        }
        Err(Error::parse(format!("unknown order spec {s:?}; expected lex, antilex, q, q:<int> or table:z1,z2,...")))
    }
}

impl OrderSpec {
    /// The order alone, with `q` resolved against the grid.
    pub fn total_order(&self, a: usize, b: usize) -> Result<TotalOrder> {
        Ok(match self {
            OrderSpec::Lex => TotalOrder::NaturalAsc,
            OrderSpec::AntiLex => TotalOrder::NaturalDesc,
            OrderSpec::Q => TotalOrder::CanonicalQ(b as i64 - a as i64),
            OrderSpec::QFixed(q) => TotalOrder::CanonicalQ(*q),
            OrderSpec::Table(t) => TotalOrder::table(t.clone())?,
        })
    }

    pub fn pair(&self, a: usize, b: usize) -> Result<OrderingPair> {
        let order = self.total_order(a, b)?;
        let level = match self {
            OrderSpec::Lex => LevelFunction::Lex,
            OrderSpec::AntiLex => LevelFunction::AntiLex,
            OrderSpec::Q => LevelFunction::Lq(b as i64 - a as i64),
            OrderSpec::QFixed(q) => LevelFunction::Lq(*q),
            OrderSpec::Table(t) => LevelFunction::Lq(*t.last().unwrap()),
        };
        OrderingPair::new(level, order, a, b)
    }
}
