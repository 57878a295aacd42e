//! Compact subsets of ℝ given as finite unions of disjoint closed intervals.

use crate::error::Error;
use crate::Result;
use serde::{Deserialize, Serialize};

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn mid(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64, tol: f64) -> bool {
        x >= self.lo - tol && x <= self.hi + tol
    }
}

/// A finite union of disjoint closed intervals, sorted ascending.
///
/// The total length is required to be positive, so the set always has infinite
/// cardinality. Restricting compacts to finite interval unions is a choice of
/// this library; the theory places no such constraint.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CompactSet {
    intervals: Vec<Interval>,
}

impl CompactSet {
    /// Builds a set from `(lo, hi)` pairs. Pairs may be given in any order but
    /// must be pairwise disjoint, and at least one must have `lo < hi`.
    pub fn new(pairs: &[(f64, f64)]) -> Result<Self> {
        if pairs.is_empty() {
            return Err(Error::InvalidSet("no intervals given".into()));
        }
        let mut intervals: Vec<Interval> = Vec::with_capacity(pairs.len());
        for &(lo, hi) in pairs {
            if !lo.is_finite() || !hi.is_finite() {
                return Err(Error::InvalidSet(format!("non-finite endpoint in [{lo}, {hi}]")));
            }
            if lo > hi {
                return Err(Error::InvalidSet(format!("inverted interval [{lo}, {hi}]")));
            }
            intervals.push(Interval { lo, hi });
        }
        intervals.sort_by(|a, b| a.lo.partial_cmp(&b.lo).unwrap());
        for w in intervals.windows(2) {
            if w[0].hi >= w[1].lo {
                return Err(Error::InvalidSet(format!(
                    "intervals [{}, {}] and [{}, {}] are not disjoint",
                    w[0].lo, w[0].hi, w[1].lo, w[1].hi
                )));
            }
        }
        let total: f64 = intervals.iter().map(Interval::len).sum();
        if total <= 0.0 {
            return Err(Error::InvalidSet("total length must be positive".into()));
        }
        Ok(CompactSet { intervals })
    }

    /// Single interval `[a, b]` with `a < b`.
    pub fn interval(a: f64, b: f64) -> Result<Self> {
        if a >= b {
            return Err(Error::DegenerateInterval { a, b });
        }
        Self::new(&[(a, b)])
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn lo(&self) -> f64 {
        self.intervals[0].lo
    }

    pub fn hi(&self) -> f64 {
        self.intervals.last().unwrap().hi
    }

    /// Largest absolute value of an endpoint.
    pub fn max_abs(&self) -> f64 {
        self.lo().abs().max(self.hi().abs())
    }

    pub fn total_length(&self) -> f64 {
        self.intervals.iter().map(Interval::len).sum()
    }

    /// True iff `x` lies within `tol` of some interval.
    pub fn contains(&self, x: f64, tol: f64) -> bool {
        self.intervals.iter().any(|iv| iv.contains(x, tol))
    }

    /// Single interval of the form `[-a, a]`, if the set is one.
    pub fn as_symmetric_interval(&self) -> Option<f64> {
        if self.intervals.len() == 1 {
            let iv = self.intervals[0];
            if (iv.lo + iv.hi).abs() <= 1e-12 * iv.len().max(1.0) {
                return Some(iv.hi);
            }
        }
        None
    }

    /// Uniform grid of at least `n` points covering the whole set, with the
    /// per-interval point count proportional to the interval length. Every
    /// interval contributes its two endpoints.
    pub fn uniform_grid(&self, n: usize) -> Vec<f64> {
        self.weighted_grid(n, |piece, count| {
            (0..=count)
                .map(|j| piece.lo + piece.len() * j as f64 / count as f64)
                .collect()
        })
    }

    /// Grid with Chebyshev-distributed points per interval; clusters near
    /// interval endpoints, which is where minimax error extrema live.
    pub fn chebyshev_grid(&self, n: usize) -> Vec<f64> {
        self.weighted_grid(n, |piece, count| {
            (0..=count)
                .map(|j| {
                    let t = (std::f64::consts::PI * j as f64 / count as f64).cos();
                    piece.mid() - 0.5 * piece.len() * t
                })
                .collect()
        })
    }

    fn weighted_grid(&self, n: usize, f: impl Fn(&Interval, usize) -> Vec<f64>) -> Vec<f64> {
        let total = self.total_length();
        let mut out = Vec::with_capacity(n + 2 * self.intervals.len());
        for piece in &self.intervals {
            let count = ((n as f64 * piece.len() / total).ceil() as usize).max(8);
            out.extend(f(piece, count));
        }
        out.sort_by(|a, b| a.partial_cmp(b).unwrap());
        out.dedup();
        out
    }

    /// Parses the textual syntax `"[a,b]"` or `"[a,b] U [c,d]"` with decimal
    /// or rational (`"1/4"`) endpoints.
    pub fn parse(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for part in text.split(['U', 'u', '∪']) {
            let part = part.trim();
            if part.is_empty() {
                return Err(Error::Parse(format!("empty interval in {text:?}")));
            }
            let inner = part
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("expected [a,b], got {part:?}")))?;
            let (a, b) = split_endpoints(inner)
                .ok_or_else(|| Error::Parse(format!("expected two endpoints in {part:?}")))?;
            pairs.push((parse_endpoint(a)?, parse_endpoint(b)?));
        }
        CompactSet::new(&pairs)
    }
}

impl std::fmt::Display for CompactSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, iv) in self.intervals.iter().enumerate() {
            if i > 0 {
                write!(f, " U ")?;
            }
            write!(f, "[{}, {}]", iv.lo, iv.hi)?;
        }
        Ok(())
    }
}

/// Splits "a,b" or "a;b" at the top-level separator.
fn split_endpoints(inner: &str) -> Option<(&str, &str)> {
    let sep = inner.find([',', ';'])?;
    let (a, b) = inner.split_at(sep);
    Some((a, &b[1..]))
}

fn parse_endpoint(text: &str) -> Result<f64> {
    let text = text.trim();
    if let Some((num, den)) = text.split_once('/') {
        let num: f64 = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator {num:?}")))?;
        let den: f64 = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator {den:?}")))?;
        if den == 0.0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        Ok(num / den)
    } else {
        text.parse()
            .map_err(|_| Error::Parse(format!("bad endpoint {text:?}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_single_interval() {
        let k = CompactSet::parse("[-1,1]").unwrap();
        assert_eq!(k.intervals().len(), 1);
        assert_eq!(k.lo(), -1.0);
        assert_eq!(k.hi(), 1.0);
    }

    #[test]
    fn parse_union_and_rationals() {
        let k = CompactSet::parse("[1/4, 1/2] U [0.75, 1]").unwrap();
        assert_eq!(k.intervals().len(), 2);
        assert_eq!(k.lo(), 0.25);
        assert_eq!(k.intervals()[0].hi, 0.5);
        assert_eq!(k.intervals()[1].lo, 0.75);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(CompactSet::parse("[1,2").is_err());
        assert!(CompactSet::parse("").is_err());
        assert!(CompactSet::parse("[2,1]").is_err());
        assert!(CompactSet::parse("[0,1] U [0.5, 2]").is_err());
    }

    #[test]
    fn contains_with_tolerance() {
        let k = CompactSet::parse("[-1,1]").unwrap();
        assert!(k.contains(1.0, 0.0));
        assert!(k.contains(1.0000001, 1e-6));
        assert!(!k.contains(1.0000001, 0.0));
        let k = CompactSet::parse("[1/4,1/2]").unwrap();
        assert!(!k.contains(0.0, 0.0));
    }

    #[test]
    fn degenerate_union_member_allowed_if_total_positive() {
        // a single point is fine as long as some interval has positive length
        let k = CompactSet::new(&[(0.0, 0.0), (1.0, 2.0)]).unwrap();
        assert!(k.contains(0.0, 0.0));
        assert!(CompactSet::new(&[(0.0, 0.0)]).is_err());
    }

    #[test]
    fn symmetric_detection() {
        assert_eq!(CompactSet::parse("[-1.5,1.5]").unwrap().as_symmetric_interval(), Some(1.5));
        assert_eq!(CompactSet::parse("[0,1]").unwrap().as_symmetric_interval(), None);
    }
}
