//! Capacity (transfinite diameter) estimation.
//!
//! Two routes: `d1` from Chebyshev norms `|T_n(K)|_K^{1/n}` and `d2` from
//! Fekete point products `δ_n(K)`. Both sequences approach the capacity from
//! above; `δ_n` is non-increasing. The reported best estimate extrapolates
//! `log d1_n` linearly in `1/n`, which is exact on single intervals where
//! `|T_n|_K = 2 ((b-a)/4)^n`.

use crate::chebyshev::{chebyshev, ExchangeConfig};
use crate::set::CompactSet;
use crate::Result;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CapacityEstimate {
    /// `(n, |T_n(K)|_K^{1/n})` for `n = 1..=n_max`.
    pub d1_seq: Vec<(usize, f64)>,
    /// `(n, δ_n(K))` for `n = 2..=n_max`.
    pub d2_seq: Vec<(usize, f64)>,
    /// `(n, log |T_n(K)|_K^{1/n})`.
    pub alpha_seq: Vec<(usize, f64)>,
    pub best_estimate: f64,
    /// `(lo, hi)`: `lo` from capacity monotonicity (largest interval piece),
    /// `hi` from the smallest computed `d1`/`d2` value.
    pub bracket: (f64, f64),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FeketeConfig {
    /// Number of points.
    pub n: usize,
    pub multistarts: usize,
    pub ascent_tol: f64,
    pub seed: u64,
}

impl Default for FeketeConfig {
    fn default() -> Self {
        FeketeConfig { n: 2, multistarts: 8, ascent_tol: 1e-10, seed: 0 }
    }
}

/// `|T_n(K)|_K^{1/n}` for `n = 1..=n_max`.
pub fn d1_estimate(
    set: &CompactSet,
    n_max: usize,
    exchange: &ExchangeConfig,
) -> Result<Vec<(usize, f64)>> {
    let mut out = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let r = chebyshev(set, n, exchange)?;
        out.push((n, r.norm.powf(1.0 / n as f64)));
    }
    Ok(out)
}

/// Pairwise log-distance sum over unordered pairs (the ascent objective).
fn log_energy(points: &[f64]) -> f64 {
    let mut acc = 0.0;
    for i in 0..points.len() {
        for j in 0..i {
            let d = (points[i] - points[j]).abs();
            if d == 0.0 {
                return f64::NEG_INFINITY;
            }
            acc += d.ln();
        }
    }
    acc
}

/// Golden-section maximization of a concave function on `[a, b]`.
fn golden_max(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let (mut fc, mut fd) = (f(c), f(d));
    while b - a > tol {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// Best position for one coordinate given the others; the objective is
/// strictly concave between consecutive fixed points, so each subinterval of
/// each piece is handled by golden section and the best wins.
fn best_coordinate(set: &CompactSet, others: &[f64], tol: f64) -> (f64, f64) {
    let g = |t: f64| -> f64 {
        let mut acc = 0.0;
        for &y in others {
            let d = (t - y).abs();
            if d == 0.0 {
                return f64::NEG_INFINITY;
            }
            acc += d.ln();
        }
        acc
    };
    let mut best = (f64::NAN, f64::NEG_INFINITY);
    let mut upd = |cand: (f64, f64)| {
        if cand.1 > best.1 || (cand.1 == best.1 && cand.0 < best.0) {
            best = cand;
        }
    };
    for piece in set.intervals() {
        upd((piece.lo, g(piece.lo)));
        upd((piece.hi, g(piece.hi)));
        if piece.len() == 0.0 {
            continue;
        }
        let mut cuts: Vec<f64> = others
            .iter()
            .copied()
            .filter(|&y| y > piece.lo && y < piece.hi)
            .collect();
        cuts.push(piece.lo);
        cuts.push(piece.hi);
        cuts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        for w in cuts.windows(2) {
            if w[1] - w[0] > tol {
                upd(golden_max(g, w[0], w[1], tol));
            }
        }
    }
    best
}

/// Fekete points of the set: `cfg.n` points maximizing the product of pairwise
/// distances (coordinate-wise exchange ascent from multistart initializations),
/// and the normalized product `δ_n`. Deterministic for a fixed seed.
pub fn fekete_points(set: &CompactSet, cfg: &FeketeConfig) -> (Vec<f64>, f64) {
    assert!(cfg.n >= 2, "need at least two Fekete points");
    let n = cfg.n;
    let mut starts: Vec<Vec<f64>> = Vec::new();

    // deterministic start: Chebyshev-Lobatto points over the hull, snapped in
    let hull_lo = set.lo();
    let hull_hi = set.hi();
    let snap = |x: f64| -> f64 {
        if set.contains(x, 0.0) {
            return x;
        }
        let mut best = hull_lo;
        let mut dist = f64::INFINITY;
        for iv in set.intervals() {
            for e in [iv.lo, iv.hi] {
                if (x - e).abs() < dist {
                    dist = (x - e).abs();
                    best = e;
                }
            }
        }
        best
    };
    let lobatto: Vec<f64> = (0..n)
        .map(|j| {
            let t = (std::f64::consts::PI * j as f64 / (n - 1) as f64).cos();
            snap(0.5 * (hull_lo + hull_hi) - 0.5 * (hull_hi - hull_lo) * t)
        })
        .collect();
    starts.push(lobatto);

    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let total = set.total_length();
    for _ in 1..cfg.multistarts.max(1) {
        let mut pts: Vec<f64> = (0..n)
            .map(|_| {
                let mut u = rng.gen::<f64>() * total;
                for iv in set.intervals() {
                    if u <= iv.len() {
                        return iv.lo + u;
                    }
                    u -= iv.len();
                }
                hull_hi
            })
            .collect();
        pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        starts.push(pts);
    }

    let mut best_pts: Vec<f64> = Vec::new();
    let mut best_val = f64::NEG_INFINITY;
    for mut pts in starts {
        let mut current = log_energy(&pts);
        for _sweep in 0..200 {
            for i in 0..n {
                let others: Vec<f64> = pts
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != i)
                    .map(|(_, &y)| y)
                    .collect();
                let (x, _) = best_coordinate(set, &others, cfg.ascent_tol);
                if x.is_finite() {
                    pts[i] = x;
                }
            }
            let next = log_energy(&pts);
            if next - current <= cfg.ascent_tol.max(1e-14) * (1.0 + current.abs()) {
                current = next;
                break;
            }
            current = next;
        }
        pts.sort_by(|x, y| x.partial_cmp(y).unwrap());
        let val = log_energy(&pts);
        if val > best_val || (val == best_val && pts < best_pts) {
            best_val = val;
            best_pts = pts;
        }
    }

    // delta_n = (product over ordered pairs)^{1/(n(n-1))} computed in log space
    let delta = (2.0 * best_val / (n as f64 * (n - 1) as f64)).exp();
    (best_pts, delta)
}

/// Full capacity estimate: both sequences, diagnostics and a bracket.
pub fn capacity(
    set: &CompactSet,
    n_max: usize,
    fekete: &FeketeConfig,
    exchange: &ExchangeConfig,
) -> Result<CapacityEstimate> {
    assert!(n_max >= 2, "n_max must be >= 2");
    let d1_seq = d1_estimate(set, n_max, exchange)?;
    let alpha_seq: Vec<(usize, f64)> = d1_seq.iter().map(|&(n, v)| (n, v.ln())).collect();
    let mut d2_seq = Vec::with_capacity(n_max - 1);
    for n in 2..=n_max {
        let cfg = FeketeConfig { n, ..fekete.clone() };
        let (_, delta) = fekete_points(set, &cfg);
        d2_seq.push((n, delta));
    }

    // extrapolate log d1_n = log cap + b/n using the two largest degrees
    let a1 = alpha_seq[n_max - 1].1;
    let n2 = (n_max / 2).max(1);
    let a2 = alpha_seq[n2 - 1].1;
    let best_raw = if n_max > n2 {
        let slope = (a1 - a2) / (1.0 / n_max as f64 - 1.0 / n2 as f64);
        (a1 - slope / n_max as f64).exp()
    } else {
        d1_seq[n_max - 1].1
    };

    let lo = set
        .intervals()
        .iter()
        .map(|iv| iv.len() / 4.0)
        .fold(0.0f64, f64::max);
    let hi = d1_seq
        .iter()
        .map(|&(_, v)| v)
        .chain(d2_seq.iter().map(|&(_, v)| v))
        .fold(f64::INFINITY, f64::min);
    let best_estimate = best_raw.clamp(lo, hi);

    Ok(CapacityEstimate { d1_seq, d2_seq, alpha_seq, best_estimate, bracket: (lo, hi) })
}

/// Degree bound used by [`is_subunit_capacity`].
pub const DEFAULT_SUBUNIT_DEGREE: usize = 24;

/// True iff some monic polynomial of degree `<= n_cap` has sup-norm `< 1` on
/// the set, which certifies `cap(K) < 1`. Conservative: may return `false`
/// when the capacity is only marginally below one.
pub fn is_subunit_capacity(set: &CompactSet, n_cap: usize) -> bool {
    // monotonicity: capacity of the largest piece is a lower bound
    let piece_cap = set
        .intervals()
        .iter()
        .map(|iv| iv.len() / 4.0)
        .fold(0.0f64, f64::max);
    if piece_cap >= 1.0 {
        return false;
    }
    if set.intervals().len() == 1 {
        let r = set.intervals()[0].len() / 4.0;
        return (1..=n_cap).any(|n| 2.0 * r.powi(n as i32) < 1.0);
    }
    let cfg = ExchangeConfig { tol: 1e-6, ..ExchangeConfig::default() };
    for n in 1..=n_cap {
        if let Ok(r) = chebyshev(set, n, &cfg) {
            if r.norm < 1.0 {
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fekete_two_and_three_points_on_unit_interval() {
        let k = CompactSet::interval(-1.0, 1.0).unwrap();
        let (pts, d2) = fekete_points(&k, &FeketeConfig { n: 2, ..Default::default() });
        assert!((pts[0] + 1.0).abs() < 1e-8 && (pts[1] - 1.0).abs() < 1e-8);
        assert!((d2 - 2.0).abs() < 1e-8);

        let (pts, d3) = fekete_points(&k, &FeketeConfig { n: 3, ..Default::default() });
        assert!(pts[1].abs() < 1e-6, "middle point {}", pts[1]);
        assert!((d3 - 2f64.powf(1.0 / 3.0)).abs() < 1e-6, "delta3 {}", d3);
    }

    #[test]
    fn fekete_diameter_on_shifted_interval() {
        let k = CompactSet::interval(0.0, 1.0).unwrap();
        let (_, d2) = fekete_points(&k, &FeketeConfig { n: 2, ..Default::default() });
        assert!((d2 - 1.0).abs() < 1e-8);
    }

    #[test]
    fn d1_closed_form_values() {
        let cfg = ExchangeConfig::default();
        let k = CompactSet::interval(0.0, 1.0).unwrap();
        let d1 = d1_estimate(&k, 4, &cfg).unwrap();
        // (2 (1/4)^4)^{1/4} = 2^{1/4}/4
        assert!((d1[3].1 - 2f64.powf(0.25) / 4.0).abs() < 1e-8);

        let k = CompactSet::interval(-2.0, 2.0).unwrap();
        let d1 = d1_estimate(&k, 1, &cfg).unwrap();
        assert!((d1[0].1 - 2.0).abs() < 1e-8);

        let k = CompactSet::interval(-1.0, 1.0).unwrap();
        let d1 = d1_estimate(&k, 8, &cfg).unwrap();
        assert!((d1[7].1 - 2f64.powf(-7.0 / 8.0)).abs() < 1e-8);
    }

    #[test]
    fn capacity_estimate_interval() {
        let k = CompactSet::interval(0.0, 1.0).unwrap();
        let est = capacity(&k, 8, &FeketeConfig::default(), &ExchangeConfig::default()).unwrap();
        assert!((est.best_estimate - 0.25).abs() < 0.01, "best {}", est.best_estimate);
        assert!(est.bracket.0 <= est.best_estimate && est.best_estimate <= est.bracket.1);
        // delta_n non-increasing
        for w in est.d2_seq.windows(2) {
            assert!(w[1].1 <= w[0].1 + 1e-9);
        }
    }

    #[test]
    fn subunit_checks() {
        let n = DEFAULT_SUBUNIT_DEGREE;
        assert!(is_subunit_capacity(&CompactSet::interval(-1.0, 1.0).unwrap(), n));
        assert!(!is_subunit_capacity(&CompactSet::interval(-2.0, 2.0).unwrap(), n));
        assert!(is_subunit_capacity(&CompactSet::interval(0.25, 0.5).unwrap(), n));
    }
}
