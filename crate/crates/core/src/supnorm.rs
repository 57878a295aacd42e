//! Certified sup-norm of a polynomial over a compact set.
//!
//! The value is computed by evaluating at interval endpoints and at the real
//! critical points (roots of the derivative) inside the set; a refinement grid
//! plus a derivative bound supplies a rigorous upper bound that does not trust
//! the eigenvalue-based root finder.

use crate::poly::RealPoly;
use crate::set::CompactSet;
use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

/// Default number of grid points per interval used for the certificate.
const CERT_GRID: usize = 2048;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SupNormResult {
    /// Best computed value of `max |p|` over `K`.
    pub value: f64,
    /// Point of `K` where the maximum is attained (up to tolerance).
    pub witness: f64,
    /// Rigorous lower bound: `|p(witness)|`.
    pub certified_lower: f64,
    /// Rigorous upper bound from the refinement grid and a derivative bound.
    pub certified_upper: f64,
}

/// Real roots of `p`, via companion-matrix eigenvalues polished by Newton steps.
///
/// Intended for well-scaled polynomials of moderate degree; clustered or
/// multiple roots come back as nearby simple roots, which is fine for the
/// critical-point enumeration (the fallback grid covers degenerate cases).
pub fn real_roots(p: &RealPoly) -> Vec<f64> {
    let n = p.degree();
    if p.is_zero() || n == 0 {
        return Vec::new();
    }
    let c = p.coeffs();
    if n == 1 {
        return vec![-c[0] / c[1]];
    }
    if n == 2 {
        let (a, b, cc) = (c[2], c[1], c[0]);
        let disc = b * b - 4.0 * a * cc;
        if disc < 0.0 {
            return Vec::new();
        }
        let s = disc.sqrt();
        // numerically stable quadratic formula
        let q = -0.5 * (b + b.signum() * s);
        let mut roots = vec![q / a];
        if q != 0.0 {
            roots.push(cc / q);
        } else {
            roots.push(0.0);
        }
        roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
        return roots;
    }

    // companion matrix of p / lead
    let lead = c[n];
    let mut m = DMatrix::<f64>::zeros(n, n);
    for i in 1..n {
        m[(i, i - 1)] = 1.0;
    }
    for i in 0..n {
        m[(i, n - 1)] = -c[i] / lead;
    }
    let eig = m.complex_eigenvalues();
    let scale = p.coeffs().iter().map(|a| a.abs()).fold(0.0f64, f64::max).max(1.0);
    let mut roots = Vec::new();
    for ev in eig.iter() {
        if ev.im.abs() > 1e-7 * (1.0 + ev.re.abs()) {
            continue;
        }
        let mut x = ev.re;
        // 3 Newton polish steps
        for _ in 0..3 {
            let fx = p.eval(x);
            let dfx = p.derivative().eval(x);
            if dfx.abs() > 1e-300 {
                let step = fx / dfx;
                if step.is_finite() {
                    x -= step;
                }
            }
        }
        if p.eval(x).abs() <= 1e-6 * scale * (1.0 + x.abs()).powi(n as i32) {
            roots.push(x);
        } else {
            // polish failed (e.g. near-multiple root); keep the raw estimate
            roots.push(ev.re);
        }
    }
    roots.sort_by(|x, y| x.partial_cmp(y).unwrap());
    roots
}

/// Upper bound for `|p'|` on `K` from coefficient magnitudes.
fn derivative_bound(p: &RealPoly, set: &CompactSet) -> f64 {
    let m = set.max_abs().max(1e-300);
    p.coeffs()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| i as f64 * c.abs() * m.powi(i as i32 - 1))
        .sum()
}

/// Certified sup-norm of `p` over `set`.
pub fn sup_norm(p: &RealPoly, set: &CompactSet) -> SupNormResult {
    if p.is_zero() {
        return SupNormResult {
            value: 0.0,
            witness: set.lo(),
            certified_lower: 0.0,
            certified_upper: 0.0,
        };
    }

    let mut best = f64::NEG_INFINITY;
    let mut witness = set.lo();
    let mut consider = |x: f64| {
        let v = p.eval(x).abs();
        if v > best || (v == best && x < witness) {
            best = v;
            witness = x;
        }
    };

    for iv in set.intervals() {
        consider(iv.lo);
        consider(iv.hi);
    }
    let dp = p.derivative();
    if !dp.is_zero() {
        for r in real_roots(&dp) {
            // clamp near-boundary critical points onto the set
            for iv in set.intervals() {
                if iv.contains(r, 1e-9) {
                    consider(r.clamp(iv.lo, iv.hi));
                }
            }
        }
    }

    // certificate: refinement grid plus Lipschitz bound
    let lip = derivative_bound(p, set);
    let mut grid_bound = 0.0f64;
    for iv in set.intervals() {
        if iv.len() == 0.0 {
            grid_bound = grid_bound.max(p.eval(iv.lo).abs());
            continue;
        }
        let h = iv.len() / CERT_GRID as f64;
        let mut local = 0.0f64;
        for j in 0..=CERT_GRID {
            let x = iv.lo + h * j as f64;
            let v = p.eval(x).abs();
            if v > best || (v == best && x < witness) {
                best = v;
                witness = x;
            }
            local = local.max(v);
        }
        grid_bound = grid_bound.max(local + 0.5 * h * lip);
    }

    SupNormResult {
        value: best,
        witness,
        certified_lower: best,
        certified_upper: grid_bound.max(best),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::IntPoly;

    fn interval(a: f64, b: f64) -> CompactSet {
        CompactSet::interval(a, b).unwrap()
    }

    #[test]
    fn cubic_minimax_norm_on_unit_interval() {
        // T^3 - 0.75 T has sup-norm 2^{1-3} = 0.25 on [-1,1]
        let p = RealPoly::new(vec![0.0, -0.75, 0.0, 1.0]);
        let r = sup_norm(&p, &interval(-1.0, 1.0));
        assert!((r.value - 0.25).abs() < 1e-12, "value {}", r.value);
        assert!(r.certified_lower <= r.value && r.value <= r.certified_upper);
    }

    #[test]
    fn constant_polynomial() {
        let p = RealPoly::constant(-3.5);
        let r = sup_norm(&p, &interval(0.0, 2.0));
        assert_eq!(r.value, 3.5);
    }

    #[test]
    fn quadratic_on_half_interval() {
        // T^2 - 1/8 on [-1/2, 1/2] has norm 1/8
        let p = RealPoly::new(vec![-0.125, 0.0, 1.0]);
        let r = sup_norm(&p, &interval(-0.5, 0.5));
        assert!((r.value - 0.125).abs() < 1e-12);
    }

    #[test]
    fn zero_polynomial() {
        let r = sup_norm(&RealPoly::zero(), &interval(-1.0, 1.0));
        assert_eq!(r.value, 0.0);
        assert_eq!(r.witness, -1.0);
    }

    #[test]
    fn witness_attains_value() {
        let p = IntPoly::from_i64(&[1, -3, 0, 2]).to_real();
        let k = CompactSet::new(&[(-1.0, -0.25), (0.5, 1.5)]).unwrap();
        let r = sup_norm(&p, &k);
        assert!(k.contains(r.witness, 1e-9));
        assert!((p.eval(r.witness).abs() - r.value).abs() < 1e-12);
    }

    #[test]
    fn real_roots_of_cubic() {
        // (T-1)T(T+2)
        let p = RealPoly::new(vec![0.0, -2.0, 1.0, 1.0]);
        let roots = real_roots(&p);
        assert_eq!(roots.len(), 3);
        assert!((roots[0] + 2.0).abs() < 1e-9);
        assert!(roots[1].abs() < 1e-9);
        assert!((roots[2] - 1.0).abs() < 1e-9);
    }
}
