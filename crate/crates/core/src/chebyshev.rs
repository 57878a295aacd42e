//! Monic minimax (Chebyshev) polynomials of a compact set.
//!
//! Single intervals use the Remez exchange in a normalized variable, which
//! converges to machine precision in a handful of iterations; the closed-form
//! affine transcription of the classical polynomials is available separately
//! and serves as an independent cross-check. Unions of intervals are solved by
//! Lawson-weighted least squares on a refining grid with an active-set polish;
//! optimality there is certified only through the discrete-lower /
//! continuous-upper gap, since equioscillation can fail on disconnected sets.

use crate::error::Error;
use crate::poly::RealPoly;
use crate::set::CompactSet;
use crate::supnorm::{real_roots, sup_norm};
use crate::Result;
use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ChebyshevMethod {
    ClosedForm,
    Exchange,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ChebyshevResult {
    /// Monic minimizer of the sup-norm among monic polynomials of this degree.
    pub poly: RealPoly,
    /// Its sup-norm on the set.
    pub norm: f64,
    /// Points where `|poly|` attains the norm (alternation reference on a
    /// single interval, near-extremal points on a union).
    pub alternation_points: Vec<f64>,
    pub method: ChebyshevMethod,
    /// Certified optimality gap (continuous upper bound minus discrete lower
    /// bound); zero-ish on single intervals.
    pub gap: f64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ExchangeConfig {
    /// Certified optimality gap demanded of the result.
    pub tol: f64,
    /// Iteration budget across exchange / Lawson rounds.
    pub max_iters: usize,
    /// Initial grid size for the union solver.
    pub grid: usize,
}

impl Default for ExchangeConfig {
    fn default() -> Self {
        ExchangeConfig { tol: 1e-8, max_iters: 200, grid: 2048 }
    }
}

/// Classical Chebyshev polynomial `T_n` (leading coefficient `2^{n-1}`).
pub fn classical_chebyshev(n: usize) -> RealPoly {
    let mut t0 = RealPoly::constant(1.0);
    if n == 0 {
        return t0;
    }
    let mut t1 = RealPoly::monomial(1);
    let two_t = RealPoly::new(vec![0.0, 2.0]);
    for _ in 1..n {
        let t2 = two_t.mul(&t1).sub(&t0);
        t0 = t1;
        t1 = t2;
    }
    t1
}

/// Closed-form monic minimax polynomial of `[a, b]`:
/// `2 ((b-a)/4)^n T_n((2T - a - b)/(b - a))`, of norm `2 ((b-a)/4)^n`.
pub fn chebyshev_closed_form(a: f64, b: f64, n: usize) -> Result<ChebyshevResult> {
    if a >= b {
        return Err(Error::DegenerateInterval { a, b });
    }
    if n == 0 {
        return Err(Error::OutOfRange("degree must be >= 1".into()));
    }
    let half = 0.5 * (b - a);
    let mid = 0.5 * (a + b);
    let inner = RealPoly::new(vec![-mid / half, 1.0 / half]);
    let factor = 2.0 * (0.25 * (b - a)).powi(n as i32);
    let mut poly = classical_chebyshev(n).compose(&inner).scale(factor);
    // force exact monicity (the affine algebra leaves the lead at 1 + O(eps))
    let lead = *poly.coeffs().last().unwrap();
    poly = poly.scale(1.0 / lead);

    let mut alternation: Vec<f64> = (0..=n)
        .map(|j| mid - half * (std::f64::consts::PI * j as f64 / n as f64).cos())
        .collect();
    alternation.sort_by(|x, y| x.partial_cmp(y).unwrap());
    Ok(ChebyshevResult {
        poly,
        norm: factor,
        alternation_points: alternation,
        method: ChebyshevMethod::ClosedForm,
        gap: 0.0,
    })
}

/// Monic minimax polynomial of degree `n` on an arbitrary compact set.
pub fn chebyshev(set: &CompactSet, n: usize, cfg: &ExchangeConfig) -> Result<ChebyshevResult> {
    if n == 0 {
        return Err(Error::OutOfRange("degree must be >= 1".into()));
    }
    if set.intervals().len() == 1 {
        remez_interval(set, n, cfg)
    } else {
        lawson_union(set, n, cfg)
    }
}

/// Evaluates the first `count` classical Chebyshev basis polynomials at `t`.
fn cheb_basis_row(t: f64, count: usize) -> Vec<f64> {
    let mut row = Vec::with_capacity(count);
    let (mut a, mut b) = (1.0, t);
    for i in 0..count {
        match i {
            0 => row.push(1.0),
            1 => row.push(t),
            _ => {
                let c = 2.0 * t * b - a;
                a = b;
                b = c;
                row.push(c);
            }
        }
    }
    row
}

/// Converts a coefficient vector over the Chebyshev basis to monomial form.
fn cheb_combo_to_poly(c: &[f64]) -> RealPoly {
    let mut acc = RealPoly::zero();
    for (i, &ci) in c.iter().enumerate() {
        if ci != 0.0 {
            acc = acc.add(&classical_chebyshev(i).scale(ci));
        }
    }
    acc
}

/// Remez exchange on a single interval, in the normalized variable
/// `t = (x - mid)/half` so the linear algebra stays well conditioned.
fn remez_interval(set: &CompactSet, n: usize, cfg: &ExchangeConfig) -> Result<ChebyshevResult> {
    let iv = set.intervals()[0];
    if iv.len() == 0.0 {
        return Err(Error::DegenerateInterval { a: iv.lo, b: iv.hi });
    }
    let (mid, half) = (iv.mid(), 0.5 * iv.len());

    // reference: classical alternation nodes on [-1,1]
    let mut reference: Vec<f64> = (0..=n)
        .map(|j| -(std::f64::consts::PI * j as f64 / n as f64).cos())
        .collect();
    reference.sort_by(|x, y| x.partial_cmp(y).unwrap());

    let mut best: Option<(RealPoly, f64, Vec<f64>, f64)> = None;
    for _iter in 0..cfg.max_iters {
        // solve: t_j^n - sum_i c_i phi_i(t_j) = (-1)^j h on the reference
        let mut a = DMatrix::<f64>::zeros(n + 1, n + 1);
        let mut rhs = DVector::<f64>::zeros(n + 1);
        for (j, &t) in reference.iter().enumerate() {
            let row = cheb_basis_row(t, n + 1);
            for i in 0..n {
                a[(j, i)] = row[i];
            }
            a[(j, n)] = if j % 2 == 0 { 1.0 } else { -1.0 };
            rhs[j] = t.powi(n as i32);
        }
        let sol = a
            .lu()
            .solve(&rhs)
            .ok_or_else(|| Error::NoConvergence { gap: f64::INFINITY, tol: cfg.tol, iters: 0 })?;
        let c: Vec<f64> = sol.as_slice()[..n].to_vec();
        let h = sol[n];

        // error e(t) = t^n - sum c_i T_i(t)
        let e = RealPoly::monomial(n).sub(&cheb_combo_to_poly(&c));

        // next reference: endpoints + interior critical points of e
        let mut cand = vec![-1.0, 1.0];
        for r in real_roots(&e.derivative()) {
            if r > -1.0 && r < 1.0 {
                cand.push(r);
            }
        }
        cand.sort_by(|x, y| x.partial_cmp(y).unwrap());
        cand.dedup_by(|x, y| (*x - *y).abs() < 1e-13);

        let sup = cand.iter().map(|&t| e.eval(t).abs()).fold(0.0f64, f64::max);
        let gap = (sup - h.abs()).max(0.0);

        let poly_x = e.compose(&RealPoly::new(vec![-mid / half, 1.0 / half]))
            .scale(half.powi(n as i32));
        let alternation: Vec<f64> = cand.iter().map(|&t| mid + half * t).collect();
        let norm = sup * half.powi(n as i32);

        if best.as_ref().map_or(true, |b| gap < b.3) {
            best = Some((poly_x, norm, alternation, gap * half.powi(n as i32)));
        }
        if gap <= cfg.tol * sup.max(1e-300) || gap * half.powi(n as i32) <= cfg.tol {
            break;
        }
        if cand.len() == n + 1 {
            reference = cand;
        } else {
            // keep the n+1 candidates of largest |e| preserving order
            let mut idx: Vec<usize> = (0..cand.len()).collect();
            idx.sort_by(|&i, &j| {
                e.eval(cand[j]).abs().partial_cmp(&e.eval(cand[i]).abs()).unwrap()
            });
            let mut keep: Vec<f64> = idx[..n + 1].iter().map(|&i| cand[i]).collect();
            keep.sort_by(|x, y| x.partial_cmp(y).unwrap());
            reference = keep;
        }
    }
    let (mut poly, norm, alternation, gap) = best.unwrap();
    let lead = *poly.coeffs().last().unwrap();
    poly = poly.scale(1.0 / lead);
    Ok(ChebyshevResult {
        poly,
        norm,
        alternation_points: alternation,
        method: ChebyshevMethod::Exchange,
        gap,
    })
}

/// Dual certificate for the minimax problem restricted to `points`: a vector
/// `λ` with `λᵀ Φ = 0` yields the rigorous bound
/// `minimax >= |Σ λ_k f_k| / Σ |λ_k|` for every coefficient choice.
fn dual_bound(basis: &[Vec<f64>], target: &[f64], points: &[usize], n: usize) -> Option<(f64, Vec<f64>)> {
    if points.len() != n + 1 {
        return None;
    }
    // fix λ_0 = 1 and solve the remaining n x n system Φᵀ λ = 0
    let mut a = DMatrix::<f64>::zeros(n, n);
    let mut rhs = DVector::<f64>::zeros(n);
    for i in 0..n {
        rhs[i] = -basis[points[0]][i];
        for (j, &k) in points.iter().enumerate().skip(1) {
            a[(i, j - 1)] = basis[k][i];
        }
    }
    let sol = a.lu().solve(&rhs)?;
    let mut lambda = vec![1.0];
    lambda.extend_from_slice(sol.as_slice());
    let num: f64 = points.iter().zip(&lambda).map(|(&k, &l)| l * target[k]).sum();
    let denom: f64 = lambda.iter().map(|l| l.abs()).sum();
    if !num.is_finite() || !denom.is_finite() || denom == 0.0 {
        return None;
    }
    Some((num.abs() / denom, lambda))
}

/// Indices of local maxima of `|resid|` along the grid (per interval piece).
fn residual_peaks(grid: &[f64], resid: &[f64], set_t: &CompactSet) -> Vec<usize> {
    let mut peaks = Vec::new();
    for k in 0..grid.len() {
        let cur = resid[k].abs();
        let same_piece = |a: usize, b: usize| {
            set_t
                .intervals()
                .iter()
                .any(|iv| iv.contains(grid[a], 0.0) && iv.contains(grid[b], 0.0))
        };
        let left_ok = k == 0 || !same_piece(k - 1, k) || resid[k - 1].abs() <= cur;
        let right_ok = k + 1 == grid.len() || !same_piece(k, k + 1) || resid[k + 1].abs() <= cur;
        if left_ok && right_ok {
            peaks.push(k);
        }
    }
    peaks
}

/// Exchange iteration on a refining grid, used for unions of intervals.
/// Optimality is certified via dual lower bounds over reference subsets and a
/// continuous sup-norm upper bound; no alternation structure is assumed.
fn lawson_union(set: &CompactSet, n: usize, cfg: &ExchangeConfig) -> Result<ChebyshevResult> {
    // normalize to the hull so Chebyshev-basis rows are well scaled
    let (lo, hi) = (set.lo(), set.hi());
    let (mid, half) = (0.5 * (lo + hi), 0.5 * (hi - lo));
    let to_t = |x: f64| (x - mid) / half;
    let pairs: Vec<(f64, f64)> = set
        .intervals()
        .iter()
        .map(|iv| (to_t(iv.lo), to_t(iv.hi)))
        .collect();
    let set_t = CompactSet::new(&pairs).expect("normalized set stays valid");
    let scale = half.powi(n as i32);

    let mut grid_size = cfg.grid.max(16 * (n + 1));
    let mut lower_t = 0.0f64;
    let mut best: Option<(RealPoly, f64)> = None; // (e in t, upper_t)
    let mut iters_used = 0usize;

    'rounds: for _round in 0..6 {
        let grid = set_t.chebyshev_grid(grid_size);
        let npts = grid.len();
        let basis: Vec<Vec<f64>> = grid.iter().map(|&t| cheb_basis_row(t, n)).collect();
        let target: Vec<f64> = grid.iter().map(|&t| t.powi(n as i32)).collect();

        // initial coefficients from a plain least-squares fit
        let w = vec![1.0 / npts as f64; npts];
        let mut c = weighted_ls(&basis, &target, &w, n);

        while iters_used < cfg.max_iters {
            iters_used += 1;
            let resid: Vec<f64> = (0..npts).map(|k| target[k] - dot(&basis[k], &c)).collect();
            let max_e = resid.iter().fold(0.0f64, |m, r| m.max(r.abs()));

            // candidate references: (n+1)-subsets of the strongest peaks
            let mut peaks = residual_peaks(&grid, &resid, &set_t);
            peaks.sort_by(|&a, &b| resid[b].abs().partial_cmp(&resid[a].abs()).unwrap());
            peaks.truncate(n + 3);
            if peaks.len() < n + 1 {
                break;
            }
            let mut best_ref: Option<(f64, Vec<usize>, Vec<f64>)> = None;
            for drop_a in 0..peaks.len() {
                for drop_b in (drop_a + 1)..=peaks.len() {
                    let subset: Vec<usize> = peaks
                        .iter()
                        .enumerate()
                        .filter(|&(i, _)| i != drop_a && i != drop_b)
                        .map(|(_, &k)| k)
                        .collect();
                    if subset.len() != n + 1 {
                        continue;
                    }
                    if let Some((lb, lambda)) = dual_bound(&basis, &target, &subset, n) {
                        if best_ref.as_ref().map_or(true, |b| lb > b.0) {
                            best_ref = Some((lb, subset, lambda));
                        }
                    }
                }
            }
            // also the straight top-(n+1) subset
            let top: Vec<usize> = peaks.iter().copied().take(n + 1).collect();
            if let Some((lb, lambda)) = dual_bound(&basis, &target, &top, n) {
                if best_ref.as_ref().map_or(true, |b| lb > b.0) {
                    best_ref = Some((lb, top, lambda));
                }
            }
            let Some((lb, reference, lambda)) = best_ref else { break };
            lower_t = lower_t.max(lb);

            if max_e - lower_t <= 1e-14 * max_e.max(1e-300) {
                break;
            }

            // re-solve on the reference with the dual sign pattern
            let mut a = DMatrix::<f64>::zeros(n + 1, n + 1);
            let mut rhs = DVector::<f64>::zeros(n + 1);
            for (j, &k) in reference.iter().enumerate() {
                for i in 0..n {
                    a[(j, i)] = basis[k][i];
                }
                a[(j, n)] = lambda[j].signum();
                rhs[j] = target[k];
            }
            match a.lu().solve(&rhs) {
                Some(sol) => {
                    let newc: Vec<f64> = sol.as_slice()[..n].to_vec();
                    let new_max = (0..npts)
                        .map(|k| (target[k] - dot(&basis[k], &newc)).abs())
                        .fold(0.0f64, f64::max);
                    if new_max <= max_e {
                        c = newc;
                    } else {
                        break;
                    }
                }
                None => break,
            }
        }

        let e = RealPoly::monomial(n).sub(&cheb_combo_to_poly(&c));
        let upper_t = sup_norm(&e, &set_t).value;
        if best.as_ref().map_or(true, |b| upper_t < b.1) {
            best = Some((e, upper_t));
        }
        if best.as_ref().unwrap().1 - lower_t <= cfg.tol / scale.max(1e-300) {
            break 'rounds;
        }
        grid_size *= 2;
    }

    let (e, upper_t) = best.unwrap();
    let gap_t = (upper_t - lower_t).max(0.0);
    if gap_t * scale > cfg.tol {
        return Err(Error::NoConvergence {
            gap: gap_t * scale,
            tol: cfg.tol,
            iters: iters_used,
        });
    }

    let mut poly = e
        .compose(&RealPoly::new(vec![-mid / half, 1.0 / half]))
        .scale(scale);
    let lead = *poly.coeffs().last().unwrap();
    poly = poly.scale(1.0 / lead);
    let norm = sup_norm(&poly, set).value;
    let fine = set.chebyshev_grid(4096);
    let alternation: Vec<f64> = fine
        .iter()
        .copied()
        .filter(|&x| poly.eval(x).abs() >= (1.0 - 1e-6) * norm)
        .collect();
    Ok(ChebyshevResult {
        poly,
        norm,
        alternation_points: alternation,
        method: ChebyshevMethod::Exchange,
        gap: gap_t * scale,
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Solves `min_c sum_k w_k (f_k - row_k . c)^2`.
fn weighted_ls(basis: &[Vec<f64>], target: &[f64], w: &[f64], n: usize) -> Vec<f64> {
    let npts = basis.len();
    let mut a = DMatrix::<f64>::zeros(npts, n);
    let mut rhs = DVector::<f64>::zeros(npts);
    for k in 0..npts {
        let sw = w[k].sqrt();
        for i in 0..n {
            a[(k, i)] = sw * basis[k][i];
        }
        rhs[k] = sw * target[k];
    }
    let svd = a.svd(true, true);
    match svd.solve(&rhs, 1e-13) {
        Ok(sol) => sol.as_slice().to_vec(),
        Err(_) => vec![0.0; n],
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_unit_interval_degree_two() {
        let r = chebyshev_closed_form(-1.0, 1.0, 2).unwrap();
        assert!((r.norm - 0.5).abs() < 1e-12);
        let c = r.poly.coeffs();
        assert!((c[0] + 0.5).abs() < 1e-12);
        assert!(c[1].abs() < 1e-12);
        assert!((c[2] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_linear_and_shifted() {
        let r = chebyshev_closed_form(0.0, 1.0, 1).unwrap();
        assert!((r.norm - 0.5).abs() < 1e-12);
        assert!((r.poly.coeff(0) + 0.5).abs() < 1e-12);

        let r = chebyshev_closed_form(-0.5, 0.5, 2).unwrap();
        assert!((r.norm - 0.125).abs() < 1e-12);
        assert!((r.poly.coeff(0) + 0.125).abs() < 1e-12);
    }

    #[test]
    fn closed_form_rejects_degenerate() {
        assert!(matches!(
            chebyshev_closed_form(1.0, 1.0, 2),
            Err(Error::DegenerateInterval { .. })
        ));
    }

    #[test]
    fn exchange_matches_classical_on_unit_interval() {
        let k = CompactSet::interval(-1.0, 1.0).unwrap();
        let r = chebyshev(&k, 3, &ExchangeConfig::default()).unwrap();
        assert!((r.norm - 0.25).abs() < 1e-10, "norm {}", r.norm);
        assert!((r.poly.coeff(1) + 0.75).abs() < 1e-9);
        assert!(r.poly.coeff(0).abs() < 1e-9);
        assert_eq!(r.method, ChebyshevMethod::Exchange);
    }

    #[test]
    fn exchange_shifted_interval() {
        let k = CompactSet::interval(0.0, 1.0).unwrap();
        let r = chebyshev(&k, 2, &ExchangeConfig::default()).unwrap();
        // T^2 - T + 1/8, norm 1/8
        assert!((r.norm - 0.125).abs() < 1e-10);
        assert!((r.poly.coeff(0) - 0.125).abs() < 1e-8);
        assert!((r.poly.coeff(1) + 1.0).abs() < 1e-8);
    }

    #[test]
    fn exchange_on_symmetric_union() {
        // K = [-1,-1/2] u [1/2,1]; best monic quadratic is T^2 - 5/8, norm 3/8
        let k = CompactSet::new(&[(-1.0, -0.5), (0.5, 1.0)]).unwrap();
        let r = chebyshev(&k, 2, &ExchangeConfig::default()).unwrap();
        assert!((r.norm - 0.375).abs() < 1e-7, "norm {}", r.norm);
        assert!((r.poly.coeff(0) + 0.625).abs() < 1e-6, "c0 {}", r.poly.coeff(0));
        assert!(r.poly.coeff(1).abs() < 1e-6);
    }

    #[test]
    fn alternation_on_single_interval() {
        let k = CompactSet::interval(-1.0, 1.0).unwrap();
        let r = chebyshev(&k, 4, &ExchangeConfig::default()).unwrap();
        assert_eq!(r.alternation_points.len(), 5);
        let mut last_sign = 0.0;
        for &x in &r.alternation_points {
            let v = r.poly.eval(x);
            assert!((v.abs() - r.norm).abs() < 1e-7);
            assert!(v.signum() != last_sign);
            last_sign = v.signum();
        }
    }
}
