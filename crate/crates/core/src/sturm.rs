//! Exact Sturm sequences over ℚ for certified real-root counting.

use crate::poly::{IntPoly, RatPoly};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Sturm chain of `p`: `p, p', -rem(...), ...` down to a constant.
pub fn sturm_chain(p: &RatPoly) -> Vec<RatPoly> {
    let mut chain = Vec::new();
    if p.is_zero() {
        return chain;
    }
    chain.push(p.clone());
    let dp = p.derivative();
    if dp.is_zero() {
        return chain;
    }
    chain.push(dp);
    loop {
        let len = chain.len();
        let (_, rem) = chain[len - 2].div_rem(&chain[len - 1]);
        if rem.is_zero() {
            break;
        }
        chain.push(rem.scale(&-BigRational::one()));
    }
    chain
}

fn sign(v: &BigRational) -> i8 {
    if v.is_zero() {
        0
    } else if v.is_positive() {
        1
    } else {
        -1
    }
}

/// Number of sign variations of the chain at `x`.
fn variations_at(chain: &[RatPoly], x: &BigRational) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let s = sign(&p.eval(x));
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Sign variations at +inf / -inf from leading coefficients.
fn variations_at_infinity(chain: &[RatPoly], positive: bool) -> usize {
    let mut count = 0;
    let mut last = 0i8;
    for p in chain {
        let lead = p.coeffs().last().cloned().unwrap_or_else(BigRational::zero);
        let mut s = sign(&lead);
        if !positive && p.degree() % 2 == 1 {
            s = -s;
        }
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

/// Exact number of distinct real roots of `p` in the closed interval `[a, b]`.
pub fn count_roots_closed(p: &IntPoly, a: &BigRational, b: &BigRational) -> usize {
    assert!(a <= b);
    let rp = p.to_rat();
    let chain = sturm_chain(&rp);
    if chain.is_empty() {
        return 0;
    }
    // roots in (a, b] plus possibly the left endpoint
    let mut count = variations_at(&chain, a) - variations_at(&chain, b);
    if p.eval_rational(a).is_zero() {
        count += 1;
    }
    count
}

/// Exact number of distinct real roots of `p` over all of ℝ.
pub fn count_real_roots(p: &IntPoly) -> usize {
    let rp = p.to_rat();
    let chain = sturm_chain(&rp);
    if chain.is_empty() {
        return 0;
    }
    variations_at_infinity(&chain, false) - variations_at_infinity(&chain, true)
}

/// True iff `p` has no repeated complex roots (gcd(p, p') constant).
pub fn is_squarefree(p: &IntPoly) -> bool {
    if p.is_zero() || p.degree() == 0 {
        return false;
    }
    let chain = sturm_chain(&p.to_rat());
    chain.last().map_or(false, |g| g.degree() == 0)
}

/// Convenience: exact rational from an f64 (which is always a dyadic).
pub fn rat(x: f64) -> BigRational {
    BigRational::from_float(x).expect("finite float")
}

/// Exact rational from integer.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts_roots_of_quadratics() {
        let p = IntPoly::from_i64(&[-2, 0, 1]); // T^2 - 2
        assert_eq!(count_real_roots(&p), 2);
        assert_eq!(count_roots_closed(&p, &rat_int(0), &rat_int(2)), 1);
        assert_eq!(count_roots_closed(&p, &rat_int(-2), &rat_int(2)), 2);
        assert_eq!(count_roots_closed(&p, &rat_int(2), &rat_int(3)), 0);

        let q = IntPoly::from_i64(&[1, 0, 1]); // T^2 + 1
        assert_eq!(count_real_roots(&q), 0);
    }

    #[test]
    fn closed_interval_endpoints_count() {
        let p = IntPoly::from_i64(&[0, 1]); // T
        assert_eq!(count_roots_closed(&p, &rat_int(0), &rat_int(1)), 1);
        assert_eq!(count_roots_closed(&p, &rat_int(-1), &rat_int(0)), 1);
    }

    #[test]
    fn squarefree_detection() {
        assert!(is_squarefree(&IntPoly::from_i64(&[-1, 0, 1])));
        // (T-1)^2
        assert!(!is_squarefree(&IntPoly::from_i64(&[1, -2, 1])));
    }

    #[test]
    fn golden_minimal_polynomial_has_two_real_roots() {
        let p = IntPoly::from_i64(&[-1, -1, 1]); // T^2 - T - 1
        assert_eq!(count_real_roots(&p), 2);
        assert_eq!(count_roots_closed(&p, &rat(-1.9), &rat(1.9)), 2);
        assert_eq!(count_roots_closed(&p, &rat(-0.5), &rat(1.9)), 1);
    }
}
