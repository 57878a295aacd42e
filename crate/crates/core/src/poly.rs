//! Dense univariate polynomials over ℝ (f64), ℤ (big integers) and ℚ.
//!
//! Coefficients are stored ascending by degree and kept in canonical form:
//! no trailing zero coefficients, empty vector = zero polynomial.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// Polynomial with f64 coefficients, ascending by degree.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealPoly {
    coeffs: Vec<f64>,
}

/// Polynomial with arbitrary-precision integer coefficients, ascending by degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Polynomial with exact rational coefficients; internal workhorse for Sturm
/// chains, base-Q expansions and CRT combinations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RealPoly {
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        RealPoly { coeffs }
    }

    pub fn zero() -> Self {
        RealPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `T^n`.
    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![0.0; n + 1];
        coeffs[n] = 1.0;
        RealPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> f64 {
        self.coeffs.get(i).copied().unwrap_or(0.0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; zero polynomial reports degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&1.0)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn add(&self, other: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RealPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &RealPoly) -> RealPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RealPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &RealPoly) -> RealPoly {
        if self.is_zero() || other.is_zero() {
            return RealPoly::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RealPoly::new(out)
    }

    pub fn scale(&self, c: f64) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Composition `self(inner(T))`, by Horner on polynomials.
    pub fn compose(&self, inner: &RealPoly) -> RealPoly {
        let mut acc = RealPoly::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&RealPoly::constant(c));
        }
        acc
    }

    pub fn derivative(&self) -> RealPoly {
        if self.coeffs.len() <= 1 {
            return RealPoly::zero();
        }
        RealPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| i as f64 * c)
                .collect(),
        )
    }

    pub fn pow(&self, mut n: usize) -> RealPoly {
        let mut base = self.clone();
        let mut acc = RealPoly::constant(1.0);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Rounds to an integer polynomial; `Some` only when every coefficient is
    /// within `tol` of an integer.
    pub fn round_to_int(&self, tol: f64) -> Option<IntPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            let r = c.round();
            if (c - r).abs() > tol {
                return None;
            }
            coeffs.push(BigInt::from(r as i64));
        }
        Some(IntPoly::new(coeffs))
    }
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_i64(&[c])
    }

    pub fn monomial(n: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] = BigInt::from(1);
        IntPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().map_or(false, |c| *c == BigInt::from(1))
    }

    /// Floating-point Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::INFINITY))
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from(c.clone()))
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn compose(&self, inner: &IntPoly) -> IntPoly {
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&IntPoly::new(vec![c.clone()]));
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn pow(&self, mut n: usize) -> IntPoly {
        let mut base = self.clone();
        let mut acc = IntPoly::constant(1);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Exact division; `Some(quotient)` iff `divisor` divides `self` exactly
    /// over ℤ. `divisor` must be monic or have a leading coefficient dividing
    /// every intermediate remainder step for the division to succeed.
    pub fn div_exact(&self, divisor: &IntPoly) -> Option<IntPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let lead = divisor.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let qdeg = self.degree() - divisor.degree();
        let mut q = vec![BigInt::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let top = rem[k + divisor.degree()].clone();
            if (&top % &lead) != BigInt::zero() {
                return None;
            }
            let f = &top / &lead;
            q[k] = f.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &f * d;
            }
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(q))
    }

    /// Remainder of `self` modulo a monic integer polynomial; exact over ℤ.
    pub fn rem_monic(&self, modulus: &IntPoly) -> IntPoly {
        assert!(modulus.is_monic(), "modulus must be monic");
        let d = modulus.degree();
        let mut rem = self.coeffs.clone();
        while rem.len() > d {
            let top = rem.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let k = rem.len() - d;
            for (j, c) in modulus.coeffs.iter().take(d).enumerate() {
                rem[k + j] -= &top * c;
            }
        }
        IntPoly::new(rem)
    }

    /// Content (gcd of coefficients, positive); zero polynomial reports 0.
    pub fn content(&self) -> BigInt {
        use num_integer::Integer;
        self.coeffs
            .iter()
            .fold(BigInt::zero(), |acc, c| acc.gcd(&c.abs()))
    }

    pub fn to_real(&self) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::INFINITY)).collect())
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly::new(self.coeffs.iter().cloned().map(BigRational::from).collect())
    }
}

impl RatPoly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        RatPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        RatPoly::new(out)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        RatPoly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> RatPoly {
        if self.coeffs.len() <= 1 {
            return RatPoly::zero();
        }
        RatPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from(BigInt::from(i)))
                .collect(),
        )
    }

    /// Euclidean division: returns `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &RatPoly) -> (RatPoly, RatPoly) {
        assert!(!divisor.is_zero(), "division by zero polynomial");
        if self.is_zero() || self.degree() < divisor.degree() {
            return (RatPoly::zero(), self.clone());
        }
        let lead = divisor.coeffs.last().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let qdeg = self.degree() - divisor.degree();
        let mut q = vec![BigRational::zero(); qdeg + 1];
        for k in (0..=qdeg).rev() {
            let f = &rem[k + divisor.degree()] / &lead;
            q[k] = f.clone();
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let prod = &f * d;
                rem[k + j] -= prod;
            }
        }
        (RatPoly::new(q), RatPoly::new(rem))
    }

    /// Converts from floats; each coefficient becomes its exact dyadic value.
    pub fn from_real_exact(p: &RealPoly) -> RatPoly {
        RatPoly::new(
            p.coeffs()
                .iter()
                .map(|&c| BigRational::from_float(c).expect("finite coefficient"))
                .collect(),
        )
    }

    pub fn to_real(&self) -> RealPoly {
        RealPoly::new(self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect())
    }

    /// `Some(IntPoly)` iff every coefficient is an integer.
    pub fn to_int_exact(&self) -> Option<IntPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.to_integer());
        }
        Some(IntPoly::new(coeffs))
    }
}

/// Pretty-prints a real polynomial in ascending order, for diagnostics.
impl std::fmt::Display for RealPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            if !first {
                write!(f, " {} ", if c < 0.0 { "-" } else { "+" })?;
            } else if c < 0.0 {
                write!(f, "-")?;
            }
            first = false;
            match i {
                0 => write!(f, "{}", c.abs())?,
                1 => write!(f, "{}*T", c.abs())?,
                _ => write!(f, "{}*T^{}", c.abs(), i)?,
            }
        }
        Ok(())
    }
}

impl std::fmt::Display for IntPoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.to_real().fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn eval_examples() {
        // T^2 - 2 at 0
        assert_eq!(RealPoly::new(vec![-2.0, 0.0, 1.0]).eval(0.0), -2.0);
        // 2T - 2T^2 at 0.5, hand arithmetic: 1 - 0.5 = 0.5
        assert_eq!(RealPoly::new(vec![0.0, 2.0, -2.0]).eval(0.5), 0.5);
        assert_eq!(RealPoly::zero().eval(123.0), 0.0);
    }

    #[test]
    fn exact_rational_eval() {
        // 2T - 2T^2 at 1/2 exactly
        let p = IntPoly::from_i64(&[0, 2, -2]);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        assert_eq!(p.eval_rational(&half), BigRational::new(BigInt::from(1), BigInt::from(2)));
    }

    #[test]
    fn arith_examples() {
        let tm1 = RealPoly::new(vec![-1.0, 1.0]);
        let tp1 = RealPoly::new(vec![1.0, 1.0]);
        assert_eq!(tm1.mul(&tp1), RealPoly::new(vec![-1.0, 0.0, 1.0]));

        let sq = RealPoly::new(vec![0.0, 0.0, 1.0]);
        assert_eq!(sq.compose(&tp1), RealPoly::new(vec![1.0, 2.0, 1.0]));

        assert!(!RealPoly::new(vec![1.0, 0.0, 2.0]).is_monic());
        assert!(RealPoly::new(vec![1.0, 0.0, 1.0]).is_monic());
    }

    #[test]
    fn canonical_form_trims_trailing_zeros() {
        let p = RealPoly::new(vec![1.0, 2.0, 0.0, 0.0]);
        assert_eq!(p.degree(), 1);
        let q = IntPoly::from_i64(&[0, 0, 0]);
        assert!(q.is_zero());
    }

    #[test]
    fn int_division() {
        let p = IntPoly::from_i64(&[-1, 0, 1]); // T^2 - 1
        let d = IntPoly::from_i64(&[-1, 1]); // T - 1
        assert_eq!(p.div_exact(&d).unwrap(), IntPoly::from_i64(&[1, 1]));
        assert!(p.div_exact(&IntPoly::from_i64(&[-2, 1])).is_none());
    }

    #[test]
    fn rem_monic_reduces_degree() {
        // T^3 mod T^2 - 2 = 2T
        let p = IntPoly::monomial(3);
        let m = IntPoly::from_i64(&[-2, 0, 1]);
        assert_eq!(p.rem_monic(&m), IntPoly::from_i64(&[0, 2]));
    }

    #[test]
    fn rat_div_rem() {
        let p = IntPoly::from_i64(&[2, 0, 3, 1]).to_rat();
        let d = IntPoly::from_i64(&[1, 1]).to_rat();
        let (q, r) = p.div_rem(&d);
        assert_eq!(q.add(&RatPoly::zero()).mul(&d).add(&r), p);
    }
}
