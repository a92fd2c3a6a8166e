//! Dense univariate polynomials over unbounded integers and rationals.
//!
//! Coefficients are stored in ascending degree order with no trailing zeros;
//! the zero polynomial is the empty coefficient sequence, its degree is
//! `None`. All arithmetic is exact.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A polynomial with `BigInt` coefficients, ascending degree order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Build from ascending machine-integer coefficients.
    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    /// The constant polynomial 1.
    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        assert!(n > 0, "x^0 - 1 is the zero polynomial; pass n >= 1");
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[0] = -BigInt::one();
        coeffs[n] = BigInt::one();
        IntPolynomial { coeffs }
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// True for the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `x^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Ascending coefficient slice (no trailing zeros).
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Leading coefficient, `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// True if nonzero with leading coefficient 1.
    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// True if coefficient `k` equals coefficient `deg - k` for all `k`.
    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|k| self.coeffs[k] == self.coeffs[n - 1 - k])
    }

    /// Exact evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact evaluation at a rational point.
    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    /// Floating-point evaluation (for the numeric spectrum checks only).
    pub fn eval_f64(&self, x: f64) -> f64 {
        let mut acc = 0.0;
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c.to_f64().expect("coefficient out of f64 range");
        }
        acc
    }

    /// Multiply by the scalar `c`.
    pub fn scale(&self, c: &BigInt) -> IntPolynomial {
        if c.is_zero() {
            return IntPolynomial::zero();
        }
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Multiply by `x^k`.
    pub fn mul_xpow(&self, k: usize) -> IntPolynomial {
        if self.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPolynomial { coeffs }
    }

    /// `self^e` by repeated squaring.
    pub fn pow(&self, e: u32) -> IntPolynomial {
        let mut result = IntPolynomial::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Substitution `self(other(x))` by Horner's scheme.
    pub fn compose(&self, other: &IntPolynomial) -> IntPolynomial {
        let mut acc = IntPolynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * other) + &IntPolynomial::from_coeffs(vec![c.clone()]);
        }
        acc
    }

    /// The polynomial `self(-x)` (odd coefficients negated).
    pub fn flip_argument(&self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, c)| if k % 2 == 1 { -c } else { c.clone() })
                .collect(),
        }
    }

    /// Exact division: returns `q` with `self = q * den`, or
    /// `Error::InexactDivision` if the remainder is nonzero or a quotient
    /// coefficient would not be an integer. Used as the "not a factor"
    /// signal during cyclotomic trial division.
    pub fn div_exact(&self, den: &IntPolynomial) -> Result<IntPolynomial> {
        assert!(!den.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Ok(IntPolynomial::zero());
        }
        let n = self.degree().unwrap();
        let d = den.degree().unwrap();
        if n < d {
            return Err(Error::InexactDivision);
        }
        let lead = den.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - d + 1];
        for k in (0..=n - d).rev() {
            let top = rem[k + d].clone();
            if top.is_zero() {
                continue;
            }
            let (q, r) = num_integer::Integer::div_rem(&top, &lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision);
            }
            for j in 0..=d {
                let sub = &q * &den.coeffs[j];
                rem[k + j] -= sub;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision);
        }
        Ok(IntPolynomial::from_coeffs(quot))
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|k| {
                let mut c = self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero);
                if let Some(b) = rhs.coeffs.get(k) {
                    c += b;
                }
                c
            })
            .collect();
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPolynomial::from_coeffs(coeffs)
    }
}

impl fmt::Display for IntPolynomial {
    /// Renders in descending powers with explicit signs and `x^k` syntax,
    /// omitting unit coefficients: `x^5 - x^3 - x^2 + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for k in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[k];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            match (k, unit) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

/// A polynomial with exact rational coefficients, ascending degree order.
///
/// Intermediate carrier for argument rescalings such as `q(x/2)` before
/// integrality is restored; `BigRational` keeps every coefficient reduced
/// with a positive denominator.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Ascending coefficient slice.
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// The polynomial `self(c * x)`.
    pub fn scale_argument(&self, c: &BigRational) -> RationalPolynomial {
        let mut pow = BigRational::one();
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let v = a * &pow;
                pow = &pow * c;
                v
            })
            .collect();
        RationalPolynomial::from_coeffs(coeffs)
    }

    /// Substitution `self(other(x))` by Horner's scheme.
    pub fn compose(&self, other: &RationalPolynomial) -> RationalPolynomial {
        let mut acc = RationalPolynomial::default();
        for c in self.coeffs.iter().rev() {
            let mut next = acc.mul(other);
            if next.coeffs.is_empty() {
                next.coeffs.push(c.clone());
            } else {
                next.coeffs[0] += c;
            }
            acc = RationalPolynomial::from_coeffs(next.coeffs);
        }
        acc
    }

    fn mul(&self, rhs: &RationalPolynomial) -> RationalPolynomial {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return RationalPolynomial::default();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RationalPolynomial::from_coeffs(coeffs)
    }

    /// Convert back to an integer polynomial if every coefficient is an
    /// integer.
    pub fn to_int_polynomial(&self) -> Option<IntPolynomial> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.to_integer());
        }
        Some(IntPolynomial::from_coeffs(coeffs))
    }
}

impl From<&IntPolynomial> for RationalPolynomial {
    fn from(p: &IntPolynomial) -> Self {
        RationalPolynomial {
            coeffs: p
                .coeffs
                .iter()
                .map(|c| BigRational::from(c.clone()))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(cs: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(cs)
    }

    #[test]
    fn normalization_strips_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]), p(&[1, 2]));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(p(&[0]).degree(), None);
        assert_eq!(p(&[5]).degree(), Some(0));
    }

    #[test]
    fn difference_of_squares() {
        // (x+1)(x-1) = x^2 - 1
        assert_eq!(&p(&[1, 1]) * &p(&[-1, 1]), p(&[-1, 0, 1]));
    }

    #[test]
    fn additive_identity() {
        let q = p(&[3, 0, -2, 7]);
        assert_eq!(&IntPolynomial::zero() + &q, q);
    }

    #[test]
    fn table3_product_entry() {
        // (x^2-1)(x^3-1) = x^5 - x^3 - x^2 + 1
        let lhs = &IntPolynomial::x_pow_minus_one(2) * &IntPolynomial::x_pow_minus_one(3);
        assert_eq!(lhs, p(&[1, 0, -1, -1, 0, 1]));
    }

    #[test]
    fn exact_division_basics() {
        // (x^2-1)/(x-1) = x+1
        assert_eq!(p(&[-1, 0, 1]).div_exact(&p(&[-1, 1])).unwrap(), p(&[1, 1]));
        // (x^2+1)/(x-1) leaves remainder 2
        assert_eq!(
            p(&[1, 0, 1]).div_exact(&p(&[-1, 1])),
            Err(Error::InexactDivision)
        );
    }

    #[test]
    fn exact_division_x5_minus_one() {
        // Long-division oracle: the quotient times the divisor reproduces
        // the dividend.
        let num = IntPolynomial::x_pow_minus_one(5);
        let den = p(&[-1, 1]);
        let q = num.div_exact(&den).unwrap();
        assert_eq!(q, p(&[1, 1, 1, 1, 1]));
        assert_eq!(&q * &den, num);
    }

    #[test]
    fn division_detects_nonintegral_quotient() {
        // (x^2)/(2x) = x/2 is not integral.
        assert_eq!(
            p(&[0, 0, 1]).div_exact(&p(&[0, 2])),
            Err(Error::InexactDivision)
        );
        // But (2x^2 + 4x + 2)/(2x + 2) = x + 1 is.
        assert_eq!(
            p(&[2, 4, 2]).div_exact(&p(&[2, 2])).unwrap(),
            p(&[1, 1])
        );
    }

    #[test]
    fn compose_shift() {
        // (x^2)(x - 2) composed: (x-2)^2 = x^2 - 4x + 4
        let sq = p(&[0, 0, 1]);
        let shift = p(&[-2, 1]);
        assert_eq!(sq.compose(&shift), p(&[4, -4, 1]));
    }

    #[test]
    fn display_format() {
        assert_eq!(p(&[1, 0, -1, -1, 0, 1]).to_string(), "x^5 - x^3 - x^2 + 1");
        assert_eq!(p(&[0, -16, 0, 0, 16]).to_string(), "16x^4 - 16x");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[-3]).to_string(), "-3");
        assert_eq!(p(&[0, 1]).to_string(), "x");
        assert_eq!(p(&[2, -2]).to_string(), "-2x + 2");
    }

    #[test]
    fn rational_rescale_and_restore() {
        // q(x) = 16x^4 - 16x^2; a(x) = q(x/2) = x^4 - 4x^2.
        let q = p(&[0, 0, -16, 0, 16]);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let a = RationalPolynomial::from(&q).scale_argument(&half);
        assert_eq!(a.to_int_polynomial().unwrap(), p(&[0, 0, -4, 0, 1]));
    }

    #[test]
    fn rational_compose_affine() {
        // p(x) = x^2; p(x/2 - 1) = x^2/4 - x + 1.
        let sq = RationalPolynomial::from(&p(&[0, 0, 1]));
        let arg = RationalPolynomial::from_coeffs(vec![
            BigRational::from(BigInt::from(-1)),
            BigRational::new(BigInt::from(1), BigInt::from(2)),
        ]);
        let got = sq.compose(&arg);
        assert_eq!(
            got.coeffs(),
            &[
                BigRational::from(BigInt::from(1)),
                BigRational::from(BigInt::from(-1)),
                BigRational::new(BigInt::from(1), BigInt::from(4)),
            ]
        );
    }
}
