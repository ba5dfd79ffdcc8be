//! Dense univariate polynomials in `t` with arbitrary-precision integer
//! coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// `coeffs[i]` is the coefficient of `t^i`. Trailing zeros are never stored,
/// so the zero polynomial has no coefficients and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TPoly {
    coeffs: Vec<BigInt>,
}

impl TPoly {
    pub fn zero() -> Self {
        TPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        TPoly::constant(BigInt::one())
    }

    pub fn t() -> Self {
        TPoly::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        TPoly::from_coeffs(vec![c.into()])
    }

    /// `c * t^power`
    pub fn monomial(c: impl Into<BigInt>, power: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); power + 1];
        coeffs[power] = c.into();
        TPoly::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        TPoly { coeffs }
    }

    /// From machine-integer counts indexed by power of `t`.
    pub fn from_counts<T: Into<BigInt> + Copy>(counts: &[T]) -> Self {
        TPoly::from_coeffs(counts.iter().map(|&c| c.into()).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> BigInt {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Horner evaluation.
    pub fn eval(&self, t: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * t + c)
    }

    /// Sum of coefficients, i.e. the value at `t = 1`.
    pub fn at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    fn combine(&mut self, other: &TPoly, negate: bool) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigInt::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            if negate {
                *a -= b;
            } else {
                *a += b;
            }
        }
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl AddAssign<&TPoly> for TPoly {
    fn add_assign(&mut self, rhs: &TPoly) {
        self.combine(rhs, false);
    }
}

impl SubAssign<&TPoly> for TPoly {
    fn sub_assign(&mut self, rhs: &TPoly) {
        self.combine(rhs, true);
    }
}

impl Add for &TPoly {
    type Output = TPoly;
    fn add(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &TPoly {
    type Output = TPoly;
    fn sub(self, rhs: &TPoly) -> TPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &TPoly {
    type Output = TPoly;
    fn neg(self) -> TPoly {
        TPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &TPoly) -> TPoly {
        if self.is_zero() || rhs.is_zero() {
            return TPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TPoly::from_coeffs(coeffs)
    }
}

impl Mul<&BigInt> for &TPoly {
    type Output = TPoly;
    fn mul(self, rhs: &BigInt) -> TPoly {
        TPoly::from_coeffs(self.coeffs.iter().map(|c| c * rhs).collect())
    }
}

/// Lowest degree first: `1+t`, `3-2t+t^2`, `0`.
impl fmt::Display for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (power, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            let unit = magnitude.is_one();
            match power {
                0 => write!(f, "{magnitude}")?,
                _ if !unit => write!(f, "{magnitude}")?,
                _ => {}
            }
            match power {
                0 => {}
                1 => write!(f, "t")?,
                p => write!(f, "t^{p}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TPoly({self})")
    }
}

impl From<BigInt> for TPoly {
    fn from(c: BigInt) -> Self {
        TPoly::from_coeffs(vec![c])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(cs: &[i64]) -> TPoly {
        TPoly::from_counts(cs)
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        assert_eq!(poly(&[1, 0, 0]), poly(&[1]));
        assert!(poly(&[0, 0]).is_zero());
        assert_eq!(poly(&[0, 0]).degree(), None);
        assert_eq!(&poly(&[1, 1]) - &poly(&[0, 1]), TPoly::one());
        assert_eq!((&TPoly::t() - &TPoly::t()).coeffs().len(), 0);
    }

    #[test]
    fn rendering() {
        assert_eq!(poly(&[1, 1]).to_string(), "1+t");
        assert_eq!(poly(&[3, -2, 1]).to_string(), "3-2t+t^2");
        assert_eq!(poly(&[0, 0, 5]).to_string(), "5t^2");
        assert_eq!(poly(&[-1]).to_string(), "-1");
        assert_eq!(TPoly::zero().to_string(), "0");
    }

    #[test]
    fn evaluation() {
        let p = poly(&[1, 1]);
        assert_eq!(p.at_one(), BigInt::from(2));
        assert_eq!(poly(&[0, 0, 1]).at_one(), BigInt::from(1));
        assert_eq!(poly(&[3, -2, 1]).eval(&BigInt::from(-2)), BigInt::from(11));
    }

    proptest! {
        #[test]
        fn ring_laws(a in prop::collection::vec(-50i64..50, 0..6),
                     b in prop::collection::vec(-50i64..50, 0..6),
                     c in prop::collection::vec(-50i64..50, 0..6),
                     x in -5i64..5) {
            let (a, b, c) = (poly(&a), poly(&b), poly(&c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a - &b) + &b, a.clone());
            prop_assert_eq!(&a + &(-&a), TPoly::zero());
            let x = BigInt::from(x);
            prop_assert_eq!((&a * &b).eval(&x), a.eval(&x) * b.eval(&x));
        }
    }
}
