//! Exact field elements: rationals with an optional exact imaginary part.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};

use crate::{Error, Result};

/// An exact scalar `re + im·i` with arbitrary-precision rational parts.
///
/// Over the rational field the imaginary part is identically zero; the same
/// type serves both fields so that algebra code stays field-agnostic.
/// Arithmetic never rounds.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Scalar {
    re: BigRational,
    im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::zero() }
    }

    pub fn one() -> Self {
        Scalar { re: BigRational::one(), im: BigRational::zero() }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar { re: BigRational::zero(), im: BigRational::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar { re: BigRational::from_integer(BigInt::from(n)), im: BigRational::zero() }
    }

    pub fn from_ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(numer), BigInt::from(denom)),
            im: BigRational::zero(),
        }
    }

    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        assert!(re_den != 0 && im_den != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Complex conjugate; the identity on real scalars.
    pub fn conj(&self) -> Self {
        Scalar { re: self.re.clone(), im: -self.im.clone() }
    }

    /// `s · conj(s)` as a rational. Nonnegative, and zero iff `s = 0`.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Exact multiplicative inverse.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sq();
        Ok(Scalar { re: &self.re / &n, im: -(&self.im / &n) })
    }

    pub fn pow_sign(exponent: u64) -> Self {
        // (-1)^exponent
        if exponent % 2 == 0 {
            Scalar::one()
        } else {
            -Scalar::one()
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar { re: &self.re - &rhs.re, im: &self.im - &rhs.im }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { re: -self.re.clone(), im: -self.im.clone() }
    }
}

macro_rules! forward_owned_binop {
    ($trait_:ident, $fn_:ident) => {
        impl $trait_ for Scalar {
            type Output = Scalar;
            fn $fn_(self, rhs: Scalar) -> Scalar {
                $trait_::$fn_(&self, &rhs)
            }
        }
        impl $trait_<&Scalar> for Scalar {
            type Output = Scalar;
            fn $fn_(self, rhs: &Scalar) -> Scalar {
                $trait_::$fn_(&self, rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
forward_owned_binop!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

fn write_rational(f: &mut fmt::Formatter<'_>, r: &BigRational) -> fmt::Result {
    if r.denom().is_one() {
        write!(f, "{}", r.numer())
    } else {
        write!(f, "{}/{}", r.numer(), r.denom())
    }
}

/// Canonical text form. Real scalars print as `n` or `n/d`; scalars with an
/// imaginary part print parenthesized, e.g. `(1/2+3/4i)`, so they bind as a
/// single coefficient inside product expressions.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write_rational(f, &self.re);
        }
        write!(f, "(")?;
        let mut lead = true;
        if !self.re.is_zero() {
            write_rational(f, &self.re)?;
            lead = false;
        }
        if self.im.is_positive() && !lead {
            write!(f, "+")?;
        }
        if self.im == -BigRational::one() {
            write!(f, "-")?;
        } else if !self.im.is_one() {
            write_rational(f, &self.im)?;
        }
        write!(f, "i)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_is_exact() {
        let a = Scalar::from_ratio(1, 3);
        let b = Scalar::from_ratio(1, 6);
        assert_eq!(&a + &b, Scalar::from_ratio(1, 2));
        let third = &(&a * &Scalar::from_int(3)) - &Scalar::one();
        assert!(third.is_zero());
    }

    #[test]
    fn conjugation_involutive() {
        let s = Scalar::from_parts(2, 3, -5, 7);
        assert_eq!(s.conj().conj(), s);
        assert_eq!(Scalar::from_int(4).conj(), Scalar::from_int(4));
    }

    #[test]
    fn norm_square_positive_definite() {
        let s = Scalar::from_parts(3, 5, 4, 5);
        assert_eq!(s.norm_sq(), BigRational::one());
        assert!(Scalar::zero().norm_sq().is_zero());
        assert!(Scalar::from_parts(0, 1, 1, 9).norm_sq() > BigRational::zero());
    }

    #[test]
    fn inverse_multiplies_to_one() {
        let s = Scalar::from_parts(2, 1, -3, 4);
        assert!((&s * &s.inv().unwrap()).is_one());
        assert_eq!(Scalar::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Scalar::from_int(-3).to_string(), "-3");
        assert_eq!(Scalar::from_ratio(3, -4).to_string(), "-3/4");
        assert_eq!(Scalar::from_parts(1, 2, 3, 4).to_string(), "(1/2+3/4i)");
        assert_eq!(Scalar::from_parts(0, 1, -1, 1).to_string(), "(-i)");
        assert_eq!(Scalar::from_parts(1, 1, -2, 1).to_string(), "(1-2i)");
        assert_eq!(Scalar::i().to_string(), "(i)");
    }
}
