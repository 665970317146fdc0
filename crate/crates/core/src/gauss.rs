//! Exact Gaussian rationals `p/q + (r/s)i`.
//!
//! Components are `Ratio<i128>`. Every operation is checked; an overflow of
//! the 128-bit backing store panics instead of wrapping, so a result is either
//! exact or absent.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i128>;

fn add_q(a: &Rational, b: &Rational) -> Rational {
    a.checked_add(b).expect("rational overflow in addition")
}

fn sub_q(a: &Rational, b: &Rational) -> Rational {
    a.checked_sub(b).expect("rational overflow in subtraction")
}

fn mul_q(a: &Rational, b: &Rational) -> Rational {
    a.checked_mul(b).expect("rational overflow in multiplication")
}

fn div_q(a: &Rational, b: &Rational) -> Rational {
    a.checked_div(b).expect("rational overflow in division")
}

/// Builds `num/den` as an exact rational.
pub fn q(num: i128, den: i128) -> Rational {
    Rational::new(num, den)
}

/// Parses `"p"` or `"p/q"` (optional leading sign) into an exact rational.
pub fn parse_rational(src: &str) -> Result<Rational> {
    let s = src.trim();
    let bad = || Error::InvalidRational(src.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: i128 = n.trim().parse().map_err(|_| bad())?;
            let d: i128 = d.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(Error::DivisionByZero);
            }
            Ok(Rational::new(n, d))
        }
        None => s.parse::<i128>().map(Rational::from_integer).map_err(|_| bad()),
    }
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// An element of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Gauss {
    pub re: Rational,
    pub im: Rational,
}

impl Gauss {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self { re, im: Rational::zero() }
    }

    pub fn int(n: i128) -> Self {
        Self::real(Rational::from_integer(n))
    }

    pub fn frac(num: i128, den: i128) -> Self {
        Self::real(q(num, den))
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Self { re: Rational::zero(), im: Rational::one() }
    }

    /// `i^k`.
    pub fn i_pow(k: u32) -> Self {
        match k % 4 {
            0 => Self::one(),
            1 => Self::i(),
            2 => -Self::one(),
            _ => -Self::i(),
        }
    }

    pub fn conj(&self) -> Self {
        Self { re: self.re, im: -self.im }
    }

    pub fn norm_sqr(&self) -> Rational {
        add_q(&mul_q(&self.re, &self.re), &mul_q(&self.im, &self.im))
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn checked_inv(&self) -> Result<Self> {
        let n = self.norm_sqr();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { re: div_q(&self.re, &n), im: div_q(&-self.im, &n) })
    }

    pub fn scale(&self, k: &Rational) -> Self {
        Self { re: mul_q(&self.re, k), im: mul_q(&self.im, k) }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Lossy conversion for the numeric layer.
    pub fn to_f64_pair(&self) -> (f64, f64) {
        let f = |r: &Rational| *r.numer() as f64 / *r.denom() as f64;
        (f(&self.re), f(&self.im))
    }
}

impl Zero for Gauss {
    fn zero() -> Self {
        Self { re: Rational::zero(), im: Rational::zero() }
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for Gauss {
    fn one() -> Self {
        Self::real(Rational::one())
    }
}

impl From<Rational> for Gauss {
    fn from(r: Rational) -> Self {
        Self::real(r)
    }
}

impl From<i128> for Gauss {
    fn from(n: i128) -> Self {
        Self::int(n)
    }
}

impl<'a> Add<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn add(self, o: &Gauss) -> Gauss {
        Gauss { re: add_q(&self.re, &o.re), im: add_q(&self.im, &o.im) }
    }
}

impl<'a> Sub<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn sub(self, o: &Gauss) -> Gauss {
        Gauss { re: sub_q(&self.re, &o.re), im: sub_q(&self.im, &o.im) }
    }
}

impl<'a> Mul<&'a Gauss> for &'a Gauss {
    type Output = Gauss;
    fn mul(self, o: &Gauss) -> Gauss {
        if self.im.is_zero() && o.im.is_zero() {
            return Gauss::real(mul_q(&self.re, &o.re));
        }
        let re = sub_q(&mul_q(&self.re, &o.re), &mul_q(&self.im, &o.im));
        let im = add_q(&mul_q(&self.re, &o.im), &mul_q(&self.im, &o.re));
        Gauss { re, im }
    }
}

impl Add for Gauss {
    type Output = Gauss;
    fn add(self, o: Gauss) -> Gauss {
        &self + &o
    }
}

impl Sub for Gauss {
    type Output = Gauss;
    fn sub(self, o: Gauss) -> Gauss {
        &self - &o
    }
}

impl Mul for Gauss {
    type Output = Gauss;
    fn mul(self, o: Gauss) -> Gauss {
        &self * &o
    }
}

/// Panics on division by zero; use [`Gauss::checked_inv`] for a fallible path.
impl Div for Gauss {
    type Output = Gauss;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: Gauss) -> Gauss {
        &self * &o.checked_inv().expect("division by zero")
    }
}

impl Neg for Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -self.re, im: -self.im }
    }
}

impl Neg for &Gauss {
    type Output = Gauss;
    fn neg(self) -> Gauss {
        Gauss { re: -self.re, im: -self.im }
    }
}

impl AddAssign<&Gauss> for Gauss {
    fn add_assign(&mut self, o: &Gauss) {
        self.re = add_q(&self.re, &o.re);
        self.im = add_q(&self.im, &o.im);
    }
}

impl SubAssign<&Gauss> for Gauss {
    fn sub_assign(&mut self, o: &Gauss) {
        self.re = sub_q(&self.re, &o.re);
        self.im = sub_q(&self.im, &o.im);
    }
}

impl MulAssign<&Gauss> for Gauss {
    fn mul_assign(&mut self, o: &Gauss) {
        *self = &*self * o;
    }
}

impl Sum for Gauss {
    fn sum<I: Iterator<Item = Gauss>>(iter: I) -> Self {
        iter.fold(Gauss::zero(), |acc, x| &acc + &x)
    }
}

/// `3`, `-1/2`, `i`, `-1/2*i`, `1/2 + 3*i`.
impl fmt::Display for Gauss {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |im: &Rational| {
            if im.is_one() {
                "i".to_string()
            } else if *im == -Rational::one() {
                "-i".to_string()
            } else {
                format!("{}*i", fmt_rational(im))
            }
        };
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", fmt_rational(&self.re)),
            (true, false) => write!(f, "{}", imag(&self.im)),
            (false, false) => {
                if self.im.is_negative() {
                    write!(f, "{} - {}", fmt_rational(&self.re), imag(&-self.im))
                } else {
                    write!(f, "{} + {}", fmt_rational(&self.re), imag(&self.im))
                }
            }
        }
    }
}

impl FromStr for Gauss {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_rational(s).map(Gauss::real)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let z = Gauss::new(q(1, 2), q(3, 1));
        let w = Gauss::new(q(-2, 3), q(1, 4));
        let p = &z * &w;
        assert_eq!(&p * &w.checked_inv().unwrap(), z);
        assert_eq!(&Gauss::i() * &Gauss::i(), -Gauss::one());
        assert_eq!(Gauss::i_pow(7), -Gauss::i());
    }

    #[test]
    fn inverse_of_zero_is_error() {
        assert_eq!(Gauss::zero().checked_inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn display_forms() {
        assert_eq!(Gauss::frac(-1, 2).to_string(), "-1/2");
        assert_eq!(Gauss::i().to_string(), "i");
        assert_eq!(Gauss::new(q(0, 1), q(1, 2)).to_string(), "1/2*i");
        assert_eq!(Gauss::new(q(1, 2), q(-3, 1)).to_string(), "1/2 - 3*i");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rational("-1").unwrap(), q(-1, 1));
        assert_eq!(parse_rational("1/2").unwrap(), q(1, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }
}
