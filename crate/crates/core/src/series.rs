//! Truncated formal power series in one anonymous variable over `Q(i)`.
//!
//! A series of order `N` stores exactly `N + 1` coefficients; every product
//! discards degrees above `N`. The same type carries series in the deformation
//! parameter `a` and series in the symbol `A = i a d0`; the caller decides
//! which variable is meant.

use std::fmt;

use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gauss::{fmt_rational, q, Gauss, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<Gauss>,
}

/// `beta (beta - 1) ... (beta - m + 1)`.
pub fn falling_factorial(beta: &Rational, m: u32) -> Rational {
    (0..m).fold(Rational::one(), |acc, j| acc * (beta - Rational::from_integer(j as i128)))
}

/// Generalized binomial coefficient `beta^{(m)} / m!`.
pub fn binomial(beta: &Rational, m: u32) -> Rational {
    let fact: i128 = (1..=m as i128).product();
    falling_factorial(beta, m) / Rational::from_integer(fact)
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![Gauss::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Gauss::one(), order)
    }

    pub fn constant(c: Gauss, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// The formal variable itself, `t`.
    pub fn var(order: usize) -> Self {
        let mut s = Self::zero(order);
        if order >= 1 {
            s.coeffs[1] = Gauss::one();
        }
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// extra ones beyond `order` are dropped.
    pub fn from_coeffs(coeffs: impl IntoIterator<Item = Gauss>, order: usize) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_rationals(coeffs: &[Rational], order: usize) -> Self {
        Self::from_coeffs(coeffs.iter().map(|c| Gauss::real(*c)), order)
    }

    /// `c0 + c1 t` truncated at `order`.
    pub fn linear(c0: Gauss, c1: Gauss, order: usize) -> Self {
        Self::from_coeffs([c0, c1], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Gauss] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Gauss {
        self.coeffs.get(k).cloned().unwrap_or_else(Gauss::zero)
    }

    pub fn constant_term(&self) -> &Gauss {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest index with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Re-truncates or zero-extends to a new order.
    pub fn with_order(&self, order: usize) -> Self {
        Self::from_coeffs(self.coeffs.iter().cloned(), order)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() })
    }

    pub fn neg(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn scale(&self, k: &Gauss) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * k).collect() }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut out = Self::zero(n);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..e {
            acc = acc.mul(self).expect("same order");
        }
        acc
    }

    /// Two-sided inverse within truncation.
    pub fn invert(&self) -> Result<Self> {
        let c0 = self.coeffs[0].checked_inv().map_err(|_| Error::NonInvertibleConstantTerm)?;
        let n = self.order();
        let mut inv = Self::zero(n);
        inv.coeffs[0] = c0.clone();
        for k in 1..=n {
            let mut acc = Gauss::zero();
            for j in 1..=k {
                acc += &(&self.coeffs[j] * &inv.coeffs[k - j]);
            }
            inv.coeffs[k] = -&(&acc * &c0);
        }
        Ok(inv)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        self.mul(&other.invert()?)
    }

    fn require_nilpotent(&self) -> Result<()> {
        if self.coeffs[0].is_zero() {
            Ok(())
        } else {
            Err(Error::NonNilpotentArgument)
        }
    }

    /// `sum_m s^m / m!`; the argument must have zero constant term.
    pub fn exp_series(&self) -> Result<Self> {
        self.require_nilpotent()?;
        let n = self.order();
        let mut out = Self::one(n);
        let mut term = Self::one(n);
        for m in 1..=n {
            term = term.mul(self)?.scale(&Gauss::frac(1, m as i128));
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// `sum_{m>=1} (-1)^{m+1} s^m / m`; the argument must have zero constant term.
    pub fn log1p_series(&self) -> Result<Self> {
        self.require_nilpotent()?;
        let n = self.order();
        let mut out = Self::zero(n);
        let mut power = Self::one(n);
        for m in 1..=n {
            power = power.mul(self)?;
            let sign = if m % 2 == 1 { 1 } else { -1 };
            out = out.add(&power.scale(&Gauss::frac(sign, m as i128)))?;
        }
        Ok(out)
    }

    /// `(1 + u)^beta` with `u = s - 1`, expanded with falling factorials.
    pub fn binom_pow(&self, beta: &Rational) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::ConstantTermNotOne);
        }
        let n = self.order();
        let mut u = self.clone();
        u.coeffs[0] = Gauss::zero();
        let mut out = Self::zero(n);
        let mut power = Self::one(n);
        for m in 0..=n as u32 {
            if m > 0 {
                power = power.mul(&u)?;
            }
            let c = binomial(beta, m);
            if !c.is_zero() {
                out = out.add(&power.scale(&Gauss::real(c)))?;
            }
        }
        Ok(out)
    }

    /// Formal derivative; the top coefficient is lost, so the result is
    /// exact only through order `N - 1` (stored with a zero top entry).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for k in 1..=n {
            out.coeffs[k - 1] = self.coeffs[k].scale(&Rational::from_integer(k as i128));
        }
        out
    }

    /// `int_0^t s`; the coefficient of degree `N + 1` is dropped.
    pub fn integral(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for k in 0..n {
            out.coeffs[k + 1] = self.coeffs[k].scale(&q(1, k as i128 + 1));
        }
        out
    }

    /// Exact division by `t^k`. Fails unless the `k` lowest coefficients vanish.
    /// The result keeps order `N` with zero top entries, so only degrees up to
    /// `N - k` are meaningful.
    pub fn div_by_var_pow(&self, k: usize) -> Result<Self> {
        if self.coeffs.iter().take(k).any(|c| !c.is_zero()) {
            return Err(Error::NotDivisible(k));
        }
        let n = self.order();
        Ok(Self::from_coeffs(self.coeffs.iter().skip(k).cloned(), n))
    }

    /// `t * s`.
    pub fn mul_by_var(&self) -> Self {
        let n = self.order();
        let mut out = Self::zero(n);
        for k in 0..n {
            out.coeffs[k + 1] = self.coeffs[k].clone();
        }
        out
    }

    /// Index of the first coefficient where the two series differ.
    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.order().max(other.order());
        (0..=n).find(|&k| self.coeff(k) != other.coeff(k))
    }

    /// Complex evaluation of the truncated polynomial at a real point.
    pub fn eval_f64(&self, t: f64) -> (f64, f64) {
        let mut re = 0.0;
        let mut im = 0.0;
        for c in self.coeffs.iter().rev() {
            let (cr, ci) = c.to_f64_pair();
            re = re * t + cr;
            im = im * t + ci;
        }
        (re, im)
    }

    /// Canonical text in the named variable.
    pub fn display_in(&self, var: &str) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let monomial = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let (negative, body) = coeff_text(c, &monomial);
            push_term(&mut out, negative, &body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

/// Splits a coefficient times a monomial into a sign and a body.
pub(crate) fn coeff_text(c: &Gauss, monomial: &str) -> (bool, String) {
    let join = |coef: String| {
        if monomial.is_empty() {
            coef
        } else if coef == "1" {
            monomial.to_string()
        } else {
            format!("{coef}*{monomial}")
        }
    };
    if c.im.is_zero() {
        let negative = c.re < Rational::zero();
        let mag = if negative { -c.re } else { c.re };
        (negative, join(fmt_rational(&mag)))
    } else if c.re.is_zero() {
        let negative = c.im < Rational::zero();
        let mag = if negative { -c.im } else { c.im };
        let coef = if mag.is_one() { "i".to_string() } else { format!("{}*i", fmt_rational(&mag)) };
        (negative, join(coef))
    } else {
        let coef = format!("({c})");
        let body = if monomial.is_empty() { coef } else { format!("{coef}*{monomial}") };
        (false, body)
    }
}

pub(crate) fn push_term(out: &mut String, negative: bool, body: &str) {
    match (out.is_empty(), negative) {
        (true, false) => out.push_str(body),
        (true, true) => {
            out.push('-');
            out.push_str(body);
        }
        (false, false) => {
            out.push_str(" + ");
            out.push_str(body);
        }
        (false, true) => {
            out.push_str(" - ");
            out.push_str(body);
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Serialize for TruncatedSeries {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(c: &[i128], n: usize) -> TruncatedSeries {
        TruncatedSeries::from_coeffs(c.iter().map(|&k| Gauss::int(k)), n)
    }

    #[test]
    fn geometric_inverse() {
        let s = ints(&[1, 1], 6);
        let inv = s.invert().unwrap();
        assert_eq!(inv, ints(&[1, -1, 1, -1, 1, -1, 1], 6));
        assert_eq!(s.mul(&inv).unwrap(), TruncatedSeries::one(6));
    }

    #[test]
    fn zero_constant_is_not_invertible() {
        assert_eq!(ints(&[0, 1], 3).invert(), Err(Error::NonInvertibleConstantTerm));
    }

    #[test]
    fn binomial_square() {
        let s = ints(&[1, 1], 3);
        assert_eq!(s.mul(&s).unwrap(), ints(&[1, 2, 1], 3));
    }

    #[test]
    fn order_mismatch() {
        assert_eq!(ints(&[1], 3).add(&ints(&[1], 4)), Err(Error::OrderMismatch(3, 4)));
    }

    #[test]
    fn exp_of_var() {
        let e = TruncatedSeries::var(4).exp_series().unwrap();
        let expect: Vec<Gauss> =
            [(1, 1), (1, 1), (1, 2), (1, 6), (1, 24)].iter().map(|&(a, b)| Gauss::frac(a, b)).collect();
        assert_eq!(e.coeffs(), &expect[..]);
        assert_eq!(TruncatedSeries::zero(4).exp_series().unwrap(), TruncatedSeries::one(4));
        assert_eq!(ints(&[1, 1], 4).exp_series(), Err(Error::NonNilpotentArgument));
    }

    #[test]
    fn log1p_of_var() {
        let l = TruncatedSeries::var(3).log1p_series().unwrap();
        let expect = [Gauss::zero(), Gauss::one(), Gauss::frac(-1, 2), Gauss::frac(1, 3)];
        assert_eq!(l.coeffs(), &expect[..]);
        assert!(TruncatedSeries::zero(3).log1p_series().unwrap().is_zero());
        let t = TruncatedSeries::var(5);
        let em1 = t.exp_series().unwrap().sub(&TruncatedSeries::one(5)).unwrap();
        assert_eq!(em1.log1p_series().unwrap(), t);
    }

    #[test]
    fn binom_pow_examples() {
        // (1 + 2A)^{1/2}: recurrence c_{m+1} = c_m (1/2 - m) / (m + 1) * 2
        let mut c = vec![Rational::one()];
        for m in 0..3 {
            let prev = c[m];
            c.push(prev * (q(1, 2) - Rational::from_integer(m as i128)) / Rational::from_integer(m as i128 + 1) * q(2, 1));
        }
        assert_eq!(c, vec![q(1, 1), q(1, 1), q(-1, 2), q(1, 2)]);
        let s = ints(&[1, 2], 3).binom_pow(&q(1, 2)).unwrap();
        assert_eq!(s, TruncatedSeries::from_rationals(&c, 3));

        assert_eq!(ints(&[1, 3], 5).binom_pow(&q(0, 1)).unwrap(), TruncatedSeries::one(5));
        assert_eq!(ints(&[1, -1], 4).binom_pow(&q(-1, 1)).unwrap(), ints(&[1, 1, 1, 1, 1], 4));
        assert_eq!(ints(&[2, 1], 4).binom_pow(&q(1, 2)), Err(Error::ConstantTermNotOne));
    }

    #[test]
    fn division_by_var() {
        let s = ints(&[0, 0, 3, 4], 3);
        assert_eq!(s.div_by_var_pow(2).unwrap(), ints(&[3, 4], 3));
        assert_eq!(s.div_by_var_pow(3), Err(Error::NotDivisible(3)));
    }

    #[test]
    fn calculus() {
        let s = ints(&[5, 1, 1, 1], 3);
        assert_eq!(s.derivative(), ints(&[1, 2, 3], 3));
        assert_eq!(s.derivative().integral(), ints(&[0, 1, 1, 1], 3));
    }

    #[test]
    fn display() {
        let s = TruncatedSeries::from_coeffs(
            [Gauss::int(1), Gauss::frac(-1, 2), Gauss::new(q(0, 1), q(1, 3)), Gauss::new(q(1, 1), q(1, 1))],
            3,
        );
        assert_eq!(s.to_string(), "1 - 1/2*t + 1/3*i*t^2 + (1 + i)*t^3");
        assert_eq!(TruncatedSeries::zero(2).to_string(), "0");
    }
}
