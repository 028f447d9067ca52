//! Exact coefficient rings.
//!
//! Everything in this crate is computed over a ring implementing
//! [`Coefficient`]: arbitrary-precision rationals, or [`TSeries`], truncated
//! power series in an auxiliary variable `t` with rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// An exact commutative ring with unit that embeds the integers and supports
/// division by nonzero integers.
pub trait Coefficient:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_integer(n: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;
    /// Exact division by a nonzero integer.
    fn div_integer(&self, n: i64) -> Self;
    /// Multiplicative inverse when one exists in the ring.
    fn inverse(&self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Coefficient for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_integer(n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn div_integer(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero");
        self / Rational::from_integer(BigInt::from(n))
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// Shorthand for the rational `num/den`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Generalised binomial coefficient `s choose k` for rational `s`.
pub fn binomial_rational(s: &Rational, k: usize) -> Rational {
    let mut acc = int(1);
    for i in 0..k {
        acc = acc * (s - int(i as i64)) / int(i as i64 + 1);
    }
    acc
}

/// Formats an exact rational as `num/den`, omitting the denominator when it is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// Returns the integer value of `r`, or a [`Error::NonIntegral`] naming `what`.
pub fn to_integer(r: &Rational, what: &str) -> Result<BigInt> {
    if r.is_integer() {
        Ok(r.to_integer())
    } else {
        Err(Error::NonIntegral(format!("{what} = {}", format_rational(r))))
    }
}

/// Truncated power series in `t` with rational coefficients.
///
/// `precision` is the highest retained power of `t`; `None` marks an exact
/// polynomial (integer embeddings, constants), which adopts the precision of
/// whatever it is combined with.
#[derive(Clone, Debug)]
pub struct TSeries {
    coeffs: Vec<Rational>,
    precision: Option<usize>,
}

impl TSeries {
    pub fn new(coeffs: Vec<Rational>, precision: usize) -> Self {
        Self::build(coeffs, Some(precision))
    }

    pub fn exact(coeffs: Vec<Rational>) -> Self {
        Self::build(coeffs, None)
    }

    fn build(mut coeffs: Vec<Rational>, precision: Option<usize>) -> Self {
        if let Some(p) = precision {
            coeffs.truncate(p + 1);
        }
        while coeffs.last().is_some_and(|c| Zero::is_zero(c)) {
            coeffs.pop();
        }
        TSeries { coeffs, precision }
    }

    /// The variable `t` itself, retained through `t^precision`.
    pub fn t(precision: usize) -> Self {
        Self::new(vec![int(0), int(1)], precision)
    }

    /// `exp(j t)` truncated at `t^precision`.
    pub fn exp_linear(j: i64, precision: usize) -> Self {
        let mut coeffs = Vec::with_capacity(precision + 1);
        let mut term = int(1);
        for k in 0..=precision {
            coeffs.push(term.clone());
            term = term * int(j) / int(k as i64 + 1);
        }
        Self::new(coeffs, precision)
    }

    /// `(1 + j t)^m` truncated at `t^precision`.
    pub fn one_plus_linear_pow(j: i64, m: u32, precision: usize) -> Self {
        let coeffs = (0..=precision.min(m as usize))
            .map(|k| Rational::from_integer(binomial(m as i64, k as i64) * BigInt::from(j).pow(k as u32)))
            .collect();
        Self::new(coeffs, precision)
    }

    pub fn precision(&self) -> Option<usize> {
        self.precision
    }

    /// Coefficient of `t^k`; zero beyond the stored terms.
    pub fn coefficient(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(|| int(0))
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    fn joint_precision(&self, other: &Self) -> Option<usize> {
        match (self.precision, other.precision) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    fn combine(&self, other: &Self, f: impl Fn(&Rational, &Rational) -> Rational) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|k| f(&self.coefficient(k), &other.coefficient(k)))
            .collect();
        Self::build(coeffs, self.joint_precision(other))
    }
}

impl PartialEq for TSeries {
    fn eq(&self, other: &Self) -> bool {
        let len = self.coeffs.len().max(other.coeffs.len());
        let limit = match self.joint_precision(other) {
            Some(p) => len.min(p + 1),
            None => len,
        };
        (0..limit).all(|k| self.coefficient(k) == other.coefficient(k))
    }
}

impl Add for TSeries {
    type Output = TSeries;
    fn add(self, rhs: TSeries) -> TSeries {
        self.combine(&rhs, |a, b| a + b)
    }
}

impl Sub for TSeries {
    type Output = TSeries;
    fn sub(self, rhs: TSeries) -> TSeries {
        self.combine(&rhs, |a, b| a - b)
    }
}

impl Neg for TSeries {
    type Output = TSeries;
    fn neg(self) -> TSeries {
        Self::build(self.coeffs.into_iter().map(|c| -c).collect(), self.precision)
    }
}

impl Mul for TSeries {
    type Output = TSeries;
    fn mul(self, rhs: TSeries) -> TSeries {
        let precision = self.joint_precision(&rhs);
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return Self::build(Vec::new(), precision);
        }
        let mut len = self.coeffs.len() + rhs.coeffs.len() - 1;
        if let Some(p) = precision {
            len = len.min(p + 1);
        }
        let mut coeffs = vec![int(0); len];
        for (i, a) in self.coeffs.iter().enumerate() {
            if i >= len || Zero::is_zero(a) {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] += a * b;
            }
        }
        Self::build(coeffs, precision)
    }
}

impl Coefficient for TSeries {
    fn zero() -> Self {
        Self::exact(Vec::new())
    }
    fn one() -> Self {
        Self::exact(vec![int(1)])
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_integer(n: i64) -> Self {
        Self::exact(vec![int(n)])
    }
    fn from_rational(r: &Rational) -> Self {
        Self::exact(vec![r.clone()])
    }
    fn div_integer(&self, n: i64) -> Self {
        assert!(n != 0, "division by zero");
        Self::build(self.coeffs.iter().map(|c| c / int(n)).collect(), self.precision)
    }
    fn inverse(&self) -> Option<Self> {
        let c0 = self.coeffs.first()?.clone();
        match self.precision {
            None if self.coeffs.len() == 1 => Some(Self::exact(vec![c0.recip()])),
            None => None,
            Some(p) => {
                // b_0 = 1/a_0, b_k = -(1/a_0) sum_{i=1..k} a_i b_{k-i}
                let inv0 = c0.recip();
                let mut out: Vec<Rational> = Vec::with_capacity(p + 1);
                out.push(inv0.clone());
                for k in 1..=p {
                    let mut acc = int(0);
                    for i in 1..=k {
                        acc += self.coefficient(i) * &out[k - i];
                    }
                    out.push(-acc * &inv0);
                }
                Some(Self::new(out, p))
            }
        }
    }
}

impl fmt::Display for TSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            let c = format_rational(c);
            parts.push(match k {
                0 => c,
                1 => format!("{c}*t"),
                _ => format!("{c}*t^{k}"),
            });
        }
        if parts.is_empty() {
            parts.push("0".to_string());
        }
        if let Some(p) = self.precision {
            parts.push(format!("O(t^{})", p + 1));
        }
        if parts.len() == 1 {
            write!(f, "{}", parts[0])
        } else {
            write!(f, "({})", parts.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_formatting_round_trips() {
        for (n, d) in [(1, 2), (-3, 4), (5, 1), (0, 7)] {
            let r = rat(n, d);
            assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
        }
        assert_eq!(format_rational(&rat(6, 3)), "2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn tseries_multiplication_truncates() {
        let a = TSeries::exp_linear(1, 3);
        let b = TSeries::exp_linear(-1, 3);
        assert_eq!(a * b, TSeries::one());
        let sq = TSeries::exp_linear(1, 4) * TSeries::exp_linear(1, 4);
        assert_eq!(sq, TSeries::exp_linear(2, 4));
    }

    #[test]
    fn tseries_inverse() {
        let a = TSeries::one_plus_linear_pow(3, 2, 5);
        let inv = a.inverse().unwrap();
        assert_eq!(a * inv, TSeries::one());
        assert!(TSeries::exact(vec![int(1), int(1)]).inverse().is_none());
        assert!(TSeries::zero().inverse().is_none());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(3, 4), BigInt::zero());
        assert_eq!(binomial_rational(&rat(-1, 2), 2), rat(3, 8));
    }
}
