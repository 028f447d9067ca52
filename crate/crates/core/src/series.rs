//! Truncated graded series in the power sums `p_1, p_2, ...`.
//!
//! A monomial `p_λ = p_{λ_1} p_{λ_2} ...` is keyed by the partition `λ`; its
//! weight is `|λ|`. Everything above the cap is discarded.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::ring::{format_rational, parse_rational, Coefficient, Rational};

#[derive(Clone, Debug, PartialEq)]
pub struct GradedSeries<C = Rational> {
    terms: BTreeMap<Partition, C>,
    cap: usize,
}

impl<C: Coefficient> GradedSeries<C> {
    pub fn zero(cap: usize) -> Self {
        GradedSeries { terms: BTreeMap::new(), cap }
    }

    pub fn one(cap: usize) -> Self {
        Self::constant(C::one(), cap)
    }

    pub fn constant(c: C, cap: usize) -> Self {
        Self::monomial(Partition::empty(), c, cap)
    }

    /// `c · p_λ`, or zero if `|λ|` exceeds the cap.
    pub fn monomial(lambda: Partition, c: C, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        s.add_term(lambda, c);
        s
    }

    /// `p_i`.
    pub fn power_sum(i: usize, cap: usize) -> Self {
        Self::monomial(Partition::new(vec![i]).expect("positive index"), C::one(), cap)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Partition, C)>, cap: usize) -> Self {
        let mut s = Self::zero(cap);
        for (l, c) in terms {
            s.add_term(l, c);
        }
        s
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    /// Nonzero terms in (weight, lexicographic) order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> C {
        self.terms.get(lambda).cloned().unwrap_or_else(C::zero)
    }

    pub fn constant_term(&self) -> C {
        self.coefficient(&Partition::empty())
    }

    pub fn add_term(&mut self, lambda: Partition, c: C) {
        if lambda.weight() > self.cap || c.is_zero() {
            return;
        }
        match self.terms.remove(&lambda) {
            Some(old) => {
                let sum = old + c;
                if !sum.is_zero() {
                    self.terms.insert(lambda, sum);
                }
            }
            None => {
                self.terms.insert(lambda, c);
            }
        }
    }

    /// Drops every term of weight above `cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        GradedSeries {
            terms: self.terms.iter().filter(|(l, _)| l.weight() <= cap).map(|(l, c)| (l.clone(), c.clone())).collect(),
            cap: cap.min(self.cap),
        }
    }

    /// Reinterprets the series under a new cap. Raising the cap is only
    /// meaningful for series known to be exact polynomials.
    pub fn with_cap(&self, cap: usize) -> Self {
        let mut s = self.truncate(cap);
        s.cap = cap;
        s
    }

    /// Weight-`w` homogeneous component.
    pub fn homogeneous_part(&self, w: usize) -> Self {
        GradedSeries {
            terms: self.terms.iter().filter(|(l, _)| l.weight() == w).map(|(l, c)| (l.clone(), c.clone())).collect(),
            cap: self.cap,
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut s = Self::zero(self.cap);
        for (l, v) in &self.terms {
            s.add_term(l.clone(), v.clone() * c.clone());
        }
        s
    }

    pub fn map_coefficients<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> GradedSeries<D> {
        let mut s = GradedSeries::zero(self.cap);
        for (l, v) in &self.terms {
            s.add_term(l.clone(), f(v));
        }
        s
    }

    /// `∂F/∂p_r`; the cap drops by `r`.
    pub fn partial(&self, r: usize) -> Self {
        let mut s = Self::zero(self.cap.saturating_sub(r));
        for (l, v) in &self.terms {
            let mult = l.multiplicity(r);
            if mult == 0 {
                continue;
            }
            let reduced = l.remove_part(r).expect("part present");
            s.add_term(reduced, v.clone() * C::from_integer(mult as i64));
        }
        s
    }

    /// Applies `∂/∂p_{i}` for every part `i` of `orders`.
    pub fn partial_multi(&self, orders: &Partition) -> Self {
        orders.parts().iter().fold(self.clone(), |acc, &r| acc.partial(r))
    }

    /// Substitutes `p_i = value(i)` for every `i`.
    pub fn evaluate(&self, value: impl Fn(usize) -> C) -> C {
        let mut cache: BTreeMap<usize, C> = BTreeMap::new();
        let mut acc = C::zero();
        for (l, v) in &self.terms {
            let mut term = v.clone();
            for &part in l.parts() {
                let pv = cache.entry(part).or_insert_with(|| value(part)).clone();
                term = term * pv;
            }
            acc = acc + term;
        }
        acc
    }

    fn graded_components(&self) -> Vec<Vec<(&Partition, &C)>> {
        let mut comps = vec![Vec::new(); self.cap + 1];
        for (l, c) in &self.terms {
            comps[l.weight()].push((l, c));
        }
        comps
    }

    /// `log F` for a series with constant term 1.
    ///
    /// With `E` the weight-grading operator, `F · E(log F) = E(F)`, which
    /// determines the weight-`n` part of the logarithm from lower ones.
    pub fn log(&self) -> Result<Self> {
        if !self.constant_term().is_one() {
            return Err(Error::LogConstantTerm);
        }
        let f = self.graded_components();
        let mut out: Vec<GradedSeries<C>> = vec![Self::zero(self.cap); self.cap + 1];
        for n in 1..=self.cap {
            let mut acc = Self::zero(self.cap);
            for (l, c) in &f[n] {
                acc.add_term((*l).clone(), (*c).clone() * C::from_integer(n as i64));
            }
            for k in 1..n {
                let lk = &out[k];
                if lk.is_zero() || f[n - k].is_empty() {
                    continue;
                }
                let fk = GradedSeries::from_terms(f[n - k].iter().map(|(l, c)| ((*l).clone(), (*c).clone())), self.cap);
                let prod = (lk * &fk).scale(&C::from_integer(k as i64));
                acc = &acc - &prod;
            }
            out[n] = acc.scale_down(n as i64);
        }
        let mut total = Self::zero(self.cap);
        for comp in out {
            total = &total + &comp;
        }
        Ok(total)
    }

    /// `exp F` for a series with constant term 0.
    pub fn exp(&self) -> Result<Self> {
        if !self.constant_term().is_zero() {
            return Err(Error::ExpConstantTerm);
        }
        let g = self.graded_components();
        let mut out: Vec<GradedSeries<C>> = vec![Self::zero(self.cap); self.cap + 1];
        out[0] = Self::one(self.cap);
        for n in 1..=self.cap {
            let mut acc = Self::zero(self.cap);
            for k in 1..=n {
                if g[k].is_empty() || out[n - k].is_zero() {
                    continue;
                }
                let gk = GradedSeries::from_terms(g[k].iter().map(|(l, c)| ((*l).clone(), (*c).clone())), self.cap);
                acc = &acc + &(&gk * &out[n - k]).scale(&C::from_integer(k as i64));
            }
            out[n] = acc.scale_down(n as i64);
        }
        let mut total = Self::zero(self.cap);
        for comp in out {
            total = &total + &comp;
        }
        Ok(total)
    }

    fn scale_down(&self, n: i64) -> Self {
        let mut s = Self::zero(self.cap);
        for (l, v) in &self.terms {
            s.add_term(l.clone(), v.div_integer(n));
        }
        s
    }

    /// `F^k`.
    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(self.cap), |acc, _| &acc * self)
    }
}

impl<C: Coefficient> Add for &GradedSeries<C> {
    type Output = GradedSeries<C>;
    fn add(self, rhs: &GradedSeries<C>) -> GradedSeries<C> {
        let cap = self.cap.min(rhs.cap);
        let mut s = self.truncate(cap);
        for (l, c) in &rhs.terms {
            s.add_term(l.clone(), c.clone());
        }
        s
    }
}

impl<C: Coefficient> Sub for &GradedSeries<C> {
    type Output = GradedSeries<C>;
    fn sub(self, rhs: &GradedSeries<C>) -> GradedSeries<C> {
        let cap = self.cap.min(rhs.cap);
        let mut s = self.truncate(cap);
        for (l, c) in &rhs.terms {
            s.add_term(l.clone(), -c.clone());
        }
        s
    }
}

impl<C: Coefficient> Neg for &GradedSeries<C> {
    type Output = GradedSeries<C>;
    fn neg(self) -> GradedSeries<C> {
        self.map_coefficients(|c| -c.clone())
    }
}

impl<C: Coefficient> Mul for &GradedSeries<C> {
    type Output = GradedSeries<C>;
    fn mul(self, rhs: &GradedSeries<C>) -> GradedSeries<C> {
        let cap = self.cap.min(rhs.cap);
        let mut s = GradedSeries::zero(cap);
        for (la, ca) in &self.terms {
            if la.weight() > cap {
                continue;
            }
            for (lb, cb) in &rhs.terms {
                if la.weight() + lb.weight() > cap {
                    continue;
                }
                s.add_term(la.union(lb), ca.clone() * cb.clone());
            }
        }
        s
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl<C: Coefficient> $tr for GradedSeries<C> {
            type Output = GradedSeries<C>;
            fn $m(self, rhs: GradedSeries<C>) -> GradedSeries<C> {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl<C: Coefficient> fmt::Display for GradedSeries<C> {
    /// `coeff * p[λ]` terms joined by ` + `, in (weight, lexicographic) order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(l, c)| format!("{c} * p[{l}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl GradedSeries<Rational> {
    /// Display form with exact `num/den` coefficients.
    pub fn to_exact_string(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let parts: Vec<String> =
            self.terms.iter().map(|(l, c)| format!("{} * p[{l}]", format_rational(c))).collect();
        parts.join(" + ")
    }

    /// Parses the printed form, e.g. `1/2 * p[1,1] + -1/2 * p[2]`, under `cap`.
    ///
    /// Bare coefficients, bare `p[λ]` and `-` separators are also accepted.
    pub fn parse(s: &str, cap: usize) -> Result<Self> {
        let mut series = Self::zero(cap);
        let normalized = s.replace(" - ", " + -");
        for raw in normalized.split(" + ") {
            let term = raw.trim();
            if term.is_empty() || term == "0" {
                continue;
            }
            let (coeff, mono) = match term.split_once('*') {
                Some((c, m)) => (parse_rational(c)?, m.trim()),
                None if term.contains("p[") => {
                    let (sign, m) = term.strip_prefix('-').map_or((1, term), |m| (-1, m));
                    (crate::ring::int(sign), m.trim())
                }
                None => (parse_rational(term)?, "p[]"),
            };
            let inner = mono
                .strip_prefix("p[")
                .and_then(|m| m.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("bad monomial {mono:?}")))?;
            let lambda = Partition::from_str(inner)?;
            if lambda.weight() > cap {
                return Err(Error::Parse(format!("monomial p[{lambda}] exceeds cap {cap}")));
            }
            series.add_term(lambda, coeff);
        }
        Ok(series)
    }
}
