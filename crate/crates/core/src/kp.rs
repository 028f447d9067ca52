//! Tau functions and the first three KP equations.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::plucker::PluckerFamily;
use crate::ring::{rat, Coefficient, Rational};
use crate::series::GradedSeries;
use crate::symfunc::schur_in_p;

/// A KP equation `Σ c · F_{μ_1} F_{μ_2} ⋯ = 0`, where `F_μ` is the derivative
/// of `F` with respect to `p_{μ_1}, p_{μ_2}, …`.
#[derive(Clone, Debug, PartialEq)]
pub struct KPEquation {
    pub terms: Vec<(Rational, Vec<Partition>)>,
}

fn d(s: &str) -> Partition {
    s.parse().expect("literal partition")
}

impl KPEquation {
    /// The `index`-th printed equation, for `index` in `1..=3`.
    pub fn printed(index: usize) -> Result<Self> {
        let terms = match index {
            1 => vec![
                (rat(1, 1), vec![d("2,2")]),
                (rat(-1, 1), vec![d("3,1")]),
                (rat(1, 12), vec![d("1,1,1,1")]),
                (rat(1, 2), vec![d("1,1"), d("1,1")]),
            ],
            2 => vec![
                (rat(1, 1), vec![d("3,2")]),
                (rat(-1, 1), vec![d("4,1")]),
                (rat(1, 6), vec![d("2,1,1,1")]),
                (rat(1, 1), vec![d("1,1"), d("2,1")]),
            ],
            3 => vec![
                (rat(1, 1), vec![d("4,2")]),
                (rat(-1, 1), vec![d("5,1")]),
                (rat(1, 4), vec![d("3,1,1,1")]),
                (rat(-1, 120), vec![d("1,1,1,1,1,1")]),
                (rat(1, 1), vec![d("1,1"), d("3,1")]),
                (rat(1, 2), vec![d("2,1"), d("2,1")]),
                (rat(-1, 8), vec![d("1,1,1"), d("1,1,1")]),
                (rat(-1, 12), vec![d("1,1"), d("1,1,1,1")]),
            ],
            _ => return Err(Error::InvalidArgument(format!("only equations 1 to 3 are available, not {index}"))),
        };
        Ok(KPEquation { terms })
    }

    /// Largest total order of a derivative in the equation.
    pub fn derivative_weight(&self) -> usize {
        self.terms.iter().flat_map(|(_, ds)| ds.iter().map(Partition::weight)).max().unwrap_or(0)
    }

    /// Smallest series cap accepted by [`kp_residual`].
    pub fn required_cap(&self) -> usize {
        self.derivative_weight() + 2
    }
}

impl fmt::Display for KPEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, ds)| {
                let fs: Vec<String> = ds.iter().map(|m| format!("F[{m}]")).collect();
                format!("{} * {}", crate::ring::format_rational(c), fs.join(" * "))
            })
            .collect();
        write!(f, "{} = 0", parts.join(" + "))
    }
}

/// `Σ_{|λ| ≤ cap} b_λ s_λ(p)`.
pub fn tau_series<C: Coefficient>(family: &PluckerFamily<C>, cap: usize) -> Result<GradedSeries<C>> {
    if family.cap() < cap {
        return Err(Error::CapExceeded { weight: cap, cap: family.cap() });
    }
    let mut acc = GradedSeries::zero(cap);
    for (lambda, b) in family.coordinates() {
        if lambda.weight() > cap || b.is_zero() {
            continue;
        }
        let s = schur_in_p(lambda).with_cap(cap).map_coefficients(C::from_rational);
        acc = &acc + &s.scale(b);
    }
    Ok(acc)
}

/// `log τ`, after dividing `τ` by its constant term `b_ε` when that is not 1.
pub fn log_tau<C: Coefficient>(family: &PluckerFamily<C>, cap: usize) -> Result<GradedSeries<C>> {
    let tau = tau_series(family, cap)?;
    let c0 = tau.constant_term();
    if c0.is_one() {
        return tau.log();
    }
    let inv = c0.inverse().ok_or_else(|| Error::NotInvertible(format!("constant term {c0} of tau")))?;
    tau.scale(&inv).log()
}

/// Substitutes `f` into the printed equation `index`.
///
/// The result is truncated to the weights where it is exact, namely up to
/// `cap - w` for `w` the heaviest derivative in the equation.
pub fn kp_residual<C: Coefficient>(f: &GradedSeries<C>, index: usize) -> Result<GradedSeries<C>> {
    let eq = KPEquation::printed(index)?;
    residual(f, &eq)
}

pub fn residual<C: Coefficient>(f: &GradedSeries<C>, eq: &KPEquation) -> Result<GradedSeries<C>> {
    let cap = f.cap();
    let needed = eq.required_cap();
    if cap < needed {
        return Err(Error::InsufficientCap { needed, cap });
    }
    let valid = cap - eq.derivative_weight();
    let mut acc = GradedSeries::zero(valid);
    for (c, derivatives) in &eq.terms {
        let mut term = GradedSeries::constant(C::from_rational(c), valid);
        for mu in derivatives {
            term = &term * &f.partial_multi(mu).truncate(valid);
        }
        acc = &acc + &term;
    }
    Ok(acc.truncate(valid))
}
