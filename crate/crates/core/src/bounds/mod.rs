//! Girth thresholds above which graphs of a sparse class are p-path
//! degenerate, and the Lambert W machinery they need.
//!
//! Every threshold `T` is strict: girth `> T` suffices, so the integer
//! threshold reported alongside is `floor(T) + 1`.

mod lambert;

use std::f64::consts::LN_2;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::wcol::{wcol_integer_bound, WcolBoundParams};

pub use lambert::{lambert_w_minus1, w_minus1_sandwich};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum BoundsError {
    #[error("W_-1 is defined on [-1/e, 0), got {0}")]
    LambertDomain(f64),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("no r in [{from}, {to}] with Exp(3pr) < 2^r")]
    NoRadius { from: usize, to: usize },
}

fn invalid(msg: impl Into<String>) -> BoundsError {
    BoundsError::InvalidParameter(msg.into())
}

fn check_p(p: usize, min: usize) -> Result<(), BoundsError> {
    if p < min {
        Err(invalid(format!("p must be at least {min}, got {p}")))
    } else {
        Ok(())
    }
}

/// Least `beta >= 0` such that `x > A ln x + B` for every `x > beta`.
///
/// `0` when `B < A(1 - ln A)`; at equality the two sides touch at `x = A`,
/// which is then the answer.
pub fn threshold_beta(a: f64, b: f64) -> Result<f64, BoundsError> {
    if !(a > 0.0) || !b.is_finite() {
        return Err(invalid(format!("need A > 0 and finite B, got A={a}, B={b}")));
    }
    if b < a * (1.0 - a.ln()) {
        return Ok(0.0);
    }
    // -e^{-B/A}/A rounded onto the domain when B sits at the tangency
    let t = (-(b / a) - a.ln()).exp().min(1.0 / std::f64::consts::E);
    Ok(-a * lambert_w_minus1(-t)?)
}

/// Which result a threshold comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    PolynomialExpansion,
    MinorClosed,
    SubexponentialExpansion,
    CliqueMinorFree,
}

impl Theorem {
    pub fn name(self) -> &'static str {
        match self {
            Theorem::PolynomialExpansion => "polynomial-expansion",
            Theorem::MinorClosed => "minor-closed",
            Theorem::SubexponentialExpansion => "subexponential-expansion",
            Theorem::CliqueMinorFree => "clique-minor-free",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A girth threshold: graphs of the class with girth `> threshold` are
/// p-path degenerate.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundResult {
    pub theorem: Theorem,
    pub threshold: f64,
    /// Smallest integer girth exceeding `threshold`.
    pub integer_girth_threshold: u64,
}

impl BoundResult {
    fn new(theorem: Theorem, threshold: f64) -> Self {
        BoundResult { theorem, threshold, integer_girth_threshold: threshold.floor() as u64 + 1 }
    }
}

/// `Exp(r) <= a (r + 1/2)^b`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExpansionParams {
    a: f64,
    b: f64,
}

impl ExpansionParams {
    pub fn new(a: f64, b: f64) -> Result<Self, BoundsError> {
        if !(a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite()) {
            return Err(invalid(format!("need a, b > 0, got a={a}, b={b}")));
        }
        Ok(ExpansionParams { a, b })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    /// `A = b / ln 2`.
    pub fn cap_a(&self) -> f64 {
        self.b / LN_2
    }

    /// `B = log2(24 sqrt(2) a p^b)`.
    pub fn cap_b(&self, p: usize) -> f64 {
        (24.0 * 2f64.sqrt() * self.a).log2() + self.b * (p as f64).log2()
    }

    /// `C = (24 sqrt(2) a)^(1/b)`.
    pub fn cap_c(&self) -> f64 {
        (24.0 * 2f64.sqrt() * self.a).powf(1.0 / self.b)
    }

    pub fn eval(&self, r: f64) -> f64 {
        self.a * (r + 0.5).powf(self.b)
    }
}

/// `gamma(p) = 2 floor(2 beta) + 4`, with `beta` the threshold of
/// `r' > A ln r' + B`.
pub fn polynomial_gamma(params: ExpansionParams, p: usize) -> Result<u64, BoundsError> {
    check_p(p, 2)?;
    let beta = threshold_beta(params.cap_a(), params.cap_b(p))?;
    Ok(2 * (2.0 * beta).floor() as u64 + 4)
}

/// `max(7, gamma(p)) (p - 1)` for classes with `Exp(r) <= a (r + 1/2)^b`.
pub fn girth_bound_polynomial(params: ExpansionParams, p: usize) -> Result<BoundResult, BoundsError> {
    let gamma = polynomial_gamma(params, p)?;
    let g = gamma.max(7) * (p as u64 - 1);
    Ok(BoundResult::new(Theorem::PolynomialExpansion, g as f64))
}

/// The explicit upper estimate
/// `4b log2 p + 4A sqrt(2 ln(ACp) - 2) + 4b log2(AC) + 4` on `gamma(p)`.
pub fn polynomial_gamma_upper(params: ExpansionParams, p: usize) -> f64 {
    let (a, c) = (params.cap_a(), params.cap_c());
    let acp = a * c * p as f64;
    4.0 * params.b * (p as f64).log2() + 4.0 * a * (2.0 * acp.ln() - 2.0).max(0.0).sqrt() + 4.0 * params.b * (a * c).log2()
        + 4.0
}

/// `(4 log2 d + 2 log2 min(d, 576) + 3)(p - 1)` for minor-closed classes
/// with maximum average degree at most `d`.
pub fn girth_bound_minor_closed(d: f64, p: usize) -> Result<BoundResult, BoundsError> {
    check_p(p, 2)?;
    if !(d >= 2.0) || !d.is_finite() {
        return Err(invalid(format!("d must be at least 2, got {d}")));
    }
    let t = (4.0 * d.log2() + 2.0 * d.min(576.0).log2() + 3.0) * (p - 1) as f64;
    Ok(BoundResult::new(Theorem::MinorClosed, t))
}

/// `K_k`-minor-free graphs have average degree below `gamma k sqrt(log2 k)`;
/// feeds that into [`girth_bound_minor_closed`]. Lower-order terms are
/// taken as part of `gamma`.
pub fn girth_bound_clique(k: usize, p: usize, gamma: f64) -> Result<BoundResult, BoundsError> {
    if k < 5 {
        return Err(invalid(format!("k must be at least 5, got {k}")));
    }
    if !(gamma > 0.0) {
        return Err(invalid(format!("gamma must be positive, got {gamma}")));
    }
    let k = k as f64;
    let d = (gamma * k * k.log2().sqrt()).max(2.0);
    Ok(BoundResult { theorem: Theorem::CliqueMinorFree, ..girth_bound_minor_closed(d, p)? })
}

pub const THOMASON_GAMMA: f64 = 0.638;

/// `(6pr + 3)(p - 1)` for the least `r` in `[p, r_max]` with
/// `Exp(3pr) < 2^r`.
///
/// The argument form is girth *at least* that value, so the integer
/// threshold reported (`value + 1`) is one more than needed.
pub fn girth_bound_subexponential(
    expansion: impl Fn(f64) -> f64,
    p: usize,
    r_max: usize,
) -> Result<BoundResult, BoundsError> {
    check_p(p, 2)?;
    let r = (p..=r_max)
        .find(|&r| expansion((3 * p * r) as f64).log2() < r as f64)
        .ok_or(BoundsError::NoRadius { from: p, to: r_max })?;
    let g = (6 * p * r + 3) * (p - 1);
    Ok(BoundResult::new(Theorem::SubexponentialExpansion, g as f64))
}

/// Named expansion functions for the command line.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Expansion {
    /// `Exp(r) = c`.
    Constant(f64),
    /// `Exp(r) = a (r + 1/2)^b`.
    Polynomial(ExpansionParams),
    /// `Exp(r) = 2^(c r^e)`.
    Subexponential { c: f64, e: f64 },
    /// `Exp(r) = 2^r`.
    Exponential,
}

impl Expansion {
    pub fn eval(&self, r: f64) -> f64 {
        match *self {
            Expansion::Constant(c) => c,
            Expansion::Polynomial(p) => p.eval(r),
            Expansion::Subexponential { c, e } => (c * r.powf(e)).exp2(),
            Expansion::Exponential => r.exp2(),
        }
    }
}

impl FromStr for Expansion {
    type Err = BoundsError;

    /// `const:C`, `poly:A,B`, `subexp:C,E` or `exp2`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || invalid(format!("unknown expansion `{s}`; use const:C, poly:A,B, subexp:C,E or exp2"));
        if s == "exp2" {
            return Ok(Expansion::Exponential);
        }
        let (kind, args) = s.split_once(':').ok_or_else(bad)?;
        let nums = args.split(',').map(|t| t.trim().parse::<f64>()).collect::<Result<Vec<_>, _>>().map_err(|_| bad())?;
        match (kind, nums.as_slice()) {
            ("const", &[c]) if c > 0.0 => Ok(Expansion::Constant(c)),
            ("poly", &[a, b]) => Ok(Expansion::Polynomial(ExpansionParams::new(a, b)?)),
            ("subexp", &[c, e]) if c > 0.0 && (0.0..1.0).contains(&e) => Ok(Expansion::Subexponential { c, e }),
            _ => Err(bad()),
        }
    }
}

/// `-(2b / (alpha ln 2)) W_{-1}(-ln 2 / ((p-1) b)) (p - 1)`: the girth of
/// non-p-path-degenerate subdivided cubic graphs available in a class with
/// expansion `O(r^b)` when cubic graphs of girth `g` exist on
/// `O(2^(alpha g))` vertices. `alpha = 3/4` is the known cage bound.
pub fn lower_bound_poly(b: f64, p: usize, alpha: f64) -> Result<f64, BoundsError> {
    check_p(p, 3)?;
    if !(b > 0.0) || !(alpha > 0.0 && alpha <= 1.0) {
        return Err(invalid(format!("need b > 0 and 0 < alpha <= 1, got b={b}, alpha={alpha}")));
    }
    let pm1 = (p - 1) as f64;
    let w = lambert_w_minus1(-LN_2 / (pm1 * b))?;
    Ok(-(2.0 * b / (alpha * LN_2)) * w * pm1)
}

/// Upper bound on `wcol_r` for graphs of girth at least `g(2q)`:
/// `r + 2 + floor(log2((q-1)/(q-r)))` when `r < q < 2r`, else `r + 2`.
pub fn wcol_girth_rule(r: usize, q: usize) -> Result<usize, BoundsError> {
    let params = WcolBoundParams::new(r, q).map_err(|e| invalid(e.to_string()))?;
    Ok(wcol_integer_bound(params))
}
