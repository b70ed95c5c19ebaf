//! The three extreme-value limit laws and their finite-sample representation
//! laws.
//!
//! The limit laws are the Frechet family `exp(-x^{-1/gamma})` on x > 0
//! (gamma > 0), the Weibull family `exp(-(-x)^{-1/gamma})` on x < 0
//! (gamma < 0) and the Gumbel law `exp(-e^{-x})` (gamma = 0). The matching
//! finite-sample laws are built from `U_{1,n}`, the minimum of n independent
//! uniforms on (0,1):
//!
//! ```text
//! Z_n(frechet, gamma) =  (n U_{1,n})^{-gamma}
//! Z_n(weibull, gamma) = -(n U_{1,n})^{-gamma}
//! Z_n(gumbel)         = -log(n U_{1,n})
//! ```
//!
//! Every computation runs in the reduced coordinate `t = reduce_to_unit(x)`, a
//! strictly decreasing map onto `[0, inf)` under which all three cases become
//! the same gamma-free comparison: the scaled minimum `n U_{1,n}` (survival
//! function `(1 - t/n)^n` on `[0, n]`) against the unit exponential (survival
//! function `e^{-t}`). In the original coordinate this reads
//! `rep_cdf(n, case, x) = (1 - t/n)^n [t < n]` and
//! `limit_cdf(case, x) = e^{-t}`.
//!
//! Two sign conventions are deliberate and worth flagging because closely
//! related displays sometimes appear without them: the Weibull CDF needs the
//! minus sign inside the exponential (without it the expression is not a CDF),
//! and the Gumbel representation needs the leading minus on the logarithm
//! (only `-log(n U_{1,n})` converges to `exp(-e^{-x})`).

use crate::error::{check_n, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseKind {
    Frechet,
    Weibull,
    Gumbel,
}

/// One of the three limit types together with its index gamma.
///
/// Construction validates the parameter domain: gamma > 0 for Frechet,
/// gamma < 0 for Weibull, and Gumbel carries no parameter (gamma = 0).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtremeCase {
    kind: CaseKind,
    gamma: f64,
}

impl ExtremeCase {
    pub fn frechet(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0) || !gamma.is_finite() {
            return Err(Error::domain(format!(
                "frechet requires a finite gamma > 0, got {gamma}"
            )));
        }
        Ok(ExtremeCase { kind: CaseKind::Frechet, gamma })
    }

    pub fn weibull(gamma: f64) -> Result<Self> {
        if !(gamma < 0.0) || !gamma.is_finite() {
            return Err(Error::domain(format!(
                "weibull requires a finite gamma < 0, got {gamma}"
            )));
        }
        Ok(ExtremeCase { kind: CaseKind::Weibull, gamma })
    }

    pub const fn gumbel() -> Self {
        ExtremeCase { kind: CaseKind::Gumbel, gamma: 0.0 }
    }

    pub fn kind(&self) -> CaseKind {
        self.kind
    }

    /// The extreme value index; 0 for Gumbel.
    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    /// The positive power-form exponent: `1/gamma` for Frechet
    /// (`exp(-x^{-alpha})`), `-1/gamma` for Weibull (`exp(-(-x)^{alpha})`),
    /// absent for Gumbel.
    pub fn alpha(&self) -> Option<f64> {
        match self.kind {
            CaseKind::Frechet => Some(1.0 / self.gamma),
            CaseKind::Weibull => Some(-1.0 / self.gamma),
            CaseKind::Gumbel => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self.kind {
            CaseKind::Frechet => "frechet",
            CaseKind::Weibull => "weibull",
            CaseKind::Gumbel => "gumbel",
        }
    }
}

impl std::fmt::Display for ExtremeCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.kind {
            CaseKind::Gumbel => write!(f, "gumbel"),
            _ => write!(f, "{}(gamma={})", self.name(), self.gamma),
        }
    }
}

/// Result of pushing an original-coordinate point into the reduced coordinate
/// without erroring: points left of a Frechet support reduce to "no mass yet".
enum Reduced {
    BelowSupport,
    At(f64),
}

fn reduced(case: ExtremeCase, x: f64) -> Reduced {
    match case.kind {
        CaseKind::Frechet => {
            if x <= 0.0 {
                Reduced::BelowSupport
            } else {
                Reduced::At(x.powf(-1.0 / case.gamma))
            }
        }
        CaseKind::Weibull => {
            if x >= 0.0 {
                // All mass of both laws sits below 0, so the CDFs are 1 here,
                // which is exactly e^{-t} and (1 - t/n)^n at t = 0.
                Reduced::At(0.0)
            } else {
                Reduced::At((-x).powf(-1.0 / case.gamma))
            }
        }
        CaseKind::Gumbel => Reduced::At((-x).exp()),
    }
}

/// |dt/dx| for the reduction map, 0 off the open support.
fn jacobian(case: ExtremeCase, x: f64) -> f64 {
    match case.kind {
        CaseKind::Frechet => {
            if x <= 0.0 {
                0.0
            } else {
                let a = 1.0 / case.gamma;
                a * x.powf(-a - 1.0)
            }
        }
        CaseKind::Weibull => {
            if x >= 0.0 {
                0.0
            } else {
                let b = -1.0 / case.gamma;
                b * (-x).powf(b - 1.0)
            }
        }
        CaseKind::Gumbel => (-x).exp(),
    }
}

/// The strictly decreasing reduction map onto `[0, inf)`:
/// Frechet `x^{-1/gamma}`, Weibull `(-x)^{-1/gamma}`, Gumbel `e^{-x}`.
///
/// Errors when x lies outside the closure of the limit law's support.
pub fn reduce_to_unit(case: ExtremeCase, x: f64) -> Result<f64> {
    if x.is_nan() {
        return Err(Error::domain("reduce_to_unit: x is NaN".to_string()));
    }
    match case.kind {
        CaseKind::Frechet if x < 0.0 => Err(Error::domain(format!(
            "frechet support is [0, inf), got x = {x}"
        ))),
        CaseKind::Frechet if x == 0.0 => Ok(f64::INFINITY),
        CaseKind::Frechet => Ok(x.powf(-1.0 / case.gamma)),
        CaseKind::Weibull if x > 0.0 => Err(Error::domain(format!(
            "weibull support is (-inf, 0], got x = {x}"
        ))),
        CaseKind::Weibull => Ok((-x).powf(-1.0 / case.gamma)),
        CaseKind::Gumbel => Ok((-x).exp()),
    }
}

/// Inverse of [`reduce_to_unit`] for t >= 0:
/// Frechet `t^{-gamma}`, Weibull `-t^{-gamma}`, Gumbel `-log t`.
pub fn from_unit(case: ExtremeCase, t: f64) -> f64 {
    debug_assert!(t >= 0.0);
    match case.kind {
        CaseKind::Frechet => t.powf(-case.gamma),
        CaseKind::Weibull => -t.powf(-case.gamma),
        CaseKind::Gumbel => -t.ln(),
    }
}

/// CDF of the limit law, defined on all of the reals.
pub fn limit_cdf(case: ExtremeCase, x: f64) -> f64 {
    match reduced(case, x) {
        Reduced::BelowSupport => 0.0,
        Reduced::At(t) => (-t).exp(),
    }
}

/// Density of the limit law, 0 off the open support.
pub fn limit_pdf(case: ExtremeCase, x: f64) -> f64 {
    let jac = jacobian(case, x);
    if jac == 0.0 {
        return 0.0;
    }
    match reduced(case, x) {
        Reduced::BelowSupport => 0.0,
        Reduced::At(t) => (-t).exp() * jac,
    }
}

/// Inverse of [`limit_cdf`] on p in (0, 1).
pub fn limit_quantile(case: ExtremeCase, p: f64) -> Result<f64> {
    if !(p > 0.0 && p < 1.0) {
        return Err(Error::domain(format!(
            "quantile level must lie in (0,1), got {p}"
        )));
    }
    Ok(from_unit(case, -p.ln()))
}

/// Survival function of the scaled minimum `n U_{1,n}`:
/// `(1 - t/n)^n` for t in [0, n], 0 beyond, evaluated as
/// `exp(n log1p(-t/n))` so it stays accurate up to n = 10^12.
pub fn scaled_min_sf(n: u64, t: f64) -> f64 {
    let nf = n as f64;
    if t >= nf {
        0.0
    } else if t <= 0.0 {
        1.0
    } else {
        (nf * (-t / nf).ln_1p()).exp()
    }
}

/// Density of the scaled minimum `n U_{1,n}`: `(1 - t/n)^{n-1}` on [0, n).
pub fn scaled_min_density(n: u64, t: f64) -> f64 {
    let nf = n as f64;
    if t >= nf || t < 0.0 {
        0.0
    } else {
        ((nf - 1.0) * (-t / nf).ln_1p()).exp()
    }
}

/// CDF of the representation law Z_n at x.
///
/// Equals `(1 - t/n)^n` for `t = reduce_to_unit(case, x) < n` and 0 for
/// t >= n; for the Frechet case that is `(1 - x^{-alpha}/n)^n` when
/// `n x^alpha > 1` and 0 otherwise. Panics if n < 2.
pub fn rep_cdf(n: u64, case: ExtremeCase, x: f64) -> f64 {
    assert!(n >= 2, "representation law requires n >= 2");
    match reduced(case, x) {
        Reduced::BelowSupport => 0.0,
        Reduced::At(t) => scaled_min_sf(n, t),
    }
}

/// Density of the representation law Z_n at x, 0 off its support.
/// Panics if n < 2.
pub fn rep_pdf(n: u64, case: ExtremeCase, x: f64) -> f64 {
    assert!(n >= 2, "representation law requires n >= 2");
    let jac = jacobian(case, x);
    if jac == 0.0 {
        return 0.0;
    }
    match reduced(case, x) {
        Reduced::BelowSupport => 0.0,
        Reduced::At(t) => scaled_min_density(n, t) * jac,
    }
}

/// The exact law of Z_n(case) for a fixed sample size n >= 2.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RepresentationLaw {
    n: u64,
    case: ExtremeCase,
}

impl RepresentationLaw {
    pub fn new(n: u64, case: ExtremeCase) -> Result<Self> {
        check_n(n)?;
        Ok(RepresentationLaw { n, case })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn case(&self) -> ExtremeCase {
        self.case
    }

    pub fn cdf(&self, x: f64) -> f64 {
        rep_cdf(self.n, self.case, x)
    }

    pub fn pdf(&self, x: f64) -> f64 {
        rep_pdf(self.n, self.case, x)
    }

    /// Endpoints of the open support: reduced coordinates n and 0 mapped back
    /// through the decreasing inverse, so Frechet gives `(n^{-gamma}, inf)`,
    /// Weibull `(-n^{-gamma}, 0)` and Gumbel `(-log n, inf)`.
    pub fn support(&self) -> (f64, f64) {
        (from_unit(self.case, self.n as f64), from_unit(self.case, 0.0))
    }
}
