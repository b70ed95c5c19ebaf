//! The closed-form certification bounds and the series machinery behind them.
//!
//! Everything here revolves around the quantity `g1(n) = e (1 - 1/n)^{n-1}`,
//! the value at the lower support edge of the density ratio whose excess over
//! 1 controls the total variation distance. Two facts are certified
//! numerically throughout the test suite:
//!
//! * the identity `g1(n) = exp(S(n))` with
//!   `S(n) = sum_{k>=1} 1/(k(k+1) n^k)`, obtained by expanding
//!   `(n-1) log(1 - 1/n)` into its power series, and
//! * the comparison `S(n) <= 1/(2n) + 1/(n^2 log n)` used to turn the series
//!   into an elementary expression (see [`f2_bound`]). The comparison is a
//!   majorization of the k >= 2 tail by an integral; it is generous for small
//!   n and reverses for n large enough that `log n > 6`-ish, so callers
//!   should treat it as a small-n device (the certified bounds below do not
//!   depend on it holding).
//!
//! The constant `C0 = exp(f2_bound(2))` converts the additive series bound
//! into the multiplicative form `g1(n) - 1 <= C0 (1/(2n) + 1/(n^2 log n))`
//! via `e^u - 1 <= u e^u <= C0 u` for `0 < u <= f2_bound(2)`. Combining that
//! with the exact distance decomposition yields the final closed-form rate
//! `theorem_bound(n) = (2 + C0)/(4n) + C0/(2 n^2 log n)`, valid for every
//! n >= 2.

use crate::error::{check_n, Error, Result};

/// `g1(n) = e (1 - 1/n)^{n-1}`, strictly above 1 and decreasing to 1.
pub fn g1(n: u64) -> Result<f64> {
    check_n(n)?;
    let nf = n as f64;
    Ok((1.0 + (nf - 1.0) * (-1.0 / nf).ln_1p()).exp())
}

/// The universal constant `C0 = exp(f2_bound(2)) = exp(1/4 + 1/(4 log 2))`,
/// computed at runtime at full precision rather than from a rounded literal.
pub fn c0() -> f64 {
    f2_value(2.0).exp()
}

fn f2_value(nf: f64) -> f64 {
    0.5 / nf + 1.0 / (nf * nf * nf.ln())
}

/// The elementary series majorant `1/(2n) + 1/(n^2 log n)`.
pub fn f2_bound(n: u64) -> Result<f64> {
    check_n(n)?;
    Ok(f2_value(n as f64))
}

/// Truncated evaluation of `S(n) = sum_{k>=1} 1/(k(k+1) n^k)` together with a
/// rigorous bound on the discarded tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaSeries {
    pub value: f64,
    pub tail_bound: f64,
    /// Number of terms actually summed.
    pub terms: u32,
}

/// Sum `S(n)` until the geometric tail bound
/// `1/((K+1)(K+2) n^K (n-1))` drops below `rel_tol * value`.
///
/// The truncation index adapts to n; no fixed K is ever used.
pub fn lemma_series(n: u64, rel_tol: f64) -> Result<LemmaSeries> {
    check_n(n)?;
    if !(rel_tol >= 1e-16) {
        return Err(Error::domain(format!(
            "series tolerance must be >= 1e-16, got {rel_tol}"
        )));
    }
    let nf = n as f64;
    let mut value = 0.0;
    let mut pow = 1.0;
    for k in 1..=10_000u32 {
        let kf = k as f64;
        pow *= nf;
        value += 1.0 / (kf * (kf + 1.0) * pow);
        let tail = 1.0 / ((kf + 1.0) * (kf + 2.0) * pow * (nf - 1.0));
        if tail <= rel_tol * value {
            return Ok(LemmaSeries { value, tail_bound: tail, terms: k });
        }
    }
    Err(Error::numerical(format!(
        "series for n = {n} did not meet rel_tol = {rel_tol:e} within 10000 terms"
    )))
}

/// The certified bound on `g1(n) - 1`: `C0 * f2_bound(n)`.
pub fn lemma_bound(n: u64) -> Result<f64> {
    Ok(c0() * f2_bound(n)?)
}

/// The closed-form convergence-rate bound
/// `(2 + C0)/(4n) + C0/(2 n^2 log n)`, strictly decreasing in n; the exact
/// Kolmogorov distance of every representation law sits below it for all
/// n >= 2.
pub fn theorem_bound(n: u64) -> Result<f64> {
    check_n(n)?;
    let nf = n as f64;
    let c = c0();
    Ok((2.0 + c) / (4.0 * nf) + c / (2.0 * nf * nf * nf.ln()))
}

/// Everything the certification of a single n needs from this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundBreakdown {
    pub n: u64,
    pub g1: f64,
    pub series_value: f64,
    pub series_tail_bound: f64,
    pub f2_value: f64,
    pub c0: f64,
    pub lemma_bound: f64,
    pub theorem_bound: f64,
}

impl BoundBreakdown {
    /// Does `g1 = exp(series)` hold to 1e-12 relative?
    pub fn f1_holds(&self) -> bool {
        (self.g1 - self.series_value.exp()).abs() <= 1e-12 * self.g1
    }

    /// Does the elementary majorant dominate the series at this n?
    pub fn f2_holds(&self) -> bool {
        self.series_value <= self.f2_value
    }

    /// Does the sandwich `0 <= g1 - 1 <= lemma_bound` hold?
    pub fn lemma_holds(&self) -> bool {
        let excess = self.g1 - 1.0;
        (0.0..=self.lemma_bound).contains(&excess)
    }
}

pub fn bound_breakdown(n: u64, series_rel_tol: f64) -> Result<BoundBreakdown> {
    let series = lemma_series(n, series_rel_tol)?;
    Ok(BoundBreakdown {
        n,
        g1: g1(n)?,
        series_value: series.value,
        series_tail_bound: series.tail_bound,
        f2_value: f2_bound(n)?,
        c0: c0(),
        lemma_bound: lemma_bound(n)?,
        theorem_bound: theorem_bound(n)?,
    })
}
