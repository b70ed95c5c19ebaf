//! C ABI over the evrates core.
//!
//! Conventions:
//! - Every fallible call returns an EvrStatus and writes its result
//!   through an out pointer that is only touched on `EVR_STATUS_OK`.
//! - Case handles come from the `evr_case_*` constructors, are immutable,
//!   and must be released with evr_case_free.
//! - After a non-OK status, evr_last_error_message returns a
//!   NUL-terminated description. The buffer is thread-local and stays valid
//!   until the next failing call on the same thread.
//! - Panics never cross the boundary; they surface as
//!   `EVR_STATUS_NUMERICAL`.

#![deny(unsafe_op_in_unsafe_fn)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use evrates::distributions::{
    from_unit, limit_cdf, limit_pdf, limit_quantile, reduce_to_unit, CaseKind, ExtremeCase,
};
use evrates::{bounds, metrics, montecarlo};

/// Outcome of a call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvrStatus {
    /// Success; out parameters are filled.
    Ok = 0,
    /// An argument violated a documented precondition.
    Domain = 1,
    /// An iterative kernel failed, or an internal invariant broke.
    Numerical = 2,
    /// A required pointer was null.
    NullPointer = 3,
}

/// Which of the three limit families a case handle selects.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvrCaseKind {
    Frechet = 0,
    Weibull = 1,
    Gumbel = 2,
}

/// Opaque handle over a validated limit-family selection.
pub struct EvrCase(ExtremeCase);

/// Root of the density-crossing equation in reduced coordinates.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvrCrossing {
    pub n: u64,
    pub y_star: f64,
    pub residual: f64,
    pub bracket_width: f64,
}

/// Exact distances plus the crossing point and decomposition pieces,
/// flattened for C consumption.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvrDistance {
    pub n: u64,
    pub ks: f64,
    pub tv: f64,
    pub y_star: f64,
    pub residual: f64,
    pub bracket_width: f64,
    pub mass_left: f64,
    pub a1: f64,
    pub a2: f64,
    pub alpha_n3: f64,
    pub alpha_n3_tight: f64,
    pub ell_sup: f64,
}

/// Stable identifiers for the inequality-chain steps, in chain order.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvrBoundStepKind {
    CrossingDecomposition = 0,
    EllSupremum = 1,
    OneOverN = 2,
    Lemma = 3,
    Theorem = 4,
    IntermediateCombination = 5,
}

/// One evaluated inequality: `lhs <= rhs` claimed when `asserted` is 1.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvrBoundStep {
    pub kind: EvrBoundStepKind,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: u8,
    pub asserted: u8,
}

/// Number of steps evr_bound_chain writes.
pub const EVR_BOUND_CHAIN_LEN: usize = 6;

/// Truncated series value with a rigorous tail bound.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvrLemmaSeries {
    pub value: f64,
    pub tail_bound: f64,
    pub terms: u32,
}

/// Everything the certification of a single n needs from the bounds layer.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvrBoundBreakdown {
    pub n: u64,
    pub g1: f64,
    pub series_value: f64,
    pub series_tail_bound: f64,
    pub f2_value: f64,
    pub c0: f64,
    pub lemma_bound: f64,
    pub theorem_bound: f64,
    pub f1_holds: u8,
    pub f2_holds: u8,
    pub lemma_holds: u8,
}

/// Outcome of one empirical-vs-exact comparison.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvrMcResult {
    pub n: u64,
    pub samples: u64,
    pub seed: u64,
    pub empirical_ks: f64,
    pub dkw_epsilon: f64,
    pub exact_ks: f64,
    pub pass: u8,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: EvrStatus, msg: &str) -> EvrStatus {
    let text = CString::new(msg)
        .unwrap_or_else(|_| CString::new("error message contained an interior NUL").unwrap());
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
    status
}

fn fail_err(e: evrates::Error) -> EvrStatus {
    let status = match e {
        evrates::Error::Domain(_) => EvrStatus::Domain,
        evrates::Error::Numerical(_) => EvrStatus::Numerical,
    };
    fail(status, &e.to_string())
}

fn guard(body: impl FnOnce() -> EvrStatus) -> EvrStatus {
    catch_unwind(AssertUnwindSafe(body))
        .unwrap_or_else(|_| fail(EvrStatus::Numerical, "internal panic"))
}

fn null_ptr(what: &str) -> EvrStatus {
    fail(EvrStatus::NullPointer, &format!("null pointer: {what}"))
}

fn check_n_ffi(n: u64) -> Result<(), EvrStatus> {
    if n < 2 {
        Err(fail(
            EvrStatus::Domain,
            &format!("sample size n must be >= 2, got {n}"),
        ))
    } else {
        Ok(())
    }
}

/// Last failure description for this thread; never null, possibly empty.
#[no_mangle]
pub extern "C" fn evr_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn evr_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

// ---------------------------------------------------------------- cases

fn emit_case(case: ExtremeCase, out: *mut *mut EvrCase) -> EvrStatus {
    unsafe { out.write(Box::into_raw(Box::new(EvrCase(case)))) };
    EvrStatus::Ok
}

/// Create a Frechet handle; requires gamma > 0.
#[no_mangle]
pub unsafe extern "C" fn evr_case_frechet(gamma: f64, out: *mut *mut EvrCase) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        match ExtremeCase::frechet(gamma) {
            Ok(c) => emit_case(c, out),
            Err(e) => fail_err(e),
        }
    })
}

/// Create a Weibull handle; requires gamma < 0.
#[no_mangle]
pub unsafe extern "C" fn evr_case_weibull(gamma: f64, out: *mut *mut EvrCase) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        match ExtremeCase::weibull(gamma) {
            Ok(c) => emit_case(c, out),
            Err(e) => fail_err(e),
        }
    })
}

/// Create a Gumbel handle.
#[no_mangle]
pub unsafe extern "C" fn evr_case_gumbel(out: *mut *mut EvrCase) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        emit_case(ExtremeCase::gumbel(), out)
    })
}

/// Release a handle; a null argument is a no-op.
#[no_mangle]
pub unsafe extern "C" fn evr_case_free(case: *mut EvrCase) {
    if !case.is_null() {
        drop(unsafe { Box::from_raw(case) });
    }
}

fn read_case(case: *const EvrCase) -> Result<ExtremeCase, EvrStatus> {
    match unsafe { case.as_ref() } {
        Some(handle) => Ok(handle.0),
        None => Err(null_ptr("case")),
    }
}

/// Which family the handle selects.
#[no_mangle]
pub unsafe extern "C" fn evr_case_kind(
    case: *const EvrCase,
    out: *mut EvrCaseKind,
) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        let c = match read_case(case) {
            Ok(c) => c,
            Err(s) => return s,
        };
        let kind = match c.kind() {
            CaseKind::Frechet => EvrCaseKind::Frechet,
            CaseKind::Weibull => EvrCaseKind::Weibull,
            CaseKind::Gumbel => EvrCaseKind::Gumbel,
        };
        unsafe { out.write(kind) };
        EvrStatus::Ok
    })
}

/// The extreme value index; 0 for Gumbel.
#[no_mangle]
pub unsafe extern "C" fn evr_case_gamma(case: *const EvrCase, out: *mut f64) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        let c = match read_case(case) {
            Ok(c) => c,
            Err(s) => return s,
        };
        unsafe { out.write(c.gamma()) };
        EvrStatus::Ok
    })
}

/// The positive power-form exponent; a domain error for Gumbel.
#[no_mangle]
pub unsafe extern "C" fn evr_case_alpha(case: *const EvrCase, out: *mut f64) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        let c = match read_case(case) {
            Ok(c) => c,
            Err(s) => return s,
        };
        match c.alpha() {
            Some(a) => {
                unsafe { out.write(a) };
                EvrStatus::Ok
            }
            None => fail(EvrStatus::Domain, "gumbel has no power-form exponent"),
        }
    })
}

// ---------------------------------------------------------------- evaluation

fn eval_with_case(
    case: *const EvrCase,
    out: *mut f64,
    f: impl FnOnce(ExtremeCase) -> Result<f64, evrates::Error>,
) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        let c = match read_case(case) {
            Ok(c) => c,
            Err(s) => return s,
        };
        match f(c) {
            Ok(v) => {
                unsafe { out.write(v) };
                EvrStatus::Ok
            }
            Err(e) => fail_err(e),
        }
    })
}

/// Limit-law cdf at x.
#[no_mangle]
pub unsafe extern "C" fn evr_limit_cdf(
    case: *const EvrCase,
    x: f64,
    out: *mut f64,
) -> EvrStatus {
    eval_with_case(case, out, |c| Ok(limit_cdf(c, x)))
}

/// Limit-law density at x.
#[no_mangle]
pub unsafe extern "C" fn evr_limit_pdf(
    case: *const EvrCase,
    x: f64,
    out: *mut f64,
) -> EvrStatus {
    eval_with_case(case, out, |c| Ok(limit_pdf(c, x)))
}

/// Limit-law quantile; requires p strictly inside (0, 1).
#[no_mangle]
pub unsafe extern "C" fn evr_limit_quantile(
    case: *const EvrCase,
    p: f64,
    out: *mut f64,
) -> EvrStatus {
    eval_with_case(case, out, |c| limit_quantile(c, p))
}

/// Finite-sample representation-law cdf at x; requires n >= 2.
#[no_mangle]
pub unsafe extern "C" fn evr_rep_cdf(
    n: u64,
    case: *const EvrCase,
    x: f64,
    out: *mut f64,
) -> EvrStatus {
    eval_with_case(case, out, |c| {
        evrates::distributions::RepresentationLaw::new(n, c).map(|law| law.cdf(x))
    })
}

/// Finite-sample representation-law density at x; requires n >= 2.
#[no_mangle]
pub unsafe extern "C" fn evr_rep_pdf(
    n: u64,
    case: *const EvrCase,
    x: f64,
    out: *mut f64,
) -> EvrStatus {
    eval_with_case(case, out, |c| {
        evrates::distributions::RepresentationLaw::new(n, c).map(|law| law.pdf(x))
    })
}

/// Strictly decreasing map from the case's support onto (0, inf).
#[no_mangle]
pub unsafe extern "C" fn evr_reduce_to_unit(
    case: *const EvrCase,
    x: f64,
    out: *mut f64,
) -> EvrStatus {
    eval_with_case(case, out, |c| reduce_to_unit(c, x))
}

/// Inverse of the reduction; maps t > 0 back into the support.
#[no_mangle]
pub unsafe extern "C" fn evr_from_unit(
    case: *const EvrCase,
    t: f64,
    out: *mut f64,
) -> EvrStatus {
    eval_with_case(case, out, |c| Ok(from_unit(c, t)))
}

// ---------------------------------------------------------------- distance

/// Root of the crossing equation for this n.
#[no_mangle]
pub unsafe extern "C" fn evr_crossing_point(n: u64, out: *mut EvrCrossing) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        match metrics::crossing_point(n) {
            Ok(c) => {
                unsafe {
                    out.write(EvrCrossing {
                        n: c.n,
                        y_star: c.y_star,
                        residual: c.residual,
                        bracket_width: c.bracket_width,
                    })
                };
                EvrStatus::Ok
            }
            Err(e) => fail_err(e),
        }
    })
}

/// Exact Kolmogorov and total-variation distance with the decomposition.
#[no_mangle]
pub unsafe extern "C" fn evr_ks_tv_exact(n: u64, out: *mut EvrDistance) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        match metrics::ks_tv_exact(n) {
            Ok(d) => {
                unsafe {
                    out.write(EvrDistance {
                        n: d.n,
                        ks: d.ks,
                        tv: d.tv,
                        y_star: d.crossing.y_star,
                        residual: d.crossing.residual,
                        bracket_width: d.crossing.bracket_width,
                        mass_left: d.pieces.mass_left,
                        a1: d.pieces.a1,
                        a2: d.pieces.a2,
                        alpha_n3: d.pieces.alpha_n3,
                        alpha_n3_tight: d.pieces.alpha_n3_tight,
                        ell_sup: d.pieces.ell_sup,
                    })
                };
                EvrStatus::Ok
            }
            Err(e) => fail_err(e),
        }
    })
}

/// Grid-scan lower bound on the sup-distance in reduced coordinates.
#[no_mangle]
pub unsafe extern "C" fn evr_ks_scan_oracle(
    n: u64,
    grid_size: usize,
    out: *mut f64,
) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        if let Err(s) = check_n_ffi(n) {
            return s;
        }
        if grid_size < 2 {
            return fail(EvrStatus::Domain, "grid_size must be at least 2");
        }
        unsafe { out.write(metrics::ks_scan_oracle(n, grid_size)) };
        EvrStatus::Ok
    })
}

/// Quadrature estimate of the total-variation distance.
#[no_mangle]
pub unsafe extern "C" fn evr_tv_quadrature_oracle(
    n: u64,
    tol: f64,
    out: *mut f64,
) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        match metrics::tv_quadrature_oracle(n, tol) {
            Ok(v) => {
                unsafe { out.write(v) };
                EvrStatus::Ok
            }
            Err(e) => fail_err(e),
        }
    })
}

/// Grid-scan sup-distance in the case's original coordinate.
#[no_mangle]
pub unsafe extern "C" fn evr_distance_in_original_coordinates(
    n: u64,
    case: *const EvrCase,
    grid_size: usize,
    out: *mut f64,
) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        let c = match read_case(case) {
            Ok(c) => c,
            Err(s) => return s,
        };
        if let Err(s) = check_n_ffi(n) {
            return s;
        }
        if grid_size < 2 {
            return fail(EvrStatus::Domain, "grid_size must be at least 2");
        }
        unsafe { out.write(metrics::distance_in_original_coordinates(n, c, grid_size)) };
        EvrStatus::Ok
    })
}

fn step_kind(name: &str) -> Option<EvrBoundStepKind> {
    Some(match name {
        "crossing_decomposition" => EvrBoundStepKind::CrossingDecomposition,
        "ell_supremum" => EvrBoundStepKind::EllSupremum,
        "one_over_n" => EvrBoundStepKind::OneOverN,
        "lemma" => EvrBoundStepKind::Lemma,
        "theorem" => EvrBoundStepKind::Theorem,
        "intermediate_combination" => EvrBoundStepKind::IntermediateCombination,
        _ => return None,
    })
}

/// Evaluate the full inequality chain; writes exactly
/// `EVR_BOUND_CHAIN_LEN` steps to `steps`.
#[no_mangle]
pub unsafe extern "C" fn evr_bound_chain(n: u64, steps: *mut EvrBoundStep) -> EvrStatus {
    guard(|| {
        if steps.is_null() {
            return null_ptr("steps");
        }
        let chain = match metrics::bound_chain(n) {
            Ok(c) => c,
            Err(e) => return fail_err(e),
        };
        if chain.len() != EVR_BOUND_CHAIN_LEN {
            return fail(EvrStatus::Numerical, "unexpected chain length");
        }
        for (i, s) in chain.iter().enumerate() {
            let Some(kind) = step_kind(s.name) else {
                return fail(EvrStatus::Numerical, "unknown chain step name");
            };
            unsafe {
                steps.add(i).write(EvrBoundStep {
                    kind,
                    lhs: s.lhs,
                    rhs: s.rhs,
                    holds: s.holds as u8,
                    asserted: s.asserted as u8,
                })
            };
        }
        EvrStatus::Ok
    })
}

/// Static name for a chain step identifier.
#[no_mangle]
pub extern "C" fn evr_bound_step_name(kind: EvrBoundStepKind) -> *const c_char {
    let bytes: &[u8] = match kind {
        EvrBoundStepKind::CrossingDecomposition => b"crossing_decomposition\0",
        EvrBoundStepKind::EllSupremum => b"ell_supremum\0",
        EvrBoundStepKind::OneOverN => b"one_over_n\0",
        EvrBoundStepKind::Lemma => b"lemma\0",
        EvrBoundStepKind::Theorem => b"theorem\0",
        EvrBoundStepKind::IntermediateCombination => b"intermediate_combination\0",
    };
    bytes.as_ptr() as *const c_char
}

// ---------------------------------------------------------------- bounds

fn eval_scalar(out: *mut f64, f: impl FnOnce() -> Result<f64, evrates::Error>) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        match f() {
            Ok(v) => {
                unsafe { out.write(v) };
                EvrStatus::Ok
            }
            Err(e) => fail_err(e),
        }
    })
}

/// Density ratio at the lower support edge, `e (1 - 1/n)^{n-1}`.
#[no_mangle]
pub unsafe extern "C" fn evr_g1(n: u64, out: *mut f64) -> EvrStatus {
    eval_scalar(out, || bounds::g1(n))
}

/// The universal constant `exp(f2_bound(2))`.
#[no_mangle]
pub extern "C" fn evr_c0() -> f64 {
    bounds::c0()
}

/// Closed-form series majorant `1/(2n) + 1/(n^2 log n)`.
#[no_mangle]
pub unsafe extern "C" fn evr_f2_bound(n: u64, out: *mut f64) -> EvrStatus {
    eval_scalar(out, || bounds::f2_bound(n))
}

/// Bound on `g1(n) - 1`, `c0 * f2_bound(n)`.
#[no_mangle]
pub unsafe extern "C" fn evr_lemma_bound(n: u64, out: *mut f64) -> EvrStatus {
    eval_scalar(out, || bounds::lemma_bound(n))
}

/// Closed-form rate `(2 + c0)/(4n) + c0/(2 n^2 log n)`.
#[no_mangle]
pub unsafe extern "C" fn evr_theorem_bound(n: u64, out: *mut f64) -> EvrStatus {
    eval_scalar(out, || bounds::theorem_bound(n))
}

/// Truncated series with a rigorous tail bound; rel_tol >= 1e-16.
#[no_mangle]
pub unsafe extern "C" fn evr_lemma_series(
    n: u64,
    rel_tol: f64,
    out: *mut EvrLemmaSeries,
) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        match bounds::lemma_series(n, rel_tol) {
            Ok(s) => {
                unsafe {
                    out.write(EvrLemmaSeries {
                        value: s.value,
                        tail_bound: s.tail_bound,
                        terms: s.terms,
                    })
                };
                EvrStatus::Ok
            }
            Err(e) => fail_err(e),
        }
    })
}

/// Full certification record for one n.
#[no_mangle]
pub unsafe extern "C" fn evr_bound_breakdown(
    n: u64,
    series_rel_tol: f64,
    out: *mut EvrBoundBreakdown,
) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        match bounds::bound_breakdown(n, series_rel_tol) {
            Ok(b) => {
                unsafe {
                    out.write(EvrBoundBreakdown {
                        n: b.n,
                        g1: b.g1,
                        series_value: b.series_value,
                        series_tail_bound: b.series_tail_bound,
                        f2_value: b.f2_value,
                        c0: b.c0,
                        lemma_bound: b.lemma_bound,
                        theorem_bound: b.theorem_bound,
                        f1_holds: b.f1_holds() as u8,
                        f2_holds: b.f2_holds() as u8,
                        lemma_holds: b.lemma_holds() as u8,
                    })
                };
                EvrStatus::Ok
            }
            Err(e) => fail_err(e),
        }
    })
}

// ---------------------------------------------------------------- sampling

/// DKW band half-width for the given sample count and confidence.
#[no_mangle]
pub extern "C" fn evr_dkw_epsilon(samples: u64, confidence: f64) -> f64 {
    montecarlo::dkw_epsilon(samples, confidence)
}

/// Draw representation-law samples into a caller buffer of capacity
/// `buf_len >= samples`. Deterministic in (n, case, samples, seed) and
/// independent of thread count.
#[no_mangle]
pub unsafe extern "C" fn evr_draw_samples(
    n: u64,
    case: *const EvrCase,
    samples: u64,
    seed: u64,
    buf: *mut f64,
    buf_len: usize,
) -> EvrStatus {
    guard(|| {
        if buf.is_null() {
            return null_ptr("buf");
        }
        let c = match read_case(case) {
            Ok(c) => c,
            Err(s) => return s,
        };
        if let Err(s) = check_n_ffi(n) {
            return s;
        }
        if u64::try_from(buf_len).map_or(true, |len| len < samples) {
            return fail(
                EvrStatus::Domain,
                &format!("buffer holds {buf_len} values but {samples} were requested"),
            );
        }
        let v = montecarlo::draw_samples(n, c, samples, seed);
        unsafe { std::ptr::copy_nonoverlapping(v.as_ptr(), buf, v.len()) };
        EvrStatus::Ok
    })
}

/// Empirical-vs-exact Kolmogorov comparison; samples >= 10^4.
#[no_mangle]
pub unsafe extern "C" fn evr_empirical_ks(
    n: u64,
    case: *const EvrCase,
    samples: u64,
    seed: u64,
    out: *mut EvrMcResult,
) -> EvrStatus {
    guard(|| {
        if out.is_null() {
            return null_ptr("out");
        }
        let c = match read_case(case) {
            Ok(c) => c,
            Err(s) => return s,
        };
        match montecarlo::empirical_ks(n, c, samples, seed) {
            Ok(r) => {
                unsafe {
                    out.write(EvrMcResult {
                        n: r.n,
                        samples: r.samples,
                        seed: r.seed,
                        empirical_ks: r.empirical_ks,
                        dkw_epsilon: r.dkw_epsilon,
                        exact_ks: r.exact_ks,
                        pass: r.pass as u8,
                    })
                };
                EvrStatus::Ok
            }
            Err(e) => fail_err(e),
        }
    })
}
