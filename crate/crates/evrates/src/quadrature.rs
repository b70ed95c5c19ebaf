//! Adaptive Simpson quadrature with an explicit recursion-depth cap.
//!
//! The classic scheme: compare the Simpson estimate over [a, b] with the sum
//! over the two halves, accept when the discrepancy is within 15x the local
//! tolerance (the factor comes from the O(h^4) error ratio of the two
//! estimates), otherwise recurse with half the tolerance on each side. The
//! accepted value includes the Richardson correction `delta/15`, giving the
//! composite rule one extra order.

use crate::error::{Error, Result};

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn refine<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth_left: u32,
) -> Result<f64> {
    let m = 0.5 * (a + b);
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let flm = f(lm);
    let frm = f(rm);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol || m == a || m == b {
        return Ok(left + right + delta / 15.0);
    }
    if depth_left == 0 {
        return Err(Error::numerical(format!(
            "adaptive Simpson hit the depth cap on [{a:e}, {b:e}]: \
             refinement delta {delta:e} still exceeds local tolerance {tol:e}"
        )));
    }
    let half_tol = 0.5 * tol;
    Ok(refine(f, a, m, fa, flm, fm, left, half_tol, depth_left - 1)?
        + refine(f, m, b, fm, frm, fb, right, half_tol, depth_left - 1)?)
}

/// Integrate f over [a, b] to absolute tolerance `tol`, splitting at most
/// `max_depth` times; errors with diagnostics when refinement stalls.
pub fn adaptive_simpson<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    tol: f64,
    max_depth: u32,
) -> Result<f64> {
    if !(b > a) {
        return Err(Error::domain(format!(
            "integration bounds must satisfy a < b, got [{a}, {b}]"
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::domain(format!("tolerance must be > 0, got {tol}")));
    }
    let m = 0.5 * (a + b);
    let fa = f(a);
    let fm = f(m);
    let fb = f(b);
    let whole = simpson(a, b, fa, fm, fb);
    refine(&f, a, b, fa, fm, fb, whole, tol, max_depth)
}
