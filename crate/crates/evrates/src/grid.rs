//! Log-spaced evaluation grids.
//!
//! `log_spaced(lo, hi, m)` places its j-th point at
//! `exp(log lo + (log hi - log lo) * j/(m-1))`. Because the fractions j/(m-1)
//! of a coarse grid reappear exactly in any finer grid whose interval count is
//! a multiple of the coarse one (the two ratios are the same rational, so they
//! round to the same f64), such grids nest point-for-point. Scan maxima over
//! nested grids are therefore monotone under refinement.

/// `points >= 2` log-spaced values from lo to hi inclusive; both must be > 0.
pub fn log_spaced(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    assert!(points >= 2, "need at least 2 grid points");
    assert!(lo > 0.0 && hi > lo, "need 0 < lo < hi");
    let (la, lb) = (lo.ln(), hi.ln());
    let last = points - 1;
    (0..=last)
        .map(|j| {
            if j == 0 {
                lo
            } else if j == last {
                hi
            } else {
                (la + (lb - la) * (j as f64 / last as f64)).exp()
            }
        })
        .collect()
}

/// Log-spaced integer sample sizes, rounded to the nearest integer and
/// deduplicated while preserving order; endpoints always survive.
pub fn log_spaced_n(lo: u64, hi: u64, points: usize) -> Vec<u64> {
    assert!(lo >= 1 && hi > lo);
    let mut out: Vec<u64> = log_spaced(lo as f64, hi as f64, points)
        .into_iter()
        .map(|v| v.round() as u64)
        .collect();
    out.dedup();
    out
}
