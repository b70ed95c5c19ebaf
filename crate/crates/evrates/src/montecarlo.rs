//! Sampling-based validation of the exact distances.
//!
//! Draws of `Z_n` come from the inverse-transform sampler for the minimum of
//! n uniforms, `U_{1,n} = 1 - V^{1/n}`, pushed through the case transform.
//! The empirical two-sided Kolmogorov statistic against the limit CDF is then
//! gated with the distribution-free DKW band, by default at 99% confidence:
//! with probability at least 0.99 the empirical statistic sits within
//! `sqrt(log(2/0.01)/(2N))` of the exact distance, whatever n is.
//!
//! Reproducibility: samples are generated in fixed-size chunks, each from its
//! own counter-indexed ChaCha8 stream derived from the seed, and concatenated
//! in chunk order. The result is byte-identical for a given seed regardless
//! of how many worker threads run the chunks.

use crate::distributions::{limit_cdf, CaseKind, ExtremeCase};
use crate::error::{check_n, Error, Result};
use crate::metrics::ks_tv_exact;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const CHUNK: u64 = 1 << 16;
const MIN_SAMPLES: u64 = 10_000;

/// Outcome of one empirical-vs-exact comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MCResult {
    pub n: u64,
    pub case: ExtremeCase,
    pub samples: u64,
    pub seed: u64,
    pub empirical_ks: f64,
    /// DKW band half-width at the gating confidence.
    pub dkw_epsilon: f64,
    pub exact_ks: f64,
    /// `|empirical_ks - exact_ks| <= dkw_epsilon + 1e-9`.
    pub pass: bool,
}

/// DKW band half-width: `sqrt(log(2/(1-confidence)) / (2 samples))`.
pub fn dkw_epsilon(samples: u64, confidence: f64) -> f64 {
    assert!(samples > 0 && confidence > 0.0 && confidence < 1.0);
    ((2.0 / (1.0 - confidence)).ln() / (2.0 * samples as f64)).sqrt()
}

fn check_confidence(confidence: f64) -> Result<()> {
    if confidence > 0.0 && confidence < 1.0 {
        Ok(())
    } else {
        Err(Error::domain(format!(
            "confidence must be strictly between 0 and 1, got {confidence}"
        )))
    }
}

/// One draw of `U_{1,n}`, the minimum of n independent uniforms on (0,1),
/// via `1 - V^{1/n} = -expm1(log(V)/n)`. Valid for any n >= 1; the result is
/// strictly inside (0,1).
pub fn sample_min_uniform<R: Rng + ?Sized>(n: u64, rng: &mut R) -> f64 {
    assert!(n >= 1);
    let v: f64 = rng.sample(rand::distributions::Open01);
    -f64::exp_m1(v.ln() / n as f64)
}

/// One draw of the representation law `Z_n(case)`.
pub fn sample_z<R: Rng + ?Sized>(n: u64, case: ExtremeCase, rng: &mut R) -> f64 {
    assert!(n >= 2);
    let w = n as f64 * sample_min_uniform(n, rng);
    match case.kind() {
        CaseKind::Frechet => w.powf(-case.gamma()),
        CaseKind::Weibull => -w.powf(-case.gamma()),
        CaseKind::Gumbel => -w.ln(),
    }
}

/// Deterministic parallel batch of `Z_n` draws (see the module notes on
/// chunked streams).
pub fn draw_samples(n: u64, case: ExtremeCase, samples: u64, seed: u64) -> Vec<f64> {
    let chunks = samples.div_ceil(CHUNK);
    let per_chunk: Vec<Vec<f64>> = (0..chunks)
        .into_par_iter()
        .map(|ci| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(ci);
            let count = CHUNK.min(samples - ci * CHUNK);
            (0..count).map(|_| sample_z(n, case, &mut rng)).collect()
        })
        .collect();
    per_chunk.into_iter().flatten().collect()
}

/// Draw N samples, compute the two-sided Kolmogorov statistic against the
/// limit CDF and gate it with the 99% DKW band around the exact distance.
/// Deterministic given the seed. Requires N >= 10^4.
pub fn empirical_ks(n: u64, case: ExtremeCase, samples: u64, seed: u64) -> Result<MCResult> {
    empirical_ks_at(n, case, samples, seed, 0.99)
}

/// Same gate at an arbitrary confidence level in (0, 1).
pub fn empirical_ks_at(
    n: u64,
    case: ExtremeCase,
    samples: u64,
    seed: u64,
    confidence: f64,
) -> Result<MCResult> {
    check_n(n)?;
    check_confidence(confidence)?;
    if samples < MIN_SAMPLES {
        return Err(Error::domain(format!(
            "need at least {MIN_SAMPLES} samples for a meaningful gate, got {samples}"
        )));
    }
    let exact_ks = ks_tv_exact(n)?.ks;
    let mut xs = draw_samples(n, case, samples, seed);
    xs.sort_unstable_by(f64::total_cmp);
    let m = samples as f64;
    let mut d: f64 = 0.0;
    for (i, &x) in xs.iter().enumerate() {
        let f = limit_cdf(case, x);
        let below = f - i as f64 / m;
        let above = (i as f64 + 1.0) / m - f;
        d = d.max(below).max(above);
    }
    let eps = dkw_epsilon(samples, confidence);
    Ok(MCResult {
        n,
        case,
        samples,
        seed,
        empirical_ks: d,
        dkw_epsilon: eps,
        exact_ks,
        pass: (d - exact_ks).abs() <= eps + 1e-9,
    })
}
