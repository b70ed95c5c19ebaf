//! Simulation-layer checks: reproducibility across runs and thread counts,
//! distributional sanity of the sampler, and the empirical KS gate.

use evrates::distributions::{ExtremeCase, RepresentationLaw};
use evrates::metrics::ks_tv_exact;
use evrates::montecarlo::{
    dkw_epsilon, draw_samples, empirical_ks, empirical_ks_at, sample_min_uniform,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn dkw_band_reference_value() {
    assert!((dkw_epsilon(1_000_000, 0.99) - 1.6276236307187292e-3).abs() < 1e-17);
    // Wider band at lower confidence or fewer samples.
    assert!(dkw_epsilon(1_000_000, 0.95) < dkw_epsilon(1_000_000, 0.99));
    assert!(dkw_epsilon(10_000, 0.99) > dkw_epsilon(1_000_000, 0.99));
}

#[test]
fn same_seed_same_result() {
    let case = ExtremeCase::frechet(1.0).unwrap();
    let a = empirical_ks(2, case, 200_000, 42).unwrap();
    let b = empirical_ks(2, case, 200_000, 42).unwrap();
    assert_eq!(a.empirical_ks, b.empirical_ks);
    let c = empirical_ks(2, case, 200_000, 43).unwrap();
    assert_ne!(a.empirical_ks, c.empirical_ks);
}

#[test]
fn draws_do_not_depend_on_thread_count() {
    let case = ExtremeCase::gumbel();
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| draw_samples(7, case, 200_001, 9));
    let four = rayon::ThreadPoolBuilder::new()
        .num_threads(4)
        .build()
        .unwrap()
        .install(|| draw_samples(7, case, 200_001, 9));
    assert_eq!(one, four);
}

#[test]
fn chunked_generation_is_prefix_stable() {
    let case = ExtremeCase::frechet(2.0).unwrap();
    let short = draw_samples(3, case, 65_536, 5);
    let long = draw_samples(3, case, 131_073, 5);
    assert_eq!(short.as_slice(), &long[..65_536]);
    for len in [65_535u64, 65_536, 65_537] {
        assert_eq!(draw_samples(3, case, len, 5).len() as u64, len);
    }
}

#[test]
fn min_uniform_mean_matches_order_statistics() {
    // E[min of 10 uniforms] = 1/11, sd = sqrt(10/(11^2 * 12)) / sqrt(N).
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n_draws = 1_000_000;
    let mut sum = 0.0f64;
    for _ in 0..n_draws {
        sum += sample_min_uniform(10, &mut rng);
    }
    let mean = sum / n_draws as f64;
    let se = 0.08298826628866153 / (n_draws as f64).sqrt();
    assert!(
        (mean - 1.0 / 11.0).abs() < 3.0 * se,
        "mean {mean} vs 1/11 (se {se})"
    );
}

#[test]
fn samples_live_inside_the_support() {
    for case in [
        ExtremeCase::frechet(1.0).unwrap(),
        ExtremeCase::weibull(-1.0).unwrap(),
        ExtremeCase::gumbel(),
    ] {
        for n in [2u64, 100] {
            let law = RepresentationLaw::new(n, case).unwrap();
            let (lo, hi) = law.support();
            for &z in draw_samples(n, case, 50_000, 11).iter() {
                assert!(z > lo && z < hi, "{case} n={n}: sample {z} outside ({lo}, {hi})");
            }
        }
    }
}

#[test]
fn empirical_ks_is_invariant_across_cases() {
    // The sampler and both cdfs ride the same monotone transform of the
    // same underlying uniforms, so the statistic agrees across cases up to
    // floating-point noise.
    let seed = 17;
    let n = 5;
    let samples = 100_000;
    let base = empirical_ks(n, ExtremeCase::gumbel(), samples, seed).unwrap();
    for case in [
        ExtremeCase::frechet(0.5).unwrap(),
        ExtremeCase::frechet(3.0).unwrap(),
        ExtremeCase::weibull(-2.0).unwrap(),
    ] {
        let r = empirical_ks(n, case, samples, seed).unwrap();
        assert!(
            (r.empirical_ks - base.empirical_ks).abs() < 1e-12,
            "{case}: {} vs {}",
            r.empirical_ks,
            base.empirical_ks
        );
    }
}

#[test]
fn result_fields_are_consistent() {
    let case = ExtremeCase::weibull(-0.5).unwrap();
    let r = empirical_ks(4, case, 120_000, 8).unwrap();
    assert_eq!(r.n, 4);
    assert_eq!(r.samples, 120_000);
    assert_eq!(r.seed, 8);
    assert!(r.empirical_ks > 0.0 && r.empirical_ks < 1.0);
    assert_eq!(r.exact_ks, ks_tv_exact(4).unwrap().ks);
    assert_eq!(r.dkw_epsilon, dkw_epsilon(120_000, 0.99));
    assert_eq!(
        r.pass,
        (r.empirical_ks - r.exact_ks).abs() <= r.dkw_epsilon + 1e-9
    );
    // At this sample size the empirical statistic must sit close to the
    // exact one; a sampler or cdf bug would blow this wide open.
    assert!((r.empirical_ks - r.exact_ks).abs() < 0.01);
}

#[test]
fn frozen_regression_values() {
    let fre = empirical_ks(2, ExtremeCase::frechet(1.0).unwrap(), 1_000_000, 1).unwrap();
    assert!((fre.empirical_ks - 1.6183970712227067e-1).abs() < 1e-14);
    assert!(fre.pass);
    let gum = empirical_ks(2, ExtremeCase::gumbel(), 1_000_000, 7).unwrap();
    assert!((gum.empirical_ks - 1.6188141015551905e-1).abs() < 1e-14);
    assert!(gum.pass);
}

#[test]
fn confidence_knob_scales_the_band_only() {
    let case = ExtremeCase::gumbel();
    let tight = empirical_ks_at(3, case, 50_000, 11, 0.5).unwrap();
    let wide = empirical_ks(3, case, 50_000, 11).unwrap();
    assert_eq!(tight.empirical_ks, wide.empirical_ks);
    assert_eq!(tight.dkw_epsilon, dkw_epsilon(50_000, 0.5));
    assert!(tight.dkw_epsilon < wide.dkw_epsilon);
}

#[test]
fn preconditions_are_enforced() {
    let case = ExtremeCase::gumbel();
    assert!(empirical_ks(2, case, 9_999, 1).is_err());
    assert!(empirical_ks(1, case, 100_000, 1).is_err());
    assert!(empirical_ks(0, case, 100_000, 1).is_err());
    assert!(empirical_ks_at(2, case, 100_000, 1, 0.0).is_err());
    assert!(empirical_ks_at(2, case, 100_000, 1, 1.0).is_err());
}
