//! Distribution-level checks: closed-form values, shape properties,
//! consistency between cdf/pdf/quantile, and convergence of the
//! representation law to its limit.

use evrates::distributions::{
    from_unit, limit_cdf, limit_pdf, limit_quantile, reduce_to_unit, rep_cdf, rep_pdf,
    ExtremeCase, RepresentationLaw,
};
use evrates::quadrature::adaptive_simpson;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn all_cases() -> Vec<ExtremeCase> {
    vec![
        ExtremeCase::frechet(0.5).unwrap(),
        ExtremeCase::frechet(1.0).unwrap(),
        ExtremeCase::frechet(2.0).unwrap(),
        ExtremeCase::weibull(-0.5).unwrap(),
        ExtremeCase::weibull(-1.0).unwrap(),
        ExtremeCase::gumbel(),
    ]
}

#[test]
fn closed_form_spot_values() {
    let gum = ExtremeCase::gumbel();
    let fre = ExtremeCase::frechet(1.0).unwrap();

    assert!((limit_cdf(gum, 0.0) - (-1.0f64).exp()).abs() < 1e-15);
    assert!((limit_quantile(gum, (-1.0f64).exp()).unwrap()).abs() < 1e-15);
    assert!((rep_cdf(2, fre, 1.0) - 0.25).abs() < 1e-15);
    assert!((rep_cdf(10, gum, 0.0) - 0.9f64.powi(10)).abs() < 1e-15);
    assert!((rep_cdf(10, gum, 0.0) - 0.3486784401).abs() < 1e-12);
    assert!((rep_pdf(2, fre, 1.0) - 0.5).abs() < 1e-15);
}

#[test]
fn limit_cdf_is_monotone_and_fills_unit_interval() {
    for case in all_cases() {
        let ps: Vec<f64> = (1..200).map(|j| j as f64 / 200.0).collect();
        let xs: Vec<f64> = ps.iter().map(|&p| limit_quantile(case, p).unwrap()).collect();
        for w in xs.windows(2) {
            assert!(w[0] < w[1], "{case}: quantiles not increasing");
        }
        for (&p, &x) in ps.iter().zip(&xs) {
            let back = limit_cdf(case, x);
            assert!(
                (back - p).abs() < 1e-12,
                "{case}: cdf(quantile({p})) = {back}"
            );
        }
    }
}

#[test]
fn rep_cdf_is_monotone_and_hits_the_support_edges() {
    for case in all_cases() {
        for n in [2u64, 10, 1000] {
            let law = RepresentationLaw::new(n, case).unwrap();
            let (lo, hi) = law.support();
            assert!(lo < hi || hi.is_infinite());
            let xs: Vec<f64> = (0..=400)
                .map(|j| {
                    let p = 1e-6 + (1.0 - 2e-6) * j as f64 / 400.0;
                    limit_quantile(case, p).unwrap()
                })
                .collect();
            let mut prev = -0.1f64;
            for &x in &xs {
                let c = law.cdf(x);
                assert!((0.0..=1.0).contains(&c));
                assert!(c >= prev - 1e-15, "{case} n={n}: cdf decreases at x={x}");
                prev = c;
            }
            // Below the lower support edge the law carries no mass.
            let below = lo - 0.1 * lo.abs().max(1.0);
            assert_eq!(law.cdf(below), 0.0);
            assert_eq!(law.pdf(below), 0.0);
        }
    }
}

#[test]
fn rep_cdf_converges_to_the_limit_on_quantiles() {
    for case in [
        ExtremeCase::frechet(1.0).unwrap(),
        ExtremeCase::weibull(-1.0).unwrap(),
        ExtremeCase::gumbel(),
    ] {
        let mut errs = Vec::new();
        for n in [10u64, 1_000, 100_000] {
            let mut worst = 0.0f64;
            for j in 1..=20 {
                let p = j as f64 / 21.0;
                let x = limit_quantile(case, p).unwrap();
                worst = worst.max((rep_cdf(n, case, x) - p).abs());
            }
            errs.push(worst);
        }
        assert!(
            errs[0] > errs[1] && errs[1] > errs[2],
            "{case}: errors not decreasing: {errs:?}"
        );
        assert!(errs[2] < 1e-5, "{case}: error at n=1e5 is {}", errs[2]);
    }
}

#[test]
fn reduction_roundtrips_over_random_support_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_240_817);
    for case in all_cases() {
        for _ in 0..10_000 {
            let p: f64 = rng.gen_range(1e-6..1.0 - 1e-6);
            let x = limit_quantile(case, p).unwrap();
            let t = reduce_to_unit(case, x).unwrap();
            assert!(t > 0.0 && t.is_finite());
            let back = from_unit(case, t);
            assert!(
                (back - x).abs() <= 1e-13 * x.abs().max(1.0),
                "{case}: roundtrip {x} -> {t} -> {back}"
            );
            // The reduced coordinate is exactly the limit's exponent.
            assert!(((-t).exp() - limit_cdf(case, x)).abs() < 1e-14);
        }
    }
}

#[test]
fn reduction_is_strictly_decreasing() {
    for case in all_cases() {
        let xs: Vec<f64> = (1..100)
            .map(|j| limit_quantile(case, j as f64 / 100.0).unwrap())
            .collect();
        let ts: Vec<f64> = xs
            .iter()
            .map(|&x| reduce_to_unit(case, x).unwrap())
            .collect();
        for w in ts.windows(2) {
            assert!(w[0] > w[1], "{case}: reduction not decreasing");
        }
    }
}

#[test]
fn rep_pdf_matches_finite_difference_of_rep_cdf() {
    let n = 10u64;
    for case in all_cases() {
        for j in 2..=98 {
            let p = j as f64 / 100.0;
            let x = limit_quantile(case, p).unwrap();
            let h = 1e-6 * x.abs().max(1.0);
            let fd = (rep_cdf(n, case, x + h) - rep_cdf(n, case, x - h)) / (2.0 * h);
            let pdf = rep_pdf(n, case, x);
            assert!(
                (fd - pdf).abs() <= 1e-6 * pdf.max(1.0),
                "{case} at x={x}: fd={fd} pdf={pdf}"
            );
        }
    }
}

#[test]
fn limit_pdf_matches_finite_difference_of_limit_cdf() {
    for case in all_cases() {
        for j in 2..=98 {
            let p = j as f64 / 100.0;
            let x = limit_quantile(case, p).unwrap();
            let h = 1e-6 * x.abs().max(1.0);
            let fd = (limit_cdf(case, x + h) - limit_cdf(case, x - h)) / (2.0 * h);
            let pdf = limit_pdf(case, x);
            assert!(
                (fd - pdf).abs() <= 1e-6 * pdf.max(1.0),
                "{case} at x={x}: fd={fd} pdf={pdf}"
            );
        }
    }
}

/// Integrate the representation density over its support in the original
/// coordinate. The support is carved into panels whose images are dyadic in
/// the reduced coordinate, so the quadrature never faces the full infinite
/// tail in one piece; mass beyond the last panel is accounted a priori.
#[test]
fn rep_pdf_integrates_to_one() {
    let t_eps = 1e-11;
    for case in all_cases() {
        for n in [2u64, 10] {
            let nf = n as f64;
            let pdf = |x: f64| rep_pdf(n, case, x);
            let mut cuts_t = Vec::new();
            let mut t = nf;
            while t > t_eps {
                cuts_t.push(t);
                t *= 0.5;
            }
            cuts_t.push(t_eps);
            let mut total = 0.0;
            for pair in cuts_t.windows(2) {
                // from_unit is decreasing, so the larger t is the lower x.
                let a = from_unit(case, pair[0]);
                let b = from_unit(case, pair[1]);
                total += adaptive_simpson(pdf, a, b, 1e-12, 60).unwrap();
            }
            // Mass left above the cut, P(reduced coordinate < t_eps).
            total += -f64::exp_m1(nf * (-t_eps / nf).ln_1p());
            assert!(
                (total - 1.0).abs() < 1e-9,
                "{case} n={n}: density integrates to {total}"
            );
        }
    }
}

#[test]
fn constructor_contracts() {
    assert!(ExtremeCase::frechet(-1.0).is_err());
    assert!(ExtremeCase::frechet(0.0).is_err());
    assert!(ExtremeCase::frechet(f64::NAN).is_err());
    assert!(ExtremeCase::weibull(0.5).is_err());
    assert!(ExtremeCase::weibull(0.0).is_err());
    assert!(RepresentationLaw::new(1, ExtremeCase::gumbel()).is_err());
    assert!(RepresentationLaw::new(0, ExtremeCase::gumbel()).is_err());
    assert!(limit_quantile(ExtremeCase::gumbel(), 0.0).is_err());
    assert!(limit_quantile(ExtremeCase::gumbel(), 1.0).is_err());
    assert!(reduce_to_unit(ExtremeCase::frechet(1.0).unwrap(), -2.0).is_err());
    assert!(reduce_to_unit(ExtremeCase::weibull(-1.0).unwrap(), 2.0).is_err());
}

#[test]
fn case_accessors() {
    let f = ExtremeCase::frechet(0.5).unwrap();
    assert_eq!(f.gamma(), 0.5);
    assert_eq!(f.alpha(), Some(2.0));
    assert_eq!(f.name(), "frechet");
    let w = ExtremeCase::weibull(-2.0).unwrap();
    assert_eq!(w.alpha(), Some(0.5));
    let g = ExtremeCase::gumbel();
    assert_eq!(g.gamma(), 0.0);
    assert_eq!(g.alpha(), None);
    assert_eq!(g.name(), "gumbel");
}

fn case_strategy() -> impl Strategy<Value = ExtremeCase> {
    prop_oneof![
        (0.05f64..8.0).prop_map(|g| ExtremeCase::frechet(g).unwrap()),
        (-8.0f64..-0.05).prop_map(|g| ExtremeCase::weibull(g).unwrap()),
        Just(ExtremeCase::gumbel()),
    ]
}

proptest! {
    #[test]
    fn quantile_cdf_roundtrip(case in case_strategy(), p in 1e-6f64..0.999999) {
        let x = limit_quantile(case, p).unwrap();
        prop_assert!((limit_cdf(case, x) - p).abs() < 1e-10);
    }

    #[test]
    fn cdf_pair_ordering(case in case_strategy(),
                         p1 in 1e-6f64..0.999999,
                         p2 in 1e-6f64..0.999999,
                         n in 2u64..10_000) {
        let (lo, hi) = if p1 <= p2 { (p1, p2) } else { (p2, p1) };
        let xl = limit_quantile(case, lo).unwrap();
        let xh = limit_quantile(case, hi).unwrap();
        prop_assert!(limit_cdf(case, xl) <= limit_cdf(case, xh) + 1e-15);
        prop_assert!(rep_cdf(n, case, xl) <= rep_cdf(n, case, xh) + 1e-15);
    }
}
