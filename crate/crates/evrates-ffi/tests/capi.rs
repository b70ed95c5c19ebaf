//! Exercises the C ABI from Rust: handle lifecycle, value agreement with the
//! core crate, error reporting, and the generated header.

use std::ffi::CStr;
use std::mem::MaybeUninit;
use std::ptr;

use evrates_ffi::*;

unsafe fn frechet(gamma: f64) -> *mut EvrCase {
    let mut case = ptr::null_mut();
    assert_eq!(unsafe { evr_case_frechet(gamma, &mut case) }, EvrStatus::Ok);
    assert!(!case.is_null());
    case
}

fn last_error() -> String {
    unsafe { CStr::from_ptr(evr_last_error_message()) }
        .to_string_lossy()
        .into_owned()
}

#[test]
fn case_lifecycle_and_accessors() {
    unsafe {
        let case = frechet(2.0);
        let mut kind = EvrCaseKind::Gumbel;
        assert_eq!(evr_case_kind(case, &mut kind), EvrStatus::Ok);
        assert_eq!(kind, EvrCaseKind::Frechet);
        let mut gamma = 0.0;
        assert_eq!(evr_case_gamma(case, &mut gamma), EvrStatus::Ok);
        assert_eq!(gamma, 2.0);
        let mut alpha = 0.0;
        assert_eq!(evr_case_alpha(case, &mut alpha), EvrStatus::Ok);
        assert_eq!(alpha, 0.5);
        evr_case_free(case);

        let mut gum = ptr::null_mut();
        assert_eq!(evr_case_gumbel(&mut gum), EvrStatus::Ok);
        assert_eq!(evr_case_alpha(gum, &mut alpha), EvrStatus::Domain);
        assert!(last_error().contains("gumbel"));
        evr_case_free(gum);
        evr_case_free(ptr::null_mut());
    }
}

#[test]
fn constructor_rejections_set_messages() {
    unsafe {
        let mut case = ptr::null_mut();
        assert_eq!(evr_case_frechet(-1.0, &mut case), EvrStatus::Domain);
        assert!(last_error().contains("gamma"));
        assert!(case.is_null());
        assert_eq!(evr_case_weibull(0.5, &mut case), EvrStatus::Domain);
        assert_eq!(evr_case_frechet(1.0, ptr::null_mut()), EvrStatus::NullPointer);
        assert!(last_error().contains("null"));
    }
}

#[test]
fn evaluation_agrees_with_the_core() {
    unsafe {
        let case = frechet(1.0);
        let core = evrates::distributions::ExtremeCase::frechet(1.0).unwrap();
        let mut v = 0.0;

        assert_eq!(evr_limit_cdf(case, 1.5, &mut v), EvrStatus::Ok);
        assert_eq!(v, evrates::distributions::limit_cdf(core, 1.5));

        assert_eq!(evr_limit_pdf(case, 1.5, &mut v), EvrStatus::Ok);
        assert_eq!(v, evrates::distributions::limit_pdf(core, 1.5));

        assert_eq!(evr_limit_quantile(case, 0.3, &mut v), EvrStatus::Ok);
        assert_eq!(v, evrates::distributions::limit_quantile(core, 0.3).unwrap());
        assert_eq!(evr_limit_quantile(case, 1.5, &mut v), EvrStatus::Domain);

        assert_eq!(evr_rep_cdf(2, case, 1.0, &mut v), EvrStatus::Ok);
        assert_eq!(v, 0.25);
        assert_eq!(evr_rep_pdf(2, case, 1.0, &mut v), EvrStatus::Ok);
        assert_eq!(v, 0.5);
        assert_eq!(evr_rep_cdf(1, case, 1.0, &mut v), EvrStatus::Domain);

        assert_eq!(evr_reduce_to_unit(case, 2.0, &mut v), EvrStatus::Ok);
        assert_eq!(v, 0.5);
        assert_eq!(evr_from_unit(case, 0.5, &mut v), EvrStatus::Ok);
        assert_eq!(v, 2.0);
        assert_eq!(evr_reduce_to_unit(case, -1.0, &mut v), EvrStatus::Domain);

        evr_case_free(case);
    }
}

#[test]
fn distance_and_oracles_match_core() {
    unsafe {
        let mut d = MaybeUninit::<EvrDistance>::uninit();
        assert_eq!(evr_ks_tv_exact(2, d.as_mut_ptr()), EvrStatus::Ok);
        let d = d.assume_init();
        let core = evrates::metrics::ks_tv_exact(2).unwrap();
        assert_eq!(d.ks, core.ks);
        assert_eq!(d.tv, core.tv);
        assert_eq!(d.y_star, core.crossing.y_star);
        assert_eq!(d.a1, core.pieces.a1);
        assert_eq!(d.ell_sup, core.pieces.ell_sup);

        let mut c = MaybeUninit::<EvrCrossing>::uninit();
        assert_eq!(evr_crossing_point(10, c.as_mut_ptr()), EvrStatus::Ok);
        let c = c.assume_init();
        assert_eq!(c.y_star, evrates::metrics::crossing_point(10).unwrap().y_star);
        assert_eq!(
            evr_crossing_point(1, ptr::NonNull::dangling().as_ptr()),
            EvrStatus::Domain
        );

        let mut v = 0.0;
        assert_eq!(evr_ks_scan_oracle(2, 10_000, &mut v), EvrStatus::Ok);
        assert_eq!(v, evrates::metrics::ks_scan_oracle(2, 10_000));
        assert_eq!(evr_ks_scan_oracle(1, 10_000, &mut v), EvrStatus::Domain);
        assert_eq!(evr_ks_scan_oracle(2, 1, &mut v), EvrStatus::Domain);

        assert_eq!(evr_tv_quadrature_oracle(2, 1e-10, &mut v), EvrStatus::Ok);
        assert!((v - core.tv).abs() < 1e-8);
        assert_eq!(evr_tv_quadrature_oracle(2, 1e-14, &mut v), EvrStatus::Domain);

        let case = frechet(1.0);
        assert_eq!(
            evr_distance_in_original_coordinates(2, case, 10_000, &mut v),
            EvrStatus::Ok
        );
        assert!(v <= core.ks + 1e-12);
        evr_case_free(case);
    }
}

#[test]
fn bound_chain_is_ordered_and_holds() {
    unsafe {
        let mut steps = [MaybeUninit::<EvrBoundStep>::uninit(); EVR_BOUND_CHAIN_LEN];
        assert_eq!(
            evr_bound_chain(100, steps.as_mut_ptr() as *mut EvrBoundStep),
            EvrStatus::Ok
        );
        let steps: Vec<EvrBoundStep> = steps.iter().map(|s| s.assume_init()).collect();
        let kinds: Vec<EvrBoundStepKind> = steps.iter().map(|s| s.kind).collect();
        assert_eq!(
            kinds,
            [
                EvrBoundStepKind::CrossingDecomposition,
                EvrBoundStepKind::EllSupremum,
                EvrBoundStepKind::OneOverN,
                EvrBoundStepKind::Lemma,
                EvrBoundStepKind::Theorem,
                EvrBoundStepKind::IntermediateCombination,
            ]
        );
        for s in &steps {
            if s.asserted == 1 {
                assert_eq!(s.holds, 1);
                assert!(s.lhs <= s.rhs);
            }
        }
        let name = CStr::from_ptr(evr_bound_step_name(EvrBoundStepKind::Theorem));
        assert_eq!(name.to_str().unwrap(), "theorem");
    }
}

#[test]
fn bounds_agree_with_core() {
    unsafe {
        let mut v = 0.0;
        assert_eq!(evr_g1(2, &mut v), EvrStatus::Ok);
        assert_eq!(v, evrates::bounds::g1(2).unwrap());
        assert_eq!(evr_c0(), evrates::bounds::c0());
        assert_eq!(evr_theorem_bound(5, &mut v), EvrStatus::Ok);
        assert_eq!(v, evrates::bounds::theorem_bound(5).unwrap());
        assert_eq!(evr_theorem_bound(0, &mut v), EvrStatus::Domain);

        let mut s = MaybeUninit::<EvrLemmaSeries>::uninit();
        assert_eq!(evr_lemma_series(2, 1e-12, s.as_mut_ptr()), EvrStatus::Ok);
        let s = s.assume_init();
        let core = evrates::bounds::lemma_series(2, 1e-12).unwrap();
        assert_eq!(s.value, core.value);
        assert_eq!(s.terms, core.terms);
        assert_eq!(
            evr_lemma_series(2, 1e-18, ptr::NonNull::dangling().as_ptr()),
            EvrStatus::Domain
        );

        let mut b = MaybeUninit::<EvrBoundBreakdown>::uninit();
        assert_eq!(evr_bound_breakdown(2, 1e-15, b.as_mut_ptr()), EvrStatus::Ok);
        let b = b.assume_init();
        assert_eq!(b.f1_holds, 1);
        assert_eq!(b.f2_holds, 1);
        assert_eq!(b.lemma_holds, 1);
        assert_eq!(b.c0, evrates::bounds::c0());
    }
}

#[test]
fn sampling_matches_core_and_checks_buffers() {
    unsafe {
        let case = frechet(1.0);
        let core_case = evrates::distributions::ExtremeCase::frechet(1.0).unwrap();

        let mut buf = vec![0.0f64; 20_000];
        assert_eq!(
            evr_draw_samples(2, case, 20_000, 3, buf.as_mut_ptr(), buf.len()),
            EvrStatus::Ok
        );
        let core = evrates::montecarlo::draw_samples(2, core_case, 20_000, 3);
        assert_eq!(buf, core);
        assert_eq!(
            evr_draw_samples(2, case, 30_000, 3, buf.as_mut_ptr(), buf.len()),
            EvrStatus::Domain
        );
        assert!(last_error().contains("buffer"));

        let mut r = MaybeUninit::<EvrMcResult>::uninit();
        assert_eq!(
            evr_empirical_ks(2, case, 50_000, 1, r.as_mut_ptr()),
            EvrStatus::Ok
        );
        let r = r.assume_init();
        let core = evrates::montecarlo::empirical_ks(2, core_case, 50_000, 1).unwrap();
        assert_eq!(r.empirical_ks, core.empirical_ks);
        assert_eq!(r.pass, core.pass as u8);
        assert_eq!(
            evr_empirical_ks(2, case, 100, 1, r_ptr(&mut MaybeUninit::uninit())),
            EvrStatus::Domain
        );
        evr_case_free(case);
    }
}

fn r_ptr(m: &mut MaybeUninit<EvrMcResult>) -> *mut EvrMcResult {
    m.as_mut_ptr()
}

#[test]
fn version_and_dkw_are_plain_values() {
    let v = unsafe { CStr::from_ptr(evr_version()) }.to_str().unwrap();
    assert_eq!(v, env!("CARGO_PKG_VERSION"));
    assert_eq!(
        evr_dkw_epsilon(1_000_000, 0.99),
        evrates::montecarlo::dkw_epsilon(1_000_000, 0.99)
    );
}

#[test]
fn generated_header_covers_the_surface() {
    let header = std::path::Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("include")
        .join("evrates.h");
    let text = std::fs::read_to_string(&header).expect("header should be generated at build time");
    for needle in [
        "#ifndef EVRATES_H",
        "EvrCase",
        "EVR_BOUND_CHAIN_LEN",
        "evr_ks_tv_exact",
        "evr_case_frechet",
        "evr_bound_breakdown",
        "evr_draw_samples",
        "evr_last_error_message",
    ] {
        assert!(text.contains(needle), "header missing: {needle}");
    }
}
