use loclu::{dip_oracle, dip_pvalue, dip_statistic, DipConfig};
use proptest::prelude::*;

/// Samples with plenty of ties: small integers scaled, plus continuous noise.
fn sample() -> impl Strategy<Value = Vec<f64>> {
    prop_oneof![
        prop::collection::vec(-1e3f64..1e3, 4..120),
        prop::collection::vec((0i32..6).prop_map(f64::from), 4..120),
        prop::collection::vec(prop_oneof![(-2.0f64..2.0), Just(5.0), Just(-7.5)], 4..120),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fast_path_matches_oracle(xs in sample()) {
        let fast = dip_statistic(&xs).unwrap().dip;
        let slow = dip_oracle(&xs).unwrap();
        prop_assert!((fast - slow).abs() <= 1e-12, "fast {fast}, oracle {slow}");
    }

    #[test]
    fn dip_within_bounds(xs in sample()) {
        let d = dip_statistic(&xs).unwrap().dip;
        prop_assert!((0.0..=0.25).contains(&d));
        // Any non-degenerate sample is at least one count away from the fit.
        let distinct = xs.iter().any(|&x| x != xs[0]);
        if distinct {
            prop_assert!(d >= 0.5 / xs.len() as f64 - 1e-15);
        }
    }

    #[test]
    fn permutation_invariant(xs in sample(), rot in 0usize..200) {
        let mut ys = xs.clone();
        ys.reverse();
        let k = rot % ys.len();
        ys.rotate_left(k);
        prop_assert_eq!(dip_statistic(&xs).unwrap().dip, dip_statistic(&ys).unwrap().dip);
    }

    #[test]
    fn power_of_two_scale_invariant(xs in sample(), k in -10i32..10) {
        let ys: Vec<f64> = xs.iter().map(|x| x * 2f64.powi(k)).collect();
        prop_assert_eq!(dip_statistic(&xs).unwrap().dip, dip_statistic(&ys).unwrap().dip);
    }

    #[test]
    fn affine_invariant_up_to_rounding(xs in sample(), a in 0.01f64..100.0, b in -1e4f64..1e4) {
        let ys: Vec<f64> = xs.iter().map(|x| a * x + b).collect();
        let (dx, dy) = (dip_statistic(&xs).unwrap().dip, dip_statistic(&ys).unwrap().dip);
        prop_assert!((dx - dy).abs() <= 1e-9, "{dx} vs {dy}");
    }

    #[test]
    fn modal_interval_is_within_sample(xs in sample()) {
        let r = dip_statistic(&xs).unwrap();
        let mut sorted = xs.clone();
        sorted.sort_by(f64::total_cmp);
        prop_assert!(r.modal_index_low <= r.modal_index_high);
        prop_assert_eq!(sorted[r.modal_index_low], r.modal_low);
        prop_assert_eq!(sorted[r.modal_index_high], r.modal_high);
    }
}

#[test]
fn pvalue_decreases_with_dip() {
    let cfg = DipConfig {
        bootstrap_b: 500,
        ..DipConfig::default()
    };
    let ps: Vec<f64> = [0.01, 0.02, 0.03, 0.05, 0.08]
        .iter()
        .map(|&d| dip_pvalue(d, 200, &cfg).unwrap())
        .collect();
    assert!(ps.windows(2).all(|w| w[0] >= w[1]), "{ps:?}");
    assert!(ps[0] > 0.9 && ps[4] < 0.01, "{ps:?}");
}
