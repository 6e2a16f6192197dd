//! Property tests for the cross-module invariants.

use proptest::prelude::*;

use roegen::carnot::{build_cycle, efficiency, CarnotSpec};
use roegen::catastrophe::{phi, phi_inverse};
use roegen::ideal::{goods_production_along, work_along};
use roegen::state::{IdealIncomeModel, StatePoint, VdWModel};

fn positive() -> impl Strategy<Value = f64> {
    // spread over several decades without hitting float extremes
    (-6.0..6.0_f64).prop_map(|e| 10.0_f64.powf(e))
}

fn dof() -> impl Strategy<Value = u32> {
    prop_oneof![Just(3u32), Just(5), Just(6)]
}

proptest! {
    #[test]
    fn state_construction_accepts_exactly_the_open_octant(
        p in positive(), q in positive(), i in positive()
    ) {
        let s = StatePoint::new(p, q, i).unwrap();
        prop_assert_eq!((s.price(), s.volume(), s.stability()), (p, q, i));
        prop_assert!(StatePoint::new(-p, q, i).is_err());
        prop_assert!(StatePoint::new(p, 0.0, i).is_err());
        prop_assert!(StatePoint::new(p, q, -i).is_err());
    }

    #[test]
    fn state_json_round_trip_is_bit_exact(
        p in positive(), q in positive(), i in positive()
    ) {
        let s = StatePoint::new(p, q, i).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        let back: StatePoint = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(back.price().to_bits(), s.price().to_bits());
        prop_assert_eq!(back.volume().to_bits(), s.volume().to_bits());
        prop_assert_eq!(back.stability().to_bits(), s.stability().to_bits());
    }

    #[test]
    fn generated_samples_keep_growth_locked_to_stability(
        n in 0.1..10.0_f64,
        r in 0.1..10.0_f64,
        f in dof(),
        i in 0.1..10.0_f64,
        q_from in 0.1..10.0_f64,
        ratio in 1.1..8.0_f64,
    ) {
        let model = IdealIncomeModel::new(n, r, f).unwrap();
        let path = model.isotherm_path(i, q_from, q_from * ratio, 16).unwrap();
        for s in path.samples() {
            let expected = model.growth_potential(s.stability()).unwrap();
            prop_assert_eq!(s.growth().to_bits(), expected.to_bits());
            let nri = model.extensive_constant() * s.stability();
            prop_assert!((s.price() * s.volume() - nri).abs() <= 1e-12 * nri);
        }
    }

    #[test]
    fn adiabat_preserves_its_invariant(
        n in 0.1..10.0_f64,
        r in 0.1..10.0_f64,
        f in dof(),
        i in 0.2..5.0_f64,
        q_from in 0.2..5.0_f64,
        ratio in 0.2..4.0_f64,
    ) {
        prop_assume!((ratio - 1.0).abs() > 1e-3);
        let model = IdealIncomeModel::new(n, r, f).unwrap();
        let start = model.state_at(q_from, i).unwrap().point();
        let path = model.adiabat_path(&start, q_from * ratio, 32).unwrap();
        let gamma = model.adiabatic_exponent();
        let reference = start.price() * start.volume().powf(gamma);
        for s in path.samples() {
            let value = s.price() * s.volume().powf(gamma);
            prop_assert!((value - reference).abs() <= 1e-9 * reference.abs());
        }
    }

    #[test]
    fn isotherm_first_law_work_equals_goods(
        i in 0.1..10.0_f64,
        q_from in 0.1..10.0_f64,
        ratio in 0.1..10.0_f64,
    ) {
        prop_assume!((ratio - 1.0).abs() > 1e-6);
        let model = IdealIncomeModel::new(1.0, 1.0, 5).unwrap();
        let path = model.isotherm_path(i, q_from, q_from * ratio, 8).unwrap();
        let w = work_along(&path).unwrap();
        let q = goods_production_along(&path).unwrap();
        prop_assert!((w - q).abs() <= 1e-12 * w.abs().max(1e-300));
    }

    #[test]
    fn efficiency_is_scale_invariant_and_monotone(
        i_cold in 0.1..10.0_f64,
        gap in 1.01..10.0_f64,
        lambda in 0.01..100.0_f64,
    ) {
        let i_hot = i_cold * gap;
        let eta = efficiency(i_hot, i_cold).unwrap();
        prop_assert!(eta > 0.0 && eta < 1.0);
        let scaled = efficiency(i_hot * lambda, i_cold * lambda).unwrap();
        prop_assert!((scaled - eta).abs() <= 1e-12);
        // strictly better with a hotter reservoir, worse with a warmer sink
        prop_assert!(efficiency(i_hot * 1.1, i_cold).unwrap() > eta);
        prop_assert!(efficiency(i_hot, i_cold * 1.01).unwrap() < eta);
    }

    #[test]
    fn cycle_reports_close_for_random_specs(
        n in 0.2..5.0_f64,
        r in 0.2..5.0_f64,
        f in dof(),
        i_cold in 0.2..5.0_f64,
        stability_ratio in 1.1..10.0_f64,
        q1 in 0.2..5.0_f64,
        volume_ratio in 1.1..10.0_f64,
    ) {
        let model = IdealIncomeModel::new(n, r, f).unwrap();
        let spec = CarnotSpec::new(
            model,
            i_cold * stability_ratio,
            i_cold,
            q1,
            q1 * volume_ratio,
            16,
        )
        .unwrap();
        let report = build_cycle(&spec).unwrap();
        prop_assert!(report.wealth() > 0.0);
        prop_assert!(
            report.residual_first_law() <= 1e-9 * report.goods_absorbed().abs().max(1.0)
        );
        prop_assert!(report.entropy_high() > report.entropy_low());
        // eta from the integrals agrees with the reservoir ratio form
        let ratio = report.wealth() / report.goods_absorbed();
        prop_assert!((ratio - report.eta()).abs() <= 1e-9);
    }

    #[test]
    fn vdw_ideal_limit_and_duality(
        a in 0.05..20.0_f64,
        b in 0.05..2.0_f64,
        r in 0.05..20.0_f64,
        reduced_stability in 0.8..1.6_f64,
        reduced_price in 0.2..1.4_f64,
    ) {
        let model = VdWModel::new(a, b, r, 1.0).unwrap();
        let critical = model.critical_point();
        let price = reduced_price * critical.price();
        let stability = reduced_stability * critical.stability();
        let roots = model.volume_roots(price, stability).unwrap();
        prop_assert!(!roots.is_empty() && roots.len() <= 3);
        for root in &roots {
            let back = model.pressure(*root, stability).unwrap();
            prop_assert!(
                (back - price).abs() <= 1e-9 * price,
                "duality defect {} at root {}",
                (back - price).abs(),
                root
            );
        }
    }

    #[test]
    fn phi_round_trips_on_the_octant(
        a in 0.05..20.0_f64,
        b in 0.05..2.0_f64,
        r in 0.05..20.0_f64,
        p in 0.05..20.0_f64,
        q_over_b in 1.05..30.0_f64,
        i in 0.05..20.0_f64,
    ) {
        let model = VdWModel::new(a, b, r, 1.0).unwrap();
        let state = StatePoint::new(p, q_over_b * b, i).unwrap();
        let coords = phi(&model, &state);
        let back = phi_inverse(&model, &coords).unwrap();
        prop_assert!((back.price() - state.price()).abs() <= 1e-10 * state.price());
        prop_assert!((back.volume() - state.volume()).abs() <= 1e-10 * state.volume());
        prop_assert!(
            (back.stability() - state.stability()).abs() <= 1e-10 * state.stability()
        );

        // and the other composition is the identity on the image
        let again = phi(&model, &back);
        prop_assert!((again.x() - coords.x()).abs() <= 1e-10 * coords.x().abs().max(1.0));
        prop_assert!(
            (again.alpha() - coords.alpha()).abs() <= 1e-10 * coords.alpha().abs().max(1.0)
        );
        prop_assert!(
            (again.beta() - coords.beta()).abs() <= 1e-10 * coords.beta().abs().max(1.0)
        );
    }
}
