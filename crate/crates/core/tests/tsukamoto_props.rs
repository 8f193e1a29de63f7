use percept_core::tsukamoto::{LinearConstraint, MonotoneMf, TsukamotoSystem};
use percept_core::Error;
use proptest::prelude::*;

fn single_objective() -> TsukamotoSystem {
    TsukamotoSystem::load("sm-solop").unwrap()
}

fn two_objectives() -> TsukamotoSystem {
    TsukamotoSystem::load("sm-molop").unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn single_objective_closed_form(y1 in 0.0..1.0f64, y2 in 0.0..=1.0f64) {
        let f = single_objective().crisp_output(&[y1, y2]).unwrap()[0];
        prop_assert!((f - (y1 + y2 - 2.0 * y1 * y2)).abs() <= 1e-12);
    }

    #[test]
    fn objectives_are_complementary(y1 in 0.0..1.0f64, y2 in 0.0..=1.0f64) {
        let f = two_objectives().crisp_output(&[y1, y2]).unwrap();
        prop_assert!((f[0] + f[1] - 1.0).abs() <= 1e-12);
    }

    #[test]
    fn output_is_a_convex_combination_of_rule_outputs(y1 in 0.0..1.0f64, y2 in 0.0..=1.0f64) {
        let s = two_objectives();
        let w = s.firings(&[y1, y2]).unwrap();
        let out = s.crisp_output(&[y1, y2]).unwrap();
        for (k, v) in out.iter().enumerate() {
            let zs: Vec<f64> = s.rules.iter().zip(&w).filter(|(_, &a)| a > 0.0).map(|(r, &a)| r.consequents[k].inverse(a).unwrap()).collect();
            let lo = zs.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = zs.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            prop_assert!(*v >= lo - 1e-12 && *v <= hi + 1e-12);
        }
    }

    #[test]
    fn inverse_undoes_membership(v in 0.0..=1.0f64) {
        for mf in [MonotoneMf::increasing(), MonotoneMf::decreasing()] {
            prop_assert!((mf.inverse(mf.membership(v)).unwrap() - v).abs() <= 1e-12);
        }
    }

    #[test]
    fn sampled_curve_matches_the_line(v in 0.0..=1.0f64) {
        let mf = MonotoneMf::samples(vec![0.0, 0.25, 0.5, 1.0], vec![0.0, 0.25, 0.5, 1.0]).unwrap();
        prop_assert!((mf.membership(v) - v).abs() <= 1e-12);
        prop_assert!((mf.inverse(v).unwrap() - v).abs() <= 1e-12);
    }
}

#[test]
fn no_rule_fires_at_the_corner() {
    assert!(matches!(single_objective().crisp_output(&[1.0, 0.3]), Err(Error::NoRuleFired)));
}

#[test]
fn single_objective_minimum_matches_closed_form_scan() {
    let opt = single_objective().optimize(LinearConstraint::unit_box(0.5), 400).unwrap();
    let best = (0..=200)
        .map(|k| {
            let y1 = k as f64 / 400.0;
            let y2 = 0.5 - y1;
            y1 + y2 - 2.0 * y1 * y2
        })
        .fold(f64::INFINITY, f64::min);
    assert!((opt.values[0][0] - best).abs() < 1e-12);
    assert!((-opt.score - best).abs() < 1e-12);
}

#[test]
fn balanced_multi_objective_optimum() {
    let opt = two_objectives().optimize(LinearConstraint::unit_box(0.75), 1000).unwrap();
    assert!((opt.score - 0.5).abs() < 1e-9);
    for v in &opt.values {
        assert!((v[0] - 0.5).abs() < 1e-9 && (v[1] - 0.5).abs() < 1e-9);
    }
}

#[test]
fn infeasible_total() {
    assert!(matches!(
        single_objective().optimize(LinearConstraint::unit_box(2.5), 100),
        Err(Error::EmptyFeasibleSet)
    ));
}

#[test]
fn bad_systems() {
    let text = percept_core::fixtures::tsukamoto_source("sm-solop").unwrap();
    assert!(
        TsukamotoSystem::parse(&text.replace("decreasing\" }]\n", "decreasing\" }, { kind = \"increasing\" }]\n"))
            .is_err()
    );
    assert!(TsukamotoSystem::parse(&text.replace("kind = \"increasing\"", "kind = \"sideways\"")).is_err());
    assert!(TsukamotoSystem::parse(&text.replace("total = 0.5", "total = 0.5\nextra = 1")).is_err());
    assert!(MonotoneMf::samples(vec![0.0, 1.0, 0.5], vec![0.0, 0.5, 1.0]).is_err());
}
