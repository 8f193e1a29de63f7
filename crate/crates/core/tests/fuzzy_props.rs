mod common;

use common::strategies;
use percept_core::{alpha_cut, classify_fou, membership_envelope, Codebook, FouShape, Interval};
use proptest::prelude::*;

const SCALE: Interval = Interval { lo: 0.0, hi: 10.0 };

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn alpha_cuts_nest(t in strategies::trapezoid(), u1 in 0.0..=1.0f64, u2 in 0.0..=1.0f64) {
        let (a1, a2) = (t.h * u1.min(u2), t.h * u1.max(u2));
        let (outer, inner) = (alpha_cut(&t, a1).unwrap(), alpha_cut(&t, a2).unwrap());
        prop_assert!(outer.lo <= inner.lo + 1e-12 && inner.hi <= outer.hi + 1e-12);
    }

    #[test]
    fn alpha_cut_ends(t in strategies::trapezoid()) {
        let base = alpha_cut(&t, 0.0).unwrap();
        let top = alpha_cut(&t, t.h).unwrap();
        prop_assert_eq!((base.lo, base.hi), (t.a, t.d));
        prop_assert!((top.lo - t.b).abs() < 1e-12 && (top.hi - t.c).abs() < 1e-12);
    }
}

proptest! {
    #[test]
    fn random_words_keep_lmf_under_umf(w in strategies::word(), x in 0.0..=10.0f64) {
        let e = membership_envelope(&w, x);
        prop_assert!(e.lo <= e.hi);
    }

    #[test]
    fn left_shoulders_stay_pinned(w in strategies::left_shoulder(), u in 0.0..=1.0f64) {
        prop_assert_eq!(classify_fou(&w, SCALE), FouShape::LeftShoulder);
        prop_assert_eq!(alpha_cut(&w.umf, u).unwrap().lo, 0.0);
        prop_assert_eq!(alpha_cut(&w.lmf, u * w.lmf.h).unwrap().lo, 0.0);
    }
}

#[test]
fn fixture_words_contain_their_lmf() {
    for id in ["paper-hma", "paper-ia"] {
        let cb = Codebook::load(id).unwrap();
        for w in cb.words() {
            for i in 0..=1000 {
                let x = 10.0 * i as f64 / 1000.0;
                assert!(w.lmf.membership(x) <= w.umf.membership(x), "{id} {} at {x}", w.name);
            }
        }
    }
}

#[test]
fn fixture_shoulders() {
    for id in ["paper-hma", "paper-ia"] {
        let cb = Codebook::load(id).unwrap();
        let shapes: Vec<FouShape> = cb.words().iter().map(|w| classify_fou(w, SCALE)).collect();
        assert_eq!(
            shapes,
            [
                FouShape::LeftShoulder,
                FouShape::LeftShoulder,
                FouShape::Interior,
                FouShape::RightShoulder,
                FouShape::RightShoulder
            ],
            "{id}"
        );
        for w in cb.words() {
            for k in 0..=10 {
                let a = k as f64 / 10.0;
                let (u, l) = (alpha_cut(&w.umf, a).unwrap(), alpha_cut(&w.lmf, a * w.lmf.h).unwrap());
                match classify_fou(w, SCALE) {
                    FouShape::LeftShoulder => assert!(u.lo == 0.0 && l.lo == 0.0),
                    FouShape::RightShoulder => assert!(u.hi == 10.0 && l.hi == 10.0),
                    FouShape::Interior => {}
                }
            }
        }
    }
}

#[test]
fn ia_average_plateau() {
    let cb = Codebook::load("paper-ia").unwrap();
    let e = membership_envelope(cb.get("A").unwrap(), 4.99);
    assert!((e.lo - 0.88).abs() < 1e-12 && e.hi == 1.0);
    let cut = alpha_cut(&cb.get("A").unwrap().lmf, 0.44).unwrap();
    assert!((cut.lo - 3.495).abs() < 1e-9 && (cut.hi - 6.45).abs() < 1e-9);
}
