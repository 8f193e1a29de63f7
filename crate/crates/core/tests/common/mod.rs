//! Generators, oracles and transcribed tables shared by the integration tests.
#![allow(dead_code)]

use percept_core::{IT2Word, Trapezoid};
use rand::Rng;

/// Name, UMF, LMF with height, printed centroid.
pub type Row = (&'static str, [f64; 4], [f64; 5], [f64; 3]);

pub const HMA_TABLE: [Row; 5] = [
    (
        "VP",
        [0.00, 0.00, 2.04, 3.84],
        [0.00, 0.00, 2.04, 3.04, 1.00],
        [1.29, 1.52, 1.41],
    ),
    (
        "P",
        [0.00, 0.00, 4.53, 5.92],
        [0.00, 0.00, 4.53, 5.65, 1.00],
        [2.56, 2.63, 2.6],
    ),
    (
        "A",
        [1.14, 2.99, 7.03, 8.94],
        [1.85, 2.99, 7.03, 8.22, 1.00],
        [4.83, 5.22, 5.02],
    ),
    (
        "G",
        [3.5, 5.46, 10.0, 10.0],
        [4.23, 5.46, 10.0, 10.0, 1.00],
        [7.2, 7.4, 7.3],
    ),
    (
        "VG",
        [6.44, 7.96, 10.0, 10.0],
        [6.82, 7.96, 10.0, 10.0, 1.00],
        [8.56, 8.67, 8.61],
    ),
];

pub const IA_TABLE: [Row; 5] = [
    (
        "VP",
        [0.00, 0.00, 0.27, 3.91],
        [0.00, 0.00, 0.18, 2.63, 1.00],
        [0.88, 1.34, 1.11],
    ),
    (
        "P",
        [0.00, 0.00, 0.94, 7.16],
        [0.00, 0.00, 0.43, 5.8, 1.00],
        [1.93, 2.48, 2.2],
    ),
    (
        "A",
        [0.79, 4.6, 5.39, 9.15],
        [2.0, 4.99, 4.99, 7.91, 0.88],
        [4.43, 5.52, 4.97],
    ),
    (
        "G",
        [2.87, 9.06, 10.0, 10.0],
        [4.1, 9.58, 10.0, 10.0, 1.00],
        [7.53, 8.04, 7.79],
    ),
    (
        "VG",
        [6.13, 9.73, 10.0, 10.0],
        [7.34, 9.81, 10.0, 10.0, 1.00],
        [8.67, 9.11, 8.89],
    ),
];

pub fn sorted4<R: Rng>(rng: &mut R, lo: f64, hi: f64) -> [f64; 4] {
    let mut v = [0.0; 4].map(|_: f64| rng.gen_range(lo..=hi));
    v.sort_by(f64::total_cmp);
    v
}

pub fn random_trapezoid<R: Rng>(rng: &mut R) -> Trapezoid {
    let [a, b, c, d] = sorted4(rng, 0.0, 10.0);
    Trapezoid::new(a, b, c, d, rng.gen_range(0.05..=1.0)).unwrap()
}

/// Random word on `[0, 10]` with a UMF support at least 0.5 wide. The LMF
/// is built inside the UMF: `a ≤ a' ≤ b'`, `b ≤ b' ≤ c' ≤ c`, `c' ≤ d' ≤ d`.
pub fn random_word<R: Rng>(rng: &mut R, name: &str) -> IT2Word {
    let [a, b, c, d] = loop {
        let v = sorted4(rng, 0.0, 10.0);
        if v[3] - v[0] >= 0.5 {
            break v;
        }
    };
    let b2 = b + rng.gen::<f64>() * (c - b);
    let c2 = b2 + rng.gen::<f64>() * (c - b2);
    let a2 = a + rng.gen::<f64>() * (b2 - a);
    let d2 = c2 + rng.gen::<f64>() * (d - c2);
    let h = rng.gen_range(0.1..=1.0);
    IT2Word::new(
        name,
        Trapezoid::normal(a, b, c, d).unwrap(),
        Trapezoid::new(a2, b2, c2, d2, h).unwrap(),
    )
    .unwrap()
}

/// Centroid endpoints by trying every single-switch assignment of upper and
/// lower memberships, in both orientations.
pub fn brute_centroid(x: &[f64], lower: &[f64], upper: &[f64]) -> (f64, f64) {
    let n = x.len();
    let (mut cl, mut cr) = (f64::INFINITY, f64::NEG_INFINITY);
    for k in 0..=n {
        for upper_first in [true, false] {
            let (mut num, mut den) = (0.0, 0.0);
            for i in 0..n {
                let w = if (i < k) == upper_first { upper[i] } else { lower[i] };
                num += x[i] * w;
                den += w;
            }
            if den > 0.0 {
                cl = cl.min(num / den);
                cr = cr.max(num / den);
            }
        }
    }
    (cl, cr)
}

/// Samples `[0, 10]` at `points` positions straight from the trapezoids.
pub fn sample_word(w: &IT2Word, points: usize) -> (Vec<f64>, Vec<f64>, Vec<f64>) {
    let x: Vec<f64> = (0..points).map(|i| 10.0 * (i as f64 / (points - 1) as f64)).collect();
    let lower = x.iter().map(|&v| w.lmf.membership(v)).collect();
    let upper = x.iter().map(|&v| w.umf.membership(v)).collect();
    (x, lower, upper)
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

pub mod strategies {
    use percept_core::{IT2Word, Trapezoid};
    use proptest::prelude::*;

    pub fn trapezoid() -> impl Strategy<Value = Trapezoid> {
        (prop::array::uniform4(0.0..=10.0f64), 0.05..=1.0f64).prop_map(|(mut v, h)| {
            v.sort_by(f64::total_cmp);
            Trapezoid::new(v[0], v[1], v[2], v[3], h).unwrap()
        })
    }

    /// Same construction as [`super::random_word`].
    pub fn word() -> impl Strategy<Value = IT2Word> {
        (
            prop::array::uniform4(0.0..=10.0f64),
            prop::array::uniform4(0.0..=1.0f64),
            0.1..=1.0f64,
        )
            .prop_filter("support too narrow", |(v, _, _)| {
                let lo = v.iter().copied().fold(f64::INFINITY, f64::min);
                let hi = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
                hi - lo >= 0.5
            })
            .prop_map(|(mut v, u, h)| {
                v.sort_by(f64::total_cmp);
                let [a, b, c, d] = v;
                let b2 = b + u[0] * (c - b);
                let c2 = b2 + u[1] * (c - b2);
                let a2 = a + u[2] * (b2 - a);
                let d2 = c2 + u[3] * (d - c2);
                IT2Word::new(
                    "w",
                    Trapezoid::normal(a, b, c, d).unwrap(),
                    Trapezoid::new(a2, b2, c2, d2, h).unwrap(),
                )
                .unwrap()
            })
    }

    /// Left-shoulder word on `[0, 10]`.
    pub fn left_shoulder() -> impl Strategy<Value = IT2Word> {
        (0.0..=5.0f64, 0.0..=1.0f64, 0.0..=1.0f64, 0.5..=5.0f64).prop_map(|(c, u1, u2, spread)| {
            let d = c + spread;
            let c2 = u1 * c;
            let d2 = c2 + u2 * (d - c2);
            IT2Word::new(
                "ls",
                Trapezoid::normal(0.0, 0.0, c, d).unwrap(),
                Trapezoid::normal(0.0, 0.0, c2, d2).unwrap(),
            )
            .unwrap()
        })
    }
}
