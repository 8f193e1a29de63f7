//! Jaccard similarity between footprints, centroid type-reduction with the
//! enhanced Karnik–Mendel iteration, and centroid-based ranking.

use std::fmt;

use crate::error::{Error, Result};
use crate::fuzzy::{Footprint, Interval};
use crate::ranking::{rank_lexicographic, Direction};

pub const DEFAULT_POINTS: usize = 1001;

/// Uniform sampling grid over a scale.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Discretization {
    pub scale: Interval,
    pub points: usize,
}

impl Discretization {
    pub fn new(scale: Interval, points: usize) -> Result<Self> {
        if points < 3 {
            return Err(Error::Domain(format!("a grid needs at least 3 points, got {points}")));
        }
        if scale.width() <= 0.0 {
            return Err(Error::Domain(format!("grid scale {scale} has zero width")));
        }
        Ok(Discretization { scale, points })
    }

    /// 1001 points over `scale`.
    pub fn over(scale: Interval) -> Self {
        Discretization {
            scale,
            points: DEFAULT_POINTS,
        }
    }

    pub fn x(&self, i: usize) -> f64 {
        let t = i as f64 / (self.points - 1) as f64;
        self.scale.lo + t * self.scale.width()
    }

    pub fn grid(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.x(i)).collect()
    }

    fn check<F: Footprint + ?Sized>(&self, f: &F, what: &str) -> Result<()> {
        let s = f.support();
        if !s.within(&self.scale, 1e-9) {
            return Err(Error::Domain(format!(
                "{what} has support {s}, which is not on the grid scale {}",
                self.scale
            )));
        }
        Ok(())
    }

    /// Samples `(lower, upper)` memberships of `f` at every grid point.
    pub fn sample<F: Footprint + ?Sized>(&self, f: &F) -> (Vec<f64>, Vec<f64>) {
        (0..self.points)
            .map(|i| {
                let e = f.envelope(self.x(i));
                (e.lo, e.hi)
            })
            .unzip()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Centroid {
    pub cl: f64,
    pub cr: f64,
    pub mean: f64,
}

impl Centroid {
    pub fn new(cl: f64, cr: f64) -> Self {
        Centroid {
            cl,
            cr,
            mean: 0.5 * (cl + cr),
        }
    }
}

impl fmt::Display for Centroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:.4}, {:.4}] mean {:.4}", self.cl, self.cr, self.mean)
    }
}

/// Jaccard similarity of two interval type-2 sets:
///
/// ```text
/// Σ min(ūA, ūB) + Σ min(u̲A, u̲B)
/// ─────────────────────────────
/// Σ max(ūA, ūB) + Σ max(u̲A, u̲B)
/// ```
///
/// summed over the grid.
pub fn jaccard<A, B>(a: &A, b: &B, grid: &Discretization) -> Result<f64>
where
    A: Footprint + ?Sized,
    B: Footprint + ?Sized,
{
    grid.check(a, "first set")?;
    grid.check(b, "second set")?;
    let (mut num, mut den) = (0.0, 0.0);
    for i in 0..grid.points {
        let x = grid.x(i);
        let (ea, eb) = (a.envelope(x), b.envelope(x));
        num += ea.hi.min(eb.hi) + ea.lo.min(eb.lo);
        den += ea.hi.max(eb.hi) + ea.lo.max(eb.lo);
    }
    if den == 0.0 {
        // both vanish on every grid point, so they coincide on the grid
        return Ok(1.0);
    }
    Ok((num / den).clamp(0.0, 1.0))
}

/// Centroid `[c_l, c_r]` of a footprint on `grid`, via enhanced Karnik–Mendel.
///
/// `name` is only used in the error for an all-zero footprint.
pub fn centroid_ekm<F>(f: &F, grid: &Discretization, name: &str) -> Result<Centroid>
where
    F: Footprint + ?Sized,
{
    grid.check(f, name)?;
    let x = grid.grid();
    let (lower, upper) = grid.sample(f);
    centroid_of_samples(&x, &lower, &upper).ok_or_else(|| Error::DegenerateWord(name.to_string()))
}

/// EKM on already-sampled memberships. `x` must be ascending. Returns `None`
/// when the upper membership is zero everywhere.
pub fn centroid_of_samples(x: &[f64], lower: &[f64], upper: &[f64]) -> Option<Centroid> {
    if upper.iter().sum::<f64>() <= 0.0 {
        return None;
    }
    let cl = ekm_endpoint(x, lower, upper, Endpoint::Left);
    let cr = ekm_endpoint(x, lower, upper, Endpoint::Right);
    Some(Centroid::new(cl, cr))
}

#[derive(Clone, Copy, PartialEq)]
enum Endpoint {
    Left,
    Right,
}

/// Weighted mean for switch index `m`: the left endpoint takes upper
/// weights on `[0, m)` and lower weights after; the right endpoint the reverse.
fn switch_sums(x: &[f64], lower: &[f64], upper: &[f64], m: usize, end: Endpoint) -> (f64, f64) {
    let (mut a, mut b) = (0.0, 0.0);
    for i in 0..x.len() {
        let w = match (end, i < m) {
            (Endpoint::Left, true) | (Endpoint::Right, false) => upper[i],
            _ => lower[i],
        };
        a += x[i] * w;
        b += w;
    }
    (a, b)
}

fn ekm_endpoint(x: &[f64], lower: &[f64], upper: &[f64], end: Endpoint) -> f64 {
    let n = x.len();
    let start = match end {
        Endpoint::Left => (n as f64 / 2.4).round() as usize,
        Endpoint::Right => (n as f64 / 1.7).round() as usize,
    };
    let mut m = start.min(n);
    let (mut a, mut b) = switch_sums(x, lower, upper, m, end);
    if b <= 0.0 {
        m = match end {
            Endpoint::Left => n,
            Endpoint::Right => 0,
        };
        (a, b) = switch_sums(x, lower, upper, m, end);
    }
    let mut y = a / b;
    for _ in 0..=n {
        let next = x.partition_point(|&xi| xi <= y);
        if next == m {
            break;
        }
        let (lo, hi) = (m.min(next), m.max(next));
        let (mut da, mut db) = (0.0, 0.0);
        for i in lo..hi {
            let delta = upper[i] - lower[i];
            da += x[i] * delta;
            db += delta;
        }
        // moving the switch right hands [m, next) to upper (left end) or lower (right end)
        let sign = match (end, next > m) {
            (Endpoint::Left, true) | (Endpoint::Right, false) => 1.0,
            _ => -1.0,
        };
        let (na, nb) = (a + sign * da, b + sign * db);
        if nb <= 0.0 {
            break;
        }
        a = na;
        b = nb;
        m = next;
        y = a / b;
    }
    // recompute from scratch to shed the drift of the incremental updates
    let (a, b) = switch_sums(x, lower, upper, m, end);
    if b > 0.0 {
        a / b
    } else {
        y
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankItem {
    pub label: String,
    pub primary: Centroid,
    pub tiebreak: Option<Centroid>,
}

/// Orders items by centroid mean in `direction`, falling back to the
/// tiebreak centroid's mean when primary means tie. Remaining ties keep input
/// order.
pub fn rank_by_centroid(items: &[RankItem], direction: Direction) -> Vec<String> {
    let keys: Vec<Vec<Option<f64>>> = items
        .iter()
        .map(|it| vec![Some(it.primary.mean), it.tiebreak.map(|c| c.mean)])
        .collect();
    rank_lexicographic(&keys, &[direction, direction])
        .into_iter()
        .map(|i| items[i].label.clone())
        .collect()
}
