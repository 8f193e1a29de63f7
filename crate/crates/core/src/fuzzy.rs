//! Interval type-2 fuzzy set primitives: trapezoids, word models, α-cuts and
//! FOU-shape classification.
//!
//! A word model is a pair of trapezoids. The upper membership function (UMF)
//! always reaches height 1; the lower membership function (LMF) has its own
//! height `h <= 1` and lies under the UMF everywhere.

use std::fmt;

use crate::error::{Error, Result};
use crate::similarity::Centroid;

/// Slack used when comparing fixture values that are printed to two decimals.
pub const SHAPE_TOLERANCE: f64 = 1e-9;

/// α values this far above a height are treated as rounding noise and clamped.
const ALPHA_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::Domain(format!(
                "interval bounds must be finite, got [{lo}, {hi}]"
            )));
        }
        if lo > hi {
            return Err(Error::Domain(format!(
                "interval lower bound {lo} exceeds upper bound {hi}"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub const fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// `self ⊆ other`, up to `tol`.
    pub fn within(&self, other: &Interval, tol: f64) -> bool {
        self.lo >= other.lo - tol && self.hi <= other.hi + tol
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// Trapezoidal type-1 membership function with vertices `a <= b <= c <= d`
/// and plateau height `h`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Trapezoid {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub h: f64,
}

impl Trapezoid {
    pub fn new(a: f64, b: f64, c: f64, d: f64, h: f64) -> Result<Self> {
        let t = Trapezoid { a, b, c, d, h };
        t.validate()?;
        Ok(t)
    }

    /// Normal trapezoid (height 1).
    pub fn normal(a: f64, b: f64, c: f64, d: f64) -> Result<Self> {
        Self::new(a, b, c, d, 1.0)
    }

    pub fn validate(&self) -> Result<()> {
        let Trapezoid { a, b, c, d, h } = *self;
        if ![a, b, c, d, h].iter().all(|v| v.is_finite()) {
            return Err(Error::Domain("trapezoid parameters must be finite".into()));
        }
        if !(a <= b && b <= c && c <= d) {
            return Err(Error::Domain(format!(
                "trapezoid vertices must satisfy a <= b <= c <= d, got ({a}, {b}, {c}, {d})"
            )));
        }
        if !(h > 0.0 && h <= 1.0) {
            return Err(Error::Domain(format!("trapezoid height must lie in (0, 1], got {h}")));
        }
        Ok(())
    }

    pub fn membership(&self, x: f64) -> f64 {
        let Trapezoid { a, b, c, d, h } = *self;
        if x < a || x > d {
            0.0
        } else if x >= b && x <= c {
            h
        } else if x < b {
            h * (x - a) / (b - a)
        } else {
            h * (d - x) / (d - c)
        }
    }

    pub fn support(&self) -> Interval {
        Interval { lo: self.a, hi: self.d }
    }

    pub fn core(&self) -> Interval {
        Interval { lo: self.b, hi: self.c }
    }

    pub fn vertices(&self) -> [f64; 4] {
        [self.a, self.b, self.c, self.d]
    }
}

/// α-cut of a trapezoid: `[a + (α/h)(b − a), d − (α/h)(d − c)]` for `0 <= α <= h`.
pub fn alpha_cut(t: &Trapezoid, alpha: f64) -> Result<Interval> {
    if alpha.is_nan() || alpha < 0.0 || alpha > t.h + ALPHA_SLACK {
        return Err(Error::Domain(format!(
            "alpha = {alpha} is outside [0, {}] for this trapezoid",
            t.h
        )));
    }
    let r = alpha.min(t.h) / t.h;
    Ok(Interval {
        lo: t.a + r * (t.b - t.a),
        hi: t.d - r * (t.d - t.c),
    })
}

/// Anything that has a footprint of uncertainty: pointwise `[LMF, UMF]`
/// bounds plus α-cuts of both membership functions.
///
/// Implemented by codebook words and by the output of the linguistic
/// weighted average, so the similarity, centroid and LWA routines accept
/// either.
pub trait Footprint {
    /// `[lmf(x), umf(x)]`.
    fn envelope(&self, x: f64) -> Interval;

    /// Support of the UMF.
    fn support(&self) -> Interval;

    /// α-cut of the UMF, `alpha ∈ [0, 1]`.
    fn umf_cut(&self, alpha: f64) -> Interval;

    /// α-cut of the LMF, `alpha ∈ [0, lmf_height()]`.
    fn lmf_cut(&self, alpha: f64) -> Interval;

    fn lmf_height(&self) -> f64;
}

/// Named interval type-2 word model.
#[derive(Debug, Clone, PartialEq)]
pub struct IT2Word {
    pub name: String,
    /// Optional long-form label ("Very Poor" for `VP`).
    pub label: Option<String>,
    pub umf: Trapezoid,
    pub lmf: Trapezoid,
    /// Cached centroid; filled in by the codebook against its scale and grid.
    pub centroid: Option<Centroid>,
}

impl IT2Word {
    pub fn new(name: impl Into<String>, umf: Trapezoid, lmf: Trapezoid) -> Result<Self> {
        let w = IT2Word {
            name: name.into(),
            label: None,
            umf,
            lmf,
            centroid: None,
        };
        w.validate()?;
        Ok(w)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    fn invalid(&self, field: &str, reason: impl Into<String>) -> Error {
        Error::InvalidWord {
            word: self.name.clone(),
            field: field.into(),
            reason: reason.into(),
        }
    }

    /// Checks the UMF/LMF invariants: normal UMF, LMF height in (0, 1], LMF
    /// support inside UMF support and LMF under UMF everywhere.
    pub fn validate(&self) -> Result<()> {
        self.umf.validate().map_err(|e| self.invalid("umf", e.to_string()))?;
        self.lmf.validate().map_err(|e| self.invalid("lmf", e.to_string()))?;
        if (self.umf.h - 1.0).abs() > SHAPE_TOLERANCE {
            return Err(self.invalid("umf", format!("UMF height must be 1, got {}", self.umf.h)));
        }
        if !self.lmf.support().within(&self.umf.support(), SHAPE_TOLERANCE) {
            return Err(self.invalid(
                "lmf",
                format!(
                    "LMF support {} is not inside UMF support {}",
                    self.lmf.support(),
                    self.umf.support()
                ),
            ));
        }
        // Both curves are piecewise linear, so checking the union of their
        // breakpoints and the midpoints between them is exhaustive.
        let mut xs: Vec<f64> = self.umf.vertices().into_iter().chain(self.lmf.vertices()).collect();
        xs.sort_by(f64::total_cmp);
        xs.dedup();
        let mids: Vec<f64> = xs.windows(2).map(|p| 0.5 * (p[0] + p[1])).collect();
        for x in xs.into_iter().chain(mids) {
            let (lo, hi) = (self.lmf.membership(x), self.umf.membership(x));
            if lo > hi + SHAPE_TOLERANCE {
                return Err(self.invalid("lmf", format!("LMF exceeds UMF at x = {x} ({lo} > {hi})")));
            }
        }
        Ok(())
    }

    pub fn display_name(&self) -> String {
        match &self.label {
            Some(label) => format!("{label} ({})", self.name),
            None => self.name.clone(),
        }
    }
}

impl Footprint for IT2Word {
    fn envelope(&self, x: f64) -> Interval {
        membership_envelope(self, x)
    }

    fn support(&self) -> Interval {
        self.umf.support()
    }

    fn umf_cut(&self, alpha: f64) -> Interval {
        alpha_cut(&self.umf, alpha.clamp(0.0, self.umf.h)).expect("clamped alpha")
    }

    fn lmf_cut(&self, alpha: f64) -> Interval {
        alpha_cut(&self.lmf, alpha.clamp(0.0, self.lmf.h)).expect("clamped alpha")
    }

    fn lmf_height(&self) -> f64 {
        self.lmf.h
    }
}

/// `[lmf(x), umf(x)]` for a word model.
pub fn membership_envelope(w: &IT2Word, x: f64) -> Interval {
    let lo = w.lmf.membership(x);
    let hi = w.umf.membership(x);
    // containment is validated on construction; min() absorbs rounding
    Interval { lo: lo.min(hi), hi }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FouShape {
    Interior,
    LeftShoulder,
    RightShoulder,
}

impl fmt::Display for FouShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FouShape::Interior => "interior",
            FouShape::LeftShoulder => "left shoulder",
            FouShape::RightShoulder => "right shoulder",
        })
    }
}

pub fn classify_fou(w: &IT2Word, scale: Interval) -> FouShape {
    let near = |a: f64, b: f64| (a - b).abs() <= SHAPE_TOLERANCE;
    let full_lmf = near(w.lmf.h, 1.0);
    let (u, l) = (&w.umf, &w.lmf);
    if full_lmf && [u.a, u.b, l.a, l.b].iter().all(|&v| near(v, scale.lo)) {
        FouShape::LeftShoulder
    } else if full_lmf && [u.c, u.d, l.c, l.d].iter().all(|&v| near(v, scale.hi)) {
        FouShape::RightShoulder
    } else {
        FouShape::Interior
    }
}
