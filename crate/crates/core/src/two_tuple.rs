//! The 2-tuple linguistic model.
//!
//! A real aggregate `β` over a term set `s₁ … s_g` is represented as the
//! pair `(s_i, α)` with `i = round(β)` and `α = β − i ∈ [−0.5, 0.5)`. Term
//! indices are 1-based and take part in the arithmetic directly.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::fuzzy::Interval;
use crate::ranking::TIE_TOLERANCE;

#[derive(Debug, Clone, PartialEq)]
pub struct OrdinalTermSet {
    labels: Vec<String>,
    scale: Interval,
}

impl OrdinalTermSet {
    /// Terms spread uniformly over `[0, 10]`.
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::with_scale(labels, Interval { lo: 0.0, hi: 10.0 })
    }

    pub fn with_scale<S: Into<String>>(labels: impl IntoIterator<Item = S>, scale: Interval) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::Dimension("a term set needs at least one term".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::Parse(format!("duplicate term '{l}'")));
            }
        }
        if scale.width() <= 0.0 {
            return Err(Error::Domain(format!("term scale {scale} has zero width")));
        }
        Ok(OrdinalTermSet { labels, scale })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn scale(&self) -> Interval {
        self.scale
    }

    /// Label of the 1-based term `index`.
    pub fn label(&self, index: usize) -> Result<&str> {
        index
            .checked_sub(1)
            .and_then(|i| self.labels.get(i))
            .map(String::as_str)
            .ok_or(Error::OutOfRange {
                value: index as f64,
                lo: 1.0,
                hi: self.len() as f64 + 1.0,
            })
    }

    /// 1-based index of `label`.
    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| i + 1)
            .ok_or_else(|| Error::UnknownWord(label.to_string()))
    }

    /// Distance between neighbouring term centres on the scale.
    pub fn spacing(&self) -> f64 {
        if self.len() == 1 {
            self.scale.width()
        } else {
            self.scale.width() / (self.len() - 1) as f64
        }
    }

    /// Scale position of the 1-based term `index`.
    pub fn center(&self, index: f64) -> f64 {
        self.scale.lo + (index - 1.0) * self.spacing()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TwoTuple {
    pub label: String,
    pub index: usize,
    pub alpha: f64,
}

impl TwoTuple {
    pub fn new(ts: &OrdinalTermSet, index: usize, alpha: f64) -> Result<Self> {
        if !(-0.5..0.5).contains(&alpha) {
            return Err(Error::OutOfRange {
                value: alpha,
                lo: -0.5,
                hi: 0.5,
            });
        }
        Ok(TwoTuple {
            label: ts.label(index)?.to_string(),
            index,
            alpha,
        })
    }

    /// Unchecked pair, for values transcribed from elsewhere that need not
    /// be in canonical form.
    pub fn raw(ts: &OrdinalTermSet, label: &str, alpha: f64) -> Result<Self> {
        Ok(TwoTuple {
            label: label.to_string(),
            index: ts.index_of(label)?,
            alpha,
        })
    }

    pub fn beta(&self) -> f64 {
        self.index as f64 + self.alpha
    }

    pub fn is_canonical(&self) -> bool {
        (-0.5..0.5).contains(&self.alpha)
    }
}

impl fmt::Display for TwoTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = (self.alpha * 100.0).round() / 100.0;
        // avoid printing "-0"
        let a = if a == 0.0 { 0.0 } else { a };
        write!(f, "({}, {})", self.label, a)
    }
}

/// `(s_round(β), β − round(β))` with round-half-up.
pub fn to_two_tuple(beta: f64, ts: &OrdinalTermSet) -> Result<TwoTuple> {
    let hi = ts.len() as f64 + 0.5;
    if !(0.5..hi).contains(&beta) {
        return Err(Error::OutOfRange {
            value: beta,
            lo: 0.5,
            hi,
        });
    }
    let index = (beta + 0.5).floor();
    TwoTuple::new(ts, index as usize, beta - index)
}

/// Arithmetic mean of 1-based term indices as a 2-tuple.
pub fn solop_aggregate(indices: &[usize], ts: &OrdinalTermSet) -> Result<TwoTuple> {
    if indices.is_empty() {
        return Err(Error::Dimension("cannot aggregate an empty index list".into()));
    }
    to_two_tuple(indices.iter().sum::<usize>() as f64 / indices.len() as f64, ts)
}

/// Rule over term indices. A consequent is a term index, or any value in
/// `[1, g]` such as an aggregated mean.
#[derive(Debug, Clone, PartialEq)]
pub struct TermRule {
    pub antecedents: Vec<usize>,
    pub consequents: Vec<f64>,
}

impl TermRule {
    /// Product of the antecedent indices.
    pub fn firing(&self) -> f64 {
        self.antecedents.iter().map(|&i| i as f64).product()
    }
}

/// Firing-weighted mean of consequent values per objective, as 2-tuples.
pub fn molop_solve(rules: &[TermRule], ts: &OrdinalTermSet) -> Result<Vec<TwoTuple>> {
    let first = rules.first().ok_or_else(|| Error::Dimension("no rules".into()))?;
    let q = first.consequents.len();
    if q == 0 || rules.iter().any(|r| r.consequents.len() != q) {
        return Err(Error::Dimension(
            "every rule needs the same nonzero number of consequents".into(),
        ));
    }
    for r in rules {
        if let Some(&bad) = r.antecedents.iter().find(|&&i| i == 0 || i > ts.len()) {
            return Err(Error::OutOfRange {
                value: bad as f64,
                lo: 1.0,
                hi: ts.len() as f64 + 1.0,
            });
        }
    }
    let firings: Vec<f64> = rules.iter().map(TermRule::firing).collect();
    let total: f64 = firings.iter().sum();
    if total <= 0.0 {
        return Err(Error::NoRuleFired);
    }
    (0..q)
        .map(|k| {
            let f = rules
                .iter()
                .zip(&firings)
                .map(|(r, a)| a * r.consequents[k])
                .sum::<f64>()
                / total;
            to_two_tuple(f, ts)
        })
        .collect()
}

/// Orders by `β`; values within the ranking tie tolerance are equal.
pub fn compare(a: &TwoTuple, b: &TwoTuple) -> Ordering {
    let (x, y) = (a.beta(), b.beta());
    if (x - y).abs() <= TIE_TOLERANCE {
        Ordering::Equal
    } else {
        x.total_cmp(&y)
    }
}

/// How far the symmetric triangle of a translated term reaches past the
/// scale beyond what the untranslated term already does, in scale units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Overflow {
    pub left: f64,
    pub right: f64,
}

impl Overflow {
    pub fn protrudes(&self) -> bool {
        self.left > 0.0 || self.right > 0.0
    }

    pub fn amount(&self) -> f64 {
        self.left.max(self.right)
    }
}

/// Triangles are centred on uniformly spaced term positions with the given
/// half-width; `(s_i, α)` shifts the triangle of `s_i` by `α` spacings.
pub fn overflow_check(t: &TwoTuple, ts: &OrdinalTermSet, half_width: f64) -> Overflow {
    let scale = ts.scale();
    let excess = |center: f64| {
        (
            (scale.lo - (center - half_width)).max(0.0),
            ((center + half_width) - scale.hi).max(0.0),
        )
    };
    let (base_l, base_r) = excess(ts.center(t.index as f64));
    let (l, r) = excess(ts.center(t.beta()));
    // sub-ulp noise from the centre arithmetic is not an overflow
    let clean = |v: f64| if v > 1e-12 { v } else { 0.0 };
    Overflow {
        left: clean(l - base_l),
        right: clean(r - base_r),
    }
}
