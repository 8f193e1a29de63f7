//! Perceptual reasoning: rules are fired by Jaccard similarity between the
//! input words and their antecedents, and the consequents of the fired rules
//! are combined with the linguistic weighted average (LWA).
//!
//! The LWA works on α-cuts. For every α level, each endpoint of the output
//! is the minimum or maximum of `Σ vᵢ fᵢ / Σ fᵢ` over firing levels
//! `fᵢ ∈ [f̲ᵢ, f̄ᵢ]`, where `vᵢ` is the matching endpoint of the i-th
//! consequent's α-cut. The UMF of the output is swept over `α ∈ [0, 1]`; the
//! LMF over `α ∈ [0, h]` with `h` the smallest LMF height among fired
//! consequents. With scalar firing levels every endpoint is a plain weighted
//! average, so trapezoidal consequents produce a trapezoidal output.

use std::fmt;

use crate::codebook::Codebook;
use crate::error::{Error, Result};
use crate::fuzzy::{Footprint, IT2Word, Interval, Trapezoid};
use crate::ranking::Direction;
use crate::similarity::{centroid_ekm, jaccard, Centroid};

/// α levels per membership function when none is given.
pub const DEFAULT_LEVELS: usize = 101;

/// Similarities closer than this are a decode tie.
const DECODE_TIE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FiringLevel(Interval);

impl FiringLevel {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo > hi {
            return Err(Error::Domain(format!(
                "firing interval [{lo}, {hi}] must satisfy 0 <= lo <= hi <= 1"
            )));
        }
        Ok(FiringLevel(Interval { lo, hi }))
    }

    pub fn scalar(f: f64) -> Result<Self> {
        Self::new(f, f)
    }

    pub fn interval(&self) -> Interval {
        self.0
    }

    pub fn lo(&self) -> f64 {
        self.0.lo
    }

    pub fn hi(&self) -> f64 {
        self.0.hi
    }

    pub fn is_scalar(&self) -> bool {
        self.0.is_degenerate()
    }
}

impl fmt::Display for FiringLevel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            write!(f, "{:.4}", self.0.lo)
        } else {
            write!(f, "[{:.4}, {:.4}]", self.0.lo, self.0.hi)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Consequent {
    Word(String),
    /// Synthesized from the rule's own antecedents.
    Auto,
}

impl Consequent {
    pub fn parse(s: &str) -> Self {
        if s.eq_ignore_ascii_case("auto") {
            Consequent::Auto
        } else {
            Consequent::Word(s.to_string())
        }
    }
}

impl fmt::Display for Consequent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Consequent::Word(w) => f.write_str(w),
            Consequent::Auto => f.write_str("auto"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Rule {
    pub label: String,
    pub antecedents: Vec<String>,
    /// One per objective.
    pub consequents: Vec<Consequent>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Objective {
    pub name: String,
    pub direction: Direction,
    /// Antecedent positions an `auto` consequent is synthesized from; all of
    /// them when `None`.
    pub slots: Option<Vec<usize>>,
}

impl Objective {
    pub fn new(name: impl Into<String>, direction: Direction) -> Self {
        Objective {
            name: name.into(),
            direction,
            slots: None,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct RuleBase {
    rules: Vec<Rule>,
    objectives: Vec<Objective>,
}

impl RuleBase {
    pub fn new(rules: Vec<Rule>, objectives: Vec<Objective>) -> Result<Self> {
        let first = rules
            .first()
            .ok_or_else(|| Error::Dimension("a rule base needs at least one rule".into()))?;
        if objectives.is_empty() {
            return Err(Error::Dimension("a rule base needs at least one objective".into()));
        }
        let n = first.antecedents.len();
        if n == 0 {
            return Err(Error::Dimension(format!("rule '{}' has no antecedents", first.label)));
        }
        for r in &rules {
            if r.antecedents.len() != n {
                return Err(Error::Dimension(format!(
                    "rule '{}' has {} antecedents, expected {n}",
                    r.label,
                    r.antecedents.len()
                )));
            }
            if r.consequents.len() != objectives.len() {
                return Err(Error::Dimension(format!(
                    "rule '{}' has {} consequents but there are {} objectives",
                    r.label,
                    r.consequents.len(),
                    objectives.len()
                )));
            }
        }
        for o in &objectives {
            if let Some(slots) = &o.slots {
                if slots.is_empty() || slots.iter().any(|&s| s >= n) {
                    return Err(Error::Dimension(format!(
                        "objective '{}' names antecedent slots {slots:?} outside 0..{n}",
                        o.name
                    )));
                }
            }
        }
        Ok(RuleBase { rules, objectives })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn objectives(&self) -> &[Objective] {
        &self.objectives
    }

    pub fn antecedent_count(&self) -> usize {
        self.rules[0].antecedents.len()
    }

    /// Checks every word name against `cb`.
    pub fn check_words(&self, cb: &Codebook) -> Result<()> {
        for r in &self.rules {
            for name in &r.antecedents {
                cb.index_of(name)?;
            }
            for c in &r.consequents {
                if let Consequent::Word(name) = c {
                    cb.index_of(name)?;
                }
            }
        }
        Ok(())
    }
}

/// Output of the LWA, stored as dense α-cut endpoint curves.
///
/// `umf_left`/`umf_right` are `y_Ll(α)`/`y_Rr(α)` on `α ∈ [0, 1]`;
/// `lmf_left`/`lmf_right` are `y_Lr(α)`/`y_Rl(α)` on `α ∈ [0, height]`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaFou {
    pub umf_left: Vec<f64>,
    pub umf_right: Vec<f64>,
    pub lmf_left: Vec<f64>,
    pub lmf_right: Vec<f64>,
    pub height: f64,
}

fn level(top: f64, k: usize, levels: usize) -> f64 {
    top * k as f64 / (levels - 1) as f64
}

/// Linear interpolation of a curve sampled at `levels` uniform α values on `[0, top]`.
fn curve_at(curve: &[f64], top: f64, alpha: f64) -> f64 {
    let n = curve.len();
    let t = (alpha / top).clamp(0.0, 1.0) * (n - 1) as f64;
    let k = (t.floor() as usize).min(n - 2);
    let frac = t - k as f64;
    if frac == 0.0 {
        curve[k]
    } else {
        curve[k] + frac * (curve[k + 1] - curve[k])
    }
}

/// Largest α on `[0, top]` at which the nondecreasing `curve` is still `<= x`.
fn rising_inverse(curve: &[f64], top: f64, x: f64) -> Option<f64> {
    let n = curve.len();
    if x < curve[0] {
        return None;
    }
    if x >= curve[n - 1] {
        return Some(top);
    }
    let k = curve.partition_point(|&v| v <= x) - 1;
    let (x0, x1) = (curve[k], curve[k + 1]);
    let step = top / (n - 1) as f64;
    Some(level(top, k, n) + step * (x - x0) / (x1 - x0))
}

/// Largest α on `[0, top]` at which the nonincreasing `curve` is still `>= x`.
fn falling_inverse(curve: &[f64], top: f64, x: f64) -> Option<f64> {
    let n = curve.len();
    if x > curve[0] {
        return None;
    }
    if x <= curve[n - 1] {
        return Some(top);
    }
    let k = curve.partition_point(|&v| v >= x) - 1;
    let (x0, x1) = (curve[k], curve[k + 1]);
    let step = top / (n - 1) as f64;
    Some(level(top, k, n) + step * (x0 - x) / (x0 - x1))
}

/// Membership at `x` of the region bounded by the two endpoint curves.
fn membership_from_curves(left: &[f64], right: &[f64], top: f64, x: f64) -> f64 {
    match (rising_inverse(left, top, x), falling_inverse(right, top, x)) {
        (Some(a), Some(b)) => a.min(b),
        _ => 0.0,
    }
}

impl AlphaFou {
    /// Samples the α-cuts of any footprint. Exact for trapezoidal words.
    pub fn from_footprint<F: Footprint + ?Sized>(f: &F, levels: usize) -> Result<Self> {
        check_levels(levels)?;
        let h = f.lmf_height();
        let umf: Vec<Interval> = (0..levels).map(|k| f.umf_cut(level(1.0, k, levels))).collect();
        let lmf: Vec<Interval> = (0..levels).map(|k| f.lmf_cut(level(h, k, levels))).collect();
        Ok(AlphaFou {
            umf_left: umf.iter().map(|c| c.lo).collect(),
            umf_right: umf.iter().map(|c| c.hi).collect(),
            lmf_left: lmf.iter().map(|c| c.lo).collect(),
            lmf_right: lmf.iter().map(|c| c.hi).collect(),
            height: h,
        })
    }

    pub fn levels(&self) -> usize {
        self.umf_left.len()
    }

    /// Trapezoids through the ends of the endpoint curves. Exact when the
    /// curves are straight lines, which holds for scalar firing levels.
    pub fn to_word(&self, name: impl Into<String>) -> IT2Word {
        let n = self.levels();
        let umf = Trapezoid {
            a: self.umf_left[0],
            b: self.umf_left[n - 1],
            c: self.umf_right[n - 1],
            d: self.umf_right[0],
            h: 1.0,
        };
        let lmf = Trapezoid {
            a: self.lmf_left[0],
            b: self.lmf_left[n - 1],
            c: self.lmf_right[n - 1],
            d: self.lmf_right[0],
            h: self.height,
        };
        IT2Word {
            name: name.into(),
            label: None,
            umf,
            lmf,
            centroid: None,
        }
    }

    /// True when every endpoint curve is linear in α to within `tol`.
    pub fn is_trapezoidal(&self, tol: f64) -> bool {
        let straight = |c: &[f64]| {
            let n = c.len();
            (0..n).all(|k| {
                let t = k as f64 / (n - 1) as f64;
                (c[k] - (c[0] + t * (c[n - 1] - c[0]))).abs() <= tol
            })
        };
        [&self.umf_left, &self.umf_right, &self.lmf_left, &self.lmf_right]
            .iter()
            .all(|c| straight(c))
    }
}

impl Footprint for AlphaFou {
    fn envelope(&self, x: f64) -> Interval {
        let hi = membership_from_curves(&self.umf_left, &self.umf_right, 1.0, x);
        let lo = membership_from_curves(&self.lmf_left, &self.lmf_right, self.height, x);
        Interval { lo: lo.min(hi), hi }
    }

    fn support(&self) -> Interval {
        Interval {
            lo: self.umf_left[0],
            hi: self.umf_right[0],
        }
    }

    fn umf_cut(&self, alpha: f64) -> Interval {
        Interval {
            lo: curve_at(&self.umf_left, 1.0, alpha),
            hi: curve_at(&self.umf_right, 1.0, alpha),
        }
    }

    fn lmf_cut(&self, alpha: f64) -> Interval {
        Interval {
            lo: curve_at(&self.lmf_left, self.height, alpha),
            hi: curve_at(&self.lmf_right, self.height, alpha),
        }
    }

    fn lmf_height(&self) -> f64 {
        self.height
    }
}

fn check_levels(levels: usize) -> Result<()> {
    if levels < 2 {
        return Err(Error::Domain(format!("need at least 2 alpha levels, got {levels}")));
    }
    Ok(())
}

/// Minimum (or maximum) of `Σ vᵢ fᵢ / Σ fᵢ` over `fᵢ ∈ [loᵢ, hiᵢ]`.
///
/// The optimum puts the upper weights on the smallest values (for the
/// minimum) or the largest values (for the maximum) and the lower weights on
/// the rest, so it is enough to scan the switch points of the sorted values.
pub fn weighted_extreme(values: &[f64], lo: &[f64], hi: &[f64], maximize: bool) -> f64 {
    let n = values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| values[i].total_cmp(&values[j]));
    let mut best: Option<f64> = None;
    for m in 0..=n {
        let (mut num, mut den) = (0.0, 0.0);
        for (pos, &i) in order.iter().enumerate() {
            let heavy = if maximize { pos >= m } else { pos < m };
            let w = if heavy { hi[i] } else { lo[i] };
            num += values[i] * w;
            den += w;
        }
        if den <= 0.0 {
            continue;
        }
        let y = num / den;
        best = Some(match best {
            None => y,
            Some(b) if maximize => b.max(y),
            Some(b) => b.min(y),
        });
    }
    // a weighted mean cannot leave the hull of its values; clamp away rounding
    let (lo_v, hi_v) = (values[order[0]], values[order[n - 1]]);
    best.map_or(f64::NAN, |b| b.clamp(lo_v, hi_v))
}

/// Linguistic weighted average of `consequents` with firing `firings`,
/// sampled at `levels` α values per membership function.
pub fn lwa(consequents: &[&dyn Footprint], firings: &[FiringLevel], levels: usize) -> Result<AlphaFou> {
    check_levels(levels)?;
    if consequents.is_empty() || consequents.len() != firings.len() {
        return Err(Error::Dimension(format!(
            "LWA needs matching nonempty lists, got {} consequents and {} firing levels",
            consequents.len(),
            firings.len()
        )));
    }
    let fired: Vec<(&dyn Footprint, FiringLevel)> = consequents
        .iter()
        .zip(firings)
        .filter(|(_, f)| f.hi() > 0.0)
        .map(|(c, f)| (*c, *f))
        .collect();
    if fired.is_empty() {
        return Err(Error::NoRuleFired);
    }
    let lo: Vec<f64> = fired.iter().map(|(_, f)| f.lo()).collect();
    let hi: Vec<f64> = fired.iter().map(|(_, f)| f.hi()).collect();
    let height = fired.iter().map(|(c, _)| c.lmf_height()).fold(1.0, f64::min);

    let mut out = AlphaFou {
        umf_left: Vec::with_capacity(levels),
        umf_right: Vec::with_capacity(levels),
        lmf_left: Vec::with_capacity(levels),
        lmf_right: Vec::with_capacity(levels),
        height,
    };
    for k in 0..levels {
        let cuts: Vec<Interval> = fired.iter().map(|(c, _)| c.umf_cut(level(1.0, k, levels))).collect();
        let lefts: Vec<f64> = cuts.iter().map(|c| c.lo).collect();
        let rights: Vec<f64> = cuts.iter().map(|c| c.hi).collect();
        out.umf_left.push(weighted_extreme(&lefts, &lo, &hi, false));
        out.umf_right.push(weighted_extreme(&rights, &lo, &hi, true));

        let cuts: Vec<Interval> = fired.iter().map(|(c, _)| c.lmf_cut(level(height, k, levels))).collect();
        let lefts: Vec<f64> = cuts.iter().map(|c| c.lo).collect();
        let rights: Vec<f64> = cuts.iter().map(|c| c.hi).collect();
        out.lmf_left.push(weighted_extreme(&lefts, &lo, &hi, false));
        out.lmf_right.push(weighted_extreme(&rights, &lo, &hi, true));
    }
    Ok(out)
}

/// Nearest codebook word to a footprint.
#[derive(Debug, Clone, PartialEq)]
pub struct Decoded {
    pub word: String,
    pub index: usize,
    pub similarity: f64,
    /// Similarity to every codebook word, in codebook order.
    pub similarities: Vec<f64>,
    /// Set when another word tied for the best similarity and the
    /// higher-index word was chosen.
    pub tie_broken: bool,
}

/// Codebook word with the largest Jaccard similarity to `fou`; ties go to
/// the higher-index word.
pub fn decode<F: Footprint + ?Sized>(fou: &F, cb: &Codebook) -> Result<Decoded> {
    let similarities = cb
        .words()
        .iter()
        .map(|w| jaccard(fou, w, cb.grid()))
        .collect::<Result<Vec<f64>>>()?;
    let (mut best, mut tie_broken) = (0, false);
    for (i, &s) in similarities.iter().enumerate().skip(1) {
        let b = similarities[best];
        if s > b + DECODE_TIE {
            best = i;
            tie_broken = false;
        } else if (s - b).abs() <= DECODE_TIE {
            best = i;
            tie_broken = true;
        }
    }
    Ok(Decoded {
        word: cb.words()[best].name.clone(),
        index: best,
        similarity: similarities[best],
        similarities,
        tie_broken,
    })
}

/// Firing level of `rule` for `input`: the minimum over antecedent slots of
/// the Jaccard similarity between input word and antecedent word.
pub fn fire<S: AsRef<str>>(rule: &Rule, input: &[S], cb: &Codebook) -> Result<FiringLevel> {
    if input.len() != rule.antecedents.len() {
        return Err(Error::Dimension(format!(
            "input has {} words but rule '{}' has {} antecedents",
            input.len(),
            rule.label,
            rule.antecedents.len()
        )));
    }
    let mut f: f64 = 1.0;
    for (x, a) in input.iter().zip(&rule.antecedents) {
        let s = jaccard(cb.get(x.as_ref())?, cb.get(a)?, cb.grid())?;
        f = f.min(s);
    }
    FiringLevel::scalar(f.clamp(0.0, 1.0))
}

#[derive(Debug, Clone, PartialEq)]
pub struct Synthesized {
    pub fou: AlphaFou,
    pub centroid: Centroid,
    pub decoded: Decoded,
}

/// Equal-weight LWA of `antecedents`, with its centroid and nearest codebook word.
pub fn synthesize_consequent(antecedents: &[&IT2Word], cb: &Codebook, levels: usize) -> Result<Synthesized> {
    if antecedents.is_empty() {
        return Err(Error::Dimension(
            "cannot synthesize a consequent from no antecedents".into(),
        ));
    }
    let refs: Vec<&dyn Footprint> = antecedents.iter().map(|w| *w as &dyn Footprint).collect();
    let ones = vec![FiringLevel::scalar(1.0)?; antecedents.len()];
    let fou = lwa(&refs, &ones, levels)?;
    let centroid = centroid_ekm(&fou, cb.grid(), "synthesized consequent")?;
    let decoded = decode(&fou, cb)?;
    Ok(Synthesized { fou, centroid, decoded })
}

/// How `auto` consequents enter the LWA.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ConsequentMode {
    /// Engine default: raw for single-objective, decoded for multi-objective.
    #[default]
    Default,
    /// The synthesized FOU itself.
    Raw,
    /// The codebook word it decodes to.
    Decoded,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub levels: usize,
    pub mode: ConsequentMode,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            levels: DEFAULT_LEVELS,
            mode: ConsequentMode::Default,
        }
    }
}

/// Result for one objective.
#[derive(Debug, Clone, PartialEq)]
pub struct PrOutput {
    pub objective: String,
    pub fou: AlphaFou,
    pub centroid: Centroid,
    pub decoded: Decoded,
    /// One per rule, in rule order.
    pub firings: Vec<FiringLevel>,
    /// Resolved consequent per rule: a word name, or `auto:<word>` for a
    /// synthesized consequent with the word it decodes to.
    pub consequents: Vec<String>,
}

enum ResolvedFou<'a> {
    Word(&'a IT2Word),
    Synth(AlphaFou),
}

impl ResolvedFou<'_> {
    fn as_dyn(&self) -> &dyn Footprint {
        match self {
            ResolvedFou::Word(w) => *w,
            ResolvedFou::Synth(f) => f,
        }
    }
}

fn solve(
    rb: &RuleBase,
    input: &[String],
    cb: &Codebook,
    opts: SolveOptions,
    mode: ConsequentMode,
) -> Result<Vec<PrOutput>> {
    check_levels(opts.levels)?;
    rb.check_words(cb)?;
    let firings = rb
        .rules()
        .iter()
        .map(|r| fire(r, input, cb))
        .collect::<Result<Vec<_>>>()?;
    if firings.iter().all(|f| f.hi() == 0.0) {
        return Err(Error::NoRuleFired);
    }
    let mut outputs = Vec::with_capacity(rb.objectives().len());
    for (k, objective) in rb.objectives().iter().enumerate() {
        let mut resolved = Vec::with_capacity(rb.rules().len());
        let mut names = Vec::with_capacity(rb.rules().len());
        for rule in rb.rules() {
            match &rule.consequents[k] {
                Consequent::Word(name) => {
                    resolved.push(ResolvedFou::Word(cb.get(name)?));
                    names.push(name.clone());
                }
                Consequent::Auto => {
                    let slots: Vec<usize> = match &objective.slots {
                        Some(s) => s.clone(),
                        None => (0..rule.antecedents.len()).collect(),
                    };
                    let words = slots
                        .iter()
                        .map(|&s| cb.get(&rule.antecedents[s]))
                        .collect::<Result<Vec<_>>>()?;
                    let synth = synthesize_consequent(&words, cb, opts.levels)?;
                    names.push(format!("auto:{}", synth.decoded.word));
                    resolved.push(match mode {
                        ConsequentMode::Decoded => ResolvedFou::Word(&cb.words()[synth.decoded.index]),
                        _ => ResolvedFou::Synth(synth.fou),
                    });
                }
            }
        }
        let refs: Vec<&dyn Footprint> = resolved.iter().map(|r| r.as_dyn()).collect();
        let fou = lwa(&refs, &firings, opts.levels)?;
        let centroid = centroid_ekm(&fou, cb.grid(), &objective.name)?;
        let decoded = decode(&fou, cb)?;
        outputs.push(PrOutput {
            objective: objective.name.clone(),
            fou,
            centroid,
            decoded,
            firings: firings.clone(),
            consequents: names,
        });
    }
    Ok(outputs)
}

/// Single-objective inference. `auto` consequents default to their raw FOU.
pub fn solve_solop(rb: &RuleBase, input: &[String], cb: &Codebook, opts: SolveOptions) -> Result<PrOutput> {
    if rb.objectives().len() != 1 {
        return Err(Error::Dimension(format!(
            "single-objective inference needs exactly one objective, found {}",
            rb.objectives().len()
        )));
    }
    let mode = match opts.mode {
        ConsequentMode::Default => ConsequentMode::Raw,
        m => m,
    };
    Ok(solve(rb, input, cb, opts, mode)?.remove(0))
}

/// Multi-objective inference: firing levels are shared, one LWA per
/// objective. `auto` consequents default to their decoded codebook word.
pub fn solve_molop(rb: &RuleBase, input: &[String], cb: &Codebook, opts: SolveOptions) -> Result<Vec<PrOutput>> {
    let mode = match opts.mode {
        ConsequentMode::Default => ConsequentMode::Decoded,
        m => m,
    };
    solve(rb, input, cb, opts, mode)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hma() -> Codebook {
        Codebook::load("paper-hma").unwrap()
    }

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    fn rule(label: &str, ants: &[&str], cons: &[&str]) -> Rule {
        Rule {
            label: label.into(),
            antecedents: strings(ants),
            consequents: cons.iter().map(|c| Consequent::parse(c)).collect(),
        }
    }

    fn assert_same_word(a: &IT2Word, b: &IT2Word, tol: f64) {
        let (ua, ub) = (a.umf.vertices(), b.umf.vertices());
        let (la, lb) = (a.lmf.vertices(), b.lmf.vertices());
        for i in 0..4 {
            assert!((ua[i] - ub[i]).abs() <= tol, "umf {ua:?} vs {ub:?}");
            assert!((la[i] - lb[i]).abs() <= tol, "lmf {la:?} vs {lb:?}");
        }
        assert!((a.lmf.h - b.lmf.h).abs() <= tol);
    }

    #[test]
    fn firing_level_bounds() {
        assert!(FiringLevel::new(0.2, 0.1).is_err());
        assert!(FiringLevel::new(-0.1, 0.5).is_err());
        assert!(FiringLevel::scalar(1.5).is_err());
        assert!(FiringLevel::scalar(0.3).unwrap().is_scalar());
    }

    #[test]
    fn identical_consequents_reproduce_the_word() {
        let cb = hma();
        let g = cb.get("G").unwrap();
        let out = lwa(
            &[g, g],
            &[FiringLevel::scalar(1.0).unwrap(), FiringLevel::scalar(0.1).unwrap()],
            101,
        )
        .unwrap();
        assert_same_word(&out.to_word("x"), g, 1e-9);
    }

    #[test]
    fn single_rule_returns_its_consequent() {
        let cb = Codebook::load("paper-ia").unwrap();
        let a = cb.get("A").unwrap();
        let out = lwa(&[a], &[FiringLevel::scalar(0.4).unwrap()], 101).unwrap();
        assert_same_word(&out.to_word("x"), a, 1e-12);
    }

    #[test]
    fn zero_firing_is_an_error() {
        let cb = hma();
        let a = cb.get("A").unwrap();
        let zero = FiringLevel::scalar(0.0).unwrap();
        assert_eq!(lwa(&[a, a], &[zero, zero], 11), Err(Error::NoRuleFired));
        assert!(matches!(lwa(&[a], &[zero, zero], 11), Err(Error::Dimension(_))));
    }

    #[test]
    fn unfired_rule_does_not_lower_height() {
        let cb = Codebook::load("paper-ia").unwrap();
        let (a, g) = (cb.get("A").unwrap(), cb.get("G").unwrap());
        let out = lwa(
            &[g, a],
            &[FiringLevel::scalar(1.0).unwrap(), FiringLevel::scalar(0.0).unwrap()],
            21,
        )
        .unwrap();
        assert_eq!(out.height, 1.0);
        let out = lwa(
            &[g, a],
            &[FiringLevel::scalar(1.0).unwrap(), FiringLevel::scalar(0.2).unwrap()],
            21,
        )
        .unwrap();
        assert_eq!(out.height, 0.88);
    }

    #[test]
    fn weighted_extreme_scalar_is_plain_average() {
        let v = [3.0, 1.0, 2.0];
        let w = [0.5, 0.25, 1.0];
        let direct = (3.0 * 0.5 + 1.0 * 0.25 + 2.0 * 1.0) / 1.75;
        assert!((weighted_extreme(&v, &w, &w, false) - direct).abs() < 1e-12);
        assert!((weighted_extreme(&v, &w, &w, true) - direct).abs() < 1e-12);
    }

    #[test]
    fn weighted_extreme_interval_matches_vertex_enumeration() {
        let v = [1.0, 4.0, 2.5, 7.0];
        let lo = [0.1, 0.0, 0.3, 0.2];
        let hi = [0.9, 0.5, 0.6, 1.0];
        let (mut mn, mut mx) = (f64::INFINITY, f64::NEG_INFINITY);
        for mask in 0..16u32 {
            let w: Vec<f64> = (0..4).map(|i| if mask >> i & 1 == 1 { hi[i] } else { lo[i] }).collect();
            let den: f64 = w.iter().sum();
            let y = v.iter().zip(&w).map(|(a, b)| a * b).sum::<f64>() / den;
            mn = mn.min(y);
            mx = mx.max(y);
        }
        assert!((weighted_extreme(&v, &lo, &hi, false) - mn).abs() < 1e-12);
        assert!((weighted_extreme(&v, &lo, &hi, true) - mx).abs() < 1e-12);
    }

    #[test]
    fn alpha_fou_membership_matches_trapezoids() {
        let cb = Codebook::load("paper-ia").unwrap();
        let a = cb.get("A").unwrap();
        let fou = AlphaFou::from_footprint(a, 101).unwrap();
        for i in 0..=200 {
            let x = i as f64 * 0.05;
            let (e1, e2) = (fou.envelope(x), a.envelope(x));
            assert!(
                (e1.lo - e2.lo).abs() < 1e-9 && (e1.hi - e2.hi).abs() < 1e-9,
                "x={x}: {e1} vs {e2}"
            );
        }
        assert!(fou.is_trapezoidal(1e-9));
    }

    #[test]
    fn interval_firing_widens_the_output() {
        let cb = hma();
        let words: Vec<&dyn Footprint> = ["P", "A", "VG"]
            .iter()
            .map(|n| cb.get(n).unwrap() as &dyn Footprint)
            .collect();
        let mid = vec![FiringLevel::scalar(0.65).unwrap(); 3];
        let span = vec![FiringLevel::new(0.3, 1.0).unwrap(); 3];
        let narrow = lwa(&words, &mid, 51).unwrap();
        let wide = lwa(&words, &span, 51).unwrap();
        for k in 0..51 {
            assert!(wide.umf_left[k] <= narrow.umf_left[k] + 1e-12);
            assert!(wide.umf_right[k] >= narrow.umf_right[k] - 1e-12);
        }
        // the optimal switch point moves with α, bending the endpoint curve
        assert!(narrow.is_trapezoidal(1e-9));
        assert!(!wide.is_trapezoidal(1e-3));
    }

    #[test]
    fn fire_examples() {
        let cb = hma();
        let r1 = rule("R1", &["VP", "P", "A", "A", "P", "P", "A"], &["P"]);
        let r2 = rule("R2", &["VP", "P", "VP", "P", "A", "A", "A"], &["P"]);
        let input = strings(&["VP", "P", "A", "A", "P", "P", "A"]);
        assert_eq!(fire(&r1, &input, &cb).unwrap().lo(), 1.0);
        let f = fire(&r2, &input, &cb).unwrap().lo();
        assert!((f - 0.08).abs() <= 0.02, "{f}");
        assert!(matches!(fire(&r1, &input[..3], &cb), Err(Error::Dimension(_))));
        let bad = strings(&["VP", "P", "A", "A", "P", "P", "Excellent"]);
        assert!(matches!(fire(&r1, &bad, &cb), Err(Error::UnknownWord(_))));
    }

    #[test]
    fn synthesized_consequents() {
        let cb = hma();
        let words = |names: &[&str]| names.iter().map(|n| cb.get(n).unwrap()).collect::<Vec<_>>();
        let s = synthesize_consequent(&words(&["VP", "P", "A", "A", "P"]), &cb, 101).unwrap();
        assert!((s.centroid.mean - 3.33).abs() <= 0.05, "{}", s.centroid);
        assert_eq!(s.decoded.word, "P");
        let s = synthesize_consequent(&words(&["G", "G", "G", "G", "G"]), &cb, 101).unwrap();
        assert_eq!(s.decoded.word, "G");
        let s = synthesize_consequent(&words(&["G", "VG", "A", "A", "A"]), &cb, 101).unwrap();
        assert!((s.centroid.mean - 6.2).abs() <= 0.05);
        assert_eq!(s.decoded.word, "G");
    }

    #[test]
    fn decode_reflexive_and_poor_average_blend() {
        let cb = hma();
        for w in cb.words() {
            assert_eq!(decode(w, &cb).unwrap().word, w.name);
        }
        let s = synthesize_consequent(&[cb.get("P").unwrap(), cb.get("A").unwrap()], &cb, 101).unwrap();
        assert_eq!(s.decoded.word, "A");
    }

    #[test]
    fn one_matching_rule_returns_its_consequent() {
        let cb = hma();
        // VP vs VG similarity is zero on this codebook
        let rb = RuleBase::new(
            vec![rule("R1", &["VP"], &["P"]), rule("R2", &["VG"], &["G"])],
            vec![Objective::new("f", Direction::Max)],
        )
        .unwrap();
        let out = solve_solop(&rb, &strings(&["VP"]), &cb, SolveOptions::default()).unwrap();
        assert_eq!(out.firings[1].lo(), 0.0);
        assert_same_word(&out.fou.to_word("y"), cb.get("P").unwrap(), 1e-12);
        assert_eq!(out.decoded.word, "P");
    }

    #[test]
    fn solop_rejects_multiple_objectives() {
        let cb = hma();
        let rb = RuleBase::new(
            vec![rule("R1", &["A"], &["P", "G"])],
            vec![Objective::new("f", Direction::Max), Objective::new("g", Direction::Max)],
        )
        .unwrap();
        assert!(matches!(
            solve_solop(&rb, &strings(&["A"]), &cb, SolveOptions::default()),
            Err(Error::Dimension(_))
        ));
        let outs = solve_molop(&rb, &strings(&["A"]), &cb, SolveOptions::default()).unwrap();
        assert_eq!(outs[0].decoded.word, "P");
        assert_eq!(outs[1].decoded.word, "G");
    }

    #[test]
    fn rule_base_dimension_checks() {
        let obj = || vec![Objective::new("f", Direction::Max)];
        assert!(RuleBase::new(vec![], obj()).is_err());
        assert!(RuleBase::new(vec![rule("a", &["A", "P"], &["P"]), rule("b", &["A"], &["P"])], obj()).is_err());
        assert!(RuleBase::new(vec![rule("a", &["A"], &["P", "G"])], obj()).is_err());
        let mut o = obj();
        o[0].slots = Some(vec![3]);
        assert!(RuleBase::new(vec![rule("a", &["A"], &["P"])], o).is_err());
    }

    #[test]
    fn no_rule_fired_when_input_is_far_away() {
        let cb = hma();
        let rb = RuleBase::new(
            vec![rule("R1", &["VP"], &["P"])],
            vec![Objective::new("f", Direction::Max)],
        )
        .unwrap();
        assert_eq!(
            solve_solop(&rb, &strings(&["VG"]), &cb, SolveOptions::default()),
            Err(Error::NoRuleFired)
        );
    }
}
