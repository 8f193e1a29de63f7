//! Tsukamoto inference over monotone membership functions, and a grid
//! search of the crisp objective along a linear equality constraint.
//!
//! Rule `j` fires at `αⱼ = Πᵢ Aⱼᵢ(yᵢ)`; its crisp output for objective `k`
//! is `Cⱼₖ⁻¹(αⱼ)`; the objective value is the α-weighted mean of those.
//!
//! File format (TOML):
//!
//! ```toml
//! name = "sm-solop"
//! total = 0.5                     # optional: y₁ + … + yₙ = total, 0 <= yᵢ <= 1
//!
//! [[objective]]
//! name = "f"
//! direction = "min"
//!
//! [[rule]]
//! antecedents = [{ kind = "decreasing" }, { kind = "increasing", domain = [0, 1] }]
//! consequents = [{ kind = "samples", x = [0, 0.5, 1], mu = [0, 0.8, 1] }]
//! ```

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::fixtures;
use crate::fuzzy::Interval;
use crate::ranking::Direction;

/// Points scoring within this of the best are all reported.
pub const OPTIMUM_TOLERANCE: f64 = 1e-9;

/// Grid points per unit length along each free coordinate.
pub const DEFAULT_RESOLUTION: usize = 1000;

const MAX_GRID_POINTS: f64 = 1e8;

const UNIT: Interval = Interval { lo: 0.0, hi: 1.0 };

#[derive(Debug, Clone, PartialEq)]
pub enum MonotoneMf {
    /// `(x − lo) / (hi − lo)`.
    Increasing { domain: Interval },
    /// `(hi − x) / (hi − lo)`.
    Decreasing { domain: Interval },
    /// Piecewise linear through `(x, mu)` points; `x` strictly increasing,
    /// `mu` strictly monotone.
    Samples { x: Vec<f64>, mu: Vec<f64> },
}

impl MonotoneMf {
    pub fn increasing() -> Self {
        MonotoneMf::Increasing { domain: UNIT }
    }

    pub fn decreasing() -> Self {
        MonotoneMf::Decreasing { domain: UNIT }
    }

    pub fn samples(x: Vec<f64>, mu: Vec<f64>) -> Result<Self> {
        if x.len() < 2 || x.len() != mu.len() {
            return Err(Error::Parse(
                "sampled membership needs at least two (x, mu) points of equal count".into(),
            ));
        }
        if x.iter().chain(&mu).any(|v| !v.is_finite()) {
            return Err(Error::Parse("sampled membership values must be finite".into()));
        }
        if mu.iter().any(|m| !(0.0..=1.0).contains(m)) {
            return Err(Error::Parse("membership samples must lie in [0, 1]".into()));
        }
        if x.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse("sample positions must be strictly increasing".into()));
        }
        let rising = mu.windows(2).all(|w| w[0] < w[1]);
        let falling = mu.windows(2).all(|w| w[0] > w[1]);
        if !rising && !falling {
            return Err(Error::Parse(
                "sampled membership is not strictly monotone, so it cannot be inverted".into(),
            ));
        }
        Ok(MonotoneMf::Samples { x, mu })
    }

    fn check_domain(domain: Interval) -> Result<Interval> {
        if !(domain.lo.is_finite() && domain.hi.is_finite()) || domain.width() <= 0.0 {
            return Err(Error::Parse(format!(
                "membership domain {domain} must be a finite interval of positive width"
            )));
        }
        Ok(domain)
    }

    pub fn domain(&self) -> Interval {
        match self {
            MonotoneMf::Increasing { domain } | MonotoneMf::Decreasing { domain } => *domain,
            MonotoneMf::Samples { x, .. } => Interval {
                lo: x[0],
                hi: x[x.len() - 1],
            },
        }
    }

    /// Range of membership values taken on the domain.
    fn range(&self) -> Interval {
        match self {
            MonotoneMf::Samples { mu, .. } => {
                let (a, b) = (mu[0], mu[mu.len() - 1]);
                Interval {
                    lo: a.min(b),
                    hi: a.max(b),
                }
            }
            _ => UNIT,
        }
    }

    /// Membership at `v`, constant beyond the domain ends.
    pub fn membership(&self, v: f64) -> f64 {
        match self {
            MonotoneMf::Increasing { domain } => ((v - domain.lo) / domain.width()).clamp(0.0, 1.0),
            MonotoneMf::Decreasing { domain } => ((domain.hi - v) / domain.width()).clamp(0.0, 1.0),
            MonotoneMf::Samples { x, mu } => interpolate(x, mu, v),
        }
    }

    /// The domain point with membership `alpha`.
    pub fn inverse(&self, alpha: f64) -> Result<f64> {
        let range = self.range();
        if !(range.lo..=range.hi).contains(&alpha) {
            return Err(Error::OutOfRange {
                value: alpha,
                lo: range.lo,
                hi: range.hi,
            });
        }
        Ok(match self {
            MonotoneMf::Increasing { domain } => domain.lo + alpha * domain.width(),
            MonotoneMf::Decreasing { domain } => domain.hi - alpha * domain.width(),
            MonotoneMf::Samples { x, mu } => {
                if mu[0] < mu[mu.len() - 1] {
                    interpolate(mu, x, alpha)
                } else {
                    let rx: Vec<f64> = x.iter().rev().copied().collect();
                    let rm: Vec<f64> = mu.iter().rev().copied().collect();
                    interpolate(&rm, &rx, alpha)
                }
            }
        })
    }
}

/// Piecewise-linear interpolation on increasing `xs`, clamped at the ends.
fn interpolate(xs: &[f64], ys: &[f64], v: f64) -> f64 {
    let n = xs.len();
    if v <= xs[0] {
        return ys[0];
    }
    if v >= xs[n - 1] {
        return ys[n - 1];
    }
    let k = xs.partition_point(|&x| x <= v) - 1;
    let t = (v - xs[k]) / (xs[k + 1] - xs[k]);
    ys[k] + t * (ys[k + 1] - ys[k])
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct MfRecord {
    kind: String,
    domain: Option<[f64; 2]>,
    x: Option<Vec<f64>>,
    mu: Option<Vec<f64>>,
}

impl TryFrom<MfRecord> for MonotoneMf {
    type Error = Error;

    fn try_from(r: MfRecord) -> Result<Self> {
        let domain = || -> Result<Interval> {
            match r.domain {
                Some([lo, hi]) if lo < hi => MonotoneMf::check_domain(Interval { lo, hi }),
                Some([lo, hi]) => Err(Error::Parse(format!("membership domain [{lo}, {hi}] is empty"))),
                None => Ok(UNIT),
            }
        };
        match r.kind.as_str() {
            "increasing" | "decreasing" if r.x.is_some() || r.mu.is_some() => {
                Err(Error::Parse(format!("'{}' membership takes no samples", r.kind)))
            }
            "increasing" => Ok(MonotoneMf::Increasing { domain: domain()? }),
            "decreasing" => Ok(MonotoneMf::Decreasing { domain: domain()? }),
            "samples" => {
                if r.domain.is_some() {
                    return Err(Error::Parse("sampled membership takes its domain from x".into()));
                }
                match (r.x, r.mu) {
                    (Some(x), Some(mu)) => MonotoneMf::samples(x, mu),
                    _ => Err(Error::Parse("sampled membership needs both x and mu".into())),
                }
            }
            other => Err(Error::Parse(format!("unknown membership kind '{other}'"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TsukamotoRule {
    pub antecedents: Vec<MonotoneMf>,
    pub consequents: Vec<MonotoneMf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TsukamotoObjective {
    pub name: String,
    pub direction: Direction,
}

/// `y₁ + … + yₙ = total` with every `yᵢ ∈ [lo, hi]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LinearConstraint {
    pub total: f64,
    pub lo: f64,
    pub hi: f64,
}

impl LinearConstraint {
    pub fn unit_box(total: f64) -> Self {
        LinearConstraint {
            total,
            lo: 0.0,
            hi: 1.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TsukamotoSystem {
    pub name: String,
    pub objectives: Vec<TsukamotoObjective>,
    pub rules: Vec<TsukamotoRule>,
    pub constraint: Option<LinearConstraint>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleRecord {
    antecedents: Vec<MfRecord>,
    consequents: Vec<MfRecord>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ObjectiveRecord {
    name: String,
    #[serde(default)]
    direction: Direction,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SystemFile {
    name: String,
    total: Option<f64>,
    objective: Vec<ObjectiveRecord>,
    rule: Vec<RuleRecord>,
}

/// Grid optima of a system along a constraint.
#[derive(Debug, Clone, PartialEq)]
pub struct Optimum {
    /// Every grid point within [`OPTIMUM_TOLERANCE`] of the best score, in
    /// lexicographic grid order.
    pub points: Vec<Vec<f64>>,
    /// Objective values at each point.
    pub values: Vec<Vec<f64>>,
    /// The objective for one objective; otherwise the smallest normalized
    /// objective, which is maximized.
    pub score: f64,
}

impl TsukamotoSystem {
    pub fn new(
        name: impl Into<String>,
        objectives: Vec<TsukamotoObjective>,
        rules: Vec<TsukamotoRule>,
        constraint: Option<LinearConstraint>,
    ) -> Result<Self> {
        let first = rules
            .first()
            .ok_or_else(|| Error::Dimension("a Tsukamoto system needs at least one rule".into()))?;
        let (n, q) = (first.antecedents.len(), objectives.len());
        if n == 0 || q == 0 {
            return Err(Error::Dimension(
                "rules need antecedents and the system needs objectives".into(),
            ));
        }
        for (j, r) in rules.iter().enumerate() {
            if r.antecedents.len() != n || r.consequents.len() != q {
                return Err(Error::Dimension(format!(
                    "rule {} has {}/{} antecedents/consequents, expected {n}/{q}",
                    j + 1,
                    r.antecedents.len(),
                    r.consequents.len()
                )));
            }
            if let Some(c) = r.consequents.iter().find(|c| c.range() != UNIT) {
                return Err(Error::Parse(format!(
                    "consequent of rule {} must take every membership value in [0, 1], got {}",
                    j + 1,
                    c.range()
                )));
            }
        }
        if let Some(c) = constraint {
            if !(c.total.is_finite() && c.lo.is_finite() && c.hi.is_finite() && c.lo < c.hi) {
                return Err(Error::Parse(format!(
                    "invalid constraint total {} on box [{}, {}]",
                    c.total, c.lo, c.hi
                )));
            }
        }
        Ok(TsukamotoSystem {
            name: name.into(),
            objectives,
            rules,
            constraint,
        })
    }

    /// Loads a fixture id (`sm-solop`, `sm-molop`) or a system file path.
    pub fn load(source: &str) -> Result<Self> {
        match fixtures::tsukamoto_source(source) {
            Some(text) => Self::parse(text),
            None if Path::new(source).exists() => Self::parse(&std::fs::read_to_string(source)?),
            None => Err(Error::UnknownFixture(source.to_string())),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: SystemFile = toml::from_str(text)?;
        let convert = |v: Vec<MfRecord>| v.into_iter().map(MonotoneMf::try_from).collect::<Result<Vec<_>>>();
        let rules = file
            .rule
            .into_iter()
            .map(|r| {
                Ok(TsukamotoRule {
                    antecedents: convert(r.antecedents)?,
                    consequents: convert(r.consequents)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        let objectives = file
            .objective
            .into_iter()
            .map(|o| TsukamotoObjective {
                name: o.name,
                direction: o.direction,
            })
            .collect();
        Self::new(file.name, objectives, rules, file.total.map(LinearConstraint::unit_box))
    }

    pub fn variables(&self) -> usize {
        self.rules[0].antecedents.len()
    }

    /// Product t-norm firing level of every rule at `y`.
    pub fn firings(&self, y: &[f64]) -> Result<Vec<f64>> {
        if y.len() != self.variables() {
            return Err(Error::Dimension(format!(
                "expected {} variables, got {}",
                self.variables(),
                y.len()
            )));
        }
        Ok(self
            .rules
            .iter()
            .map(|r| r.antecedents.iter().zip(y).map(|(a, &v)| a.membership(v)).product())
            .collect())
    }

    /// Crisp value of every objective at `y`.
    pub fn crisp_output(&self, y: &[f64]) -> Result<Vec<f64>> {
        let alphas = self.firings(y)?;
        let total: f64 = alphas.iter().sum();
        if total <= 0.0 {
            return Err(Error::NoRuleFired);
        }
        (0..self.objectives.len())
            .map(|k| {
                let mut num = 0.0;
                for (r, &a) in self.rules.iter().zip(&alphas) {
                    if a > 0.0 {
                        num += a * r.consequents[k].inverse(a)?;
                    }
                }
                Ok(num / total)
            })
            .collect()
    }

    fn score(&self, values: &[f64]) -> f64 {
        if let [v] = values {
            return match self.objectives[0].direction {
                Direction::Max => *v,
                Direction::Min => -v,
            };
        }
        values
            .iter()
            .zip(&self.objectives)
            .enumerate()
            .map(|(k, (v, o))| {
                let span = self.rules.iter().map(|r| r.consequents[k].domain()).fold(
                    Interval {
                        lo: f64::INFINITY,
                        hi: f64::NEG_INFINITY,
                    },
                    |acc, d| Interval {
                        lo: acc.lo.min(d.lo),
                        hi: acc.hi.max(d.hi),
                    },
                );
                let t = (v - span.lo) / span.width();
                match o.direction {
                    Direction::Max => t,
                    Direction::Min => 1.0 - t,
                }
            })
            .fold(f64::INFINITY, f64::min)
    }

    /// Exhaustive search over grid points `yᵢ = lo + k / resolution` for all
    /// but the last coordinate, which the constraint fixes. Points where no
    /// rule fires are skipped.
    pub fn optimize(&self, constraint: LinearConstraint, resolution: usize) -> Result<Optimum> {
        if resolution == 0 {
            return Err(Error::Domain("grid resolution must be positive".into()));
        }
        let n = self.variables();
        let steps = ((constraint.hi - constraint.lo) * resolution as f64).round() as usize;
        if ((steps + 1) as f64).powi(n as i32 - 1) > MAX_GRID_POINTS {
            return Err(Error::Unsupported(format!(
                "grid of {} points per axis over {} free variables is too large",
                steps + 1,
                n - 1
            )));
        }
        let mut best = f64::NEG_INFINITY;
        let mut found: Vec<(Vec<f64>, Vec<f64>, f64)> = Vec::new();
        let mut feasible = false;
        let mut idx = vec![0usize; n - 1];
        'grid: loop {
            let mut y: Vec<f64> = idx
                .iter()
                .map(|&k| constraint.lo + k as f64 / resolution as f64)
                .collect();
            let last = constraint.total - y.iter().sum::<f64>();
            if last >= constraint.lo - 1e-12 && last <= constraint.hi + 1e-12 {
                feasible = true;
                y.push(last.clamp(constraint.lo, constraint.hi));
                match self.crisp_output(&y) {
                    Ok(values) => {
                        let s = self.score(&values);
                        best = best.max(s);
                        if s >= best - OPTIMUM_TOLERANCE {
                            found.push((y, values, s));
                        }
                    }
                    Err(Error::NoRuleFired) => {}
                    Err(e) => return Err(e),
                }
            }
            // odometer step, last free coordinate fastest
            let mut pos = idx.len();
            loop {
                if pos == 0 {
                    break 'grid;
                }
                pos -= 1;
                if idx[pos] < steps {
                    idx[pos] += 1;
                    idx[pos + 1..].iter_mut().for_each(|k| *k = 0);
                    break;
                }
            }
        }
        if !feasible {
            return Err(Error::EmptyFeasibleSet);
        }
        if found.is_empty() {
            return Err(Error::NoRuleFired);
        }
        found.retain(|(_, _, s)| *s >= best - OPTIMUM_TOLERANCE);
        Ok(Optimum {
            points: found.iter().map(|f| f.0.clone()).collect(),
            values: found.iter().map(|f| f.1.clone()).collect(),
            score: best,
        })
    }
}
