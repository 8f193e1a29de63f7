//! Problem bundles: objectives, alternatives with their input words, and
//! rules, plus the drivers that solve every alternative and rank them.
//!
//! File format (TOML):
//!
//! ```toml
//! name = "case-molop"
//! terms = ["VP", "P", "A", "G", "VG"]     # optional, used by the 2-tuple engine
//! rank_priority = ["elective", "core"]    # optional, defaults to objective order
//!
//! [[objective]]
//! name = "core"
//! direction = "max"                       # max | min, default max
//! slots = [0, 1, 2, 3, 4]                 # optional, 0-based antecedent positions for "auto"
//!
//! [[rule]]                                # optional rules shared by every alternative
//! label = "R0"
//! antecedents = ["A", "A"]
//! consequents = ["A"]                     # one per objective; a word name or "auto"
//!
//! [[alternative]]
//! name = "SS1"
//! input = ["VP", "P"]
//! [[alternative.rule]]                    # rules of this alternative only
//! label = "R1"
//! antecedents = ["VP", "P"]
//! consequents = ["auto"]
//! ```

use std::path::Path;

use serde::Deserialize;

use crate::codebook::Codebook;
use crate::error::{Error, Result};
use crate::fixtures;
use crate::pr::{solve_molop, solve_solop, Consequent, Objective, PrOutput, Rule, RuleBase, SolveOptions};
use crate::ranking::{format_ranking, rank_lexicographic, Direction};
use crate::two_tuple::{molop_solve, OrdinalTermSet, TermRule, TwoTuple};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ObjectiveRecord {
    name: String,
    #[serde(default)]
    direction: Direction,
    slots: Option<Vec<usize>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RuleRecord {
    label: Option<String>,
    antecedents: Vec<String>,
    consequents: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct AlternativeRecord {
    name: String,
    input: Vec<String>,
    #[serde(default)]
    rule: Vec<RuleRecord>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct ProblemFile {
    name: String,
    terms: Option<Vec<String>>,
    rank_priority: Option<Vec<String>>,
    objective: Vec<ObjectiveRecord>,
    #[serde(default)]
    rule: Vec<RuleRecord>,
    alternative: Vec<AlternativeRecord>,
}

fn to_rule(rec: RuleRecord, fallback: String) -> Rule {
    Rule {
        label: rec.label.unwrap_or(fallback),
        antecedents: rec.antecedents,
        consequents: rec.consequents.iter().map(|c| Consequent::parse(c)).collect(),
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Alternative {
    pub name: String,
    pub input: Vec<String>,
    pub rule_base: RuleBase,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Problem {
    pub name: String,
    pub terms: Option<Vec<String>>,
    pub objectives: Vec<Objective>,
    /// Objective positions, most significant first.
    pub rank_priority: Vec<usize>,
    pub alternatives: Vec<Alternative>,
}

impl Problem {
    /// Loads a fixture id (`case-solop`, `case-molop`) or a problem file path.
    pub fn load(source: &str) -> Result<Self> {
        match fixtures::problem_source(source) {
            Some(text) => Self::parse(text),
            None if Path::new(source).exists() => Self::parse(&std::fs::read_to_string(source)?),
            None => Err(Error::UnknownFixture(source.to_string())),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: ProblemFile = toml::from_str(text)?;
        let objectives: Vec<Objective> = file
            .objective
            .into_iter()
            .map(|o| Objective {
                name: o.name,
                direction: o.direction,
                slots: o.slots,
            })
            .collect();
        for (i, o) in objectives.iter().enumerate() {
            if objectives[..i].iter().any(|p| p.name == o.name) {
                return Err(Error::Parse(format!("duplicate objective '{}'", o.name)));
            }
        }
        let rank_priority = match file.rank_priority {
            None => (0..objectives.len()).collect(),
            Some(names) => {
                let mut order = Vec::with_capacity(names.len());
                for n in &names {
                    let i = objectives
                        .iter()
                        .position(|o| &o.name == n)
                        .ok_or_else(|| Error::Parse(format!("rank_priority names unknown objective '{n}'")))?;
                    if order.contains(&i) {
                        return Err(Error::Parse(format!("rank_priority repeats '{n}'")));
                    }
                    order.push(i);
                }
                order
            }
        };
        if file.alternative.is_empty() {
            return Err(Error::Parse("a problem needs at least one alternative".into()));
        }
        let shared: Vec<Rule> = file
            .rule
            .into_iter()
            .enumerate()
            .map(|(i, r)| to_rule(r, format!("R{}", i + 1)))
            .collect();
        let mut alternatives = Vec::with_capacity(file.alternative.len());
        for alt in file.alternative {
            if alternatives.iter().any(|a: &Alternative| a.name == alt.name) {
                return Err(Error::Parse(format!("duplicate alternative '{}'", alt.name)));
            }
            let mut rules = shared.clone();
            let offset = rules.len();
            rules.extend(
                alt.rule
                    .into_iter()
                    .enumerate()
                    .map(|(i, r)| to_rule(r, format!("R{}", offset + i + 1))),
            );
            let rule_base = RuleBase::new(rules, objectives.clone())?;
            if alt.input.len() != rule_base.antecedent_count() {
                return Err(Error::Dimension(format!(
                    "alternative '{}' has {} input words but its rules have {} antecedents",
                    alt.name,
                    alt.input.len(),
                    rule_base.antecedent_count()
                )));
            }
            alternatives.push(Alternative {
                name: alt.name,
                input: alt.input,
                rule_base,
            });
        }
        Ok(Problem {
            name: file.name,
            terms: file.terms,
            objectives,
            rank_priority,
            alternatives,
        })
    }

    pub fn directions(&self) -> Vec<Direction> {
        self.rank_priority
            .iter()
            .map(|&k| self.objectives[k].direction)
            .collect()
    }

    /// Term set from the `terms` list, or from `fallback` labels.
    pub fn term_set(&self, fallback: Option<&[String]>) -> Result<OrdinalTermSet> {
        match (&self.terms, fallback) {
            (Some(t), _) => OrdinalTermSet::new(t.iter().cloned()),
            (None, Some(f)) => OrdinalTermSet::new(f.iter().cloned()),
            (None, None) => Err(Error::Parse(format!("problem '{}' declares no terms", self.name))),
        }
    }

    fn rank(&self, keys: &[Vec<Option<f64>>]) -> (Vec<usize>, String) {
        let directions = self.directions();
        let order = rank_lexicographic(keys, &directions);
        let labels: Vec<String> = self.alternatives.iter().map(|a| a.name.clone()).collect();
        let text = format_ranking(&labels, &order, keys, &directions);
        (order, text)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrAlternative {
    pub name: String,
    /// One per objective, in objective order.
    pub outputs: Vec<PrOutput>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PrReport {
    pub alternatives: Vec<PrAlternative>,
    /// Alternative positions, best first.
    pub order: Vec<usize>,
    pub ranking: String,
}

/// Runs perceptual reasoning for every alternative and ranks them by
/// centroid mean, objectives compared in priority order.
pub fn solve_pr(problem: &Problem, cb: &Codebook, opts: SolveOptions) -> Result<PrReport> {
    let mut alternatives = Vec::with_capacity(problem.alternatives.len());
    for alt in &problem.alternatives {
        let outputs = if problem.objectives.len() == 1 {
            vec![solve_solop(&alt.rule_base, &alt.input, cb, opts)?]
        } else {
            solve_molop(&alt.rule_base, &alt.input, cb, opts)?
        };
        alternatives.push(PrAlternative {
            name: alt.name.clone(),
            outputs,
        });
    }
    let keys: Vec<Vec<Option<f64>>> = alternatives
        .iter()
        .map(|a| {
            problem
                .rank_priority
                .iter()
                .map(|&k| Some(a.outputs[k].centroid.mean))
                .collect()
        })
        .collect();
    let (order, ranking) = problem.rank(&keys);
    Ok(PrReport {
        alternatives,
        order,
        ranking,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct TupleAlternative {
    pub name: String,
    /// Product firing level per rule.
    pub firings: Vec<f64>,
    /// One per objective.
    pub tuples: Vec<TwoTuple>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TupleReport {
    pub alternatives: Vec<TupleAlternative>,
    pub order: Vec<usize>,
    pub ranking: String,
}

/// Maps the rules of `alt` to term indices. An `auto` consequent becomes
/// the mean index of the objective's antecedent slots.
pub fn term_rules(alt: &Alternative, objectives: &[Objective], ts: &OrdinalTermSet) -> Result<Vec<TermRule>> {
    alt.rule_base
        .rules()
        .iter()
        .map(|r| {
            let antecedents = r
                .antecedents
                .iter()
                .map(|a| ts.index_of(a))
                .collect::<Result<Vec<_>>>()?;
            let consequents = r
                .consequents
                .iter()
                .zip(objectives)
                .map(|(c, o)| match c {
                    Consequent::Word(w) => ts.index_of(w).map(|i| i as f64),
                    Consequent::Auto => {
                        let slots: Vec<usize> = o.slots.clone().unwrap_or_else(|| (0..antecedents.len()).collect());
                        Ok(slots.iter().map(|&s| antecedents[s] as f64).sum::<f64>() / slots.len() as f64)
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(TermRule {
                antecedents,
                consequents,
            })
        })
        .collect()
}

/// Runs the 2-tuple model for every alternative and ranks them by `β`.
pub fn solve_two_tuple(problem: &Problem, ts: &OrdinalTermSet) -> Result<TupleReport> {
    let mut alternatives = Vec::with_capacity(problem.alternatives.len());
    for alt in &problem.alternatives {
        let rules = term_rules(alt, &problem.objectives, ts)?;
        let tuples = molop_solve(&rules, ts)?;
        alternatives.push(TupleAlternative {
            name: alt.name.clone(),
            firings: rules.iter().map(TermRule::firing).collect(),
            tuples,
        });
    }
    let keys = tuple_keys(problem, &alternatives);
    let (order, ranking) = problem.rank(&keys);
    Ok(TupleReport {
        alternatives,
        order,
        ranking,
    })
}

fn tuple_keys(problem: &Problem, alternatives: &[TupleAlternative]) -> Vec<Vec<Option<f64>>> {
    alternatives
        .iter()
        .map(|a| {
            problem
                .rank_priority
                .iter()
                .map(|&k| Some(a.tuples[k].beta()))
                .collect()
        })
        .collect()
}

/// Ranks externally supplied 2-tuples (one list per alternative, in
/// objective order) with the problem's priorities.
pub fn rank_tuples(problem: &Problem, tuples: Vec<Vec<TwoTuple>>) -> Result<TupleReport> {
    if tuples.len() != problem.alternatives.len() || tuples.iter().any(|t| t.len() != problem.objectives.len()) {
        return Err(Error::Dimension(
            "need one 2-tuple per objective for every alternative".into(),
        ));
    }
    let alternatives: Vec<TupleAlternative> = problem
        .alternatives
        .iter()
        .zip(tuples)
        .map(|(a, t)| TupleAlternative {
            name: a.name.clone(),
            firings: Vec::new(),
            tuples: t,
        })
        .collect();
    let keys = tuple_keys(problem, &alternatives);
    let (order, ranking) = problem.rank(&keys);
    Ok(TupleReport {
        alternatives,
        order,
        ranking,
    })
}
