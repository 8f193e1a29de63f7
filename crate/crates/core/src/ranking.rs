use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Two keys closer than this are a tie.
pub const TIE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    #[default]
    Max,
    Min,
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "max" => Ok(Direction::Max),
            "min" => Ok(Direction::Min),
            other => Err(Error::Parse(format!("unknown direction '{other}'"))),
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Max => "max",
            Direction::Min => "min",
        })
    }
}

/// `Less` when `a` ranks ahead of `b`.
fn compare_keys(a: &[Option<f64>], b: &[Option<f64>], directions: &[Direction]) -> Ordering {
    for (k, dir) in directions.iter().enumerate() {
        let (Some(Some(x)), Some(Some(y))) = (a.get(k), b.get(k)) else {
            // a missing key cannot break the tie
            continue;
        };
        if (x - y).abs() <= TIE_TOLERANCE {
            continue;
        }
        let ord = x.total_cmp(y);
        return match dir {
            Direction::Max => ord.reverse(),
            Direction::Min => ord,
        };
    }
    Ordering::Equal
}

/// Stable lexicographic ranking. Returns item indices best-first.
///
/// Insertion sort: the tolerance-based comparison is not transitive, which
/// the std sorts are allowed to reject, and rankings here are short.
pub fn rank_lexicographic(keys: &[Vec<Option<f64>>], directions: &[Direction]) -> Vec<usize> {
    let mut order: Vec<usize> = Vec::with_capacity(keys.len());
    for i in 0..keys.len() {
        let pos = order
            .iter()
            .position(|&j| compare_keys(&keys[i], &keys[j], directions) == Ordering::Less)
            .unwrap_or(order.len());
        order.insert(pos, i);
    }
    order
}

/// `"SS2 > SS3 > SS4 > SS1"`, using `=` between items that tie on every key.
pub fn format_ranking(
    labels: &[String],
    order: &[usize],
    keys: &[Vec<Option<f64>>],
    directions: &[Direction],
) -> String {
    let mut out = String::new();
    for (pos, &i) in order.iter().enumerate() {
        if pos > 0 {
            let prev = order[pos - 1];
            let sep = if compare_keys(&keys[prev], &keys[i], directions) == Ordering::Equal {
                " = "
            } else {
                " > "
            };
            out.push_str(sep);
        }
        out.push_str(&labels[i]);
    }
    out
}
