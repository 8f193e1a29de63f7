//! Plot-ready vertex files.
//!
//! One comma-separated row per polygon: `name,curve,x1,mu1,x2,mu2,...` with
//! `curve` either `UMF` or `LMF` and vertices in plotting order. Numbers use
//! four decimals. Lines starting with `#` are comments.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fuzzy::{Footprint, IT2Word, Trapezoid};
use crate::pr::AlphaFou;

/// Endpoint curves straighter than this are written as trapezoids.
const TRAPEZOID_TOLERANCE: f64 = 1e-9;

pub const HEADER: &str = "# name,curve,x1,mu1,x2,mu2,...";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Curve {
    Umf,
    Lmf,
}

impl fmt::Display for Curve {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Curve::Umf => "UMF",
            Curve::Lmf => "LMF",
        })
    }
}

impl FromStr for Curve {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "UMF" => Ok(Curve::Umf),
            "LMF" => Ok(Curve::Lmf),
            other => Err(Error::Parse(format!("unknown curve '{other}', expected UMF or LMF"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VertexRow {
    pub name: String,
    pub curve: Curve,
    pub points: Vec<(f64, f64)>,
}

fn trapezoid_points(t: &Trapezoid) -> Vec<(f64, f64)> {
    vec![(t.a, 0.0), (t.b, t.h), (t.c, t.h), (t.d, 0.0)]
}

/// The UMF and LMF polygons of a word.
pub fn word_rows(w: &IT2Word) -> [VertexRow; 2] {
    [
        VertexRow {
            name: w.name.clone(),
            curve: Curve::Umf,
            points: trapezoid_points(&w.umf),
        },
        VertexRow {
            name: w.name.clone(),
            curve: Curve::Lmf,
            points: trapezoid_points(&w.lmf),
        },
    ]
}

/// Polygon traced up the left endpoint curve and down the right one.
fn curve_points(left: &[f64], right: &[f64], top: f64) -> Vec<(f64, f64)> {
    let n = left.len();
    let alpha = |k: usize| top * k as f64 / (n - 1) as f64;
    let mut pts: Vec<(f64, f64)> = (0..n).map(|k| (left[k], alpha(k))).collect();
    pts.extend((0..n).rev().map(|k| (right[k], alpha(k))));
    pts
}

/// The UMF and LMF polygons of an inference output: four vertices when the
/// output is trapezoidal, the dense endpoint curves otherwise.
pub fn fou_rows(name: &str, fou: &AlphaFou) -> [VertexRow; 2] {
    if fou.is_trapezoidal(TRAPEZOID_TOLERANCE) {
        return word_rows(&fou.to_word(name));
    }
    [
        VertexRow {
            name: name.to_string(),
            curve: Curve::Umf,
            points: curve_points(&fou.umf_left, &fou.umf_right, 1.0),
        },
        VertexRow {
            name: name.to_string(),
            curve: Curve::Lmf,
            points: curve_points(&fou.lmf_left, &fou.lmf_right, fou.lmf_height()),
        },
    ]
}

/// Formats rows with a comment header.
pub fn write_rows(rows: &[VertexRow]) -> Result<String> {
    let mut w = csv::WriterBuilder::new()
        .flexible(true)
        .has_headers(false)
        .from_writer(Vec::new());
    for r in rows {
        let mut rec = vec![r.name.clone(), r.curve.to_string()];
        for (x, mu) in &r.points {
            rec.push(format!("{x:.4}"));
            rec.push(format!("{mu:.4}"));
        }
        w.write_record(&rec).map_err(|e| Error::Io(e.to_string()))?;
    }
    let body = w.into_inner().map_err(|e| Error::Io(e.to_string()))?;
    let body = String::from_utf8(body).map_err(|e| Error::Io(e.to_string()))?;
    Ok(format!("{HEADER}\n{body}"))
}

pub fn parse_rows(text: &str) -> Result<Vec<VertexRow>> {
    let mut reader = csv::ReaderBuilder::new()
        .flexible(true)
        .has_headers(false)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (line, rec) in reader.records().enumerate() {
        let rec = rec.map_err(|e| Error::Parse(format!("vertex record {}: {e}", line + 1)))?;
        if rec.len() < 4 || rec.len() % 2 != 0 {
            return Err(Error::Parse(format!(
                "vertex record {} needs a name, a curve and (x, mu) pairs, got {} fields",
                line + 1,
                rec.len()
            )));
        }
        let curve: Curve = rec[1].parse()?;
        let nums = rec
            .iter()
            .skip(2)
            .map(|f| {
                f.parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| Error::Parse(format!("vertex record {}: bad number '{f}'", line + 1)))
            })
            .collect::<Result<Vec<f64>>>()?;
        let points = nums.chunks(2).map(|c| (c[0], c[1])).collect();
        rows.push(VertexRow {
            name: rec[0].to_string(),
            curve,
            points,
        });
    }
    Ok(rows)
}

fn row_trapezoid(row: &VertexRow) -> Result<Trapezoid> {
    let bad = |reason: &str| Error::InvalidWord {
        word: row.name.clone(),
        field: row.curve.to_string(),
        reason: reason.to_string(),
    };
    let [(a, z0), (b, h1), (c, h2), (d, z1)] = row.points[..] else {
        return Err(bad("a trapezoid needs exactly four vertices"));
    };
    if z0 != 0.0 || z1 != 0.0 || h1 != h2 {
        return Err(bad("vertices must be (a, 0), (b, h), (c, h), (d, 0)"));
    }
    Trapezoid::new(a, b, c, d, h1).map_err(|e| bad(&e.to_string()))
}

/// Rebuilds words from consecutive UMF/LMF row pairs.
pub fn words_from_rows(rows: &[VertexRow]) -> Result<Vec<IT2Word>> {
    if !rows.len().is_multiple_of(2) {
        return Err(Error::Parse("vertex rows must come in UMF/LMF pairs".into()));
    }
    rows.chunks(2)
        .map(|pair| {
            let (u, l) = (&pair[0], &pair[1]);
            if u.curve != Curve::Umf || l.curve != Curve::Lmf || u.name != l.name {
                return Err(Error::Parse(format!("expected UMF then LMF rows for '{}'", u.name)));
            }
            let umf = row_trapezoid(u)?;
            if umf.h != 1.0 {
                return Err(Error::InvalidWord {
                    word: u.name.clone(),
                    field: "UMF".into(),
                    reason: format!("UMF height must be 1, got {}", umf.h),
                });
            }
            IT2Word::new(u.name.clone(), umf, row_trapezoid(l)?)
        })
        .collect()
}
