//! Word vocabularies: person-FOU data-interval sampling, codebook files and
//! the pluggable interval-to-FOU encoder seam.
//!
//! # Codebook file
//!
//! TOML with a header and one `[[word]]` table per word, in vocabulary order:
//!
//! ```toml
//! scale = [0.0, 10.0]
//! encoder = "HMA"            # free-form tag naming the encoder that produced the words
//! generator = "chacha8"      # optional: generator used for the data intervals
//! seed = 7                   # optional
//!
//! [[word]]
//! name = "VP"
//! label = "Very Poor"        # optional
//! umf = [0.0, 0.0, 2.04, 3.84]        # a, b, c, d (height is always 1)
//! lmf = [0.0, 0.0, 2.04, 3.04, 1.0]   # a, b, c, d, h
//! centroid = [1.29, 1.52, 1.41]       # optional: cl, cr, mean
//! ```
//!
//! A stored centroid that differs from the recomputed one by more than
//! [`CENTROID_CHECK_TOLERANCE`] produces a warning, not an error.
//!
//! # Endpoint spec file
//!
//! ```toml
//! scale = [0.0, 10.0]
//! [[word]]
//! name = "VP"
//! left = [0.0, 0.0]
//! right = [2.0, 3.0]
//! ```
//!
//! # Data-interval file
//!
//! ```toml
//! generator = "chacha8"
//! seed = 7                  # word i of the spec file is drawn with seed + i
//! [[set]]
//! word = "VP"
//! pairs = [[0.0, 2.41], [0.0, 2.93]]
//! ```

use std::collections::HashSet;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fixtures;
use crate::fuzzy::{IT2Word, Interval, Trapezoid};
use crate::similarity::{centroid_ekm, Centroid, Discretization, DEFAULT_POINTS};

/// Name recorded in file headers for the sampling generator.
pub const GENERATOR_NAME: &str = "chacha8";

pub const DEFAULT_SAMPLES: usize = 50;

/// Attempts per pair before sampling gives up on drawing `L <= R`.
pub const MAX_RESAMPLE_ATTEMPTS: usize = 1000;

/// Allowed gap between a stored centroid and the recomputed one.
pub const CENTROID_CHECK_TOLERANCE: f64 = 0.05;

#[derive(Debug, Clone, PartialEq)]
pub struct EndpointSpec {
    pub word: String,
    pub left: Interval,
    pub right: Interval,
}

impl EndpointSpec {
    pub fn new(word: impl Into<String>, left: Interval, right: Interval) -> Self {
        EndpointSpec {
            word: word.into(),
            left,
            right,
        }
    }

    pub fn validate(&self, scale: Interval) -> Result<()> {
        let err = |reason: String| Error::Spec {
            word: self.word.clone(),
            reason,
        };
        for (side, iv) in [("left", self.left), ("right", self.right)] {
            if !(iv.lo.is_finite() && iv.hi.is_finite()) || iv.lo > iv.hi {
                return Err(err(format!("{side} interval {iv} is not a valid interval")));
            }
            if !iv.within(&scale, 0.0) {
                return Err(err(format!("{side} interval {iv} leaves the scale {scale}")));
            }
        }
        if self.left.lo > self.right.hi {
            return Err(err(format!(
                "left interval {} lies entirely to the right of right interval {}",
                self.left, self.right
            )));
        }
        Ok(())
    }
}

/// Data intervals `(L, R)` from virtual subjects for one word.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataIntervalSet {
    pub word: String,
    pub pairs: Vec<(f64, f64)>,
}

fn uniform(rng: &mut ChaCha8Rng, iv: Interval) -> f64 {
    iv.lo + iv.width() * rng.gen::<f64>()
}

/// Draws `n` data intervals uniformly from `spec.left × spec.right`.
///
/// A pair with `L > R` is redrawn, up to [`MAX_RESAMPLE_ATTEMPTS`] times.
pub fn sample_person_fou(spec: &EndpointSpec, n: usize, seed: u64) -> Result<DataIntervalSet> {
    if n == 0 {
        return Err(Error::Spec {
            word: spec.word.clone(),
            reason: "sample count must be at least 1".into(),
        });
    }
    if !(spec.left.lo <= spec.left.hi && spec.right.lo <= spec.right.hi) {
        return Err(Error::Spec {
            word: spec.word.clone(),
            reason: "interval bounds are reversed".into(),
        });
    }
    if spec.left.lo > spec.right.hi {
        return Err(Error::Spec {
            word: spec.word.clone(),
            reason: format!(
                "left interval {} lies right of right interval {}",
                spec.left, spec.right
            ),
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs = Vec::with_capacity(n);
    for _ in 0..n {
        let mut accepted = None;
        for _ in 0..MAX_RESAMPLE_ATTEMPTS {
            let l = uniform(&mut rng, spec.left);
            let r = uniform(&mut rng, spec.right);
            if l <= r {
                accepted = Some((l, r));
                break;
            }
        }
        let pair = accepted.ok_or_else(|| Error::SamplingExhausted {
            word: spec.word.clone(),
            attempts: MAX_RESAMPLE_ATTEMPTS,
        })?;
        pairs.push(pair);
    }
    Ok(DataIntervalSet {
        word: spec.word.clone(),
        pairs,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EndpointRecord {
    name: String,
    left: [f64; 2],
    right: [f64; 2],
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EndpointFile {
    scale: [f64; 2],
    word: Vec<EndpointRecord>,
}

/// Parses an endpoint spec file, returning its scale and validated specs.
pub fn parse_endpoint_specs(text: &str) -> Result<(Interval, Vec<EndpointSpec>)> {
    let file: EndpointFile = toml::from_str(text)?;
    let scale = Interval::new(file.scale[0], file.scale[1])?;
    let mut specs = Vec::with_capacity(file.word.len());
    for rec in file.word {
        let bad = |side: &str, e: Error| Error::Spec {
            word: rec.name.clone(),
            reason: format!("{side}: {e}"),
        };
        let left = Interval::new(rec.left[0], rec.left[1]).map_err(|e| bad("left", e))?;
        let right = Interval::new(rec.right[0], rec.right[1]).map_err(|e| bad("right", e))?;
        let spec = EndpointSpec::new(rec.name, left, right);
        spec.validate(scale)?;
        specs.push(spec);
    }
    Ok((scale, specs))
}

/// Loads endpoint specs from a fixture id (`case-endpoints`) or a file path.
pub fn load_endpoint_specs(source: &str) -> Result<(Interval, Vec<EndpointSpec>)> {
    match fixtures::endpoint_source(source) {
        Some(text) => parse_endpoint_specs(text),
        None => parse_endpoint_specs(&std::fs::read_to_string(source)?),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DataIntervalFile {
    pub generator: String,
    pub seed: u64,
    #[serde(rename = "set")]
    pub sets: Vec<DataIntervalSet>,
}

impl DataIntervalFile {
    /// Samples every spec; word `i` uses seed `seed + i`.
    pub fn sample(specs: &[EndpointSpec], n: usize, seed: u64) -> Result<Self> {
        let sets = specs
            .iter()
            .enumerate()
            .map(|(i, spec)| sample_person_fou(spec, n, seed.wrapping_add(i as u64)))
            .collect::<Result<Vec<_>>>()?;
        Ok(DataIntervalFile {
            generator: GENERATOR_NAME.to_string(),
            seed,
            sets,
        })
    }

    pub fn to_toml_string(&self) -> String {
        toml::to_string(self).expect("data intervals serialize")
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: DataIntervalFile = toml::from_str(text)?;
        for set in &file.sets {
            for &(l, r) in &set.pairs {
                if !(l.is_finite() && r.is_finite()) || l > r {
                    return Err(Error::Parse(format!(
                        "data interval ({l}, {r}) for '{}' is not an interval",
                        set.word
                    )));
                }
            }
        }
        Ok(file)
    }
}

/// Turns data intervals into a word model.
pub trait WordEncoder: Send + Sync {
    fn name(&self) -> &str;
    fn encode(&self, data: &DataIntervalSet, scale: Interval) -> Result<IT2Word>;
}

/// Built-in placeholder: interval-to-FOU statistics are not implemented, so
/// this encoder always refuses and points at the shipped codebook fixtures.
#[derive(Debug, Default, Clone, Copy)]
pub struct FixturePassthrough;

impl WordEncoder for FixturePassthrough {
    fn name(&self) -> &str {
        "fixture-passthrough"
    }

    fn encode(&self, data: &DataIntervalSet, _scale: Interval) -> Result<IT2Word> {
        Err(Error::Unsupported(format!(
            "no interval-to-FOU encoder is built in (word '{}'); load the 'paper-hma' or \
             'paper-ia' codebook fixture or register an external encoder",
            data.word
        )))
    }
}

pub struct EncoderRegistry {
    encoders: Vec<Box<dyn WordEncoder>>,
}

impl Default for EncoderRegistry {
    fn default() -> Self {
        EncoderRegistry {
            encoders: vec![Box::new(FixturePassthrough)],
        }
    }
}

impl EncoderRegistry {
    pub fn empty() -> Self {
        EncoderRegistry { encoders: Vec::new() }
    }

    /// Registers `encoder`, replacing any encoder with the same name.
    pub fn register(&mut self, encoder: Box<dyn WordEncoder>) {
        self.encoders.retain(|e| e.name() != encoder.name());
        self.encoders.push(encoder);
    }

    pub fn get(&self, name: &str) -> Option<&dyn WordEncoder> {
        self.encoders.iter().find(|e| e.name() == name).map(|e| e.as_ref())
    }

    pub fn names(&self) -> Vec<&str> {
        self.encoders.iter().map(|e| e.name()).collect()
    }

    pub fn encode(&self, name: &str, data: &DataIntervalSet, scale: Interval) -> Result<IT2Word> {
        let encoder = self
            .get(name)
            .ok_or_else(|| Error::Unsupported(format!("no encoder named '{name}' is registered")))?;
        encode_word(data, encoder, scale)
    }
}

pub fn encode_word(data: &DataIntervalSet, encoder: &dyn WordEncoder, scale: Interval) -> Result<IT2Word> {
    let word = encoder.encode(data, scale)?;
    word.validate()?;
    Ok(word)
}

/// Ordered vocabulary of word models on a fixed scale.
#[derive(Debug, Clone, PartialEq)]
pub struct Codebook {
    scale: Interval,
    words: Vec<IT2Word>,
    encoder_tag: String,
    generator: Option<String>,
    seed: Option<u64>,
    grid: Discretization,
    warnings: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WordRecord {
    name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
    umf: [f64; 4],
    lmf: [f64; 5],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    centroid: Option<[f64; 3]>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CodebookFile {
    scale: [f64; 2],
    encoder: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    generator: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    word: Vec<WordRecord>,
}

impl Codebook {
    /// Builds a codebook on the default 1001-point grid.
    pub fn new(scale: Interval, words: Vec<IT2Word>, encoder_tag: impl Into<String>) -> Result<Self> {
        Self::with_grid(scale, words, encoder_tag, DEFAULT_POINTS)
    }

    /// Validates every word, fills in centroids on a `points`-point grid and
    /// checks that centroid means do not decrease in vocabulary order.
    pub fn with_grid(
        scale: Interval,
        words: Vec<IT2Word>,
        encoder_tag: impl Into<String>,
        points: usize,
    ) -> Result<Self> {
        let grid = Discretization::new(scale, points)?;
        let mut seen = HashSet::new();
        let mut warnings = Vec::new();
        let mut checked = Vec::with_capacity(words.len());
        if words.is_empty() {
            return Err(Error::Parse("a codebook needs at least one word".into()));
        }
        for mut w in words {
            let invalid = |field: &str, reason: String| Error::InvalidWord {
                word: w.name.clone(),
                field: field.into(),
                reason,
            };
            if !seen.insert(w.name.clone()) {
                return Err(invalid("name", "duplicate word name".into()));
            }
            w.validate()?;
            if !w.umf.support().within(&scale, 1e-9) {
                return Err(invalid(
                    "umf",
                    format!("support {} leaves the scale {scale}", w.umf.support()),
                ));
            }
            let computed = centroid_ekm(&w, &grid, &w.name)?;
            if let Some(stored) = w.centroid {
                let gap = [
                    (stored.cl - computed.cl).abs(),
                    (stored.cr - computed.cr).abs(),
                    (stored.mean - computed.mean).abs(),
                ]
                .into_iter()
                .fold(0.0, f64::max);
                if gap > CENTROID_CHECK_TOLERANCE {
                    let msg = format!(
                        "word '{}': stored centroid [{}, {}] mean {} differs from recomputed {} by {gap:.3}",
                        w.name, stored.cl, stored.cr, stored.mean, computed
                    );
                    log::warn!("{msg}");
                    warnings.push(msg);
                }
            }
            w.centroid = Some(computed);
            checked.push(w);
        }
        for pair in checked.windows(2) {
            let (m0, m1) = (pair[0].centroid.unwrap().mean, pair[1].centroid.unwrap().mean);
            if m1 < m0 - 1e-9 {
                return Err(Error::InvalidWord {
                    word: pair[1].name.clone(),
                    field: "centroid".into(),
                    reason: format!(
                        "centroid mean {m1:.4} is below that of the preceding word '{}' ({m0:.4}); \
                         words must be listed in increasing order",
                        pair[0].name
                    ),
                });
            }
        }
        Ok(Codebook {
            scale,
            words: checked,
            encoder_tag: encoder_tag.into(),
            generator: None,
            seed: None,
            grid,
            warnings,
        })
    }

    /// Loads a fixture id (`paper-hma`, `paper-ia`) or a codebook file path.
    pub fn load(source: &str) -> Result<Self> {
        match fixtures::codebook_source(source) {
            Some(text) => Self::parse(text),
            None if Path::new(source).exists() => Self::parse(&std::fs::read_to_string(source)?),
            None => Err(Error::UnknownFixture(source.to_string())),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::parse_with_grid(text, DEFAULT_POINTS)
    }

    pub fn parse_with_grid(text: &str, points: usize) -> Result<Self> {
        let file: CodebookFile = toml::from_str(text)?;
        let scale = Interval::new(file.scale[0], file.scale[1])?;
        let mut words = Vec::with_capacity(file.word.len());
        for rec in file.word {
            let invalid = |field: &str, e: Error| Error::InvalidWord {
                word: rec.name.clone(),
                field: field.into(),
                reason: e.to_string(),
            };
            let [a, b, c, d] = rec.umf;
            let umf = Trapezoid::normal(a, b, c, d).map_err(|e| invalid("umf", e))?;
            let [a, b, c, d, h] = rec.lmf;
            let lmf = Trapezoid::new(a, b, c, d, h).map_err(|e| invalid("lmf", e))?;
            let mut w = IT2Word::new(rec.name.clone(), umf, lmf)?;
            w.label = rec.label;
            w.centroid = rec.centroid.map(|[cl, cr, mean]| Centroid { cl, cr, mean });
            words.push(w);
        }
        let mut cb = Self::with_grid(scale, words, file.encoder, points)?;
        cb.generator = file.generator;
        cb.seed = file.seed;
        Ok(cb)
    }

    pub fn to_toml_string(&self) -> String {
        let file = CodebookFile {
            scale: [self.scale.lo, self.scale.hi],
            encoder: self.encoder_tag.clone(),
            generator: self.generator.clone(),
            seed: self.seed,
            word: self
                .words
                .iter()
                .map(|w| WordRecord {
                    name: w.name.clone(),
                    label: w.label.clone(),
                    umf: w.umf.vertices(),
                    lmf: [w.lmf.a, w.lmf.b, w.lmf.c, w.lmf.d, w.lmf.h],
                    centroid: w.centroid.map(|c| [c.cl, c.cr, c.mean]),
                })
                .collect(),
        };
        toml::to_string(&file).expect("codebook serializes")
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_toml_string())?;
        Ok(())
    }

    pub fn with_provenance(mut self, generator: impl Into<String>, seed: u64) -> Self {
        self.generator = Some(generator.into());
        self.seed = Some(seed);
        self
    }

    pub fn scale(&self) -> Interval {
        self.scale
    }

    pub fn words(&self) -> &[IT2Word] {
        &self.words
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn encoder_tag(&self) -> &str {
        &self.encoder_tag
    }

    pub fn generator(&self) -> Option<&str> {
        self.generator.as_deref()
    }

    pub fn seed(&self) -> Option<u64> {
        self.seed
    }

    pub fn grid(&self) -> &Discretization {
        &self.grid
    }

    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// Position of a word, matched by name or (case-insensitively) by label.
    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.words
            .iter()
            .position(|w| w.name == name)
            .or_else(|| {
                self.words
                    .iter()
                    .position(|w| w.label.as_deref().is_some_and(|l| l.eq_ignore_ascii_case(name)))
            })
            .ok_or_else(|| Error::UnknownWord(name.to_string()))
    }

    pub fn get(&self, name: &str) -> Result<&IT2Word> {
        self.index_of(name).map(|i| &self.words[i])
    }

    pub fn centroid(&self, name: &str) -> Result<Centroid> {
        Ok(self.get(name)?.centroid.expect("codebook words carry centroids"))
    }
}
