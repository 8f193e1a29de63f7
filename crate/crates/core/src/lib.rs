//! Perceptual reasoning for linguistic optimization problems.
//!
//! Words are modelled as interval type-2 fuzzy sets stored in a [`Codebook`].
//! Rules link word-valued decision variables to word-valued objectives; the
//! [`pr`] engine fires rules by Jaccard similarity, aggregates consequents
//! with the linguistic weighted average, and decodes the result back into the
//! codebook. Two baselines are included for comparison: the 2-tuple
//! linguistic model ([`two_tuple`]) and Tsukamoto inference ([`tsukamoto`]).

pub mod codebook;
pub mod error;
pub mod export;
pub mod fixtures;
pub mod fuzzy;
pub mod pr;
pub mod problem;
pub mod ranking;
pub mod similarity;
pub mod tsukamoto;
pub mod two_tuple;

pub use codebook::{Codebook, DataIntervalSet, EndpointSpec};
pub use error::{Error, Result};
pub use fuzzy::{alpha_cut, classify_fou, membership_envelope, Footprint, FouShape, IT2Word, Interval, Trapezoid};
pub use pr::{
    decode, fire, lwa, solve_molop, solve_solop, synthesize_consequent, AlphaFou, FiringLevel, PrOutput, Rule, RuleBase,
};
pub use ranking::Direction;
pub use similarity::{centroid_ekm, jaccard, rank_by_centroid, Centroid, Discretization};
pub use two_tuple::{OrdinalTermSet, TwoTuple};
