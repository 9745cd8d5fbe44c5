//! Randomized level-wise discrete Morse deconstructions.
//!
//! A run repeatedly removes faces from the top dimension down. At top
//! dimension `k` it collapses a free `(k-1)`-face with its unique coface
//! whenever one exists, and otherwise removes a `k`-face as critical. The
//! sequence of removals is a [`MorseTrace`]; reading it backwards gives a
//! monotone discrete Morse function.

mod check;
mod engine;
mod spectrum;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::complex::{FaceId, SimplicialComplex};
use crate::face::{Face, Vertex};

pub use check::{check_monotone_trace, AxiomViolation};
pub use engine::{run_strategy, MorseEngine, Scratch};
pub use spectrum::{
    child_seed, estimate_sd_f_vector, sd_growth_experiment, spectrum, spectrum_with_engine, GrowthLevel, GrowthReport,
    HistogramEntry, SpectrumError, SpectrumReport,
};

/// Choice rule for free and critical faces.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    /// Uniform among eligible faces.
    Random,
    /// Lexicographically smallest eligible face after a random relabeling.
    RandomLexFirst,
    /// Lexicographically largest eligible face after a random relabeling.
    RandomLexLast,
}

impl Strategy {
    pub const ALL: [Strategy; 3] = [Strategy::Random, Strategy::RandomLexFirst, Strategy::RandomLexLast];

    pub fn as_str(self) -> &'static str {
        match self {
            Strategy::Random => "random",
            Strategy::RandomLexFirst => "random-lex-first",
            Strategy::RandomLexLast => "random-lex-last",
        }
    }

    pub fn is_lex(self) -> bool {
        self != Strategy::Random
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown strategy {0:?}; expected random, random-lex-first or random-lex-last")]
pub struct UnknownStrategy(pub String);

impl FromStr for Strategy {
    type Err = UnknownStrategy;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Strategy::ALL.into_iter().find(|x| x.as_str() == s).ok_or_else(|| UnknownStrategy(s.to_string()))
    }
}

/// Critical face counts per dimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MorseVector(pub Vec<u64>);

impl MorseVector {
    /// Total number of critical faces.
    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }

    /// Alternating sum `c_0 - c_1 + c_2 - …`.
    pub fn alternating_sum(&self) -> i64 {
        self.0.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) }).sum()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

impl fmt::Display for MorseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

impl<const N: usize> PartialEq<[u64; N]> for MorseVector {
    fn eq(&self, other: &[u64; N]) -> bool {
        self.0 == other
    }
}

/// One removal step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MorseEvent {
    /// Elementary collapse of `free` with its unique coface.
    Collapse { free: FaceId, coface: FaceId },
    /// Removal of a single critical face.
    Critical(FaceId),
}

/// A removal step with explicit faces.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum FaceEvent {
    Collapse { free: Face, coface: Face },
    Critical { face: Face },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("trace references face {0} which is not in the complex")]
    UnknownFace(Face),
    #[error("trace references face id {0:?} which is out of range")]
    UnknownFaceId(FaceId),
}

/// Ordered removal steps of one run, with what is needed to replay it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorseTrace {
    pub events: Vec<MorseEvent>,
    pub seed: u64,
    pub strategy: Strategy,
    /// For lex strategies, the new label of each vertex in the order of
    /// `SimplicialComplex::vertices`; empty for `random`.
    pub relabeling: Vec<Vertex>,
}

impl MorseTrace {
    /// Builds a trace from explicit faces, failing on faces not in `k`.
    pub fn from_faces(
        k: &SimplicialComplex,
        events: &[FaceEvent],
        seed: u64,
        strategy: Strategy,
    ) -> Result<Self, TraceError> {
        let id = |f: &Face| k.find(f.vertices()).ok_or_else(|| TraceError::UnknownFace(f.clone()));
        let events = events
            .iter()
            .map(|e| {
                Ok(match e {
                    FaceEvent::Collapse { free, coface } => MorseEvent::Collapse { free: id(free)?, coface: id(coface)? },
                    FaceEvent::Critical { face } => MorseEvent::Critical(id(face)?),
                })
            })
            .collect::<Result<_, TraceError>>()?;
        Ok(MorseTrace { events, seed, strategy, relabeling: Vec::new() })
    }

    /// The events with explicit faces.
    pub fn resolve(&self, k: &SimplicialComplex) -> Result<Vec<FaceEvent>, TraceError> {
        let face = |id: FaceId| {
            if (id.dim as usize) <= k.dim() && (id.index as usize) < k.num_faces(id.dim as usize) && !k.is_empty() {
                Ok(k.face_owned(id))
            } else {
                Err(TraceError::UnknownFaceId(id))
            }
        };
        self.events
            .iter()
            .map(|e| {
                Ok(match *e {
                    MorseEvent::Collapse { free, coface } => FaceEvent::Collapse { free: face(free)?, coface: face(coface)? },
                    MorseEvent::Critical(f) => FaceEvent::Critical { face: face(f)? },
                })
            })
            .collect()
    }

    /// Critical face counts recorded in the trace.
    pub fn morse_vector(&self, dim: usize) -> MorseVector {
        let mut c = vec![0; dim + 1];
        for e in &self.events {
            if let MorseEvent::Critical(f) = e {
                c[f.dim as usize] += 1;
            }
        }
        MorseVector(c)
    }
}
