//! Independent checks: integer homology, Morse inequalities and exhaustive
//! collapsibility / non-evasiveness search.

mod homology;
mod search;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::morse::MorseVector;

pub use homology::{
    betti_numbers, betti_numbers_mod_p, boundary_matrix, dense_smith, rank_mod_p, smith_normal_form, BettiVector,
    HomologyError, SparseMatrix, DEFAULT_PRIME, DEFAULT_SIZE_LIMIT,
};
pub use search::{exhaustive_collapsible, exhaustive_nonevasive, Decision};

/// A necessary condition on discrete Morse vectors that fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum MorseViolation {
    /// The vector has entries beyond the dimension of the complex.
    Length { vector: usize, dim: usize },
    /// `Σ (-1)^i c_i` differs from the Euler characteristic.
    EulerCharacteristic { alternating_sum: i64, euler: i64 },
    /// `c_i < b_i`.
    WeakInequality { dim: usize, critical: u64, betti: u64 },
}

impl fmt::Display for MorseViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MorseViolation::Length { vector, dim } => write!(f, "vector has {vector} entries for a {dim}-complex"),
            MorseViolation::EulerCharacteristic { alternating_sum, euler } => {
                write!(f, "alternating sum {alternating_sum} differs from Euler characteristic {euler}")
            }
            MorseViolation::WeakInequality { dim, critical, betti } => {
                write!(f, "c_{dim} = {critical} is below b_{dim} = {betti}")
            }
        }
    }
}

/// Result of [`check_morse_consistency`]. Passing only means the necessary
/// conditions hold; it does not certify that some Morse function realizes
/// the vector.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MorseConsistency {
    pub euler_characteristic: i64,
    pub alternating_sum: i64,
    pub betti: Option<Vec<u64>>,
    pub violations: Vec<MorseViolation>,
    /// The vector equals the Betti vector. Such a vector passes every check
    /// here while its realizability stays unknown.
    pub perfect: bool,
}

impl MorseConsistency {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `Σ (-1)^i c_i = χ(K)` and, when Betti numbers are given,
/// the weak Morse inequalities `c_i ≥ b_i`.
pub fn check_morse_consistency(k: &SimplicialComplex, v: &MorseVector, betti: Option<&[u64]>) -> MorseConsistency {
    let chi = k.euler_characteristic();
    let alt = v.alternating_sum();
    let mut violations = Vec::new();
    let dim_len = if k.is_empty() { 0 } else { k.dim() + 1 };
    if v.0.len() > dim_len && v.0[dim_len..].iter().any(|&c| c > 0) {
        violations.push(MorseViolation::Length { vector: v.0.len(), dim: k.dim() });
    }
    if alt != chi {
        violations.push(MorseViolation::EulerCharacteristic { alternating_sum: alt, euler: chi });
    }
    let mut perfect = false;
    if let Some(b) = betti {
        for (i, &bi) in b.iter().enumerate() {
            let ci = v.0.get(i).copied().unwrap_or(0);
            if ci < bi {
                violations.push(MorseViolation::WeakInequality { dim: i, critical: ci, betti: bi });
            }
        }
        perfect = (0..b.len().max(v.0.len())).all(|i| v.0.get(i).copied().unwrap_or(0) == b.get(i).copied().unwrap_or(0));
    }
    MorseConsistency { euler_characteristic: chi, alternating_sum: alt, betti: betti.map(<[u64]>::to_vec), violations, perfect }
}
