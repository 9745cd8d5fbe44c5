//! Simplicial complexes, elementary collapses and randomized discrete Morse
//! deconstructions.
//!
//! * [`complex`] stores complexes face-by-face with cofacet incidences.
//! * [`constructions`] builds standard and extremal complexes and the
//!   subdivision, product and suspension operators.
//! * [`morse`] runs the level-wise `random`, `random-lex-first` and
//!   `random-lex-last` strategies, collects spectra and checks traces.
//! * [`verify`] holds independent oracles: integer homology, Morse
//!   inequalities and exhaustive collapsibility / non-evasiveness search.

pub mod complex;
pub mod constructions;
pub mod error;
pub mod face;
pub mod io;
pub mod morse;
pub mod verify;

pub use complex::{FVector, FaceId, SimplicialComplex, VertexMap};
pub use error::{ComplexError, ParseError};
pub use face::{Face, IntoFace, Vertex};
