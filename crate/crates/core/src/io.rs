//! Plain-text facet files: one face per line, whitespace-separated positive
//! integers, `#` starts a comment, blank lines are ignored.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use crate::complex::SimplicialComplex;
use crate::error::{ComplexError, ParseError};
use crate::face::{Face, Vertex};

pub fn parse_facets(text: &str) -> Result<Vec<Face>, ParseError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let err = |message: String| ParseError { line: n + 1, message };
        let verts = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<Vertex>()
                    .map_err(|_| err(format!("`{tok}` is not a positive integer")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        let face = Face::new(verts).map_err(|e| err(e.to_string()))?;
        out.push(face);
    }
    if out.is_empty() {
        return Err(ParseError { line: 0, message: ComplexError::EmptyInput.to_string() });
    }
    Ok(out)
}

pub fn parse_complex(text: &str) -> Result<SimplicialComplex, ParseError> {
    let facets = parse_facets(text)?;
    SimplicialComplex::from_facets(facets).map_err(|e| ParseError { line: 0, message: e.to_string() })
}

#[derive(Debug, thiserror::Error)]
pub enum ReadError {
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{path}: {source}")]
    Parse { path: String, source: ParseError },
}

pub fn read_complex(path: impl AsRef<Path>) -> Result<SimplicialComplex, ReadError> {
    let path = path.as_ref();
    let name = path.display().to_string();
    let text = fs::read_to_string(path).map_err(|source| ReadError::Io { path: name.clone(), source })?;
    parse_complex(&text).map_err(|source| ReadError::Parse { path: name, source })
}

/// Maximal faces in canonical (lexicographic) order, preceded by an
/// f-vector comment.
pub fn format_facets(k: &SimplicialComplex) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "# f = {}", k.f_vector());
    for f in k.facets() {
        let mut first = true;
        for v in f.vertices() {
            if !first {
                s.push(' ');
            }
            first = false;
            let _ = write!(s, "{v}");
        }
        s.push('\n');
    }
    s
}

pub fn write_complex(k: &SimplicialComplex, path: impl AsRef<Path>) -> std::io::Result<()> {
    fs::write(path, format_facets(k))
}
