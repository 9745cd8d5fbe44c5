use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ComplexError;

/// Vertex identifier. Ids are positive and preserved from the input.
pub type Vertex = u32;

/// A simplex given by its strictly increasing vertex list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Face(Vec<Vertex>);

impl Face {
    /// Sorts the vertices and rejects empty faces, zero ids and repeats.
    pub fn new(vertices: impl IntoIterator<Item = Vertex>) -> Result<Self, ComplexError> {
        let mut v: Vec<Vertex> = vertices.into_iter().collect();
        if v.is_empty() {
            return Err(ComplexError::EmptyFace);
        }
        v.sort_unstable();
        if v[0] == 0 {
            return Err(ComplexError::NonPositiveVertex);
        }
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(ComplexError::DuplicateVertex(w[0]));
        }
        Ok(Face(v))
    }

    /// Wraps a vertex list that is already strictly increasing.
    pub(crate) fn from_sorted(v: Vec<Vertex>) -> Self {
        debug_assert!(v.windows(2).all(|w| w[0] < w[1]));
        Face(v)
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Face) -> bool {
        is_sorted_subset(&self.0, &other.0)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl TryFrom<Vec<Vertex>> for Face {
    type Error = ComplexError;

    fn try_from(v: Vec<Vertex>) -> Result<Self, Self::Error> {
        Face::new(v)
    }
}

impl<const N: usize> TryFrom<[Vertex; N]> for Face {
    type Error = ComplexError;

    fn try_from(v: [Vertex; N]) -> Result<Self, Self::Error> {
        Face::new(v)
    }
}

/// Anything that can be validated into a [`Face`].
pub trait IntoFace {
    fn into_face(self) -> Result<Face, ComplexError>;
}

impl IntoFace for Face {
    fn into_face(self) -> Result<Face, ComplexError> {
        Ok(self)
    }
}

impl IntoFace for &Face {
    fn into_face(self) -> Result<Face, ComplexError> {
        Ok(self.clone())
    }
}

impl IntoFace for Vec<Vertex> {
    fn into_face(self) -> Result<Face, ComplexError> {
        Face::new(self)
    }
}

impl IntoFace for &[Vertex] {
    fn into_face(self) -> Result<Face, ComplexError> {
        Face::new(self.iter().copied())
    }
}

impl<const N: usize> IntoFace for [Vertex; N] {
    fn into_face(self) -> Result<Face, ComplexError> {
        Face::new(self)
    }
}

/// `a ⊆ b` for strictly increasing slices.
pub(crate) fn is_sorted_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    if a.len() > b.len() {
        return false;
    }
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn new_sorts_and_validates() {
        assert_eq!(Face::new([3, 1, 2]).unwrap().vertices(), &[1, 2, 3]);
        assert_eq!(Face::new([1, 2, 1]), Err(ComplexError::DuplicateVertex(1)));
        assert_eq!(Face::new([0, 2]), Err(ComplexError::NonPositiveVertex));
        assert_eq!(Face::new([]), Err(ComplexError::EmptyFace));
    }

    #[test]
    fn subset() {
        let a = Face::new([2, 5]).unwrap();
        let b = Face::new([1, 2, 3, 5]).unwrap();
        assert!(a.is_subset_of(&b));
        assert!(!b.is_subset_of(&a));
        assert!(!Face::new([4]).unwrap().is_subset_of(&b));
        assert_eq!(b.to_string(), "{1,2,3,5}");
    }
}
