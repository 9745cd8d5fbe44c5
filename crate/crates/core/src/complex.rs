//! Abstract simplicial complexes stored face-by-face.
//!
//! Every face of every dimension is stored explicitly, lexicographically
//! sorted within its dimension. Each face knows its facets (the faces obtained
//! by dropping one vertex, in vertex order) and its cofacets (the faces one
//! dimension up that contain it). Both lookups are O(1), which is what the
//! collapse engine needs.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::ComplexError;
use crate::face::{is_sorted_subset, Face, IntoFace, Vertex};

/// Position of a face inside a complex: its dimension and its rank in the
/// lexicographic order of that dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FaceId {
    pub dim: u32,
    pub index: u32,
}

impl FaceId {
    pub fn new(dim: usize, index: usize) -> Self {
        FaceId { dim: dim as u32, index: index as u32 }
    }
}

/// Face counts per dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    pub fn euler_characteristic(&self) -> i64 {
        self.0
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }

    pub fn total(&self) -> u64 {
        self.0.iter().sum()
    }
}

impl PartialEq<[u64]> for FVector {
    fn eq(&self, other: &[u64]) -> bool {
        self.0 == other
    }
}

impl<const N: usize> PartialEq<[u64; N]> for FVector {
    fn eq(&self, other: &[u64; N]) -> bool {
        self.0 == other
    }
}

impl fmt::Display for FVector {
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

/// A total map on vertex ids, used for relabelings and quotients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct VertexMap(BTreeMap<Vertex, Vertex>);

impl VertexMap {
    pub fn new() -> Self {
        Self::default()
    }

    /// The identity on the vertices of `k`.
    pub fn identity(k: &SimplicialComplex) -> Self {
        VertexMap(k.vertices().iter().map(|&v| (v, v)).collect())
    }

    pub fn insert(&mut self, from: Vertex, to: Vertex) -> &mut Self {
        self.0.insert(from, to);
        self
    }

    pub fn get(&self, v: Vertex) -> Option<Vertex> {
        self.0.get(&v).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.0.iter().map(|(&a, &b)| (a, b))
    }

    pub fn is_injective(&self) -> bool {
        let image: BTreeSet<_> = self.0.values().collect();
        image.len() == self.0.len()
    }
}

impl FromIterator<(Vertex, Vertex)> for VertexMap {
    fn from_iter<T: IntoIterator<Item = (Vertex, Vertex)>>(iter: T) -> Self {
        VertexMap(iter.into_iter().collect())
    }
}

#[derive(Clone, Debug, Default)]
struct Level {
    arity: usize,
    verts: Vec<Vertex>,
    /// `arity` entries per face: index (one level down) of the face missing vertex `i`.
    boundary: Vec<u32>,
    co_offsets: Vec<u32>,
    cofaces: Vec<u32>,
}

impl Level {
    fn len(&self) -> usize {
        self.verts.len() / self.arity
    }

    fn face(&self, i: usize) -> &[Vertex] {
        &self.verts[i * self.arity..(i + 1) * self.arity]
    }

    fn find(&self, face: &[Vertex]) -> Option<usize> {
        let (mut lo, mut hi) = (0usize, self.len());
        while lo < hi {
            let mid = (lo + hi) / 2;
            match self.face(mid).cmp(face) {
                std::cmp::Ordering::Less => lo = mid + 1,
                std::cmp::Ordering::Greater => hi = mid,
                std::cmp::Ordering::Equal => return Some(mid),
            }
        }
        None
    }
}

/// A finite abstract simplicial complex.
///
/// Immutable once built; every transformation returns a new complex.
#[derive(Clone, Debug, Default)]
pub struct SimplicialComplex {
    levels: Vec<Level>,
}

impl PartialEq for SimplicialComplex {
    fn eq(&self, other: &Self) -> bool {
        self.levels.len() == other.levels.len()
            && self.levels.iter().zip(&other.levels).all(|(a, b)| a.verts == b.verts)
    }
}

impl Eq for SimplicialComplex {}

impl SimplicialComplex {
    /// The void complex (no faces at all). Arises as the link of a facet or
    /// the deletion of the only vertex.
    pub fn empty() -> Self {
        SimplicialComplex { levels: Vec::new() }
    }

    /// Downward closure of `facets`. Faces contained in other input faces are
    /// absorbed.
    pub fn from_facets<I>(facets: I) -> Result<Self, ComplexError>
    where
        I: IntoIterator,
        I::Item: IntoFace,
    {
        let mut raw: Vec<Vec<Vertex>> = Vec::new();
        let mut any = false;
        for f in facets {
            let f = f.into_face()?;
            let k = f.dim();
            if raw.len() <= k {
                raw.resize(k + 1, Vec::new());
            }
            raw[k].extend_from_slice(f.vertices());
            any = true;
        }
        if !any {
            return Err(ComplexError::EmptyInput);
        }
        Ok(Self::from_raw_levels(raw))
    }

    /// Like [`from_facets`](Self::from_facets) for vertex lists that are
    /// already strictly increasing and positive. An empty input gives the
    /// void complex.
    pub(crate) fn from_sorted_facets<I, S>(facets: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[Vertex]>,
    {
        let mut raw: Vec<Vec<Vertex>> = Vec::new();
        for f in facets {
            let f = f.as_ref();
            debug_assert!(!f.is_empty() && f[0] > 0 && f.windows(2).all(|w| w[0] < w[1]));
            let k = f.len() - 1;
            if raw.len() <= k {
                raw.resize(k + 1, Vec::new());
            }
            raw[k].extend_from_slice(f);
        }
        Self::from_raw_levels(raw)
    }

    /// `raw[k]` holds flat, possibly repeated, sorted k-faces.
    fn from_raw_levels(mut raw: Vec<Vec<Vertex>>) -> Self {
        while raw.last().is_some_and(|l| l.is_empty()) {
            raw.pop();
        }
        if raw.is_empty() {
            return Self::empty();
        }
        let top = raw.len() - 1;
        for k in (1..=top).rev() {
            let arity = k + 1;
            sort_dedup(&mut raw[k], arity);
            let mut lower = std::mem::take(&mut raw[k - 1]);
            lower.reserve(raw[k].len());
            for face in raw[k].chunks_exact(arity) {
                for skip in 0..arity {
                    lower.extend(face.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v));
                }
            }
            raw[k - 1] = lower;
        }
        sort_dedup(&mut raw[0], 1);

        let mut levels: Vec<Level> = raw
            .into_iter()
            .enumerate()
            .map(|(k, verts)| Level { arity: k + 1, verts, ..Level::default() })
            .collect();

        let mut scratch = Vec::with_capacity(top + 1);
        for k in 1..=top {
            let (below, here) = levels.split_at_mut(k);
            let lower = &below[k - 1];
            let level = &mut here[0];
            let arity = level.arity;
            let mut boundary = Vec::with_capacity(level.verts.len());
            for face in level.verts.chunks_exact(arity) {
                for skip in 0..arity {
                    scratch.clear();
                    scratch.extend(face.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v));
                    let idx = lower.find(&scratch).expect("closure contains every boundary face");
                    boundary.push(idx as u32);
                }
            }
            level.boundary = boundary;
        }
        for k in 0..top {
            let (below, above) = levels.split_at_mut(k + 1);
            let level = &mut below[k];
            let upper = &above[0];
            let n = level.len();
            let mut offsets = vec![0u32; n + 1];
            for &b in &upper.boundary {
                offsets[b as usize + 1] += 1;
            }
            for i in 0..n {
                offsets[i + 1] += offsets[i];
            }
            let mut fill = offsets.clone();
            let mut cofaces = vec![0u32; upper.boundary.len()];
            for (t, chunk) in upper.boundary.chunks_exact(upper.arity).enumerate() {
                for &b in chunk {
                    let slot = &mut fill[b as usize];
                    cofaces[*slot as usize] = t as u32;
                    *slot += 1;
                }
            }
            level.co_offsets = offsets;
            level.cofaces = cofaces;
        }
        let last = &mut levels[top];
        last.co_offsets = vec![0; last.len() + 1];
        SimplicialComplex { levels }
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    /// Top dimension; 0 for the void complex.
    pub fn dim(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    pub fn f_vector(&self) -> FVector {
        FVector(self.levels.iter().map(|l| l.len() as u64).collect())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().euler_characteristic()
    }

    pub fn num_faces(&self, dim: usize) -> usize {
        self.levels.get(dim).map_or(0, Level::len)
    }

    pub fn total_faces(&self) -> usize {
        self.levels.iter().map(Level::len).sum()
    }

    /// Number of edges of the Hasse diagram (cover relations between nonempty faces).
    pub fn hasse_edges(&self) -> usize {
        self.levels.iter().skip(1).map(|l| l.boundary.len()).sum()
    }

    /// Sorted vertex ids.
    pub fn vertices(&self) -> &[Vertex] {
        self.levels.first().map_or(&[], |l| &l.verts)
    }

    pub fn max_vertex(&self) -> Vertex {
        self.vertices().last().copied().unwrap_or(0)
    }

    pub fn has_vertex(&self, v: Vertex) -> bool {
        self.vertices().binary_search(&v).is_ok()
    }

    pub fn face(&self, id: FaceId) -> &[Vertex] {
        self.levels[id.dim as usize].face(id.index as usize)
    }

    pub fn face_owned(&self, id: FaceId) -> Face {
        Face::from_sorted(self.face(id).to_vec())
    }

    /// Faces of dimension `dim` in lexicographic order.
    pub fn faces(&self, dim: usize) -> impl ExactSizeIterator<Item = &[Vertex]> + '_ {
        let level = self.levels.get(dim);
        let arity = dim + 1;
        level.map_or(&[][..], |l| &l.verts[..]).chunks_exact(arity)
    }

    /// Ids of all faces, by dimension then lexicographically.
    pub fn face_ids(&self) -> impl Iterator<Item = FaceId> + '_ {
        self.levels
            .iter()
            .enumerate()
            .flat_map(|(k, l)| (0..l.len()).map(move |i| FaceId::new(k, i)))
    }

    /// Indices (in dimension `dim - 1`) of the facets of a face; entry `i`
    /// omits the face's `i`-th vertex. Empty for vertices.
    pub fn boundary(&self, id: FaceId) -> &[u32] {
        let level = &self.levels[id.dim as usize];
        if id.dim == 0 {
            return &[];
        }
        let i = id.index as usize;
        &level.boundary[i * level.arity..(i + 1) * level.arity]
    }

    /// Indices (in dimension `dim + 1`) of the faces covering this face.
    pub fn cofaces(&self, id: FaceId) -> &[u32] {
        let level = &self.levels[id.dim as usize];
        let i = id.index as usize;
        if level.cofaces.is_empty() {
            return &[];
        }
        &level.cofaces[level.co_offsets[i] as usize..level.co_offsets[i + 1] as usize]
    }

    pub fn find(&self, face: &[Vertex]) -> Option<FaceId> {
        if face.is_empty() {
            return None;
        }
        let k = face.len() - 1;
        self.levels.get(k)?.find(face).map(|i| FaceId::new(k, i))
    }

    pub fn contains(&self, face: &Face) -> bool {
        self.find(face.vertices()).is_some()
    }

    fn require(&self, face: &Face) -> Result<FaceId, ComplexError> {
        self.find(face.vertices()).ok_or_else(|| ComplexError::FaceAbsent(face.clone()))
    }

    /// Ids of the maximal faces, by dimension then lexicographically.
    pub fn facet_ids(&self) -> Vec<FaceId> {
        self.face_ids().filter(|&id| self.cofaces(id).is_empty()).collect()
    }

    /// Maximal faces in lexicographic order of their vertex tuples.
    pub fn facets(&self) -> Vec<Face> {
        let mut out: Vec<Face> = self.facet_ids().into_iter().map(|id| self.face_owned(id)).collect();
        out.sort();
        out
    }

    pub fn is_pure(&self) -> bool {
        let d = self.dim();
        self.face_ids().all(|id| id.dim as usize == d || !self.cofaces(id).is_empty())
    }

    /// Number of edges through each vertex, in vertex order.
    pub fn valences(&self) -> Vec<usize> {
        (0..self.num_faces(0)).map(|i| self.cofaces(FaceId::new(0, i)).len()).collect()
    }

    /// All pairs `(σ, τ)` with `τ` the only face properly containing `σ`.
    pub fn free_face_ids(&self) -> Vec<(FaceId, FaceId)> {
        let mut out = Vec::new();
        for k in 0..self.dim() {
            for i in 0..self.num_faces(k) {
                let id = FaceId::new(k, i);
                if let [t] = self.cofaces(id) {
                    let tau = FaceId::new(k + 1, *t as usize);
                    if self.cofaces(tau).is_empty() {
                        out.push((id, tau));
                    }
                }
            }
        }
        out
    }

    pub fn free_faces(&self) -> Vec<(Face, Face)> {
        self.free_face_ids()
            .into_iter()
            .map(|(s, t)| (self.face_owned(s), self.face_owned(t)))
            .collect()
    }

    /// Ids of the maximal faces containing `id`, found by walking cofaces.
    pub fn facets_containing(&self, id: FaceId) -> Vec<FaceId> {
        let mut seen = BTreeSet::new();
        let mut stack = vec![id];
        let mut out = Vec::new();
        while let Some(f) = stack.pop() {
            if !seen.insert(f) {
                continue;
            }
            let co = self.cofaces(f);
            if co.is_empty() {
                out.push(f);
            }
            stack.extend(co.iter().map(|&c| FaceId::new(f.dim as usize + 1, c as usize)));
        }
        out.sort();
        out
    }

    /// `lk(σ) = { τ : τ ∩ σ = ∅, τ ∪ σ ∈ K }`. The link of a facet is the void complex.
    pub fn link_of(&self, sigma: &Face) -> Result<SimplicialComplex, ComplexError> {
        let id = self.require(sigma)?;
        let facets: Vec<Vec<Vertex>> = self
            .facets_containing(id)
            .into_iter()
            .map(|f| self.face(f).iter().copied().filter(|v| !sigma.contains(*v)).collect::<Vec<_>>())
            .filter(|f| !f.is_empty())
            .collect();
        Ok(Self::from_sorted_facets(facets))
    }

    /// Closure of all faces containing `σ`.
    pub fn closed_star_of(&self, sigma: &Face) -> Result<SimplicialComplex, ComplexError> {
        let id = self.require(sigma)?;
        Ok(Self::from_sorted_facets(self.facets_containing(id).into_iter().map(|f| self.face(f))))
    }

    /// Subcomplex of faces avoiding `v`.
    pub fn delete_vertex(&self, v: Vertex) -> Result<SimplicialComplex, ComplexError> {
        if !self.has_vertex(v) {
            return Err(ComplexError::VertexAbsent(v));
        }
        let facets: Vec<Vec<Vertex>> = self
            .facet_ids()
            .into_iter()
            .map(|f| self.face(f).iter().copied().filter(|&w| w != v).collect::<Vec<_>>())
            .filter(|f| !f.is_empty())
            .collect();
        Ok(Self::from_sorted_facets(facets))
    }

    /// Closure of the codimension-one faces lying in exactly one facet.
    /// Requires a pure complex.
    pub fn boundary_complex(&self) -> Result<SimplicialComplex, ComplexError> {
        if self.is_empty() || !self.is_pure() {
            return Err(ComplexError::NotPure);
        }
        let d = self.dim();
        if d == 0 {
            return Ok(Self::empty());
        }
        Ok(Self::from_sorted_facets(
            (0..self.num_faces(d - 1))
                .map(|i| FaceId::new(d - 1, i))
                .filter(|&id| self.cofaces(id).len() == 1)
                .map(|id| self.face(id)),
        ))
    }

    /// Image of the complex under a vertex map. Fails if the map is undefined
    /// somewhere or sends two vertices of one face to the same vertex.
    pub fn apply_map(&self, map: &VertexMap) -> Result<SimplicialComplex, ComplexError> {
        let mut images = Vec::new();
        for id in self.facet_ids() {
            let face = self.face(id);
            let mut img = Vec::with_capacity(face.len());
            for &v in face {
                img.push(map.get(v).ok_or(ComplexError::MapNotTotal(v))?);
            }
            img.sort_unstable();
            if img.windows(2).any(|w| w[0] == w[1]) {
                return Err(ComplexError::QuotientUnsafe(Face::from_sorted(face.to_vec())));
            }
            if img[0] == 0 {
                return Err(ComplexError::NonPositiveVertex);
            }
            images.push(img);
        }
        Ok(Self::from_sorted_facets(images))
    }

    /// Faces of the link of `σ`, as vertex lists (not closed under anything new).
    fn link_face_set(&self, sigma: &[Vertex]) -> BTreeSet<Vec<Vertex>> {
        let mut out = BTreeSet::new();
        let Some(id) = self.find(sigma) else { return out };
        let mut stack = vec![id];
        let mut seen = BTreeSet::new();
        while let Some(f) = stack.pop() {
            if !seen.insert(f) {
                continue;
            }
            let rest: Vec<Vertex> = self.face(f).iter().copied().filter(|v| !sigma.contains(v)).collect();
            if !rest.is_empty() {
                out.insert(rest);
            }
            stack.extend(self.cofaces(f).iter().map(|&c| FaceId::new(f.dim as usize + 1, c as usize)));
        }
        out
    }

    /// `lk(u) ∩ lk(v) = lk({u,v})` for an edge `{u,v}`.
    pub fn satisfies_link_condition(&self, u: Vertex, v: Vertex) -> bool {
        let (a, b) = if u < v { (u, v) } else { (v, u) };
        let lu = self.link_face_set(&[a]);
        let lv = self.link_face_set(&[b]);
        let luv = self.link_face_set(&[a, b]);
        let common: BTreeSet<_> = lu.intersection(&lv).cloned().collect();
        common == luv
    }

    /// Contracts `edge = {u, v}` (u < v), replacing `v` by `u` everywhere.
    pub fn contract_edge(&self, edge: &Face) -> Result<SimplicialComplex, ComplexError> {
        if edge.len() != 2 {
            return Err(ComplexError::InvalidArgument(format!("{edge} is not an edge")));
        }
        self.require(edge)?;
        let (u, v) = (edge.vertices()[0], edge.vertices()[1]);
        if !self.satisfies_link_condition(u, v) {
            return Err(ComplexError::LinkConditionViolated(edge.clone()));
        }
        Ok(self.merge_vertices(u, v))
    }

    /// Replaces `v` by `u`, merging faces. Faces through both collapse onto
    /// their image without `v`.
    pub(crate) fn merge_vertices(&self, u: Vertex, v: Vertex) -> SimplicialComplex {
        let facets: Vec<Vec<Vertex>> = self
            .facet_ids()
            .into_iter()
            .map(|id| {
                let mut f: Vec<Vertex> =
                    self.face(id).iter().map(|&w| if w == v { u } else { w }).collect();
                f.sort_unstable();
                f.dedup();
                f
            })
            .collect();
        Self::from_sorted_facets(facets)
    }

    /// Is every face of `other` a face of `self`?
    pub fn contains_complex(&self, other: &SimplicialComplex) -> bool {
        other.facet_ids().into_iter().all(|id| self.find(other.face(id)).is_some())
    }

    /// Checks the stored incidences against brute-force containment.
    /// Quadratic; meant for tests on small complexes.
    pub fn validate(&self) -> Result<(), String> {
        for k in 0..self.levels.len() {
            let level = &self.levels[k];
            for i in 1..level.len() {
                if level.face(i - 1) >= level.face(i) {
                    return Err(format!("dimension {k} not strictly sorted at {i}"));
                }
            }
            for i in 0..level.len() {
                let face = level.face(i);
                if face.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(format!("face {face:?} not strictly increasing"));
                }
                let id = FaceId::new(k, i);
                if k > 0 {
                    for (skip, &b) in self.boundary(id).iter().enumerate() {
                        let expect: Vec<Vertex> =
                            face.iter().enumerate().filter(|&(j, _)| j != skip).map(|(_, &v)| v).collect();
                        if self.levels[k - 1].face(b as usize) != expect.as_slice() {
                            return Err(format!("bad boundary entry for {face:?}"));
                        }
                    }
                }
                if k + 1 < self.levels.len() {
                    let brute: Vec<u32> = (0..self.levels[k + 1].len())
                        .filter(|&j| is_sorted_subset(face, self.levels[k + 1].face(j)))
                        .map(|j| j as u32)
                        .collect();
                    if brute != self.cofaces(id) {
                        return Err(format!("bad cofaces for {face:?}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Sorts flat `arity`-tuples lexicographically and removes repeats.
fn sort_dedup(flat: &mut Vec<Vertex>, arity: usize) {
    let n = flat.len() / arity;
    if n <= 1 {
        return;
    }
    let max = flat.iter().copied().max().unwrap_or(0);
    let bits = (32 - max.leading_zeros()).max(1) as usize;
    if bits * arity <= 64 {
        let mut keys: Vec<u64> = flat
            .chunks_exact(arity)
            .map(|c| c.iter().fold(0u64, |acc, &v| (acc << bits) | v as u64))
            .collect();
        keys.sort_unstable();
        keys.dedup();
        unpack(flat, &keys, arity, bits, |k, s| (k >> s) as u32);
    } else if bits * arity <= 128 {
        let mut keys: Vec<u128> = flat
            .chunks_exact(arity)
            .map(|c| c.iter().fold(0u128, |acc, &v| (acc << bits) | v as u128))
            .collect();
        keys.sort_unstable();
        keys.dedup();
        unpack(flat, &keys, arity, bits, |k, s| (k >> s) as u32);
    } else {
        let mut idx: Vec<u32> = (0..n as u32).collect();
        idx.sort_unstable_by(|&a, &b| {
            let a = a as usize * arity;
            let b = b as usize * arity;
            flat[a..a + arity].cmp(&flat[b..b + arity])
        });
        idx.dedup_by(|a, b| {
            let a = *a as usize * arity;
            let b = *b as usize * arity;
            flat[a..a + arity] == flat[b..b + arity]
        });
        let mut out = Vec::with_capacity(idx.len() * arity);
        for i in idx {
            let i = i as usize * arity;
            out.extend_from_slice(&flat[i..i + arity]);
        }
        *flat = out;
    }
}

fn unpack<K: Copy>(flat: &mut Vec<Vertex>, keys: &[K], arity: usize, bits: usize, shift: impl Fn(K, usize) -> u32) {
    let mask = if bits >= 32 { u32::MAX } else { (1u32 << bits) - 1 };
    flat.clear();
    flat.reserve(keys.len() * arity);
    for &k in keys {
        for j in (0..arity).rev() {
            flat.push(shift(k, j * bits) & mask);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn closure_of_triangle() {
        let k = cx(&[&[1, 2, 3]]);
        assert_eq!(k.f_vector(), [3, 3, 1]);
        k.validate().unwrap();
    }

    #[test]
    fn path_and_absorption() {
        let k = cx(&[&[1, 2], &[2, 3], &[2], &[3, 2]]);
        assert_eq!(k.f_vector(), [3, 2]);
        assert_eq!(k.facets().len(), 2);
    }

    #[test]
    fn errors_on_bad_input() {
        assert_eq!(SimplicialComplex::from_facets(Vec::<Vec<u32>>::new()), Err(ComplexError::EmptyInput));
        assert_eq!(
            SimplicialComplex::from_facets(vec![vec![1u32, 1, 2]]),
            Err(ComplexError::DuplicateVertex(1))
        );
    }

    #[test]
    fn single_vertex() {
        let k = cx(&[&[7]]);
        assert_eq!(k.f_vector(), [1]);
        assert_eq!(k.euler_characteristic(), 1);
        assert!(k.free_faces().is_empty());
    }

    #[test]
    fn triangle_has_three_free_edges() {
        let k = cx(&[&[1, 2, 3]]);
        let free = k.free_faces();
        assert_eq!(free.len(), 3);
        assert!(free.iter().all(|(s, t)| s.dim() == 1 && t.dim() == 2));
    }

    #[test]
    fn path_leaves_are_free() {
        let k = cx(&[&[1, 2], &[2, 3]]);
        let free: Vec<_> = k.free_faces().into_iter().map(|(s, _)| s.into_vertices()).collect();
        assert_eq!(free, vec![vec![1], vec![3]]);
    }

    #[test]
    fn link_star_delete() {
        let bd = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        let lk = bd.link_of(&Face::new([1]).unwrap()).unwrap();
        assert_eq!(lk.f_vector(), [3, 3]);
        assert_eq!(lk.facets().len(), 3);
        let st = bd.closed_star_of(&Face::new([1]).unwrap()).unwrap();
        assert_eq!(st.num_faces(2), 3);
        let path = cx(&[&[1, 2], &[2, 3]]);
        assert_eq!(path.delete_vertex(3).unwrap(), cx(&[&[1, 2]]));
        assert_eq!(path.delete_vertex(9), Err(ComplexError::VertexAbsent(9)));
        assert!(bd.link_of(&Face::new([1, 2, 3]).unwrap()).unwrap().is_empty());
        assert!(matches!(bd.link_of(&Face::new([1, 5]).unwrap()), Err(ComplexError::FaceAbsent(_))));
    }

    #[test]
    fn boundary_of_tetrahedron_and_square() {
        let t = cx(&[&[1, 2, 3, 4]]);
        assert_eq!(t.boundary_complex().unwrap().f_vector(), [4, 6, 4]);
        let sq = cx(&[&[1, 2, 3], &[2, 3, 4]]);
        let b = sq.boundary_complex().unwrap();
        assert_eq!(b.f_vector(), [4, 4]);
        let nonpure = cx(&[&[1, 2, 3], &[3, 4]]);
        assert_eq!(nonpure.boundary_complex(), Err(ComplexError::NotPure));
    }

    #[test]
    fn apply_map_quotient_and_identity() {
        let cyc = cx(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let mut m = VertexMap::identity(&cyc);
        assert_eq!(cyc.apply_map(&m).unwrap(), cyc);
        m.insert(3, 1);
        let img = cyc.apply_map(&m).unwrap();
        assert_eq!(img, cx(&[&[1, 2], &[1, 4]]));
        let tri = cx(&[&[1, 2, 3]]);
        let mut bad = VertexMap::identity(&tri);
        bad.insert(2, 1);
        assert!(matches!(tri.apply_map(&bad), Err(ComplexError::QuotientUnsafe(_))));
        let partial: VertexMap = [(1, 1), (2, 2)].into_iter().collect();
        assert_eq!(tri.apply_map(&partial), Err(ComplexError::MapNotTotal(3)));
    }

    #[test]
    fn contraction() {
        let bd = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        for e in bd.faces(1) {
            assert!(matches!(
                bd.contract_edge(&Face::new(e.to_vec()).unwrap()),
                Err(ComplexError::LinkConditionViolated(_))
            ));
        }
        let path = cx(&[&[1, 2], &[2, 3]]);
        assert_eq!(path.contract_edge(&Face::new([1, 2]).unwrap()).unwrap(), cx(&[&[1, 3]]));
    }

    #[test]
    fn large_ids_use_slice_sort() {
        let big = u32::MAX - 10;
        let k = cx(&[&[1, 2, 3, 4, 5, big], &[1, 2, 3, 4, 5, 6]]);
        k.validate().unwrap();
        assert_eq!(k.num_faces(5), 2);
    }

    #[test]
    fn hasse_edge_count() {
        let t = cx(&[&[1, 2, 3, 4]]);
        assert_eq!(t.hasse_edges(), 2 * 6 + 3 * 4 + 4);
    }
}
