//! Standard complexes and the operators used to build bigger ones: cones,
//! suspensions, stellar moves, products with an interval and barycentric
//! subdivision.

use std::collections::BTreeSet;

use crate::complex::{FaceId, SimplicialComplex};
use crate::error::ComplexError;
use crate::face::{Face, Vertex};

/// Closure of the simplex on `1..=d+1`.
pub fn simplex(d: usize) -> SimplicialComplex {
    let f: Vec<Vertex> = (1..=d as Vertex + 1).collect();
    SimplicialComplex::from_sorted_facets([f])
}

/// Boundary of the `d`-simplex on `1..=d+1`, a `(d-1)`-sphere.
pub fn simplex_boundary(d: usize) -> Result<SimplicialComplex, ComplexError> {
    if d == 0 {
        return Err(ComplexError::InvalidArgument("the 0-simplex has empty boundary".into()));
    }
    let n = d as Vertex + 1;
    Ok(SimplicialComplex::from_sorted_facets(
        (1..=n).map(|skip| (1..=n).filter(|&v| v != skip).collect::<Vec<_>>()),
    ))
}

/// Facets of the boundary of the `d`-dimensional cross-polytope. Vertex `i`
/// and its antipode `prime(i)` never share a face; facet `mask` takes the
/// antipode in every coordinate whose bit is set.
pub(crate) fn cross_polytope_facets(d: usize, prime: impl Fn(Vertex) -> Vertex) -> Vec<(u32, Vec<Vertex>)> {
    (0..1u32 << d)
        .map(|mask| {
            let mut f: Vec<Vertex> = (0..d)
                .map(|i| {
                    let v = i as Vertex + 1;
                    if mask >> i & 1 == 1 {
                        prime(v)
                    } else {
                        v
                    }
                })
                .collect();
            f.sort_unstable();
            (mask, f)
        })
        .collect()
}

/// Boundary complex of the `d`-dimensional cross-polytope with vertices
/// `1..=d` and antipodes `i' = d + i`.
pub fn cross_polytope(d: usize) -> Result<SimplicialComplex, ComplexError> {
    if d == 0 {
        return Err(ComplexError::InvalidArgument("cross-polytope needs d >= 1".into()));
    }
    let dd = d as Vertex;
    Ok(SimplicialComplex::from_sorted_facets(
        cross_polytope_facets(d, |i| dd + i).into_iter().map(|(_, f)| f),
    ))
}

/// Join with a fresh vertex.
pub fn cone(k: &SimplicialComplex, apex: Vertex) -> Result<SimplicialComplex, ComplexError> {
    if apex == 0 {
        return Err(ComplexError::NonPositiveVertex);
    }
    if k.has_vertex(apex) {
        return Err(ComplexError::VertexCollision(apex));
    }
    if k.is_empty() {
        return Ok(SimplicialComplex::from_sorted_facets([[apex]]));
    }
    Ok(SimplicialComplex::from_sorted_facets(k.facet_ids().into_iter().map(|id| with_vertex(k.face(id), apex))))
}

/// Join with two fresh vertices `a` and `b`.
pub fn suspension_with(k: &SimplicialComplex, a: Vertex, b: Vertex) -> Result<SimplicialComplex, ComplexError> {
    if a == b {
        return Err(ComplexError::InvalidArgument("suspension apexes must differ".into()));
    }
    for v in [a, b] {
        if v == 0 {
            return Err(ComplexError::NonPositiveVertex);
        }
        if k.has_vertex(v) {
            return Err(ComplexError::VertexCollision(v));
        }
    }
    if k.is_empty() {
        return Ok(SimplicialComplex::from_sorted_facets([[a], [b]]));
    }
    let facets = k.facet_ids();
    Ok(SimplicialComplex::from_sorted_facets(
        facets.iter().flat_map(|&id| [with_vertex(k.face(id), a), with_vertex(k.face(id), b)]),
    ))
}

/// Suspension with apexes `max + 1` and `max + 2`.
pub fn suspension(k: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
    let m = k.max_vertex();
    suspension_with(k, m + 1, m + 2)
}

/// Suspension with apexes `w1 = max + 1`, `w2 = max + 2`, followed by the
/// contraction of the edge `{v, w2}` onto `v`. Uses one vertex more than `k`.
pub fn one_point_suspension(k: &SimplicialComplex, v: Vertex) -> Result<SimplicialComplex, ComplexError> {
    if !k.has_vertex(v) {
        return Err(ComplexError::VertexAbsent(v));
    }
    let m = k.max_vertex();
    let (w1, w2) = (m + 1, m + 2);
    let s = suspension_with(k, w1, w2)?;
    // The link condition always holds for an apex edge of a suspension.
    let out = s.contract_edge(&Face::new([v, w2])?)?;
    debug_assert_eq!(out.num_faces(0), k.num_faces(0) + 1);
    Ok(out)
}

fn with_vertex(face: &[Vertex], v: Vertex) -> Vec<Vertex> {
    let mut f = Vec::with_capacity(face.len() + 1);
    f.extend_from_slice(face);
    let pos = f.partition_point(|&x| x < v);
    f.insert(pos, v);
    f
}

/// Stellar subdivision of `sigma` inside a facet list: every facet
/// `F ⊇ σ` becomes the facets `(F \ {x}) ∪ {v}` for `x ∈ σ`.
pub(crate) fn stellar_on_facets(facets: &mut Vec<Vec<Vertex>>, sigma: &[Vertex], v: Vertex) {
    let mut out = Vec::with_capacity(facets.len() + sigma.len());
    for f in facets.drain(..) {
        if is_subset(sigma, &f) {
            for &x in sigma {
                let rest: Vec<Vertex> = f.iter().copied().filter(|&y| y != x).collect();
                out.push(with_vertex(&rest, v));
            }
        } else {
            out.push(f);
        }
    }
    *facets = out;
}

fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    a.iter().all(|x| b.binary_search(x).is_ok())
}

/// Stellar subdivision of the face `sigma` with new vertex `v`.
pub fn stellar_subdivision(
    k: &SimplicialComplex,
    sigma: &Face,
    v: Vertex,
) -> Result<SimplicialComplex, ComplexError> {
    if !k.contains(sigma) {
        return Err(ComplexError::FaceAbsent(sigma.clone()));
    }
    if v == 0 {
        return Err(ComplexError::NonPositiveVertex);
    }
    if k.has_vertex(v) {
        return Err(ComplexError::VertexCollision(v));
    }
    let mut facets: Vec<Vec<Vertex>> = k.facet_ids().into_iter().map(|id| k.face(id).to_vec()).collect();
    stellar_on_facets(&mut facets, sigma.vertices(), v);
    Ok(SimplicialComplex::from_sorted_facets(facets))
}

/// Stacks a face: stellar subdivision with a chosen fresh vertex.
pub fn stack_facet(k: &SimplicialComplex, facet: &Face, fresh: Vertex) -> Result<SimplicialComplex, ComplexError> {
    stellar_subdivision(k, facet, fresh)
}

/// Staircase triangulation of `K × I` without new vertices. Vertex `(v, 0)`
/// keeps id `v`, vertex `(v, 1)` gets id `v + max`. Each facet
/// `v0 < … < vk` yields the `k + 1` simplices
/// `{(v0,0), …, (vi,0), (vi,1), …, (vk,1)}`.
pub fn product_with_interval(k: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
    if k.is_empty() || !k.is_pure() {
        return Err(ComplexError::NotPure);
    }
    let shift = k.max_vertex();
    let mut out = Vec::new();
    for id in k.facet_ids() {
        let f = k.face(id);
        for i in 0..f.len() {
            let mut s: Vec<Vertex> = f[..=i].to_vec();
            s.extend(f[i..].iter().map(|&v| v + shift));
            out.push(s);
        }
    }
    Ok(SimplicialComplex::from_sorted_facets(out))
}

/// Id of the barycenter of `id` in `sd K`: one plus the rank of the face in
/// the order (dimension, lexicographic).
pub fn barycenter_id(k: &SimplicialComplex, id: FaceId) -> Vertex {
    let below: usize = (0..id.dim as usize).map(|j| k.num_faces(j)).sum();
    (below + id.index as usize + 1) as Vertex
}

/// Calls `emit` with every maximal chain (as face ids, vertex first) below
/// the maximal faces of `k`.
pub(crate) fn for_each_maximal_chain(k: &SimplicialComplex, mut emit: impl FnMut(&[FaceId])) {
    fn walk(k: &SimplicialComplex, id: FaceId, chain: &mut Vec<FaceId>, emit: &mut dyn FnMut(&[FaceId])) {
        chain.push(id);
        if id.dim == 0 {
            let mut up = chain.clone();
            up.reverse();
            emit(&up);
        } else {
            for &b in k.boundary(id) {
                walk(k, FaceId::new(id.dim as usize - 1, b as usize), chain, emit);
            }
        }
        chain.pop();
    }
    let mut chain = Vec::new();
    for f in k.facet_ids() {
        walk(k, f, &mut chain, &mut emit);
    }
}

/// One barycentric subdivision. Vertex ids follow [`barycenter_id`].
fn subdivide_once(k: &SimplicialComplex) -> SimplicialComplex {
    let mut offsets = Vec::with_capacity(k.dim() + 2);
    let mut acc = 0usize;
    for j in 0..=k.dim() {
        offsets.push(acc);
        acc += k.num_faces(j);
    }
    let mut facets: Vec<Vec<Vertex>> = Vec::new();
    for_each_maximal_chain(k, |chain| {
        facets.push(chain.iter().map(|id| (offsets[id.dim as usize] + id.index as usize + 1) as Vertex).collect());
    });
    SimplicialComplex::from_sorted_facets(facets)
}

/// `iterations`-fold barycentric subdivision.
pub fn barycentric_subdivision(k: &SimplicialComplex, iterations: usize) -> Result<SimplicialComplex, ComplexError> {
    if iterations == 0 {
        return Err(ComplexError::InvalidArgument("barycentric subdivision needs at least one iteration".into()));
    }
    let mut cur = subdivide_once(k);
    for _ in 1..iterations {
        cur = subdivide_once(&cur);
    }
    Ok(cur)
}

/// Union of the closed stars in `k` of the vertices of `l`.
pub fn simplicial_neighborhood(k: &SimplicialComplex, l: &SimplicialComplex) -> Result<SimplicialComplex, ComplexError> {
    if !k.contains_complex(l) {
        return Err(ComplexError::InvalidArgument("subcomplex is not contained in the complex".into()));
    }
    let mut facets = BTreeSet::new();
    for &v in l.vertices() {
        let id = k.find(&[v]).ok_or(ComplexError::VertexAbsent(v))?;
        facets.extend(k.facets_containing(id));
    }
    Ok(SimplicialComplex::from_sorted_facets(facets.into_iter().map(|id| k.face(id))))
}
