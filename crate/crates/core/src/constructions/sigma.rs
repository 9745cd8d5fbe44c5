//! Complexes with few free faces built from the antiprism: `Σ_d` with a
//! single free face and `E̅_d` with two.

use std::collections::{BTreeSet, HashMap};

use crate::complex::SimplicialComplex;
use crate::error::ComplexError;
use crate::face::Vertex;

use super::ops::{cone, for_each_maximal_chain};
use super::polytopal::{antiprism_facets, antiprism_prime};

/// Label of the fresh vertex stacked onto the cross-polytope facet `mask`
/// (bit `i` set means the facet uses the antipode of `i + 1`).
pub fn sigma_stack_vertex(d: usize, mask: u32) -> Vertex {
    antiprism_prime(d, d as Vertex) + mask
}

/// Facets of the antiprism triangulation after stacking every
/// cross-polytope facet other than `{1, …, d}`, before any identification.
pub fn sigma_unidentified_facets(d: usize, pull_order: Option<&[Vertex]>) -> Result<Vec<Vec<Vertex>>, ComplexError> {
    let facets = antiprism_facets(d, pull_order)?;
    let cube_lo = d as Vertex + 2;
    let cube_hi = antiprism_prime(d, 0);
    let is_cube = |v: Vertex| (cube_lo..=cube_hi).contains(&v);
    let mut out = Vec::with_capacity((facets.len() + d) << d);
    for f in facets {
        let cube_count = f.iter().filter(|&&v| is_cube(v)).count();
        let mask: u32 = f.iter().filter(|&&v| v > cube_hi).map(|&v| 1 << (v - cube_hi - 1)).sum();
        if cube_count != 1 || mask == 0 {
            out.push(f);
            continue;
        }
        // f = σ ∪ {c} with σ a cross-polytope facet; stacking σ replaces
        // this simplex by the cone from the new vertex over ∂σ ∗ c.
        let w = sigma_stack_vertex(d, mask);
        for skip in f.iter().copied().filter(|&v| !is_cube(v)) {
            let mut g: Vec<Vertex> = f.iter().copied().filter(|&v| v != skip).collect();
            g.push(w);
            g.sort_unstable();
            out.push(g);
        }
    }
    Ok(out)
}

/// Identification map: `i' ↦ i` and every stack vertex `↦ d + 1`.
pub fn sigma_identification(d: usize, v: Vertex) -> Vertex {
    let p0 = antiprism_prime(d, 0);
    if v > p0 + d as Vertex {
        d as Vertex + 1
    } else if v > p0 {
        v - p0
    } else {
        v
    }
}

/// Facets of `Σ_d` (possibly with repetitions and non-maximal entries).
pub fn sigma_facets(d: usize, pull_order: Option<&[Vertex]>) -> Result<Vec<Vec<Vertex>>, ComplexError> {
    let mut facets = sigma_unidentified_facets(d, pull_order)?;
    for f in &mut facets {
        for v in f.iter_mut() {
            *v = sigma_identification(d, *v);
        }
        f.sort_unstable();
        debug_assert!(f.windows(2).all(|w| w[0] < w[1]), "identification folded a face");
    }
    Ok(facets)
}

/// The collapsible `d`-complex `Σ_d` on `2^d + d + 1` vertices whose only
/// free face is `{1, …, d}`. Vertex `d + 1` is the common image of the
/// stacking vertices; the cube vertices are `d + 2 ..= 2^d + d + 1`.
pub fn build_sigma(d: usize) -> Result<SimplicialComplex, ComplexError> {
    build_sigma_with_order(d, None)
}

/// [`build_sigma`] with an explicit pull order on the cube vertices.
pub fn build_sigma_with_order(d: usize, pull_order: Option<&[Vertex]>) -> Result<SimplicialComplex, ComplexError> {
    Ok(SimplicialComplex::from_sorted_facets(sigma_facets(d, pull_order)?))
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Bary {
    /// A face of `w ∗ Σ_{d-1}`; faces of `Σ_d` inside `{1, …, d}` are
    /// identified with faces of `w ∗ {1, …, d-1}` by `d ↦ w`.
    Lower(usize, Vec<Vertex>),
    Apex,
    /// Any other face of `Σ_d`.
    Upper(usize, Vec<Vertex>),
}

/// The complex `E̅_d` with exactly two free faces, which share a
/// codimension-one face. For `d = 2` this is `sd Σ_2`. For `d ≥ 3` it is
/// `sd(w ∗ Σ_{d-1}) ∪ (v ∗ sd Σ_{d-1}) ∪ sd Σ_d`, glued along
/// `sd Σ_{d-1}` and along `sd(w ∗ {1, …, d-1}) = sd {1, …, d}`. Vertex ids
/// are assigned by sorting barycenters: faces of `w ∗ Σ_{d-1}` by
/// (dimension, lex), then `v`, then the remaining faces of `Σ_d`.
pub fn build_e(d: usize) -> Result<SimplicialComplex, ComplexError> {
    if d < 2 {
        return Err(ComplexError::InvalidArgument("E needs d >= 2".into()));
    }
    if d == 2 {
        return super::ops::barycentric_subdivision(&build_sigma(2)?, 1);
    }
    let lower = build_sigma(d - 1)?;
    let w = lower.max_vertex() + 1;
    let coned = cone(&lower, w)?;
    let upper = build_sigma(d)?;
    let dv = d as Vertex;

    let mut chains: Vec<Vec<Bary>> = Vec::new();
    let key = |k: &SimplicialComplex, id| Bary::Lower(k.face(id).len(), k.face(id).to_vec());
    for_each_maximal_chain(&coned, |ch| chains.push(ch.iter().map(|&id| key(&coned, id)).collect()));
    for_each_maximal_chain(&lower, |ch| {
        let mut c: Vec<Bary> = ch.iter().map(|&id| key(&lower, id)).collect();
        c.push(Bary::Apex);
        chains.push(c);
    });
    for_each_maximal_chain(&upper, |ch| {
        chains.push(
            ch.iter()
                .map(|&id| {
                    let f = upper.face(id);
                    if f.iter().all(|&x| x <= dv) {
                        let mut g: Vec<Vertex> = f.iter().map(|&x| if x == dv { w } else { x }).collect();
                        g.sort_unstable();
                        Bary::Lower(g.len(), g)
                    } else {
                        Bary::Upper(f.len(), f.to_vec())
                    }
                })
                .collect(),
        )
    });
    let all: BTreeSet<&Bary> = chains.iter().flatten().collect();
    let ids: HashMap<&Bary, Vertex> = all.into_iter().enumerate().map(|(i, b)| (b, i as Vertex + 1)).collect();
    let facets: Vec<Vec<Vertex>> = chains
        .iter()
        .map(|c| {
            let mut f: Vec<Vertex> = c.iter().map(|b| ids[b]).collect();
            f.sort_unstable();
            f
        })
        .collect();
    Ok(SimplicialComplex::from_sorted_facets(facets))
}
