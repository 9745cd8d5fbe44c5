//! Hard-coded complexes: `two_optima`, the dunce hat and the 16-vertex
//! Poincaré homology sphere.

use crate::complex::SimplicialComplex;
use crate::error::ComplexError;
use crate::face::Vertex;
use crate::io::parse_facets;

fn sorted<const N: usize>(mut f: [Vertex; N]) -> Vec<Vertex> {
    f.sort_unstable();
    f.to_vec()
}

const SIGMA2_RELABELED: [[Vertex; 3]; 13] = [
    [1, 2, 3],
    [1, 3, 23],
    [1, 22, 23],
    [1, 22, 24],
    [1, 22, 25],
    [1, 24, 25],
    [2, 3, 25],
    [2, 22, 23],
    [2, 22, 24],
    [2, 22, 25],
    [2, 23, 24],
    [3, 23, 25],
    [23, 24, 25],
];

const CONNECTORS: [[Vertex; 4]; 9] = [
    [2, 3, 14, 15],
    [1, 2, 15, 16],
    [1, 3, 16, 17],
    [2, 3, 17, 18],
    [1, 2, 18, 19],
    [1, 3, 14, 19],
    [1, 3, 15, 20],
    [1, 2, 17, 20],
    [2, 3, 19, 20],
];

const SHIELD: [[Vertex; 4]; 7] = [
    [1, 15, 16, 17],
    [1, 15, 17, 20],
    [2, 17, 18, 19],
    [2, 17, 19, 20],
    [3, 14, 15, 19],
    [3, 15, 19, 20],
    [15, 17, 19, 20],
];

const CAP: [[Vertex; 3]; 14] = [
    [1, 2, 14],
    [1, 3, 18],
    [1, 14, 19],
    [1, 18, 19],
    [2, 3, 16],
    [2, 14, 15],
    [2, 15, 16],
    [3, 16, 17],
    [3, 17, 18],
    [14, 15, 19],
    [15, 16, 17],
    [15, 17, 19],
    [17, 18, 19],
    [1, 2, 3],
];

fn sigma2_sigma3prime_facets() -> Vec<Vec<Vertex>> {
    let mut out: Vec<Vec<Vertex>> = SIGMA2_RELABELED[1..].iter().map(|&f| sorted(f)).collect();
    for x in 7..=13 {
        for [a, b, c] in [[1, 2, 5], [1, 2, 6], [1, 3, 5], [1, 4, 6], [2, 5, 6], [3, 4, 6], [3, 5, 6]] {
            out.push(sorted([a, b, c, x]));
        }
        let y = x + 7;
        for [a, b] in [[1, 3], [1, 4], [3, 4]] {
            out.push(sorted([a, b, x, y]));
        }
        out.push(sorted([1, 2, 4, y]));
        out.push(sorted([2, 3, 4, y]));
    }
    out.extend(CONNECTORS.iter().map(|&f| sorted(f)));
    out.extend(SHIELD.iter().map(|&f| sorted(f)));
    out.extend(CAP.iter().map(|&[a, b, c]| sorted([a, b, c, 21])));
    out
}

/// The contractible complex obtained by gluing the modified `Σ'_3` onto the
/// relabeled `Σ_2` along the triangle `{1,2,3}`; 25 vertices, 114 tetrahedra.
pub fn build_sigma2_sigma3prime() -> SimplicialComplex {
    SimplicialComplex::from_sorted_facets(sigma2_sigma3prime_facets())
}

/// Triangles that receive a copy of `Σ_3`, one per vertex block.
const BLOCK_TRIANGLES: [[Vertex; 3]; 9] = [
    [1, 2, 5],
    [1, 2, 6],
    [1, 2, 4],
    [1, 3, 5],
    [1, 4, 6],
    [2, 3, 4],
    [2, 5, 6],
    [3, 4, 6],
    [3, 5, 6],
];

/// One copy of `Σ_3` on the triangle `t` with fresh vertices `a ..= a+8`.
fn sigma3_copy(t: [Vertex; 3], a: Vertex) -> Vec<Vec<Vertex>> {
    let [t1, t2, t3] = t;
    let v = |i: Vertex| a + i;
    let mut out = Vec::with_capacity(51);
    for b in 1..=7 {
        for [p, q] in [[t1, t2], [t1, t3], [t2, t3]] {
            out.push(sorted([p, q, a, v(b)]));
        }
    }
    out.extend([
        sorted([t2, t3, v(1), v(2)]),
        sorted([t1, t2, v(2), v(3)]),
        sorted([t1, t3, v(3), v(4)]),
        sorted([t2, t3, v(4), v(5)]),
        sorted([t1, t2, v(5), v(6)]),
        sorted([t1, t3, v(6), v(1)]),
        sorted([t1, t3, v(2), v(7)]),
        sorted([t1, t2, v(4), v(7)]),
        sorted([t2, t3, v(6), v(7)]),
        sorted([t1, v(2), v(3), v(4)]),
        sorted([t1, v(2), v(4), v(7)]),
        sorted([t2, v(4), v(5), v(6)]),
        sorted([t2, v(4), v(6), v(7)]),
        sorted([t3, v(1), v(2), v(6)]),
        sorted([t3, v(2), v(6), v(7)]),
        sorted([v(2), v(4), v(6), v(7)]),
    ]);
    let apex = v(8);
    for [p, q, r] in [
        [t1, t2, t3],
        [t1, t2, v(1)],
        [t1, t3, v(5)],
        [t2, t3, v(3)],
        [t1, v(1), v(6)],
        [t1, v(5), v(6)],
        [t2, v(1), v(2)],
        [t2, v(2), v(3)],
        [t3, v(3), v(4)],
        [t3, v(4), v(5)],
        [v(1), v(2), v(6)],
        [v(2), v(3), v(4)],
        [v(4), v(5), v(6)],
        [v(2), v(4), v(6)],
    ] {
        out.push(sorted([p, q, r, apex]));
    }
    out
}

/// The 3-complex on 106 vertices with the two optimal discrete Morse
/// vectors `(1,1,1,0)` and `(1,0,1,1)`. Its only free face is `{1,2,3}`.
pub fn build_two_optima() -> SimplicialComplex {
    let mut facets = sigma2_sigma3prime_facets();
    for (j, &t) in BLOCK_TRIANGLES.iter().enumerate() {
        facets.extend(sigma3_copy(t, 26 + 9 * j as Vertex));
    }
    SimplicialComplex::from_sorted_facets(facets)
}

const DUNCE_HAT: [[Vertex; 3]; 17] = [
    [1, 3, 5],
    [2, 3, 5],
    [2, 4, 5],
    [1, 2, 4],
    [1, 3, 4],
    [3, 4, 8],
    [1, 2, 8],
    [1, 7, 8],
    [1, 2, 7],
    [2, 3, 7],
    [3, 6, 7],
    [1, 3, 6],
    [1, 5, 6],
    [4, 5, 6],
    [4, 6, 8],
    [6, 7, 8],
    [2, 3, 8],
];

/// The 8-vertex triangulation of the dunce hat: contractible, no free face.
pub fn dunce_hat() -> SimplicialComplex {
    SimplicialComplex::from_sorted_facets(DUNCE_HAT.iter().map(|&f| sorted(f)))
}

const POINCARE_DATA: &str = include_str!("../../data/poincare.fac");

/// f-vector of the shipped Poincaré homology sphere.
pub const POINCARE_F: [u64; 4] = [16, 106, 180, 90];
/// Vertex degrees in the 1-skeleton for vertices `1..=16`.
pub const POINCARE_VALENCES: [usize; 16] = [14, 14, 11, 14, 14, 11, 14, 12, 13, 15, 15, 14, 15, 15, 15, 6];

/// Checks the f-vector and the valence vector of a 16-vertex Poincaré
/// homology sphere candidate.
pub fn check_poincare(k: &SimplicialComplex) -> Result<(), ComplexError> {
    if k.f_vector() != POINCARE_F {
        return Err(ComplexError::InvalidArgument(format!(
            "expected f-vector {:?}, found {}",
            POINCARE_F,
            k.f_vector()
        )));
    }
    let degrees: Vec<usize> = (1..=16).map(|v| k.find(&[v]).map_or(0, |id| k.cofaces(id).len())).collect();
    if degrees != POINCARE_VALENCES {
        return Err(ComplexError::InvalidArgument(format!(
            "expected valence vector {POINCARE_VALENCES:?}, found {degrees:?}"
        )));
    }
    Ok(())
}

/// The 16-vertex Poincaré homology 3-sphere, loaded from the bundled facet
/// file and validated.
pub fn poincare() -> SimplicialComplex {
    let facets = parse_facets(POINCARE_DATA).expect("bundled poincare data parses");
    let k = SimplicialComplex::from_facets(facets).expect("bundled poincare data is nonempty");
    check_poincare(&k).expect("bundled poincare data is valid");
    k
}
