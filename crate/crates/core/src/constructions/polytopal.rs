//! Polytopal complexes given by their face lattice, the combinatorial
//! pulling triangulation, and the antiprism over the cross-polytope.

use std::collections::HashMap;

use crate::complex::SimplicialComplex;
use crate::error::ComplexError;
use crate::face::Vertex;

/// A cell of a [`PolytopalComplex`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cell {
    /// Sorted vertex labels.
    pub vertices: Vec<Vertex>,
    pub dim: usize,
    /// Indices of the cells covered by this one (its facets).
    pub facets: Vec<usize>,
}

/// Cells with an explicit cover relation. Cells are stored by nondecreasing
/// dimension, so every facet index is smaller than the index of its cell.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PolytopalComplex {
    cells: Vec<Cell>,
}

impl PolytopalComplex {
    /// Builds a complex from cells; sorts them by dimension and rewrites the
    /// cover indices, then checks the lattice invariants.
    pub fn new(cells: Vec<Cell>) -> Result<Self, ComplexError> {
        let mut order: Vec<usize> = (0..cells.len()).collect();
        order.sort_by_key(|&i| (cells[i].dim, cells[i].vertices.clone()));
        let mut pos = vec![0; cells.len()];
        for (new, &old) in order.iter().enumerate() {
            pos[old] = new;
        }
        let mut sorted: Vec<Cell> = order.iter().map(|&i| cells[i].clone()).collect();
        for c in &mut sorted {
            for f in &mut c.facets {
                *f = *pos.get(*f).ok_or_else(|| ComplexError::InvalidArgument("facet index out of range".into()))?;
            }
            c.facets.sort_unstable();
        }
        let pc = PolytopalComplex { cells: sorted };
        pc.check()?;
        Ok(pc)
    }

    fn check(&self) -> Result<(), ComplexError> {
        let bad = |m: &str| Err(ComplexError::InvalidArgument(m.into()));
        for c in &self.cells {
            if c.vertices.is_empty() || c.vertices.windows(2).any(|w| w[0] >= w[1]) {
                return bad("cell vertices must be nonempty and strictly increasing");
            }
            if c.dim == 0 {
                if c.vertices.len() != 1 || !c.facets.is_empty() {
                    return bad("a 0-cell is a single vertex without facets");
                }
                continue;
            }
            if c.facets.len() < c.dim + 1 {
                return bad("a cell of dimension d needs at least d+1 facets");
            }
            for &f in &c.facets {
                let g = &self.cells[f];
                if g.dim + 1 != c.dim {
                    return bad("lattice is not graded");
                }
                if !g.vertices.iter().all(|v| c.vertices.binary_search(v).is_ok()) || g.vertices.len() >= c.vertices.len() {
                    return bad("vertex sets of covers must nest");
                }
            }
        }
        Ok(())
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Number of cells of each dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let top = self.cells.last().map_or(0, |c| c.dim + 1);
        let mut f = vec![0; top];
        for c in &self.cells {
            f[c.dim] += 1;
        }
        f
    }

    /// Sorted list of all vertex labels.
    pub fn vertices(&self) -> Vec<Vertex> {
        self.cells.iter().filter(|c| c.dim == 0).map(|c| c.vertices[0]).collect()
    }

    /// Cells not covered by any other cell.
    pub fn maximal_cells(&self) -> Vec<usize> {
        let mut covered = vec![false; self.cells.len()];
        for c in &self.cells {
            for &f in &c.facets {
                covered[f] = true;
            }
        }
        (0..self.cells.len()).filter(|&i| !covered[i]).collect()
    }

    /// Pulling triangulation of every cell. `order` lists the vertices to
    /// pull first; the remaining vertices follow by ascending label.
    /// A cell that is a simplex stays unsubdivided; any other cell becomes
    /// the cone from its earliest vertex over the triangulations of its
    /// facets that miss that vertex.
    pub fn pulling_cells(&self, order: &[Vertex]) -> Result<Vec<Vec<Vec<Vertex>>>, ComplexError> {
        let verts = self.vertices();
        let mut rank: HashMap<Vertex, usize> = HashMap::with_capacity(verts.len());
        for (i, &v) in order.iter().enumerate() {
            if verts.binary_search(&v).is_err() {
                return Err(ComplexError::InvalidArgument(format!("pull order names unknown vertex {v}")));
            }
            if rank.insert(v, i).is_some() {
                return Err(ComplexError::InvalidArgument(format!("pull order repeats vertex {v}")));
            }
        }
        let key = |v: Vertex| rank.get(&v).copied().map_or((1, v as usize), |r| (0, r));
        let mut tri: Vec<Vec<Vec<Vertex>>> = Vec::with_capacity(self.cells.len());
        for c in &self.cells {
            if c.vertices.len() == c.dim + 1 {
                tri.push(vec![c.vertices.clone()]);
                continue;
            }
            let apex = *c.vertices.iter().min_by_key(|&&v| key(v)).expect("nonempty cell");
            let mut out = Vec::new();
            for &f in &c.facets {
                if self.cells[f].vertices.binary_search(&apex).is_ok() {
                    continue;
                }
                for s in &tri[f] {
                    let mut t = s.clone();
                    let p = t.partition_point(|&x| x < apex);
                    t.insert(p, apex);
                    out.push(t);
                }
            }
            tri.push(out);
        }
        Ok(tri)
    }

    /// Pulling triangulation of the whole complex.
    pub fn pulling_triangulation(&self, order: &[Vertex]) -> Result<SimplicialComplex, ComplexError> {
        let tri = self.pulling_cells(order)?;
        let maximal = self.maximal_cells();
        Ok(SimplicialComplex::from_sorted_facets(maximal.into_iter().flat_map(|i| tri[i].iter())))
    }
}

/// A face of the `d`-cube: coordinates in `fixed` are pinned to the bits of
/// `values`, the others vary.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct CubeFace {
    fixed: u32,
    values: u32,
}

fn cube_vertex_label(d: usize, b: u32) -> Vertex {
    d as Vertex + 2 + b
}

fn cube_faces(d: usize) -> Vec<CubeFace> {
    let full = (1u32 << d) - 1;
    let mut out = Vec::new();
    for fixed in 0..=full {
        let mut values = fixed;
        loop {
            out.push(CubeFace { fixed, values });
            if values == 0 {
                break;
            }
            values = (values - 1) & fixed;
        }
    }
    out
}

fn cube_face_vertices(d: usize, f: CubeFace) -> Vec<Vertex> {
    (0..1u32 << d).filter(|&b| b & f.fixed == f.values).map(|b| cube_vertex_label(d, b)).collect()
}

fn cube_face_facets(d: usize, f: CubeFace) -> impl Iterator<Item = CubeFace> {
    (0..d).filter(move |&i| f.fixed >> i & 1 == 0).flat_map(move |i| {
        [0, 1].map(|s| CubeFace { fixed: f.fixed | 1 << i, values: f.values | s << i })
    })
}

/// Face lattice of the `d`-cube. Vertex with coordinate bitmask `b` gets
/// label `d + 2 + b`, so labels run over `d+2 ..= 2^d + d + 1`.
pub fn cube_lattice(d: usize) -> Result<PolytopalComplex, ComplexError> {
    if d == 0 || d > 16 {
        return Err(ComplexError::InvalidArgument("cube lattice needs 1 <= d <= 16".into()));
    }
    let faces = cube_faces(d);
    let index: HashMap<CubeFace, usize> = faces.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let cells = faces
        .iter()
        .map(|&f| Cell {
            vertices: cube_face_vertices(d, f),
            dim: d - f.fixed.count_ones() as usize,
            facets: cube_face_facets(d, f).map(|g| index[&g]).collect(),
        })
        .collect();
    PolytopalComplex::new(cells)
}

/// Label of the antipode `i'` of cross-polytope vertex `i` inside the
/// antiprism: cube labels occupy `d+2 ..= 2^d+d+1`, antipodes come next.
pub fn antiprism_prime(d: usize, i: Vertex) -> Vertex {
    (1u32 << d) + d as Vertex + 1 + i
}

fn validate_pull_order(d: usize, order: &[Vertex]) -> Result<(), ComplexError> {
    let lo = cube_vertex_label(d, 0);
    let hi = cube_vertex_label(d, (1 << d) - 1);
    let mut seen = vec![false; 1 << d];
    for &v in order {
        if v < lo || v > hi || std::mem::replace(&mut seen[(v - lo) as usize], true) {
            return Err(ComplexError::InvalidArgument(format!("pull order must be a permutation of {lo}..={hi}")));
        }
    }
    if order.len() != 1 << d {
        return Err(ComplexError::InvalidArgument(format!("pull order must be a permutation of {lo}..={hi}")));
    }
    Ok(())
}

/// Sorted vertices of the cross-polytope face chosen by `(set, signs)`.
fn cross_face(d: usize, set: u32, signs: u32) -> Vec<Vertex> {
    let mut v: Vec<Vertex> = (0..d)
        .filter(|&i| set >> i & 1 == 1)
        .map(|i| {
            let x = i as Vertex + 1;
            if signs >> i & 1 == 1 {
                antiprism_prime(d, x)
            } else {
                x
            }
        })
        .collect();
    v.sort_unstable();
    v
}

/// Face lattice of the antiprism over the `d`-dimensional cross-polytope.
/// Cells are joins `τ ∗ ρ` where `τ` is a face of the cross-polytope
/// boundary (possibly empty) and `ρ` a face (possibly empty) of the cube face
/// dual to `τ`.
pub fn antiprism_complex(d: usize) -> Result<PolytopalComplex, ComplexError> {
    if !(2..=12).contains(&d) {
        return Err(ComplexError::InvalidArgument("antiprism needs 2 <= d <= 12".into()));
    }
    // A cross-polytope face is (set, signs); its dual cube face fixes the
    // coordinates in `set` to `signs`. None stands for the empty cube face.
    type Key = (u32, u32, Option<CubeFace>);
    let full = (1u32 << d) - 1;
    let mut keys: Vec<Key> = Vec::new();
    let cubes = cube_faces(d);
    for set in 0..=full {
        let mut signs = set;
        loop {
            if set != 0 {
                keys.push((set, signs, None));
            }
            for &c in &cubes {
                if c.fixed & set == set && c.values & set == signs {
                    keys.push((set, signs, Some(c)));
                }
            }
            if signs == 0 {
                break;
            }
            signs = (signs - 1) & set;
        }
    }
    let index: HashMap<Key, usize> = keys.iter().enumerate().map(|(i, &k)| (k, i)).collect();
    let cells = keys
        .iter()
        .map(|&(set, signs, cube)| {
            let mut vertices = cross_face(d, set, signs);
            let mut facets = Vec::new();
            for i in 0..d {
                if set >> i & 1 == 1 {
                    let s2 = set & !(1 << i);
                    if s2 != 0 || cube.is_some() {
                        facets.push(index[&(s2, signs & s2, cube)]);
                    }
                }
            }
            let dim = match cube {
                Some(c) => {
                    vertices.extend(cube_face_vertices(d, c));
                    vertices.sort_unstable();
                    if c.fixed == full {
                        if set != 0 {
                            facets.push(index[&(set, signs, None)]);
                        }
                    } else {
                        facets.extend(cube_face_facets(d, c).map(|g| index[&(set, signs, Some(g))]));
                    }
                    set.count_ones() as usize + d - c.fixed.count_ones() as usize
                }
                None => set.count_ones() as usize - 1,
            };
            Cell { vertices, dim, facets }
        })
        .collect();
    PolytopalComplex::new(cells)
}

/// Facets of the pulling triangulation of the antiprism, computed as
/// `σ ∗ T(σ̂)` for each maximal cell, where `T` pulls the cube lattice.
pub(crate) fn antiprism_facets(d: usize, pull_order: Option<&[Vertex]>) -> Result<Vec<Vec<Vertex>>, ComplexError> {
    if !(2..=12).contains(&d) {
        return Err(ComplexError::InvalidArgument("antiprism needs 2 <= d <= 12".into()));
    }
    let default: Vec<Vertex>;
    let order = match pull_order {
        Some(o) => o,
        None => {
            default = (0..1u32 << d).map(|b| cube_vertex_label(d, b)).collect();
            &default
        }
    };
    validate_pull_order(d, order)?;
    let cube = cube_lattice(d)?;
    let tri = cube.pulling_cells(order)?;
    let lookup: HashMap<&[Vertex], usize> =
        cube.cells().iter().enumerate().map(|(i, c)| (c.vertices.as_slice(), i)).collect();
    let full = (1u32 << d) - 1;
    let mut out: Vec<Vec<Vertex>> = tri[lookup[cube_face_vertices(d, CubeFace { fixed: 0, values: 0 }).as_slice()]].clone();
    for set in 1..=full {
        let mut signs = set;
        loop {
            let sigma = cross_face(d, set, signs);
            let dual = cube_face_vertices(d, CubeFace { fixed: set, values: signs });
            for s in &tri[lookup[dual.as_slice()]] {
                let mut f = sigma.clone();
                f.extend_from_slice(s);
                f.sort_unstable();
                out.push(f);
            }
            if signs == 0 {
                break;
            }
            signs = (signs - 1) & set;
        }
    }
    Ok(out)
}

/// Pulling triangulation of the antiprism over the `d`-dimensional
/// cross-polytope. Cross-polytope vertices are `1..=d` and
/// [`antiprism_prime`]`(d, i)`; cube vertices are `d+2 ..= 2^d+d+1`. The
/// default pull order is ascending label; a custom order must permute the
/// cube labels.
pub fn antiprism_triangulation(d: usize, pull_order: Option<&[Vertex]>) -> Result<SimplicialComplex, ComplexError> {
    Ok(SimplicialComplex::from_sorted_facets(antiprism_facets(d, pull_order)?))
}
