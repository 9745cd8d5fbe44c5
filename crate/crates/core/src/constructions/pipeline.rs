//! The seven-stage construction of a collapsible 5-manifold that is not a
//! ball, starting from the 16-vertex Poincaré homology sphere.

use thiserror::Error;

use crate::complex::{FVector, SimplicialComplex, VertexMap};
use crate::error::ComplexError;
use crate::face::Vertex;

use super::named::check_poincare;
use super::ops::{barycenter_id, barycentric_subdivision, cone, one_point_suspension, product_with_interval, simplicial_neighborhood};

pub const SIGMA5_F: [u64; 6] = [32, 349, 1352, 2471, 2154, 718];
pub const SD_SIGMA5_F: [u64; 6] = [7076, 152540, 807888, 1696344, 1550880, 516960];
pub const COLLAR_F: [u64; 6] = [5013, 72300, 290944, 495912, 383136, 110880];
pub const COLLAR_BOUNDARY_F: [u64; 5] = [5010, 65520, 212000, 252480, 100992];

/// Vertex removed from the homology sphere in stage 2.
pub const DELETED_VERTEX: Vertex = 15;
/// Cone apex of stage 4, which is also the suspension vertex of stage 5.
pub const CONE_APEX: Vertex = 31;

#[derive(Debug, Error)]
pub enum PipelineError {
    #[error("stage {stage} ({name}): {source}")]
    Complex {
        stage: u8,
        name: &'static str,
        #[source]
        source: ComplexError,
    },
    #[error("stage {stage} ({name}): expected {expected}, found {found}")]
    Mismatch { stage: u8, name: &'static str, expected: String, found: String },
}

/// One stage of [`pipeline_5manifold`].
#[derive(Debug, Clone)]
pub struct PipelineStage {
    pub index: u8,
    pub name: &'static str,
    pub complex: SimplicialComplex,
    /// Full f-vector the stage must reproduce, when one is pinned.
    pub expected: Option<FVector>,
    pub notes: String,
}

struct Runner {
    stages: Vec<PipelineStage>,
}

impl Runner {
    fn push(
        &mut self,
        index: u8,
        name: &'static str,
        built: Result<SimplicialComplex, ComplexError>,
        expected: Option<&[u64]>,
        notes: String,
    ) -> Result<&SimplicialComplex, PipelineError> {
        let complex = built.map_err(|source| PipelineError::Complex { stage: index, name, source })?;
        let expected = expected.map(|e| FVector(e.to_vec()));
        if let Some(e) = &expected {
            if complex.f_vector() != *e {
                return Err(PipelineError::Mismatch {
                    stage: index,
                    name,
                    expected: e.to_string(),
                    found: complex.f_vector().to_string(),
                });
            }
        }
        self.stages.push(PipelineStage { index, name, complex, expected, notes });
        Ok(&self.stages.last().expect("just pushed").complex)
    }
}

fn require(stage: u8, name: &'static str, ok: bool, expected: impl ToString, found: impl ToString) -> Result<(), PipelineError> {
    if ok {
        Ok(())
    } else {
        Err(PipelineError::Mismatch { stage, name, expected: expected.to_string(), found: found.to_string() })
    }
}

/// Runs stages 1 to 7 on the given homology sphere. Every stage is checked
/// against its known counts and the run stops at the first mismatch.
///
/// 1. the input, checked by f-vector and valence vector;
/// 2. delete the star of vertex 15 and rename 16 to 15;
/// 3. staircase product with an interval;
/// 4. glue the cone over the boundary with apex 31;
/// 5. one-point suspension at 31 (new apexes 32 and 33, 33 contracted);
/// 6. barycentric subdivision;
/// 7. simplicial neighborhood of the singular path formed by the
///    barycenters of `{31}`, `{31,32}` and `{32}`.
pub fn pipeline_5manifold(poincare: &SimplicialComplex) -> Result<Vec<PipelineStage>, PipelineError> {
    let mut r = Runner { stages: Vec::with_capacity(7) };

    check_poincare(poincare).map_err(|source| PipelineError::Complex { stage: 1, name: "poincare", source })?;
    r.push(1, "poincare", Ok(poincare.clone()), Some(&super::named::POINCARE_F), "valence vector checked".into())?;

    let deleted = poincare.delete_vertex(DELETED_VERTEX).and_then(|k| {
        let mut map = VertexMap::identity(&k);
        map.insert(16, 15);
        k.apply_map(&map)
    });
    let k3 = r.push(2, "poincare_minus_ball", deleted, None, "15 vertices, 64 tetrahedra".into())?;
    require(2, "poincare_minus_ball", k3.num_faces(0) == 15 && k3.num_faces(3) == 64 && k3.max_vertex() == 15,
        "15 vertices and 64 tetrahedra", k3.f_vector())?;

    let product = product_with_interval(k3);
    let k4 = r.push(3, "product_with_interval", product, None, "30 vertices".into())?;
    require(3, "product_with_interval", k4.num_faces(0) == 30, "30 vertices", k4.f_vector())?;

    let glued = k4.boundary_complex().and_then(|b| cone(&b, CONE_APEX)).and_then(|c| {
        let facets: Vec<Vec<Vertex>> =
            k4.facets().into_iter().chain(c.facets()).map(|f| f.into_vertices()).collect();
        SimplicialComplex::from_facets(facets)
    });
    let l4 = r.push(4, "cone_over_boundary", glued, None, "31 vertices, apex 31".into())?;
    require(4, "cone_over_boundary", l4.num_faces(0) == 31 && l4.is_pure(), "31 vertices, pure", l4.f_vector())?;

    let s5 = one_point_suspension(l4, CONE_APEX);
    let s5 = r.push(5, "one_point_suspension", s5, Some(&SIGMA5_F), "apexes 32, 33; edge {31,33} contracted".into())?;
    require(5, "one_point_suspension", s5.euler_characteristic() == 0, 0, s5.euler_characteristic())?;
    let singular: Vec<Vec<Vertex>> = [&[31][..], &[31, 32], &[32]]
        .iter()
        .map(|f| s5.find(f).map(|id| barycenter_id(s5, id)).into_iter().collect())
        .collect();
    require(5, "one_point_suspension", singular.iter().all(|v| v.len() == 1), "faces {31}, {31,32}, {32}",
        "some singular face missing")?;
    let (a, m, b) = (singular[0][0], singular[1][0], singular[2][0]);

    let sd = barycentric_subdivision(s5, 1);
    let sd = r.push(6, "barycentric_subdivision", sd, Some(&SD_SIGMA5_F), format!("singular barycenters {a}, {m}, {b}"))?;

    let collar = SimplicialComplex::from_facets([[a.min(m), a.max(m)], [b.min(m), b.max(m)]])
        .and_then(|path| simplicial_neighborhood(sd, &path));
    r.push(7, "collar", collar, Some(&COLLAR_F), "closed stars of the singular path".into())?;
    Ok(r.stages)
}

/// Boundary of the stage-7 collar, checked against its known f-vector.
pub fn collar_boundary(collar: &SimplicialComplex) -> Result<SimplicialComplex, PipelineError> {
    let name = "collar_boundary";
    let b = collar.boundary_complex().map_err(|source| PipelineError::Complex { stage: 7, name, source })?;
    require(7, name, b.f_vector() == COLLAR_BOUNDARY_F, FVector(COLLAR_BOUNDARY_F.to_vec()), b.f_vector())?;
    Ok(b)
}
