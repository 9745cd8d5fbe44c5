//! Standard complexes, operators on complexes, and the named extremal
//! examples.

mod named;
mod ops;
mod pipeline;
mod polytopal;
mod sigma;

pub use named::{
    build_sigma2_sigma3prime, build_two_optima, check_poincare, dunce_hat, poincare, POINCARE_F, POINCARE_VALENCES,
};
pub use ops::{
    barycenter_id, barycentric_subdivision, cone, cross_polytope, one_point_suspension, product_with_interval,
    simplex, simplex_boundary, simplicial_neighborhood, stack_facet, stellar_subdivision, suspension,
    suspension_with,
};
pub use pipeline::{
    collar_boundary, pipeline_5manifold, PipelineError, PipelineStage, COLLAR_BOUNDARY_F, COLLAR_F, CONE_APEX,
    DELETED_VERTEX, SD_SIGMA5_F, SIGMA5_F,
};
pub use polytopal::{antiprism_complex, antiprism_prime, antiprism_triangulation, cube_lattice, Cell, PolytopalComplex};
pub use sigma::{
    build_e, build_sigma, build_sigma_with_order, sigma_facets, sigma_identification, sigma_stack_vertex,
    sigma_unidentified_facets,
};
