//! Modules over a finite-dimensional algebra given by its multiplication table.

mod canon;
mod decompose;
mod hom;
mod random;
mod rep;
mod resolution;
mod restrict;

pub use canon::{
    canonical_reps, carve, dual_rep, injective, layers, projective, simple, trace_spaces, CanonicalReps, Carve,
    CarveSpec, Layers,
};
pub(crate) use canon::dual_over;
pub use decompose::{decompose, end_top_dim, is_indecomposable, Decomposition, Summand};
pub use hom::{hom_dim, hom_space, is_isomorphic, EXHAUSTIVE_LIMIT, GRID_LIMIT, RANDOM_TRIALS};
pub use random::{dim_vectors, for_each_rep, random_module};
pub use rep::{cokernel, image, kernel, Morphism, Representation, VertexSpaces};
pub use resolution::{
    ext_dim, factors_through_injective, injective_envelope, is_injective, is_projective, min_resolution,
    projective_cover, projective_dimension, random_extension, stable_hom_dim, Pd, ProjectiveSum,
    ResolutionSegment,
};
pub use restrict::Subcategory;
