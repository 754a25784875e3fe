//! Graded free resolutions, Betti tables and Koszul homology.

mod algebra;
mod betti;
mod gmatrix;
mod koszul;
mod resolution;

pub use algebra::{image_spans, map_in_degree, shift_by_var, Layout, QuotientAlgebra, TruncatedModule};
pub use betti::{check_property_n, is_acm, regularity, BettiTable};
pub use gmatrix::GradedMatrix;
pub use koszul::{betti_via_koszul, module_betti_via_koszul};
pub use resolution::{
    column_matrix, degree_map, dualize_complex, ext_dimension, graded_syzygies, minimal_columns,
    minimal_resolution, minimal_resolution_of_module, minimize, minimize_presentation, resolve_presentation,
    FreeResolution, GradedModulePresentation,
};
