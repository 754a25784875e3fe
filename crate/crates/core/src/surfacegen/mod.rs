//! Explicit constructions of the surfaces: linear systems with assigned base
//! points on `P^2` and Hirzebruch surfaces, implicitization, and the
//! Enriques surface via its projection to `P^4`.

mod adjoint;
mod enriques;
mod family;
mod implicit;
mod model;
mod spec;
mod systems;

pub use adjoint::{adjoint_point, adjoint_sections, rational_points};
pub use enriques::{
    enriques_betti, enriques_pipeline, hr_module, hr_module_betti, projected_betti, EnriquesConstruction, HrModule,
    ENRIQUES_ATTEMPTS,
};
pub use family::{accepted_families, all_families, family, family_of_spec, rejected_families, Family, FamilyKind};
pub use implicit::{
    forms_through_points, h0_twist, ideal_surface_numbers, ideal_through_points, implicitize, pullback_matrix,
    relations_in_degree, surface_numbers, SurfaceNumbers,
};
pub use model::{construct_family, construct_rational, rational_map, with_retries, SurfaceModel, MAX_ATTEMPTS};
pub use spec::{blowup_invariants, intersection_data, Ambient, LinearSystemSpec};
pub use systems::{hirzebruch_system_basis, plane_system_basis, random_points, system_basis, PointConfig, RationalMap};
