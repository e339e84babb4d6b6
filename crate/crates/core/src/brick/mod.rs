//! f-antigreedy facets, brick polyhedra, the κ map and normal fans.

pub mod antigreedy;
pub mod kappa;
pub mod polyhedron;

pub use antigreedy::{
    f_antigreedy, in_sc_f, is_admissible, roots_pos, satisfies_sign_conditions, sc_f_facets, AntigreedyTrace,
    LinearFunctional, TraceStep,
};
pub use kappa::{chamber_cone, kappa, normal_fan, roots_in_chamber, KappaMap, NormalCone};
pub use polyhedron::{brick_vector, check_iota_brick_relation, containment_check, BrickPolyhedron, Edge};
