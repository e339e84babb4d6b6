//! Exact rational polyhedral computations: LP feasibility, double
//! description, cones and polyhedra.

pub mod cone;
pub mod dd;
pub mod polyhedron;
pub mod rational;
pub mod simplex;

pub use cone::RationalCone;
pub use dd::{max_dim, ConeGenerators};
pub use polyhedron::{Halfspace, RationalPolyhedron};
pub use rational::{QVector, Rational};
