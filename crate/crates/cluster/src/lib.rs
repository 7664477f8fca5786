//! Face coordinates, the dual quiver, square moves with their coordinate
//! transformation, and the Hamiltonians of the spectral curve together with
//! exact commutativity checks.

mod bracket;
mod error;
mod hamiltonians;
mod moves;
mod seed;

pub use bracket::{commutativity_check, intersection, poisson_bracket, CommutativityReport};
pub use error::ClusterError;
pub use hamiltonians::{hamiltonians, mutation_invariance_check, Hamiltonians, MutationReport};
pub use moves::{square_move, square_move_mapped, x_transform, zero_face_offsets, MoveMap};
pub use seed::{face_coordinates, holonomy, mutate_coordinates, mutate_quiver, quiver, reconstruct_weights, ClusterSeed};
