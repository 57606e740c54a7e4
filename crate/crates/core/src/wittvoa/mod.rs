//! Big Witt vectors and their ghost coordinates, the trace pairing on the
//! formal completion, the `Q`-function and root-of-unity subfunctors, and
//! vertex operators on symmetric functions and on lattice Fock spaces.
//!
//! A symmetric function is a [`Poly`](crate::Poly) in the power sums, `p_m`
//! being variable `m`; see [`symfn`] for the conventions in `S (x) S^`.

mod lattice;
mod nilpotent;
mod subfunctor;
pub mod symfn;
mod trace;
mod vertex;
mod witt;
mod ymult;

pub use lattice::{
    grading_audit, lattice_matrix_element, lattice_p, vertex_y_lattice, LatticeData, LatticeFockElement, VertexImage,
    VertexMatrixElement,
};
pub use nilpotent::Nilpotent;
pub use subfunctor::{hl_q_gen, q_subfunctor_check, root_of_unity_check, SubfunctorWitness};
pub use trace::{pairing, pairing_nondegeneracy, trace, NondegeneracyWitness};
pub use vertex::{binomial, matrix_element, vertex_y_powersum, PowerSumVertex, TParameter};
pub use witt::{ghost, ghost_inverse, witt_add, witt_from_ints, witt_mul, witt_neg, GhostVector, WittVector};
pub use ymult::{y_by_generating_function, y_by_power_sums, y_multiplicativity_check, MultiplicativityWitness};
