//! The twisted Heisenberg and Virasoro action on `Q[x_0, x_1, ...]`, the
//! substitution relating it to the Witten variables `t_k`, and the
//! intersection numbers `<tau_{d_1} ... tau_{d_n}>` it constrains.
//!
//! `x_k` has weight `2k+1`, twice the mode number of `alpha_{-(k+1/2)}`.

mod intersection;
mod jozefiak;
mod modes;
mod tau;
mod virasoro;

pub use intersection::{genus_of, genus_zero_closed_form, intersection_numbers, Entry, IntersectionTable, Provenance};
pub use jozefiak::{jozefiak_map, shift_argument, shifted_l, shifted_l_with, Convention, CONVENTIONS, DILATON_SHIFT};
pub use modes::{apply_alpha, apply_alpha_sqrt2, heisenberg_check, HalfInt};
pub use tau::{annihilation_check, annihilation_check_with, tau_assemble, AnnihilationWitness, TauSeries, V_VARIABLE};
pub use virasoro::{apply_l, virasoro_commutator_check, x_monomials, CommutatorWitness, VirasoroOp};

/// Weight of `x_k` (and of `t_k`).
pub fn x_weight(k: u32) -> i64 {
    2 * k as i64 + 1
}
