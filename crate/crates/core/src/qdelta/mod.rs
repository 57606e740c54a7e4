//! Schur's ring `Delta`: the quotient of `Z[q_1, q_2, ...]` by the coefficients
//! of `q(U) q(-U) = 1`, where `q(U) = sum q_k U^k` and `U` stands for `T^{1/2}`.
//!
//! Elements are stored in the square-free monomial basis. Over the rationals
//! the ring is also the polynomial ring on the primitives `x_k`, defined by
//! `log q(U) = sum_k 2 x_k U^{2k+1} / (2k+1)`; [`q_to_x`] and [`x_to_q`]
//! translate between the two descriptions. The `x_k` play the role of the odd
//! power sums `p_{2k+1}`, which fixes the inner product: distinct
//! `x`-monomials are orthogonal and `<x^m, x^m> = z_lambda 2^{-l(lambda)}`
//! for the odd partition `lambda` read off from `m`.

mod element;
mod hall_littlewood;
mod inner;
mod partition;
mod primitives;
mod tensor;

pub use element::{q_reduce, reduce_monomial, QElement};
pub use hall_littlewood::{hl_generating, lambda_duality_check, DualityWitness, HLSpecialization};
pub use inner::{
    classical_q, gram_matrix, gram_schmidt_q, inner_product, inner_product_x, leading_minors, self_duality_check,
    SelfDualityWitness,
};
pub use partition::StrictPartition;
pub use primitives::{
    newton_identity_check, q_in_x, q_to_x, x_in_q, x_to_q, x_to_q_polynomial, LocalQElement, NewtonWitness,
};
pub use tensor::{coproduct, Tensor};

/// Display name of the primitive `x_k`.
pub fn x_name(k: u32) -> alloc::string::String {
    alloc::format!("x{k}")
}
