//! Exact computer algebra around Schur's ring of Q-functions.
//!
//! The crate is `no_std` (it needs `alloc`) and is organised bottom-up:
//!
//! * [`exactring`]: rationals, sparse Laurent polynomials, truncated power series.
//! * [`qdelta`]: the Hopf algebra generated by the `q_k`, its square-free basis,
//!   primitives `x_k`, inner product and classical Q-functions.
//! * [`fockvir`]: twisted Heisenberg/Virasoro operators on `Q[x_0, x_1, ...]`,
//!   the Virasoro recursion for intersection numbers and the tau function.
//! * [`fgl`]: formal group laws built from exponentials, including the
//!   Kontsevich-Witten law over `Delta[q_1^{-1}]` and the epsilon law.
//! * [`asympt`]: double precision evaluation of `exp_{1/2}`, `sin_{1/2}`,
//!   `epsilon` and the associated real group laws.
//! * [`wittvoa`]: big Witt vectors, ghost coordinates, the trace pairing and
//!   vertex operators on symmetric functions and lattice modules.
#![no_std]

extern crate alloc;

pub mod asympt;
pub mod error;
pub mod exactring;
pub mod fgl;
pub mod fockvir;
pub mod qdelta;
pub mod wittvoa;

pub use error::{Error, Result};
pub use exactring::{Monomial, Poly, Rational, Ring, Series};
