//! Generalized Gabidulin codes through their standard-form generator
//! matrices.
//!
//! The non-systematic part `X` of a generator `(I_k | X)` of a generalized
//! Gabidulin code is a (q,s)-Cauchy matrix: `X_{ij} = π_s(α_i β_j) + B_{ij}`.
//! This crate builds the field tower `F_p ⊂ F_q ⊂ F_{q^m}` with its trace
//! machinery, constructs and recognizes Gabidulin codes, converts between
//! evaluation points and Cauchy parameters, and produces Hankel and Toeplitz
//! instances.

pub mod error;
pub mod ext_linalg;
pub mod field_tower;
pub mod gabidulin;
pub mod q_cauchy;
pub mod text;
pub mod verify;

pub use error::{Error, Result, Violation};
pub use ext_linalg::{BaseMatrix, ExtMatrix, Rref};
pub use field_tower::{ExtElement, FieldTower, SubspaceFq};
pub use gabidulin::{CodeHandle, GabidulinSpec, LinearizedPoly, Recognition, Verdict};
pub use q_cauchy::{QCauchyParams, StructuredCode};
