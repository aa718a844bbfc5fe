//! Exact symbolic kernel for Grassmann and Clifford Hopf algebras.
//!
//! The crate is organised bottom-up: [`scalar`] provides the coefficient
//! field, [`exterior`] the Grassmann algebra on blades, [`tensor`] the slot
//! calculus on tensor polynomials, [`clifford`] the bilinear-form deformations
//! and [`hopf`] the coproducts, antipodes and braiding checks built on top.

pub mod clifford;
pub mod error;
pub mod exterior;
pub mod hopf;
pub mod matrix;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use scalar::{Poly, ScalarRF, SolveKind, SolveResult, Sym};
pub use exterior::{basis, Blade, EndoMatrix, Multivector};
pub use tensor::TensorPoly;
pub use clifford::{AlgebraContext, BilinearForm};
pub use hopf::{CoproductKind, ProductKind};
