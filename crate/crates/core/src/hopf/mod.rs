//! Coproducts, convolution, antipodes and the braiding checks.

mod antipode;
mod braid;
mod coproduct;

pub use antipode::{
    antipode_unknowns, convolution, milnor_moore_antipode, milnor_moore_antipode_truncated,
    normalization, solve_antipode, AntipodeSolution, Bialgebra, CoproductKind, ProductKind,
};
pub use braid::{
    bs_matrix, bsw, bw_matrix, form_convolution_inverse_check, qt_axiom_check, rmatrix_sides,
    solve_rmatrix, solve_rmatrix_with, symmetrize, yb_det, yb_matrix, yb_triangular, QtAxiomReport, RMatrix,
    RMatrixSolution, Triangularity, YBMatrix,
};
pub use coproduct::{counit_unit_slot, gantipode, gantipode_slot, gco, gco_blade, gco_slot};
