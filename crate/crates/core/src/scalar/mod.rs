//! Exact scalar field: rational functions in named indeterminates over `Q`,
//! and linear solving over that field.

mod linsolve;
mod poly;
mod rational;
mod sym;

pub use linsolve::{solve_linear, SolveKind, SolveResult};
pub use poly::{rational, Monomial, Poly, Rational};
pub use rational::{int, sym1, sym2, ScalarRF};
pub use sym::Sym;
