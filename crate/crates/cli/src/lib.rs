//! Expression language, evaluator and reproduction harness for the gebra kernel.

pub mod context;
pub mod dsl;
pub mod eval;
pub mod json;
pub mod repro;
