//! Context files and numeric bindings.
//!
//! ```text
//! # comments and blank lines are ignored
//! dim: 2
//! B:
//!   1, b[1,2]
//!   0, 1
//! BI:
//!   p[1,1], 0
//!   0, p[2,2]
//! ```
//!
//! Omitted forms default to the symbolic `b[i,j]` and `p[i,j]`. When `dim` is
//! absent it is taken from the first matrix.

use std::collections::BTreeMap;

use gebra_core::clifford::{AlgebraContext, BilinearForm};
use gebra_core::{Matrix, ScalarRF, Sym};
use thiserror::Error;

use crate::dsl::{parse_bindings, parse_list, ParseError};
use crate::eval::{eval_scalar, EvalError};

#[derive(Debug, Error)]
pub enum ContextError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Parse {
        line: usize,
        #[source]
        source: ParseError,
    },
    #[error("line {line}: {source}")]
    Eval {
        line: usize,
        #[source]
        source: EvalError,
    },
    #[error("{0}")]
    Shape(String),
    #[error("bindings: {0}")]
    Bindings(String),
    #[error(transparent)]
    Algebra(#[from] gebra_core::Error),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    B,
    Bi,
}

/// Parses a context file.
pub fn parse_context(src: &str) -> Result<AlgebraContext, ContextError> {
    let mut dim = None;
    let mut section = Section::None;
    let mut b: Vec<Vec<ScalarRF>> = Vec::new();
    let mut bi: Vec<Vec<ScalarRF>> = Vec::new();
    let mut seen = (false, false);

    for (k, raw) in src.lines().enumerate() {
        let line = k + 1;
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            continue;
        }
        if let Some(rest) = text.strip_prefix("dim:") {
            let n = rest.trim().parse::<usize>().map_err(|_| ContextError::Syntax {
                line,
                message: format!("expected a dimension, found '{}'", rest.trim()),
            })?;
            if n == 0 || n > 16 {
                return Err(ContextError::Syntax { line, message: format!("dimension {n} out of range 1..=16") });
            }
            dim = Some(n);
            section = Section::None;
            continue;
        }
        if let Some(rest) = text.strip_prefix("BI:") {
            section = Section::Bi;
            seen.1 = true;
            if !rest.trim().is_empty() {
                bi.push(row(rest, line)?);
            }
            continue;
        }
        if let Some(rest) = text.strip_prefix("B:") {
            section = Section::B;
            seen.0 = true;
            if !rest.trim().is_empty() {
                b.push(row(rest, line)?);
            }
            continue;
        }
        match section {
            Section::B => b.push(row(text, line)?),
            Section::Bi => bi.push(row(text, line)?),
            Section::None => {
                return Err(ContextError::Syntax {
                    line,
                    message: format!("expected 'dim:', 'B:' or 'BI:', found '{text}'"),
                })
            }
        }
    }

    let n = match dim {
        Some(n) => n,
        None if seen.0 && !b.is_empty() => b.len(),
        None if seen.1 && !bi.is_empty() => bi.len(),
        None => return Err(ContextError::Shape("no dimension given and no matrix to infer it from".into())),
    };
    let b = form(seen.0, b, n, "B", "b")?;
    let bi = form(seen.1, bi, n, "BI", "p")?;
    Ok(AlgebraContext::new(b, bi)?)
}

fn row(text: &str, line: usize) -> Result<Vec<ScalarRF>, ContextError> {
    let exprs = parse_list(text).map_err(|source| ContextError::Parse { line, source })?;
    exprs
        .iter()
        .map(|e| eval_scalar(e).map_err(|source| ContextError::Eval { line, source }))
        .collect()
}

fn form(given: bool, rows: Vec<Vec<ScalarRF>>, n: usize, label: &str, sym: &str) -> Result<BilinearForm, ContextError> {
    if !given {
        return Ok(BilinearForm::symbolic(n, sym));
    }
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        let shape = rows.iter().map(|r| r.len().to_string()).collect::<Vec<_>>().join(",");
        return Err(ContextError::Shape(format!(
            "{label} must be {n}x{n}, found {} row(s) of length [{shape}]",
            rows.len()
        )));
    }
    Ok(BilinearForm::new(Matrix::from_rows(rows)?)?)
}

/// Parses `sym = expr, ...` into substitution bindings.
pub fn parse_numeric(src: &str) -> Result<BTreeMap<Sym, ScalarRF>, ContextError> {
    let pairs = parse_bindings(src).map_err(|e| ContextError::Bindings(e.to_string()))?;
    let mut out = BTreeMap::new();
    for (sym, e) in pairs {
        let v = eval_scalar(&e).map_err(|e| ContextError::Bindings(e.to_string()))?;
        if out.insert(sym.clone(), v).is_some() {
            return Err(ContextError::Bindings(format!("{sym} bound twice")));
        }
    }
    Ok(out)
}
