//! Reproduction targets and their golden expectations.

use std::fmt;
use std::path::Path;

use gebra_core::clifford::{AlgebraContext, BilinearForm};
use gebra_core::exterior::{endo_matrix, Multivector};
use gebra_core::hopf::{
    bs_matrix, bsw, bw_matrix, form_convolution_inverse_check, gantipode, milnor_moore_antipode,
    milnor_moore_antipode_truncated, normalization, qt_axiom_check, solve_antipode, solve_rmatrix, symmetrize,
    yb_det, yb_triangular, CoproductKind, ProductKind,
};
use gebra_core::tensor::tensor;
use gebra_core::{Error, Matrix, ScalarRF, TensorPoly};
use thiserror::Error as ThisError;

use crate::dsl::{parse, parse_list};
use crate::eval::eval_scalar;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Antipodes,
    BwBs,
    Rmatrix,
    Qybe,
    YbMatrix,
    QtAxioms,
    MmRecursion,
}

impl Target {
    pub const ALL: [Target; 7] = [
        Target::Antipodes,
        Target::BwBs,
        Target::Rmatrix,
        Target::Qybe,
        Target::YbMatrix,
        Target::QtAxioms,
        Target::MmRecursion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Antipodes => "antipodes",
            Target::BwBs => "bw-bs",
            Target::Rmatrix => "rmatrix",
            Target::Qybe => "qybe",
            Target::YbMatrix => "yb-matrix",
            Target::QtAxioms => "qt-axioms",
            Target::MmRecursion => "mm-recursion",
        }
    }

    /// The golden file shipped with the binary.
    pub fn embedded_golden(self) -> &'static str {
        match self {
            Target::Antipodes => include_str!("../golden/antipodes.txt"),
            Target::BwBs => include_str!("../golden/bw-bs.txt"),
            Target::Rmatrix => include_str!("../golden/rmatrix.txt"),
            Target::Qybe => include_str!("../golden/qybe.txt"),
            Target::YbMatrix => include_str!("../golden/yb-matrix.txt"),
            Target::QtAxioms => include_str!("../golden/qt-axioms.txt"),
            Target::MmRecursion => include_str!("../golden/mm-recursion.txt"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Matrix(Matrix),
    Bool(bool),
    Scalar(ScalarRF),
    Note(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub name: String,
    pub item: Item,
}

#[derive(Clone, Debug)]
pub struct Report {
    pub target: Target,
    pub dim: usize,
    pub entries: Vec<Entry>,
}

impl Report {
    fn new(target: Target, dim: usize) -> Self {
        Report { target, dim, entries: Vec::new() }
    }

    fn push(&mut self, name: &str, item: Item) {
        self.entries.push(Entry { name: name.to_string(), item });
    }

    pub fn get(&self, name: &str) -> Option<&Item> {
        self.entries.iter().find(|e| e.name == name).map(|e| &e.item)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} (dim {})", self.target.name(), self.dim)?;
        for e in &self.entries {
            match &e.item {
                Item::Matrix(m) => writeln!(f, "{} =\n{m}", e.name)?,
                Item::Bool(b) => writeln!(f, "{}: {b}", e.name)?,
                Item::Scalar(s) => writeln!(f, "{} = {s}", e.name)?,
                Item::Note(s) => writeln!(f, "{}: {s}", e.name)?,
            }
        }
        Ok(())
    }
}

#[derive(Debug, ThisError)]
pub enum ReproError {
    #[error(transparent)]
    Algebra(#[from] Error),
    #[error("{0}")]
    NoSolution(String),
}

fn both_symmetric(n: usize) -> std::collections::BTreeMap<gebra_core::Sym, ScalarRF> {
    let mut m = symmetrize("b", n);
    m.extend(symmetrize("p", n));
    m
}

fn normalized_bc(ctx: &AlgebraContext) -> Result<Matrix, ReproError> {
    let sol = solve_antipode(ProductKind::Clifford, CoproductKind::Clifford, ctx)?;
    let s = sol
        .antipode
        .ok_or_else(|| ReproError::NoSolution(format!("bi-convolution antipode: {:?}", sol.solution.kind)))?;
    Ok(s.scale(&normalization(ctx)?).into_matrix())
}

fn general_triple(n: usize) -> Result<TensorPoly, Error> {
    tensor(&[Multivector::general(n, "x"), Multivector::general(n, "y"), Multivector::general(n, "z")])
}

/// Runs one target against a context.
pub fn run(target: Target, ctx: &AlgebraContext) -> Result<Report, ReproError> {
    let n = ctx.dim();
    let mut r = Report::new(target, n);
    match target {
        Target::Antipodes => {
            for (name, m, d) in [
                ("S_GR", ProductKind::Wedge, CoproductKind::Grassmann),
                ("S_CL", ProductKind::Clifford, CoproductKind::Grassmann),
            ] {
                let sol = solve_antipode(m, d, ctx)?;
                let s = sol
                    .antipode
                    .ok_or_else(|| ReproError::NoSolution(format!("{name}: {:?}", sol.solution.kind)))?;
                r.push(name, Item::Matrix(s.into_matrix()));
            }
            r.push("N", Item::Scalar(normalization(ctx)?));
            r.push("N*S_BC", Item::Matrix(normalized_bc(ctx)?));
        }
        Target::BwBs => {
            r.push("BW", Item::Matrix(bw_matrix(ctx.b()).into_matrix()));
            r.push("S_gr", Item::Matrix(endo_matrix(n, gantipode).into_matrix()));
            r.push("BS", Item::Matrix(bs_matrix(ctx.b()).into_matrix()));
        }
        Target::Rmatrix => {
            let sol = solve_rmatrix(ctx)?;
            let rm = sol
                .r
                .ok_or_else(|| ReproError::NoSolution(format!("R: {:?}", sol.solution.kind)))?;
            r.push("R", Item::Matrix(rm.matrix().clone()));
            r.push("residual vanishes", Item::Bool(sol.residual_zero));
            r.push("convolutive inverse", Item::Bool(form_convolution_inverse_check(ctx.bi())));
        }
        Target::Qybe => {
            let xyz = general_triple(n)?;
            let g = |t: &TensorPoly, i| t.gswitch(i);
            let lhs = g(&g(&g(&xyz, 1)?, 2)?, 1)?;
            let rhs = g(&g(&g(&xyz, 2)?, 1)?, 2)?;
            r.push("gswitch braid", Item::Bool(lhs == rhs));
            let bw = bw_matrix(ctx.b());
            let s = |t: &TensorPoly, i| bsw(t, i, &bw);
            let lhs = s(&s(&s(&xyz, 1)?, 2)?, 1)?;
            let rhs = s(&s(&s(&xyz, 2)?, 1)?, 2)?;
            r.push("Bsw braid", Item::Bool(lhs == rhs));
        }
        Target::YbMatrix => {
            r.push("det", Item::Scalar(yb_det(ctx.b())?));
            let half = ScalarRF::from_rational(gebra_core::scalar::rational(1, 2));
            let sym = BilinearForm::new(ctx.b().matrix().add(ctx.b().transpose().matrix())?.scale(&half))?;
            r.push("triangular when symmetric", Item::Bool(yb_triangular(&sym)?.triangular));
            let t = yb_triangular(ctx.b())?;
            r.push("triangular", Item::Bool(t.triangular));
            if let Some((i, j, v)) = t.witness {
                r.push("witness", Item::Note(format!("({},{}) of the square minus 1 is {v}", i + 1, j + 1)));
            }
        }
        Target::QtAxioms => {
            let rep = qt_axiom_check(&BilinearForm::symbolic(n, "R"));
            r.push("R", Item::Matrix(rep.r.matrix().clone()));
            r.push("RS", Item::Matrix(rep.rs.matrix().clone()));
            r.push("RSS", Item::Matrix(rep.rss.matrix().clone()));
            r.push("SR", Item::Matrix(rep.sr.matrix().clone()));
            r.push("RSS = R", Item::Bool(rep.rss_equals_r()));
            r.push("RS = SR", Item::Bool(rep.rs_equals_sr()));
        }
        Target::MmRecursion => {
            let (m, d) = (ProductKind::Clifford, CoproductKind::Clifford);
            let grounded = match milnor_moore_antipode(m, d, ctx) {
                Ok(_) => true,
                Err(Error::RecursionNotGrounded { .. }) => false,
                Err(e) => return Err(e.into()),
            };
            r.push("strict recursion grounded", Item::Bool(grounded));
            let sym = ctx.subst(&both_symmetric(n))?;
            let same_sym = milnor_moore_antipode_truncated(m, d, &sym).into_matrix() == normalized_bc(&sym)?;
            r.push("recursion matches when symmetric", Item::Bool(same_sym));
            let mm = milnor_moore_antipode_truncated(m, d, ctx).into_matrix();
            r.push("recursion matches", Item::Bool(mm == normalized_bc(ctx)?));
            r.push("recursion", Item::Matrix(mm));
        }
    }
    Ok(r)
}

#[derive(Debug, ThisError)]
#[error("golden line {line}: {message}")]
pub struct GoldenError {
    pub line: usize,
    pub message: String,
}

/// Parsed golden expectations.
///
/// ```text
/// matrix S_CL
/// 1, 0, 0, b[1,2] - b[2,1]
/// ...
///
/// bool gswitch braid = true
/// scalar det = 1
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Golden {
    pub entries: Vec<Entry>,
}

fn golden_err(line: usize, message: impl Into<String>) -> GoldenError {
    GoldenError { line, message: message.into() }
}

fn golden_scalar(text: &str, line: usize) -> Result<ScalarRF, GoldenError> {
    let e = parse(text).map_err(|e| golden_err(line, e.to_string()))?;
    eval_scalar(&e).map_err(|e| golden_err(line, e.to_string()))
}

impl Golden {
    pub fn parse(src: &str) -> Result<Golden, GoldenError> {
        let mut entries = Vec::new();
        let mut lines = src.lines().enumerate().map(|(k, l)| (k + 1, l.trim())).peekable();
        while let Some((line, text)) = lines.next() {
            if text.is_empty() || text.starts_with('#') {
                continue;
            }
            if let Some(name) = text.strip_prefix("matrix ") {
                let mut rows = Vec::new();
                while let Some(&(line, row)) = lines.peek() {
                    if row.is_empty() {
                        break;
                    }
                    lines.next();
                    let exprs = parse_list(row).map_err(|e| golden_err(line, e.to_string()))?;
                    let vals = exprs
                        .iter()
                        .map(|e| eval_scalar(e).map_err(|e| golden_err(line, e.to_string())))
                        .collect::<Result<Vec<_>, _>>()?;
                    rows.push(vals);
                }
                let m = Matrix::from_rows(rows).map_err(|e| golden_err(line, e.to_string()))?;
                entries.push(Entry { name: name.trim().to_string(), item: Item::Matrix(m) });
            } else if let Some(rest) = text.strip_prefix("bool ") {
                let (name, v) = rest.rsplit_once('=').ok_or_else(|| golden_err(line, "expected 'bool NAME = true|false'"))?;
                let v = match v.trim() {
                    "true" => true,
                    "false" => false,
                    other => return Err(golden_err(line, format!("expected true or false, found '{other}'"))),
                };
                entries.push(Entry { name: name.trim().to_string(), item: Item::Bool(v) });
            } else if let Some(rest) = text.strip_prefix("scalar ") {
                let (name, v) = rest.split_once('=').ok_or_else(|| golden_err(line, "expected 'scalar NAME = EXPR'"))?;
                entries.push(Entry { name: name.trim().to_string(), item: Item::Scalar(golden_scalar(v, line)?) });
            } else {
                return Err(golden_err(line, format!("expected 'matrix', 'bool' or 'scalar', found '{text}'")));
            }
        }
        Ok(Golden { entries })
    }

    pub fn load(target: Target, dir: Option<&Path>) -> Result<Golden, GoldenError> {
        match dir {
            None => Golden::parse(target.embedded_golden()),
            Some(d) => {
                let path = d.join(format!("{}.txt", target.name()));
                let src = std::fs::read_to_string(&path)
                    .map_err(|e| golden_err(0, format!("{}: {e}", path.display())))?;
                Golden::parse(&src)
            }
        }
    }

    /// Compares a report against the expectations, stopping at the first mismatch.
    pub fn check(&self, report: &Report) -> Result<usize, Mismatch> {
        for want in &self.entries {
            let got = report.get(&want.name).ok_or_else(|| Mismatch {
                name: want.name.clone(),
                detail: "missing from the report".into(),
            })?;
            if let Some(detail) = diff(&want.item, got) {
                return Err(Mismatch { name: want.name.clone(), detail });
            }
        }
        Ok(self.entries.len())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mismatch {
    pub name: String,
    pub detail: String,
}

impl fmt::Display for Mismatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.name, self.detail)
    }
}

fn diff(want: &Item, got: &Item) -> Option<String> {
    match (want, got) {
        (Item::Matrix(w), Item::Matrix(g)) => {
            if (w.rows(), w.cols()) != (g.rows(), g.cols()) {
                return Some(format!("expected {}x{}, got {}x{}", w.rows(), w.cols(), g.rows(), g.cols()));
            }
            w.entries().find(|(i, j, v)| g.get(*i, *j) != *v).map(|(i, j, v)| {
                format!("entry ({},{})\n  - expected: {v}\n  + got:      {}", i + 1, j + 1, g.get(i, j))
            })
        }
        (Item::Bool(w), Item::Bool(g)) if w != g => Some(format!("\n  - expected: {w}\n  + got:      {g}")),
        (Item::Scalar(w), Item::Scalar(g)) if w != g => Some(format!("\n  - expected: {w}\n  + got:      {g}")),
        (Item::Bool(_), Item::Bool(_)) | (Item::Scalar(_), Item::Scalar(_)) => None,
        _ => Some("expected and reported entries have different kinds".into()),
    }
}

/// Goldens describe the two-dimensional symbolic context only.
pub fn golden_applies(ctx: &AlgebraContext) -> bool {
    *ctx == AlgebraContext::symbolic(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_goldens_parse() {
        for t in Target::ALL {
            let g = Golden::parse(t.embedded_golden()).unwrap();
            assert!(!g.entries.is_empty(), "{}", t.name());
        }
    }

    #[test]
    fn golden_comparison_is_canonical() {
        let g = Golden::parse("matrix M\nb[1,2]*p[2,1], 0\n0, (1 - x)/(1 - x)\n\nscalar s = 2/4\n").unwrap();
        let mut r = Report::new(Target::Antipodes, 2);
        let m = Matrix::from_rows(vec![
            vec![
                gebra_core::scalar::sym2("p", 2, 1) * gebra_core::scalar::sym2("b", 1, 2),
                ScalarRF::zero(),
            ],
            vec![ScalarRF::zero(), ScalarRF::one()],
        ])
        .unwrap();
        r.push("M", Item::Matrix(m));
        r.push("s", Item::Scalar(gebra_core::scalar::ScalarRF::from_rational(gebra_core::scalar::rational(1, 2))));
        assert_eq!(g.check(&r), Ok(2));
    }

    #[test]
    fn first_mismatch_is_reported() {
        let g = Golden::parse("bool a = true\nbool b = true\nscalar c = 1\n").unwrap();
        let mut r = Report::new(Target::Qybe, 2);
        r.push("a", Item::Bool(true));
        r.push("b", Item::Bool(false));
        let m = g.check(&r).unwrap_err();
        assert_eq!(m.name, "b");
        assert!(m.detail.contains("expected: true"));
    }

    #[test]
    fn malformed_goldens() {
        assert_eq!(Golden::parse("bool a = maybe").unwrap_err().line, 1);
        assert_eq!(Golden::parse("\nmatrix M\n1, (\n").unwrap_err().line, 3);
        assert_eq!(Golden::parse("frob").unwrap_err().line, 1);
    }
}
