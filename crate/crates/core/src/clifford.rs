//! Bilinear forms, contraction, Clifford products and the Clifford
//! coproduct.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::exterior::{basis, basis_index, blade_wedge, Blade, Multivector};
use crate::hopf::gco_blade;
use crate::matrix::Matrix;
use crate::scalar::{ScalarRF, Sym};
use crate::tensor::TensorPoly;

/// An `n x n` bilinear form on the generating space, not assumed symmetric.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    matrix: Matrix,
}

impl BilinearForm {
    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() == 0 {
            return Err(Error::Shape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                dim: matrix.rows(),
            });
        }
        Ok(BilinearForm { matrix })
    }

    /// The form with entries `name[i,j]`.
    pub fn symbolic(n: usize, name: &str) -> Self {
        BilinearForm {
            matrix: Matrix::from_fn(n, n, |i, j| {
                ScalarRF::sym(Sym::indexed(name, &[i as u32 + 1, j as u32 + 1]))
            }),
        }
    }

    pub fn zero(n: usize) -> Self {
        BilinearForm {
            matrix: Matrix::zeros(n, n),
        }
    }

    pub fn dim(&self) -> usize {
        self.matrix.rows()
    }

    /// `F(e_i, e_j)` for 1-based generator indices.
    pub fn get(&self, i: usize, j: usize) -> &ScalarRF {
        self.matrix.get(i - 1, j - 1)
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn neg(&self) -> BilinearForm {
        BilinearForm {
            matrix: self.matrix.scale(&ScalarRF::from_int(-1)),
        }
    }

    pub fn transpose(&self) -> BilinearForm {
        BilinearForm {
            matrix: self.matrix.transpose(),
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.matrix == self.matrix.transpose()
    }

    pub fn subst(&self, bindings: &BTreeMap<Sym, ScalarRF>) -> Result<BilinearForm> {
        Ok(BilinearForm {
            matrix: self.matrix.subst(bindings)?,
        })
    }
}

/// Dimension together with the scalar product `B` and coscalar product `BI`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraContext {
    dim: usize,
    b: BilinearForm,
    bi: BilinearForm,
}

impl AlgebraContext {
    pub fn new(b: BilinearForm, bi: BilinearForm) -> Result<Self> {
        if b.dim() != bi.dim() {
            return Err(Error::DimMismatch {
                left: b.dim(),
                right: bi.dim(),
            });
        }
        Ok(AlgebraContext {
            dim: b.dim(),
            b,
            bi,
        })
    }

    /// `B = b[i,j]`, `BI = p[i,j]`.
    pub fn symbolic(n: usize) -> Self {
        AlgebraContext {
            dim: n,
            b: BilinearForm::symbolic(n, "b"),
            bi: BilinearForm::symbolic(n, "p"),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn b(&self) -> &BilinearForm {
        &self.b
    }

    pub fn bi(&self) -> &BilinearForm {
        &self.bi
    }

    pub fn subst(&self, bindings: &BTreeMap<Sym, ScalarRF>) -> Result<AlgebraContext> {
        AlgebraContext::new(self.b.subst(bindings)?, self.bi.subst(bindings)?)
    }
}

fn check_dim(a: usize, b: usize) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::DimMismatch { left: a, right: b })
    }
}

/// `i_{e_g}` on a blade.
fn contract_generator(dim: usize, g: usize, w: Blade, f: &BilinearForm) -> Multivector {
    let mut out = Multivector::zero(dim);
    for (pos, c) in w.indices().enumerate() {
        let coeff = f.get(g, c);
        if coeff.is_zero() {
            continue;
        }
        let signed = if pos % 2 == 0 { coeff.clone() } else { -coeff };
        out.add_term(w.without(c), &signed);
    }
    out
}

fn lc_blades(dim: usize, a: Blade, w: Blade, f: &BilinearForm) -> Multivector {
    if a.grade() > w.grade() {
        return Multivector::zero(dim);
    }
    let mut acc = Multivector::blade(dim, w);
    let gens: Vec<usize> = a.indices().collect();
    for &g in gens.iter().rev() {
        acc = acc.map_linear(|b| contract_generator(dim, g, b, f));
    }
    acc
}

/// Left contraction `i_u(v)` seeded by `i_{e_i}(e_j) = F(e_i, e_j)`.
pub fn lc(u: &Multivector, v: &Multivector, f: &BilinearForm) -> Result<Multivector> {
    check_dim(u.dim(), v.dim())?;
    check_dim(u.dim(), f.dim())?;
    let dim = u.dim();
    Ok(u.map_bilinear(v, |a, b| lc_blades(dim, a, b, f)))
}

fn b_ext_blades(a: Blade, b: Blade, f: &BilinearForm) -> ScalarRF {
    if a.grade() != b.grade() {
        return ScalarRF::zero();
    }
    lc_blades(f.dim(), a, b, f).coeff(Blade::ID)
}

/// The extension `F^∧(u, v) = ε(i_u(v))` of a form to the whole algebra.
pub fn b_ext(u: &Multivector, v: &Multivector, f: &BilinearForm) -> Result<ScalarRF> {
    check_dim(u.dim(), v.dim())?;
    check_dim(u.dim(), f.dim())?;
    let mut acc = ScalarRF::zero();
    for (a, ca) in u.terms() {
        for (b, cb) in v.terms() {
            let x = b_ext_blades(a, b, f);
            if !x.is_zero() {
                acc = &acc + &(&(ca * cb) * &x);
            }
        }
    }
    Ok(acc)
}

/// `e_g ∘ w = i_{e_g}(w) + e_g ∧ w`.
fn gamma(dim: usize, g: usize, w: &Multivector, f: &BilinearForm) -> Multivector {
    let e = Blade::generator(g);
    w.map_linear(|b| contract_generator(dim, g, b, f).add(&blade_wedge(dim, e, b)))
}

fn chevalley_blade(dim: usize, a: Blade, v: &Multivector, f: &BilinearForm) -> Multivector {
    let Some(g) = a.indices().next() else {
        return v.clone();
    };
    // a = e_g ∧ rest = e_g ∘ rest - i_{e_g}(rest)
    let rest = a.without(g);
    let head = gamma(dim, g, &chevalley_blade(dim, rest, v, f), f);
    let corr = contract_generator(dim, g, rest, f);
    let mut tail = Multivector::zero(dim);
    for (b, c) in corr.terms() {
        tail.add_scaled(&chevalley_blade(dim, b, v, f), c);
    }
    head.sub(&tail)
}

/// Clifford product built from the Chevalley action of generators.
pub fn chevalley_mul(u: &Multivector, v: &Multivector, f: &BilinearForm) -> Result<Multivector> {
    check_dim(u.dim(), v.dim())?;
    check_dim(u.dim(), f.dim())?;
    let dim = u.dim();
    let mut out = Multivector::zero(dim);
    for (a, c) in u.terms() {
        out.add_scaled(&chevalley_blade(dim, a, v, f), c);
    }
    Ok(out)
}

fn cmul_blades(dim: usize, a: Blade, b: Blade, bext: impl Fn(Blade, Blade) -> ScalarRF) -> Multivector {
    let mut out = Multivector::zero(dim);
    let right = b.splits();
    for (s1, a1, a2) in a.splits() {
        for &(s2, b1, b2) in &right {
            if a2.grade() != b1.grade() {
                continue;
            }
            let Some((s3, w)) = a1.wedge(b2) else { continue };
            let x = bext(a2, b1);
            if x.is_zero() {
                continue;
            }
            let sign = ScalarRF::from_int((s1 * s2 * s3) as i64);
            out.add_term(w, &(&x * &sign));
        }
    }
    out
}

/// Cliffordization `u ∘ v = Σ F^∧(u₂, v₁) u₁ ∧ v₂` over Grassmann coproduct legs.
pub fn cmul(u: &Multivector, v: &Multivector, f: &BilinearForm) -> Result<Multivector> {
    check_dim(u.dim(), v.dim())?;
    check_dim(u.dim(), f.dim())?;
    let dim = u.dim();
    Ok(u.map_bilinear(v, |a, b| cmul_blades(dim, a, b, |x, y| b_ext_blades(x, y, f))))
}

/// Precomputed Clifford multiplication table on the blade basis.
#[derive(Clone, Debug)]
pub struct CliffordProduct {
    dim: usize,
    gram: Matrix,
    table: Vec<Multivector>,
}

impl CliffordProduct {
    pub fn new(f: &BilinearForm) -> Self {
        let dim = f.dim();
        let bas = basis(dim);
        let size = bas.len();
        let gram = Matrix::from_fn(size, size, |i, j| b_ext_blades(bas[i], bas[j], f));
        let mut table = Vec::with_capacity(size * size);
        for &a in &bas {
            for &b in &bas {
                table.push(cmul_blades(dim, a, b, |x, y| {
                    gram.get(basis_index(x, dim), basis_index(y, dim)).clone()
                }));
            }
        }
        CliffordProduct { dim, gram, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// The matrix of `F^∧` on the blade basis.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn mul_blades(&self, a: Blade, b: Blade) -> &Multivector {
        let size = 1 << self.dim;
        &self.table[basis_index(a, self.dim) * size + basis_index(b, self.dim)]
    }

    pub fn mul(&self, u: &Multivector, v: &Multivector) -> Result<Multivector> {
        check_dim(u.dim(), self.dim)?;
        check_dim(v.dim(), self.dim)?;
        Ok(u.map_bilinear(v, |a, b| self.mul_blades(a, b).clone()))
    }
}

/// Product in the graded tensor square:
/// `(a⊗b)(c⊗d) = (-1)^{|b||c|} (a∧c)⊗(b∧d)`.
pub fn graded_square_mul(x: &TensorPoly, y: &TensorPoly) -> Result<TensorPoly> {
    check_dim(x.dim(), y.dim())?;
    for t in [x, y] {
        if t.rank() != 2 {
            return Err(Error::RankMismatch {
                expected: 2,
                found: t.rank(),
            });
        }
    }
    let mut out = TensorPoly::zero(x.dim(), 2);
    for (wx, cx) in x.terms() {
        for (wy, cy) in y.terms() {
            let Some((s1, left)) = wx[0].wedge(wy[0]) else { continue };
            let Some((s2, right)) = wx[1].wedge(wy[1]) else { continue };
            let koszul = if (wx[1].grade() * wy[0].grade()) % 2 == 0 { 1 } else { -1 };
            let sign = ScalarRF::from_int((s1 * s2 * koszul) as i64);
            out.add_term(vec![left, right], &(&(cx * cy) * &sign));
        }
    }
    Ok(out)
}

/// How the coscalar form enters `β = Σ ± F(i,j) e_i ⊗ e_j`.
///
/// The calibrated choice is the untransposed, positive one: it is the only
/// variant for which the dimension-2 bi-convolution antipode and the
/// quasi-triangular solution come out with the published shapes. The
/// other three stay available for that comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct CoscalarConvention {
    pub transpose: bool,
    pub negate: bool,
}

impl CoscalarConvention {
    pub const CALIBRATED: CoscalarConvention = CoscalarConvention {
        transpose: false,
        negate: false,
    };

    pub const ALL: [CoscalarConvention; 4] = [
        CoscalarConvention { transpose: false, negate: false },
        CoscalarConvention { transpose: true, negate: false },
        CoscalarConvention { transpose: false, negate: true },
        CoscalarConvention { transpose: true, negate: true },
    ];
}

/// The element `Δ(Id)` of the Clifford coproduct, `exp(β)` in the graded
/// tensor square.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoscalarElement {
    value: TensorPoly,
}

impl CoscalarElement {
    pub fn value(&self) -> &TensorPoly {
        &self.value
    }

    pub fn into_value(self) -> TensorPoly {
        self.value
    }
}

pub fn coscalar_unit(bi: &BilinearForm) -> CoscalarElement {
    coscalar_unit_with(bi, CoscalarConvention::CALIBRATED)
}

pub fn coscalar_unit_with(bi: &BilinearForm, conv: CoscalarConvention) -> CoscalarElement {
    let n = bi.dim();
    let mut beta = TensorPoly::zero(n, 2);
    for i in 1..=n {
        for j in 1..=n {
            let c = if conv.transpose { bi.get(j, i) } else { bi.get(i, j) };
            let c = if conv.negate { -c } else { c.clone() };
            beta.add_term(vec![Blade::generator(i), Blade::generator(j)], &c);
        }
    }
    let unit = TensorPoly::word(n, vec![Blade::ID, Blade::ID], ScalarRF::one());
    let mut term = unit.clone();
    let mut acc = unit;
    for k in 1..=n {
        term = graded_square_mul(&term, &beta).expect("rank-2 operands");
        term = term.scale(&ScalarRF::from_rational(crate::scalar::rational(1, k as i64)));
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term).expect("same rank");
    }
    CoscalarElement { value: acc }
}

/// Precomputed Clifford coproduct `Δ_BI(x) = Δ(x) · exp(β)` on the blade basis.
#[derive(Clone, Debug)]
pub struct CliffordCoproduct {
    dim: usize,
    unit: CoscalarElement,
    table: Vec<TensorPoly>,
}

impl CliffordCoproduct {
    pub fn new(bi: &BilinearForm) -> Self {
        Self::with_convention(bi, CoscalarConvention::CALIBRATED)
    }

    pub fn with_convention(bi: &BilinearForm, conv: CoscalarConvention) -> Self {
        let dim = bi.dim();
        let unit = coscalar_unit_with(bi, conv);
        let table = basis(dim)
            .into_iter()
            .map(|b| graded_square_mul(&gco_blade(dim, b), unit.value()).expect("rank-2 operands"))
            .collect();
        CliffordCoproduct { dim, unit, table }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coscalar(&self) -> &CoscalarElement {
        &self.unit
    }

    pub fn apply_blade(&self, b: Blade) -> &TensorPoly {
        &self.table[basis_index(b, self.dim)]
    }

    pub fn apply(&self, x: &Multivector) -> Result<TensorPoly> {
        check_dim(x.dim(), self.dim)?;
        let mut out = TensorPoly::zero(self.dim, 2);
        for (b, c) in x.terms() {
            out.add_scaled(self.apply_blade(b), c)?;
        }
        Ok(out)
    }

    /// Applies the coproduct to slot `i`, raising the rank by one.
    pub fn apply_slot(&self, t: &TensorPoly, i: usize) -> Result<TensorPoly> {
        check_dim(t.dim(), self.dim)?;
        t.replace_slots(i, 1, 2, |bs| self.apply_blade(bs[0]).clone())
    }
}

/// Clifford coproduct with respect to the coscalar form of `ctx`.
pub fn cco(x: &Multivector, ctx: &AlgebraContext) -> Result<TensorPoly> {
    CliffordCoproduct::new(ctx.bi()).apply(x)
}
