use std::collections::BTreeMap;

use crate::clifford::{AlgebraContext, BilinearForm, CliffordCoproduct, CliffordProduct, CoscalarConvention};
use crate::error::{Error, Result};
use crate::exterior::{basis, basis_index, blade_wedge, endo_matrix, Blade, EndoMatrix, Multivector};
use crate::matrix::Matrix;
use crate::scalar::{solve_linear, Poly, ScalarRF, SolveResult, Sym};
use crate::tensor::{tensor_product, TensorPoly};

use super::coproduct::{gantipode, gco, gco_blade, gco_slot};

/// `BW(i, j) = ε(basis_i ∘ basis_j)`, the matrix of `B^∧`.
pub fn bw_matrix(b: &BilinearForm) -> EndoMatrix {
    let gram = CliffordProduct::new(b).gram().clone();
    EndoMatrix::new(b.dim(), gram).expect("square of size 2^n")
}

/// `BS = BW · S`, with `S` the Grassmann antipode.
pub fn bs_matrix(b: &BilinearForm) -> EndoMatrix {
    let s = endo_matrix(b.dim(), gantipode);
    bw_matrix(b).compose(&s).expect("same dim")
}

/// Checks `Σ K^∧(x₁, y₂) (-K)^∧(x₂, y₁) = ε(x) ε(y)` on all basis pairs.
pub fn form_convolution_inverse_check(k: &BilinearForm) -> bool {
    let n = k.dim();
    let plus = CliffordProduct::new(k);
    let minus = CliffordProduct::new(&k.neg());
    let gp = plus.gram();
    let gm = minus.gram();
    let bas = basis(n);
    for &x in &bas {
        let dx = gco_blade(n, x);
        for &y in &bas {
            let dy = gco_blade(n, y);
            let mut acc = ScalarRF::zero();
            for (wx, cx) in dx.terms() {
                for (wy, cy) in dy.terms() {
                    let a = gp.get(basis_index(wx[0], n), basis_index(wy[1], n));
                    if a.is_zero() {
                        continue;
                    }
                    let b = gm.get(basis_index(wx[1], n), basis_index(wy[0], n));
                    if b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(&(cx * cy) * &(a * b));
                }
            }
            let expect = if x.is_id() && y.is_id() {
                ScalarRF::one()
            } else {
                ScalarRF::zero()
            };
            if acc != expect {
                return false;
            }
        }
    }
    true
}

/// Coefficients `R_{I,J}` of `Σ R_{I,J} e_I ⊗ e_J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RMatrix {
    dim: usize,
    coeffs: Matrix,
}

impl RMatrix {
    pub fn new(dim: usize, coeffs: Matrix) -> Result<Self> {
        let size = 1 << dim;
        if coeffs.rows() != size || coeffs.cols() != size {
            return Err(Error::Shape {
                rows: coeffs.rows(),
                cols: coeffs.cols(),
                dim,
            });
        }
        Ok(RMatrix { dim, coeffs })
    }

    /// Entries `name[I,J]`.
    pub fn symbolic(dim: usize, name: &str) -> Self {
        let size = 1 << dim;
        RMatrix {
            dim,
            coeffs: Matrix::from_fn(size, size, |i, j| {
                ScalarRF::sym(Sym::indexed(name, &[i as u32 + 1, j as u32 + 1]))
            }),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.coeffs
    }

    pub fn element(&self) -> TensorPoly {
        let bas = basis(self.dim);
        let mut out = TensorPoly::zero(self.dim, 2);
        for (i, j, c) in self.coeffs.entries() {
            out.add_term(vec![bas[i], bas[j]], c);
        }
        out
    }
}

/// Both sides of `ŝw ∘ Δ_BI(x) = (R₁ ⊗ R₂) ∘ Δ(x)` for a given `x`.
///
/// The right side is `Σ R_{I,J} (x₁ ∧ e_I) ⊗ (e_J ∧ x₂)`.
pub fn rmatrix_sides(ctx: &AlgebraContext, r: &RMatrix, x: &Multivector) -> Result<(TensorPoly, TensorPoly)> {
    sides(&CliffordCoproduct::new(ctx.bi()), r, x)
}

fn sides(co: &CliffordCoproduct, r: &RMatrix, x: &Multivector) -> Result<(TensorPoly, TensorPoly)> {
    let n = co.dim();
    let leq = co.apply(x)?.gswitch(1)?;
    let wedge = |a: Blade, b: Blade| blade_wedge(n, a, b);
    let req = tensor_product(&r.element(), &gco(x))?
        .switch(2)?
        .switch(1)?
        .map_mul(3, wedge)?
        .map_mul(1, wedge)?;
    Ok((leq, req))
}

#[derive(Clone, Debug)]
pub struct RMatrixSolution {
    pub solution: SolveResult,
    pub r: Option<RMatrix>,
    /// Whether the solved `R` makes both sides agree identically.
    pub residual_zero: bool,
}

/// Solves for a quasi-triangular structure `R` over the general element.
pub fn solve_rmatrix(ctx: &AlgebraContext) -> Result<RMatrixSolution> {
    solve_rmatrix_with(ctx, CoscalarConvention::CALIBRATED)
}

/// [`solve_rmatrix`] with an explicit coscalar convention.
pub fn solve_rmatrix_with(ctx: &AlgebraContext, conv: CoscalarConvention) -> Result<RMatrixSolution> {
    let co = CliffordCoproduct::with_convention(ctx.bi(), conv);
    let n = ctx.dim();
    let size = 1usize << n;
    let unknown = RMatrix::symbolic(n, "R");
    let unknowns: Vec<Sym> = (1..=size as u32)
        .flat_map(|j| (1..=size as u32).map(move |i| Sym::indexed("R", &[i, j])))
        .collect();
    let x = Multivector::general(n, "x");
    let (leq, req) = sides(&co, &unknown, &x)?;
    let eq = leq.sub(&req)?;
    let is_x = |s: &Sym| s.name() == "x";
    let mut eqs: Vec<Poly> = Vec::new();
    for (_, c) in eq.terms() {
        eqs.extend(c.numer().split_by(is_x).into_values());
    }
    let solution = solve_linear(&eqs, &unknowns)?;
    if solution.is_inconsistent() {
        return Ok(RMatrixSolution {
            solution,
            r: None,
            residual_zero: false,
        });
    }
    let r = RMatrix::new(n, unknown.matrix().subst(&solution.assignment)?)?;
    let (leq, req) = sides(&co, &r, &x)?;
    Ok(RMatrixSolution {
        residual_zero: leq == req,
        r: Some(r),
        solution,
    })
}

/// The pairing `bw(x, y) = F(y, x)` read off a matrix on the blade basis.
fn bw_pairing(f: &EndoMatrix) -> impl Fn(Blade, Blade) -> ScalarRF + '_ {
    let n = f.dim();
    move |x, y| f.get(basis_index(y, n), basis_index(x, n)).clone()
}

/// Braiding on slots `(i, i+1)`: split both slots, pair the inner legs
/// through `f`, then apply the graded switch.
pub fn bsw(t: &TensorPoly, i: usize, f: &EndoMatrix) -> Result<TensorPoly> {
    if i == 0 || i + 1 > t.rank() {
        return Err(Error::SlotOutOfRange { slot: i, rank: t.rank() });
    }
    let split = gco_slot(&gco_slot(t, i + 1)?, i)?;
    split.contract(i + 1, bw_pairing(f))?.gswitch(i)
}

/// Matrix of the braiding on `V ⊗ V`, pair basis in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YBMatrix {
    dim: usize,
    matrix: Matrix,
}

impl YBMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn det(&self) -> Result<ScalarRF> {
        self.matrix.det()
    }
}

pub fn yb_matrix(b: &BilinearForm) -> Result<YBMatrix> {
    let n = b.dim();
    let bw = bw_matrix(b);
    let bas = basis(n);
    let size = bas.len();
    let mut m = Matrix::zeros(size * size, size * size);
    for (i, &x) in bas.iter().enumerate() {
        for (j, &y) in bas.iter().enumerate() {
            let t = TensorPoly::word(n, vec![x, y], ScalarRF::one());
            for (w, c) in bsw(&t, 1, &bw)?.terms() {
                let row = basis_index(w[0], n) * size + basis_index(w[1], n);
                m.set(row, i * size + j, c.clone());
            }
        }
    }
    Ok(YBMatrix { dim: n, matrix: m })
}

pub fn yb_det(b: &BilinearForm) -> Result<ScalarRF> {
    yb_matrix(b)?.det()
}

/// Whether the braiding squares to the identity, with `M² - 1` as
/// certificate.
#[derive(Clone, Debug)]
pub struct Triangularity {
    pub triangular: bool,
    pub residual: Matrix,
    /// First nonzero residual entry, zero-based.
    pub witness: Option<(usize, usize, ScalarRF)>,
}

pub fn yb_triangular(b: &BilinearForm) -> Result<Triangularity> {
    let m = yb_matrix(b)?;
    let sq = m.matrix.mul(&m.matrix)?;
    let residual = sq.sub(&Matrix::identity(sq.rows()))?;
    let witness = residual.first_nonzero().map(|(i, j, v)| (i, j, v.clone()));
    Ok(Triangularity {
        triangular: witness.is_none(),
        residual,
        witness,
    })
}

/// The four matrices `R^∧` with the Grassmann antipode applied to none,
/// the first, both, or the second argument.
#[derive(Clone, Debug)]
pub struct QtAxiomReport {
    pub r: EndoMatrix,
    pub rs: EndoMatrix,
    pub rss: EndoMatrix,
    pub sr: EndoMatrix,
}

impl QtAxiomReport {
    pub fn rss_equals_r(&self) -> bool {
        self.rss == self.r
    }

    pub fn rs_equals_sr(&self) -> bool {
        self.rs == self.sr
    }
}

pub fn qt_axiom_check(r: &BilinearForm) -> QtAxiomReport {
    let n = r.dim();
    let table = CliffordProduct::new(r);
    let bas = basis(n);
    let size = bas.len();
    let s: Vec<Multivector> = bas.iter().map(|&b| gantipode(&Multivector::blade(n, b))).collect();
    let id: Vec<Multivector> = bas.iter().map(|&b| Multivector::blade(n, b)).collect();
    let build = |left: &[Multivector], right: &[Multivector]| {
        let m = Matrix::from_fn(size, size, |i, j| {
            table.mul(&left[i], &right[j]).expect("same dim").coeff(Blade::ID)
        });
        EndoMatrix::new(n, m).expect("square of size 2^n")
    };
    QtAxiomReport {
        r: build(&id, &id),
        rs: build(&s, &id),
        rss: build(&s, &s),
        sr: build(&id, &s),
    }
}

/// Substitution `name[i,j] ↦ name[j,i]` for `i < j`, making a symbolic form
/// symmetric.
pub fn symmetrize(name: &str, n: usize) -> BTreeMap<Sym, ScalarRF> {
    let mut out = BTreeMap::new();
    for i in 1..=n as u32 {
        for j in i + 1..=n as u32 {
            out.insert(
                Sym::indexed(name, &[i, j]),
                ScalarRF::sym(Sym::indexed(name, &[j, i])),
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, sym2};
    use crate::tensor::tensor;

    fn e(i: usize) -> Blade {
        Blade::generator(i)
    }

    #[test]
    fn bw_of_zero_form() {
        let got = bw_matrix(&BilinearForm::zero(2));
        assert_eq!(got, EndoMatrix::unit_counit(2));
    }

    #[test]
    fn bsw_reduces_to_gswitch() {
        let bw = bw_matrix(&BilinearForm::zero(2));
        let x = Multivector::general(2, "x");
        let y = Multivector::general(2, "y");
        let t = tensor(&[x, y]).unwrap();
        assert_eq!(bsw(&t, 1, &bw).unwrap(), t.gswitch(1).unwrap());
    }

    #[test]
    fn bsw_on_e1_e1() {
        // splits (Id⊗e1 + e1⊗Id)⊗(Id⊗e1 + e1⊗Id); only the inner pairs
        // (Id, Id) and (e1, e1) survive the contraction
        let bw = bw_matrix(&BilinearForm::symbolic(2, "b"));
        let t = TensorPoly::word(2, vec![e(1), e(1)], int(1));
        let got = bsw(&t, 1, &bw).unwrap();
        let expect = TensorPoly::collect(
            2,
            2,
            [
                (vec![e(1), e(1)], int(-1)),
                (vec![Blade::ID, Blade::ID], sym2("b", 1, 1)),
            ],
        )
        .unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn convolution_inverse_for_zero_form() {
        assert!(form_convolution_inverse_check(&BilinearForm::zero(2)));
    }

    #[test]
    fn rmatrix_without_coscalar_form() {
        let ctx = AlgebraContext::new(BilinearForm::symbolic(2, "b"), BilinearForm::zero(2)).unwrap();
        let sol = solve_rmatrix(&ctx).unwrap();
        assert!(sol.residual_zero);
        let r = sol.r.unwrap();
        assert_eq!(r.matrix(), EndoMatrix::unit_counit(2).matrix());
    }
}
