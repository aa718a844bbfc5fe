use std::collections::BTreeMap;

use crate::clifford::{AlgebraContext, CliffordCoproduct, CliffordProduct, CoscalarConvention};
use crate::error::{Error, Result};
use crate::exterior::{basis, basis_index, blade_wedge, Blade, EndoMatrix, Multivector};
use crate::matrix::Matrix;
use crate::scalar::{solve_linear, Poly, ScalarRF, SolveResult, Sym};
use crate::tensor::TensorPoly;

use super::coproduct::gco_blade;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ProductKind {
    /// Grassmann product.
    Wedge,
    /// Clifford product with respect to the scalar product `B`.
    Clifford,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoproductKind {
    /// Grassmann coproduct.
    Grassmann,
    /// Clifford coproduct with respect to the coscalar product `BI`.
    Clifford,
}

/// A product and a coproduct tabulated on the blade basis.
#[derive(Clone, Debug)]
pub struct Bialgebra {
    dim: usize,
    mul: Vec<Multivector>,
    co: Vec<TensorPoly>,
}

impl Bialgebra {
    pub fn new(ctx: &AlgebraContext, m: ProductKind, d: CoproductKind) -> Self {
        Self::with_convention(ctx, m, d, CoscalarConvention::CALIBRATED)
    }

    pub fn with_convention(
        ctx: &AlgebraContext,
        m: ProductKind,
        d: CoproductKind,
        conv: CoscalarConvention,
    ) -> Self {
        let dim = ctx.dim();
        let bas = basis(dim);
        let mul = match m {
            ProductKind::Wedge => bas
                .iter()
                .flat_map(|&a| bas.iter().map(move |&b| blade_wedge(dim, a, b)))
                .collect(),
            ProductKind::Clifford => {
                let table = CliffordProduct::new(ctx.b());
                bas.iter()
                    .flat_map(|&a| bas.iter().map(move |&b| (a, b)))
                    .map(|(a, b)| table.mul_blades(a, b).clone())
                    .collect()
            }
        };
        let co = match d {
            CoproductKind::Grassmann => bas.iter().map(|&b| gco_blade(dim, b)).collect(),
            CoproductKind::Clifford => {
                let cco = CliffordCoproduct::with_convention(ctx.bi(), conv);
                bas.iter().map(|&b| cco.apply_blade(b).clone()).collect()
            }
        };
        Bialgebra { dim, mul, co }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn mul_blades(&self, a: Blade, b: Blade) -> &Multivector {
        let size = 1 << self.dim;
        &self.mul[basis_index(a, self.dim) * size + basis_index(b, self.dim)]
    }

    pub fn mul(&self, u: &Multivector, v: &Multivector) -> Multivector {
        u.map_bilinear(v, |a, b| self.mul_blades(a, b).clone())
    }

    pub fn coproduct_blade(&self, b: Blade) -> &TensorPoly {
        &self.co[basis_index(b, self.dim)]
    }

    pub fn coproduct(&self, x: &Multivector) -> TensorPoly {
        let mut out = TensorPoly::zero(self.dim, 2);
        for (b, c) in x.terms() {
            out.add_scaled(self.coproduct_blade(b), c).expect("same rank");
        }
        out
    }

    fn check(&self, f: &EndoMatrix) -> Result<()> {
        if f.dim() != self.dim {
            return Err(Error::DimMismatch {
                left: self.dim,
                right: f.dim(),
            });
        }
        Ok(())
    }

    /// Matrix of `x ↦ m(f(x₁), g(x₂))`.
    pub fn convolve(&self, f: &EndoMatrix, g: &EndoMatrix) -> Result<EndoMatrix> {
        self.check(f)?;
        self.check(g)?;
        let bas = basis(self.dim);
        let size = bas.len();
        let mut m = Matrix::zeros(size, size);
        for (j, &x) in bas.iter().enumerate() {
            let mut image = Multivector::zero(self.dim);
            for (w, c) in self.coproduct_blade(x).terms() {
                let prod = self.mul(&f.apply_blade(w[0]), &g.apply_blade(w[1]));
                image.add_scaled(&prod, c);
            }
            for (i, &b) in bas.iter().enumerate() {
                m.set(i, j, image.coeff(b));
            }
        }
        EndoMatrix::new(self.dim, m)
    }

    /// Solves `m ∘ (S ⊗ id) ∘ Δ = η ∘ ε` for the `4^n` entries of `S`.
    pub fn solve_antipode(&self) -> Result<AntipodeSolution> {
        let n = self.dim;
        let bas = basis(n);
        let size = bas.len();
        let unknowns = antipode_unknowns(n);
        let s = |i: usize, j: usize| ScalarRF::sym(unknowns[j * size + i].clone());

        let mut eqs: Vec<Poly> = Vec::new();
        for &x in &bas {
            let mut acc: BTreeMap<Blade, ScalarRF> = BTreeMap::new();
            if x.is_id() {
                acc.insert(Blade::ID, ScalarRF::from_int(-1));
            }
            for (w, c) in self.coproduct_blade(x).terms() {
                let col = basis_index(w[0], n);
                for (i, &bi) in bas.iter().enumerate() {
                    let coeff = &s(i, col) * c;
                    for (out, k) in self.mul_blades(bi, w[1]).terms() {
                        let e = acc.entry(out).or_default();
                        *e = &*e + &(&coeff * k);
                    }
                }
            }
            eqs.extend(acc.into_values().map(|v| v.numer().clone()));
        }

        let solution = solve_linear(&eqs, &unknowns)?;
        if solution.is_inconsistent() {
            return Ok(AntipodeSolution {
                solution,
                antipode: None,
                right_antipode: None,
            });
        }
        let matrix = Matrix::from_fn(size, size, |i, j| {
            solution.assignment[&unknowns[j * size + i]].clone()
        });
        let antipode = EndoMatrix::new(n, matrix)?;
        let right = self.convolve(&EndoMatrix::identity(n), &antipode)?;
        Ok(AntipodeSolution {
            right_antipode: Some(right == EndoMatrix::unit_counit(n)),
            antipode: Some(antipode),
            solution,
        })
    }

    /// Milnor–Moore recursion `S(x) = ε(x) - x - Σ S(x'₁) x'₂` over proper
    /// cuts, run grade by grade. Every cut must have a left leg of lower
    /// grade than `x`.
    pub fn milnor_moore_antipode(&self) -> Result<EndoMatrix> {
        self.milnor_moore(true)
    }

    /// The same recursion with every cut whose left leg is not of lower
    /// grade dropped.
    pub fn milnor_moore_antipode_truncated(&self) -> EndoMatrix {
        self.milnor_moore(false).expect("truncation never fails")
    }

    fn milnor_moore(&self, strict: bool) -> Result<EndoMatrix> {
        let n = self.dim;
        let bas = basis(n);
        let mut images: Vec<Multivector> = Vec::with_capacity(bas.len());
        for &x in &bas {
            if x.is_id() {
                images.push(Multivector::blade(n, Blade::ID));
                continue;
            }
            let mut s = Multivector::blade(n, x).neg();
            for (w, c) in self.coproduct_blade(x).terms() {
                if w[0].is_id() || w[1].is_id() {
                    continue;
                }
                if w[0].grade() >= x.grade() {
                    if strict {
                        return Err(Error::RecursionNotGrounded {
                            at: x.name(),
                            blade: w[0].name(),
                        });
                    }
                    continue;
                }
                let prod = self.mul(&images[basis_index(w[0], n)], &Multivector::blade(n, w[1]));
                s.add_scaled(&prod, &-c);
            }
            images.push(s);
        }
        let size = bas.len();
        EndoMatrix::new(
            n,
            Matrix::from_fn(size, size, |i, j| images[j].coeff(bas[i])),
        )
    }
}

/// Unknowns `s[i,j]` in column-major order.
pub fn antipode_unknowns(n: usize) -> Vec<Sym> {
    let size = 1u32 << n;
    (1..=size)
        .flat_map(|j| (1..=size).map(move |i| Sym::indexed("s", &[i, j])))
        .collect()
}

#[derive(Clone, Debug)]
pub struct AntipodeSolution {
    pub solution: SolveResult,
    /// The solved matrix, with free unknowns left symbolic; `None` when no
    /// antipode exists.
    pub antipode: Option<EndoMatrix>,
    /// Whether `m ∘ (id ⊗ S) ∘ Δ = η ∘ ε` also holds.
    pub right_antipode: Option<bool>,
}

/// Convolution `f ⋆ g = m ∘ (f ⊗ g) ∘ Δ`.
pub fn convolution(
    f: &EndoMatrix,
    g: &EndoMatrix,
    m: ProductKind,
    d: CoproductKind,
    ctx: &AlgebraContext,
) -> Result<EndoMatrix> {
    Bialgebra::new(ctx, m, d).convolve(f, g)
}

pub fn solve_antipode(m: ProductKind, d: CoproductKind, ctx: &AlgebraContext) -> Result<AntipodeSolution> {
    Bialgebra::new(ctx, m, d).solve_antipode()
}

pub fn milnor_moore_antipode(m: ProductKind, d: CoproductKind, ctx: &AlgebraContext) -> Result<EndoMatrix> {
    Bialgebra::new(ctx, m, d).milnor_moore_antipode()
}

pub fn milnor_moore_antipode_truncated(
    m: ProductKind,
    d: CoproductKind,
    ctx: &AlgebraContext,
) -> EndoMatrix {
    Bialgebra::new(ctx, m, d).milnor_moore_antipode_truncated()
}

/// `N = det(1 - B·BI)`.
pub fn normalization(ctx: &AlgebraContext) -> Result<ScalarRF> {
    let prod = ctx.b().matrix().mul(ctx.bi().matrix())?;
    Matrix::identity(ctx.dim()).sub(&prod)?.det()
}
