#![allow(dead_code)]

use gebra_core::clifford::BilinearForm;
use gebra_core::exterior::Blade;
pub use gebra_core::scalar::int;
use gebra_core::scalar::{rational, sym2};
use gebra_core::{Matrix, ScalarRF};
use rand::rngs::StdRng;
use rand::Rng;

pub fn b(i: u32, j: u32) -> ScalarRF {
    sym2("b", i, j)
}

pub fn p(i: u32, j: u32) -> ScalarRF {
    sym2("p", i, j)
}

pub fn diag(entries: &[i64]) -> Matrix {
    let n = entries.len();
    Matrix::from_fn(n, n, |i, j| if i == j { int(entries[i]) } else { ScalarRF::zero() })
}

/// Block matrix on the dimension-2 basis: `top` in `(1,1)`, the 2x2
/// vector block in the middle, `corner` in `(4,4)`.
pub fn blocks(top: ScalarRF, mid: [[ScalarRF; 2]; 2], corner: ScalarRF) -> Matrix {
    let mut m = Matrix::zeros(4, 4);
    m.set(0, 0, top);
    for i in 0..2 {
        for j in 0..2 {
            m.set(i + 1, j + 1, mid[i][j].clone());
        }
    }
    m.set(3, 3, corner);
    m
}

/// `name[2,1]*name[1,2] - name[2,2]*name[1,1]`.
pub fn gram_minor(name: &str) -> ScalarRF {
    let e = |i, j| sym2(name, i, j);
    &(&e(2, 1) * &e(1, 2)) - &(&e(2, 2) * &e(1, 1))
}

pub fn random_rational(rng: &mut StdRng) -> ScalarRF {
    ScalarRF::from_rational(rational(rng.gen_range(-6..=6), rng.gen_range(1..=4)))
}

pub fn random_form(rng: &mut StdRng, n: usize) -> BilinearForm {
    BilinearForm::new(Matrix::from_fn(n, n, |_, _| random_rational(rng))).unwrap()
}

/// A dense random form whose antisymmetric part is nonzero.
pub fn random_asymmetric_form(rng: &mut StdRng, n: usize) -> BilinearForm {
    loop {
        let f = random_form(rng, n);
        if !f.is_symmetric() && (0..n).all(|i| (0..n).all(|j| !f.matrix().get(i, j).is_zero())) {
            return f;
        }
    }
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<ScalarRF>]) -> ScalarRF {
    let n = m.len();
    if n == 0 {
        return ScalarRF::one();
    }
    let mut acc = ScalarRF::zero();
    for col in 0..n {
        if m[0][col].is_zero() {
            continue;
        }
        let minor: Vec<Vec<ScalarRF>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = &m[0][col] * &laplace_det(&minor);
        acc = if col % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// `F^∧(e_A, e_B) = (-1)^{k(k-1)/2} det[F(a_i, b_j)]` on equal grades.
pub fn signed_minor(a: Blade, bb: Blade, f: &BilinearForm) -> ScalarRF {
    if a.grade() != bb.grade() {
        return ScalarRF::zero();
    }
    let ia: Vec<usize> = a.indices().collect();
    let ib: Vec<usize> = bb.indices().collect();
    let m: Vec<Vec<ScalarRF>> = ia
        .iter()
        .map(|&i| ib.iter().map(|&j| f.get(i, j).clone()).collect())
        .collect();
    let k = ia.len();
    let det = laplace_det(&m);
    if (k * k.saturating_sub(1) / 2) % 2 == 0 {
        det
    } else {
        -det
    }
}
