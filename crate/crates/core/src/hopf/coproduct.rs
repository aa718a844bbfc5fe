use crate::error::Result;
use crate::exterior::{grade_involution, Blade, Multivector};
use crate::scalar::ScalarRF;
use crate::tensor::TensorPoly;

/// Grassmann coproduct of a single blade.
pub fn gco_blade(dim: usize, b: Blade) -> TensorPoly {
    let mut out = TensorPoly::zero(dim, 2);
    for (sign, x, y) in b.splits() {
        out.add_term(vec![x, y], &ScalarRF::from_int(sign as i64));
    }
    out
}

/// Grassmann coproduct: `Δ(e_S) = Σ sgn(A, B) e_A ⊗ e_B` over ordered
/// disjoint splits with `e_A ∧ e_B = sgn(A, B) e_S`.
pub fn gco(x: &Multivector) -> TensorPoly {
    let mut out = TensorPoly::zero(x.dim(), 2);
    for (b, c) in x.terms() {
        out.add_scaled(&gco_blade(x.dim(), b), c)
            .expect("same dim and rank");
    }
    out
}

/// Applies the Grassmann coproduct to slot `i`.
pub fn gco_slot(t: &TensorPoly, i: usize) -> Result<TensorPoly> {
    let dim = t.dim();
    t.replace_slots(i, 1, 2, |bs| gco_blade(dim, bs[0]))
}

/// Replaces the content `x` of slot `i` by `ε(x) Id`.
pub fn counit_unit_slot(t: &TensorPoly, i: usize) -> Result<TensorPoly> {
    let dim = t.dim();
    t.replace_slots(i, 1, 1, |bs| {
        if bs[0].is_id() {
            TensorPoly::word(dim, vec![Blade::ID], ScalarRF::one())
        } else {
            TensorPoly::zero(dim, 1)
        }
    })
}

/// Antipode of the Grassmann Hopf algebra, which is the grade involution.
pub fn gantipode(x: &Multivector) -> Multivector {
    grade_involution(x)
}

/// Applies the Grassmann antipode to slot `i`.
pub fn gantipode_slot(t: &TensorPoly, i: usize) -> Result<TensorPoly> {
    t.mapop(i, |b| gantipode(&Multivector::blade(t.dim(), b)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::{basis, endo_matrix};
    use crate::scalar::int;
    use crate::tensor::tensor;

    fn bl(idx: &[usize]) -> Blade {
        Blade::from_indices(idx).unwrap()
    }

    fn mv(n: usize, b: Blade) -> Multivector {
        Multivector::blade(n, b)
    }

    #[test]
    fn gco_examples() {
        let n = 3;
        assert_eq!(
            gco(&mv(n, bl(&[1, 3]))).to_string(),
            "&t(Id,e1we3) + &t(e1,e3) - &t(e3,e1) + &t(e1we3,Id)"
        );
        assert_eq!(gco(&mv(n, Blade::ID)).to_string(), "&t(Id,Id)");
        assert_eq!(gco(&mv(n, bl(&[1]))).to_string(), "&t(Id,e1) + &t(e1,Id)");
        let e123 = gco(&mv(n, bl(&[1, 2, 3])));
        assert_eq!(e123.len(), 8);
        assert_eq!(e123.coeff(&[bl(&[2]), bl(&[1, 3])]), int(-1));
        assert_eq!(e123.coeff(&[bl(&[1, 3]), bl(&[2])]), int(-1));
        assert_eq!(e123.coeff(&[bl(&[3]), bl(&[1, 2])]), int(1));
    }

    #[test]
    fn gco_slot_examples() {
        let n = 2;
        let t = TensorPoly::from_multivector(&mv(n, bl(&[1])));
        assert_eq!(gco_slot(&t, 1).unwrap().to_string(), "&t(Id,e1) + &t(e1,Id)");
        let t = tensor(&[mv(n, bl(&[1])), mv(n, bl(&[2]))]).unwrap();
        assert_eq!(
            gco_slot(&t, 2).unwrap().to_string(),
            "&t(e1,Id,e2) + &t(e1,e2,Id)"
        );
        assert!(gco_slot(&t, 3).is_err());
    }

    #[test]
    fn coassociative_on_e1we2() {
        let t = TensorPoly::from_multivector(&mv(2, bl(&[1, 2])));
        let once = gco_slot(&t, 1).unwrap();
        assert_eq!(gco_slot(&once, 1).unwrap(), gco_slot(&once, 2).unwrap());
    }

    #[test]
    fn counit_unit_slot_examples() {
        let n = 2;
        let x = Multivector::general(n, "x");
        let got = counit_unit_slot(&TensorPoly::from_multivector(&x), 1).unwrap();
        assert_eq!(got.to_string(), "x[1]*&t(Id)");
        let t = tensor(&[mv(n, bl(&[1])), mv(n, bl(&[2]))]).unwrap();
        assert!(counit_unit_slot(&t, 1).unwrap().is_zero());
        let t = tensor(&[mv(n, Blade::ID), mv(n, bl(&[1]))]).unwrap();
        assert_eq!(counit_unit_slot(&t, 1).unwrap(), t);
    }

    #[test]
    fn gantipode_is_an_involution() {
        let m = endo_matrix(2, gantipode);
        assert_eq!(m.to_string(), "[1, 0, 0, 0]\n[0, -1, 0, 0]\n[0, 0, -1, 0]\n[0, 0, 0, 1]");
        for b in basis(3) {
            let x = mv(3, b);
            assert_eq!(gantipode(&gantipode(&x)), x);
        }
    }
}
