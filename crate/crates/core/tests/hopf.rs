mod common;

use gebra_core::clifford::{AlgebraContext, BilinearForm, CoscalarConvention};
use gebra_core::exterior::{endo_matrix, EndoMatrix};
use gebra_core::hopf::{
    bs_matrix, form_convolution_inverse_check, gantipode, milnor_moore_antipode_truncated, normalization,
    solve_rmatrix, solve_rmatrix_with, symmetrize, Bialgebra, CoproductKind, ProductKind,
};
use gebra_core::{Matrix, SolveKind};
use rand::rngs::StdRng;
use rand::SeedableRng;

use common::*;

fn check_axioms(alg: &Bialgebra, s: &EndoMatrix) {
    let n = alg.dim();
    let id = EndoMatrix::identity(n);
    let eta_eps = EndoMatrix::unit_counit(n);
    assert_eq!(alg.convolve(s, &id).unwrap(), eta_eps, "left antipode law");
    assert_eq!(alg.convolve(&id, s).unwrap(), eta_eps, "right antipode law");
}

#[test]
fn grassmann_antipode_as_map_satisfies_axioms() {
    for n in 1..=3 {
        let ctx = AlgebraContext::symbolic(n);
        let alg = Bialgebra::new(&ctx, ProductKind::Wedge, CoproductKind::Grassmann);
        check_axioms(&alg, &endo_matrix(n, gantipode));
    }
}

#[test]
fn solved_antipodes_satisfy_axioms() {
    let ctx = AlgebraContext::symbolic(2);
    let kinds = [
        (ProductKind::Wedge, CoproductKind::Grassmann),
        (ProductKind::Clifford, CoproductKind::Grassmann),
        (ProductKind::Wedge, CoproductKind::Clifford),
        (ProductKind::Clifford, CoproductKind::Clifford),
    ];
    for (m, d) in kinds {
        let alg = Bialgebra::new(&ctx, m, d);
        let sol = alg.solve_antipode().unwrap();
        assert_eq!(sol.solution.kind, SolveKind::Unique, "{m:?} {d:?}");
        assert_eq!(sol.right_antipode, Some(true));
        check_axioms(&alg, sol.antipode.as_ref().unwrap());
    }
}

#[test]
fn random_dimension_three_antipodes_satisfy_axioms() {
    let mut rng = StdRng::seed_from_u64(31);
    for _ in 0..2 {
        let ctx = AlgebraContext::new(random_form(&mut rng, 3), random_form(&mut rng, 3)).unwrap();
        let alg = Bialgebra::new(&ctx, ProductKind::Clifford, CoproductKind::Clifford);
        let sol = alg.solve_antipode().unwrap();
        if let Some(s) = sol.antipode {
            check_axioms(&alg, &s);
        }
    }
}

#[test]
fn clifford_antipode_with_grassmann_coproduct_at_dimension_one() {
    let ctx = AlgebraContext::symbolic(1);
    let sol = Bialgebra::new(&ctx, ProductKind::Clifford, CoproductKind::Clifford)
        .solve_antipode()
        .unwrap();
    let n = normalization(&ctx).unwrap();
    assert_eq!(n, &int(1) - &(&b(1, 1) * &p(1, 1)));
    let s = sol.antipode.unwrap().scale(&n);
    assert_eq!(s.matrix(), &diag(&[1, -1]));
}

#[test]
fn recursion_matches_solution_for_symmetric_forms() {
    let ctx = AlgebraContext::symbolic(2);
    let mut bind = symmetrize("b", 2);
    bind.extend(symmetrize("p", 2));
    let ctx = ctx.subst(&bind).unwrap();
    let mm = milnor_moore_antipode_truncated(ProductKind::Clifford, CoproductKind::Clifford, &ctx);
    let sol = Bialgebra::new(&ctx, ProductKind::Clifford, CoproductKind::Clifford)
        .solve_antipode()
        .unwrap();
    let scaled = sol.antipode.unwrap().scale(&normalization(&ctx).unwrap());
    assert_eq!(mm, scaled);
}

#[test]
fn r_is_transposed_bs_of_the_coscalar_form() {
    let ctx = AlgebraContext::symbolic(2);
    let sol = solve_rmatrix(&ctx).unwrap();
    assert!(sol.residual_zero);
    let r = sol.r.unwrap();
    assert_eq!(r.matrix(), &bs_matrix(ctx.bi()).matrix().transpose());
    assert!(form_convolution_inverse_check(ctx.bi()));
}

fn printed_bi_convolution() -> Matrix {
    let mut want = diag(&[1, -1, -1, 1]);
    let top = &(&(&(&int(1) - &(&p(1, 2) * &b(2, 1))) + &(&p(2, 1) * &b(2, 1))) + &(&p(1, 2) * &b(1, 2)))
        - &(&p(2, 1) * &b(1, 2));
    want.set(0, 0, top);
    want.set(0, 3, &b(1, 2) - &b(2, 1));
    want.set(3, 0, &p(1, 2) - &p(2, 1));
    want
}

fn printed_r() -> Matrix {
    blocks(int(1), [[-p(1, 1), -p(2, 1)], [-p(1, 2), -p(2, 2)]], gram_minor("p"))
}

#[test]
fn only_calibrated_convention_reproduces_published_results() {
    let ctx = AlgebraContext::symbolic(2);
    let n = normalization(&ctx).unwrap();
    let mut matching = Vec::new();
    for conv in CoscalarConvention::ALL {
        let alg = Bialgebra::with_convention(&ctx, ProductKind::Clifford, CoproductKind::Clifford, conv);
        let s = alg.solve_antipode().unwrap().antipode.map(|s| s.scale(&n).into_matrix());
        let r = solve_rmatrix_with(&ctx, conv).unwrap().r.map(|r| r.matrix().clone());
        if s.as_ref() == Some(&printed_bi_convolution()) && r.as_ref() == Some(&printed_r()) {
            matching.push(conv);
        }
    }
    assert_eq!(matching, vec![CoscalarConvention::CALIBRATED]);
}

#[test]
fn symbolic_zero_form_has_grassmann_limit() {
    let zero = BilinearForm::zero(2);
    let ctx = AlgebraContext::new(zero.clone(), zero).unwrap();
    let sol = Bialgebra::new(&ctx, ProductKind::Clifford, CoproductKind::Clifford)
        .solve_antipode()
        .unwrap();
    assert_eq!(sol.antipode.unwrap(), endo_matrix(2, gantipode));
}
