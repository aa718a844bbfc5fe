use gebra_cli::dsl::{parse, render, Expr, Func};
use gebra_cli::eval::{Evaluator, Value};
use gebra_core::exterior::{basis, Multivector};
use gebra_core::scalar::{rational, ScalarRF};
use gebra_core::tensor::tensor;
use gebra_core::{AlgebraContext, Sym, TensorPoly};
use num_bigint::BigInt;
use proptest::prelude::*;

fn symbol() -> impl Strategy<Value = Sym> {
    prop_oneof![
        prop::sample::select(vec!["x", "y", "a", "q"]).prop_map(Sym::new),
        (prop::sample::select(vec!["b", "p", "R"]), 1u32..4, 1u32..4).prop_map(|(n, i, j)| Sym::indexed(n, &[i, j])),
        (prop::sample::select(vec!["x", "s"]), 1u32..9).prop_map(|(n, i)| Sym::indexed(n, &[i])),
    ]
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0u64..1000).prop_map(|n| Expr::Number(BigInt::from(n))),
        symbol().prop_map(Expr::Symbol),
        prop::collection::vec(1usize..6, 0..4).prop_map(Expr::Blade),
    ]
}

/// A trailing bare number in an argument list reads back as a slot.
fn slot_ambiguous(e: &Expr) -> bool {
    match e {
        Expr::Call { args, slot, .. } => {
            (slot.is_none() && matches!(args.last(), Some(Expr::Number(_)))) || args.iter().any(slot_ambiguous)
        }
        Expr::Neg(x) | Expr::Pow(x, _) => slot_ambiguous(x),
        Expr::Add(a, b) | Expr::Sub(a, b) | Expr::Mul(a, b) | Expr::Div(a, b) => {
            slot_ambiguous(a) || slot_ambiguous(b)
        }
        _ => false,
    }
}

fn expr() -> impl Strategy<Value = Expr> {
    leaf()
        .prop_recursive(4, 32, 3, |inner| {
            let b = || inner.clone().prop_map(Box::new);
            prop_oneof![
                b().prop_map(Expr::Neg),
                (b(), b()).prop_map(|(x, y)| Expr::Add(x, y)),
                (b(), b()).prop_map(|(x, y)| Expr::Sub(x, y)),
                (b(), b()).prop_map(|(x, y)| Expr::Mul(x, y)),
                (b(), b()).prop_map(|(x, y)| Expr::Div(x, y)),
                (b(), 0u32..5).prop_map(|(x, k)| Expr::Pow(x, k)),
                (
                    prop::sample::select(Func::ALL.to_vec()),
                    prop::option::of(prop::sample::select(vec!["B", "BI", "K"])),
                    prop::collection::vec(inner.clone(), 1..4),
                    prop::option::of(1usize..4),
                )
                    .prop_map(|(func, form, args, slot)| Expr::Call {
                        func,
                        form: form.map(String::from),
                        args,
                        slot,
                    }),
            ]
        })
        .prop_filter("slot ambiguity", |e| !slot_ambiguous(e))
}

fn coeff() -> impl Strategy<Value = ScalarRF> {
    prop_oneof![
        (-5i64..6, 1i64..4).prop_map(|(n, d)| ScalarRF::from_rational(rational(n, d))),
        symbol().prop_map(ScalarRF::sym),
        (symbol(), symbol(), -3i64..4).prop_map(|(a, b, k)| {
            let num = &ScalarRF::sym(a) * &ScalarRF::from_int(k);
            let den = &ScalarRF::sym(b) + &ScalarRF::one();
            &(&num * &num) + &den.inv().unwrap()
        }),
    ]
}

fn multivector(n: usize) -> impl Strategy<Value = Multivector> {
    let blades = basis(n);
    prop::collection::vec((prop::sample::select(blades), coeff()), 0..5)
        .prop_map(move |terms| Multivector::from_terms(n, terms))
}

fn tensor_value(n: usize) -> impl Strategy<Value = TensorPoly> {
    prop::collection::vec(prop::collection::vec(multivector(n), 2), 1..3).prop_map(|parts| {
        parts
            .iter()
            .map(|p| tensor(p).unwrap())
            .reduce(|a, b| a.add(&b).unwrap())
            .unwrap()
    })
}

fn evaluate(src: &str) -> Value {
    let e = parse(src).unwrap_or_else(|err| panic!("{src}: {err}"));
    Evaluator::new(AlgebraContext::symbolic(3)).eval(&e).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn parse_inverts_render(e in expr()) {
        let text = render(&e);
        prop_assert_eq!(parse(&text).unwrap(), e, "{}", text);
    }

    #[test]
    fn multivector_text_evaluates_back(m in multivector(3)) {
        // zero prints as a bare `0` and reads back as a scalar
        let want = if m.is_zero() { Value::Scalar(ScalarRF::zero()) } else { Value::Multivector(m.clone()) };
        prop_assert_eq!(evaluate(&m.to_dsl()), want);
    }

    #[test]
    fn tensor_text_evaluates_back(t in tensor_value(3)) {
        prop_assume!(!t.is_zero());
        prop_assert_eq!(evaluate(&t.to_dsl()), Value::Tensor(t.clone()));
    }

    #[test]
    fn scalar_text_evaluates_back(s in coeff()) {
        prop_assert_eq!(evaluate(&s.to_string()), Value::Scalar(s.clone()));
    }

    #[test]
    fn evaluation_is_deterministic(m in multivector(3), k in 1usize..3) {
        let src = format!("cco(cmul({}, e{k}))", m.to_dsl());
        prop_assert_eq!(evaluate(&src).to_string(), evaluate(&src).to_string());
    }
}
