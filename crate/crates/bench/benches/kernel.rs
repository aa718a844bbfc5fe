use criterion::{criterion_group, criterion_main, BatchSize, Criterion};
use gebra_core::clifford::{cmul, AlgebraContext, BilinearForm, CliffordCoproduct};
use gebra_core::exterior::Multivector;
use gebra_core::hopf::{solve_antipode, solve_rmatrix, CoproductKind, ProductKind};
use gebra_core::scalar::{rational, ScalarRF};
use gebra_core::Matrix;

fn numeric_form(n: usize, seed: i64) -> BilinearForm {
    let m = Matrix::from_fn(n, n, |i, j| {
        let v = (seed + 3 * i as i64 + 5 * j as i64) % 7 - 3;
        ScalarRF::from_rational(rational(v, 1 + (i + j) as i64 % 3))
    });
    BilinearForm::new(m).unwrap()
}

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("products");
    for n in [2usize, 4] {
        let b = BilinearForm::symbolic(n, "b");
        let x = Multivector::general(n, "x");
        let y = Multivector::general(n, "y");
        g.bench_function(format!("cmul symbolic general n={n}"), |bench| {
            bench.iter(|| cmul(&x, &y, &b).unwrap())
        });
    }
    let b = numeric_form(6, 1);
    let x = Multivector::general(6, "x");
    g.bench_function("cmul numeric form n=6", |bench| bench.iter(|| cmul(&x, &x, &b).unwrap()));
    g.finish();
}

fn coproduct(c: &mut Criterion) {
    let bi = BilinearForm::symbolic(3, "p");
    let x = Multivector::general(3, "x");
    c.bench_function("cco table and apply n=3", |bench| {
        bench.iter_batched(|| bi.clone(), |bi| CliffordCoproduct::new(&bi).apply(&x).unwrap(), BatchSize::SmallInput)
    });
}

fn solvers(c: &mut Criterion) {
    let mut g = c.benchmark_group("solvers");
    g.sample_size(10);
    let ctx = AlgebraContext::symbolic(2);
    g.bench_function("bi-convolution antipode symbolic n=2", |bench| {
        bench.iter(|| solve_antipode(ProductKind::Clifford, CoproductKind::Clifford, &ctx).unwrap())
    });
    g.bench_function("R matrix symbolic n=2", |bench| bench.iter(|| solve_rmatrix(&ctx).unwrap()));
    let ctx3 = AlgebraContext::new(numeric_form(3, 2), numeric_form(3, 4)).unwrap();
    g.bench_function("bi-convolution antipode numeric n=3", |bench| {
        bench.iter(|| solve_antipode(ProductKind::Clifford, CoproductKind::Clifford, &ctx3).unwrap())
    });
    g.finish();
}

criterion_group!(benches, products, coproduct, solvers);
criterion_main!(benches);
