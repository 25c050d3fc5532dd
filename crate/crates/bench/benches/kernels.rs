use criterion::{black_box, criterion_group, criterion_main, Criterion};
use lietame::exactalg::{charpoly, vars};
use lietame::liealg::realize;
use lietame::rootsys::{build_root_system, closed_symmetric_subsets};
use lietame::strata::enumerate_strata;
use lietame::weylalg::{falling_euler, WeylOp};
use lietame::Limits;

fn charpoly_sl3(c: &mut Criterion) {
    let lim = Limits::default();
    let alg = realize("A2", &lim).unwrap();
    let ad = alg.ad_matrix();
    c.bench_function("charpoly ad sl3", |b| b.iter(|| charpoly(black_box(&ad), 16).unwrap()));
}

fn weyl_products(c: &mut Criterion) {
    let v = vars(&["x1", "x2", "x3"]);
    let e = falling_euler(v.clone(), 3);
    let d = WeylOp::d(v.clone(), 0).pow(2);
    c.bench_function("normal product D^2 * euler^(3)", |b| {
        b.iter(|| black_box(&d).normal_product(black_box(&e)).unwrap())
    });
}

fn subsets(c: &mut Criterion) {
    let lim = Limits::default();
    let mut g = c.benchmark_group("closed symmetric subsets");
    for t in ["B3", "C3", "A4"] {
        let rs = build_root_system(t).unwrap();
        g.bench_function(t, |b| b.iter(|| closed_symmetric_subsets(black_box(&rs), &lim).unwrap()));
    }
    g.finish();
}

fn strata(c: &mut Criterion) {
    let lim = Limits::default();
    c.bench_function("enumerate strata A3", |b| b.iter(|| enumerate_strata(black_box("A3"), &lim).unwrap()));
}

criterion_group!(benches, charpoly_sl3, weyl_products, subsets, strata);
criterion_main!(benches);
