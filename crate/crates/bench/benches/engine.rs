use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use qcgl::delderiv;
use qcgl::ncalg::DEFAULT_NILPOTENCE_BOUND;
use qcgl::qmat::{self, MinorIndex};
use qcgl::sample::ElementSampler;
use qcgl::{cauchon, expr, Monomial, NcPoly, RatFunc, Strategy};

fn normal_form(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_form");
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        let spec = qmat::oqm(m, n).unwrap();
        // Fully reversed word: the worst case for the rewriting system.
        let word = NcPoly::term(Monomial((0..spec.len()).rev().collect()), RatFunc::one());
        for strategy in [Strategy::Leftmost, Strategy::Rightmost] {
            group.bench_with_input(
                BenchmarkId::new(format!("{strategy:?}"), format!("{m}x{n}")),
                &word,
                |b, w| b.iter(|| spec.normalize_with(black_box(w), strategy).unwrap()),
            );
        }
    }
    let spec = qmat::oqm(2, 2).unwrap();
    let mut sampler = ElementSampler::new(1);
    let pairs: Vec<_> = (0..16)
        .map(|_| (sampler.element(&spec, 4, 3).unwrap(), sampler.element(&spec, 4, 3).unwrap()))
        .collect();
    group.bench_function("random_products_2x2", |b| {
        b.iter(|| {
            for (x, y) in &pairs {
                black_box(spec.mul(x, y).unwrap());
            }
        })
    });
    group.finish();
}

fn minors(c: &mut Criterion) {
    let mut group = c.benchmark_group("quantum_minor");
    for n in [2, 3, 4] {
        let spec = qmat::oqm(n, n).unwrap();
        group.bench_function(BenchmarkId::new("det", n), |b| b.iter(|| qmat::quantum_det(&spec).unwrap()));
    }
    let spec = qmat::oqm(3, 4).unwrap();
    let idx = MinorIndex::new(vec![1, 2, 3], vec![1, 3, 4]).unwrap();
    group.bench_function("3x3_in_3x4", |b| b.iter(|| qmat::quantum_minor(&spec, black_box(&idx)).unwrap()));
    group.finish();
}

fn theta(c: &mut Criterion) {
    let mut group = c.benchmark_group("theta");
    for (m, n) in [(2, 2), (2, 3), (3, 3)] {
        let spec = qmat::oqm(m, n).unwrap();
        let a = expr::eval_str(&spec, "x[1,1]^2 * x[2,1] + x[1,1]*x[1,2]").unwrap();
        group.bench_function(BenchmarkId::new("standard", format!("{m}x{n}")), |b| {
            b.iter(|| delderiv::theta(&spec, black_box(&a), DEFAULT_NILPOTENCE_BOUND).unwrap())
        });
        group.bench_function(BenchmarkId::new("alt", format!("{m}x{n}")), |b| {
            b.iter(|| delderiv::theta_alt(&spec, black_box(&a), DEFAULT_NILPOTENCE_BOUND).unwrap())
        });
    }
    group.finish();
}

fn cauchon_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("cauchon");
    for (m, n) in [(2, 3), (3, 3), (3, 4), (4, 4)] {
        group.bench_function(BenchmarkId::new("enumerate", format!("{m}x{n}")), |b| {
            b.iter(|| cauchon::enumerate(black_box(m), black_box(n)).unwrap().len())
        });
    }
    group.finish();
}

criterion_group!(benches, normal_form, minors, theta, cauchon_enumeration);
criterion_main!(benches);
