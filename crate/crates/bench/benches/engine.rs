use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use morsekit_core::constructions::{barycentric_subdivision, build_two_optima, poincare};
use morsekit_core::morse::{MorseEngine, Scratch, Strategy};
use morsekit_core::verify::{betti_numbers, DEFAULT_SIZE_LIMIT};

fn single_runs(c: &mut Criterion) {
    let complexes = [("poincare", poincare()), ("two_optima", build_two_optima())];
    let mut group = c.benchmark_group("run");
    for (name, k) in &complexes {
        let engine = MorseEngine::new(k);
        for strategy in Strategy::ALL {
            let mut scratch = Scratch::default();
            let mut seed = 0u64;
            group.bench_function(BenchmarkId::new(strategy.as_str(), name), |b| {
                b.iter(|| {
                    seed += 1;
                    engine.vector(strategy, seed, &mut scratch)
                })
            });
        }
    }
    group.finish();
}

fn subdivided(c: &mut Criterion) {
    let k = barycentric_subdivision(&poincare(), 1).unwrap();
    let engine = MorseEngine::new(&k);
    let mut scratch = Scratch::default();
    let mut seed = 0u64;
    let mut group = c.benchmark_group("run_sd");
    group.sample_size(20);
    group.bench_function("random-lex-last/sd_poincare", |b| {
        b.iter(|| {
            seed += 1;
            engine.vector(Strategy::RandomLexLast, seed, &mut scratch)
        })
    });
    group.finish();
}

fn setup(c: &mut Criterion) {
    let k = poincare();
    c.bench_function("engine_new/poincare", |b| b.iter(|| MorseEngine::new(&k).complex().total_faces()));
    c.bench_function("sd/poincare", |b| b.iter(|| barycentric_subdivision(&k, 1).unwrap()));
    c.bench_function("homology/poincare", |b| b.iter(|| betti_numbers(&k, DEFAULT_SIZE_LIMIT).unwrap()));
}

criterion_group!(benches, single_runs, subdivided, setup);
criterion_main!(benches);
