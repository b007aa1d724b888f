use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use nagumo_atlas::gde::{self, ContinuationConfig, Params};
use nagumo_atlas::regions::{self, DEFAULT_D_CAP};
use nagumo_atlas::words::{self, Alphabet, GroupKind};
use nagumo_atlas::{count_table, verify};
use nagumo_atlas_bench::{coarse_grid, region_words};

fn counting(c: &mut Criterion) {
    c.bench_function("count_table 1..=64", |b| {
        b.iter(|| {
            (1..=64)
                .map(|n| count_table(black_box(n)).unwrap())
                .collect::<Vec<_>>()
        })
    });
    c.bench_function("identities 1..=10000", |b| {
        b.iter(|| verify::verify_identities(black_box(10_000)).unwrap())
    });
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_orbits dpi");
    group.sample_size(10);
    for (alphabet, n) in [(Alphabet::A2, 12), (Alphabet::A3, 8)] {
        group.bench_with_input(BenchmarkId::new(alphabet.to_string(), n), &n, |b, &n| {
            b.iter(|| words::enumerate_orbits(n, alphabet, GroupKind::DihedralPi, false).unwrap())
        });
    }
    group.finish();
}

fn continuation(c: &mut Criterion) {
    let cfg = ContinuationConfig::default();
    let mut group = c.benchmark_group("d_max");
    for w in region_words() {
        group.bench_with_input(BenchmarkId::from_parameter(&w), &w, |b, w| {
            b.iter(|| regions::d_max(w, black_box(0.475), &cfg, DEFAULT_D_CAP).unwrap())
        });
    }
    group.finish();

    let grid = coarse_grid();
    let word = "0a11".parse().unwrap();
    c.bench_function("scan_region 0a11, 19 points", |b| {
        b.iter(|| regions::scan_region(&word, &grid, &cfg, DEFAULT_D_CAP).unwrap())
    });
    let p = Params::new(0.475, 0.025).unwrap();
    c.bench_function("solve_type 0a11", |b| {
        b.iter(|| gde::solve_type(&word, black_box(&p), &cfg).unwrap())
    });
}

criterion_group!(benches, counting, enumeration, continuation);
criterion_main!(benches);
