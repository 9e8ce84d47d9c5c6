//! Benchmarks for the data-parallel scan phases, comparing thread counts
//! (with the `parallel` feature, the default) against the sequential path.
//!
//! Build without default features to bench the pure sequential fallback:
//! `cargo bench --no-default-features --features oracle`.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use wcox::hecke::verify_bound;
use wcox::kl::KlTables;
use wcox::{cells, CoxeterSystem, SystemConfig, VerifyOptions};

fn case4() -> CoxeterSystem {
    CoxeterSystem::new(SystemConfig::new(2, 5, 4, 2, 2, 1)).unwrap()
}

fn case2() -> CoxeterSystem {
    CoxeterSystem::new(SystemConfig::new(2, 0, 0, 1, 5, 2)).unwrap()
}

#[cfg(feature = "parallel")]
fn with_threads<T>(threads: usize, f: impl FnOnce() -> T + Send) -> T
where
    T: Send,
{
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .unwrap()
        .install(f)
}

#[cfg(not(feature = "parallel"))]
fn with_threads<T>(_threads: usize, f: impl FnOnce() -> T) -> T {
    f()
}

fn thread_counts() -> Vec<usize> {
    #[cfg(feature = "parallel")]
    {
        let max = std::thread::available_parallelism().map_or(2, |n| n.get());
        if max > 1 {
            vec![1, max]
        } else {
            vec![1]
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        vec![1]
    }
}

fn bench_verify_bound(c: &mut Criterion) {
    let sys = case4();
    // warm the word-engine caches so the scan itself is measured
    let _ = verify_bound(&sys, &VerifyOptions::new(7, 7)).unwrap();
    let mut group = c.benchmark_group("verify_bound_ball7");
    for threads in thread_counts() {
        group.bench_with_input(
            BenchmarkId::from_parameter(threads),
            &threads,
            |b, &threads| {
                b.iter(|| {
                    with_threads(threads, || {
                        verify_bound(&sys, &VerifyOptions::new(7, 7))
                            .unwrap()
                            .pairs_checked
                    })
                })
            },
        );
    }
    group.finish();
}

fn bench_prop74_scan(c: &mut Criterion) {
    let sys = case2();
    let _ = cells::check_prop_7_4(&sys, 5, 8, wcox::DEFAULT_BALL_CAP).unwrap();
    let mut group = c.benchmark_group("prop74_ball8");
    for threads in thread_counts() {
        group.bench_with_input(
            BenchmarkId::from_parameter(threads),
            &threads,
            |b, &threads| {
                b.iter(|| {
                    with_threads(threads, || {
                        cells::check_prop_7_4(&sys, 5, 8, wcox::DEFAULT_BALL_CAP)
                            .unwrap()
                            .pairs_checked
                    })
                })
            },
        );
    }
    group.finish();
}

fn bench_word_engine(c: &mut Criterion) {
    c.bench_function("ball10_cold_case4", |b| {
        b.iter(|| {
            // fresh system: cold caches, measures the rewriting engine
            let sys = case4();
            sys.ball_default(10).unwrap().len()
        })
    });
}

fn bench_kl_solve(c: &mut Criterion) {
    c.bench_function("kl_tables_ball5_case2", |b| {
        b.iter(|| {
            let sys = case2();
            let mut kl = KlTables::new(5);
            let mut total = 0usize;
            for w in sys.ball_default(5).unwrap() {
                total += kl.c(&sys, w).unwrap().support_len();
            }
            total
        })
    });
}

criterion_group!(
    benches,
    bench_verify_bound,
    bench_prop74_scan,
    bench_word_engine,
    bench_kl_solve
);
criterion_main!(benches);
