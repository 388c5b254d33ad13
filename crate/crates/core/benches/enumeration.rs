use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use meandric::enumeration::{count_all, count_b3, CountOptions};
use meandric::freeprob::{cumulants_to_moments, nu_cumulants};
use meandric::reference::meander_numbers;

/// 1, 2, 4 and the machine's core count.
fn worker_counts() -> Vec<usize> {
    let max = std::thread::available_parallelism().map_or(1, |n| n.get());
    let mut counts = vec![1, 2, 4, max];
    counts.sort_unstable();
    counts.dedup();
    counts
}

fn bench_count_all(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_all");
    group
        .sample_size(10)
        .measurement_time(Duration::from_secs(5));
    for n in [7usize, 8] {
        let pairs = {
            let cat = [1u64, 1, 2, 5, 14, 42, 132, 429, 1430][n];
            cat * cat
        };
        group.throughput(Throughput::Elements(pairs));
        for workers in worker_counts() {
            // one worker takes the sequential path, no thread pool
            let label = if workers == 1 {
                "sequential".to_string()
            } else {
                format!("rayon-{workers}")
            };
            group.bench_with_input(BenchmarkId::new(label, n), &n, |b, &n| {
                let opts = CountOptions::with_workers(workers);
                b.iter(|| count_all(black_box(n), &opts).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_b3(c: &mut Criterion) {
    let mut group = c.benchmark_group("count_b3");
    group.sample_size(10);
    group.bench_function("n=7", |b| b.iter(|| count_b3(black_box(7)).unwrap()));
    group.finish();
}

fn bench_table(c: &mut Criterion) {
    let cumulants = nu_cumulants(&meander_numbers()).unwrap();
    c.bench_function("moments_order_48", |b| {
        b.iter(|| cumulants_to_moments(black_box(&cumulants)))
    });
}

criterion_group!(benches, bench_count_all, bench_b3, bench_table);
criterion_main!(benches);
