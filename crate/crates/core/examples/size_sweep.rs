//! Spanner size across graph sizes, as CSV on stdout.
//!
//! cargo run --release --example size_sweep -- 256,512,1024,2048

use additive_spanner::cli::{bench_rows, write_bench_csv, AlgoArg, BenchArgs};

fn main() -> additive_spanner::Result<()> {
    let sizes = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "256,512,1024".into());
    let args = BenchArgs {
        algo: AlgoArg::Fast,
        n: sizes
            .split(',')
            .map(|s| s.trim().parse().expect("node count"))
            .collect(),
        m: None,
        density: 10.0,
        seeds: 3,
        seed: 0,
        weights: None,
        epsilon: None,
        mu: None,
        verify: false,
        pair_sample: None,
        csv: None,
    };
    write_bench_csv(&bench_rows(&args)?, std::io::stdout())
}
