//! A small benchmark run: CSV on stdout, summary and trend fit on stderr.
//!
//!     cargo run --release --example benchmark -- 5000 > runs.csv

use craig_refute::bench::{run_bench, write_csv, BenchConfig, RunSummary, PUBLISHED_SMALL};
use craig_refute::GenConfig;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n = std::env::args().nth(1).map_or(Ok(1000), |s| s.parse())?;
    let mut config = BenchConfig::new(n, GenConfig::new(10, 10, 4, 2024).up_to(true));
    config.jobs = 0;
    let rows = run_bench(&config)?;
    write_csv(&rows, std::io::stdout().lock())?;

    let s = RunSummary::from_records(&rows);
    eprintln!(
        "{} instances, mean {:.2e} s, mean interpolant size {:.1}",
        s.n, s.mean_time, s.mean_size_interp
    );
    eprintln!(
        "time ≈ {:.3e} · size_xy + {:.3e}  (r² = {:.3})",
        s.slope, s.intercept, s.r2
    );
    eprintln!(
        "published for the same setting: {} s, size {}",
        PUBLISHED_SMALL.0, PUBLISHED_SMALL.1
    );
    Ok(())
}
