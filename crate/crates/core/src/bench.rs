//! Experiment harness: generate valid pairs, interpolate each, and record
//! timings and sizes as CSV rows.
//!
//! Instance `i` uses seed `derive_seed(config.seed, i)` for both generation
//! and (with the random strategy) variable selection, so any row can be
//! regenerated on its own. Only the `interpolate` call is timed.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::generator::{GenConfig, Generator};
use crate::interpolate::{derive_seed, interpolate_with, simplify, InterpolateOptions, Strategy};
use crate::metrics::measure;

pub const CSV_HEADER: &str = "time_sec,size_xy,size_interp,size_interp_simplified,connectives_xy,connectives_interp,vars_xy,vars_interp,eliminations,seed";

/// Averages from the published runs of the original implementation, for
/// side-by-side display only: (mean seconds, mean interpolant size).
pub const PUBLISHED_SMALL: (f64, f64) = (0.0032, 165.0);
pub const PUBLISHED_LARGE: (f64, f64) = (0.011, 346.0);

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub time_sec: f64,
    pub size_xy: usize,
    pub size_interp: usize,
    pub size_interp_simplified: usize,
    pub connectives_xy: usize,
    pub connectives_interp: usize,
    pub vars_xy: usize,
    pub vars_interp: usize,
    pub eliminations: usize,
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BenchStrategy {
    /// Seeded random selection, seeded with the instance seed.
    Random,
    FirstAvailable,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BenchConfig {
    pub count: usize,
    /// Template for every instance; its seed is the run seed.
    pub gen: GenConfig,
    pub strategy: BenchStrategy,
    /// Check every interpolant with the oracle; fail on the first miss.
    pub verify: bool,
    /// Worker threads; 1 runs inline, 0 uses rayon's default.
    pub jobs: usize,
}

impl BenchConfig {
    pub fn new(count: usize, gen: GenConfig) -> Self {
        Self {
            count,
            gen,
            strategy: BenchStrategy::Random,
            verify: false,
            jobs: 1,
        }
    }
}

pub fn run_instance(config: &BenchConfig, instance: usize) -> Result<ExperimentRecord> {
    let seed = derive_seed(config.gen.seed, instance as u64);
    let generated = Generator::new(GenConfig { seed, ..config.gen })?.gen_pair()?;
    let pair = generated.pair;
    let strategy = match config.strategy {
        BenchStrategy::Random => Strategy::SeededRandom(seed),
        BenchStrategy::FirstAvailable => Strategy::FirstAvailable,
    };
    let options = InterpolateOptions {
        check_precondition: false,
        oracle: config.gen.oracle,
    };
    let start = Instant::now();
    let out = interpolate_with(&pair.x, &pair.y, &strategy, &options)?;
    let time_sec = start.elapsed().as_secs_f64();
    if config.verify && !config.gen.oracle.is_interpolant(&pair.x, &pair.y, &out.interpolant)? {
        return Err(Error::VerificationFailed { instance, seed });
    }
    let xy = measure(&pair);
    let interp = measure(&out.interpolant);
    Ok(ExperimentRecord {
        time_sec,
        size_xy: xy.size(),
        size_interp: interp.size(),
        size_interp_simplified: measure(&simplify(&out.interpolant)).size(),
        connectives_xy: xy.connective_count,
        connectives_interp: interp.connective_count,
        vars_xy: xy.variable_count,
        vars_interp: interp.variable_count,
        eliminations: out.trace.elimination_count(),
        seed,
    })
}

/// Rows come back in instance order whatever the number of workers.
pub fn run_bench(config: &BenchConfig) -> Result<Vec<ExperimentRecord>> {
    config.gen.validate()?;
    if config.jobs == 1 {
        return (0..config.count).map(|i| run_instance(config, i)).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(e.to_string()))?;
    pool.install(|| {
        (0..config.count)
            .into_par_iter()
            .map(|i| run_instance(config, i))
            .collect()
    })
}

pub fn write_csv<W: Write>(records: &[ExperimentRecord], out: W) -> Result<()> {
    // header by hand so an empty run still gets one
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(out);
    w.write_record(CSV_HEADER.split(','))?;
    for r in records {
        w.serialize(r)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<ExperimentRecord>> {
    let mut r = csv::Reader::from_reader(input);
    let header: Vec<String> = r.headers()?.iter().map(str::to_owned).collect();
    if header.join(",") != CSV_HEADER {
        return Err(Error::InvalidConfig(format!(
            "unexpected CSV header {}",
            header.join(",")
        )));
    }
    r.deserialize().map(|row| row.map_err(Error::from)).collect()
}

pub fn write_csv_file(records: &[ExperimentRecord], path: &Path) -> Result<()> {
    let file = File::create(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    write_csv(records, std::io::BufWriter::new(file))
}

pub fn read_csv_file(path: &Path) -> Result<Vec<ExperimentRecord>> {
    let file = File::open(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })?;
    read_csv(std::io::BufReader::new(file))
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RunSummary {
    pub n: usize,
    pub mean_time: f64,
    pub mean_size_interp: f64,
    /// Least-squares fit of `time_sec` against `size_xy`.
    pub slope: f64,
    pub intercept: f64,
    pub r2: f64,
}

impl RunSummary {
    /// Means are 0 for an empty run; the fit is NaN when fewer than two
    /// distinct `size_xy` values exist.
    pub fn from_records(records: &[ExperimentRecord]) -> Self {
        let n = records.len();
        if n == 0 {
            return Self {
                n,
                mean_time: 0.0,
                mean_size_interp: 0.0,
                slope: f64::NAN,
                intercept: f64::NAN,
                r2: f64::NAN,
            };
        }
        let xs: Vec<f64> = records.iter().map(|r| r.size_xy as f64).collect();
        let ys: Vec<f64> = records.iter().map(|r| r.time_sec).collect();
        let (slope, intercept, r2) = least_squares(&xs, &ys);
        Self {
            n,
            mean_time: mean(&ys),
            mean_size_interp: records.iter().map(|r| r.size_interp as f64).sum::<f64>() / n as f64,
            slope,
            intercept,
            r2,
        }
    }
}

fn mean(v: &[f64]) -> f64 {
    v.iter().sum::<f64>() / v.len() as f64
}

/// Two-pass ordinary least squares: `(slope, intercept, r²)`.
pub fn least_squares(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    assert_eq!(xs.len(), ys.len());
    if xs.is_empty() {
        return (f64::NAN, f64::NAN, f64::NAN);
    }
    let (mx, my) = (mean(xs), mean(ys));
    let (mut sxx, mut sxy, mut syy) = (0.0, 0.0, 0.0);
    for (x, y) in xs.iter().zip(ys) {
        let (dx, dy) = (x - mx, y - my);
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if sxx == 0.0 {
        return (f64::NAN, f64::NAN, f64::NAN);
    }
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 {
        1.0
    } else {
        (sxy * sxy / (sxx * syy)).clamp(0.0, 1.0)
    };
    (slope, my - slope * mx, r2)
}
