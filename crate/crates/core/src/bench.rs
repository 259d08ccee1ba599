//! Timing harness behind `latnorm bench` and the scaling acceptance check.

use std::time::{Duration, Instant};

use crate::diameter::lattice_diameter_fast;
use crate::error::Result;
use crate::instances::{generate, GeneratorSpec};
use crate::lattice::{convex_hull, DigitalSet};
use crate::normalize::to_almost_4_connected;

pub const CSV_HEADER: &str = "n,h,k,diameter_ms,normalize_ms,rows_scanned";

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub h: usize,
    pub k: u64,
    pub diameter_ms: f64,
    pub normalize_ms: f64,
    pub rows_scanned: u64,
}

impl BenchRow {
    pub fn to_csv(&self) -> String {
        format!(
            "{},{},{},{:.3},{:.3},{}",
            self.n, self.h, self.k, self.diameter_ms, self.normalize_ms, self.rows_scanned
        )
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BenchConfig {
    pub warmups: usize,
    pub repetitions: usize,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self { warmups: 3, repetitions: 5 }
    }
}

/// Median wall-clock time of `f` after `warmups` unmeasured runs.
pub fn median_time<T>(cfg: BenchConfig, mut f: impl FnMut() -> Result<T>) -> Result<Duration> {
    for _ in 0..cfg.warmups {
        f()?;
    }
    let mut times = Vec::with_capacity(cfg.repetitions.max(1));
    for _ in 0..cfg.repetitions.max(1) {
        let start = Instant::now();
        std::hint::black_box(f()?);
        times.push(start.elapsed());
    }
    times.sort_unstable();
    Ok(times[times.len() / 2])
}

/// Disc whose point count is close to `n`.
pub fn disc_of_size(n: u64) -> Result<DigitalSet> {
    let radius = ((n as f64) / std::f64::consts::PI).sqrt().round().max(1.0) as i64;
    generate(&GeneratorSpec::Disc { radius })
}

/// Times hull + diameter, and the full normalization, on `s`.
pub fn bench_set(s: &DigitalSet, cfg: BenchConfig) -> Result<BenchRow> {
    let hull = convex_hull(s)?;
    let (d, stats) = lattice_diameter_fast(s, &hull)?;
    let diameter = median_time(cfg, || lattice_diameter_fast(s, &convex_hull(s)?))?;
    let normalize = median_time(cfg, || to_almost_4_connected(s))?;
    Ok(BenchRow {
        n: s.len(),
        h: hull.len(),
        k: d.k,
        diameter_ms: diameter.as_secs_f64() * 1e3,
        normalize_ms: normalize.as_secs_f64() * 1e3,
        rows_scanned: stats.rows_scanned,
    })
}
