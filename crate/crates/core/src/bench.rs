//! Operation-count benchmark over random graphs just above the density
//! threshold.

use std::fmt::{self, Write as _};
use std::time::Instant;

use crate::driver::find_minor;
use crate::gen::gen_random;
use crate::numeric::{ceil, int};
use crate::preprocess::Config;

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub m: usize,
    pub ops: u64,
    pub ms: f64,
    pub found: bool,
    pub rounds: usize,
    /// Why the row failed, if it did.
    pub error: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct BenchReport {
    pub rows: Vec<BenchRow>,
}

impl BenchReport {
    /// One `n=.. ops=.. ms=..` line per row.
    pub fn machine_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            writeln!(out, "n={} ops={} ms={:.3}", r.n, r.ops, r.ms).unwrap();
        }
        out
    }
}

impl fmt::Display for BenchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{:>10} {:>10} {:>12} {:>10} {:>6} {:>6}  note", "n", "m", "ops", "ms", "found", "rounds")?;
        for r in &self.rows {
            writeln!(
                f,
                "{:>10} {:>10} {:>12} {:>10.3} {:>6} {:>6}  {}",
                r.n,
                r.m,
                r.ops,
                r.ms,
                r.found,
                r.rounds,
                r.error.as_deref().unwrap_or("")
            )?;
        }
        Ok(())
    }
}

/// `⌈D·n/2⌉ + n` edges for `n` vertices.
pub fn bench_edges(cfg: &Config, n: usize) -> usize {
    ceil(&(cfg.density_target() * int(n as i128) / int(2))) as usize + n
}

/// Runs the search once per size on a seeded random graph with
/// [`bench_edges`] edges.
pub fn bench_run(sizes: &[usize], cfg: &Config, seed: u64) -> BenchReport {
    let instances: Vec<(usize, usize)> = sizes.iter().map(|&n| (n, bench_edges(cfg, n))).collect();
    bench_instances(&instances, cfg, seed)
}

/// Like [`bench_run`] with explicit `(n, m)` pairs.
pub fn bench_instances(instances: &[(usize, usize)], cfg: &Config, seed: u64) -> BenchReport {
    let rows = instances
        .iter()
        .enumerate()
        .map(|(i, &(n, m))| {
            let mut row = BenchRow { n, m, ops: 0, ms: 0.0, found: false, rounds: 0, error: None };
            let g = match gen_random(n, m, seed.wrapping_add(i as u64)) {
                Ok(g) => g,
                Err(e) => {
                    row.error = Some(e.to_string());
                    return row;
                }
            };
            let start = Instant::now();
            let result = find_minor(&g, cfg);
            row.ms = start.elapsed().as_secs_f64() * 1000.0;
            match result {
                Ok(out) => {
                    row.found = true;
                    row.ops = out.stats.ops;
                    row.rounds = out.stats.rounds.len();
                }
                Err(e) => row.error = Some(e.to_string()),
            }
            row
        })
        .collect();
    BenchReport { rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> Config {
        Config::new(4, int(2))
    }

    #[test]
    fn edges_formula() {
        assert_eq!(bench_edges(&cfg(), 1000), 9000);
    }

    #[test]
    fn empty_and_small() {
        assert!(bench_run(&[], &cfg(), 1).rows.is_empty());
        let report = bench_run(&[300, 600], &cfg(), 1);
        assert!(report.rows.iter().all(|r| r.found && r.ops > 0));
        let lines = report.machine_lines();
        assert!(lines.starts_with("n=300 ops="));
        assert_eq!(lines.lines().count(), 2);
        assert_eq!(report.to_string().lines().count(), 3);
    }

    #[test]
    fn sparse_row_fails() {
        let report = bench_instances(&[(500, 1000)], &cfg(), 1);
        let row = &report.rows[0];
        assert!(!row.found);
        assert!(row.error.as_deref().unwrap().contains("average degree"), "{:?}", row.error);
    }
}
