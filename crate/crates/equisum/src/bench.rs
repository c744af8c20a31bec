//! Timing harness for the solver.

use std::time::{Duration, Instant};

use equisum_core::{enumerate_feasible, pisolve::solve_detailed, Error, Instance, Partitioning};
use serde::Serialize;

/// One timed solve. `error` is set (and timing left empty) when the instance
/// could not be built or solved.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRecord {
    pub n: u64,
    pub k: u64,
    pub t: u64,
    pub meander_stop: bool,
    pub rep: u32,
    pub wall_time: Option<Duration>,
    pub steps: Option<u64>,
    pub error: Option<String>,
}

/// CSV row, columns `n,k,t,meander_stop,rep,wall_ns,steps,error`.
#[derive(Serialize)]
pub struct CsvRow {
    n: u64,
    k: u64,
    t: u64,
    meander_stop: bool,
    rep: u32,
    wall_ns: Option<u128>,
    steps: Option<u64>,
    error: String,
}

impl From<&BenchRecord> for CsvRow {
    fn from(r: &BenchRecord) -> Self {
        CsvRow {
            n: r.n,
            k: r.k,
            t: r.t,
            meander_stop: r.meander_stop,
            rep: r.rep,
            wall_ns: r.wall_time.map(|d| d.as_nanos()),
            steps: r.steps,
            error: r.error.clone().unwrap_or_default(),
        }
    }
}

/// The largest feasible `k` for `n` (always the Gauss pair).
pub fn largest_k(n: u64) -> Result<u64, Error> {
    enumerate_feasible(n)?.last().map(|&(k, _)| k).ok_or(Error::NonPositive { name: "n" })
}

/// Builds the instance for `(n, k)`, defaulting `k` to [`largest_k`].
pub fn bench_instance(n: u64, k: Option<u64>) -> Result<Instance, Error> {
    let k = match k {
        Some(k) => k,
        None => largest_k(n)?,
    };
    Instance::from_n_k(n, k)
}

/// Times `reps` solves of each `(n, k)`. Failures become error records and do
/// not stop the run. Records come out sorted by `(n, k, rep)`.
pub fn run(ns: &[u64], k: Option<u64>, reps: u32, meander_stop: bool) -> Vec<BenchRecord> {
    let mut out = Vec::new();
    for &n in ns {
        let inst = match bench_instance(n, k) {
            Ok(inst) => inst,
            Err(e) => {
                out.push(BenchRecord {
                    n,
                    k: k.unwrap_or(0),
                    t: 0,
                    meander_stop,
                    rep: 0,
                    wall_time: None,
                    steps: None,
                    error: Some(e.to_string()),
                });
                continue;
            }
        };
        for rep in 0..reps {
            let (elapsed, result) = time_solve(inst, meander_stop);
            let (steps, error) = match result {
                Ok((_, steps)) => (Some(steps), None),
                Err(e) => (None, Some(e.to_string())),
            };
            out.push(BenchRecord {
                n,
                k: inst.k(),
                t: inst.t(),
                meander_stop,
                rep,
                wall_time: error.is_none().then_some(elapsed),
                steps,
                error,
            });
        }
    }
    out.sort_by_key(|r| (r.n, r.k, r.rep));
    out
}

/// Solves once, returning the elapsed time, the partitioning and the step count.
pub fn time_solve(inst: Instance, meander_stop: bool) -> (Duration, Result<(Partitioning, u64), Error>) {
    let start = Instant::now();
    let result = solve_detailed(inst, meander_stop);
    let elapsed = start.elapsed();
    (elapsed, result.map(|s| (s.partitioning, s.steps.len() as u64)))
}

pub fn median(samples: &mut [Duration]) -> Option<Duration> {
    if samples.is_empty() {
        return None;
    }
    samples.sort_unstable();
    let mid = samples.len() / 2;
    Some(if samples.len() % 2 == 1 { samples[mid] } else { (samples[mid - 1] + samples[mid]) / 2 })
}

/// Median wall time per `(n, k)` over the successful records.
pub fn medians(records: &[BenchRecord]) -> Vec<(u64, u64, Duration)> {
    let mut out = Vec::new();
    for chunk in records.chunk_by(|a, b| (a.n, a.k) == (b.n, b.k)) {
        let mut times: Vec<_> = chunk.iter().filter_map(|r| r.wall_time).collect();
        if let Some(m) = median(&mut times) {
            out.push((chunk[0].n, chunk[0].k, m));
        }
    }
    out
}

pub fn write_csv<W: std::io::Write>(w: W, records: &[BenchRecord]) -> Result<(), csv::Error> {
    let mut wtr = csv::Writer::from_writer(w);
    for r in records {
        wtr.serialize(CsvRow::from(r))?;
    }
    wtr.flush()?;
    Ok(())
}
