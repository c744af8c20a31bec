//! Human-readable output. Containers are numbered from 1 here.

use std::fmt::Write;

use equisum_core::pisolve::MeanderStop;
use equisum_core::{MeanderMatrix, Partitioning, VerificationReport};

fn join(els: &[u64]) -> String {
    els.iter().map(u64::to_string).collect::<Vec<_>>().join(", ")
}

pub fn partitioning_text(p: &Partitioning) -> String {
    let mut s = format!("n={} k={} t={}\n", p.n(), p.k(), p.t());
    for (j, c) in p.containers().iter().enumerate() {
        let _ = writeln!(s, "T_{} = {{{}}}", j + 1, join(c.elements()));
    }
    s
}

pub fn partitioning_csv(p: &Partitioning) -> String {
    let mut s = String::from("container,elements\n");
    for (j, c) in p.containers().iter().enumerate() {
        let els: Vec<_> = c.elements().iter().map(u64::to_string).collect();
        let _ = writeln!(s, "{},{}", j + 1, els.join(" "));
    }
    s
}

/// Columns right-aligned under a `T_j` header, one grid row per line.
pub fn matrix_text(m: &MeanderMatrix, labels: &[String]) -> String {
    let width = (0..m.rows())
        .flat_map(|r| m.row(r).iter().map(|v| v.to_string().len()))
        .chain(labels.iter().map(String::len))
        .max()
        .unwrap_or(1);
    let line = |cells: Vec<String>| cells.iter().map(|c| format!("{c:>width$}")).collect::<Vec<_>>().join(" ");
    let mut s = line(labels.to_vec());
    s.push('\n');
    s.push_str(&"-".repeat(labels.len() * (width + 1) - 1));
    s.push('\n');
    for r in 0..m.rows() {
        s.push_str(&line(m.row(r).iter().map(u64::to_string).collect()));
        s.push('\n');
    }
    s
}

pub fn meander_stop_text(stop: &MeanderStop) -> String {
    let labels: Vec<String> = stop.roots.iter().map(|r| format!("T_{}", r + 1)).collect();
    matrix_text(&stop.matrix, &labels)
}

fn ranges(r: &[(u64, u64)]) -> String {
    r.iter()
        .map(|&(lo, hi)| if lo == hi { lo.to_string() } else { format!("{lo}..={hi}") })
        .collect::<Vec<_>>()
        .join(", ")
}

pub fn report_text(r: &VerificationReport, t: u64) -> String {
    if r.valid() {
        return "valid\n".into();
    }
    let mut s = String::from("invalid\n");
    for &(j, sum) in &r.sum_failures {
        let _ = writeln!(s, "sum failure: T_{} sums to {sum}, expected {t}", j + 1);
    }
    if !r.duplicate_elements.is_empty() {
        let _ = writeln!(s, "duplicate elements: {}", join(&r.duplicate_elements));
    }
    if !r.missing.is_empty() {
        let _ = writeln!(s, "missing elements: {}", ranges(&r.missing));
    }
    if !r.foreign_elements.is_empty() {
        let _ = writeln!(s, "foreign elements: {}", join(&r.foreign_elements));
    }
    s
}

pub fn report_json(r: &VerificationReport) -> String {
    // sums of malformed input can exceed u64
    let sums: Vec<_> = r
        .sum_failures
        .iter()
        .map(|&(j, s)| match u64::try_from(s) {
            Ok(s) => serde_json::json!([j + 1, s]),
            Err(_) => serde_json::json!([j + 1, s.to_string()]),
        })
        .collect();
    let missing: Vec<_> = r.missing.iter().map(|&(lo, hi)| serde_json::json!([lo, hi])).collect();
    serde_json::json!({
        "valid": r.valid(),
        "sum_failures": sums,
        "duplicate_elements": r.duplicate_elements,
        "missing_ranges": missing,
        "foreign_elements": r.foreign_elements,
    })
    .to_string()
}
