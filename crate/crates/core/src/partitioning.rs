//! Containers, partitionings and the verifier.

use alloc::vec::Vec;

use smallvec::SmallVec;

use crate::error::Error;
use crate::instance::{make_instance, Instance};

/// A set of distinct positive integers, kept in ascending order.
///
/// Construction sorts but does not deduplicate, so that [`verify`] can report
/// duplicates found in malformed input.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Container {
    // most solver output is pairs, which then need no heap allocation
    elements: SmallVec<[u64; 2]>,
}

pub(crate) type Elements = SmallVec<[u64; 2]>;

impl Container {
    pub fn new(mut elements: Vec<u64>) -> Self {
        elements.sort_unstable();
        Container { elements: SmallVec::from_vec(elements) }
    }

    pub(crate) fn from_sorted(elements: Elements) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] <= w[1]));
        Container { elements }
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn sum(&self) -> u128 {
        self.elements.iter().map(|&e| u128::from(e)).sum()
    }

    pub fn into_elements(self) -> Vec<u64> {
        self.elements.into_vec()
    }
}

impl From<Vec<u64>> for Container {
    fn from(v: Vec<u64>) -> Self {
        Container::new(v)
    }
}

/// An ordered list of containers claimed to partition `{1, ..., n}` into
/// sums of `t`. `k` is the number of containers.
///
/// Nothing is checked on construction; use [`verify`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partitioning {
    n: u64,
    t: u64,
    containers: Vec<Container>,
}

impl Partitioning {
    pub fn new(n: u64, t: u64, containers: Vec<Container>) -> Self {
        Partitioning { n, t, containers }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn k(&self) -> u64 {
        self.containers.len() as u64
    }

    pub fn containers(&self) -> &[Container] {
        &self.containers
    }

    pub fn into_containers(self) -> Vec<Container> {
        self.containers
    }

    /// The `(n, k, t)` instance this partitioning claims to solve.
    pub fn instance(&self) -> Result<Instance, Error> {
        make_instance(self.n, self.k(), self.t)
    }
}

/// Outcome of [`verify`]. Container indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    /// `(container index, actual sum)` for every container not summing to `t`.
    pub sum_failures: Vec<(usize, u128)>,
    /// Elements of `{1, ..., n}` occurring more than once, ascending.
    pub duplicate_elements: Vec<u64>,
    /// Elements of `{1, ..., n}` occurring nowhere, as inclusive ranges.
    pub missing: Vec<(u64, u64)>,
    /// Elements outside `{1, ..., n}`, ascending and deduplicated.
    pub foreign_elements: Vec<u64>,
}

impl VerificationReport {
    pub fn valid(&self) -> bool {
        self.sum_failures.is_empty()
            && self.duplicate_elements.is_empty()
            && self.missing.is_empty()
            && self.foreign_elements.is_empty()
    }

    pub fn missing_elements(&self) -> impl Iterator<Item = u64> + '_ {
        self.missing.iter().flat_map(|&(lo, hi)| lo..=hi)
    }

    pub fn missing_count(&self) -> u64 {
        self.missing.iter().map(|&(lo, hi)| hi - lo + 1).sum()
    }
}

/// Checks the three partitioning conditions: every container sums to `t`,
/// containers are pairwise disjoint, and together they cover `{1, ..., n}`.
///
/// Total over arbitrary input. Runs in `O(m log m)` for `m` stored elements;
/// missing elements are reported as ranges so a huge `n` costs nothing extra.
pub fn verify(p: &Partitioning) -> VerificationReport {
    let mut report = VerificationReport::default();
    let t = u128::from(p.t);
    for (i, c) in p.containers.iter().enumerate() {
        let s = c.sum();
        if s != t {
            report.sum_failures.push((i, s));
        }
    }

    let mut all: Vec<u64> = p.containers.iter().flat_map(|c| c.elements.iter().copied()).collect();
    all.sort_unstable();

    let mut next_expected = 1u64; // smallest in-range element not yet seen
    let mut prev: Option<u64> = None;
    for &e in &all {
        let repeat = prev == Some(e);
        prev = Some(e);
        if e == 0 || e > p.n {
            if !repeat {
                report.foreign_elements.push(e);
            }
            continue;
        }
        if repeat {
            if report.duplicate_elements.last() != Some(&e) {
                report.duplicate_elements.push(e);
            }
            continue;
        }
        if e > next_expected {
            report.missing.push((next_expected, e - 1));
        }
        next_expected = e + 1;
    }
    if p.n >= next_expected {
        report.missing.push((next_expected, p.n));
    }
    report
}
