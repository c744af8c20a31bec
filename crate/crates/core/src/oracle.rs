//! Backtracking reference solver for small `n`.
//!
//! Elements are placed from `n` down to `1`, each into a container with
//! enough room. Containers with the same remaining capacity are
//! interchangeable, so only the first of them is tried. Nothing here shares
//! code with the constructive solvers.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;
use crate::instance::{delta, divisor_pairs};
use crate::partitioning::{Container, Partitioning};

/// Hard cap on [`OracleLimits::max_n`].
pub const MAX_N_CAP: u64 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleLimits {
    max_n: u64,
    max_nodes: u64,
}

impl OracleLimits {
    pub fn new(max_n: u64, max_nodes: u64) -> Result<Self, Error> {
        if max_n > MAX_N_CAP {
            return Err(Error::OracleCap { max_n, cap: MAX_N_CAP });
        }
        if max_n == 0 {
            return Err(Error::NonPositive { name: "max_n" });
        }
        if max_nodes == 0 {
            return Err(Error::NonPositive { name: "max_nodes" });
        }
        Ok(OracleLimits { max_n, max_nodes })
    }

    pub fn max_n(&self) -> u64 {
        self.max_n
    }

    pub fn max_nodes(&self) -> u64 {
        self.max_nodes
    }
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_n: 30, max_nodes: 50_000_000 }
    }
}

struct Search {
    remaining: Vec<u64>,
    owner: Vec<usize>,
    nodes: u64,
    max_nodes: u64,
}

impl Search {
    /// Places `e, e-1, ..., 1`. `Ok(false)` means exhausted.
    fn place(&mut self, e: u64) -> Result<bool, Error> {
        if e == 0 {
            return Ok(true);
        }
        self.nodes += 1;
        if self.nodes > self.max_nodes {
            return Err(Error::BudgetExceeded { max_nodes: self.max_nodes });
        }
        let mut tried: Vec<u64> = Vec::new();
        for j in 0..self.remaining.len() {
            let cap = self.remaining[j];
            if cap < e || tried.contains(&cap) {
                continue;
            }
            tried.push(cap);
            self.remaining[j] -= e;
            self.owner[e as usize] = j;
            if self.place(e - 1)? {
                return Ok(true);
            }
            self.remaining[j] += e;
        }
        Ok(false)
    }
}

/// Finds some `(k, t)` partitioning of `{1, ..., n}`, or `None` if there is
/// none. [`Error::BudgetExceeded`] is not a negative answer.
pub fn brute_force_solve(n: u64, k: u64, t: u64, limits: OracleLimits) -> Result<Option<Partitioning>, Error> {
    if n > limits.max_n {
        return Err(Error::OracleLimit { n, max_n: limits.max_n });
    }
    if n == 0 || k == 0 || t == 0 {
        return Err(Error::NonPositive { name: if n == 0 { "n" } else if k == 0 { "k" } else { "t" } });
    }
    if u128::from(k) * u128::from(t) != u128::from(delta(n)?) {
        return Ok(None);
    }
    let mut search = Search {
        remaining: vec![t; k as usize],
        owner: vec![0; n as usize + 1],
        nodes: 0,
        max_nodes: limits.max_nodes,
    };
    if !search.place(n)? {
        return Ok(None);
    }
    let mut containers = vec![Vec::new(); k as usize];
    for e in 1..=n {
        containers[search.owner[e as usize]].push(e);
    }
    Ok(Some(Partitioning::new(n, t, containers.into_iter().map(Container::new).collect())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepEntry {
    pub n: u64,
    pub k: u64,
    pub t: u64,
    /// Oracle solvability, or the error (budget) that prevented an answer.
    pub solvable: Result<bool, Error>,
}

/// Oracle solvability of every `(n, k, t)` with `n <= n_max` and
/// `k * t = delta(n)`, including `t < n`.
pub fn existence_sweep(n_max: u64, limits: OracleLimits) -> Result<Vec<SweepEntry>, Error> {
    if n_max > limits.max_n {
        return Err(Error::OracleLimit { n: n_max, max_n: limits.max_n });
    }
    let mut out = Vec::new();
    for n in 1..=n_max {
        for (k, t) in divisor_pairs(n)? {
            let solvable = brute_force_solve(n, k, t, limits).map(|r| r.is_some());
            out.push(SweepEntry { n, k, t, solvable });
        }
    }
    Ok(out)
}
