//! Triangular numbers and feasibility of homogeneous instances.

use alloc::vec::Vec;

use crate::error::Error;

/// `n (n + 1) / 2`, or [`Error::Overflow`] when it does not fit in a `u64`.
pub fn delta(n: u64) -> Result<u64, Error> {
    let (a, b) = if n.is_multiple_of(2) { (n / 2, n.checked_add(1)) } else { (n, n.checked_add(1).map(|m| m / 2)) };
    b.and_then(|b| a.checked_mul(b)).ok_or(Error::Overflow)
}

/// A homogeneous instance `(n, k, t)` with `k * t = delta(n)` and `t >= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Instance {
    n: u64,
    k: u64,
    t: u64,
}

impl Instance {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Derives `t = delta(n) / k`; fails with [`Error::InfeasibleSum`] when
    /// `k` does not divide `delta(n)`.
    pub fn from_n_k(n: u64, k: u64) -> Result<Self, Error> {
        if k == 0 {
            return Err(Error::NonPositive { name: "k" });
        }
        let d = delta(n)?;
        if d % k != 0 {
            return Err(Error::InfeasibleSum { k, t: d / k, delta: d });
        }
        make_instance(n, k, d / k)
    }
}

/// Validates `(n, k, t)`. The sum condition is checked before `t >= n`.
pub fn make_instance(n: u64, k: u64, t: u64) -> Result<Instance, Error> {
    for (name, v) in [("n", n), ("k", k), ("t", t)] {
        if v == 0 {
            return Err(Error::NonPositive { name });
        }
    }
    let d = delta(n)?;
    if u128::from(k) * u128::from(t) != u128::from(d) {
        return Err(Error::InfeasibleSum { k, t, delta: d });
    }
    if t < n {
        return Err(Error::InfeasibleTarget { n, t });
    }
    Ok(Instance { n, k, t })
}

fn factorize(mut m: u64, out: &mut Vec<(u64, u32)>) {
    let mut p = 2u64;
    while p.saturating_mul(p) <= m {
        if m.is_multiple_of(p) {
            let mut e = 0;
            while m.is_multiple_of(p) {
                m /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if m > 1 {
        out.push((m, 1));
    }
}

/// All `(k, t)` with `k * t = delta(n)`, ascending in `k`, including the
/// pairs with `t < n`.
///
/// `n` and `n + 1` are coprime, so the divisors of `delta(n)` come from
/// trial-dividing the two halves separately.
pub fn divisor_pairs(n: u64) -> Result<Vec<(u64, u64)>, Error> {
    let d = delta(n)?;
    if d == 0 {
        return Ok(Vec::new());
    }
    let (a, b) = if n.is_multiple_of(2) { (n / 2, n + 1) } else { (n, n.div_ceil(2)) };
    let mut factors = Vec::new();
    factorize(a, &mut factors);
    factorize(b, &mut factors);

    let mut divisors = alloc::vec![1u64];
    for (p, e) in factors {
        let len = divisors.len();
        let mut pk = 1u64;
        for _ in 0..e {
            pk *= p;
            for i in 0..len {
                divisors.push(divisors[i] * pk);
            }
        }
    }
    divisors.sort_unstable();
    Ok(divisors.into_iter().map(|k| (k, d / k)).collect())
}

/// All feasible `(k, t)` for `n` (those with `t >= n`), ascending in `k`.
pub fn enumerate_feasible(n: u64) -> Result<Vec<(u64, u64)>, Error> {
    let mut pairs = divisor_pairs(n)?;
    pairs.retain(|&(_, t)| t >= n);
    Ok(pairs)
}
