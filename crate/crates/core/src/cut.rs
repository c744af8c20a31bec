//! Cutting sticks: `k` sticks of length `t` cut into pieces of lengths
//! `1, ..., n` are exactly a `(k, t)` partitioning of `{1, ..., n}`.

use alloc::vec::Vec;

use crate::error::Error;
use crate::partitioning::{verify, Container, Partitioning};

/// Cut offsets per stick. Offsets are strictly increasing and lie in `(0, t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPlan {
    t: u64,
    sticks: Vec<Vec<u64>>,
}

impl CutPlan {
    pub fn stick_length(&self) -> u64 {
        self.t
    }

    pub fn sticks(&self) -> &[Vec<u64>] {
        &self.sticks
    }

    /// Piece lengths of stick `j`, in cut order.
    pub fn pieces(&self, j: usize) -> Vec<u64> {
        let cuts = &self.sticks[j];
        let mut prev = 0;
        cuts.iter()
            .copied()
            .chain(core::iter::once(self.t))
            .map(|c| {
                let piece = c - prev;
                prev = c;
                piece
            })
            .collect()
    }

    /// Rebuilds the partitioning whose containers are the piece lengths.
    pub fn to_partitioning(&self, n: u64) -> Partitioning {
        let containers = (0..self.sticks.len()).map(|j| Container::new(self.pieces(j))).collect();
        Partitioning::new(n, self.t, containers)
    }
}

/// Offsets are the prefix sums of each container (ascending), without the
/// trailing `t`.
pub fn cut_plan(p: &Partitioning) -> Result<CutPlan, Error> {
    if !verify(p).valid() {
        return Err(Error::InvalidPartitioning);
    }
    let sticks = p
        .containers()
        .iter()
        .map(|c| {
            let head = c.elements().split_last().map_or(&[][..], |(_, rest)| rest);
            let mut acc = 0;
            head.iter()
                .map(|&e| {
                    acc += e;
                    acc
                })
                .collect()
        })
        .collect();
    Ok(CutPlan { t: p.t(), sticks })
}
