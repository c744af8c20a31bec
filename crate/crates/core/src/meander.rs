//! Closed-form constructions: Gauss pairings and meander matrices.
//!
//! For even `n` with `2k | n` the elements `1..=n` are laid out in an
//! `n/k x k` grid whose rows snake back and forth: row `2i-1` runs
//! `n - 2k(i-1) - (j-1)` (descending in `j`), row `2i` runs `n - 2ki + j`
//! (ascending). Every column then consists of `n/2k` pairs summing to `n + 1`
//! and is a container. For odd `n` with `2k | n + 1`, the element `0` is added
//! and the even construction is run on `{0, ..., n}`; it is dropped again from
//! the resulting containers.

use alloc::vec::Vec;

use crate::error::Error;
use crate::instance::delta;
use crate::partitioning::{Container, Partitioning};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussParams {
    pub k: u64,
    pub t: u64,
}

/// `k_G = ceil(n/2)`, `t_G = n` for odd `n` and `n + 1` for even `n`.
pub fn gauss_params(n: u64) -> GaussParams {
    GaussParams { k: n.div_ceil(2), t: if n % 2 == 1 { n } else { n + 1 } }
}

/// The Gauss pairing: `{i, n+1-i}`, plus the singleton `{n}` first for odd `n`.
pub fn gauss_partitioning(n: u64) -> Result<Partitioning, Error> {
    if n == 0 {
        return Err(Error::NonPositive { name: "n" });
    }
    let GaussParams { k, t } = gauss_params(n);
    let containers = if n % 2 == 1 {
        core::iter::once(Container::new(alloc::vec![n]))
            .chain((2..=k).map(|i| Container::new(alloc::vec![i - 1, n - (i - 1)])))
            .collect()
    } else {
        (1..=k).map(|i| Container::new(alloc::vec![i, n - (i - 1)])).collect()
    };
    Ok(Partitioning::new(n, t, containers))
}

pub fn meander_applicable(n: u64, k: u64) -> bool {
    if n == 0 || k == 0 {
        return false;
    }
    let Some(two_k) = k.checked_mul(2) else { return false };
    if n.is_multiple_of(2) {
        n.is_multiple_of(two_k)
    } else {
        n.checked_add(1).is_some_and(|m| m % two_k == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    /// Cells are `{1, ..., n}`.
    EvenN,
    /// Cells are `{0, ..., n}`.
    OddN,
}

/// Row-major `rows x cols` grid; column `j` is container `T_{j+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeanderMatrix {
    n: u64,
    rows: usize,
    cols: usize,
    cells: Vec<u64>,
    parity: Parity,
}

impl MeanderMatrix {
    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// 0-based cell access.
    pub fn cell(&self, row: usize, col: usize) -> u64 {
        self.cells[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[u64] {
        &self.cells[row * self.cols..(row + 1) * self.cols]
    }

    pub fn column(&self, col: usize) -> impl Iterator<Item = u64> + '_ {
        (0..self.rows).map(move |r| self.cell(r, col))
    }

    /// Column `col` as a container, with a phantom `0` removed.
    pub fn container(&self, col: usize) -> Container {
        Container::new(self.column(col).filter(|&e| e != 0).collect())
    }

    /// Common column sum `delta(n) / k`.
    pub fn target(&self) -> u64 {
        // delta(n) fits: the matrix was built from a valid n.
        delta(self.n).unwrap_or(0) / self.cols as u64
    }

    pub fn to_partitioning(&self) -> Partitioning {
        Partitioning::new(self.n, self.target(), (0..self.cols).map(|j| self.container(j)).collect())
    }
}

/// Builds the meander grid for `(n, k)`.
pub fn meander_matrix(n: u64, k: u64) -> Result<MeanderMatrix, Error> {
    if !meander_applicable(n, k) {
        return Err(Error::MeanderNotApplicable { n, k });
    }
    delta(n)?;
    let (m, parity) = if n.is_multiple_of(2) { (n, Parity::EvenN) } else { (n + 1, Parity::OddN) };
    // the odd grid is the even grid for m = n + 1 relabelled by -1
    let shift = m - n;
    let loops = m / (2 * k);
    let rows = usize::try_from(2 * loops).map_err(|_| Error::Overflow)?;
    let cols = usize::try_from(k).map_err(|_| Error::Overflow)?;
    let mut cells = Vec::with_capacity(rows.checked_mul(cols).ok_or(Error::Overflow)?);
    for i in 1..=loops {
        cells.extend((1..=k).map(|j| m - (2 * k * (i - 1) + (j - 1)) - shift));
        cells.extend((1..=k).map(|j| m - 2 * k * i + j - shift));
    }
    Ok(MeanderMatrix { n, rows, cols, cells, parity })
}

/// The meander grid together with its columns as a partitioning.
pub fn meander_partitioning(n: u64, k: u64) -> Result<(MeanderMatrix, Partitioning), Error> {
    let matrix = meander_matrix(n, k)?;
    let p = matrix.to_partitioning();
    Ok((matrix, p))
}
