use core::fmt;

use crate::pisolve::CaseTag;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("arithmetic overflow")]
    Overflow,
    #[error("{name} must be positive")]
    NonPositive { name: &'static str },
    #[error("k*t = {k}*{t} does not equal delta(n) = {delta}")]
    InfeasibleSum { k: u64, t: u64, delta: u64 },
    #[error("target t = {t} is smaller than n = {n}")]
    InfeasibleTarget { n: u64, t: u64 },
    #[error("not a valid partitioning")]
    InvalidPartitioning,
    #[error("meander construction needs 2k | n for even n or 2k | n+1 for odd n (n = {n}, k = {k})")]
    MeanderNotApplicable { n: u64, k: u64 },
    #[error("oracle refuses n = {n} (limit {max_n})")]
    OracleLimit { n: u64, max_n: u64 },
    #[error("oracle limit max_n = {max_n} exceeds the hard cap {cap}")]
    OracleCap { max_n: u64, cap: u64 },
    #[error("oracle search budget of {max_nodes} nodes exceeded")]
    BudgetExceeded { max_nodes: u64 },
    #[error("internal invariant violated: {0}")]
    Invariant(InvariantViolation),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvariantKind {
    /// `delta(n') != k' * t'` for an emitted frame.
    DeltaMismatch,
    /// `t' < n'` for an emitted frame.
    TargetBelowCount,
    /// The case preconditions do not hold for the incoming frame.
    Precondition,
    /// Placed elements are not exactly `{n'+1, ..., n}`.
    Accounting,
}

/// Where a recursion step broke and with which parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvariantViolation {
    pub kind: InvariantKind,
    pub case: CaseTag,
    pub n: u64,
    pub k: u64,
    pub t: u64,
}

impl fmt::Display for InvariantViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match self.kind {
            InvariantKind::DeltaMismatch => "delta(n') != k'*t'",
            InvariantKind::TargetBelowCount => "t' < n'",
            InvariantKind::Precondition => "case precondition",
            InvariantKind::Accounting => "element accounting",
        };
        write!(f, "{what} in {:?} step at ({}, {}, {})", self.case, self.n, self.k, self.t)
    }
}
