//! The recursive decomposition solver.
//!
//! Each step looks at a frame of `k'` open slots, all with capacity `t`, that
//! must receive exactly the elements `1..=n`. It fixes the largest elements
//! and emits at most one smaller frame:
//!
//! | case        | condition            | next `(n', k', t')`                  |
//! |-------------|----------------------|--------------------------------------|
//! | `LowEven`   | `2n-1 >= t`, `t` even | `(t-n-1, 2(k-n)+t-1, t/2)`           |
//! | `LowOdd`    | `2n-1 >= t`, `t` odd  | `(t-n-1, k-(2n-t+1)/2, t)`           |
//! | `High`      | `2n <= t`             | `(n-2k, k, t-2(n-k)-1)`              |
//!
//! with `k' = 0` and `k' = 1` as base cases and, optionally, a direct meander
//! construction whenever `(n, k')` admits one. The recursion is a chain, so the
//! driver is a loop. Every emitted frame is checked for `delta(n') = k' t'` and
//! `t' >= n'` at runtime, in all build profiles.

use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, InvariantKind, InvariantViolation};
use crate::instance::{delta, Instance};
use crate::meander::{meander_applicable, meander_matrix, MeanderMatrix};
use crate::partitioning::{Container, Elements as ContainerElements, Partitioning};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CaseTag {
    LowEven,
    LowOdd,
    High,
    BaseK1,
    BaseEmpty,
    MeanderStop,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CaseTag::LowEven => "LOW_EVEN",
            CaseTag::LowOdd => "LOW_ODD",
            CaseTag::High => "HIGH",
            CaseTag::BaseK1 => "BASE_K1",
            CaseTag::BaseEmpty => "BASE_EMPTY",
            CaseTag::MeanderStop => "MEANDER_STOP",
        })
    }
}

/// A sub-container: a capacity slice of root container `root` (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slot {
    pub root: usize,
    pub capacity: u64,
}

/// Open slots waiting for the elements `1..=n_remaining`.
///
/// Slots in a frame always share one capacity, so it is stored once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotFrame {
    roots: Vec<usize>,
    start: usize,
    capacity: u64,
    n_remaining: u64,
}

impl SlotFrame {
    pub fn new(roots: Vec<usize>, capacity: u64, n_remaining: u64) -> Self {
        SlotFrame { roots, start: 0, capacity, n_remaining }
    }

    /// One slot per root container, in order.
    pub fn for_instance(inst: Instance) -> Result<Self, Error> {
        let k = usize::try_from(inst.k()).map_err(|_| Error::Overflow)?;
        Ok(SlotFrame::new((0..k).collect(), inst.t(), inst.n()))
    }

    pub fn n_remaining(&self) -> u64 {
        self.n_remaining
    }

    pub fn capacity(&self) -> u64 {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.roots.len() - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots[self.start..]
    }

    pub fn slots(&self) -> impl Iterator<Item = Slot> + '_ {
        self.roots().iter().map(|&root| Slot { root, capacity: self.capacity })
    }

    fn k(&self) -> u64 {
        self.len() as u64
    }

    fn violation(&self, kind: InvariantKind, case: CaseTag) -> Error {
        Error::Invariant(InvariantViolation { kind, case, n: self.n_remaining, k: self.k(), t: self.capacity })
    }

    fn is_consistent(&self) -> bool {
        let (n, t) = (self.n_remaining, self.capacity);
        let sum_ok = delta(n).is_ok_and(|d| u128::from(d) == u128::from(self.k()) * u128::from(t));
        sum_ok && (self.is_empty() || t >= n.max(1))
    }
}

/// Elements fixed into one slot by a step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Elements {
    Pair(u64, u64),
    Single(u64),
    /// `first..=last`
    Range(u64, u64),
    Set(Vec<u64>),
}

impl Elements {
    /// A pair whose smaller member may be the phantom `0`.
    fn pair(low: u64, high: u64) -> Self {
        if low == 0 {
            Elements::Single(high)
        } else {
            Elements::Pair(low, high)
        }
    }

    pub fn for_each(&self, mut f: impl FnMut(u64)) {
        match self {
            Elements::Pair(a, b) => {
                f(*a);
                f(*b);
            }
            Elements::Single(a) => f(*a),
            Elements::Range(lo, hi) => (*lo..=*hi).for_each(f),
            Elements::Set(v) => v.iter().copied().for_each(f),
        }
    }

    pub fn to_vec(&self) -> Vec<u64> {
        let mut v = Vec::new();
        self.for_each(|e| v.push(e));
        v
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Placement {
    pub root: usize,
    pub elements: Elements,
}

/// One step of the solver.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CaseStep {
    pub tag: CaseTag,
    pub placements: Vec<Placement>,
    pub next: Option<SlotFrame>,
    /// The grid used by a `MeanderStop` step.
    pub matrix: Option<MeanderMatrix>,
}

/// A step without its placements, which went to a sink instead.
struct StepOutcome {
    tag: CaseTag,
    next: Option<SlotFrame>,
    matrix: Option<MeanderMatrix>,
}

impl StepOutcome {
    fn done(tag: CaseTag) -> Self {
        StepOutcome { tag, next: None, matrix: None }
    }

    fn with_next(tag: CaseTag, next: SlotFrame) -> Self {
        StepOutcome { tag, next: Some(next), matrix: None }
    }
}

fn collect(run: impl FnOnce(&mut dyn FnMut(Placement)) -> Result<StepOutcome, Error>) -> Result<CaseStep, Error> {
    let mut placements = Vec::new();
    let out = run(&mut |p| placements.push(p))?;
    Ok(CaseStep { tag: out.tag, placements, next: out.next, matrix: out.matrix })
}

fn check_next(case: CaseTag, n: u64, k: u64, t: u64) -> Result<(), Error> {
    let fail = |kind| Error::Invariant(InvariantViolation { kind, case, n, k, t });
    let d = delta(n).map_err(|_| fail(InvariantKind::DeltaMismatch))?;
    if u128::from(d) != u128::from(k) * u128::from(t) {
        return Err(fail(InvariantKind::DeltaMismatch));
    }
    if k > 0 && t < n.max(1) {
        return Err(fail(InvariantKind::TargetBelowCount));
    }
    Ok(())
}

/// Chooses and runs the step for `frame`.
pub fn dispatch(frame: SlotFrame, meander_stop: bool) -> Result<CaseStep, Error> {
    collect(|emit| step(frame, meander_stop, emit))
}

fn step(frame: SlotFrame, meander_stop: bool, emit: &mut dyn FnMut(Placement)) -> Result<StepOutcome, Error> {
    let tag = dispatch_tag(&frame, meander_stop);
    if !frame.is_consistent() {
        return Err(frame.violation(InvariantKind::Precondition, tag));
    }
    match tag {
        CaseTag::BaseEmpty => Ok(StepOutcome::done(tag)),
        CaseTag::BaseK1 => {
            emit(Placement { root: frame.roots()[0], elements: Elements::Range(1, frame.n_remaining) });
            Ok(StepOutcome::done(tag))
        }
        CaseTag::MeanderStop => meander_step(frame, emit),
        CaseTag::LowEven => low_even_step(frame, emit),
        CaseTag::LowOdd => low_odd_step(frame, emit),
        CaseTag::High => high_step(frame, emit),
    }
}

/// The case [`dispatch`] would pick, without running it.
pub fn dispatch_tag(frame: &SlotFrame, meander_stop: bool) -> CaseTag {
    let (n, k, t) = (u128::from(frame.n_remaining), frame.k(), u128::from(frame.capacity));
    match k {
        0 => CaseTag::BaseEmpty,
        1 => CaseTag::BaseK1,
        _ if meander_stop && meander_applicable(frame.n_remaining, k) => CaseTag::MeanderStop,
        _ if 2 * n > t && t % 2 == 0 => CaseTag::LowEven,
        _ if 2 * n > t => CaseTag::LowOdd,
        _ => CaseTag::High,
    }
}

/// `2n - 1 >= t`, `t` even: pair off `(2n-t)/2` slots, split the rest in two,
/// put `t/2` into the first child.
pub fn case_low_even(frame: SlotFrame) -> Result<CaseStep, Error> {
    collect(|emit| low_even_step(frame, emit))
}

fn low_even_step(frame: SlotFrame, emit: &mut dyn FnMut(Placement)) -> Result<StepOutcome, Error> {
    let tag = CaseTag::LowEven;
    let (n, t) = (frame.n_remaining, frame.capacity);
    let k = frame.len();
    let pre = t % 2 == 0 && t > n && 2 * u128::from(n) > u128::from(t) && frame.is_consistent();
    let fill = if pre { ((2 * n - t) / 2) as usize } else { k };
    if fill >= k {
        return Err(frame.violation(InvariantKind::Precondition, tag));
    }
    let roots = frame.roots();
    for (i, &root) in (1..=fill as u64).zip(roots) {
        emit(Placement { root, elements: Elements::pair(t - n + (i - 1), n - (i - 1)) });
    }
    emit(Placement { root: roots[fill], elements: Elements::Single(t / 2) });

    let mut next_roots = Vec::with_capacity(2 * (k - fill) - 1);
    next_roots.push(roots[fill]);
    for &r in &roots[fill + 1..] {
        next_roots.push(r);
        next_roots.push(r);
    }
    let next = SlotFrame::new(next_roots, t / 2, t - n - 1);
    check_next(tag, next.n_remaining, next.k(), next.capacity)?;
    Ok(StepOutcome::with_next(tag, next))
}

/// `2n - 1 >= t`, `t` odd: pair off `(2n-t+1)/2` slots, keep the rest.
///
/// For `t = n` the first pair is `{0, n}`; the `0` is dropped and the next
/// frame is the empty one.
pub fn case_low_odd(frame: SlotFrame) -> Result<CaseStep, Error> {
    collect(|emit| low_odd_step(frame, emit))
}

fn low_odd_step(frame: SlotFrame, emit: &mut dyn FnMut(Placement)) -> Result<StepOutcome, Error> {
    let tag = CaseTag::LowOdd;
    let (n, t) = (frame.n_remaining, frame.capacity);
    let k = frame.len();
    let pre = t % 2 == 1 && t >= n && 2 * u128::from(n) > u128::from(t) && frame.is_consistent();
    let fill = if pre { (2 * n - t).div_ceil(2) as usize } else { k + 1 };
    if fill > k {
        return Err(frame.violation(InvariantKind::Precondition, tag));
    }
    for (i, &root) in (1..=fill as u64).zip(frame.roots()) {
        emit(Placement { root, elements: Elements::pair(t - n + (i - 1), n - (i - 1)) });
    }

    let n_next = if t == n { 0 } else { t - n - 1 };
    let mut next = frame;
    next.start += fill;
    next.n_remaining = n_next;
    check_next(tag, next.n_remaining, next.k(), next.capacity)?;
    Ok(StepOutcome::with_next(tag, next))
}

/// `2n <= t`: every slot takes `{n-2k+i, n-(i-1)}` and keeps a child with the
/// remaining capacity `t - 2(n-k) - 1`.
pub fn case_high(frame: SlotFrame) -> Result<CaseStep, Error> {
    collect(|emit| high_step(frame, emit))
}

fn high_step(frame: SlotFrame, emit: &mut dyn FnMut(Placement)) -> Result<StepOutcome, Error> {
    let tag = CaseTag::High;
    let (n, t, k) = (frame.n_remaining, frame.capacity, frame.k());
    let pre = k >= 1 && 2 * u128::from(n) <= u128::from(t) && 2 * k <= n && frame.is_consistent();
    if !pre {
        return Err(frame.violation(InvariantKind::Precondition, tag));
    }
    for (&root, i) in frame.roots().iter().zip(1..=k) {
        emit(Placement { root, elements: Elements::Pair(n - 2 * k + i, n - (i - 1)) });
    }
    let mut next = frame;
    next.n_remaining = n - 2 * k;
    next.capacity = t - (2 * (n - k) + 1);
    check_next(tag, next.n_remaining, next.k(), next.capacity)?;
    Ok(StepOutcome::with_next(tag, next))
}

/// Fills every slot from the columns of the meander grid for `(n, k')`.
pub fn case_meander(frame: SlotFrame) -> Result<CaseStep, Error> {
    collect(|emit| meander_step(frame, emit))
}

fn meander_step(frame: SlotFrame, emit: &mut dyn FnMut(Placement)) -> Result<StepOutcome, Error> {
    let tag = CaseTag::MeanderStop;
    let matrix = meander_matrix(frame.n_remaining, frame.k())?;
    if !frame.is_consistent() || matrix.target() != frame.capacity {
        return Err(frame.violation(InvariantKind::Precondition, tag));
    }
    for (j, &root) in frame.roots().iter().enumerate() {
        let elements = if matrix.rows() == 2 {
            // top row descends, bottom row ascends: the top cell is the larger
            Elements::pair(matrix.cell(1, j), matrix.cell(0, j))
        } else {
            Elements::Set(matrix.container(j).into_elements())
        };
        emit(Placement { root, elements });
    }
    Ok(StepOutcome { tag, next: None, matrix: Some(matrix) })
}

/// One trace line: the case taken at a frame `(n, k, t)` and how many elements
/// it placed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepSummary {
    pub tag: CaseTag,
    pub n: u64,
    pub k: u64,
    pub t: u64,
    pub placed: u64,
}

impl fmt::Display for StepSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} n={} k={} t={} placed={}", self.tag, self.n, self.k, self.t, self.placed)
    }
}

/// The meander grid a solve stopped at, and the root container fed by each
/// of its columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeanderStop {
    pub matrix: MeanderMatrix,
    pub roots: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub partitioning: Partitioning,
    pub steps: Vec<StepSummary>,
    pub meander: Option<MeanderStop>,
}

pub fn solve(inst: Instance, meander_stop: bool) -> Result<Partitioning, Error> {
    solve_detailed(inst, meander_stop).map(|s| s.partitioning)
}

/// Solves `inst` and keeps the step trace.
pub fn solve_detailed(inst: Instance, meander_stop: bool) -> Result<Solution, Error> {
    const UNPLACED: u32 = u32::MAX;
    let n = usize::try_from(inst.n()).map_err(|_| Error::Overflow)?;
    if inst.k() >= u64::from(UNPLACED) {
        return Err(Error::Overflow);
    }
    // owner[e] is the root container of element e
    let mut owner = alloc::vec![UNPLACED; n + 1];
    let mut steps = Vec::new();
    let mut meander = None;

    let mut frame = Some(SlotFrame::for_instance(inst)?);
    while let Some(f) = frame {
        let (n_in, k_in, t_in) = (f.n_remaining, f.k(), f.capacity);
        let roots = (meander_stop && dispatch_tag(&f, true) == CaseTag::MeanderStop).then(|| f.roots().to_vec());

        // placed elements must be exactly n_out+1 ..= n_in, each once; the
        // range is checked once n_out is known
        let mut count = 0u64;
        let mut sum = 0u128;
        let (mut lowest, mut highest) = (u64::MAX, 0u64);
        let mut ok = true;
        let out = step(f, meander_stop, &mut |p: Placement| {
            p.elements.for_each(|e| {
                count += 1;
                sum += u128::from(e);
                lowest = lowest.min(e);
                highest = highest.max(e);
                match owner.get_mut(e as usize) {
                    Some(slot) if *slot == UNPLACED => *slot = p.root as u32,
                    _ => ok = false,
                }
            })
        })?;
        let n_out = out.next.as_ref().map_or(0, |f| f.n_remaining);
        let expected = u128::from(delta(n_in)?) - u128::from(delta(n_out)?);
        let in_range = count == 0 || (lowest > n_out && highest <= n_in);
        if !ok || !in_range || n_out > n_in || count != n_in - n_out || sum != expected {
            return Err(Error::Invariant(InvariantViolation {
                kind: InvariantKind::Accounting,
                case: out.tag,
                n: n_in,
                k: k_in,
                t: t_in,
            }));
        }

        steps.push(StepSummary { tag: out.tag, n: n_in, k: k_in, t: t_in, placed: count });
        if let (Some(matrix), Some(roots)) = (out.matrix, roots) {
            meander = Some(MeanderStop { matrix, roots });
        }
        frame = out.next;
    }

    let t = inst.t();
    let last_tag = steps.last().map_or(CaseTag::BaseEmpty, |s: &StepSummary| s.tag);
    let accounting =
        Error::Invariant(InvariantViolation { kind: InvariantKind::Accounting, case: last_tag, n: inst.n(), k: inst.k(), t });
    let k = inst.k() as usize;
    let mut sizes = alloc::vec![0u32; k];
    for &root in &owner[1..] {
        if root == UNPLACED {
            return Err(accounting);
        }
        sizes[root as usize] += 1;
    }
    // bucket by owner; scanning e upwards leaves every container sorted
    let mut buckets: Vec<ContainerElements> = sizes.iter().map(|&s| ContainerElements::with_capacity(s as usize)).collect();
    drop(sizes);
    for (e, &root) in owner.iter().enumerate().skip(1) {
        buckets[root as usize].push(e as u64);
    }
    drop(owner);
    let containers: Vec<Container> = buckets.into_iter().map(Container::from_sorted).collect();
    if containers.iter().any(|c| c.sum() != u128::from(t)) {
        return Err(accounting);
    }
    Ok(Solution { partitioning: Partitioning::new(inst.n(), t, containers), steps, meander })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instance::make_instance;
    use crate::partitioning::verify;
    use alloc::vec;

    fn frame(n: u64, k: usize, t: u64) -> SlotFrame {
        SlotFrame::new((0..k).collect(), t, n)
    }

    fn pairs(step: &CaseStep) -> Vec<(usize, Vec<u64>)> {
        step.placements.iter().map(|p| (p.root, p.elements.to_vec())).collect()
    }

    #[test]
    fn dispatch_tags() {
        assert_eq!(dispatch_tag(&frame(45, 9, 115), false), CaseTag::High);
        assert_eq!(dispatch_tag(&frame(27, 9, 42), false), CaseTag::LowEven);
        assert_eq!(dispatch_tag(&frame(14, 5, 21), false), CaseTag::LowOdd);
        assert_eq!(dispatch_tag(&frame(6, 1, 21), true), CaseTag::BaseK1);
        assert_eq!(dispatch_tag(&frame(0, 0, 21), true), CaseTag::BaseEmpty);
        assert_eq!(dispatch_tag(&frame(19, 5, 38), true), CaseTag::MeanderStop);
        assert_eq!(dispatch_tag(&frame(19, 5, 38), false), CaseTag::High);
    }

    #[test]
    fn case_exhaustive() {
        for n in 0..200u128 {
            for t in 1..500u128 {
                assert!((2 * n > t) != (2 * n <= t));
            }
        }
    }

    #[test]
    fn high_step_45() {
        let step = case_high(frame(45, 9, 115)).unwrap();
        let got = pairs(&step);
        assert_eq!(got[0], (0, vec![28, 45]));
        assert_eq!(got[8], (8, vec![36, 37]));
        let next = step.next.unwrap();
        assert_eq!((next.n_remaining(), next.len(), next.capacity()), (27, 9, 42));
    }

    #[test]
    fn high_small() {
        let step = case_high(frame(4, 1, 10)).unwrap();
        assert_eq!(pairs(&step), vec![(0, vec![3, 4])]);
        let next = step.next.unwrap();
        assert_eq!((next.n_remaining(), next.len(), next.capacity()), (2, 1, 3));

        let step = case_high(frame(8, 2, 18)).unwrap();
        assert_eq!(pairs(&step), vec![(0, vec![5, 8]), (1, vec![6, 7])]);
        let next = step.next.unwrap();
        assert_eq!((next.n_remaining(), next.len(), next.capacity()), (4, 2, 5));
    }

    #[test]
    fn low_even_27() {
        let step = case_low_even(frame(27, 9, 42)).unwrap();
        let got = pairs(&step);
        let expected_pairs = [[15, 27], [16, 26], [17, 25], [18, 24], [19, 23], [20, 22]];
        for (i, p) in expected_pairs.iter().enumerate() {
            assert_eq!(got[i], (i, p.to_vec()));
        }
        assert_eq!(got[6], (6, vec![21]));
        let next = step.next.unwrap();
        assert_eq!((next.n_remaining(), next.len(), next.capacity()), (14, 5, 21));
        assert_eq!(next.roots(), &[6, 7, 7, 8, 8]);
    }

    #[test]
    fn low_even_56() {
        let step = case_low_even(frame(56, 21, 76)).unwrap();
        let got = pairs(&step);
        assert_eq!(got[0], (0, vec![20, 56]));
        assert_eq!(got[17], (17, vec![37, 39]));
        assert_eq!(got[18], (18, vec![38]));
        let next = step.next.unwrap();
        assert_eq!((next.n_remaining(), next.len(), next.capacity()), (19, 5, 38));
    }

    #[test]
    fn low_even_rejects_inconsistent_frame() {
        // delta(3) = 6 != 2 * 4
        let err = case_low_even(frame(3, 2, 4)).unwrap_err();
        assert!(matches!(err, Error::Invariant(InvariantViolation { kind: InvariantKind::Precondition, .. })));
        assert!(make_instance(3, 2, 4).is_err());
    }

    #[test]
    fn low_odd_14() {
        let step = case_low_odd(SlotFrame::new(vec![6, 7, 7, 8, 8], 21, 14)).unwrap();
        assert_eq!(
            pairs(&step),
            vec![(6, vec![7, 14]), (7, vec![8, 13]), (7, vec![9, 12]), (8, vec![10, 11])]
        );
        let next = step.next.unwrap();
        assert_eq!((next.n_remaining(), next.len(), next.capacity()), (6, 1, 21));
        assert_eq!(next.roots(), &[8]);
    }

    #[test]
    fn low_odd_phantom_zero() {
        let step = case_low_odd(frame(5, 3, 5)).unwrap();
        assert_eq!(pairs(&step), vec![(0, vec![5]), (1, vec![1, 4]), (2, vec![2, 3])]);
        let next = step.next.unwrap();
        assert_eq!((next.n_remaining(), next.len()), (0, 0));
        assert_eq!(dispatch(next, true).unwrap().tag, CaseTag::BaseEmpty);
    }

    #[test]
    fn wrong_case_is_precondition_error() {
        assert!(case_high(frame(27, 9, 42)).is_err());
        assert!(case_low_odd(frame(27, 9, 42)).is_err());
        assert!(case_low_even(frame(14, 5, 21)).is_err());
        assert!(case_meander(frame(14, 5, 21)).is_err());
    }

    #[test]
    fn check_next_detects_mismatch() {
        assert!(check_next(CaseTag::High, 4, 2, 5).is_ok());
        let e = check_next(CaseTag::High, 4, 2, 6).unwrap_err();
        assert!(matches!(e, Error::Invariant(InvariantViolation { kind: InvariantKind::DeltaMismatch, .. })));
        let e = check_next(CaseTag::LowOdd, 0, 2, 0).unwrap_err();
        assert!(matches!(e, Error::Invariant(InvariantViolation { kind: InvariantKind::TargetBelowCount, .. })));
    }

    #[test]
    fn tiny_instances() {
        let p = solve(make_instance(1, 1, 1).unwrap(), true).unwrap();
        assert_eq!(p.containers()[0].elements(), &[1]);
        let p = solve(make_instance(3, 2, 3).unwrap(), false).unwrap();
        let cs: Vec<_> = p.containers().iter().map(|c| c.elements().to_vec()).collect();
        assert_eq!(cs, vec![vec![3], vec![1, 2]]);
        let p = solve(make_instance(9, 5, 9).unwrap(), false).unwrap();
        let cs: Vec<_> = p.containers().iter().map(|c| c.elements().to_vec()).collect();
        assert_eq!(cs, vec![vec![9], vec![1, 8], vec![2, 7], vec![3, 6], vec![4, 5]]);
    }

    #[test]
    fn trace_45() {
        let s = solve_detailed(make_instance(45, 9, 115).unwrap(), false).unwrap();
        let tags: Vec<_> = s.steps.iter().map(|s| s.tag).collect();
        assert_eq!(tags, vec![CaseTag::High, CaseTag::LowEven, CaseTag::LowOdd, CaseTag::BaseK1]);
        assert_eq!(s.steps.iter().map(|s| s.placed).sum::<u64>(), 45);
        assert!(verify(&s.partitioning).valid());
        assert!(s.meander.is_none());
    }
}
