//! Exhaustive sweeps over small n: soundness of the solver, meander
//! identities, and agreement with the backtracking oracle.

use equisum_core::{
    brute_force_solve, delta, enumerate_feasible, gauss_partitioning, make_instance, meander_applicable,
    meander_partitioning, solve, solve_detailed, verify, OracleLimits, Parity,
};

#[test]
fn solver_sound_up_to_300() {
    for n in 1..=300 {
        for (k, t) in enumerate_feasible(n).unwrap() {
            let inst = make_instance(n, k, t).unwrap();
            for meander in [false, true] {
                let s = solve_detailed(inst, meander).unwrap();
                assert!(verify(&s.partitioning).valid(), "({n}, {k}, {t}) meander={meander}");
                assert_eq!(s.steps.iter().map(|s| s.placed).sum::<u64>(), n);
                // n strictly decreases along the chain
                assert!(s.steps.windows(2).all(|w| w[1].n < w[0].n));
            }
        }
    }
}

#[test]
fn meander_identities_up_to_300() {
    for n in 1..=300u64 {
        for k in 1..=n {
            if !meander_applicable(n, k) {
                assert!(meander_partitioning(n, k).is_err());
                continue;
            }
            let (m, p) = meander_partitioning(n, k).unwrap();
            let t = delta(n).unwrap() / k;
            let complement = match m.parity() {
                Parity::EvenN => n + 1,
                Parity::OddN => n,
            };
            for j in 0..m.cols() {
                assert_eq!(m.column(j).sum::<u64>(), t);
                for s in 0..m.rows() / 2 {
                    assert_eq!(m.cell(s, j) + m.cell(m.rows() - 1 - s, j), complement);
                }
            }
            let mut cells: Vec<u64> = (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect();
            cells.sort_unstable();
            let first = if m.parity() == Parity::OddN { 0 } else { 1 };
            assert_eq!(cells, (first..=n).collect::<Vec<_>>());
            assert!(verify(&p).valid());
        }
    }
}

#[test]
fn gauss_is_meander() {
    for n in 1..=300u64 {
        let (_, p) = meander_partitioning(n, n.div_ceil(2)).unwrap();
        assert_eq!(p, gauss_partitioning(n).unwrap(), "n = {n}");
    }
}

#[test]
fn oracle_agrees_up_to_12() {
    let limits = OracleLimits::default();
    for n in 1..=12u64 {
        let d = n * (n + 1) / 2;
        for k in (1..=d).filter(|k| d % k == 0) {
            let t = d / k;
            let found = brute_force_solve(n, k, t, limits).unwrap();
            assert_eq!(found.is_some(), t >= n, "({n}, {k}, {t})");
            assert_eq!(make_instance(n, k, t).is_ok(), t >= n);
            if let Some(o) = found {
                assert!(verify(&o).valid());
                let inst = make_instance(n, k, t).unwrap();
                for meander in [false, true] {
                    assert!(verify(&solve(inst, meander).unwrap()).valid());
                }
            }
        }
    }
}
