//! Acceptance suite: one test per criterion, each printing a PASS line once
//! its checks hold at the stated scale. Everything is exact integer
//! arithmetic; the stated wall-clock bounds are asserted where they apply.
//!
//! Run with `cargo test -p multimahonian-cli --test acceptance -- --nocapture`
//! to see the per-criterion lines.

use multimahonian::distributions::{
    count_tuples_with_descents, multimahonian_via_kronecker, refined_multimahonian,
    verify_multipartite_count, verify_refined_quotient_identity,
};
use multimahonian::kronecker::{kronecker_character, CharacterTable};
use multimahonian::permstat::{verify_mahonian_equidistribution, DescentSet};
use multimahonian::symmetry::{verify_dcac, verify_sym};
use multimahonian::tableaux::{rs_correspondence, verify_rs_correspondence, StandardTableau};
use multimahonian::{Budget, KroneckerTable, Partition, Window};
use num_bigint::BigUint;
use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

fn part(s: &str) -> Partition {
    s.parse().unwrap()
}

fn one() -> BigUint {
    BigUint::from(1u32)
}

/// Criterion 1: the worked example end to end, through the binary, with its
/// intermediate recursion values, in under a second.
#[test]
fn criterion_01_worked_example() {
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_multimahonian"))
        .args(["kron", "3,1", "2,2", "2,1,1"])
        .output()
        .expect("binary runs");
    let elapsed = start.elapsed();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "1\n");

    // intermediate values of the recursion
    let profile = [
        DescentSet::new(4, [3]),
        DescentSet::new(4, [2]),
        DescentSet::new(4, [2, 3]),
    ];
    assert_eq!(count_tuples_with_descents(4, &profile), 2);
    let mut table = KroneckerTable::new(4);
    assert_eq!(
        table.coefficient(&[part("3,1"), part("3,1"), part("2,1,1")]),
        one()
    );

    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 01 (worked example, < 1 s): PASS ({elapsed:?})");
}

/// Criterion 2: recursion equals the character oracle on every key for
/// n <= 5 with k = 3 and n <= 6 with k = 2, within 60 seconds.
#[test]
fn criterion_02_oracle_equivalence() {
    let start = Instant::now();
    let mut keys = 0u64;
    for (max_n, k) in [(5usize, 3usize), (6, 2)] {
        for n in 2..=max_n {
            let chartab = CharacterTable::build(n);
            let shapes = Partition::partitions_of(n);
            let mut table = KroneckerTable::new(n);
            let mut choice = vec![0usize; k];
            'outer: loop {
                let tuple: Vec<Partition> = choice.iter().map(|&i| shapes[i].clone()).collect();
                assert_eq!(
                    table.coefficient(&tuple),
                    kronecker_character(&chartab, &tuple),
                    "n={n} tuple {tuple:?}"
                );
                keys += 1;
                for i in (0..k).rev() {
                    choice[i] += 1;
                    if choice[i] < shapes.len() {
                        continue 'outer;
                    }
                    choice[i] = 0;
                }
                break;
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 02 (oracle equivalence on {keys} keys, < 60 s): PASS ({elapsed:?})");
}

/// Criterion 3: classical sanity. Pairs give deltas up to n = 6, single
/// arguments detect the one-row shape, and tensor dimensions add up for
/// n <= 5.
#[test]
fn criterion_03_classical_sanity() {
    for n in 1..=6 {
        let mut table = KroneckerTable::new(n);
        for a in Partition::partitions_of(n) {
            for b in Partition::partitions_of(n) {
                let expected = BigUint::from(u32::from(a == b));
                assert_eq!(
                    table.coefficient(&[a.clone(), b.clone()]),
                    expected,
                    "{a} {b}"
                );
            }
        }
        for mu in Partition::partitions_of(n) {
            let expected = BigUint::from(u32::from(mu.len() == 1));
            assert_eq!(table.coefficient(&[mu.clone()]), expected, "{mu}");
        }
    }
    for n in 1..=5 {
        let mut table = KroneckerTable::new(n);
        for a in Partition::partitions_of(n) {
            for b in Partition::partitions_of(n) {
                let mut weighted = BigUint::from(0u32);
                for rho in Partition::partitions_of(n) {
                    weighted += table.coefficient(&[a.clone(), b.clone(), rho.clone()])
                        * BigUint::from(StandardTableau::dimension(&rho));
                }
                let expected =
                    BigUint::from(StandardTableau::dimension(&a) * StandardTableau::dimension(&b));
                assert_eq!(weighted, expected, "{a} (x) {b}");
            }
        }
    }
    println!("criterion 03 (delta pairs n<=6, trivial detection, tensor dimensions n<=5): PASS");
}

/// Criterion 4: maj and inv are equidistributed with the q-factorial closed
/// form for every n <= 8, within 30 seconds.
#[test]
fn criterion_04_mahonian_equidistribution() {
    let start = Instant::now();
    let report = verify_mahonian_equidistribution(8);
    assert!(report.passed(), "{report}");
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("criterion 04 (maj = inv = q-factorial, n <= 8, < 30 s): PASS ({elapsed:?})");
}

/// Criterion 5: the enumerated distribution equals its Kronecker-weighted
/// tableau form, term by term, at the four stated sizes.
#[test]
fn criterion_05_distribution_identity() {
    let budget = Budget::default();
    for (n, k) in [(3, 3), (4, 3), (4, 2), (5, 2)] {
        let enumerated = refined_multimahonian(n, k, &budget).unwrap();
        let weighted = multimahonian_via_kronecker(n, k);
        assert_eq!(enumerated, weighted, "(n,k)=({n},{k})");
    }
    println!("criterion 05 (distribution = Kronecker-weighted tableau sum at (3,3),(4,3),(4,2),(5,2)): PASS");
}

/// Criterion 6: the windowed quotient identity for the diagonal-invariant
/// series at the four stated windows.
#[test]
fn criterion_06_quotient_identity_windows() {
    let budget = Budget::default();
    for (n, k, cap) in [(2, 2, 2), (3, 2, 3), (2, 3, 2), (3, 3, 2)] {
        let report = verify_refined_quotient_identity(n, k, Window::new(cap), &budget).unwrap();
        assert!(report.passed(), "(n,k,cap)=({n},{k},{cap}):\n{report}");
    }
    println!("criterion 06 (diagonal window = distribution x product window at 4 windows): PASS");
}

/// Criterion 7: k-partite partition counts match constrained tuple counts
/// per multidegree at the two stated windows.
#[test]
fn criterion_07_multipartite_counts() {
    let budget = Budget::default();
    for (n, k, cap) in [(2, 2, 2), (3, 2, 2)] {
        let report = verify_multipartite_count(n, k, cap, &budget).unwrap();
        assert!(report.passed(), "(n,k,cap)=({n},{k},{cap}):\n{report}");
    }
    println!("criterion 07 (k-partite partition counts per multidegree): PASS");
}

/// Criterion 8: row insertion is a shape-sharing, descent-preserving
/// bijection onto same-shape tableau pairs for every n <= 7, within 60
/// seconds.
#[test]
fn criterion_08_row_insertion_bijection() {
    let start = Instant::now();
    let report = verify_rs_correspondence(7);
    assert!(report.passed(), "{report}");
    // surjectivity onto same-shape pairs, stated directly at n = 5: every
    // same-shape pair is hit
    let mut images = HashSet::new();
    for sigma in multimahonian::permstat::all_permutations(5) {
        images.insert(rs_correspondence(&sigma));
    }
    for shape in Partition::partitions_of(5) {
        for p in StandardTableau::enumerate(&shape) {
            for q in StandardTableau::enumerate(&shape) {
                assert!(
                    images.contains(&(p.clone(), q.clone())),
                    "missing pair ({p}, {q})"
                );
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 08 (row insertion bijection, n <= 7, < 60 s): PASS ({elapsed:?})");
}

/// Criterion 9: the symmetry suites. Profile permutation invariance at
/// n = 4, k = 3 exhaustively and n = 5, k = 3 on seeded samples; parity
/// invariance of mixed statistics at n = 4 for k = 2, 3, 4 exhaustively;
/// and invariance under conjugating two arguments for every triple at
/// n <= 5.
#[test]
fn criterion_09_symmetry_suites() {
    let budget = Budget::default();
    let report = verify_sym(4, 3, &budget, 42).unwrap();
    assert!(report.passed(), "{report}");
    let report = verify_sym(5, 3, &budget, 42).unwrap();
    assert!(report.passed(), "{report}");
    for k in 2..=4 {
        let report = verify_dcac(4, k, &budget, 42).unwrap();
        assert!(report.passed(), "k={k}:\n{report}");
    }
    for n in 2..=5 {
        let mut table = KroneckerTable::new(n);
        let shapes = Partition::partitions_of(n);
        for a in &shapes {
            for b in &shapes {
                for c in &shapes {
                    assert_eq!(
                        table.coefficient(&[a.clone(), b.clone(), c.clone()]),
                        table.coefficient(&[a.conjugate(), b.conjugate(), c.clone()]),
                        "{a} {b} {c}"
                    );
                }
            }
        }
    }
    println!("criterion 09 (profile symmetry, parity invariance, conjugation invariance): PASS");
}

/// Criterion 10: for every shape of n <= 8 boxes the row-by-row filling is
/// the unique tableau of that shape with its descent set, and every tableau
/// sharing the descent set has a dominating shape.
#[test]
fn criterion_10_canonical_tableau_lemma() {
    for n in 1..=8 {
        let all = StandardTableau::all_of_size(n);
        for shape in Partition::partitions_of(n) {
            let canon = StandardTableau::canonical(&shape);
            let descents = canon.descent_set();
            let mut same_shape = 0;
            for t in all.iter().filter(|t| t.descent_set() == descents) {
                assert!(
                    shape.dominance_leq(&t.shape()),
                    "n={n} shape {shape}: {t} does not dominate"
                );
                if t.shape() == shape {
                    same_shape += 1;
                    assert_eq!(*t, canon, "n={n} shape {shape}");
                }
            }
            assert_eq!(same_shape, 1, "n={n} shape {shape}");
        }
    }
    println!("criterion 10 (canonical tableau uniqueness and dominance, n <= 8): PASS");
}
