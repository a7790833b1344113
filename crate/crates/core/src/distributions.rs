//! Generating functions over descent statistics: refined fake degrees, the
//! refined multimahonian distribution over identity-product tuples, windowed
//! Hilbert series of diagonal and product invariants, and the verifiers that
//! compare them by independent enumeration.

use crate::budget::{factorial_power, Budget, BudgetError};
use crate::kronecker::KroneckerTable;
use crate::permstat::{all_permutations, permutations_with_descent_set, DescentSet, Permutation};
use crate::polyring::{ExponentMatrix, MultivarPolynomial, Window};
use crate::report::VerifyReport;
use crate::tableaux::{Partition, StandardTableau};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;

// ---------------------------------------------------------------------------
// identity-product tuples
// ---------------------------------------------------------------------------

/// Calls `f` on every `k`-tuple of permutations of `[n]` whose left-to-right
/// product is the identity. The first `k-1` coordinates range freely and the
/// last is the inverse of their product, so the walk costs `(n!)^(k-1)`.
pub fn for_each_identity_tuple(n: usize, k: usize, mut f: impl FnMut(&[Permutation])) {
    assert!(k >= 1);
    let all = all_permutations(n);
    let mut chosen: Vec<Permutation> = Vec::with_capacity(k);
    fn rec(
        all: &[Permutation],
        k: usize,
        prod: &Permutation,
        chosen: &mut Vec<Permutation>,
        f: &mut impl FnMut(&[Permutation]),
    ) {
        if chosen.len() == k - 1 {
            chosen.push(prod.inverse());
            f(chosen);
            chosen.pop();
            return;
        }
        for p in all {
            let next = prod.compose(p);
            chosen.push(p.clone());
            rec(all, k, &next, chosen, f);
            chosen.pop();
        }
    }
    rec(&all, k, &Permutation::identity(n), &mut chosen, &mut f);
}

/// Number of identity-product `k`-tuples whose `i`-th coordinate has descent
/// set exactly `profile[i]`.
///
/// The first `k-1` coordinates are generated within their descent classes
/// and only the forced last coordinate is tested, so the cost is the product
/// of the first `k-1` class sizes.
pub fn count_tuples_with_descents(n: usize, profile: &[DescentSet]) -> u64 {
    assert!(!profile.is_empty(), "profile must be non-empty");
    for d in profile {
        assert_eq!(d.n(), n, "descent set carrier does not match n");
    }
    let k = profile.len();
    let classes: Vec<Vec<Permutation>> = profile[..k - 1]
        .iter()
        .map(|d| permutations_with_descent_set(n, d))
        .collect();
    let target = profile[k - 1];
    let mut count = 0u64;
    fn rec(
        classes: &[Vec<Permutation>],
        depth: usize,
        prod: &Permutation,
        target: &DescentSet,
        count: &mut u64,
    ) {
        if depth == classes.len() {
            if prod.inverse().descent_set() == *target {
                *count += 1;
            }
            return;
        }
        for p in &classes[depth] {
            rec(classes, depth + 1, &prod.compose(p), target, count);
        }
    }
    rec(&classes, 0, &Permutation::identity(n), &target, &mut count);
    count
}

// ---------------------------------------------------------------------------
// the distribution and the fake degrees
// ---------------------------------------------------------------------------

/// `sum over identity-product k-tuples of prod_i Q_i^(lambda(sigma_i))`,
/// computed by direct enumeration.
pub fn refined_multimahonian(
    n: usize,
    k: usize,
    budget: &Budget,
) -> Result<MultivarPolynomial, BudgetError> {
    assert!(n >= 1 && k >= 1);
    budget.check(
        factorial_power(n, k as u32 - 1),
        "identity-tuple enumeration",
    )?;
    let mut poly = MultivarPolynomial::zero(k, n);
    for_each_identity_tuple(n, k, |tuple| {
        let exp = tuple_exponents(tuple, n);
        poly.add_term(exp, BigInt::from(1));
    });
    Ok(poly)
}

fn tuple_exponents(tuple: &[Permutation], n: usize) -> Vec<u32> {
    let mut flat = vec![0u32; tuple.len() * n];
    for (i, sigma) in tuple.iter().enumerate() {
        for (j, &part) in sigma.descent_partition().parts().iter().enumerate() {
            flat[i * n + j] = part as u32;
        }
    }
    flat
}

/// Generating polynomial of the descent partitions of the standard tableaux
/// of `shape`, in the `block`-th group of variables (1-based) of a `k x n`
/// grid. The coefficient of a monomial counts the tableaux of this shape
/// with that descent partition.
pub fn refined_fake_degree(shape: &Partition, k: usize, block: usize) -> MultivarPolynomial {
    assert!(block >= 1 && block <= k, "block must lie in 1..=k");
    let n = shape.sum();
    let mut poly = MultivarPolynomial::zero(k, n);
    for t in StandardTableau::enumerate(shape) {
        let mut flat = vec![0u32; k * n];
        for (j, &part) in t.descent_partition().parts().iter().enumerate() {
            flat[(block - 1) * n + j] = part as u32;
        }
        poly.add_term(flat, BigInt::from(1));
    }
    poly
}

/// The same distribution as [`refined_multimahonian`], but assembled from
/// the other side of the main identity: a Kronecker-coefficient-weighted sum
/// of products of refined fake degrees over all `k`-tuples of shapes.
pub fn multimahonian_via_kronecker(n: usize, k: usize) -> MultivarPolynomial {
    assert!(n >= 1 && k >= 1);
    let shapes = Partition::partitions_of(n);
    // f^shape in each variable block, indexed [block-1][shape index]
    let fake: Vec<Vec<MultivarPolynomial>> = (1..=k)
        .map(|block| {
            shapes
                .iter()
                .map(|s| refined_fake_degree(s, k, block))
                .collect()
        })
        .collect();
    let mut table = KroneckerTable::new(n);
    let mut acc = MultivarPolynomial::zero(k, n);
    let mut choice = vec![0usize; k];
    'outer: loop {
        let tuple: Vec<Partition> = choice.iter().map(|&i| shapes[i].clone()).collect();
        let d = table.coefficient(&tuple);
        if !d.is_zero() {
            let mut term =
                MultivarPolynomial::monomial(ExponentMatrix::zero(k, n), BigInt::from(d));
            for (block, &i) in choice.iter().enumerate() {
                term = term.mul(&fake[block][i]);
            }
            acc = acc.add(&term);
        }
        for i in (0..k).rev() {
            choice[i] += 1;
            if choice[i] < shapes.len() {
                continue 'outer;
            }
            choice[i] = 0;
        }
        break;
    }
    acc
}

// ---------------------------------------------------------------------------
// monomial orbits and windowed Hilbert series
// ---------------------------------------------------------------------------

/// Orbit of a monomial under the diagonal action: a multiset of `n` columns
/// in `N^k`, stored with the columns sorted lexicographically decreasing
/// (which is exactly the k-partite-partition normal form).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrbit {
    columns: Vec<Vec<u32>>,
}

impl MonomialOrbit {
    pub fn columns(&self) -> &[Vec<u32>] {
        &self.columns
    }

    pub fn n(&self) -> usize {
        self.columns.len()
    }

    pub fn k(&self) -> usize {
        self.columns[0].len()
    }

    /// Exponent matrix of the orbit: row `i` holds the `i`-th coordinates of
    /// the columns, sorted decreasingly (each row is a partition).
    pub fn exponent_matrix(&self) -> ExponentMatrix {
        let mut rows = Vec::with_capacity(self.k());
        for i in 0..self.k() {
            let mut row: Vec<u32> = self.columns.iter().map(|c| c[i]).collect();
            row.sort_unstable_by(|a, b| b.cmp(a));
            rows.push(row);
        }
        ExponentMatrix::from_rows(rows)
    }
}

/// All multisets of `n` columns in `{0..=cap}^k`, i.e. all monomial orbits
/// with every exponent bounded by the window.
pub fn monomial_orbits_in_window(n: usize, k: usize, cap: u32) -> Vec<MonomialOrbit> {
    assert!(n >= 1 && k >= 1);
    let base = cap as u128 + 1;
    let v_total = base.pow(k as u32);
    let mut columns: Vec<Vec<u32>> = (0..v_total)
        .map(|v| {
            let mut col = vec![0u32; k];
            let mut x = v;
            for slot in col.iter_mut().rev() {
                *slot = (x % base) as u32;
                x /= base;
            }
            col
        })
        .collect();
    // decreasing lexicographic order, so picks with non-decreasing index
    // yield the k-partite normal form directly
    columns.sort_unstable_by(|a, b| b.cmp(a));
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    fn rec(
        columns: &[Vec<u32>],
        n: usize,
        start: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<MonomialOrbit>,
    ) {
        if chosen.len() == n {
            out.push(MonomialOrbit {
                columns: chosen.iter().map(|&i| columns[i].clone()).collect(),
            });
            return;
        }
        for i in start..columns.len() {
            chosen.push(i);
            rec(columns, n, i, chosen, out);
            chosen.pop();
        }
    }
    rec(&columns, n, 0, &mut chosen, &mut out);
    out
}

/// Number of orbits the window holds: `multichoose((cap+1)^k, n)`, saturating.
pub fn orbit_count_estimate(n: usize, k: usize, cap: u32) -> u128 {
    let v = (cap as u128 + 1).saturating_pow(k as u32);
    multichoose_saturating(v, n as u128)
}

fn multichoose_saturating(v: u128, n: u128) -> u128 {
    // C(v + n - 1, n)
    let mut acc: u128 = 1;
    for i in 0..n {
        acc = acc.saturating_mul(v.saturating_add(i)) / (i + 1);
    }
    acc
}

/// Windowed Hilbert series of the diagonal invariants: the sum over all
/// monomial orbits with exponents at most `cap` of the orbit's exponent
/// monomial. Distinct orbits may share an exponent matrix, so coefficients
/// can exceed one.
pub fn hilb_diagonal_invariants_window(n: usize, k: usize, w: Window) -> MultivarPolynomial {
    let mut poly = MultivarPolynomial::zero(k, n);
    for orbit in monomial_orbits_in_window(n, k, w.cap) {
        poly.add_term(orbit.exponent_matrix().flat().to_vec(), BigInt::from(1));
    }
    poly
}

/// Windowed Hilbert series of the product invariants: one monomial for every
/// `k`-tuple of partitions with at most `n` parts, each part at most `cap`.
/// Blocks are independent, so this is the product over blocks of the
/// single-block series.
pub fn hilb_product_invariants_window(n: usize, k: usize, w: Window) -> MultivarPolynomial {
    let box_partitions = Partition::partitions_in_box(n, w.cap as usize);
    let mut acc = MultivarPolynomial::one(k, n);
    for block in 1..=k {
        let mut block_poly = MultivarPolynomial::zero(k, n);
        for p in &box_partitions {
            let mut flat = vec![0u32; k * n];
            for (j, &part) in p.parts().iter().enumerate() {
                flat[(block - 1) * n + j] = part as u32;
            }
            block_poly.add_term(flat, BigInt::from(1));
        }
        acc = acc.mul(&block_poly);
    }
    acc
}

// ---------------------------------------------------------------------------
// verifiers
// ---------------------------------------------------------------------------

/// Checks that the windowed diagonal-invariant series equals the refined
/// multimahonian distribution times the windowed product-invariant series.
///
/// Both sides are restricted to monomials with every exponent at most
/// `w.cap`. The restriction is sound because every monomial of each factor
/// divides the product monomial it contributes to, so the window of the
/// product is determined by the windows of the factors.
pub fn verify_refined_quotient_identity(
    n: usize,
    k: usize,
    w: Window,
    budget: &Budget,
) -> Result<VerifyReport, BudgetError> {
    let box_size = Partition::partitions_in_box(n, w.cap as usize).len() as u128;
    let cost = orbit_count_estimate(n, k, w.cap)
        .saturating_add(box_size.saturating_pow(k as u32))
        .saturating_add(factorial_power(n, k as u32 - 1));
    budget.check(cost, "windowed Hilbert series comparison")?;

    let diagonal = hilb_diagonal_invariants_window(n, k, w);
    let distribution = refined_multimahonian(n, k, budget)?;
    let product = hilb_product_invariants_window(n, k, w);
    let rhs = distribution.mul_windowed(&product, w);

    let mut report = VerifyReport::new("ggen");
    let mismatches = polynomial_mismatches(&diagonal, &rhs, n);
    report.record(
        format!("diagonal window = multimahonian * product window (n={n}, k={k}, cap={})", w.cap),
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!(
                "compared {} monomials; comparison restricted to monomials with every exponent <= {}",
                diagonal.num_terms(),
                w.cap
            )
        } else {
            mismatches.join("; ")
        },
    );
    Ok(report)
}

fn polynomial_mismatches(
    lhs: &MultivarPolynomial,
    rhs: &MultivarPolynomial,
    n: usize,
) -> Vec<String> {
    let mut keys: Vec<Vec<u32>> = lhs.terms().map(|(e, _)| e.clone()).collect();
    keys.extend(rhs.terms().map(|(e, _)| e.clone()));
    keys.sort();
    keys.dedup();
    let mut out = Vec::new();
    for key in keys {
        let rows: Vec<Vec<u32>> = key.chunks(n).map(|c| c.to_vec()).collect();
        let exp = ExponentMatrix::from_rows(rows.clone());
        let (a, b) = (lhs.coefficient(&exp), rhs.coefficient(&exp));
        if a != b {
            out.push(format!("monomial {rows:?}: LHS={a} RHS={b}"));
        }
    }
    out
}

/// Checks, per multidegree, that the number of k-partite partitions with
/// entries at most `cap` equals the number of (identity-product tuple,
/// partition tuple) pairs where each partition fits in the `n x cap` box and
/// decreases strictly at the descents of its permutation.
///
/// The left side enumerates column multisets (their lexicographically sorted
/// column form is the k-partite normal form; for `k = 1` this degenerates to
/// plain weakly decreasing vectors). The right side enumerates permutation
/// tuples and compatible partitions, so the two routes are independent.
pub fn verify_multipartite_count(
    n: usize,
    k: usize,
    cap: u32,
    budget: &Budget,
) -> Result<VerifyReport, BudgetError> {
    let box_partitions = Partition::partitions_in_box(n, cap as usize);
    let cost = orbit_count_estimate(n, k, cap).saturating_add(
        factorial_power(n, k as u32 - 1)
            .saturating_mul((box_partitions.len() as u128).saturating_pow(k as u32)),
    );
    budget.check(cost, "k-partite partition comparison")?;

    let mut lhs: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for orbit in monomial_orbits_in_window(n, k, cap) {
        *lhs.entry(orbit.exponent_matrix().flat().to_vec())
            .or_default() += 1;
    }

    // partitions compatible with a descent set: strictly decreasing there
    let compatible = |d: &DescentSet| -> Vec<&Partition> {
        box_partitions
            .iter()
            .filter(|p| d.iter().all(|j| p.part(j) > p.part(j + 1)))
            .collect()
    };
    let mut rhs: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for_each_identity_tuple(n, k, |tuple| {
        let lists: Vec<Vec<&Partition>> = tuple
            .iter()
            .map(|sigma| compatible(&sigma.descent_set()))
            .collect();
        let mut choice = vec![0usize; k];
        'outer: loop {
            let shapes: Vec<Partition> = (0..k).map(|i| lists[i][choice[i]].clone()).collect();
            let exp = ExponentMatrix::from_partitions(&shapes, n);
            *rhs.entry(exp.flat().to_vec()).or_default() += 1;
            for i in (0..k).rev() {
                choice[i] += 1;
                if choice[i] < lists[i].len() {
                    continue 'outer;
                }
                choice[i] = 0;
            }
            break;
        }
    });

    let mut report = VerifyReport::new("parpar");
    let mut keys: Vec<&Vec<u32>> = lhs.keys().chain(rhs.keys()).collect();
    keys.sort();
    keys.dedup();
    let mut mismatches = Vec::new();
    for key in keys {
        let (a, b) = (
            lhs.get(key).copied().unwrap_or(0),
            rhs.get(key).copied().unwrap_or(0),
        );
        if a != b {
            let rows: Vec<Vec<u32>> = key.chunks(n).map(|c| c.to_vec()).collect();
            mismatches.push(format!("multidegree {rows:?}: partitions={a} tuples={b}"));
        }
    }
    let degrees = lhs.len();
    report.record(
        format!("k-partite partitions match constrained tuples per multidegree (n={n}, k={k}, cap={cap})"),
        mismatches.is_empty(),
        if mismatches.is_empty() {
            format!("{degrees} multidegrees compared")
        } else {
            mismatches.join("; ")
        },
    );
    Ok(report)
}
