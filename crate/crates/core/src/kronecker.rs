//! Kronecker coefficients of the symmetric group, two independent ways.
//!
//! The primary route is purely combinatorial: the coefficient indexed by a
//! tuple of shapes equals the number of identity-product permutation tuples
//! whose descent sets match the canonical tableaux of the shapes, minus the
//! coefficients of all strictly dominating shape tuples sharing those descent
//! sets. The recursion is well-founded because every recursive key is
//! strictly larger in the componentwise dominance order, and it never touches
//! character theory.
//!
//! The oracle route evaluates the classical class-weighted character sum,
//! with the character table built by the Murnaghan-Nakayama rule. The two
//! routes are kept independent and are compared against each other in the
//! verification suites.

use crate::distributions::count_tuples_with_descents;
use crate::permstat::DescentSet;
use crate::report::VerifyReport;
use crate::tableaux::{Multipartition, Partition, StandardTableau};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::path::Path;
use thiserror::Error;

// ---------------------------------------------------------------------------
// Character table via Murnaghan-Nakayama
// ---------------------------------------------------------------------------

/// Irreducible character value `chi^irrep(cycle_type)` by the
/// Murnaghan-Nakayama rule, implemented on first-column hook lengths
/// (beta numbers): removing a border strip of size `m` replaces a beta
/// number `b` by `b - m`, with sign given by the number of beta numbers
/// jumped over.
pub fn character_value(irrep: &Partition, cycle_type: &Partition) -> i64 {
    assert_eq!(
        irrep.sum(),
        cycle_type.sum(),
        "character arguments must partition the same integer"
    );
    let mut memo = HashMap::new();
    mn_value(irrep.parts(), cycle_type.parts(), &mut memo)
}

fn mn_value(
    shape: &[usize],
    cycles: &[usize],
    memo: &mut HashMap<(Vec<usize>, Vec<usize>), i64>,
) -> i64 {
    if cycles.is_empty() {
        return if shape.is_empty() { 1 } else { 0 };
    }
    if shape.is_empty() {
        return 0;
    }
    let key = (shape.to_vec(), cycles.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let m = cycles[0];
    let rest = &cycles[1..];
    let r = shape.len();
    let betas: Vec<usize> = shape
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (r - 1 - i))
        .collect();
    let beta_set: HashSet<usize> = betas.iter().copied().collect();
    let mut total: i64 = 0;
    for &b in &betas {
        if b < m || beta_set.contains(&(b - m)) {
            continue;
        }
        let height = betas.iter().filter(|&&x| b - m < x && x < b).count();
        let mut new_betas: Vec<usize> = betas.iter().copied().filter(|&x| x != b).collect();
        new_betas.push(b - m);
        new_betas.sort_unstable_by(|a, c| c.cmp(a));
        let new_shape: Vec<usize> = new_betas
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (r - 1 - i))
            .filter(|&p| p > 0)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_value(&new_shape, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Complete character table of the symmetric group on `n` letters.
///
/// Rows are indexed by irreducible labels (partitions), columns by conjugacy
/// classes (cycle types), both in the order of [`Partition::partitions_of`].
#[derive(Debug, Clone)]
pub struct CharacterTable {
    n: usize,
    labels: Vec<Partition>,
    class_sizes: Vec<BigUint>,
    values: Vec<Vec<i64>>,
    index: HashMap<Partition, usize>,
}

impl CharacterTable {
    pub fn build(n: usize) -> CharacterTable {
        assert!(
            n >= 1 && n <= 20,
            "character tables supported for 1 <= n <= 20"
        );
        let labels = Partition::partitions_of(n);
        let index: HashMap<Partition, usize> = labels
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, p)| (p, i))
            .collect();
        let class_sizes = labels.iter().map(conjugacy_class_size).collect();
        let mut memo = HashMap::new();
        let values = labels
            .iter()
            .map(|irrep| {
                labels
                    .iter()
                    .map(|rho| mn_value(irrep.parts(), rho.parts(), &mut memo))
                    .collect()
            })
            .collect();
        CharacterTable {
            n,
            labels,
            class_sizes,
            values,
            index,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Irreducible labels, shared with the class labels (cycle types).
    pub fn labels(&self) -> &[Partition] {
        &self.labels
    }

    pub fn class_size(&self, cycle_type: &Partition) -> &BigUint {
        &self.class_sizes[self.index[cycle_type]]
    }

    pub fn value(&self, irrep: &Partition, cycle_type: &Partition) -> i64 {
        self.values[self.index[irrep]][self.index[cycle_type]]
    }
}

/// `n! / (prod_i i^(m_i) m_i!)` for the cycle type `rho = 1^(m_1) 2^(m_2) ..`.
fn conjugacy_class_size(rho: &Partition) -> BigUint {
    let n = rho.sum();
    let mut centralizer = BigUint::from(1u32);
    let mut mult: HashMap<usize, usize> = HashMap::new();
    for &p in rho.parts() {
        *mult.entry(p).or_default() += 1;
    }
    for (&p, &m) in &mult {
        for _ in 0..m {
            centralizer *= BigUint::from(p);
        }
        for i in 1..=m {
            centralizer *= BigUint::from(i);
        }
    }
    let fact: BigUint = (1..=n as u64).map(BigUint::from).product();
    let (q, r) = fact.div_rem(&centralizer);
    assert!(r.is_zero(), "centralizer order must divide n!");
    q
}

// ---------------------------------------------------------------------------
// Keys and the memo table
// ---------------------------------------------------------------------------

/// Canonical index of a Kronecker coefficient: the multiset of shapes,
/// stored sorted. Sorting is sound because the coefficient is invariant
/// under every permutation of its arguments, a fact the test suite checks
/// independently against both implementations before the cache relies on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KroneckerKey {
    shapes: Multipartition,
}

impl KroneckerKey {
    pub fn new(shapes: &[Partition]) -> Self {
        let mut sorted = shapes.to_vec();
        sorted.sort();
        KroneckerKey {
            shapes: Multipartition::new(sorted),
        }
    }

    pub fn shapes(&self) -> &[Partition] {
        self.shapes.components()
    }

    pub fn n(&self) -> usize {
        self.shapes.n()
    }

    pub fn k(&self) -> usize {
        self.shapes.k()
    }
}

impl fmt::Display for KroneckerKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shapes)
    }
}

/// How a cached value was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Recursion,
    Character,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableEntry {
    pub value: BigUint,
    pub provenance: Provenance,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CacheError {
    #[error("cache file is not valid JSON: {0}")]
    Json(String),
    #[error("cache entry {index}: {reason}")]
    Entry { index: usize, reason: String },
    #[error("cache holds coefficients for n={found}, expected n={expected}")]
    WrongSize { found: usize, expected: usize },
    #[error("cache io error: {0}")]
    Io(String),
}

/// Memoized store of Kronecker coefficients for one symmetric group,
/// persistable as JSON. All computed sub-coefficients of a recursion are
/// retained, so a warm table answers dominance-larger queries for free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KroneckerTable {
    n: usize,
    entries: BTreeMap<KroneckerKey, TableEntry>,
}

impl KroneckerTable {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1);
        KroneckerTable {
            n,
            entries: BTreeMap::new(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (&KroneckerKey, &TableEntry)> {
        self.entries.iter()
    }

    pub fn get(&self, key: &KroneckerKey) -> Option<&TableEntry> {
        self.entries.get(key)
    }

    /// The coefficient for `shapes` by the descent-set recursion, memoized.
    ///
    /// Panics if any shape does not partition the table's `n`.
    pub fn coefficient(&mut self, shapes: &[Partition]) -> BigUint {
        assert!(!shapes.is_empty(), "need at least one shape");
        for s in shapes {
            assert_eq!(s.sum(), self.n, "shape {s} does not partition {}", self.n);
        }
        let key = KroneckerKey::new(shapes);
        let mut in_progress = HashSet::new();
        self.eval(&key, &mut in_progress)
    }

    fn eval(&mut self, key: &KroneckerKey, in_progress: &mut HashSet<KroneckerKey>) -> BigUint {
        if let Some(entry) = self.entries.get(key) {
            return entry.value.clone();
        }
        // Every recursive key is strictly larger in componentwise dominance,
        // so re-entry cannot happen; guard anyway.
        assert!(
            in_progress.insert(key.clone()),
            "cycle detected in descent recursion at {key}"
        );
        let n = self.n;
        let descents: Vec<DescentSet> = key
            .shapes()
            .iter()
            .map(|mu| StandardTableau::canonical(mu).descent_set())
            .collect();
        let matched = count_tuples_with_descents(n, &descents);

        // Group the tableaux carrying each descent set by shape. Every shape
        // that appears dominates the corresponding key shape.
        let shape_counts: Vec<Vec<(Partition, u64)>> = descents
            .iter()
            .zip(key.shapes())
            .map(|(d, mu)| {
                let mut counts: BTreeMap<Partition, u64> = BTreeMap::new();
                for t in StandardTableau::with_descent_set(n, d) {
                    *counts.entry(t.shape()).or_default() += 1;
                }
                for shape in counts.keys() {
                    debug_assert!(mu.dominance_leq(shape), "{shape} should dominate {mu}");
                }
                counts.into_iter().collect()
            })
            .collect();

        // Subtract every strictly larger shape tuple, weighted by how many
        // tableau tuples with the right descent sets realize it.
        let mut subtract = BigUint::zero();
        let k = key.k();
        let mut choice = vec![0usize; k];
        'outer: loop {
            let tuple: Vec<Partition> = (0..k)
                .map(|i| shape_counts[i][choice[i]].0.clone())
                .collect();
            if tuple != key.shapes() {
                let mult: u64 = (0..k).map(|i| shape_counts[i][choice[i]].1).product();
                let sub_key = KroneckerKey::new(&tuple);
                let value = self.eval(&sub_key, in_progress);
                subtract += value * BigUint::from(mult);
            }
            // odometer over the per-coordinate shape lists
            for i in (0..k).rev() {
                choice[i] += 1;
                if choice[i] < shape_counts[i].len() {
                    continue 'outer;
                }
                choice[i] = 0;
            }
            break;
        }

        let matched = BigUint::from(matched);
        assert!(
            subtract <= matched,
            "recursion produced a negative value at {key}"
        );
        let value = matched - subtract;
        in_progress.remove(key);
        self.entries.insert(
            key.clone(),
            TableEntry {
                value: value.clone(),
                provenance: Provenance::Recursion,
            },
        );
        value
    }

    /// Inserts an externally computed value (used by the character oracle
    /// and by cache import).
    pub fn insert(&mut self, key: KroneckerKey, value: BigUint, provenance: Provenance) {
        assert_eq!(key.n(), self.n);
        self.entries.insert(key, TableEntry { value, provenance });
    }

    /// Merges every entry of `other` into `self`.
    pub fn merge(&mut self, other: &KroneckerTable) -> Result<(), CacheError> {
        if other.n != self.n {
            return Err(CacheError::WrongSize {
                found: other.n,
                expected: self.n,
            });
        }
        for (k, e) in &other.entries {
            self.entries.insert(k.clone(), e.clone());
        }
        Ok(())
    }

    pub fn to_json_string(&self) -> String {
        let entries: Vec<CacheEntryDto> = self
            .entries
            .iter()
            .map(|(k, e)| CacheEntryDto {
                shapes: k.shapes().iter().map(|p| p.parts().to_vec()).collect(),
                value: e.value.to_string(),
                provenance: e.provenance,
            })
            .collect();
        let dto = CacheFileDto { n: self.n, entries };
        serde_json::to_string_pretty(&dto).expect("cache serialization cannot fail")
    }

    /// Parses and validates a cache file. Every malformed entry is reported
    /// with its index: shapes must be partitions of `n` and values must be
    /// nonnegative integers.
    pub fn from_json_str(s: &str) -> Result<KroneckerTable, CacheError> {
        let dto: CacheFileDto =
            serde_json::from_str(s).map_err(|e| CacheError::Json(e.to_string()))?;
        let mut table = KroneckerTable::new(dto.n);
        for (index, entry) in dto.entries.iter().enumerate() {
            let mut shapes = Vec::with_capacity(entry.shapes.len());
            for raw in &entry.shapes {
                if !raw.windows(2).all(|w| w[0] >= w[1]) || raw.contains(&0) {
                    return Err(CacheError::Entry {
                        index,
                        reason: format!("{raw:?} is not a partition"),
                    });
                }
                let p = Partition::new(raw.clone());
                if p.sum() != dto.n {
                    return Err(CacheError::Entry {
                        index,
                        reason: format!("shape {p} does not partition n={}", dto.n),
                    });
                }
                shapes.push(p);
            }
            if shapes.is_empty() {
                return Err(CacheError::Entry {
                    index,
                    reason: "entry has no shapes".to_string(),
                });
            }
            let value: BigUint = entry.value.trim().parse().map_err(|_| CacheError::Entry {
                index,
                reason: format!("value {:?} is not a nonnegative integer", entry.value),
            })?;
            table.insert(KroneckerKey::new(&shapes), value, entry.provenance);
        }
        Ok(table)
    }

    pub fn save(&self, path: &Path) -> Result<(), CacheError> {
        std::fs::write(path, self.to_json_string()).map_err(|e| CacheError::Io(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<KroneckerTable, CacheError> {
        let content = std::fs::read_to_string(path).map_err(|e| CacheError::Io(e.to_string()))?;
        KroneckerTable::from_json_str(&content)
    }
}

#[derive(Serialize, Deserialize)]
struct CacheFileDto {
    n: usize,
    entries: Vec<CacheEntryDto>,
}

#[derive(Serialize, Deserialize)]
struct CacheEntryDto {
    shapes: Vec<Vec<usize>>,
    value: String,
    provenance: Provenance,
}

// ---------------------------------------------------------------------------
// Free functions
// ---------------------------------------------------------------------------

/// One-shot coefficient by the descent recursion with a throwaway memo.
pub fn kronecker_recursive(shapes: &[Partition]) -> BigUint {
    assert!(!shapes.is_empty());
    let mut table = KroneckerTable::new(shapes[0].sum().max(1));
    table.coefficient(shapes)
}

/// The class-weighted character sum `(1/n!) sum_rho |rho| prod_i chi^(mu_i)(rho)`.
///
/// Panics if the sum is not a nonnegative multiple of `n!`, which would
/// signal a corrupted character table.
pub fn kronecker_character(table: &CharacterTable, shapes: &[Partition]) -> BigUint {
    assert!(!shapes.is_empty());
    for s in shapes {
        assert_eq!(
            s.sum(),
            table.n(),
            "shape {s} does not partition {}",
            table.n()
        );
    }
    let mut acc = BigInt::zero();
    for rho in table.labels() {
        let mut term = BigInt::from(table.class_size(rho).clone());
        for s in shapes {
            term *= BigInt::from(table.value(s, rho));
        }
        acc += term;
    }
    let fact: BigInt = (1..=table.n() as u64).map(BigInt::from).product();
    let (q, r) = acc.div_rem(&fact);
    assert!(
        r.is_zero() && !q.is_negative(),
        "character sum is not a nonnegative multiple of n! (table bug)"
    );
    q.to_biguint().expect("checked nonnegative")
}

/// Multiplicities of every irreducible in the tensor product `a (x) b`,
/// computed by the descent recursion; zero multiplicities are omitted.
pub fn tensor_decompose(a: &Partition, b: &Partition) -> BTreeMap<Partition, BigUint> {
    assert_eq!(
        a.sum(),
        b.sum(),
        "tensor factors must partition the same integer"
    );
    let n = a.sum();
    let mut table = KroneckerTable::new(n);
    let mut out = BTreeMap::new();
    for rho in Partition::partitions_of(n) {
        let d = table.coefficient(&[a.clone(), b.clone(), rho.clone()]);
        if !d.is_zero() {
            out.insert(rho, d);
        }
    }
    out
}

/// Suite comparing the recursion against the character oracle on every
/// multipartition key with the given number of components, for all sizes
/// `2..=n`.
pub fn verify_oracle_equivalence(n: usize, k: usize) -> VerifyReport {
    let mut report = VerifyReport::new("oracle");
    assert!(k >= 1);
    for m in 2..=n {
        let chartab = CharacterTable::build(m);
        let shapes = Partition::partitions_of(m);
        let mut table = KroneckerTable::new(m);
        let mut keys = 0u64;
        let mut mismatches = Vec::new();
        let mut choice = vec![0usize; k];
        'outer: loop {
            let tuple: Vec<Partition> = choice.iter().map(|&i| shapes[i].clone()).collect();
            keys += 1;
            let rec = table.coefficient(&tuple);
            let chr = kronecker_character(&chartab, &tuple);
            if rec != chr {
                mismatches.push(format!(
                    "{}: recursion={rec} character={chr}",
                    KroneckerKey::new(&tuple)
                ));
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
        report.record(
            format!("recursion = character sum on all {keys} keys (n={m}, k={k})"),
            mismatches.is_empty(),
            if mismatches.is_empty() {
                format!("{} partitions per coordinate", shapes.len())
            } else {
                mismatches.join("; ")
            },
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn trivial_and_sign_characters() {
        let ct = CharacterTable::build(5);
        for rho in ct.labels() {
            assert_eq!(ct.value(&part("5"), rho), 1);
            let transpositions = 5 - rho.len();
            let sign = if transpositions % 2 == 0 { 1 } else { -1 };
            assert_eq!(ct.value(&part("1,1,1,1,1"), rho), sign, "class {rho}");
        }
    }

    #[test]
    fn character_at_identity_is_dimension() {
        for n in 1..=7 {
            let ct = CharacterTable::build(n);
            let identity = Partition::new(vec![1; n]);
            for mu in ct.labels() {
                assert_eq!(
                    ct.value(mu, &identity),
                    StandardTableau::dimension(mu) as i64,
                    "mu={mu}"
                );
            }
        }
        assert_eq!(character_value(&part("2,1"), &part("1,1,1")), 2);
    }

    #[test]
    fn character_rows_are_orthogonal() {
        for n in 1..=7 {
            let ct = CharacterTable::build(n);
            let fact = BigInt::from(crate::budget::factorial(n));
            for a in ct.labels() {
                for b in ct.labels() {
                    let mut acc = BigInt::zero();
                    for rho in ct.labels() {
                        acc += BigInt::from(ct.class_size(rho).clone())
                            * BigInt::from(ct.value(a, rho))
                            * BigInt::from(ct.value(b, rho));
                    }
                    let expected = if a == b { fact.clone() } else { BigInt::zero() };
                    assert_eq!(acc, expected, "n={n} a={a} b={b}");
                }
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 1..=8 {
            let total: BigUint = Partition::partitions_of(n)
                .iter()
                .map(conjugacy_class_size)
                .sum();
            assert_eq!(total, BigUint::from(crate::budget::factorial(n)));
        }
    }

    #[test]
    fn character_oracle_base_cases() {
        let ct = CharacterTable::build(3);
        // single argument: multiplicity of the trivial representation
        for mu in ct.labels() {
            let expected = u32::from(*mu == part("3"));
            assert_eq!(
                kronecker_character(&ct, &[mu.clone()]),
                BigUint::from(expected)
            );
        }
        // two arguments: orthonormality
        for a in ct.labels() {
            for b in ct.labels() {
                let expected = u32::from(a == b);
                assert_eq!(
                    kronecker_character(&ct, &[a.clone(), b.clone()]),
                    BigUint::from(expected)
                );
            }
        }
        // all triple products with a square factor in S3 are multiplicity one
        for rho in ct.labels() {
            assert_eq!(
                kronecker_character(&ct, &[part("2,1"), part("2,1"), rho.clone()]),
                BigUint::from(1u32),
                "rho={rho}"
            );
        }
    }

    #[test]
    fn worked_example_values() {
        // the two intermediate quantities of the running n=4, k=3 example
        let mut table = KroneckerTable::new(4);
        assert_eq!(
            table.coefficient(&[part("3,1"), part("3,1"), part("2,1,1")]),
            BigUint::from(1u32)
        );
        assert_eq!(
            table.coefficient(&[part("3,1"), part("2,2"), part("2,1,1")]),
            BigUint::from(1u32)
        );
    }

    #[test]
    fn recursion_matches_orthonormality_for_pairs() {
        for n in 1..=5 {
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
        }
    }

    #[test]
    fn recursion_single_argument() {
        let mut table = KroneckerTable::new(4);
        for mu in Partition::partitions_of(4) {
            let expected = BigUint::from(u32::from(mu == part("4")));
            assert_eq!(table.coefficient(&[mu.clone()]), expected);
        }
    }

    #[test]
    fn tensor_with_trivial_is_identity() {
        for mu in Partition::partitions_of(5) {
            let dec = tensor_decompose(&part("5"), &mu);
            assert_eq!(dec, BTreeMap::from([(mu.clone(), BigUint::from(1u32))]));
        }
    }

    #[test]
    fn tensor_square_in_s3() {
        let dec = tensor_decompose(&part("2,1"), &part("2,1"));
        let one = BigUint::from(1u32);
        assert_eq!(
            dec,
            BTreeMap::from([
                (part("3"), one.clone()),
                (part("2,1"), one.clone()),
                (part("1,1,1"), one),
            ])
        );
    }

    #[test]
    fn tensor_dimension_count() {
        for n in 1..=5 {
            for a in Partition::partitions_of(n) {
                for b in Partition::partitions_of(n) {
                    let lhs: BigUint = tensor_decompose(&a, &b)
                        .iter()
                        .map(|(rho, d)| d * BigUint::from(StandardTableau::dimension(rho)))
                        .sum();
                    let rhs = BigUint::from(
                        StandardTableau::dimension(&a) * StandardTableau::dimension(&b),
                    );
                    assert_eq!(lhs, rhs, "{a} (x) {b}");
                }
            }
        }
    }

    #[test]
    fn argument_order_is_irrelevant() {
        // recursion evaluated through the canonicalizing table, on raw orders
        let mut table = KroneckerTable::new(4);
        let shapes = [part("3,1"), part("2,2"), part("2,1,1")];
        let base = table.coefficient(&shapes);
        let reordered = [
            [&shapes[1], &shapes[0], &shapes[2]],
            [&shapes[2], &shapes[1], &shapes[0]],
            [&shapes[1], &shapes[2], &shapes[0]],
        ];
        for order in reordered {
            let tuple: Vec<Partition> = order.iter().map(|p| (*p).clone()).collect();
            assert_eq!(table.coefficient(&tuple), base);
        }
    }

    #[test]
    fn cache_round_trip_is_exact() {
        let mut table = KroneckerTable::new(4);
        table.coefficient(&[part("3,1"), part("2,2"), part("2,1,1")]);
        let json = table.to_json_string();
        let back = KroneckerTable::from_json_str(&json).unwrap();
        assert_eq!(back, table);
        assert_eq!(back.to_json_string(), json);
    }

    #[test]
    fn cache_rejects_bad_entries() {
        let bad_value = r#"{"n":4,"entries":[
            {"shapes":[[3,1],[2,2]],"value":"1","provenance":"recursion"},
            {"shapes":[[3,1],[2,2]],"value":"-1","provenance":"recursion"}
        ]}"#;
        match KroneckerTable::from_json_str(bad_value) {
            Err(CacheError::Entry { index, .. }) => assert_eq!(index, 1),
            other => panic!("expected entry error, got {other:?}"),
        }

        let bad_shape =
            r#"{"n":4,"entries":[{"shapes":[[1,3]],"value":"0","provenance":"recursion"}]}"#;
        assert!(matches!(
            KroneckerTable::from_json_str(bad_shape),
            Err(CacheError::Entry { index: 0, .. })
        ));

        let bad_sum =
            r#"{"n":4,"entries":[{"shapes":[[2,1]],"value":"0","provenance":"recursion"}]}"#;
        assert!(matches!(
            KroneckerTable::from_json_str(bad_sum),
            Err(CacheError::Entry { index: 0, .. })
        ));
    }
}
