//! Permutations of `[n]` in one-line notation and their descent statistics.
//!
//! A descent of a permutation is a position `i` with `word[i] > word[i+1]`
//! (positions are 1-based, `i` ranges over `1..=n-1`). The major index is the
//! sum of the descent positions; together with the inversion number these are
//! the two classical equidistributed ("Mahonian") statistics.
//!
//! Composition convention: `p.compose(&q)` applies `p` first and `q` second,
//! so a product written left to right acts left to right. This is the
//! convention under which the identity-product tuples used throughout this
//! crate behave as documented, and it is pinned by unit tests.

use crate::tableaux::Partition;
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A permutation of `{1, .., n}` stored in one-line notation.
///
/// `word[i]` is the image of `i + 1`; values are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum PermutationError {
    #[error("word is not a bijection of 1..={n}: {word:?}")]
    NotBijective { n: usize, word: Vec<usize> },
    #[error("cannot parse permutation from {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

impl Permutation {
    /// Builds a permutation from a one-line word, validating bijectivity.
    pub fn from_word(word: Vec<usize>) -> Result<Self, PermutationError> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v == 0 || v > n || seen[v] {
                return Err(PermutationError::NotBijective { n, word });
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// The order-reversing permutation `n, n-1, .., 1` (the top element).
    pub fn longest_element(n: usize) -> Self {
        Permutation {
            word: (1..=n).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// Image of the 1-based point `i`.
    pub fn image(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Product "self then other": the returned permutation maps `i` to
    /// `other(self(i))`. Panics if sizes differ.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.n(),
            other.n(),
            "cannot compose permutations of different sizes"
        );
        Permutation {
            word: self.word.iter().map(|&v| other.word[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    /// `{i in [n-1] : word[i] > word[i+1]}`.
    pub fn descent_set(&self) -> DescentSet {
        let n = self.n();
        let mut d = DescentSet::empty(n);
        for i in 1..n {
            if self.word[i - 1] > self.word[i] {
                d.insert(i);
            }
        }
        d
    }

    /// Major index: the sum of the descent positions.
    pub fn maj(&self) -> usize {
        self.descent_set().major_index()
    }

    /// Number of pairs `i < j` with `word[i] > word[j]`.
    pub fn inversions(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Both Mahonian statistics at once, as `(maj, inv)`.
    pub fn statistics(&self) -> (usize, usize) {
        (self.maj(), self.inversions())
    }

    /// The partition whose `i`-th part counts descents at positions `>= i`.
    ///
    /// Determines the descent set and has total size `maj`.
    pub fn descent_partition(&self) -> Partition {
        self.descent_set().descent_partition()
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n <= 9` (e.g. `35241`), comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let items: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", items.join(","))
        }
    }
}

impl FromStr for Permutation {
    type Err = PermutationError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse_err = |reason: &str| PermutationError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let word: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<usize>())
                .collect::<Result<_, _>>()
                .map_err(|e| parse_err(&e.to_string()))?
        } else {
            if s.is_empty() || !s.chars().all(|c| c.is_ascii_digit()) {
                return Err(parse_err("expected digits or comma-separated integers"));
            }
            s.chars()
                .map(|c| c.to_digit(10).unwrap() as usize)
                .collect()
        };
        Permutation::from_word(word)
    }
}

/// A subset of `{1, .., n-1}` recording descent positions, stored as a bit
/// mask. Equality and ordering include `n`, so sets over different `n` never
/// compare equal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DescentSet {
    n: usize,
    mask: u64,
}

impl DescentSet {
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1 && n <= 64, "descent sets support 1 <= n <= 64");
        DescentSet { n, mask: 0 }
    }

    pub fn new(n: usize, elements: impl IntoIterator<Item = usize>) -> Self {
        let mut d = DescentSet::empty(n);
        for i in elements {
            d.insert(i);
        }
        d
    }

    /// Every subset of `[n-1]`, in increasing bit-mask order.
    pub fn all(n: usize) -> impl Iterator<Item = DescentSet> {
        assert!(n >= 1 && n <= 20, "full subset sweeps need small n");
        (0u64..(1 << (n - 1))).map(move |mask| DescentSet { n, mask })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn insert(&mut self, i: usize) {
        assert!(
            i >= 1 && i < self.n,
            "descent position {i} outside 1..{}",
            self.n
        );
        self.mask |= 1 << (i - 1);
    }

    pub fn contains(&self, i: usize) -> bool {
        i >= 1 && i < self.n && self.mask & (1 << (i - 1)) != 0
    }

    pub fn len(&self) -> usize {
        self.mask.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.mask == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (1..self.n).filter(move |&i| self.contains(i))
    }

    /// Sum of the elements (the major index of anything with this descent set).
    pub fn major_index(&self) -> usize {
        self.iter().sum()
    }

    /// `[n-1]` minus this set.
    pub fn complement(&self) -> DescentSet {
        let full = if self.n == 1 {
            0
        } else {
            (1u64 << (self.n - 1)) - 1
        };
        DescentSet {
            n: self.n,
            mask: full & !self.mask,
        }
    }

    /// `{i : n-i in self}`, the reflection through `n/2`.
    pub fn reflect(&self) -> DescentSet {
        DescentSet::new(self.n, self.iter().map(|i| self.n - i))
    }

    /// The partition with `i`-th part `|self ∩ {i, .., n-1}|`.
    ///
    /// The map from subsets of `[n-1]` to partitions is injective: consecutive
    /// part differences recover membership of each position.
    pub fn descent_partition(&self) -> Partition {
        let mut parts = Vec::new();
        for i in 1..self.n {
            let count = self.iter().filter(|&d| d >= i).count();
            if count == 0 {
                break;
            }
            parts.push(count);
        }
        Partition::new(parts)
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.iter().map(|i| i.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Parses `"{2,4}"` (or `"{}"`) given `n` is supplied separately via
/// [`DescentSet::parse_with_n`]; `FromStr` is not implemented because the
/// carrier size is not part of the textual form.
impl DescentSet {
    pub fn parse_with_n(s: &str, n: usize) -> Result<Self, PermutationError> {
        let parse_err = |reason: &str| PermutationError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| parse_err("expected braces, e.g. {2,3}"))?;
        let mut d = DescentSet::empty(n);
        for tok in inner.split(',') {
            let tok = tok.trim();
            if tok.is_empty() {
                continue;
            }
            let i: usize = tok.parse().map_err(|_| parse_err("bad integer"))?;
            if i == 0 || i >= n {
                return Err(parse_err(&format!("descent {i} outside 1..{n}")));
            }
            d.insert(i);
        }
        Ok(d)
    }
}

/// A `k`-tuple of permutations of the same `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationTuple {
    perms: Vec<Permutation>,
}

impl PermutationTuple {
    /// Panics if the tuple is empty or mixes sizes.
    pub fn new(perms: Vec<Permutation>) -> Self {
        assert!(!perms.is_empty(), "tuple must be non-empty");
        let n = perms[0].n();
        assert!(
            perms.iter().all(|p| p.n() == n),
            "tuple mixes permutation sizes"
        );
        PermutationTuple { perms }
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    /// Left-to-right product of the entries.
    pub fn product(&self) -> Permutation {
        let mut acc = Permutation::identity(self.perms[0].n());
        for p in &self.perms {
            acc = acc.compose(p);
        }
        acc
    }

    /// Whether the ordered product is the identity.
    pub fn is_identity_product(&self) -> bool {
        self.product().is_identity()
    }
}

/// All of `S_n` in lexicographic word order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(n: usize, word: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if word.len() == n {
            out.push(Permutation { word: word.clone() });
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                word.push(v);
                rec(n, word, used, out);
                word.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut word, &mut used, &mut out);
    out
}

/// All permutations whose descent set equals `d` exactly.
///
/// Builds words position by position, branching only on values consistent
/// with the up/down pattern, so the work is proportional to the search tree
/// rather than to `n!`.
pub fn permutations_with_descent_set(n: usize, d: &DescentSet) -> Vec<Permutation> {
    assert_eq!(d.n(), n, "descent set carrier does not match n");
    let mut out = Vec::new();
    let mut word = Vec::with_capacity(n);
    let mut used = vec![false; n + 1];
    fn rec(
        n: usize,
        d: &DescentSet,
        word: &mut Vec<usize>,
        used: &mut [bool],
        out: &mut Vec<Permutation>,
    ) {
        if word.len() == n {
            out.push(Permutation { word: word.clone() });
            return;
        }
        let pos = word.len(); // next 0-based index; boundary `pos` (1-based) constrains it
        for v in 1..=n {
            if used[v] {
                continue;
            }
            if pos > 0 {
                let prev = word[pos - 1];
                let want_descent = d.contains(pos);
                if want_descent != (prev > v) {
                    continue;
                }
            }
            used[v] = true;
            word.push(v);
            rec(n, d, word, used, out);
            word.pop();
            used[v] = false;
        }
    }
    rec(n, d, &mut word, &mut used, &mut out);
    out
}

/// Exact size of a descent class by inclusion-exclusion over the subsets of
/// `d`: permutations with descents contained in `S` are counted by a
/// multinomial over the composition that `S` cuts out of `n`.
pub fn descent_class_size(n: usize, d: &DescentSet) -> u64 {
    assert_eq!(d.n(), n);
    let elems: Vec<usize> = d.iter().collect();
    let mut total: i128 = 0;
    for sub in 0u64..(1 << elems.len()) {
        let mut cuts: Vec<usize> = Vec::new();
        for (b, &e) in elems.iter().enumerate() {
            if sub & (1 << b) != 0 {
                cuts.push(e);
            }
        }
        let sign = if (elems.len() - cuts.len()) % 2 == 0 {
            1
        } else {
            -1
        };
        total += sign * multinomial_from_cuts(n, &cuts);
    }
    assert!(total >= 0);
    total as u64
}

fn multinomial_from_cuts(n: usize, cuts: &[usize]) -> i128 {
    // number of words with descent set contained in the cut positions
    let mut sizes = Vec::with_capacity(cuts.len() + 1);
    let mut prev = 0;
    for &c in cuts {
        sizes.push(c - prev);
        prev = c;
    }
    sizes.push(n - prev);
    let mut result: i128 = 1;
    let mut remaining = n;
    for &s in &sizes {
        result *= binomial(remaining, s);
        remaining -= s;
    }
    result
}

fn binomial(n: usize, k: usize) -> i128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i128 / (i + 1) as i128;
    }
    acc
}

/// Suite checking that `maj` and `inv` are equidistributed over the whole
/// group and that both generating polynomials equal the q-factorial, for
/// every size up to `max_n`.
pub fn verify_mahonian_equidistribution(max_n: usize) -> crate::report::VerifyReport {
    let mut report = crate::report::VerifyReport::new("macmahon");
    for n in 1..=max_n {
        let maj = mahonian_polynomial(n, MahonianStat::Maj);
        let inv = mahonian_polynomial(n, MahonianStat::Inv);
        let closed = q_factorial(n);
        report.record(
            format!("maj and inv polynomials equal the q-factorial at n={n}"),
            maj == inv && maj == closed,
            if maj == inv && maj == closed {
                format!("{} permutations", crate::budget::factorial(n))
            } else {
                format!("maj={maj:?} inv={inv:?} closed={closed:?}")
            },
        );
    }
    report
}

/// Which Mahonian statistic a generating polynomial sums over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MahonianStat {
    Maj,
    Inv,
}

/// Coefficient vector of the generating polynomial of `maj` or `inv` over
/// all of `S_n`; index `i` holds the number of permutations with statistic
/// value `i`.
pub fn mahonian_polynomial(n: usize, stat: MahonianStat) -> Vec<u64> {
    assert!(n >= 1);
    let max = n * (n - 1) / 2;
    let mut coeffs = vec![0u64; max + 1];
    for p in all_permutations(n) {
        let s = match stat {
            MahonianStat::Maj => p.maj(),
            MahonianStat::Inv => p.inversions(),
        };
        coeffs[s] += 1;
    }
    coeffs
}

/// The product `(1)(1+q)(1+q+q^2)..(1+..+q^(n-1))`, i.e. the q-factorial
/// `[n]_q!`, as a coefficient vector. This is the closed form both Mahonian
/// polynomials equal.
pub fn q_factorial(n: usize) -> Vec<u64> {
    assert!(n >= 1);
    let mut coeffs = vec![1u64];
    for i in 1..n {
        // multiply by 1 + q + .. + q^i
        let mut next = vec![0u64; coeffs.len() + i];
        for (e, &c) in coeffs.iter().enumerate() {
            for j in 0..=i {
                next[e + j] += c;
            }
        }
        coeffs = next;
    }
    coeffs
}
