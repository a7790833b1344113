//! Integer partitions with dominance order, standard Young tableaux with
//! descent statistics, the row-filling canonical tableau of a shape,
//! Robinson-Schensted row insertion, transposition and evacuation.

use crate::permstat::{DescentSet, Permutation};
use serde::Serialize;
use std::fmt;
use std::str::FromStr;
use thiserror::Error;

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// implicit: `part(i)` is 0 past the stored parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition {
    parts: Vec<usize>,
}

#[derive(Debug, Clone, Error, PartialEq, Eq)]
#[error("cannot parse partition from {input:?}: {reason}")]
pub struct PartitionParseError {
    pub input: String,
    pub reason: String,
}

impl Partition {
    /// Panics unless the parts are weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        assert!(
            parts.last().is_none_or(|&p| p > 0),
            "partition parts must be positive: {parts:?}"
        );
        Partition { parts }
    }

    /// Builds from any nonnegative sequence by sorting and dropping zeros.
    pub fn from_unsorted(mut values: Vec<usize>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        while values.last() == Some(&0) {
            values.pop();
        }
        Partition { parts: values }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// 1-based part access; 0 beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1);
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Column lengths of the Ferrers diagram; an involution.
    pub fn conjugate(&self) -> Partition {
        let cols = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=cols)
            .map(|j| self.parts.iter().take_while(|&&p| p >= j).count())
            .collect();
        Partition { parts }
    }

    /// Dominance comparison: all prefix sums of `self` are at most those of
    /// `other`. Panics unless both partition the same integer.
    pub fn dominance_leq(&self, other: &Partition) -> bool {
        assert_eq!(
            self.sum(),
            other.sum(),
            "dominance compares partitions of the same integer"
        );
        let rows = self.len().max(other.len());
        let (mut sa, mut sb) = (0usize, 0usize);
        for i in 1..=rows {
            sa += self.part(i);
            sb += other.part(i);
            if sa > sb {
                return false;
            }
        }
        true
    }

    pub fn dominance_lt(&self, other: &Partition) -> bool {
        self != other && self.dominance_leq(other)
    }

    /// All partitions of `n`, largest-first lexicographic order.
    pub fn partitions_of(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fn rec(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=n.min(max)).rev() {
                prefix.push(p);
                rec(n - p, p, prefix, out);
                prefix.pop();
            }
        }
        rec(n, n, &mut prefix, &mut out);
        out
    }

    /// All partitions with at most `max_len` parts, each at most `max_part`
    /// (the partitions fitting in a box), including the empty partition.
    pub fn partitions_in_box(max_len: usize, max_part: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        fn rec(rows_left: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition {
                parts: prefix.clone(),
            });
            if rows_left == 0 {
                return;
            }
            for p in (1..=max).rev() {
                prefix.push(p);
                rec(rows_left - 1, p, prefix, out);
                prefix.pop();
            }
        }
        rec(max_len, max_part, &mut prefix, &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// Number of standard tableaux of this shape by the hook length formula.
    /// Used as an independent cross-check of enumeration-based counting.
    pub fn hook_length_count(&self) -> u64 {
        let n = self.sum();
        if n == 0 {
            return 1;
        }
        let conj = self.conjugate();
        let mut hooks: u128 = 1;
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 1..=row {
                let hook = (row - j) + (conj.part(j) - (i + 1)) + 1;
                hooks *= hook as u128;
            }
        }
        let fact = crate::budget::factorial(n);
        assert_eq!(fact % hooks, 0, "hook product must divide n!");
        u64::try_from(fact / hooks).expect("tableau count fits u64")
    }
}

impl fmt::Display for Partition {
    /// Comma-joined parts, e.g. `3,2,1,1`; the empty partition prints `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "()");
        }
        let items: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", items.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = |reason: &str| PartitionParseError {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let tok = tok.trim();
            let p: usize = tok.parse().map_err(|_| err("bad integer part"))?;
            if p == 0 {
                return Err(err("parts must be positive"));
            }
            parts.push(p);
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(err("parts must be weakly decreasing"));
        }
        Ok(Partition { parts })
    }
}

/// A `k`-tuple of partitions of the same integer.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    parts: Vec<Partition>,
}

impl Multipartition {
    /// Panics if the tuple is empty or the components have different sizes.
    pub fn new(parts: Vec<Partition>) -> Self {
        assert!(!parts.is_empty(), "multipartition must be non-empty");
        let n = parts[0].sum();
        assert!(
            parts.iter().all(|p| p.sum() == n),
            "multipartition components must partition the same integer"
        );
        Multipartition { parts }
    }

    pub fn components(&self) -> &[Partition] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    pub fn n(&self) -> usize {
        self.parts[0].sum()
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.parts.iter().map(|p| format!("({p})")).collect();
        write!(f, "{}", items.join(" "))
    }
}

/// A standard filling of a Ferrers diagram: rows and columns strictly
/// increase and the entries are exactly `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Panics unless `rows` is a standard tableau.
    pub fn new(rows: Vec<Vec<usize>>) -> Self {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for (i, row) in rows.iter().enumerate() {
            assert!(!row.is_empty(), "tableau rows must be non-empty");
            if i > 0 {
                assert!(
                    rows[i - 1].len() >= row.len(),
                    "row lengths must weakly decrease"
                );
            }
            for (j, &v) in row.iter().enumerate() {
                assert!(
                    v >= 1 && v <= n && !seen[v],
                    "entries must be 1..=n once each"
                );
                seen[v] = true;
                if j > 0 {
                    assert!(row[j - 1] < v, "rows must increase");
                }
                if i > 0 {
                    assert!(rows[i - 1][j] < v, "columns must increase");
                }
            }
        }
        StandardTableau { rows }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(|r| r.len()).collect())
    }

    /// 0-based row index of each entry; index 0 is unused.
    fn row_of_entries(&self) -> Vec<usize> {
        let mut row_of = vec![0; self.n() + 1];
        for (i, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = i;
            }
        }
        row_of
    }

    /// `{i : i sits strictly above i+1}`.
    pub fn descent_set(&self) -> DescentSet {
        let n = self.n();
        let row_of = self.row_of_entries();
        DescentSet::new(n.max(1), (1..n).filter(|&i| row_of[i] < row_of[i + 1]))
    }

    pub fn maj(&self) -> usize {
        self.descent_set().major_index()
    }

    /// The partition with `i`-th part `|Des ∩ {i, .., n-1}|`; size `maj`.
    pub fn descent_partition(&self) -> Partition {
        self.descent_set().descent_partition()
    }

    /// Descent set and descent partition together.
    pub fn descent_data(&self) -> (DescentSet, Partition) {
        let d = self.descent_set();
        let lambda = d.descent_partition();
        (d, lambda)
    }

    /// The row-by-row filling of `shape`: `1..shape[0]` in the first row and
    /// so on. It is the unique tableau of its shape whose descent set is the
    /// set of partial row sums.
    pub fn canonical(shape: &Partition) -> StandardTableau {
        let mut rows = Vec::with_capacity(shape.len());
        let mut next = 1;
        for &len in shape.parts() {
            rows.push((next..next + len).collect());
            next += len;
        }
        StandardTableau { rows }
    }

    /// All standard tableaux of `shape`, in the deterministic order produced
    /// by placing `1..=n` into the lexicographically smallest addable cells
    /// first.
    pub fn enumerate(shape: &Partition) -> Vec<StandardTableau> {
        let n = shape.sum();
        let mut out = Vec::new();
        let mut fill: Vec<usize> = vec![0; shape.len()];
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
        fn rec(
            v: usize,
            n: usize,
            shape: &Partition,
            fill: &mut Vec<usize>,
            rows: &mut Vec<Vec<usize>>,
            out: &mut Vec<StandardTableau>,
        ) {
            if v > n {
                out.push(StandardTableau { rows: rows.clone() });
                return;
            }
            for i in 0..shape.len() {
                let addable = fill[i] < shape.part(i + 1) && (i == 0 || fill[i - 1] > fill[i]);
                if addable {
                    fill[i] += 1;
                    rows[i].push(v);
                    rec(v + 1, n, shape, fill, rows, out);
                    rows[i].pop();
                    fill[i] -= 1;
                }
            }
        }
        rec(1, n, shape, &mut fill, &mut rows, &mut out);
        out
    }

    /// All standard tableaux with `n` boxes, over all shapes of `n`.
    pub fn all_of_size(n: usize) -> Vec<StandardTableau> {
        Partition::partitions_of(n)
            .iter()
            .flat_map(StandardTableau::enumerate)
            .collect()
    }

    /// All standard tableaux with `n` boxes whose descent set is exactly `d`.
    pub fn with_descent_set(n: usize, d: &DescentSet) -> Vec<StandardTableau> {
        assert_eq!(d.n(), n);
        StandardTableau::all_of_size(n)
            .into_iter()
            .filter(|t| t.descent_set() == *d)
            .collect()
    }

    /// Number of standard tableaux of `shape`, counted by the same placement
    /// walk as [`StandardTableau::enumerate`]. The hook length formula serves
    /// as an independent cross-check in the tests.
    pub fn dimension(shape: &Partition) -> u64 {
        let n = shape.sum();
        fn rec(v: usize, n: usize, shape: &Partition, fill: &mut Vec<usize>) -> u64 {
            if v > n {
                return 1;
            }
            let mut total = 0;
            for i in 0..shape.len() {
                let addable = fill[i] < shape.part(i + 1) && (i == 0 || fill[i - 1] > fill[i]);
                if addable {
                    fill[i] += 1;
                    total += rec(v + 1, n, shape, fill);
                    fill[i] -= 1;
                }
            }
            total
        }
        rec(1, n, shape, &mut vec![0; shape.len()])
    }

    /// Reflects through the main diagonal; the shape is conjugated and the
    /// descent set is complemented.
    pub fn transpose(&self) -> StandardTableau {
        let shape = self.shape();
        let conj = shape.conjugate();
        let mut rows: Vec<Vec<usize>> = conj.parts().iter().map(|&l| vec![0; l]).collect();
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &v) in row.iter().enumerate() {
                rows[j][i] = v;
            }
        }
        StandardTableau { rows }
    }

    /// The Schützenberger involution, computed by repeated inward slides:
    /// remove the smallest entry, slide the hole to an outer corner, and
    /// label that corner with the largest unassigned value.
    ///
    /// Shape-preserving, involutive, and exchanges the descent set with its
    /// reflection: `i` is a descent of `T` iff `n-i` is a descent of the
    /// result.
    pub fn evacuation(&self) -> StandardTableau {
        let shape = self.shape();
        let mut work = self.rows.clone();
        let mut out: Vec<Vec<usize>> = shape.parts().iter().map(|&l| vec![0; l]).collect();
        for label in (1..=self.n()).rev() {
            // hole starts at (0,0), where the minimum lives
            let (mut r, mut c) = (0usize, 0usize);
            loop {
                let right = work[r].get(c + 1).copied();
                let below = work
                    .get(r + 1)
                    .and_then(|row| (row.len() > c).then(|| row[c]));
                match (right, below) {
                    (None, None) => break,
                    (Some(x), None) => {
                        work[r][c] = x;
                        c += 1;
                    }
                    (None, Some(y)) => {
                        work[r][c] = y;
                        r += 1;
                    }
                    (Some(x), Some(y)) => {
                        if x < y {
                            work[r][c] = x;
                            c += 1;
                        } else {
                            work[r][c] = y;
                            r += 1;
                        }
                    }
                }
            }
            out[r][c] = label;
            work[r].pop();
            if work[r].is_empty() {
                work.pop();
            }
        }
        StandardTableau::new(out)
    }
}

impl fmt::Display for StandardTableau {
    /// Row-list form, e.g. `[[1,3,5],[2,6],[4],[7]]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            let items: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            write!(f, "[{}]", items.join(","))?;
        }
        write!(f, "]")
    }
}

/// Robinson-Schensted row insertion: returns the insertion tableau `P` and
/// the recording tableau `Q` of equal shape. The map is injective, the
/// descent set of `Q` equals the descent set of the permutation, and the
/// descent set of `P` equals that of its inverse.
pub fn rs_correspondence(p: &Permutation) -> (StandardTableau, StandardTableau) {
    let mut prows: Vec<Vec<usize>> = Vec::new();
    let mut qrows: Vec<Vec<usize>> = Vec::new();
    for (step, &x) in p.word().iter().enumerate() {
        let mut v = x;
        let mut r = 0;
        loop {
            if r == prows.len() {
                prows.push(vec![v]);
                qrows.push(vec![step + 1]);
                break;
            }
            // first entry strictly greater than v, if any
            let pos = prows[r].partition_point(|&e| e < v);
            if pos == prows[r].len() {
                prows[r].push(v);
                qrows[r].push(step + 1);
                break;
            }
            std::mem::swap(&mut prows[r][pos], &mut v);
            r += 1;
        }
    }
    (StandardTableau::new(prows), StandardTableau::new(qrows))
}

/// Suite checking that row insertion is a descent-preserving bijection onto
/// same-shape tableau pairs, for every size up to `max_n`: shapes agree, the
/// recording tableau carries the descent set of the word, the insertion
/// tableau carries the descent set of the inverse, and the image has exactly
/// one pair per permutation, which (since pair counts match the square-sum
/// identity) makes it onto.
pub fn verify_rs_correspondence(max_n: usize) -> crate::report::VerifyReport {
    use std::collections::HashSet;
    let mut report = crate::report::VerifyReport::new("rs");
    for n in 1..=max_n {
        let mut images: HashSet<(StandardTableau, StandardTableau)> = HashSet::new();
        let mut failures = Vec::new();
        for sigma in crate::permstat::all_permutations(n) {
            let (p, q) = rs_correspondence(&sigma);
            if p.shape() != q.shape() {
                failures.push(format!("{sigma}: shapes {} vs {}", p.shape(), q.shape()));
            }
            if q.descent_set() != sigma.descent_set() {
                failures.push(format!("{sigma}: recording tableau descents differ"));
            }
            if p.descent_set() != sigma.inverse().descent_set() {
                failures.push(format!("{sigma}: insertion tableau descents differ"));
            }
            if !images.insert((p, q)) {
                failures.push(format!("{sigma}: image collision"));
            }
        }
        let same_shape_pairs: u64 = Partition::partitions_of(n)
            .iter()
            .map(|s| {
                let d = StandardTableau::dimension(s);
                d * d
            })
            .sum();
        if images.len() as u64 != same_shape_pairs {
            failures.push(format!(
                "image size {} != same-shape pair count {same_shape_pairs}",
                images.len()
            ));
        }
        report.record(
            format!("row insertion is a descent-preserving bijection at n={n}"),
            failures.is_empty(),
            if failures.is_empty() {
                format!("{} permutations", images.len())
            } else {
                failures.join("; ")
            },
        );
    }
    report
}
