//! Sparse multivariate polynomials over arbitrary-precision integers.
//!
//! The variable set is a `k x n` grid `q[i][j]` (`i` indexes a block of `n`
//! variables). Exponent matrices are stored flattened row-major, and the
//! term map is a `BTreeMap` keyed on the flattened exponents, so iteration
//! order - and hence every serialization - is deterministic lexicographic.
//!
//! Coefficients are exact `BigInt`s. There is no rational arithmetic, no
//! simplification beyond the canonical sparse form, and zero coefficients
//! are never stored.

use crate::tableaux::Partition;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::BTreeMap;
use std::fmt;

/// Exponents of one monomial in the `k x n` variable grid, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentMatrix {
    k: usize,
    n: usize,
    flat: Vec<u32>,
}

impl ExponentMatrix {
    pub fn zero(k: usize, n: usize) -> Self {
        assert!(k >= 1 && n >= 1);
        ExponentMatrix {
            k,
            n,
            flat: vec![0; k * n],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Self {
        let k = rows.len();
        assert!(k >= 1, "need at least one row");
        let n = rows[0].len();
        assert!(n >= 1 && rows.iter().all(|r| r.len() == n), "ragged rows");
        ExponentMatrix {
            k,
            n,
            flat: rows.into_iter().flatten().collect(),
        }
    }

    /// Row `i` (0-based) holds the parts of `shapes[i]` padded with zeros;
    /// every shape must have at most `n` parts.
    pub fn from_partitions(shapes: &[Partition], n: usize) -> Self {
        let k = shapes.len();
        assert!(k >= 1);
        let mut flat = vec![0u32; k * n];
        for (i, shape) in shapes.iter().enumerate() {
            assert!(shape.len() <= n, "shape {shape} has more than {n} parts");
            for (j, &p) in shape.parts().iter().enumerate() {
                flat[i * n + j] = u32::try_from(p).expect("part fits u32");
            }
        }
        ExponentMatrix { k, n, flat }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Exponent of `q[i][j]`, 0-based indices.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.flat[i * self.n + j]
    }

    pub fn flat(&self) -> &[u32] {
        &self.flat
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        self.flat.chunks(self.n).map(|c| c.to_vec()).collect()
    }

    /// True when every entry is at most `cap`.
    pub fn within(&self, w: Window) -> bool {
        self.flat.iter().all(|&e| e <= w.cap)
    }
}

/// Truncation bound: windowed arithmetic discards every term with an
/// exponent entry above `cap`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Window {
    pub cap: u32,
}

impl Window {
    pub fn new(cap: u32) -> Self {
        Window { cap }
    }
}

/// Sparse polynomial: a map from flattened exponent vectors to nonzero
/// coefficients, with the grid dimensions carried alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultivarPolynomial {
    k: usize,
    n: usize,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl MultivarPolynomial {
    pub fn zero(k: usize, n: usize) -> Self {
        assert!(k >= 1 && n >= 1);
        MultivarPolynomial {
            k,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(k: usize, n: usize) -> Self {
        let mut p = MultivarPolynomial::zero(k, n);
        p.add_term(ExponentMatrix::zero(k, n).flat, BigInt::one());
        p
    }

    pub fn monomial(exp: ExponentMatrix, coef: BigInt) -> Self {
        let mut p = MultivarPolynomial::zero(exp.k, exp.n);
        p.add_term(exp.flat, coef);
        p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Adds `coef` to the term at `exp`, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: Vec<u32>, coef: BigInt) {
        assert_eq!(exp.len(), self.k * self.n, "exponent length mismatch");
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Coefficient at `exp`; zero if the monomial is absent.
    pub fn coefficient(&self, exp: &ExponentMatrix) -> BigInt {
        assert_eq!((exp.k, exp.n), (self.k, self.n), "dimension mismatch");
        self.terms
            .get(&exp.flat)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in lexicographic order of the flattened exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &BigInt)> {
        self.terms.iter()
    }

    /// Sum of all coefficients (the evaluation at every variable = 1).
    pub fn total(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &MultivarPolynomial) -> MultivarPolynomial {
        assert_eq!((self.k, self.n), (other.k, other.n), "dimension mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn mul(&self, other: &MultivarPolynomial) -> MultivarPolynomial {
        self.mul_impl(other, None)
    }

    /// Product with every term containing an exponent entry above `w.cap`
    /// discarded. Because exponents only add, this equals truncating the
    /// full product to the window.
    pub fn mul_windowed(&self, other: &MultivarPolynomial, w: Window) -> MultivarPolynomial {
        self.mul_impl(other, Some(w))
    }

    fn mul_impl(&self, other: &MultivarPolynomial, w: Option<Window>) -> MultivarPolynomial {
        assert_eq!((self.k, self.n), (other.k, other.n), "dimension mismatch");
        let mut out = MultivarPolynomial::zero(self.k, self.n);
        for (ea, ca) in &self.terms {
            'terms: for (eb, cb) in &other.terms {
                let mut exp = Vec::with_capacity(ea.len());
                for (x, y) in ea.iter().zip(eb) {
                    let e = x + y;
                    if let Some(w) = w {
                        if e > w.cap {
                            continue 'terms;
                        }
                    }
                    exp.push(e);
                }
                out.add_term(exp, ca * cb);
            }
        }
        out
    }

    /// Drops every term with an exponent entry above `w.cap`.
    pub fn truncate(&self, w: Window) -> MultivarPolynomial {
        let mut out = MultivarPolynomial::zero(self.k, self.n);
        for (e, c) in &self.terms {
            if e.iter().all(|&x| x <= w.cap) {
                out.add_term(e.clone(), c.clone());
            }
        }
        out
    }

    /// Substitutes `q[i][j] -> q[i]` for all `j`: each block collapses to its
    /// total degree. The result is a polynomial on a `k x 1` grid.
    pub fn specialize_coarse(&self) -> MultivarPolynomial {
        let mut out = MultivarPolynomial::zero(self.k, 1);
        for (e, c) in &self.terms {
            let exp: Vec<u32> = e.chunks(self.n).map(|row| row.iter().sum()).collect();
            out.add_term(exp, c.clone());
        }
        out
    }

    /// JSON form: `{"k":..,"n":..,"terms":[{"exp":[[..]..],"coef":"<decimal>"}..]}`
    /// with terms in the deterministic lexicographic order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(e, c)| {
                let rows: Vec<Vec<u32>> = e.chunks(self.n).map(|r| r.to_vec()).collect();
                serde_json::json!({ "exp": rows, "coef": c.to_string() })
            })
            .collect();
        serde_json::json!({ "k": self.k, "n": self.n, "terms": terms })
    }

    /// CSV form: a header, then one row per term with the flattened exponents
    /// followed by the coefficient.
    pub fn to_csv(&self) -> String {
        let mut header: Vec<String> = Vec::with_capacity(self.k * self.n + 1);
        for i in 1..=self.k {
            for j in 1..=self.n {
                header.push(format!("q{i}_{j}"));
            }
        }
        header.push("coefficient".to_string());
        let mut out = header.join(",");
        out.push('\n');
        for (e, c) in &self.terms {
            for x in e {
                out.push_str(&x.to_string());
                out.push(',');
            }
            out.push_str(&c.to_string());
            out.push('\n');
        }
        out
    }
}

impl fmt::Display for MultivarPolynomial {
    /// Human-readable sum like `1 + 2*q[1,1] + q[1,1]*q[2,1]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &x)| x > 0)
                .map(|(idx, &x)| {
                    let (i, j) = (idx / self.n + 1, idx % self.n + 1);
                    if x == 1 {
                        format!("q[{i},{j}]")
                    } else {
                        format!("q[{i},{j}]^{x}")
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", c, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(k: usize, n: usize, i: usize, j: usize) -> MultivarPolynomial {
        let mut rows = vec![vec![0u32; n]; k];
        rows[i - 1][j - 1] = 1;
        MultivarPolynomial::monomial(ExponentMatrix::from_rows(rows), BigInt::one())
    }

    #[test]
    fn ring_identities() {
        let p = q(2, 2, 1, 1).add(&MultivarPolynomial::one(2, 2));
        assert_eq!(p.add(&MultivarPolynomial::zero(2, 2)), p);
        assert_eq!(p.mul(&MultivarPolynomial::one(2, 2)), p);
    }

    #[test]
    fn binomial_square() {
        let one_plus_q = MultivarPolynomial::one(1, 1).add(&q(1, 1, 1, 1));
        let sq = one_plus_q.mul(&one_plus_q);
        assert_eq!(sq.num_terms(), 3);
        assert_eq!(
            sq.coefficient(&ExponentMatrix::from_rows(vec![vec![1]])),
            BigInt::from(2)
        );
        assert_eq!(
            sq.coefficient(&ExponentMatrix::from_rows(vec![vec![2]])),
            BigInt::one()
        );
    }

    #[test]
    fn windowed_square_drops_high_terms() {
        let one_plus_q = MultivarPolynomial::one(1, 1).add(&q(1, 1, 1, 1));
        let sq = one_plus_q.mul_windowed(&one_plus_q, Window::new(1));
        assert_eq!(sq.num_terms(), 2);
        assert_eq!(
            sq.coefficient(&ExponentMatrix::from_rows(vec![vec![1]])),
            BigInt::from(2)
        );
        assert_eq!(
            sq.coefficient(&ExponentMatrix::from_rows(vec![vec![2]])),
            BigInt::zero()
        );
    }

    #[test]
    fn absent_monomial_has_zero_coefficient() {
        let p = q(2, 3, 1, 2);
        assert_eq!(p.coefficient(&ExponentMatrix::zero(2, 3)), BigInt::zero());
    }

    #[test]
    fn specialization_collapses_blocks() {
        // q[1,1]*q[1,2] -> q1^2
        let m = MultivarPolynomial::monomial(
            ExponentMatrix::from_rows(vec![vec![1, 1, 0], vec![0, 0, 0]]),
            BigInt::one(),
        );
        let s = m.specialize_coarse();
        assert_eq!(
            s.coefficient(&ExponentMatrix::from_rows(vec![vec![2], vec![0]])),
            BigInt::one()
        );
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut p = MultivarPolynomial::zero(1, 1);
        p.add_term(vec![3], BigInt::from(5));
        p.add_term(vec![3], BigInt::from(-5));
        assert!(p.is_zero());
    }

    #[test]
    #[should_panic(expected = "dimension mismatch")]
    fn mul_rejects_dimension_mismatch() {
        let _ = MultivarPolynomial::one(1, 2).mul(&MultivarPolynomial::one(2, 1));
    }

    #[test]
    fn json_shape_and_determinism() {
        let p = MultivarPolynomial::one(2, 2).add(&q(2, 2, 2, 1));
        let j = p.to_json();
        assert_eq!(j["k"], 2);
        assert_eq!(j["n"], 2);
        assert_eq!(j["terms"][0]["coef"], "1");
        assert_eq!(j["terms"][0]["exp"], serde_json::json!([[0, 0], [0, 0]]));
        assert_eq!(j["terms"][1]["exp"], serde_json::json!([[0, 0], [1, 0]]));
        assert_eq!(
            serde_json::to_string(&j).unwrap(),
            serde_json::to_string(&p.to_json()).unwrap()
        );
    }

    #[test]
    fn csv_layout() {
        let p = MultivarPolynomial::one(1, 2).add(&q(1, 2, 1, 2));
        let csv = p.to_csv();
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines, vec!["q1_1,q1_2,coefficient", "0,0,1", "0,1,1"]);
    }

    #[test]
    fn display_format() {
        let p = MultivarPolynomial::one(2, 2)
            .add(&q(2, 2, 1, 1).mul(&q(2, 2, 2, 1)))
            .add(&q(2, 2, 1, 1).mul(&q(2, 2, 2, 1)));
        assert_eq!(p.to_string(), "1 + 2*q[1,1]*q[2,1]");
    }
}
