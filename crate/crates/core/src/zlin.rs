//! Exact integer linear algebra: Smith normal form, invariant factors of
//! finitely presented abelian groups, and integer row lattices.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ZlinError {
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("relation matrix has {found} columns, expected {expected}")]
    DimensionMismatch { expected: usize, found: usize },
}

/// A dense matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = BigInt::one();
        }
        m
    }

    /// Builds a matrix with `cols` columns from a list of rows.
    pub fn from_rows(cols: usize, rows: Vec<Vec<BigInt>>) -> Result<Self, ZlinError> {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for (row, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(ZlinError::RaggedRow {
                    row,
                    expected: cols,
                    found: r.len(),
                });
            }
            entries.extend(r);
        }
        Ok(IntMatrix {
            rows: nrows,
            cols,
            entries,
        })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self, ZlinError> {
        let cols = rows.first().map_or(0, Vec::len);
        IntMatrix::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j).clone());
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "matrix dimensions do not agree");
        let mut out = IntMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a.get(k, k).is_zero() {
                match (k + 1..n).find(|&i| !a.get(i, k).is_zero()) {
                    Some(i) => {
                        a.swap_rows(i, k);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)) / &prev;
                    a.set(i, j, v);
                }
            }
            prev = a.get(k, k).clone();
        }
        sign * prev
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.entries.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// row[dst] += q · row[src]
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        for j in 0..self.cols {
            let v = &self.entries[src * self.cols + j] * q;
            if !v.is_zero() {
                self.entries[dst * self.cols + j] += v;
            }
        }
    }

    /// col[dst] += q · col[src]
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        for i in 0..self.rows {
            let v = &self.entries[i * self.cols + src] * q;
            if !v.is_zero() {
                self.entries[i * self.cols + dst] += v;
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let e = &mut self.entries[i * self.cols + j];
            *e = -std::mem::take(e);
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

/// Row and column operations are mirrored into these when present.
struct Transforms<'a> {
    u: Option<&'a mut IntMatrix>,
    v: Option<&'a mut IntMatrix>,
}

impl Transforms<'_> {
    fn swap_rows(&mut self, a: usize, b: usize) {
        if let Some(u) = self.u.as_deref_mut() {
            u.swap_rows(a, b);
        }
    }
    fn swap_cols(&mut self, a: usize, b: usize) {
        if let Some(v) = self.v.as_deref_mut() {
            v.swap_cols(a, b);
        }
    }
    fn add_row(&mut self, dst: usize, src: usize, q: &BigInt) {
        if let Some(u) = self.u.as_deref_mut() {
            u.add_row(dst, src, q);
        }
    }
    fn add_col(&mut self, dst: usize, src: usize, q: &BigInt) {
        if let Some(v) = self.v.as_deref_mut() {
            v.add_col(dst, src, q);
        }
    }
    fn negate_row(&mut self, i: usize) {
        if let Some(u) = self.u.as_deref_mut() {
            u.negate_row(i);
        }
    }
}

/// Reduces `d` in place to Smith normal form.
fn smith_in_place(d: &mut IntMatrix, tf: &mut Transforms<'_>) {
    let (m, n) = (d.rows, d.cols);
    for t in 0..m.min(n) {
        loop {
            // least absolute value in the trailing block, first in (row, col) order
            let mut pivot: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    let e = d.get(i, j);
                    if e.is_zero() {
                        continue;
                    }
                    if pivot.is_none_or(|(pi, pj)| e.magnitude() < d.get(pi, pj).magnitude()) {
                        pivot = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = pivot else {
                return;
            };
            d.swap_rows(t, pi);
            tf.swap_rows(t, pi);
            d.swap_cols(t, pj);
            tf.swap_cols(t, pj);

            let p = d.get(t, t).clone();
            let mut clean = true;
            for i in t + 1..m {
                if d.get(i, t).is_zero() {
                    continue;
                }
                let q = -(d.get(i, t).div_floor(&p));
                d.add_row(i, t, &q);
                tf.add_row(i, t, &q);
                clean &= d.get(i, t).is_zero();
            }
            for j in t + 1..n {
                if d.get(t, j).is_zero() {
                    continue;
                }
                let q = -(d.get(t, j).div_floor(&p));
                d.add_col(j, t, &q);
                tf.add_col(j, t, &q);
                clean &= d.get(t, j).is_zero();
            }
            if !clean {
                continue;
            }
            // divisibility: fold a row with a non-multiple into the pivot row
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !d.get(i, j).is_multiple_of(&p)));
            match bad {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row(t, i, &one);
                    tf.add_row(t, i, &one);
                }
                None => break,
            }
        }
        if d.get(t, t).is_negative() {
            d.negate_row(t);
            tf.negate_row(t);
        }
    }
}

/// Smith normal form `D = U·M·V` with unimodular `U` and `V`.
pub fn smith_normal_form(m: &IntMatrix) -> (IntMatrix, IntMatrix, IntMatrix) {
    let mut d = m.clone();
    let mut u = IntMatrix::identity(m.rows);
    let mut v = IntMatrix::identity(m.cols);
    smith_in_place(
        &mut d,
        &mut Transforms {
            u: Some(&mut u),
            v: Some(&mut v),
        },
    );
    (d, u, v)
}

/// Diagonal of the Smith normal form, without transforms. Tall inputs are
/// first reduced to a lattice basis, so the cost is governed by the column
/// count.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<BigInt> {
    let mut d = if m.rows > m.cols {
        let mut lattice = RowLattice::new(m.cols);
        for i in 0..m.rows {
            lattice.insert(m.row(i).to_vec());
        }
        lattice.basis_matrix()
    } else {
        m.clone()
    };
    smith_in_place(&mut d, &mut Transforms { u: None, v: None });
    (0..d.rows.min(d.cols)).map(|i| d.get(i, i).clone()).collect()
}

/// Invariant factors of `Zⁿ` modulo the row space of `relations`.
pub fn invariants_from_relations(
    n: usize,
    relations: &IntMatrix,
) -> Result<InvariantFactors, ZlinError> {
    if relations.cols != n {
        return Err(ZlinError::DimensionMismatch {
            expected: n,
            found: relations.cols,
        });
    }
    let diag = smith_diagonal(relations);
    let mut factors = Vec::new();
    let mut nonzero = 0;
    for d in diag {
        if d.is_zero() {
            continue;
        }
        nonzero += 1;
        if !d.is_one() {
            factors.push(d.magnitude().clone());
        }
    }
    Ok(InvariantFactors {
        factors,
        free_rank: n - nonzero,
    })
}

/// `⊕ Z/dᵢ ⊕ Z^f` with `d₁ | d₂ | …` and every `dᵢ ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InvariantFactors {
    factors: Vec<BigUint>,
    free_rank: usize,
}

impl InvariantFactors {
    pub fn trivial() -> Self {
        InvariantFactors {
            factors: Vec::new(),
            free_rank: 0,
        }
    }

    /// Canonical form of `⊕ Z/cᵢ` for arbitrary cyclic orders (0 meaning Z).
    pub fn from_cyclic_orders(orders: &[u64]) -> Self {
        let n = orders.len();
        let mut m = IntMatrix::zeros(n, n);
        for (i, &c) in orders.iter().enumerate() {
            m.set(i, i, BigInt::from(c));
        }
        invariants_from_relations(n, &m).expect("square diagonal matrix")
    }

    pub fn factors(&self) -> &[BigUint] {
        &self.factors
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.factors.is_empty() && self.free_rank == 0
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank == 0
    }

    /// Group order, `None` when infinite.
    pub fn order(&self) -> Option<BigUint> {
        self.is_finite()
            .then(|| self.factors.iter().fold(BigUint::one(), |a, d| a * d))
    }

    /// Minimal number of generators.
    pub fn rank(&self) -> usize {
        self.factors.len() + self.free_rank
    }

    /// Factors as machine integers, if they fit.
    pub fn factors_u64(&self) -> Option<Vec<u64>> {
        self.factors.iter().map(|d| u64::try_from(d).ok()).collect()
    }
}

impl fmt::Display for InvariantFactors {
    /// Factors in order, with a `0` for each free summand.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.factors.iter().map(ToString::to_string).collect();
        parts.extend(std::iter::repeat_n("0".to_string(), self.free_rank));
        write!(f, "({})", parts.join(","))
    }
}

/// A sublattice of `Zⁿ` kept as an echelon basis with reduced entries above
/// each pivot.
#[derive(Clone, Debug)]
pub struct RowLattice {
    cols: usize,
    /// Rows sorted by pivot column; pivots are positive.
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl RowLattice {
    pub fn new(cols: usize) -> Self {
        RowLattice {
            cols,
            rows: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds a vector to the lattice generators.
    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut k = 0;
        loop {
            let Some(c) = (0..self.cols).find(|&j| !v[j].is_zero()) else {
                return;
            };
            while k < self.rows.len() && self.rows[k].0 < c {
                k += 1;
            }
            if k == self.rows.len() || self.rows[k].0 > c {
                if v[c].sign() == Sign::Minus {
                    v.iter_mut().for_each(|e| *e = -std::mem::take(e));
                }
                self.rows.insert(k, (c, v));
                self.reduce_above(k);
                return;
            }
            // combine v with the row having the same pivot via extended gcd
            let row = &self.rows[k].1;
            let a = row[c].clone();
            let b = v[c].clone();
            let eg = a.extended_gcd(&b);
            let (g, x, y) = (eg.gcd, eg.x, eg.y);
            let (ag, bg) = (&a / &g, &b / &g);
            let new_row: Vec<BigInt> = row.iter().zip(&v).map(|(r, w)| &x * r + &y * w).collect();
            let rest: Vec<BigInt> = row.iter().zip(&v).map(|(r, w)| &ag * w - &bg * r).collect();
            self.rows[k].1 = new_row;
            self.reduce_above(k);
            self.reduce_below_pivot(k);
            v = rest;
        }
    }

    /// Reduces entries in pivot column of row `k` in all rows above it.
    fn reduce_above(&mut self, k: usize) {
        let (c, pivot_row) = self.rows[k].clone();
        let p = &pivot_row[c];
        for i in 0..k {
            let q = self.rows[i].1[c].div_floor(p);
            if !q.is_zero() {
                for (e, r) in self.rows[i].1.iter_mut().zip(&pivot_row) {
                    *e -= &q * r;
                }
            }
        }
    }

    /// Reduces row `k` by the rows after it, keeping entries small.
    fn reduce_below_pivot(&mut self, k: usize) {
        for i in k + 1..self.rows.len() {
            let (c, r) = self.rows[i].clone();
            let q = self.rows[k].1[c].div_floor(&r[c]);
            if !q.is_zero() {
                for (e, x) in self.rows[k].1.iter_mut().zip(&r) {
                    *e -= &q * x;
                }
            }
        }
    }

    /// Whether `v` lies in the lattice.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        assert_eq!(v.len(), self.cols, "vector length");
        let mut v = v.to_vec();
        for (c, row) in &self.rows {
            if v[..*c].iter().any(|e| !e.is_zero()) {
                return false;
            }
            if v[*c].is_zero() {
                continue;
            }
            if !v[*c].is_multiple_of(&row[*c]) {
                return false;
            }
            let q = &v[*c] / &row[*c];
            for (e, r) in v.iter_mut().zip(row) {
                *e -= &q * r;
            }
        }
        v.iter().all(Zero::is_zero)
    }

    pub fn basis(&self) -> Vec<Vec<BigInt>> {
        self.rows.iter().map(|(_, r)| r.clone()).collect()
    }

    pub fn basis_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(self.cols, self.basis()).expect("rows have the lattice width")
    }

    /// Invariant factors of `Zⁿ / lattice`.
    pub fn quotient_invariants(&self) -> InvariantFactors {
        invariants_from_relations(self.cols, &self.basis_matrix()).expect("lattice width")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64(rows).unwrap()
    }

    fn diag_i64(d: &IntMatrix) -> Vec<i64> {
        (0..d.rows().min(d.cols()))
            .map(|i| i64::try_from(d.get(i, i)).unwrap())
            .collect()
    }

    fn check_snf(a: &IntMatrix) -> IntMatrix {
        let (d, u, v) = smith_normal_form(a);
        assert_eq!(u.mul(a).mul(&v), d);
        assert!(d.is_diagonal());
        assert_eq!(u.determinant().magnitude(), &BigUint::one());
        assert_eq!(v.determinant().magnitude(), &BigUint::one());
        let diag: Vec<BigInt> = (0..d.rows().min(d.cols())).map(|i| d.get(i, i).clone()).collect();
        for w in diag.windows(2) {
            assert!(!w[0].is_negative());
            if w[0].is_zero() {
                assert!(w[1].is_zero());
            } else {
                assert!(w[1].is_multiple_of(&w[0]));
            }
        }
        d
    }

    #[test]
    fn snf_examples() {
        let d = check_snf(&IntMatrix::identity(2));
        assert_eq!(d, IntMatrix::identity(2));
        let d = check_snf(&m(&[vec![2, 0], vec![0, 4]]));
        assert_eq!(diag_i64(&d), vec![2, 4]);
        let d = check_snf(&m(&[vec![2, 4], vec![6, 8]]));
        assert_eq!(diag_i64(&d), vec![2, 4]);
    }

    #[test]
    fn invariant_examples() {
        let none = IntMatrix::zeros(0, 2);
        let inv = invariants_from_relations(2, &none).unwrap();
        assert_eq!(inv.free_rank(), 2);
        assert!(inv.factors().is_empty());

        let inv = invariants_from_relations(2, &IntMatrix::identity(2)).unwrap();
        assert!(inv.is_trivial());

        let inv = invariants_from_relations(2, &m(&[vec![-2, 1], vec![1, -2]])).unwrap();
        assert_eq!(inv.to_string(), "(3)");
        assert_eq!(inv.order(), Some(BigUint::from(3u32)));

        assert!(matches!(
            invariants_from_relations(3, &IntMatrix::identity(2)),
            Err(ZlinError::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn cyclic_orders_are_canonicalized() {
        let inv = InvariantFactors::from_cyclic_orders(&[4, 6, 1, 0]);
        assert_eq!(inv.to_string(), "(2,12,0)");
        assert_eq!(inv.rank(), 3);
        assert_eq!(inv.order(), None);
    }

    fn random_matrix(rng: &mut ChaCha8Rng) -> Vec<Vec<i64>> {
        let r = rng.gen_range(1..=8);
        let c = rng.gen_range(1..=8);
        (0..r)
            .map(|_| (0..c).map(|_| rng.gen_range(-20..=20)).collect())
            .collect()
    }

    #[test]
    fn snf_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..500 {
            let a = m(&random_matrix(&mut rng));
            let d = check_snf(&a);
            let diag: Vec<BigInt> = (0..d.rows().min(d.cols())).map(|i| d.get(i, i).clone()).collect();
            assert_eq!(smith_diagonal(&a), diag);
        }
    }

    fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
        if k == 0 {
            return vec![vec![]];
        }
        if n < k {
            return vec![];
        }
        let mut out = subsets(n - 1, k);
        for mut s in subsets(n - 1, k - 1) {
            s.push(n - 1);
            out.push(s);
        }
        out
    }

    fn gcd_of_minors(a: &IntMatrix, k: usize) -> BigInt {
        let mut g = BigInt::zero();
        for rs in subsets(a.rows(), k) {
            for cs in subsets(a.cols(), k) {
                let minor = IntMatrix::from_rows(
                    k,
                    rs.iter()
                        .map(|&i| cs.iter().map(|&j| a.get(i, j).clone()).collect())
                        .collect(),
                )
                .unwrap();
                g = g.gcd(&minor.determinant());
            }
        }
        g
    }

    #[test]
    fn diagonal_products_are_gcds_of_minors() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..60 {
            let r = rng.gen_range(1..=5);
            let c = rng.gen_range(1..=5);
            let rows: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let a = m(&rows);
            let diag = smith_diagonal(&a);
            let mut prod = BigInt::one();
            for k in 1..=3.min(r).min(c) {
                prod *= &diag[k - 1];
                assert_eq!(prod, gcd_of_minors(&a, k), "k = {k} for {rows:?}");
            }
        }
    }

    #[test]
    fn determinant_examples() {
        assert_eq!(m(&[vec![2, 4], vec![6, 8]]).determinant(), BigInt::from(-8));
        assert_eq!(
            m(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 9]]).determinant(),
            BigInt::from(-3)
        );
        assert!(m(&[vec![1, 2], vec![2, 4]]).determinant().is_zero());
    }

    #[test]
    fn lattice_membership() {
        let mut l = RowLattice::new(2);
        l.insert(vec![BigInt::from(-2), BigInt::from(1)]);
        l.insert(vec![BigInt::from(1), BigInt::from(-2)]);
        assert_eq!(l.quotient_invariants().to_string(), "(3)");
        assert!(l.contains(&[BigInt::from(3), BigInt::from(0)]));
        assert!(l.contains(&[BigInt::from(1), BigInt::from(1)]));
        assert!(!l.contains(&[BigInt::from(1), BigInt::from(0)]));
        assert!(l.contains(&[BigInt::zero(), BigInt::zero()]));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..=6, 1usize..=6).prop_flat_map(|(r, c)| {
            prop::collection::vec(prop::collection::vec(-20i64..=20, c), r)
        })
    }

    proptest! {
        #[test]
        fn snf_invariant_under_permutations(rows in small_matrix(), seed in any::<u64>()) {
            use rand::seq::SliceRandom;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let c = rows[0].len();
            let mut row_order: Vec<usize> = (0..rows.len()).collect();
            let mut col_order: Vec<usize> = (0..c).collect();
            row_order.shuffle(&mut rng);
            col_order.shuffle(&mut rng);
            let permuted: Vec<Vec<i64>> = row_order
                .iter()
                .map(|&i| col_order.iter().map(|&j| rows[i][j]).collect())
                .collect();
            let (d1, _, _) = smith_normal_form(&m(&rows));
            let (d2, _, _) = smith_normal_form(&m(&permuted));
            prop_assert_eq!(d1, d2);
        }

        #[test]
        fn lattice_agrees_with_snf(rows in small_matrix()) {
            let a = m(&rows);
            let c = a.cols();
            let mut l = RowLattice::new(c);
            for i in 0..a.rows() {
                l.insert(a.row(i).to_vec());
                prop_assert!(l.contains(a.row(i)));
            }
            for i in 0..a.rows() {
                prop_assert!(l.contains(a.row(i)));
            }
            let direct = invariants_from_relations(c, &a).unwrap();
            prop_assert_eq!(l.quotient_invariants(), direct);
        }
    }
}
