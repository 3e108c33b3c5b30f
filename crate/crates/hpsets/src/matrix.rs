//! Exact linear algebra: signed sparse incidence matrices and dense
//! rational matrices with Gauss-Jordan elimination.
//!
//! Everything here is exact. Reduced row echelon form is the canonical
//! normal form used throughout the crate: it is unique for a given row
//! space, so bases and solution sets come out deterministic.

use num_traits::{One, Zero};

use crate::rational::Rational;

/// Sparse matrix with entries in {-1, 0, +1}, stored per column.
///
/// Boundary operators, coboundaries, dual incidences and subdivision
/// chain maps are all of this shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    // per column, (row, sign) sorted by row
    entries: Vec<Vec<(usize, i8)>>,
}

impl IncidenceMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IncidenceMatrix {
            rows,
            cols,
            entries: vec![Vec::new(); cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn push(&mut self, row: usize, col: usize, sign: i8) {
        debug_assert!(row < self.rows && col < self.cols);
        debug_assert!(sign == 1 || sign == -1);
        let col = &mut self.entries[col];
        let pos = col.partition_point(|&(r, _)| r < row);
        debug_assert!(pos >= col.len() || col[pos].0 != row, "duplicate entry");
        col.insert(pos, (row, sign));
    }

    pub fn column(&self, col: usize) -> &[(usize, i8)] {
        &self.entries[col]
    }

    pub fn entry(&self, row: usize, col: usize) -> i8 {
        match self.entries[col].binary_search_by_key(&row, |&(r, _)| r) {
            Ok(pos) => self.entries[col][pos].1,
            Err(_) => 0,
        }
    }

    pub fn transpose(&self) -> IncidenceMatrix {
        let mut t = IncidenceMatrix::zero(self.cols, self.rows);
        for (c, col) in self.entries.iter().enumerate() {
            for &(r, s) in col {
                t.entries[r].push((c, s));
            }
        }
        t
    }

    /// y = M x over the rationals.
    pub fn apply(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        let mut y = vec![Rational::zero(); self.rows];
        for (c, col) in self.entries.iter().enumerate() {
            if x[c].is_zero() {
                continue;
            }
            for &(r, s) in col {
                if s == 1 {
                    y[r] += &x[c];
                } else {
                    y[r] -= &x[c];
                }
            }
        }
        y
    }

    /// y = Mᵀ x over the rationals.
    pub fn apply_transpose(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.rows);
        let mut y = vec![Rational::zero(); self.cols];
        for (c, col) in self.entries.iter().enumerate() {
            for &(r, s) in col {
                if x[r].is_zero() {
                    continue;
                }
                if s == 1 {
                    y[c] += &x[r];
                } else {
                    y[c] -= &x[r];
                }
            }
        }
        y
    }

    /// Dense integer product self * other.
    pub fn mul_dense(&self, other: &IncidenceMatrix) -> Vec<Vec<i64>> {
        assert_eq!(self.cols, other.rows);
        let mut out = vec![vec![0i64; other.cols]; self.rows];
        for (c, col) in other.entries.iter().enumerate() {
            for &(k, s_kc) in col {
                for &(r, s_rk) in &self.entries[k] {
                    out[r][c] += i64::from(s_rk) * i64::from(s_kc);
                }
            }
        }
        out
    }

    pub fn product_is_zero(&self, other: &IncidenceMatrix) -> bool {
        self.mul_dense(other).iter().flatten().all(|&v| v == 0)
    }

    pub fn to_rat_mat(&self) -> RatMat {
        let mut m = RatMat::zeros(self.rows, self.cols);
        for (c, col) in self.entries.iter().enumerate() {
            for &(r, s) in col {
                *m.at_mut(r, c) = crate::rational::int(i64::from(s));
            }
        }
        m
    }
}

/// Dense matrix of rationals, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RatMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMat {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols));
        RatMat {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_dense_int(rows: &[Vec<i64>]) -> Self {
        RatMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rational::int(v)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn at(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn at_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vec(&self, r: usize) -> Vec<Rational> {
        self.row(r).to_vec()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Rational::is_zero)
    }

    pub fn transpose(&self) -> RatMat {
        let mut t = RatMat::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *t.at_mut(c, r) = self.at(r, c).clone();
            }
        }
        t
    }

    pub fn matmul(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.rows);
        let mut out = RatMat::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        *out.at_mut(r, c) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, x: &[Rational]) -> Vec<Rational> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for (a, xc) in self.row(r).iter().zip(x) {
                    if !a.is_zero() && !xc.is_zero() {
                        acc += a * xc;
                    }
                }
                acc
            })
            .collect()
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &RatMat) -> RatMat {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        RatMat {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let ncols = self.cols;
        self.echelonize_cols(ncols)
    }

    pub fn rank(&self) -> usize {
        // forward elimination only
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..m.cols {
            if rank == m.rows {
                break;
            }
            let Some(src) = (rank..m.rows).find(|&r| !m.at(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(rank, src);
            let inv = m.at(rank, col).recip();
            for r in rank + 1..m.rows {
                let factor = m.at(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                let factor = factor * &inv;
                for c in col..m.cols {
                    let piv = m.at(rank, c).clone();
                    if !piv.is_zero() {
                        *m.at_mut(r, c) -= &factor * piv;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    /// Canonical basis of the right nullspace: the RREF (over the column
    /// order) of the solution space of `self * x = 0`, one basis vector
    /// per row of the result.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: Vec<bool> = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free] {
                continue;
            }
            let mut vec = vec![Rational::zero(); self.cols];
            vec[free] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                vec[p] = -m.at(i, free).clone();
            }
            basis.push(vec);
        }
        if basis.is_empty() {
            return basis;
        }
        let mut bm = RatMat::from_rows(basis);
        bm.rref();
        (0..bm.rows()).map(|r| bm.row_vec(r)).collect()
    }

    /// Any particular solution of `self * x = b`, or None if inconsistent.
    pub fn solve_any(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        LinearSolver::new(self).solve(b)
    }
}

/// Cached elimination of a fixed matrix, for solving against many
/// right hand sides without repeating the reduction.
pub struct LinearSolver {
    cols: usize,
    pivots: Vec<usize>,
    /// Row transform carrying the matrix to its RREF. With free
    /// variables pinned to zero, the pivot coordinates of a solution
    /// are read straight off the transformed right hand side.
    transform: RatMat,
}

impl LinearSolver {
    pub fn new(a: &RatMat) -> Self {
        let mut aug = a.augment_identity();
        let pivots = aug.echelonize_cols(a.cols());
        let mut transform = RatMat::zeros(a.rows(), a.rows());
        for r in 0..a.rows() {
            for c in 0..a.rows() {
                *transform.at_mut(r, c) = aug.at(r, a.cols() + c).clone();
            }
        }
        LinearSolver {
            cols: a.cols(),
            pivots,
            transform,
        }
    }

    /// Solves `a x = b` with free variables set to zero; None if
    /// inconsistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        let c = self.transform.mul_vec(b);
        // rows past the pivot count are zero rows of the matrix
        if c.iter().skip(self.pivots.len()).any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (i, &p) in self.pivots.iter().enumerate() {
            x[p] = c[i].clone();
        }
        Some(x)
    }
}

impl RatMat {
    fn augment_identity(&self) -> RatMat {
        let mut m = RatMat::zeros(self.rows, self.cols + self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *m.at_mut(r, c) = self.at(r, c).clone();
            }
            *m.at_mut(r, self.cols + r) = Rational::one();
        }
        m
    }

    /// RREF restricted to pivots in the first `ncols` columns.
    fn echelonize_cols(&mut self, ncols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pivot_row = 0;
        for col in 0..ncols {
            if pivot_row == self.rows {
                break;
            }
            let Some(src) = (pivot_row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, src);
            let inv = self.at(pivot_row, col).recip();
            for c in col..self.cols {
                let v = self.at_mut(pivot_row, c);
                if !v.is_zero() {
                    *v *= &inv;
                }
            }
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.at(r, col).clone();
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let piv = self.at(pivot_row, c).clone();
                    if !piv.is_zero() {
                        *self.at_mut(r, c) -= &factor * piv;
                    }
                }
            }
            pivots.push(col);
            pivot_row += 1;
        }
        pivots
    }
}

/// Incremental row reduction: accepts rows one at a time and keeps a
/// reduced, pivot-indexed set. Used to build complements of one span
/// inside another.
#[derive(Default)]
pub struct RowSpace {
    // (pivot column, normalized reduced row), sorted by pivot column
    rows: Vec<(usize, Vec<Rational>)>,
}

impl RowSpace {
    pub fn new() -> Self {
        RowSpace::default()
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Reduces `row` against the current span; returns the residue
    /// (zero when the row was already in the span).
    pub fn reduce(&self, mut row: Vec<Rational>) -> Vec<Rational> {
        for (pivot, basis_row) in &self.rows {
            let factor = row[*pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, b) in row.iter_mut().zip(basis_row) {
                if !b.is_zero() {
                    *v -= &factor * b;
                }
            }
        }
        row
    }

    /// Reduces and inserts; returns true when the row enlarged the span.
    pub fn insert(&mut self, row: Vec<Rational>) -> bool {
        let mut row = self.reduce(row);
        let Some(pivot) = row.iter().position(|v| !v.is_zero()) else {
            return false;
        };
        let inv = row[pivot].recip();
        for v in row.iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        // back-eliminate the new pivot from existing rows
        for (_, existing) in self.rows.iter_mut() {
            let factor = existing[pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (v, b) in existing.iter_mut().zip(&row) {
                if !b.is_zero() {
                    *v -= &factor * b;
                }
            }
        }
        let pos = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(pos, (pivot, row));
        true
    }

    pub fn contains(&self, row: &[Rational]) -> bool {
        self.reduce(row.to_vec()).iter().all(Rational::is_zero)
    }
}
