//! Dense exact linear algebra: echelon forms, kernels, linear solves.
//!
//! Pivoting always takes the first nonzero entry in column order, so bases
//! come out identical on every run.

use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::Zero;

use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Builds a matrix from column vectors of length `rows`.
    pub fn from_cols(rows: usize, cols: &[Vec<F>]) -> Self {
        assert!(cols.iter().all(|c| c.len() == rows), "ragged columns");
        Self::from_fn(rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn from_i64(rows: Vec<Vec<i64>>) -> Self {
        Self::from_rows(
            rows.into_iter()
                .map(|r| r.into_iter().map(F::from_i64).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[F] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn col_vecs(&self) -> Vec<Vec<F>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.rows, "dimension mismatch in product");
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if !b.is_zero() {
                        let idx = i * o.cols + j;
                        out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                    }
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "dimension mismatch in product");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !a.is_zero() && !b.is_zero() {
                        acc = acc + a.clone() * b.clone();
                    }
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(
            (self.rows, self.cols),
            (o.rows, o.cols),
            "dimension mismatch in sum"
        );
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-F::one()))
    }

    pub fn scale(&self, s: &F) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a.clone() * s.clone()).collect(),
        }
    }

    pub fn hstack(&self, o: &Self) -> Self {
        assert_eq!(self.rows, o.rows, "row mismatch in hstack");
        Self::from_fn(self.rows, self.cols + o.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                o[(i, j - self.cols)].clone()
            }
        })
    }

    pub fn vstack(&self, o: &Self) -> Self {
        assert_eq!(self.cols, o.cols, "column mismatch in vstack");
        let mut data = self.data.clone();
        data.extend(o.data.iter().cloned());
        Matrix {
            rows: self.rows + o.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block diagonal sum.
    pub fn direct_sum(&self, o: &Self) -> Self {
        Self::from_fn(self.rows + o.rows, self.cols + o.cols, |i, j| {
            match (i < self.rows, j < self.cols) {
                (true, true) => self[(i, j)].clone(),
                (false, false) => o[(i - self.rows, j - self.cols)].clone(),
                _ => F::zero(),
            }
        })
    }

    pub fn select_cols(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self[(i, idx[j])].clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |i, j| self[(idx[i], j)].clone())
    }

    /// Copies `block` into `self` with its top-left corner at `(r, c)`.
    pub fn set_block(&mut self, r: usize, c: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self[(r + i, c + j)] = block[(i, j)].clone();
            }
        }
    }

    pub fn block(&self, r: usize, c: usize, rows: usize, cols: usize) -> Self {
        Self::from_fn(rows, cols, |i, j| self[(r + i, c + j)].clone())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    pub fn trace(&self) -> F {
        (0..self.rows.min(self.cols)).fold(F::zero(), |acc, i| acc + self[(i, i)].clone())
    }

    /// Reduced row echelon form with the strictly increasing pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !self.data[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    self.data.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = self.data[r * cols + c].inv();
            for j in c..cols {
                let idx = r * cols + j;
                if !self.data[idx].is_zero() {
                    self.data[idx] = self.data[idx].clone() * inv.clone();
                }
            }
            let pivot_row: Vec<F> = self.data[r * cols..(r + 1) * cols].to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let f = self.data[i * cols + c].clone();
                if f.is_zero() {
                    continue;
                }
                for j in c..cols {
                    if !pivot_row[j].is_zero() {
                        let idx = i * cols + j;
                        self.data[idx] = self.data[idx].clone() - f.clone() * pivot_row[j].clone();
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space, returned as the columns of a `cols × nullity` matrix.
    pub fn kernel_basis(&self) -> Self {
        self.kernel_with_free().0
    }

    /// Kernel basis together with the free columns; basis vector `j` is 1 at
    /// free column `j` and 0 at the other free columns.
    pub fn kernel_with_free(&self) -> (Self, Vec<usize>) {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Self::zeros(self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k[(f, j)] = F::one();
            for (i, &p) in pivots.iter().enumerate() {
                k[(p, j)] = -r[(i, f)].clone();
            }
        }
        (k, free)
    }

    /// Some `x` with `self · x = b`, or `None` if the system is inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(self.rows, b.len(), "right-hand side length mismatch");
        let aug = self.hstack(&Self::from_cols(b.len(), &[b.to_vec()]));
        let (r, pivots) = aug.rref();
        if pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![F::zero(); self.cols];
        for (i, &p) in pivots.iter().enumerate() {
            x[p] = r[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Some `X` with `self · X = b`, column by column.
    pub fn solve_matrix(&self, b: &Self) -> Option<Self> {
        assert_eq!(self.rows, b.rows, "right-hand side row mismatch");
        let aug = self.hstack(b);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zeros(self.cols, b.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x[(p, j)] = r[(i, self.cols + j)].clone();
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if !self.is_square() {
            return None;
        }
        let x = self.solve_matrix(&Self::identity(self.rows))?;
        (self.rank() == self.rows).then_some(x)
    }

    /// Columns forming a basis of the column space, taken from `self`.
    pub fn column_basis(&self) -> Self {
        let (_, pivots) = self.rref();
        self.select_cols(&pivots)
    }

    /// Monic minimal polynomial, coefficients from low to high degree.
    pub fn minimal_polynomial(&self) -> Vec<F> {
        assert!(self.is_square());
        let n = self.rows;
        let mut powers: Vec<Vec<F>> = vec![Self::identity(n).data];
        let mut cur = Self::identity(n);
        loop {
            cur = cur.mul(self);
            let basis = Self::from_cols(n * n, &powers);
            if let Some(c) = basis.solve(&cur.data) {
                let mut poly: Vec<F> = c.into_iter().map(|x| -x).collect();
                poly.push(F::one());
                return poly;
            }
            powers.push(cur.data.clone());
        }
    }
}

impl<F> Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        debug_assert!(i < self.rows && j < self.cols);
        &self.data[i * self.cols + j]
    }
}

impl<F> IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        debug_assert!(i < self.rows && j < self.cols);
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Debug> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{:?}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "] ({}x{})", self.rows, self.cols)
    }
}

/// Incrementally maintained reduced echelon basis of a subspace of `F^n`.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    n: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Echelon<F> {
    pub fn new(n: usize) -> Self {
        Echelon {
            n,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Residue of `v` after clearing every pivot coordinate.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let f = v[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = x.clone() - f.clone() * r.clone();
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[F]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Adds `v`; returns false if it was already in the span.
    pub fn insert(&mut self, v: &[F]) -> bool {
        let mut r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inv();
        for x in r.iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for row in self.rows.iter_mut() {
            let f = row[p].clone();
            if f.is_zero() {
                continue;
            }
            for (x, y) in row.iter_mut().zip(&r) {
                if !y.is_zero() {
                    *x = x.clone() - f.clone() * y.clone();
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(pos, p);
        self.rows.insert(pos, r);
        true
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }
}

/// Coordinates on `F^n / S` for a subspace `S`.
///
/// The quotient basis is indexed by the non-pivot coordinates of the echelon
/// form of `S`; projecting clears the pivot coordinates and reads off the rest.
#[derive(Clone, Debug)]
pub struct QuotientMap<F> {
    ech: Echelon<F>,
    free: Vec<usize>,
}

impl<F: Scalar> QuotientMap<F> {
    pub fn new(n: usize, spanning: &[Vec<F>]) -> Self {
        let mut ech = Echelon::new(n);
        for v in spanning {
            ech.insert(v);
        }
        Self::from_echelon(ech)
    }

    pub fn from_echelon(ech: Echelon<F>) -> Self {
        let free = (0..ech.n)
            .filter(|c| ech.pivots.binary_search(c).is_err())
            .collect();
        QuotientMap { ech, free }
    }

    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Coordinates in the ambient space kept as the quotient basis.
    pub fn free_coords(&self) -> &[usize] {
        &self.free
    }

    pub fn project(&self, v: &[F]) -> Vec<F> {
        let r = self.ech.reduce(v);
        self.free.iter().map(|&i| r[i].clone()).collect()
    }

    /// The representative with support on the free coordinates.
    pub fn lift(&self, q: &[F]) -> Vec<F> {
        let mut v = vec![F::zero(); self.ech.n];
        for (&i, x) in self.free.iter().zip(q) {
            v[i] = x.clone();
        }
        v
    }

    pub fn subspace(&self) -> &Echelon<F> {
        &self.ech
    }
}

#[cfg(test)]
mod tests {
    use proptest::prelude::*;

    use super::*;
    use crate::scalar::{Fp, Rat};

    type M = Matrix<Rat>;

    fn r(n: i64) -> Rat {
        Rat::from_i64(n)
    }

    #[test]
    fn rref_proportional_rows() {
        let (m, p) = M::from_i64(vec![vec![1, 2], vec![2, 4]]).rref();
        assert_eq!(p, vec![0]);
        assert_eq!(m, M::from_i64(vec![vec![1, 2], vec![0, 0]]));
    }

    #[test]
    fn rref_identity_and_zero() {
        let id = M::identity(3);
        assert_eq!(id.rref(), (id.clone(), vec![0, 1, 2]));
        let z = M::zeros(2, 2);
        assert_eq!(z.rref(), (z.clone(), vec![]));
    }

    #[test]
    fn kernel_examples() {
        let k = M::from_i64(vec![vec![1, 1]]).kernel_basis();
        assert_eq!(k, M::from_i64(vec![vec![-1], vec![1]]));
        assert_eq!(M::identity(3).kernel_basis().cols(), 0);
        assert_eq!(M::zeros(2, 3).kernel_basis().cols(), 3);
    }

    #[test]
    fn solve_examples() {
        let b = vec![r(3), r(-2)];
        assert_eq!(M::identity(2).solve(&b), Some(b));
        assert_eq!(
            M::from_i64(vec![vec![1, 1]]).solve(&[r(0)]),
            Some(vec![r(0), r(0)])
        );
        assert_eq!(
            M::from_i64(vec![vec![1], vec![0]]).solve(&[r(0), r(1)]),
            None
        );
    }

    #[test]
    fn inverse_roundtrip() {
        let a = M::from_i64(vec![vec![2, 1], vec![1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), M::identity(2));
        assert!(M::from_i64(vec![vec![1, 2], vec![2, 4]])
            .inverse()
            .is_none());
    }

    #[test]
    fn quotient_projection() {
        let q = QuotientMap::new(3, &[vec![r(1), r(1), r(0)]]);
        assert_eq!(q.dim(), 2);
        assert_eq!(q.project(&[r(1), r(1), r(0)]), vec![r(0), r(0)]);
        let v = vec![r(0), r(5), r(7)];
        let back = q.project(&q.lift(&q.project(&v)));
        assert_eq!(back, q.project(&v));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..5)
            .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-3i64..=3, c), r))
    }

    proptest! {
        #[test]
        fn rank_plus_nullity(rows in small_matrix()) {
            let a = M::from_i64(rows);
            let k = a.kernel_basis();
            prop_assert_eq!(a.rank() + k.cols(), a.cols());
            prop_assert!(a.mul(&k).is_zero());
            prop_assert_eq!(k.rank(), k.cols());
        }

        #[test]
        fn rref_is_idempotent(rows in small_matrix()) {
            let (r, p) = M::from_i64(rows).rref();
            prop_assert_eq!(r.rref(), (r.clone(), p));
        }

        #[test]
        fn consistent_systems_are_solved(rows in small_matrix(), x in prop::collection::vec(-3i64..=3, 4)) {
            let a = M::from_i64(rows);
            let x: Vec<Rat> = x.into_iter().take(a.cols()).chain(std::iter::repeat(0)).take(a.cols()).map(r).collect();
            let b = a.mul_vec(&x);
            let y = a.solve(&b);
            prop_assert!(y.is_some());
            prop_assert_eq!(a.mul_vec(&y.unwrap()), b);
        }

        #[test]
        fn inverse_exists_iff_full_rank(n in 1usize..4, seed in prop::collection::vec(-2i64..=2, 9)) {
            let a = M::from_fn(n, n, |i, j| r(seed[i * 3 + j]));
            match a.inverse() {
                Some(inv) => {
                    prop_assert_eq!(a.rank(), n);
                    prop_assert_eq!(inv.mul(&a), M::identity(n));
                }
                None => prop_assert!(a.rank() < n),
            }
        }

        #[test]
        fn rank_over_f7_bounded_by_rank_over_q(rows in small_matrix()) {
            let q = M::from_i64(rows.clone());
            let f = Matrix::<Fp<7>>::from_i64(rows);
            prop_assert!(f.rank() <= q.rank());
            prop_assert_eq!(f.rank() + f.kernel_basis().cols(), f.cols());
        }
    }
}
