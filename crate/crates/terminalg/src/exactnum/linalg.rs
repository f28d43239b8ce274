//! Deterministic exact linear algebra over an arbitrary field.
//!
//! Pivoting always picks the first nonzero entry in column order, so every
//! reduced form, kernel basis and canonical subspace basis is reproducible
//! across runs.

use std::fmt;

use super::ratfun::RatFun;
use super::scalar::GaussRat;
use crate::error::Error;

/// The field operations the solvers need. Implemented for [`GaussRat`] and
/// for rational functions in `t`.
pub trait Field: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// `None` for zero.
    fn inv(&self) -> Option<Self>;
}

impl Field for GaussRat {
    fn zero() -> Self {
        GaussRat::zero()
    }
    fn one() -> Self {
        GaussRat::one()
    }
    fn is_zero(&self) -> bool {
        GaussRat::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        GaussRat::inv(self)
    }
}

impl Field for RatFun {
    fn zero() -> Self {
        RatFun::zero()
    }
    fn one() -> Self {
        RatFun::one()
    }
    fn is_zero(&self) -> bool {
        RatFun::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFun::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFun::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFun::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFun::neg(self)
    }
    fn inv(&self) -> Option<Self> {
        RatFun::inv(self)
    }
}

/// A dense row-major matrix over a field.
#[derive(Clone, PartialEq)]
pub struct Mat<F> {
    rows: usize,
    cols: usize,
    entries: Vec<F>,
}

/// Matrices over the Gaussian rationals, the workhorse of the crate.
pub type QMatrix = Mat<GaussRat>;

impl<F: Field> Mat<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> F) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat {
            rows,
            cols,
            entries,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Mat::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "column mismatch in vstack");
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        Mat {
            rows: self.rows + other.rows,
            cols: self.cols,
            entries,
        }
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "shape mismatch in matmul");
        Mat::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = F::zero();
            for k in 0..self.cols {
                let p = self.get(i, k).mul(other.get(k, j));
                acc = acc.add(&p);
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[F]) -> Vec<F> {
        assert_eq!(self.cols, v.len(), "shape mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = F::zero();
                for k in 0..self.cols {
                    acc = acc.add(&self.get(i, k).mul(&v[k]));
                }
                acc
            })
            .collect()
    }

    /// Unique reduced row-echelon form together with the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..m.cols {
            if r == m.rows {
                break;
            }
            // First nonzero entry in this column at or below row r.
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, col).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, col).inv().expect("pivot is nonzero");
            m.scale_row(r, &inv);
            for i in 0..m.rows {
                if i != r && !m.get(i, col).is_zero() {
                    let factor = m.get(i, col).clone();
                    m.sub_scaled_row(i, r, &factor);
                }
            }
            pivots.push(col);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Exact basis of the right kernel `{v : M v = 0}`, ordered by the free
    /// column each vector normalizes.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_of_col = vec![None; self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            piv_of_col[col] = Some(row);
        }
        for free in 0..self.cols {
            if piv_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![F::zero(); self.cols];
            v[free] = F::one();
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = r.get(row, free).neg();
            }
            basis.push(v);
        }
        basis
    }

    /// One exact solution of `M x = b`, or `None` if inconsistent.
    pub fn solve(&self, b: &[F]) -> Option<Vec<F>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch");
        let mut aug = Mat::from_fn(self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        aug = aug.rref().0;
        let mut x = vec![F::zero(); self.cols];
        for i in 0..self.rows {
            let lead = (0..self.cols + 1).find(|&j| !aug.get(i, j).is_zero());
            match lead {
                Some(j) if j == self.cols => return None, // 0 = 1 row
                Some(j) => x[j] = aug.get(i, self.cols).clone(),
                None => {}
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let n = self.rows;
        let aug = Mat::from_fn(n, 2 * n, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else if j - n == i {
                F::one()
            } else {
                F::zero()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r.get(i, j + n).clone()))
    }

    pub fn is_invertible(&self) -> bool {
        self.rows == self.cols && self.rank() == self.rows
    }

    pub fn det(&self) -> F {
        assert_eq!(self.rows, self.cols, "det of non-square matrix");
        // Fraction-free enough for our sizes: track row operations on a copy.
        let mut m = self.clone();
        let n = m.rows;
        let mut det = F::one();
        let mut r = 0;
        for col in 0..n {
            let Some(p) = (r..n).find(|&i| !m.get(i, col).is_zero()) else {
                return F::zero();
            };
            if p != r {
                m.swap_rows(r, p);
                det = det.neg();
            }
            let pivot = m.get(r, col).clone();
            det = det.mul(&pivot);
            let inv = pivot.inv().expect("pivot is nonzero");
            for i in (r + 1)..n {
                if !m.get(i, col).is_zero() {
                    let factor = m.get(i, col).mul(&inv);
                    m.sub_scaled_row(i, r, &factor);
                }
            }
            r += 1;
        }
        det
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, i: usize, factor: &F) {
        for j in 0..self.cols {
            let v = self.get(i, j).mul(factor);
            self.set(i, j, v);
        }
    }

    fn sub_scaled_row(&mut self, dst: usize, src: usize, factor: &F) {
        for j in 0..self.cols {
            let v = self.get(dst, j).sub(&self.get(src, j).mul(factor));
            self.set(dst, j, v);
        }
    }
}

impl<F: Field + fmt::Display> fmt::Debug for Mat<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[")?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(|e| e.to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

/// A linear subspace of `Q(i)^n` stored by its canonical (rref) basis; two
/// equal subspaces always have identical stored bases.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<GaussRat>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::from_spanning(
            ambient,
            (0..ambient)
                .map(|i| {
                    let mut v = vec![GaussRat::zero(); ambient];
                    v[i] = GaussRat::one();
                    v
                })
                .collect(),
        )
    }

    pub fn from_spanning(ambient: usize, vectors: Vec<Vec<GaussRat>>) -> Self {
        for v in &vectors {
            assert_eq!(v.len(), ambient, "vector length mismatch");
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient);
        }
        let (r, pivots) = QMatrix::from_rows(vectors).rref();
        let basis = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Subspace { ambient, basis }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<GaussRat>] {
        &self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn contains(&self, v: &[GaussRat]) -> bool {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        if v.iter().all(|x| x.is_zero()) {
            return true;
        }
        let mut rows = self.basis.clone();
        rows.push(v.to_vec());
        QMatrix::from_rows(rows).rank() == self.dim()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        let mut rows = self.basis.clone();
        rows.extend(other.basis.clone());
        Subspace::from_spanning(self.ambient, rows)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient, "ambient mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // x = A^T a = B^T b; solve [A^T | -B^T] (a,b) = 0.
        let a = self.dim();
        let b = other.dim();
        let m = QMatrix::from_fn(self.ambient, a + b, |i, j| {
            if j < a {
                self.basis[j][i].clone()
            } else {
                -&other.basis[j - a][i]
            }
        });
        let vectors = m
            .nullspace()
            .into_iter()
            .map(|sol| {
                let mut v = vec![GaussRat::zero(); self.ambient];
                for (idx, coeff) in sol.iter().take(a).enumerate() {
                    for (vi, bi) in v.iter_mut().zip(&self.basis[idx]) {
                        *vi = &*vi + &(coeff * bi);
                    }
                }
                v
            })
            .collect();
        Subspace::from_spanning(self.ambient, vectors)
    }
}

impl Subspace {
    /// Canonical coset representative of `v` modulo this subspace: eliminates
    /// the pivot coordinates of the stored rref basis. Two vectors lie in the
    /// same coset iff their reductions are equal.
    pub fn reduce_mod(&self, v: &[GaussRat]) -> Vec<GaussRat> {
        assert_eq!(v.len(), self.ambient, "vector length mismatch");
        let mut out = v.to_vec();
        for row in &self.basis {
            let pivot = row
                .iter()
                .position(|x| !x.is_zero())
                .expect("canonical basis rows are nonzero");
            if !out[pivot].is_zero() {
                let factor = out[pivot].clone();
                for (o, r) in out.iter_mut().zip(row) {
                    *o = &*o - &(&factor * r);
                }
            }
        }
        out
    }
}

/// Converts a singular-matrix condition into the crate error type.
pub fn require_invertible(m: &QMatrix) -> Result<(), Error> {
    if m.is_invertible() {
        Ok(())
    } else {
        Err(Error::Singular)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> GaussRat {
        GaussRat::from_int(n)
    }

    fn mat(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| q(x)).collect())
                .collect(),
        )
    }

    #[test]
    fn rref_identity_and_rank1() {
        let (r, p) = mat(&[&[1, 0], &[0, 1]]).rref();
        assert_eq!(r, mat(&[&[1, 0], &[0, 1]]));
        assert_eq!(p, vec![0, 1]);

        let (r, p) = mat(&[&[1, 2], &[2, 4]]).rref();
        assert_eq!(r, mat(&[&[1, 2], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn nullspace_basics() {
        assert_eq!(QMatrix::zeros(3, 3).nullspace().len(), 3);
        assert_eq!(QMatrix::identity(3).nullspace().len(), 0);

        // [[1, i]] over Q(i): kernel spanned by (-i, 1).
        let m = QMatrix::from_rows(vec![vec![GaussRat::one(), GaussRat::i()]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        for v in &ns {
            let mv = m.mul_vec(v);
            assert!(mv.iter().all(|x| x.is_zero()));
        }
        // Up to the pivot normalization the vector is (-i, 1).
        assert_eq!(ns[0][0], -GaussRat::i());
        assert_eq!(ns[0][1], GaussRat::one());
    }

    #[test]
    fn solve_and_inverse() {
        let m = mat(&[&[2, 1], &[1, 1]]);
        let x = m.solve(&[q(3), q(2)]).unwrap();
        assert_eq!(x, vec![q(1), q(1)]);
        assert!(mat(&[&[1, 2], &[2, 4]]).solve(&[q(0), q(1)]).is_none());
        let inv = m.inverse().unwrap();
        assert_eq!(m.matmul(&inv), QMatrix::identity(2));
        assert!(mat(&[&[1, 2], &[2, 4]]).inverse().is_none());
        assert_eq!(m.det(), q(1));
        assert_eq!(mat(&[&[1, 2], &[2, 4]]).det(), q(0));
    }

    #[test]
    fn subspace_canonical_and_ops() {
        let s1 = Subspace::from_spanning(3, vec![vec![q(2), q(0), q(2)], vec![q(0), q(1), q(0)]]);
        let s2 = Subspace::from_spanning(3, vec![vec![q(1), q(1), q(1)], vec![q(0), q(-2), q(0)]]);
        assert_eq!(s1, s2);
        assert!(s1.contains(&[q(1), q(5), q(1)]));
        assert!(!s1.contains(&[q(1), q(0), q(0)]));

        let x = Subspace::from_spanning(3, vec![vec![q(1), q(0), q(0)], vec![q(0), q(1), q(0)]]);
        let y = Subspace::from_spanning(3, vec![vec![q(0), q(1), q(0)], vec![q(0), q(0), q(1)]]);
        let meet = x.intersect(&y);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&[q(0), q(1), q(0)]));
        assert_eq!(x.sum(&y), Subspace::full(3));
    }
}
