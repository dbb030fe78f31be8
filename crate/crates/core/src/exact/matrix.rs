//! Exact dense matrices over a field, with kernel/rank/signature.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::{GaussQ, Rat};

/// The scalar operations Gaussian elimination needs.
pub trait Field: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self) -> Self;
    fn neg(&self) -> Self {
        Self::zero().sub(self)
    }
}

impl Field for Rat {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        <Rat as One>::one() / self
    }
}

impl Field for GaussQ {
    fn zero() -> Self {
        GaussQ::from_int(0)
    }
    fn one() -> Self {
        GaussQ::from_int(1)
    }
    fn is_zero(&self) -> bool {
        GaussQ::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.clone() + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.clone() - rhs.clone()
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn inv(&self) -> Self {
        GaussQ::inv(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MatrixError {
    DimMismatch,
    NotSymmetric,
    NotSquare,
    Singular,
}

impl fmt::Display for MatrixError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MatrixError::DimMismatch => write!(f, "matrix dimensions do not match"),
            MatrixError::NotSymmetric => write!(f, "matrix is not symmetric"),
            MatrixError::NotSquare => write!(f, "matrix is not square"),
            MatrixError::Singular => write!(f, "matrix is singular"),
        }
    }
}

/// Dense row-major matrix with exact entries.
#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
}

impl<T: Field> Matrix<T> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                entries.push(f(r, c));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        assert!(!rows.is_empty(), "from_rows needs at least one row");
        let cols = rows[0].len();
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        let nrows = rows.len();
        Matrix { rows: nrows, cols, entries: rows.into_iter().flatten().collect() }
    }

    /// Column matrix from a vector.
    pub fn column(v: &[T]) -> Self {
        Matrix::from_fn(v.len(), 1, |r, _| v[r].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |r, c| self[(c, r)].clone())
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matmul dimension mismatch");
        Matrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = T::zero();
            for k in 0..self.cols {
                acc = acc.add(&self[(r, k)].mul(&rhs[(k, c)]));
            }
            acc
        })
    }

    pub fn map<U: Field>(&self, mut f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix::from_fn(self.rows, self.cols, |r, c| f(&self[(r, c)]))
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn mul_vec(&self, v: &[T]) -> Vec<T> {
        assert_eq!(self.cols, v.len(), "mul_vec dimension mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = T::zero();
                for c in 0..self.cols {
                    acc = acc.add(&self[(r, c)].mul(&v[c]));
                }
                acc
            })
            .collect()
    }

    /// Stack another matrix below this one.
    pub fn vstack(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&other.entries);
        Matrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    /// Reduced row echelon form; returns (rref, pivot columns).
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inv();
            for j in c..m.cols {
                m[(r, j)] = m[(r, j)].mul(&inv);
            }
            for i in 0..m.rows {
                if i != r && !m[(i, c)].is_zero() {
                    let f = m[(i, c)].clone();
                    for j in c..m.cols {
                        let sub = m[(r, j)].mul(&f);
                        m[(i, j)] = m[(i, j)].sub(&sub);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : Mv = 0}`.
    ///
    /// The vectors are linearly independent and their number equals
    /// `cols - rank`; the empty list signals a trivial kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<T>> {
        let (rr, pivots) = self.rref();
        let mut basis = Vec::new();
        let mut piv_of_col = vec![None; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            piv_of_col[c] = Some(i);
        }
        for free in 0..self.cols {
            if piv_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![T::zero(); self.cols];
            v[free] = T::one();
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = rr[(i, free)].neg();
            }
            basis.push(v);
        }
        basis
    }

    /// Solve `Mx = b`; `None` when inconsistent. Free variables are set
    /// to zero.
    pub fn solve(&self, b: &[T]) -> Option<Vec<T>> {
        assert_eq!(self.rows, b.len(), "solve dimension mismatch");
        let mut aug = Matrix::from_fn(self.rows, self.cols + 1, |r, c| {
            if c < self.cols {
                self[(r, c)].clone()
            } else {
                b[r].clone()
            }
        });
        let (rr, pivots) = aug.rref();
        aug = rr;
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![T::zero(); self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = aug[(i, self.cols)].clone();
        }
        Some(x)
    }

    /// Inverse of a square matrix.
    pub fn inverse(&self) -> Result<Self, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare);
        }
        let n = self.rows;
        let aug = Matrix::from_fn(n, 2 * n, |r, c| {
            if c < n {
                self[(r, c)].clone()
            } else if c - n == r {
                T::one()
            } else {
                T::zero()
            }
        });
        let (rr, pivots) = aug.rref();
        if pivots.len() != n || pivots.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(MatrixError::Singular);
        }
        Ok(Matrix::from_fn(n, n, |r, c| rr[(r, c + n)].clone()))
    }

    pub fn det(&self) -> Result<T, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::NotSquare);
        }
        let mut m = self.clone();
        let n = m.rows;
        let mut det = T::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m[(i, c)].is_zero()) else {
                return Ok(T::zero());
            };
            if p != c {
                m.swap_rows(c, p);
                det = det.neg();
            }
            det = det.mul(&m[(c, c)]);
            let inv = m[(c, c)].inv();
            for i in (c + 1)..n {
                if m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].mul(&inv);
                for j in c..n {
                    let sub = m[(c, j)].mul(&f);
                    m[(i, j)] = m[(i, j)].sub(&sub);
                }
            }
        }
        Ok(det)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|r| (0..r).all(|c| self[(r, c)] == self[(c, r)]))
    }
}

/// Span comparison helpers on row spaces.
impl<T: Field> Matrix<T> {
    /// Does the row span of `self` contain every row of `other`?
    pub fn row_span_contains(&self, other: &Self) -> bool {
        if other.rows == 0 {
            return true;
        }
        self.rank() == self.vstack(other).rank()
    }

    pub fn row_span_eq(&self, other: &Self) -> bool {
        self.row_span_contains(other) && other.row_span_contains(self)
    }

    /// Basis of the intersection of the row spans, as rows.
    pub fn row_span_intersect(&self, other: &Self) -> Vec<Vec<T>> {
        // x*self = y*other  <=>  [self^t | -other^t] (x; y)^t = 0.
        let st = self.transpose();
        let ot = other.transpose();
        let sys = Matrix::from_fn(self.cols, self.rows + other.rows, |r, c| {
            if c < self.rows {
                st[(r, c)].clone()
            } else {
                ot[(r, c - self.rows)].neg()
            }
        });
        let mut rows = Vec::new();
        for k in sys.kernel_basis() {
            let mut v = vec![T::zero(); self.cols];
            for (i, coeff) in k[..self.rows].iter().enumerate() {
                for c in 0..self.cols {
                    v[c] = v[c].add(&coeff.mul(&self[(i, c)]));
                }
            }
            if v.iter().any(|x| !x.is_zero()) {
                rows.push(v);
            }
        }
        // The kernel may contain (x, y) pairs with x*self = 0; prune to a
        // basis of the actual intersection.
        if rows.is_empty() {
            return rows;
        }
        let m = Matrix::from_rows(rows);
        let (rr, pivots) = m.rref();
        (0..pivots.len()).map(|i| rr.row(i).to_vec()).collect()
    }
}

impl<T> core::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    fn index(&self, (r, c): (usize, usize)) -> &T {
        &self.entries[r * self.cols + c]
    }
}

impl<T> core::ops::IndexMut<(usize, usize)> for Matrix<T> {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut T {
        &mut self.entries[r * self.cols + c]
    }
}

impl<T: Field + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self[(r, c)])?;
            }
            writeln!(f, "]")?;
        }
        Ok(())
    }
}

impl<T: Field> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].add(&rhs[(r, c)]))
    }
}

impl<T: Field> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Matrix::from_fn(self.rows, self.cols, |r, c| self[(r, c)].sub(&rhs[(r, c)]))
    }
}

impl<T: Field> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.matmul(rhs)
    }
}

impl<T: Field> Neg for &Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        self.map(|x| x.neg())
    }
}

/// Inertia of a symmetric rational matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Signature {
    pub plus: usize,
    pub minus: usize,
    pub zero: usize,
}

/// Signature of a symmetric matrix over Q by exact congruence
/// diagonalization (simultaneous row/column elimination).
pub fn signature_of_symmetric(m: &Matrix<Rat>) -> Result<Signature, MatrixError> {
    if !m.is_symmetric() {
        return Err(MatrixError::NotSymmetric);
    }
    let n = m.rows();
    let mut a = m.clone();
    let mut sig = Signature { plus: 0, minus: 0, zero: 0 };
    for k in 0..n {
        if Zero::is_zero(&a[(k, k)]) {
            // Bring a nonzero onto the diagonal: first try swapping with a
            // later diagonal entry, then the char-0 trick of adding a row
            // and column with a nonzero off-diagonal entry.
            if let Some(j) = ((k + 1)..n).find(|&j| !Zero::is_zero(&a[(j, j)])) {
                congruence_swap(&mut a, k, j);
            } else if let Some(j) = ((k + 1)..n).find(|&j| !Zero::is_zero(&a[(k, j)])) {
                congruence_add(&mut a, k, j);
            } else {
                sig.zero += 1;
                continue;
            }
        }
        let d = a[(k, k)].clone();
        if d.is_positive() {
            sig.plus += 1;
        } else {
            sig.minus += 1;
        }
        for i in (k + 1)..n {
            if Zero::is_zero(&a[(i, k)]) {
                continue;
            }
            let f = &a[(i, k)] / &d;
            for j in k..n {
                let sub = &f * &a[(k, j)];
                a[(i, j)] = &a[(i, j)] - &sub;
            }
            for j in k..n {
                let sub = &f * &a[(j, k)];
                a[(j, i)] = &a[(j, i)] - &sub;
            }
        }
    }
    Ok(sig)
}

fn congruence_swap(a: &mut Matrix<Rat>, k: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let tmp = a[(k, c)].clone();
        a[(k, c)] = a[(j, c)].clone();
        a[(j, c)] = tmp;
    }
    for r in 0..n {
        let tmp = a[(r, k)].clone();
        a[(r, k)] = a[(r, j)].clone();
        a[(r, j)] = tmp;
    }
}

/// Row_k += row_j and col_k += col_j; makes `a[k][k] = 2 a[k][j]` nonzero
/// when the diagonal vanishes.
fn congruence_add(a: &mut Matrix<Rat>, k: usize, j: usize) {
    let n = a.rows();
    for c in 0..n {
        let add = a[(j, c)].clone();
        a[(k, c)] = &a[(k, c)] + &add;
    }
    for r in 0..n {
        let add = a[(r, j)].clone();
        a[(r, k)] = &a[(r, k)] + &add;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::scalar::{rat, rat_int};

    fn m(rows: &[&[i64]]) -> Matrix<Rat> {
        Matrix::from_fn(rows.len(), rows[0].len(), |r, c| rat_int(rows[r][c]))
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        assert!(Matrix::<Rat>::identity(2).kernel_basis().is_empty());
    }

    #[test]
    fn kernel_of_two_by_five_system() {
        // a + 2c = 0, e + 2d = 0 in unknowns (a, b, c, d, e).
        let sys = m(&[&[1, 0, 2, 0, 0], &[0, 0, 0, 2, 1]]);
        let k = sys.kernel_basis();
        assert_eq!(k.len(), 3);
        for v in &k {
            assert!(sys.mul_vec(v).iter().all(|x| Zero::is_zero(x)));
        }
        assert_eq!(sys.rank() + k.len(), sys.cols());
    }

    #[test]
    fn rank_plus_nullity() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(a.rank() + a.kernel_basis().len(), 3);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn signature_identity_and_zero() {
        let id = Matrix::<Rat>::identity(5);
        assert_eq!(
            signature_of_symmetric(&id).unwrap(),
            Signature { plus: 5, minus: 0, zero: 0 }
        );
        let z = Matrix::<Rat>::zero(3, 3);
        assert_eq!(
            signature_of_symmetric(&z).unwrap(),
            Signature { plus: 0, minus: 0, zero: 3 }
        );
    }

    #[test]
    fn signature_hyperbolic_plane() {
        // x*y has signature (1,1) and a zero diagonal, exercising the
        // off-diagonal repair step.
        let h = m(&[&[0, 1], &[1, 0]]);
        assert_eq!(
            signature_of_symmetric(&h).unwrap(),
            Signature { plus: 1, minus: 1, zero: 0 }
        );
    }

    #[test]
    fn signature_rejects_asymmetric() {
        let a = m(&[&[0, 1], &[2, 0]]);
        assert_eq!(signature_of_symmetric(&a), Err(MatrixError::NotSymmetric));
    }

    #[test]
    fn solve_and_inverse() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let x = a.solve(&[rat_int(3), rat_int(2)]).unwrap();
        assert_eq!(x, alloc::vec![rat_int(1), rat_int(1)]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.matmul(&inv), Matrix::identity(2));
        assert_eq!(a.det().unwrap(), rat_int(1));
    }

    #[test]
    fn row_span_operations() {
        let a = m(&[&[1, 0, 0], &[0, 1, 0]]);
        let b = m(&[&[1, 1, 0]]);
        let c = m(&[&[0, 0, 1]]);
        assert!(a.row_span_contains(&b));
        assert!(!a.row_span_contains(&c));
        let int = a.row_span_intersect(&m(&[&[1, 1, 0], &[0, 0, 1]]));
        assert_eq!(int.len(), 1);
        assert_eq!(int[0], alloc::vec![rat_int(1), rat_int(1), rat_int(0)]);
    }

    #[test]
    fn rational_pivots_stay_exact() {
        let a = Matrix::from_fn(2, 2, |r, c| rat((r + c) as i64 + 1, 3));
        let d = a.det().unwrap();
        // det = (1/3)(3/3) - (2/3)(2/3) = -1/9
        assert_eq!(d, rat(-1, 9));
    }
}
