//! Exact rational scalars, dense matrices and 3-tensors.
//!
//! Everything is stored densely in row-major order. Dimensions stay small
//! (a double of a 4-dimensional algebra is 8-dimensional), so no sparse
//! formats are used.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms.
pub type Scalar = BigRational;

/// Coefficient vector in a fixed basis.
pub type Vector = Vec<Scalar>;

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or an integer string.
pub fn parse_scalar(text: &str) -> Result<Scalar> {
    let bad = || Error::NonRationalScalar(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = den.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(n, d))
}

/// Reduced `p/q`, or `p` when the denominator is one.
pub fn format_scalar(s: &Scalar) -> String {
    s.to_string()
}

pub fn zero_vec(n: usize) -> Vector {
    vec![Scalar::zero(); n]
}

pub fn basis_vec(n: usize, i: usize) -> Vector {
    let mut v = zero_vec(n);
    v[i] = Scalar::one();
    v
}

pub fn is_zero_vec(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// `y += a * x`
pub fn axpy(y: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    debug_assert_eq!(y.len(), x.len());
    if a.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi += a * xi;
        }
    }
}

pub fn vec_add(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &Scalar, v: &[Scalar]) -> Vector {
    v.iter().map(|x| a * x).collect()
}

pub fn dot(a: &[Scalar], b: &[Scalar]) -> Scalar {
    let mut s = Scalar::zero();
    for (x, y) in a.iter().zip(b) {
        if !x.is_zero() && !y.is_zero() {
            s += x * y;
        }
    }
    s
}

/// Dense `rows x cols` matrix. Column `j` is the image of the `j`-th basis
/// vector when the matrix is read as a linear map.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// A map `P -> Q` stored as a `dim Q x dim P` matrix.
pub type LinearMap = Matrix;
/// `entry[i][j]` is the coefficient of `e_i (x) e_j`.
pub type Tensor2 = Matrix;

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Scalar::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
        }
        m
    }

    pub fn scalar(n: usize, a: &Scalar) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = a.clone();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        Ok(Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Integer literal convenience, mostly for tests and the catalog.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect())
            .expect("rectangular literal")
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vector]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add_at(&mut self, i: usize, j: usize, v: &Scalar) {
        self.data[i * self.cols + j] += v;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vector {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vector> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scaled(&self, a: &Scalar) -> Self {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| a * x).collect(),
        }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector shape mismatch");
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_skew(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..=i).all(|j| *self.get(i, j) == -self.get(j, i)))
    }

    /// Number of nonzero entries.
    pub fn support(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Gaussian elimination on a copy; returns the determinant.
    pub fn determinant(&self) -> Result<Scalar> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("determinant of non-square matrix".into()));
        }
        let n = self.rows;
        let mut a = self.to_rows();
        let mut det = Scalar::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
                return Ok(Scalar::zero());
            };
            if p != col {
                a.swap(p, col);
                det = -det;
            }
            let pivot = a[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if a[r][col].is_zero() {
                    continue;
                }
                let f = &a[r][col] / &pivot;
                let (top, bottom) = a.split_at_mut(r);
                axpy(&mut bottom[0], &-f, &top[col]);
            }
        }
        Ok(det)
    }

    /// Block-diagonal `P (+) Q` matrix.
    pub fn direct_sum(&self, other: &Matrix) -> Matrix {
        let mut m = Matrix::zeros(self.rows + other.rows, self.cols + other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.set(i, j, self.get(i, j).clone());
            }
        }
        for i in 0..other.rows {
            for j in 0..other.cols {
                m.set(self.rows + i, self.cols + j, other.get(i, j).clone());
            }
        }
        m
    }

    /// `(A (x) B) T` for a 2-tensor `T`, which is `A T B^t` in matrix form.
    pub fn tensor_apply(a: &Matrix, b: &Matrix, t: &Tensor2) -> Tensor2 {
        &(a * t) * &b.transpose()
    }
}

/// Exact Gauss-Jordan inverse.
pub fn invert_matrix(m: &LinearMap) -> Result<LinearMap> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch(format!(
            "cannot invert a {}x{} matrix",
            m.rows, m.cols
        )));
    }
    let n = m.rows;
    let mut a = m.to_rows();
    let mut inv = Matrix::identity(n).to_rows();
    for col in 0..n {
        let p = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::NotInvertible)?;
        a.swap(p, col);
        inv.swap(p, col);
        let pivot = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= &pivot;
        }
        for x in inv[col].iter_mut() {
            *x *= &pivot;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = -a[r][col].clone();
            let (pa, pi) = (a[col].clone(), inv[col].clone());
            axpy(&mut a[r], &f, &pa);
            axpy(&mut inv[r], &f, &pi);
        }
    }
    Matrix::from_rows(inv)
}

/// The flip: `entry'[i][j] = entry[j][i]`.
pub fn transpose2(t: &Tensor2) -> Tensor2 {
    t.transpose()
}

/// `(r - flip(r)) / 2`
pub fn skew_part(r: &Tensor2) -> Tensor2 {
    (r - &transpose2(r)).scaled(&frac(1, 2))
}

/// `(r + flip(r)) / 2`
pub fn symmetric_part(r: &Tensor2) -> Tensor2 {
    (r + &transpose2(r)).scaled(&frac(1, 2))
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_add(&self.data, &rhs.data),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: vec_sub(&self.data, &rhs.data),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| -x).collect(),
        }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = Matrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                let row = rhs.row(k);
                let dst = &mut out.data[i * rhs.cols..(i + 1) * rhs.cols];
                axpy(dst, a, row);
            }
        }
        out
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", fmt_vec(self.row(i)))?;
        }
        write!(f, "]")
    }
}

pub fn fmt_vec(v: &[Scalar]) -> String {
    let parts: Vec<String> = v.iter().map(format_scalar).collect();
    format!("[{}]", parts.join(", "))
}

/// Dense cubic array; `entry[i][j][k]` is the coefficient of `e_i (x) e_j (x) e_k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tensor3 {
    dim: usize,
    data: Vec<Scalar>,
}

impl Tensor3 {
    pub fn zeros(dim: usize) -> Self {
        Tensor3 {
            dim,
            data: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dim + j) * self.dim + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.data[self.idx(i, j, k)]
    }

    pub fn add_at(&mut self, i: usize, j: usize, k: usize, v: &Scalar) {
        let ix = self.idx(i, j, k);
        self.data[ix] += v;
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        is_zero_vec(&self.data)
    }

    pub fn support(&self) -> usize {
        self.data.iter().filter(|x| !x.is_zero()).count()
    }

    /// Nonzero entries as `((i, j, k), value)`.
    pub fn nonzero(&self) -> Vec<((usize, usize, usize), Scalar)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push(((i, j, k), v.clone()));
                    }
                }
            }
        }
        out
    }

    /// `(A (x) B (x) C) T`
    pub fn apply_each(&self, a: &Matrix, b: &Matrix, c: &Matrix) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zeros(n);
        for ((i, j, k), v) in self.nonzero() {
            for p in 0..n {
                let ap = a.get(p, i);
                if ap.is_zero() {
                    continue;
                }
                for q in 0..n {
                    let bq = b.get(q, j);
                    if bq.is_zero() {
                        continue;
                    }
                    let w = &v * ap * bq;
                    for s in 0..n {
                        let cs = c.get(s, k);
                        if !cs.is_zero() {
                            out.add_at(p, q, s, &(&w * cs));
                        }
                    }
                }
            }
        }
        out
    }

    /// Swaps the first two legs.
    pub fn flip12(&self) -> Tensor3 {
        let n = self.dim;
        let mut out = Tensor3::zeros(n);
        for ((i, j, k), v) in self.nonzero() {
            out.add_at(j, i, k, &v);
        }
        out
    }
}

impl Add for &Tensor3 {
    type Output = Tensor3;
    fn add(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, rhs.dim, "tensor shape mismatch");
        Tensor3 {
            dim: self.dim,
            data: vec_add(&self.data, &rhs.data),
        }
    }
}

impl Sub for &Tensor3 {
    type Output = Tensor3;
    fn sub(self, rhs: &Tensor3) -> Tensor3 {
        assert_eq!(self.dim, rhs.dim, "tensor shape mismatch");
        Tensor3 {
            dim: self.dim,
            data: vec_sub(&self.data, &rhs.data),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_scalar("6/4").unwrap(), frac(3, 2));
        assert_eq!(parse_scalar("-2").unwrap(), int(-2));
        assert_eq!(format_scalar(&frac(-6, 4)), "-3/2");
        assert_eq!(format_scalar(&int(5)), "5");
        assert!(matches!(parse_scalar("1/0"), Err(Error::NonRationalScalar(_))));
        assert!(matches!(parse_scalar("1.5"), Err(Error::NonRationalScalar(_))));
        assert!(parse_scalar("").is_err());
    }

    #[test]
    fn inverse_examples() {
        let id = Matrix::identity(2);
        assert_eq!(invert_matrix(&id).unwrap(), id);
        let j = Matrix::from_ints(&[&[0, -1], &[1, 0]]);
        assert_eq!(invert_matrix(&j).unwrap(), Matrix::from_ints(&[&[0, 1], &[-1, 0]]));
        let singular = Matrix::from_ints(&[&[1, 0], &[0, 0]]);
        assert_eq!(invert_matrix(&singular), Err(Error::NotInvertible));
    }

    #[test]
    fn determinant_matches_hand_value() {
        let m = Matrix::from_ints(&[&[2, 1, 0], &[1, 3, 1], &[0, 1, 4]]);
        assert_eq!(m.determinant().unwrap(), int(18));
        assert!(Matrix::zeros(2, 2).determinant().unwrap().is_zero());
    }

    #[test]
    fn flip_and_skew() {
        let mut r = Matrix::zeros(2, 2);
        r.set(0, 1, int(1));
        let f = transpose2(&r);
        assert_eq!(*f.get(1, 0), int(1));
        assert!(f.get(0, 1).is_zero());
        let a = skew_part(&r);
        assert_eq!(*a.get(0, 1), frac(1, 2));
        assert_eq!(*a.get(1, 0), frac(-1, 2));
        assert!(a.is_skew());
        assert!((&r - &a).is_symmetric());
        assert_eq!(&a + &symmetric_part(&r), r);
        assert!(skew_part(&Matrix::identity(3)).is_zero());
    }

    #[test]
    fn tensor_apply_is_a_t_bt() {
        let a = Matrix::from_ints(&[&[1, 2], &[0, 1]]);
        let b = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let mut t = Matrix::zeros(2, 2);
        t.set(0, 0, int(1));
        // (A e1) (x) (B e1) = (e1) (x) (e2)
        let out = Matrix::tensor_apply(&a, &b, &t);
        assert_eq!(out, Matrix::from_ints(&[&[0, 1], &[0, 0]]));
    }
}
