//! Exact rational linear algebra: dense matrices, canonical subspaces and
//! minimum-norm solves.
//!
//! Vectors are column vectors; a [`Subspace`] stores its basis as the rows of
//! a matrix in reduced row echelon form, so two subspaces are equal exactly
//! when their stored bases are identical.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, BigRational, One, Signed, Zero};
use thiserror::Error;

/// Exact rational scalar.
pub type Scalar = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("linear system has no solution")]
    Inconsistent,
    #[error("invalid rational literal {0:?}")]
    Literal(String),
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(p: i64, q: i64) -> Scalar {
    Scalar::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_scalar(s: &str) -> Result<Scalar, LinalgError> {
    let bad = || LinalgError::Literal(s.to_string());
    let t = s.trim();
    match t.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Scalar::new(p, q))
        }
        None => {
            let p: BigInt = t.parse().map_err(|_| bad())?;
            Ok(Scalar::from_integer(p))
        }
    }
}

/// Formats as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

pub fn dot(u: &[Scalar], v: &[Scalar]) -> Scalar {
    assert_eq!(u.len(), v.len(), "dot: length mismatch");
    let mut s = Scalar::zero();
    for (a, b) in u.iter().zip(v) {
        if !a.is_zero() && !b.is_zero() {
            s += a * b;
        }
    }
    s
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

/// Dense row-major rational matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(format_scalar).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Scalar::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = Scalar::one();
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

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Scalar>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "from_rows: ragged row");
            data.extend(r);
        }
        Matrix { rows: n, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(rows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Matrix::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "from_columns: wrong column length");
            for (i, x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x.clone();
            }
        }
        m
    }

    pub fn from_i64(rows: usize, cols: usize, entries: &[i64]) -> Self {
        assert_eq!(entries.len(), rows * cols);
        Matrix { rows, cols, data: entries.iter().map(|&x| int(x)).collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn row_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column_vectors(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, c: &Scalar) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|x| x * c).collect() }
    }

    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.cols, "apply: vector length {} vs {} columns", v.len(), self.cols);
        (0..self.rows).map(|i| dot(self.row(i), v)).collect()
    }

    pub fn matmul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "matmul: {}x{} times {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let mut out = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Matrix {
        assert!(r0 + nr <= self.rows && c0 + nc <= self.cols, "block out of range");
        Matrix::from_fn(nr, nc, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "set_block out of range");
        for i in 0..b.rows {
            for j in 0..b.cols {
                self.data[(r0 + i) * self.cols + c0 + j] = b.get(i, j).clone();
            }
        }
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows, "hstack: row mismatch");
        let mut m = Matrix::zeros(self.rows, self.cols + other.cols);
        m.set_block(0, 0, self);
        m.set_block(0, self.cols, other);
        m
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols, "vstack: column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Matrix { rows: self.rows + other.rows, cols: self.cols, data }
    }

    /// Keeps the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        Matrix::from_fn(self.rows, cols.len(), |i, j| self.get(i, cols[j]).clone())
    }

    /// Keeps the listed rows, in order.
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        Matrix::from_fn(rows.len(), self.cols, |i, j| self.get(rows[i], j).clone())
    }

    /// Reduces in place to reduced row echelon form and returns the pivot
    /// columns. Zero rows end up at the bottom.
    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let (m, n) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..n {
                    self.data.swap(p * n + j, r * n + j);
                }
            }
            let inv = self.get(r, c).recip();
            for j in c..n {
                if !self.data[r * n + j].is_zero() {
                    self.data[r * n + j] *= &inv;
                }
            }
            let pivot_row: Vec<(usize, Scalar)> = (c..n)
                .filter(|&j| !self.data[r * n + j].is_zero())
                .map(|j| (j, self.data[r * n + j].clone()))
                .collect();
            for i in 0..m {
                if i == r || self.data[i * n + c].is_zero() {
                    continue;
                }
                let f = self.data[i * n + c].clone();
                for (j, x) in &pivot_row {
                    self.data[i * n + j] -= &f * x;
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place();
        (m, p)
    }

    pub fn rank(&self) -> usize {
        if self.rows <= self.cols {
            self.rref().1.len()
        } else {
            self.transpose().rref().1.len()
        }
    }

    /// Exact inverse of a square matrix, `None` when singular.
    pub fn inverse(&self) -> Option<Matrix> {
        assert!(self.is_square(), "inverse of non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Some(Matrix::zeros(0, 0));
        }
        let (r, pivots) = self.hstack(&Matrix::identity(n)).rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(r.block(0, n, n, n))
    }

    /// Largest absolute numerator or denominator, a cheap size measure.
    pub fn height(&self) -> BigInt {
        let mut h = BigInt::zero();
        for x in &self.data {
            h = h.max(x.numer().abs()).max(x.denom().abs());
        }
        h
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, o: &Matrix) -> Matrix {
        assert_eq!(self.shape(), o.shape(), "add: shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, o: &Matrix) -> Matrix {
        assert_eq!(self.shape(), o.shape(), "sub: shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(|a| -a).collect() }
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, o: &Matrix) -> Matrix {
        self.matmul(o)
    }
}

/// Canonical RREF basis (as rows) of the span of `vectors` in `Q^ambient`.
pub fn canonical_basis(ambient: usize, vectors: &[Vec<Scalar>]) -> Matrix {
    if vectors.is_empty() {
        return Matrix::zeros(0, ambient);
    }
    let (r, pivots) = Matrix::from_rows(ambient, vectors.to_vec()).rref();
    r.block(0, 0, pivots.len(), ambient)
}

/// A linear subspace of `Q^ambient` with canonical basis.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    basis: Matrix,
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) {:?}", self.dim(), self.ambient(), self.basis)
    }
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace { basis: Matrix::zeros(0, ambient) }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace { basis: Matrix::identity(ambient) }
    }

    pub fn span(ambient: usize, vectors: &[Vec<Scalar>]) -> Self {
        Subspace { basis: canonical_basis(ambient, vectors) }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        Subspace { basis: r.block(0, 0, pivots.len(), m.cols()) }
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn ambient(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    /// Basis vectors as the rows of a matrix in RREF.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vectors()
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient(), "contains: ambient mismatch");
        if is_zero_vector(v) {
            return true;
        }
        // Reduce v against the RREF basis using pivot columns.
        let mut w = v.to_vec();
        for i in 0..self.dim() {
            let row = self.basis.row(i);
            let p = row.iter().position(|x| !x.is_zero()).expect("nonzero basis row");
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (wj, rj) in w.iter_mut().zip(row) {
                if !rj.is_zero() {
                    *wj -= &f * rj;
                }
            }
        }
        is_zero_vector(&w)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient(), other.ambient(), "is_subspace_of: ambient mismatch");
        self.dim() <= other.dim() && (0..self.dim()).all(|i| other.contains(self.basis.row(i)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient(), "sum: ambient mismatch");
        Subspace::row_space(&self.basis.vstack(&other.basis))
    }

    pub fn orthogonal_complement(&self) -> Subspace {
        kernel(&self.basis)
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient(), other.ambient(), "intersect: ambient mismatch");
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient());
        }
        self.orthogonal_complement().sum(&other.orthogonal_complement()).orthogonal_complement()
    }

    /// Orthogonal projector `B^T (B B^T)^{-1} B` onto this subspace.
    pub fn projector(&self) -> Matrix {
        let n = self.ambient();
        if self.is_zero() {
            return Matrix::zeros(n, n);
        }
        let b = &self.basis;
        let bt = b.transpose();
        let gram_inv = (b * &bt).inverse().expect("Gram matrix of a basis is invertible");
        &(&bt * &gram_inv) * b
    }

    /// Orthogonal projection of a single vector.
    pub fn project(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient(), "project: ambient mismatch");
        if self.is_zero() {
            return vec![Scalar::zero(); v.len()];
        }
        let b = &self.basis;
        let rhs = b.apply(v);
        let gram = b * &b.transpose();
        let coeffs = solve_square(&gram, &rhs).expect("Gram matrix of a basis is invertible");
        b.transpose().apply(&coeffs)
    }

    /// Image of this subspace under `m`.
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient(), "image_under: ambient mismatch");
        let imgs = (&self.basis * &m.transpose()).row_vectors();
        Subspace::span(m.rows(), &imgs)
    }
}

fn solve_square(a: &Matrix, b: &[Scalar]) -> Option<Vec<Scalar>> {
    let n = a.rows();
    let aug = a.hstack(&Matrix::from_columns(n, &[b.to_vec()]));
    let (r, pivots) = aug.rref();
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some((0..n).map(|i| r.get(i, n).clone()).collect())
}

/// Null space `{x : m x = 0}`.
pub fn kernel(m: &Matrix) -> Subspace {
    let n = m.cols();
    let (r, pivots) = m.rref();
    let mut is_pivot = vec![false; n];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let mut vecs = Vec::new();
    for free in (0..n).filter(|&j| !is_pivot[j]) {
        let mut v = vec![Scalar::zero(); n];
        v[free] = Scalar::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = -r.get(i, free).clone();
        }
        vecs.push(v);
    }
    Subspace::span(n, &vecs)
}

/// Column space of `m`.
pub fn image(m: &Matrix) -> Subspace {
    Subspace::row_space(&m.transpose())
}

pub fn orthogonal_complement(s: &Subspace) -> Subspace {
    s.orthogonal_complement()
}

pub fn intersect(s: &Subspace, t: &Subspace) -> Subspace {
    s.intersect(t)
}

pub fn subspace_sum(s: &Subspace, t: &Subspace) -> Subspace {
    s.sum(t)
}

pub fn projector(s: &Subspace) -> Matrix {
    s.projector()
}

/// Moore-Penrose pseudo-inverse via a rank factorization `m = C R`.
pub fn pseudo_inverse(m: &Matrix) -> Matrix {
    let (rr, pivots) = m.rref();
    let r = pivots.len();
    if r == 0 {
        return Matrix::zeros(m.cols(), m.rows());
    }
    let rf = rr.block(0, 0, r, m.cols());
    let cf = m.select_columns(&pivots);
    let rt = rf.transpose();
    let ct = cf.transpose();
    let left = (&rf * &rt).inverse().expect("full row rank factor");
    let right = (&ct * &cf).inverse().expect("full column rank factor");
    &(&(&rt * &left) * &right) * &ct
}

/// Minimum-norm solution of `m x = b`, optionally with `x` constrained to a
/// subspace (minimum norm among constrained solutions).
pub fn solve_particular(
    m: &Matrix,
    b: &[Scalar],
    constraint: Option<&Subspace>,
) -> Result<Vec<Scalar>, LinalgError> {
    if b.len() != m.rows() {
        return Err(LinalgError::Dimension { expected: m.rows(), found: b.len() });
    }
    let n = m.cols();
    let owned_full;
    let s = match constraint {
        Some(s) => {
            if s.ambient() != n {
                return Err(LinalgError::Dimension { expected: n, found: s.ambient() });
            }
            s
        }
        None => {
            owned_full = Subspace::full(n);
            &owned_full
        }
    };
    // x = C^T u with (M C^T) u = b.
    let ct = s.basis().transpose();
    let mc = m * &ct;
    let k = mc.cols();
    let aug = mc.hstack(&Matrix::from_columns(m.rows(), &[b.to_vec()]));
    let (r, pivots) = aug.rref();
    if pivots.last() == Some(&k) {
        return Err(LinalgError::Inconsistent);
    }
    let mut u = vec![Scalar::zero(); k];
    for (i, &p) in pivots.iter().enumerate() {
        u[p] = r.get(i, k).clone();
    }
    let x0 = ct.apply(&u);
    let free = kernel(m).intersect(s);
    let correction = free.project(&x0);
    Ok(x0.iter().zip(&correction).map(|(a, c)| a - c).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vec<Scalar> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn scalar_round_trip() {
        for s in ["0", "-3", "7/2", "-5/12"] {
            assert_eq!(format_scalar(&parse_scalar(s).unwrap()), s);
        }
        assert_eq!(format_scalar(&parse_scalar("4/2").unwrap()), "2");
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn rank_one_kernel_and_image() {
        let m = Matrix::from_i64(2, 2, &[1, 2, 2, 4]);
        let k = kernel(&m);
        assert_eq!(k, Subspace::span(2, &[v(&[-2, 1])]));
        let im = image(&m);
        assert_eq!(im, Subspace::span(2, &[v(&[1, 2])]));
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn canonical_basis_is_unique() {
        let a = Subspace::span(3, &[v(&[1, 1, 0]), v(&[0, 1, 1])]);
        let b = Subspace::span(3, &[v(&[1, 2, 1]), v(&[1, 0, -1])]);
        assert_eq!(a, b);
        assert_eq!(a.basis().row(0), &v(&[1, 0, -1])[..]);
    }

    #[test]
    fn min_norm_solution() {
        let m = Matrix::from_i64(1, 2, &[1, 1]);
        let x = solve_particular(&m, &v(&[2]), None).unwrap();
        assert_eq!(x, v(&[1, 1]));
        let c = Subspace::span(2, &[v(&[1, 0])]);
        let y = solve_particular(&m, &v(&[2]), Some(&c)).unwrap();
        assert_eq!(y, v(&[2, 0]));
        let z = Matrix::from_i64(2, 1, &[1, 1]);
        assert_eq!(solve_particular(&z, &v(&[1, 2]), None), Err(LinalgError::Inconsistent));
    }

    #[test]
    fn projector_is_symmetric_idempotent() {
        let s = Subspace::span(3, &[v(&[1, 1, 0])]);
        let p = s.projector();
        assert_eq!(&p * &p, p);
        assert_eq!(p.transpose(), p);
        assert_eq!(p.get(0, 0), &frac(1, 2));
    }

    #[test]
    fn intersection_and_complement() {
        let a = Subspace::span(3, &[v(&[1, 0, 0]), v(&[0, 1, 0])]);
        let b = Subspace::span(3, &[v(&[0, 1, 0]), v(&[0, 0, 1])]);
        assert_eq!(a.intersect(&b), Subspace::span(3, &[v(&[0, 1, 0])]));
        assert_eq!(a.orthogonal_complement(), Subspace::span(3, &[v(&[0, 0, 1])]));
        assert_eq!(a.sum(&b), Subspace::full(3));
    }

    #[test]
    fn pseudo_inverse_penrose_conditions() {
        let a = Matrix::from_i64(3, 3, &[1, 2, 3, 2, 4, 6, 0, 1, 1]);
        let p = pseudo_inverse(&a);
        assert_eq!(&(&a * &p) * &a, a);
        assert_eq!(&(&p * &a) * &p, p);
        assert_eq!((&a * &p).transpose(), &a * &p);
        assert_eq!((&p * &a).transpose(), &p * &a);
        assert!(pseudo_inverse(&Matrix::zeros(2, 3)).is_zero());
    }

    #[test]
    fn inverse_round_trip() {
        let m = Matrix::from_i64(3, 3, &[2, 1, 0, 0, 1, 3, 1, 0, 1]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
        assert!(Matrix::from_i64(2, 2, &[1, 2, 2, 4]).inverse().is_none());
        assert_eq!(Matrix::zeros(0, 0).inverse(), Some(Matrix::zeros(0, 0)));
    }
}
