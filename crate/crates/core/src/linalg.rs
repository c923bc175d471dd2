//! Exact linear algebra over prime fields.
//!
//! Matrices act on column vectors: a `LinearMap` from a space of dimension
//! `n` to one of dimension `m` is an `m x n` matrix. Tensor products use the
//! left-major convention everywhere: the basis vector `u_i (x) v_j` of
//! `U (x) V` sits at index `i * dim V + j`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Checks `p` is a prime small enough that products of residues fit in `u64`.
pub fn check_characteristic(p: u64) -> Result<()> {
    if !is_prime(p) || p >= 1 << 31 {
        return Err(Error::Characteristic(p));
    }
    Ok(())
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    a * b % p
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * a % p;
        }
        a = a * a % p;
        e >>= 1;
    }
    r
}

/// Inverse of a nonzero residue.
pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0, "inverse of zero");
    pow_mod(a, p - 2, p)
}

/// Reduces a signed integer into `0..p`.
pub fn reduce_i64(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// An element of the prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FpScalar {
    value: u64,
    p: u64,
}

impl FpScalar {
    pub fn new(value: i64, p: u64) -> Self {
        FpScalar {
            value: reduce_i64(value, p),
            p,
        }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn characteristic(self) -> u64 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inv(self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            Some(FpScalar {
                value: inv_mod(self.value, self.p),
                p: self.p,
            })
        }
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        debug_assert_eq!(self.p, rhs.p);
        FpScalar {
            value: add_mod(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        debug_assert_eq!(self.p, rhs.p);
        FpScalar {
            value: sub_mod(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        debug_assert_eq!(self.p, rhs.p);
        FpScalar {
            value: mul_mod(self.value, rhs.value, self.p),
            p: self.p,
        }
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar {
            value: sub_mod(0, self.value, self.p),
            p: self.p,
        }
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

/// Dense matrix over `F_p`, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    p: u64,
    rows: usize,
    cols: usize,
    data: Vec<u64>,
}

/// Linear maps are matrices acting on column vectors.
pub type LinearMap = Matrix;

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over F_{}", self.rows, self.cols, self.p)?;
        for r in 0..self.rows {
            writeln!(f, "  {:?}", self.row(r))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(p: u64, rows: usize, cols: usize) -> Self {
        Matrix {
            p,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(p: u64, n: usize) -> Self {
        let mut m = Matrix::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    /// Builds a matrix from signed integer rows, reducing mod `p`.
    pub fn from_rows(p: u64, rows: &[Vec<i64>]) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = Matrix::zeros(p, r, c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::Shape(format!(
                    "row {i} has length {} but expected {c}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                m.data[i * c + j] = reduce_i64(v, p);
            }
        }
        Ok(m)
    }

    pub fn from_data(p: u64, rows: usize, cols: usize, data: Vec<u64>) -> Self {
        assert_eq!(data.len(), rows * cols);
        Matrix {
            p,
            rows,
            cols,
            data: data.into_iter().map(|v| v % p).collect(),
        }
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(p: u64, dim: usize, columns: &[Vec<u64>]) -> Self {
        let mut m = Matrix::zeros(p, dim, columns.len());
        for (j, col) in columns.iter().enumerate() {
            assert_eq!(col.len(), dim);
            for (i, &v) in col.iter().enumerate() {
                m.data[i * m.cols + j] = v % p;
            }
        }
        m
    }

    pub fn column_vector(p: u64, v: &[u64]) -> Self {
        Matrix::from_data(p, v.len(), 1, v.to_vec())
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn domain_dim(&self) -> usize {
        self.cols
    }

    pub fn codomain_dim(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u64 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u64) {
        self.data[r * self.cols + c] = v % self.p;
    }

    #[inline]
    pub fn add_at(&mut self, r: usize, c: usize, v: u64) {
        let idx = r * self.cols + c;
        self.data[idx] = add_mod(self.data[idx], v % self.p, self.p);
    }

    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u64> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u64>> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn data(&self) -> &[u64] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Matrix::identity(self.p, self.rows)
    }

    /// Number of nonzero entries.
    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|&&v| v != 0).count()
    }

    fn check_same_shape(&self, other: &Matrix) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols || self.p != other.p {
            return Err(Error::Shape(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let p = self.p;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| add_mod(a, b, p))
            .collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn try_sub(&self, other: &Matrix) -> Result<Matrix> {
        self.check_same_shape(other)?;
        let p = self.p;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| sub_mod(a, b, p))
            .collect();
        Ok(Matrix { data, ..*self })
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        self.try_add(other).expect("matrix add shape")
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        self.try_sub(other).expect("matrix sub shape")
    }

    pub fn scale(&self, s: u64) -> Matrix {
        let p = self.p;
        let s = s % p;
        Matrix {
            data: self.data.iter().map(|&v| v * s % p).collect(),
            ..*self
        }
    }

    /// In-place `self += s * other`.
    pub fn axpy(&mut self, s: u64, other: &Matrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let p = self.p;
        let s = s % p;
        if s == 0 {
            return;
        }
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            if b != 0 {
                *a = (*a + s * b) % p;
            }
        }
    }

    pub fn try_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows || self.p != other.p {
            return Err(Error::Shape(format!(
                "cannot compose {}x{} with {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let p = self.p;
        let (n, m) = (self.rows, other.cols);
        let mut acc = vec![0u64; n * m];
        // Accumulate without reducing every step; residues are < 2^31 so
        // a handful of products fit before overflow risk.
        for i in 0..n {
            let out = &mut acc[i * m..(i + 1) * m];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k];
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * m..(k + 1) * m];
                for (o, &b) in out.iter_mut().zip(brow) {
                    if b != 0 {
                        *o = (*o + a * b) % p;
                    }
                }
            }
        }
        Ok(Matrix {
            p,
            rows: n,
            cols: m,
            data: acc,
        })
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        self.try_mul(other).expect("matrix product shape")
    }

    pub fn apply(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.cols);
        let p = self.p;
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .filter(|(&a, &b)| a != 0 && b != 0)
                    .fold(0, |s, (&a, &b)| (s + a * b) % p)
            })
            .collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.p, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Kronecker product, left factor major.
    pub fn kron(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.p, other.p);
        let p = self.p;
        let rows = self.rows * other.rows;
        let cols = self.cols * other.cols;
        let mut out = Matrix::zeros(p, rows, cols);
        for i1 in 0..self.rows {
            for j1 in 0..self.cols {
                let a = self.get(i1, j1);
                if a == 0 {
                    continue;
                }
                for i2 in 0..other.rows {
                    for j2 in 0..other.cols {
                        let b = other.get(i2, j2);
                        if b != 0 {
                            out.data[(i1 * other.rows + i2) * cols + j1 * other.cols + j2] =
                                a * b % p;
                        }
                    }
                }
            }
        }
        out
    }

    pub fn hstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.rows, other.rows);
        let mut out = Matrix::zeros(self.p, self.rows, self.cols + other.cols);
        for r in 0..self.rows {
            out.data[r * out.cols..r * out.cols + self.cols].copy_from_slice(self.row(r));
            out.data[r * out.cols + self.cols..(r + 1) * out.cols].copy_from_slice(other.row(r));
        }
        out
    }

    pub fn vstack(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Matrix {
            p: self.p,
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.p, self.rows, idx.len());
        for r in 0..self.rows {
            for (k, &c) in idx.iter().enumerate() {
                out.data[r * idx.len() + k] = self.get(r, c);
            }
        }
        out
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.p, idx.len(), self.cols);
        for (k, &r) in idx.iter().enumerate() {
            out.data[k * self.cols..(k + 1) * self.cols].copy_from_slice(self.row(r));
        }
        out
    }

    /// Reduced row echelon form and pivot columns.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let p = self.p;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut prow = 0;
        for c in 0..cols {
            if prow == self.rows {
                break;
            }
            let Some(sel) = (prow..self.rows).find(|&r| self.data[r * cols + c] != 0) else {
                continue;
            };
            if sel != prow {
                for k in 0..cols {
                    self.data.swap(sel * cols + k, prow * cols + k);
                }
            }
            let inv = inv_mod(self.data[prow * cols + c], p);
            for k in c..cols {
                let idx = prow * cols + k;
                self.data[idx] = self.data[idx] * inv % p;
            }
            let pivot_row: Vec<u64> = self.data[prow * cols + c..(prow + 1) * cols].to_vec();
            for r in 0..self.rows {
                if r == prow {
                    continue;
                }
                let f = self.data[r * cols + c];
                if f == 0 {
                    continue;
                }
                let neg = p - f;
                let row = &mut self.data[r * cols + c..(r + 1) * cols];
                for (x, &y) in row.iter_mut().zip(&pivot_row) {
                    if y != 0 {
                        *x = (*x + neg * y) % p;
                    }
                }
            }
            pivots.push(c);
            prow += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        // Eliminate on the smaller orientation.
        if self.rows > self.cols {
            let mut e = RowEchelon::new(self.p, self.rows);
            for c in 0..self.cols {
                e.insert(&self.column(c));
            }
            e.rank()
        } else {
            let mut e = RowEchelon::new(self.p, self.cols);
            for r in 0..self.rows {
                e.insert(self.row(r));
            }
            e.rank()
        }
    }

    /// Basis of the kernel as the columns of the returned matrix.
    pub fn kernel(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(self.p, self.cols, free.len());
        for (j, &f) in free.iter().enumerate() {
            k.set(f, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                let v = r.get(i, f);
                if v != 0 {
                    k.set(pc, j, self.p - v);
                }
            }
        }
        k
    }

    /// Basis of the column space (a subset of the original columns).
    pub fn column_space(&self) -> Matrix {
        let mut e = RowEchelon::new(self.p, self.rows);
        let mut keep = Vec::new();
        for c in 0..self.cols {
            if e.insert(&self.column(c)) {
                keep.push(c);
            }
        }
        self.select_columns(&keep)
    }

    /// Solves `self * X = rhs`, returning some solution if one exists.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows);
        let aug = self.hstack(rhs);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.p, self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, r.get(i, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Matrix::identity(self.p, self.rows))?;
        (self.mul(&x).is_identity()).then_some(x)
    }

    /// Matrix power by repeated squaring.
    pub fn pow(&self, mut e: u64) -> Matrix {
        assert_eq!(self.rows, self.cols);
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.p, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Entries as a dense list of rows.
    pub fn to_rows(&self) -> Vec<Vec<u64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }
}

/// Incrementally maintained echelon basis of a row space.
///
/// Each stored row has a leading 1 at its pivot and zeros at the pivots of
/// all earlier rows, so reduction of a new vector is a single pass.
#[derive(Clone, Debug)]
pub struct RowEchelon {
    p: u64,
    width: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl RowEchelon {
    pub fn new(p: u64, width: usize) -> Self {
        RowEchelon {
            p,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    /// Reduces `v` against the stored rows and returns the remainder.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        let p = self.p;
        let mut v: Vec<u64> = v.iter().map(|&x| x % p).collect();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let f = v[pc];
            if f == 0 {
                continue;
            }
            let neg = p - f;
            for (x, &y) in v.iter_mut().zip(row).skip(pc) {
                if y != 0 {
                    *x = (*x + neg * y) % p;
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u64]) -> bool {
        assert_eq!(v.len(), self.width);
        let mut r = self.reduce(v);
        let Some(pc) = r.iter().position(|&x| x != 0) else {
            return false;
        };
        let p = self.p;
        let inv = inv_mod(r[pc], p);
        for x in r.iter_mut() {
            *x = *x * inv % p;
        }
        self.rows.push(r);
        self.pivots.push(pc);
        true
    }

    /// The stored basis as the rows of a `rank x width` matrix.
    pub fn basis_rows(&self) -> Matrix {
        let mut m = Matrix::zeros(self.p, self.rows.len(), self.width);
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &v) in row.iter().enumerate() {
                m.set(r, c, v);
            }
        }
        m
    }

    /// The stored basis as matrix columns.
    pub fn basis_columns(&self) -> Matrix {
        Matrix::from_columns(self.p, self.width, &self.rows)
    }
}

/// A quotient `V / W` with an explicit projection and section.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuotientPresentation {
    pub ambient_dim: usize,
    /// Basis of `W` as columns.
    pub relation_basis: Matrix,
    /// `V -> V/W`.
    pub projection: LinearMap,
    /// `V/W -> V`, with `projection * section = id`.
    pub section: LinearMap,
}

impl QuotientPresentation {
    /// Quotient of the ambient space by the span of the given columns.
    pub fn by_span(p: u64, ambient_dim: usize, relations: &Matrix) -> Self {
        assert_eq!(relations.rows(), ambient_dim);
        let basis = relations.column_space();
        let r = basis.cols();
        let mut e = RowEchelon::new(p, ambient_dim);
        for c in 0..r {
            e.insert(&basis.column(c));
        }
        let mut complement = Vec::new();
        for i in 0..ambient_dim {
            let mut unit = vec![0; ambient_dim];
            unit[i] = 1;
            if e.insert(&unit) {
                complement.push(i);
            }
        }
        let q = complement.len();
        let mut section = Matrix::zeros(p, ambient_dim, q);
        for (k, &i) in complement.iter().enumerate() {
            section.set(i, k, 1);
        }
        let full = basis.hstack(&section);
        let inv = full.inverse().expect("relation basis plus complement spans");
        let tail: Vec<usize> = (r..ambient_dim).collect();
        let projection = inv.select_rows(&tail);
        QuotientPresentation {
            ambient_dim,
            relation_basis: basis,
            projection,
            section,
        }
    }

    pub fn quotient_dim(&self) -> usize {
        self.projection.rows()
    }

    pub fn relation_dim(&self) -> usize {
        self.relation_basis.cols()
    }

    /// Induced endomorphism on the quotient, if `f` preserves the relations.
    pub fn descend_endomorphism(&self, f: &LinearMap) -> Option<LinearMap> {
        if !self.projection.mul(f).mul(&self.relation_basis).is_zero() {
            return None;
        }
        Some(self.projection.mul(f).mul(&self.section))
    }
}

/// Kernel of `f` as a list of basis vectors.
pub fn kernel_basis(f: &LinearMap) -> Vec<Vec<u64>> {
    f.kernel().columns()
}

/// The coequalizer of two parallel maps: codomain modulo `Im(f - g)`.
pub fn coequalizer(f: &LinearMap, g: &LinearMap) -> Result<QuotientPresentation> {
    let diff = f.try_sub(g)?;
    Ok(QuotientPresentation::by_span(
        f.characteristic(),
        f.rows(),
        &diff,
    ))
}

pub fn tensor_map(f: &LinearMap, g: &LinearMap) -> LinearMap {
    f.kron(g)
}

/// Permutation matrix reordering tensor factors.
///
/// `dims` lists the factor dimensions of the source `V_0 (x) ... (x) V_{k-1}`;
/// the target is `V_{order[0]} (x) ... (x) V_{order[k-1]}`.
pub fn tensor_permutation(p: u64, dims: &[usize], order: &[usize]) -> Matrix {
    assert_eq!(dims.len(), order.len());
    let total: usize = dims.iter().product();
    let target_dims: Vec<usize> = order.iter().map(|&i| dims[i]).collect();
    let mut m = Matrix::zeros(p, total, total);
    let mut idx = vec![0usize; dims.len()];
    for src in 0..total {
        let mut rem = src;
        for k in (0..dims.len()).rev() {
            idx[k] = rem % dims[k];
            rem /= dims[k];
        }
        let mut tgt = 0;
        for (k, &o) in order.iter().enumerate() {
            tgt = tgt * target_dims[k] + idx[o];
        }
        m.set(tgt, src, 1);
    }
    m
}
