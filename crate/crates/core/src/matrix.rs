//! Dense complex matrices and the validated Hermitian carrier type.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::MatrixDoc;

/// Largest entrywise asymmetry tolerated when symmetrizing user input.
pub const ASYMMETRY_LIMIT: f64 = 1e-6;

/// General square complex matrix, row-major.
///
/// Products of Hermitian matrices land here; the Hermitian type is reserved
/// for elements of the self-adjoint part.
#[derive(Clone, PartialEq)]
pub struct DenseMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl DenseMatrix {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![Complex64::new(0.0, 0.0); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            m[(i, i)] = Complex64::new(1.0, 0.0);
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                data.push(f(i, j));
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn adjoint(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self[(j, i)].conj())
    }

    pub fn matmul(&self, other: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, other.dim, "matmul dimension mismatch");
        let n = self.dim;
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.data[i * n + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * other.data[k * n + j];
                }
            }
        }
        out
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Spectral norm, computed as the square root of the top eigenvalue of `M*M`.
    pub fn operator_norm(&self) -> Result<f64> {
        let gram = HermitianMatrix::symmetrize(&self.adjoint().matmul(self));
        let eig = crate::eigen::eigh_default(&gram)?;
        Ok(eig.eigenvalues.last().copied().unwrap_or(0.0).max(0.0).sqrt())
    }

    pub fn column(&self, j: usize) -> Vec<Complex64> {
        (0..self.dim).map(|i| self[(i, j)]).collect()
    }
}

impl std::ops::Index<(usize, usize)> for DenseMatrix {
    type Output = Complex64;
    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.dim + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for DenseMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Complex64 {
        &mut self.data[i * self.dim + j]
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;
    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim);
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;
    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        assert_eq!(self.dim, rhs.dim);
        DenseMatrix {
            dim: self.dim,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl fmt::Debug for DenseMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("DenseMatrix")
            .field("dim", &self.dim)
            .field("data", &self.data)
            .finish()
    }
}

/// An n×n complex Hermitian matrix, an element of the self-adjoint part.
///
/// Construction symmetrizes the input as `(H + H*)/2`, so `h[i][j]` is the
/// exact conjugate of `h[j][i]` and the diagonal is exactly real. Input whose
/// asymmetry exceeds [`ASYMMETRY_LIMIT`] is rejected.
#[derive(Clone, PartialEq, Serialize, Deserialize)]
#[serde(into = "MatrixDoc", try_from = "MatrixDoc")]
pub struct HermitianMatrix {
    inner: DenseMatrix,
}

impl HermitianMatrix {
    /// Validates and symmetrizes a row-major complex array.
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyMatrix);
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim,
                actual: entries.len(),
            });
        }
        let raw = DenseMatrix { dim, data: entries };
        for i in 0..dim {
            for j in 0..dim {
                let z = raw[(i, j)];
                if !z.re.is_finite() || !z.im.is_finite() {
                    return Err(Error::NonFinite { row: i, col: j });
                }
            }
        }
        let residual = asymmetry(&raw);
        if residual > ASYMMETRY_LIMIT {
            return Err(Error::NotHermitian {
                residual,
                limit: ASYMMETRY_LIMIT,
            });
        }
        Ok(Self::symmetrize(&raw))
    }

    /// Builds from separate real and imaginary row arrays.
    pub fn from_parts(re: &[Vec<f64>], im: &[Vec<f64>]) -> Result<Self> {
        let dim = re.len();
        if im.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: im.len(),
            });
        }
        let mut entries = Vec::with_capacity(dim * dim);
        for (r, i) in re.iter().zip(im) {
            if r.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: r.len(),
                });
            }
            if i.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: i.len(),
                });
            }
            entries.extend(r.iter().zip(i).map(|(&a, &b)| Complex64::new(a, b)));
        }
        Self::new(dim, entries)
    }

    pub fn from_real_rows(rows: &[&[f64]]) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    actual: row.len(),
                });
            }
            entries.extend(row.iter().map(|&x| Complex64::new(x, 0.0)));
        }
        Self::new(dim, entries)
    }

    pub fn diag(values: &[f64]) -> Self {
        let n = values.len();
        assert!(n > 0, "diagonal matrix needs at least one entry");
        let mut m = DenseMatrix::zeros(n);
        for (i, &v) in values.iter().enumerate() {
            m[(i, i)] = Complex64::new(v, 0.0);
        }
        Self { inner: m }
    }

    pub fn identity(dim: usize) -> Self {
        Self {
            inner: DenseMatrix::identity(dim),
        }
    }

    pub fn zeros(dim: usize) -> Self {
        Self {
            inner: DenseMatrix::zeros(dim),
        }
    }

    /// `(M + M*)/2` without an asymmetry check; for internal products that
    /// are Hermitian in exact arithmetic.
    pub fn symmetrize(m: &DenseMatrix) -> Self {
        let n = m.dim();
        let mut out = DenseMatrix::zeros(n);
        for i in 0..n {
            out[(i, i)] = Complex64::new(m[(i, i)].re, 0.0);
            for j in (i + 1)..n {
                let z = (m[(i, j)] + m[(j, i)].conj()) * 0.5;
                out[(i, j)] = z;
                out[(j, i)] = z.conj();
            }
        }
        Self { inner: out }
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.inner[(i, j)]
    }

    pub fn as_dense(&self) -> &DenseMatrix {
        &self.inner
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.dim()).map(|i| self.inner[(i, i)].re).collect()
    }

    pub fn is_diagonal(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..n).all(|j| i == j || self.inner[(i, j)] == Complex64::new(0.0, 0.0)))
    }

    /// Real and imaginary parts as nested rows.
    pub fn to_parts(&self) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
        let n = self.dim();
        let re = (0..n)
            .map(|i| (0..n).map(|j| self.inner[(i, j)].re).collect())
            .collect();
        let im = (0..n)
            .map(|i| (0..n).map(|j| self.inner[(i, j)].im).collect())
            .collect();
        (re, im)
    }

    pub fn scale(&self, k: f64) -> Self {
        Self {
            inner: DenseMatrix {
                dim: self.dim(),
                data: self.inner.data.iter().map(|z| z * k).collect(),
            },
        }
    }

    /// Ordinary (generally non-Hermitian) product.
    pub fn matmul(&self, other: &HermitianMatrix) -> DenseMatrix {
        self.inner.matmul(&other.inner)
    }

    /// Jordan product `(ab + ba)/2`.
    pub fn jordan(&self, other: &HermitianMatrix) -> HermitianMatrix {
        let ab = self.matmul(other);
        let ba = other.matmul(self);
        let mut sum = &ab + &ba;
        for z in sum.data.iter_mut() {
            *z *= 0.5;
        }
        Self::symmetrize(&sum)
    }

    /// `ab - ba`.
    pub fn commutator(&self, other: &HermitianMatrix) -> DenseMatrix {
        &self.matmul(other) - &other.matmul(self)
    }

    /// Compression `p h p`.
    pub fn compress(&self, p: &HermitianMatrix) -> HermitianMatrix {
        let php = p.inner.matmul(&self.inner).matmul(&p.inner);
        Self::symmetrize(&php)
    }

    /// Conjugation `U h U*` by an arbitrary square matrix.
    pub fn conjugate_by(&self, u: &DenseMatrix) -> HermitianMatrix {
        Self::symmetrize(&u.matmul(&self.inner).matmul(&u.adjoint()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.inner.frobenius_norm()
    }

    pub fn max_abs_entry(&self) -> f64 {
        self.inner.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim()).map(|i| self.inner[(i, i)].re).sum()
    }

    pub fn check_same_dim(&self, other: &HermitianMatrix) -> Result<()> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                actual: other.dim(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &HermitianMatrix) -> Result<HermitianMatrix> {
        self.check_same_dim(other)?;
        Ok(self + other)
    }

    pub fn try_sub(&self, other: &HermitianMatrix) -> Result<HermitianMatrix> {
        self.check_same_dim(other)?;
        Ok(self - other)
    }
}

fn asymmetry(m: &DenseMatrix) -> f64 {
    let n = m.dim();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in i..n {
            worst = worst.max((m[(i, j)] - m[(j, i)].conj()).norm());
        }
    }
    worst
}

impl Add for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn add(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        HermitianMatrix {
            inner: &self.inner + &rhs.inner,
        }
    }
}

impl Sub for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn sub(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        HermitianMatrix {
            inner: &self.inner - &rhs.inner,
        }
    }
}

impl Neg for &HermitianMatrix {
    type Output = HermitianMatrix;
    fn neg(self) -> HermitianMatrix {
        self.scale(-1.0)
    }
}

impl Mul<&HermitianMatrix> for f64 {
    type Output = HermitianMatrix;
    fn mul(self, rhs: &HermitianMatrix) -> HermitianMatrix {
        rhs.scale(self)
    }
}

impl fmt::Debug for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        writeln!(f, "HermitianMatrix({n}x{n})")?;
        for i in 0..n {
            let row: Vec<String> = (0..n)
                .map(|j| {
                    let z = self.inner[(i, j)];
                    if z.im == 0.0 {
                        format!("{:.6}", z.re)
                    } else {
                        format!("{:.6}{:+.6}i", z.re, z.im)
                    }
                })
                .collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn construction_symmetrizes_exactly() {
        let h = HermitianMatrix::new(2, vec![c(1.0, 1e-9), c(0.5, 0.25), c(0.5, -0.25 + 4e-7), c(2.0, 0.0)]).unwrap();
        assert_eq!(h.get(0, 0).im, 0.0);
        assert_eq!(h.get(0, 1), h.get(1, 0).conj());
    }

    #[test]
    fn rejects_asymmetric_input() {
        let err = HermitianMatrix::new(2, vec![c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0), c(1.0, 0.0)]).unwrap_err();
        assert!(matches!(err, Error::NotHermitian { .. }));
    }

    #[test]
    fn rejects_nan_and_empty() {
        assert!(matches!(
            HermitianMatrix::new(1, vec![c(f64::NAN, 0.0)]).unwrap_err(),
            Error::NonFinite { .. }
        ));
        assert!(matches!(
            HermitianMatrix::new(0, vec![]).unwrap_err(),
            Error::EmptyMatrix
        ));
    }

    #[test]
    fn jordan_product_of_commuting_diagonals() {
        let a = HermitianMatrix::diag(&[2.0, 3.0]);
        let b = HermitianMatrix::diag(&[5.0, -1.0]);
        assert_eq!(a.jordan(&b), HermitianMatrix::diag(&[10.0, -3.0]));
    }

    #[test]
    fn dimension_mismatch_is_reported() {
        let a = HermitianMatrix::identity(2);
        let b = HermitianMatrix::identity(3);
        assert!(matches!(a.try_add(&b), Err(Error::DimensionMismatch { .. })));
    }
}
