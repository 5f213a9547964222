//! Cyclic Jacobi eigensolver for complex Hermitian matrices.
//!
//! Each rotation first removes the phase of the pivot `a_pq` with a diagonal
//! unitary, then applies the classical real Jacobi rotation to the resulting
//! real symmetric 2×2 block. Sweeps continue until the off-diagonal
//! Frobenius mass stops shrinking or drops to rounding level; convergence is
//! declared when it is below `eig_tol * ‖H‖_F`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, HermitianMatrix};
use crate::tolerance::ToleranceProfile;

pub const MAX_SWEEPS: usize = 100;

/// Eigenvalues in nondecreasing order with a unitary whose columns are the
/// matching eigenvectors.
#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    pub eigenvalues: Vec<f64>,
    pub basis: DenseMatrix,
}

impl EigenDecomposition {
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    /// `U diag(values) U*`.
    pub fn reconstruct_with(&self, values: &[f64]) -> HermitianMatrix {
        assert_eq!(values.len(), self.dim());
        spectral_sum(&self.basis, values)
    }

    pub fn reconstruct(&self) -> HermitianMatrix {
        self.reconstruct_with(&self.eigenvalues)
    }

    /// Orthogonal projection onto the eigenvectors selected by `keep`.
    pub fn spectral_projection(&self, keep: impl Fn(f64) -> bool) -> HermitianMatrix {
        let weights: Vec<f64> = self
            .eigenvalues
            .iter()
            .map(|&l| if keep(l) { 1.0 } else { 0.0 })
            .collect();
        self.reconstruct_with(&weights)
    }

    /// `‖U diag(λ) U* − H‖_F`.
    pub fn reconstruction_residual(&self, h: &HermitianMatrix) -> f64 {
        (&self.reconstruct() - h).frobenius_norm()
    }

    /// `‖U*U − I‖_F`.
    pub fn unitarity_residual(&self) -> f64 {
        let n = self.dim();
        let gram = self.basis.adjoint().matmul(&self.basis);
        (&gram - &DenseMatrix::identity(n)).frobenius_norm()
    }
}

/// `Σ_k values[k] u_k u_k*` over the columns `u_k` of `basis`.
pub fn spectral_sum(basis: &DenseMatrix, values: &[f64]) -> HermitianMatrix {
    let n = basis.dim();
    let mut out = DenseMatrix::zeros(n);
    for (k, &lambda) in values.iter().enumerate() {
        if lambda == 0.0 {
            continue;
        }
        for i in 0..n {
            let uik = basis[(i, k)] * lambda;
            if uik == Complex64::new(0.0, 0.0) {
                continue;
            }
            for j in i..n {
                out[(i, j)] += uik * basis[(j, k)].conj();
            }
        }
    }
    for i in 0..n {
        for j in 0..i {
            out[(i, j)] = out[(j, i)].conj();
        }
    }
    HermitianMatrix::symmetrize(&out)
}

fn off_diagonal_mass(a: &DenseMatrix) -> f64 {
    let n = a.dim();
    let mut s = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                s += a[(i, j)].norm_sqr();
            }
        }
    }
    s.sqrt()
}

/// Diagonalizes `h`.
pub fn eigh(h: &HermitianMatrix, tol: &ToleranceProfile) -> Result<EigenDecomposition> {
    let n = h.dim();
    let mut a = h.as_dense().clone();
    let mut v = DenseMatrix::identity(n);
    let scale = h.frobenius_norm();
    let converged_at = tol.eig_tol * scale;
    let floor = f64::EPSILON * scale;

    let mut off = off_diagonal_mass(&a);
    let mut sweeps = 0;
    while off > floor && sweeps < MAX_SWEEPS {
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
        let next = off_diagonal_mass(&a);
        // Quadratic convergence has stalled at rounding level.
        if next >= off && next <= converged_at {
            off = next;
            break;
        }
        off = next;
    }
    if off > converged_at {
        return Err(Error::NoConvergence {
            sweeps,
            off_diagonal: off,
        });
    }

    let mut order: Vec<usize> = (0..n).collect();
    let diag: Vec<f64> = (0..n).map(|i| a[(i, i)].re).collect();
    order.sort_by(|&i, &j| diag[i].total_cmp(&diag[j]));
    let eigenvalues = order.iter().map(|&i| diag[i]).collect();
    let basis = DenseMatrix::from_fn(n, |i, j| v[(i, order[j])]);
    Ok(EigenDecomposition { eigenvalues, basis })
}

/// `eigh` under the default tolerance profile.
pub fn eigh_default(h: &HermitianMatrix) -> Result<EigenDecomposition> {
    eigh(h, &ToleranceProfile::default())
}

fn rotate(a: &mut DenseMatrix, v: &mut DenseMatrix, p: usize, q: usize) {
    let apq = a[(p, q)];
    let r = apq.norm();
    if r == 0.0 {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    // Pivot negligible next to both diagonal entries.
    if app.abs() + 100.0 * r == app.abs() && aqq.abs() + 100.0 * r == aqq.abs() {
        a[(p, q)] = Complex64::new(0.0, 0.0);
        a[(q, p)] = Complex64::new(0.0, 0.0);
        return;
    }
    let phase = apq / r;
    let theta = (aqq - app) / (2.0 * r);
    let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;

    // U restricted to (p, q): [[c, s], [-s e^{-iφ}, c e^{-iφ}]].
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = -phase.conj() * s;
    let u_qq = phase.conj() * c;

    let n = a.dim();
    for k in 0..n {
        let akp = a[(k, p)];
        let akq = a[(k, q)];
        a[(k, p)] = akp * u_pp + akq * u_qp;
        a[(k, q)] = akp * u_pq + akq * u_qq;
    }
    for k in 0..n {
        let apk = a[(p, k)];
        let aqk = a[(q, k)];
        a[(p, k)] = u_pp.conj() * apk + u_qp.conj() * aqk;
        a[(q, k)] = u_pq.conj() * apk + u_qq.conj() * aqk;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);

    for k in 0..n {
        let vkp = v[(k, p)];
        let vkq = v[(k, q)];
        v[(k, p)] = vkp * u_pp + vkq * u_qp;
        v[(k, q)] = vkp * u_pq + vkq * u_qq;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::models::{generate_single, SampleKind, SampleRecipe};

    #[test]
    fn diagonal_input_sorts_with_permutation_basis() {
        let h = HermitianMatrix::diag(&[3.0, 1.0, 2.0]);
        let e = eigh_default(&h).unwrap();
        assert_eq!(e.eigenvalues, vec![1.0, 2.0, 3.0]);
        // Column 0 is e_1 (the eigenvalue-1 direction), exactly.
        assert_eq!(e.basis[(1, 0)], Complex64::new(1.0, 0.0));
        assert_eq!(e.basis[(0, 2)], Complex64::new(1.0, 0.0));
    }

    #[test]
    fn swap_matrix_has_eigenvalues_pm_one() {
        let h = HermitianMatrix::from_real_rows(&[&[0.0, 1.0], &[1.0, 0.0]]).unwrap();
        let e = eigh_default(&h).unwrap();
        assert!((e.eigenvalues[0] + 1.0).abs() < 1e-15);
        assert!((e.eigenvalues[1] - 1.0).abs() < 1e-15);
    }

    #[test]
    fn identity_has_unit_spectrum() {
        let e = eigh_default(&HermitianMatrix::identity(5)).unwrap();
        assert!(e.eigenvalues.iter().all(|&l| l == 1.0));
        assert!(e.unitarity_residual() < 1e-14);
    }

    #[test]
    fn complex_two_by_two_matches_closed_form() {
        // [[a, b], [b̄, d]]: λ = (a+d)/2 ± sqrt(((a−d)/2)² + |b|²)
        let (a, d) = (1.5, -0.5);
        let b = Complex64::new(0.3, -0.7);
        let h = HermitianMatrix::new(2, vec![Complex64::new(a, 0.0), b, b.conj(), Complex64::new(d, 0.0)]).unwrap();
        let e = eigh_default(&h).unwrap();
        let mid = (a + d) / 2.0;
        let rad = (((a - d) / 2.0).powi(2) + b.norm_sqr()).sqrt();
        assert!((e.eigenvalues[0] - (mid - rad)).abs() < 1e-14);
        assert!((e.eigenvalues[1] - (mid + rad)).abs() < 1e-14);
    }

    #[test]
    fn random_hermitian_residuals_within_eig_tol() {
        let tol = ToleranceProfile::default();
        for seed in 0..200u64 {
            let n = 1 + (seed as usize % 16);
            let h = generate_single(&SampleRecipe::new(SampleKind::RandomHermitian, n, seed)).unwrap();
            let e = eigh(&h, &tol).unwrap();
            let scale = h.frobenius_norm().max(1.0);
            assert!(e.reconstruction_residual(&h) <= tol.eig_tol * scale, "seed {seed}");
            assert!(e.unitarity_residual() <= tol.eig_tol, "seed {seed}");
            assert!(e.eigenvalues.windows(2).all(|w| w[0] <= w[1]));
        }
    }
}
