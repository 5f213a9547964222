//! Absolute order unit space calculus on finite-dimensional matrix models.
//!
//! Elements of the space are Hermitian matrices, the order unit is the
//! identity and the absolute value is `|a| = (a*a)^{1/2}`. On top of that the
//! crate provides the derived meet/join operations, orthogonality and
//! compatibility predicates, order projections and their compressions,
//! spectral families, and a randomized harness that checks the structural
//! identities of the theory on seeded samples.
//!
//! Every predicate returns a residual next to its verdict; verdicts compare
//! the residual with a threshold derived from a [`ToleranceProfile`].
//!
//! ```
//! use aous::{abs_value, HermitianMatrix, ToleranceProfile};
//!
//! let tol = ToleranceProfile::default();
//! let a = HermitianMatrix::from_real_rows(&[&[0.0, 2.0], &[2.0, 0.0]]).unwrap();
//! let abs = abs_value(&a, &tol).unwrap();
//! assert!((&abs - &HermitianMatrix::identity(2).scale(2.0)).frobenius_norm() < 1e-12);
//! ```

pub mod calculus;
pub mod cli;
pub mod eigen;
pub mod error;
pub mod format;
pub mod harness;
pub mod matrix;
pub mod models;
pub mod order;
pub mod projections;
pub mod spectral;
pub mod tolerance;

pub use calculus::{apply_function, is_psd, leq, norm, op_norm, NormKind, PsdVerdict};
pub use eigen::{eigh, EigenDecomposition};
pub use error::{Error, Result};
pub use matrix::{DenseMatrix, HermitianMatrix};
pub use models::{SampleKind, SampleRecipe};
pub use order::{abs_value, join, meet, pos_neg_parts, ModelContext, ModelKind, OrthoVerdict};
pub use projections::{OrderProjection, PDecomposition};
pub use spectral::{SpectralFamily, SpectralGrid};
pub use tolerance::ToleranceProfile;
