//! Seeded generators for the hypothesis classes the checks need.
//!
//! Every generator draws from a [`ChaCha8Rng`], so a `(kind, dim, seed)`
//! recipe reproduces the same matrices bit for bit on every platform.
//! Structured samples are built as `U diag(λ) U*` over a random basis; pass a
//! permutation basis instead of a unitary one to stay inside the diagonal
//! model.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::{Rng as _, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::calculus::{is_psd, op_norm};
use crate::eigen::{eigh, spectral_sum};
use crate::error::{Error, Result};
use crate::matrix::{DenseMatrix, HermitianMatrix};
use crate::tolerance::ToleranceProfile;

pub type Rng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-trial seed: `seed` XOR a hash of `index`.
pub fn derive_seed(seed: u64, index: u64) -> u64 {
    seed ^ splitmix64(index)
}

/// Seed derived from a label, for independent streams per case and context.
pub fn seed_for_label(seed: u64, label: &str) -> u64 {
    let h = label.bytes().fold(0xcbf2_9ce4_8422_2325_u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    });
    derive_seed(seed, h)
}

fn normal(rng: &mut Rng) -> f64 {
    rng.sample(StandardNormal)
}

/// I.i.d. standard normal real and imaginary parts, then `(G + G*)/2`.
pub fn random_hermitian(rng: &mut Rng, n: usize) -> HermitianMatrix {
    let g = random_gaussian(rng, n);
    HermitianMatrix::symmetrize(&g)
}

fn random_gaussian(rng: &mut Rng, n: usize) -> DenseMatrix {
    DenseMatrix::from_fn(n, |_, _| {
        let re = normal(rng);
        let im = normal(rng);
        Complex64::new(re, im)
    })
}

/// Real Gaussian diagonal.
pub fn random_diagonal(rng: &mut Rng, n: usize) -> HermitianMatrix {
    let values: Vec<f64> = (0..n).map(|_| normal(rng)).collect();
    HermitianMatrix::diag(&values)
}

/// `G*G / ‖G*G‖`, so the result lies in `[0, e]` with norm one.
pub fn random_psd(rng: &mut Rng, n: usize) -> HermitianMatrix {
    let g = random_gaussian(rng, n);
    let gg = HermitianMatrix::symmetrize(&g.adjoint().matmul(&g));
    let norm = op_norm(&gg, &ToleranceProfile::default()).unwrap_or(1.0);
    if norm > 0.0 {
        gg.scale(1.0 / norm)
    } else {
        gg
    }
}

/// Eigenbasis of a random Hermitian matrix.
pub fn random_unitary(rng: &mut Rng, n: usize) -> DenseMatrix {
    let h = random_hermitian(rng, n);
    match eigh(&h, &ToleranceProfile::default()) {
        Ok(e) => e.basis,
        Err(_) => DenseMatrix::identity(n),
    }
}

pub fn random_permutation(rng: &mut Rng, n: usize) -> DenseMatrix {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    DenseMatrix::from_fn(n, |i, j| {
        if order[j] == i {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

/// Random unitary, or a random permutation when `diagonal` is set.
pub fn random_basis(rng: &mut Rng, n: usize, diagonal: bool) -> DenseMatrix {
    if diagonal {
        random_permutation(rng, n)
    } else {
        random_unitary(rng, n)
    }
}

pub fn uniform_values(rng: &mut Rng, n: usize, lo: f64, hi: f64) -> Vec<f64> {
    (0..n).map(|_| rng.random_range(lo..=hi)).collect()
}

/// `U diag(values) U*`.
pub fn with_spectrum(basis: &DenseMatrix, values: &[f64]) -> HermitianMatrix {
    spectral_sum(basis, values)
}

/// Projection onto the first `rank` columns of `basis`.
pub fn basis_projection(basis: &DenseMatrix, rank: usize) -> HermitianMatrix {
    let values: Vec<f64> = (0..basis.dim()).map(|k| if k < rank { 1.0 } else { 0.0 }).collect();
    with_spectrum(basis, &values)
}

/// Projection onto the columns of `basis` selected by `mask`.
pub fn masked_projection(basis: &DenseMatrix, mask: &[bool]) -> HermitianMatrix {
    let values: Vec<f64> = mask.iter().map(|&m| if m { 1.0 } else { 0.0 }).collect();
    with_spectrum(basis, &values)
}

pub fn random_unit_interval(rng: &mut Rng, basis: &DenseMatrix) -> HermitianMatrix {
    let values = uniform_values(rng, basis.dim(), 0.0, 1.0);
    with_spectrum(basis, &values)
}

/// Two elements of `[0, e]` sharing the eigenbasis `basis`.
pub fn commuting_pair(rng: &mut Rng, basis: &DenseMatrix) -> (HermitianMatrix, HermitianMatrix) {
    let n = basis.dim();
    let a = uniform_values(rng, n, 0.0, 1.0);
    let b = uniform_values(rng, n, 0.0, 1.0);
    (with_spectrum(basis, &a), with_spectrum(basis, &b))
}

/// Splits the spectral pieces of a random PSD element into two nonempty
/// groups. Requires `dim ≥ 2`.
pub fn orthogonal_support_pair(rng: &mut Rng, basis: &DenseMatrix) -> (HermitianMatrix, HermitianMatrix) {
    let n = basis.dim();
    assert!(n >= 2, "orthogonal support pair needs dim >= 2");
    let values = uniform_values(rng, n, 0.05, 1.0);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let cut = rng.random_range(1..n);
    let mut a = vec![0.0; n];
    let mut b = vec![0.0; n];
    for (pos, &k) in order.iter().enumerate() {
        if pos < cut {
            a[k] = values[k];
        } else {
            b[k] = values[k];
        }
    }
    (with_spectrum(basis, &a), with_spectrum(basis, &b))
}

/// A rank-`rank` projection `p` and an element of `[0, e]` that is block
/// diagonal with respect to `p` and `e − p`. With `diagonal` set the blocks
/// are diagonal too.
pub fn block_compatible(
    rng: &mut Rng,
    basis: &DenseMatrix,
    rank: usize,
    diagonal: bool,
) -> (HermitianMatrix, HermitianMatrix) {
    let n = basis.dim();
    let p = basis_projection(basis, rank);
    let top = if rank > 0 {
        let inner = random_basis(rng, rank, diagonal);
        Some(random_unit_interval(rng, &inner))
    } else {
        None
    };
    let bottom = if rank < n {
        let inner = random_basis(rng, n - rank, diagonal);
        Some(random_unit_interval(rng, &inner))
    } else {
        None
    };
    let block = match (top, bottom) {
        (Some(t), Some(b)) => direct_sum(&t, &b),
        (Some(t), None) => t,
        (None, Some(b)) => b,
        (None, None) => unreachable!("dimension is positive"),
    };
    (p, block.conjugate_by(basis))
}

/// Block-diagonal `a ⊕ b`.
pub fn direct_sum(a: &HermitianMatrix, b: &HermitianMatrix) -> HermitianMatrix {
    let (na, nb) = (a.dim(), b.dim());
    let m = DenseMatrix::from_fn(na + nb, |i, j| {
        if i < na && j < na {
            a.get(i, j)
        } else if i >= na && j >= na {
            b.get(i - na, j - na)
        } else {
            Complex64::new(0.0, 0.0)
        }
    });
    HermitianMatrix::symmetrize(&m)
}

/// The commutative sub-model: a real diagonal matrix.
pub fn diagonal_embed(values: &[f64]) -> Result<HermitianMatrix> {
    if values.is_empty() {
        return Err(Error::EmptyMatrix);
    }
    if let Some(i) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::NonFinite { row: i, col: i });
    }
    Ok(HermitianMatrix::diag(values))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum SampleKind {
    RandomHermitian,
    RandomPsd,
    UnitInterval,
    Projection { rank: usize },
    CommutingPair,
    OrthogonalSupportPair,
    BlockCompatible { rank: usize },
    Diagonal,
}

impl SampleKind {
    pub fn name(&self) -> &'static str {
        match self {
            SampleKind::RandomHermitian => "random-hermitian",
            SampleKind::RandomPsd => "random-psd",
            SampleKind::UnitInterval => "unit-interval",
            SampleKind::Projection { .. } => "projection",
            SampleKind::CommutingPair => "commuting-pair",
            SampleKind::OrthogonalSupportPair => "orthogonal-support-pair",
            SampleKind::BlockCompatible { .. } => "block-compatible",
            SampleKind::Diagonal => "diagonal",
        }
    }

    pub fn is_pair(&self) -> bool {
        matches!(
            self,
            SampleKind::CommutingPair | SampleKind::OrthogonalSupportPair | SampleKind::BlockCompatible { .. }
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SampleRecipe {
    pub kind: SampleKind,
    pub dim: usize,
    pub seed: u64,
}

impl SampleRecipe {
    pub fn new(kind: SampleKind, dim: usize, seed: u64) -> Self {
        Self { kind, dim, seed }
    }

    pub fn validate(&self) -> Result<()> {
        if self.dim == 0 {
            return Err(Error::InvalidRecipe("dim must be at least 1".into()));
        }
        match self.kind {
            SampleKind::Projection { rank } | SampleKind::BlockCompatible { rank } if rank > self.dim => {
                Err(Error::InvalidRecipe(format!("rank {rank} exceeds dim {}", self.dim)))
            }
            SampleKind::OrthogonalSupportPair if self.dim < 2 => {
                Err(Error::InvalidRecipe("orthogonal-support-pair needs dim >= 2".into()))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for SampleRecipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}:{}", self.kind.name(), self.dim, self.seed)?;
        match self.kind {
            SampleKind::Projection { rank } | SampleKind::BlockCompatible { rank } => write!(f, ":{rank}"),
            _ => Ok(()),
        }
    }
}

impl FromStr for SampleRecipe {
    type Err = Error;

    /// `kind:dim:seed[:rank]`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() < 3 || parts.len() > 4 {
            return Err(Error::InvalidRecipe(format!(
                "expected kind:dim:seed[:rank], got {s:?}"
            )));
        }
        let dim: usize = parts[1]
            .parse()
            .map_err(|_| Error::InvalidRecipe(format!("bad dim {:?}", parts[1])))?;
        let seed: u64 = parts[2]
            .parse()
            .map_err(|_| Error::InvalidRecipe(format!("bad seed {:?}", parts[2])))?;
        let rank = match parts.get(3) {
            Some(r) => Some(
                r.parse::<usize>()
                    .map_err(|_| Error::InvalidRecipe(format!("bad rank {r:?}")))?,
            ),
            None => None,
        };
        let needs_rank =
            |name: &str| rank.ok_or_else(|| Error::InvalidRecipe(format!("{name} needs a rank: {name}:dim:seed:rank")));
        let kind = match parts[0] {
            "random-hermitian" => SampleKind::RandomHermitian,
            "random-psd" => SampleKind::RandomPsd,
            "unit-interval" => SampleKind::UnitInterval,
            "projection" => SampleKind::Projection {
                rank: needs_rank("projection")?,
            },
            "commuting-pair" => SampleKind::CommutingPair,
            "orthogonal-support-pair" => SampleKind::OrthogonalSupportPair,
            "block-compatible" => SampleKind::BlockCompatible {
                rank: needs_rank("block-compatible")?,
            },
            "diagonal" => SampleKind::Diagonal,
            other => return Err(Error::InvalidRecipe(format!("unknown kind {other:?}"))),
        };
        if rank.is_some() && !matches!(kind, SampleKind::Projection { .. } | SampleKind::BlockCompatible { .. }) {
            return Err(Error::InvalidRecipe(format!("{} takes no rank", kind.name())));
        }
        let recipe = SampleRecipe { kind, dim, seed };
        recipe.validate()?;
        Ok(recipe)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Sample {
    Single(HermitianMatrix),
    Pair(HermitianMatrix, HermitianMatrix),
}

impl Sample {
    pub fn matrices(&self) -> Vec<&HermitianMatrix> {
        match self {
            Sample::Single(a) => vec![a],
            Sample::Pair(a, b) => vec![a, b],
        }
    }
}

/// Generates and re-verifies a recipe's defining property.
pub fn generate(recipe: &SampleRecipe) -> Result<Sample> {
    recipe.validate()?;
    let n = recipe.dim;
    let mut rng = rng_from_seed(recipe.seed);
    let sample = match recipe.kind {
        SampleKind::RandomHermitian => Sample::Single(random_hermitian(&mut rng, n)),
        SampleKind::RandomPsd => Sample::Single(random_psd(&mut rng, n)),
        SampleKind::Diagonal => Sample::Single(random_diagonal(&mut rng, n)),
        SampleKind::UnitInterval => {
            let u = random_unitary(&mut rng, n);
            Sample::Single(random_unit_interval(&mut rng, &u))
        }
        SampleKind::Projection { rank } => {
            let u = random_unitary(&mut rng, n);
            Sample::Single(basis_projection(&u, rank))
        }
        SampleKind::CommutingPair => {
            let u = random_unitary(&mut rng, n);
            let (a, b) = commuting_pair(&mut rng, &u);
            Sample::Pair(a, b)
        }
        SampleKind::OrthogonalSupportPair => {
            let u = random_unitary(&mut rng, n);
            let (a, b) = orthogonal_support_pair(&mut rng, &u);
            Sample::Pair(a, b)
        }
        SampleKind::BlockCompatible { rank } => {
            let u = random_unitary(&mut rng, n);
            let (p, v) = block_compatible(&mut rng, &u, rank, false);
            Sample::Pair(p, v)
        }
    };
    verify(recipe, &sample)?;
    Ok(sample)
}

pub fn generate_single(recipe: &SampleRecipe) -> Result<HermitianMatrix> {
    match generate(recipe)? {
        Sample::Single(a) => Ok(a),
        Sample::Pair(..) => Err(Error::InvalidRecipe(format!("{} produces a pair", recipe.kind.name()))),
    }
}

pub fn generate_pair(recipe: &SampleRecipe) -> Result<(HermitianMatrix, HermitianMatrix)> {
    match generate(recipe)? {
        Sample::Pair(a, b) => Ok((a, b)),
        Sample::Single(_) => Err(Error::InvalidRecipe(format!(
            "{} produces a single matrix",
            recipe.kind.name()
        ))),
    }
}

fn in_unit_interval(h: &HermitianMatrix, tol: &ToleranceProfile) -> Result<bool> {
    let low = is_psd(h, tol)?.holds;
    let high = is_psd(&(&HermitianMatrix::identity(h.dim()) - h), tol)?.holds;
    Ok(low && high)
}

fn verify(recipe: &SampleRecipe, sample: &Sample) -> Result<()> {
    let tol = ToleranceProfile::default();
    let fail = |what: &str| Err(Error::SampleProperty(format!("{recipe}: {what}")));
    match (recipe.kind, sample) {
        (SampleKind::RandomPsd, Sample::Single(a)) => {
            if !is_psd(a, &tol)?.holds {
                return fail("not positive semidefinite");
            }
        }
        (SampleKind::UnitInterval, Sample::Single(a)) => {
            if !in_unit_interval(a, &tol)? {
                return fail("not inside [0, e]");
            }
        }
        (SampleKind::Projection { .. }, Sample::Single(p)) => {
            let sq = HermitianMatrix::symmetrize(&p.matmul(p));
            if (&sq - p).frobenius_norm() > tol.atol {
                return fail("not idempotent");
            }
        }
        (SampleKind::CommutingPair, Sample::Pair(a, b)) => {
            if a.commutator(b).frobenius_norm() > 1e-12 {
                return fail("pair does not commute");
            }
            if !in_unit_interval(a, &tol)? || !in_unit_interval(b, &tol)? {
                return fail("pair leaves [0, e]");
            }
        }
        (SampleKind::OrthogonalSupportPair, Sample::Pair(a, b)) => {
            if a.matmul(b).frobenius_norm() > 1e-10 {
                return fail("product does not vanish");
            }
            if op_norm(a, &tol)? == 0.0 || op_norm(b, &tol)? == 0.0 {
                return fail("zero member");
            }
        }
        (SampleKind::BlockCompatible { .. }, Sample::Pair(p, v)) => {
            let q = &HermitianMatrix::identity(p.dim()) - p;
            let rest = &(v - &v.compress(p)) - &v.compress(&q);
            if rest.frobenius_norm() > tol.atol {
                return fail("element has off-diagonal blocks");
            }
            if !in_unit_interval(v, &tol)? {
                return fail("element leaves [0, e]");
            }
        }
        _ => {}
    }
    Ok(())
}
