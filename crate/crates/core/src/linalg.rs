//! Dense real symmetric matrix algebra, the symplectic form of `N` bosonic
//! modes, and covariance-matrix validity.
//!
//! Everything here works on small dense matrices (a few hundred rows at
//! most). Eigendecompositions use cyclic Jacobi sweeps, which are slow for
//! big problems but accurate for the tiny and exactly-zero eigenvalues that
//! the frustration Hamiltonians produce in their kernels.
//!
//! Canonical operator ordering is `(Q_1, ..., Q_N, P_1, ..., P_N)` and the
//! vacuum covariance matrix is the identity.

use nalgebra::DMatrix;
use thiserror::Error;

/// Plain dense matrix used for non-symmetric intermediates.
pub type Matrix = DMatrix<f64>;

/// Relative window in which negative eigenvalues of a PSD operand are
/// treated as roundoff and clamped to zero.
pub const PSD_CLAMP_TOL: f64 = 1e-10;

/// Relative size below which a computed eigenvalue is indistinguishable from
/// an exact zero. Kernel directions of `H_±` come out of the eigensolver at
/// a few ulps of the norm; taking the square root of such noise would leak
/// `O(1e-9)` errors into energies that are otherwise exact to `1e-14`.
pub const ZERO_SNAP_TOL: f64 = 1e-13;

/// Symplectic eigenvalues below `1 - CM_TOL` violate `Γ ≥ iσ`.
pub const CM_TOL: f64 = 1e-8;

const JACOBI_MAX_SWEEPS: usize = 100;
const JACOBI_REL_TOL: f64 = 1e-15;
const SYMMETRY_REL_TOL: f64 = 1e-12;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LinalgError {
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("matrix is not symmetric (max |a_ij - a_ji| = {residual:e})")]
    NotSymmetric { residual: f64 },
    #[error("non-finite entry at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-diagonal norm {residual:e})")]
    NoConvergence { sweeps: usize, residual: f64 },
    #[error("singular matrix: eigenvalue {eigenvalue:e} is below the tolerance {tol:e}")]
    Singular { eigenvalue: f64, tol: f64 },
    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:e}")]
    NotPositive { eigenvalue: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("numerical instability: squared symplectic eigenvalue {value:e}")]
    Unstable { value: f64 },
    #[error(
        "covariance matrix violates Γ ≥ iσ: minimal symplectic eigenvalue {min_symplectic:.12}"
    )]
    Unphysical { min_symplectic: f64 },
}

pub type Result<T> = std::result::Result<T, LinalgError>;

/// A real symmetric matrix with finite entries.
///
/// The constructors mirror their input so that `a_ij == a_ji` holds bit for
/// bit.
#[derive(Debug, Clone, PartialEq)]
pub struct SymMatrix(Matrix);

impl SymMatrix {
    /// Accepts a square finite matrix that is symmetric up to roundoff and
    /// stores its exact symmetric part.
    pub fn new(m: Matrix) -> Result<Self> {
        if m.nrows() != m.ncols() {
            return Err(LinalgError::NotSquare {
                rows: m.nrows(),
                cols: m.ncols(),
            });
        }
        let n = m.nrows();
        let mut scale: f64 = 0.0;
        for j in 0..n {
            for i in 0..n {
                let v = m[(i, j)];
                if !v.is_finite() {
                    return Err(LinalgError::NonFinite { row: i, col: j });
                }
                scale = scale.max(v.abs());
            }
        }
        let mut residual: f64 = 0.0;
        for j in 0..n {
            for i in 0..j {
                residual = residual.max((m[(i, j)] - m[(j, i)]).abs());
            }
        }
        if residual > SYMMETRY_REL_TOL * (1.0 + scale) {
            return Err(LinalgError::NotSymmetric { residual });
        }
        let mut out = m;
        for j in 0..n {
            for i in 0..j {
                let v = 0.5 * (out[(i, j)] + out[(j, i)]);
                out[(i, j)] = v;
                out[(j, i)] = v;
            }
        }
        Ok(SymMatrix(out))
    }

    /// Builds from the upper triangle `f(i, j)` with `i <= j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> f64) -> Result<Self> {
        let mut m = Matrix::zeros(n, n);
        for j in 0..n {
            for i in 0..=j {
                let v = f(i, j);
                if !v.is_finite() {
                    return Err(LinalgError::NonFinite { row: i, col: j });
                }
                m[(i, j)] = v;
                m[(j, i)] = v;
            }
        }
        Ok(SymMatrix(m))
    }

    pub fn identity(n: usize) -> Self {
        SymMatrix(Matrix::identity(n, n))
    }

    pub fn zeros(n: usize) -> Self {
        SymMatrix(Matrix::zeros(n, n))
    }

    pub fn diagonal(d: &[f64]) -> Result<Self> {
        Self::from_fn(d.len(), |i, j| if i == j { d[i] } else { 0.0 })
    }

    /// `V diag(values) Vᵀ`, with `V` given column-wise.
    pub fn from_spectrum(values: &[f64], vectors: &Matrix) -> Result<Self> {
        let n = vectors.nrows();
        if values.len() != vectors.ncols() {
            return Err(LinalgError::DimensionMismatch {
                expected: vectors.ncols(),
                got: values.len(),
            });
        }
        Self::from_fn(n, |i, j| {
            values
                .iter()
                .enumerate()
                .map(|(k, &v)| v * vectors[(i, k)] * vectors[(j, k)])
                .sum()
        })
    }

    pub fn dim(&self) -> usize {
        self.0.nrows()
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.0[(i, j)]
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        self.0.norm()
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> f64 {
        self.0.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }

    pub fn trace(&self) -> f64 {
        self.0.trace()
    }

    pub fn scale(&self, alpha: f64) -> SymMatrix {
        SymMatrix(&self.0 * alpha)
    }

    pub fn add(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.check_dim(other.dim())?;
        Ok(SymMatrix(&self.0 + &other.0))
    }

    pub fn sub(&self, other: &SymMatrix) -> Result<SymMatrix> {
        self.check_dim(other.dim())?;
        Ok(SymMatrix(&self.0 - &other.0))
    }

    /// `self + shift·1`.
    pub fn shifted(&self, shift: f64) -> SymMatrix {
        let mut m = self.0.clone();
        for i in 0..m.nrows() {
            m[(i, i)] += shift;
        }
        SymMatrix(m)
    }

    /// `Bᵀ self B` for an arbitrary square `B`.
    pub fn congruence(&self, b: &Matrix) -> Result<SymMatrix> {
        if b.nrows() != self.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                got: b.nrows(),
            });
        }
        // Symmetric in exact arithmetic, so only the roundoff is discarded.
        let m = b.transpose() * &self.0 * b;
        if let Some((row, col)) = (0..m.ncols())
            .flat_map(|j| (0..m.nrows()).map(move |i| (i, j)))
            .find(|&(i, j)| !m[(i, j)].is_finite())
        {
            return Err(LinalgError::NonFinite { row, col });
        }
        Ok(SymMatrix(0.5 * (&m + m.transpose())))
    }

    /// `B self B` for symmetric `B`; the usual `A^{1/2} M A^{1/2}` sandwich.
    pub fn sandwich(&self, b: &SymMatrix) -> Result<SymMatrix> {
        self.congruence(&b.0)
    }

    /// `A ⊕ B`.
    pub fn direct_sum(a: &SymMatrix, b: &SymMatrix) -> SymMatrix {
        let (n, m) = (a.dim(), b.dim());
        let mut out = Matrix::zeros(n + m, n + m);
        out.view_mut((0, 0), (n, n)).copy_from(&a.0);
        out.view_mut((n, n), (m, m)).copy_from(&b.0);
        SymMatrix(out)
    }

    /// Principal submatrix on the given rows/columns, in the given order.
    pub fn select(&self, idx: &[usize]) -> SymMatrix {
        let m = idx.len();
        let mut out = Matrix::zeros(m, m);
        for (a, &i) in idx.iter().enumerate() {
            for (b, &j) in idx.iter().enumerate() {
                out[(a, b)] = self.0[(i, j)];
            }
        }
        SymMatrix(out)
    }

    /// Frobenius norm of `self·other − other·self`.
    pub fn commutator_norm(&self, other: &SymMatrix) -> Result<f64> {
        self.check_dim(other.dim())?;
        Ok((&self.0 * &other.0 - &other.0 * &self.0).norm())
    }

    pub fn max_abs_diff(&self, other: &SymMatrix) -> f64 {
        (&self.0 - &other.0)
            .iter()
            .fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }

    fn check_dim(&self, got: usize) -> Result<()> {
        if got != self.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.dim(),
                got,
            });
        }
        Ok(())
    }
}

/// Eigendecomposition `M = V diag(values) Vᵀ`, eigenvalues descending.
#[derive(Debug, Clone)]
pub struct SymEig {
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors stored column-wise.
    pub vectors: Matrix,
}

impl SymEig {
    pub fn reconstruct(&self) -> SymMatrix {
        SymMatrix::from_spectrum(&self.values, &self.vectors)
            .expect("eigendecomposition of a finite matrix is finite")
    }

    /// Largest absolute eigenvalue (the spectral norm).
    pub fn spectral_norm(&self) -> f64 {
        self.values.iter().fold(0.0_f64, |acc, v| acc.max(v.abs()))
    }
}

/// Cyclic Jacobi eigensolver.
pub fn sym_eig(m: &SymMatrix) -> Result<SymEig> {
    let n = m.dim();
    let mut a: Vec<f64> = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = m.get(i, j);
        }
    }
    let mut v: Vec<f64> = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let total = m.norm();
    let target = JACOBI_REL_TOL * total;

    let off_norm = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                s += 2.0 * a[i * n + j] * a[i * n + j];
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    loop {
        let off = off_norm(&a);
        if off <= target || off == 0.0 {
            break;
        }
        if sweeps == JACOBI_MAX_SWEEPS {
            return Err(LinalgError::NoConvergence {
                sweeps,
                residual: off,
            });
        }
        sweeps += 1;
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                // Skip rotations that cannot change either diagonal entry.
                if sweeps > 3
                    && (app.abs() + 100.0 * apq.abs() == app.abs())
                    && (aqq.abs() + 100.0 * apq.abs() == aqq.abs())
                {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                rotated = true;
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
        if !rotated {
            break;
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[j * n + j].total_cmp(&a[i * n + i]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = Matrix::from_fn(n, n, |r, c| v[r * n + order[c]]);
    Ok(SymEig { values, vectors })
}

/// Scalar functions that can be lifted to symmetric matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatFn {
    Sqrt,
    Inv,
    InvSqrt,
    Exp,
}

/// Applies `f` to the spectrum of `m`.
///
/// `Sqrt` clamps eigenvalues in `[-1e-10·‖M‖, 0]` to zero and snaps
/// eigenvalues below `1e-13·‖M‖` to exactly zero. `Inv` and `InvSqrt`
/// reject any eigenvalue below `1e-10·‖M‖`.
pub fn mat_func(m: &SymMatrix, f: MatFn) -> Result<SymMatrix> {
    let eig = sym_eig(m)?;
    let scale = eig.spectral_norm();
    let tol = PSD_CLAMP_TOL * scale;
    let mapped: Vec<f64> = match f {
        MatFn::Sqrt => eig
            .values
            .iter()
            .map(|&l| psd_sqrt(l, scale))
            .collect::<Result<_>>()?,
        MatFn::Inv | MatFn::InvSqrt => {
            let smallest = *eig.values.last().unwrap_or(&1.0);
            if smallest <= tol || smallest <= 0.0 {
                return Err(LinalgError::Singular {
                    eigenvalue: smallest,
                    tol,
                });
            }
            eig.values
                .iter()
                .map(|&l| {
                    if f == MatFn::Inv {
                        1.0 / l
                    } else {
                        1.0 / l.sqrt()
                    }
                })
                .collect()
        }
        MatFn::Exp => eig.values.iter().map(|&l| l.exp()).collect(),
    };
    SymMatrix::from_spectrum(&mapped, &eig.vectors)
}

/// Square root of an eigenvalue of a PSD operand with spectral norm `scale`.
pub(crate) fn psd_sqrt(l: f64, scale: f64) -> Result<f64> {
    Ok(snap_nonneg(l, scale)?.sqrt())
}

/// Clamps roundoff-level negatives and snaps roundoff-level magnitudes to 0.
pub(crate) fn snap_nonneg(l: f64, scale: f64) -> Result<f64> {
    if l < -PSD_CLAMP_TOL * scale {
        return Err(LinalgError::NotPositive { eigenvalue: l });
    }
    if l <= ZERO_SNAP_TOL * scale {
        Ok(0.0)
    } else {
        Ok(l)
    }
}

/// Sum of absolute eigenvalues.
pub fn trace_norm(m: &SymMatrix) -> Result<f64> {
    Ok(sym_eig(m)?.values.iter().map(|v| v.abs()).sum())
}

/// Phase space of `N` modes with the symplectic form `σ = [[0, 1], [-1, 0]]`
/// in `N×N` blocks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticSpace {
    modes: usize,
}

impl SymplecticSpace {
    pub fn new(modes: usize) -> Self {
        assert!(modes > 0, "a symplectic space needs at least one mode");
        SymplecticSpace { modes }
    }

    pub fn modes(&self) -> usize {
        self.modes
    }

    pub fn dim(&self) -> usize {
        2 * self.modes
    }

    pub fn form(&self) -> Matrix {
        let n = self.modes;
        let mut s = Matrix::zeros(2 * n, 2 * n);
        for i in 0..n {
            s[(i, n + i)] = 1.0;
            s[(n + i, i)] = -1.0;
        }
        s
    }
}

/// Symplectic eigenvalues of a PSD matrix on `space`, descending.
///
/// These are the square roots of the (doubly degenerate) eigenvalues of
/// `σMσᵀM`, computed from the similar symmetric matrix
/// `M^{1/2} σMσᵀ M^{1/2}`.
pub fn symplectic_eigenvalues(m: &SymMatrix, space: SymplecticSpace) -> Result<Vec<f64>> {
    if m.dim() != space.dim() {
        return Err(LinalgError::DimensionMismatch {
            expected: space.dim(),
            got: m.dim(),
        });
    }
    let root = mat_func(m, MatFn::Sqrt)?;
    let sigma = space.form();
    let rotated = SymMatrix::new(&sigma * m.as_matrix() * sigma.transpose())?;
    let k = rotated.sandwich(&root)?;
    let eig = sym_eig(&k)?;
    let scale = eig.spectral_norm();
    eig.values
        .iter()
        .step_by(2)
        .map(|&d2| {
            if d2 < -PSD_CLAMP_TOL * scale {
                Err(LinalgError::Unstable { value: d2 })
            } else {
                Ok(snap_nonneg(d2, scale)?.sqrt())
            }
        })
        .collect()
}

/// Second moments of an `N`-mode Gaussian state, `Γ_kl = ⟨{ΔR_k, ΔR_l}⟩`,
/// normalized so that the vacuum is the identity.
///
/// Construction only checks the shape; use [`CovarianceMatrix::validate`]
/// (or [`CovarianceMatrix::physical`]) for `Γ ≥ iσ`.
#[derive(Debug, Clone, PartialEq)]
pub struct CovarianceMatrix {
    space: SymplecticSpace,
    gamma: SymMatrix,
}

impl CovarianceMatrix {
    pub fn new(space: SymplecticSpace, gamma: SymMatrix) -> Result<Self> {
        if gamma.dim() != space.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: space.dim(),
                got: gamma.dim(),
            });
        }
        Ok(CovarianceMatrix { space, gamma })
    }

    /// Like [`CovarianceMatrix::new`] but also enforces `Γ ≥ iσ`.
    pub fn physical(space: SymplecticSpace, gamma: SymMatrix) -> Result<Self> {
        let cm = Self::new(space, gamma)?;
        cm.validate()?;
        Ok(cm)
    }

    pub fn vacuum(modes: usize) -> Self {
        let space = SymplecticSpace::new(modes);
        CovarianceMatrix {
            space,
            gamma: SymMatrix::identity(space.dim()),
        }
    }

    /// `Γ_qq ⊕ Γ_pp` with no position-momentum correlations.
    pub fn from_blocks(qq: &SymMatrix, pp: &SymMatrix) -> Result<Self> {
        if qq.dim() != pp.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: qq.dim(),
                got: pp.dim(),
            });
        }
        Self::new(
            SymplecticSpace::new(qq.dim()),
            SymMatrix::direct_sum(qq, pp),
        )
    }

    pub fn space(&self) -> SymplecticSpace {
        self.space
    }

    pub fn modes(&self) -> usize {
        self.space.modes()
    }

    pub fn matrix(&self) -> &SymMatrix {
        &self.gamma
    }

    pub fn qq(&self) -> SymMatrix {
        let n = self.modes();
        self.gamma.select(&(0..n).collect::<Vec<_>>())
    }

    pub fn pp(&self) -> SymMatrix {
        let n = self.modes();
        self.gamma.select(&(n..2 * n).collect::<Vec<_>>())
    }

    /// The `⟨{Q_k, P_l}⟩` block.
    pub fn qp(&self) -> Matrix {
        let n = self.modes();
        self.gamma.as_matrix().view((0, n), (n, n)).into_owned()
    }

    pub fn symplectic_eigenvalues(&self) -> Result<Vec<f64>> {
        symplectic_eigenvalues(&self.gamma, self.space)
    }

    /// Checks `Γ ≥ iσ` and returns the minimal symplectic eigenvalue.
    pub fn validate(&self) -> Result<f64> {
        let eig = sym_eig(&self.gamma)?;
        let lowest = *eig.values.last().expect("nonempty");
        if lowest < -PSD_CLAMP_TOL * eig.spectral_norm() {
            return Err(LinalgError::Unphysical {
                min_symplectic: 0.0,
            });
        }
        let nu = self.symplectic_eigenvalues()?;
        let min = nu.iter().copied().fold(f64::INFINITY, f64::min);
        if min < 1.0 - CM_TOL {
            return Err(LinalgError::Unphysical {
                min_symplectic: min,
            });
        }
        Ok(min)
    }

    pub fn add_noise(&self, noise: &SymMatrix) -> Result<CovarianceMatrix> {
        CovarianceMatrix::new(self.space, self.gamma.add(noise)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn ring3_adjacency() -> SymMatrix {
        SymMatrix::from_fn(3, |i, j| if i == j { 0.0 } else { 1.0 }).unwrap()
    }

    #[test]
    fn eig_identity() {
        let e = sym_eig(&SymMatrix::identity(3)).unwrap();
        assert_eq!(e.values, vec![1.0, 1.0, 1.0]);
    }

    #[test]
    fn eig_triangle_adjacency() {
        let e = sym_eig(&ring3_adjacency()).unwrap();
        assert_abs_diff_eq!(e.values[0], 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.values[1], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.values[2], -1.0, epsilon = 1e-14);
    }

    #[test]
    fn eig_diagonal_is_permutation() {
        let m = SymMatrix::diagonal(&[2.0, 5.0, -1.0]).unwrap();
        let e = sym_eig(&m).unwrap();
        assert_eq!(e.values, vec![5.0, 2.0, -1.0]);
        let mut expected = Matrix::zeros(3, 3);
        expected[(1, 0)] = 1.0;
        expected[(0, 1)] = 1.0;
        expected[(2, 2)] = 1.0;
        assert_eq!(e.vectors.map(f64::abs), expected);
    }

    #[test]
    fn rejects_asymmetric_and_nonfinite() {
        let m = Matrix::from_row_slice(2, 2, &[1.0, 2.0, 3.0, 1.0]);
        assert!(matches!(
            SymMatrix::new(m),
            Err(LinalgError::NotSymmetric { .. })
        ));
        let m = Matrix::from_row_slice(2, 2, &[1.0, f64::NAN, f64::NAN, 1.0]);
        assert!(matches!(
            SymMatrix::new(m),
            Err(LinalgError::NonFinite { .. })
        ));
        let m = Matrix::zeros(2, 3);
        assert!(matches!(
            SymMatrix::new(m),
            Err(LinalgError::NotSquare { .. })
        ));
    }

    #[test]
    fn sqrt_of_diagonal() {
        let r = mat_func(&SymMatrix::diagonal(&[4.0, 9.0]).unwrap(), MatFn::Sqrt).unwrap();
        assert_abs_diff_eq!(r.get(0, 0), 2.0, epsilon = 1e-15);
        assert_abs_diff_eq!(r.get(1, 1), 3.0, epsilon = 1e-15);
        assert_eq!(r.get(0, 1), 0.0);
        let i = mat_func(&SymMatrix::identity(4), MatFn::Sqrt).unwrap();
        assert_eq!(i, SymMatrix::identity(4));
    }

    #[test]
    fn inverse_of_ring3_plus() {
        // H₊ = (2·1 + A)/12 has spectrum {1/3, 1/12, 1/12}.
        let h = SymMatrix::identity(3)
            .scale(2.0)
            .add(&ring3_adjacency())
            .unwrap()
            .scale(1.0 / 12.0);
        let inv = mat_func(&h, MatFn::Inv).unwrap();
        let e = sym_eig(&inv).unwrap();
        assert_abs_diff_eq!(e.values[0], 12.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e.values[1], 12.0, epsilon = 1e-12);
        assert_abs_diff_eq!(e.values[2], 3.0, epsilon = 1e-12);
    }

    #[test]
    fn singular_inverse_is_reported() {
        let m = SymMatrix::diagonal(&[1.0, 0.0]).unwrap();
        match mat_func(&m, MatFn::InvSqrt) {
            Err(LinalgError::Singular { eigenvalue, .. }) => assert_eq!(eigenvalue, 0.0),
            other => panic!("expected singular error, got {other:?}"),
        }
    }

    #[test]
    fn sqrt_rejects_negative_matrix() {
        let m = SymMatrix::diagonal(&[1.0, -0.5]).unwrap();
        assert!(matches!(
            mat_func(&m, MatFn::Sqrt),
            Err(LinalgError::NotPositive { .. })
        ));
    }

    #[test]
    fn symplectic_single_mode() {
        let m = SymMatrix::diagonal(&[2.0, 8.0]).unwrap();
        let d = symplectic_eigenvalues(&m, SymplecticSpace::new(1)).unwrap();
        assert_abs_diff_eq!(d[0], 4.0, epsilon = 1e-13);
        let d = symplectic_eigenvalues(&SymMatrix::identity(6), SymplecticSpace::new(3)).unwrap();
        for v in d {
            assert_abs_diff_eq!(v, 1.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn symplectic_form_properties() {
        let s = SymplecticSpace::new(3).form();
        assert_eq!(s.transpose(), -&s);
        assert_eq!(&s * s.transpose(), Matrix::identity(6, 6));
    }

    #[test]
    fn trace_norm_examples() {
        assert_abs_diff_eq!(
            trace_norm(&SymMatrix::diagonal(&[1.0, -2.0, 3.0]).unwrap()).unwrap(),
            6.0,
            epsilon = 1e-15
        );
        assert_abs_diff_eq!(trace_norm(&SymMatrix::identity(5)).unwrap(), 5.0);
    }

    #[test]
    fn vacuum_is_valid_and_half_vacuum_is_not() {
        assert_abs_diff_eq!(
            CovarianceMatrix::vacuum(3).validate().unwrap(),
            1.0,
            epsilon = 1e-14
        );
        let half =
            CovarianceMatrix::new(SymplecticSpace::new(3), SymMatrix::identity(6).scale(0.5))
                .unwrap();
        match half.validate() {
            Err(LinalgError::Unphysical { min_symplectic }) => {
                assert_abs_diff_eq!(min_symplectic, 0.5, epsilon = 1e-13)
            }
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn blocks_follow_qp_ordering() {
        let g = SymMatrix::from_fn(4, |i, j| (10 * i + j) as f64).unwrap();
        let cm = CovarianceMatrix::new(SymplecticSpace::new(2), g).unwrap();
        assert_eq!(cm.qq().get(0, 1), 1.0);
        assert_eq!(cm.pp().get(0, 1), 23.0);
        assert_eq!(cm.qp()[(1, 0)], 12.0);
    }
}
