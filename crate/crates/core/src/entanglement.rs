//! Entanglement of formation of symmetric two-mode Gaussian states as a
//! function of the EPR uncertainty, two-mode reductions and their standard
//! form, and the pure-state `(X, Y)` parameterization.

use thiserror::Error;

use crate::linalg::{sym_eig, CovarianceMatrix, LinalgError, Matrix, SymMatrix, SymplecticSpace};
use crate::solver::HamiltonianPair;

/// Tolerance on `n_A = n_B` for the symmetric-state formulas.
pub const SYMMETRY_TOL: f64 = 1e-8;
/// Tolerance on the group-invariance of a global covariance matrix.
pub const INVARIANCE_TOL: f64 = 1e-8;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum EntanglementError {
    #[error("EPR uncertainty must be positive, got {0}")]
    Domain(f64),
    #[error("mode index out of range: ({k}, {l}) for {modes} modes")]
    ModeOutOfRange { k: usize, l: usize, modes: usize },
    #[error("a two-mode reduction needs two distinct modes, got ({0}, {0})")]
    SameMode(usize),
    #[error("expected a two-mode covariance matrix, got {0} modes")]
    NotTwoMode(usize),
    #[error("asymmetric reduction: n_A = {n_a}, n_B = {n_b}")]
    AsymmetricReduction { n_a: f64, n_b: f64 },
    #[error("covariance matrix is not invariant under the Hamiltonian's symmetry (twirl residual {residual:e})")]
    NotInvariant { residual: f64 },
    #[error("X must be positive definite (smallest eigenvalue {0:e})")]
    NotPositiveDefinite(f64),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// Entanglement of formation in ebits of a symmetric two-mode Gaussian state
/// with EPR uncertainty `delta`.
///
/// `E_F(Δ) = c₊ log₂ c₊ − c₋ log₂ c₋` with `c_± = (Δ^{-1/2} ± Δ^{1/2})² / 4`.
/// Separable values `Δ ≥ 1` give 0.
pub fn eof_from_delta(delta: f64) -> Result<f64, EntanglementError> {
    if delta.is_nan() || delta <= 0.0 {
        return Err(EntanglementError::Domain(delta));
    }
    if delta >= 1.0 {
        return Ok(0.0);
    }
    let (a, b) = (delta.sqrt().recip(), delta.sqrt());
    let plus = (a + b) * (a + b) / 4.0;
    let minus = (a - b) * (a - b) / 4.0;
    let xlogx = |x: f64| if x > 0.0 { x * x.log2() } else { 0.0 };
    Ok(xlogx(plus) - xlogx(minus))
}

/// Rows and columns `(k, l, N+k, N+l)` of `Γ`, i.e. the reduced state of
/// modes `k` and `l` in `(Q_A, Q_B, P_A, P_B)` order.
pub fn reduce_two_mode(
    cm: &CovarianceMatrix,
    k: usize,
    l: usize,
) -> Result<CovarianceMatrix, EntanglementError> {
    let n = cm.modes();
    if k >= n || l >= n {
        return Err(EntanglementError::ModeOutOfRange { k, l, modes: n });
    }
    if k == l {
        return Err(EntanglementError::SameMode(k));
    }
    let gamma = cm.matrix().select(&[k, l, n + k, n + l]);
    Ok(CovarianceMatrix::new(SymplecticSpace::new(2), gamma)?)
}

/// Local symplectic invariants of a two-mode state:
/// `γ ≅ [[n_A, k_q], [k_q, n_B]] ⊕ [[n_A, k_p], [k_p, n_B]]`.
///
/// The canonical representative has `k_q ≥ |k_p|`, so `k_q ≥ k_p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeStandardForm {
    pub n_a: f64,
    pub n_b: f64,
    pub k_q: f64,
    pub k_p: f64,
}

impl TwoModeStandardForm {
    pub fn new(n_a: f64, n_b: f64, k_q: f64, k_p: f64) -> Self {
        TwoModeStandardForm { n_a, n_b, k_q, k_p }
    }

    /// The standard-form covariance matrix in `(Q_A, Q_B, P_A, P_B)` order.
    pub fn to_cm(&self) -> CovarianceMatrix {
        let Self { n_a, n_b, k_q, k_p } = *self;
        let qq = SymMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => n_a,
            (1, 1) => n_b,
            _ => k_q,
        })
        .expect("finite");
        let pp = SymMatrix::from_fn(2, |i, j| match (i, j) {
            (0, 0) => n_a,
            (1, 1) => n_b,
            _ => k_p,
        })
        .expect("finite");
        CovarianceMatrix::from_blocks(&qq, &pp).expect("2x2 blocks")
    }

    pub fn is_symmetric(&self) -> bool {
        (self.n_a - self.n_b).abs() <= SYMMETRY_TOL * self.n_a.abs().max(self.n_b.abs()).max(1.0)
    }
}

fn det2(a: f64, b: f64, c: f64, d: f64) -> f64 {
    a * d - b * c
}

/// Standard-form invariants from local-symplectic-invariant determinants:
/// `n_A² = det γ_A`, `n_B² = det γ_B`, `k_q k_p = det C`, and
/// `det γ = (n_A n_B − k_q²)(n_A n_B − k_p²)`.
pub fn standard_form(gamma: &CovarianceMatrix) -> Result<TwoModeStandardForm, EntanglementError> {
    if gamma.modes() != 2 {
        return Err(EntanglementError::NotTwoMode(gamma.modes()));
    }
    gamma.validate()?;
    let g = |i: usize, j: usize| gamma.matrix().get(i, j);
    // (Q_A, Q_B, P_A, P_B) = (0, 1, 2, 3)
    let det_a = det2(g(0, 0), g(0, 2), g(2, 0), g(2, 2));
    let det_b = det2(g(1, 1), g(1, 3), g(3, 1), g(3, 3));
    let det_c = det2(g(0, 1), g(0, 3), g(2, 1), g(2, 3));
    let det_full = gamma.matrix().as_matrix().determinant();
    let (n_a, n_b) = (det_a.sqrt(), det_b.sqrt());
    let p = n_a * n_b;
    let sum_sq = (p * p + det_c * det_c - det_full) / p;
    let scale = sum_sq.abs().max(p);
    let root = |x: f64| -> f64 {
        if x < 0.0 && x > -1e-10 * scale {
            0.0
        } else {
            x.sqrt()
        }
    };
    let plus = root(sum_sq + 2.0 * det_c);
    let minus = root(sum_sq - 2.0 * det_c);
    Ok(TwoModeStandardForm {
        n_a,
        n_b,
        k_q: 0.5 * (plus + minus),
        k_p: 0.5 * (plus - minus),
    })
}

/// EPR uncertainty of a symmetric standard form, the smaller of the two
/// EPR pairings `√((n+k_q)(n−k_p))` and `√((n−k_q)(n+k_p))`.
pub fn epr_uncertainty_local(sf: &TwoModeStandardForm) -> Result<f64, EntanglementError> {
    if !sf.is_symmetric() {
        return Err(EntanglementError::AsymmetricReduction {
            n_a: sf.n_a,
            n_b: sf.n_b,
        });
    }
    let n = 0.5 * (sf.n_a + sf.n_b);
    let first = ((n + sf.k_q) * (n - sf.k_p)).max(0.0).sqrt();
    let second = ((n - sf.k_q) * (n + sf.k_p)).max(0.0).sqrt();
    Ok(first.min(second))
}

/// `tr[γ (s h₊ ⊕ h₋/s)]` for a two-mode `γ`, with
/// `h_± = ¼[[1, ±1], [±1, 1]]` acting on `(Q_A, Q_B)` and `(P_A, P_B)`.
pub fn epr_functional(gamma: &CovarianceMatrix, s: f64) -> Result<f64, EntanglementError> {
    if gamma.modes() != 2 {
        return Err(EntanglementError::NotTwoMode(gamma.modes()));
    }
    let g = |i: usize, j: usize| gamma.matrix().get(i, j);
    let q = 0.25 * (g(0, 0) + g(1, 1) + 2.0 * g(0, 1));
    let p = 0.25 * (g(2, 2) + g(3, 3) - 2.0 * g(2, 3));
    Ok(s * q + p / s)
}

/// Largest deviation of `Γ` from its image under the pair's symmetry.
pub fn invariance_residual(cm: &CovarianceMatrix, hp: &HamiltonianPair) -> f64 {
    let n = cm.modes();
    let gamma = cm.matrix();
    let mut worst: f64 = 0.0;
    for g in hp.symmetry() {
        if g.degree() != n {
            return f64::INFINITY;
        }
        let img = |i: usize| {
            if i < n {
                g.apply(i)
            } else {
                g.apply(i - n) + n
            }
        };
        for j in 0..2 * n {
            for i in 0..2 * n {
                worst = worst.max((gamma.get(img(i), img(j)) - gamma.get(i, j)).abs());
            }
        }
    }
    worst
}

/// `inf_s tr[Γ (s H₊ ⊕ H₋/s)] = 2 √(tr[Γ_qq H₊] tr[Γ_pp H₋])` for a
/// covariance matrix invariant under the pair's symmetry.
pub fn epr_uncertainty_global(
    cm: &CovarianceMatrix,
    hp: &HamiltonianPair,
) -> Result<f64, EntanglementError> {
    if cm.modes() != hp.modes() {
        return Err(LinalgError::DimensionMismatch {
            expected: hp.modes(),
            got: cm.modes(),
        }
        .into());
    }
    let residual = invariance_residual(cm, hp);
    if residual > INVARIANCE_TOL {
        return Err(EntanglementError::NotInvariant { residual });
    }
    let (a, b) = hp.traces_against(cm);
    Ok(2.0 * (a * b).max(0.0).sqrt())
}

/// Pure-state parameters: `Γ = [[X, XY], [YX, YXY + X⁻¹]]`.
#[derive(Debug, Clone)]
pub struct PureStateParam {
    x: SymMatrix,
    y: SymMatrix,
}

impl PureStateParam {
    pub fn new(x: SymMatrix, y: SymMatrix) -> Result<Self, EntanglementError> {
        if x.dim() != y.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: x.dim(),
                got: y.dim(),
            }
            .into());
        }
        let lowest = *sym_eig(&x)?.values.last().expect("nonempty");
        if lowest <= 1e-12 {
            return Err(EntanglementError::NotPositiveDefinite(lowest));
        }
        Ok(PureStateParam { x, y })
    }

    pub fn x(&self) -> &SymMatrix {
        &self.x
    }

    pub fn y(&self) -> &SymMatrix {
        &self.y
    }
}

pub fn pure_cm_from_xy(p: &PureStateParam) -> Result<CovarianceMatrix, EntanglementError> {
    let n = p.x.dim();
    let x = p.x.as_matrix();
    let y = p.y.as_matrix();
    let x_inv = x
        .clone()
        .try_inverse()
        .ok_or(EntanglementError::NotPositiveDefinite(0.0))?;
    let xy = x * y;
    let lower = y * x * y + x_inv;
    let mut g = Matrix::zeros(2 * n, 2 * n);
    g.view_mut((0, 0), (n, n)).copy_from(x);
    g.view_mut((0, n), (n, n)).copy_from(&xy);
    g.view_mut((n, 0), (n, n)).copy_from(&xy.transpose());
    g.view_mut((n, n), (n, n)).copy_from(&lower);
    Ok(CovarianceMatrix::new(
        SymplecticSpace::new(n),
        SymMatrix::new(g)?,
    )?)
}
