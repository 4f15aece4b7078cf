//! Independent checks of the ground-state energy: direct numerical
//! minimization over pure Gaussian states, random probes of the `Y = 0`
//! reduction, and the Abelian-commutant block computation showing that the
//! optimal local rotation is trivial.

use std::f64::consts::PI;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::group::{commutant_blocks, twirl, CommutantBlock, GroupError, Perm, PermGroup};
use crate::linalg::{
    snap_nonneg, sym_eig, symplectic_eigenvalues, LinalgError, Matrix, SymMatrix, SymplecticSpace,
};
use crate::solver::{local_pair, HamiltonianPair};

/// Largest mode count accepted by the brute-force oracle.
pub const ORACLE_MAX_MODES: usize = 8;
/// Tolerance on "never negative" statements about gaps and minors.
pub const NONNEG_TOL: f64 = 1e-10;
/// Largest change of any matrix-logarithm entry in one line-search step.
const MAX_STEP: f64 = 4.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OracleError {
    #[error("oracle supports at most {ORACLE_MAX_MODES} modes, got {0}")]
    TooManyModes(usize),
    #[error("invalid oracle parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BruteForceOptions {
    /// Iteration cap per restart.
    pub iterations: usize,
    pub restarts: usize,
    pub seed: u64,
    /// Central finite-difference step in the matrix logarithm.
    pub fd_step: f64,
    /// Regularization of the analytic optimum.
    pub epsilon: f64,
}

impl Default for BruteForceOptions {
    fn default() -> Self {
        BruteForceOptions {
            iterations: 400,
            restarts: 8,
            seed: 0x5eed,
            fd_step: 1e-5,
            epsilon: 1e-13,
        }
    }
}

#[derive(Debug, Clone)]
pub struct BruteForceResult {
    /// Smallest `tr[X H₊] + tr[X⁻¹ H₋]` found.
    pub delta: f64,
    /// The minimizer `X̂ = exp(Ŝ)`.
    pub x: SymMatrix,
    /// Its logarithm `Ŝ`.
    pub log_x: SymMatrix,
    /// False when every restart hit the iteration cap before stalling.
    pub converged: bool,
    /// Objective at the analytic stationary point
    /// `X* = H₊^{-1/2}(H₊^{1/2} H₋ H₊^{1/2})^{1/2} H₊^{-1/2}`.
    pub analytic: f64,
    pub restart_values: Vec<f64>,
}

/// `tr[X H₊] + tr[X⁻¹ H₋]` at `X = exp(S)`.
fn objective_log(s: &SymMatrix, hp: &HamiltonianPair) -> Result<f64, LinalgError> {
    let eig = sym_eig(s)?;
    let v = &eig.vectors;
    let mut total = 0.0;
    for (i, &d) in eig.values.iter().enumerate() {
        let col = v.column(i);
        let a = (hp.plus().as_matrix() * col).dot(&col);
        let b = (hp.minus().as_matrix() * col).dot(&col);
        total += d.exp() * a + (-d).exp() * b;
    }
    Ok(total)
}

fn unpack(theta: &[f64], n: usize) -> SymMatrix {
    let mut m = Matrix::zeros(n, n);
    let mut it = theta.iter();
    for j in 0..n {
        for i in 0..=j {
            let v = *it.next().expect("parameter count");
            m[(i, j)] = v;
            m[(j, i)] = v;
        }
    }
    SymMatrix::new(m).expect("finite parameters")
}

struct Descent<'a> {
    hp: &'a HamiltonianPair,
    n: usize,
    h: f64,
}

impl Descent<'_> {
    fn value(&self, theta: &[f64]) -> Result<f64, LinalgError> {
        objective_log(&unpack(theta, self.n), self.hp)
    }

    fn gradient(&self, theta: &[f64]) -> Result<Vec<f64>, LinalgError> {
        let mut work = theta.to_vec();
        let mut g = Vec::with_capacity(theta.len());
        for i in 0..theta.len() {
            work[i] = theta[i] + self.h;
            let up = self.value(&work)?;
            work[i] = theta[i] - self.h;
            let down = self.value(&work)?;
            work[i] = theta[i];
            g.push((up - down) / (2.0 * self.h));
        }
        Ok(g)
    }

    /// Objective value, with points where it cannot be evaluated mapped to
    /// `+∞` so that line searches back away from them.
    fn value_or_inf(&self, theta: &[f64]) -> f64 {
        match self.value(theta) {
            Ok(v) if v.is_finite() => v,
            _ => f64::INFINITY,
        }
    }

    /// BFGS on the inverse Hessian with Armijo backtracking. Returns the
    /// final point, its value, and whether progress stalled before the
    /// iteration cap.
    fn run(
        &self,
        mut theta: Vec<f64>,
        iterations: usize,
    ) -> Result<(Vec<f64>, f64, bool), LinalgError> {
        let m = theta.len();
        let dot = |a: &[f64], b: &[f64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<f64>();
        let mut hinv = Matrix::identity(m, m);
        let mut f = self.value(&theta)?;
        let mut g = self.gradient(&theta)?;
        let mut quiet = 0;
        for _ in 0..iterations {
            let gv = nalgebra::DVector::from_column_slice(&g);
            let mut p: Vec<f64> = (-(&hinv * &gv)).iter().copied().collect();
            if dot(&p, &g) >= 0.0 {
                hinv = Matrix::identity(m, m);
                p = g.iter().map(|x| -x).collect();
            }
            let slope = dot(&p, &g);
            if slope == 0.0 {
                return Ok((theta, f, true));
            }
            let longest = p.iter().fold(0.0f64, |a, x| a.max(x.abs()));
            let mut t = if longest > MAX_STEP {
                MAX_STEP / longest
            } else {
                1.0
            };
            let accepted = loop {
                let trial: Vec<f64> = theta.iter().zip(&p).map(|(x, d)| x + t * d).collect();
                let ft = self.value_or_inf(&trial);
                if ft <= f + 1e-4 * t * slope {
                    break Some((trial, ft));
                }
                t *= 0.5;
                if t < 1e-16 {
                    break None;
                }
            };
            let Some((next, fnext)) = accepted else {
                return Ok((theta, f, true));
            };
            let gnext = self.gradient(&next)?;
            let sv =
                nalgebra::DVector::from_iterator(m, next.iter().zip(&theta).map(|(a, b)| a - b));
            let yv = nalgebra::DVector::from_iterator(m, gnext.iter().zip(&g).map(|(a, b)| a - b));
            let sy = sv.dot(&yv);
            if sy > 1e-300 {
                let rho = 1.0 / sy;
                let hy = &hinv * &yv;
                let yhy = yv.dot(&hy);
                hinv += (&sv * sv.transpose()) * (rho * (1.0 + rho * yhy))
                    - (&hy * sv.transpose() + &sv * hy.transpose()) * rho;
            }
            quiet = if f - fnext <= 1e-15 * f.abs().max(1e-3) {
                quiet + 1
            } else {
                0
            };
            theta = next;
            f = fnext;
            g = gnext;
            if quiet >= 10 {
                return Ok((theta, f, true));
            }
        }
        Ok((theta, f, false))
    }
}

/// Objective `tr[X H₊] + tr[X⁻¹ H₋]` for an explicit positive-definite `X`.
pub fn pure_state_objective(x: &SymMatrix, hp: &HamiltonianPair) -> Result<f64, OracleError> {
    let xm = x.as_matrix();
    let inv = xm.clone().try_inverse().ok_or(LinalgError::Singular {
        eigenvalue: 0.0,
        tol: 0.0,
    })?;
    Ok(xm.dot(hp.plus().as_matrix()) + inv.dot(hp.minus().as_matrix()))
}

/// Eigen-decomposition helper that applies `f` to the spectrum of `m`.
fn spectral_map(m: &SymMatrix, f: impl Fn(f64) -> f64) -> Result<SymMatrix, LinalgError> {
    let eig = sym_eig(m)?;
    let mapped: Vec<f64> = eig.values.iter().map(|&l| f(l)).collect();
    SymMatrix::from_spectrum(&mapped, &eig.vectors)
}

/// `X*` built from `H₊ + ε` and `H₋ + ε`, evaluated against the unshifted
/// pair.
pub fn analytic_optimum_value(hp: &HamiltonianPair, epsilon: f64) -> Result<f64, OracleError> {
    let p = hp.plus().shifted(epsilon);
    let m = hp.minus().shifted(epsilon);
    let floor = |l: f64| l.max(epsilon);
    let p_half = spectral_map(&p, |l| floor(l).sqrt())?;
    let p_inv_half = spectral_map(&p, |l| 1.0 / floor(l).sqrt())?;
    let inner = m.sandwich(&p_half)?;
    let inner_half = spectral_map(&inner, |l| l.max(0.0).sqrt())?;
    let inner_inv_half = spectral_map(&inner, |l| 1.0 / l.max(epsilon * epsilon).sqrt())?;
    // The regularized factors are badly conditioned, so the products stay
    // plain matrices rather than being re-validated as symmetric.
    let x = p_inv_half.as_matrix() * inner_half.as_matrix() * p_inv_half.as_matrix();
    let x_inv = p_half.as_matrix() * inner_inv_half.as_matrix() * p_half.as_matrix();
    Ok(x.dot(hp.plus().as_matrix()) + x_inv.dot(hp.minus().as_matrix()))
}

/// Multi-start minimization of `tr[X H₊] + tr[X⁻¹ H₋]` over `X = exp(S)`
/// using finite-difference gradients in `S`.
pub fn bruteforce_min_delta(
    hp: &HamiltonianPair,
    opts: &BruteForceOptions,
) -> Result<BruteForceResult, OracleError> {
    let n = hp.modes();
    if n > ORACLE_MAX_MODES {
        return Err(OracleError::TooManyModes(n));
    }
    if opts.restarts == 0 || opts.iterations == 0 || opts.fd_step.is_nan() || opts.fd_step <= 0.0 {
        return Err(OracleError::InvalidParameter(
            "restarts, iterations and the finite-difference step must be positive".into(),
        ));
    }
    let params = n * (n + 1) / 2;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let descent = Descent {
        hp,
        n,
        h: opts.fd_step,
    };
    let mut best: Option<(Vec<f64>, f64)> = None;
    let mut converged = false;
    let mut restart_values = Vec::with_capacity(opts.restarts);
    for r in 0..opts.restarts {
        let start: Vec<f64> = if r == 0 {
            vec![0.0; params]
        } else {
            (0..params).map(|_| rng.gen_range(-1.0..1.0)).collect()
        };
        let (theta, f, stalled) = descent.run(start, opts.iterations)?;
        converged |= stalled;
        restart_values.push(f);
        if best.as_ref().is_none_or(|(_, bf)| f < *bf) {
            best = Some((theta, f));
        }
    }
    let (theta, delta) = best.expect("at least one restart");
    let log_x = unpack(&theta, n);
    let x = spectral_map(&log_x, f64::exp)?;
    Ok(BruteForceResult {
        delta,
        x,
        log_x,
        converged,
        analytic: analytic_optimum_value(hp, opts.epsilon)?,
        restart_values,
    })
}

/// `f(X, Y) = tr[X H₊] + tr[(X⁻¹ + Y X Y) H₋]` at `X = exp(S)`.
pub fn xy_objective(
    log_x: &SymMatrix,
    y: &SymMatrix,
    hp: &HamiltonianPair,
) -> Result<f64, OracleError> {
    let x = spectral_map(log_x, f64::exp)?;
    let x_inv = spectral_map(log_x, |l| (-l).exp())?;
    let yxy = y.as_matrix() * x.as_matrix() * y.as_matrix();
    Ok(x.as_matrix().dot(hp.plus().as_matrix())
        + (x_inv.as_matrix() + yxy).dot(hp.minus().as_matrix()))
}

/// `f(X, Y) − f(X, 0)`.
pub fn y_gap(log_x: &SymMatrix, y: &SymMatrix, hp: &HamiltonianPair) -> Result<f64, OracleError> {
    Ok(xy_objective(log_x, y, hp)? - xy_objective(log_x, &SymMatrix::zeros(y.dim()), hp)?)
}

#[derive(Debug, Clone, PartialEq)]
pub struct YProbeReport {
    pub trials: usize,
    pub min_gap: f64,
    /// All gaps at least `−1e-10`.
    pub passed: bool,
}

/// Evaluates the `Y`-gap at random symmetric `Y` of varying magnitude.
pub fn probe_y_nonzero(
    hp: &HamiltonianPair,
    log_x: &SymMatrix,
    trials: usize,
    seed: u64,
) -> Result<YProbeReport, OracleError> {
    let n = hp.modes();
    if n > ORACLE_MAX_MODES {
        return Err(OracleError::TooManyModes(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut min_gap = f64::INFINITY;
    for _ in 0..trials {
        let scale = 10f64.powf(rng.gen_range(-3.0..1.0));
        let y = SymMatrix::from_fn(n, |_, _| scale * rng.gen_range(-1.0..1.0))?;
        min_gap = min_gap.min(y_gap(log_x, &y, hp)?);
    }
    Ok(YProbeReport {
        trials,
        min_gap,
        passed: min_gap >= -NONNEG_TOL,
    })
}

/// `θ_j = 2πj/count`, `j = 0..count`.
pub fn theta_grid(count: usize) -> Vec<f64> {
    (0..count)
        .map(|j| 2.0 * PI * j as f64 / count as f64)
        .collect()
}

/// `count` logarithmically spaced points on `[lo, hi]`.
pub fn log_grid(lo: f64, hi: f64, count: usize) -> Vec<f64> {
    if count == 1 {
        return vec![lo];
    }
    let (a, b) = (lo.ln(), hi.ln());
    (0..count)
        .map(|k| (a + (b - a) * k as f64 / (count - 1) as f64).exp())
        .collect()
}

/// 33 points on `[1/8, 8]`, including `s = 1`.
pub fn default_s_grid() -> Vec<f64> {
    log_grid(0.125, 8.0, 33)
}

/// Row-major 2×2 block.
pub type Block2 = [[f64; 2]; 2];

/// The rotated two-mode Hamiltonian blocks `(h_qq, h_qp, h_pp)` for the
/// local rotation angle `θ` and squeezing `s`, as row-major 2×2 arrays.
pub fn rotated_blocks(theta: f64, s: f64) -> (Block2, Block2, Block2) {
    let (sn, cs) = theta.sin_cos();
    let qq = [[s * cs * cs + sn * sn / s, s * cs], [s * cs, s]];
    let qp = [[(1.0 / s - s) * cs * sn, -sn / s], [-s * sn, 0.0]];
    let pp = [[s * sn * sn + cs * cs / s, -cs / s], [-cs / s, 1.0 / s]];
    (qq, qp, pp)
}

/// Block data `b_qq^μ, b_qp^μ, b_pp^μ` for one commutant block.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotatedBlock {
    pub mu: usize,
    pub b_qq: f64,
    pub b_qp: Complex64,
    pub b_pp: f64,
}

impl RotatedBlock {
    pub fn from_lambda(mu: usize, lam: &CommutantBlock, theta: f64, s: f64) -> Self {
        let (qq, qp, pp) = rotated_blocks(theta, s);
        let l = [
            [Complex64::new(lam.l00, 0.0), lam.l01()],
            [lam.l01().conj(), Complex64::new(lam.l11, 0.0)],
        ];
        let contract = |h: &[[f64; 2]; 2]| -> Complex64 {
            let mut acc = Complex64::new(0.0, 0.0);
            for i in 0..2 {
                for j in 0..2 {
                    acc += h[i][j] * l[i][j];
                }
            }
            acc
        };
        RotatedBlock {
            mu,
            b_qq: contract(&qq).re,
            b_qp: contract(&qp),
            b_pp: contract(&pp).re,
        }
    }

    /// `b_qq b_pp − (Re b_qp)²`.
    pub fn radicand(&self) -> f64 {
        self.b_qq * self.b_pp - self.b_qp.re * self.b_qp.re
    }

    /// `ν₁^μ + ν₂^μ = √(b_qq b_pp − (Re b_qp)²)`.
    pub fn nu_sum(&self, scale: f64) -> Result<f64, LinalgError> {
        Ok(snap_nonneg(self.radicand(), scale)?.sqrt())
    }
}

/// `λ̄ᵀ Q λ̄` with `λ̄ = (λ₀₀, Re λ₀₁, λ₁₁)`.
pub fn q_form(lam: &CommutantBlock, theta: f64, s: f64) -> f64 {
    let v = [lam.l00, lam.l01_re, lam.l11];
    let base = v[0] * v[0] + 2.0 * v[0] * v[2] + v[2] * v[2] - 4.0 * v[1] * v[1];
    let extra = 2.0 * v[0] * v[2] - 2.0 * v[1] * v[1];
    base + theta.sin().powi(2) / 2.0 * (s - 1.0 / s).powi(2) * extra
}

/// `½ Σ_μ (ν₁^μ + ν₂^μ)` for the group average of the rotated blocks.
pub fn block_objective(
    blocks: &[CommutantBlock],
    theta: f64,
    s: f64,
) -> Result<f64, LinalgError> {
    let scale = (s + 1.0 / s).powi(2);
    let mut total = 0.0;
    for (mu, lam) in blocks.iter().enumerate() {
        total += RotatedBlock::from_lambda(mu, lam, theta, s).nu_sum(scale)?;
    }
    Ok(0.5 * total)
}

/// The `θ`-scan at one value of `s`.
#[derive(Debug, Clone, PartialEq)]
pub struct ThetaScanRow {
    pub s: f64,
    /// First grid angle attaining the minimum (ties within `1e-12`).
    pub argmin_theta: f64,
    pub min_objective: f64,
    pub objective_at_zero: f64,
    /// `Δ(s)` from the symplectic spectrum of the reflection-symmetric
    /// Hamiltonian `s H₊ ⊕ H₋/s`.
    pub reflection_delta: f64,
    /// `max_θ objective − min_θ objective`.
    pub theta_spread: f64,
}

impl ThetaScanRow {
    /// Whether the argmin is `0` or `π` up to half a grid step.
    pub fn argmin_is_reflection(&self, grid_step: f64) -> bool {
        let r = self.argmin_theta.rem_euclid(PI);
        r <= 0.5 * grid_step || PI - r <= 0.5 * grid_step
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ThetaScanReport {
    pub n: usize,
    pub rows: Vec<ThetaScanRow>,
    pub lambdas: Vec<CommutantBlock>,
    /// `min_μ λ₀₀λ₁₁ − |λ₀₁|²`.
    pub min_minor: f64,
    /// `max |radicand − λ̄ᵀQλ̄|` over the grid.
    pub q_form_residual: f64,
    /// `min over the grid of objective(θ, s) − objective(0, s)`.
    pub min_excess: f64,
    pub grid_step: f64,
}

impl ThetaScanReport {
    pub fn theta_optimal(&self) -> bool {
        self.rows
            .iter()
            .all(|r| r.argmin_is_reflection(self.grid_step))
            && self.min_excess >= -NONNEG_TOL
    }

    pub fn lambda_positive(&self) -> bool {
        self.min_minor >= -NONNEG_TOL
    }

    /// `max_s |objective(0, s) − Δ_reflection(s)|`.
    pub fn reflection_residual(&self) -> f64 {
        self.rows
            .iter()
            .map(|r| (r.objective_at_zero - r.reflection_delta).abs())
            .fold(0.0, f64::max)
    }
}

/// The cyclic group of an `n`-ring with designated adjacent pair `(0, 1)`.
pub fn cyclic_ring_group(n: usize) -> Result<PermGroup, OracleError> {
    if n < 2 {
        return Err(OracleError::InvalidParameter(format!(
            "ring size must be >= 2, got {n}"
        )));
    }
    Ok(PermGroup::generate(n, &[Perm::shift(n)], n)?.with_pair(0, 1)?)
}

/// Scans the block objective over `θ × s` for the cyclic group of an
/// `n`-ring.
pub fn theta_block_scan(
    n: usize,
    thetas: &[f64],
    s_grid: &[f64],
) -> Result<ThetaScanReport, OracleError> {
    if thetas.is_empty() || s_grid.is_empty() || s_grid.iter().any(|&s| s.is_nan() || s <= 0.0) {
        return Err(OracleError::InvalidParameter(
            "θ- and s-grids must be nonempty with s > 0".into(),
        ));
    }
    let group = cyclic_ring_group(n)?;
    let data = commutant_blocks(&group)?;
    let lambdas = data.blocks;
    let min_minor = lambdas
        .iter()
        .map(|b| b.minor())
        .fold(f64::INFINITY, f64::min);

    let (hp, hm) = local_pair(n, 0, 1);
    let (plus, minus) = (twirl(&hp, &group)?, twirl(&hm, &group)?);
    let space = SymplecticSpace::new(n);

    let mut rows = Vec::with_capacity(s_grid.len());
    let mut q_form_residual: f64 = 0.0;
    let mut min_excess = f64::INFINITY;
    for &s in s_grid {
        let mut values = Vec::with_capacity(thetas.len());
        for &theta in thetas {
            values.push(block_objective(&lambdas, theta, s)?);
            for (mu, lam) in lambdas.iter().enumerate() {
                let b = RotatedBlock::from_lambda(mu, lam, theta, s);
                q_form_residual = q_form_residual.max((b.radicand() - q_form(lam, theta, s)).abs());
            }
        }
        let at_zero = block_objective(&lambdas, 0.0, s)?;
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let idx = values
            .iter()
            .position(|&v| v <= lo + 1e-12)
            .expect("nonempty");
        min_excess = min_excess.min(lo - at_zero);

        let h = SymMatrix::direct_sum(&plus.scale(4.0 * s), &minus.scale(4.0 / s));
        let reflection_delta = 0.5 * symplectic_eigenvalues(&h, space)?.iter().sum::<f64>();
        rows.push(ThetaScanRow {
            s,
            argmin_theta: thetas[idx],
            min_objective: lo,
            objective_at_zero: at_zero,
            reflection_delta,
            theta_spread: hi - lo,
        });
    }
    let grid_step = if thetas.len() > 1 {
        (thetas[1] - thetas[0]).abs()
    } else {
        2.0 * PI
    };
    Ok(ThetaScanReport {
        n,
        rows,
        lambdas,
        min_minor,
        q_form_residual,
        min_excess,
        grid_step,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, GraphSpec};
    use crate::solver::build_pair_edges;
    use approx::assert_abs_diff_eq;

    fn ring(n: usize) -> HamiltonianPair {
        build_pair_edges(&build_graph(&GraphSpec::Ring(n)).unwrap()).unwrap()
    }

    #[test]
    fn ring3_bruteforce() {
        let r = bruteforce_min_delta(&ring(3), &BruteForceOptions::default()).unwrap();
        assert!(r.converged);
        assert_abs_diff_eq!(r.delta, 3f64.sqrt() / 3.0, epsilon = 1e-6);
        assert_abs_diff_eq!(r.analytic, 3f64.sqrt() / 3.0, epsilon = 1e-6);
    }

    #[test]
    fn two_mode_pair_squeezes_without_bound() {
        let r = bruteforce_min_delta(&HamiltonianPair::two_mode(), &BruteForceOptions::default())
            .unwrap();
        assert!(r.delta < 0.01);
    }

    #[test]
    fn too_many_modes() {
        assert!(matches!(
            bruteforce_min_delta(&ring(9), &BruteForceOptions::default()),
            Err(OracleError::TooManyModes(9))
        ));
    }

    #[test]
    fn y_gap_special_cases() {
        let hp = ring(3);
        let s0 = SymMatrix::zeros(3);
        assert_eq!(y_gap(&s0, &SymMatrix::zeros(3), &hp).unwrap(), 0.0);
        // X = identity, Y = identity: the gap is tr[H₋] = ½.
        let gap = y_gap(&s0, &SymMatrix::identity(3), &hp).unwrap();
        assert_abs_diff_eq!(gap, hp.minus().trace(), epsilon = 1e-14);
        assert!(gap > 0.0);
    }

    #[test]
    fn objective_at_unit_s_is_flat_in_theta() {
        let report = theta_block_scan(5, &theta_grid(64), &[1.0]).unwrap();
        assert!(report.rows[0].theta_spread < 1e-12);
    }

    #[test]
    fn ring3_scan() {
        let report = theta_block_scan(3, &theta_grid(64), &[0.5, 1.0, 2.0]).unwrap();
        assert!(report.theta_optimal());
        assert!(report.lambda_positive());
        assert!(report.reflection_residual() < 1e-10);
        assert!(report.q_form_residual < 1e-12);
        for row in &report.rows {
            assert_abs_diff_eq!(row.objective_at_zero, 3f64.sqrt() / 3.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn grids() {
        let s = default_s_grid();
        assert_eq!(s.len(), 33);
        assert_abs_diff_eq!(s[16], 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(s[0], 0.125, epsilon = 1e-15);
        assert_abs_diff_eq!(s[32], 8.0, epsilon = 1e-14);
        assert_abs_diff_eq!(theta_grid(64)[32], PI, epsilon = 1e-15);
    }
}
