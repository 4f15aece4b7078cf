//! Permutation groups acting on mode labels, group averages ("twirls") of
//! matrices and covariance matrices, and the spectral data of the averaged
//! two-site operators used by the Abelian-commutant argument.

use std::collections::{HashSet, VecDeque};

use num_complex::Complex64;
use thiserror::Error;

use crate::linalg::{sym_eig, CovarianceMatrix, LinalgError, Matrix, SymMatrix};

/// Default cap on explicitly materialized groups.
pub const DEFAULT_GROUP_CAP: usize = 1_000_000;

const COMMUTANT_TOL: f64 = 1e-10;
const CLUSTER_TOL: f64 = 1e-9;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GroupError {
    #[error("not a permutation of 0..{degree}: {images:?}")]
    NotBijection { degree: usize, images: Vec<usize> },
    #[error("degree mismatch: expected {expected}, got {got}")]
    DegreeMismatch { expected: usize, got: usize },
    #[error("group closure exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("mode pair ({k}, {l}) is invalid for degree {degree}")]
    BadPair { k: usize, l: usize, degree: usize },
    #[error("group has no designated mode pair")]
    MissingPair,
    #[error("commutant not Abelian: averaged two-site operators fail to commute (residual {residual:e})")]
    NotAbelian { residual: f64 },
    #[error("simultaneous diagonalization failed (off-diagonal residual {residual:e})")]
    Diagonalization { residual: f64 },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// A bijection of `{0, ..., n-1}`.
///
/// As a matrix it acts by `T|k⟩ = |g(k)⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<usize>);

impl Perm {
    pub fn new(images: Vec<usize>) -> Result<Self, GroupError> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(GroupError::NotBijection { degree: n, images });
            }
            seen[i] = true;
        }
        Ok(Perm(images))
    }

    pub fn identity(n: usize) -> Self {
        Perm((0..n).collect())
    }

    /// The cyclic shift `i ↦ i + 1 mod n`.
    pub fn shift(n: usize) -> Self {
        Perm((0..n).map(|i| (i + 1) % n).collect())
    }

    /// Transposition of `a` and `b`.
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(a, b);
        Perm(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// `self ∘ other`, i.e. `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        Perm(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    pub fn matrix(&self) -> Matrix {
        let n = self.degree();
        let mut t = Matrix::zeros(n, n);
        for (k, &gk) in self.0.iter().enumerate() {
            t[(gk, k)] = 1.0;
        }
        t
    }

    /// Does `g` exchange `k` and `l`?
    pub fn swaps(&self, k: usize, l: usize) -> bool {
        self.0[k] == l && self.0[l] == k
    }
}

/// A permutation group stored as its full element list.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Perm>,
    pair: Option<(usize, usize)>,
}

impl PermGroup {
    /// Breadth-first closure of `generators`.
    pub fn generate(degree: usize, generators: &[Perm], cap: usize) -> Result<Self, GroupError> {
        for g in generators {
            if g.degree() != degree {
                return Err(GroupError::DegreeMismatch {
                    expected: degree,
                    got: g.degree(),
                });
            }
        }
        let id = Perm::identity(degree);
        let mut seen: HashSet<Perm> = HashSet::new();
        let mut elements = vec![id.clone()];
        seen.insert(id.clone());
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            for g in generators {
                let next = g.compose(&e);
                if seen.insert(next.clone()) {
                    if elements.len() == cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    elements.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        Ok(PermGroup {
            degree,
            elements,
            pair: None,
        })
    }

    /// Translations of a `dims[0] × dims[1] × ...` torus, site index
    /// `Σ x_a · Π_{b<a} dims[b]`.
    pub fn translations(dims: &[usize]) -> Result<Self, GroupError> {
        let n: usize = dims.iter().product();
        let gens: Vec<Perm> = (0..dims.len())
            .map(|axis| torus_shift(dims, axis))
            .collect();
        Self::generate(n, &gens, n.max(1))
    }

    pub fn with_pair(mut self, k: usize, l: usize) -> Result<Self, GroupError> {
        if k >= self.degree || l >= self.degree || k == l {
            return Err(GroupError::BadPair {
                k,
                l,
                degree: self.degree,
            });
        }
        self.pair = Some((k, l));
        Ok(self)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn pair(&self) -> Option<(usize, usize)> {
        self.pair
    }

    pub fn swap_element(&self, k: usize, l: usize) -> Option<&Perm> {
        self.elements.iter().find(|g| g.swaps(k, l))
    }

    /// True when the group is exactly the cyclic group of `i ↦ i + 1`.
    pub fn is_cyclic_shift_group(&self) -> bool {
        let shift = Perm::shift(self.degree);
        self.order() == self.degree && self.elements.contains(&shift)
    }
}

pub(crate) fn torus_shift(dims: &[usize], axis: usize) -> Perm {
    let n: usize = dims.iter().product();
    let stride: usize = dims[..axis].iter().product();
    let len = dims[axis];
    Perm(
        (0..n)
            .map(|i| {
                let x = (i / stride) % len;
                i - x * stride + ((x + 1) % len) * stride
            })
            .collect(),
    )
}

/// `(1/|G|) Σ_g T_g M T_gᵀ`.
pub fn twirl(m: &SymMatrix, group: &PermGroup) -> Result<SymMatrix, GroupError> {
    let n = m.dim();
    if n != group.degree() {
        return Err(GroupError::DegreeMismatch {
            expected: group.degree(),
            got: n,
        });
    }
    let mut acc = Matrix::zeros(n, n);
    for g in group.elements() {
        let img = g.images();
        for j in 0..n {
            for i in 0..n {
                acc[(img[i], img[j])] += m.get(i, j);
            }
        }
    }
    Ok(SymMatrix::new(acc / group.order() as f64)?)
}

/// Group average of a covariance matrix under `T_g ⊕ T_g`.
pub fn twirl_cm(cm: &CovarianceMatrix, group: &PermGroup) -> Result<CovarianceMatrix, GroupError> {
    let gamma = twirl_phase_space(cm.matrix(), group)?;
    Ok(CovarianceMatrix::new(cm.space(), gamma)?)
}

/// Group average of a `2N × 2N` matrix under `T_g ⊕ T_g`.
pub fn twirl_phase_space(m: &SymMatrix, group: &PermGroup) -> Result<SymMatrix, GroupError> {
    let n = group.degree();
    if m.dim() != 2 * n {
        return Err(GroupError::DegreeMismatch {
            expected: 2 * n,
            got: m.dim(),
        });
    }
    let mut acc = Matrix::zeros(2 * n, 2 * n);
    for g in group.elements() {
        let img: Vec<usize> = g
            .images()
            .iter()
            .copied()
            .chain(g.images().iter().map(|&i| i + n))
            .collect();
        for j in 0..2 * n {
            for i in 0..2 * n {
                acc[(img[i], img[j])] += m.get(i, j);
            }
        }
    }
    Ok(SymMatrix::new(acc / group.order() as f64)?)
}

/// Twirl over the translation group of a torus without materializing it:
/// the result is the circulant projection `R(i, j) = c(j ⊖ i)` with
/// `c(δ) = (1/N) Σ_a M(a, a ⊕ δ)`, i.e. `M` with its off-diagonal Fourier
/// components removed.
pub fn twirl_translations(m: &SymMatrix, dims: &[usize]) -> Result<SymMatrix, GroupError> {
    let n: usize = dims.iter().product();
    if m.dim() != n {
        return Err(GroupError::DegreeMismatch {
            expected: n,
            got: m.dim(),
        });
    }
    let coords = |i: usize| -> Vec<usize> {
        let mut rest = i;
        dims.iter()
            .map(|&d| {
                let x = rest % d;
                rest /= d;
                x
            })
            .collect()
    };
    let index = |x: &[usize]| -> usize {
        x.iter()
            .zip(dims)
            .rev()
            .fold(0, |acc, (&xi, &d)| acc * d + xi)
    };
    let offset = |a: usize, b: usize, plus: bool| -> usize {
        let (xa, xb) = (coords(a), coords(b));
        let x: Vec<usize> = xa
            .iter()
            .zip(&xb)
            .zip(dims)
            .map(|((&p, &q), &d)| if plus { (p + q) % d } else { (q + d - p) % d })
            .collect();
        index(&x)
    };
    let mut c = vec![0.0; n];
    for (delta, cd) in c.iter_mut().enumerate() {
        let mut s = 0.0;
        for a in 0..n {
            s += m.get(a, offset(a, delta, true));
        }
        *cd = s / n as f64;
    }
    Ok(SymMatrix::from_fn(n, |i, j| c[offset(i, j, false)])?)
}

/// Diagonal elements `λ_ij^μ` of the averaged two-site operators in a basis
/// that diagonalizes all of them at once.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CommutantBlock {
    pub l00: f64,
    pub l01_re: f64,
    pub l01_im: f64,
    pub l11: f64,
}

impl CommutantBlock {
    /// `λ₀₀λ₁₁ − |λ₀₁|²`; nonnegative for a genuine group average.
    pub fn minor(&self) -> f64 {
        self.l00 * self.l11 - (self.l01_re * self.l01_re + self.l01_im * self.l01_im)
    }

    pub fn l01(&self) -> Complex64 {
        Complex64::new(self.l01_re, self.l01_im)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiagonalBasis {
    /// `w_μ(k) = e^{-2πiμk/N}/√N`, `μ = 0..N`.
    Fourier,
    /// Real eigenbasis of a generic symmetric combination, with 2×2 real
    /// rotations resolving the antisymmetric part into complex pairs.
    Generic,
}

#[derive(Debug, Clone)]
pub struct CommutantBlockData {
    pub blocks: Vec<CommutantBlock>,
    pub basis: DiagonalBasis,
}

/// The averaged operators `A_ij = (1/|G|) Σ_g T_g|i⟩⟨j|T_gᵀ` with `|0⟩ = |k⟩`
/// and `|1⟩ = |l⟩`, returned as `[A₀₀, A₀₁, A₁₀, A₁₁]`.
pub fn averaged_pair_operators(group: &PermGroup, k: usize, l: usize) -> [Matrix; 4] {
    let n = group.degree();
    let mut out = [
        Matrix::zeros(n, n),
        Matrix::zeros(n, n),
        Matrix::zeros(n, n),
        Matrix::zeros(n, n),
    ];
    let w = 1.0 / group.order() as f64;
    for g in group.elements() {
        let (gk, gl) = (g.apply(k), g.apply(l));
        out[0][(gk, gk)] += w;
        out[1][(gk, gl)] += w;
        out[2][(gl, gk)] += w;
        out[3][(gl, gl)] += w;
    }
    out
}

/// Simultaneous spectral data of the averaged two-site operators for the
/// group's designated pair. Fails when those operators do not commute.
pub fn commutant_blocks(group: &PermGroup) -> Result<CommutantBlockData, GroupError> {
    let (k, l) = group.pair().ok_or(GroupError::MissingPair)?;
    let ops = averaged_pair_operators(group, k, l);
    let mut residual: f64 = 0.0;
    for a in 0..4 {
        for b in (a + 1)..4 {
            residual = residual.max((&ops[a] * &ops[b] - &ops[b] * &ops[a]).norm());
        }
    }
    if residual > COMMUTANT_TOL {
        return Err(GroupError::NotAbelian { residual });
    }

    if group.is_cyclic_shift_group() {
        let n = group.degree();
        let basis: Vec<Vec<Complex64>> = (0..n)
            .map(|mu| {
                (0..n)
                    .map(|s| {
                        Complex64::from_polar(
                            1.0 / (n as f64).sqrt(),
                            -2.0 * std::f64::consts::PI * (mu * s) as f64 / n as f64,
                        )
                    })
                    .collect()
            })
            .collect();
        return Ok(CommutantBlockData {
            blocks: blocks_in_basis(&ops, &basis),
            basis: DiagonalBasis::Fourier,
        });
    }

    let basis = generic_joint_basis(&ops)?;
    let off = offdiagonal_residual(&ops, &basis);
    if off > 1e-8 {
        return Err(GroupError::Diagonalization { residual: off });
    }
    Ok(CommutantBlockData {
        blocks: blocks_in_basis(&ops, &basis),
        basis: DiagonalBasis::Generic,
    })
}

fn bilinear(a: &Matrix, u: &[Complex64], v: &[Complex64]) -> Complex64 {
    let n = a.nrows();
    let mut s = Complex64::new(0.0, 0.0);
    for i in 0..n {
        if u[i] == Complex64::new(0.0, 0.0) {
            continue;
        }
        let mut row = Complex64::new(0.0, 0.0);
        for j in 0..n {
            row += a[(i, j)] * v[j];
        }
        s += u[i].conj() * row;
    }
    s
}

fn blocks_in_basis(ops: &[Matrix; 4], basis: &[Vec<Complex64>]) -> Vec<CommutantBlock> {
    basis
        .iter()
        .map(|w| {
            let l01 = bilinear(&ops[1], w, w);
            CommutantBlock {
                l00: bilinear(&ops[0], w, w).re,
                l01_re: l01.re,
                l01_im: l01.im,
                l11: bilinear(&ops[3], w, w).re,
            }
        })
        .collect()
}

fn offdiagonal_residual(ops: &[Matrix; 4], basis: &[Vec<Complex64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for a in ops {
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                if i != j {
                    worst = worst.max(bilinear(a, u, v).norm());
                }
            }
        }
    }
    worst
}

/// Groups indices of a descending list into runs of numerically equal values.
fn clusters(values: &[f64], tol: f64) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = Vec::new();
    for (i, &v) in values.iter().enumerate() {
        match out.last_mut() {
            Some(run) if (values[run[0]] - v).abs() <= tol => run.push(i),
            _ => out.push(vec![i]),
        }
    }
    out
}

fn generic_joint_basis(ops: &[Matrix; 4]) -> Result<Vec<Vec<Complex64>>, GroupError> {
    let n = ops[0].nrows();
    // Irrational weights keep accidental degeneracies of the combination away.
    let sym = &ops[0]
        + &ops[3] * 0.618_033_988_749_894_8
        + (&ops[1] + &ops[2]) * std::f64::consts::FRAC_1_PI;
    let anti = &ops[1] - &ops[2];
    let eig = sym_eig(&SymMatrix::new(sym)?)?;
    let scale = eig.spectral_norm().max(1e-300);
    let mut basis = Vec::with_capacity(n);

    for cluster in clusters(&eig.values, CLUSTER_TOL * scale) {
        let m = cluster.len();
        let v = Matrix::from_fn(n, m, |r, c| eig.vectors[(r, cluster[c])]);
        let to_complex = |x: &nalgebra::DVector<f64>| -> Vec<Complex64> {
            x.iter().map(|&r| Complex64::new(r, 0.0)).collect()
        };
        if m == 1 {
            basis.push(to_complex(&v.column(0).into_owned()));
            continue;
        }
        let kc = v.transpose() * &anti * &v;
        let gram = SymMatrix::new(kc.transpose() * &kc)?;
        let inner = sym_eig(&gram)?;
        let kscale = inner.spectral_norm().max(scale * scale);
        for sub in clusters(&inner.values, CLUSTER_TOL * kscale) {
            let kappa2 = inner.values[sub[0]];
            let cols: Vec<nalgebra::DVector<f64>> = sub
                .iter()
                .map(|&c| inner.vectors.column(c).into_owned())
                .collect();
            if kappa2 <= CLUSTER_TOL * kscale {
                for u in cols {
                    basis.push(to_complex(&(&v * u)));
                }
                continue;
            }
            let kappa = kappa2.sqrt();
            let mut picked: Vec<nalgebra::DVector<f64>> = Vec::new();
            for mut u in cols {
                for p in &picked {
                    let proj = p.dot(&u);
                    u -= p * proj;
                }
                let norm = u.norm();
                if norm < 1e-6 {
                    continue;
                }
                u /= norm;
                let w = &kc * &u / kappa;
                let (ue, we) = (&v * &u, &v * &w);
                let s = std::f64::consts::FRAC_1_SQRT_2;
                basis.push(
                    ue.iter()
                        .zip(we.iter())
                        .map(|(&a, &b)| Complex64::new(a * s, b * s))
                        .collect(),
                );
                basis.push(
                    ue.iter()
                        .zip(we.iter())
                        .map(|(&a, &b)| Complex64::new(a * s, -b * s))
                        .collect(),
                );
                picked.push(u);
                picked.push(w);
            }
        }
    }
    if basis.len() != n {
        return Err(GroupError::Diagonalization {
            residual: (n as f64 - basis.len() as f64).abs(),
        });
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    fn reflection(n: usize) -> Perm {
        Perm::new((0..n).map(|i| (n - i) % n).collect()).unwrap()
    }

    #[test]
    fn closure_orders() {
        let c4 = PermGroup::generate(4, &[Perm::shift(4)], 100).unwrap();
        assert_eq!(c4.order(), 4);
        let d5 = PermGroup::generate(5, &[Perm::shift(5), reflection(5)], 100).unwrap();
        assert_eq!(d5.order(), 10);
        let trivial = PermGroup::generate(3, &[], 100).unwrap();
        assert_eq!(trivial.order(), 1);
        assert!(trivial.elements()[0].is_identity());
    }

    #[test]
    fn closure_cap_is_enforced() {
        let gens = [Perm::shift(6), Perm::transposition(6, 0, 1)];
        assert_eq!(
            PermGroup::generate(6, &gens, 100).unwrap_err(),
            GroupError::CapExceeded { cap: 100 }
        );
        assert_eq!(PermGroup::generate(6, &gens, 720).unwrap().order(), 720);
    }

    #[test]
    fn perm_rejects_non_bijection() {
        assert!(Perm::new(vec![0, 0, 1]).is_err());
        assert!(Perm::new(vec![0, 3, 1]).is_err());
    }

    #[test]
    fn perm_matrix_maps_basis_vectors() {
        let g = Perm::new(vec![2, 0, 1]).unwrap();
        let t = g.matrix();
        for k in 0..3 {
            let mut e = nalgebra::DVector::zeros(3);
            e[k] = 1.0;
            let img = &t * e;
            assert_eq!(img[g.apply(k)], 1.0);
        }
        assert!(g.compose(&g.inverse()).is_identity());
    }

    #[test]
    fn twirl_of_identity_and_projector() {
        let d4 = PermGroup::generate(4, &[Perm::shift(4), reflection(4)], 100).unwrap();
        assert_eq!(
            twirl(&SymMatrix::identity(4), &d4).unwrap(),
            SymMatrix::identity(4)
        );
        let s4 =
            PermGroup::generate(4, &[Perm::shift(4), Perm::transposition(4, 0, 1)], 100).unwrap();
        let p0 = SymMatrix::from_fn(4, |i, j| if i == 0 && j == 0 { 1.0 } else { 0.0 }).unwrap();
        let avg = twirl(&p0, &s4).unwrap();
        assert!(avg.max_abs_diff(&SymMatrix::identity(4).scale(0.25)) < 1e-15);
    }

    #[test]
    fn translation_shortcut_matches_generic_twirl() {
        let dims = [3, 4];
        let n = 12;
        let m = SymMatrix::from_fn(n, |i, j| ((i * 7 + j * 3) % 5) as f64 - 1.3).unwrap();
        let generic = twirl(&m, &PermGroup::translations(&dims).unwrap()).unwrap();
        let fast = twirl_translations(&m, &dims).unwrap();
        assert!(generic.max_abs_diff(&fast) < 1e-12);
    }

    #[test]
    fn cyclic_three_blocks_are_fourier() {
        let g = PermGroup::generate(3, &[Perm::shift(3)], 10)
            .unwrap()
            .with_pair(0, 1)
            .unwrap();
        let data = commutant_blocks(&g).unwrap();
        assert_eq!(data.basis, DiagonalBasis::Fourier);
        for (mu, b) in data.blocks.iter().enumerate() {
            assert_abs_diff_eq!(b.l00, 1.0 / 3.0, epsilon = 1e-15);
            assert_abs_diff_eq!(b.l11, 1.0 / 3.0, epsilon = 1e-15);
            let phase = -2.0 * PI * mu as f64 / 3.0;
            assert_abs_diff_eq!(b.l01_re, phase.cos() / 3.0, epsilon = 1e-15);
            assert_abs_diff_eq!(b.l01_im, phase.sin() / 3.0, epsilon = 1e-15);
        }
    }

    #[test]
    fn cyclic_two_blocks() {
        let g = PermGroup::generate(2, &[Perm::shift(2)], 10)
            .unwrap()
            .with_pair(0, 1)
            .unwrap();
        let data = commutant_blocks(&g).unwrap();
        let mut re: Vec<f64> = data.blocks.iter().map(|b| b.l01_re).collect();
        re.sort_by(f64::total_cmp);
        assert_abs_diff_eq!(re[0], -0.5, epsilon = 1e-15);
        assert_abs_diff_eq!(re[1], 0.5, epsilon = 1e-15);
        for b in &data.blocks {
            assert_abs_diff_eq!(b.l00, 0.5, epsilon = 1e-15);
            assert_abs_diff_eq!(b.l11, 0.5, epsilon = 1e-15);
        }
    }

    #[test]
    fn trivial_group_commutant_is_not_abelian() {
        let g = PermGroup::generate(2, &[], 10)
            .unwrap()
            .with_pair(0, 1)
            .unwrap();
        assert!(matches!(
            commutant_blocks(&g),
            Err(GroupError::NotAbelian { .. })
        ));
    }

    #[test]
    fn missing_pair_is_an_error() {
        let g = PermGroup::generate(3, &[Perm::shift(3)], 10).unwrap();
        assert_eq!(commutant_blocks(&g).unwrap_err(), GroupError::MissingPair);
    }

    #[test]
    fn generic_basis_agrees_with_fourier() {
        // Same cyclic group, but generated from the inverse shift so the
        // Fourier fast path is still taken; then force the generic path.
        for n in 3..=9 {
            let g = PermGroup::generate(n, &[Perm::shift(n)], 100)
                .unwrap()
                .with_pair(0, 1)
                .unwrap();
            let fourier = commutant_blocks(&g).unwrap();
            let ops = averaged_pair_operators(&g, 0, 1);
            let basis = generic_joint_basis(&ops).unwrap();
            assert!(offdiagonal_residual(&ops, &basis) < 1e-10);
            let generic = blocks_in_basis(&ops, &basis);
            let key = |b: &CommutantBlock| (b.l01_re, b.l01_im.abs());
            let mut a: Vec<_> = fourier.blocks.iter().map(key).collect();
            let mut b: Vec<_> = generic.iter().map(key).collect();
            a.sort_by(|x, y| x.partial_cmp(y).unwrap());
            b.sort_by(|x, y| x.partial_cmp(y).unwrap());
            for (x, y) in a.iter().zip(&b) {
                assert_abs_diff_eq!(x.0, y.0, epsilon = 1e-10);
                assert_abs_diff_eq!(x.1, y.1, epsilon = 1e-10);
            }
        }
    }

    #[test]
    fn torus_translations_order() {
        let g = PermGroup::translations(&[3, 4, 2]).unwrap();
        assert_eq!(g.order(), 24);
    }
}
