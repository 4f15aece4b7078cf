//! The frustrated Hamiltonian `H₊ ⊕ H₋`, its ground-state energy `E₀` by
//! several independent routes, and its (regularized) ground-state
//! covariance matrix.

use std::f64::consts::PI;
use std::fmt;

use thiserror::Error;

use crate::entanglement::{eof_from_delta, epr_uncertainty_global, EntanglementError};
use crate::graph::{
    build_graph, check_symmetric_graph, Graph, GraphError, GraphSpec, PlatonicSolid,
};
use crate::group::{twirl, GroupError, Perm, PermGroup};
use crate::linalg::{
    mat_func, psd_sqrt, snap_nonneg, sym_eig, CovarianceMatrix, LinalgError, MatFn, Matrix,
    SymMatrix,
};

/// Eigenvalue floor for the two blocks of a Hamiltonian pair.
pub const PSD_FLOOR: f64 = -1e-10;
/// Commutator norm below which `H₊` and `H₋` are treated as commuting.
pub const COMMUTE_TOL: f64 = 1e-10;
/// Largest graph on which [`emax_for_graph`] cross-checks two routes.
pub const CROSS_CHECK_MAX_N: usize = 64;
/// Agreement required between the routes in that cross-check.
pub const ROUTE_TOL: f64 = 1e-10;
/// `lim_{N→∞} E₀(ring N)`.
pub const RING_LIMIT: f64 = 2.0 / PI;
/// Upper bound on the number of terms summed by the torus closed form.
pub const TORUS_TERM_CAP: usize = 50_000_000;

/// Mixing weight for the generic combination `H₊ + φ H₋` whose eigenbasis
/// diagonalizes a commuting pair.
const JOINT_MIX: f64 = 0.754_877_666_246_692_7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SolverError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("swap hypothesis violated: no group element exchanges modes {k} and {l}")]
    SwapHypothesis { k: usize, l: usize },
    #[error("H+ and H- do not commute (commutator norm {residual:e})")]
    NotCommuting { residual: f64 },
    #[error("{block} has eigenvalue {eigenvalue:e} below the PSD floor")]
    NotPsd {
        block: &'static str,
        eigenvalue: f64,
    },
    #[error("routes disagree: {primary} gives {primary_value}, {check} gives {check_value}")]
    RouteMismatch {
        primary: Method,
        primary_value: f64,
        check: Method,
        check_value: f64,
    },
    #[error("E0 = {0} exceeds 1")]
    EnergyAboveVacuum(f64),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Entanglement(#[from] EntanglementError),
}

/// How a [`HamiltonianPair`] was assembled.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// `(1/|ℰ|) Σ_{(k,l)∈ℰ} h±^{(k,l)}`.
    EdgeAveraged,
    /// `(1/|G|) Σ_g T_g h±^{(k,l)} T_gᵀ`.
    GroupTwirled,
    /// Supplied directly.
    Direct,
}

/// The `QQ` block `H₊` and `PP` block `H₋` of a quadratic Hamiltonian,
/// together with permutations that leave both blocks invariant.
#[derive(Debug, Clone)]
pub struct HamiltonianPair {
    plus: SymMatrix,
    minus: SymMatrix,
    provenance: Provenance,
    symmetry: Vec<Perm>,
}

impl HamiltonianPair {
    pub fn new(
        plus: SymMatrix,
        minus: SymMatrix,
        provenance: Provenance,
        symmetry: Vec<Perm>,
    ) -> Result<Self, SolverError> {
        if plus.dim() != minus.dim() {
            return Err(LinalgError::DimensionMismatch {
                expected: plus.dim(),
                got: minus.dim(),
            }
            .into());
        }
        for (block, m) in [("H+", &plus), ("H-", &minus)] {
            let lowest = *sym_eig(m)?.values.last().expect("nonempty");
            if lowest < PSD_FLOOR {
                return Err(SolverError::NotPsd {
                    block,
                    eigenvalue: lowest,
                });
            }
        }
        if let Some(g) = symmetry.iter().find(|g| g.degree() != plus.dim()) {
            return Err(GroupError::DegreeMismatch {
                expected: plus.dim(),
                got: g.degree(),
            }
            .into());
        }
        Ok(HamiltonianPair {
            plus,
            minus,
            provenance,
            symmetry,
        })
    }

    /// The single-pair Hamiltonian `h±^{(0,1)}` on two modes.
    pub fn two_mode() -> Self {
        let (plus, minus) = local_pair(2, 0, 1);
        HamiltonianPair {
            plus,
            minus,
            provenance: Provenance::Direct,
            symmetry: vec![Perm::transposition(2, 0, 1)],
        }
    }

    pub fn plus(&self) -> &SymMatrix {
        &self.plus
    }

    pub fn minus(&self) -> &SymMatrix {
        &self.minus
    }

    pub fn provenance(&self) -> Provenance {
        self.provenance
    }

    /// Permutations under which the pair is invariant.
    pub fn symmetry(&self) -> &[Perm] {
        &self.symmetry
    }

    pub fn modes(&self) -> usize {
        self.plus.dim()
    }

    /// `H₊ ⊕ H₋` as a `2N × 2N` phase-space matrix.
    pub fn matrix(&self) -> SymMatrix {
        SymMatrix::direct_sum(&self.plus, &self.minus)
    }

    pub fn commutator_norm(&self) -> f64 {
        self.plus
            .commutator_norm(&self.minus)
            .expect("blocks share a dimension")
    }

    /// `(tr[Γ_qq H₊], tr[Γ_pp H₋])`.
    pub fn traces_against(&self, cm: &CovarianceMatrix) -> (f64, f64) {
        let frob = |a: &SymMatrix, b: &SymMatrix| a.as_matrix().dot(b.as_matrix());
        (frob(&cm.qq(), &self.plus), frob(&cm.pp(), &self.minus))
    }
}

/// `h±^{(k,l)} = ¼[|k⟩⟨k| + |l⟩⟨l| ± (|k⟩⟨l| + |l⟩⟨k|)]` on `n` modes.
pub fn local_pair(n: usize, k: usize, l: usize) -> (SymMatrix, SymMatrix) {
    let build = |sign: f64| {
        SymMatrix::from_fn(n, |i, j| {
            if (i == k && j == k) || (i == l && j == l) {
                0.25
            } else if (i == k && j == l) || (i == l && j == k) {
                0.25 * sign
            } else {
                0.0
            }
        })
        .expect("finite")
    };
    (build(1.0), build(-1.0))
}

/// Edge-averaged pair of a symmetric graph.
pub fn build_pair_edges(g: &Graph) -> Result<HamiltonianPair, SolverError> {
    check_symmetric_graph(g)?;
    let n = g.vertex_count();
    let w = 0.25 / g.edges().len() as f64;
    let mut plus = Matrix::zeros(n, n);
    let mut minus = Matrix::zeros(n, n);
    for &(k, l) in g.edges() {
        for m in [&mut plus, &mut minus] {
            m[(k, k)] += w;
            m[(l, l)] += w;
        }
        plus[(k, l)] += w;
        plus[(l, k)] += w;
        minus[(k, l)] -= w;
        minus[(l, k)] -= w;
    }
    HamiltonianPair::new(
        SymMatrix::new(plus)?,
        SymMatrix::new(minus)?,
        Provenance::EdgeAveraged,
        g.generators().to_vec(),
    )
}

/// `H± = (1/2N)(1 ± A/d)` for a symmetric graph of degree `d`.
pub fn build_pair_adjacency(g: &Graph) -> Result<HamiltonianPair, SolverError> {
    check_symmetric_graph(g)?;
    let n = g.vertex_count() as f64;
    let d = g.degree() as f64;
    let a = g.adjacency();
    let block = |sign: f64| {
        SymMatrix::from_fn(g.vertex_count(), |i, j| {
            let id = if i == j { 1.0 } else { 0.0 };
            (id + sign * a.get(i, j) / d) / (2.0 * n)
        })
    };
    HamiltonianPair::new(
        block(1.0)?,
        block(-1.0)?,
        Provenance::EdgeAveraged,
        g.generators().to_vec(),
    )
}

/// Group twirl of `h±^{(k,l)}`. The group must contain an element exchanging
/// `k` and `l`.
pub fn build_pair_group(
    group: &PermGroup,
    k: usize,
    l: usize,
) -> Result<HamiltonianPair, SolverError> {
    let n = group.degree();
    if k >= n || l >= n || k == l {
        return Err(GroupError::BadPair { k, l, degree: n }.into());
    }
    if group.swap_element(k, l).is_none() {
        return Err(SolverError::SwapHypothesis { k, l });
    }
    let (hp, hm) = local_pair(n, k, l);
    HamiltonianPair::new(
        twirl(&hp, group)?,
        twirl(&hm, group)?,
        Provenance::GroupTwirled,
        group.elements().to_vec(),
    )
}

/// `E₀ = 2 ‖(H₊^{1/2} H₋ H₊^{1/2})^{1/2}‖₁`, valid for any PSD pair.
pub fn ground_energy(hp: &HamiltonianPair) -> Result<f64, SolverError> {
    let root = mat_func(hp.plus(), MatFn::Sqrt)?;
    let inner = hp.minus().sandwich(&root)?;
    let eig = sym_eig(&inner)?;
    let scale = eig.spectral_norm();
    let mut total = 0.0;
    for &mu in &eig.values {
        total += psd_sqrt(mu, scale)?;
    }
    Ok(2.0 * total)
}

/// Simultaneous eigen-decomposition of a commuting pair.
#[derive(Debug, Clone)]
pub struct JointSpectrum {
    pub plus: Vec<f64>,
    pub minus: Vec<f64>,
    /// Common eigenvectors as columns.
    pub vectors: Matrix,
}

pub fn joint_spectrum(hp: &HamiltonianPair) -> Result<JointSpectrum, SolverError> {
    let residual = hp.commutator_norm();
    if residual > COMMUTE_TOL {
        return Err(SolverError::NotCommuting { residual });
    }
    let mix = hp.plus().add(&hp.minus().scale(JOINT_MIX))?;
    let eig = sym_eig(&mix)?;
    let v = &eig.vectors;
    let dp = v.transpose() * hp.plus().as_matrix() * v;
    let dm = v.transpose() * hp.minus().as_matrix() * v;
    let n = hp.modes();
    let mut off: f64 = 0.0;
    for j in 0..n {
        for i in 0..n {
            if i != j {
                off = off.max(dp[(i, j)].abs()).max(dm[(i, j)].abs());
            }
        }
    }
    let scale = hp
        .plus()
        .max_abs()
        .max(hp.minus().max_abs())
        .max(f64::MIN_POSITIVE);
    if off > 1e-9 * scale {
        return Err(SolverError::NotCommuting { residual: off });
    }
    Ok(JointSpectrum {
        plus: (0..n).map(|i| dp[(i, i)]).collect(),
        minus: (0..n).map(|i| dm[(i, i)]).collect(),
        vectors: eig.vectors,
    })
}

/// `E₀ = 2 Σ_i √(λ₊ᵢ λ₋ᵢ)` over the joint spectrum of a commuting pair.
pub fn ground_energy_spectral(hp: &HamiltonianPair) -> Result<f64, SolverError> {
    let js = joint_spectrum(hp)?;
    let scale = js
        .plus
        .iter()
        .chain(&js.minus)
        .fold(0.0f64, |m, x| m.max(x.abs()));
    let mut total = 0.0;
    for (&a, &b) in js.plus.iter().zip(&js.minus) {
        total += (snap_nonneg(a, scale)? * snap_nonneg(b, scale)?).sqrt();
    }
    Ok(2.0 * total)
}

/// `E₀ = (1/N) Σ_i √(1 − (a_i/d)²)` over the adjacency spectrum of a
/// symmetric graph.
pub fn ground_energy_adjacency(g: &Graph) -> Result<f64, SolverError> {
    check_symmetric_graph(g)?;
    let d = g.degree() as f64;
    let eig = sym_eig(&g.adjacency())?;
    let mut total = 0.0;
    for &a in &eig.values {
        let r = 1.0 - (a / d) * (a / d);
        total += snap_nonneg(r, 1.0)?.sqrt();
    }
    Ok(total / g.vertex_count() as f64)
}

/// Families with a closed-form ground-state energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedForm {
    Ring(usize),
    Torus {
        n: usize,
        dim: usize,
    },
    MeanField(usize),
    /// The `N → ∞` ring.
    RingLimit,
}

pub fn closed_form_energy(family: ClosedForm) -> Result<f64, SolverError> {
    let too_small = |what: &str, n: usize| {
        Err(SolverError::InvalidParameter(format!(
            "{what} closed form needs N >= 3, got {n}"
        )))
    };
    match family {
        ClosedForm::Ring(n) if n < 3 => too_small("ring", n),
        ClosedForm::Ring(n) => Ok(ring_cot(n as f64, n % 2 == 0)),
        ClosedForm::Torus { n, .. } if n < 3 => too_small("torus", n),
        ClosedForm::Torus { dim: 0, .. } => Err(SolverError::InvalidParameter(
            "torus closed form needs d >= 1".into(),
        )),
        ClosedForm::Torus { n, dim } => torus_sum(n, dim),
        ClosedForm::MeanField(n) if n < 3 => too_small("mean-field", n),
        ClosedForm::MeanField(n) => Ok(((n as f64 - 2.0) / n as f64).sqrt()),
        ClosedForm::RingLimit => Ok(RING_LIMIT),
    }
}

fn ring_cot(x: f64, even: bool) -> f64 {
    if even {
        2.0 / x / (PI / x).tan()
    } else {
        1.0 / x / (PI / (2.0 * x)).tan()
    }
}

/// The even and odd ring branches `((2/x) cot(π/x), (1/x) cot(π/2x))`
/// evaluated at real `x`.
pub fn ring_envelopes(x: f64) -> (f64, f64) {
    (ring_cot(x, true), ring_cot(x, false))
}

/// `(1/N) Σ_l |sin(2πl/N)|`, the ring energy summed over the circulant
/// spectrum.
pub fn ring_sin_sum(n: usize) -> f64 {
    let mut acc = Neumaier::default();
    for l in 0..n {
        acc.add((2.0 * PI * l as f64 / n as f64).sin().abs());
    }
    acc.total() / n as f64
}

/// `N^{-d} Σ_{l ∈ ℤ_N^d} √(1 − ((1/d) Σ_a cos(2π l_a/N))²)`.
fn torus_sum(n: usize, dim: usize) -> Result<f64, SolverError> {
    let total = (n as f64).powi(dim as i32);
    if total > TORUS_TERM_CAP as f64 {
        return Err(SolverError::InvalidParameter(format!(
            "torus({n},{dim}) has more than {TORUS_TERM_CAP} terms"
        )));
    }
    let cosines: Vec<f64> = (0..n)
        .map(|l| (2.0 * PI * l as f64 / n as f64).cos())
        .collect();
    let mut idx = vec![0usize; dim];
    let mut acc = Neumaier::default();
    loop {
        let lam = idx.iter().map(|&l| cosines[l]).sum::<f64>() / dim as f64;
        acc.add(snap_nonneg(1.0 - lam * lam, 1.0)?.sqrt());
        let mut axis = 0;
        loop {
            if axis == dim {
                return Ok(acc.total() / total);
            }
            idx[axis] += 1;
            if idx[axis] < n {
                break;
            }
            idx[axis] = 0;
            axis += 1;
        }
    }
}

/// Compensated summation.
#[derive(Debug, Default, Clone, Copy)]
pub(crate) struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn total(&self) -> f64 {
        self.sum + self.comp
    }
}

/// `Γ_ε = √((H₋+ε)(H₊+ε)⁻¹) ⊕ √((H₊+ε)(H₋+ε)⁻¹)` for a commuting pair.
pub fn ground_cm(hp: &HamiltonianPair, epsilon: f64) -> Result<CovarianceMatrix, SolverError> {
    if !(epsilon > 0.0 && epsilon.is_finite()) {
        return Err(SolverError::InvalidParameter(format!(
            "regularization must be positive, got {epsilon}"
        )));
    }
    let js = joint_spectrum(hp)?;
    let q: Vec<f64> = js
        .plus
        .iter()
        .zip(&js.minus)
        .map(|(&a, &b)| ((b.max(0.0) + epsilon) / (a.max(0.0) + epsilon)).sqrt())
        .collect();
    let inv: Vec<f64> = q.iter().map(|x| 1.0 / x).collect();
    let qq = SymMatrix::from_spectrum(&q, &js.vectors)?;
    let pp = SymMatrix::from_spectrum(&inv, &js.vectors)?;
    let cm = CovarianceMatrix::from_blocks(&qq, &pp)?;
    cm.validate()?;
    Ok(cm)
}

/// `ε ∈ {10⁻¹, …, 10⁻⁸}`.
pub fn epsilon_schedule() -> Vec<f64> {
    (1..=8).map(|k| 10f64.powi(-k)).collect()
}

/// Global EPR uncertainty of `Γ_ε` over a sequence of regularizations.
#[derive(Debug, Clone, PartialEq)]
pub struct EpsilonSweep {
    pub epsilons: Vec<f64>,
    pub deltas: Vec<f64>,
    /// Polynomial extrapolation to `ε = 0` in the variable `√ε`.
    pub extrapolated: f64,
}

impl EpsilonSweep {
    /// Whether `Δ` strictly decreases along the sweep.
    pub fn is_decreasing(&self) -> bool {
        self.deltas.windows(2).all(|w| w[1] < w[0])
    }

    pub fn smallest(&self) -> (f64, f64) {
        (*self.epsilons.last().unwrap(), *self.deltas.last().unwrap())
    }
}

/// Evaluates `Δ(Γ_ε)` for decreasing `ε` and extrapolates with a
/// polynomial in `√ε` through the last three points.
pub fn epsilon_sweep(hp: &HamiltonianPair, epsilons: &[f64]) -> Result<EpsilonSweep, SolverError> {
    if epsilons.len() < 2 {
        return Err(SolverError::InvalidParameter(
            "an epsilon sweep needs at least two values".into(),
        ));
    }
    let mut deltas = Vec::with_capacity(epsilons.len());
    for &eps in epsilons {
        let cm = ground_cm(hp, eps)?;
        deltas.push(epr_uncertainty_global(&cm, hp)?);
    }
    let start = epsilons.len().saturating_sub(3);
    let xs: Vec<f64> = epsilons[start..].iter().map(|e| e.sqrt()).collect();
    let extrapolated = neville_at_zero(&xs, &deltas[start..]);
    Ok(EpsilonSweep {
        epsilons: epsilons.to_vec(),
        deltas,
        extrapolated,
    })
}

fn neville_at_zero(xs: &[f64], ys: &[f64]) -> f64 {
    let mut p = ys.to_vec();
    for m in 1..xs.len() {
        for i in 0..xs.len() - m {
            p[i] = (xs[i + m] * p[i] - xs[i] * p[i + 1]) / (xs[i + m] - xs[i]);
        }
    }
    p[0]
}

/// The route that produced an `E₀`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedFormRing,
    ClosedFormTorus,
    ClosedFormMeanField,
    Spectral,
    TraceNorm,
    BrillouinZone,
}

impl Method {
    pub fn tag(self) -> &'static str {
        match self {
            Method::ClosedFormRing => "closed-form-ring",
            Method::ClosedFormTorus => "closed-form-torus",
            Method::ClosedFormMeanField => "closed-form-meanfield",
            Method::Spectral => "spectral",
            Method::TraceNorm => "trace-norm",
            Method::BrillouinZone => "brillouin-zone",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Closed-form ground-state energy of a platonic solid, as an expression and
/// its value.
pub fn platonic_closed_form(solid: PlatonicSolid) -> (&'static str, f64) {
    let r = f64::sqrt;
    match solid {
        PlatonicSolid::Tetrahedron | PlatonicSolid::Cube => ("1/sqrt(2)", 1.0 / r(2.0)),
        PlatonicSolid::Octahedron => ("(3+sqrt(3))/6", (3.0 + r(3.0)) / 6.0),
        PlatonicSolid::Icosahedron => ("1/sqrt(5)+1/sqrt(6)", 1.0 / r(5.0) + 1.0 / r(6.0)),
        PlatonicSolid::Dodecahedron => (
            "(12+5sqrt(2)+2sqrt(5))/30",
            (12.0 + 5.0 * r(2.0) + 2.0 * r(5.0)) / 30.0,
        ),
    }
}

/// Ground-state energy and the resulting maximal entanglement of a graph.
#[derive(Debug, Clone, PartialEq)]
pub struct FrustrationResult {
    pub graph: String,
    pub n: usize,
    pub degree: usize,
    pub e0: f64,
    /// `E_F(E₀)` in ebits; infinite when `unbounded`.
    pub e_max: f64,
    /// Set when `E₀ = 0`, the singular EPR limit.
    pub unbounded: bool,
    pub method: Method,
    /// `|E₀ − E₀'|` against a second, independent route, when one was run.
    pub cross_check: Option<f64>,
}

impl FrustrationResult {
    pub fn from_e0(
        graph: impl Into<String>,
        n: usize,
        degree: usize,
        e0: f64,
        method: Method,
    ) -> Result<Self, SolverError> {
        if e0 > 1.0 + 1e-12 {
            return Err(SolverError::EnergyAboveVacuum(e0));
        }
        let unbounded = e0 <= 0.0;
        let e_max = if unbounded {
            f64::INFINITY
        } else {
            eof_from_delta(e0)?
        };
        Ok(FrustrationResult {
            graph: graph.into(),
            n,
            degree,
            e0: e0.max(0.0),
            e_max,
            unbounded,
            method,
            cross_check: None,
        })
    }
}

/// `E₀` and `E_max` of a catalog graph by the cheapest exact route, checked
/// against the trace-norm route on graphs of at most 64 vertices.
pub fn emax_for_graph(spec: &GraphSpec) -> Result<FrustrationResult, SolverError> {
    spec.validate()?;
    let n = spec.vertex_count();
    let small = n <= CROSS_CHECK_MAX_N;
    let graph = if small
        || !matches!(
            spec,
            GraphSpec::Ring(_) | GraphSpec::Torus { .. } | GraphSpec::Complete(_)
        ) {
        Some(build_graph(spec)?)
    } else {
        None
    };
    let (e0, method, degree) = match *spec {
        GraphSpec::Ring(m) => (
            closed_form_energy(ClosedForm::Ring(m))?,
            Method::ClosedFormRing,
            2,
        ),
        GraphSpec::Torus { n: m, dim } => (
            closed_form_energy(ClosedForm::Torus { n: m, dim })?,
            Method::ClosedFormTorus,
            2 * dim,
        ),
        GraphSpec::Complete(m) => (
            closed_form_energy(ClosedForm::MeanField(m))?,
            Method::ClosedFormMeanField,
            m - 1,
        ),
        _ => {
            let g = graph.as_ref().expect("built above");
            (ground_energy_adjacency(g)?, Method::Spectral, g.degree())
        }
    };
    let mut result = FrustrationResult::from_e0(spec.to_string(), n, degree, e0, method)?;
    if let (true, Some(g)) = (small, graph.as_ref()) {
        let check = ground_energy(&build_pair_edges(g)?)?;
        let residual = (check - e0).abs();
        if residual >= ROUTE_TOL {
            return Err(SolverError::RouteMismatch {
                primary: method,
                primary_value: e0,
                check: Method::TraceNorm,
                check_value: check,
            });
        }
        result.cross_check = Some(residual);
    }
    Ok(result)
}

/// `E₀` and `E_max` of a user-supplied symmetric graph, by the spectral
/// route cross-checked against the trace norm.
pub fn emax_for_custom_graph(g: &Graph) -> Result<FrustrationResult, SolverError> {
    let e0 = ground_energy_adjacency(g)?;
    let mut result = FrustrationResult::from_e0(
        g.label(),
        g.vertex_count(),
        g.degree(),
        e0,
        Method::Spectral,
    )?;
    if g.vertex_count() <= CROSS_CHECK_MAX_N {
        let check = ground_energy(&build_pair_edges(g)?)?;
        let residual = (check - e0).abs();
        if residual >= ROUTE_TOL {
            return Err(SolverError::RouteMismatch {
                primary: Method::Spectral,
                primary_value: e0,
                check: Method::TraceNorm,
                check_value: check,
            });
        }
        result.cross_check = Some(residual);
    }
    Ok(result)
}
