//! Acceptance criteria, one test each. Every test writes a single
//! `PASS`/`FAIL` line to stderr (uncaptured) before asserting.
//!
//! ```text
//! cargo test --test acceptance -- --test-threads=1
//! ```

use std::f64::consts::PI;
use std::io::Write;
use std::time::{Duration, Instant};

use gfrust::entanglement::epr_uncertainty_global;
use gfrust::graph::{build_graph, catalog_up_to, GraphSpec, PlatonicSolid};
use gfrust::group::{Perm, PermGroup};
use gfrust::lattice::{infinite_lattice_energy, LatticeKind, MIN_RESOLUTION};
use gfrust::oracle::{
    theta_block_scan, bruteforce_min_delta, default_s_grid, probe_y_nonzero, theta_grid,
    BruteForceOptions,
};
use gfrust::solver::{
    build_pair_edges, build_pair_group, closed_form_energy, emax_for_graph, epsilon_sweep,
    ground_cm, ground_energy, ground_energy_adjacency, ground_energy_spectral, ClosedForm,
};

/// Entanglement of formation of a symmetric two-mode Gaussian state with
/// EPR uncertainty `delta`, written out independently of the library.
fn eof(delta: f64) -> f64 {
    if delta >= 1.0 {
        return 0.0;
    }
    let (a, b) = (delta.sqrt(), 1.0 / delta.sqrt());
    let cp = (b + a).powi(2) / 4.0;
    let cm = (b - a).powi(2) / 4.0;
    cp * cp.log2() - cm * cm.log2()
}

fn report(id: u32, title: &str, passed: bool, detail: String) {
    let verdict = if passed { "PASS" } else { "FAIL" };
    let _ = writeln!(
        std::io::stderr(),
        "[criterion {id:>2}] {verdict} {title}: {detail}"
    );
    assert!(passed, "criterion {id} ({title}) failed: {detail}");
}

fn solid_closed_form(solid: PlatonicSolid) -> f64 {
    let r = f64::sqrt;
    match solid {
        PlatonicSolid::Tetrahedron | PlatonicSolid::Cube => 1.0 / r(2.0),
        PlatonicSolid::Octahedron => (3.0 + r(3.0)) / 6.0,
        PlatonicSolid::Icosahedron => 1.0 / r(5.0) + 1.0 / r(6.0),
        PlatonicSolid::Dodecahedron => (12.0 + 5.0 * r(2.0) + 2.0 * r(5.0)) / 30.0,
    }
}

#[test]
fn criterion_01_platonic_closed_forms() {
    let published = [
        (PlatonicSolid::Tetrahedron, 19.74),
        (PlatonicSolid::Cube, 19.74),
        (PlatonicSolid::Octahedron, 10.75),
        (PlatonicSolid::Icosahedron, 5.37),
        (PlatonicSolid::Dodecahedron, 11.12),
    ];
    let start = Instant::now();
    let results: Vec<_> = published
        .iter()
        .map(|&(s, _)| emax_for_graph(&GraphSpec::Platonic(s)).unwrap())
        .collect();
    let elapsed = start.elapsed();
    let mut worst_e0: f64 = 0.0;
    let mut worst_emax: f64 = 0.0;
    for ((solid, table), r) in published.iter().zip(&results) {
        worst_e0 = worst_e0.max((r.e0 - solid_closed_form(*solid)).abs());
        worst_emax = worst_emax.max((100.0 * r.e_max - table).abs());
    }
    report(
        1,
        "platonic closed forms",
        worst_e0 <= 1e-10 && worst_emax <= 0.005 && elapsed < Duration::from_secs(1),
        format!("max |dE0|={worst_e0:.1e} (tol 1e-10), max |dE_max|={worst_emax:.4}e-2 (tol 0.005e-2), {elapsed:.2?} (< 1 s)"),
    );
}

#[test]
fn criterion_02_lattice_table() {
    let published = [
        (LatticeKind::Honeycomb, 10.61),
        (LatticeKind::Square, 6.31),
        (LatticeKind::Triangular, 2.69),
        (LatticeKind::Cubic, 2.62),
    ];
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut values = Vec::new();
    for (kind, table) in published {
        let l = infinite_lattice_energy(kind, MIN_RESOLUTION).unwrap();
        let e = 100.0 * eof(l.e0);
        values.push(format!("{}={e:.4}", kind.name()));
        worst = worst.max((e - table).abs());
    }
    let elapsed = start.elapsed();
    report(
        2,
        "lattice table",
        worst <= 0.01 && elapsed < Duration::from_secs(30),
        format!(
            "{} (x1e-2), max dev {worst:.4}e-2 (tol 0.01e-2), {elapsed:.2?} (< 30 s)",
            values.join(" ")
        ),
    );
}

#[test]
fn criterion_03_ring_closed_form_and_parity() {
    let sin_sum = |n: usize| -> f64 {
        (0..n)
            .map(|l| (2.0 * PI * l as f64 / n as f64).sin().abs())
            .sum::<f64>()
            / n as f64
    };
    let mut worst: f64 = 0.0;
    for n in 3..=200 {
        let e = closed_form_energy(ClosedForm::Ring(n)).unwrap();
        worst = worst.max((e - sin_sum(n)).abs());
    }
    let mut violations = Vec::new();
    for n in (3..=199).step_by(2) {
        let odd = closed_form_energy(ClosedForm::Ring(n)).unwrap();
        let next = closed_form_energy(ClosedForm::Ring(n + 1)).unwrap();
        if odd <= next {
            violations.push(n);
        }
    }
    report(
        3,
        "ring cot form vs |sin| sum, odd-N suppression",
        worst <= 1e-12 && violations.is_empty(),
        format!("max diff {worst:.1e} over N=3..200 (tol 1e-12), parity violations {violations:?}"),
    );
}

#[test]
fn criterion_04_ring_limit() {
    let e = eof(closed_form_energy(ClosedForm::Ring(200)).unwrap());
    let dev = (e - 0.2981).abs();
    report(
        4,
        "ring limit",
        dev <= 0.002,
        format!("E_max(ring 200)={e:.5} ebits, |dev from 0.2981|={dev:.5} (tol 0.002)"),
    );
}

#[test]
fn criterion_05_mean_field() {
    let mut worst: f64 = 0.0;
    for n in 3..=64usize {
        let hp = build_pair_edges(&build_graph(&GraphSpec::Complete(n)).unwrap()).unwrap();
        let exact = ((n as f64 - 2.0) / n as f64).sqrt();
        worst = worst.max((ground_energy(&hp).unwrap() - exact).abs());
    }
    let products: Vec<f64> = (50..=5000usize)
        .map(|n| {
            let e0 = closed_form_energy(ClosedForm::MeanField(n)).unwrap();
            let nf = n as f64;
            eof(e0) * nf * nf / nf.log2()
        })
        .collect();
    let lo = products.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = products.iter().copied().fold(0.0, f64::max);
    report(
        5,
        "mean-field closed form and 1/(N^2 log N) decay",
        worst <= 1e-10 && hi <= 3.0 * lo,
        format!("max |dE0|={worst:.1e} on N=3..64 (tol 1e-10); E_max N^2/log2 N in [{lo:.4}, {hi:.4}], ratio {:.3} (<= 3)", hi / lo),
    );
}

fn closed_form_for(spec: &GraphSpec) -> Option<f64> {
    match *spec {
        GraphSpec::Ring(n) => closed_form_energy(ClosedForm::Ring(n)).ok(),
        GraphSpec::Torus { n, dim } => closed_form_energy(ClosedForm::Torus { n, dim }).ok(),
        GraphSpec::Complete(n) => closed_form_energy(ClosedForm::MeanField(n)).ok(),
        GraphSpec::Platonic(s) => Some(solid_closed_form(s)),
        GraphSpec::HoneycombTorus(_) | GraphSpec::TriangularTorus(_) => None,
    }
}

#[test]
fn criterion_06_route_equivalence() {
    let catalog = catalog_up_to(64);
    let mut worst: (f64, String) = (0.0, String::new());
    let mut with_closed = 0;
    for spec in &catalog {
        let g = build_graph(spec).unwrap();
        let hp = build_pair_edges(&g).unwrap();
        let mut values = vec![
            ground_energy(&hp).unwrap(),
            ground_energy_spectral(&hp).unwrap(),
            ground_energy_adjacency(&g).unwrap(),
        ];
        if let Some(c) = closed_form_for(spec) {
            values.push(c);
            with_closed += 1;
        }
        let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
        let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
        if hi - lo > worst.0 {
            worst = (hi - lo, spec.to_string());
        }
    }
    report(
        6,
        "route equivalence",
        worst.0 <= 1e-10,
        format!(
            "{} graphs ({with_closed} with closed forms), max spread {:.1e} at {} (tol 1e-10)",
            catalog.len(),
            worst.0,
            worst.1
        ),
    );
}

#[test]
fn criterion_07_oracle_equivalence() {
    let mut specs: Vec<GraphSpec> = (3..=6).map(GraphSpec::Ring).collect();
    specs.extend((3..=6).map(GraphSpec::Complete));
    specs.push(GraphSpec::Platonic(PlatonicSolid::Octahedron));
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    let mut min_gap = f64::INFINITY;
    for spec in &specs {
        let hp = build_pair_edges(&build_graph(spec).unwrap()).unwrap();
        let reference = closed_form_for(spec).unwrap();
        let bf = bruteforce_min_delta(&hp, &BruteForceOptions::default()).unwrap();
        worst = worst.max((bf.delta - reference).abs());
        min_gap = min_gap.min(probe_y_nonzero(&hp, &bf.log_x, 100, 7).unwrap().min_gap);
    }
    let elapsed = start.elapsed();
    report(
        7,
        "brute-force oracle",
        worst <= 1e-5 && min_gap >= -1e-10 && elapsed < Duration::from_secs(300),
        format!("{} graphs, max |min - E0|={worst:.1e} (tol 1e-5), min Y-gap {min_gap:.1e} (>= -1e-10), {elapsed:.1?} (< 5 min)", specs.len()),
    );
}

#[test]
fn criterion_08_ground_state_convergence() {
    let mut specs: Vec<GraphSpec> = (3..=8).map(GraphSpec::Ring).collect();
    specs.extend(PlatonicSolid::ALL.map(GraphSpec::Platonic));
    let epsilons: Vec<f64> = (1..=6).map(|k| 10f64.powi(-k)).collect();
    let mut worst: f64 = 0.0;
    let mut problems = Vec::new();
    for spec in &specs {
        let hp = build_pair_edges(&build_graph(spec).unwrap()).unwrap();
        let e0 = closed_form_for(spec).unwrap();
        for &eps in &epsilons {
            let cm = ground_cm(&hp, eps).unwrap();
            if cm.validate().is_err() {
                problems.push(format!("{spec}: invalid CM at eps={eps:e}"));
            }
            let _ = epr_uncertainty_global(&cm, &hp).unwrap();
        }
        let sweep = epsilon_sweep(&hp, &epsilons).unwrap();
        if !sweep.is_decreasing() {
            problems.push(format!("{spec}: not decreasing"));
        }
        worst = worst.max((sweep.extrapolated - e0).abs());
    }
    report(
        8,
        "ground-state CM convergence",
        worst <= 1e-4 && problems.is_empty(),
        format!(
            "{} graphs, max |extrapolated - E0|={worst:.1e} (tol 1e-4), problems {problems:?}",
            specs.len()
        ),
    );
}

#[test]
fn criterion_09_theta_block_scan() {
    let thetas = theta_grid(64);
    let s_grid = default_s_grid();
    let (mut argmin_ok, mut min_minor, mut worst_reflection) = (true, f64::INFINITY, 0.0f64);
    for n in 3..=12 {
        let r = theta_block_scan(n, &thetas, &s_grid).unwrap();
        argmin_ok &= r.theta_optimal();
        min_minor = min_minor.min(r.min_minor);
        worst_reflection = worst_reflection.max(r.reflection_residual());
    }
    report(
        9,
        "cyclic-group theta scan",
        argmin_ok && min_minor >= -1e-10 && worst_reflection <= 1e-10,
        format!(
            "argmin theta = 0 mod pi on every s: {argmin_ok}; min minor {min_minor:.1e} (>= -1e-10); theta=0 vs reflection {worst_reflection:.1e} (tol 1e-10)"
        ),
    );
}

#[test]
fn criterion_10_group_vs_edges() {
    let mut cases: Vec<(GraphSpec, Vec<Perm>)> = Vec::new();
    for n in 3..=8 {
        let reflection = Perm::new((0..n).map(|i| (n - i) % n).collect()).unwrap();
        cases.push((GraphSpec::Ring(n), vec![Perm::shift(n), reflection]));
    }
    for n in 3..=6 {
        cases.push((
            GraphSpec::Complete(n),
            vec![Perm::shift(n), Perm::transposition(n, 0, 1)],
        ));
    }
    for solid in [
        PlatonicSolid::Tetrahedron,
        PlatonicSolid::Cube,
        PlatonicSolid::Octahedron,
    ] {
        let spec = GraphSpec::Platonic(solid);
        let gens = build_graph(&spec).unwrap().generators().to_vec();
        cases.push((spec, gens));
    }
    let mut worst: f64 = 0.0;
    let mut orders = Vec::new();
    for (spec, gens) in &cases {
        let g = build_graph(spec).unwrap();
        let (k, l) = g.edges()[0];
        let group = PermGroup::generate(g.vertex_count(), gens, 1_000_000)
            .unwrap()
            .with_pair(k, l)
            .unwrap();
        orders.push(group.order());
        let twirled = build_pair_group(&group, k, l).unwrap();
        let edges = build_pair_edges(&g).unwrap();
        worst = worst
            .max(twirled.plus().max_abs_diff(edges.plus()))
            .max(twirled.minus().max_abs_diff(edges.minus()));
    }
    report(
        10,
        "group twirl vs edge average",
        worst <= 1e-12,
        format!(
            "{} graphs, group orders {orders:?}, max diff {worst:.1e} (tol 1e-12)",
            cases.len()
        ),
    );
}
