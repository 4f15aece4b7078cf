//! Builds the regularized ground-state covariance matrix `Γ_ε` of the cube
//! and watches its EPR uncertainty fall toward `E₀` as `ε → 0`.
//! The adjacent-pair reduction is brought to standard form along the way.

use std::error::Error;

use gfrust::entanglement::{eof_from_delta, epr_uncertainty_local, reduce_two_mode, standard_form};
use gfrust::graph::{build_graph, GraphSpec, PlatonicSolid};
use gfrust::solver::{build_pair_edges, epsilon_schedule, epsilon_sweep, ground_cm, ground_energy};

pub fn run() -> Result<(), Box<dyn Error>> {
    let g = build_graph(&GraphSpec::Platonic(PlatonicSolid::Cube))?;
    let hp = build_pair_edges(&g)?;
    let e0 = ground_energy(&hp)?;

    let sweep = epsilon_sweep(&hp, &epsilon_schedule())?;
    for (eps, delta) in sweep.epsilons.iter().zip(&sweep.deltas) {
        println!(
            "eps={eps:.0e}  Delta={delta:.10}  Delta-E0={:.3e}",
            delta - e0
        );
    }
    println!("extrapolated {:.10}, E0 {:.10}", sweep.extrapolated, e0);

    let cm = ground_cm(&hp, 1e-6)?;
    let (k, l) = g.edges()[0];
    let sf = standard_form(&reduce_two_mode(&cm, k, l)?)?;
    let local = epr_uncertainty_local(&sf)?;
    println!(
        "edge ({k},{l}): n={:.6} k_q={:.6} k_p={:.6} Delta={local:.8} E_F={:.6} ebits",
        sf.n_a,
        sf.k_q,
        sf.k_p,
        eof_from_delta(local)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
