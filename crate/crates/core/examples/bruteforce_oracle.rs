//! Direct minimization of `tr[X H₊] + tr[X⁻¹ H₋]` over positive `X`,
//! compared with the trace-norm formula for `E₀`.

use std::error::Error;
use std::time::Instant;

use gfrust::graph::{build_graph, GraphSpec};
use gfrust::oracle::{bruteforce_min_delta, probe_y_nonzero, BruteForceOptions};
use gfrust::solver::{build_pair_edges, ground_energy};

pub fn run() -> Result<(), Box<dyn Error>> {
    for spec in [
        GraphSpec::Ring(3),
        GraphSpec::Ring(5),
        GraphSpec::Complete(4),
    ] {
        let hp = build_pair_edges(&build_graph(&spec)?)?;
        let e0 = ground_energy(&hp)?;
        let start = Instant::now();
        let bf = bruteforce_min_delta(&hp, &BruteForceOptions::default())?;
        let probe = probe_y_nonzero(&hp, &bf.log_x, 50, 7)?;
        println!(
            "{spec:<12} E0={e0:.10} search={:.10} (diff {:.1e}, {:.1?})  min Y-gap {:.2e}",
            bf.delta,
            bf.delta - e0,
            start.elapsed(),
            probe.min_gap
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
