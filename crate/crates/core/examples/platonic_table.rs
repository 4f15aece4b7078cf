//! Maximal nearest-neighbour entanglement on the five platonic solids,
//! next to the closed-form ground-state energy of each.
//!
//! ```text
//! cargo run --example platonic_table
//! ```

use std::error::Error;

use gfrust::graph::{GraphSpec, PlatonicSolid};
use gfrust::solver::{emax_for_graph, platonic_closed_form};

pub fn run() -> Result<(), Box<dyn Error>> {
    println!(
        "{:<13} {:>3} {:>3} {:>10} {:>15}  closed form",
        "solid", "N", "d", "E_max/1e-2", "E0"
    );
    for solid in PlatonicSolid::ALL {
        let r = emax_for_graph(&GraphSpec::Platonic(solid))?;
        let (expr, exact) = platonic_closed_form(solid);
        assert!((r.e0 - exact).abs() < 1e-10, "{solid}: {} vs {exact}", r.e0);
        println!(
            "{:<13} {:>3} {:>3} {:>10.2} {:>15.12}  {expr}",
            solid.name(),
            r.n,
            r.degree,
            100.0 * r.e_max,
            r.e0
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
