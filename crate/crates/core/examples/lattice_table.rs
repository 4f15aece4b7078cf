//! Entanglement limits of infinite lattices from a Brillouin-zone average
//! of `√(1 − (ε(k)/d)²)`, refined until two resolutions agree.

use std::error::Error;
use std::time::Instant;

use gfrust::entanglement::eof_from_delta;
use gfrust::lattice::{infinite_lattice_energy, LatticeKind, MIN_RESOLUTION};

pub fn run() -> Result<(), Box<dyn Error>> {
    for kind in LatticeKind::TABLE {
        let start = Instant::now();
        let l = infinite_lattice_energy(kind, MIN_RESOLUTION)?;
        let e_max = eof_from_delta(l.e0)?;
        println!(
            "{:<10} d={} E0={:.10} E_max={:.2}e-2 ebits  (grid {}^{}, {:.0?})",
            kind.name(),
            kind.coordination(),
            l.e0,
            100.0 * e_max,
            l.resolution,
            kind.dimension(),
            start.elapsed()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
