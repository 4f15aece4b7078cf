//! Ring sizes 3 to 24: odd rings are frustrated and carry less entanglement
//! than the next even ring, and both branches approach `E₀ = 2/π`.

use std::error::Error;

use gfrust::entanglement::eof_from_delta;
use gfrust::solver::{closed_form_energy, ring_envelopes, ring_sin_sum, ClosedForm, RING_LIMIT};

pub fn run() -> Result<(), Box<dyn Error>> {
    println!(
        "{:>3} {:>14} {:>10} {:>10} {:>10}",
        "N", "E0", "E_max", "even br.", "odd br."
    );
    for n in 3..=24usize {
        let e0 = closed_form_energy(ClosedForm::Ring(n))?;
        assert!((e0 - ring_sin_sum(n)).abs() < 1e-12);
        let (even, odd) = ring_envelopes(n as f64);
        println!(
            "{n:>3} {e0:>14.12} {:>10.6} {:>10.6} {:>10.6}",
            eof_from_delta(e0)?,
            eof_from_delta(even)?,
            eof_from_delta(odd)?
        );
    }
    println!(
        "limit: E0 = 2/pi, E_max = {:.4} ebits",
        eof_from_delta(RING_LIMIT)?
    );
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
