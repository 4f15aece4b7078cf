//! For translation-invariant rings the optimal two-mode rotation angle is
//! zero: the block objective over `θ` is minimized at `θ = 0 (mod π)`.

use std::error::Error;

use gfrust::oracle::{theta_block_scan, default_s_grid, theta_grid};

pub fn run() -> Result<(), Box<dyn Error>> {
    let thetas = theta_grid(64);
    for n in 3..=8 {
        let report = theta_block_scan(n, &thetas, &default_s_grid())?;
        let best = report
            .rows
            .iter()
            .min_by(|a, b| a.min_objective.total_cmp(&b.min_objective))
            .expect("nonempty grid");
        println!(
            "N={n:>2}  theta-optimal={}  min minor={:+.2e}  reflection residual={:.1e}  best s={:.3} Delta={:.8}",
            report.theta_optimal(),
            report.min_minor,
            report.reflection_residual(),
            best.s,
            best.min_objective
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
