//! Covariance matrices, symplectic eigenvalues and the entanglement of
//! formation of a two-mode squeezed state.

use std::error::Error;

use gfrust::entanglement::{
    eof_from_delta, epr_uncertainty_local, standard_form, TwoModeStandardForm,
};
use gfrust::linalg::CovarianceMatrix;

pub fn run() -> Result<(), Box<dyn Error>> {
    let vacuum = CovarianceMatrix::vacuum(2);
    println!(
        "vacuum symplectic spectrum {:?}",
        vacuum.symplectic_eigenvalues()?
    );

    for r in [0.1f64, 0.5, 1.0] {
        let (c, s) = ((2.0 * r).cosh(), (2.0 * r).sinh());
        let tmsv = TwoModeStandardForm::new(c, c, s, -s).to_cm();
        let nu = tmsv.symplectic_eigenvalues()?;
        let delta = epr_uncertainty_local(&standard_form(&tmsv)?)?;
        println!(
            "r={r}: nu={:.6?} Delta={delta:.6} (e^-2r={:.6}) E_F={:.6} ebits",
            nu,
            (-2.0 * r).exp(),
            eof_from_delta(delta)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn Error>> {
    run()
}
