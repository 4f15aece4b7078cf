//! Ground-state energies of infinite translation-invariant lattices as
//! Brillouin-zone averages of `√(1 − λ(k)²)`, where `λ(k)` is the
//! adjacency dispersion divided by the coordination number.
//!
//! The honeycomb and triangular dispersions are the standard tight-binding
//! bands: `±|1 + e^{ix} + e^{iy}|/3` for the two-site honeycomb cell and
//! `(cos x + cos y + cos(x+y))/3` for the triangular lattice.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::thread;

use thiserror::Error;

use crate::solver::Neumaier;

/// Smallest admissible starting resolution.
pub const MIN_RESOLUTION: usize = 32;
/// Successive estimates must agree to this before the integral is accepted.
pub const CONVERGENCE_TOL: f64 = 1e-7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum LatticeError {
    #[error("resolution must be at least {MIN_RESOLUTION}, got {0}")]
    Resolution(usize),
    #[error("Brillouin-zone integral not converged at resolution {resolution}: last estimates {previous} and {last}")]
    NotConverged {
        resolution: usize,
        previous: f64,
        last: f64,
    },
    #[error("unknown lattice `{0}`")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LatticeKind {
    Chain,
    Square,
    Cubic,
    Honeycomb,
    Triangular,
}

impl LatticeKind {
    /// Table order: honeycomb, square, triangular, cubic.
    pub const TABLE: [LatticeKind; 4] = [
        LatticeKind::Honeycomb,
        LatticeKind::Square,
        LatticeKind::Triangular,
        LatticeKind::Cubic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            LatticeKind::Chain => "chain",
            LatticeKind::Square => "square",
            LatticeKind::Cubic => "cubic",
            LatticeKind::Honeycomb => "honeycomb",
            LatticeKind::Triangular => "triangular",
        }
    }

    pub fn dimension(self) -> usize {
        match self {
            LatticeKind::Chain => 1,
            LatticeKind::Cubic => 3,
            _ => 2,
        }
    }

    pub fn coordination(self) -> usize {
        match self {
            LatticeKind::Chain => 2,
            LatticeKind::Honeycomb => 3,
            LatticeKind::Square => 4,
            LatticeKind::Cubic | LatticeKind::Triangular => 6,
        }
    }

    fn max_resolution(self) -> usize {
        match self.dimension() {
            1 => 1 << 20,
            2 => 8192,
            _ => 512,
        }
    }

    /// `√(1 − λ²)` averaged over the bands at one crystal momentum.
    fn integrand(self, c: &[f64], s: &[f64]) -> f64 {
        let lam = match self {
            LatticeKind::Chain => c[0],
            LatticeKind::Square => (c[0] + c[1]) / 2.0,
            LatticeKind::Cubic => (c[0] + c[1] + c[2]) / 3.0,
            // cos(x + y) = cos x cos y − sin x sin y
            LatticeKind::Triangular => (c[0] + c[1] + c[0] * c[1] - s[0] * s[1]) / 3.0,
            LatticeKind::Honeycomb => {
                let f2 = 3.0 + 2.0 * c[0] + 2.0 * c[1] + 2.0 * (c[0] * c[1] + s[0] * s[1]);
                // Both bands ±|f|/3 give the same integrand.
                return (1.0 - f2.max(0.0) / 9.0).max(0.0).sqrt();
            }
        };
        (1.0 - lam * lam).max(0.0).sqrt()
    }
}

impl fmt::Display for LatticeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LatticeKind {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        [
            LatticeKind::Chain,
            LatticeKind::Square,
            LatticeKind::Cubic,
            LatticeKind::Honeycomb,
            LatticeKind::Triangular,
        ]
        .into_iter()
        .find(|k| k.name() == s)
        .ok_or_else(|| LatticeError::UnknownKind(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LatticeEnergy {
    pub kind: LatticeKind,
    pub e0: f64,
    /// Resolution of the accepted estimate.
    pub resolution: usize,
    /// Estimate at half that resolution.
    pub previous: f64,
}

/// Midpoint rule on a `resolution^d` grid over `[0, 2π)^d`.
///
/// Slabs of the outer axis are summed independently (possibly on several
/// threads) and then combined in index order, so the result does not depend
/// on the number of threads.
pub fn midpoint_estimate(kind: LatticeKind, resolution: usize) -> f64 {
    let r = resolution;
    let (cos, sin): (Vec<f64>, Vec<f64>) = (0..r)
        .map(|i| {
            let x = 2.0 * PI * (i as f64 + 0.5) / r as f64;
            (x.cos(), x.sin())
        })
        .unzip();
    let dim = kind.dimension();
    let slab = |i: usize| -> Neumaier {
        let mut acc = Neumaier::default();
        match dim {
            1 => acc.add(kind.integrand(&[cos[i]], &[sin[i]])),
            2 => {
                for j in 0..r {
                    acc.add(kind.integrand(&[cos[i], cos[j]], &[sin[i], sin[j]]));
                }
            }
            _ => {
                for j in 0..r {
                    for k in 0..r {
                        acc.add(
                            kind.integrand(&[cos[i], cos[j], cos[k]], &[sin[i], sin[j], sin[k]]),
                        );
                    }
                }
            }
        }
        acc
    };
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(16);
    let chunk = r.div_ceil(workers);
    let slabs: Vec<f64> = thread::scope(|scope| {
        let handles: Vec<_> = (0..r)
            .step_by(chunk)
            .map(|start| {
                let slab = &slab;
                scope.spawn(move || {
                    (start..(start + chunk).min(r))
                        .map(|i| slab(i).total())
                        .collect::<Vec<f64>>()
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("integration worker panicked"))
            .collect()
    });
    let mut acc = Neumaier::default();
    for s in slabs {
        acc.add(s);
    }
    acc.total() / (r as f64).powi(dim as i32)
}

/// Doubles the resolution from `resolution` until successive midpoint
/// estimates differ by less than `1e-7`.
pub fn infinite_lattice_energy(
    kind: LatticeKind,
    resolution: usize,
) -> Result<LatticeEnergy, LatticeError> {
    if resolution < MIN_RESOLUTION {
        return Err(LatticeError::Resolution(resolution));
    }
    let mut r = resolution;
    let mut previous = midpoint_estimate(kind, r);
    loop {
        if 2 * r > kind.max_resolution().max(resolution) {
            return Err(LatticeError::NotConverged {
                resolution: r,
                previous,
                last: previous,
            });
        }
        r *= 2;
        let last = midpoint_estimate(kind, r);
        if (last - previous).abs() < CONVERGENCE_TOL {
            return Ok(LatticeEnergy {
                kind,
                e0: last,
                resolution: r,
                previous,
            });
        }
        if 2 * r > kind.max_resolution().max(resolution) {
            return Err(LatticeError::NotConverged {
                resolution: r,
                previous,
                last,
            });
        }
        previous = last;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn chain_reproduces_ring_limit() {
        let e = infinite_lattice_energy(LatticeKind::Chain, 64).unwrap();
        assert_abs_diff_eq!(e.e0, 2.0 / PI, epsilon = 1e-7);
    }

    #[test]
    fn small_resolution_is_rejected() {
        assert_eq!(
            infinite_lattice_energy(LatticeKind::Square, 16),
            Err(LatticeError::Resolution(16))
        );
    }

    #[test]
    fn estimates_are_deterministic() {
        let a = midpoint_estimate(LatticeKind::Triangular, 96);
        let b = midpoint_estimate(LatticeKind::Triangular, 96);
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn square_lattice_value() {
        let e = infinite_lattice_energy(LatticeKind::Square, 64).unwrap();
        assert_abs_diff_eq!(e.e0, 0.842052579, epsilon = 1e-6);
        assert!((e.e0 - e.previous).abs() < CONVERGENCE_TOL);
    }

    #[test]
    fn kinds_parse() {
        for k in LatticeKind::TABLE {
            assert_eq!(k.name().parse::<LatticeKind>().unwrap(), k);
        }
        assert!("kagome".parse::<LatticeKind>().is_err());
    }
}
