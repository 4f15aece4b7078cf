//! Maximal nearest-neighbour entanglement of Gaussian states that are
//! invariant under the symmetry group of a graph.
//!
//! The central quantity is the ground-state energy `E₀` of the quadratic
//! Hamiltonian `H₊ ⊕ H₋` built from a symmetric graph; the maximal
//! entanglement of formation between neighbouring modes is `E_F(E₀)`.
//! See the `examples/` directory for one runnable program per capability.

pub mod cli;
pub mod entanglement;
pub mod graph;
pub mod group;
pub mod lattice;
pub mod linalg;
pub mod oracle;
pub mod solver;
