//! Topological Tutte-style polynomials of graphs on the torus.
//!
//! The crate computes the state-sum polynomials P̃_G, P_G and C_G of
//! Z²-gain graphs (graphs mapped to the torus), evaluates the sector sums
//! R₅ / R₁₀ / R_r exactly in Q(√5) where possible, independently evaluates
//! the SO(3) trace of embedded graphs by surround-loop expansion on ribbon
//! graphs, and provides the surgeries (contraction, deletion, gauge shifts,
//! I–H flips, duals) the identities between these quantities are tested
//! with.

pub mod gain;
pub mod golden;
pub mod moves;
pub mod multipoly;
pub mod root;
pub mod trace;
pub mod ribbon;
pub mod snf;
pub mod statesum;

pub use gain::{GainGraph, HomologyProfile, LoopClass};
pub use golden::{GoldenNumber, Rational};
pub use multipoly::{MultiPoly, Var};
