//! Exact combinatorics for the crystal `B_l` of `D_n^(1)`: the piecewise-linear
//! combinatorial R-matrix, local and generalized energies, the associated
//! soliton cellular automaton with its counting functions, and ultradiscrete
//! tau functions built from rigged configurations.
//!
//! Everything is integer arithmetic; there are no floats and no tolerances.

pub mod automaton;
pub mod boxstate;
pub mod energies;
pub mod error;
pub mod kashiwara;
pub mod kind;
pub mod rigged;
pub mod rmatrix;
pub mod textio;

pub use boxstate::{BoxState, Letter, Path, XCoords};
pub use error::{Error, Result};
pub use kind::EnergyKind;
