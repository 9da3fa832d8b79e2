//! Exact toolkit for the 60 two-qubit stabilizer states.
//!
//! The crate links three views of the same state and keeps them consistent
//! by construction:
//!
//! - the stabilizer group: four signed Pauli operators closed under
//!   multiplication ([`group`]),
//! - the algebraic form: exact Gaussian-integer ket and density matrix,
//!   where the density is the group sum divided by four ([`oracle`]),
//! - the picture: two Bloch spheres whose arrows (separable states) or
//!   relative axis alignment (maximally entangled states) encode the state
//!   ([`frame`]), rendered to deterministic SVG ([`render`]).
//!
//! [`catalog`] enumerates all 60 states, [`catalog_io`] persists them as
//! JSON with exact integer payloads, [`cli`] exposes the command-line
//! surface and [`suite`] bundles the runtime verification checks behind
//! `blochpair verify`.

pub mod catalog;
pub mod catalog_io;
pub mod cli;
pub mod frame;
pub mod group;
pub mod oracle;
pub mod pauli;
pub mod render;
pub mod suite;

pub use catalog::{enumerate_catalog, StabilizerState};
pub use frame::{Alignment, Axis, AxisPermutation, FrameRep, SignedAxis};
pub use group::{CliffordGate, StabilizerGroup, StateClass};
pub use oracle::{ExactDensity, ExactKet};
pub use pauli::{PauliLetter, PauliOp, Qubit, Sign};
