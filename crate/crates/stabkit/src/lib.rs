//! Local-equivalence analysis of stabilizer states.
//!
//! `stabkit` decides and certifies local-equivalence structure of n-qubit
//! stabilizer states in the binary symplectic representation:
//!
//! - **Minimal supports**: the inclusion-minimal supports of a stabilizer
//!   group, their element counts (always 1 or 3), and the subgroup the
//!   minimal elements generate ([`minimal`]).
//! - **Coverage criterion**: when X, Y and Z occur on every qubit in that
//!   subgroup, the local unitary and local Clifford equivalence classes of
//!   the state coincide; four easier sufficient conditions are also
//!   evaluated ([`minimal::corollary1_conditions`]).
//! - **GF(4) linearity**: a one-matrix-identity test on the generator
//!   blocks, cross-checked by closure under the xi-scaling map ([`gf4`]).
//! - **GHZ classification**: consecutive-pair counts decide membership in
//!   the GHZ class, and a constructive certificate maps any member onto
//!   the standard GHZ generators ([`ghz`]).
//! - **Brute-force local Clifford equivalence**: an exhaustive, pruned
//!   search over the 6^n per-qubit symplectic factors with signed
//!   certificates ([`lclifford::lc_equivalent`]).
//! - **Graph states**: construction from adjacency matrices and conversion
//!   of any group to graph form with a verified certificate
//!   ([`graphstate`]).
//! - **Dense oracles**: small-scale numerical checks (projectors, reduced
//!   states, unitary conjugation) backing the bit-level algebra
//!   ([`stabilizer`], [`dense`]).
//!
//! Enumeration and search are data-parallel under the default `parallel`
//! feature (sequential fallbacks stay available for comparison); results
//! are identical under any schedule.

pub mod config;
pub mod dense;
pub mod error;
pub mod gf2;
pub mod gf4;
pub mod ghz;
pub mod graphstate;
pub mod lclifford;
pub mod minimal;
pub mod pauli;
pub mod random;
pub mod report;
pub mod stabilizer;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec};
pub use ghz::{ghz_certificate, ghz_stabilizer, is_lc_ghz, GhzCertificate};
pub use graphstate::{graph_state, to_graph_form, Graph};
pub use lclifford::{fix_signs, lc_equivalent, random_lc, Gl2, LocalCliffordOp};
pub use minimal::{
    corollary1_conditions, lemma1_verify, minimal_supports, theorem1_criterion, Corollary1Flags,
    MinimalSupportTable,
};
pub use pauli::{Letter, PauliOperator, SupportMask};
pub use report::{analyze, parse_generator_file, parse_generators, AnalysisReport};
pub use stabilizer::{StabilizerGroup, SupportCount};
