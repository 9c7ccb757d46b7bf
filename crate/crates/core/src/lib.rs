//! Exact statevector simulation of two teleportation schemes for a family of
//! four-term tripartite entangled states, plus a gate-level circuit IR with
//! quantum-cost metrics.
//!
//! The crate is organized around five pieces:
//!
//! * [`statevec`] — dense statevector register with gates, projective
//!   measurement (computational and arbitrary orthonormal bases) and
//!   phase-insensitive fidelity;
//! * [`states`] — constructors for the tripartite payload family Ψ_A…Ψ_D,
//!   Bell states, GHZ-like states, the four-qubit cluster state and the
//!   16-element joint measurement basis;
//! * [`protocol`] — the two LOCC teleportation schemes (cluster channel with
//!   a 16-outcome joint measurement; two Bell pairs with two Bell
//!   measurements), correction tables, transcripts and verification sweeps;
//! * [`circuit`] — a line-oriented circuit IR with parser, the
//!   measurement-less transform, QC/GC/CB cost metrics and builtin
//!   transcriptions of both protocol circuits;
//! * [`report`] — plain pass/fail bookkeeping shared by the verification
//!   entry points.
//!
//! All numeric code is generic over the scalar type via [`scalar::Real`]
//! (`f32` or `f64`); the `*64` aliases at the crate root fix the reference
//! double-precision instantiation used by the CLI and the test suites.

pub mod circuit;
pub mod error;
pub mod math;
pub mod protocol;
pub mod report;
pub mod scalar;
pub mod statevec;
pub mod states;

pub use error::{Error, Result};
pub use scalar::Real;

/// Double-precision complex amplitude.
pub type Amp64 = num_complex::Complex<f64>;
/// Double-precision statevector register.
pub type Statevector64 = statevec::Statevector<f64>;
/// Double-precision measurement basis.
pub type MeasurementBasis64 = statevec::MeasurementBasis<f64>;
/// Double-precision tripartite payload description.
pub type TripartiteSpec64 = states::TripartiteSpec<f64>;
/// Double-precision joint measurement basis.
pub type JointBasis64 = states::JointBasis<f64>;
/// Double-precision protocol transcript.
pub type Transcript64 = protocol::Transcript<f64>;
