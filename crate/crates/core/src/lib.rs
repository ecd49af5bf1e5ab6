//! Grover search and its wave-mechanical realizations.
//!
//! * [`statevec`]: dense complex states and rank-1 reflections.
//! * [`grover`]: the oracle + diffusion iteration, its exact two-dimensional
//!   model, query counts and amplitude amplification.
//! * [`wavemech`]: the same dynamics on a bank of real classical wave modes,
//!   where squared amplitudes are energies.
//! * [`lattice`]: tight-binding chains, impurity bound states and
//!   disorder-driven localization.
//! * [`spatial`]: search by continuous- and discrete-time walks on graphs.

pub mod error;
pub mod grover;
pub mod lattice;
pub mod spatial;
pub mod statevec;
pub mod wavemech;

pub use error::{Error, Result};
pub use grover::{SearchSpec, StopReason, Trajectory, TrajectoryPoint, TwoDModel};
pub use lattice::{Boundary, DisorderStats, SpectrumResult, TightBindingSpec};
pub use num_complex::Complex64;
pub use spatial::Graph;
pub use statevec::StateVector;
pub use wavemech::OscillatorBank;
