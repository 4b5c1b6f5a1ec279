//! Newton interpolation on Leja-ordered Chebyshev nodes and on Fast Leja points.
//!
//! * [`nodes`] builds node sets on the standard interval `[-2, 2]`.
//! * [`newton`] fits and evaluates the Newton form.
//! * [`testbed`] holds the benchmark functions and the discrete error norms.
//! * [`sweep`], [`report`] and [`library`] drive convergence studies.

pub mod error;
pub mod library;
pub mod newton;
pub mod nodes;
pub mod report;
pub mod sweep;
pub mod testbed;

pub use error::{Error, Result};
pub use newton::NewtonInterpolant;
pub use nodes::{CandidatePool, Family, Interval, NodeSequence};
pub use testbed::{ErrorRecord, TestFunction};
