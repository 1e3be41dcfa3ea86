//! Construction and verification of mutually unbiased bases in bipartite
//! spaces built from difference matrices and complex Hadamard matrices.
//!
//! Every construction in [`bases`] can be checked independently by the
//! brute-force routines in [`verify`], which recompute Gram matrices, Schmidt
//! coefficients and cross-basis overlaps from the raw amplitudes.

pub mod algebra;
pub mod bases;
pub mod designs;
pub mod error;
pub mod hadamard;
pub mod io;
pub mod verify;

pub use error::{Error, Result};
