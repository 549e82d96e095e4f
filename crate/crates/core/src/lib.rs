//! Computation and certification of sharp asymptotic Nikolskii constants.
//!
//! The crate evaluates the extremal Bessel approximation value I_α = a₀*,
//! the bounds on L*(d), finite-degree sphere constants N(S^d; n)_{p,∞} for
//! p ∈ {1, 2}, and the derived Remez-type concentration bounds.

pub mod error;
pub mod fourier_bessel;
pub mod nikolskii;
pub mod numerics;
pub mod remez;
pub mod sphere;
pub mod specfun;
pub mod zeros;

pub use error::{Error, Result};
