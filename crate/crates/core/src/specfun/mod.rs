//! Special functions: Gamma, normalized Bessel functions, ₁F₂, Lommel
//! functions and the Jacobi/Gegenbauer families.

pub mod bessel;
pub mod gamma;
pub mod hypergeom;
pub mod lommel;
pub mod poly;

use serde::Serialize;

pub use bessel::{bessel_j_norm, bessel_j_norm_deriv, j_norm, j_norm_deriv, j_pair, JPair};
pub use gamma::{gamma, ln_gamma};
pub use hypergeom::hypergeom_1f2;
pub use lommel::{lommel_s, lommel_s_scaled, LommelSum};
pub use poly::{kernel_gn, poly_eval, PolyBasisId};

/// A value with an estimated absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: f64,
    pub est_abs_error: f64,
}
