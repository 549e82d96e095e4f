//! Lommel function S_{α,α+1}(z) through its finite asymptotic sum
//!
//!   S_{α,α+1}(z) = z^{α−1} ( Σ_{k<N} Π_{v=1}^{k} (α−v+1) v / (z/2)^{2k} + r_N(z) ),
//!
//! with N = ⌊α+2⌋ and |r_N(z)| ≤ Γ(N+1) Γ(N−α) / (|Γ(−α)| (z/2)^{2N}).
//! The remainder vanishes when α is a non-negative integer.

use super::gamma::ln_gamma;
use super::EvalResult;
use crate::error::{Error, Result};
use serde::Serialize;

/// The bracketed factor S_{α,α+1}(z) / z^{α−1} and its remainder bound.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LommelSum {
    pub sum: f64,
    pub remainder_bound: f64,
    pub rounding: f64,
    pub terms: usize,
}

impl LommelSum {
    pub fn error(&self) -> f64 {
        self.remainder_bound + self.rounding
    }
}

fn lommel_sum(alpha: f64, z: f64) -> Result<LommelSum> {
    if !(alpha > 0.0 && alpha.is_finite()) {
        return Err(Error::Domain(format!("Lommel sum needs α > 0, got {alpha}")));
    }
    if !(z > alpha) {
        return Err(Error::Domain(format!(
            "Lommel remainder bound needs z > α (z={z}, α={alpha})"
        )));
    }
    let n = (alpha + 2.0).floor() as usize;
    let h2 = 0.25 * z * z;
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut abs_sum = 1.0f64;
    for k in 1..n {
        let v = k as f64;
        term *= (alpha - v + 1.0) * v / h2;
        sum += term;
        abs_sum += term.abs();
    }
    let is_int = alpha == alpha.floor();
    let remainder_bound = if is_int {
        0.0
    } else {
        let nf = n as f64;
        (ln_gamma(nf + 1.0) + ln_gamma(nf - alpha) - ln_gamma(-alpha) - nf * h2.ln()).exp()
    };
    Ok(LommelSum {
        sum,
        remainder_bound,
        rounding: 2.0 * f64::EPSILON * abs_sum * n as f64,
        terms: n,
    })
}

/// S_{α,α+1}(z) / z^{α−1}; tends to 1 as z grows.
pub fn lommel_s_scaled(alpha: f64, z: f64) -> Result<(EvalResult, LommelSum)> {
    let s = lommel_sum(alpha, z)?;
    Ok((
        EvalResult {
            value: s.sum,
            est_abs_error: s.error(),
        },
        s,
    ))
}

/// S_{α,α+1}(z) for z > α > 0.
pub fn lommel_s(alpha: f64, z: f64) -> Result<EvalResult> {
    let s = lommel_sum(alpha, z)?;
    let scale = z.powf(alpha - 1.0);
    if !scale.is_finite() {
        return Err(Error::Range(format!("z^(α−1) overflows for z={z}, α={alpha}")));
    }
    Ok(EvalResult {
        value: scale * s.sum,
        est_abs_error: scale * s.error(),
    })
}
