//! Remez-type concentration bounds for entire functions of exponential type.
//!
//! α_d* is bracketed by (2π)^d / (2 V_d I_{d/2−1}) below and (2 q_{d/2−1,1})^d V_d
//! above. The upper bound comes from the radial function
//! f_d(x) = j_{d/2−1}(|x|/2)² / (1 − (|x|/r_d)²), r_d = 2 q_{d/2−1,1}, which is
//! positive inside the ball of radius r_d, non-positive outside, and has
//! integral zero, so the ball carries exactly half of its L¹ mass.

use crate::error::{Error, Result};
use crate::nikolskii::{a0_best, A0Method};
use crate::numerics::{integrate_weighted, QuadratureRule};
use crate::specfun::bessel::taylor_at_zero;
use crate::specfun::gamma::ln_gamma;
use crate::specfun::j_norm;
use crate::zeros::first_zero;
use serde::Serialize;
use std::f64::consts::{PI, TAU};

/// Relative slack on the window (√(e/2), e) for the normalized bounds.
pub const WINDOW_SLACK: f64 = 0.2;
/// |t − r_d| / r_d below which f_d is evaluated from the Taylor expansion.
const TAYLOR_RADIUS: f64 = 1e-3;

/// ln V_d with V_d = π^{d/2} / Γ(d/2 + 1).
pub fn ln_unit_ball_volume(d: usize) -> f64 {
    let h = d as f64 / 2.0;
    h * PI.ln() - ln_gamma(h + 1.0)
}

/// V_d, the volume of the unit ball in ℝ^d.
pub fn unit_ball_volume(d: usize) -> f64 {
    ln_unit_ball_volume(d).exp()
}

#[derive(Debug, Clone, Serialize)]
pub struct RemezBounds {
    pub d: usize,
    /// (2π)^d / (2 V_d I_{d/2−1}); infinite when it exceeds the double range
    pub lower: f64,
    /// (2 q_{d/2−1,1})^d V_d; infinite when it exceeds the double range
    pub upper: f64,
    pub ln_lower: f64,
    pub ln_upper: f64,
    /// (V_d · lower / (2π)^d)^{1/d} = (2 I_{d/2−1})^{−1/d}
    pub normalized_lower: f64,
    /// (V_d · upper / (2π)^d)^{1/d} = V_d^{2/d} q_{d/2−1,1} / π
    pub normalized_upper: f64,
    pub i_value: f64,
    pub i_error: f64,
    pub i_method: A0Method,
    pub q1: f64,
    /// whether the normalized bounds lie in ((1−s)√(e/2), (1+s)e)
    pub in_window: bool,
    pub window_slack: f64,
}

pub fn remez_bounds(d: usize) -> Result<RemezBounds> {
    if d == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    let alpha = d as f64 / 2.0 - 1.0;
    let i = a0_best(alpha)?;
    let q1 = first_zero(alpha)?;
    let df = d as f64;
    let ln_v = ln_unit_ball_volume(d);
    let ln_lower = df * TAU.ln() - 2f64.ln() - ln_v - i.value.ln();
    let ln_upper = df * (2.0 * q1).ln() + ln_v;
    let normalized_lower = ((ln_v + ln_lower - df * TAU.ln()) / df).exp();
    let normalized_upper = ((ln_v + ln_upper - df * TAU.ln()) / df).exp();
    let lo = (1.0 - WINDOW_SLACK) * (0.5 * std::f64::consts::E).sqrt();
    let hi = (1.0 + WINDOW_SLACK) * std::f64::consts::E;
    Ok(RemezBounds {
        d,
        lower: ln_lower.exp(),
        upper: ln_upper.exp(),
        ln_lower,
        ln_upper,
        normalized_lower,
        normalized_upper,
        i_value: i.value,
        i_error: i.abs_error,
        i_method: i.method,
        q1,
        in_window: normalized_lower > lo && normalized_upper < hi,
        window_slack: WINDOW_SLACK,
    })
}

/// The radial profile f_d(t) with its removable singularity at r_d.
#[derive(Debug, Clone)]
pub struct RadialProfile {
    pub d: usize,
    pub nu: f64,
    pub q1: f64,
    pub r: f64,
    taylor: [f64; 5],
}

impl RadialProfile {
    pub fn new(d: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("dimension must be at least 1".into()));
        }
        let nu = d as f64 / 2.0 - 1.0;
        let q1 = first_zero(nu)?;
        Ok(RadialProfile {
            d,
            nu,
            q1,
            r: 2.0 * q1,
            taylor: taylor_at_zero(nu, q1),
        })
    }

    /// f_d(t) from the closed form.
    pub fn eval_direct(&self, t: f64) -> f64 {
        let j = j_norm(self.nu, 0.5 * t);
        j * j / (1.0 - (t / self.r).powi(2))
    }

    /// f_d(t) from the Taylor expansion of j_ν about q₁: with t = r + 2h,
    /// f_d = −r² h (c₁ + c₂h + c₃h² + c₄h³)² / (4(r + h)).
    pub fn eval_taylor(&self, t: f64) -> f64 {
        let h = 0.5 * (t - self.r);
        let c = &self.taylor;
        let s = c[1] + h * (c[2] + h * (c[3] + h * c[4]));
        -self.r * self.r * h * s * s / (4.0 * (self.r + h))
    }

    pub fn eval(&self, t: f64) -> f64 {
        if (t - self.r).abs() < TAYLOR_RADIUS * self.r {
            self.eval_taylor(t)
        } else {
            self.eval_direct(t)
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct HalfMassReport {
    pub d: usize,
    pub r_d: f64,
    /// ∫₀^{r_d} |f_d| t^{d−1} dt
    pub inner: f64,
    /// ∫_{r_d}^{T} |f_d| t^{d−1} dt
    pub outer: f64,
    /// asymptotic value of ∫_T^∞ |f_d| t^{d−1} dt
    pub tail: f64,
    pub tail_error: f64,
    pub horizon: f64,
    pub ratio: f64,
    /// |ratio(T) − ratio(2T)|
    pub horizon_change: f64,
    pub ratio_error: f64,
}

// With x = t/2 and λ = d/2 − 1, |f_d| t^{d−1} dt = C x J_λ(x)² r²/(4x² − r²) dx,
// C = 2^{4λ+2} Γ(λ+1)². Using x J_λ² = (1/π)(1 + sin(2x − λπ)) + O(x^{−1})
// the tail splits into a mean part, integrated exactly, and the leading
// oscillatory boundary term.
fn tail_estimate(p: &RadialProfile, t: f64) -> (f64, f64) {
    let lam = p.nu;
    let r = p.r;
    let x = 0.5 * t;
    let ln_c = (4.0 * lam + 2.0) * 2f64.ln() + 2.0 * ln_gamma(lam + 1.0);
    let c = ln_c.exp() / PI;
    let h = r * r / (4.0 * x * x - r * r);
    let mean = c * r / 4.0 * ((2.0 * x + r) / (2.0 * x - r)).ln();
    // ∫_X^∞ sin(2x − λπ) h dx = cos(2X − λπ) h(X)/2 + O(|h'(X)|)
    let osc = c * (2.0 * x - lam * PI).cos() * h / 2.0;
    let k = (4.0 * lam * lam - 1.0).abs();
    let err = c * h * (1.0 + k) / x;
    (mean + osc, err)
}

fn masses(p: &RadialProfile, horizon: f64, rule: &QuadratureRule) -> Result<(f64, f64, f64, f64, f64)> {
    let mu = p.d as f64 - 1.0;
    let inner = integrate_weighted(&|t| p.eval(t), 0.0, p.r, mu, &rule.with_panels(8))?;
    // near the double zeros of f_d beyond r_d only absolute accuracy is meaningful
    let panels = ((horizon - p.r) / PI).ceil() as usize;
    let outer_rule = rule.with_panels(panels.max(1)).with_abs_tol(1e-14 * inner.value);
    let outer = integrate_weighted(&|t| -p.eval(t), p.r, horizon, mu, &outer_rule)?;
    let (tail, tail_err) = tail_estimate(p, horizon);
    let err = inner.est_abs_error + outer.est_abs_error + tail_err;
    Ok((inner.value, outer.value, tail, tail_err, err))
}

/// ∫_{|x|≤r_d} |f_d| / ∫_{ℝ^d} |f_d| by radial reduction; the expected value is 1/2.
pub fn verify_fd_half_mass(d: usize, rule: &QuadratureRule) -> Result<HalfMassReport> {
    const TARGET: f64 = 1e-5;
    let p = RadialProfile::new(d)?;
    let mut horizon = (8.0 * p.r).max(200.0);
    let mut attempt = 0;
    let (inner, outer, tail, tail_error, ratio, horizon_change, ratio_error) = loop {
        let (inner, outer, tail, tail_error, err) = masses(&p, horizon, rule)?;
        let total = inner + outer + tail;
        let ratio = inner / total;
        let (i2, o2, t2, _, _) = masses(&p, 2.0 * horizon, rule)?;
        let ratio2 = i2 / (i2 + o2 + t2);
        let horizon_change = (ratio - ratio2).abs();
        let ratio_error = err / total + horizon_change;
        if ratio_error < TARGET {
            break (inner, outer, tail, tail_error, ratio, horizon_change, ratio_error);
        }
        attempt += 1;
        if attempt == 4 {
            return Err(Error::Precision {
                what: format!("half-mass ratio for d={d} up to horizon {horizon}"),
                achieved: ratio_error,
                requested: TARGET,
            });
        }
        horizon *= 2.0;
    };
    Ok(HalfMassReport {
        d,
        r_d: p.r,
        inner,
        outer,
        tail,
        tail_error,
        horizon,
        ratio,
        horizon_change,
        ratio_error,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct SignCheck {
    pub d: usize,
    pub from: f64,
    pub to: f64,
    pub points: usize,
    pub max_value: f64,
    pub passed: bool,
}

/// f_d(t) ≤ 0 on a grid over [r_d, to].
pub fn check_fd_sign(d: usize, to: f64, step: f64) -> Result<SignCheck> {
    let p = RadialProfile::new(d)?;
    let cells = ((to - p.r) / step).ceil().max(1.0) as usize;
    let h = (to - p.r) / cells as f64;
    let max_value = (0..=cells)
        .map(|i| p.eval(p.r + h * i as f64))
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(SignCheck {
        d,
        from: p.r,
        to,
        points: cells + 1,
        max_value,
        passed: max_value <= 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn volumes() {
        assert!((unit_ball_volume(1) - 2.0).abs() < 1e-14);
        assert!((unit_ball_volume(2) - PI).abs() < 1e-14);
        assert!((unit_ball_volume(3) - 4.0 * PI / 3.0).abs() < 1e-14);
    }

    #[test]
    fn taylor_branch_matches_closed_form() {
        for d in 1..=6 {
            let p = RadialProfile::new(d).unwrap();
            for s in [-1.0, 1.0] {
                let t = p.r * (1.0 + s * 2e-3);
                let (a, b) = (p.eval_direct(t), p.eval_taylor(t));
                assert!((a - b).abs() <= 1e-10 * a.abs(), "d={d}: {a} vs {b}");
            }
        }
    }
}
