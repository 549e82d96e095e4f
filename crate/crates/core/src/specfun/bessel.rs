//! Normalized Bessel function j_α(x) = 2^α Γ(α+1) J_α(x) / x^α.
//!
//! Three regimes are used:
//! * ascending series of ₀F₁(; α+1; −x²/4) while x²/4 ≤ max(4, α+1);
//! * Hankel's large-argument expansion when it converges to full precision;
//! * Miller's backward recurrence otherwise, normalized by the Neumann sum
//!   (x/2)^ν = Σ_k (ν+2k) Γ(ν+k)/k! J_{ν+2k}(x), which needs no Gamma values.

use super::gamma::ln_gamma;
use super::EvalResult;
use crate::error::{Error, Result};
use std::f64::consts::PI;

const EPS: f64 = f64::EPSILON;

/// Pair (j_ν(x), j_{ν+1}(x)) together with an absolute error estimate that
/// applies to both components.
#[derive(Debug, Clone, Copy)]
pub struct JPair {
    pub j0: f64,
    pub j1: f64,
    pub err: f64,
}

fn check_order(alpha: f64) -> Result<()> {
    if !alpha.is_finite() {
        return Err(Error::Domain(format!("order must be finite, got {alpha}")));
    }
    if alpha <= -1.0 {
        return Err(Error::Domain(format!("order must exceed -1, got {alpha}")));
    }
    Ok(())
}

/// j_α(x) with an error estimate. j_α is even, so negative x is reflected.
pub fn bessel_j_norm(alpha: f64, x: f64) -> Result<EvalResult> {
    check_order(alpha)?;
    if !x.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {x}")));
    }
    let p = j_pair(alpha, x.abs());
    if !p.j0.is_finite() {
        return Err(Error::Range(format!("j_{alpha}({x}) is not representable")));
    }
    Ok(EvalResult {
        value: p.j0,
        est_abs_error: p.err,
    })
}

/// j_α'(x) = −x j_{α+1}(x) / (2α+2).
pub fn bessel_j_norm_deriv(alpha: f64, x: f64) -> Result<EvalResult> {
    check_order(alpha)?;
    if !x.is_finite() {
        return Err(Error::Domain(format!("argument must be finite, got {x}")));
    }
    let p = j_pair(alpha, x.abs());
    let s = -x / (2.0 * alpha + 2.0);
    if !p.j1.is_finite() {
        return Err(Error::Range(format!("j_{alpha}'({x}) is not representable")));
    }
    Ok(EvalResult {
        value: s * p.j1,
        est_abs_error: s.abs() * p.err,
    })
}

/// Unchecked j_α(x); the caller guarantees α > −1 and x ≥ 0.
#[inline]
pub fn j_norm(alpha: f64, x: f64) -> f64 {
    j_pair(alpha, x).j0
}

/// Unchecked j_α'(x).
#[inline]
pub fn j_norm_deriv(alpha: f64, x: f64) -> f64 {
    -x * j_pair(alpha, x.abs()).j1 / (2.0 * alpha + 2.0)
}

/// j_ν(x) and j_{ν+1}(x) from a single evaluation.
pub fn j_pair(nu: f64, x: f64) -> JPair {
    let x = x.abs();
    if x == 0.0 {
        return JPair {
            j0: 1.0,
            j1: 1.0,
            err: 0.0,
        };
    }
    let z = 0.25 * x * x;
    if z <= (nu + 1.0).max(4.0) {
        return series_pair(nu, x);
    }
    if x >= 20.0 && x >= 0.5 * nu * nu {
        if let Some(p) = hankel_pair(nu, x) {
            return p;
        }
    }
    miller_pair(nu, x)
}

fn series_one(nu: f64, z: f64) -> (f64, f64) {
    let mut term = 1.0;
    let mut sum = 1.0;
    let mut abs_sum = 1.0;
    let mut k = 0.0;
    loop {
        k += 1.0;
        term *= -z / (k * (nu + k));
        sum += term;
        abs_sum += term.abs();
        if term.abs() <= 1e-17 * sum.abs() && k > z {
            break;
        }
        if k > 400.0 {
            break;
        }
    }
    (sum, abs_sum)
}

fn series_pair(nu: f64, x: f64) -> JPair {
    let z = 0.25 * x * x;
    let (s0, a0) = series_one(nu, z);
    let (s1, a1) = series_one(nu + 1.0, z);
    JPair {
        j0: s0,
        j1: s1,
        err: 4.0 * EPS * a0.max(a1),
    }
}

// Hankel expansion of J_ν(x); None when the series cannot reach full precision.
fn hankel_j(nu: f64, x: f64) -> Option<(f64, f64)> {
    let mu = 4.0 * nu * nu;
    let mut t = 1.0f64;
    let mut p = 1.0;
    let mut q = 0.0;
    let mut converged = false;
    for k in 1..200 {
        let kf = k as f64;
        let odd = 2.0 * kf - 1.0;
        let prev = t.abs();
        t *= (mu - odd * odd) / (8.0 * kf * x);
        if k % 2 == 1 {
            if (k / 2) % 2 == 0 {
                q += t;
            } else {
                q -= t;
            }
        } else if (k / 2) % 2 == 0 {
            p += t;
        } else {
            p -= t;
        }
        if t.abs() > 1e3 {
            return None;
        }
        if t.abs() < 1e-17 {
            converged = true;
            break;
        }
        if odd * odd > mu && t.abs() > prev {
            return None;
        }
    }
    if !converged {
        return None;
    }
    let theta = (0.5 * nu + 0.25) * PI;
    let (sx, cx) = x.sin_cos();
    let (st, ct) = theta.sin_cos();
    let cos_chi = cx * ct + sx * st;
    let sin_chi = sx * ct - cx * st;
    let amp = (2.0 / (PI * x)).sqrt();
    Some((amp * (p * cos_chi - q * sin_chi), amp * 8.0 * EPS))
}

fn hankel_pair(nu: f64, x: f64) -> Option<JPair> {
    let (big0, e0) = hankel_j(nu, x)?;
    let (big1, e1) = hankel_j(nu + 1.0, x)?;
    let ln_f0 = ln_gamma(nu + 1.0) + nu * (2.0 / x).ln();
    let ln_f1 = ln_gamma(nu + 2.0) + (nu + 1.0) * (2.0 / x).ln();
    let f0 = ln_f0.exp();
    let f1 = ln_f1.exp();
    let j0 = big0 * f0;
    let j1 = big1 * f1;
    let norm_err = 4.0 * EPS * (ln_f0.abs() + ln_f1.abs() + 1.0);
    Some(JPair {
        j0,
        j1,
        err: (e0 * f0).max(e1 * f1) + norm_err * (j0.abs().max(j1.abs())),
    })
}

fn miller_pair(nu: f64, x: f64) -> JPair {
    let margin = 25.0 + 10.0 * x.cbrt();
    // the Neumann terms peak near order sqrt(ν² + x²); start well above it
    let peak = (nu * nu + x * x).sqrt() - nu;
    miller_pair_top(nu, x, (peak + margin).ceil() as usize)
}

fn miller_pair_top(nu: f64, x: f64, n_top: usize) -> JPair {
    let mut n_top = n_top;
    if n_top % 2 == 1 {
        n_top += 1;
    }
    let mut y = vec![0.0f64; n_top + 2];
    y[n_top] = 1e-30;
    let inv_x2 = 2.0 / x;
    for k in (1..=n_top).rev() {
        let v = (nu + k as f64) * inv_x2 * y[k] - y[k + 1];
        y[k - 1] = v;
        if v.abs() > 1e150 {
            for yi in y[k - 1..].iter_mut() {
                *yi *= 1e-150;
            }
        }
    }
    // Neumann sum Σ w_m y_{2m} with w_0 = 1, w_m = (ν+2m) Γ(ν+m) / (m! Γ(ν+1))
    let mut sum = y[0];
    let mut abs_sum = y[0].abs();
    let mut w = 1.0f64;
    let mut ln_w = 0.0f64;
    let mut log_mode = false;
    for m in 1..=n_top / 2 {
        let mf = m as f64;
        let ratio = if m == 1 {
            nu + 2.0
        } else {
            (nu + 2.0 * mf) / (nu + 2.0 * mf - 2.0) * (nu + mf - 1.0) / mf
        };
        let yv = y[2 * m];
        let term = if log_mode {
            ln_w += ratio.ln();
            if yv == 0.0 {
                0.0
            } else {
                yv.signum() * (ln_w + yv.abs().ln()).exp()
            }
        } else {
            w *= ratio;
            if w > 1e200 {
                log_mode = true;
                ln_w = w.ln();
            }
            w * yv
        };
        sum += term;
        abs_sum += term.abs();
    }
    let j0 = y[0] / sum;
    let j1 = 2.0 * (nu + 1.0) / x * y[1] / sum;
    let cond = abs_sum / sum.abs();
    let scale = (y[0].abs() + y[1].abs() + y[2].abs()) / sum.abs();
    JPair {
        j0,
        j1,
        err: 16.0 * EPS * cond * scale.max(j0.abs()) + n_top as f64 * EPS * j0.abs(),
    }
}

/// Taylor coefficients [0, c1, c2, c3, c4] of j_ν about one of its zeros q,
/// so that j_ν(q + δ) ≈ Σ c_i δ^i. Derived from the Bessel equation
/// j'' = −((2ν+1)/x) j' − j.
pub fn taylor_at_zero(nu: f64, q: f64) -> [f64; 5] {
    let a = 2.0 * nu + 1.0;
    let d1 = j_norm_deriv(nu, q);
    let d2 = -a / q * d1;
    let d3 = a / (q * q) * d1 - a / q * d2 - d1;
    let d4 = -2.0 * a / (q * q * q) * d1 + 2.0 * a / (q * q) * d2 - a / q * d3 - d2;
    [0.0, d1, d2 / 2.0, d3 / 6.0, d4 / 24.0]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs().max(1e-300)
    }

    #[test]
    fn closed_forms() {
        for &x in &[0.1, 1.0, 3.0, 7.5, 19.0, 25.0, 60.0, 333.3, 999.0] {
            let c = bessel_j_norm(-0.5, x).unwrap().value;
            assert!((c - x.cos()).abs() < 1e-13, "cos at {x}: {c}");
            let s = bessel_j_norm(0.5, x).unwrap().value;
            assert!((s - x.sin() / x).abs() < 1e-13, "sinc at {x}: {s}");
            let j32 = bessel_j_norm(1.5, x).unwrap().value;
            let e = 3.0 * (x.sin() - x * x.cos()) / (x * x * x);
            assert!((j32 - e).abs() < 1e-13 * (1.0 + e.abs()), "j3/2 at {x}: {j32} vs {e}");
        }
        assert_eq!(bessel_j_norm(3.7, 0.0).unwrap().value, 1.0);
        assert!(bessel_j_norm(0.5, PI).unwrap().value.abs() < 1e-12);
    }

    #[test]
    fn reference_values() {
        // (alpha, x, j_alpha(x)) at 20 digits
        let table: &[(f64, f64, f64)] = &[
            (0.0, 2.5, -0.048_383_776_468_197_996),
            (0.0, 10.0, -0.245_935_764_451_348_34),
            (1.0, 12.0, -0.037_241_184_081_771_27),
            (-0.272, 4.0, -0.535_544_152_527_953_8),
            (2.3, 31.0, 1.442_576_121_966_914e-5),
            (4.0, 7.2, 0.015_015_809_404_133_564),
            (10.0, 40.0, 4.230_647_918_596_372e-8),
            (99.0, 105.0, 5.438_062_761_044_823e-16),
            (200.0, 213.0, -1.520_872_372_442_513e-32),
        ];
        for &(a, x, e) in table {
            let v = bessel_j_norm(a, x).unwrap().value;
            assert!(rel(v, e) < 1e-11, "j_{a}({x}) = {v}, expected {e}");
        }
    }

    #[test]
    fn derivative_matches_finite_difference() {
        let (a, x, h) = (2.0, 3.7, 1e-5);
        let fd = (j_norm(a, x + h) - j_norm(a, x - h)) / (2.0 * h);
        let d = bessel_j_norm_deriv(a, x).unwrap().value;
        assert!((fd - d).abs() < 1e-6);
        assert_eq!(bessel_j_norm_deriv(1.3, 0.0).unwrap().value, 0.0);
        assert!((bessel_j_norm_deriv(-0.5, 1.0).unwrap().value + 1f64.sin()).abs() < 1e-14);
    }

    #[test]
    fn domain_errors() {
        assert!(matches!(bessel_j_norm(-1.0, 1.0), Err(Error::Domain(_))));
        assert!(matches!(bessel_j_norm(0.0, f64::NAN), Err(Error::Domain(_))));
    }

    #[test]
    fn taylor_expansion_at_zero() {
        // j_{1/2}(x) = sin x / x vanishes at π
        let c = taylor_at_zero(0.5, PI);
        for &d in &[1e-3, -2e-3, 5e-3] {
            let x: f64 = PI + d;
            let poly = c[1] * d + c[2] * d * d + c[3] * d.powi(3) + c[4] * d.powi(4);
            assert!((poly - x.sin() / x).abs() < 1e-13);
        }
    }
}
