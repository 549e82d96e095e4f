//! The extremal Fourier–Bessel series
//!
//!   j_{α+1}(t) = a₀ + Σ_{k≥1} a_k j_α(r_k t),   0 ≤ t ≤ q₁,
//!
//! with q_k = q_{α+1,k}, r_k = q_k/q₁ and
//!
//!   a_k = −(2/j_α(q_k)) ∫₀¹ j_{α+1}(q₁x) x^{2α+3} / (r_k² − x²) dx.
//!
//! The coefficients decay only like k^{−α−3/2}, so plain partial sums carry
//! a tail of order 1/K. Evaluation on [0, q₁] therefore splits
//! 1/(r² − x²) = Σ_{m<M} x^{2m}/r^{2m+2} + (x²/r²)^M/(r² − x²): the first M
//! pieces sum in closed form to polynomials Z_{m+1}, and the remainders
//! a_k^{(M)} decay like k^{−α−3/2−2M}.

use crate::error::{Error, Result};
use crate::numerics::gauss::gauss_jacobi_unit;
use crate::numerics::sup::{certified_sup_curvature, certify_samples, curvature_step, SupOrder};
use crate::numerics::{integrate_weighted, pairwise_sum, QuadratureRule, SupCertificate};
use crate::specfun::bessel::taylor_at_zero;
use crate::specfun::gamma::ln_gamma;
use crate::specfun::{j_norm, j_pair, EvalResult};
use crate::zeros::{zero_table, ZeroTable, DEFAULT_TOL};
use serde::Serialize;
use std::f64::consts::PI;

/// Smallest truncation used by [`build_series_auto`].
pub const MIN_TERMS: usize = 40;
/// Target for the accelerated tail bound in [`build_series_auto`].
pub const TAIL_TARGET: f64 = 1e-7;
/// Extra slack a sup certificate may add on top of its grid maximum.
pub const GRID_SLACK: f64 = 2e-7;

const COARSE_NODES: usize = 48;
const FINE_NODES: usize = 64;
// below this distance δ = q₁(x − 1) the quotient j_{α+1}(q₁x)/(1 − x²) is
// replaced by its Taylor expansion; the truncation error is O(δ⁴)
const TAYLOR_RADIUS: f64 = 2e-3;
// the quotient near x = 1 carries rounding of order ε/δ, so coefficient
// integrals cannot be checked below this relative level
const QUAD_REL_FLOOR: f64 = 1e-12;

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha >= -0.5 && alpha.is_finite()) {
        return Err(Error::Domain(format!(
            "Fourier–Bessel expansion needs α ≥ −1/2, got {alpha}"
        )));
    }
    Ok(())
}

/// Number M of closed-form pieces: the accelerated coefficients then decay
/// like k^{−α−3/2−2M}, which is summable with room to spare.
pub fn acceleration_order(alpha: f64) -> usize {
    ((alpha + 0.5) / 2.0).ceil().max(0.0) as usize + 3
}

/// Z_1..Z_count as coefficient vectors in powers of x².
///
/// Z_m(x) = Σ_k q_k^{−2m} j_α(q_k x)/j_α(q_k) on [0, 1]. Z_1 = (x² − (α+1)/(α+2))/4
/// and L Z_{m+1} = −Z_m with L = d²/dx² + ((2α+1)/x) d/dx; the constant term
/// is fixed by ∫₀¹ Z_m(x) x^{2α+1} dx = 0.
pub fn z_polynomials(alpha: f64, count: usize) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(vec![-0.25 * (alpha + 1.0) / (alpha + 2.0), 0.25]);
    for _ in 1..count {
        let prev = out.last().unwrap();
        let mut next = vec![0.0; prev.len() + 1];
        for (i, &z) in prev.iter().enumerate() {
            let j = (i + 1) as f64;
            next[i + 1] = -z / (4.0 * j * (j + alpha));
        }
        next[0] = -(2.0 * alpha + 2.0)
            * (1..next.len())
                .map(|i| next[i] / (2.0 * i as f64 + 2.0 * alpha + 2.0))
                .sum::<f64>();
        out.push(next);
    }
    out
}

fn poly_eval_even(c: &[f64], x: f64) -> (f64, f64) {
    let x2 = x * x;
    let mut v = 0.0;
    let mut a = 0.0;
    for &ci in c.iter().rev() {
        v = v * x2 + ci;
        a = a * x2 + ci.abs();
    }
    (v, a)
}

/// g(x) = j_{α+1}(q₁x)/(1 − x²) with the removable singularity at x = 1.
struct Quotient {
    nu: f64,
    q1: f64,
    taylor: [f64; 5],
}

impl Quotient {
    fn new(alpha: f64, q1: f64) -> Self {
        Quotient {
            nu: alpha + 1.0,
            q1,
            taylor: taylor_at_zero(alpha + 1.0, q1),
        }
    }

    fn taylor(&self, x: f64) -> f64 {
        let delta = self.q1 * (x - 1.0);
        let c = &self.taylor;
        let s = c[1] + delta * (c[2] + delta * (c[3] + delta * c[4]));
        // δ/(1 − x²) = −q₁/(1 + x)
        -self.q1 * s / (1.0 + x)
    }

    fn eval_with(&self, x: f64, j: f64) -> f64 {
        if (self.q1 * (x - 1.0)).abs() < TAYLOR_RADIUS {
            self.taylor(x)
        } else {
            j / ((1.0 - x) * (1.0 + x))
        }
    }

    fn eval(&self, x: f64) -> f64 {
        self.eval_with(x, j_norm(self.nu, self.q1 * x))
    }
}

/// a₀ (k = 0) or a_k by adaptive quadrature, independent of [`build_series`].
pub fn fb_coefficient(alpha: f64, k: usize, rule: &QuadratureRule) -> Result<EvalResult> {
    check_alpha(alpha)?;
    let nu = alpha + 1.0;
    let table = zero_table(nu, k.max(1), DEFAULT_TOL)?;
    let q1 = table.q(1);
    if k == 0 {
        let r = integrate_weighted(&|x| j_norm(nu, q1 * x), 0.0, 1.0, 2.0 * alpha + 1.0, rule)?;
        let s = 2.0 * alpha + 2.0;
        return Ok(EvalResult {
            value: s * r.value,
            est_abs_error: s * r.est_abs_error,
        });
    }
    let qk = table.q(k);
    let jq = j_norm(alpha, qk);
    let r = if k == 1 {
        let g = Quotient::new(alpha, q1);
        integrate_weighted(&|x| g.eval(x), 0.0, 1.0, 2.0 * alpha + 3.0, rule)?
    } else {
        let rk2 = (qk / q1).powi(2);
        integrate_weighted(&|x| j_norm(nu, q1 * x) / (rk2 - x * x), 0.0, 1.0, 2.0 * alpha + 3.0, rule)?
    };
    let s = -2.0 / jq;
    Ok(EvalResult {
        value: s * r.value,
        est_abs_error: s.abs() * r.est_abs_error,
    })
}

/// The truncated extremal series together with its acceleration data.
#[derive(Debug, Clone, Serialize)]
pub struct FourierBesselSeries {
    pub alpha: f64,
    pub a0: f64,
    pub a0_error: f64,
    /// a_1..a_K
    pub coeffs: Vec<f64>,
    /// q_{α+1,1..K}
    pub zeros: Vec<f64>,
    /// j_α(q_k), k = 1..K
    pub j_at_zeros: Vec<f64>,
    /// μ_m = ∫₀¹ j_{α+1}(q₁x) x^{2α+3+2m} dx, m = 0..=M
    pub mu: Vec<f64>,
    /// a_k^{(M)}
    pub accel_coeffs: Vec<f64>,
    /// closed-form part −2 Σ_{m<M} μ_m q₁^{2m+2} Z_{m+1}(x), powers of x²
    pub poly: Vec<f64>,
    pub accel_order: usize,
    /// Bound on Σ_{k>K} |a_k^{(M)} j_α(r_k t)| for all t ≥ 0.
    pub tail_bound: f64,
    /// Bound on Σ_{k>K} |a_k j_α(q_k)|, the tail of plain partial sums.
    pub plain_tail_bound: f64,
    /// Quadrature error estimates of μ_m, a_k and a_k^{(M)}.
    pub mu_err: Vec<f64>,
    pub coeff_err: Vec<f64>,
    pub accel_err: Vec<f64>,
}

struct UnitRules {
    coarse: crate::numerics::GaussRule,
    fine: crate::numerics::GaussRule,
}

impl UnitRules {
    fn new(mu: f64) -> Result<Self> {
        Ok(UnitRules {
            coarse: gauss_jacobi_unit(COARSE_NODES, mu)?,
            fine: gauss_jacobi_unit(FINE_NODES, mu)?,
        })
    }

    // Σ w_i h(x_i) on both rules; returns the fine value, |fine − coarse| and
    // Σ |w_i h(x_i)|
    fn apply(&self, hc: &dyn Fn(usize, f64) -> f64, hf: &dyn Fn(usize, f64) -> f64) -> (f64, f64, f64) {
        let c: Vec<f64> = self
            .coarse
            .nodes
            .iter()
            .zip(&self.coarse.weights)
            .enumerate()
            .map(|(i, (&x, &w))| w * hc(i, x))
            .collect();
        let f: Vec<f64> = self
            .fine
            .nodes
            .iter()
            .zip(&self.fine.weights)
            .enumerate()
            .map(|(i, (&x, &w))| w * hf(i, x))
            .collect();
        let vc = pairwise_sum(&c);
        let vf = pairwise_sum(&f);
        let abs: f64 = f.iter().map(|v| v.abs()).sum();
        (vf, (vf - vc).abs(), abs)
    }
}

fn accelerated_tail(alpha: f64, q1: f64, qk: f64, jqk: f64, mu_m: f64, m: usize) -> f64 {
    // |j_α(q_k)| q_k^{α+1/2} is monotone in k with limit 2^α Γ(α+1) √(2/π),
    // so the smaller of the two bounds it from below for every later k
    let limit = (alpha * std::f64::consts::LN_2 + ln_gamma(alpha + 1.0)).exp() * (2.0 / PI).sqrt();
    let current = jqk.abs() * qk.powf(alpha + 0.5);
    let c_low = 0.9 * limit.min(current);
    let mf = m as f64;
    let expo = alpha - 0.5 - 2.0 * mf;
    let ln_val = (2.0 * mf + 2.0) * q1.ln() + expo * qk.ln();
    2.0 * mu_m * ln_val.exp() / (PI * c_low * (2.0 * mf + 0.5 - alpha) * (1.0 - (q1 / qk).powi(2)))
}

/// Series truncated after K terms. The quadrature error of every coefficient
/// must stay below `rule.tol` relative to its absolute integrand.
pub fn build_series(alpha: f64, k_terms: usize, rule: &QuadratureRule) -> Result<FourierBesselSeries> {
    check_alpha(alpha)?;
    if k_terms < 4 {
        return Err(Error::Domain(format!("series needs K ≥ 4 terms, got {k_terms}")));
    }
    let nu = alpha + 1.0;
    let table: ZeroTable = zero_table(nu, k_terms, DEFAULT_TOL)?;
    let q1 = table.q(1);
    let m_order = acceleration_order(alpha);
    let g = Quotient::new(alpha, q1);

    let rules_a0 = UnitRules::new(2.0 * alpha + 1.0)?;
    let rules = UnitRules::new(2.0 * alpha + 3.0)?;
    let jc: Vec<f64> = rules.coarse.nodes.iter().map(|&x| j_norm(nu, q1 * x)).collect();
    let jf: Vec<f64> = rules.fine.nodes.iter().map(|&x| j_norm(nu, q1 * x)).collect();
    let gc: Vec<f64> = rules.coarse.nodes.iter().zip(&jc).map(|(&x, &j)| g.eval_with(x, j)).collect();
    let gf: Vec<f64> = rules.fine.nodes.iter().zip(&jf).map(|(&x, &j)| g.eval_with(x, j)).collect();

    // returns the error estimate including rounding of the weighted sum
    let check = |what: &str, err: f64, abs: f64| -> Result<f64> {
        let rel = err / abs.max(f64::MIN_POSITIVE);
        if rel > rule.tol.max(QUAD_REL_FLOOR) {
            return Err(Error::Precision {
                what: format!("{what} at α={alpha}"),
                achieved: rel,
                requested: rule.tol,
            });
        }
        Ok(err + 4.0 * f64::EPSILON * abs)
    };

    let (a0_int, a0_err, a0_abs) = rules_a0.apply(&|_, x| j_norm(nu, q1 * x), &|_, x| j_norm(nu, q1 * x));
    let s0 = 2.0 * alpha + 2.0;
    let a0 = s0 * a0_int;
    let a0_error = s0 * check("a0 quadrature", a0_err, a0_abs)?;

    let mut mu = Vec::with_capacity(m_order + 1);
    let mut mu_err = Vec::with_capacity(m_order + 1);
    for m in 0..=m_order {
        let p = 2 * m as i32;
        let (v, e, a) = rules.apply(&|i, x| jc[i] * x.powi(p), &|i, x| jf[i] * x.powi(p));
        mu_err.push(check("moment quadrature", e, a)?);
        mu.push(v);
    }

    let mut coeffs = Vec::with_capacity(k_terms);
    let mut accel = Vec::with_capacity(k_terms);
    let mut j_at = Vec::with_capacity(k_terms);
    let mut coeff_err = Vec::with_capacity(k_terms);
    let mut accel_err = Vec::with_capacity(k_terms);
    let pm = 2 * m_order as i32;
    for k in 1..=k_terms {
        let qk = table.q(k);
        let jq = j_norm(alpha, qk);
        let s = -2.0 / jq;
        let (plain, accel_k) = if k == 1 {
            let (v, e, a) = rules.apply(&|i, _| gc[i], &|i, _| gf[i]);
            let e = check("a_1 quadrature", e, a)?;
            let (va, ea, aa) = rules.apply(&|i, x| gc[i] * x.powi(pm), &|i, x| gf[i] * x.powi(pm));
            let ea = check("accelerated a_1 quadrature", ea, aa)?;
            ((v, e), (va, ea))
        } else {
            let rk2 = (qk / q1).powi(2);
            let (v, e, a) = rules.apply(&|i, x| jc[i] / (rk2 - x * x), &|i, x| jf[i] / (rk2 - x * x));
            let e = check("a_k quadrature", e, a)?;
            let (va, ea, aa) = rules.apply(
                &|i, x| jc[i] * (x * x / rk2).powi(m_order as i32) / (rk2 - x * x),
                &|i, x| jf[i] * (x * x / rk2).powi(m_order as i32) / (rk2 - x * x),
            );
            let ea = check("accelerated a_k quadrature", ea, aa)?;
            ((v, e), (va, ea))
        };
        coeffs.push(s * plain.0);
        coeff_err.push(s.abs() * plain.1);
        accel.push(s * accel_k.0);
        accel_err.push(s.abs() * accel_k.1);
        j_at.push(jq);
    }

    let zs = z_polynomials(alpha, m_order);
    let mut poly = vec![0.0; m_order + 1];
    for (m, z) in zs.iter().enumerate() {
        let f = -2.0 * mu[m] * q1.powi(2 * m as i32 + 2);
        for (i, &c) in z.iter().enumerate() {
            poly[i] += f * c;
        }
    }

    let qk = table.q(k_terms);
    let tail_bound = accelerated_tail(alpha, q1, qk, j_at[k_terms - 1], mu[m_order], m_order);
    let plain_tail_bound = mu[0] * q1 / PI * ((qk + q1) / (qk - q1)).ln();

    let series = FourierBesselSeries {
        alpha,
        a0,
        a0_error,
        coeffs,
        zeros: table.zeros.clone(),
        j_at_zeros: j_at,
        mu,
        accel_coeffs: accel,
        poly,
        accel_order: m_order,
        tail_bound,
        plain_tail_bound,
        mu_err,
        coeff_err,
        accel_err,
    };
    series.check_invariants()?;
    Ok(series)
}

/// Series with the smallest K ≥ 40 (doubling) whose accelerated tail bound is
/// below 10⁻⁷.
pub fn build_series_auto(alpha: f64, rule: &QuadratureRule) -> Result<FourierBesselSeries> {
    let mut k = MIN_TERMS;
    loop {
        let s = build_series(alpha, k, rule)?;
        if s.tail_bound < TAIL_TARGET || k >= 5120 {
            return Ok(s);
        }
        k *= 2;
    }
}

impl FourierBesselSeries {
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn q1(&self) -> f64 {
        self.zeros[0]
    }

    pub fn ratios(&self) -> Vec<f64> {
        let q1 = self.q1();
        self.zeros.iter().map(|q| q / q1).collect()
    }

    fn check_invariants(&self) -> Result<()> {
        let alpha = self.alpha;
        for (i, &a) in self.coeffs.iter().enumerate() {
            let k = i + 1;
            let sign = if k % 2 == 1 { 1.0 } else { -1.0 };
            if !(sign * a > 0.0) {
                return Err(Error::Consistency(format!(
                    "coefficient a_{k} = {a:e} breaks the sign pattern at α={alpha}"
                )));
            }
        }
        let lower = (alpha + 1.0) / (alpha + 2.0);
        if !(self.coeffs[0] > lower) {
            return Err(Error::Consistency(format!(
                "a_1 = {} not above (α+1)/(α+2) = {lower} at α={alpha}",
                self.coeffs[0]
            )));
        }
        let sum = self.a0_from_sum();
        if (sum.value - self.a0).abs() > sum.est_abs_error + self.a0_error + 1e-12 {
            return Err(Error::Consistency(format!(
                "a0 = {} but −F*(q₁) = {} ± {:e} at α={alpha}",
                self.a0, sum.value, sum.est_abs_error
            )));
        }
        Ok(())
    }

    fn accel_eval(&self, t: f64) -> (f64, f64) {
        let q1 = self.q1();
        let (p, pa) = poly_eval_even(&self.poly, t / q1);
        let terms: Vec<f64> = self
            .accel_coeffs
            .iter()
            .zip(&self.zeros)
            .map(|(&a, &q)| a * j_norm(self.alpha, q * t / q1))
            .collect();
        let s = pairwise_sum(&terms);
        let abs: f64 = terms.iter().map(|v| v.abs()).sum::<f64>() + pa;
        (p + s, abs)
    }

    // effect of the coefficient quadrature errors on the accelerated form,
    // using |j_α| ≤ 1 and |Z_m(x)| ≤ Σ|z_i| on [0, 1]
    fn coefficient_error(&self) -> f64 {
        let q1 = self.q1();
        let zs = z_polynomials(self.alpha, self.accel_order);
        let poly: f64 = zs
            .iter()
            .enumerate()
            .map(|(m, z)| 2.0 * self.mu_err[m] * q1.powi(2 * m as i32 + 2) * poly_eval_even(z, 1.0).1)
            .sum();
        poly + self.accel_err.iter().sum::<f64>()
    }

    fn plain_coefficient_error(&self) -> f64 {
        self.coeff_err.iter().sum()
    }

    /// F*(t). On [0, q₁] the accelerated form is used; beyond q₁ the plain
    /// partial sum, whose tail there is bounded through
    /// |j_α(r_k t)| ≤ |j_α(q_k)| for r_k t ≥ q_k.
    pub fn eval_fstar(&self, t: f64) -> EvalResult {
        let t = t.abs();
        let q1 = self.q1();
        if t <= q1 {
            let (v, abs) = self.accel_eval(t);
            return EvalResult {
                value: v,
                est_abs_error: self.tail_bound + self.coefficient_error() + 8.0 * f64::EPSILON * abs,
            };
        }
        let terms: Vec<f64> = self
            .coeffs
            .iter()
            .zip(&self.zeros)
            .map(|(&a, &q)| a * j_norm(self.alpha, q * t / q1))
            .collect();
        let abs: f64 = terms.iter().map(|v| v.abs()).sum();
        EvalResult {
            value: pairwise_sum(&terms),
            est_abs_error: self.plain_tail_bound + self.plain_coefficient_error() + 8.0 * f64::EPSILON * abs,
        }
    }

    /// a₀ recovered as −F*(q₁) = Σ_k |a_k j_α(q_k)| from the accelerated form.
    pub fn a0_from_sum(&self) -> EvalResult {
        let r = self.eval_fstar(self.q1());
        EvalResult {
            value: -r.value,
            est_abs_error: r.est_abs_error,
        }
    }

    /// a₀ − Σ_{k≤K} |a_k j_α(q_k)|; lies in [0, plain_tail_bound] up to rounding.
    pub fn balance_residual(&self) -> f64 {
        let terms: Vec<f64> = self
            .coeffs
            .iter()
            .zip(&self.j_at_zeros)
            .map(|(a, j)| (a * j).abs())
            .collect();
        self.a0 - pairwise_sum(&terms)
    }

    /// JSON document with alpha, a0, coeffs, zeros, tail_bound and the
    /// acceleration data.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("series serializes")
    }
}

/// Outcome of a plateau or sup-norm check.
#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub check: String,
    pub alpha: f64,
    pub certificate: SupCertificate,
    /// Certified value compared against `threshold`.
    pub bound: f64,
    pub threshold: f64,
    /// Horizon T and the bound used beyond it (sup checks only).
    pub horizon: Option<f64>,
    pub beyond_horizon: Option<f64>,
    pub passed: bool,
}

impl VerifyReport {
    /// Turns a failed report into a verification error.
    pub fn ensure(self) -> Result<Self> {
        if self.passed {
            Ok(self)
        } else {
            Err(Error::Verification(format!(
                "{} at α={}: bound {:e} exceeds {:e} (grid max at t={})",
                self.check, self.alpha, self.bound, self.threshold, self.certificate.argmax
            )))
        }
    }
}

fn slack(series: &FourierBesselSeries) -> f64 {
    1e-6f64.max(3.0 * series.tail_bound)
}

fn poly_second_derivative_bound(poly: &[f64]) -> f64 {
    // |d²/dx² Σ p_i x^{2i}| ≤ Σ |p_i| 2i(2i−1) on [0, 1]
    poly.iter()
        .enumerate()
        .map(|(i, p)| p.abs() * (2 * i * (2 * i).saturating_sub(1)) as f64)
        .sum()
}

// |j_ν''| ≤ 1/(2ν+2) for ν ≥ −1/2 by the Poisson integral
fn jpp_bound(nu: f64) -> f64 {
    1.0 / (2.0 * nu + 2.0)
}

fn fstar_curvature_bound(series: &FourierBesselSeries) -> f64 {
    let q1 = series.q1();
    let alpha = series.alpha;
    poly_second_derivative_bound(&series.poly) / (q1 * q1)
        + series
            .accel_coeffs
            .iter()
            .zip(series.ratios())
            .map(|(a, r)| a.abs() * r * r)
            .sum::<f64>()
            * jpp_bound(alpha)
}

/// Certified sup over [0, q₁] of |j_{α+1}(t) − F*(t) − a₀|; passes when the
/// certificate plus the evaluation error is at most max(10⁻⁶, 3·tail_bound).
/// `h` defaults to the step for which the curvature term is 2·10⁻⁷.
pub fn verify_plateau(series: &FourierBesselSeries, h: Option<f64>) -> Result<VerifyReport> {
    let alpha = series.alpha;
    let q1 = series.q1();
    let l2 = jpp_bound(alpha + 1.0) + fstar_curvature_bound(series);
    let h = h.unwrap_or_else(|| curvature_step(l2, GRID_SLACK).min(1e-3 * q1));
    if !(h > 0.0) {
        return Err(Error::Domain(format!("grid step must be positive, got {h}")));
    }
    let f = |t: f64| j_norm(alpha + 1.0, t) - series.accel_eval(t).0 - series.a0;
    let cert = certified_sup_curvature(&f, l2, 0.0, q1, h);
    let eval_err = series.tail_bound + series.coefficient_error() + series.a0_error + 1e-14;
    let bound = cert.bound + eval_err;
    let threshold = slack(series);
    Ok(VerifyReport {
        check: "plateau".into(),
        alpha,
        passed: bound <= threshold,
        certificate: cert,
        bound,
        threshold,
        horizon: None,
        beyond_horizon: None,
    })
}

/// All zeros of j_α up to `t_max`, plus the first one beyond it.
pub fn zeros_through(alpha: f64, t_max: f64) -> Result<ZeroTable> {
    let mut n = ((t_max / PI).ceil() as usize + 4).max(4);
    loop {
        let t = zero_table(alpha, n, DEFAULT_TOL)?;
        if *t.zeros.last().unwrap() > t_max {
            return Ok(t);
        }
        n *= 2;
    }
}

/// sup_{t ≥ t0} |j_ν(t)| for t0 at or beyond q_{ν+1,1}: the maxima of |j_ν|
/// past q_{ν+1,k} are attained at q_{ν+1,k} and decrease, so the bound is
/// |j_ν(q_{ν+1,k})| with q_{ν+1,k} the largest such zero not exceeding t0.
pub fn envelope_beyond(nu: f64, t0: f64) -> Result<f64> {
    let t = zeros_through(nu + 1.0, t0)?;
    let k = t.zeros.iter().rposition(|&q| q <= t0).ok_or_else(|| {
        Error::Domain(format!("envelope needs t0 ≥ q_{{{},1}}, got {t0}", nu + 1.0))
    })?;
    Ok(j_norm(nu, t.zeros[k]).abs())
}

/// Certified bound for sup_{t ≥ q₁} |j_{α+1}(t) − F*(t)| compared with a₀.
///
/// For t ≥ q₁, |Σ_{k≥2} a_k j_α(r_k t)| ≤ Σ_{k≥2} |a_k j_α(q_k)| = a₀ − a₁|j_α(q₁)|
/// (balance identity and the max property), so the bound is
/// a₀ − a₁|j_α(q₁)| + sup_{t≥q₁} |j_{α+1}(t) − a₁ j_α(t)|; the last sup is
/// certified on [q₁, T] and bounded by envelopes beyond T. For α = −1/2 the
/// series is 2π-periodic and is evaluated directly.
pub fn verify_sup_bound(series: &FourierBesselSeries, horizon: f64, h: Option<f64>) -> Result<VerifyReport> {
    let alpha = series.alpha;
    let q1 = series.q1();
    if !(horizon >= q1) {
        return Err(Error::Domain(format!("horizon {horizon} below q₁ = {q1}")));
    }
    if (alpha + 0.5).abs() < 1e-15 {
        return verify_sup_periodic(series, horizon, h);
    }
    let a1 = series.coeffs[0];
    let l2 = jpp_bound(alpha + 1.0) + a1 * jpp_bound(alpha);
    let h = h.unwrap_or_else(|| curvature_step(l2, GRID_SLACK));
    if !(h > 0.0) {
        return Err(Error::Domain(format!("grid step must be positive, got {h}")));
    }
    let cert = certified_sup_curvature(
        &|t| {
            let p = j_pair(alpha, t);
            p.j1 - a1 * p.j0
        },
        l2,
        q1,
        horizon,
        h,
    );
    let beyond = a1 * envelope_beyond(alpha, horizon)? + envelope_beyond(alpha + 1.0, horizon)?;
    let rest = series.a0 - a1 * series.j_at_zeros[0].abs();
    let a1_err = series.coeff_err[0];
    let bound = rest + cert.bound.max(beyond) + series.a0_error + 2.0 * a1_err + 1e-14;
    let threshold = series.a0 + slack(series);
    Ok(VerifyReport {
        check: "sup_bound".into(),
        alpha,
        passed: bound <= threshold,
        certificate: cert,
        bound,
        threshold,
        horizon: Some(horizon),
        beyond_horizon: Some(beyond),
    })
}

// α = −1/2: j_{1/2}(t) = sin t / t and F* is an even 2π-periodic cosine
// series, so F*(t) = F*(τ) with τ the distance from t to 2πℤ. The reflected
// function has kinks at odd multiples of π, which are kept as grid nodes.
fn verify_sup_periodic(series: &FourierBesselSeries, horizon: f64, h: Option<f64>) -> Result<VerifyReport> {
    let alpha = series.alpha;
    let l2 = jpp_bound(alpha + 1.0) + fstar_curvature_bound(series);
    let h = h.unwrap_or_else(|| curvature_step(l2, GRID_SLACK));
    let reduce = |t: f64| {
        let r = t.rem_euclid(2.0 * PI);
        if r > PI {
            2.0 * PI - r
        } else {
            r
        }
    };
    let f = |t: f64| j_norm(alpha + 1.0, t) - series.accel_eval(reduce(t)).0;
    let mut worst: Option<SupCertificate> = None;
    let mut lo = PI;
    while lo < horizon {
        let hi = (lo + PI).min(horizon);
        let c = certified_sup_curvature(&f, l2, lo, hi, h);
        if worst.as_ref().is_none_or(|w| c.bound > w.bound) {
            worst = Some(c);
        }
        lo = hi;
    }
    let mut cert = worst.unwrap_or_else(|| certify_samples(&[f(PI)], PI, h, l2, SupOrder::Curvature));
    cert.a = PI;
    cert.b = horizon;
    // beyond T: |sin t/t| ≤ 1/T and F* stays within a₀ of its plateau values
    let beyond = 1.0 / horizon + series.a0 + 1.0 / PI;
    let eval_err = series.tail_bound + series.coefficient_error() + 1e-14;
    let bound = cert.bound + eval_err;
    let threshold = series.a0 + slack(series);
    Ok(VerifyReport {
        check: "sup_bound".into(),
        alpha,
        passed: bound <= threshold,
        certificate: cert,
        bound,
        threshold,
        horizon: Some(horizon),
        beyond_horizon: Some(beyond),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z_polynomials_match_direct_sums() {
        let alpha = 0.0;
        let t = zero_table(1.0, 3000, DEFAULT_TOL).unwrap();
        let zs = z_polynomials(alpha, 2);
        for &x in &[0.0, 0.3, 0.77, 1.0] {
            for (m, z) in zs.iter().enumerate() {
                let p = 2 * (m as i32 + 1);
                let direct: f64 = t
                    .zeros
                    .iter()
                    .map(|&q| q.powi(-p) * j_norm(alpha, q * x) / j_norm(alpha, q))
                    .sum();
                let (v, _) = poly_eval_even(z, x);
                let tol = if m == 0 { 2e-4 } else { 1e-9 };
                assert!((v - direct).abs() < tol, "m={} x={x}: {v} vs {direct}", m + 1);
            }
        }
    }

    #[test]
    fn quotient_is_continuous_at_one() {
        let alpha = 0.3;
        let q1 = zero_table(alpha + 1.0, 1, DEFAULT_TOL).unwrap().q(1);
        let g = Quotient::new(alpha, q1);
        // both branches agree where they meet
        for f in [0.5, 1.0, 2.0] {
            let x = 1.0 - f * TAYLOR_RADIUS / q1;
            let direct = j_norm(alpha + 1.0, q1 * x) / (1.0 - x * x);
            assert!((g.taylor(x) - direct).abs() < 1e-11 * direct.abs(), "f={f}");
        }
        // limit −(α+1) j_α(q₁)
        let lim = g.eval(1.0);
        let e = -(alpha + 1.0) * j_norm(alpha, q1);
        assert!((lim - e).abs() < 1e-13);
    }

    #[test]
    fn coefficients_agree_with_adaptive_route() {
        let rule = QuadratureRule::default();
        let s = build_series(0.0, 8, &rule).unwrap();
        for k in 0..=4 {
            let c = fb_coefficient(0.0, k, &rule).unwrap();
            let v = if k == 0 { s.a0 } else { s.coeffs[k - 1] };
            assert!((c.value - v).abs() < 1e-12, "k={k}: {} vs {v}", c.value);
        }
    }
}
