//! Asymptotic Nikolskii constants: a₀*(α) = I_α by four routes, the bounds
//! 2^{−d} ≤ L*(d) ≤ a₀*(d/2 − 1), and the checks behind the extremal
//! property of the Fourier–Bessel series (the sup lemma and ρ(α)).

use crate::error::{Error, Result};
use crate::fourier_bessel::{build_series_auto, envelope_beyond};
use crate::numerics::sup::{certify_samples, curvature_step, SupOrder};
use crate::numerics::{find_root_bracketed, integrate_weighted, QuadratureRule, SupCertificate};
use crate::specfun::gamma::ln_gamma;
use crate::specfun::{hypergeom_1f2, j_norm, j_pair, lommel_s_scaled};
use crate::zeros::{first_zero, q1_bounds_uniform, zero_table, DEFAULT_TOL};
use serde::Serialize;

/// Smallest order covered by the sup lemma.
pub const ALPHA_MIN: f64 = -0.272;
/// Artifact-chosen bound for ε_d·d^{2/3}.
pub const EPS_SCALED_BOUND: f64 = 10.0;

/// Route used to compute a₀*.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum A0Method {
    /// (2α+2) ∫₀¹ j_{α+1}(q₁x) x^{2α+1} dx by adaptive quadrature
    Integral,
    /// ₁F₂(α+1; α+2, α+2; −q₁²/4)
    Hypergeometric,
    /// −F*(q₁) from the accelerated Fourier–Bessel series
    FbSum,
    /// −(2α+2)² q₁^{−α−1} j_α(q₁) S_{α,α+1}(q₁) plus the constant term
    Lommel,
}

impl A0Method {
    pub const ALL: [A0Method; 4] = [A0Method::Integral, A0Method::Hypergeometric, A0Method::FbSum, A0Method::Lommel];

    /// Whether the route is defined at α.
    pub fn applies(self, alpha: f64) -> bool {
        match self {
            A0Method::Integral | A0Method::Hypergeometric => alpha > -1.0,
            A0Method::FbSum => alpha >= -0.5,
            A0Method::Lommel => alpha > 0.0,
        }
    }
}

/// A value with the route that produced it and an absolute error bound.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ConstantEstimate {
    pub value: f64,
    pub method: A0Method,
    pub abs_error: f64,
}

fn a0_integral(alpha: f64, q1: f64) -> Result<ConstantEstimate> {
    let rule = QuadratureRule::default().with_panels(4);
    let r = integrate_weighted(&|x| j_norm(alpha + 1.0, q1 * x), 0.0, 1.0, 2.0 * alpha + 1.0, &rule)?;
    let s = 2.0 * alpha + 2.0;
    Ok(ConstantEstimate {
        value: s * r.value,
        method: A0Method::Integral,
        abs_error: s * r.est_abs_error,
    })
}

fn a0_hypergeometric(alpha: f64, q1: f64) -> Result<ConstantEstimate> {
    let r = hypergeom_1f2(alpha + 1.0, alpha + 2.0, alpha + 2.0, -0.25 * q1 * q1)?;
    Ok(ConstantEstimate {
        value: r.value,
        method: A0Method::Hypergeometric,
        abs_error: r.est_abs_error,
    })
}

fn a0_fb_sum(alpha: f64) -> Result<ConstantEstimate> {
    let s = build_series_auto(alpha, &QuadratureRule::default())?;
    let r = s.a0_from_sum();
    Ok(ConstantEstimate {
        value: r.value,
        method: A0Method::FbSum,
        abs_error: r.est_abs_error,
    })
}

// ∫₀^z t^{2α+1} j_{α+1}(t) dt = 2α z^{α+2} j_{α+1}(z) S_{α−1,α}(z)
//   − (2α+2) z^{α+1} j_α(z) S_{α,α+1}(z) + 2^{2α+1} Γ(α+1) Γ(α+2)
// with the standard Lommel S; the constant is the value of the right side
// at z → 0 and must be kept for finite α
fn a0_lommel(alpha: f64, q1: f64) -> Result<ConstantEstimate> {
    let (_, sum) = lommel_s_scaled(alpha, q1)?;
    let j = j_pair(alpha, q1);
    let c = (2.0 * alpha + 2.0).powi(2) / (q1 * q1);
    let main = -c * j.j0 * sum.sum;
    let constant = lommel_constant(alpha, q1);
    let value = main + constant;
    Ok(ConstantEstimate {
        value,
        method: A0Method::Lommel,
        abs_error: c * (j.j0.abs() * sum.error() + j.err * sum.sum.abs())
            + 1e-13 * constant.abs()
            + 4.0 * f64::EPSILON * value.abs(),
    })
}

/// (2α+2) 2^{2α+1} Γ(α+1) Γ(α+2) / q₁^{2α+2}: the constant-term contribution
/// to a₀* in the Lommel route.
pub fn lommel_constant(alpha: f64, q1: f64) -> f64 {
    (2.0 * alpha + 2.0)
        * ((2.0 * alpha + 1.0) * std::f64::consts::LN_2 + ln_gamma(alpha + 1.0) + ln_gamma(alpha + 2.0)
            - (2.0 * alpha + 2.0) * q1.ln())
        .exp()
}

/// a₀*(α) by the requested route.
pub fn a0_star(alpha: f64, method: A0Method) -> Result<ConstantEstimate> {
    if !method.applies(alpha) {
        return Err(Error::Domain(format!("{method:?} route is not defined at α={alpha}")));
    }
    let q1 = first_zero(alpha + 1.0)?;
    let mut est = match method {
        A0Method::Integral => a0_integral(alpha, q1),
        A0Method::Hypergeometric => a0_hypergeometric(alpha, q1),
        A0Method::FbSum => a0_fb_sum(alpha),
        A0Method::Lommel => a0_lommel(alpha, q1),
    }?;
    // q₁ is known to DEFAULT_TOL·max(1, q₁) and ∂a₀/∂q₁ = −(2α+2) a₀/q₁;
    // the Lommel terms scale at most like q₁^{−2α−4}
    let scale = match method {
        A0Method::Lommel => est.value.abs().max(lommel_constant(alpha, q1)),
        _ => est.value.abs(),
    };
    est.abs_error += (2.0 * alpha + 4.0) * scale * DEFAULT_TOL * q1.max(1.0) / q1;
    Ok(est)
}

/// a₀*(α) from the ₁F₂ route, falling back to quadrature when cancellation
/// in the alternating series leaves less than ten digits.
pub fn a0_best(alpha: f64) -> Result<ConstantEstimate> {
    let h = a0_star(alpha, A0Method::Hypergeometric);
    match h {
        Ok(e) if e.abs_error <= 1e-10 * e.value.abs() => Ok(e),
        _ => a0_star(alpha, A0Method::Integral),
    }
}

/// Every applicable route, checked for pairwise agreement within
/// `slack` plus the two reported errors.
pub fn a0_all(alpha: f64, slack: f64) -> Result<Vec<ConstantEstimate>> {
    let mut out = Vec::new();
    for m in A0Method::ALL {
        if m.applies(alpha) {
            out.push(a0_star(alpha, m)?);
        }
    }
    for (i, a) in out.iter().enumerate() {
        for b in &out[i + 1..] {
            if (a.value - b.value).abs() > slack + a.abs_error + b.abs_error {
                return Err(Error::Consistency(format!(
                    "a0 routes disagree at α={alpha}: {:?} {} ± {:e} vs {:?} {} ± {:e}",
                    a.method, a.value, a.abs_error, b.method, b.value, b.abs_error
                )));
            }
        }
    }
    Ok(out)
}

/// Two-sided bounds on L*(d).
#[derive(Debug, Clone, Serialize)]
pub struct LStarBounds {
    pub d: usize,
    pub lower: f64,
    pub upper: f64,
    pub upper_error: f64,
    pub upper_method: A0Method,
    /// upper = (√(2/e))^{d(1+ε_d)}
    pub epsilon_d: f64,
}

/// ε with value = (√(2/e))^{d(1+ε)}.
pub fn epsilon_from_upper(d: usize, upper: f64) -> f64 {
    let base = 0.5 * (2.0f64.ln() - 1.0);
    upper.ln() / (d as f64 * base) - 1.0
}

pub fn lstar_bounds(d: usize) -> Result<LStarBounds> {
    if d == 0 {
        return Err(Error::Domain("dimension must be at least 1".into()));
    }
    let alpha = d as f64 / 2.0 - 1.0;
    let up = a0_best(alpha)?;
    Ok(LStarBounds {
        d,
        lower: 0.5f64.powi(d as i32),
        upper: up.value,
        upper_error: up.abs_error,
        upper_method: up.method,
        epsilon_d: epsilon_from_upper(d, up.value),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct EpsilonRow {
    pub d: usize,
    pub epsilon_d: f64,
    pub scaled: f64,
}

/// Rows (d, ε_d, ε_d·d^{2/3}) for 2 ≤ d ≤ d_max.
pub fn epsilon_table(d_max: usize) -> Result<Vec<EpsilonRow>> {
    if d_max < 2 {
        return Err(Error::Domain(format!("d_max must be at least 2, got {d_max}")));
    }
    (2..=d_max)
        .map(|d| {
            let b = lstar_bounds(d)?;
            Ok(EpsilonRow {
                d,
                epsilon_d: b.epsilon_d,
                scaled: b.epsilon_d * (d as f64).powf(2.0 / 3.0),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub d: usize,
    pub alpha: f64,
    pub lower: f64,
    pub upper: f64,
    pub upper_error: f64,
    /// upper rounded to three decimals
    pub upper_3dp: f64,
}

pub fn table_upper_bounds(d_max: usize) -> Result<Vec<TableRow>> {
    if d_max == 0 {
        return Err(Error::Domain("d_max must be at least 1".into()));
    }
    (1..=d_max)
        .map(|d| {
            let b = lstar_bounds(d)?;
            Ok(TableRow {
                d,
                alpha: d as f64 / 2.0 - 1.0,
                lower: b.lower,
                upper: b.upper,
                upper_error: b.upper_error,
                upper_3dp: (b.upper * 1000.0).round() / 1000.0,
            })
        })
        .collect()
}

/// Refuses orders below the range of the sup lemma unless `exploratory`.
pub fn guard_alpha(alpha: f64, exploratory: bool) -> Result<()> {
    if alpha < ALPHA_MIN && !exploratory {
        return Err(Error::Precondition(format!(
            "α = {alpha} is below {ALPHA_MIN}; pass the exploratory override to run anyway"
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma61Entry {
    pub u: f64,
    pub certificate: SupCertificate,
    /// envelope bound for t > T
    pub beyond_horizon: f64,
    pub bound: f64,
    /// the grid maximum is the value at q₁
    pub attained_at_q1: bool,
    pub passed: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Lemma61Report {
    pub alpha: f64,
    pub q1: f64,
    pub target: f64,
    pub horizon: f64,
    pub h: f64,
    pub entries: Vec<Lemma61Entry>,
    pub passed: bool,
}

impl Lemma61Report {
    pub fn ensure(self) -> Result<Self> {
        if self.passed {
            return Ok(self);
        }
        let bad = self.entries.iter().find(|e| !e.passed).expect("a failed entry");
        Err(Error::Verification(format!(
            "sup of |j_α − u j_(α+1)| at α={}, u={}: bound {:e} > {:e} (grid max at t={})",
            self.alpha, bad.u, bad.bound, self.target, bad.certificate.argmax
        )))
    }
}

/// Certifies sup_{t ≥ q₁} |j_α(t) − u j_{α+1}(t)| ≤ |j_α(q₁)| + 10⁻⁶ for
/// `u_count` equally spaced u in [0, (α+2)/(α+1)], q₁ = q_{α+1,1}.
pub fn lemma61_check(
    alpha: f64,
    u_count: usize,
    horizon: f64,
    h: Option<f64>,
    exploratory: bool,
) -> Result<Lemma61Report> {
    guard_alpha(alpha, exploratory)?;
    if !(alpha > -0.5) {
        return Err(Error::Domain(format!("sup lemma needs α > −1/2, got {alpha}")));
    }
    if u_count == 0 {
        return Err(Error::Domain("need at least one u value".into()));
    }
    let q1 = first_zero(alpha + 1.0)?;
    if !(horizon > q1) {
        return Err(Error::Domain(format!("horizon {horizon} must exceed q₁ = {q1}")));
    }
    let u_max = (alpha + 2.0) / (alpha + 1.0);
    let l2_of = |u: f64| 1.0 / (2.0 * alpha + 2.0) + u / (2.0 * alpha + 4.0);
    let h = h.unwrap_or_else(|| curvature_step(l2_of(u_max), crate::fourier_bessel::GRID_SLACK));
    if !(h > 0.0) {
        return Err(Error::Domain(format!("grid step must be positive, got {h}")));
    }
    let cells = ((horizon - q1) / h).ceil().max(1.0) as usize;
    let step = (horizon - q1) / cells as f64;
    let pairs: Vec<(f64, f64)> = (0..=cells)
        .map(|i| {
            let t = if i == cells { horizon } else { q1 + step * i as f64 };
            let p = j_pair(alpha, t);
            (p.j0, p.j1)
        })
        .collect();
    let target = j_norm(alpha, q1).abs();
    let env0 = envelope_beyond(alpha, horizon)?;
    let env1 = envelope_beyond(alpha + 1.0, horizon)?;
    let mut entries = Vec::with_capacity(u_count);
    let mut vals = vec![0.0; pairs.len()];
    for i in 0..u_count {
        let u = if u_count == 1 { u_max } else { u_max * i as f64 / (u_count - 1) as f64 };
        for (v, (a, b)) in vals.iter_mut().zip(&pairs) {
            *v = a - u * b;
        }
        let cert = certify_samples(&vals, q1, step, l2_of(u), SupOrder::Curvature);
        let beyond = env0 + u * env1;
        let bound = cert.bound.max(beyond);
        let attained = cert.grid_max <= vals[0].abs() + 1e-12;
        entries.push(Lemma61Entry {
            u,
            passed: bound <= target + 1e-6,
            attained_at_q1: attained,
            certificate: cert,
            beyond_horizon: beyond,
            bound,
        });
    }
    let passed = entries.iter().all(|e| e.passed);
    Ok(Lemma61Report {
        alpha,
        q1,
        target,
        horizon,
        h: step,
        entries,
        passed,
    })
}

/// How ρ̃ treats the zeros q₁ = q_{α+1,1} and q₁′ = q_{α+3,1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RhoMode {
    /// computed zeros
    Exact,
    /// each factor at its worst end of the uniform first-zero bounds
    Bounds,
}

fn rho_zeros(alpha: f64) -> Result<(f64, f64)> {
    if !(alpha > -1.0) {
        return Err(Error::Domain(format!("ρ needs α > −1, got {alpha}")));
    }
    Ok((first_zero(alpha + 1.0)?, first_zero(alpha + 3.0)?))
}

/// ρ(α) = |f(q₁′)|/|f(q₁)| for f = j_α − ((α+2)/(α+1)) j_{α+1}, in closed form.
pub fn rho(alpha: f64) -> Result<f64> {
    let (q1, q1p) = rho_zeros(alpha)?;
    Ok(-(q1p * q1p + 4.0 * (alpha + 2.0)) * j_norm(alpha + 2.0, q1p) / (q1 * q1 * j_norm(alpha + 2.0, q1)))
}

/// ρ(α) directly as the ratio |f(q₁′)|/|f(q₁)|.
pub fn rho_direct(alpha: f64) -> Result<f64> {
    let (q1, q1p) = rho_zeros(alpha)?;
    Ok(f_aux(alpha, q1p).abs() / f_aux(alpha, q1).abs())
}

fn rho_tilde_at(alpha: f64, q1n: f64, q1d: f64, q1pf: f64, q1pn: f64, q1pd: f64) -> f64 {
    // q1n/q1d: q₁ in the first-zero numerator / the power factor;
    // q1pf, q1pn, q1pd: q₁′ in the leading factor / the power / the denominator
    let c = (alpha + 2.0).powi(2) - 0.25;
    let f1 = 1.0 + 4.0 * (alpha + 2.0) / (q1pf * q1pf);
    let num = 1.0 + (alpha + 1.5).powi(2) / (q1n * q1n - c);
    let den = 1.0 + (alpha + 2.5).powi(2) / (q1pd * q1pd - c);
    f1 * (num / den).sqrt() * (q1d / q1pn).powf(alpha + 0.5)
}

/// The majorant ρ̃(α) ≥ ρ(α).
pub fn rho_tilde(alpha: f64, mode: RhoMode) -> Result<f64> {
    match mode {
        RhoMode::Exact => {
            let (q1, q1p) = rho_zeros(alpha)?;
            Ok(rho_tilde_at(alpha, q1, q1, q1p, q1p, q1p))
        }
        RhoMode::Bounds => {
            if !(alpha > -1.0) {
                return Err(Error::Domain(format!("ρ̃ bounds need α > −1, got {alpha}")));
            }
            let (l1, u1) = q1_bounds_uniform(alpha + 1.0);
            let (l3, u3) = q1_bounds_uniform(alpha + 3.0);
            let c = (alpha + 2.0).powi(2) - 0.25;
            if !(l1 * l1 > c) {
                return Err(Error::Domain(format!("first-zero lower bound too small at α={alpha}")));
            }
            // every factor is monotone in each zero; take its larger end
            Ok(rho_tilde_at(alpha, l1, u1, l3, l3, u3))
        }
    }
}

/// Root of ρ(α) = 1 in [lo, hi].
pub fn rho_root(lo: f64, hi: f64, tol: f64) -> Result<f64> {
    find_root_bracketed(&|a| rho(a).map(|r| r - 1.0).unwrap_or(f64::NAN), lo, hi, tol)
}

/// f(t) = j_α(t) − ((α+2)/(α+1)) j_{α+1}(t).
pub fn f_aux(alpha: f64, t: f64) -> f64 {
    let p = j_pair(alpha, t);
    p.j0 - (alpha + 2.0) / (alpha + 1.0) * p.j1
}

/// f′(t) = t³ j_{α+3}(t) / (8(α+1)(α+2)(α+3)).
pub fn f_aux_deriv(alpha: f64, t: f64) -> f64 {
    t.powi(3) * j_norm(alpha + 3.0, t) / (8.0 * (alpha + 1.0) * (alpha + 2.0) * (alpha + 3.0))
}

/// f′ from the first-order form (2(α+2)/t − t/(2(α+1))) j_{α+1} − (2(α+2)/t) j_α.
pub fn f_aux_deriv_alt(alpha: f64, t: f64) -> f64 {
    let p = j_pair(alpha, t);
    let c = 2.0 * (alpha + 2.0) / t;
    (c - t / (2.0 * alpha + 2.0)) * p.j1 - c * p.j0
}

/// φ = f² + (A₂/A₀) f′² with A₀ = t³, A₂ = t(t² + 4(α+2)).
pub fn phi(alpha: f64, t: f64) -> f64 {
    let f = f_aux(alpha, t);
    let d = f_aux_deriv(alpha, t);
    f * f + (t * t + 4.0 * (alpha + 2.0)) / (t * t) * d * d
}

/// ψ = y² + y′²/A(t) with y(t) = (t/q₁)^{α+5/2} j_{α+2}(t) (a multiple of
/// t^{1/2} J_{α+2}(t)) and A(t) = 1 − ((α+2)² − 1/4)/t².
pub fn psi(alpha: f64, q1: f64, t: f64) -> f64 {
    let nu = alpha + 2.0;
    let p = j_pair(nu, t);
    let s = (t / q1).powf(nu + 0.5);
    let y = s * p.j0;
    let dj = -t * p.j1 / (2.0 * nu + 2.0);
    let dy = (nu + 0.5) / t * y + s * dj;
    let a = 1.0 - (nu * nu - 0.25) / (t * t);
    y * y + dy * dy / a
}

/// Residual of A₂f″ + A₁f′ + A₀f at t, relative to the size of the terms,
/// with f″ from f″ = (2/t) j_α′ − ((2α+3)/t) f′ − f.
pub fn ode_residual(alpha: f64, t: f64) -> f64 {
    let f = f_aux(alpha, t);
    let d1 = f_aux_deriv(alpha, t);
    let jp = -t * j_norm(alpha + 1.0, t) / (2.0 * alpha + 2.0);
    let d2 = 2.0 / t * jp - (2.0 * alpha + 3.0) / t * d1 - f;
    let a0 = t.powi(3);
    let a1 = (2.0 * alpha + 1.0) * t * t + 4.0 * (alpha + 2.0) * (2.0 * alpha + 3.0);
    let a2 = t * (t * t + 4.0 * (alpha + 2.0));
    let terms = [a2 * d2, a1 * d1, a0 * f];
    let scale: f64 = terms.iter().map(|v| v.abs()).sum::<f64>().max(f64::MIN_POSITIVE);
    (terms[0] + terms[1] + terms[2]).abs() / scale
}

#[derive(Debug, Clone, Serialize)]
pub struct MonotoneReport {
    pub alpha: f64,
    pub horizon: f64,
    pub step: f64,
    /// largest increase of φ between consecutive grid points on (0, T]
    pub phi_max_increase: f64,
    pub phi_monotone: bool,
    /// largest increase of ψ on [q₁, T]; None when A(q₁) ≤ 0
    pub psi_max_increase: Option<f64>,
    pub psi_monotone: Option<bool>,
    pub psi_q1: f64,
    pub psi_q1_prime: f64,
    /// |f(q_{α+3,k})|, k = 1..=chain_len
    pub chain: Vec<f64>,
    pub chain_monotone: bool,
    /// max relative gap between the two forms of f′ and the ODE residual
    pub deriv_mismatch: f64,
    pub ode_residual: f64,
    pub passed: bool,
}

fn max_increase(v: &[f64]) -> f64 {
    v.windows(2).map(|w| w[1] - w[0]).fold(f64::NEG_INFINITY, f64::max)
}

/// Grid checks that φ and ψ decrease, that |f| decreases along the zeros of
/// j_{α+3}, and that both derivative forms and the ODE hold.
pub fn monotone_certificates(alpha: f64, horizon: f64, step: f64, chain_len: usize) -> Result<MonotoneReport> {
    if !(alpha > -0.5) {
        return Err(Error::Domain(format!("monotone certificates need α > −1/2, got {alpha}")));
    }
    if !(step > 0.0 && horizon > step) {
        return Err(Error::Domain(format!("invalid grid: step {step}, horizon {horizon}")));
    }
    let n = (horizon / step).round() as usize;
    let grid: Vec<f64> = (1..=n).map(|i| step * i as f64).collect();
    let phis: Vec<f64> = grid.iter().map(|&t| phi(alpha, t)).collect();
    let phi_inc = max_increase(&phis);
    // relative rounding slack per step
    let phi_ok = phis.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-12) + 1e-300);

    let q1 = first_zero(alpha + 1.0)?;
    let q1p = first_zero(alpha + 3.0)?;
    let nu = alpha + 2.0;
    let (psi_inc, psi_ok) = if q1 * q1 > nu * nu - 0.25 {
        let m = ((horizon - q1) / step).ceil().max(1.0) as usize;
        let h = (horizon - q1) / m as f64;
        let v: Vec<f64> = (0..=m).map(|i| psi(alpha, q1, q1 + h * i as f64)).collect();
        let ok = v.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-12));
        (Some(max_increase(&v)), Some(ok))
    } else {
        (None, None)
    };
    let psi_q1 = psi(alpha, q1, q1);
    let psi_q1p = psi(alpha, q1, q1p);

    let zs = zero_table(alpha + 3.0, chain_len.max(2), DEFAULT_TOL)?;
    let chain: Vec<f64> = zs.zeros.iter().map(|&q| f_aux(alpha, q).abs()).collect();
    let chain_ok = chain.windows(2).all(|w| w[1] <= w[0] * (1.0 + 1e-12));

    let mut mismatch = 0.0f64;
    let mut ode = 0.0f64;
    for &t in grid.iter().step_by((n / 200).max(1)) {
        let a = f_aux_deriv(alpha, t);
        let b = f_aux_deriv_alt(alpha, t);
        let scale = (j_norm(alpha, t).abs() + j_norm(alpha + 1.0, t).abs()) * (1.0 + 4.0 * (alpha + 2.0) / t + t);
        mismatch = mismatch.max((a - b).abs() / scale);
        ode = ode.max(ode_residual(alpha, t));
    }
    let psi_pass = psi_ok.unwrap_or(true) && psi_q1p < psi_q1;
    Ok(MonotoneReport {
        alpha,
        horizon,
        step,
        phi_max_increase: phi_inc,
        phi_monotone: phi_ok,
        psi_max_increase: psi_inc,
        psi_monotone: psi_ok,
        psi_q1,
        psi_q1_prime: psi_q1p,
        chain,
        chain_monotone: chain_ok,
        deriv_mismatch: mismatch,
        ode_residual: ode,
        passed: phi_ok && psi_pass && chain_ok && mismatch < 1e-10 && ode < 1e-10,
    })
}
