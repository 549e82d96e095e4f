//! Finite-degree Nikolskii constants N(S^d; n)_{p,∞} for p ∈ {1, 2}.
//!
//! By rotation invariance the constant equals the primal value
//! sup { P(1) : P ∈ 𝒫_n, ‖P‖_{L^p(w_d)} ≤ 1 } over univariate polynomials with
//! the normalized weight w_d(t) = c_d (1−t²)^{d/2−1} on [−1, 1].
//!
//! For p = 2 the value is √(dim Π_n^d). For p = 1 the discretized problem is
//! solved as the linear program
//!
//!   maximize λ  subject to  Σᵢ wᵢ yᵢ φ_k(tᵢ) = λ φ_k(1) (k ≤ n),  |yᵢ| ≤ 1,
//!
//! whose optimum is 1/N on the grid. The saturated pattern of y gives the sign
//! changes z₁ < … < z_n of the extremal polynomial. These are then refined on
//! the continuum by Newton's method on the conditions
//! ∫ s(t) R(t) (1−t) w_d(t) dt = 0 for R ∈ 𝒫_{n−1}, where s = ±1 changes sign
//! at each z_i and s = +1 near t = 1. Any P of degree n satisfies
//! ∫ s P w_d = P(1) ∫ s w_d, so N = 1 / ∫ s w_d with P_* = c ∏ (t − z_i).

use crate::error::{Error, Result};
use crate::numerics::gauss::{gauss_jacobi, gauss_legendre};
use crate::numerics::find_root_bracketed;
use crate::specfun::gamma::{beta_inc_reg, ln_gamma};
use crate::specfun::poly::{jacobi_r, jacobi_r_all, kernel_gn};
use microlp::{ComparisonOp, OptimizationDirection, Problem};
use nalgebra::{DMatrix, DVector};
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::Serialize;

/// Largest n and d accepted by [`dim_pi`].
pub const DIM_LIMIT: usize = 1000;
/// Saturation threshold for the LP multipliers yᵢ.
const SATURATED: f64 = 1.0 - 1e-7;
/// Continuum orthogonality residual accepted for the LP sign pattern at
/// m = 16(n+1) nodes; see [`lp_residual_tolerance`].
pub const LP_RESIDUAL_TOL: f64 = 1e-4;

/// Residual tolerance for the LP sign pattern on an m-node grid. The
/// crossing points are located to O(m^{-2}) in μ_d-mass.
pub fn lp_residual_tolerance(n: usize, m: usize) -> f64 {
    LP_RESIDUAL_TOL * (16.0 * (n + 1) as f64 / m as f64).powi(2)
}

fn binomial(n: usize, k: usize) -> BigUint {
    let k = k.min(n - k);
    let mut c = BigUint::from(1u32);
    for i in 0..k {
        c *= BigUint::from(n - i);
        c /= BigUint::from(i + 1);
    }
    c
}

/// dim Π_n^d = C(n+d, d) + C(n+d−1, d), which equals (2n+d)/(n+d) · C(n+d, n).
pub fn dim_pi(n: usize, d: usize) -> Result<BigUint> {
    if d == 0 {
        return Err(Error::Domain("sphere dimension must be at least 1".into()));
    }
    if n > DIM_LIMIT || d > DIM_LIMIT {
        return Err(Error::Range(format!("dim Π_n^d limited to n, d ≤ {DIM_LIMIT} (n={n}, d={d})")));
    }
    if n == 0 {
        return Ok(BigUint::from(1u32));
    }
    Ok(binomial(n + d, d) + binomial(n + d - 1, d))
}

/// dim Π_n^d as f64, failing when it exceeds the double range.
pub fn dim_pi_value(n: usize, d: usize) -> Result<f64> {
    let v = dim_pi(n, d)?;
    v.to_f64()
        .filter(|x| x.is_finite())
        .ok_or_else(|| Error::Range(format!("dim Π_{n}^{d} overflows f64")))
}

/// c_d with c_d ∫ (1−t²)^{d/2−1} dt = 1.
fn weight_constant(d: usize) -> f64 {
    let h = d as f64 / 2.0;
    (ln_gamma(h + 0.5) - 0.5 * std::f64::consts::PI.ln() - ln_gamma(h)).exp()
}

/// w_d(t).
pub fn sphere_weight(d: usize, t: f64) -> f64 {
    weight_constant(d) * (1.0 - t * t).powf(d as f64 / 2.0 - 1.0)
}

/// μ_d([−1, t]) = I_{(1+t)/2}(d/2, d/2).
pub fn weight_cdf(d: usize, t: f64) -> f64 {
    let h = d as f64 / 2.0;
    beta_inc_reg(h, h, 0.5 * (1.0 + t))
}

fn weight_cdf_inverse(d: usize, mass: f64) -> Result<f64> {
    if mass <= 0.0 {
        return Ok(-1.0);
    }
    if mass >= 1.0 {
        return Ok(1.0);
    }
    find_root_bracketed(&|t| weight_cdf(d, t) - mass, -1.0, 1.0, 1e-15)
}

#[derive(Debug, Clone, Serialize)]
pub struct SpherePolyProblem {
    pub n: usize,
    pub d: usize,
    pub p: u32,
    pub m: usize,
    /// Gauss–Jacobi nodes for w_d, ascending
    pub nodes: Vec<f64>,
    /// weights normalized to total mass 1
    pub weights: Vec<f64>,
}

impl SpherePolyProblem {
    /// Problem with the default grid m = 8(n+1).
    pub fn new(n: usize, d: usize, p: u32) -> Result<Self> {
        Self::with_nodes(n, d, p, 8 * (n + 1))
    }

    pub fn with_nodes(n: usize, d: usize, p: u32, m: usize) -> Result<Self> {
        if d == 0 {
            return Err(Error::Domain("sphere dimension must be at least 1".into()));
        }
        if p != 1 && p != 2 {
            return Err(Error::Domain(format!("only p = 1 and p = 2 are supported, got p={p}")));
        }
        if m < 4 * (n + 1) {
            return Err(Error::Domain(format!("grid needs m ≥ 4(n+1) = {}, got {m}", 4 * (n + 1))));
        }
        let lam = d as f64 / 2.0 - 1.0;
        let rule = gauss_jacobi(m, lam, lam)?;
        let total: f64 = rule.weights.iter().sum();
        let mut pairs: Vec<(f64, f64)> = rule.nodes.iter().zip(&rule.weights).map(|(&t, &w)| (t, w / total)).collect();
        pairs.sort_by(|a, b| a.0.total_cmp(&b.0));
        Ok(SpherePolyProblem {
            n,
            d,
            p,
            m,
            nodes: pairs.iter().map(|x| x.0).collect(),
            weights: pairs.iter().map(|x| x.1).collect(),
        })
    }

    fn lambda(&self) -> f64 {
        self.d as f64 / 2.0 - 1.0
    }

    // φ_k(t_i) = R_k^{(λ,λ)}(t_i), row i
    fn basis_matrix(&self) -> Vec<Vec<f64>> {
        let lam = self.lambda();
        self.nodes
            .iter()
            .map(|&t| {
                let mut row = vec![0.0; self.n + 1];
                jacobi_r_all(self.n, lam, lam, t, &mut row);
                row
            })
            .collect()
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SphereDiagnostics {
    /// sign changes of the LP multiplier pattern (p = 1)
    pub lp_sign_changes: Option<usize>,
    /// max_j |∫ s R_j (1−t) w_d| for the sign pattern read off the LP (p = 1)
    pub lp_orthogonality_residual: Option<f64>,
    /// same residual after Newton refinement (p = 1)
    pub orthogonality_residual: Option<f64>,
    pub newton_iterations: Option<usize>,
    /// P_*(1) from the coefficient sum
    pub p_at_one: f64,
    /// |‖P_*‖_p − 1|
    pub norm_residual: f64,
    /// relative gap between the discrete optimum and the refined value (p = 1)
    /// or between the Gram optimizer and √dim (p = 2)
    pub discretization_gap: f64,
    /// max |P_*(t) − G_n(t)/√dim| on the grid (p = 2)
    pub kernel_residual: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SphereConstantResult {
    pub n: usize,
    pub d: usize,
    pub p: u32,
    pub m: usize,
    /// exact dim Π_n^d in decimal
    pub dim: String,
    pub value: f64,
    /// value / dim^{1/p}
    pub ratio: f64,
    /// optimum of the discretized problem (LP for p = 1, Gram/Cholesky for p = 2)
    pub grid_value: f64,
    /// optimizer in the basis R_k^{(λ,λ)}, λ = d/2 − 1, normalized by ‖P‖_p = 1
    pub coefficients: Vec<f64>,
    /// sign changes of the optimizer (p = 1)
    pub sign_changes: Vec<f64>,
    pub diagnostics: SphereDiagnostics,
}

/// N(S^d; n)_{p,∞} with diagnostics.
pub fn sphere_constant(problem: &SpherePolyProblem) -> Result<SphereConstantResult> {
    match problem.p {
        2 => sphere_constant_l2(problem),
        _ => sphere_constant_l1(problem),
    }
}

/// Convenience wrapper: default grid, doubled once when the LP pattern does
/// not show n sign changes.
pub fn sphere_constant_auto(n: usize, d: usize, p: u32) -> Result<SphereConstantResult> {
    let first = SpherePolyProblem::new(n, d, p)?;
    match sphere_constant(&first) {
        Err(Error::Optimization(_)) | Err(Error::Verification(_)) => {
            sphere_constant(&SpherePolyProblem::with_nodes(n, d, p, 16 * (n + 1))?)
        }
        r => r,
    }
}

fn sphere_constant_l2(pr: &SpherePolyProblem) -> Result<SphereConstantResult> {
    let (n, d) = (pr.n, pr.d);
    let dim = dim_pi(n, d)?;
    let dim_f = dim.to_f64().filter(|x| x.is_finite()).ok_or_else(|| Error::Range("dim overflows f64".into()))?;
    let closed = dim_f.sqrt();
    let phi = pr.basis_matrix();
    let k = n + 1;
    let mut g = DMatrix::<f64>::zeros(k, k);
    for (row, &w) in phi.iter().zip(&pr.weights) {
        for a in 0..k {
            let wa = w * row[a];
            for b in 0..=a {
                g[(a, b)] += wa * row[b];
            }
        }
    }
    for a in 0..k {
        for b in 0..a {
            g[(b, a)] = g[(a, b)];
        }
    }
    let e = DVector::<f64>::from_element(k, 1.0);
    let chol = g
        .cholesky()
        .ok_or_else(|| Error::Optimization("Gram matrix is not positive definite".into()))?;
    let x = chol.solve(&e);
    let q = e.dot(&x);
    let grid_value = q.sqrt();
    let coeffs: Vec<f64> = x.iter().map(|c| c / grid_value).collect();
    let p_at_one: f64 = coeffs.iter().sum();
    let norm2: f64 = phi
        .iter()
        .zip(&pr.weights)
        .map(|(row, &w)| w * dot(row, &coeffs).powi(2))
        .sum();
    let mut kernel_residual = 0.0f64;
    for (row, &t) in phi.iter().zip(&pr.nodes) {
        let kv = kernel_gn(n, d, t)? / closed;
        kernel_residual = kernel_residual.max((dot(row, &coeffs) - kv).abs());
    }
    let gap = (grid_value - closed).abs() / closed;
    if gap > 1e-6 {
        return Err(Error::Verification(format!(
            "Gram optimizer {grid_value} deviates from √dim = {closed} (relative {gap:e})"
        )));
    }
    Ok(SphereConstantResult {
        n,
        d,
        p: 2,
        m: pr.m,
        dim: dim.to_string(),
        value: closed,
        ratio: 1.0,
        grid_value,
        coefficients: coeffs,
        sign_changes: Vec::new(),
        diagnostics: SphereDiagnostics {
            lp_sign_changes: None,
            lp_orthogonality_residual: None,
            orthogonality_residual: None,
            newton_iterations: None,
            p_at_one,
            norm_residual: (norm2.sqrt() - 1.0).abs(),
            discretization_gap: gap,
            kernel_residual: Some(kernel_residual / closed),
        },
    })
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

// Discrete optimum 1/λ and the multipliers y.
fn solve_l1_lp(pr: &SpherePolyProblem, phi: &[Vec<f64>]) -> Result<(f64, Vec<f64>)> {
    let mut lp = Problem::new(OptimizationDirection::Maximize);
    let lam = lp.add_var(1.0, (0.0, f64::INFINITY));
    let ys: Vec<_> = (0..pr.m).map(|_| lp.add_var(0.0, (-1.0, 1.0))).collect();
    for k in 0..=pr.n {
        // rows scaled by m so entries are O(1)
        let scale = pr.m as f64;
        let mut expr: Vec<_> = ys
            .iter()
            .zip(phi)
            .zip(&pr.weights)
            .map(|((&y, row), &w)| (y, scale * w * row[k]))
            .collect();
        expr.push((lam, -scale));
        lp.add_constraint(expr.as_slice(), ComparisonOp::Eq, 0.0);
    }
    let sol = lp
        .solve()
        .map_err(|e| Error::Optimization(format!("LP solver failed for n={}, d={}: {e}", pr.n, pr.d)))?;
    let l = *sol.var_value(lam);
    if !(l > 0.0) {
        return Err(Error::Optimization(format!("LP returned non-positive objective {l}")));
    }
    let y = ys.iter().map(|&v| *sol.var_value(v)).collect();
    Ok((1.0 / l, y))
}

// Sign changes read off y: each cell of the discrete measure is identified
// with a mass-preserving interval of μ_d and the crossing is placed where the
// cell's signed mass splits.
fn lp_sign_changes(pr: &SpherePolyProblem, y: &[f64]) -> Result<Vec<f64>> {
    let mut cum = Vec::with_capacity(pr.m + 1);
    cum.push(0.0);
    for w in &pr.weights {
        cum.push(cum.last().unwrap() + w);
    }
    let sat: Vec<usize> = (0..pr.m).filter(|&i| y[i].abs() >= SATURATED).collect();
    let mut z = Vec::new();
    for pair in sat.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let s = y[a].signum();
        if y[b].signum() == s {
            continue;
        }
        let left_mass: f64 = (a + 1..b).map(|l| pr.weights[l] * 0.5 * (1.0 + s * y[l])).sum();
        z.push(weight_cdf_inverse(pr.d, cum[a + 1] + left_mass)?);
    }
    Ok(z)
}

/// Continuum sign-pattern integrals on [−1, 1] by panels in θ = arccos t,
/// where t ↦ g(t) w_d(t) dt becomes g(cos θ) c_d sin^{d−1}θ dθ (entire in θ).
struct ThetaPanels {
    d: usize,
    c: f64,
    order: usize,
}

impl ThetaPanels {
    fn new(n: usize, d: usize) -> Self {
        ThetaPanels {
            d,
            c: weight_constant(d),
            order: n + d + 24,
        }
    }

    /// ∫_a^b g(t) w_d(t) dt, accumulating into `out` for vector-valued g.
    fn integrate(&self, a: f64, b: f64, sign: f64, g: &mut dyn FnMut(f64, f64)) {
        let (th0, th1) = (b.clamp(-1.0, 1.0).acos(), a.clamp(-1.0, 1.0).acos());
        if th1 <= th0 {
            return;
        }
        let rule = gauss_legendre(self.order);
        let (mid, half) = (0.5 * (th0 + th1), 0.5 * (th1 - th0));
        for (x, w) in rule.nodes.iter().zip(&rule.weights) {
            let th = mid + half * x;
            let wt = sign * w * half * self.c * th.sin().powi(self.d as i32 - 1);
            g(th.cos(), wt);
        }
    }
}

// Breakpoints with the sign on each panel: s = +1 on (z_n, 1], alternating.
fn panels(z: &[f64]) -> Vec<(f64, f64, f64)> {
    let mut pts = vec![-1.0];
    pts.extend_from_slice(z);
    pts.push(1.0);
    let n = z.len();
    (0..=n)
        .map(|i| {
            let s = if (n - i).is_multiple_of(2) { 1.0 } else { -1.0 };
            (pts[i], pts[i + 1], s)
        })
        .collect()
}

// F_j = ∫ s R_j^{(λ+1,λ)} (1−t) w_d, j < n.
fn orthogonality_vector(quad: &ThetaPanels, n: usize, d: usize, z: &[f64]) -> Vec<f64> {
    let lam = d as f64 / 2.0 - 1.0;
    let mut f = vec![0.0; n];
    if n == 0 {
        return f;
    }
    let mut buf = vec![0.0; n];
    for (a, b, s) in panels(z) {
        quad.integrate(a, b, s, &mut |t, wt| {
            jacobi_r_all(n - 1, lam + 1.0, lam, t, &mut buf);
            for (fj, r) in f.iter_mut().zip(&buf) {
                *fj += wt * (1.0 - t) * r;
            }
        });
    }
    f
}

fn signed_mass(d: usize, z: &[f64]) -> f64 {
    panels(z)
        .iter()
        .map(|&(a, b, s)| s * (weight_cdf(d, b) - weight_cdf(d, a)))
        .sum()
}

// Newton refinement of the sign changes; returns (z, iterations).
fn refine_sign_changes(n: usize, d: usize, z0: Vec<f64>) -> Result<(Vec<f64>, usize)> {
    let lam = d as f64 / 2.0 - 1.0;
    let quad = ThetaPanels::new(n, d);
    let mut z = z0;
    let mut buf = vec![0.0; n];
    for it in 1..=60 {
        let f = orthogonality_vector(&quad, n, d, &z);
        let mut jac = DMatrix::<f64>::zeros(n, n);
        for (i, &zi) in z.iter().enumerate() {
            // s jumps from left to right value across z_i; d/dz_i ∫ s g = (s_left − s_right) g(z_i)
            let s_right = if (n - 1 - i).is_multiple_of(2) { 1.0 } else { -1.0 };
            let jump = -2.0 * s_right;
            jacobi_r_all(n - 1, lam + 1.0, lam, zi, &mut buf);
            let wstar = sphere_weight(d, zi) * (1.0 - zi);
            for j in 0..n {
                jac[(j, i)] = jump * buf[j] * wstar;
            }
        }
        let rhs = DVector::from_iterator(n, f.iter().map(|v| -v));
        let step = jac
            .lu()
            .solve(&rhs)
            .ok_or_else(|| Error::Optimization("singular Jacobian in sign-change refinement".into()))?;
        // damp to keep the points ordered inside (−1, 1)
        let mut damp = 1.0;
        let ordered = |zz: &[f64]| {
            zz.first().is_some_and(|&a| a > -1.0)
                && zz.last().is_some_and(|&b| b < 1.0)
                && zz.windows(2).all(|w| w[0] < w[1])
        };
        let mut trial: Vec<f64>;
        loop {
            trial = z.iter().zip(step.iter()).map(|(a, s)| a + damp * s).collect();
            if ordered(&trial) {
                break;
            }
            damp *= 0.5;
            if damp < 1e-6 {
                return Err(Error::Optimization("sign-change refinement left the interval".into()));
            }
        }
        let size = step.iter().fold(0.0f64, |m, s| m.max(s.abs())) * damp;
        z = trial;
        if size < 1e-14 {
            return Ok((z, it));
        }
    }
    Err(Error::Optimization(format!("sign-change refinement did not converge for n={n}, d={d}")))
}

fn sphere_constant_l1(pr: &SpherePolyProblem) -> Result<SphereConstantResult> {
    let (n, d) = (pr.n, pr.d);
    let dim = dim_pi(n, d)?;
    let dim_f = dim.to_f64().filter(|x| x.is_finite()).ok_or_else(|| Error::Range("dim overflows f64".into()))?;
    let phi = pr.basis_matrix();
    let (grid_value, y) = solve_l1_lp(pr, &phi)?;
    let z_lp = lp_sign_changes(pr, &y)?;
    if z_lp.len() != n {
        return Err(Error::Optimization(format!(
            "LP pattern has {} sign changes, expected {n}; grid m={} too coarse",
            z_lp.len(),
            pr.m
        )));
    }
    let quad = ThetaPanels::new(n, d);
    let resid = |z: &[f64]| {
        orthogonality_vector(&quad, n, d, z)
            .iter()
            .fold(0.0f64, |m, v| m.max(v.abs()))
    };
    let lp_resid = resid(&z_lp);
    let (z, iterations) = if n == 0 { (Vec::new(), 0) } else { refine_sign_changes(n, d, z_lp)? };
    let final_resid = resid(&z);
    let value = 1.0 / signed_mass(d, &z);

    // P_* = κ ∏ (t − z_i) with P_*(1) = value; then ‖P_*‖₁ = 1
    let kappa = value / z.iter().map(|zi| 1.0 - zi).product::<f64>();
    let p_star = |t: f64| kappa * z.iter().map(|zi| t - zi).product::<f64>();
    let lam = pr.lambda();
    let coeffs: Vec<f64> = (0..=n)
        .map(|k| {
            let (mut num, mut den) = (0.0, 0.0);
            for (&t, &w) in pr.nodes.iter().zip(&pr.weights) {
                let r = jacobi_r(k, lam, lam, t);
                num += w * r * p_star(t);
                den += w * r * r;
            }
            num / den
        })
        .collect();
    let p_at_one: f64 = coeffs.iter().sum();
    let mut l1 = 0.0;
    for (a, b, s) in panels(&z) {
        quad.integrate(a, b, s, &mut |t, wt| l1 += wt * p_star(t));
    }
    let ratio = value / dim_f;
    if !(value > 0.0) || !(p_at_one > 0.0) {
        return Err(Error::Verification(format!("non-positive extremal value {value} (P(1) = {p_at_one})")));
    }
    Ok(SphereConstantResult {
        n,
        d,
        p: 1,
        m: pr.m,
        dim: dim.to_string(),
        value,
        ratio,
        grid_value,
        coefficients: coeffs,
        sign_changes: z,
        diagnostics: SphereDiagnostics {
            lp_sign_changes: Some(n),
            lp_orthogonality_residual: Some(lp_resid),
            orthogonality_residual: Some(final_resid),
            newton_iterations: Some(iterations),
            p_at_one,
            norm_residual: (l1 - 1.0).abs(),
            discretization_gap: (grid_value - value).abs() / value,
            kernel_residual: None,
        },
    })
}

/// Checks on a p = 1 optimizer.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub sign_changes: usize,
    pub expected_sign_changes: usize,
    pub simple_and_interior: bool,
    pub p_at_one_positive: bool,
    pub lp_orthogonality_residual: f64,
    pub orthogonality_residual: f64,
    pub tolerance: f64,
    pub coefficient_value_agreement: f64,
    pub passed: bool,
}

impl ExtremalReport {
    pub fn ensure(&self) -> Result<()> {
        if self.passed {
            Ok(())
        } else {
            Err(Error::Verification(format!("extremal polynomial diagnostics failed, grid too coarse: {self:?}")))
        }
    }
}

/// Sign changes, P_*(1) > 0 and orthogonality of sign P_* to 𝒫_{n−1}
/// under (1−t) w_d(t).
pub fn extremal_poly_diagnostics(result: &SphereConstantResult) -> Result<ExtremalReport> {
    if result.p != 1 {
        return Err(Error::Precondition("extremal diagnostics apply to p = 1 results".into()));
    }
    let z = &result.sign_changes;
    let simple = z.windows(2).all(|w| w[0] < w[1]) && z.iter().all(|&t| t > -1.0 && t < 1.0);
    let dg = &result.diagnostics;
    let lp_res = dg.lp_orthogonality_residual.unwrap_or(f64::INFINITY);
    let res = dg.orthogonality_residual.unwrap_or(f64::INFINITY);
    let agree = (dg.p_at_one - result.value).abs() / result.value;
    let tolerance = lp_residual_tolerance(result.n, result.m);
    let passed = z.len() == result.n && simple && dg.p_at_one > 0.0 && lp_res <= tolerance && res <= 1e-10 && agree <= 1e-9;
    Ok(ExtremalReport {
        sign_changes: z.len(),
        expected_sign_changes: result.n,
        simple_and_interior: simple,
        p_at_one_positive: dg.p_at_one > 0.0,
        lp_orthogonality_residual: lp_res,
        orthogonality_residual: res,
        tolerance,
        coefficient_value_agreement: agree,
        passed,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct GridCheck {
    pub n: usize,
    pub d: usize,
    pub p: u32,
    pub m: usize,
    pub value: f64,
    pub value_refined: f64,
    /// relative change of the reported value under m → 2m
    pub drift: f64,
    pub grid_value: f64,
    pub grid_value_refined: f64,
    /// relative change of the discrete optimum alone under m → 2m
    pub grid_drift: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Solve at m and 2m nodes and compare. Passing requires the reported value
/// to move by less than `tolerance` and the discrete optimum to approach it.
pub fn grid_independence(n: usize, d: usize, p: u32, m: usize, tolerance: f64) -> Result<GridCheck> {
    let a = sphere_constant(&SpherePolyProblem::with_nodes(n, d, p, m)?)?;
    let b = sphere_constant(&SpherePolyProblem::with_nodes(n, d, p, 2 * m)?)?;
    let drift = (a.value - b.value).abs() / b.value;
    let grid_drift = (a.grid_value - b.grid_value).abs() / b.grid_value;
    let approaching = (b.grid_value - b.value).abs() <= (a.grid_value - a.value).abs() + 1e-12 * b.value;
    Ok(GridCheck {
        n,
        d,
        p,
        m,
        value: a.value,
        value_refined: b.value,
        drift,
        grid_value: a.grid_value,
        grid_value_refined: b.grid_value,
        grid_drift,
        tolerance,
        passed: drift < tolerance && approaching,
    })
}
