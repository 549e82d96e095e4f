//! Adaptive Gauss panels for ∫_a^b f(t) t^μ dt.

use super::gauss::{gauss_jacobi_unit, gauss_legendre};
use super::pairwise_sum;
use crate::error::{Error, Result};
use crate::specfun::EvalResult;
use serde::{Deserialize, Serialize};

/// Panel quadrature settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    /// Nodes of the coarse rule; the error estimate compares with 2·nodes.
    pub nodes: usize,
    /// Maximum number of panel bisections.
    pub max_depth: usize,
    /// Relative tolerance with respect to ∫|f t^μ|.
    pub tol: f64,
    /// Number of equal panels to start from.
    pub initial_panels: usize,
    /// Absolute tolerance for the whole interval, shared among panels in
    /// proportion to their width; lets panels near zeros of f stop at the
    /// rounding level of f instead of their own tiny magnitude.
    #[serde(default)]
    pub abs_tol: f64,
}

impl Default for QuadratureRule {
    fn default() -> Self {
        QuadratureRule {
            nodes: 20,
            max_depth: 40,
            tol: 1e-14,
            initial_panels: 1,
            abs_tol: 0.0,
        }
    }
}

impl QuadratureRule {
    pub fn with_panels(mut self, panels: usize) -> Self {
        self.initial_panels = panels.max(1);
        self
    }

    pub fn with_abs_tol(mut self, abs_tol: f64) -> Self {
        self.abs_tol = abs_tol.max(0.0);
        self
    }

    pub fn with_tol(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.nodes < 2 {
            return Err(Error::Domain("quadrature needs at least 2 nodes".into()));
        }
        if !(self.abs_tol >= 0.0) {
            return Err(Error::Domain("absolute tolerance must be non-negative".into()));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Domain("quadrature tolerance must be positive".into()));
        }
        Ok(())
    }
}

struct Panel {
    value: f64,
    abs_value: f64,
    err: f64,
}

// the endpoint weight needs a Jacobi rule when t^μ is singular at 0; for
// large μ the factor is smooth enough to fold into the integrand
fn needs_jacobi(lo: f64, mu: f64) -> bool {
    lo == 0.0 && mu != mu.floor() && mu < 10.0
}

fn eval_panel(f: &dyn Fn(f64) -> f64, lo: f64, hi: f64, mu: f64, n: usize) -> Result<(f64, f64)> {
    let h = hi - lo;
    if needs_jacobi(lo, mu) {
        let r = gauss_jacobi_unit(n, mu)?;
        let scale = h.powf(mu + 1.0);
        let mut s = 0.0;
        let mut sa = 0.0;
        for (x, w) in r.nodes.iter().zip(&r.weights) {
            let v = w * f(h * x);
            s += v;
            sa += v.abs();
        }
        return Ok((s * scale, sa * scale));
    }
    let r = gauss_legendre(n);
    let mid = lo + 0.5 * h;
    let mut s = 0.0;
    let mut sa = 0.0;
    for (x, w) in r.nodes.iter().zip(&r.weights) {
        let t = mid + 0.5 * h * x;
        let wt = if mu == 0.0 { 1.0 } else { t.powf(mu) };
        let v = w * f(t) * wt;
        s += v;
        sa += v.abs();
    }
    Ok((0.5 * h * s, 0.5 * h * sa))
}

fn panel(
    f: &dyn Fn(f64) -> f64,
    lo: f64,
    hi: f64,
    mu: f64,
    rule: &QuadratureRule,
    abs_density: f64,
    depth: usize,
    out: &mut Vec<Panel>,
    failed: &mut bool,
) -> Result<()> {
    let (coarse, _) = eval_panel(f, lo, hi, mu, rule.nodes)?;
    let (fine, abs_fine) = eval_panel(f, lo, hi, mu, 2 * rule.nodes)?;
    let err = (fine - coarse).abs();
    if !fine.is_finite() {
        return Err(Error::Range(format!("non-finite integrand on [{lo}, {hi}]")));
    }
    let floor = (1e3 * f64::MIN_POSITIVE).max(abs_density * (hi - lo));
    if err <= rule.tol * abs_fine || err <= floor || depth >= rule.max_depth {
        if err > rule.tol * abs_fine && err > floor {
            *failed = true;
        }
        out.push(Panel {
            value: fine,
            abs_value: abs_fine,
            err,
        });
        return Ok(());
    }
    let mid = lo + 0.5 * (hi - lo);
    panel(f, lo, mid, mu, rule, abs_density, depth + 1, out, failed)?;
    panel(f, mid, hi, mu, rule, abs_density, depth + 1, out, failed)
}

/// ∫_a^b f(t) t^μ dt with an error estimate.
///
/// Each panel is integrated with `nodes` and `2·nodes` points; panels whose
/// two values differ by more than `tol·∫|f t^μ|` are bisected. When a = 0 and
/// μ is not an integer the panel touching the origin uses a Gauss–Jacobi rule
/// that integrates t^μ exactly.
pub fn integrate_weighted(
    f: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    mu: f64,
    rule: &QuadratureRule,
) -> Result<EvalResult> {
    rule.validate()?;
    if !(mu > -1.0) {
        return Err(Error::Domain(format!("weight exponent must exceed -1, got {mu}")));
    }
    if !(a >= 0.0 && b > a) {
        return Err(Error::Domain(format!("need 0 <= a < b, got [{a}, {b}]")));
    }
    let mut panels = Vec::new();
    let mut failed = false;
    let m = rule.initial_panels.max(1);
    let h = (b - a) / m as f64;
    for i in 0..m {
        let lo = a + h * i as f64;
        let hi = if i + 1 == m { b } else { a + h * (i + 1) as f64 };
        panel(f, lo, hi, mu, rule, rule.abs_tol / (b - a), 0, &mut panels, &mut failed)?;
    }
    let values: Vec<f64> = panels.iter().map(|p| p.value).collect();
    let value = pairwise_sum(&values);
    let abs_total: f64 = panels.iter().map(|p| p.abs_value).sum();
    let err: f64 = panels.iter().map(|p| p.err).sum::<f64>() + 4.0 * f64::EPSILON * abs_total;
    // panels stopped at max depth are harmless when the total stays in budget
    if failed && err > rule.tol * abs_total + rule.abs_tol {
        return Err(Error::Precision {
            what: format!("quadrature on [{a}, {b}] with weight t^{mu}"),
            achieved: err,
            requested: rule.tol * abs_total + rule.abs_tol,
        });
    }
    Ok(EvalResult {
        value,
        est_abs_error: err,
    })
}
