//! Gauss–Jacobi rules for the weight (1−x)^a (1+x)^b on [−1, 1].
//!
//! Nodes come from Newton's method on the three-term recurrence started at
//! the asymptotic (Chebyshev-type) guesses cos((k − 1/4 + a/2)π / (n + (a+b+1)/2)).
//! A rule that fails validation is recomputed from the eigenvalues of the
//! Jacobi matrix and then polished by the same Newton step.

use crate::error::{Error, Result};
use crate::specfun::gamma::ln_gamma;
use crate::specfun::poly::jacobi_p_pair;
use nalgebra::{DMatrix, SymmetricEigen};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// Nodes (descending) and weights of an n-point Gauss rule.
#[derive(Debug, Clone)]
pub struct GaussRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussRule {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }
}

/// ∫_{−1}^{1} (1−x)^a (1+x)^b dx.
pub fn jacobi_weight_mass(a: f64, b: f64) -> f64 {
    ((a + b + 1.0) * std::f64::consts::LN_2 + ln_gamma(a + 1.0) + ln_gamma(b + 1.0)
        - ln_gamma(a + b + 2.0))
        .exp()
}

// P_n and P_n' at x via the standard derivative identity
fn jacobi_with_deriv(n: usize, a: f64, b: f64, x: f64) -> (f64, f64) {
    let (p, pm1) = jacobi_p_pair(n, a, b, x);
    let nf = n as f64;
    let c = 2.0 * nf + a + b;
    let dp = (nf * ((a - b) - c * x) * p + 2.0 * (nf + a) * (nf + b) * pm1) / (c * (1.0 - x * x));
    (p, dp)
}

fn newton_polish(n: usize, a: f64, b: f64, mut x: f64) -> Option<f64> {
    for _ in 0..100 {
        let (p, dp) = jacobi_with_deriv(n, a, b, x);
        if !(p.is_finite() && dp.is_finite()) || dp == 0.0 {
            return None;
        }
        let dx = p / dp;
        x -= dx;
        if !(x > -1.0 && x < 1.0) {
            return None;
        }
        if dx.abs() <= 4.0 * f64::EPSILON * x.abs().max(1e-3) {
            return Some(x);
        }
    }
    Some(x)
}

// The weights are proportional to 1/((1−x²) P_n'(x)²). The common factor is
// fixed by the exact mass, which involves only small Gamma arguments; the
// closed-form constant loses digits through lnΓ(n + ...) at large n.
fn weights_for(n: usize, a: f64, b: f64, nodes: &[f64]) -> Vec<f64> {
    let raw: Vec<f64> = nodes
        .iter()
        .map(|&x| {
            let (_, dp) = jacobi_with_deriv(n, a, b, x);
            1.0 / ((1.0 - x * x) * dp * dp)
        })
        .collect();
    let total = super::pairwise_sum(&raw);
    let scale = jacobi_weight_mass(a, b) / total;
    raw.into_iter().map(|w| w * scale).collect()
}

fn validate(rule: &GaussRule, a: f64, b: f64) -> bool {
    let n = rule.nodes.len();
    if rule.nodes.iter().any(|x| !(x.abs() < 1.0)) {
        return false;
    }
    if rule.nodes.windows(2).any(|w| !(w[0] > w[1])) {
        return false;
    }
    if rule.weights.iter().any(|w| !(w.is_finite() && *w > 0.0)) {
        return false;
    }
    // first moment: ∫ x (1−x)^a (1+x)^b = mass·(b − a)/(a + b + 2)
    let mass = jacobi_weight_mass(a, b);
    let m1: f64 = rule.nodes.iter().zip(&rule.weights).map(|(x, w)| x * w).sum();
    let exact = mass * (b - a) / (a + b + 2.0);
    n > 0 && (m1 - exact).abs() < 1e-12 * mass
}

fn newton_rule(n: usize, a: f64, b: f64) -> Option<GaussRule> {
    let nf = n as f64;
    let mut nodes = Vec::with_capacity(n);
    for k in 1..=n {
        let theta = (k as f64 - 0.25 + 0.5 * a) * std::f64::consts::PI / (nf + 0.5 * (a + b + 1.0));
        let x = newton_polish(n, a, b, theta.cos())?;
        nodes.push(x);
    }
    let weights = weights_for(n, a, b, &nodes);
    let rule = GaussRule { nodes, weights };
    validate(&rule, a, b).then_some(rule)
}

fn eigen_rule(n: usize, a: f64, b: f64) -> Option<GaussRule> {
    let ab = a + b;
    let mut m = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        let kf = k as f64;
        let diag = if k == 0 {
            (b - a) / (ab + 2.0)
        } else {
            let c = 2.0 * kf + ab;
            (b * b - a * a) / (c * (c + 2.0))
        };
        m[(k, k)] = diag;
        if k + 1 < n {
            let j = kf + 1.0;
            let c = 2.0 * j + ab;
            let off2 = if k == 0 {
                4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab))
            } else {
                4.0 * j * (j + a) * (j + b) * (j + ab) / (c * c * (c + 1.0) * (c - 1.0))
            };
            let off = off2.sqrt();
            m[(k, k + 1)] = off;
            m[(k + 1, k)] = off;
        }
    }
    let eig = SymmetricEigen::new(m);
    let mut idx: Vec<usize> = (0..n).collect();
    idx.sort_by(|&i, &j| eig.eigenvalues[j].partial_cmp(&eig.eigenvalues[i]).unwrap());
    let nodes: Vec<f64> = idx
        .iter()
        .map(|&i| {
            let x0 = eig.eigenvalues[i].clamp(-1.0 + 1e-300, 1.0 - 1e-16);
            newton_polish(n, a, b, x0).unwrap_or(x0)
        })
        .collect();
    let weights = weights_for(n, a, b, &nodes);
    let rule = GaussRule { nodes, weights };
    validate(&rule, a, b).then_some(rule)
}

/// n-point Gauss–Jacobi rule for (1−x)^a (1+x)^b.
pub fn gauss_jacobi(n: usize, a: f64, b: f64) -> Result<GaussRule> {
    if n == 0 {
        return Err(Error::Domain("rule needs at least one node".into()));
    }
    if !(a > -1.0 && b > -1.0) {
        return Err(Error::Domain(format!("Jacobi exponents must exceed -1 (a={a}, b={b})")));
    }
    newton_rule(n, a, b)
        .or_else(|| eigen_rule(n, a, b))
        .ok_or_else(|| Error::Precision {
            what: format!("Gauss–Jacobi rule n={n}, a={a}, b={b} failed validation"),
            achieved: f64::NAN,
            requested: 1e-11,
        })
}

type CacheKey = (usize, u64, u64);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<GaussRule>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<GaussRule>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Cached Gauss–Jacobi rule.
pub fn gauss_jacobi_cached(n: usize, a: f64, b: f64) -> Result<Arc<GaussRule>> {
    let key = (n, a.to_bits(), b.to_bits());
    if let Some(r) = cache().read().unwrap().get(&key) {
        return Ok(r.clone());
    }
    let rule = Arc::new(gauss_jacobi(n, a, b)?);
    cache().write().unwrap().insert(key, rule.clone());
    Ok(rule)
}

/// Cached Gauss–Legendre rule on [−1, 1].
pub fn gauss_legendre(n: usize) -> Arc<GaussRule> {
    gauss_jacobi_cached(n, 0.0, 0.0).expect("Gauss–Legendre rule")
}

/// Rule for ∫_0^1 g(x) x^μ dx: nodes in (0, 1), weights absorbing x^μ.
pub fn gauss_jacobi_unit(n: usize, mu: f64) -> Result<GaussRule> {
    let r = gauss_jacobi_cached(n, 0.0, mu)?;
    let scale = 0.5f64.powf(mu + 1.0);
    Ok(GaussRule {
        nodes: r.nodes.iter().map(|x| 0.5 * (1.0 + x)).collect(),
        weights: r.weights.iter().map(|w| w * scale).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_exactness() {
        let r = gauss_legendre(20);
        for k in 0..40 {
            let s: f64 = r.nodes.iter().zip(&r.weights).map(|(x, w)| w * x.powi(k)).sum();
            let e = if k % 2 == 1 { 0.0 } else { 2.0 / (k as f64 + 1.0) };
            assert!((s - e).abs() < 1e-14, "k={k}");
        }
    }

    #[test]
    fn jacobi_rules_validate() {
        for &(a, b) in &[(-0.5, -0.5), (0.0, 0.456), (0.5, -0.5), (1.5, 0.5), (0.0, 23.0), (4.0, 4.0)] {
            for &n in &[1usize, 2, 7, 40, 64, 300] {
                let r = gauss_jacobi(n, a, b).unwrap();
                let mass: f64 = r.weights.iter().sum();
                assert!((mass / jacobi_weight_mass(a, b) - 1.0).abs() < 1e-12, "a={a} b={b} n={n}");
            }
        }
    }

    #[test]
    fn chebyshev_nodes_exact() {
        let n = 1040;
        let r = gauss_jacobi(n, -0.5, -0.5).unwrap();
        for (k, x) in r.nodes.iter().enumerate() {
            let e = ((2 * k + 1) as f64 * std::f64::consts::PI / (2 * n) as f64).cos();
            assert!((x - e).abs() < 1e-14);
        }
    }

    #[test]
    fn unit_rule_moments() {
        let mu = 0.456;
        let r = gauss_jacobi_unit(12, mu).unwrap();
        for k in 0..20 {
            let s: f64 = r.nodes.iter().zip(&r.weights).map(|(x, w)| w * x.powi(k)).sum();
            assert!((s - 1.0 / (k as f64 + mu + 1.0)).abs() < 1e-14);
        }
    }
}
