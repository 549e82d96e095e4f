//! Jacobi and Gegenbauer polynomials by three-term recurrence.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Polynomial family selector.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum PolyBasisId {
    /// Jacobi polynomial normalized by R_n(1) = 1.
    JacobiR { a: f64, b: f64 },
    /// Standard Jacobi polynomial P_n^{(a,b)}.
    JacobiP { a: f64, b: f64 },
    /// Gegenbauer polynomial C_n^λ.
    Gegenbauer { lambda: f64 },
}

impl PolyBasisId {
    fn validate(&self) -> Result<()> {
        match *self {
            PolyBasisId::JacobiR { a, b } | PolyBasisId::JacobiP { a, b } => {
                if !(a > -1.0 && b > -1.0) {
                    return Err(Error::Domain(format!("Jacobi parameters must exceed -1 (a={a}, b={b})")));
                }
            }
            PolyBasisId::Gegenbauer { lambda } => {
                if !(lambda > 0.0) {
                    return Err(Error::Domain(format!("Gegenbauer parameter must be positive, got {lambda}")));
                }
            }
        }
        Ok(())
    }
}

/// Evaluate the selected polynomial of degree n at t.
pub fn poly_eval(basis: PolyBasisId, n: usize, t: f64) -> Result<f64> {
    basis.validate()?;
    Ok(match basis {
        PolyBasisId::JacobiR { a, b } => jacobi_r(n, a, b, t),
        PolyBasisId::JacobiP { a, b } => jacobi_p(n, a, b, t),
        PolyBasisId::Gegenbauer { lambda } => gegenbauer(n, lambda, t),
    })
}

/// P_n^{(a,b)}(x) with the standard normalization.
pub fn jacobi_p(n: usize, a: f64, b: f64, x: f64) -> f64 {
    jacobi_p_pair(n, a, b, x).0
}

/// (P_n^{(a,b)}(x), P_{n−1}^{(a,b)}(x)); the second entry is 0 for n = 0.
pub fn jacobi_p_pair(n: usize, a: f64, b: f64, x: f64) -> (f64, f64) {
    if n == 0 {
        return (1.0, 0.0);
    }
    let mut p0 = 1.0;
    let mut p1 = 0.5 * (a - b + (a + b + 2.0) * x);
    let ab = a + b;
    for k in 2..=n {
        let k = k as f64;
        let c = 2.0 * k + ab;
        let den = 2.0 * k * (k + ab) * (c - 2.0);
        let p2 = ((c - 1.0) * (c * (c - 2.0) * x + a * a - b * b) * p1
            - 2.0 * (k + a - 1.0) * (k + b - 1.0) * c * p0)
            / den;
        p0 = p1;
        p1 = p2;
    }
    (p1, p0)
}

/// P_n^{(a,b)}(1) = Γ(n+a+1) / (Γ(a+1) n!).
pub fn jacobi_p_at_one(n: usize, a: f64) -> f64 {
    (1..=n).fold(1.0, |acc, k| acc * (k as f64 + a) / k as f64)
}

/// R_n^{(a,b)}(x) = P_n^{(a,b)}(x) / P_n^{(a,b)}(1).
pub fn jacobi_r(n: usize, a: f64, b: f64, x: f64) -> f64 {
    if x == 1.0 {
        return 1.0;
    }
    let mut out = vec![0.0; n + 1];
    jacobi_r_all(n, a, b, x, &mut out);
    out[n]
}

/// Fill out[k] = R_k^{(a,b)}(x) for k = 0..=n, running the recurrence on the
/// normalized values directly.
pub fn jacobi_r_all(n: usize, a: f64, b: f64, x: f64, out: &mut [f64]) {
    out[0] = 1.0;
    if n == 0 {
        return;
    }
    // R_1 = P_1 / P_1(1), P_1(1) = a + 1
    out[1] = 0.5 * (a - b + (a + b + 2.0) * x) / (a + 1.0);
    let ab = a + b;
    for k in 2..=n {
        let kf = k as f64;
        let c = 2.0 * kf + ab;
        let den = 2.0 * kf * (kf + ab) * (c - 2.0);
        // P_k(1)/P_{k-1}(1) = (k+a)/k ; P_k(1)/P_{k-2}(1) = (k+a)(k+a-1)/(k(k-1))
        let r1 = (kf + a) / kf;
        let r2 = r1 * (kf + a - 1.0) / (kf - 1.0);
        out[k] = ((c - 1.0) * (c * (c - 2.0) * x + a * a - b * b) * out[k - 1] / r1
            - 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * c * out[k - 2] / r2)
            / den;
    }
}

/// C_n^λ(x) for λ > 0.
pub fn gegenbauer(n: usize, lambda: f64, x: f64) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut c0 = 1.0;
    let mut c1 = 2.0 * lambda * x;
    for k in 2..=n {
        let k = k as f64;
        let c2 = (2.0 * x * (k + lambda - 1.0) * c1 - (k + 2.0 * lambda - 2.0) * c0) / k;
        c0 = c1;
        c1 = c2;
    }
    c1
}

/// dim Π_n^d as a float, (2n+d)/(n+d) · C(n+d, n).
pub fn dim_pi_f64(n: usize, d: usize) -> f64 {
    if n == 0 {
        return 1.0;
    }
    let mut c = 1.0f64;
    for k in 1..=n {
        c *= (d + k) as f64 / k as f64;
    }
    c * (2 * n + d) as f64 / (n + d) as f64
}

/// Reproducing kernel of Π_n^d as a function of t = x·y:
/// G_n(t) = (dim Π_n^d) R_n^{(d/2, (d−2)/2)}(t).
pub fn kernel_gn(n: usize, d: usize, t: f64) -> Result<f64> {
    if d == 0 {
        return Err(Error::Domain("sphere dimension must be at least 1".into()));
    }
    let a = d as f64 / 2.0;
    Ok(dim_pi_f64(n, d) * jacobi_r(n, a, a - 1.0, t))
}

/// The same kernel as the Gegenbauer sum Σ_{k≤n} ((k+λ)/λ) C_k^λ(t), λ = (d−1)/2.
/// For d = 1 the limiting form 1 + 2 Σ cos(kθ) is used.
pub fn kernel_gn_gegenbauer_sum(n: usize, d: usize, t: f64) -> f64 {
    if d == 1 {
        let theta = t.clamp(-1.0, 1.0).acos();
        return 1.0 + (1..=n).map(|k| 2.0 * (k as f64 * theta).cos()).sum::<f64>();
    }
    let lambda = (d as f64 - 1.0) / 2.0;
    (0..=n)
        .map(|k| (k as f64 + lambda) / lambda * gegenbauer(k, lambda, t))
        .sum()
}
