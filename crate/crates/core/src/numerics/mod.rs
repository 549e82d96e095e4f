//! Quadrature, bracketed root finding and certified suprema.

pub mod gauss;
pub mod quadrature;
pub mod roots;
pub mod sup;

pub use gauss::{gauss_jacobi, gauss_jacobi_unit, gauss_legendre, GaussRule};
pub use quadrature::{integrate_weighted, QuadratureRule};
pub use roots::find_root_bracketed;
pub use sup::{certified_sup, certified_sup_curvature, certify_samples, SupCertificate, SupOrder};

/// Pairwise (cascade) summation; the reduction order depends only on the length.
pub fn pairwise_sum(v: &[f64]) -> f64 {
    if v.len() <= 8 {
        return v.iter().sum();
    }
    let m = v.len() / 2;
    pairwise_sum(&v[..m]) + pairwise_sum(&v[m..])
}
