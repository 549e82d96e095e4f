use nikolskii::numerics::{certified_sup, integrate_weighted, QuadratureRule};
use nikolskii::specfun::poly::dim_pi_f64;
use nikolskii::specfun::{j_norm, j_norm_deriv};
use nikolskii::sphere::{dim_pi_value, sphere_constant, SpherePolyProblem};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn derivative_recurrence(alpha in -0.9f64..20.0, z in 0.05f64..80.0) {
        // j_{α+1}′ = (2(α+1)/z)(j_α − j_{α+1})
        let lhs = j_norm_deriv(alpha + 1.0, z);
        let rhs = 2.0 * (alpha + 1.0) / z * (j_norm(alpha, z) - j_norm(alpha + 1.0, z));
        let scale = 1.0 + 2.0 * (alpha + 1.0) / z;
        prop_assert!((lhs - rhs).abs() <= 1e-12 * scale, "{} vs {}", lhs, rhs);
    }

    #[test]
    fn bounded_by_one_and_decaying(alpha in -0.5f64..15.0, z in 0.0f64..200.0) {
        let j = j_norm(alpha, z);
        prop_assert!(j.abs() <= 1.0 + 1e-14);
        // |j_α(z)| ≤ C_α z^{−α−1/2} with C_α = 2^α Γ(α+1) √(2/π) · 1.1
        if z > 2.0 * alpha + 10.0 {
            let c = (alpha * std::f64::consts::LN_2 + nikolskii::specfun::ln_gamma(alpha + 1.0)).exp()
                * (2.0 / std::f64::consts::PI).sqrt() * 1.1;
            prop_assert!(j.abs() <= c * z.powf(-alpha - 0.5));
        }
    }

    #[test]
    fn energy_is_non_increasing(alpha in -0.5f64..10.0, z in 0.1f64..60.0, dz in 0.01f64..5.0) {
        // j² + j′² decreases for α ≥ −1/2
        let e = |t: f64| j_norm(alpha, t).powi(2) + j_norm_deriv(alpha, t).powi(2);
        prop_assert!(e(z + dz) <= e(z) + 1e-13);
    }

    #[test]
    fn product_bound(alpha in -0.5f64..8.0, x in 0.0f64..30.0, y in 0.0f64..30.0) {
        // |j_α(x)| |j_α(y)| ≤ 1 with equality only at the origin
        let p = j_norm(alpha, x) * j_norm(alpha, y);
        prop_assert!(p.abs() <= 1.0 + 1e-14);
    }

    #[test]
    fn finer_grids_give_smaller_certificates(k in 1usize..6, scale in 0.5f64..3.0) {
        let f = |t: f64| (scale * t).sin();
        let coarse = certified_sup(&f, scale, 0.0, 3.0, 0.1 / k as f64);
        let fine = certified_sup(&f, scale, 0.0, 3.0, 0.05 / k as f64);
        prop_assert!(fine.bound <= coarse.bound + 1e-15);
        prop_assert!(fine.bound >= 1.0_f64.min((3.0 * scale).min(std::f64::consts::FRAC_PI_2).sin()) - 1e-15);
    }

    #[test]
    fn quadrature_integrates_monomials(mu in -0.9f64..6.0, k in 0u32..12, b in 0.1f64..5.0) {
        // ∫₀^b t^{k+μ} dt = b^{k+μ+1}/(k+μ+1)
        let r = integrate_weighted(&|t| t.powi(k as i32), 0.0, b, mu, &QuadratureRule::default()).unwrap();
        let exact = b.powf(k as f64 + mu + 1.0) / (k as f64 + mu + 1.0);
        prop_assert!((r.value - exact).abs() <= 1e-12 * exact);
    }

    #[test]
    fn dimension_float_matches_exact(n in 0usize..200, d in 1usize..60) {
        let exact = dim_pi_value(n, d).unwrap();
        let approx = dim_pi_f64(n, d);
        prop_assert!((exact - approx).abs() <= 1e-12 * exact);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn l2_optimizer_matches_dimension(n in 1usize..16, d in 1usize..6) {
        let r = sphere_constant(&SpherePolyProblem::new(n, d, 2).unwrap()).unwrap();
        let root = dim_pi_value(n, d).unwrap().sqrt();
        prop_assert!((r.grid_value - root).abs() <= 1e-6 * root);
    }
}
