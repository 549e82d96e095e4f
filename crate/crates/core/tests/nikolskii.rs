use nikolskii::nikolskii::{
    a0_all, a0_best, a0_star, f_aux_deriv, f_aux_deriv_alt, guard_alpha, lemma61_check, lstar_bounds,
    monotone_certificates, ode_residual, rho, rho_direct, rho_tilde, table_upper_bounds, A0Method, RhoMode,
    ALPHA_MIN,
};
use nikolskii::Error;

#[test]
fn reference_constants() {
    // frozen from mpmath
    let cases = [
        (-0.272, 0.47977209748501909326),
        (0.0, 0.38217196584712142069),
        (1.0, 0.18442101552484189508),
        (4.0, 0.032313973934757257686),
        (10.0, 0.0019023634590658378945),
    ];
    for (alpha, want) in cases {
        let est = a0_best(alpha).unwrap();
        assert!((est.value - want).abs() <= 1e-10 * want, "α={alpha}: {}", est.value);
        assert!((est.value - want).abs() <= est.abs_error + 1e-16);
    }
}

#[test]
fn table_values() {
    let rows = table_upper_bounds(10).unwrap();
    let expect = [(1, 0.589), (2, 0.382), (3, 0.261), (7, 0.073), (9, 0.042), (10, 0.032)];
    for (d, v) in expect {
        assert!((rows[d - 1].upper - v).abs() <= 5e-4, "d={d}");
    }
    let b = lstar_bounds(2).unwrap();
    assert_eq!(b.lower, 0.25);
    assert!(b.upper > 0.2820 && b.upper < 0.3822);
    assert!((lstar_bounds(10).unwrap().lower - 2f64.powi(-10)).abs() < 1e-18);
}

#[test]
fn all_routes_agree() {
    for alpha in [-0.5, 0.0, 2.0, 4.5] {
        let v = a0_all(alpha, 1e-8).unwrap();
        assert!(v.len() >= 3);
    }
    assert!(a0_star(-0.2, A0Method::Lommel).is_err());
}

#[test]
fn constant_brackets_and_decreases() {
    let mut prev = 1.0;
    for d in 1..=200 {
        let b = lstar_bounds(d).unwrap();
        assert!(b.lower < b.upper && b.upper < 1.0, "d={d}");
        assert!(b.upper < prev, "d={d}");
        prev = b.upper;
    }
}

#[test]
fn guard_refuses_orders_below_the_range() {
    assert!(matches!(guard_alpha(-0.3, false), Err(Error::Precondition(_))));
    assert!(guard_alpha(-0.3, true).is_ok());
    assert!(guard_alpha(ALPHA_MIN, false).is_ok());
    assert!(lemma61_check(-0.3, 5, 50.0, None, false).is_err());
}

#[test]
fn lemma_cases() {
    // u = 0 and u = (α+2)/(α+1) are the endpoints of the sampled range
    let r = lemma61_check(0.0, 2, 200.0, None, false).unwrap().ensure().unwrap();
    assert_eq!(r.entries.len(), 2);
    assert_eq!(r.entries[0].u, 0.0);
    assert!((r.entries[1].u - 2.0).abs() < 1e-15);
    lemma61_check(ALPHA_MIN, 10, 200.0, None, false).unwrap().ensure().unwrap();
}

#[test]
fn rho_properties() {
    assert!((rho(-0.2729).unwrap() - 1.0).abs() < 1e-3);
    for alpha in [-0.2, 0.3, 2.0] {
        assert!((rho(alpha).unwrap() - rho_direct(alpha).unwrap()).abs() < 1e-12);
    }
    for alpha in [0.575, 1.0, 2.0, 5.0, 20.0] {
        let r = rho(alpha).unwrap();
        let t = rho_tilde(alpha, RhoMode::Exact).unwrap();
        let tb = rho_tilde(alpha, RhoMode::Bounds).unwrap();
        assert!(r < t && t < 1.0 && t <= tb, "α={alpha}: {r} {t} {tb}");
    }
}

#[test]
fn auxiliary_function_checks() {
    let m = monotone_certificates(0.0, 60.0, 0.01, 10).unwrap();
    assert!(m.phi_monotone && m.passed);
    let m = monotone_certificates(1.0, 60.0, 0.01, 10).unwrap();
    assert!(m.chain.windows(2).all(|w| w[0] >= w[1]));
    assert!(m.psi_q1_prime < m.psi_q1);
    for t in [0.5, 3.0, 11.0, 40.0] {
        let (a, b) = (f_aux_deriv(1.0, t), f_aux_deriv_alt(1.0, t));
        assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-3));
        assert!(ode_residual(1.0, t) < 1e-12);
    }
}
