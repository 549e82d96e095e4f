use nikolskii::numerics::{integrate_weighted, QuadratureRule};
use nikolskii::specfun::j_norm;
use nikolskii::zeros::{
    bessel_zero, check_interlacing, first_zero, load_snapshot, q1_bounds_elementary, q1_bounds_uniform, save_snapshot,
    zero_table, DEFAULT_TOL,
};
use std::f64::consts::PI;

#[test]
fn reference_zeros() {
    assert!((bessel_zero(1.5, 1, DEFAULT_TOL).unwrap() - 4.4934094579090641753).abs() < 1e-12);
    assert!((first_zero(0.0).unwrap() - 2.4048255576957727686).abs() < 1e-13);
    assert!((bessel_zero(2.3, 7, DEFAULT_TOL).unwrap() - 24.716640087702162788).abs() < 1e-12);
}

#[test]
fn half_order_zeros_are_multiples_of_pi() {
    let t = zero_table(0.5, 5, DEFAULT_TOL).unwrap();
    for k in 1..=5 {
        assert!((t.q(k) - k as f64 * PI).abs() < 1e-12);
    }
    t.verify_sign_changes().unwrap();
}

#[test]
fn interlacing_with_next_order() {
    let lo = zero_table(0.0, 21, DEFAULT_TOL).unwrap();
    let hi = zero_table(1.0, 20, DEFAULT_TOL).unwrap();
    check_interlacing(&lo, &hi).unwrap();
    assert!(check_interlacing(&hi, &lo).is_err());
}

#[test]
fn first_zero_bounds() {
    for alpha in [1.0, 5.0, 20.0, 100.0] {
        let q = first_zero(alpha).unwrap();
        let (a, b) = q1_bounds_elementary(alpha);
        let (c, d) = q1_bounds_uniform(alpha);
        assert!(a < q && q < b, "α={alpha}");
        assert!(c < q && q < d, "α={alpha}");
    }
}

#[test]
fn fourier_bessel_orthogonality() {
    // ∫₀¹ j_α(r_k x) x^{2α+1} dx = 0 where r_k = q_{α+1,k}
    let rule = QuadratureRule::default().with_panels(4);
    for alpha in [0.0, 1.5] {
        let t = zero_table(alpha + 1.0, 5, DEFAULT_TOL).unwrap();
        for k in 1..=5 {
            let r = t.q(k);
            let i = integrate_weighted(&|x| j_norm(alpha, r * x), 0.0, 1.0, 2.0 * alpha + 1.0, &rule).unwrap();
            assert!(i.value.abs() < 1e-13, "α={alpha}, k={k}: {}", i.value);
        }
    }
}

#[test]
fn max_values_increase_along_zeros() {
    // |j_α(q_{α+1,k})| increases in k
    let alpha = 0.7;
    let t = zero_table(alpha + 1.0, 30, DEFAULT_TOL).unwrap();
    let v: Vec<f64> = t.zeros.iter().map(|&q| j_norm(alpha, q).abs()).collect();
    assert!(v.windows(2).all(|w| w[0] > w[1]));
    let signs: Vec<f64> = t.zeros.iter().map(|&q| j_norm(alpha, q).signum()).collect();
    assert!(signs.iter().enumerate().all(|(k, s)| *s == if k % 2 == 0 { -1.0 } else { 1.0 }));
}

#[test]
fn snapshot_round_trip() {
    let dir = std::env::temp_dir().join(format!("nikolskii-zeros-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    zero_table(3.25, 8, DEFAULT_TOL).unwrap();
    save_snapshot(&dir).unwrap();
    assert!(dir.join("zeros.json").exists());
    assert!(load_snapshot(&dir).unwrap() > 0);
    std::fs::remove_dir_all(&dir).unwrap();
    let missing = std::env::temp_dir().join("nikolskii-no-such-dir");
    assert_eq!(load_snapshot(&missing).unwrap(), 0);
}
