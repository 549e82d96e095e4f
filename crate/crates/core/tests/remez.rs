use nikolskii::numerics::QuadratureRule;
use nikolskii::remez::{check_fd_sign, remez_bounds, unit_ball_volume, verify_fd_half_mass, RadialProfile};
use std::f64::consts::PI;

#[test]
fn ball_volumes() {
    assert!((unit_ball_volume(1) - 2.0).abs() < 1e-14);
    assert!((unit_ball_volume(2) - PI).abs() < 1e-14);
    assert!((unit_ball_volume(3) - 4.18879020478639098).abs() < 1e-13);
}

#[test]
fn line_bounds_bracket_pi() {
    let b = remez_bounds(1).unwrap();
    assert!((b.lower - 2.664670591941592).abs() < 1e-10);
    assert!((b.upper - 2.0 * PI).abs() < 1e-12);
    assert!(b.lower < PI && PI < b.upper);
}

#[test]
fn normalized_bounds() {
    // the normalized lower bound exceeds 1 from d = 2 on
    for d in 2..=200 {
        let b = remez_bounds(d).unwrap();
        assert!(b.normalized_lower >= 1.0 && b.normalized_lower < b.normalized_upper, "d={d}");
        assert!((b.ln_upper - b.ln_lower).is_finite());
    }
    let b = remez_bounds(200).unwrap();
    assert!(b.in_window);
    assert!(b.upper.is_infinite() && b.ln_upper.is_finite());
}

#[test]
fn half_mass() {
    let rule = QuadratureRule::default();
    for d in [1, 3] {
        let h = verify_fd_half_mass(d, &rule).unwrap();
        assert!((h.ratio - 0.5).abs() < 1e-4, "d={d}: {}", h.ratio);
        assert!(h.ratio_error < 1e-5);
    }
}

#[test]
fn profile_sign_and_singularity() {
    for d in 1..=4 {
        let s = check_fd_sign(d, 100.0, 0.01).unwrap();
        assert!(s.passed, "d={d}: {}", s.max_value);
        let p = RadialProfile::new(d).unwrap();
        assert!(p.eval(0.5 * p.r) > 0.0);
        assert!(p.eval(p.r).abs() < 1e-300);
        let (a, b) = (p.eval(p.r * (1.0 - 1e-9)), p.eval(p.r * (1.0 + 1e-9)));
        assert!(a > 0.0 && b < 0.0);
    }
    assert!(RadialProfile::new(0).is_err());
}
