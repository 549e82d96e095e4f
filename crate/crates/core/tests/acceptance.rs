//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

use nikolskii::fourier_bessel::{build_series_auto, verify_plateau, verify_sup_bound};
use nikolskii::nikolskii::{
    a0_best, a0_star, epsilon_table, lemma61_check, monotone_certificates, rho, rho_root, rho_tilde,
    table_upper_bounds, A0Method, RhoMode,
};
use nikolskii::numerics::QuadratureRule;
use nikolskii::remez::{check_fd_sign, remez_bounds, verify_fd_half_mass};
use nikolskii::sphere::{grid_independence, sphere_constant_auto};
use nikolskii::zeros::{check_interlacing, q1_bounds_elementary, q1_bounds_uniform, zero_table, DEFAULT_TOL};
use std::f64::consts::PI;
use std::time::Instant;

type Outcome = Result<String, String>;

fn check(ok: bool, msg: String) -> Outcome {
    if ok {
        Ok(msg)
    } else {
        Err(msg)
    }
}

fn e<E: std::fmt::Display>(err: E) -> String {
    err.to_string()
}

fn c1_table() -> Outcome {
    let expected = [0.589, 0.382, 0.261, 0.184, 0.133, 0.098, 0.073, 0.055, 0.042, 0.032];
    let start = Instant::now();
    let rows = table_upper_bounds(10).map_err(e)?;
    let secs = start.elapsed().as_secs_f64();
    let worst = rows
        .iter()
        .zip(expected)
        .map(|(r, x)| (r.upper - x).abs())
        .fold(0.0, f64::max);
    check(
        worst <= 5e-4 && secs < 60.0,
        format!("max |upper − table| = {worst:.2e} (≤ 5e-4), {secs:.2} s (< 60 s)"),
    )
}

fn c2_agreement() -> Outcome {
    for alpha in [-0.272, -0.1, 0.0, 0.5, 1.0, 2.0, 4.0, 10.0] {
        let routes: Vec<_> = [A0Method::Integral, A0Method::Hypergeometric, A0Method::FbSum]
            .into_iter()
            .map(|m| a0_star(alpha, m))
            .collect::<Result<_, _>>()
            .map_err(e)?;
        for (i, a) in routes.iter().enumerate() {
            for b in &routes[i + 1..] {
                let gap = (a.value - b.value).abs();
                if gap > 1e-8 + a.abs_error + b.abs_error {
                    return Err(format!("α={alpha}: {:?} vs {:?} differ by {gap:e}", a.method, b.method));
                }
            }
        }
    }
    let mut worst = 0.0f64;
    for alpha in [4.0, 10.0, 30.0] {
        let l = a0_star(alpha, A0Method::Lommel).map_err(e)?;
        let i = a0_star(alpha, A0Method::Integral).map_err(e)?;
        let gap = (l.value - i.value).abs();
        if gap > l.abs_error + i.abs_error {
            return Err(format!("α={alpha}: Lommel {} vs integral {} (bound {:e})", l.value, i.value, l.abs_error));
        }
        worst = worst.max(gap / l.abs_error.max(f64::MIN_POSITIVE));
    }
    Ok(format!("three routes agree on 8 orders; Lommel gap/bound ≤ {worst:.2}"))
}

fn c3_closed_form() -> Outcome {
    // Si(π)/π from its power series
    let mut term = PI;
    let mut si = 0.0;
    for k in 0..60 {
        let n = (2 * k + 1) as f64;
        si += term / n;
        term *= -PI * PI / ((n + 1.0) * (n + 2.0));
    }
    let rhs = si / PI;
    let lhs = a0_star(-0.5, A0Method::Integral).map_err(e)?.value;
    let gap = (lhs - rhs).abs();
    check(gap <= 1e-9, format!("a0(−1/2) = {lhs:.15}, Si(π)/π = {rhs:.15}, gap {gap:.1e}"))
}

fn c4_series() -> Outcome {
    let rule = QuadratureRule::default();
    let mut max_tail = 0.0f64;
    for alpha in [-0.272, -0.25, 0.0, 0.5, 1.0, 2.0, 4.0] {
        let s = build_series_auto(alpha, &rule).map_err(e)?;
        max_tail = max_tail.max(s.tail_bound);
        if s.tail_bound >= 1e-7 {
            return Err(format!("α={alpha}: tail bound {:e}", s.tail_bound));
        }
        verify_plateau(&s, None).and_then(|r| r.ensure()).map_err(e)?;
        verify_sup_bound(&s, 200.0, None).and_then(|r| r.ensure()).map_err(e)?;
        if let Some(k) = (0..s.len()).find(|&k| !(s.coeffs[k] * if k % 2 == 0 { 1.0 } else { -1.0 } > 0.0)) {
            return Err(format!("α={alpha}: sign of a_{} breaks alternation", k + 1));
        }
        let res = s.balance_residual();
        if !(res >= -1e-12 && res <= s.plain_tail_bound + 1e-10) {
            return Err(format!("α={alpha}: balance residual {res:e}, tail {:e}", s.plain_tail_bound));
        }
        if !(s.coeffs[0] > (alpha + 1.0) / (alpha + 2.0)) {
            return Err(format!("α={alpha}: a1 = {}", s.coeffs[0]));
        }
    }
    Ok(format!("7 orders certified at T=200, max tail bound {max_tail:.1e}"))
}

fn c5_lemma() -> Outcome {
    let mut margin = f64::INFINITY;
    for alpha in [-0.272, 0.0, 0.575, 1.0, 5.0] {
        let r = lemma61_check(alpha, 50, 200.0, None, false).and_then(|r| r.ensure()).map_err(e)?;
        let worst = r.entries.iter().map(|x| x.bound).fold(0.0, f64::max);
        margin = margin.min(r.target + 1e-6 - worst);
    }
    Ok(format!("5 orders × 50 u-values pass, smallest margin {margin:.1e}"))
}

fn c6_rho() -> Outcome {
    let root = rho_root(-0.45, 0.0, 1e-10).map_err(e)?;
    if (root + 0.2729).abs() > 5e-4 {
        return Err(format!("root at {root}"));
    }
    let grid: Vec<f64> = (0..=20).map(|i| -0.425 + 0.05 * i as f64).filter(|&a| a <= 0.575 + 1e-12).collect();
    let vals: Vec<f64> = grid.iter().map(|&a| rho(a)).collect::<Result<_, _>>().map_err(e)?;
    if vals.windows(2).any(|w| w[1] >= w[0]) {
        return Err("ρ not decreasing on the sampled grid".into());
    }
    for alpha in [0.575, 1.0, 2.0, 5.0, 20.0] {
        let t = rho_tilde(alpha, RhoMode::Exact).map_err(e)?;
        let r = rho(alpha).map_err(e)?;
        if !(r < t && t < 1.0) {
            return Err(format!("α={alpha}: ρ = {r}, ρ̃ = {t}"));
        }
    }
    for alpha in [0.0, 1.0, 4.0] {
        let m = monotone_certificates(alpha, 60.0, 0.01, 30).map_err(e)?;
        if !m.passed {
            return Err(format!("monotone certificates fail at α={alpha}"));
        }
    }
    Ok(format!("root {root:.6}, ρ decreasing on {} points, ρ̃ < 1, φ/ψ/chain pass", grid.len()))
}

fn c7_zeros() -> Outcome {
    let t = zero_table(0.5, 20, DEFAULT_TOL).map_err(e)?;
    let worst = (1..=20).map(|k| (t.q(k) - k as f64 * PI).abs()).fold(0.0, f64::max);
    if worst > 1e-12 {
        return Err(format!("q_(1/2,k) off kπ by {worst:e}"));
    }
    for alpha in [0.0, 1.3, 4.0] {
        let lo = zero_table(alpha, 51, DEFAULT_TOL).map_err(e)?;
        let hi = zero_table(alpha + 1.0, 50, DEFAULT_TOL).map_err(e)?;
        check_interlacing(&lo, &hi).map_err(e)?;
    }
    for alpha in [1.0, 5.0, 20.0, 100.0] {
        let q = zero_table(alpha, 1, DEFAULT_TOL).map_err(e)?.q(1);
        let (a, b) = q1_bounds_elementary(alpha);
        let (c, d) = q1_bounds_uniform(alpha);
        if !(a < q && q < b && c < q && q < d) {
            return Err(format!("α={alpha}: q1 = {q} outside ({a}, {b}) or ({c}, {d})"));
        }
    }
    Ok(format!("kπ to {worst:.1e}, interlacing to k=50, first-zero bounds hold"))
}

fn c8_sphere() -> Outcome {
    for (n, d) in [(5, 2), (10, 3), (20, 2)] {
        let r = sphere_constant_auto(n, d, 2).map_err(e)?;
        let dim: f64 = r.dim.parse().map_err(e)?;
        if (r.value - dim.sqrt()).abs() > 1e-6 * dim.sqrt() {
            return Err(format!("p=2 (n={n}, d={d}): {} vs √{dim}", r.value));
        }
    }
    let r32 = sphere_constant_auto(32, 1, 1).map_err(e)?.ratio;
    if !(0.539 < r32 && r32 < 0.584) {
        return Err(format!("n=32 ratio {r32}"));
    }
    let r64 = sphere_constant_auto(64, 1, 1).map_err(e)?.ratio;
    if (r64 - 0.54092882).abs() >= 0.02 {
        return Err(format!("n=64 ratio {r64}"));
    }
    let g = grid_independence(16, 1, 1, 8 * 17, 1e-4).map_err(e)?;
    check(
        g.passed,
        format!("p=2 matches √dim; ratios {r32:.6} (n=32), {r64:.6} (n=64); drift {:.1e}", g.drift),
    )
}

fn c9_remez() -> Outcome {
    let b = remez_bounds(1).map_err(e)?;
    if !(b.lower < PI && PI < b.upper && (b.lower - 2.664).abs() < 1e-3 && (b.upper - 2.0 * PI).abs() < 1e-9) {
        return Err(format!("d=1 bounds ({}, {})", b.lower, b.upper));
    }
    let rule = QuadratureRule::default();
    let mut worst = 0.0f64;
    for d in 1..=4 {
        let h = verify_fd_half_mass(d, &rule).map_err(e)?;
        worst = worst.max((h.ratio - 0.5).abs());
        let s = check_fd_sign(d, h.horizon, 0.01).map_err(e)?;
        if !s.passed {
            return Err(format!("f_{d} positive beyond r_d: {}", s.max_value));
        }
    }
    check(
        worst <= 1e-4,
        format!("d=1 bracket ({:.6}, {:.6}) ∋ π; half-mass within {worst:.1e}; f_d ≤ 0 beyond r_d", b.lower, b.upper),
    )
}

fn c10_asymptotics() -> Outcome {
    let rows = epsilon_table(200).map_err(e)?;
    if let Some(r) = rows.iter().find(|r| !(r.epsilon_d > 0.0 && r.scaled <= 10.0)) {
        return Err(format!("d={}: ε_d = {}, scaled {}", r.d, r.epsilon_d, r.scaled));
    }
    let max_scaled = rows.iter().map(|r| r.scaled).fold(0.0, f64::max);
    let target = (2.0 / std::f64::consts::E).ln();
    for alpha in [100.0, 200.0] {
        let a = a0_best(alpha).map_err(e)?;
        let gap = (a.value.ln() / alpha - target).abs();
        if gap >= 0.1 {
            return Err(format!("α={alpha}: log a0/α off by {gap}"));
        }
    }
    let r = remez_bounds(200).map_err(e)?;
    check(
        r.in_window,
        format!(
            "max ε_d·d^(2/3) = {max_scaled:.4}; normalized Remez bounds at d=200: {:.4}, {:.4}",
            r.normalized_lower, r.normalized_upper
        ),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("C1 table reproduction", c1_table),
        ("C2 method cross-agreement", c2_agreement),
        ("C3 d=1 closed form", c3_closed_form),
        ("C4 extremal-series certification", c4_series),
        ("C5 sup lemma suite", c5_lemma),
        ("C6 rho machinery", c6_rho),
        ("C7 zeros", c7_zeros),
        ("C8 sphere constants", c8_sphere),
        ("C9 Remez", c9_remez),
        ("C10 asymptotics", c10_asymptotics),
    ];
    let mut failed = 0;
    for (name, run) in criteria {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("PASS {name}: {msg} [{secs:.1} s]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL {name}: {msg} [{secs:.1} s]");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 10 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
