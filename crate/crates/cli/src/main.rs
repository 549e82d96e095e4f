//! `nikolskii`: command-line front end. Reports go to stdout, diagnostics to
//! stderr. Exit status 0 on success, 2 on usage errors, 3 on precision or
//! verification failures.

mod output;

use clap::{Parser, Subcommand, ValueEnum};
use nikolskii::fourier_bessel::{build_series, build_series_auto, verify_plateau, verify_sup_bound};
use nikolskii::nikolskii::{
    a0_all, a0_best, a0_star, epsilon_table, guard_alpha, lemma61_check, monotone_certificates, rho, rho_direct,
    rho_root, rho_tilde, table_upper_bounds, A0Method, RhoMode, EPS_SCALED_BOUND,
};
use nikolskii::numerics::QuadratureRule;
use nikolskii::remez::{check_fd_sign, remez_bounds, verify_fd_half_mass};
use nikolskii::sphere::{extremal_poly_diagnostics, grid_independence, sphere_constant, SpherePolyProblem};
use nikolskii::zeros::{cache_dir_from_env, load_snapshot, save_snapshot, zero_table};
use nikolskii::Error;
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "nikolskii", version, about = "Sharp Nikolskii constants and related certificates")]
struct Cli {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    /// Let `verify` and `lemma61` run below the certified range α ≥ −0.272
    #[arg(long, global = true)]
    exploratory: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum MethodArg {
    Integral,
    Hypergeometric,
    FbSum,
    Lommel,
    Best,
    All,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// a₀*(α) = I_α by one or all routes
    A0 {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, value_enum, default_value_t = MethodArg::Best)]
        method: MethodArg,
        /// agreement slack for --method all, on top of the reported errors
        #[arg(long, default_value_t = 1e-8)]
        slack: f64,
    },
    /// Bounds 2^{−d} ≤ L*(d) ≤ a₀*(d/2 − 1) for d = 1..=d_max
    Table {
        #[arg(long, default_value_t = 10)]
        d_max: usize,
    },
    /// Positive zeros of j_α
    Zeros {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 10)]
        k: usize,
        #[arg(long, default_value_t = 1e-14)]
        tol: f64,
    },
    /// Coefficients of the extremal Fourier–Bessel series
    Fbseries {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        /// number of terms; chosen automatically when omitted
        #[arg(long)]
        k_max: Option<usize>,
    },
    /// Plateau and sup-norm certificates for the extremal series
    Verify {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 200.0)]
        horizon: f64,
        #[arg(long)]
        grid_step: Option<f64>,
    },
    /// sup_{t ≥ q₁} |j_α − u j_{α+1}| ≤ |j_α(q₁)| over a range of u
    Lemma61 {
        #[arg(long, allow_negative_numbers = true)]
        alpha: f64,
        #[arg(long, default_value_t = 50)]
        u_count: usize,
        #[arg(long, default_value_t = 200.0)]
        horizon: f64,
        #[arg(long)]
        grid_step: Option<f64>,
    },
    /// ρ(α), its majorant ρ̃(α), the root of ρ = 1 and monotonicity checks
    Rho {
        #[arg(long, allow_negative_numbers = true, value_delimiter = ',')]
        alpha: Vec<f64>,
        /// locate the root of ρ(α) = 1 in [−0.45, 0]
        #[arg(long)]
        root: bool,
        /// also run the monotone-function certificates at each α
        #[arg(long)]
        monotone: bool,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// ε_d with a₀*(d/2 − 1) = (√(2/e))^{d(1+ε_d)} for 2 ≤ d ≤ d_max
    Epsd {
        #[arg(long, default_value_t = 200)]
        d_max: usize,
    },
    /// N(S^d; n)_{p,∞} for p ∈ {1, 2}
    Sphere {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 1)]
        p: u32,
        /// quadrature nodes; defaults to 8(n+1)
        #[arg(long)]
        nodes: Option<usize>,
        /// also solve with twice the nodes and report the drift
        #[arg(long)]
        grid_check: bool,
    },
    /// Remez concentration bounds and the half-mass check
    Remez {
        #[arg(long, conflicts_with = "d_max")]
        d: Option<usize>,
        #[arg(long)]
        d_max: Option<usize>,
        /// run the half-mass quadrature and sign check for each d
        #[arg(long)]
        half_mass: bool,
    },
}

/// A finished computation: the JSON payload, a CSV view, and whether every
/// check in it passed.
struct Report {
    result: Value,
    metadata: Value,
    columns: Vec<&'static str>,
    rows: Vec<Value>,
    passed: bool,
}

type CmdResult = Result<Report, Error>;

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report serializes")
}

fn method_of(m: MethodArg) -> Option<A0Method> {
    match m {
        MethodArg::Integral => Some(A0Method::Integral),
        MethodArg::Hypergeometric => Some(A0Method::Hypergeometric),
        MethodArg::FbSum => Some(A0Method::FbSum),
        MethodArg::Lommel => Some(A0Method::Lommel),
        MethodArg::Best | MethodArg::All => None,
    }
}

fn cmd_a0(alpha: f64, method: MethodArg, slack: f64) -> CmdResult {
    let ests = match method {
        MethodArg::All => a0_all(alpha, slack)?,
        MethodArg::Best => vec![a0_best(alpha)?],
        m => vec![a0_star(alpha, method_of(m).unwrap())?],
    };
    let rows: Vec<Value> = ests
        .iter()
        .map(|e| json!({"alpha": alpha, "method": e.method, "value": e.value, "abs_error": e.abs_error}))
        .collect();
    Ok(Report {
        result: json!({"alpha": alpha, "estimates": to_value(&ests)}),
        metadata: json!({
            "integral": "(2α+2)∫₀¹ j_{α+1}(q₁x) x^{2α+1} dx, adaptive Gauss panels",
            "hypergeometric": "1F2(α+1; α+2, α+2; −q₁²/4), alternating series with rounding bound",
            "fb_sum": "−F*(q₁) from the accelerated Fourier–Bessel series, tail-bounded",
            "lommel": "Lommel-function identity with remainder bound of the asymptotic sum",
            "agreement_slack": slack,
        }),
        columns: vec!["alpha", "method", "value", "abs_error"],
        rows,
        passed: true,
    })
}

fn cmd_table(d_max: usize) -> CmdResult {
    let rows = table_upper_bounds(d_max)?;
    let vals: Vec<Value> = rows.iter().map(to_value).collect();
    Ok(Report {
        result: json!({"rows": vals}),
        metadata: json!({"lower": "2^{-d}", "upper": "a0*(d/2 - 1), 1F2 route with quadrature fallback"}),
        columns: vec!["d", "alpha", "lower", "upper", "upper_error", "upper_3dp"],
        rows: vals,
        passed: true,
    })
}

fn cmd_zeros(alpha: f64, k: usize, tol: f64) -> CmdResult {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let t = zero_table(alpha, k, tol)?;
    t.verify_sign_changes()?;
    let rows: Vec<Value> = t.zeros.iter().enumerate().map(|(i, q)| json!({"k": i + 1, "q": q})).collect();
    Ok(Report {
        result: to_value(&t),
        metadata: json!({"method": "sign-change scan with step π/8 and Brent refinement", "tol": tol}),
        columns: vec!["k", "q"],
        rows,
        passed: true,
    })
}

fn cmd_fbseries(alpha: f64, k_max: Option<usize>) -> CmdResult {
    let rule = QuadratureRule::default();
    let s = match k_max {
        Some(k) => build_series(alpha, k, &rule)?,
        None => build_series_auto(alpha, &rule)?,
    };
    let rows: Vec<Value> = (0..s.len())
        .map(|i| {
            json!({
                "k": i + 1,
                "q": s.zeros[i],
                "a": s.coeffs[i],
                "a_err": s.coeff_err[i],
                "a_accel": s.accel_coeffs[i],
                "a_accel_err": s.accel_err[i],
                "j_alpha_at_q": s.j_at_zeros[i],
            })
        })
        .collect();
    Ok(Report {
        result: s.to_json(),
        metadata: json!({"quadrature": rule, "tail_bound": s.tail_bound, "accel_order": s.accel_order}),
        columns: vec!["k", "q", "a", "a_err", "a_accel", "a_accel_err", "j_alpha_at_q"],
        rows,
        passed: true,
    })
}

fn cmd_verify(alpha: f64, horizon: f64, grid_step: Option<f64>, exploratory: bool) -> CmdResult {
    guard_alpha(alpha, exploratory)?;
    let s = build_series_auto(alpha, &QuadratureRule::default())?;
    let plateau = verify_plateau(&s, grid_step)?;
    let sup = verify_sup_bound(&s, horizon, grid_step)?;
    let passed = plateau.passed && sup.passed;
    let rows: Vec<Value> = [&plateau, &sup]
        .iter()
        .map(|r| {
            json!({
                "check": r.check, "alpha": r.alpha, "bound": r.bound, "threshold": r.threshold,
                "h": r.certificate.h, "points": r.certificate.points, "passed": r.passed,
            })
        })
        .collect();
    Ok(Report {
        result: json!({
            "alpha": alpha, "terms": s.len(), "tail_bound": s.tail_bound,
            "plateau": to_value(&plateau), "sup": to_value(&sup),
        }),
        metadata: json!({"threshold": "max(1e-6, 3·tail_bound)", "horizon": horizon}),
        columns: vec!["check", "alpha", "bound", "threshold", "h", "points", "passed"],
        rows,
        passed,
    })
}

fn cmd_lemma61(alpha: f64, u_count: usize, horizon: f64, grid_step: Option<f64>, exploratory: bool) -> CmdResult {
    let r = lemma61_check(alpha, u_count, horizon, grid_step, exploratory)?;
    let rows: Vec<Value> = r
        .entries
        .iter()
        .map(|e| {
            json!({
                "alpha": alpha, "u": e.u, "bound": e.bound, "target": r.target,
                "grid_max": e.certificate.grid_max, "attained_at_q1": e.attained_at_q1, "passed": e.passed,
            })
        })
        .collect();
    let passed = r.passed;
    Ok(Report {
        result: to_value(&r),
        metadata: json!({"certificate": "curvature grid bound on [q1, T] and envelope beyond T", "slack": 1e-6}),
        columns: vec!["alpha", "u", "bound", "target", "grid_max", "attained_at_q1", "passed"],
        rows,
        passed,
    })
}

fn cmd_rho(alphas: &[f64], root: bool, monotone: bool, tol: f64) -> CmdResult {
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    if alphas.is_empty() && !root {
        return Err(Error::Domain("give --alpha values and/or --root".into()));
    }
    let mut rows = Vec::new();
    let mut passed = true;
    let mut certs = Vec::new();
    for &a in alphas {
        let r = rho(a)?;
        let rt_exact = rho_tilde(a, RhoMode::Exact).ok();
        let rt_bounds = rho_tilde(a, RhoMode::Bounds).ok();
        rows.push(json!({
            "alpha": a, "rho": r, "rho_direct": rho_direct(a)?,
            "rho_tilde_exact": rt_exact, "rho_tilde_bounds": rt_bounds,
        }));
        if monotone {
            let c = monotone_certificates(a, 60.0, 0.01, 30)?;
            passed &= c.passed;
            certs.push(to_value(&c));
        }
    }
    let root_val = if root { Some(rho_root(-0.45, 0.0, tol)?) } else { None };
    Ok(Report {
        result: json!({"values": rows.clone(), "root": root_val, "monotone": certs}),
        metadata: json!({
            "rho": "closed form, cross-checked against the direct ratio",
            "rho_tilde_bounds": "each factor at its worst end of the uniform first-zero bounds",
            "root_bracket": [-0.45, 0.0], "tol": tol,
        }),
        columns: vec!["alpha", "rho", "rho_direct", "rho_tilde_exact", "rho_tilde_bounds"],
        rows,
        passed,
    })
}

fn cmd_epsd(d_max: usize) -> CmdResult {
    let rows = epsilon_table(d_max)?;
    let passed = rows.iter().all(|r| r.epsilon_d > 0.0 && r.scaled <= EPS_SCALED_BOUND);
    let vals: Vec<Value> = rows.iter().map(to_value).collect();
    Ok(Report {
        result: json!({"rows": vals, "scaled_bound": EPS_SCALED_BOUND}),
        metadata: json!({"definition": "a0*(d/2-1) = (sqrt(2/e))^{d(1+eps_d)}", "scaled": "eps_d * d^{2/3}"}),
        columns: vec!["d", "epsilon_d", "scaled"],
        rows: vals,
        passed,
    })
}

fn cmd_sphere(n: usize, d: usize, p: u32, nodes: Option<usize>, grid_check: bool) -> CmdResult {
    let m = nodes.unwrap_or(8 * (n + 1));
    let r = sphere_constant(&SpherePolyProblem::with_nodes(n, d, p, m)?)?;
    let mut passed = true;
    let extremal = if p == 1 {
        let e = extremal_poly_diagnostics(&r)?;
        passed &= e.passed;
        Some(to_value(&e))
    } else {
        None
    };
    let grid = if grid_check {
        let g = grid_independence(n, d, p, m, 1e-4)?;
        passed &= g.passed;
        Some(to_value(&g))
    } else {
        None
    };
    let row = json!({"n": n, "d": d, "p": p, "m": m, "dim": r.dim, "value": r.value, "ratio": r.ratio, "grid_value": r.grid_value});
    let mut result = to_value(&r);
    result["extremal"] = extremal.unwrap_or(Value::Null);
    result["grid_check"] = grid.unwrap_or(Value::Null);
    Ok(Report {
        result,
        metadata: json!({
            "p2": "closed form sqrt(dim), Gram/Cholesky optimizer on the grid as oracle",
            "p1": "LP on the Gauss–Jacobi grid, sign changes refined by Newton on the orthogonality conditions",
            "nodes": m,
        }),
        columns: vec!["n", "d", "p", "m", "dim", "value", "ratio", "grid_value"],
        rows: vec![row],
        passed,
    })
}

fn cmd_remez(d: Option<usize>, d_max: Option<usize>, half_mass: bool) -> CmdResult {
    let ds: Vec<usize> = match (d, d_max) {
        (Some(d), _) => vec![d],
        (None, Some(m)) => (1..=m).collect(),
        (None, None) => return Err(Error::Domain("give --d or --d-max".into())),
    };
    let mut rows = Vec::new();
    let mut passed = true;
    for d in ds {
        let b = remez_bounds(d)?;
        passed &= b.ln_lower <= b.ln_upper;
        let mut row = to_value(&b);
        if half_mass {
            let h = verify_fd_half_mass(d, &QuadratureRule::default())?;
            let s = check_fd_sign(d, h.horizon, 0.01)?;
            passed &= s.passed;
            row["half_mass_ratio"] = json!(h.ratio);
            row["half_mass_error"] = json!(h.ratio_error);
            row["sign_check_max"] = json!(s.max_value);
            row["sign_check_passed"] = json!(s.passed);
        }
        rows.push(row);
    }
    Ok(Report {
        result: json!({"rows": rows.clone()}),
        metadata: json!({
            "lower": "(2π)^d / (2 V_d I_{d/2-1})",
            "upper": "(2 q_{d/2-1,1})^d V_d",
            "window": "normalized bounds within 20% of (sqrt(e/2), e)",
        }),
        columns: vec![
            "d", "lower", "upper", "ln_lower", "ln_upper", "normalized_lower", "normalized_upper", "in_window",
            "half_mass_ratio", "half_mass_error", "sign_check_passed",
        ],
        rows,
        passed,
    })
}

fn config_of(cmd: &Command) -> (&'static str, Value) {
    match cmd {
        Command::A0 { alpha, method, slack } => ("a0", json!({"alpha": alpha, "method": method.to_possible_value().map(|v| v.get_name().to_string()), "slack": slack})),
        Command::Table { d_max } => ("table", json!({"d_max": d_max})),
        Command::Zeros { alpha, k, tol } => ("zeros", json!({"alpha": alpha, "k": k, "tol": tol})),
        Command::Fbseries { alpha, k_max } => ("fbseries", json!({"alpha": alpha, "k_max": k_max})),
        Command::Verify { alpha, horizon, grid_step } => {
            ("verify", json!({"alpha": alpha, "horizon": horizon, "grid_step": grid_step}))
        }
        Command::Lemma61 { alpha, u_count, horizon, grid_step } => (
            "lemma61",
            json!({"alpha": alpha, "u_count": u_count, "horizon": horizon, "grid_step": grid_step}),
        ),
        Command::Rho { alpha, root, monotone, tol } => {
            ("rho", json!({"alpha": alpha, "root": root, "monotone": monotone, "tol": tol}))
        }
        Command::Epsd { d_max } => ("epsd", json!({"d_max": d_max})),
        Command::Sphere { n, d, p, nodes, grid_check } => {
            ("sphere", json!({"n": n, "d": d, "p": p, "nodes": nodes, "grid_check": grid_check}))
        }
        Command::Remez { d, d_max, half_mass } => ("remez", json!({"d": d, "d_max": d_max, "half_mass": half_mass})),
    }
}

fn run(cli: &Cli) -> CmdResult {
    let ex = cli.exploratory;
    match &cli.command {
        Command::A0 { alpha, method, slack } => cmd_a0(*alpha, *method, *slack),
        Command::Table { d_max } => cmd_table(*d_max),
        Command::Zeros { alpha, k, tol } => cmd_zeros(*alpha, *k, *tol),
        Command::Fbseries { alpha, k_max } => cmd_fbseries(*alpha, *k_max),
        Command::Verify { alpha, horizon, grid_step } => cmd_verify(*alpha, *horizon, *grid_step, ex),
        Command::Lemma61 { alpha, u_count, horizon, grid_step } => {
            cmd_lemma61(*alpha, *u_count, *horizon, *grid_step, ex)
        }
        Command::Rho { alpha, root, monotone, tol } => cmd_rho(alpha, *root, *monotone, *tol),
        Command::Epsd { d_max } => cmd_epsd(*d_max),
        Command::Sphere { n, d, p, nodes, grid_check } => cmd_sphere(*n, *d, *p, *nodes, *grid_check),
        Command::Remez { d, d_max, half_mass } => cmd_remez(*d, *d_max, *half_mass),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cache = cache_dir_from_env();
    if let Some(dir) = &cache {
        match load_snapshot(dir) {
            Ok(n) if n > 0 => eprintln!("loaded {n} zero tables from {}", dir.display()),
            Ok(_) => {}
            Err(e) => eprintln!("ignoring zero cache: {e}"),
        }
    }
    let (name, config) = config_of(&cli.command);
    let report = match run(&cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("nikolskii {name}: {e}");
            return ExitCode::from(if e.is_numerical_failure() { 3 } else { 2 });
        }
    };
    if let Some(dir) = &cache {
        if let Err(e) = save_snapshot(dir) {
            eprintln!("could not save zero cache: {e}");
        }
    }
    match cli.format {
        Format::Json => {
            let doc = json!({
                "schema": output::SCHEMA,
                "command": name,
                "version": env!("CARGO_PKG_VERSION"),
                "config": config,
                "metadata": report.metadata,
                "passed": report.passed,
                "result": report.result,
            });
            print!("{}", output::to_json_string(&doc));
        }
        Format::Csv => print!("{}", output::to_csv(&report.columns, &report.rows)),
    }
    if report.passed {
        ExitCode::SUCCESS
    } else {
        eprintln!("nikolskii {name}: a check failed; see the report");
        ExitCode::from(3)
    }
}
