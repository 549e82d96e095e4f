//! Positive zeros q_{α,k} of j_α.
//!
//! Zeros are bracketed by scanning in steps of π/8, which is below the
//! smallest gap between consecutive zeros for α > −1, and refined by Brent's
//! method. Tables are cached per order; a longer request extends the stored
//! table instead of recomputing it.

use crate::error::{Error, Result};
use crate::numerics::find_root_bracketed;
use crate::specfun::j_norm;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::f64::consts::PI;
use std::path::{Path, PathBuf};
use std::sync::{Arc, OnceLock, RwLock};

/// Default relative bracket width.
pub const DEFAULT_TOL: f64 = 1e-14;

/// Constants of the uniform first-zero bounds
/// α + c₁α^{1/3} < q_{α,1} < α + c₁α^{1/3} + c₂α^{−1/3}.
/// c₁ = 2^{−1/3}·|a₁| with a₁ the first Airy zero; c₂ = 0.3·c₁².
pub const Q1_C1: f64 = 1.855_757_081_489_239;
pub const Q1_C2: f64 = 0.3 * Q1_C1 * Q1_C1;

const SCAN_STEP: f64 = PI / 8.0;
const MAX_SCAN_STEPS: usize = 100_000;

/// Ordered positive zeros of j_α.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq)]
pub struct ZeroTable {
    pub alpha: f64,
    pub zeros: Vec<f64>,
    /// Relative width of the sign-changing bracket each zero was refined to.
    pub bracket_width: f64,
}

impl ZeroTable {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// q_{α,k}, 1-based.
    pub fn q(&self, k: usize) -> f64 {
        self.zeros[k - 1]
    }

    /// r_k = q_k / q_1.
    pub fn ratios(&self) -> Vec<f64> {
        let q1 = self.zeros[0];
        self.zeros.iter().map(|q| q / q1).collect()
    }

    /// Checks that j_α changes sign across every zero within a bracket a few
    /// times the refinement width.
    pub fn verify_sign_changes(&self) -> Result<()> {
        for (i, &q) in self.zeros.iter().enumerate() {
            let w = (4.0 * self.bracket_width * q.max(1.0)).max(8.0 * f64::EPSILON * q);
            let (l, r) = (j_norm(self.alpha, q - w), j_norm(self.alpha, q + w));
            if l * r > 0.0 {
                return Err(Error::Verification(format!(
                    "no sign change of j_{} around zero #{} = {q}",
                    self.alpha,
                    i + 1
                )));
            }
        }
        if self.zeros.windows(2).any(|w| !(w[0] < w[1])) {
            return Err(Error::Verification(format!("zeros of j_{} not increasing", self.alpha)));
        }
        Ok(())
    }
}

/// Elementary bounds √(α(α+2)) < q_{α,1} < √(α+1)(√(α+2)+1), valid for α > 0.
pub fn q1_bounds_elementary(alpha: f64) -> (f64, f64) {
    ((alpha * (alpha + 2.0)).sqrt(), (alpha + 1.0).sqrt() * ((alpha + 2.0).sqrt() + 1.0))
}

/// Airy-type bounds α + c₁α^{1/3} < q_{α,1} < α + c₁α^{1/3} + c₂α^{−1/3}, α > 0.
pub fn q1_bounds_uniform(alpha: f64) -> (f64, f64) {
    let c = alpha.cbrt();
    let lo = alpha + Q1_C1 * c;
    (lo, lo + Q1_C2 / c)
}

fn check_order(alpha: f64) -> Result<()> {
    if !(alpha > -1.0 && alpha.is_finite()) {
        return Err(Error::Domain(format!("zeros need a finite order α > −1, got {alpha}")));
    }
    Ok(())
}

// next zero strictly above `from`, where j_α(from) ≠ 0 is not required
fn next_zero(alpha: f64, from: f64, tol: f64) -> Result<f64> {
    let f = |t: f64| j_norm(alpha, t);
    let mut a = from;
    let mut fa = f(a);
    for _ in 0..MAX_SCAN_STEPS {
        let b = a + SCAN_STEP;
        let fb = f(b);
        if fa == 0.0 && a > from {
            return Ok(a);
        }
        if fa * fb < 0.0 || fb == 0.0 {
            if fb == 0.0 {
                return Ok(b);
            }
            return find_root_bracketed(&f, a, b, tol * b.max(1.0));
        }
        a = b;
        fa = fb;
    }
    Err(Error::Search(format!(
        "no zero of j_{alpha} found within {MAX_SCAN_STEPS} scan steps after {from}"
    )))
}

fn first_scan_start(alpha: f64) -> f64 {
    if alpha > 0.0 {
        // slightly below the rigorous lower bound to absorb rounding
        q1_bounds_elementary(alpha).0 * (1.0 - 1e-12)
    } else {
        // j_α > 0 on [0, 2√(α+1)) because the series alternates with
        // decreasing terms there
        (alpha + 1.0).sqrt()
    }
}

fn compute_zeros(alpha: f64, start: &[f64], count: usize, tol: f64) -> Result<Vec<f64>> {
    let mut zeros = start.to_vec();
    while zeros.len() < count {
        let from = match zeros.last() {
            Some(&q) => q + 0.5,
            None => first_scan_start(alpha),
        };
        let q = next_zero(alpha, from, tol)?;
        zeros.push(q);
    }
    Ok(zeros)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CachedTable {
    alpha: f64,
    tol: f64,
    zeros: Vec<f64>,
}

fn cache() -> &'static RwLock<HashMap<u64, Arc<CachedTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<u64, Arc<CachedTable>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

fn cached(alpha: f64) -> Option<Arc<CachedTable>> {
    cache().read().unwrap().get(&alpha.to_bits()).cloned()
}

fn store(entry: CachedTable) {
    let key = entry.alpha.to_bits();
    let mut map = cache().write().unwrap();
    let keep_old = map
        .get(&key)
        .is_some_and(|old| old.tol <= entry.tol && old.zeros.len() >= entry.zeros.len());
    if !keep_old {
        map.insert(key, Arc::new(entry));
    }
}

/// First `count` positive zeros of j_α; `tol` is the relative bracket width.
pub fn zero_table(alpha: f64, count: usize, tol: f64) -> Result<ZeroTable> {
    check_order(alpha)?;
    if count == 0 {
        return Err(Error::Domain("zero table needs at least one zero".into()));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance must be positive, got {tol}")));
    }
    let prior = cached(alpha).filter(|c| c.tol <= tol);
    let zeros = match prior {
        Some(c) if c.zeros.len() >= count => c.zeros[..count].to_vec(),
        Some(c) => {
            let z = compute_zeros(alpha, &c.zeros, count, c.tol)?;
            store(CachedTable {
                alpha,
                tol: c.tol,
                zeros: z.clone(),
            });
            z
        }
        None => {
            let z = compute_zeros(alpha, &[], count, tol)?;
            store(CachedTable {
                alpha,
                tol,
                zeros: z.clone(),
            });
            z
        }
    };
    let table = ZeroTable {
        alpha,
        zeros,
        bracket_width: tol,
    };
    // cross-check against neighbouring orders already in the cache
    for (lower_alpha, upper_alpha) in [(alpha - 1.0, alpha), (alpha, alpha + 1.0)] {
        let other = if lower_alpha == alpha { upper_alpha } else { lower_alpha };
        if let Some(c) = cached(other) {
            let o = ZeroTable {
                alpha: other,
                zeros: c.zeros.clone(),
                bracket_width: c.tol,
            };
            let (lo, hi) = if lower_alpha == alpha { (&table, &o) } else { (&o, &table) };
            check_interlacing(lo, hi)?;
        }
    }
    Ok(table)
}

/// k-th positive zero of j_α (k ≥ 1).
pub fn bessel_zero(alpha: f64, k: usize, tol: f64) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("zero index starts at 1".into()));
    }
    Ok(zero_table(alpha, k, tol)?.zeros[k - 1])
}

/// q_{α,1} at the default tolerance.
pub fn first_zero(alpha: f64) -> Result<f64> {
    bessel_zero(alpha, 1, DEFAULT_TOL)
}

/// Checks q_{α,k} < q_{α+1,k} < q_{α,k+1} for all indices available in both
/// tables; `lower` must be the table of order α and `upper` of order α+1.
pub fn check_interlacing(lower: &ZeroTable, upper: &ZeroTable) -> Result<()> {
    if (upper.alpha - lower.alpha - 1.0).abs() > 1e-12 {
        return Err(Error::Domain(format!(
            "interlacing compares orders α and α+1, got {} and {}",
            lower.alpha, upper.alpha
        )));
    }
    let n = lower.len().min(upper.len());
    for k in 0..n {
        let ok_left = lower.zeros[k] < upper.zeros[k];
        let ok_right = k + 1 >= lower.len() || upper.zeros[k] < lower.zeros[k + 1];
        if !(ok_left && ok_right) {
            return Err(Error::Consistency(format!(
                "interlacing fails at k={} for orders {} and {}",
                k + 1,
                lower.alpha,
                upper.alpha
            )));
        }
    }
    Ok(())
}

#[derive(Serialize, Deserialize)]
struct Snapshot {
    version: u32,
    tables: Vec<CachedTable>,
}

const SNAPSHOT_FILE: &str = "zeros.json";

/// Cache directory named by `NIKOLSKII_CACHE_DIR`, if set.
pub fn cache_dir_from_env() -> Option<PathBuf> {
    std::env::var_os("NIKOLSKII_CACHE_DIR").map(PathBuf::from)
}

/// Writes every cached table to `<dir>/zeros.json`.
pub fn save_snapshot(dir: &Path) -> Result<()> {
    let mut tables: Vec<CachedTable> = cache().read().unwrap().values().map(|t| (**t).clone()).collect();
    tables.sort_by(|a, b| a.alpha.total_cmp(&b.alpha));
    let snap = Snapshot { version: 1, tables };
    let text = serde_json::to_string(&snap).map_err(|e| Error::Range(format!("snapshot encoding: {e}")))?;
    std::fs::create_dir_all(dir).map_err(|e| Error::Precondition(format!("cache dir {}: {e}", dir.display())))?;
    let tmp = dir.join(format!("{SNAPSHOT_FILE}.tmp"));
    std::fs::write(&tmp, text).map_err(|e| Error::Precondition(format!("writing {}: {e}", tmp.display())))?;
    std::fs::rename(&tmp, dir.join(SNAPSHOT_FILE))
        .map_err(|e| Error::Precondition(format!("renaming snapshot: {e}")))
}

/// Loads `<dir>/zeros.json` if present. Every loaded table is re-checked for
/// sign changes before it enters the cache; tables that fail are dropped.
/// Returns the number of tables accepted.
pub fn load_snapshot(dir: &Path) -> Result<usize> {
    let path = dir.join(SNAPSHOT_FILE);
    let text = match std::fs::read_to_string(&path) {
        Ok(t) => t,
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => return Ok(0),
        Err(e) => return Err(Error::Precondition(format!("reading {}: {e}", path.display()))),
    };
    let snap: Snapshot =
        serde_json::from_str(&text).map_err(|e| Error::Precondition(format!("parsing {}: {e}", path.display())))?;
    let mut accepted = 0;
    for t in snap.tables {
        if check_order(t.alpha).is_err() || t.zeros.is_empty() {
            continue;
        }
        let table = ZeroTable {
            alpha: t.alpha,
            zeros: t.zeros.clone(),
            bracket_width: t.tol,
        };
        if table.verify_sign_changes().is_ok() {
            store(t);
            accepted += 1;
        }
    }
    Ok(accepted)
}
