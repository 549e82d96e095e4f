use super::EvalResult;
use crate::error::{Error, Result};

const MAX_TERMS: usize = 10_000;
const TOL: f64 = 1e-17;

fn nonpositive_integer(b: f64) -> bool {
    b <= 0.0 && b == b.floor()
}

/// ₁F₂(a; b1, b2; z) by partial sums of its defining series.
///
/// Summation stops once three consecutive terms fall below `TOL·|sum|`.
/// The error estimate combines the last term with the rounding error implied
/// by the sum of absolute terms (relevant for alternating series, z < 0).
pub fn hypergeom_1f2(a: f64, b1: f64, b2: f64, z: f64) -> Result<EvalResult> {
    if nonpositive_integer(b1) || nonpositive_integer(b2) {
        return Err(Error::Domain(format!(
            "lower parameters must not be non-positive integers (b1={b1}, b2={b2})"
        )));
    }
    if !(a.is_finite() && b1.is_finite() && b2.is_finite() && z.is_finite()) {
        return Err(Error::Domain("non-finite argument to 1F2".into()));
    }
    let mut term = 1.0f64;
    let mut sum = 1.0f64;
    let mut abs_sum = 1.0f64;
    let mut small_run = 0;
    for k in 0..MAX_TERMS {
        let kf = k as f64;
        term *= (a + kf) * z / ((b1 + kf) * (b2 + kf) * (kf + 1.0));
        sum += term;
        abs_sum += term.abs();
        if !sum.is_finite() {
            return Err(Error::Range(format!("1F2 partial sum overflowed at z={z}")));
        }
        if term.abs() <= TOL * sum.abs() {
            small_run += 1;
            if small_run >= 3 {
                return Ok(EvalResult {
                    value: sum,
                    est_abs_error: term.abs() + 4.0 * f64::EPSILON * abs_sum,
                });
            }
        } else {
            small_run = 0;
        }
        if term == 0.0 {
            return Ok(EvalResult {
                value: sum,
                est_abs_error: 4.0 * f64::EPSILON * abs_sum,
            });
        }
    }
    Err(Error::Precision {
        what: format!("1F2({a}; {b1}, {b2}; {z}) did not converge in {MAX_TERMS} terms"),
        achieved: term.abs(),
        requested: TOL * sum.abs(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_argument() {
        assert_eq!(hypergeom_1f2(0.3, 1.7, 2.9, 0.0).unwrap().value, 1.0);
    }

    #[test]
    fn sine_integral_case() {
        // 1F2(1/2; 3/2, 3/2; -π²/4) = Si(π)/π
        let pi: f64 = std::f64::consts::PI;
        let v = hypergeom_1f2(0.5, 1.5, 1.5, -pi * pi / 4.0).unwrap();
        assert!((v.value - 0.589_489_872_236_083_6).abs() < 1e-14);
    }

    #[test]
    fn rejects_poles() {
        assert!(matches!(hypergeom_1f2(1.0, -2.0, 1.0, 0.5), Err(Error::Domain(_))));
    }
}
