//! Grid certificates for sup |f| over an interval.
//!
//! With a bound L on |f'| the supremum over a cell [t_i, t_{i+1}] of width h
//! is at most (|f(t_i)| + |f(t_{i+1})| + L h)/2 ≤ M + L h/2, where M is the
//! grid maximum. With a bound L₂ on |f''|, linear interpolation gives the
//! cell bound max(|f(t_i)|, |f(t_{i+1})|) + L₂ h²/8.

use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SupOrder {
    /// deriv_bound bounds |f'|
    Lipschitz,
    /// deriv_bound bounds |f''|
    Curvature,
}

/// Certified upper bound for sup_{[a,b]} |f|.
#[derive(Debug, Clone, Serialize)]
pub struct SupCertificate {
    pub a: f64,
    pub b: f64,
    /// actual grid step, (b − a)/cells ≤ requested step
    pub h: f64,
    pub points: usize,
    pub grid_max: f64,
    pub argmax: f64,
    pub deriv_bound: f64,
    pub order: SupOrder,
    pub bound: f64,
}

fn grid(a: f64, b: f64, h: f64) -> (usize, f64) {
    assert!(h > 0.0, "grid step must be positive");
    if b <= a {
        return (0, 0.0);
    }
    let cells = ((b - a) / h).ceil().max(1.0) as usize;
    (cells, (b - a) / cells as f64)
}

/// Certificate from samples f(a + i·h), i = 0..values.len().
pub fn certify_samples(values: &[f64], a: f64, h: f64, deriv_bound: f64, order: SupOrder) -> SupCertificate {
    assert!(!values.is_empty());
    assert!(deriv_bound >= 0.0);
    let mut grid_max = values[0].abs();
    let mut argmax = 0;
    for (i, v) in values.iter().enumerate() {
        if v.abs() > grid_max {
            grid_max = v.abs();
            argmax = i;
        }
    }
    let bound = if values.len() == 1 {
        grid_max
    } else {
        match order {
            SupOrder::Lipschitz => values
                .windows(2)
                .map(|w| 0.5 * (w[0].abs() + w[1].abs() + deriv_bound * h))
                .fold(grid_max, f64::max),
            SupOrder::Curvature => grid_max + deriv_bound * h * h / 8.0,
        }
    };
    SupCertificate {
        a,
        b: a + h * (values.len() - 1) as f64,
        h,
        points: values.len(),
        grid_max,
        argmax: a + h * argmax as f64,
        deriv_bound,
        order,
        bound,
    }
}

fn sample(f: &dyn Fn(f64) -> f64, a: f64, b: f64, h: f64) -> (Vec<f64>, f64) {
    let (cells, step) = grid(a, b, h);
    let v = (0..=cells)
        .map(|i| {
            let t = if i == cells { b } else { a + step * i as f64 };
            f(t)
        })
        .collect();
    (v, step)
}

/// Lipschitz certificate: `deriv_bound` must bound |f'| on [a, b].
pub fn certified_sup(f: &dyn Fn(f64) -> f64, deriv_bound: f64, a: f64, b: f64, h: f64) -> SupCertificate {
    let (v, step) = sample(f, a, b, h);
    certify_samples(&v, a, step, deriv_bound, SupOrder::Lipschitz)
}

/// Curvature certificate: `second_deriv_bound` must bound |f''| on [a, b].
pub fn certified_sup_curvature(
    f: &dyn Fn(f64) -> f64,
    second_deriv_bound: f64,
    a: f64,
    b: f64,
    h: f64,
) -> SupCertificate {
    let (v, step) = sample(f, a, b, h);
    certify_samples(&v, a, step, second_deriv_bound, SupOrder::Curvature)
}

/// Largest grid step for which a curvature certificate adds at most `slack`.
pub fn curvature_step(second_deriv_bound: f64, slack: f64) -> f64 {
    if second_deriv_bound <= 0.0 {
        return f64::INFINITY;
    }
    (8.0 * slack / second_deriv_bound).sqrt()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_function() {
        let c = certified_sup(&|_| 2.5, 0.0, 0.0, 1.0, 0.1);
        assert_eq!(c.bound, 2.5);
        assert_eq!(c.grid_max, 2.5);
    }

    #[test]
    fn sine_bound_is_valid() {
        let c = certified_sup(&|t: f64| t.sin(), 1.0, 0.0, 3.0, 0.01);
        assert!(c.bound >= 1.0 && c.bound <= 1.0 + 0.005 + 1e-12);
        let c2 = certified_sup_curvature(&|t: f64| t.sin(), 1.0, 0.0, 3.0, 0.01);
        assert!(c2.bound >= 1.0 && c2.bound <= 1.0 + 1.25e-5 + 1e-12);
        assert!((c.argmax - std::f64::consts::FRAC_PI_2).abs() < 0.01);
    }
}
