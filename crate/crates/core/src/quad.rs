//! Adaptive Simpson quadrature with an absolute tolerance and an interval cap.

use crate::error::{Error, Result};

/// Largest number of accepted subintervals before giving up.
pub const MAX_INTERVALS: usize = 1 << 20;

/// Intervals are always split at least this many times before testing convergence.
const MIN_DEPTH: u32 = 3;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadrature {
    pub value: f64,
    /// Number of accepted subintervals.
    pub intervals: usize,
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

/// Integrate `f` over `[a, b]` to absolute tolerance `tol`.
///
/// Each panel is accepted when the two half-panel estimates differ from the
/// whole-panel estimate by at most `15·tol_panel`, with the Richardson
/// correction applied. The tolerance halves at every split.
pub fn adaptive_simpson<F>(f: F, a: f64, b: f64, tol: f64, max_intervals: usize) -> Result<Quadrature>
where
    F: Fn(f64) -> f64,
{
    if !(tol > 0.0) {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {tol}")));
    }
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::InvalidInput("integration bounds must be finite".into()));
    }
    if a == b {
        return Ok(Quadrature {
            value: 0.0,
            intervals: 0,
        });
    }

    let fa = f(a);
    let fb = f(b);
    let fm = f(0.5 * (a + b));
    let mut stack = vec![Panel {
        a,
        b,
        fa,
        fm,
        fb,
        whole: simpson(a, b, fa, fm, fb),
        tol,
        depth: 0,
    }];

    let mut value = 0.0;
    let mut accepted = 0usize;
    while let Some(panel) = stack.pop() {
        let m = 0.5 * (panel.a + panel.b);
        let lm = 0.5 * (panel.a + m);
        let rm = 0.5 * (m + panel.b);
        let flm = f(lm);
        let frm = f(rm);
        let left = simpson(panel.a, m, panel.fa, flm, panel.fm);
        let right = simpson(m, panel.b, panel.fm, frm, panel.fb);
        let delta = left + right - panel.whole;

        if panel.depth >= MIN_DEPTH && delta.abs() <= 15.0 * panel.tol {
            value += left + right + delta / 15.0;
            accepted += 1;
            continue;
        }
        if accepted + stack.len() + 2 > max_intervals || m == panel.a || m == panel.b {
            return Err(Error::ToleranceNotMet {
                tol,
                cap: max_intervals,
            });
        }
        let tol = 0.5 * panel.tol;
        let depth = panel.depth + 1;
        stack.push(Panel {
            a: m,
            b: panel.b,
            fa: panel.fm,
            fm: frm,
            fb: panel.fb,
            whole: right,
            tol,
            depth,
        });
        stack.push(Panel {
            a: panel.a,
            b: m,
            fa: panel.fa,
            fm: flm,
            fb: panel.fm,
            whole: left,
            tol,
            depth,
        });
    }

    Ok(Quadrature {
        value,
        intervals: accepted,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use std::f64::consts::PI;

    #[test]
    fn polynomials_up_to_cubic_are_exact() {
        let q = adaptive_simpson(|x| x * x * x - 2.0 * x + 1.0, 0.0, 2.0, 1e-12, MAX_INTERVALS).unwrap();
        assert_abs_diff_eq!(q.value, 4.0 - 4.0 + 2.0, epsilon = 1e-13);
    }

    #[test]
    fn smooth_periodic_integrand() {
        let q = adaptive_simpson(|x: f64| x.sin(), 0.0, PI, 1e-11, MAX_INTERVALS).unwrap();
        assert_abs_diff_eq!(q.value, 2.0, epsilon = 1e-11);
        let q = adaptive_simpson(|x: f64| (3.0 * x).cos().powi(2), 0.2, 1.7, 1e-10, MAX_INTERVALS).unwrap();
        let antiderivative = |x: f64| x / 2.0 + (6.0 * x).sin() / 12.0;
        assert_abs_diff_eq!(q.value, antiderivative(1.7) - antiderivative(0.2), epsilon = 1e-10);
    }

    #[test]
    fn reversed_and_empty_intervals() {
        let q = adaptive_simpson(|x: f64| x.exp(), 1.0, 0.0, 1e-10, MAX_INTERVALS).unwrap();
        assert_abs_diff_eq!(q.value, 1.0 - 1f64.exp(), epsilon = 1e-10);
        let q = adaptive_simpson(|_| 1.0, 0.5, 0.5, 1e-10, MAX_INTERVALS).unwrap();
        assert_eq!(q.value, 0.0);
        assert_eq!(q.intervals, 0);
    }

    #[test]
    fn cap_is_enforced() {
        // sqrt has an unbounded derivative at 0, so a tiny cap cannot be met
        let err = adaptive_simpson(|x: f64| x.sqrt(), 0.0, 1.0, 1e-14, 16).unwrap_err();
        assert!(matches!(err, Error::ToleranceNotMet { cap: 16, .. }));
    }

    #[test]
    fn rejects_bad_tolerance() {
        assert!(adaptive_simpson(|x| x, 0.0, 1.0, 0.0, MAX_INTERVALS).is_err());
        assert!(adaptive_simpson(|x| x, 0.0, 1.0, f64::NAN, MAX_INTERVALS).is_err());
    }
}
