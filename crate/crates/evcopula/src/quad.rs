//! Adaptive Simpson quadrature with an explicit subdivision budget.
//!
//! Integrals that fail to reach the requested absolute tolerance within the
//! budget return an error; there is no silent fallback value.

use crate::error::{Error, Result};

/// Hard cap on interval subdivisions per integral.
pub const MAX_SUBDIVISIONS: usize = 20_000;

/// Number of uniform panels the interval is split into before adaptive
/// refinement; guards against premature convergence on long flat stretches.
const INITIAL_PANELS: usize = 16;

/// Adaptive Simpson integral of `f` over `[a, b]` to absolute tolerance
/// `abs_tol`.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, abs_tol: f64) -> Result<f64> {
    integrate_with_cap(&f, a, b, abs_tol, MAX_SUBDIVISIONS)
}

pub(crate) fn integrate_with_cap<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    abs_tol: f64,
    cap: usize,
) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && b >= a) {
        return Err(Error::InvalidArgument(format!(
            "bad integration interval [{a}, {b}]"
        )));
    }
    if !abs_tol.is_finite() || abs_tol <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "tolerance must be positive, got {abs_tol}"
        )));
    }
    if a == b {
        return Ok(0.0);
    }
    let mut total = 0.0;
    let mut used = 0usize;
    let panel_tol = abs_tol / INITIAL_PANELS as f64;
    let width = (b - a) / INITIAL_PANELS as f64;
    for i in 0..INITIAL_PANELS {
        let lo = a + i as f64 * width;
        let hi = if i + 1 == INITIAL_PANELS {
            b
        } else {
            lo + width
        };
        let mid = 0.5 * (lo + hi);
        let (flo, fmid, fhi) = (f(lo), f(mid), f(hi));
        let whole = simpson(lo, hi, flo, fmid, fhi);
        total += adapt(
            f, lo, flo, mid, fmid, hi, fhi, whole, panel_tol, &mut used, cap,
        )?;
    }
    Ok(total)
}

/// Integral of `f` over `[0, infinity)` via the substitution
/// `x = scale * t / (1 - t)`. The integrand must decay faster than `1/x^2`;
/// the transformed integrand is taken to vanish at `t = 1`.
pub fn integrate_semi_infinite<F: Fn(f64) -> f64>(f: F, scale: f64, abs_tol: f64) -> Result<f64> {
    if !(scale > 0.0 && scale.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "scale must be positive, got {scale}"
        )));
    }
    let g = move |t: f64| {
        if t >= 1.0 {
            return 0.0;
        }
        let r = 1.0 - t;
        let x = scale * t / r;
        let fx = f(x);
        if fx == 0.0 {
            0.0
        } else {
            fx * scale / (r * r)
        }
    };
    integrate_with_cap(&g, 0.0, 1.0, abs_tol, MAX_SUBDIVISIONS)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adapt<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    fa: f64,
    m: f64,
    fm: f64,
    b: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    used: &mut usize,
    cap: usize,
) -> Result<f64> {
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * tol {
        return Ok(left + right + delta / 15.0);
    }
    *used += 1;
    if *used > cap {
        return Err(Error::QuadratureDidNotConverge { limit: cap });
    }
    let half = 0.5 * tol;
    Ok(adapt(f, a, fa, lm, flm, m, fm, left, half, used, cap)?
        + adapt(f, m, fm, rm, frm, b, fb, right, half, used, cap)?)
}
