//! Gauss hypergeometric function `2F1(a, b; c; z)` by direct power series.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Largest `|z|` accepted for a non-terminating series.
pub const MAX_ABS_Z: f64 = 0.95;

const MAX_TERMS: usize = 1_000_000;
const REL_TOL: f64 = 1e-16;
const QUIET_TERMS: usize = 3;

/// The `n` for which `x = -n` with `n` a nonnegative integer.
fn nonpositive_integer(x: Complex64) -> Option<u64> {
    (x.im == 0.0 && x.re <= 0.0 && x.re.fract() == 0.0 && x.re > -9.0e15).then(|| (-x.re) as u64)
}

/// Sums `Σ (a)_n (b)_n / (c)_n z^n / n!`.
///
/// Accepted when `|z| <= 0.95` or when `a` or `b` is a nonpositive integer
/// (then the series is a polynomial and any `z` is allowed). A nonpositive
/// integer `c = -N` is a pole unless the series terminates at or before
/// degree `N`.
pub fn hyp2f1(a: Complex64, b: Complex64, c: Complex64, z: Complex64) -> Result<Complex64> {
    for (name, v) in [("a", a), ("b", b), ("c", c), ("z", z)] {
        if !(v.re.is_finite() && v.im.is_finite()) {
            return Err(Error::Domain(format!("non-finite parameter {name} = {v}")));
        }
    }
    let degree = match (nonpositive_integer(a), nonpositive_integer(b)) {
        (Some(m), Some(n)) => Some(m.min(n)),
        (m, n) => m.or(n),
    };
    if let Some(pole) = nonpositive_integer(c) {
        if degree.is_none_or(|d| d > pole) {
            return Err(Error::Pole(format!(
                "c = {} is a nonpositive integer and the series does not terminate first",
                c.re
            )));
        }
    }
    if degree.is_none() && z.norm() > MAX_ABS_Z {
        return Err(Error::ConvergenceDomain {
            abs_z: z.norm(),
            limit: MAX_ABS_Z,
        });
    }

    let mut sum = Complex64::new(1.0, 0.0);
    let mut term = Complex64::new(1.0, 0.0);
    let mut quiet = 0;
    // Before this index the term ratio can still exceed 1, e.g. while
    // `c + n` passes near zero.
    let settle = (a.norm() + b.norm() + c.norm()).ceil() as usize;
    for n in 0..MAX_TERMS {
        if degree == Some(n as u64) {
            return finite(sum);
        }
        let nf = n as f64;
        term = term * (a + nf) * (b + nf) / ((c + nf) * (nf + 1.0)) * z;
        sum += term;
        if degree.is_some() {
            continue;
        }
        if term.norm() == 0.0 || (n >= settle && term.norm() < REL_TOL * sum.norm()) {
            quiet += 1;
            if quiet >= QUIET_TERMS {
                return finite(sum);
            }
        } else {
            quiet = 0;
        }
    }
    Err(Error::NonConvergence { terms: MAX_TERMS })
}

fn finite(v: Complex64) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite("hyp2f1"))
    }
}

/// Real-parameter convenience wrapper.
pub fn hyp2f1_real(a: f64, b: f64, c: f64, z: f64) -> Result<f64> {
    let r = |x: f64| Complex64::new(x, 0.0);
    hyp2f1(r(a), r(b), r(c), r(z)).map(|v| v.re)
}
