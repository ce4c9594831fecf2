//! Complex log-gamma (Lanczos, g = 7, nine coefficients) and exact
//! log-factorials for integer arguments.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};

const LANCZOS_G: f64 = 7.0;

const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln(sqrt(2 pi))`
const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;

fn is_nonpositive_integer(z: Complex64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// A logarithm of `Γ(z)`.
///
/// The real part is `ln|Γ(z)|`; the imaginary part is a valid argument of
/// `Γ(z)` (it agrees with the principal branch for `Re z >= 0.5`, and may
/// differ from it by a multiple of `2π` after reflection).
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::Domain(format!(
            "log_gamma of non-finite argument {z}"
        )));
    }
    if is_nonpositive_integer(z) {
        return Err(Error::Pole(format!("Γ has a pole at {}", z.re)));
    }
    let value = if z.re < 0.5 {
        // Γ(z) Γ(1 - z) = π / sin(π z)
        let s = (z * PI).sin();
        Complex64::new(PI.ln(), 0.0) - s.ln() - lanczos(Complex64::new(1.0, 0.0) - z)
    } else {
        lanczos(z)
    };
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite("log_gamma"))
    }
}

fn lanczos(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    (z + 0.5) * t.ln() - t + LN_SQRT_2PI + series.ln()
}

/// Real `ln Γ(x)`; errors at the poles.
pub fn ln_gamma_real(x: f64) -> Result<f64> {
    log_gamma(Complex64::new(x, 0.0)).map(|v| v.re)
}

/// `Γ(z)` for complex `z`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    log_gamma(z).map(Complex64::exp)
}

const FACTORIAL_TABLE_LEN: usize = 171;

fn factorial_table() -> &'static [f64; FACTORIAL_TABLE_LEN] {
    static TABLE: OnceLock<[f64; FACTORIAL_TABLE_LEN]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [1.0; FACTORIAL_TABLE_LEN];
        for n in 1..FACTORIAL_TABLE_LEN {
            t[n] = t[n - 1] * n as f64;
        }
        t
    })
}

/// `ln n!`, exact to rounding for `n <= 170` and via log-gamma beyond.
pub fn ln_factorial(n: u64) -> f64 {
    match usize::try_from(n) {
        Ok(i) if i < FACTORIAL_TABLE_LEN => factorial_table()[i].ln(),
        _ => lanczos(Complex64::new(n as f64 + 1.0, 0.0)).re,
    }
}
