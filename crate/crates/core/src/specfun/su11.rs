//! Matrix elements of SU(1,1) unitary irreps: Bargmann functions of the
//! discrete series, the mixed discrete/continuous basis functions and the
//! principal (continuous) series functions.
//!
//! Only moduli are contracted. The phase `sqrt((-1)^{m'-m})` linking the
//! Bargmann function to the continued Wigner function has no preferred
//! branch, and the sector reflections below use the plain `(-1)^{m'-m}`.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::specfun::gamma::{ln_factorial, ln_gamma_real, log_gamma};
use crate::specfun::hypergeometric::{hyp2f1, MAX_ABS_Z};

/// Discrete-series functions need `cosh t` below this so that
/// `|z(it)| = (cosh t - 1) / 2 < 0.95`.
pub const DISCRETE_COSH_LIMIT: f64 = 1.0 + 2.0 * MAX_ABS_Z;

/// Mixed and continuous functions need `cosh t / 2 < 0.95`.
pub const CONTINUOUS_COSH_LIMIT: f64 = 2.0 * MAX_ABS_Z;

/// Which irrep (and basis) a matrix element belongs to.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Series {
    /// Spin `j = -k/2`, weights `-j, -j+1, ...`.
    DiscretePositive { k: u32 },
    /// Spin `j = -k/2`, weights `j, j-1, ...`.
    DiscreteNegative { k: u32 },
    /// Left state in the positive discrete basis (spin `-k/2`), right state
    /// in the continuous basis.
    Mixed { k: u32 },
    /// Principal series `j = -1/2 + is` with parity label `sigma`.
    Continuous { s: f64, sigma: u8 },
}

impl Series {
    /// Spin of a discrete or mixed series, `-k/2`.
    pub fn discrete_spin(self) -> Option<HalfInt> {
        match self {
            Series::DiscretePositive { k }
            | Series::DiscreteNegative { k }
            | Series::Mixed { k } => Some(HalfInt::from_doubled(-i64::from(k))),
            Series::Continuous { .. } => None,
        }
    }

    /// The (possibly complex) spin `j`.
    pub fn spin(self) -> Complex64 {
        match self {
            Series::Continuous { s, .. } => Complex64::new(-0.5, s),
            _ => Complex64::new(self.discrete_spin().map_or(0.0, HalfInt::value), 0.0),
        }
    }
}

/// Arguments of an SU(1,1) matrix element at rapidity `t`.
///
/// `m` is a half-integer weight for the discrete series and a real
/// continuous label otherwise.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Su11Args {
    pub series: Series,
    pub m_prime: HalfInt,
    pub m: f64,
    pub t: f64,
}

fn check_rapidity(t: f64) -> Result<()> {
    if t.is_finite() && t >= 0.0 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "rapidity t = {t} must be finite and nonnegative"
        )))
    }
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        Err(Error::Domain("discrete series need k >= 1".into()))
    } else {
        Ok(())
    }
}

impl Su11Args {
    pub fn discrete_positive(k: u32, m_prime: HalfInt, m: HalfInt, t: f64) -> Result<Self> {
        check_k(k)?;
        check_rapidity(t)?;
        let j = HalfInt::from_doubled(-i64::from(k));
        for w in [m_prime, m] {
            if !w.same_parity(j) || w < -j {
                return Err(Error::InvalidWeights(format!(
                    "{w} is not in the positive discrete lattice starting at {}",
                    -j
                )));
            }
        }
        Ok(Su11Args {
            series: Series::DiscretePositive { k },
            m_prime,
            m: m.value(),
            t,
        })
    }

    pub fn discrete_negative(k: u32, m_prime: HalfInt, m: HalfInt, t: f64) -> Result<Self> {
        check_k(k)?;
        check_rapidity(t)?;
        let j = HalfInt::from_doubled(-i64::from(k));
        for w in [m_prime, m] {
            if !w.same_parity(j) || w > j {
                return Err(Error::InvalidWeights(format!(
                    "{w} is not in the negative discrete lattice starting at {j}"
                )));
            }
        }
        Ok(Su11Args {
            series: Series::DiscreteNegative { k },
            m_prime,
            m: m.value(),
            t,
        })
    }

    /// Mixed basis. `m_prime` must lie on the lattice of spin `-k/2`; the
    /// branch `m' >= -j` is checked by [`c_function`].
    pub fn mixed(k: u32, m_prime: HalfInt, m: f64, t: f64) -> Result<Self> {
        check_k(k)?;
        check_rapidity(t)?;
        if !m.is_finite() {
            return Err(Error::Domain(format!("label m = {m} is not finite")));
        }
        if !m_prime.same_parity(HalfInt::from_doubled(-i64::from(k))) {
            return Err(Error::InvalidWeights(format!(
                "m' = {m_prime} is not on the lattice of spin -{k}/2"
            )));
        }
        Ok(Su11Args {
            series: Series::Mixed { k },
            m_prime,
            m,
            t,
        })
    }

    pub fn continuous(s: f64, sigma: u8, m_prime: HalfInt, m: f64, t: f64) -> Result<Self> {
        check_rapidity(t)?;
        if !(s.is_finite() && s > 0.0) {
            return Err(Error::Domain(format!(
                "continuous series need s > 0, got {s}"
            )));
        }
        if sigma > 1 {
            return Err(Error::Domain(format!("sigma must be 0 or 1, got {sigma}")));
        }
        if !m.is_finite() {
            return Err(Error::Domain(format!("label m = {m} is not finite")));
        }
        Ok(Su11Args {
            series: Series::Continuous { s, sigma },
            m_prime,
            m,
            t,
        })
    }

    fn discrete_weights(&self) -> Result<(u32, bool, HalfInt, HalfInt)> {
        let (k, positive) = match self.series {
            Series::DiscretePositive { k } => (k, true),
            Series::DiscreteNegative { k } => (k, false),
            _ => {
                return Err(Error::Domain(
                    "Bargmann functions are defined for the discrete series only".into(),
                ))
            }
        };
        let m = HalfInt::try_from_f64(self.m)?;
        Ok((k, positive, self.m_prime, m))
    }
}

fn sign_of_difference(a: HalfInt, b: HalfInt) -> f64 {
    if a.int_diff(b).unwrap_or(0) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// Reduces a discrete-series pair to the positive series with `m' >= m`,
/// returning the sign picked up on the way.
fn discrete_canonical(args: &Su11Args) -> Result<(u32, f64, HalfInt, HalfInt)> {
    check_rapidity(args.t)?;
    if args.t.cosh() >= DISCRETE_COSH_LIMIT {
        return Err(Error::Domain(format!(
            "cosh t = {} is outside the discrete-series domain cosh t < {DISCRETE_COSH_LIMIT}",
            args.t.cosh()
        )));
    }
    let (k, positive, mut mp, mut m) = args.discrete_weights()?;
    let j = HalfInt::from_doubled(-i64::from(k));
    let mut sign = 1.0;
    if !positive {
        if !(mp.same_parity(j) && m.same_parity(j) && mp <= j && m <= j) {
            return Err(Error::InvalidWeights(format!(
                "({mp}, {m}) outside the negative discrete lattice of spin {j}"
            )));
        }
        sign *= sign_of_difference(mp, m);
        (mp, m) = (-mp, -m);
    } else if !(mp.same_parity(j) && m.same_parity(j) && mp >= -j && m >= -j) {
        return Err(Error::InvalidWeights(format!(
            "({mp}, {m}) outside the positive discrete lattice of spin {j}"
        )));
    }
    if mp < m {
        sign *= sign_of_difference(mp, m);
        (mp, m) = (m, mp);
    }
    Ok((k, sign, mp, m))
}

/// Bargmann function `b^j_{m'm}(t) = N F(z(it))`, `z(it) = (1 - cosh t) / 2`.
///
/// The hypergeometric factor is summed after the Pfaff substitution
/// `z -> z / (z - 1) = tanh^2(t/2)`, where it becomes a polynomial with
/// positive argument; summing at negative `z` directly cancels badly once
/// `m'` grows.
pub fn bargmann_b(args: &Su11Args) -> Result<Complex64> {
    let (k, sign, mp, m) = discrete_canonical(args)?;
    let j = -f64::from(k) / 2.0;
    let (mpf, mf) = (mp.value(), m.value());
    let z = 0.5 * (1.0 - args.t.cosh());
    if z == 0.0 {
        return Ok(Complex64::new(if mp == m { sign } else { 0.0 }, 0.0));
    }

    // N includes 1 / Γ(m' - m + 1), which makes Σ_{m'} |b|^2 = 1.
    let ln_norm = 0.5
        * (ln_gamma_real(mpf + j + 1.0)? + ln_gamma_real(mpf - j)?
            - ln_gamma_real(mf + j + 1.0)?
            - ln_gamma_real(mf - j)?)
        - ln_gamma_real(mpf - mf + 1.0)?;

    let a = mpf - j;
    let b = mpf + j + 1.0;
    let c = mpf - mf + 1.0;
    let zc = Complex64::new(z, 0.0);
    let one_minus_z = 1.0 - z;
    let w = Complex64::new(z / (z - 1.0), 0.0);
    let poly = hyp2f1(a.into(), (c - b).into(), c.into(), w)?;
    let f = one_minus_z.powf(0.5 * (mpf + mf) - a) * zc.powf(0.5 * (mpf - mf)) * poly;
    let value = sign * ln_norm.exp() * f;
    if value.re.is_finite() && value.im.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite("bargmann_b"))
    }
}

/// `|b^j_{m'm}(t)|^2` from the Wigner formula continued to `θ = it`.
///
/// With `cos(θ/2) -> cosh(t/2)` and `sin(θ/2) -> i sinh(t/2)` the signs
/// from the factorial reflection and from `sin^{2(m'-m)}` cancel, and the
/// continued Jacobi factor is written through Euler's transformation as
/// `cosh(t/2)^{-2(m'+m)}` times a terminating series in `z = -sinh^2(t/2)`.
/// All arithmetic is real and the factorials are exact integers.
pub fn bargmann_b_continued(args: &Su11Args) -> Result<f64> {
    let (k, _, mp, m) = discrete_canonical(args)?;
    let j = HalfInt::from_doubled(-i64::from(k));
    let idx = |a: HalfInt, b: HalfInt| (a + b).int_diff(HalfInt::ZERO).unwrap_or(0);
    // Γ(m'+j+1) Γ(m'-j) / (Γ(m+j+1) Γ(m-j)) / ((m'-m)!)^2 with integer arguments
    let ln_c = ln_factorial(idx(mp, j) as u64) + ln_factorial((idx(mp, -j) - 1) as u64)
        - ln_factorial(idx(m, j) as u64)
        - ln_factorial((idx(m, -j) - 1) as u64)
        - 2.0 * ln_factorial(idx(mp, -m) as u64);

    let (sh, ch) = ((0.5 * args.t).sinh(), (0.5 * args.t).cosh());
    let z = -sh * sh;
    let degree = idx(m, j);
    let (ca, cb, cc) = (
        1.0 - m.value() + j.value(),
        -m.value() - j.value(),
        mp.value() - m.value() + 1.0,
    );
    let mut term = 1.0;
    let mut poly = 1.0;
    for n in 0..degree {
        let nf = n as f64;
        term *= (ca + nf) * (cb + nf) / ((cc + nf) * (nf + 1.0)) * z;
        poly += term;
    }
    let diff = idx(mp, -m) as i32;
    let sum = idx(mp, m) as i32;
    let value = ln_c.exp() * sh.powi(2 * diff) / ch.powi(2 * sum) * poly * poly;
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite("bargmann_b_continued"))
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// `1/Γ(z)`, which is entire: zero at the poles of `Γ`.
fn recip_gamma(z: Complex64) -> Result<Complex64> {
    match log_gamma(z) {
        Ok(v) => Ok((-v).exp()),
        Err(Error::Pole(_)) => Ok(c(0.0, 0.0)),
        Err(e) => Err(e),
    }
}

/// `F^j_{μν}(z) = (1-z)^{(μ+ν)/2} z^{(μ-ν)/2} 2F1(-j+μ, j+μ+1; μ-ν+1; z)`
///
/// Summed through Euler's transformation
/// `2F1(a, b; c; z) = (1-z)^{c-a-b} 2F1(c-a, c-b; c; z)`, here with
/// `c-a-b = -(μ+ν)`. For large `|μ|` the direct terms alternate and
/// cancel to many orders of magnitude; the transformed ones do not. When
/// `c` is a nonpositive integer only the direct (terminating) form exists.
fn f_function(j: Complex64, mu: Complex64, nu: Complex64, z: Complex64) -> Result<Complex64> {
    let one = c(1.0, 0.0);
    let (a, b, cc) = (mu - j, j + mu + 1.0, mu - nu + 1.0);
    let prefactor = z.powc(0.5 * (mu - nu));
    match hyp2f1(cc - a, cc - b, cc, z) {
        Ok(hyp) => Ok((one - z).powc(-0.5 * (mu + nu)) * prefactor * hyp),
        Err(Error::Pole(_)) => {
            Ok((one - z).powc(0.5 * (mu + nu)) * prefactor * hyp2f1(a, b, cc, z)?)
        }
        Err(e) => Err(e),
    }
}

fn check_continuous_domain(t: f64) -> Result<()> {
    check_rapidity(t)?;
    if t.cosh() >= CONTINUOUS_COSH_LIMIT {
        return Err(Error::Domain(format!(
            "cosh t = {} is outside the domain cosh t < {CONTINUOUS_COSH_LIMIT}",
            t.cosh()
        )));
    }
    Ok(())
}

/// `S^j_{m'} = sqrt(Γ(m'-j) Γ(m'+j+1)) / Γ(m'+j+1)`
fn s_coefficient(j: Complex64, mp: f64) -> Result<Complex64> {
    let half = 0.5 * (log_gamma(mp - j)? - log_gamma(mp + j + 1.0)?);
    Ok(half.exp())
}

/// Mixed-basis function `c^j_{m'm}(t) = N_{m'm} F^j_{-m',-im}(z(-t))` with
/// `z(t) = (1 - i sinh t) / 2`, for `m' >= -j`.
///
/// Evaluation only: no normalization is implied over `m'`.
pub fn c_function(args: &Su11Args) -> Result<Complex64> {
    let Series::Mixed { k } = args.series else {
        return Err(Error::Domain(
            "c-functions belong to the mixed basis".into(),
        ));
    };
    let j = -f64::from(k) / 2.0;
    let mp = args.m_prime.value();
    if mp < -j {
        return Err(Error::UnsupportedBranch(format!(
            "the mixed-basis function is only defined here for m' >= -j = {}, got m' = {mp}",
            -j
        )));
    }
    check_continuous_domain(args.t)?;
    let m = args.m;
    let jc = c(j, 0.0);
    let im_m = c(0.0, m);

    let ln_r_num = log_gamma(jc + 1.0 + im_m)?
        + log_gamma(0.5 * (-jc - im_m))?
        + log_gamma(0.5 * (-jc + 1.0 + im_m))?
        - log_gamma(c(mp - j, 0.0))?;
    let r = ln_r_num.exp() * recip_gamma(c(1.0 - mp, m))?;
    let norm = SQRT_2 * 2f64.powf(-j - 2.0) * s_coefficient(jc, mp)? * r / PI;

    let z = c(0.5, 0.5 * args.t.sinh());
    let value = norm * f_function(jc, c(-mp, 0.0), -im_m, z)?;
    finite(value, "c_function")
}

/// `T^j_{m'mσ} = 2^{j-1} / (i^σ sin(π(-j+σ-im)/2)) Γ(-j+im) / (Γ(-m'-j) Γ(m'+1+im))`
fn t_coefficient(j: Complex64, mp: f64, m: Complex64, sigma: u8) -> Result<Complex64> {
    let i = c(0.0, 1.0);
    let sine = (PI * 0.5 * (-j + f64::from(sigma) - i * m)).sin();
    if sine.norm() < 1e-14 {
        return Err(Error::Pole(format!(
            "sin(π(-j+σ-im)/2) vanishes for m = {m}"
        )));
    }
    let i_sigma = if sigma == 0 { c(1.0, 0.0) } else { i };
    let gammas =
        log_gamma(-j + i * m)?.exp() * recip_gamma(-mp - j)? * recip_gamma(mp + 1.0 + i * m)?;
    Ok(c(2.0, 0.0).powc(j - 1.0) / (i_sigma * sine) * gammas)
}

/// Principal-series function
/// `l^j_{m'mσ}(t) = S^j_{m'} (T^j_{m'mσ} F^j_{m',-im}(z(t)) - (-1)^σ T^j_{-m'mσ} F^j_{-m',-im}(z(-t)))`.
///
/// Evaluation only: no normalization is implied over `m'`.
pub fn l_function(args: &Su11Args) -> Result<Complex64> {
    let Series::Continuous { s, sigma } = args.series else {
        return Err(Error::Domain(
            "l-functions belong to the continuous series".into(),
        ));
    };
    check_continuous_domain(args.t)?;
    let j = c(-0.5, s);
    let mp = args.m_prime.value();
    let m = c(args.m, 0.0);
    let nu = c(0.0, -args.m);
    let sh = args.t.sinh();
    let z_plus = c(0.5, -0.5 * sh);
    let z_minus = c(0.5, 0.5 * sh);

    let forward = t_coefficient(j, mp, m, sigma)? * f_function(j, c(mp, 0.0), nu, z_plus)?;
    let backward = t_coefficient(j, -mp, m, sigma)? * f_function(j, c(-mp, 0.0), nu, z_minus)?;
    let parity = if sigma == 0 { 1.0 } else { -1.0 };
    let value = s_coefficient(j, mp)? * (forward - parity * backward);
    finite(value, "l_function")
}

fn finite(v: Complex64, what: &'static str) -> Result<Complex64> {
    if v.re.is_finite() && v.im.is_finite() {
        Ok(v)
    } else {
        Err(Error::NonFinite(what))
    }
}
