//! Wigner small-d functions `d^j_{m'm}(θ)` for rotations about the y-axis.
//!
//! Convention: in the sector `m' >= |m|`
//!
//! ```text
//! d^j_{m'm}(θ) = sqrt(S^j_{m'm}(θ)) P_{j-m'}^{(m'-m, m'+m)}(cos θ)
//! ```
//!
//! with the square root taken as `sqrt(ratio) cos(θ/2)^{m'+m} sin(θ/2)^{m'-m}`,
//! which keeps the sign of the half-angle functions. The remaining sectors
//! follow from the index symmetries. This matches `exp(iθJ_y)` in the
//! standard angular-momentum basis, see [`wigner_oracle`].

use serde::Serialize;

use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::specfun::gamma::ln_factorial;
use crate::specfun::jacobi::jacobi;

/// Largest `2j` accepted by [`wigner_oracle`].
pub const ORACLE_MAX_TWO_J: i64 = 12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct WignerDArgs {
    pub j: HalfInt,
    pub m_prime: HalfInt,
    pub m: HalfInt,
    pub theta: f64,
}

impl WignerDArgs {
    pub fn new(j: HalfInt, m_prime: HalfInt, m: HalfInt, theta: f64) -> Result<Self> {
        check_weight(j, m_prime)?;
        check_weight(j, m)?;
        if !theta.is_finite() {
            return Err(Error::Domain(format!("angle {theta} is not finite")));
        }
        Ok(WignerDArgs {
            j,
            m_prime,
            m,
            theta,
        })
    }
}

pub(crate) fn check_weight(j: HalfInt, m: HalfInt) -> Result<()> {
    if j.doubled() < 0 {
        return Err(Error::InvalidWeights(format!("spin j = {j} is negative")));
    }
    if m.abs() > j || !m.same_parity(j) {
        return Err(Error::InvalidWeights(format!(
            "m = {m} is not a weight of spin {j}"
        )));
    }
    Ok(())
}

/// Half-integers are stored doubled, so `j + m` is `(2j + 2m) / 2`.
fn factorial_arg(a: HalfInt, b: HalfInt) -> u64 {
    ((a.doubled() + b.doubled()) / 2) as u64
}

/// `S^j_{m'm}(θ)` in the sector `m' + m >= 0`, `m' - m >= 0`.
pub fn s_factor(args: &WignerDArgs) -> Result<f64> {
    let WignerDArgs {
        j,
        m_prime,
        m,
        theta,
    } = *args;
    if m_prime.doubled() + m.doubled() < 0 || m_prime < m {
        return Err(Error::Domain(format!(
            "S factor needs m' + m >= 0 and m' - m >= 0, got m' = {m_prime}, m = {m}"
        )));
    }
    let sum = (m_prime.doubled() + m.doubled()) as i32;
    let diff = (m_prime.doubled() - m.doubled()) as i32;
    let (s, c) = (0.5 * theta).sin_cos();
    Ok(factorial_ratio(j, m_prime, m) * c.powi(sum) * s.powi(diff))
}

/// `(j+m')! (j-m')! / ((j+m)! (j-m)!)`
fn factorial_ratio(j: HalfInt, m_prime: HalfInt, m: HalfInt) -> f64 {
    (ln_factorial(factorial_arg(j, m_prime)) + ln_factorial(factorial_arg(j, -m_prime))
        - ln_factorial(factorial_arg(j, m))
        - ln_factorial(factorial_arg(j, -m)))
    .exp()
}

/// Maps `(m', m)` into the sector `m' >= |m|`, returning the sign to apply.
fn to_canonical(m_prime: HalfInt, m: HalfInt) -> (f64, HalfInt, HalfInt) {
    let parity = |a: HalfInt, b: HalfInt| {
        if a.int_diff(b).unwrap_or(0) % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    };
    if m_prime >= m.abs() {
        (1.0, m_prime, m)
    } else if -m >= m_prime.abs() {
        (1.0, -m, -m_prime)
    } else if m >= m_prime.abs() {
        (parity(m_prime, m), m, m_prime)
    } else {
        (parity(m_prime, m), -m_prime, -m)
    }
}

fn canonical_d(j: HalfInt, m_prime: HalfInt, m: HalfInt, theta: f64) -> f64 {
    let sum = (m_prime.doubled() + m.doubled()) / 2;
    let diff = (m_prime.doubled() - m.doubled()) / 2;
    let degree = ((j.doubled() - m_prime.doubled()) / 2) as u32;
    let (s, c) = (0.5 * theta).sin_cos();
    factorial_ratio(j, m_prime, m).sqrt()
        * c.powi(sum as i32)
        * s.powi(diff as i32)
        * jacobi(degree, diff as f64, sum as f64, theta.cos())
}

/// `d^j_{m'm}(θ)`.
pub fn wigner_d(args: &WignerDArgs) -> Result<f64> {
    check_weight(args.j, args.m_prime)?;
    check_weight(args.j, args.m)?;
    let (sign, mp, m) = to_canonical(args.m_prime, args.m);
    Ok(sign * canonical_d(args.j, mp, m, args.theta))
}

/// A dense square matrix indexed by weights `-j..=j` in ascending order.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DMatrix {
    j: HalfInt,
    dim: usize,
    entries: Vec<f64>,
}

impl DMatrix {
    fn zeros(j: HalfInt) -> Self {
        let dim = (j.doubled() + 1) as usize;
        DMatrix {
            j,
            dim,
            entries: vec![0.0; dim * dim],
        }
    }

    fn identity(j: HalfInt) -> Self {
        let mut out = Self::zeros(j);
        for i in 0..out.dim {
            out.entries[i * out.dim + i] = 1.0;
        }
        out
    }

    pub fn j(&self) -> HalfInt {
        self.j
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Entry at zero-based row and column positions.
    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.dim + col]
    }

    /// The weight labelling position `index`.
    pub fn weight(&self, index: usize) -> HalfInt {
        -self.j + HalfInt::from_int(index as i64)
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.entries.chunks(self.dim)
    }

    pub fn matmul(&self, other: &DMatrix) -> DMatrix {
        let n = self.dim;
        let mut out = DMatrix::zeros(self.j);
        for i in 0..n {
            for k in 0..n {
                let a = self.entries[i * n + k];
                if a == 0.0 {
                    continue;
                }
                for c in 0..n {
                    out.entries[i * n + c] += a * other.entries[k * n + c];
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> DMatrix {
        let n = self.dim;
        let mut out = DMatrix::zeros(self.j);
        for i in 0..n {
            for c in 0..n {
                out.entries[c * n + i] = self.entries[i * n + c];
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &DMatrix) -> f64 {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    fn inf_norm(&self) -> f64 {
        self.rows()
            .map(|r| r.iter().map(|v| v.abs()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    fn scale(&mut self, factor: f64) {
        self.entries.iter_mut().for_each(|v| *v *= factor);
    }

    fn add_assign(&mut self, other: &DMatrix) {
        self.entries
            .iter_mut()
            .zip(&other.entries)
            .for_each(|(a, b)| *a += b);
    }
}

/// The full `(2j+1) x (2j+1)` matrix of `d^j_{m'm}(θ)`, rows `m'`, columns `m`.
pub fn dmatrix(j: HalfInt, theta: f64) -> Result<DMatrix> {
    if j.doubled() < 0 {
        return Err(Error::InvalidWeights(format!("spin j = {j} is negative")));
    }
    if !theta.is_finite() {
        return Err(Error::Domain(format!("angle {theta} is not finite")));
    }
    let mut out = DMatrix::zeros(j);
    for row in 0..out.dim {
        for col in 0..out.dim {
            let (sign, mp, m) = to_canonical(out.weight(row), out.weight(col));
            out.entries[row * out.dim + col] = sign * canonical_d(j, mp, m, theta);
        }
    }
    Ok(out)
}

/// Independent route to the d-matrix: `exp(iθJ_y)` by scaling and squaring
/// a truncated Taylor series.
///
/// `iJ_y = (J_+ - J_-) / 2` is real, so everything stays in real arithmetic.
pub fn wigner_oracle(j: HalfInt, theta: f64) -> Result<DMatrix> {
    if j.doubled() < 0 || j.doubled() > ORACLE_MAX_TWO_J {
        return Err(Error::Domain(format!(
            "oracle supports 0 <= 2j <= {ORACLE_MAX_TWO_J}, got j = {j}"
        )));
    }
    if !theta.is_finite() {
        return Err(Error::Domain(format!("angle {theta} is not finite")));
    }
    let mut generator = DMatrix::zeros(j);
    let n = generator.dim;
    let jv = j.value();
    for i in 0..n.saturating_sub(1) {
        let m = generator.weight(i).value();
        let ladder = (jv * (jv + 1.0) - m * (m + 1.0)).sqrt();
        generator.entries[(i + 1) * n + i] = 0.5 * ladder * theta;
        generator.entries[i * n + i + 1] = -0.5 * ladder * theta;
    }

    let norm = generator.inf_norm();
    let squarings = if norm > 0.25 {
        (norm / 0.25).log2().ceil() as u32
    } else {
        0
    };
    generator.scale(0.5f64.powi(squarings as i32));

    let mut result = DMatrix::identity(j);
    let mut term = DMatrix::identity(j);
    for k in 1..=30 {
        term = term.matmul(&generator);
        term.scale(1.0 / k as f64);
        result.add_assign(&term);
        if term.inf_norm() < 1e-20 {
            break;
        }
    }
    for _ in 0..squarings {
        result = result.matmul(&result);
    }
    Ok(result)
}
