//! SU(2) entropic inequalities built from one column of `|d^j|^2`.
//!
//! A fixed column `m` of the squared d-matrix is a probability vector over
//! `m' = -j, ..., j` (ascending). Splitting it into two rows gives a joint
//! distribution whose subadditivity is an inequality for Jacobi polynomials.

use serde::Serialize;

use crate::entropy::{
    subadditivity_report, tsallis_subadditivity_report, QParam, SubadditivityReport,
};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::probability::{bipartite_split, BistochasticMatrix, ProbabilityVector};
use crate::specfun::wigner::{check_weight, dmatrix, wigner_d, WignerDArgs};

/// `|d^j_{m'm}(θ)|^2` for `m' = -j, ..., j`.
pub fn column_distribution(j: HalfInt, m: HalfInt, theta: f64) -> Result<ProbabilityVector> {
    check_weight(j, m)?;
    let dim = (j.doubled() + 1) as usize;
    let values = (0..dim)
        .map(|i| {
            let mp = -j + HalfInt::from_int(i as i64);
            wigner_d(&WignerDArgs::new(j, mp, m, theta)?).map(|d| d * d)
        })
        .collect::<Result<Vec<_>>>()?;
    ProbabilityVector::new(values)
}

/// The squared d-matrix as a bistochastic matrix (rows `m'`, columns `m`).
pub fn bistochastic_matrix(j: HalfInt, theta: f64) -> Result<BistochasticMatrix> {
    let d = dmatrix(j, theta)?;
    BistochasticMatrix::from_squared_moduli(d.dim(), d.entries())
}

/// Shannon subadditivity of the two-row split of a column.
pub fn su2_subadditivity(j: HalfInt, m: HalfInt, theta: f64) -> Result<SubadditivityReport> {
    subadditivity_report(&bipartite_split(&column_distribution(j, m, theta)?)?)
}

/// Tsallis subadditivity of the same split; asserted only for `q > 1`.
pub fn su2_tsallis_subadditivity(
    j: HalfInt,
    m: HalfInt,
    theta: f64,
    q: QParam,
) -> Result<SubadditivityReport> {
    tsallis_subadditivity_report(&bipartite_split(&column_distribution(j, m, theta)?)?, q)
}

/// Closed forms of the `m = 3/2` column for `j = 3/2`, ascending in `m'`.
///
/// The weight at `m' = -1/2` is `3(1 - cos θ)^2 (1 + cos θ) / 8`.
pub fn closed_form_three_halves(theta: f64) -> [f64; 4] {
    let c = theta.cos();
    let p1 = (c + 1.0).powi(3) / 8.0;
    let s2 = (theta / 2.0).sin().powi(2);
    let p2 = 3.0 * s2 * (s2 - 1.0).powi(2);
    let p3 = 3.0 * (c - 1.0).powi(2) * (c + 1.0) / 8.0;
    let p4 = -(c - 1.0).powi(3) / 8.0;
    [p4, p3, p2, p1]
}

/// Closed forms of the `m = 2` column for `j = 2`, ascending in `m'`.
pub fn closed_form_two(theta: f64) -> [f64; 5] {
    let c = theta.cos();
    let ch2 = (theta / 2.0).cos().powi(2);
    let sh2 = (theta / 2.0).sin().powi(2);
    let t1 = (c + 1.0).powi(4) / 16.0;
    let t2 = 4.0 * ch2.powi(3) * (1.0 - ch2);
    let t3 = 3.0 * theta.sin().powi(4) / 8.0;
    let t4 = 4.0 * sh2.powi(3) * (1.0 - sh2);
    let t5 = (c - 1.0).powi(4) / 16.0;
    [t5, t4, t3, t2, t1]
}

/// Largest deviation between [`column_distribution`] (with `m = j`) and the
/// closed forms, for `j` in `{3/2, 2}`.
pub fn closed_form_check(j: HalfInt, theta: f64) -> Result<f64> {
    let closed: Vec<f64> = match j.doubled() {
        3 => closed_form_three_halves(theta).to_vec(),
        4 => closed_form_two(theta).to_vec(),
        _ => {
            return Err(Error::Domain(format!(
                "closed forms exist for j = 3/2 and j = 2, not {j}"
            )))
        }
    };
    let column = column_distribution(j, j, theta)?;
    Ok(column
        .as_slice()
        .iter()
        .zip(&closed)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max))
}

/// A θ-sweep of one column; Tsallis when `q` is set, Shannon otherwise.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Su2Sweep {
    pub j: HalfInt,
    pub m: HalfInt,
    pub theta_grid: Vec<f64>,
    pub q: Option<QParam>,
}

impl Su2Sweep {
    pub fn new(j: HalfInt, m: HalfInt, theta_grid: Vec<f64>, q: Option<QParam>) -> Result<Self> {
        check_weight(j, m)?;
        if theta_grid.is_empty() {
            return Err(Error::Dimension("θ grid is empty".into()));
        }
        Ok(Su2Sweep {
            j,
            m,
            theta_grid,
            q,
        })
    }
}

/// One report per grid point, in grid order.
pub fn sweep(s: &Su2Sweep) -> Result<Vec<(f64, SubadditivityReport)>> {
    s.theta_grid
        .iter()
        .map(|&theta| {
            let report = match s.q {
                Some(q) => su2_tsallis_subadditivity(s.j, s.m, theta, q)?,
                None => su2_subadditivity(s.j, s.m, theta)?,
            };
            Ok((theta, report))
        })
        .collect()
}
