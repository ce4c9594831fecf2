//! SU(1,1) entropic inequalities over infinite weight lattices.
//!
//! A column of squared matrix elements of a discrete-series irrep is an
//! infinite probability sequence. It is truncated once the tail has
//! visibly decayed, renormalized, folded into a two-column table by
//! [`interleave_split`] and fed to the Shannon subadditivity report. The
//! mixed and continuous bases are handled the same way but are report-only:
//! their normalization over `m'` is not asserted.

use serde::Serialize;

use crate::entropy::{subadditivity_report, SubadditivityReport};
use crate::error::{Error, Result};
use crate::halfint::HalfInt;
use crate::probability::{interleave_split, ProbabilityVector, SeriesKind};
use crate::specfun::su11::{bargmann_b, c_function, l_function, Series, Su11Args};

/// Terms below this may end the adaptive truncation.
pub const TERM_CUTOFF: f64 = 1e-14;
/// Length of the non-increasing run required before stopping.
pub const MONOTONE_RUN: usize = 10;
/// Hard cap on the number of terms.
pub const MAX_TERMS: usize = 100_000;
/// Captured mass needed by [`su11_subadditivity`].
pub const MIN_CAPTURED_MASS: f64 = 1.0 - 1e-6;

/// Finite prefix of an infinite probability sequence.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TruncatedDistribution {
    /// Probabilities in lattice enumeration order.
    pub values: Vec<f64>,
    /// `Σ values`.
    pub captured_mass: f64,
    /// Geometric estimate of the discarded mass, from the ratio of the last
    /// two terms.
    pub tail_bound: f64,
    pub truncation: usize,
}

impl TruncatedDistribution {
    /// Wraps raw nonnegative values; the tail bound is estimated from them.
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Dimension("truncated distribution is empty".into()));
        }
        if values.iter().any(|v| !v.is_finite() || *v < 0.0) {
            return Err(Error::InvalidProbability(
                "truncated values must be finite and nonnegative".into(),
            ));
        }
        let captured_mass = values.iter().sum();
        let tail_bound = geometric_tail(&values);
        let truncation = values.len();
        Ok(TruncatedDistribution {
            values,
            captured_mass,
            tail_bound,
            truncation,
        })
    }
}

/// `v r / (1 - r)` with `r` the ratio of the last two terms; zero for a
/// vanishing last term and infinite if the tail is not decaying.
fn geometric_tail(values: &[f64]) -> f64 {
    let last = values[values.len() - 1];
    if last == 0.0 {
        return 0.0;
    }
    match values.len().checked_sub(2).map(|i| values[i]) {
        Some(prev) if prev > last => {
            let r = last / prev;
            last * r / (1.0 - r)
        }
        _ => f64::INFINITY,
    }
}

fn discrete_args(k: u32, positive: bool, mp: HalfInt, m: HalfInt, t: f64) -> Result<Su11Args> {
    if positive {
        Su11Args::discrete_positive(k, mp, m, t)
    } else {
        Su11Args::discrete_negative(k, mp, m, t)
    }
}

fn discrete_term(k: u32, positive: bool, index: usize, m: HalfInt, t: f64) -> Result<f64> {
    let kind = if positive {
        SeriesKind::DiscretePositive
    } else {
        SeriesKind::DiscreteNegative
    };
    let j = HalfInt::from_doubled(-i64::from(k));
    let mp = kind.weight_at(j, index);
    Ok(bargmann_b(&discrete_args(k, positive, mp, m, t)?)?.norm_sqr())
}

fn check_eps(eps: f64) -> Result<()> {
    if eps > 0.0 && eps <= 1e-6 {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "eps must lie in (0, 1e-6], got {eps}"
        )))
    }
}

fn adaptive(k: u32, positive: bool, m: HalfInt, t: f64, eps: f64) -> Result<TruncatedDistribution> {
    check_eps(eps)?;
    // validates (k, m, t) before the loop
    discrete_args(k, positive, m, m, t)?;
    let mut values: Vec<f64> = Vec::new();
    let mut captured = 0.0;
    let mut run = 0usize;
    while values.len() < MAX_TERMS {
        let v = discrete_term(k, positive, values.len(), m, t)?;
        run = match values.last() {
            Some(&prev) if v <= prev => run + 1,
            _ => 0,
        };
        values.push(v);
        captured += v;
        if v < TERM_CUTOFF && run >= MONOTONE_RUN && captured >= 1.0 - eps {
            return TruncatedDistribution::new(values);
        }
    }
    Err(Error::NonConvergence { terms: MAX_TERMS })
}

/// `|b^j_{m'm}(t)|^2` over `m' = -j, -j+1, ...` for the positive discrete
/// series of spin `j = -k/2`, truncated adaptively.
///
/// The sequence stops at the first term below [`TERM_CUTOFF`] that ends a
/// run of [`MONOTONE_RUN`] non-increasing terms, once the captured mass is
/// at least `1 - eps`.
pub fn discrete_series_distribution(
    k: u32,
    m: HalfInt,
    t: f64,
    eps: f64,
) -> Result<TruncatedDistribution> {
    adaptive(k, true, m, t, eps)
}

/// Negative discrete series, `m' = j, j-1, ...`; mirrors the positive one.
pub fn discrete_negative_series_distribution(
    k: u32,
    m: HalfInt,
    t: f64,
    eps: f64,
) -> Result<TruncatedDistribution> {
    adaptive(k, false, m, t, eps)
}

/// The first `truncation` terms of the positive discrete series column.
pub fn discrete_series_truncated(
    k: u32,
    m: HalfInt,
    t: f64,
    truncation: usize,
) -> Result<TruncatedDistribution> {
    if truncation == 0 {
        return Err(Error::Dimension("truncation must be at least 1".into()));
    }
    let values = (0..truncation)
        .map(|i| discrete_term(k, true, i, m, t))
        .collect::<Result<Vec<_>>>()?;
    TruncatedDistribution::new(values)
}

fn renormalized_report(values: &[f64]) -> Result<SubadditivityReport> {
    let p = ProbabilityVector::normalized(values)?;
    subadditivity_report(&interleave_split(&p)?)
}

/// Shannon subadditivity of the renormalized, interleaved distribution.
pub fn su11_subadditivity(d: &TruncatedDistribution) -> Result<SubadditivityReport> {
    if d.captured_mass < MIN_CAPTURED_MASS {
        return Err(Error::InsufficientMass {
            captured: d.captured_mass,
            required: MIN_CAPTURED_MASS,
        });
    }
    renormalized_report(&d.values)
}

/// Report for a basis whose normalization over `m'` is not asserted.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SeriesReport {
    pub report: SubadditivityReport,
    /// `Σ |f|^2` before renormalization.
    pub raw_mass: f64,
    pub truncation: usize,
    pub report_only: bool,
}

fn report_only(values: Vec<f64>) -> Result<SeriesReport> {
    let raw_mass = values.iter().sum();
    Ok(SeriesReport {
        report: renormalized_report(&values)?,
        raw_mass,
        truncation: values.len(),
        report_only: true,
    })
}

fn check_truncation(truncation: usize) -> Result<()> {
    if truncation == 0 {
        Err(Error::Dimension("truncation must be at least 1".into()))
    } else {
        Ok(())
    }
}

/// `|c^j_{m'm}(t)|^2` over `m' = -j, -j+1, ...` (`args.m_prime` is ignored).
pub fn mixed_series_report(args: &Su11Args, truncation: usize) -> Result<SeriesReport> {
    let Series::Mixed { k } = args.series else {
        return Err(Error::Domain(
            "mixed_series_report needs a mixed-basis argument".into(),
        ));
    };
    check_truncation(truncation)?;
    let j = HalfInt::from_doubled(-i64::from(k));
    let values = (0..truncation)
        .map(|i| {
            let mp = SeriesKind::DiscretePositive.weight_at(j, i);
            Ok(c_function(&Su11Args {
                m_prime: mp,
                ..*args
            })?
            .norm_sqr())
        })
        .collect::<Result<Vec<_>>>()?;
    report_only(values)
}

/// `|l^j_{m'mσ}(t)|^2` over the integer or half-integer lattice in its
/// enumeration order (`args.m_prime` is ignored).
pub fn continuous_series_report(
    args: &Su11Args,
    truncation: usize,
    lattice: SeriesKind,
) -> Result<SeriesReport> {
    if !matches!(args.series, Series::Continuous { .. }) {
        return Err(Error::Domain(
            "continuous_series_report needs a continuous-series argument".into(),
        ));
    }
    if !matches!(
        lattice,
        SeriesKind::ContinuousInteger | SeriesKind::ContinuousHalfInteger
    ) {
        return Err(Error::Domain(format!(
            "{lattice} is not a continuous-series lattice"
        )));
    }
    check_truncation(truncation)?;
    let values = (0..truncation)
        .map(|i| {
            let mp = lattice.weight_at(HalfInt::ZERO, i);
            Ok(l_function(&Su11Args {
                m_prime: mp,
                ..*args
            })?
            .norm_sqr())
        })
        .collect::<Result<Vec<_>>>()?;
    report_only(values)
}
