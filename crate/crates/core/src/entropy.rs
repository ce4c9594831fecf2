//! Shannon, Tsallis and Rényi entropies (in nats) and subadditivity reports.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::probability::{JointTable, ProbabilityVector};

/// Lower bound on an asserted slack.
pub const SLACK_TOLERANCE: f64 = 1e-12;

/// Entropy index `q`: positive and different from 1.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct QParam(f64);

impl QParam {
    pub fn new(q: f64) -> Result<Self> {
        if q.is_finite() && q > 0.0 && q != 1.0 {
            Ok(QParam(q))
        } else {
            Err(Error::InvalidQ(q))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "q", rename_all = "snake_case")]
pub enum EntropyKind {
    Shannon,
    Tsallis(f64),
    Renyi(f64),
}

impl fmt::Display for EntropyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EntropyKind::Shannon => f.write_str("shannon"),
            EntropyKind::Tsallis(q) => write!(f, "tsallis(q={q})"),
            EntropyKind::Renyi(q) => write!(f, "renyi(q={q})"),
        }
    }
}

/// Joint and marginal entropies of a bipartite table.
///
/// `h_first` belongs to the marginal obtained by summing over rows and
/// `h_second` to the one obtained by summing over columns.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SubadditivityReport {
    pub kind: EntropyKind,
    pub h_joint: f64,
    pub h_first: f64,
    pub h_second: f64,
    /// `h_first + h_second - h_joint`.
    pub slack: f64,
    /// Tsallis only: `Σ p1^q + Σ p2^q - 1 - Σ p12^q`, which equals
    /// `(1 - q) * slack` and is therefore nonpositive whenever `q > 1`.
    pub power_sum_gap: Option<f64>,
}

impl SubadditivityReport {
    fn new(kind: EntropyKind, h_joint: f64, h_first: f64, h_second: f64) -> Self {
        SubadditivityReport {
            kind,
            h_joint,
            h_first,
            h_second,
            slack: h_first + h_second - h_joint,
            power_sum_gap: None,
        }
    }

    /// Left-hand side of the inequality, `h_first + h_second`.
    pub fn lhs(&self) -> f64 {
        self.h_first + self.h_second
    }

    /// Whether the inequality is a theorem for this entropy kind (Shannon,
    /// or Tsallis with `q > 1`). Other kinds are report-only.
    pub fn is_asserted(&self) -> bool {
        match self.kind {
            EntropyKind::Shannon => true,
            EntropyKind::Tsallis(q) => q > 1.0,
            EntropyKind::Renyi(_) => false,
        }
    }

    /// True unless the report is asserted and its slack is below `-tolerance`.
    pub fn holds(&self, tolerance: f64) -> bool {
        !self.is_asserted() || self.slack >= -tolerance
    }
}

/// `-Σ p ln p` over raw weights, with `0 ln 0 = 0`.
pub(crate) fn shannon_of(values: &[f64]) -> f64 {
    -values
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p * p.ln())
        .sum::<f64>()
}

fn power_sum(values: &[f64], q: f64) -> f64 {
    values
        .iter()
        .filter(|&&p| p > 0.0)
        .map(|&p| p.powf(q))
        .sum()
}

fn tsallis_of(values: &[f64], q: f64) -> f64 {
    (power_sum(values, q) - 1.0) / (1.0 - q)
}

fn renyi_of(values: &[f64], q: f64) -> f64 {
    power_sum(values, q).ln() / (1.0 - q)
}

pub fn shannon(p: &ProbabilityVector) -> f64 {
    shannon_of(p.as_slice())
}

/// Shannon entropy of the flattened table.
pub fn joint_shannon(t: &JointTable) -> f64 {
    shannon_of(t.entries())
}

pub fn tsallis(p: &ProbabilityVector, q: QParam) -> f64 {
    tsallis_of(p.as_slice(), q.get())
}

pub fn renyi(p: &ProbabilityVector, q: QParam) -> f64 {
    renyi_of(p.as_slice(), q.get())
}

pub fn subadditivity_report(t: &JointTable) -> Result<SubadditivityReport> {
    let (first, second) = t.marginals()?;
    Ok(SubadditivityReport::new(
        EntropyKind::Shannon,
        joint_shannon(t),
        shannon(&first),
        shannon(&second),
    ))
}

/// Tsallis analogue of [`subadditivity_report`]. The inequality is only a
/// theorem for `q > 1`; for `0 < q < 1` the report is informational.
pub fn tsallis_subadditivity_report(t: &JointTable, q: QParam) -> Result<SubadditivityReport> {
    let (first, second) = t.marginals()?;
    let qv = q.get();
    let mut report = SubadditivityReport::new(
        EntropyKind::Tsallis(qv),
        tsallis_of(t.entries(), qv),
        tsallis(&first, q),
        tsallis(&second, q),
    );
    report.power_sum_gap = Some(
        power_sum(first.as_slice(), qv) + power_sum(second.as_slice(), qv)
            - 1.0
            - power_sum(t.entries(), qv),
    );
    Ok(report)
}

/// Rényi entropies of a table and its marginals. Never asserted.
pub fn renyi_subadditivity_report(t: &JointTable, q: QParam) -> Result<SubadditivityReport> {
    let (first, second) = t.marginals()?;
    Ok(SubadditivityReport::new(
        EntropyKind::Renyi(q.get()),
        renyi_of(t.entries(), q.get()),
        renyi(&first, q),
        renyi(&second, q),
    ))
}
