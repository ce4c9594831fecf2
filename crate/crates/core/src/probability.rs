//! Probability vectors, joint tables and the index mappings that turn a flat
//! distribution into an artificial bipartite (or tripartite) system.
//!
//! The mappings are bijections between `1..=N` and index pairs (or triples),
//! so the joint table carries exactly the same numbers as the flat vector.
//! Zero padding is used when the grid is larger than `N`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::halfint::HalfInt;

/// Default tolerance on `|sum - 1|`.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Components in `[-NEGATIVE_CLAMP, 0)` are treated as rounding noise and set to zero.
pub const NEGATIVE_CLAMP: f64 = 1e-12;

fn validate_components(values: &mut [f64], tolerance: f64) -> Result<()> {
    if values.is_empty() {
        return Err(Error::Dimension("empty probability data".into()));
    }
    let mut sum = 0.0;
    for (i, v) in values.iter_mut().enumerate() {
        if !v.is_finite() {
            return Err(Error::InvalidProbability(format!(
                "component {i} is not finite"
            )));
        }
        if *v < 0.0 {
            if *v >= -NEGATIVE_CLAMP {
                *v = 0.0;
            } else {
                return Err(Error::InvalidProbability(format!(
                    "component {i} is negative ({v})"
                )));
            }
        }
        sum += *v;
    }
    if (sum - 1.0).abs() > tolerance {
        return Err(Error::InvalidProbability(format!(
            "components sum to {sum}, expected 1 within {tolerance}"
        )));
    }
    Ok(())
}

/// A finite, nonnegative vector summing to one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ProbabilityVector {
    components: Vec<f64>,
    tolerance: f64,
}

impl ProbabilityVector {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        Self::with_tolerance(components, SUM_TOLERANCE)
    }

    pub fn with_tolerance(mut components: Vec<f64>, tolerance: f64) -> Result<Self> {
        validate_components(&mut components, tolerance)?;
        Ok(ProbabilityVector {
            components,
            tolerance,
        })
    }

    /// Divides nonnegative weights by their sum.
    pub fn normalized(weights: &[f64]) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if !(total.is_finite() && total > 0.0) {
            return Err(Error::InvalidProbability(format!(
                "cannot normalize weights with total {total}"
            )));
        }
        Self::new(weights.iter().map(|w| w / total).collect())
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension(
                "uniform distribution over zero outcomes".into(),
            ));
        }
        Self::new(vec![1.0 / n as f64; n])
    }

    pub fn delta(n: usize, at: usize) -> Result<Self> {
        if at >= n {
            return Err(Error::Dimension(format!(
                "delta position {at} outside length {n}"
            )));
        }
        let mut v = vec![0.0; n];
        v[at] = 1.0;
        Self::new(v)
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.components
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// The vector with `extra` zeros appended.
    pub fn padded(&self, extra: usize) -> Self {
        let mut components = self.components.clone();
        components.resize(self.len() + extra, 0.0);
        ProbabilityVector {
            components,
            tolerance: self.tolerance,
        }
    }
}

/// A nonnegative table of rank 2 or 3 with unit total, stored row-major.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JointTable {
    dims: Vec<usize>,
    entries: Vec<f64>,
}

impl JointTable {
    pub fn new(dims: Vec<usize>, mut entries: Vec<f64>) -> Result<Self> {
        if !(dims.len() == 2 || dims.len() == 3) {
            return Err(Error::Dimension(format!(
                "joint tables have rank 2 or 3, got rank {}",
                dims.len()
            )));
        }
        if dims.contains(&0) {
            return Err(Error::Dimension(format!("zero-sized axis in {dims:?}")));
        }
        let size: usize = dims.iter().product();
        if size != entries.len() {
            return Err(Error::Dimension(format!(
                "dims {dims:?} need {size} entries, got {}",
                entries.len()
            )));
        }
        validate_components(&mut entries, SUM_TOLERANCE)?;
        Ok(JointTable { dims, entries })
    }

    /// Builds a 2-D table from its rows.
    pub fn from_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n1 = rows.len();
        let n2 = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n2) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Self::new(vec![n1, n2], rows.concat())
    }

    /// The outer product `p ⊗ q`.
    pub fn product(p: &ProbabilityVector, q: &ProbabilityVector) -> Result<Self> {
        let entries = p
            .as_slice()
            .iter()
            .flat_map(|a| q.as_slice().iter().map(move |b| a * b))
            .collect();
        Self::new(vec![p.len(), q.len()], entries)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn rank(&self) -> usize {
        self.dims.len()
    }

    pub fn entries(&self) -> &[f64] {
        &self.entries
    }

    /// Entry of a 2-D table (zero-based).
    pub fn get(&self, row: usize, col: usize) -> f64 {
        debug_assert_eq!(self.rank(), 2);
        self.entries[row * self.dims[1] + col]
    }

    /// Entry of a 3-D table (zero-based).
    pub fn get3(&self, i: usize, j: usize, l: usize) -> f64 {
        debug_assert_eq!(self.rank(), 3);
        self.entries[(i * self.dims[1] + j) * self.dims[2] + l]
    }

    pub fn rows(&self) -> Vec<Vec<f64>> {
        let n2 = *self.dims.last().unwrap_or(&1);
        self.entries.chunks(n2).map(<[f64]>::to_vec).collect()
    }

    /// The two marginals of a 2-D table.
    ///
    /// `first` sums over the row index (one value per column), `second` sums
    /// over the column index (one value per row).
    pub fn marginals(&self) -> Result<(ProbabilityVector, ProbabilityVector)> {
        if self.rank() != 2 {
            return Err(Error::Dimension(
                "marginals of a 3-D table need an explicit axis selection".into(),
            ));
        }
        let (n1, n2) = (self.dims[0], self.dims[1]);
        let mut first = vec![0.0; n2];
        let mut second = vec![0.0; n1];
        for (row, total) in self.entries.chunks(n2).zip(second.iter_mut()) {
            for (v, col) in row.iter().zip(first.iter_mut()) {
                *col += v;
                *total += v;
            }
        }
        Ok((
            ProbabilityVector::new(first)?,
            ProbabilityVector::new(second)?,
        ))
    }

    /// The distribution of a single axis.
    pub fn axis_marginal(&self, axis: usize) -> Result<ProbabilityVector> {
        if axis >= self.rank() {
            return Err(Error::Dimension(format!("axis {axis} out of range")));
        }
        let mut out = vec![0.0; self.dims[axis]];
        for (flat, v) in self.entries.iter().enumerate() {
            out[self.unravel(flat)[axis]] += v;
        }
        ProbabilityVector::new(out)
    }

    /// Sums a 3-D table over the axis not in `keep`, giving a 2-D table
    /// whose rows follow `keep.0` and columns `keep.1`.
    pub fn pair_marginal(&self, keep: (usize, usize)) -> Result<JointTable> {
        if self.rank() != 3 {
            return Err(Error::Dimension("pair marginals need a 3-D table".into()));
        }
        let (a, b) = keep;
        if a >= 3 || b >= 3 || a == b {
            return Err(Error::Dimension(format!("invalid axis pair {keep:?}")));
        }
        let (na, nb) = (self.dims[a], self.dims[b]);
        let mut out = vec![0.0; na * nb];
        for (flat, v) in self.entries.iter().enumerate() {
            let idx = self.unravel(flat);
            out[idx[a] * nb + idx[b]] += v;
        }
        JointTable::new(vec![na, nb], out)
    }

    fn unravel(&self, mut flat: usize) -> Vec<usize> {
        let mut idx = vec![0; self.rank()];
        for (slot, &d) in idx.iter_mut().zip(&self.dims).rev() {
            *slot = flat % d;
            flat /= d;
        }
        idx
    }
}

/// A nonnegative square matrix whose rows and columns each sum to one.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BistochasticMatrix {
    n: usize,
    entries: Vec<f64>,
}

impl BistochasticMatrix {
    pub fn new(n: usize, mut entries: Vec<f64>) -> Result<Self> {
        if n == 0 || entries.len() != n * n {
            return Err(Error::Dimension(format!(
                "{n}x{n} matrix needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        for (i, v) in entries.iter_mut().enumerate() {
            if !v.is_finite() || *v < -NEGATIVE_CLAMP {
                return Err(Error::InvalidProbability(format!("entry {i} is {v}")));
            }
            if *v < 0.0 {
                *v = 0.0;
            }
        }
        for k in 0..n {
            let row: f64 = entries[k * n..(k + 1) * n].iter().sum();
            let col: f64 = (0..n).map(|i| entries[i * n + k]).sum();
            if (row - 1.0).abs() > SUM_TOLERANCE || (col - 1.0).abs() > SUM_TOLERANCE {
                return Err(Error::InvalidProbability(format!(
                    "line {k}: row sum {row}, column sum {col}"
                )));
            }
        }
        Ok(BistochasticMatrix { n, entries })
    }

    /// Squared moduli `|u_ik|^2` of a real orthogonal (or unitary-modulus) matrix.
    pub fn from_squared_moduli(n: usize, entries: &[f64]) -> Result<Self> {
        Self::new(n, entries.iter().map(|u| u * u).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.entries[row * self.n + col]
    }

    /// Column `k` as a probability vector, `p_i = m_ik`.
    pub fn column(&self, k: usize) -> Result<ProbabilityVector> {
        if k >= self.n {
            return Err(Error::Dimension(format!("column {k} of {}", self.n)));
        }
        ProbabilityVector::new((0..self.n).map(|i| self.get(i, k)).collect())
    }

    pub fn row(&self, i: usize) -> Result<ProbabilityVector> {
        if i >= self.n {
            return Err(Error::Dimension(format!("row {i} of {}", self.n)));
        }
        ProbabilityVector::new(self.entries[i * self.n..(i + 1) * self.n].to_vec())
    }
}

/// Splits `p` into a 2 x ceil(N/2) table: the first half becomes row one,
/// the rest row two, with one trailing zero when `N` is odd.
pub fn bipartite_split(p: &ProbabilityVector) -> Result<JointTable> {
    let n = p.len();
    if n < 2 {
        return Err(Error::Dimension(format!(
            "bipartite split needs at least 2 components, got {n}"
        )));
    }
    let half = n.div_ceil(2);
    let mut entries = p.as_slice().to_vec();
    entries.resize(2 * half, 0.0);
    JointTable::new(vec![2, half], entries)
}

/// Row-major fill of an `n1 x n2` grid: component `i` (one-based) lands in
/// row `ceil(i / n2)`, column `((i - 1) mod n2) + 1`. Unused cells are zero.
pub fn general_reshape(p: &ProbabilityVector, n1: usize, n2: usize) -> Result<JointTable> {
    reshape(p, vec![n1, n2])
}

/// Row-major fill over `(k, j, l)`.
pub fn tripartite_reshape(
    p: &ProbabilityVector,
    n1: usize,
    n2: usize,
    n3: usize,
) -> Result<JointTable> {
    reshape(p, vec![n1, n2, n3])
}

fn reshape(p: &ProbabilityVector, dims: Vec<usize>) -> Result<JointTable> {
    if dims.contains(&0) {
        return Err(Error::Dimension(format!("zero-sized axis in {dims:?}")));
    }
    let cells: usize = dims.iter().product();
    if cells < p.len() {
        return Err(Error::Dimension(format!(
            "grid {dims:?} has {cells} cells, fewer than {} components",
            p.len()
        )));
    }
    let mut entries = p.as_slice().to_vec();
    entries.resize(cells, 0.0);
    JointTable::new(dims, entries)
}

/// Pairs consecutive components: row `k` is `(p_{2k-1}, p_{2k})`.
///
/// The row marginal gives the pair sums and the column marginal the
/// odd-position and even-position totals. An odd length is padded with one
/// zero.
pub fn interleave_split(p: &ProbabilityVector) -> Result<JointTable> {
    if p.is_empty() {
        return Err(Error::Dimension("interleave split of empty input".into()));
    }
    let rows = p.len().div_ceil(2);
    let mut entries = p.as_slice().to_vec();
    entries.resize(2 * rows, 0.0);
    JointTable::new(vec![rows, 2], entries)
}

/// The four weight lattices of SU(1,1) irreps, each in its enumeration order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeriesKind {
    /// `-j, -j+1, -j+2, ...`
    DiscretePositive,
    /// `j, j-1, j-2, ...`
    DiscreteNegative,
    /// `0, 1, -1, 2, -2, ...`
    ContinuousInteger,
    /// `-1/2, 1/2, -3/2, 3/2, ...`
    ContinuousHalfInteger,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 4] = [
        SeriesKind::DiscretePositive,
        SeriesKind::DiscreteNegative,
        SeriesKind::ContinuousInteger,
        SeriesKind::ContinuousHalfInteger,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            SeriesKind::DiscretePositive => "discrete_positive",
            SeriesKind::DiscreteNegative => "discrete_negative",
            SeriesKind::ContinuousInteger => "continuous_integer",
            SeriesKind::ContinuousHalfInteger => "continuous_half_integer",
        }
    }

    /// The weight at zero-based position `index`. `j` is only used by the
    /// discrete kinds.
    pub fn weight_at(self, j: HalfInt, index: usize) -> HalfInt {
        let i = index as i64;
        match self {
            SeriesKind::DiscretePositive => -j + HalfInt::from_int(i),
            SeriesKind::DiscreteNegative => j - HalfInt::from_int(i),
            SeriesKind::ContinuousInteger => {
                let step = (i + 1) / 2;
                if i % 2 == 1 {
                    HalfInt::from_int(step)
                } else {
                    HalfInt::from_int(-step)
                }
            }
            SeriesKind::ContinuousHalfInteger => {
                let magnitude = 2 * (i / 2) + 1;
                if i % 2 == 0 {
                    HalfInt::from_doubled(-magnitude)
                } else {
                    HalfInt::from_doubled(magnitude)
                }
            }
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SeriesKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s || k.as_str().replace('_', "-") == s)
            .ok_or_else(|| Error::Parse(format!("unknown series kind {s:?}")))
    }
}

/// The first `count` weights of a lattice, in enumeration order.
pub fn enumerate_weights(kind: SeriesKind, j: HalfInt, count: usize) -> Result<Vec<HalfInt>> {
    if count == 0 {
        return Err(Error::Dimension("weight count must be at least 1".into()));
    }
    Ok((0..count).map(|i| kind.weight_at(j, i)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pv(v: &[f64]) -> ProbabilityVector {
        ProbabilityVector::new(v.to_vec()).unwrap()
    }

    #[test]
    fn clamps_tiny_negatives() {
        let p = pv(&[0.5, 0.5 + 5e-13, -5e-13]);
        assert_eq!(p.as_slice()[2], 0.0);
        assert!(ProbabilityVector::new(vec![0.6, 0.5, -0.1]).is_err());
        assert!(ProbabilityVector::new(vec![0.3, 0.3]).is_err());
        assert!(ProbabilityVector::new(vec![]).is_err());
        assert!(ProbabilityVector::new(vec![f64::NAN, 1.0]).is_err());
    }

    #[test]
    fn bipartite_even_and_odd() {
        let t = bipartite_split(&pv(&[0.1, 0.2, 0.3, 0.4])).unwrap();
        assert_eq!(t.rows(), vec![vec![0.1, 0.2], vec![0.3, 0.4]]);

        let t = bipartite_split(&pv(&[0.5, 0.5])).unwrap();
        assert_eq!(t.rows(), vec![vec![0.5], vec![0.5]]);

        let t = bipartite_split(&pv(&[0.2, 0.3, 0.5])).unwrap();
        assert_eq!(t.rows(), vec![vec![0.2, 0.3], vec![0.5, 0.0]]);

        assert!(matches!(
            bipartite_split(&pv(&[1.0])),
            Err(Error::Dimension(_))
        ));
    }

    #[test]
    fn general_reshape_cases() {
        let t = general_reshape(&pv(&[0.25; 4]), 2, 2).unwrap();
        assert_eq!(t.rows(), vec![vec![0.25, 0.25], vec![0.25, 0.25]]);

        let p = pv(&[0.1, 0.2, 0.3, 0.4]);
        let t = general_reshape(&p, 4, 1).unwrap();
        let (first, second) = t.marginals().unwrap();
        assert_eq!(second.as_slice(), p.as_slice());
        assert_eq!(first.as_slice(), &[1.0]);

        let half = pv(&[0.5, 0.5]);
        let t = general_reshape(&half, 2, 2).unwrap();
        assert_eq!(t.rows(), vec![vec![0.5, 0.5], vec![0.0, 0.0]]);
        assert_eq!(t, bipartite_split(&half.padded(2)).unwrap());

        assert!(general_reshape(&p, 1, 3).is_err());
    }

    #[test]
    fn tripartite_cases() {
        let t = tripartite_reshape(&pv(&[0.125; 8]), 2, 2, 2).unwrap();
        assert!(t.entries().iter().all(|&v| v == 0.125));

        let mut d = vec![0.0; 8];
        d[0] = 1.0;
        let t = tripartite_reshape(&pv(&d), 2, 2, 2).unwrap();
        assert_eq!(t.get3(0, 0, 0), 1.0);
        assert_eq!(t.entries().iter().sum::<f64>(), 1.0);

        // (0.1..0.6)/2.1 over dims (3, 2, 1): component i goes to (i / 2, i % 2, 0).
        let raw = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6];
        let p = ProbabilityVector::normalized(&raw).unwrap();
        let t = tripartite_reshape(&p, 3, 2, 1).unwrap();
        for (i, v) in p.as_slice().iter().enumerate() {
            assert_eq!(t.get3(i / 2, i % 2, 0), *v);
        }
        for keep in [(0, 1), (0, 2), (1, 2), (2, 0)] {
            let m = t.pair_marginal(keep).unwrap();
            assert!((m.entries().iter().sum::<f64>() - 1.0).abs() < 1e-12);
        }
        let k = t.axis_marginal(0).unwrap();
        let expected = [0.3 / 2.1, 0.7 / 2.1, 1.1 / 2.1];
        for (a, b) in k.as_slice().iter().zip(expected) {
            assert!((a - b).abs() < 1e-15);
        }
        assert!(t.marginals().is_err());
        assert!(tripartite_reshape(&p, 1, 2, 2).is_err());
    }

    #[test]
    fn interleave_cases() {
        let t = interleave_split(&pv(&[0.4, 0.1, 0.3, 0.2])).unwrap();
        assert_eq!(t.rows(), vec![vec![0.4, 0.1], vec![0.3, 0.2]]);
        let (cols, rows) = t.marginals().unwrap();
        assert!((rows.as_slice()[0] - 0.5).abs() < 1e-15);
        assert!((rows.as_slice()[1] - 0.5).abs() < 1e-15);
        assert!((cols.as_slice()[0] - 0.7).abs() < 1e-15);
        assert!((cols.as_slice()[1] - 0.3).abs() < 1e-15);

        let t = interleave_split(&pv(&[1.0, 0.0, 0.0, 0.0])).unwrap();
        let (cols, rows) = t.marginals().unwrap();
        assert_eq!(cols.as_slice(), &[1.0, 0.0]);
        assert_eq!(rows.as_slice(), &[1.0, 0.0]);

        let t = interleave_split(&pv(&[0.25; 4])).unwrap();
        let (cols, rows) = t.marginals().unwrap();
        assert_eq!(cols.as_slice(), &[0.5, 0.5]);
        assert_eq!(rows.as_slice(), &[0.5, 0.5]);

        let t = interleave_split(&pv(&[1.0])).unwrap();
        assert_eq!(t.rows(), vec![vec![1.0, 0.0]]);
    }

    #[test]
    fn marginals_of_small_tables() {
        let t = JointTable::from_rows(&[vec![0.1, 0.2], vec![0.3, 0.4]]).unwrap();
        let (a, b) = t.marginals().unwrap();
        assert!((a.as_slice()[0] - 0.4).abs() < 1e-15 && (a.as_slice()[1] - 0.6).abs() < 1e-15);
        assert!((b.as_slice()[0] - 0.3).abs() < 1e-15 && (b.as_slice()[1] - 0.7).abs() < 1e-15);

        let t = JointTable::from_rows(&[vec![0.0, 0.0], vec![0.0, 1.0]]).unwrap();
        let (a, b) = t.marginals().unwrap();
        assert_eq!(a.as_slice(), &[0.0, 1.0]);
        assert_eq!(b.as_slice(), &[0.0, 1.0]);

        let p = pv(&[0.5, 0.25, 0.25]);
        let q = pv(&[0.75, 0.25]);
        let t = JointTable::product(&p, &q).unwrap();
        let (a, b) = t.marginals().unwrap();
        assert_eq!(a.as_slice(), q.as_slice());
        assert_eq!(b.as_slice(), p.as_slice());
    }

    #[test]
    fn bistochastic_validation() {
        let m = BistochasticMatrix::new(2, vec![0.3, 0.7, 0.7, 0.3]).unwrap();
        assert_eq!(m.column(1).unwrap().as_slice(), &[0.7, 0.3]);
        assert!(BistochasticMatrix::new(2, vec![0.3, 0.7, 0.6, 0.4]).is_err());
        assert!(BistochasticMatrix::new(2, vec![1.2, -0.2, -0.2, 1.2]).is_err());
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let u = BistochasticMatrix::from_squared_moduli(2, &[s, -s, s, s]).unwrap();
        assert!((u.get(0, 1) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn weight_orders() {
        let j = HalfInt::from_int(-1);
        let w = enumerate_weights(SeriesKind::DiscretePositive, j, 3).unwrap();
        assert_eq!(
            w,
            vec![
                HalfInt::from_int(1),
                HalfInt::from_int(2),
                HalfInt::from_int(3)
            ]
        );

        let w = enumerate_weights(SeriesKind::DiscreteNegative, j, 3).unwrap();
        assert_eq!(
            w,
            vec![
                HalfInt::from_int(-1),
                HalfInt::from_int(-2),
                HalfInt::from_int(-3)
            ]
        );

        let w = enumerate_weights(SeriesKind::ContinuousInteger, HalfInt::ZERO, 5).unwrap();
        let ints: Vec<i64> = w.iter().map(|h| h.doubled() / 2).collect();
        assert_eq!(ints, vec![0, 1, -1, 2, -2]);

        let w = enumerate_weights(SeriesKind::ContinuousHalfInteger, HalfInt::ZERO, 4).unwrap();
        let doubled: Vec<i64> = w.iter().map(|h| h.doubled()).collect();
        assert_eq!(doubled, vec![-1, 1, -3, 3]);

        assert!(enumerate_weights(SeriesKind::ContinuousInteger, HalfInt::ZERO, 0).is_err());
        assert!("discrete_sideways".parse::<SeriesKind>().is_err());
        assert_eq!(
            "continuous-integer".parse::<SeriesKind>().unwrap(),
            SeriesKind::ContinuousInteger
        );
    }
}
