//! Interpolation node sets: Chebyshev roots, Leja ordering, and Fast Leja points,
//! together with the affine map onto the standard interval `[-2, 2]`.
//!
//! All greedy selections compare multiplicative distances in the log domain, so
//! products over tens of thousands of factors neither overflow nor underflow.
//! Ties on the stored log values are resolved toward the larger coordinate.

mod fast_leja;

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use fast_leja::{fast_leja, fast_leja_extend, Candidate, CandidatePool};

/// A closed real interval `[lo, hi]` with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    /// The standard interval `[-2, 2]` on which all node sets are built.
    pub const STANDARD: Interval = Interval { lo: -2.0, hi: 2.0 };

    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::invalid(format!(
                "interval endpoints must be finite, got [{lo}, {hi}]"
            )));
        }
        if lo >= hi {
            return Err(Error::invalid(format!(
                "interval requires lo < hi, got [{lo}, {hi}]"
            )));
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn len(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn is_standard(&self) -> bool {
        *self == Self::STANDARD
    }

    fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    fn quarter_length(&self) -> f64 {
        0.25 * (self.hi - self.lo)
    }

    /// Maps `x` affinely onto the standard interval. Endpoints land on `-2` and `2`
    /// exactly, and the standard interval maps onto itself without rounding.
    pub fn to_standard(&self, x: f64) -> f64 {
        if x == self.lo {
            -2.0
        } else if x == self.hi {
            2.0
        } else {
            (x - self.midpoint()) / self.quarter_length()
        }
    }

    /// Inverse of [`Interval::to_standard`].
    pub fn from_standard(&self, u: f64) -> f64 {
        if u == -2.0 {
            self.lo
        } else if u == 2.0 {
            self.hi
        } else {
            (self.midpoint() + u * self.quarter_length()).clamp(self.lo, self.hi)
        }
    }
}

impl Default for Interval {
    fn default() -> Self {
        Self::STANDARD
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

pub fn to_standard(interval: &Interval, x: f64) -> f64 {
    interval.to_standard(x)
}

pub fn from_standard(interval: &Interval, u: f64) -> f64 {
    interval.from_standard(u)
}

/// How a node sequence was constructed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Chebyshev roots in their natural (descending) index order.
    ChebyshevRoots,
    /// Chebyshev roots sorted increasingly; the unstable baseline for Newton form.
    ChebyshevAscending,
    /// Chebyshev roots in Leja order.
    ChebyshevLeja,
    FastLeja,
    /// An arbitrary point set in Leja order.
    Leja,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::ChebyshevRoots => "chebyshev-roots",
            Family::ChebyshevAscending => "chebyshev-ascending",
            Family::ChebyshevLeja => "chebyshev-leja",
            Family::FastLeja => "fast-leja",
            Family::Leja => "leja",
        }
    }

    /// Families whose first node maximizes `|x|` and whose later nodes maximize the
    /// multiplicative distance to their predecessors.
    pub fn is_leja_ordered(self) -> bool {
        matches!(self, Family::ChebyshevLeja | Family::FastLeja | Family::Leja)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Family::ChebyshevRoots,
            Family::ChebyshevAscending,
            Family::ChebyshevLeja,
            Family::FastLeja,
            Family::Leja,
        ]
        .into_iter()
        .find(|family| family.name() == s)
        .ok_or_else(|| Error::invalid(format!("unknown node family `{s}`")))
    }
}

/// An ordered list of distinct interpolation nodes inside an interval.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeSequence {
    interval: Interval,
    family: Family,
    values: Vec<f64>,
}

impl NodeSequence {
    /// Validates containment, distinctness and, for Leja families, that the first
    /// node has maximal magnitude.
    pub fn new(interval: Interval, family: Family, values: Vec<f64>) -> Result<Self> {
        if let Some(&x) = values.iter().find(|&&x| !interval.contains(x)) {
            return Err(Error::invalid(format!("node {x:e} lies outside {interval}")));
        }
        check_distinct(&values)?;
        if family.is_leja_ordered() {
            if let Some(&first) = values.first() {
                if values.iter().any(|x| x.abs() > first.abs()) {
                    return Err(Error::invalid(format!(
                        "{family} sequence must start with a node of maximal magnitude"
                    )));
                }
            }
        }
        Ok(NodeSequence {
            interval,
            family,
            values,
        })
    }

    pub(crate) fn new_unchecked(interval: Interval, family: Family, values: Vec<f64>) -> Self {
        NodeSequence {
            interval,
            family,
            values,
        }
    }

    pub fn interval(&self) -> Interval {
        self.interval
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<f64> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The first `n` nodes (all of them if `n` exceeds the length).
    pub fn prefix(&self, n: usize) -> NodeSequence {
        let n = n.min(self.values.len());
        NodeSequence::new_unchecked(self.interval, self.family, self.values[..n].to_vec())
    }

    /// The nodes expressed in standard coordinates.
    pub fn standard_values(&self) -> Vec<f64> {
        if self.interval.is_standard() {
            return self.values.clone();
        }
        self.values
            .iter()
            .map(|&x| self.interval.to_standard(x))
            .collect()
    }

    /// Affine image of this sequence on `target`, passing through standard coordinates.
    pub fn map_to(&self, target: Interval) -> NodeSequence {
        if target == self.interval {
            return self.clone();
        }
        let values = self
            .values
            .iter()
            .map(|&x| target.from_standard(self.interval.to_standard(x)))
            .collect();
        NodeSequence::new_unchecked(target, self.family, values)
    }

    /// Reorders the nodes by [`leja_order`]. Chebyshev families become `chebyshev-leja`.
    pub fn into_leja_order(self) -> Result<NodeSequence> {
        let family = match self.family {
            Family::ChebyshevRoots | Family::ChebyshevAscending | Family::ChebyshevLeja => {
                Family::ChebyshevLeja
            }
            Family::FastLeja => Family::FastLeja,
            Family::Leja => Family::Leja,
        };
        let values = leja_order(&self.values)?;
        Ok(NodeSequence::new_unchecked(self.interval, family, values))
    }
}

fn check_distinct(values: &[f64]) -> Result<()> {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::DuplicateNode(pair[0]));
        }
    }
    Ok(())
}

/// Roots of the Chebyshev polynomial `T_m` scaled to `[-b, b]`, in index order
/// `k = 1..m` (descending coordinate).
///
/// Angles past `pi / 4` are evaluated through the complementary sine,
/// `b sin((m + 1 - 2k) pi / 2m)`, which avoids cancellation near the origin. The lower
/// half mirrors the upper half so the set is exactly antisymmetric, and the middle
/// root of an odd-sized set is exactly zero.
pub fn chebyshev_roots(m: usize, b: f64) -> Result<NodeSequence> {
    if m == 0 {
        return Err(Error::invalid("chebyshev_roots requires m >= 1"));
    }
    if !(b > 0.0 && b.is_finite()) {
        return Err(Error::invalid(format!(
            "chebyshev_roots requires a positive half-width, got {b}"
        )));
    }
    let mut values = vec![0.0; m];
    let denom = (2 * m) as f64;
    for k in 1..=m / 2 {
        // 4(2k - 1) <= 2m  <=>  angle <= pi / 4
        let t = if 4 * (2 * k - 1) <= 2 * m {
            b * ((2 * k - 1) as f64 * PI / denom).cos()
        } else {
            b * ((m + 1 - 2 * k) as f64 * PI / denom).sin()
        };
        values[k - 1] = t;
        values[m - k] = -t;
    }
    let interval = Interval::new(-b, b)?;
    Ok(NodeSequence::new_unchecked(
        interval,
        Family::ChebyshevRoots,
        values,
    ))
}

/// `m` Chebyshev roots on `interval`, sorted increasingly.
pub fn chebyshev_ascending(interval: Interval, m: usize) -> Result<NodeSequence> {
    let mut values = chebyshev_roots(m, 2.0)?.into_values();
    values.reverse();
    let standard = NodeSequence::new_unchecked(Interval::STANDARD, Family::ChebyshevAscending, values);
    Ok(standard.map_to(interval))
}

/// `m` Chebyshev roots on `interval` in Leja order. The ordering is computed on
/// the standard interval and then mapped.
pub fn chebyshev_leja(interval: Interval, m: usize) -> Result<NodeSequence> {
    let roots = chebyshev_roots(m, 2.0)?;
    Ok(roots.into_leja_order()?.map_to(interval))
}

/// `sum_k ln|point - x_k|`, or negative infinity when `point` coincides with a
/// placed node.
pub fn log_multiplicative_distance(point: f64, placed: &[f64]) -> f64 {
    let mut sum = 0.0;
    for &x in placed {
        let d = (point - x).abs();
        if d == 0.0 {
            return f64::NEG_INFINITY;
        }
        sum += d.ln();
    }
    sum
}

/// Greedy preference between two scored positions: larger score first, then larger
/// coordinate. Scores are compared exactly.
pub(crate) fn prefer(score: f64, position: f64, best_score: f64, best_position: f64) -> bool {
    match score.partial_cmp(&best_score) {
        Some(Ordering::Greater) => true,
        Some(Ordering::Equal) => position > best_position,
        _ => false,
    }
}

/// Leja ordering of a finite point set.
///
/// The first element has maximal `|x|`; each following element maximizes the
/// multiplicative distance to the elements already placed. Each remaining point
/// carries a running log-distance that gains one term per placement, so the whole
/// ordering costs `O(m^2)` logarithms.
pub fn leja_order(points: &[f64]) -> Result<Vec<f64>> {
    if points.is_empty() {
        return Err(Error::invalid("leja_order requires at least one point"));
    }
    if let Some(&x) = points.iter().find(|x| !x.is_finite()) {
        return Err(Error::invalid(format!("leja_order requires finite points, got {x}")));
    }
    check_distinct(points)?;

    let mut remaining: Vec<(f64, f64)> = points.iter().map(|&x| (x, 0.0)).collect();
    let mut first = 0;
    for (i, &(x, _)) in remaining.iter().enumerate().skip(1) {
        let best = remaining[first].0;
        if prefer(x.abs(), x, best.abs(), best) {
            first = i;
        }
    }

    let mut ordered = Vec::with_capacity(points.len());
    let mut last = remaining.swap_remove(first).0;
    ordered.push(last);
    while !remaining.is_empty() {
        let mut best = 0;
        for i in 0..remaining.len() {
            let entry = &mut remaining[i];
            entry.1 += (entry.0 - last).abs().ln();
            let (x, score) = remaining[i];
            if i > 0 && prefer(score, x, remaining[best].1, remaining[best].0) {
                best = i;
            }
        }
        last = remaining.swap_remove(best).0;
        ordered.push(last);
    }
    Ok(ordered)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::SQRT_2;

    #[test]
    fn chebyshev_roots_small_cases() {
        assert_eq!(chebyshev_roots(1, 2.0).unwrap().values(), &[0.0]);
        assert_eq!(
            chebyshev_roots(2, 2.0).unwrap().values(),
            &[SQRT_2, -SQRT_2]
        );
        assert_eq!(
            chebyshev_roots(4, 2.0).unwrap().values(),
            &[
                1.8477590650225735,
                0.7653668647301796,
                -0.7653668647301796,
                -1.8477590650225735
            ]
        );
    }

    #[test]
    fn chebyshev_roots_match_cosine_formula() {
        for m in [3usize, 7, 50, 513] {
            let roots = chebyshev_roots(m, 2.0).unwrap();
            for (k, &t) in roots.values().iter().enumerate() {
                let direct = 2.0 * ((2 * k + 1) as f64 * PI / (2 * m) as f64).cos();
                assert!((t - direct).abs() <= 8.0 * f64::EPSILON, "m={m} k={k}");
            }
        }
    }

    #[test]
    fn chebyshev_roots_symmetry() {
        for m in 1..40 {
            let v = chebyshev_roots(m, 1.5).unwrap().into_values();
            for k in 0..m {
                assert_eq!(v[k], -v[m - 1 - k]);
            }
            let zeros = v.iter().filter(|&&x| x == 0.0).count();
            assert_eq!(zeros, m % 2);
        }
    }

    #[test]
    fn chebyshev_roots_rejects_bad_arguments() {
        assert!(matches!(chebyshev_roots(0, 2.0), Err(Error::InvalidArgument(_))));
        assert!(matches!(chebyshev_roots(3, 0.0), Err(Error::InvalidArgument(_))));
        assert!(matches!(chebyshev_roots(3, -1.0), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn log_distance_examples() {
        assert_eq!(log_multiplicative_distance(0.0, &[2.0, -2.0]), 1.3862943611198906);
        assert_eq!(
            log_multiplicative_distance(1.0, &[2.0, -2.0, 0.0]),
            1.0986122886681098
        );
        let zero = log_multiplicative_distance(2.0, &[2.0, -2.0]);
        assert_eq!(zero, f64::NEG_INFINITY);
        assert!(!prefer(zero, 5.0, -1e300, 0.0));
    }

    #[test]
    fn leja_order_examples() {
        assert_eq!(leja_order(&[0.0]).unwrap(), vec![0.0]);
        assert_eq!(
            leja_order(&[-2.0, -1.0, 0.0, 1.0, 2.0]).unwrap(),
            vec![2.0, -2.0, 0.0, 1.0, -1.0]
        );
        let roots = chebyshev_roots(4, 2.0).unwrap();
        assert_eq!(
            leja_order(roots.values()).unwrap(),
            vec![
                1.8477590650225735,
                -1.8477590650225735,
                0.7653668647301796,
                -0.7653668647301796
            ]
        );
    }

    #[test]
    fn leja_order_rejects_bad_input() {
        assert!(matches!(leja_order(&[]), Err(Error::InvalidArgument(_))));
        assert!(matches!(
            leja_order(&[1.0, 0.5, 1.0]),
            Err(Error::DuplicateNode(x)) if x == 1.0
        ));
        assert!(leja_order(&[1.0, f64::NAN]).is_err());
    }

    #[test]
    fn interval_mapping() {
        let unit = Interval::new(0.0, 1.0).unwrap();
        assert_eq!(unit.to_standard(0.5), 0.0);
        assert_eq!(unit.to_standard(1.0), 2.0);
        assert_eq!(unit.to_standard(0.0), -2.0);
        let wide = Interval::new(-3.0, 5.0).unwrap();
        assert_eq!(wide.from_standard(-2.0), -3.0);
        assert_eq!(wide.from_standard(2.0), 5.0);
        for u in [-1.9, -0.3, 0.0, 0.123456789, 1.75] {
            assert_eq!(Interval::STANDARD.from_standard(u), u);
            assert_eq!(Interval::STANDARD.to_standard(u), u);
            let x = wide.from_standard(u);
            assert!((wide.to_standard(x) - u).abs() <= 4.0 * f64::EPSILON);
        }
    }

    #[test]
    fn interval_rejects_empty_or_reversed() {
        assert!(Interval::new(1.0, 1.0).is_err());
        assert!(Interval::new(2.0, 1.0).is_err());
        assert!(Interval::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn node_sequence_validation() {
        let i = Interval::STANDARD;
        assert!(NodeSequence::new(i, Family::Leja, vec![2.0, -2.0, 0.0]).is_ok());
        assert!(NodeSequence::new(i, Family::Leja, vec![0.0, 2.0]).is_err());
        assert!(NodeSequence::new(i, Family::ChebyshevAscending, vec![0.0, 2.0]).is_ok());
        assert!(NodeSequence::new(i, Family::Leja, vec![2.5]).is_err());
        assert!(matches!(
            NodeSequence::new(i, Family::ChebyshevAscending, vec![1.0, 1.0]),
            Err(Error::DuplicateNode(_))
        ));
    }

    #[test]
    fn family_names_round_trip() {
        for name in ["chebyshev-ascending", "chebyshev-leja", "fast-leja"] {
            assert_eq!(name.parse::<Family>().unwrap().name(), name);
        }
        assert!("chebyshev".parse::<Family>().is_err());
    }

    #[test]
    fn chebyshev_leja_on_other_interval_keeps_order() {
        let i = Interval::new(0.0, 4.0).unwrap();
        let mapped = chebyshev_leja(i, 9).unwrap();
        let standard = chebyshev_leja(Interval::STANDARD, 9).unwrap();
        for (&x, &u) in mapped.values().iter().zip(standard.values()) {
            assert!((x - (u + 2.0)).abs() < 1e-15);
        }
        assert_eq!(mapped.family(), Family::ChebyshevLeja);
    }
}
