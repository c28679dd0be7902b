//! Beings, capability sets, and the dominance machinery used by every mixing
//! procedure.
//!
//! All comparisons use a fixed absolute tolerance [`EPS`] per coordinate:
//! `a >= b` holds when `a >= b - EPS`, and two points are duplicates when
//! every coordinate differs by at most `EPS`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Absolute per-coordinate comparison tolerance.
pub const EPS: f64 = 1e-9;

/// One attainable welfare bundle: a point of the non-negative orthant.
#[derive(Debug, Clone, PartialEq)]
pub struct Being(Vec<f64>);

impl Being {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::Empty("a being needs at least one coordinate"));
        }
        for (index, &value) in coords.iter().enumerate() {
            if !value.is_finite() || value < 0.0 {
                return Err(Error::InvalidCoordinate { index, value });
            }
        }
        Ok(Being(coords))
    }

    /// The origin of the given dimension.
    pub fn zero(dimension: usize) -> Self {
        Being(vec![0.0; dimension])
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn dimension(&self) -> usize {
        self.0.len()
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    /// Componentwise minimum. Both operands must share a dimension.
    pub fn meet(&self, other: &Being) -> Being {
        debug_assert_eq!(self.dimension(), other.dimension());
        Being(self.0.iter().zip(&other.0).map(|(a, b)| a.min(*b)).collect())
    }

    /// `sum_l weights[l] * beings[l]`, the probability-weighted aggregate.
    ///
    /// Negative round-off (from `-0.0` or tiny weights) is clamped to zero.
    pub fn weighted_sum<'a, I>(dimension: usize, terms: I) -> Being
    where
        I: IntoIterator<Item = (f64, &'a Being)>,
    {
        let mut acc = vec![0.0; dimension];
        for (w, b) in terms {
            debug_assert_eq!(b.dimension(), dimension);
            for (slot, x) in acc.iter_mut().zip(&b.0) {
                *slot += w * x;
            }
        }
        for x in &mut acc {
            if *x < 0.0 {
                *x = 0.0;
            }
        }
        Being(acc)
    }

    /// Lexicographic order on coordinates using IEEE total ordering.
    pub fn lex_cmp(&self, other: &Being) -> Ordering {
        lex_cmp(&self.0, &other.0)
    }
}

impl fmt::Display for Being {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            f.write_str(&crate::format::fmt_num(*x))?;
        }
        f.write_str(")")
    }
}

impl Serialize for Being {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let rounded: Vec<f64> = self.0.iter().map(|&x| crate::format::round_sig(x)).collect();
        rounded.serialize(serializer)
    }
}

impl TryFrom<Vec<f64>> for Being {
    type Error = Error;

    fn try_from(coords: Vec<f64>) -> Result<Self> {
        Being::new(coords)
    }
}

fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.total_cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}

/// A finite, non-empty set of beings of uniform dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct CapabilitySet {
    beings: Vec<Being>,
    label: Option<String>,
}

impl CapabilitySet {
    /// Builds a set, dropping later members that duplicate an earlier one
    /// within [`EPS`]. Input order is otherwise preserved.
    pub fn new(beings: Vec<Being>) -> Result<Self> {
        let first = beings.first().ok_or(Error::Empty("capability set has no beings"))?;
        let dimension = first.dimension();
        let mut kept: Vec<Being> = Vec::with_capacity(beings.len());
        for b in beings {
            if b.dimension() != dimension {
                return Err(Error::DimensionMismatch { expected: dimension, found: b.dimension() });
            }
            if !kept.iter().any(|k| approx_eq(k, &b)) {
                kept.push(b);
            }
        }
        Ok(CapabilitySet { beings: kept, label: None })
    }

    /// Convenience constructor from raw coordinate rows.
    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<Self> {
        let beings = rows
            .iter()
            .map(|r| Being::new(r.as_ref().to_vec()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(beings)
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn beings(&self) -> &[Being] {
        &self.beings
    }

    pub fn len(&self) -> usize {
        self.beings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beings.is_empty()
    }

    pub fn dimension(&self) -> usize {
        self.beings[0].dimension()
    }

    /// Union of two sets, keeping `self`'s members first.
    pub fn union(&self, other: &CapabilitySet) -> Result<CapabilitySet> {
        let mut all = self.beings.clone();
        all.extend(other.beings.iter().cloned());
        CapabilitySet::new(all)
    }
}

/// The strongest relation found between two capability sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "verdict", content = "preferred")]
pub enum PreferenceVerdict {
    /// Every member of the other set is strictly dominated by the preferred set.
    StrictlyPreferred(Side),
    /// The other set lies in the preferred set's dominated region, but not strictly.
    AtLeastAsGood(Side),
    /// Each set lies in the other's dominated region.
    Equivalent,
    Incomparable,
}

/// Which argument of [`compare_sets`] a verdict favours.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::First => Side::Second,
            Side::Second => Side::First,
        }
    }
}

impl PreferenceVerdict {
    /// The same relation seen with the arguments swapped.
    pub fn reversed(self) -> Self {
        match self {
            PreferenceVerdict::StrictlyPreferred(s) => PreferenceVerdict::StrictlyPreferred(s.flip()),
            PreferenceVerdict::AtLeastAsGood(s) => PreferenceVerdict::AtLeastAsGood(s.flip()),
            other => other,
        }
    }

    /// True when the verdict establishes that `side` is at least as good as
    /// the other argument.
    pub fn at_least_as_good(self, side: Side) -> bool {
        match self {
            PreferenceVerdict::StrictlyPreferred(s) | PreferenceVerdict::AtLeastAsGood(s) => s == side,
            PreferenceVerdict::Equivalent => true,
            PreferenceVerdict::Incomparable => false,
        }
    }
}

impl fmt::Display for PreferenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |s: &Side| match s {
            Side::First => "first",
            Side::Second => "second",
        };
        match self {
            PreferenceVerdict::StrictlyPreferred(s) => write!(f, "{} set strictly preferred", side(s)),
            PreferenceVerdict::AtLeastAsGood(s) => write!(f, "{} set at least as good", side(s)),
            PreferenceVerdict::Equivalent => f.write_str("equivalent"),
            PreferenceVerdict::Incomparable => f.write_str("incomparable"),
        }
    }
}

fn check_dims(a: &Being, b: &Being) -> Result<()> {
    if a.dimension() != b.dimension() {
        return Err(Error::DimensionMismatch { expected: a.dimension(), found: b.dimension() });
    }
    Ok(())
}

fn check_set_dim(b: &Being, set: &CapabilitySet) -> Result<()> {
    if b.dimension() != set.dimension() {
        return Err(Error::DimensionMismatch { expected: set.dimension(), found: b.dimension() });
    }
    Ok(())
}

/// Unchecked `a >= b` within tolerance. Callers guarantee equal dimension.
#[inline]
pub(crate) fn ge(a: &[f64], b: &[f64]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x >= *y - EPS)
}

/// Unchecked strict dominance: `a >= b` everywhere and beyond `EPS` somewhere.
#[inline]
pub(crate) fn strictly_ge(a: &[f64], b: &[f64]) -> bool {
    ge(a, b) && a.iter().zip(b).any(|(x, y)| *x > *y + EPS)
}

/// `a` and `b` agree in every coordinate within [`EPS`].
pub fn approx_eq(a: &Being, b: &Being) -> bool {
    a.dimension() == b.dimension() && a.0.iter().zip(&b.0).all(|(x, y)| (x - y).abs() <= EPS)
}

/// `a >= b` in every coordinate (weak Pareto dominance of `a` over `b`).
pub fn weak_dominates(a: &Being, b: &Being) -> Result<bool> {
    check_dims(a, b)?;
    Ok(ge(&a.0, &b.0))
}

/// `a >= b` everywhere and strictly better beyond [`EPS`] somewhere.
pub fn strictly_dominates(a: &Being, b: &Being) -> Result<bool> {
    check_dims(a, b)?;
    Ok(strictly_ge(&a.0, &b.0))
}

/// Indices of the non-dominated members of `points`, sorted
/// lexicographically by coordinates. Among duplicates within [`EPS`] the
/// lexicographically smallest is kept; exact ties keep the earliest index.
pub fn pareto_indices(points: &[Being]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].lex_cmp(&points[j]));

    let mut window: Vec<usize> = Vec::new();
    for &i in &order {
        let p = &points[i].0;
        if window
            .iter()
            .any(|&w| strictly_ge(&points[w].0, p) || approx_eq(&points[w], &points[i]))
        {
            continue;
        }
        window.retain(|&w| !strictly_ge(p, &points[w].0));
        window.push(i);
    }
    // The window pass can drop a dominator before meeting a point it would
    // have removed only when tolerances chain; re-check survivors exactly.
    window.retain(|&w| {
        !points
            .iter()
            .enumerate()
            .any(|(j, q)| j != w && strictly_ge(&q.0, &points[w].0))
    });
    window
}

/// The points of `points` that no other point dominates, deduplicated and
/// sorted lexicographically.
pub fn pareto_frontier(points: &[Being]) -> Result<Vec<Being>> {
    let first = points.first().ok_or(Error::Empty("pareto frontier of an empty list"))?;
    let dimension = first.dimension();
    if let Some(bad) = points.iter().find(|b| b.dimension() != dimension) {
        return Err(Error::DimensionMismatch { expected: dimension, found: bad.dimension() });
    }
    Ok(pareto_indices(points).into_iter().map(|i| points[i].clone()).collect())
}

/// Indices of `points` with duplicates (within [`EPS`]) removed, in
/// lexicographic order. The lexicographically smallest representative of each
/// duplicate cluster is kept; exact ties keep the earliest index.
pub fn dedup_indices(points: &[Being]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&i, &j| points[i].lex_cmp(&points[j]));
    let mut kept: Vec<usize> = Vec::with_capacity(order.len());
    for i in order {
        let x0 = points[i].0[0];
        let duplicate = kept
            .iter()
            .rev()
            .take_while(|&&k| points[k].0[0] >= x0 - EPS)
            .any(|&k| approx_eq(&points[k], &points[i]));
        if !duplicate {
            kept.push(i);
        }
    }
    kept
}

/// `b` lies in `A - R^h_+`: some member of `A` weakly dominates it.
pub fn in_dominated_region(b: &Being, set: &CapabilitySet) -> Result<bool> {
    check_set_dim(b, set)?;
    Ok(dominated_by_points(b, set.beings()))
}

/// Unchecked membership of `b` in the dominated region of a point list.
pub(crate) fn dominated_by_points(b: &Being, points: &[Being]) -> bool {
    points.iter().any(|p| ge(&p.0, &b.0))
}

/// `b` lies in the union of the sets' dominated regions.
pub fn in_union_region(b: &Being, sets: &[CapabilitySet]) -> Result<bool> {
    if sets.is_empty() {
        return Err(Error::Empty("union region of no sets"));
    }
    let mut found = false;
    for s in sets {
        found |= in_dominated_region(b, s)?;
    }
    Ok(found)
}

/// `b` lies in every set's dominated region.
pub fn in_intersection_region(b: &Being, sets: &[CapabilitySet]) -> Result<bool> {
    if sets.is_empty() {
        return Err(Error::Empty("intersection region of no sets"));
    }
    let mut all = true;
    for s in sets {
        all &= in_dominated_region(b, s)?;
    }
    Ok(all)
}

/// Maximal points of the intersection of the sets' dominated regions.
///
/// Computed as the frontier of componentwise minima of one member per set,
/// folding one set at a time: the meet is monotone, so dropping dominated
/// partial meets never loses a maximal corner.
pub fn intersection_corners(sets: &[CapabilitySet]) -> Result<Vec<Being>> {
    let first = sets.first().ok_or(Error::Empty("intersection corners of no sets"))?;
    let dimension = first.dimension();
    if let Some(bad) = sets.iter().find(|s| s.dimension() != dimension) {
        return Err(Error::DimensionMismatch { expected: dimension, found: bad.dimension() });
    }
    let mut corners = pareto_frontier(first.beings())?;
    for set in &sets[1..] {
        let meets: Vec<Being> = corners
            .iter()
            .flat_map(|c| set.beings().iter().map(move |z| c.meet(z)))
            .collect();
        corners = pareto_frontier(&meets)?;
    }
    Ok(corners)
}

/// Indices of the members of `points` that lie outside the dominated region
/// of `region`. Empty means `points ⊆ region - R^h_+`.
pub fn undominated_members(points: &[Being], region: &[Being]) -> Vec<usize> {
    points
        .iter()
        .enumerate()
        .filter(|(_, b)| !dominated_by_points(b, region))
        .map(|(i, _)| i)
        .collect()
}

/// Set-level preference between two capability sets.
///
/// The second set is at least as good as the first when every member of the
/// first is weakly dominated by some member of the second. It is strictly
/// preferred when, in addition, every member of the first is strictly
/// dominated by some member of the second and some member of the second is
/// not weakly dominated by any member of the first.
pub fn compare_sets(first: &CapabilitySet, second: &CapabilitySet) -> Result<PreferenceVerdict> {
    if first.dimension() != second.dimension() {
        return Err(Error::DimensionMismatch { expected: first.dimension(), found: second.dimension() });
    }
    Ok(compare_points(first.beings(), second.beings()))
}

pub(crate) fn compare_points(first: &[Being], second: &[Being]) -> PreferenceVerdict {
    let second_covers = undominated_members(first, second).is_empty();
    let first_covers = undominated_members(second, first).is_empty();
    match (first_covers, second_covers) {
        (true, true) => PreferenceVerdict::Equivalent,
        (false, true) => {
            if strictly_covers(second, first) {
                PreferenceVerdict::StrictlyPreferred(Side::Second)
            } else {
                PreferenceVerdict::AtLeastAsGood(Side::Second)
            }
        }
        (true, false) => {
            if strictly_covers(first, second) {
                PreferenceVerdict::StrictlyPreferred(Side::First)
            } else {
                PreferenceVerdict::AtLeastAsGood(Side::First)
            }
        }
        (false, false) => PreferenceVerdict::Incomparable,
    }
}

/// Every member of `lower` is strictly dominated by a member of `upper`, and
/// some member of `upper` escapes `lower`'s dominated region.
fn strictly_covers(upper: &[Being], lower: &[Being]) -> bool {
    lower.iter().all(|a| upper.iter().any(|b| strictly_ge(&b.0, &a.0)))
        && upper.iter().any(|b| !dominated_by_points(b, lower))
}

/// Two point lists describe the same set within [`EPS`]: each member has an
/// approximately equal partner in the other list.
pub fn same_point_set(a: &[Being], b: &[Being]) -> bool {
    a.iter().all(|x| b.iter().any(|y| approx_eq(x, y)))
        && b.iter().all(|y| a.iter().any(|x| approx_eq(x, y)))
}
