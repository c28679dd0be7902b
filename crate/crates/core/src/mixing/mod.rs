//! Mixing capability sets across states of the world.
//!
//! Two procedures are provided:
//!
//! * the **average** set, every probability-weighted combination of one being
//!   per state ([`average_set`], [`average_pf`]);
//! * the **expected** set, the frontier of probability-weighted aggregates of
//!   per-state beings that are dominated by their state's set and totally
//!   ordered across states ([`expected_set`]).
//!
//! The expected set is computed exactly by enumerating one anchor being per
//! state together with a chain order over the states. For a fixed anchor
//! selection and order, the best feasible assignment takes, at each chain
//! position, the componentwise minimum of the anchors at or above it; every
//! other feasible assignment with the same selection and order is
//! componentwise below it. See [`ChainCertificate`].

mod oracle;

pub use oracle::{brute_force_expected, DEFAULT_GRID_CAP};

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    dedup_indices, dominated_by_points, intersection_corners, pareto_indices, Being, CapabilitySet,
};

/// Default cap on enumerated combinations or chain evaluations.
pub const DEFAULT_CAP: u64 = 10_000_000;

/// Tolerance on the probability sum.
pub const PROB_SUM_TOL: f64 = 1e-9;

/// Subjective probabilities over the states, indexed like the acts' sets.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct ProbabilityVector(Vec<f64>);

impl ProbabilityVector {
    /// Validates non-negativity and a unit sum within [`PROB_SUM_TOL`].
    /// Invalid sums are rejected, never renormalized.
    pub fn new(probs: Vec<f64>) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::InvalidProbabilities("no states".into()));
        }
        for (i, &p) in probs.iter().enumerate() {
            if !p.is_finite() || p < 0.0 {
                return Err(Error::InvalidProbabilities(format!(
                    "probability {} of state {} is not a finite non-negative number",
                    crate::format::fmt_num(p),
                    i + 1
                )));
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROB_SUM_TOL {
            return Err(Error::InvalidProbabilities(format!(
                "probabilities sum to {}",
                crate::format::fmt_num(sum)
            )));
        }
        Ok(ProbabilityVector(probs))
    }

    /// Uniform distribution over `states` states.
    pub fn uniform(states: usize) -> Result<Self> {
        if states == 0 {
            return Err(Error::InvalidProbabilities("no states".into()));
        }
        Self::new(vec![1.0 / states as f64; states])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Moves mass `amount` from state `from` to state `to`.
    pub fn shifted(&self, from: usize, to: usize, amount: f64) -> Result<Self> {
        let n = self.0.len();
        if from >= n || to >= n {
            return Err(Error::Precondition(format!("state index out of range for {n} states")));
        }
        if from == to {
            return Err(Error::Precondition("mass shift needs two distinct states".into()));
        }
        if !(amount > 0.0 && amount <= self.0[from] + PROB_SUM_TOL) {
            return Err(Error::Precondition(format!(
                "shifted mass {} must lie in (0, {}]",
                crate::format::fmt_num(amount),
                crate::format::fmt_num(self.0[from])
            )));
        }
        let mut probs = self.0.clone();
        probs[from] = (probs[from] - amount).max(0.0);
        probs[to] += amount;
        Self::new(probs)
    }
}

/// An act: one capability set per state.
#[derive(Debug, Clone, PartialEq)]
pub struct Act {
    label: String,
    per_state: Vec<CapabilitySet>,
}

impl Act {
    pub fn new(label: impl Into<String>, per_state: Vec<CapabilitySet>) -> Result<Self> {
        let first = per_state.first().ok_or(Error::Empty("act has no states"))?;
        let dimension = first.dimension();
        if let Some(bad) = per_state.iter().find(|s| s.dimension() != dimension) {
            return Err(Error::DimensionMismatch { expected: dimension, found: bad.dimension() });
        }
        Ok(Act { label: label.into(), per_state })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn sets(&self) -> &[CapabilitySet] {
        &self.per_state
    }

    pub fn states(&self) -> usize {
        self.per_state.len()
    }

    pub fn dimension(&self) -> usize {
        self.per_state[0].dimension()
    }

    /// Applies `f` to every being of every state.
    pub fn map_beings<F>(&self, mut f: F) -> Result<Act>
    where
        F: FnMut(&Being) -> Result<Being>,
    {
        let sets = self
            .per_state
            .iter()
            .map(|s| {
                let beings = s.beings().iter().map(&mut f).collect::<Result<Vec<_>>>()?;
                let set = CapabilitySet::new(beings)?;
                Ok(match s.label() {
                    Some(l) => set.with_label(l),
                    None => set,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Act::new(self.label.clone(), sets)
    }

    fn check_probs(&self, p: &ProbabilityVector) -> Result<()> {
        if p.len() != self.states() {
            return Err(Error::StateCountMismatch { expected: self.states(), found: p.len() });
        }
        Ok(())
    }

    fn combination_count(&self) -> u128 {
        self.per_state.iter().map(|s| s.len() as u128).product()
    }

    /// Decodes a mixed-radix combination number; the first state varies slowest.
    fn decode(&self, mut code: u128, out: &mut [usize]) {
        for (slot, set) in out.iter_mut().zip(&self.per_state).rev() {
            let n = set.len() as u128;
            *slot = (code % n) as usize;
            code /= n;
        }
    }
}

/// Enumeration limits.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MixConfig {
    /// Maximum combinations (average) or chain evaluations (expected).
    pub cap: u64,
}

impl Default for MixConfig {
    fn default() -> Self {
        MixConfig { cap: DEFAULT_CAP }
    }
}

/// Which mixing procedure produced a [`MixedSet`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum MixKind {
    /// All combination aggregates, unfiltered.
    Average,
    /// Frontier of the average set.
    AveragePf,
    /// Expected capability set (already a frontier).
    Expected,
}

impl From<Mix> for MixKind {
    fn from(mix: Mix) -> Self {
        match mix {
            Mix::Expected => MixKind::Expected,
            Mix::Average => MixKind::Average,
        }
    }
}

/// Selector for the two mixing procedures.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Mix {
    Expected,
    Average,
}

impl Mix {
    pub fn compute(self, act: &Act, p: &ProbabilityVector, config: MixConfig) -> Result<MixedSet> {
        match self {
            Mix::Expected => expected_set(act, p, config),
            Mix::Average => average_set(act, p, config),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mix::Expected => "expected",
            Mix::Average => "average",
        }
    }
}

impl std::str::FromStr for Mix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "expected" => Ok(Mix::Expected),
            "average" => Ok(Mix::Average),
            other => Err(Error::UnknownName { kind: "mix", name: other.to_string() }),
        }
    }
}

/// One combination tuple of the average set: a member of each state's set.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Combination {
    /// Index of the chosen being within each state's set.
    pub indices: Vec<usize>,
    pub beings: Vec<Being>,
}

/// Witness for one expected-set point: an anchor per state, a chain order,
/// and the adjusted beings actually aggregated.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ChainCertificate {
    /// Index of the anchor within each state's set.
    pub selection_indices: Vec<usize>,
    /// Anchor being per state.
    pub selection: Vec<Being>,
    /// States from the bottom of the chain to the top.
    pub order: Vec<usize>,
    /// Adjusted being per state (indexed by state, not chain position).
    pub adjusted: Vec<Being>,
}

impl ChainCertificate {
    /// Builds the certificate for `selection` chained along `order`: the
    /// state at chain position `k` receives the componentwise minimum of the
    /// anchors at positions `k..`.
    pub fn new(selection_indices: Vec<usize>, selection: Vec<Being>, order: Vec<usize>) -> Result<Self> {
        let states = selection.len();
        if states == 0 {
            return Err(Error::Empty("chain with no states"));
        }
        if selection_indices.len() != states || order.len() != states {
            return Err(Error::StateCountMismatch { expected: states, found: order.len() });
        }
        let mut seen = vec![false; states];
        for &s in &order {
            if s >= states || seen[s] {
                return Err(Error::Precondition("chain order is not a permutation of the states".into()));
            }
            seen[s] = true;
        }
        let adjusted = cumulative_meets(&selection, &order);
        Ok(ChainCertificate { selection_indices, selection, order, adjusted })
    }

    /// Builds the certificate from an act and per-state anchor indices.
    pub fn from_act(act: &Act, selection_indices: Vec<usize>, order: Vec<usize>) -> Result<Self> {
        if selection_indices.len() != act.states() {
            return Err(Error::StateCountMismatch { expected: act.states(), found: selection_indices.len() });
        }
        let selection = selection_indices
            .iter()
            .zip(act.sets())
            .map(|(&i, s)| {
                s.beings()
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::Precondition(format!("anchor index {i} out of range")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(selection_indices, selection, order)
    }

    /// Position of each state in the chain (0 = bottom).
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (k, &s) in self.order.iter().enumerate() {
            pos[s] = k;
        }
        pos
    }

    /// Order binaries `d[l][l']`: 0 when state `l` sits below `l'` in the
    /// chain (so `b_l <= b_l'` is enforced), 1 otherwise. Diagonal entries
    /// are unused and set to 0.
    pub fn order_binaries(&self) -> Vec<Vec<u8>> {
        let pos = self.positions();
        let n = pos.len();
        (0..n)
            .map(|l| (0..n).map(|lp| u8::from(l != lp && pos[l] > pos[lp])).collect())
            .collect()
    }

    /// Selection binaries per state: 0 for the anchor, 1 for every other member.
    pub fn selection_binaries(&self, act: &Act) -> Vec<Vec<u8>> {
        act.sets()
            .iter()
            .zip(&self.selection_indices)
            .map(|(s, &chosen)| (0..s.len()).map(|n| u8::from(n != chosen)).collect())
            .collect()
    }
}

fn cumulative_meets(selection: &[Being], order: &[usize]) -> Vec<Being> {
    let mut adjusted = selection.to_vec();
    let mut running: Option<Being> = None;
    for &s in order.iter().rev() {
        let next = match running {
            None => selection[s].clone(),
            Some(r) => r.meet(&selection[s]),
        };
        adjusted[s] = next.clone();
        running = Some(next);
    }
    adjusted
}

/// Probability-weighted aggregate of a certificate's adjusted beings.
pub fn chain_value(cert: &ChainCertificate, p: &ProbabilityVector) -> Being {
    debug_assert_eq!(cert.adjusted.len(), p.len());
    let dimension = cert.adjusted[0].dimension();
    Being::weighted_sum(dimension, p.as_slice().iter().copied().zip(&cert.adjusted))
}

/// Where a mixed point came from.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "snake_case", tag = "type")]
pub enum Provenance {
    Combination(Combination),
    Chain(ChainCertificate),
}

impl Provenance {
    /// Re-aggregates the provenance under `p`.
    pub fn reaggregate(&self, p: &ProbabilityVector) -> Being {
        match self {
            Provenance::Combination(c) => {
                let dimension = c.beings[0].dimension();
                Being::weighted_sum(dimension, p.as_slice().iter().copied().zip(&c.beings))
            }
            Provenance::Chain(cert) => chain_value(cert, p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixedPoint {
    pub being: Being,
    pub provenance: Provenance,
}

/// Result of a mixing procedure: points in lexicographic order, each with
/// its provenance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MixedSet {
    pub kind: MixKind,
    pub points: Vec<MixedPoint>,
}

impl MixedSet {
    pub fn beings(&self) -> Vec<Being> {
        self.points.iter().map(|p| p.being.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn check_cap(what: &'static str, required: u128, config: MixConfig) -> Result<()> {
    if required > config.cap as u128 {
        return Err(Error::Capacity { what, required, cap: config.cap });
    }
    Ok(())
}

/// All probability-weighted combinations of one being per state,
/// deduplicated within tolerance and sorted lexicographically.
pub fn average_set(act: &Act, p: &ProbabilityVector, config: MixConfig) -> Result<MixedSet> {
    act.check_probs(p)?;
    let total = act.combination_count();
    check_cap("average set", total, config)?;
    let dimension = act.dimension();
    let states = act.states();

    let values: Vec<Being> = (0..total as u64)
        .into_par_iter()
        .map(|code| {
            let mut idx = vec![0; states];
            act.decode(code as u128, &mut idx);
            let terms = idx.iter().zip(act.sets()).map(|(&i, s)| &s.beings()[i]);
            Being::weighted_sum(dimension, p.as_slice().iter().copied().zip(terms))
        })
        .collect();

    let points = dedup_indices(&values)
        .into_iter()
        .map(|k| {
            let mut idx = vec![0; states];
            act.decode(k as u128, &mut idx);
            let beings = idx.iter().zip(act.sets()).map(|(&i, s)| s.beings()[i].clone()).collect();
            MixedPoint {
                being: values[k].clone(),
                provenance: Provenance::Combination(Combination { indices: idx, beings }),
            }
        })
        .collect();
    Ok(MixedSet { kind: MixKind::Average, points })
}

/// Frontier of the average set.
pub fn average_pf(act: &Act, p: &ProbabilityVector, config: MixConfig) -> Result<MixedSet> {
    let avg = average_set(act, p, config)?;
    Ok(pareto_of(avg, MixKind::AveragePf))
}

/// Keeps the non-dominated points of a mixed set.
pub fn pareto_of(set: MixedSet, kind: MixKind) -> MixedSet {
    let beings = set.beings();
    let keep = pareto_indices(&beings);
    let mut slots: Vec<Option<MixedPoint>> = set.points.into_iter().map(Some).collect();
    let points = keep.into_iter().filter_map(|i| slots[i].take()).collect();
    MixedSet { kind, points }
}

fn chain_evaluations(act: &Act) -> u128 {
    let factorial: u128 = (1..=act.states() as u128).product();
    act.combination_count().saturating_mul(factorial)
}

/// Skips orders that place two identical anchors adjacently with the higher
/// state index first; swapping them yields the same adjusted beings.
fn canonical_order(selection: &[&Being], order: &[usize]) -> bool {
    order.windows(2).all(|w| !(w[0] > w[1] && crate::geometry::approx_eq(selection[w[0]], selection[w[1]])))
}

/// The expected capability set: the frontier of chain values over every
/// anchor selection and every chain order, each point carrying the
/// certificate that realizes it.
pub fn expected_set(act: &Act, p: &ProbabilityVector, config: MixConfig) -> Result<MixedSet> {
    act.check_probs(p)?;
    check_cap("expected set", chain_evaluations(act), config)?;
    let states = act.states();
    let orders: Vec<Vec<usize>> = (0..states).permutations(states).collect();

    // (selection code, order index, value), locally filtered per selection.
    let candidates: Vec<(u64, usize, Being)> = (0..act.combination_count() as u64)
        .into_par_iter()
        .flat_map_iter(|code| {
            let mut idx = vec![0; states];
            act.decode(code as u128, &mut idx);
            let anchors: Vec<&Being> = idx.iter().zip(act.sets()).map(|(&i, s)| &s.beings()[i]).collect();
            let owned: Vec<Being> = anchors.iter().map(|b| (*b).clone()).collect();
            let mut local: Vec<(usize, Being)> = Vec::new();
            for (k, order) in orders.iter().enumerate() {
                if !canonical_order(&anchors, order) {
                    continue;
                }
                let adjusted = cumulative_meets(&owned, order);
                let dimension = adjusted[0].dimension();
                let value = Being::weighted_sum(dimension, p.as_slice().iter().copied().zip(&adjusted));
                local.push((k, value));
            }
            let values: Vec<Being> = local.iter().map(|(_, v)| v.clone()).collect();
            let mut keep = pareto_indices(&values);
            keep.sort_unstable();
            keep.into_iter()
                .map(|i| (code, local[i].0, local[i].1.clone()))
                .collect::<Vec<_>>()
        })
        .collect();

    let values: Vec<Being> = candidates.iter().map(|(_, _, v)| v.clone()).collect();
    let points = pareto_indices(&values)
        .into_iter()
        .map(|i| {
            let (code, k, ref value) = candidates[i];
            let mut idx = vec![0; states];
            act.decode(code as u128, &mut idx);
            let cert = ChainCertificate::from_act(act, idx, orders[k].clone())
                .expect("decoded selection is in range");
            MixedPoint { being: value.clone(), provenance: Provenance::Chain(cert) }
        })
        .collect();
    Ok(MixedSet { kind: MixKind::Expected, points })
}

/// Outcome of checking `∩(A_l − R+) ⊆ E − R+ ⊆ ∪(A_l − R+)` for a mix.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SandwichReport {
    pub holds: bool,
    /// Mixed points outside every state's dominated region.
    pub outside_union: Vec<Being>,
    /// Intersection corners no mixed point dominates.
    pub uncovered_corners: Vec<Being>,
}

/// Checks both sandwich bounds for a set of mixed points.
pub fn sandwich_check(points: &[Being], act: &Act) -> Result<SandwichReport> {
    let dimension = act.dimension();
    if let Some(bad) = points.iter().find(|b| b.dimension() != dimension) {
        return Err(Error::DimensionMismatch { expected: dimension, found: bad.dimension() });
    }
    let members: Vec<Being> = act.sets().iter().flat_map(|s| s.beings().iter().cloned()).collect();
    let outside_union: Vec<Being> =
        points.iter().filter(|b| !dominated_by_points(b, &members)).cloned().collect();
    let uncovered_corners: Vec<Being> = intersection_corners(act.sets())?
        .into_iter()
        .filter(|c| !dominated_by_points(c, points))
        .collect();
    Ok(SandwichReport {
        holds: outside_union.is_empty() && uncovered_corners.is_empty(),
        outside_union,
        uncovered_corners,
    })
}
