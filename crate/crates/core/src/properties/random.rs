//! Seeded random instances and the randomized property suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::Result;
use crate::geometry::{Being, CapabilitySet};
use crate::mixing::{average_set, expected_set, Act, Mix, MixConfig, ProbabilityVector};

use super::{
    check_expected_below_average, check_linearity, check_monotonicity_probs, check_monotonicity_sets,
    check_sure_domination_lower, check_sure_domination_upper, PropertyId, PropertyReport,
};

/// Size limits for generated acts. Coordinates are integers in `0..=max_coord`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InstanceShape {
    pub max_states: usize,
    pub max_dimension: usize,
    pub max_set_size: usize,
    pub max_coord: u32,
}

impl Default for InstanceShape {
    fn default() -> Self {
        InstanceShape { max_states: 3, max_dimension: 3, max_set_size: 4, max_coord: 10 }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_being<R: Rng>(rng: &mut R, dimension: usize, max_coord: u32) -> Being {
    Being::new((0..dimension).map(|_| rng.random_range(0..=max_coord) as f64).collect())
        .expect("non-negative integer coordinates")
}

fn random_set<R: Rng>(rng: &mut R, dimension: usize, max_size: usize, max_coord: u32) -> CapabilitySet {
    let size = rng.random_range(1..=max_size.max(1));
    CapabilitySet::new((0..size).map(|_| random_being(rng, dimension, max_coord)).collect())
        .expect("non-empty set of equal dimension")
}

/// Act with exactly `states` states of dimension `dimension`.
pub fn random_act_sized<R: Rng>(rng: &mut R, states: usize, dimension: usize, shape: InstanceShape) -> Act {
    let sets = (0..states).map(|_| random_set(rng, dimension, shape.max_set_size, shape.max_coord)).collect();
    Act::new("random", sets).expect("generated sets share a dimension")
}

/// Act with state count and dimension drawn from the shape's limits.
pub fn random_act<R: Rng>(rng: &mut R, shape: InstanceShape) -> Act {
    let states = rng.random_range(1..=shape.max_states.max(1));
    let dimension = rng.random_range(1..=shape.max_dimension.max(1));
    random_act_sized(rng, states, dimension, shape)
}

/// Probabilities uniform on the simplex (normalised exponential draws).
pub fn random_probs<R: Rng>(rng: &mut R, states: usize) -> ProbabilityVector {
    let draws: Vec<f64> = (0..states).map(|_| -(1.0 - rng.random::<f64>()).ln()).collect();
    let total: f64 = draws.iter().sum();
    let mut probs: Vec<f64> = if total > 0.0 {
        draws.iter().map(|d| d / total).collect()
    } else {
        vec![1.0 / states as f64; states]
    };
    let head: f64 = probs[..states - 1].iter().sum();
    probs[states - 1] = (1.0 - head).max(0.0);
    ProbabilityVector::new(probs).expect("normalised draws")
}

fn raise<R: Rng>(rng: &mut R, b: &Being) -> Being {
    Being::new(b.coords().iter().map(|x| x + rng.random_range(0..=2u32) as f64).collect()).expect("raised coordinates")
}

/// Set whose dominated region contains that of `set`: every member raised
/// by a random non-negative integer, plus possibly one fresh point.
pub fn dominating_set<R: Rng>(rng: &mut R, set: &CapabilitySet, max_coord: u32) -> CapabilitySet {
    let mut beings: Vec<Being> = set.beings().iter().map(|b| raise(rng, b)).collect();
    if rng.random_bool(0.5) {
        beings.push(random_being(rng, set.dimension(), max_coord));
    }
    CapabilitySet::new(beings).expect("non-empty")
}

/// Act dominating `act` state by state.
pub fn dominating_act<R: Rng>(rng: &mut R, act: &Act, max_coord: u32) -> Act {
    let sets = act.sets().iter().map(|s| dominating_set(rng, s, max_coord)).collect();
    Act::new("dominating", sets).expect("same shape")
}

/// Copy of `act` where state `to` also contains a raised copy of state
/// `from`, so that `A_from ⊆ A_to - R+`.
pub fn with_dominating_state<R: Rng>(rng: &mut R, act: &Act, from: usize, to: usize) -> Act {
    let mut sets = act.sets().to_vec();
    let lifted: Vec<Being> = sets[from].beings().iter().map(|b| raise(rng, b)).collect();
    let mut beings = sets[to].beings().to_vec();
    beings.extend(lifted);
    sets[to] = CapabilitySet::new(beings).expect("non-empty");
    Act::new(act.label(), sets).expect("same shape")
}

/// Per-property counts from a randomized run.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SuiteTally {
    pub property: String,
    pub checked: usize,
    pub applicable: usize,
    pub failed: usize,
}

/// Outcome of [`randomized_suite`].
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct SuiteOutcome {
    pub instances: usize,
    pub tallies: Vec<SuiteTally>,
    pub failures: Vec<PropertyReport>,
}

impl SuiteOutcome {
    fn record(&mut self, report: PropertyReport) {
        let key = match report.mix {
            Some(kind) => format!("{} ({})", report.property, mix_label(kind)),
            None => report.property.to_string(),
        };
        let pos = match self.tallies.iter().position(|t| t.property == key) {
            Some(i) => i,
            None => {
                self.tallies.push(SuiteTally { property: key, ..SuiteTally::default() });
                self.tallies.len() - 1
            }
        };
        let tally = &mut self.tallies[pos];
        tally.checked += 1;
        if report.applicable {
            tally.applicable += 1;
        }
        if !report.holds {
            tally.failed += 1;
            self.failures.push(report);
        }
    }

    pub fn all_hold(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn tally(&self, property: PropertyId, mix: Option<Mix>) -> Option<&SuiteTally> {
        let key = match mix {
            Some(m) => format!("{} ({})", property, m.name()),
            None => property.to_string(),
        };
        self.tallies.iter().find(|t| t.property == key)
    }
}

fn mix_label(kind: crate::mixing::MixKind) -> &'static str {
    match kind {
        crate::mixing::MixKind::Expected => "expected",
        _ => "average",
    }
}

/// Runs the properties that hold in general on `instances` random acts:
/// upper domination, probability monotonicity and the expected/average
/// comparison for the expected mix, and lower domination, linearity and set
/// monotonicity for both mixes. Linearity uses the shift `(1, .., 1)` and
/// the scale `(2, .., 2)`.
pub fn randomized_suite(seed: u64, instances: usize, shape: InstanceShape, config: MixConfig) -> Result<SuiteOutcome> {
    let mut rng = rng_from_seed(seed);
    let mut outcome = SuiteOutcome { instances, ..SuiteOutcome::default() };
    for _ in 0..instances {
        let act = random_act(&mut rng, shape);
        let p = random_probs(&mut rng, act.states());
        let dimension = act.dimension();

        outcome.record(check_sure_domination_upper(&act, &p, Mix::Expected, config)?);
        outcome.record(check_sure_domination_lower(&expected_set(&act, &p, config)?, &act)?);
        outcome.record(check_sure_domination_lower(&average_set(&act, &p, config)?, &act)?);

        let shift = vec![1.0; dimension];
        let scale = vec![2.0; dimension];
        let upper = dominating_act(&mut rng, &act, shape.max_coord);
        for mix in [Mix::Expected, Mix::Average] {
            outcome.record(check_linearity(&act, &p, &shift, &scale, mix, config)?);
            outcome.record(check_monotonicity_sets(&act, &upper, &p, mix, config)?);
        }

        if act.states() >= 2 {
            let from = rng.random_range(0..act.states());
            let mut to = rng.random_range(0..act.states() - 1);
            if to >= from {
                to += 1;
            }
            let lifted = with_dominating_state(&mut rng, &act, from, to);
            let p_from = p.as_slice()[from];
            if p_from > 0.0 {
                let mass = if rng.random_bool(0.25) { p_from } else { p_from * (1.0 - rng.random::<f64>()) };
                outcome.record(check_monotonicity_probs(&lifted, &p, from, to, mass, Mix::Expected, config)?);
            }
        }

        outcome.record(check_expected_below_average(&act, &p, config)?);
    }
    Ok(outcome)
}
