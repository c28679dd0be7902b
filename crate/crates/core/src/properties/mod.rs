//! Executable checks of the structural properties of the two mixes.
//!
//! Every check returns a [`PropertyReport`]. A report holds exactly when its
//! violation list is empty; each violation names a concrete point that the
//! [`geometry`](crate::geometry) predicates can confirm. Conditional
//! properties whose premise fails on the given instance are reported as not
//! applicable (and trivially holding) rather than failed.

pub mod random;

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::geometry::{
    approx_eq, compare_points, intersection_corners, undominated_members, Being, PreferenceVerdict, Side,
};
use crate::mixing::{average_set, expected_set, Act, Mix, MixConfig, MixKind, MixedSet, ProbabilityVector};

/// Named properties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum PropertyId {
    /// Singleton one-dimensional sets mix to the scalar expectation.
    Consistency,
    /// Mixed points lie in the union of the states' dominated regions.
    SureDominationUpper,
    /// Mixed points dominate the intersection of the states' dominated regions.
    SureDominationLower,
    /// Mixing commutes with positive shifts and scalings.
    Linearity,
    /// Dominating every state's set dominates the mix.
    MonotonicitySets,
    /// Moving mass to a dominating state dominates the mix.
    MonotonicityProbs,
    /// The expected set lies in the average set's dominated region.
    ExpectedBelowAverage,
    /// Greater-choice and fewer-choice comparisons between states.
    Axioms,
}

impl PropertyId {
    pub const ALL: [PropertyId; 8] = [
        PropertyId::Consistency,
        PropertyId::SureDominationUpper,
        PropertyId::SureDominationLower,
        PropertyId::Linearity,
        PropertyId::MonotonicitySets,
        PropertyId::MonotonicityProbs,
        PropertyId::ExpectedBelowAverage,
        PropertyId::Axioms,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PropertyId::Consistency => "consistency",
            PropertyId::SureDominationUpper => "sure-domination-upper",
            PropertyId::SureDominationLower => "sure-domination-lower",
            PropertyId::Linearity => "linearity",
            PropertyId::MonotonicitySets => "monotonicity-sets",
            PropertyId::MonotonicityProbs => "monotonicity-probs",
            PropertyId::ExpectedBelowAverage => "expected-below-average",
            PropertyId::Axioms => "axioms",
        }
    }
}

impl fmt::Display for PropertyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for PropertyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        PropertyId::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "property", name: s.to_string() })
    }
}

/// A point that breaks a property, with the reason.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub point: Being,
    pub reason: String,
}

/// Outcome of one property check on one instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropertyReport {
    pub property: PropertyId,
    /// Mix the property was evaluated on, when it concerns a single mix.
    pub mix: Option<MixKind>,
    pub instance: String,
    /// False when the property's premise does not hold on this instance.
    pub applicable: bool,
    pub holds: bool,
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl PropertyReport {
    fn new(property: PropertyId, mix: Option<MixKind>, instance: impl Into<String>, violations: Vec<Violation>) -> Self {
        PropertyReport {
            property,
            mix,
            instance: instance.into(),
            applicable: true,
            holds: violations.is_empty(),
            violations,
            notes: Vec::new(),
        }
    }

    pub(crate) fn not_applicable(property: PropertyId, mix: Option<MixKind>, instance: impl Into<String>, why: String) -> Self {
        PropertyReport {
            property,
            mix,
            instance: instance.into(),
            applicable: false,
            holds: true,
            violations: Vec::new(),
            notes: vec![why],
        }
    }

    fn with_note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }
}

fn mix_kind(mix: Mix) -> MixKind {
    MixKind::from(mix)
}

fn describe(act: &Act, p: &ProbabilityVector) -> String {
    let sizes: Vec<String> = act.sets().iter().map(|s| s.len().to_string()).collect();
    let probs: Vec<String> = p.as_slice().iter().map(|x| crate::format::fmt_num(*x)).collect();
    format!(
        "act {} ({} states, dimension {}, set sizes [{}], p = [{}])",
        act.label(),
        act.states(),
        act.dimension(),
        sizes.join(", "),
        probs.join(", ")
    )
}

fn violations_outside(points: &[Being], region: &[Being], reason: &str) -> Vec<Violation> {
    undominated_members(points, region)
        .into_iter()
        .map(|i| Violation { point: points[i].clone(), reason: reason.to_string() })
        .collect()
}

/// Singleton one-dimensional sets: both mixes reduce to `sum_l p_l b_l`.
pub fn check_consistency(act: &Act, p: &ProbabilityVector, config: MixConfig) -> Result<PropertyReport> {
    if act.dimension() != 1 || act.sets().iter().any(|s| s.len() != 1) {
        return Err(Error::Precondition(
            "consistency needs singleton capability sets of dimension one".to_string(),
        ));
    }
    let scalar: f64 = act
        .sets()
        .iter()
        .zip(p.as_slice())
        .map(|(s, pl)| pl * s.beings()[0].coords()[0])
        .sum();
    let target = Being::new(vec![scalar.max(0.0)])?;
    let mut violations = Vec::new();
    for mix in [Mix::Expected, Mix::Average] {
        let set = mix.compute(act, p, config)?;
        for point in set.beings() {
            if !approx_eq(&point, &target) {
                violations.push(Violation {
                    point,
                    reason: format!("{} mix differs from the scalar expectation {}", mix.name(), target),
                });
            }
        }
        if set.len() != 1 {
            let reason = format!("{} mix has {} points instead of one", mix.name(), set.len());
            violations.push(Violation { point: target.clone(), reason });
        }
    }
    Ok(PropertyReport::new(PropertyId::Consistency, None, describe(act, p), violations)
        .with_note(format!("scalar expectation {target}")))
}

/// Every mixed point lies in the union of the states' dominated regions.
/// Holds for the expected mix; the average mix can break it.
pub fn check_sure_domination_upper(
    act: &Act,
    p: &ProbabilityVector,
    mix: Mix,
    config: MixConfig,
) -> Result<PropertyReport> {
    let set = mix.compute(act, p, config)?;
    Ok(sure_domination_upper_of(&set, act, &describe(act, p)))
}

fn sure_domination_upper_of(set: &MixedSet, act: &Act, instance: &str) -> PropertyReport {
    let members: Vec<Being> = act.sets().iter().flat_map(|s| s.beings().iter().cloned()).collect();
    let violations = violations_outside(&set.beings(), &members, "not dominated by any state's capability set");
    PropertyReport::new(PropertyId::SureDominationUpper, Some(set.kind), instance, violations)
}

/// Every corner of the intersection of the states' dominated regions is
/// dominated by some mixed point.
pub fn check_sure_domination_lower(set: &MixedSet, act: &Act) -> Result<PropertyReport> {
    let corners = intersection_corners(act.sets())?;
    let violations = violations_outside(&corners, &set.beings(), "intersection corner not dominated by the mix");
    Ok(PropertyReport::new(
        PropertyId::SureDominationLower,
        Some(set.kind),
        format!("act {} ({} corners)", act.label(), corners.len()),
        violations,
    ))
}

fn unmatched(from: &[Being], to: &[Being], reason: &str) -> Vec<Violation> {
    from.iter()
        .filter(|x| !to.iter().any(|y| approx_eq(x, y)))
        .map(|x| Violation { point: x.clone(), reason: reason.to_string() })
        .collect()
}

/// Mixing commutes with adding `shift` to every being and with multiplying
/// every being componentwise by `scale`.
pub fn check_linearity(
    act: &Act,
    p: &ProbabilityVector,
    shift: &[f64],
    scale: &[f64],
    mix: Mix,
    config: MixConfig,
) -> Result<PropertyReport> {
    let dimension = act.dimension();
    for v in [shift, scale] {
        if v.len() != dimension {
            return Err(Error::DimensionMismatch { expected: dimension, found: v.len() });
        }
    }
    for (index, &value) in scale.iter().enumerate() {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::NonPositiveScale { index, value });
        }
    }
    let base = mix.compute(act, p, config)?.beings();

    let apply = |b: &Being, f: &dyn Fn(usize, f64) -> f64| -> Result<Being> {
        Being::new(b.coords().iter().enumerate().map(|(h, &x)| f(h, x)).collect())
    };
    let add = |h: usize, x: f64| x + shift[h];
    let mul = |h: usize, x: f64| x * scale[h];

    let shifted_act = act.map_beings(|b| apply(b, &add))?;
    let scaled_act = act.map_beings(|b| apply(b, &mul))?;
    let of_shifted = mix.compute(&shifted_act, p, config)?.beings();
    let of_scaled = mix.compute(&scaled_act, p, config)?.beings();
    let base_shifted = base.iter().map(|b| apply(b, &add)).collect::<Result<Vec<_>>>()?;
    let base_scaled = base.iter().map(|b| apply(b, &mul)).collect::<Result<Vec<_>>>()?;

    let mut violations = Vec::new();
    violations.extend(unmatched(&of_shifted, &base_shifted, "mix of shifted sets has no counterpart in shifted mix"));
    violations.extend(unmatched(&base_shifted, &of_shifted, "shifted mix point missing from mix of shifted sets"));
    violations.extend(unmatched(&of_scaled, &base_scaled, "mix of scaled sets has no counterpart in scaled mix"));
    violations.extend(unmatched(&base_scaled, &of_scaled, "scaled mix point missing from mix of scaled sets"));

    let fmt = |v: &[f64]| v.iter().map(|x| crate::format::fmt_num(*x)).collect::<Vec<_>>().join(", ");
    Ok(PropertyReport::new(PropertyId::Linearity, Some(mix_kind(mix)), describe(act, p), violations)
        .with_note(format!("shift ({}), scale ({})", fmt(shift), fmt(scale))))
}

/// If every `A_l` lies in `B_l - R+`, the A-mix lies in the B-mix's
/// dominated region.
pub fn check_monotonicity_sets(
    act_a: &Act,
    act_b: &Act,
    p: &ProbabilityVector,
    mix: Mix,
    config: MixConfig,
) -> Result<PropertyReport> {
    if act_a.states() != act_b.states() {
        return Err(Error::StateCountMismatch { expected: act_a.states(), found: act_b.states() });
    }
    if act_a.dimension() != act_b.dimension() {
        return Err(Error::DimensionMismatch { expected: act_a.dimension(), found: act_b.dimension() });
    }
    let instance = format!("{} vs {}", describe(act_a, p), act_b.label());
    for (l, (a, b)) in act_a.sets().iter().zip(act_b.sets()).enumerate() {
        if !undominated_members(a.beings(), b.beings()).is_empty() {
            return Ok(PropertyReport::not_applicable(
                PropertyId::MonotonicitySets,
                Some(mix_kind(mix)),
                instance,
                format!("state {} of {} is not dominated by {}", l + 1, act_a.label(), act_b.label()),
            ));
        }
    }
    let lower = mix.compute(act_a, p, config)?.beings();
    let upper = mix.compute(act_b, p, config)?.beings();
    let violations = violations_outside(&lower, &upper, "not dominated by the dominating act's mix");
    Ok(PropertyReport::new(PropertyId::MonotonicitySets, Some(mix_kind(mix)), instance, violations))
}

/// If `A_from` lies in `A_to - R+`, moving `mass` from state `from` to
/// state `to` yields a mix that dominates the original one. Holds for the
/// expected mix; the average mix can break it.
pub fn check_monotonicity_probs(
    act: &Act,
    p: &ProbabilityVector,
    from: usize,
    to: usize,
    mass: f64,
    mix: Mix,
    config: MixConfig,
) -> Result<PropertyReport> {
    let shifted = p.shifted(from, to, mass)?;
    let instance = format!(
        "{}; mass {} from state {} to state {}",
        describe(act, p),
        crate::format::fmt_num(mass),
        from + 1,
        to + 1
    );
    let sets = act.sets();
    if !undominated_members(sets[from].beings(), sets[to].beings()).is_empty() {
        return Ok(PropertyReport::not_applicable(
            PropertyId::MonotonicityProbs,
            Some(mix_kind(mix)),
            instance,
            format!("state {} is not dominated by state {}", from + 1, to + 1),
        ));
    }
    let before = mix.compute(act, p, config)?.beings();
    let after = mix.compute(act, &shifted, config)?.beings();
    let violations = violations_outside(&before, &after, "not dominated by the mix after the probability shift");
    let fmt = |v: &[Being]| v.iter().map(|b| b.to_string()).collect::<Vec<_>>().join(" ");
    Ok(PropertyReport::new(PropertyId::MonotonicityProbs, Some(mix_kind(mix)), instance, violations)
        .with_note(format!("before: {}", fmt(&before)))
        .with_note(format!("after: {}", fmt(&after))))
}

/// The expected set lies in the average set's dominated region.
pub fn check_expected_below_average(act: &Act, p: &ProbabilityVector, config: MixConfig) -> Result<PropertyReport> {
    let expected = expected_set(act, p, config)?.beings();
    let average = average_set(act, p, config)?.beings();
    let violations = violations_outside(&expected, &average, "expected point not dominated by the average set");
    Ok(PropertyReport::new(PropertyId::ExpectedBelowAverage, Some(MixKind::Expected), describe(act, p), violations))
}

/// Verdicts of the set-preference axioms for one ordered pair of states.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AxiomVerdicts {
    pub state: usize,
    pub other: usize,
    /// `A_state` compared with `A_state ∪ A_other`.
    pub greater_choice: PreferenceVerdict,
    /// Intersection corners of the pair compared with `A_state`.
    pub fewer_choice: PreferenceVerdict,
}

/// For every ordered pair of states, confirms that the union of the two sets
/// is at least as good as the first, and that the first is at least as good
/// as the intersection of the two dominated regions.
pub fn axiom_verdicts(act: &Act) -> Result<Vec<AxiomVerdicts>> {
    let sets = act.sets();
    let mut out = Vec::new();
    for l in 0..sets.len() {
        for lp in 0..sets.len() {
            if l == lp && sets.len() > 1 {
                continue;
            }
            let union = sets[l].union(&sets[lp])?;
            let corners = intersection_corners(&[sets[l].clone(), sets[lp].clone()])?;
            out.push(AxiomVerdicts {
                state: l,
                other: lp,
                greater_choice: compare_points(sets[l].beings(), union.beings()),
                fewer_choice: compare_points(&corners, sets[l].beings()),
            });
        }
    }
    Ok(out)
}

pub fn run_axiom_illustrations(act: &Act) -> Result<PropertyReport> {
    let verdicts = axiom_verdicts(act)?;
    let sets = act.sets();
    let mut violations = Vec::new();
    let mut notes = Vec::new();
    for v in &verdicts {
        notes.push(format!(
            "states {} and {}: union vs state {}: {}; state {} vs intersection: {}",
            v.state + 1,
            v.other + 1,
            v.state + 1,
            v.greater_choice,
            v.state + 1,
            v.fewer_choice.reversed()
        ));
        if !v.greater_choice.at_least_as_good(Side::Second) {
            let union = sets[v.state].union(&sets[v.other])?;
            violations.extend(violations_outside(
                sets[v.state].beings(),
                union.beings(),
                "greater choice: member not dominated by the union",
            ));
        }
        if !v.fewer_choice.at_least_as_good(Side::Second) {
            let corners = intersection_corners(&[sets[v.state].clone(), sets[v.other].clone()])?;
            violations.extend(violations_outside(
                &corners,
                sets[v.state].beings(),
                "fewer choice: intersection corner not dominated by the state's set",
            ));
        }
    }
    let mut report = PropertyReport::new(
        PropertyId::Axioms,
        None,
        format!("act {} ({} states)", act.label(), act.states()),
        violations,
    );
    report.notes = notes;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::CapabilitySet;

    fn b(c: &[f64]) -> Being {
        Being::new(c.to_vec()).unwrap()
    }

    fn act(sets: &[&[&[f64]]]) -> Act {
        Act::new("f", sets.iter().map(|rows| CapabilitySet::from_rows(rows).unwrap()).collect()).unwrap()
    }

    fn probs(p: &[f64]) -> ProbabilityVector {
        ProbabilityVector::new(p.to_vec()).unwrap()
    }

    fn example2() -> Act {
        act(&[&[&[2.0, 7.0], &[3.0, 4.0]], &[&[4.0, 3.0], &[7.0, 2.0]]])
    }

    fn example3() -> Act {
        act(&[
            &[&[3.0, 10.0], &[4.0, 5.0], &[7.0, 3.0], &[8.0, 1.0]],
            &[&[2.0, 5.0], &[5.0, 4.0], &[10.0, 2.0]],
        ])
    }

    fn cfg() -> MixConfig {
        MixConfig::default()
    }

    #[test]
    fn property_names_round_trip() {
        for id in PropertyId::ALL {
            assert_eq!(id.name().parse::<PropertyId>().unwrap(), id);
        }
        assert!("nope".parse::<PropertyId>().is_err());
    }

    #[test]
    fn consistency_examples() {
        let r = check_consistency(&act(&[&[&[5.0]], &[&[9.0]]]), &probs(&[0.5, 0.5]), cfg()).unwrap();
        assert!(r.holds);
        let r = check_consistency(&act(&[&[&[3.0]]]), &probs(&[1.0]), cfg()).unwrap();
        assert!(r.holds);
        let r = check_consistency(&act(&[&[&[0.0]], &[&[10.0]], &[&[20.0]]]), &probs(&[0.2, 0.5, 0.3]), cfg()).unwrap();
        assert!(r.holds);
        assert_eq!(r.notes, vec!["scalar expectation (11)".to_string()]);
        assert!(matches!(
            check_consistency(&example2(), &probs(&[0.5, 0.5]), cfg()),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn upper_domination_expected_holds_average_fails() {
        let r = check_sure_domination_upper(&example3(), &probs(&[0.8, 0.2]), Mix::Expected, cfg()).unwrap();
        assert!(r.holds);
        let r = check_sure_domination_upper(&example2(), &probs(&[0.5, 0.5]), Mix::Average, cfg()).unwrap();
        assert!(!r.holds);
        assert!(r.violations.iter().any(|v| approx_eq(&v.point, &b(&[4.5, 4.5]))));
    }

    #[test]
    fn upper_domination_land_grants() {
        let valley: Vec<Vec<f64>> = (0..=10).map(|r| vec![r as f64, 0.0]).collect();
        let terrace: Vec<Vec<f64>> = (0..=10).map(|g| vec![0.0, g as f64]).collect();
        let a = Act::new(
            "grants",
            vec![CapabilitySet::from_rows(&valley).unwrap(), CapabilitySet::from_rows(&terrace).unwrap()],
        )
        .unwrap();
        let r = check_sure_domination_upper(&a, &probs(&[0.5, 0.5]), Mix::Average, cfg()).unwrap();
        assert!(!r.holds);
        assert!(r.violations.iter().any(|v| approx_eq(&v.point, &b(&[5.0, 5.0]))));
        let r = check_sure_domination_upper(&a, &probs(&[0.5, 0.5]), Mix::Expected, cfg()).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn lower_domination_examples() {
        let e = expected_set(&example2(), &probs(&[0.5, 0.5]), cfg()).unwrap();
        assert!(check_sure_domination_lower(&e, &example2()).unwrap().holds);
        let e = expected_set(&example3(), &probs(&[0.8, 0.2]), cfg()).unwrap();
        assert!(check_sure_domination_lower(&e, &example3()).unwrap().holds);
        let single = act(&[&[&[1.0, 2.0], &[2.0, 1.0]]]);
        let e = expected_set(&single, &probs(&[1.0]), cfg()).unwrap();
        assert!(check_sure_domination_lower(&e, &single).unwrap().holds);
        let avg = average_set(&example2(), &probs(&[0.5, 0.5]), cfg()).unwrap();
        assert!(check_sure_domination_lower(&avg, &example2()).unwrap().holds);
    }

    #[test]
    fn linearity_examples() {
        let r = check_linearity(&example3(), &probs(&[0.8, 0.2]), &[1.0, 1.0], &[1.0, 1.0], Mix::Expected, cfg()).unwrap();
        assert!(r.holds, "{r:?}");
        let r = check_linearity(&example3(), &probs(&[0.8, 0.2]), &[0.0, 0.0], &[1.0, 1.0], Mix::Average, cfg()).unwrap();
        assert!(r.holds);
        let r = check_linearity(&example2(), &probs(&[0.5, 0.5]), &[0.0, 0.0], &[2.0, 1.0], Mix::Expected, cfg()).unwrap();
        assert!(r.holds);
        assert!(matches!(
            check_linearity(&example2(), &probs(&[0.5, 0.5]), &[0.0, 0.0], &[0.0, 1.0], Mix::Expected, cfg()),
            Err(Error::NonPositiveScale { index: 0, .. })
        ));
    }

    #[test]
    fn monotonicity_sets_examples() {
        let p = probs(&[0.8, 0.2]);
        let r = check_monotonicity_sets(&example3(), &example3(), &p, Mix::Expected, cfg()).unwrap();
        assert!(r.applicable && r.holds);
        let grown = act(&[
            &[&[3.0, 10.0], &[4.0, 5.0], &[7.0, 3.0], &[8.0, 1.0], &[9.0, 9.0]],
            &[&[2.0, 5.0], &[5.0, 4.0], &[10.0, 2.0]],
        ]);
        let r = check_monotonicity_sets(&example3(), &grown, &p, Mix::Expected, cfg()).unwrap();
        assert!(r.applicable && r.holds);
        let r = check_monotonicity_sets(&grown, &example3(), &p, Mix::Expected, cfg()).unwrap();
        assert!(!r.applicable && r.holds);
    }

    #[test]
    fn monotonicity_probs_counterexample() {
        let a = act(&[&[&[0.0, 1.0]], &[&[0.0, 1.0], &[1.0, 0.0]]]);
        let p = probs(&[0.5, 0.5]);
        let avg = check_monotonicity_probs(&a, &p, 0, 1, 0.25, Mix::Average, cfg()).unwrap();
        assert!(avg.applicable);
        assert!(!avg.holds);
        assert_eq!(avg.violations.len(), 1);
        assert!(approx_eq(&avg.violations[0].point, &b(&[0.5, 0.5])));

        let exp = check_monotonicity_probs(&a, &p, 0, 1, 0.25, Mix::Expected, cfg()).unwrap();
        assert!(exp.applicable && exp.holds);
        let full = check_monotonicity_probs(&a, &p, 0, 1, 0.5, Mix::Expected, cfg()).unwrap();
        assert!(full.holds);

        let reversed = check_monotonicity_probs(&a, &p, 1, 0, 0.25, Mix::Expected, cfg()).unwrap();
        assert!(!reversed.applicable);
        assert!(check_monotonicity_probs(&a, &p, 0, 1, 0.75, Mix::Expected, cfg()).is_err());
    }

    #[test]
    fn expected_below_average_examples() {
        assert!(check_expected_below_average(&example2(), &probs(&[0.5, 0.5]), cfg()).unwrap().holds);
        assert!(check_expected_below_average(&example3(), &probs(&[0.8, 0.2]), cfg()).unwrap().holds);
        let singles = act(&[&[&[1.0, 4.0]], &[&[3.0, 2.0]]]);
        let p = probs(&[0.5, 0.5]);
        let e = expected_set(&singles, &p, cfg()).unwrap().beings();
        let a = average_set(&singles, &p, cfg()).unwrap().beings();
        assert!(check_expected_below_average(&singles, &p, cfg()).unwrap().holds);
        // (1,4) and (3,2) are incomparable, so the chain caps one of them.
        assert!(!crate::geometry::same_point_set(&e, &a));
        let ordered = act(&[&[&[1.0, 1.0]], &[&[3.0, 2.0]]]);
        let e = expected_set(&ordered, &p, cfg()).unwrap().beings();
        let a = average_set(&ordered, &p, cfg()).unwrap().beings();
        assert!(crate::geometry::same_point_set(&e, &a));
    }

    #[test]
    fn axioms_example2_and_identical_sets() {
        let r = run_axiom_illustrations(&example2()).unwrap();
        assert!(r.holds);
        assert_eq!(r.notes.len(), 2);

        let same = act(&[&[&[1.0, 2.0], &[2.0, 1.0]], &[&[1.0, 2.0], &[2.0, 1.0]]]);
        for v in axiom_verdicts(&same).unwrap() {
            assert_eq!(v.greater_choice, PreferenceVerdict::Equivalent);
            assert_eq!(v.fewer_choice, PreferenceVerdict::Equivalent);
        }
    }

    #[test]
    fn axioms_union_strictly_preferred() {
        let a = act(&[
            &[&[12.0, 1.0], &[10.0, 2.0], &[5.0, 3.0], &[4.0, 6.0], &[3.5, 7.5], &[2.0, 8.0]],
            &[&[13.0, 2.0], &[11.0, 3.0], &[5.0, 9.0]],
        ]);
        let verdicts = axiom_verdicts(&a).unwrap();
        let first = verdicts.iter().find(|v| v.state == 0).unwrap();
        assert_eq!(first.greater_choice, PreferenceVerdict::StrictlyPreferred(Side::Second));
        assert!(run_axiom_illustrations(&a).unwrap().holds);
    }
}
