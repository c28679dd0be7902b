//! File formats and the command layer behind the `capmix` binary.
//!
//! Commands take the scenario text and return the document to write; the
//! binary only handles arguments, files and exit codes.

pub mod plot;
pub mod result;
pub mod scenario;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use crate::error::{Error, Result};
use crate::geometry::compare_points;
use crate::milp_export::export_finite_model;
use crate::mixing::{average_pf, Act, Mix, MixConfig, MixKind, DEFAULT_CAP};
use crate::properties::{
    check_consistency, check_expected_below_average, check_linearity, check_monotonicity_probs,
    check_monotonicity_sets, check_sure_domination_lower, check_sure_domination_upper, run_axiom_illustrations,
    PropertyId, PropertyReport,
};

pub use plot::{render_svg, staircase_vertices};
pub use result::{Comparison, ResultFile};
pub use scenario::{input_digest, parse_scenario, ProbabilityShift, Scenario};

/// Environment variable overriding the enumeration cap.
pub const CAP_ENV: &str = "CAPMIX_CAP";

/// Enumeration cap from `CAPMIX_CAP`, if set.
pub fn cap_from_env() -> Result<Option<u64>> {
    match std::env::var(CAP_ENV) {
        Err(_) => Ok(None),
        Ok(v) => v
            .trim()
            .parse::<u64>()
            .map(Some)
            .map_err(|_| Error::Parse { location: CAP_ENV.to_string(), message: format!("`{v}` is not a count") }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Average,
    Expected,
    Pf,
    Compare,
    Check,
    ExportMilp,
    Plot,
}

impl Command {
    pub const ALL: [Command; 7] = [
        Command::Average,
        Command::Expected,
        Command::Pf,
        Command::Compare,
        Command::Check,
        Command::ExportMilp,
        Command::Plot,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::Average => "average",
            Command::Expected => "expected",
            Command::Pf => "pf",
            Command::Compare => "compare",
            Command::Check => "check",
            Command::ExportMilp => "export-milp",
            Command::Plot => "plot",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownName { kind: "command", name: s.to_string() })
    }
}

/// Flags shared by all commands.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Options {
    pub act: Option<String>,
    pub acts: Option<(String, String)>,
    pub mix: Option<Mix>,
    pub property: Option<PropertyId>,
    pub cap: Option<u64>,
}

impl Options {
    fn config(&self) -> MixConfig {
        MixConfig { cap: self.cap.unwrap_or(DEFAULT_CAP) }
    }
}

/// Parses `A,B` into two act names.
pub fn parse_act_pair(s: &str) -> Result<(String, String)> {
    match s.split(',').map(str::trim).collect::<Vec<_>>().as_slice() {
        [a, b] if !a.is_empty() && !b.is_empty() => Ok((a.to_string(), b.to_string())),
        _ => Err(Error::Parse { location: "--acts".to_string(), message: format!("expected two names `A,B`, got `{s}`") }),
    }
}

/// Document produced by a command.
#[derive(Debug, Clone, PartialEq)]
pub struct Output {
    pub text: String,
    /// Some property report does not hold.
    pub violation_found: bool,
}

fn selected_act<'a>(scenario: &'a Scenario, opts: &Options) -> Result<&'a Act> {
    match &opts.act {
        Some(name) => scenario.act(name),
        None => Ok(&scenario.acts[0]),
    }
}

/// Runs one command on scenario text.
pub fn run(command: Command, text: &str, opts: &Options) -> Result<Output> {
    let started = Instant::now();
    let scenario = parse_scenario(text)?;
    let config = opts.config();
    let mut file = ResultFile::new(input_digest(text), command.name());
    let p = &scenario.probabilities;

    match command {
        Command::Average | Command::Expected | Command::Pf => {
            let act = selected_act(&scenario, opts)?;
            let set = match command {
                Command::Average => Mix::Average.compute(act, p, config)?,
                Command::Expected => Mix::Expected.compute(act, p, config)?,
                _ => average_pf(act, p, config)?,
            };
            file.act = Some(act.label().to_string());
            file.mix = Some(set.kind);
            file.points = set.points;
        }
        Command::Compare => {
            let (first, second) = match &opts.acts {
                Some((a, b)) => (scenario.act(a)?, scenario.act(b)?),
                None if scenario.acts.len() >= 2 => (&scenario.acts[0], &scenario.acts[1]),
                None => return Err(Error::Precondition("compare needs two acts".to_string())),
            };
            let mix = opts.mix.unwrap_or(Mix::Expected);
            let a = mix.compute(first, p, config)?.beings();
            let b = mix.compute(second, p, config)?.beings();
            let verdict = compare_points(&a, &b);
            file.mix = Some(MixKind::from(mix));
            file.comparison = Some(Comparison::new(first.label(), second.label(), a, b, verdict));
        }
        Command::Check => {
            let acts: Vec<&Act> = match &opts.act {
                Some(name) => vec![scenario.act(name)?],
                None => scenario.acts.iter().collect(),
            };
            for act in acts {
                file.reports.extend(check_reports(&scenario, act, opts, config)?);
            }
            file.mix = opts.mix.map(MixKind::from);
        }
        Command::ExportMilp => {
            let act = selected_act(&scenario, opts)?;
            let mut model = export_finite_model(act, p)?;
            if let Some(t) = &scenario.title {
                model.notes.push(format!("scenario: {t}"));
            }
            return Ok(Output { text: model.to_text(), violation_found: false });
        }
        Command::Plot => {
            let act = selected_act(&scenario, opts)?;
            let mix = opts.mix.unwrap_or(Mix::Expected);
            let set = mix.compute(act, p, config)?;
            let title = format!("{} mix of act {}", mix.name(), act.label());
            return Ok(Output { text: render_svg(act, &set, &title)?, violation_found: false });
        }
    }

    let violation_found = file.reports.iter().any(|r| !r.holds);
    file.elapsed_ms = started.elapsed().as_millis() as u64;
    Ok(Output { text: file.to_text(), violation_found })
}

fn mixes(opts: &Options) -> Vec<Mix> {
    match opts.mix {
        Some(m) => vec![m],
        None => vec![Mix::Expected, Mix::Average],
    }
}

/// Property reports for one act: the named property or the whole suite,
/// on the requested mix or both.
pub fn check_reports(scenario: &Scenario, act: &Act, opts: &Options, config: MixConfig) -> Result<Vec<PropertyReport>> {
    let p = &scenario.probabilities;
    let properties: Vec<PropertyId> = match opts.property {
        Some(id) => vec![id],
        None => PropertyId::ALL.to_vec(),
    };
    let mut out = Vec::new();
    for id in properties {
        match id {
            PropertyId::Consistency => match check_consistency(act, p, config) {
                Ok(r) => out.push(r),
                Err(Error::Precondition(why)) => out.push(PropertyReport::not_applicable(
                    id,
                    None,
                    format!("act {}", act.label()),
                    why,
                )),
                Err(e) => return Err(e),
            },
            PropertyId::SureDominationUpper => {
                for mix in mixes(opts) {
                    out.push(check_sure_domination_upper(act, p, mix, config)?);
                }
            }
            PropertyId::SureDominationLower => {
                for mix in mixes(opts) {
                    out.push(check_sure_domination_lower(&mix.compute(act, p, config)?, act)?);
                }
            }
            PropertyId::Linearity => {
                let shift = vec![1.0; act.dimension()];
                let scale = vec![2.0; act.dimension()];
                for mix in mixes(opts) {
                    out.push(check_linearity(act, p, &shift, &scale, mix, config)?);
                }
            }
            PropertyId::MonotonicitySets => {
                let pairs: Vec<(&Act, &Act)> = match &opts.acts {
                    Some((a, b)) => vec![(scenario.act(a)?, scenario.act(b)?)],
                    None if scenario.acts.len() == 1 || opts.act.is_some() => vec![(act, act)],
                    None => scenario
                        .acts
                        .iter()
                        .filter(|other| other.label() != act.label())
                        .map(|other| (act, other))
                        .collect(),
                };
                for (a, b) in pairs {
                    for mix in mixes(opts) {
                        out.push(check_monotonicity_sets(a, b, p, mix, config)?);
                    }
                }
            }
            PropertyId::MonotonicityProbs => {
                let shifts: Vec<ProbabilityShift> = match &scenario.probability_shift {
                    Some(s) => vec![s.clone()],
                    None => default_shifts(scenario),
                };
                for s in shifts {
                    for mix in mixes(opts) {
                        out.push(check_monotonicity_probs(act, p, s.from, s.to, s.mass, mix, config)?);
                    }
                }
            }
            PropertyId::ExpectedBelowAverage => out.push(check_expected_below_average(act, p, config)?),
            PropertyId::Axioms => out.push(run_axiom_illustrations(act)?),
        }
    }
    Ok(out)
}

/// Half of each state's mass moved to every other state.
fn default_shifts(scenario: &Scenario) -> Vec<ProbabilityShift> {
    let p = scenario.probabilities.as_slice();
    let mut out = Vec::new();
    for from in 0..p.len() {
        for to in 0..p.len() {
            if from != to && p[from] > 0.0 {
                out.push(ProbabilityShift { from, to, mass: p[from] / 2.0 });
            }
        }
    }
    out
}
