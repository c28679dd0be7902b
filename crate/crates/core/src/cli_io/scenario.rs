//! Scenario files: parsing with located errors and a canonical writer.
//!
//! Layout (JSON, `version: 1`):
//!
//! ```json
//! {
//!   "version": 1,
//!   "title": "two states",
//!   "dimension": 2,
//!   "states": ["s1", "s2"],
//!   "probabilities": [0.5, 0.5],
//!   "acts": [
//!     {
//!       "name": "f",
//!       "sets": [
//!         [[2, 7], [3, 4]],
//!         [[4, 3], [7, 2]]
//!       ]
//!     }
//!   ]
//! }
//! ```
//!
//! `title`, `source` and `description` are optional, as is
//! `probability_shift` (`{"from": "s1", "to": "s2", "mass": 0.25}`), which
//! parameterises the probability-monotonicity check.

use serde::Deserialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::format::fmt_num;
use crate::geometry::{Being, CapabilitySet};
use crate::mixing::{Act, ProbabilityVector};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScenario {
    version: u32,
    #[serde(default)]
    title: Option<String>,
    #[serde(default)]
    source: Option<String>,
    #[serde(default)]
    description: Option<String>,
    dimension: usize,
    states: Vec<String>,
    probabilities: Vec<f64>,
    acts: Vec<RawAct>,
    #[serde(default)]
    probability_shift: Option<RawShift>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawAct {
    name: String,
    sets: Vec<Vec<Vec<f64>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawShift {
    from: String,
    to: String,
    mass: f64,
}

/// Mass moved between two states by the probability-monotonicity check.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityShift {
    pub from: usize,
    pub to: usize,
    pub mass: f64,
}

/// A validated scenario.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub title: Option<String>,
    pub source: Option<String>,
    pub description: Option<String>,
    pub dimension: usize,
    pub states: Vec<String>,
    pub probabilities: ProbabilityVector,
    pub acts: Vec<Act>,
    pub probability_shift: Option<ProbabilityShift>,
}

fn at(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

fn syntax_error(e: serde_json::Error) -> Error {
    let full = e.to_string();
    let message = match full.rfind(" at line ") {
        Some(i) => full[..i].to_string(),
        None => full,
    };
    at(format!("line {}, column {}", e.line(), e.column()), message)
}

/// Parses and validates a scenario document.
pub fn parse_scenario(text: &str) -> Result<Scenario> {
    let raw: RawScenario = serde_json::from_str(text).map_err(syntax_error)?;
    if raw.version != FORMAT_VERSION {
        return Err(at("version", format!("unsupported version {}, expected {FORMAT_VERSION}", raw.version)));
    }
    if raw.dimension == 0 {
        return Err(at("dimension", "dimension must be at least 1"));
    }
    if raw.states.is_empty() {
        return Err(at("states", "at least one state is required"));
    }
    for (i, name) in raw.states.iter().enumerate() {
        if raw.states[..i].contains(name) {
            return Err(at(format!("states[{i}]"), format!("duplicate state `{name}`")));
        }
    }
    if raw.probabilities.len() != raw.states.len() {
        return Err(at(
            "probabilities",
            format!("{} probabilities for {} states", raw.probabilities.len(), raw.states.len()),
        ));
    }
    let probabilities = ProbabilityVector::new(raw.probabilities).map_err(|e| at("probabilities", e.to_string()))?;
    if raw.acts.is_empty() {
        return Err(at("acts", "at least one act is required"));
    }

    let mut acts = Vec::with_capacity(raw.acts.len());
    for (a, raw_act) in raw.acts.into_iter().enumerate() {
        if acts.iter().any(|x: &Act| x.label() == raw_act.name) {
            return Err(at(format!("acts[{a}].name"), format!("duplicate act `{}`", raw_act.name)));
        }
        if raw_act.sets.len() != raw.states.len() {
            return Err(at(
                format!("acts[{a}].sets"),
                format!("{} capability sets for {} states", raw_act.sets.len(), raw.states.len()),
            ));
        }
        let mut sets = Vec::with_capacity(raw_act.sets.len());
        for (l, rows) in raw_act.sets.into_iter().enumerate() {
            if rows.is_empty() {
                return Err(at(format!("acts[{a}].sets[{l}]"), "capability set is empty"));
            }
            let mut beings = Vec::with_capacity(rows.len());
            for (n, row) in rows.into_iter().enumerate() {
                if row.len() != raw.dimension {
                    return Err(at(
                        format!("acts[{a}].sets[{l}][{n}]"),
                        format!("being has {} coordinates, dimension is {}", row.len(), raw.dimension),
                    ));
                }
                let being = Being::new(row).map_err(|e| match e {
                    Error::InvalidCoordinate { index, .. } => {
                        at(format!("acts[{a}].sets[{l}][{n}][{index}]"), e.to_string())
                    }
                    other => at(format!("acts[{a}].sets[{l}][{n}]"), other.to_string()),
                })?;
                beings.push(being);
            }
            let set = CapabilitySet::new(beings).map_err(|e| at(format!("acts[{a}].sets[{l}]"), e.to_string()))?;
            sets.push(set.with_label(raw.states[l].clone()));
        }
        acts.push(Act::new(raw_act.name, sets).map_err(|e| at(format!("acts[{a}]"), e.to_string()))?);
    }

    let probability_shift = match raw.probability_shift {
        None => None,
        Some(s) => {
            let find = |field: &str, name: &str| {
                raw.states
                    .iter()
                    .position(|x| x == name)
                    .ok_or_else(|| at(format!("probability_shift.{field}"), format!("unknown state `{name}`")))
            };
            let from = find("from", &s.from)?;
            let to = find("to", &s.to)?;
            probabilities
                .shifted(from, to, s.mass)
                .map_err(|e| at("probability_shift", e.to_string()))?;
            Some(ProbabilityShift { from, to, mass: s.mass })
        }
    };

    Ok(Scenario {
        title: raw.title,
        source: raw.source,
        description: raw.description,
        dimension: raw.dimension,
        states: raw.states,
        probabilities,
        acts,
        probability_shift,
    })
}

/// Lower-case hex SHA-256 of the raw input bytes.
pub fn input_digest(text: &str) -> String {
    hex::encode(Sha256::digest(text.as_bytes()))
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

fn num_list(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|x| fmt_num(*x)).collect();
    format!("[{}]", parts.join(", "))
}

impl Scenario {
    /// Act by name.
    pub fn act(&self, name: &str) -> Result<&Act> {
        self.acts
            .iter()
            .find(|a| a.label() == name)
            .ok_or_else(|| Error::UnknownName { kind: "act", name: name.to_string() })
    }

    /// Index of a state by name.
    pub fn state_index(&self, name: &str) -> Result<usize> {
        self.states
            .iter()
            .position(|s| s == name)
            .ok_or_else(|| Error::UnknownName { kind: "state", name: name.to_string() })
    }

    /// Canonical text: fixed key order, two-space indentation, one capability
    /// set per line, numbers rounded to 12 significant digits, trailing LF.
    pub fn to_text(&self) -> String {
        let mut out = String::from("{\n");
        out.push_str(&format!("  \"version\": {FORMAT_VERSION},\n"));
        for (key, value) in [("title", &self.title), ("source", &self.source), ("description", &self.description)] {
            if let Some(v) = value {
                out.push_str(&format!("  \"{key}\": {},\n", quote(v)));
            }
        }
        out.push_str(&format!("  \"dimension\": {},\n", self.dimension));
        let states: Vec<String> = self.states.iter().map(|s| quote(s)).collect();
        out.push_str(&format!("  \"states\": [{}],\n", states.join(", ")));
        out.push_str(&format!("  \"probabilities\": {},\n", num_list(self.probabilities.as_slice())));
        out.push_str("  \"acts\": [\n");
        for (a, act) in self.acts.iter().enumerate() {
            out.push_str("    {\n");
            out.push_str(&format!("      \"name\": {},\n", quote(act.label())));
            out.push_str("      \"sets\": [\n");
            for (l, set) in act.sets().iter().enumerate() {
                let rows: Vec<String> = set.beings().iter().map(|b| num_list(b.coords())).collect();
                let sep = if l + 1 < act.states() { "," } else { "" };
                out.push_str(&format!("        [{}]{sep}\n", rows.join(", ")));
            }
            out.push_str("      ]\n");
            out.push_str(if a + 1 < self.acts.len() { "    },\n" } else { "    }\n" });
        }
        match &self.probability_shift {
            None => out.push_str("  ]\n"),
            Some(s) => {
                out.push_str("  ],\n");
                out.push_str(&format!(
                    "  \"probability_shift\": {{\"from\": {}, \"to\": {}, \"mass\": {}}}\n",
                    quote(&self.states[s.from]),
                    quote(&self.states[s.to]),
                    fmt_num(s.mass)
                ));
            }
        }
        out.push_str("}\n");
        out
    }
}
