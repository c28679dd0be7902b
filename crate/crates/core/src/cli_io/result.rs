//! Result documents written by the mixing, comparison and check commands.

use serde::Serialize;

use crate::geometry::{Being, PreferenceVerdict, Side};
use crate::mixing::{MixKind, MixedPoint};
use crate::properties::PropertyReport;

pub const RESULT_VERSION: u32 = 1;

/// Verdict between the mixes of two acts.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Comparison {
    pub first: String,
    pub second: String,
    pub first_points: Vec<Being>,
    pub second_points: Vec<Being>,
    pub verdict: PreferenceVerdict,
    /// Preferred act first; absent when the two mixes are incomparable.
    pub ranking: Option<Vec<String>>,
    pub note: String,
}

impl Comparison {
    pub fn new(first: &str, second: &str, first_points: Vec<Being>, second_points: Vec<Being>, verdict: PreferenceVerdict) -> Self {
        let order = |side: Side| match side {
            Side::First => vec![first.to_string(), second.to_string()],
            Side::Second => vec![second.to_string(), first.to_string()],
        };
        let (ranking, note) = match verdict {
            PreferenceVerdict::StrictlyPreferred(side) => {
                let r = order(side);
                let note = format!("{} is strictly preferred to {}", r[0], r[1]);
                (Some(r), note)
            }
            PreferenceVerdict::AtLeastAsGood(side) => {
                let r = order(side);
                let note = format!("{} is at least as good as {}", r[0], r[1]);
                (Some(r), note)
            }
            PreferenceVerdict::Equivalent => (
                Some(vec![first.to_string(), second.to_string()]),
                format!("{first} and {second} are equivalent"),
            ),
            PreferenceVerdict::Incomparable => {
                (None, format!("{first} and {second} are incomparable; no ranking is implied"))
            }
        };
        Comparison { first: first.to_string(), second: second.to_string(), first_points, second_points, verdict, ranking, note }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ResultFile {
    pub version: u32,
    /// SHA-256 of the scenario text.
    pub input_digest: String,
    pub operation: String,
    pub act: Option<String>,
    pub mix: Option<MixKind>,
    pub points: Vec<MixedPoint>,
    pub reports: Vec<PropertyReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comparison: Option<Comparison>,
    pub elapsed_ms: u64,
}

impl ResultFile {
    pub fn new(input_digest: String, operation: &str) -> Self {
        ResultFile {
            version: RESULT_VERSION,
            input_digest,
            operation: operation.to_string(),
            act: None,
            mix: None,
            points: Vec::new(),
            reports: Vec::new(),
            comparison: None,
            elapsed_ms: 0,
        }
    }

    /// Pretty-printed JSON with a trailing LF.
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("result documents serialize");
        s.push('\n');
        s
    }
}
