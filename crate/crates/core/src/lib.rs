//! Mixtures of multidimensional capability sets under uncertainty about the
//! state of the world.
//!
//! An [`Act`](mixing::Act) assigns a finite capability set to every state.
//! Given subjective state probabilities, the crate computes
//!
//! * the average capability set and its frontier ([`mixing::average_set`],
//!   [`mixing::average_pf`]),
//! * the expected capability set with a chain certificate per point
//!   ([`mixing::expected_set`]),
//!
//! exports the corresponding mixed-integer models as text ([`milp_export`]),
//! and checks the structural properties the two mixes do or do not satisfy
//! ([`properties`]). Scenario files, result files, and SVG plots live in
//! [`cli_io`].

pub mod cli_io;
pub mod error;
pub mod format;
pub mod geometry;
pub mod milp_export;
pub mod mixing;
pub mod properties;

pub use error::{Error, Result};
pub use geometry::{Being, CapabilitySet, PreferenceVerdict, Side, EPS};
pub use mixing::{Act, MixConfig, Mix, MixKind, MixedSet, ProbabilityVector};
