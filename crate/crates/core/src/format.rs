//! Decimal formatting shared by result files, model export, and plots.

/// Significant digits used for every number written to disk.
pub const SIG_DIGITS: usize = 12;

/// Rounds `x` to [`SIG_DIGITS`] significant digits.
pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    let s = format!("{:.*e}", SIG_DIGITS - 1, x);
    s.parse().unwrap_or(x)
}

/// Shortest decimal rendering of `x` after rounding to [`SIG_DIGITS`]
/// significant digits. Integers print without a fractional part.
pub fn fmt_num(x: f64) -> String {
    let r = round_sig(x);
    if r == 0.0 {
        return "0".to_string();
    }
    format!("{r}")
}
