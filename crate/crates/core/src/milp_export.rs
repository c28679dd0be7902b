//! Text export of the expected-set mixed-integer multiobjective models.
//!
//! Two models are emitted:
//!
//! * [`export_finite_model`]: finite capability sets, with selection binaries
//!   `delta_l_n` choosing an anchor per state and order binaries `d_l_lp`
//!   imposing a total order on the aggregated beings `b_l_h`;
//! * [`export_region_template`]: caller-supplied feasible-region blocks
//!   declaring `z_l_h`, wrapped with the same order machinery.
//!
//! Nothing is solved here. The models maximize `h` expected-value objectives
//! at once; recovering the whole frontier from an external single-objective
//! solver needs an epsilon-constraint or dichotomic scheme. [`scalarize`]
//! collapses the objectives with positive weights, which only reaches
//! supported frontier points.
//!
//! File layout, one item per line, LF endings:
//!
//! ```text
//! \ comment
//! OBJECTIVES
//! maximize
//!  obj_1: 0.8 b_1_1 + 0.2 b_2_1
//! CONSTRAINTS
//!  card_1: delta_1_1 + delta_1_2 <= 1
//! BOUNDS
//!  b_1_1 free
//! BINARIES
//!  d_1_2
//! END
//! ```

use std::collections::HashMap;
use std::fmt::{self, Write as _};

use crate::error::{Error, Result};
use crate::format::fmt_num;
use crate::geometry::EPS;
use crate::mixing::{Act, ChainCertificate, ProbabilityVector};

/// Constraint and variable families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    /// At most `n_l - 1` selection binaries set per state.
    SelectionCardinality,
    /// `b_l_h <= z_l_n_h + M delta_l_n`.
    SelectionBound,
    /// Order binaries `d_l_lp`.
    OrderBinary,
    /// `b_l_h <= b_lp_h + M d_l_lp`.
    OrderBigM,
    /// `d_l_lp + d_lp_l <= 1`.
    Antisymmetry,
    /// Selection binaries `delta_l_n`.
    SelectionBinary,
    /// `b_l_h <= z_l_h` linking to a region block.
    RegionLink,
    /// Caller-supplied feasible-set block.
    RegionBlock,
    /// Order binaries of the region template.
    RegionOrderBinary,
    /// Order big-M of the region template.
    RegionOrderBigM,
    /// Antisymmetry of the region template.
    RegionAntisymmetry,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::SelectionCardinality => "card",
            Family::SelectionBound => "sel",
            Family::OrderBinary => "order-bin",
            Family::OrderBigM => "ord",
            Family::Antisymmetry => "anti",
            Family::SelectionBinary => "sel-bin",
            Family::RegionLink => "link",
            Family::RegionBlock => "block",
            Family::RegionOrderBinary => "region-order-bin",
            Family::RegionOrderBigM => "region-ord",
            Family::RegionAntisymmetry => "region-anti",
        }
    }

    fn describe(self) -> &'static str {
        match self {
            Family::SelectionCardinality => "at least one anchor per state",
            Family::SelectionBound => "aggregated being below its anchor",
            Family::OrderBinary => "order binaries",
            Family::OrderBigM => "order big-M",
            Family::Antisymmetry => "every pair ordered",
            Family::SelectionBinary => "selection binaries",
            Family::RegionLink => "aggregated being below its region point",
            Family::RegionBlock => "state feasible set",
            Family::RegionOrderBinary => "order binaries",
            Family::RegionOrderBigM => "order big-M",
            Family::RegionAntisymmetry => "every pair ordered",
        }
    }
}

/// `sum coeff * var`.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct LinearExpr {
    pub terms: Vec<(f64, String)>,
}

impl LinearExpr {
    pub fn term(mut self, coeff: f64, var: impl Into<String>) -> Self {
        self.terms.push((coeff, var.into()));
        self
    }

    pub fn evaluate(&self, values: &HashMap<String, f64>) -> Option<f64> {
        self.terms
            .iter()
            .map(|(c, v)| values.get(v).map(|x| c * x))
            .sum()
    }

    /// Merges repeated variables, keeping first-appearance order.
    fn collapsed(&self) -> LinearExpr {
        let mut order: Vec<String> = Vec::new();
        let mut sums: HashMap<String, f64> = HashMap::new();
        for (c, v) in &self.terms {
            if !sums.contains_key(v) {
                order.push(v.clone());
            }
            *sums.entry(v.clone()).or_insert(0.0) += c;
        }
        LinearExpr { terms: order.into_iter().map(|v| (sums[&v], v)).collect() }
    }
}

impl fmt::Display for LinearExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (c, v)) in self.terms.iter().enumerate() {
            let magnitude = c.abs();
            let sign = if *c < 0.0 { "-" } else { "+" };
            match (i, sign) {
                (0, "+") => {}
                (0, _) => f.write_str("- ")?,
                _ => write!(f, " {sign} ")?,
            }
            if fmt_num(magnitude) == "1" {
                f.write_str(v)?;
            } else {
                write!(f, "{} {v}", fmt_num(magnitude))?;
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Le,
    Ge,
    Eq,
}

impl Sense {
    fn symbol(self) -> &'static str {
        match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub name: String,
    pub family: Family,
    pub expr: LinearExpr,
    pub sense: Sense,
    pub rhs: f64,
}

impl Constraint {
    /// `Some(true)` when satisfied within [`EPS`], `None` when a variable is
    /// missing from `values`.
    pub fn satisfied(&self, values: &HashMap<String, f64>) -> Option<bool> {
        let lhs = self.expr.evaluate(values)?;
        Some(match self.sense {
            Sense::Le => lhs <= self.rhs + EPS,
            Sense::Ge => lhs >= self.rhs - EPS,
            Sense::Eq => (lhs - self.rhs).abs() <= EPS,
        })
    }
}

/// Opaque constraint text describing one state's feasible set through
/// variables `z_l_h` (1-based), plus any binaries it declares.
#[derive(Debug, Clone, PartialEq)]
pub struct RegionBlock {
    pub text: String,
    pub binaries: Vec<String>,
    /// Upper bound on every `z_l_h` the block admits; sizes the big-M.
    pub upper_bound: f64,
}

impl RegionBlock {
    pub fn new(text: impl Into<String>, upper_bound: f64) -> Self {
        RegionBlock { text: text.into(), binaries: Vec::new(), upper_bound }
    }

    pub fn with_binaries<I, S>(mut self, binaries: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        self.binaries.extend(binaries.into_iter().map(Into::into));
        self
    }
}

/// A solver-agnostic mixed-integer model.
#[derive(Debug, Clone, PartialEq)]
pub struct MilpModel {
    pub title: String,
    pub big_m: f64,
    /// Named objectives, all maximized.
    pub objectives: Vec<(String, LinearExpr)>,
    pub constraints: Vec<Constraint>,
    /// Region blocks, one per state (template models only).
    pub blocks: Vec<RegionBlock>,
    /// Unbounded continuous variables.
    pub free_vars: Vec<String>,
    /// Binary variables grouped by family.
    pub binaries: Vec<(Family, Vec<String>)>,
    pub notes: Vec<String>,
}

impl MilpModel {
    pub fn binaries_of(&self, family: Family) -> &[String] {
        self.binaries
            .iter()
            .find(|(f, _)| *f == family)
            .map(|(_, v)| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn constraints_of(&self, family: Family) -> impl Iterator<Item = &Constraint> {
        self.constraints.iter().filter(move |c| c.family == family)
    }

    /// Names of constraints violated by `values`, including those that
    /// reference unassigned variables.
    pub fn violations(&self, values: &HashMap<String, f64>) -> Vec<String> {
        self.constraints
            .iter()
            .filter(|c| c.satisfied(values) != Some(true))
            .map(|c| c.name.clone())
            .collect()
    }

    /// Deterministic model text.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "\\ {}", self.title);
        let _ = writeln!(out, "\\ big_m = {}", fmt_num(self.big_m));
        for note in &self.notes {
            let _ = writeln!(out, "\\ note: {note}");
        }
        out.push_str("OBJECTIVES\nmaximize\n");
        for (name, expr) in &self.objectives {
            let _ = writeln!(out, " {name}: {expr}");
        }
        out.push_str("CONSTRAINTS\n");
        let mut current: Option<Family> = None;
        let mut emit_blocks = !self.blocks.is_empty();
        for c in &self.constraints {
            if emit_blocks && c.family != Family::RegionLink {
                self.write_blocks(&mut out);
                emit_blocks = false;
            }
            if current != Some(c.family) {
                let _ = writeln!(out, "\\ {}: {}", c.family.tag(), c.family.describe());
                current = Some(c.family);
            }
            let _ = writeln!(out, " {}: {} {} {}", c.name, c.expr, c.sense.symbol(), fmt_num(c.rhs));
        }
        if emit_blocks {
            self.write_blocks(&mut out);
        }
        out.push_str("BOUNDS\n");
        for v in &self.free_vars {
            let _ = writeln!(out, " {v} free");
        }
        out.push_str("BINARIES\n");
        for (family, vars) in &self.binaries {
            if vars.is_empty() {
                continue;
            }
            let _ = writeln!(out, "\\ {}: {}", family.tag(), family.describe());
            for v in vars {
                let _ = writeln!(out, " {v}");
            }
        }
        out.push_str("END\n");
        out
    }

    fn write_blocks(&self, out: &mut String) {
        for (l, block) in self.blocks.iter().enumerate() {
            let _ = writeln!(out, "\\ {}: {} {}", Family::RegionBlock.tag(), Family::RegionBlock.describe(), l + 1);
            for line in block.text.lines() {
                let line = line.trim();
                if !line.is_empty() {
                    let _ = writeln!(out, " {line}");
                }
            }
        }
    }
}

impl fmt::Display for MilpModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

pub fn b_var(l: usize, h: usize) -> String {
    format!("b_{}_{}", l + 1, h + 1)
}

pub fn z_var(l: usize, h: usize) -> String {
    format!("z_{}_{}", l + 1, h + 1)
}

pub fn d_var(l: usize, lp: usize) -> String {
    format!("d_{}_{}", l + 1, lp + 1)
}

pub fn delta_var(l: usize, n: usize) -> String {
    format!("delta_{}_{}", l + 1, n + 1)
}

/// One more than the largest coordinate of any being of any state.
pub fn big_m(act: &Act) -> f64 {
    let max = act
        .sets()
        .iter()
        .flat_map(|s| s.beings().iter().flat_map(|b| b.coords().iter().copied()))
        .fold(0.0_f64, f64::max);
    1.0 + max
}

fn expected_objectives(p: &ProbabilityVector, dimension: usize) -> Vec<(String, LinearExpr)> {
    (0..dimension)
        .map(|h| {
            let expr = p
                .as_slice()
                .iter()
                .enumerate()
                .fold(LinearExpr::default(), |e, (l, &pl)| e.term(pl, b_var(l, h)));
            (format!("obj_{}", h + 1), expr)
        })
        .collect()
}

fn order_machinery(
    states: usize,
    dimension: usize,
    m: f64,
    big_m_family: Family,
    anti_family: Family,
) -> (Vec<Constraint>, Vec<String>) {
    let mut constraints = Vec::new();
    let mut binaries = Vec::new();
    for l in 0..states {
        for lp in 0..states {
            if l == lp {
                continue;
            }
            binaries.push(d_var(l, lp));
            for h in 0..dimension {
                constraints.push(Constraint {
                    name: format!("ord_{}_{}_{}", l + 1, lp + 1, h + 1),
                    family: big_m_family,
                    expr: LinearExpr::default().term(1.0, b_var(l, h)).term(-1.0, b_var(lp, h)).term(-m, d_var(l, lp)),
                    sense: Sense::Le,
                    rhs: 0.0,
                });
            }
        }
    }
    for l in 0..states {
        for lp in l + 1..states {
            constraints.push(Constraint {
                name: format!("anti_{}_{}", l + 1, lp + 1),
                family: anti_family,
                expr: LinearExpr::default().term(1.0, d_var(l, lp)).term(1.0, d_var(lp, l)),
                sense: Sense::Le,
                rhs: 1.0,
            });
        }
    }
    (constraints, binaries)
}

fn b_vars(states: usize, dimension: usize) -> Vec<String> {
    (0..states).flat_map(|l| (0..dimension).map(move |h| b_var(l, h))).collect()
}

/// The finite-set model: anchors chosen through selection binaries, order
/// enforced through big-M order binaries.
pub fn export_finite_model(act: &Act, p: &ProbabilityVector) -> Result<MilpModel> {
    if p.len() != act.states() {
        return Err(Error::StateCountMismatch { expected: act.states(), found: p.len() });
    }
    let states = act.states();
    let dimension = act.dimension();
    let m = big_m(act);

    let mut constraints = Vec::new();
    let mut selection = Vec::new();
    for (l, set) in act.sets().iter().enumerate() {
        let expr = (0..set.len()).fold(LinearExpr::default(), |e, n| e.term(1.0, delta_var(l, n)));
        constraints.push(Constraint {
            name: format!("card_{}", l + 1),
            family: Family::SelectionCardinality,
            expr,
            sense: Sense::Le,
            rhs: set.len() as f64 - 1.0,
        });
        selection.extend((0..set.len()).map(|n| delta_var(l, n)));
    }
    for (l, set) in act.sets().iter().enumerate() {
        for (n, z) in set.beings().iter().enumerate() {
            for (h, &zh) in z.coords().iter().enumerate() {
                constraints.push(Constraint {
                    name: format!("sel_{}_{}_{}", l + 1, n + 1, h + 1),
                    family: Family::SelectionBound,
                    expr: LinearExpr::default().term(1.0, b_var(l, h)).term(-m, delta_var(l, n)),
                    sense: Sense::Le,
                    rhs: zh,
                });
            }
        }
    }
    let (order, order_bins) = order_machinery(states, dimension, m, Family::OrderBigM, Family::Antisymmetry);
    constraints.extend(order);

    Ok(MilpModel {
        title: format!("expected capability set, finite model, act {}", act.label()),
        big_m: m,
        objectives: expected_objectives(p, dimension),
        constraints,
        blocks: Vec::new(),
        free_vars: b_vars(states, dimension),
        binaries: vec![(Family::OrderBinary, order_bins), (Family::SelectionBinary, selection)],
        notes: vec![pareto_note()],
    })
}

/// The region template: each state's feasible set is an opaque block over
/// `z_l_h`; aggregated beings are bounded by their region point and ordered.
pub fn export_region_template(blocks: &[RegionBlock], p: &ProbabilityVector, dimension: usize) -> Result<MilpModel> {
    if blocks.len() != p.len() {
        return Err(Error::StateCountMismatch { expected: p.len(), found: blocks.len() });
    }
    if dimension == 0 {
        return Err(Error::Empty("template with zero dimensions"));
    }
    let states = blocks.len();
    let m = 1.0 + blocks.iter().map(|b| b.upper_bound).fold(0.0_f64, f64::max);

    let mut constraints = Vec::new();
    for l in 0..states {
        for h in 0..dimension {
            constraints.push(Constraint {
                name: format!("link_{}_{}", l + 1, h + 1),
                family: Family::RegionLink,
                expr: LinearExpr::default().term(1.0, b_var(l, h)).term(-1.0, z_var(l, h)),
                sense: Sense::Le,
                rhs: 0.0,
            });
        }
    }
    let (order, order_bins) =
        order_machinery(states, dimension, m, Family::RegionOrderBigM, Family::RegionAntisymmetry);
    constraints.extend(order);

    let block_bins: Vec<String> = blocks.iter().flat_map(|b| b.binaries.iter().cloned()).collect();
    Ok(MilpModel {
        title: "expected capability set, region template".to_string(),
        big_m: m,
        objectives: expected_objectives(p, dimension),
        constraints,
        blocks: blocks.to_vec(),
        free_vars: b_vars(states, dimension),
        binaries: vec![(Family::RegionOrderBinary, order_bins), (Family::RegionBlock, block_bins)],
        notes: vec![pareto_note()],
    })
}

fn pareto_note() -> String {
    "all objectives are maximized jointly; full frontier recovery needs an epsilon-constraint or dichotomic scheme"
        .to_string()
}

/// Collapses the objectives into `sum_h weights[h] * obj_h`.
pub fn scalarize(model: &MilpModel, weights: &[f64]) -> Result<MilpModel> {
    if weights.len() != model.objectives.len() {
        return Err(Error::DimensionMismatch { expected: model.objectives.len(), found: weights.len() });
    }
    for (index, &value) in weights.iter().enumerate() {
        if !(value > 0.0 && value.is_finite()) {
            return Err(Error::NonPositiveWeight { index, value });
        }
    }
    let mut combined = LinearExpr::default();
    for ((_, expr), &w) in model.objectives.iter().zip(weights) {
        for (c, v) in &expr.terms {
            combined.terms.push((w * c, v.clone()));
        }
    }
    let mut out = model.clone();
    out.objectives = vec![("obj".to_string(), combined.collapsed())];
    out.notes.push(format!(
        "weighted sum with weights ({}); weighted sums recover only supported Pareto points",
        weights.iter().map(|w| fmt_num(*w)).collect::<Vec<_>>().join(", ")
    ));
    Ok(out)
}

/// Variable assignment realizing a chain certificate in the finite model.
pub fn witness_assignment(act: &Act, cert: &ChainCertificate) -> HashMap<String, f64> {
    let mut values = HashMap::new();
    for (l, adj) in cert.adjusted.iter().enumerate() {
        for (h, &x) in adj.coords().iter().enumerate() {
            values.insert(b_var(l, h), x);
        }
    }
    for (l, row) in cert.order_binaries().iter().enumerate() {
        for (lp, &bit) in row.iter().enumerate() {
            if l != lp {
                values.insert(d_var(l, lp), f64::from(bit));
            }
        }
    }
    for (l, row) in cert.selection_binaries(act).iter().enumerate() {
        for (n, &bit) in row.iter().enumerate() {
            values.insert(delta_var(l, n), f64::from(bit));
        }
    }
    values
}

/// Closed-form structural counts of the finite model.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModelTally {
    pub continuous: usize,
    pub order_binaries: usize,
    pub selection_binaries: usize,
    pub constraints: usize,
}

impl ModelTally {
    pub fn for_sizes(states: usize, dimension: usize, set_sizes: &[usize]) -> Self {
        let total: usize = set_sizes.iter().sum();
        let pairs = states * states.saturating_sub(1);
        ModelTally {
            continuous: states * dimension,
            order_binaries: pairs,
            selection_binaries: total,
            constraints: states + dimension * total + dimension * pairs + pairs / 2,
        }
    }

    pub fn of_model(model: &MilpModel) -> Self {
        ModelTally {
            continuous: model.free_vars.len(),
            order_binaries: model.binaries_of(Family::OrderBinary).len(),
            selection_binaries: model.binaries_of(Family::SelectionBinary).len(),
            constraints: model.constraints.len(),
        }
    }
}
