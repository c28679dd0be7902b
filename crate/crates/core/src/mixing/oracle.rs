//! Grid-enumeration oracle for the expected capability set.
//!
//! Every optimal adjusted coordinate equals some anchor coordinate, so the
//! finite model's optimum lies on the grid of coordinate values that occur
//! anywhere in the act. The oracle enumerates per-state grid points that are
//! dominated by their state's set, keeps the tuples that are totally ordered,
//! aggregates them, and filters the frontier. It shares nothing with the
//! chain construction in the parent module.

use crate::error::{Error, Result};
use crate::geometry::{dominated_by_points, ge, pareto_indices, Being};

use super::{Act, ProbabilityVector};

/// Default cap on enumerated grid tuples.
pub const DEFAULT_GRID_CAP: u64 = 1_000_000;

/// Expected capability set by brute force over the coordinate grid.
/// Intended for tiny instances only; returns a capacity error when the
/// product of per-state candidate counts exceeds `cap`.
pub fn brute_force_expected(act: &Act, p: &ProbabilityVector, cap: u64) -> Result<Vec<Being>> {
    if p.len() != act.states() {
        return Err(Error::StateCountMismatch { expected: act.states(), found: p.len() });
    }
    let dimension = act.dimension();

    let mut values: Vec<f64> = act
        .sets()
        .iter()
        .flat_map(|s| s.beings().iter().flat_map(|b| b.coords().iter().copied()))
        .collect();
    values.sort_by(f64::total_cmp);
    values.dedup();

    let grid_size = (values.len() as u128).checked_pow(dimension as u32).unwrap_or(u128::MAX);
    if grid_size > cap as u128 {
        return Err(Error::Capacity { what: "oracle grid", required: grid_size, cap });
    }

    let grid: Vec<Being> = (0..grid_size as u64)
        .map(|mut code| {
            let mut coords = vec![0.0; dimension];
            for slot in coords.iter_mut().rev() {
                *slot = values[(code % values.len() as u64) as usize];
                code /= values.len() as u64;
            }
            Being::new(coords).expect("grid values come from valid beings")
        })
        .collect();

    let candidates: Vec<Vec<&Being>> = act
        .sets()
        .iter()
        .map(|s| grid.iter().filter(|g| dominated_by_points(g, s.beings())).collect())
        .collect();
    let tuples: u128 = candidates.iter().map(|c| c.len() as u128).product();
    if tuples > cap as u128 {
        return Err(Error::Capacity { what: "oracle tuples", required: tuples, cap });
    }

    let mut search = Search { candidates: &candidates, probs: p.as_slice(), dimension, chosen: Vec::new(), found: Vec::new() };
    search.descend();
    let found = search.found;
    Ok(pareto_indices(&found).into_iter().map(|i| found[i].clone()).collect())
}

struct Search<'a> {
    candidates: &'a [Vec<&'a Being>],
    probs: &'a [f64],
    dimension: usize,
    chosen: Vec<&'a Being>,
    found: Vec<Being>,
}

impl<'a> Search<'a> {
    fn descend(&mut self) {
        let state = self.chosen.len();
        if state == self.candidates.len() {
            let value = Being::weighted_sum(self.dimension, self.probs.iter().copied().zip(self.chosen.iter().copied()));
            self.found.push(value);
            if self.found.len() >= 4096 {
                let keep = pareto_indices(&self.found);
                self.found = keep.into_iter().map(|i| self.found[i].clone()).collect();
            }
            return;
        }
        for &cand in &self.candidates[state] {
            let comparable = self
                .chosen
                .iter()
                .all(|prev| ge(prev.coords(), cand.coords()) || ge(cand.coords(), prev.coords()));
            if comparable {
                self.chosen.push(cand);
                self.descend();
                self.chosen.pop();
            }
        }
    }
}
