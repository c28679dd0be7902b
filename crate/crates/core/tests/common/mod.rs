#![allow(dead_code)]

pub mod model_text;

use std::path::PathBuf;

use capmix::geometry::Being;
use capmix::{Act, CapabilitySet, ProbabilityVector};

pub const TOL: f64 = 1e-9;

pub fn b(c: &[f64]) -> Being {
    Being::new(c.to_vec()).unwrap()
}

pub fn pts(rows: &[&[f64]]) -> Vec<Being> {
    rows.iter().map(|r| b(r)).collect()
}

pub fn act(sets: &[&[&[f64]]]) -> Act {
    Act::new("f", sets.iter().map(|rows| CapabilitySet::from_rows(rows).unwrap()).collect()).unwrap()
}

pub fn act_from(sets: Vec<Vec<Vec<f64>>>) -> Act {
    Act::new("f", sets.iter().map(|rows| CapabilitySet::from_rows(rows).unwrap()).collect()).unwrap()
}

pub fn probs(p: &[f64]) -> ProbabilityVector {
    ProbabilityVector::new(p.to_vec()).unwrap()
}

pub fn example2() -> Act {
    act(&[&[&[2.0, 7.0], &[3.0, 4.0]], &[&[4.0, 3.0], &[7.0, 2.0]]])
}

pub fn example3() -> Act {
    act(&[&[&[3.0, 10.0], &[4.0, 5.0], &[7.0, 3.0], &[8.0, 1.0]], &[&[2.0, 5.0], &[5.0, 4.0], &[10.0, 2.0]]])
}

/// The nine tabulated points for `example3` at p = (0.8, 0.2), with the
/// anchors, adjusted beings and (d_12, d_21) of each row.
pub struct Row {
    pub point: [f64; 2],
    pub z: [[f64; 2]; 2],
    pub b: [[f64; 2]; 2],
    pub d: (u8, u8),
}

pub fn example3_rows() -> Vec<Row> {
    let r = |point, z1, b1, z2, b2, d| Row { point, z: [z1, z2], b: [b1, b2], d };
    vec![
        r([2.8, 9.0], [3.0, 10.0], [3.0, 10.0], [2.0, 5.0], [2.0, 5.0], (1, 0)),
        r([3.0, 8.8], [3.0, 10.0], [3.0, 10.0], [5.0, 4.0], [3.0, 4.0], (1, 0)),
        r([4.0, 4.8], [4.0, 5.0], [4.0, 5.0], [5.0, 4.0], [4.0, 4.0], (1, 0)),
        r([4.2, 4.0], [4.0, 5.0], [4.0, 4.0], [5.0, 4.0], [5.0, 4.0], (0, 1)),
        r([5.0, 3.2], [7.0, 3.0], [5.0, 3.0], [5.0, 4.0], [5.0, 4.0], (0, 1)),
        r([6.6, 3.0], [7.0, 3.0], [7.0, 3.0], [5.0, 4.0], [5.0, 3.0], (1, 0)),
        r([7.0, 2.8], [7.0, 3.0], [7.0, 3.0], [10.0, 2.0], [7.0, 2.0], (1, 0)),
        r([7.6, 2.0], [7.0, 3.0], [7.0, 2.0], [10.0, 2.0], [10.0, 2.0], (0, 1)),
        r([8.4, 1.2], [8.0, 1.0], [8.0, 1.0], [10.0, 2.0], [10.0, 2.0], (0, 1)),
    ]
}

pub fn scenario_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("scenarios").join(name)
}

pub fn scenario_text(name: &str) -> String {
    std::fs::read_to_string(scenario_path(name)).unwrap()
}

pub fn close(a: &[f64], b: &[f64]) -> bool {
    a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= TOL)
}

/// Set equality within `TOL`, written without the library's helpers.
pub fn same_set(a: &[Vec<f64>], b: &[Vec<f64>]) -> bool {
    a.iter().all(|x| b.iter().any(|y| close(x, y))) && b.iter().all(|y| a.iter().any(|x| close(x, y)))
}

pub fn coords(points: &[Being]) -> Vec<Vec<f64>> {
    points.iter().map(|p| p.coords().to_vec()).collect()
}

/// `x >= y` within `TOL`, componentwise.
pub fn geq(x: &[f64], y: &[f64]) -> bool {
    x.iter().zip(y).all(|(a, b)| *a >= *b - TOL)
}

/// Non-dominated members by pairwise comparison.
pub fn naive_frontier(points: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for (i, p) in points.iter().enumerate() {
        let dominated = points
            .iter()
            .enumerate()
            .any(|(j, q)| j != i && geq(q, p) && q.iter().zip(p).any(|(a, b)| *a > *b + TOL));
        if !dominated && !out.iter().any(|o| close(o, p)) {
            out.push(p.clone());
        }
    }
    out
}
