//! Reads the exported model text and solves it by enumeration.
//!
//! With every binary fixed, each constraint either involves binaries only,
//! bounds one continuous variable from above, or bounds the difference of two.
//! All objective coefficients are non-negative, so the greatest feasible
//! point (found by propagating upper bounds to a fixpoint) maximizes every
//! objective at once for that binary assignment.

use std::collections::{BTreeSet, HashMap};

#[derive(Debug, Clone)]
pub struct Row {
    pub name: String,
    pub terms: Vec<(f64, String)>,
    pub sense: String,
    pub rhs: f64,
}

#[derive(Debug, Clone, Default)]
pub struct TextModel {
    pub objectives: Vec<Vec<(f64, String)>>,
    pub rows: Vec<Row>,
    pub free: Vec<String>,
    pub binaries: Vec<String>,
}

pub fn parse_expr(s: &str) -> Vec<(f64, String)> {
    let mut out = Vec::new();
    let mut sign = 1.0;
    let mut coef = 1.0;
    for tok in s.split_whitespace() {
        match tok {
            "+" => sign = 1.0,
            "-" => sign = -1.0,
            _ => {
                if let Ok(v) = tok.parse::<f64>() {
                    coef = v;
                } else if let Some(rest) = tok.strip_prefix('-') {
                    out.push((-sign * coef, rest.to_string()));
                    sign = 1.0;
                    coef = 1.0;
                } else {
                    out.push((sign * coef, tok.to_string()));
                    sign = 1.0;
                    coef = 1.0;
                }
            }
        }
    }
    out
}

pub fn parse(text: &str) -> TextModel {
    let mut m = TextModel::default();
    let mut section = "";
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('\\') {
            continue;
        }
        match t {
            "OBJECTIVES" | "CONSTRAINTS" | "BOUNDS" | "BINARIES" | "END" => {
                section = if t == "OBJECTIVES" { "obj" } else { t };
                continue;
            }
            "maximize" => continue,
            _ => {}
        }
        match section {
            "obj" => {
                let (_, expr) = t.split_once(':').expect("named objective");
                m.objectives.push(parse_expr(expr));
            }
            "CONSTRAINTS" => {
                let (name, rest) = t.split_once(':').expect("named constraint");
                let sense = ["<=", ">=", "="].into_iter().find(|s| rest.contains(s)).expect("sense");
                let (lhs, rhs) = rest.split_once(sense).unwrap();
                m.rows.push(Row {
                    name: name.trim().to_string(),
                    terms: parse_expr(lhs),
                    sense: sense.to_string(),
                    rhs: rhs.trim().parse().expect("numeric rhs"),
                });
            }
            "BOUNDS" => {
                let var = t.strip_suffix(" free").expect("free bound");
                m.free.push(var.to_string());
            }
            "BINARIES" => m.binaries.push(t.to_string()),
            _ => panic!("unexpected line {t:?}"),
        }
    }
    m
}

impl TextModel {
    /// Every row holds under `values` within `tol`; returns violated names.
    pub fn violated(&self, values: &HashMap<String, f64>, tol: f64) -> Vec<String> {
        self.rows
            .iter()
            .filter(|r| {
                let lhs: f64 = r.terms.iter().map(|(c, v)| c * values.get(v).copied().unwrap_or(f64::NAN)).sum();
                let ok = match r.sense.as_str() {
                    "<=" => lhs <= r.rhs + tol,
                    ">=" => lhs >= r.rhs - tol,
                    _ => (lhs - r.rhs).abs() <= tol,
                };
                !ok
            })
            .map(|r| r.name.clone())
            .collect()
    }

    fn continuous(&self) -> Vec<String> {
        let bins: BTreeSet<&String> = self.binaries.iter().collect();
        let mut vars = BTreeSet::new();
        for r in &self.rows {
            for (_, v) in &r.terms {
                if !bins.contains(v) {
                    vars.insert(v.clone());
                }
            }
        }
        vars.into_iter().collect()
    }

    /// Greatest feasible continuous point for fixed binaries, or `None`
    /// when the binaries violate a binary-only row or propagation diverges.
    pub fn greatest_point(&self, bins: &HashMap<String, f64>) -> Option<HashMap<String, f64>> {
        let cont = self.continuous();
        let index: HashMap<&String, usize> = cont.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let mut upper: Vec<(usize, f64)> = Vec::new();
        let mut diff: Vec<(usize, usize, f64)> = Vec::new();
        for r in &self.rows {
            assert_eq!(r.sense, "<=", "only upper rows are expected");
            let mut slack = r.rhs;
            let mut cterms = Vec::new();
            for (c, v) in &r.terms {
                match bins.get(v) {
                    Some(x) => slack -= c * x,
                    None => cterms.push((*c, index[v])),
                }
            }
            match cterms.as_slice() {
                [] => {
                    if slack < -1e-9 {
                        return None;
                    }
                }
                [(c, i)] if *c > 0.0 => upper.push((*i, slack / c)),
                [(c1, i), (c2, j)] if (*c1 - 1.0).abs() < 1e-12 && (*c2 + 1.0).abs() < 1e-12 => diff.push((*i, *j, slack)),
                [(c1, i), (c2, j)] if (*c1 + 1.0).abs() < 1e-12 && (*c2 - 1.0).abs() < 1e-12 => diff.push((*j, *i, slack)),
                other => panic!("row {} has unsupported shape {other:?}", r.name),
            }
        }
        let mut x = vec![f64::INFINITY; cont.len()];
        for &(i, u) in &upper {
            x[i] = x[i].min(u);
        }
        for _ in 0..=cont.len() + 1 {
            let mut changed = false;
            for &(i, j, c) in &diff {
                let cap = x[j] + c;
                if cap < x[i] - 1e-12 {
                    x[i] = cap;
                    changed = true;
                }
            }
            if !changed {
                if x.iter().any(|v| !v.is_finite()) {
                    panic!("unbounded continuous variable");
                }
                return Some(cont.iter().cloned().zip(x).collect());
            }
        }
        None
    }

    /// Objective vectors of the greatest point of every binary assignment.
    pub fn enumerate_values(&self) -> Vec<Vec<f64>> {
        let k = self.binaries.len();
        assert!(k <= 20, "too many binaries to enumerate");
        let mut out = Vec::new();
        for mask in 0u32..(1u32 << k) {
            let bins: HashMap<String, f64> = self
                .binaries
                .iter()
                .enumerate()
                .map(|(i, v)| (v.clone(), f64::from((mask >> i) & 1)))
                .collect();
            if let Some(point) = self.greatest_point(&bins) {
                out.push(
                    self.objectives
                        .iter()
                        .map(|o| o.iter().map(|(c, v)| c * point[v]).sum())
                        .collect(),
                );
            }
        }
        out
    }
}
