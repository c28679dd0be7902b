mod common;

use std::collections::HashMap;

use capmix::milp_export::{
    export_finite_model, export_region_template, scalarize, witness_assignment, Family, ModelTally, RegionBlock,
};
use capmix::mixing::{expected_set, Provenance};
use capmix::{Act, MixConfig, ProbabilityVector};
use common::model_text::{parse, TextModel};
use common::*;

fn frontier_of_model(model: &TextModel) -> Vec<Vec<f64>> {
    naive_frontier(&model.enumerate_values())
}

fn expected_coords(a: &Act, p: &ProbabilityVector) -> Vec<Vec<f64>> {
    coords(&expected_set(a, p, MixConfig::default()).unwrap().beings())
}

#[test]
fn solved_finite_model_matches_expected_set() {
    for (a, p) in [(example2(), probs(&[0.5, 0.5])), (example3(), probs(&[0.8, 0.2]))] {
        let text = export_finite_model(&a, &p).unwrap().to_text();
        let model = parse(&text);
        assert!(same_set(&frontier_of_model(&model), &expected_coords(&a, &p)));
    }
}

#[test]
fn solved_finite_model_matches_on_three_states() {
    let cases = [
        (act(&[&[&[1.0, 4.0], &[3.0, 1.0]], &[&[2.0, 2.0]], &[&[4.0, 0.0], &[0.0, 3.0]]]), vec![0.2, 0.3, 0.5]),
        (act(&[&[&[5.0]], &[&[1.0], &[3.0]], &[&[2.0]]]), vec![0.25, 0.25, 0.5]),
        (act(&[&[&[1.0, 2.0, 3.0]], &[&[3.0, 2.0, 1.0], &[2.0, 2.0, 2.0]], &[&[0.0, 5.0, 0.0]]]), vec![0.5, 0.25, 0.25]),
    ];
    for (a, p) in cases {
        let p = probs(&p);
        let model = parse(&export_finite_model(&a, &p).unwrap().to_text());
        assert!(same_set(&frontier_of_model(&model), &expected_coords(&a, &p)));
    }
}

#[test]
fn witnesses_satisfy_parsed_model() {
    for (a, p) in [(example2(), probs(&[0.5, 0.5])), (example3(), probs(&[0.8, 0.2]))] {
        let model = parse(&export_finite_model(&a, &p).unwrap().to_text());
        for point in expected_set(&a, &p, MixConfig::default()).unwrap().points {
            let Provenance::Chain(cert) = &point.provenance else { panic!("chain expected") };
            let values = witness_assignment(&a, cert);
            assert!(model.violated(&values, TOL).is_empty());
            let obj: Vec<f64> = model.objectives.iter().map(|o| o.iter().map(|(c, v)| c * values[v]).sum()).collect();
            assert!(close(&obj, point.being.coords()));
        }
    }
}

#[test]
fn binary_counts() {
    let m = export_finite_model(&example3(), &probs(&[0.8, 0.2])).unwrap();
    assert_eq!(m.binaries_of(Family::SelectionBinary).len(), 7);
    assert_eq!(m.binaries_of(Family::OrderBinary).len(), 2);
    let m = export_finite_model(&example2(), &probs(&[0.5, 0.5])).unwrap();
    assert_eq!(m.binaries_of(Family::SelectionBinary).len(), 4);
    assert_eq!(m.binaries_of(Family::OrderBinary).len(), 2);
    assert_eq!(ModelTally::of_model(&m), ModelTally::for_sizes(2, 2, &[2, 2]));
    let single = act(&[&[&[1.0, 2.0], &[2.0, 1.0]]]);
    let m = export_finite_model(&single, &probs(&[1.0])).unwrap();
    assert!(m.binaries_of(Family::OrderBinary).is_empty());
    assert_eq!(m.constraints_of(Family::OrderBigM).count(), 0);
}

/// Discrete-choice block for a finite set over `z_l_h`, mirroring the
/// selection rows of the finite model with its own binaries.
fn choice_block(l: usize, rows: &[&[f64]], m: f64) -> RegionBlock {
    let mut text = String::new();
    let names: Vec<String> = (0..rows.len()).map(|n| format!("u_{}_{}", l + 1, n + 1)).collect();
    text.push_str(&format!(" pick_{}: {} <= {}\n", l + 1, names.join(" + "), rows.len() - 1));
    for (n, row) in rows.iter().enumerate() {
        for (h, v) in row.iter().enumerate() {
            text.push_str(&format!(" cap_{}_{}_{}: z_{}_{} - {} {} <= {}\n", l + 1, n + 1, h + 1, l + 1, h + 1, m, names[n], v));
        }
    }
    let upper = rows.iter().flat_map(|r| r.iter().copied()).fold(0.0, f64::max);
    RegionBlock::new(text, upper).with_binaries(names)
}

#[test]
fn template_with_choice_blocks_matches_finite_model() {
    let sets: [&[&[f64]]; 2] = [&[&[3.0, 10.0], &[4.0, 5.0], &[7.0, 3.0], &[8.0, 1.0]], &[&[2.0, 5.0], &[5.0, 4.0], &[10.0, 2.0]]];
    let p = probs(&[0.8, 0.2]);
    let blocks: Vec<RegionBlock> = sets.iter().enumerate().map(|(l, rows)| choice_block(l, rows, 11.0)).collect();
    let template = export_region_template(&blocks, &p, 2).unwrap();
    assert_eq!(template.big_m, 11.0);
    let via_template = frontier_of_model(&parse(&template.to_text()));
    let via_finite = frontier_of_model(&parse(&export_finite_model(&example3(), &p).unwrap().to_text()));
    assert!(same_set(&via_template, &via_finite));
}

#[test]
fn template_with_singleton_blocks_gives_scalar_expectation() {
    let p = probs(&[0.2, 0.5, 0.3]);
    let values = [0.0, 10.0, 20.0];
    let blocks: Vec<RegionBlock> = values
        .iter()
        .enumerate()
        .map(|(l, v)| RegionBlock::new(format!(" fix_{}: z_{}_1 <= {}\n", l + 1, l + 1, v), *v))
        .collect();
    let template = export_region_template(&blocks, &p, 1).unwrap();
    assert_eq!(template.binaries_of(Family::RegionOrderBinary).len(), 6);
    let frontier = frontier_of_model(&parse(&template.to_text()));
    assert_eq!(frontier.len(), 1);
    assert!((frontier[0][0] - 11.0).abs() <= TOL);
}

fn scalar_optimum(model: &TextModel) -> (f64, Vec<Vec<f64>>) {
    let values = model.enumerate_values();
    let best = values.iter().map(|v| v[0]).fold(f64::NEG_INFINITY, f64::max);
    (best, values)
}

#[test]
fn scalarized_optimum_example3() {
    let a = example3();
    let p = probs(&[0.8, 0.2]);
    let model = export_finite_model(&a, &p).unwrap();
    let (best, _) = scalar_optimum(&parse(&scalarize(&model, &[1.0, 0.001]).unwrap().to_text()));
    assert!((best - (8.4 + 0.0012)).abs() <= 1e-9);
    // the maximizer over the expected set is (8.4, 1.2)
    let e = expected_coords(&a, &p);
    let arg: Vec<&Vec<f64>> = e.iter().filter(|x| (x[0] + 0.001 * x[1] - best).abs() <= 1e-9).collect();
    assert_eq!(arg.len(), 1);
    assert!(close(arg[0], &[8.4, 1.2]));
}

#[test]
fn scalarized_optimum_example2() {
    let model = export_finite_model(&example2(), &probs(&[0.5, 0.5])).unwrap();
    let (best, _) = scalar_optimum(&parse(&scalarize(&model, &[1.0, 1.0]).unwrap().to_text()));
    // coordinate sums over the expected set: 7, 6.5, 6.5, 7
    assert!((best - 7.0).abs() <= 1e-9);
}

#[test]
fn finite_model_text_is_deterministic() {
    let a = example3();
    let p = probs(&[0.8, 0.2]);
    let first = export_finite_model(&a, &p).unwrap().to_text();
    for _ in 0..5 {
        assert_eq!(export_finite_model(&a, &p).unwrap().to_text(), first);
    }
    let mut seen = HashMap::new();
    for row in parse(&first).rows {
        assert!(seen.insert(row.name.clone(), ()).is_none(), "duplicate row {}", row.name);
    }
}
