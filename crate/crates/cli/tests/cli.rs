//! End-to-end tests of the `vvjack` binary.

use std::process::{Command, Output};

use serde_json::Value;

use vvjack_core::coeffield::AlphaFraction;
use vvjack_core::combinatorics::parse_tableau;
use vvjack_core::jack::nonsymmetric_jack;
use vvjack_core::vvpoly::{PolyJson, VvPoly};

fn vvjack(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vvjack"))
        .args(args)
        .env("VVJACK_THREADS", "2")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn json(args: &[&str]) -> Value {
    let o = vvjack(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).expect("valid JSON")
}

fn fraction(v: &Value) -> AlphaFraction {
    serde_json::from_value(v.clone()).expect("fraction JSON")
}

fn lin(a: i64, b: i64) -> AlphaFraction {
    AlphaFraction::linear(a, b)
}

#[test]
fn jack_reports_spectral_vector_and_polynomial() {
    let doc = json(&["jack", "--shape", "2,1", "--tableau", "3,1;2", "--weight", "0,1,0", "--format", "json"]);
    let meta = &doc["metadata"];
    assert_eq!(meta["tableau"], "3,1;2");
    assert_eq!(meta["weight"], serde_json::json!([0, 1, 0]));
    let spectral: Vec<AlphaFraction> = meta["spectral"].as_array().unwrap().iter().map(fraction).collect();
    assert_eq!(spectral, vec![lin(0, -1), lin(1, 1), lin(0, 0)]);
    let poly: PolyJson = serde_json::from_value(doc.clone()).expect("vvpoly schema");
    let p = VvPoly::from_json(&poly).unwrap();
    let want = nonsymmetric_jack(&[0, 1, 0], &parse_tableau("3,1;2").unwrap()).unwrap();
    assert_eq!(p, *want);
}

#[test]
fn emitted_polynomial_round_trips() {
    for args in [
        ["jack", "--tableau", "4,2;3,1", "--weight", "1,0,2,0"],
        ["shifted", "--tableau", "3,1;2", "--weight", "0,1,1"],
    ] {
        let doc = json(&args);
        let poly: PolyJson = serde_json::from_value(doc.clone()).unwrap();
        let again = serde_json::to_value(VvPoly::from_json(&poly).unwrap().to_json()).unwrap();
        for key in ["shape", "N", "terms"] {
            assert_eq!(again[key], doc[key], "{args:?} {key}");
        }
    }
}

#[test]
fn output_is_byte_identical_across_runs() {
    let args = ["sym", "--filling", "0,0;1,1"];
    let a = vvjack(&args);
    let b = vvjack(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_eigen_suite_passes() {
    let o = vvjack(&["verify", "--suite", "eigen", "--max-n", "4", "--max-deg", "3", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    assert_eq!(stdout(&o).trim(), "suite eigen: 454 checks, 0 failures");
}

#[test]
fn verify_all_suites_pass_on_small_range() {
    let doc = json(&["verify", "--max-n", "3", "--max-deg", "2", "--seed", "7"]);
    let suites = doc.as_array().unwrap();
    assert_eq!(suites.len(), 8);
    for s in suites {
        assert_eq!(s["failures"], 0, "{s}");
        assert!(s["checks"].as_u64().unwrap() > 0, "{s}");
    }
}

#[test]
fn norm_ratio_examples() {
    let golden = &(&lin(4, 12) * &lin(1, 1)) / &(&lin(2, 1) * &lin(1, 2));
    let doc = json(&["norm", "--shape", "2,1", "--tableau", "3,1;2", "--weight", "0,2,0", "--ratio"]);
    assert_eq!(fraction(&doc["norm_ratio"]), golden);
    // The tableau with rows 3 2 / 1 has negated contents; its ratio is the
    // alpha-negated value.
    let doc = json(&["norm", "--shape", "2,1", "--tableau", "3,2;1", "--weight", "0,2,0", "--ratio"]);
    assert_eq!(fraction(&doc["norm_ratio"]), golden.negate_alpha());
    let o = vvjack(&["norm", "--tableau", "3,1;2", "--weight", "0,2,0", "--ratio", "--format", "text"]);
    assert_eq!(stdout(&o).trim(), golden.to_text());
}

#[test]
fn numeric_evaluation_with_alpha() {
    let doc = json(&["norm", "--tableau", "3,1;2", "--weight", "0,2,0", "--ratio", "--alpha", "1"]);
    // 4 * 4 * 2 / (3 * 3)
    assert_eq!(doc["norm_ratio"], "32/9");
    assert_eq!(doc["metadata"]["spectral"], serde_json::json!(["-1", "3", "0"]));
}

#[test]
fn pairing_of_distinct_jacks_vanishes() {
    let doc = json(&["pair", "--tableau", "3,1;2", "--weight", "0,1,0", "--tableau2", "3,2;1", "--weight2", "0,1,0"]);
    assert_eq!(fraction(&doc["pairing"]), AlphaFraction::zero());
}

#[test]
fn graph_component_lists_vertices_and_edges() {
    let doc = json(&["graph", "component", "--shape", "2,2", "--filling", "0,0;1,1"]);
    assert_eq!(doc["vertices"].as_array().unwrap().len(), 6);
    let edges = doc["edges"].as_array().unwrap();
    assert!(!edges.is_empty());
    for e in edges {
        assert_eq!(e.as_array().unwrap().len(), 4);
    }
    let dot = vvjack(&["graph", "component", "--filling", "0,0;1,1", "--dot"]);
    assert!(stdout(&dot).starts_with("digraph"));
}

#[test]
fn rst_list_counts_tableaux() {
    let doc = json(&["rst-list", "--shape", "3,2"]);
    assert_eq!(doc["count"], 5);
}

#[test]
fn vanish_reports_vanishing_vector() {
    let doc = json(&["vanish", "--tableau", "3,1;2", "--weight", "0,0,1"]);
    let vector: Vec<AlphaFraction> = doc["vector"].as_array().unwrap().iter().map(fraction).collect();
    assert_eq!(vector, vec![lin(1, 0), lin(1, -1), lin(0, -2)]);
    assert_eq!(doc["pivot"], 3);
    let points = doc["points"].as_array().unwrap();
    assert_eq!(points[0]["point"], serde_json::json!([null, null, serde_json::to_value(lin(0, -2)).unwrap()]));
    for p in points {
        assert_eq!(p["vanishes"], true);
    }
}

#[test]
fn minimal_polynomials_are_alpha_free() {
    let a = json(&["minimal", "--shape", "2,2", "--alpha", "3"]);
    let b = json(&["minimal", "--shape", "2,2", "--alpha", "5"]);
    assert_eq!(a["terms"], b["terms"]);
    let a = json(&["minimal", "--shape", "2,2", "--anti", "--alpha", "3"]);
    let b = json(&["minimal", "--shape", "2,2", "--anti", "--alpha", "5"]);
    assert_eq!(a["terms"], b["terms"]);
}

#[test]
fn parse_and_validation_errors_exit_with_2() {
    for args in [
        vec!["jack", "--tableau", "3,1;2", "--weight", "0,1"],
        vec!["jack", "--tableau", "1,3;2", "--weight", "0,1,0"],
        vec!["jack", "--shape", "3", "--tableau", "3,1;2", "--weight", "0,1,0"],
        vec!["jack", "--tableau", "3,1;2", "--weight", "0,x,0"],
        vec!["jack", "--tableau", "3,1;2", "--weight", "0,1,0", "--alpha", "one"],
        vec!["jack", "--tableau", "3,1;2"],
        vec!["restrict", "--tableau", "3,1;2", "--weight", "0,1,0", "-m", "0"],
        vec!["frobnicate"],
    ] {
        let o = vvjack(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn domain_errors_exit_with_1() {
    for args in [
        // not column-strict
        vec!["sym", "--filling", "0,1;0,1"],
        // not row-strict
        vec!["antisym", "--filling", "0,0;1,1"],
        // lacks property R(2)
        vec!["restrict", "--tableau", "3,2;1", "--weight", "0,0,0", "-m", "2"],
        // a coefficient has a pole at alpha = -1
        vec!["jack", "--tableau", "3,1;2", "--weight", "0,1,0", "--alpha", "-1"],
    ] {
        let o = vvjack(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
    }
}

#[test]
fn bad_thread_count_is_rejected() {
    let o = Command::new(env!("CARGO_BIN_EXE_vvjack"))
        .args(["rst-list", "--shape", "2,1"])
        .env("VVJACK_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
}
