//! The `tauideal` binary end to end: outputs, exit codes, determinism.

use std::path::PathBuf;
use std::process::Command;

use tauideal::veronese_maximal_ideal;
use tauideal_cli::commands::{TauReport, VeroneseReport};
use tauideal_cli::io::{IdealSpec, PolyhedronSpec};
use tauideal_cli::report::CampaignReport;

const ORTHANT2: &str = r#"{"d": 2, "shape_hint": "orthant"}"#;
const X2Y3: &str = r#"{"generators": [[2,0],[0,3]]}"#;

fn tauideal(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_tauideal")).args(args).output().expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code().expect("exit code"),
    )
}

fn scratch_dir(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("tauideal-cli-{}-{name}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn tau_all_methods_on_x2y3() {
    let (out, _, code) = tauideal(&["tau", "--ring", ORTHANT2, "--ideal", X2Y3, "--t", "1", "--method", "all", "--out", "json"]);
    assert_eq!(code, 0);
    let rep: TauReport = serde_json::from_str(&out).unwrap();
    assert_eq!(rep.agreement, Some(true));
    for r in &rep.results {
        let mut g = r.generators.clone().unwrap();
        g.sort();
        assert_eq!(g, vec![vec![0, 1], vec![1, 0]]);
    }
}

#[test]
fn tau_at_zero_is_the_unit_ideal() {
    let (out, _, code) = tauideal(&["tau", "--ring", ORTHANT2, "--ideal", X2Y3, "--t", "0", "--method", "all", "--out", "json"]);
    assert_eq!(code, 0);
    let rep: TauReport = serde_json::from_str(&out).unwrap();
    assert!(rep.results.iter().all(|r| r.generators == Some(vec![vec![0, 0]])));
}

#[test]
fn tau_on_a_veronese_model() {
    // m² in the second Veronese of k[x, y, z] has τ = m
    let ring = r#"{"d": 3, "shape_hint": "veronese(3,2)"}"#;
    let (m, _, _) = tauideal(&["veronese", "--d", "3", "--r", "2", "--l", "2", "--out", "json"]);
    let rep: VeroneseReport = serde_json::from_str(&m).unwrap();
    assert_eq!((rep.exponent, rep.verified), (1, true));
    let m = veronese_maximal_ideal(3, 2).unwrap();
    let m2 = serde_json::to_string(&IdealSpec::of(&m.power(2))).unwrap();
    let (out, _, code) = tauideal(&["tau", "--ring", ring, "--ideal", &m2, "--method", "all", "--out", "json"]);
    assert_eq!(code, 0, "{out}");
    let rep: TauReport = serde_json::from_str(&out).unwrap();
    assert_eq!(rep.agreement, Some(true));
    assert_eq!(rep.results[0].generators, Some(IdealSpec::of(&m).generators));
}

#[test]
fn newton_facets_of_x2y3() {
    let (out, _, code) = tauideal(&["newton", "--ring", ORTHANT2, "--ideal", X2Y3, "--out", "json"]);
    assert_eq!(code, 0);
    let p: PolyhedronSpec = serde_json::from_str(&out).unwrap();
    let mut facets: Vec<(Vec<i64>, String)> = p.facets.iter().map(|(n, r)| (n.clone(), r.to_string())).collect();
    facets.sort();
    assert_eq!(
        facets,
        vec![(vec![0, 1], "0".into()), (vec![1, 0], "0".into()), (vec![3, 2], "6".into())]
    );
}

#[test]
fn newton_of_x_at_two() {
    let (out, _, _) = tauideal(&["newton", "--ring", ORTHANT2, "--ideal", r#"{"generators": [[1,0]]}"#, "--t", "2", "--out", "json"]);
    let p: PolyhedronSpec = serde_json::from_str(&out).unwrap();
    assert!(p.facets.iter().any(|(n, r)| n == &vec![1, 0] && r.to_string() == "2"));
}

#[test]
fn check_reports_are_byte_identical() {
    let args = ["check", "power_scaling", "--seed", "11", "--omit-timing", "--out", "json"];
    let (a, _, ca) = tauideal(&args);
    let (b, _, cb) = tauideal(&args);
    assert_eq!((ca, cb), (0, 0));
    assert_eq!(a, b);
    let rep: CampaignReport = serde_json::from_str(&a).unwrap();
    assert_eq!((rep.instances, rep.passes, rep.wall_ms), (60, 60, 0));
}

#[test]
fn regular_powers_campaign_passes() {
    let (out, _, code) = tauideal(&["check", "regular_powers"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("regular_powers: 40/40 passed"), "{out}");
}

#[test]
fn inconclusive_instances_exit_two() {
    // this root chain has not settled by q = 128
    let (out, _, code) = tauideal(&["check", "concordance", "--seed", "2", "--only", "23", "--out", "json"]);
    assert_eq!(code, 2, "{out}");
    let rep: CampaignReport = serde_json::from_str(&out).unwrap();
    assert_eq!(rep.inconclusive(), 1);
    assert_eq!(rep.failures[0].instance.replay, "tauideal check concordance --seed 2 --only 23");
}

#[test]
fn input_errors_exit_three() {
    assert_eq!(tauideal(&["check", "nope"]).2, 3);
    assert_eq!(tauideal(&["tau", "--ring", ORTHANT2]).2, 3);
    assert_eq!(tauideal(&["tau", "--ring", "{not json", "--ideal", X2Y3]).2, 3);
    assert_eq!(tauideal(&["tau", "--ring", ORTHANT2, "--ideal", X2Y3, "--t", "-1"]).2, 3);
    assert_eq!(tauideal(&["tau", "--ring", ORTHANT2, "--ideal", X2Y3, "--prime", "4"]).2, 3);
    assert_eq!(tauideal(&["frobnicate"]).2, 3);
    let (_, err, code) = tauideal(&["tau", "--ring", r#"{"d": 3, "cone_generators": [[1,0,0],[0,1,0],[0,0,1],[1,1,2]]}"#, "--ideal", X2Y3]);
    assert_eq!(code, 3);
    assert!(err.contains("Q-Gorenstein"), "{err}");
}

#[test]
fn crosscheck_over_a_corpus() {
    let dir = scratch_dir("corpus");
    std::fs::write(dir.join("a_x2y3.json"), X2Y3).unwrap();
    std::fs::write(dir.join("b_unit.json"), r#"{"generators": [[0,0]]}"#).unwrap();
    std::fs::write(dir.join("c_m.json"), r#"{"generators": [[1,0],[0,1]]}"#).unwrap();
    std::fs::write(dir.join("notes.txt"), "ignored").unwrap();
    let ring = dir.join("ring.jsonc");
    std::fs::write(&ring, ORTHANT2).unwrap();
    let (out, _, code) = tauideal(&[
        "crosscheck",
        "--ring",
        ring.to_str().unwrap(),
        "--corpus",
        dir.to_str().unwrap(),
        "--t",
        "1/2,5/6,1,3/2",
        "--omit-timing",
        "--out",
        "json",
    ]);
    assert_eq!(code, 0, "{out}");
    let rep: CampaignReport = serde_json::from_str(&out).unwrap();
    assert_eq!((rep.instances, rep.passes), (12, 12));
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn help_exits_zero() {
    let (out, _, code) = tauideal(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("crosscheck"));
}
