use std::process::{Command, Output};

use edgesquare::records::{CensusLine, CycleRecord, FacetRecord, IdealRecord, PurityRecord, ScreenRecord, VerdictRecord};
use serde::de::DeserializeOwned;
use serde::Serialize;

fn edgesquare(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_edgesquare")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = edgesquare(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

/// Every line parses into `T` and serializes back to the same JSON value.
fn round_trip<T: Serialize + DeserializeOwned>(text: &str) -> Vec<T> {
    text.lines()
        .map(|line| {
            let rec: T = serde_json::from_str(line).unwrap();
            let again: serde_json::Value = serde_json::to_value(&rec).unwrap();
            assert_eq!(again, serde_json::from_str::<serde_json::Value>(line).unwrap());
            rec
        })
        .collect()
}

/// Facet lines as sets of names, independent of the id order.
fn facet_sets(text: &str) -> std::collections::BTreeSet<Vec<String>> {
    text.lines()
        .map(|l| {
            let mut v: Vec<String> = l.trim_matches(|c| c == '{' || c == '}').split(',').map(String::from).collect();
            v.sort();
            v
        })
        .collect()
}

#[test]
fn is_cm_on_small_examples() {
    assert_eq!(stdout(&["is-cm", "p3"]), "NOT CM; witness face {x1,y1,z2,w2}, b~0(link)=1\n");
    assert_eq!(stdout(&["is-cm", "p3", "--subscript"]), "NOT CM; witness face {x_1,y_1,z_2,w_2}, b~0(link)=1\n");
    assert_eq!(stdout(&["is-cm", "k2"]), "CM\n");
    assert_eq!(stdout(&["is-cm", "c5", "--char", "3"]), "CM\n");
    assert_eq!(stdout(&["is-cm", "c4"]), stdout(&["is-cm", "c4", "--no-fast-fail"]));
    assert_eq!(stdout(&["is-cm", "triangle"]), "NOT CM; fast-fail not-pure\n");
    assert!(stdout(&["is-cm", "triangle", "--no-fast-fail"]).starts_with("NOT CM; witness face"));
}

#[test]
fn facets_routes_agree() {
    for g in ["p3", "c5", "triangle", "stars", "k2,3", "doublestar:2,3", "whisker:c3"] {
        let catalog = stdout(&["facets", g]);
        assert_eq!(catalog, stdout(&["facets", g, "--route", "generic"]), "{g}");
        assert_eq!(catalog, stdout(&["facets", g, "--route", "both"]), "{g}");
    }
}

#[test]
fn classify_cycle_lines() {
    assert_eq!(stdout(&["classify-cycle", "5", "--verify"]), "CM (theorem) = CM (verified, p=2)\nunmixed: true\n");
    assert_eq!(
        stdout(&["classify-cycle", "7", "--verify", "--char", "3"]),
        "NOT CM (theorem) = NOT CM (verified, p=3)\nunmixed: true\n"
    );
    assert_eq!(stdout(&["classify-cycle", "12"]), "NOT CM (theorem)\nunmixed: false\n");
    let out = edgesquare(&["classify-cycle", "9", "--verify"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn screen_and_purity() {
    assert_eq!(stdout(&["screen", "p3"]), "rejected: leaf-path-3 z-x-y-w\n");
    assert_eq!(stdout(&["screen", "c5"]), "survives\n");
    assert_eq!(stdout(&["screen", "triangle"]), "rejected: not-pure\n");
    let pure = stdout(&["is-pure", "triangle"]);
    assert!(pure.contains("pure: false") && pure.contains("dim: 3"), "{pure}");
}

#[test]
fn show_ideal_for_p3() {
    let text = stdout(&["show-ideal", "p3"]);
    assert!(text.contains("I(G) = (x*y, x*z, y*w)"), "{text}");
    assert!(text.contains("x1*x2*z1*z2") && text.contains("y1*y2*w1*w2"), "{text}");
}

#[test]
fn edge_list_and_graph6_files() {
    let dir = tempfile::tempdir().unwrap();
    let el = dir.path().join("p3.txt");
    std::fs::write(&el, "# the path of length three\nz x\nx y\ny w\n").unwrap();
    let el = el.to_str().unwrap();
    assert_eq!(facet_sets(&stdout(&["facets", el])), facet_sets(&stdout(&["facets", "p3"])));
    let g6 = dir.path().join("c5.g6");
    std::fs::write(&g6, "Dhc\n").unwrap();
    assert_eq!(stdout(&["is-cm", g6.to_str().unwrap()]), "CM\n");

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "a b\nb c d\n").unwrap();
    let out = edgesquare(&["facets", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains(":2:5:"));
}

#[test]
fn error_exit_codes() {
    assert_eq!(edgesquare(&["is-cm", "c5", "--char", "6"]).status.code(), Some(2));
    assert_eq!(edgesquare(&["census", "7"]).status.code(), Some(4));
    assert_eq!(edgesquare(&["is-cm", "/no/such/graph"]).status.code(), Some(2));
    assert_eq!(edgesquare(&["facets", "c5", "--route", "generic", "--witness"]).status.code(), Some(2));
    assert!(!edgesquare(&["bogus"]).status.success());
}

#[test]
fn json_lines_round_trip() {
    let facets: Vec<FacetRecord> = round_trip(&stdout(&["--format", "json-lines", "facets", "triangle"]));
    assert_eq!(facets.len(), 10);
    let v: Vec<VerdictRecord> = round_trip(&stdout(&["is-cm", "p3", "--format", "json-lines"]));
    assert_eq!(v[0].witness.as_ref().unwrap().face, ["x1", "y1", "z2", "w2"]);
    let c: Vec<CycleRecord> = round_trip(&stdout(&["classify-cycle", "5", "--verify", "--format", "json-lines"]));
    assert!(c[0].theorem && c[0].verified.as_ref().unwrap().is_cm);
    let p: Vec<PurityRecord> = round_trip(&stdout(&["is-pure", "c5", "--format", "json-lines"]));
    assert!(p[0].is_pure);
    let s: Vec<ScreenRecord> = round_trip(&stdout(&["screen", "p3", "--format", "json-lines"]));
    assert_eq!(s[0].path.as_deref().unwrap(), ["z", "x", "y", "w"]);
    let i: Vec<IdealRecord> = round_trip(&stdout(&["show-ideal", "k2", "--format", "json-lines"]));
    assert_eq!(i[0].polarized, ["x1*x2*y1*y2"]);
    let census: Vec<CensusLine> = round_trip(&stdout(&["census", "5", "--char", "2,3", "--format", "json-lines"]));
    assert_eq!(census.len(), 1 + 2 + 6 + 21);
    assert!(census.iter().all(|l| l.verdicts.len() == 2 && !l.field_disagreement));
    let cm: Vec<&str> = census.iter().filter(|l| l.verdicts[0].is_cm).map(|l| l.graph6.as_str()).collect();
    assert_eq!(cm, ["A_", "DLo"]);
}

#[test]
fn census_table_summary() {
    let text = stdout(&["census", "6"]);
    assert!(text.contains("graphs: 142"), "{text}");
    assert!(text.contains("  any: 2 of 142 [A_ DLo]"), "{text}");
    assert!(text.contains("  cycle: 1 of 4 [DLo]"), "{text}");
    assert!(text.contains("field disagreements: 0"));
}
