use std::path::PathBuf;
use std::process::{Command, Output};

use bicc_cli::report::{CheckReport, SweepReport, Verdict};

fn bicc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bicc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("data")
        .join(name)
        .display()
        .to_string()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(path).unwrap()
}

fn report(out: &Output) -> CheckReport {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn verify_distrib_in_finite_sets() {
    let out = bicc(&["verify", "distrib", "--instance", "finset", "--sizes", "2,1,3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.check, "distrib");
    assert!(r.counterexample.is_none());
}

#[test]
fn verify_distrib_in_thirty() {
    let out = bicc(&[
        "verify", "distrib", "--instance", "heyting", "--lattice", "divisors:30", "--objects", "6,10,15", "--json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).params["objects"], serde_json::json!(["6", "10", "15"]));
}

#[test]
fn non_distributive_lattices_exit_two_with_a_triple() {
    for file in ["m3.json", "n5.json"] {
        let out = bicc(&["verify", "distrib", "--instance", "heyting", "--lattice", &data(file), "--json"]);
        assert_eq!(out.status.code(), Some(2), "{file}");
        let r = report(&out);
        assert_eq!(r.verdict, Verdict::RejectedInput);
        let w = &r.counterexample.unwrap()["witness"];
        for k in ["a", "b", "c"] {
            assert!(w[k].is_string(), "{file}: {w}");
        }
    }
}

#[test]
fn bad_input_exits_two() {
    for args in [
        &["verify", "curry", "--sizes", "2,x,1"][..],
        &["verify", "curry"],
        &["verify", "curry", "--instance", "heyting"],
        &["verify", "curry", "--instance", "heyting", "--lattice", "divisors:0"],
        &["verify", "curry", "--instance", "heyting", "--lattice", "divisors:30", "--objects", "6,7,15"],
        &["verify", "curry", "--instance", "terms", "--objects", "A,(B,C"],
        &["verify", "curry", "--instance", "heyting", "--lattice", "/nonexistent.json"],
        &["verify", "nonsense"],
    ] {
        assert_eq!(bicc(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn sets_file_and_downset_lattice() {
    let out = bicc(&["verify", "mediator", "--sets", &data("sets.json"), "--json"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).params["sizes"], serde_json::json!([2, 1, 3]));
    let spec = format!("downset:{}", data("vee.json"));
    let out = bicc(&["verify", "adjunction", "--instance", "heyting", "--lattice", &spec]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stdout));
}

#[test]
fn verify_every_check_in_every_instance() {
    for check in ["distrib", "curry", "adjunction", "mediator"] {
        for extra in [
            &["--instance", "finset", "--sizes", "2,2,1"][..],
            &["--instance", "heyting", "--lattice", "divisors:12"],
            &["--instance", "terms"],
        ] {
            let mut args = vec!["verify", check];
            args.extend_from_slice(extra);
            let out = bicc(&args);
            assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stdout));
        }
    }
}

#[test]
fn custom_mediator_codomain() {
    let out = bicc(&["verify", "mediator", "--sizes", "1,2,1", "--codomain-size", "3", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.params["cocones"], "exhaustive");
    assert_eq!(r.cases, 3 * 27);
}

#[test]
fn sweeps() {
    let out = bicc(&["sweep", "--instance", "finset", "--max-size", "0", "--json"]);
    assert_eq!(out.status.code(), Some(0));
    let s: SweepReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(s.summary.total, 4);
    assert_eq!(s.summary.pass, 4);

    let out = bicc(&["sweep", "--instance", "finset", "--max-size", "2", "--json"]);
    let s: SweepReport = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(s.summary.total, 27 * 4);
    assert_eq!(s.summary.pass, 27 * 4);
    let order: Vec<_> = s.reports.iter().step_by(4).map(|r| r.params["sizes"].clone()).collect();
    assert_eq!(order[0], serde_json::json!([0, 0, 0]));
    assert_eq!(order[1], serde_json::json!([0, 0, 1]));
    assert_eq!(order[26], serde_json::json!([2, 2, 2]));

    let out = bicc(&["sweep", "--instance", "heyting", "--max-poset", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.trim_end().ends_with("96 checks: 96 passed, 0 failed, 0 rejected"), "{text}");
}

#[test]
fn dot_output_is_golden() {
    let out = bicc(&["emit-dot", "1", "--sizes", "2,1,3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("diagram1_2_1_3.dot"));
    let out = bicc(&["emit-dot", "4"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden("diagram4.dot"));
}

#[test]
fn dot_output_is_deterministic_and_rejects_unknown_ids() {
    for id in ["1", "2", "3", "4", "5"] {
        let a = bicc(&["emit-dot", id]);
        let b = bicc(&["emit-dot", id]);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout);
    }
    assert_eq!(bicc(&["emit-dot", "9"]).status.code(), Some(2));
    assert_eq!(bicc(&["emit-dot", "one"]).status.code(), Some(2));
    assert_eq!(bicc(&["emit-dot", "1", "--sizes", "1,1"]).status.code(), Some(2));
}
