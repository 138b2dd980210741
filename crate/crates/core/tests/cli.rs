use std::process::{Command, Output};

fn gwcurves(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwcurves")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn invariant_of_quartic() {
    let o = gwcurves(&["invariant", "--polygon", "p2:4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "190h + 240*<1>  N=620  W=240");
}

#[test]
fn base_cases() {
    for (poly, want) in [
        ("F1_4_2E", "24h + 48*<1>  N=96  W=48"),
        ("BlF1", "2h + 8*<1>  N=12  W=8"),
        ("Bl2F1", "<1>  N=1  W=1"),
        ("p2:3", "2h + 8*<1>  N=12  W=8"),
    ] {
        let o = gwcurves(&["invariant", "--polygon", poly]);
        assert_eq!(stdout(&o).trim(), want, "{poly}");
    }
}

#[test]
fn negative_signature_column() {
    let o = gwcurves(&["table", "--chain", "F1_4_2E", "--signature", "neg"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let first: Vec<&str> = text.lines().skip(1).take(5).map(str::trim).collect();
    assert_eq!(first, ["s=0: 48", "s=1: 32", "s=2: 20", "s=3: 12", "s=4: 8"]);
}

#[test]
fn equality_exit_codes() {
    assert_eq!(gwcurves(&["gw-equal", "<1> + <1>", "<2> + <2>"]).status.code(), Some(0));
    assert_eq!(gwcurves(&["gw-equal", "<1> + <-1>", "h"]).status.code(), Some(0));
    assert_eq!(gwcurves(&["gw-equal", "<2>", "<1>"]).status.code(), Some(1));
    assert_eq!(gwcurves(&["gw-equal", "<1> + <1>", "<3> + <3>"]).status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["gw-eval", "<0>"][..],
        &["gw-equal", "<1>"],
        &["invariant", "--polygon", "nope"],
        &["tropical", "--polygon", "p2:9"],
        &["table", "--chain", "p2:4,BlF1"],
        &["table", "--specialize", "0"],
        &["frobnicate"],
    ] {
        let o = gwcurves(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn budget_guard_can_be_raised() {
    assert_eq!(gwcurves(&["invariant", "--polygon", "p2:4", "--max-budget", "10"]).status.code(), Some(2));
    assert!(gwcurves(&["invariant", "--polygon", "p2:3", "--max-budget", "8"]).status.success());
}

#[test]
fn json_is_stable_and_well_formed() {
    let a = gwcurves(&["table", "--chain", "F1_4_2E", "--json"]);
    let b = gwcurves(&["table", "--chain", "F1_4_2E", "--json"]);
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    let tables = v.as_array().unwrap();
    assert_eq!(tables.len(), 3);
    assert_eq!(tables[0]["rows"].as_array().unwrap().len(), 5);
    assert_eq!(tables[0]["polygon"]["vertices"][1], serde_json::json!([4, 0]));

    let o = gwcurves(&["invariant", "--polygon", "p2:4", "--json"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["complex"], 620);
    assert_eq!(v["welschinger"], 240);
    assert_eq!(v["normal_form"]["pretty"], "190h + 240*<1>");
    let raw = v["motivic"]["pretty"].as_str().unwrap();
    assert_eq!(gwcurves(&["gw-equal", raw, "190h + 240*<1>"]).status.code(), Some(0));
}

#[test]
fn tropical_writes_files() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("curves.json");
    let svg = dir.path().join("curves.svg");
    let o =
        gwcurves(&["tropical", "--polygon", "p2:3", "--json", json.to_str().unwrap(), "--svg", svg.to_str().unwrap()]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    assert_eq!(v["curves"].as_array().unwrap().len(), 9);
    assert_eq!(v["count"]["complex"], 12);
    let picture = std::fs::read_to_string(&svg).unwrap();
    assert!(picture.starts_with("<svg") || picture.starts_with("<?xml"));
    assert!(picture.matches("<polygon").count() > 9);
}

#[test]
fn polygon_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("square.json");
    std::fs::write(&path, r#"{"vertices": [[0,0],[2,0],[2,2],[0,2]]}"#).unwrap();
    let o = gwcurves(&["invariant", "--polygon", path.to_str().unwrap()]);
    assert_eq!(stdout(&o).trim(), "2h + 8*<1>  N=12  W=8");
    std::fs::write(&path, "[[0,0]]").unwrap();
    assert_eq!(gwcurves(&["invariant", "--polygon", path.to_str().unwrap()]).status.code(), Some(2));
}

#[test]
fn thread_count_does_not_change_output() {
    let run = |threads: &str| {
        Command::new(env!("CARGO_BIN_EXE_gwcurves"))
            .env("GWCURVES_THREADS", threads)
            .args(["tropical", "--polygon", "F1_4_2E", "--list-curves"])
            .output()
            .unwrap()
            .stdout
    };
    assert_eq!(run("1"), run("4"));
}

#[test]
fn kontsevich_oracle() {
    assert_eq!(stdout(&gwcurves(&["oracle", "--kontsevich", "5"])).trim(), "87304");
}
