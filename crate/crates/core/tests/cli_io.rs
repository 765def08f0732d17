//! End-to-end CLI behavior: pinned example bytes, stable ordering, exit
//! codes, and format switches.

use leghopf::cli::run;

fn capture(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("leghopf").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn pinned_examples() {
    let (code, out, _) = capture(&["count", "--t0", "3", "--t1", "1"]);
    assert_eq!((code, out.as_str()), (0, "3\n"));

    let (code, out, _) = capture(&["cfrac", "-s", "-2/1"]);
    assert_eq!((code, out.as_str()), (0, "[-2] N=2\n"));

    let (code, out, _) = capture(&["classify", "--t0", "1", "--t1", "1"]);
    assert_eq!((code, out.as_str()), (0, "(1,0,1,0) d3=1/2 exc/exc\n"));
}

#[test]
fn twisting_counts_through_cli() {
    let (code, out, _) = capture(&["count", "--t0", "2", "--t1", "1", "--twisting", "3"]);
    assert_eq!((code, out.as_str()), (0, "2\n"));

    let (code, out, _) = capture(&[
        "count", "--t0", "1", "--t1", "1", "--twisting", "3", "--diffeo",
    ]);
    assert_eq!((code, out.as_str()), (0, "1\n"));
}

#[test]
fn output_is_sorted_and_repeatable() {
    let args = [
        "table", "--which", "se", "--t0-min", "-3", "--t0-max", "3", "--t1-min", "-3",
        "--t1-max", "3",
    ];
    let (code, first, _) = capture(&args);
    assert_eq!(code, 0);
    let (_, second, _) = capture(&args);
    assert_eq!(first, second);
    // the emitted bytes are exactly the sorted union over the grid
    let mut rows = Vec::new();
    for t0 in -3..=3 {
        for t1 in -3..=3 {
            rows.extend(leghopf::classify::strongly_exceptional(t0, t1));
        }
    }
    rows.sort();
    let want: String = rows.iter().map(|r| format!("{r}\n")).collect();
    assert_eq!(first, want);
}

#[test]
fn summary_table_restricts_to_positive_quadrant() {
    let (code, out, _) = capture(&[
        "table", "--which", "summary", "--t0-min", "-3", "--t0-max", "3", "--t1-min", "-3",
        "--t1-max", "3",
    ]);
    assert_eq!(code, 0);
    for line in out.lines() {
        assert!(line.starts_with("(1,") || line.starts_with("(2,") || line.starts_with("(3,"));
    }
    // the unique fully exceptional row is present
    assert!(out.contains("(1,0,1,0) d3=1/2 exc/exc"), "{out}");
}

#[test]
fn emit_then_invariants_round_trip() {
    let (code, json, _) = capture(&[
        "family", "--id", "C4", "--variant", "2", "--n", "1", "--m", "0", "--emit",
    ]);
    assert_eq!(code, 0);
    let path = std::env::temp_dir().join(format!("leghopf-emit-{}.json", std::process::id()));
    std::fs::write(&path, &json).unwrap();
    let (code, out, _) = capture(&["invariants", "-f", path.to_str().unwrap()]);
    std::fs::remove_file(&path).ok();
    assert_eq!(code, 0);
    assert!(out.contains("component 0: tb = 4"), "{out}");
    assert!(out.contains("lk(0,1) = 1"), "{out}");
    assert!(out.contains("parity: ok"), "{out}");
}

#[test]
fn json_and_tsv_round_trips() {
    let (code, out, _) = capture(&[
        "classify", "--t0", "-2", "--t1", "-2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 4);
    assert_eq!(rows[0]["type0"], "tight-ambient");
    assert_eq!(rows[0]["ambient_d3"], "-1/2");

    let (code, out, _) = capture(&[
        "classify", "--t0", "-2", "--t1", "-2", "--format", "tsv",
    ]);
    assert_eq!(code, 0);
    for line in out.lines() {
        assert_eq!(line.split('\t').count(), 8, "{line}");
    }

    let (code, out, _) = capture(&["cfrac", "-s", "-17/5", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert!(v["entries"].is_array());
    assert_eq!(v["count"], "9");
}

#[test]
fn exit_codes_and_machine_errors() {
    let (code, _, err) = capture(&["nonsense"]);
    assert_eq!(code, 2);
    assert!(serde_json::from_str::<serde_json::Value>(&err).is_ok(), "{err}");

    let (code, _, err) = capture(&["cfrac", "-s", "-1/2"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"], "usage");

    let (code, _, err) = capture(&["classify", "--t0", "1", "--t1", "1", "--case", "tight"]);
    assert_eq!(code, 2);
    let v: serde_json::Value = serde_json::from_str(&err).unwrap();
    assert_eq!(v["error"], "usage");
}

#[test]
fn selfcheck_reports_every_criterion() {
    let (code, out, _) = capture(&["selfcheck"]);
    assert_eq!(code, 0, "{out}");
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 8, "{out}");
    for line in lines {
        assert!(line.ends_with(": pass"), "{line}");
    }
}
