use std::process::{Command, Output};

fn rookmon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rookmon")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn multiplies_the_diagram_example() {
    let o = rookmon(&["mul", "-n", "6", "<1,1,3>", "<2,3,4>"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "<3,2,3>\n");
}

#[test]
fn accepts_json_elements() {
    let o = rookmon(&["mul", "-n", "2", r#"{"d":1,"k":1,"m":1}"#, "<-1,2,2>"]);
    assert_eq!(stdout(&o), "<0,1,1>\n");
    let o = rookmon(&["pow", "\"zero\"", "3"]);
    assert_eq!(stdout(&o), "0\n");
}

#[test]
fn element_operations() {
    assert_eq!(stdout(&rookmon(&["pow", "-n", "5", "<1,1,4>", "2"])), "<2,1,3>\n");
    assert_eq!(stdout(&rookmon(&["root", "-n", "5", "<2,1,3>", "2"])), "<1,1,4>\n");
    assert_eq!(stdout(&rookmon(&["root", "<3,1,1>", "2"])), "none\n");
    assert_eq!(stdout(&rookmon(&["transpose", "<1,1,3>"])), "<-1,2,4>\n");
    assert_eq!(stdout(&rookmon(&["commutes", "<1,1,1>", "<-1,2,2>"])), "false\n");
    assert_eq!(stdout(&rookmon(&["classify", "-n", "3", "<0,1,3>"])), "identity\n");
    assert_eq!(stdout(&rookmon(&["classify", "<0,1,3>"])), "idempotent\n");
    assert_eq!(stdout(&rookmon(&["classify", "-n", "6", "<1,1,5>"])), "nilpotent (index 6)\n");
}

#[test]
fn printed_elements_reparse() {
    let listing = stdout(&rookmon(&["enumerate", "-n", "3"]));
    assert_eq!(listing.lines().count(), 15);
    for line in listing.lines() {
        let o = rookmon(&["transpose", "-n", "3", line]);
        assert!(o.status.success(), "{line}");
        let back = rookmon(&["transpose", "-n", "3", stdout(&o).trim()]);
        assert_eq!(stdout(&back).trim(), line);
    }
}

#[test]
fn cayley_table_of_s2() {
    let o = rookmon(&["cayley", "-n", "2", "--family", "Sn", "--letters"]);
    assert!(o.status.success());
    let golden = include_str!("../../core/tests/golden/s2_cayley.txt");
    assert!(stdout(&o).starts_with(golden));
    let csv = stdout(&rookmon(&["cayley", "-n", "2", "--family", "Sn", "--format", "csv"]));
    assert_eq!(csv.lines().count(), 6);
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&rookmon(&["cayley", "-n", "2", "--format", "json"]))).unwrap();
    assert_eq!(json["elements"].as_array().unwrap().len(), 5);
}

#[test]
fn census_to_seventy_confirms_the_conjecture() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("census.csv");
    let plot = dir.path().join("ratio.dat");
    let o = rookmon(&[
        "census",
        "2",
        "70",
        "--csv",
        csv.to_str().unwrap(),
        "--gnuplot",
        plot.to_str().unwrap(),
        "--budget-direct",
        "12",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("n,psi_reduced,psi_conjecture,conjecture_ok,ratio,ratio_closed_form"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 69);
    assert!(rows.iter().all(|r| r.split(',').nth(3) == Some("true")));
    assert_eq!(rows[0], "2,17,17,true,1/2,1/2");
    assert_eq!(std::fs::read_to_string(plot).unwrap().lines().count(), 70);
}

#[test]
fn verify_suite_passes() {
    let o = rookmon(&["verify", "associativity", "--n-max", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("[PASS]"));
}

#[test]
fn render_formats() {
    let svg = stdout(&rookmon(&["render", "-n", "6", "<1,1,3>", "--times", "<2,3,4>", "--format", "svg"]));
    assert_eq!(svg, include_str!("../../core/tests/golden/product_113_234_n6.svg"));
    let ascii = stdout(&rookmon(&["render", "-n", "6", "<1,1,3>"]));
    assert_eq!(ascii, include_str!("../../core/tests/golden/diagram_113_n6.txt"));
}

#[test]
fn reads_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let good = dir.path().join("good.txt");
    std::fs::write(&good, "0000\n1000\n0100\n0000\n").unwrap();
    assert_eq!(stdout(&rookmon(&["from-matrix", good.to_str().unwrap()])), "<-1,2,3>\n");
    let gap = dir.path().join("gap.txt");
    std::fs::write(&gap, "100\n000\n001\n").unwrap();
    assert_eq!(rookmon(&["from-matrix", gap.to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn exit_codes() {
    let bad = rookmon(&["mul", "-n", "2", "<1,1,3>", "0"]);
    assert_eq!(bad.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("exceeds"));
    let malformed = rookmon(&["mul", "<1,x,3>", "0"]);
    assert_eq!(malformed.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&malformed.stderr).contains("position 3"));
    assert_eq!(rookmon(&["verify", "nonsense"]).status.code(), Some(1));
    assert_eq!(rookmon(&["pow", "<1,1,1>", "0"]).status.code(), Some(1));
    assert_eq!(rookmon(&["--help"]).status.code(), Some(0));
    assert_eq!(rookmon(&[]).status.code(), Some(1));
}
