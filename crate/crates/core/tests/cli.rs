use std::path::PathBuf;
use std::process::{Command, Output};

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn invkit(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_invkit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn table_one_matches_golden() {
    let o = invkit(&["table", "--table", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(o.stdout, std::fs::read(golden("table1.csv")).unwrap());
}

#[test]
fn table_two_matches_golden() {
    let o = invkit(&["table", "--table", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(o.stdout, std::fs::read(golden("table2.csv")).unwrap());
}

#[test]
fn exact_tables_match_closed_form_tables() {
    for t in ["1", "2"] {
        let cf = invkit(&["table", "--table", t]);
        let ex = invkit(&["table", "--table", t, "--method", "exact"]);
        assert_eq!(cf.stdout, ex.stdout, "table {t}");
    }
}

#[test]
fn table_rows() {
    let t1 = stdout(&invkit(&["table", "--table", "1"]));
    assert!(t1.lines().any(|l| l == "G_7,44.33,62705664"));
    let t2 = stdout(&invkit(&["table", "--table", "2"]));
    assert!(t2.lines().any(|l| l == "G_14,7320.83"));
    let custom = invkit(&["table", "--family", "gn", "--range", "3..3", "--columns", "kf"]);
    assert_eq!(stdout(&custom), "G,kf\nG_3,5.00\n");
    let md = stdout(&invkit(&["table", "--family", "gn", "--range", "3..4", "--columns", "kf,kfstar,wiener,gutman", "--format", "markdown"]));
    assert!(md.contains("| G_4 | 10.33 | 258.33 | 36 | 900 |"));
}

#[test]
fn compute_all_agrees_on_g3() {
    let o = invkit(&["compute", "--family", "gn", "--n", "3", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("gn,3,0,,exact,5,125,1296,15,375"));
    assert!(String::from_utf8_lossy(&o.stderr).contains("all methods agree"));
}

#[test]
fn compute_from_file_matches_family() {
    let file = golden("k6.edges");
    let o = invkit(&["compute", "--input", file.to_str().unwrap(), "--method", "exact"]);
    assert_eq!(o.status.code(), Some(0));
    let row = stdout(&o).lines().nth(1).unwrap().to_string();
    assert!(row.ends_with(",exact,5,125,1296,15,375"), "{row}");
}

#[test]
fn compute_grn_example() {
    let o = invkit(&["compute", "--family", "grn", "--n", "5", "--deleted", "2,4", "--method", "all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("grn,5,2,2;4,exact,20,"));
    assert!(out.contains("grn,5,2,2;4,closed-form,20,,138240,67,"));
}

#[test]
fn exit_codes() {
    let disconnected = golden("disconnected.edges");
    let o = invkit(&["compute", "--input", disconnected.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("disconnected"));

    let missing = invkit(&["compute", "--input", "/nonexistent/graph.edges"]);
    assert_eq!(missing.status.code(), Some(2));

    assert_eq!(invkit(&["compute", "--family", "gn", "--n", "2"]).status.code(), Some(1));
    assert_eq!(invkit(&["compute", "--family", "grn", "--n", "5", "--deleted", "9"]).status.code(), Some(1));
    assert_eq!(invkit(&["table", "--family", "gn", "--range", "x..4"]).status.code(), Some(1));
    assert_eq!(invkit(&["ratio", "--family", "gn"]).status.code(), Some(1));
    assert_eq!(invkit(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(invkit(&["verify", "--n-max", "5"]).status.code(), Some(0));
}

#[test]
fn parse_errors_exit_two() {
    let dir = std::env::temp_dir().join(format!("invkit-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("loop.edges");
    std::fs::write(&bad, "2 1\n0 0\n").unwrap();
    let o = invkit(&["compute", "--input", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn sabotaged_verify_exits_three_with_location() {
    let o = invkit(&["verify", "--n-max", "4", "--sabotage"]);
    assert_eq!(o.status.code(), Some(3));
    let out = stdout(&o);
    assert!(out.contains("mismatch n=3 D=[] invariant=kf expected=23/4 got=5"), "{out}");
}

#[test]
fn seeded_random_deletion_is_deterministic() {
    let args = ["compute", "--family", "grn", "--n", "9", "--r", "4", "--seed", "17", "--format", "json"];
    let a = invkit(&args);
    let b = invkit(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v["r"], 4);
    assert_eq!(v["deleted"].as_array().unwrap().len(), 4);

    let v1 = invkit(&["verify", "--n-max", "10", "--exhaustive-d-max", "5", "--seed", "3"]);
    let v2 = invkit(&["verify", "--n-max", "10", "--exhaustive-d-max", "5", "--seed", "3"]);
    assert_eq!(v1.stdout, v2.stdout);
}

#[test]
fn verify_respects_thread_override() {
    let o = Command::new(env!("CARGO_BIN_EXE_invkit"))
        .args(["verify", "--n-max", "6"])
        .env("INVKIT_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let bad = Command::new(env!("CARGO_BIN_EXE_invkit"))
        .args(["verify", "--n-max", "6"])
        .env("INVKIT_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn ratio_output() {
    let o = invkit(&["ratio", "--family", "gn", "--n-range", "10..100", "--step", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let devs: Vec<f64> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(3).unwrap().parse().unwrap())
        .collect();
    assert_eq!(devs.len(), 10);
    assert!(devs.windows(2).all(|w| w[1] < w[0]));

    let grn = stdout(&invkit(&["ratio", "--family", "grn", "--n", "50", "--r", "50"]));
    // Kf = (125000 + 10000 + 4950)/12, W = (125000 + 100)/2 + 50.
    assert_eq!(grn, "n,r,ratio,deviation\n50,50,0.186302,0.019635\n");
}
