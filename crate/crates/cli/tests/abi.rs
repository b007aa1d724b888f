//! The command-line contract: flags, output formats and exit codes.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nagumo-atlas"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

#[test]
fn table_one_rows() {
    let out = run(&["count", "--n-max", "10", "--table1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,total_A3,BLpi_A3,total_A2,BLpi_A2");
    assert_eq!(lines.len(), 10);
    assert_eq!(lines[1], "2,3,2,2,1");
    assert_eq!(lines[9], "10,2689,1628,95,39");
}

#[test]
fn count_range_guard() {
    assert_eq!(run(&["count", "--n-max", "70"]).status.code(), Some(2));
    assert_eq!(run(&["count", "--n-max", "0"]).status.code(), Some(2));
    let one = stdout(&run(&["count", "--n-max", "1", "--alphabet", "a2"]));
    assert_eq!(
        one,
        "n,N_A2,B_A2,Npi_A2,Bpi_A2,NL_A2,BL_A2,NLpi_A2,BLpi_A2,total_A2\n1,2,2,1,1,2,2,1,1,\n"
    );
}

#[test]
fn count_writes_files() {
    let path = std::path::Path::new(env!("CARGO_TARGET_TMPDIR")).join("counts.csv");
    let out = run(&["count", "--n-max", "64", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 65);
}

#[test]
fn orbit_listings() {
    let c3 = stdout(&run(&[
        "orbits",
        "-n",
        "3",
        "--alphabet",
        "a3",
        "--group",
        "c3",
    ]));
    assert_eq!(c3.lines().count(), 11);
    let d6 = stdout(&run(&[
        "orbits",
        "-n",
        "6",
        "--alphabet",
        "a2",
        "--group",
        "d6pi",
        "--lyndon",
    ]));
    let reps: Vec<&str> = d6.lines().map(|l| l.split(' ').next().unwrap()).collect();
    assert_eq!(reps, ["000001", "000011", "000101", "000111", "001011"]);
    let c1 = stdout(&run(&[
        "orbits",
        "-n",
        "1",
        "--alphabet",
        "a2",
        "--group",
        "c1",
    ]));
    assert_eq!(c1, "0 1\n1 1\n");
    let full = stdout(&run(&[
        "orbits",
        "--alphabet",
        "a2",
        "--group",
        "d4",
        "--full",
    ]));
    assert!(full.lines().any(|l| l == "0101 2 0101,1010"));
}

#[test]
fn orbit_usage_errors() {
    assert_eq!(
        run(&["orbits", "-n", "3", "--group", "x3"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["orbits", "--group", "c"]).status.code(), Some(2));
    assert_eq!(
        run(&["orbits", "-n", "25", "--group", "c"]).status.code(),
        Some(2)
    );
    assert_eq!(
        run(&["orbits", "-n", "3", "--alphabet", "a4", "--group", "c"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn solve_json() {
    let out = run(&[
        "solve", "--word", "0a11", "--a", "0.475", "--d", "0.025", "--json",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["word"], "0a11");
    assert_eq!(v["a"], 0.475);
    assert_eq!(v["u"].as_array().unwrap().len(), 4);
    assert_eq!(v["stable"], false);
    assert!(v["residual_norm"].as_f64().unwrap() <= 1e-12);
    assert!(v["det_sign"].as_i64().unwrap().abs() == 1);
}

#[test]
fn solve_outside_region_and_bad_input() {
    assert_eq!(
        run(&["solve", "--word", "01", "--a", "0.5", "--d", "0.07"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["solve", "--word", "01", "--a", "1.5", "--d", "0.01"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        run(&["solve", "--word", "0x", "--a", "0.5", "--d", "0.01"])
            .status
            .code(),
        Some(2)
    );
    let text = stdout(&run(&[
        "solve", "--word", "111", "--a", "0.3", "--d", "0.4",
    ]));
    assert!(text.contains("stable true"));
}

#[test]
fn region_csv_and_comparison() {
    let out = run(&[
        "region",
        "--word",
        "011",
        "--a-min",
        "0.1",
        "--a-max",
        "0.9",
        "--a-count",
        "5",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "word,a,d_max,terminal");
    assert_eq!(lines.len(), 6);
    assert!(lines[3].starts_with("011,0.5,"));

    let cmp = stdout(&run(&[
        "region",
        "--word",
        "011",
        "--compare",
        "001",
        "--mirror",
        "--a-min",
        "0.1",
        "--a-max",
        "0.9",
        "--a-count",
        "5",
    ]));
    for line in cmp.lines().skip(1) {
        let deviation: f64 = line.rsplit(',').next().unwrap().parse().unwrap();
        assert!(deviation <= 1e-8, "{line}");
    }
    assert_eq!(
        run(&["region", "--word", "01", "--a-min", "0.0"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn verify_modes() {
    let out = run(&["verify", "--identities-only", "--n-max", "10000"]);
    assert_eq!(out.status.code(), Some(0));
    let full = run(&["verify", "--a2-max", "8", "--a3-max", "5", "--seed", "3"]);
    assert_eq!(full.status.code(), Some(0));
    assert!(stdout(&full).contains("counts: 104 cases"));
}

#[test]
fn thread_cap_and_determinism() {
    let with_threads = |t: &str| {
        Command::new(env!("CARGO_BIN_EXE_nagumo-atlas"))
            .env("NAGUMO_ATLAS_THREADS", t)
            .args([
                "region",
                "--word",
                "0a1",
                "--a-count",
                "21",
                "--a-min",
                "0.05",
                "--a-max",
                "0.95",
            ])
            .output()
            .unwrap()
    };
    let one = with_threads("1");
    let four = with_threads("4");
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(with_threads("0").status.code(), Some(2));
    assert_eq!(with_threads("many").status.code(), Some(2));
}
