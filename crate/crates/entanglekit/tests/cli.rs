//! End-to-end tests of the `entanglekit` binary.

use std::process::{Command, Output};

use entanglekit::statefile::{self, StateFile};
use entanglekit_core::measures;
use entanglekit_core::states::{werner, BipartiteDims};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_entanglekit"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(output: &Output) -> String {
    assert!(
        output.status.success(),
        "command failed: {}",
        String::from_utf8_lossy(&output.stderr)
    );
    String::from_utf8(output.stdout.clone()).unwrap()
}

#[test]
fn analyze_werner_half_matches_library() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let gen = run(&[
        "generate",
        "--family",
        "werner",
        "--x",
        "0.5",
        "--output",
        path.to_str().unwrap(),
    ]);
    assert!(gen.status.success());

    let out = run(&["analyze", "--input", path.to_str().unwrap(), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["separability"]["aggregate"], "entangled");
    let c = doc["measures"]["values"]["concurrence"].as_f64().unwrap();
    let nt = doc["measures"]["values"]["negativity"].as_f64().unwrap();
    assert!((c - 0.25).abs() < 1e-9);
    assert!((nt - 0.25).abs() < 1e-9);

    // CLI output equals the library call exactly
    let rho = werner(2, 0.5).unwrap();
    let lib_c = measures::concurrence_2q(&rho).unwrap();
    assert_eq!(c.to_bits(), lib_c.to_bits());
}

#[test]
fn analyze_maximally_mixed_is_separable() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mixed.json");
    run(&[
        "generate",
        "--family",
        "werner",
        "--x",
        "0",
        "--output",
        path.to_str().unwrap(),
    ]);
    let out = run(&["analyze", "--input", path.to_str().unwrap(), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["separability"]["aggregate"], "separable");
    assert!(doc["measures"]["values"]["concurrence"].as_f64().unwrap().abs() < 1e-12);
    assert!((doc["measures"]["values"]["fidelity"].as_f64().unwrap() - 0.25).abs() < 1e-12);
}

#[test]
fn analyze_tiles_state_keeps_ppt_but_detects_by_reshuffling() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tiles.json");
    run(&["generate", "--family", "tiles", "--output", path.to_str().unwrap()]);

    match statefile::read_state(&path).unwrap() {
        StateFile::Density(rho) => {
            assert_eq!(rho.dims(), BipartiteDims::new(3, 3).unwrap());
            let rank = rho.spectrum().iter().filter(|&&l| l > 1e-10).count();
            assert_eq!(rank, 4);
        }
        _ => panic!("tiles must be a density state"),
    }

    let out = run(&["analyze", "--input", path.to_str().unwrap(), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let verdicts = doc["separability"]["verdicts"].as_array().unwrap();
    let ppt = verdicts.iter().find(|v| v["criterion"] == "ppt").unwrap();
    assert_eq!(ppt["outcome"], "passed");
    let resh = verdicts
        .iter()
        .find(|v| v["criterion"] == "reshuffling")
        .unwrap();
    assert_eq!(resh["outcome"], "entanglement-detected");
    assert_eq!(doc["separability"]["aggregate"], "entangled");

    // with PPT alone the verdict is inconclusive (d = 9 > 6)
    let out = run(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--criteria",
        "ppt",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["separability"]["aggregate"], "inconclusive");
}

#[test]
fn generate_threshold_werner_has_zero_pt_eigenvalue() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w3.json");
    run(&[
        "generate",
        "--family",
        "werner",
        "--n",
        "2",
        "--x",
        "0.3333333333",
        "--output",
        path.to_str().unwrap(),
    ]);
    let out = run(&["analyze", "--input", path.to_str().unwrap(), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let verdicts = doc["separability"]["verdicts"].as_array().unwrap();
    let ppt = verdicts.iter().find(|v| v["criterion"] == "ppt").unwrap();
    assert!(ppt["evidence"].as_f64().unwrap().abs() < 1e-9);
}

#[test]
fn generate_bell_is_maximally_entangled_pure_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bell.json");
    run(&[
        "generate",
        "--family",
        "bell",
        "--kind",
        "psi-",
        "--output",
        path.to_str().unwrap(),
    ]);
    match statefile::read_state(&path).unwrap() {
        StateFile::Pure(psi) => {
            let s = entanglekit_core::states::schmidt(&psi);
            assert!((s.coefficients[0] - 0.5).abs() < 1e-12);
            assert!((s.coefficients[1] - 0.5).abs() < 1e-12);
        }
        _ => panic!("bell must be pure"),
    }
}

#[test]
fn convert_examples() {
    let out = run(&[
        "convert",
        "--source",
        "[0.7,0.25,0.05]",
        "--target",
        "[0.3333333333333333,0.3333333333333333,0.3333333333333334]",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((doc["p_c"].as_f64().unwrap() - 0.15).abs() < 1e-9);

    let out = run(&[
        "convert",
        "--source",
        "[0.6,0.4]",
        "--target",
        "[0.6,0.4]",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["relation"], "interconvertible");
    assert!((doc["p_c"].as_f64().unwrap() - 1.0).abs() < 1e-12);

    let out = run(&[
        "convert",
        "--source",
        "[0.6,0.4,0.0]",
        "--target",
        "[0.5,0.3,0.2]",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(doc["p_c"].as_f64().unwrap().abs() < 1e-12);

    // pure-state file input goes through Schmidt extraction
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bell.json");
    run(&["generate", "--family", "bell", "--kind", "phi+", "--output", path.to_str().unwrap()]);
    let out = run(&[
        "convert",
        "--source",
        path.to_str().unwrap(),
        "--target",
        "[0.9,0.1]",
        "--format",
        "json",
    ]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc["relation"], "future");
}

#[test]
fn sample_is_deterministic_and_writes_sidecar() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("c.csv");
    let args = [
        "sample",
        "--measure",
        "concurrence",
        "--dims",
        "2x2",
        "--ensemble",
        "pure",
        "--n",
        "500",
        "--seed",
        "7",
        "--format",
        "json",
        "--output",
        csv.to_str().unwrap(),
    ];
    let first = stdout(&run(&args));
    let second = stdout(&run(&args));
    assert_eq!(first, second, "sampling must be deterministic per seed");

    let doc: serde_json::Value = serde_json::from_str(&first).unwrap();
    assert_eq!(doc["n"], 500);
    assert_eq!(doc["seed"], 7);
    assert_eq!(doc["generator"], "chacha12+box-muller/v1");

    let body = std::fs::read_to_string(&csv).unwrap();
    assert_eq!(body.lines().count(), 501);
    assert_eq!(body.lines().next().unwrap(), "concurrence");

    let meta_path = dir.path().join("c.csv.meta.json");
    let meta: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&meta_path).unwrap()).unwrap();
    assert_eq!(meta["seed"], 7);
    assert_eq!(meta["dims"][0], 2);
}

#[test]
fn sample_seed_env_var_is_beaten_by_flag() {
    let with_env = bin()
        .args(["sample", "--measure", "entropy", "--n", "50", "--format", "json"])
        .env("ENTANGLEKIT_SEED", "99")
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout(&with_env)).unwrap();
    assert_eq!(doc["seed"], 99);

    let with_flag = bin()
        .args([
            "sample", "--measure", "entropy", "--n", "50", "--seed", "3", "--format", "json",
        ])
        .env("ENTANGLEKIT_SEED", "99")
        .output()
        .unwrap();
    let doc: serde_json::Value = serde_json::from_str(&stdout(&with_flag)).unwrap();
    assert_eq!(doc["seed"], 3);
}

#[test]
fn scatter_rows_land_in_bounds() {
    let out = run(&[
        "sample",
        "--scatter",
        "concurrence:negativity",
        "--ensemble",
        "mixed",
        "--n",
        "200",
        "--seed",
        "5",
    ]);
    let text = stdout(&out);
    let mut rows = 0;
    for line in text.lines().skip(1) {
        let cols: Vec<f64> = line.split(',').map(|t| t.parse().unwrap()).collect();
        assert!(cols[0] >= cols[1] - 1e-9, "C >= N_T violated: {line}");
        rows += 1;
    }
    assert_eq!(rows, 200);
}

#[test]
fn bounds_table_has_expected_rows() {
    let out = run(&["bounds", "--pair", "concurrence:negativity", "--grid", "101"]);
    let text = stdout(&out);
    let lines: Vec<&str> = text.trim().lines().collect();
    assert_eq!(lines.len(), 102);
    let last: Vec<f64> = lines[101].split(',').map(|t| t.parse().unwrap()).collect();
    assert!((last[1] - 1.0).abs() < 1e-12, "lower bound at C = 1 must be 1");
}

#[test]
fn geometry_report_and_sweeps() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bell.json");
    run(&["generate", "--family", "bell", "--kind", "phi+", "--output", path.to_str().unwrap()]);
    let out = run(&["geometry", "--input", path.to_str().unwrap(), "--format", "json"]);
    let doc: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((doc["segre"]["quadric"].as_f64().unwrap() - 0.5).abs() < 1e-12);
    assert!(doc["max_entangled_residual"].as_f64().unwrap() < 1e-12);

    let out = run(&["geometry", "--segre-sweep", "--lines", "3", "--points", "5"]);
    assert_eq!(stdout(&out).trim().lines().count(), 16);

    let out = run(&["geometry", "--octant-sweep", "4"]);
    assert_eq!(stdout(&out).trim().lines().count(), 65);
}

#[test]
fn exit_codes_for_bad_input() {
    // malformed state file names the violated invariant and exits 2
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(
        &path,
        "{\"kind\":\"density\",\"dims\":[2,2],\
         \"re\":[0.5,0,0,0, 0,0.5,0,0, 0,0,0.5,0, 0,0,0,-0.5],\
         \"im\":[0,0,0,0, 0,0,0,0, 0,0,0,0, 0,0,0,0]}",
    )
    .unwrap();
    let out = run_failing(&["analyze", "--input", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("positivity"), "stderr: {err}");

    let out = run_failing(&["generate", "--family", "nope"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run_failing(&["generate", "--family", "werner", "--x", "1.5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run_failing(&["sample", "--measure", "nope", "--n", "5"]);
    assert_eq!(out.status.code(), Some(2));

    let out = run_failing(&["convert", "--source", "[0.7,0.25,0.05]", "--target", "[0.9,0.2]"]);
    assert_eq!(out.status.code(), Some(2));
}

fn run_failing(args: &[&str]) -> Output {
    let out = run_raw(args);
    assert!(!out.status.success(), "expected failure for {args:?}");
    out
}

fn run_raw(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

#[test]
fn bits_option_rescales_entropic_measures() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bell.json");
    run(&["generate", "--family", "bell", "--kind", "phi+", "--output", path.to_str().unwrap()]);
    let nats = run(&["analyze", "--input", path.to_str().unwrap(), "--format", "json"]);
    let bits = run(&[
        "analyze",
        "--input",
        path.to_str().unwrap(),
        "--bits",
        "--format",
        "json",
    ]);
    let nats: serde_json::Value = serde_json::from_str(&stdout(&nats)).unwrap();
    let bits: serde_json::Value = serde_json::from_str(&stdout(&bits)).unwrap();
    let e_nats = nats["measures"]["values"]["entropy"].as_f64().unwrap();
    let e_bits = bits["measures"]["values"]["entropy"].as_f64().unwrap();
    assert!((e_nats - std::f64::consts::LN_2).abs() < 1e-12);
    assert!((e_bits - 1.0).abs() < 1e-12);
    // non-entropic measures are untouched
    assert_eq!(
        nats["measures"]["values"]["concurrence"],
        bits["measures"]["values"]["concurrence"]
    );
}

#[test]
fn generated_files_round_trip_through_analyze() {
    let dir = tempfile::tempdir().unwrap();
    for (family, extra) in [
        ("werner", vec!["--x", "0.4"]),
        ("sigma-h", vec!["--a", "0.3"]),
        ("sigma-b", vec!["--b", "0.8"]),
        ("rho-m", vec!["--y", "0.5"]),
        ("rho-xtheta", vec!["--x", "0.7", "--theta", "1.5707963"]),
        ("pseudo-pure", vec!["--epsilon", "0.2", "--n", "2"]),
        ("tiles", vec![]),
        ("max-entangled", vec!["--n", "3", "--seed", "4"]),
        ("bell", vec!["--kind", "phi-"]),
    ] {
        let path = dir.path().join(format!("{family}.json"));
        let mut args = vec!["generate", "--family", family];
        args.extend(extra.iter().copied());
        args.extend(["--output", path.to_str().unwrap()]);
        let out = run_raw(&args);
        assert!(out.status.success(), "generate {family} failed");
        let out = run_raw(&["analyze", "--input", path.to_str().unwrap(), "--format", "json"]);
        assert!(out.status.success(), "analyze {family} failed");
    }
}
