use std::process::{Command, Output};

const BIN: &str = env!("CARGO_BIN_EXE_rotor-eigen");

fn run(args: &[&str]) -> Output {
    Command::new(BIN).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn spectrum_csv_to_stdout() {
    let o = run(&[
        "spectrum",
        "--model",
        "monolayer",
        "--kmin",
        "0",
        "--kmax",
        "1",
        "--samples",
        "3",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "k,E1,E2\n0,0,0\n0.5,-0.5,0.5\n1,-1,1\n");
}

#[test]
fn spectrum_writes_out_file() {
    let dir = std::env::temp_dir().join(format!("rotor-eigen-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("qw.csv");
    let p = path.to_str().unwrap();
    let o = run(&[
        "spectrum",
        "--model",
        "qw",
        "--alpha",
        "0.1",
        "--kmax",
        "2",
        "--samples",
        "5",
        "--out",
        p,
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("k,E1,E2\n"));
    assert_eq!(text.lines().count(), 6);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn eigens_quantum_well() {
    let o = run(&[
        "eigens", "--model", "qw", "--kx", "0", "--ky", "1", "--alpha", "0.1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let e: Vec<f64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["energy"].as_f64().unwrap())
        .collect();
    assert!((e[0] - 0.4).abs() < 1e-15 && (e[1] - 0.6).abs() < 1e-15);
    // Spin average +-(sin(phi) e1 - cos(phi) e2) with phi = pi/2.
    let avg = v[1]["average"].as_array().unwrap();
    assert!((avg[0].as_f64().unwrap() - 1.0).abs() < 1e-12);
    assert!(avg[1].as_f64().unwrap().abs() < 1e-12);
}

#[test]
fn eigens_atoms_has_four_records() {
    let o = run(&["eigens", "--model", "atoms", "--omega", "3", "--gamma", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let e: Vec<f64> = v
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["energy"].as_f64().unwrap())
        .collect();
    assert_eq!(e, [-5.0, -4.0, 4.0, 5.0]);
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["spinor"]["algebra"] == "cl31"));
}

#[test]
fn degenerate_point_is_flagged_not_fatal() {
    let o = run(&["eigens", "--model", "qw", "--alpha", "0.3"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert!(v
        .as_array()
        .unwrap()
        .iter()
        .all(|s| s["degenerate"] == true));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["spectrum", "--model", "bilayer", "--gamma1", "0.4"][..],
        &["spectrum", "--model", "unknown"],
        &["spectrum", "--model", "monolayer", "--samples", "1"],
        &["eigens", "--model", "atoms", "--omega", "1"],
        &["eigens", "--model", "monolayer", "--kx", "abc"],
        &["frobnicate"],
    ] {
        let o = run(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn verify_reports_and_is_reproducible() {
    let a = run(&["verify", "--trials", "1", "--seed", "3"]);
    let b = run(&["verify", "--trials", "1", "--seed", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let text = stdout(&a);
    for model in ["monolayer", "qw", "atoms", "bilayer"] {
        assert!(text.contains(&format!("{model}: 1/1 passed")), "{text}");
    }
}

#[test]
fn unsatisfiable_tolerance_fails() {
    let o = run(&["verify", "--trials", "20", "--seed", "1", "--tol", "1e-30"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("first failure: {"));
    assert!(text.ends_with("FAIL\n"));
}
