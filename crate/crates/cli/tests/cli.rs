use std::path::PathBuf;
use std::process::{Command, Output};

fn scenario(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../scenarios").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quadstruct")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write_scenario(dir: &tempfile::TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_string_lossy().into_owned()
}

#[test]
fn verify_e8_over_fp_passes() {
    let o = run(&["verify", "--scenario", scenario("e8_fp101.toml").to_str().unwrap(), "--format", "json", "--samples", "40"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    let checks = v["checks"].as_array().unwrap();
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    let si = checks.iter().find(|c| c["name"] == "structurable_identity").unwrap();
    assert_eq!(si["mode"], "exhaustive");
    assert_eq!(si["cases"], 32u64.pow(4));
    for name in ["chi_isomorphism", "psi_table", "lambda_witness", "beta_3456", "norm_coincidence"] {
        assert!(names.contains(&name), "{name} missing");
    }
}

#[test]
fn verify_pq_quadratic_passes_with_text_output() {
    let o = run(&["verify", "--scenario", scenario("pq_quadratic.toml").to_str().unwrap(), "--samples", "30"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.contains("PASS pq_identity_v"));
    assert!(text.ends_with("overall: PASS\n"));
}

#[test]
fn field_override() {
    let s = scenario("pq_quadratic.toml");
    let o = run(&["verify", "--scenario", s.to_str().unwrap(), "--field", "fp:103", "--samples", "500", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["scenario"]["field"], "fp:103");
    // a rank-two hermitian form over a finite field is isotropic, so D2 fails
    assert_eq!(o.status.code(), Some(1));
    let failing: Vec<_> = v["checks"].as_array().unwrap().iter().filter(|c| c["failures"] != 0).map(|c| c["name"].clone()).collect();
    assert_eq!(failing, vec!["pq_D2"]);
    // -1 is a square mod 101, so the quadratic pair is rejected
    let o = run(&["verify", "--scenario", s.to_str().unwrap(), "--field", "fp:101"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn mutation_fails_with_counterexample() {
    for name in ["e6.toml", "pq_quadratic.toml", "matrix_split.toml"] {
        let o = run(&["verify", "--scenario", scenario(name).to_str().unwrap(), "--samples", "10", "--format", "json", "--debug-mutate"]);
        assert_eq!(o.status.code(), Some(1), "{name}");
        let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
        assert_eq!(v["passed"], false);
        let failing: Vec<_> = v["checks"].as_array().unwrap().iter().filter(|c| c["failures"].as_u64().unwrap() > 0).collect();
        assert!(!failing.is_empty());
        assert!(failing.iter().all(|c| c["counterexample"].is_string()), "{name}");
    }
}

#[test]
fn configuration_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_scenario(&dir, "bad.toml", "kind = \"e8\"\n[params]\ngamma_sq = \"-1\"\ns = [\"1\",\"1\",\"1\",\"1\",\"1\"]\n");
    let o = run(&["verify", "--scenario", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("s_2s_3s_4s_5s_6=-1"), "{}", stderr(&o));

    let syntax = write_scenario(&dir, "syntax.toml", "kind = \"e6\"\nsamples = \n");
    let o = run(&["verify", "--scenario", &syntax]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 2"), "{}", stderr(&o));

    let o = run(&["verify", "--scenario", dir.path().join("missing.toml").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));

    // -1 is a square mod 101
    let square = write_scenario(&dir, "square.toml", "kind = \"e8\"\n[params]\ngamma_sq = \"-1\"\ns = [\"1\",\"1\",\"1\",\"1\",\"-1\"]\n");
    let o = run(&["verify", "--scenario", &square, "--field", "fp:101"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("non-square"), "{}", stderr(&o));
}

#[test]
fn fuzz_is_deterministic() {
    let s = scenario("e6.toml");
    let args = ["fuzz", "--scenario", s.to_str().unwrap(), "--iterations", "60", "--seed", "9"];
    let (a, b) = (run(&args), run(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["mode"] == "sampled"));

    let other = run(&["fuzz", "--scenario", s.to_str().unwrap(), "--iterations", "60", "--seed", "10"]);
    let w: serde_json::Value = serde_json::from_slice(&other.stdout).unwrap();
    assert_eq!(w["passed"], v["passed"]);
    assert_ne!(w["notes"], v["notes"]);

    let zero = run(&["fuzz", "--scenario", s.to_str().unwrap(), "--iterations", "0", "--seed", "9"]);
    let z: serde_json::Value = serde_json::from_slice(&zero.stdout).unwrap();
    let checks = z["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert!(c["cases"].as_u64().unwrap() <= 1, "{c}");
    }
}

#[test]
fn table_dumps() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("e6.csv");
    let o = run(&["table", "--scenario", scenario("e6.toml").to_str().unwrap(), "--out", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let csv = std::fs::read_to_string(&out).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next().unwrap(), "row,col,v1,γv1,v2,γv2,v3,γv3,v23,γv23");
    assert_eq!(lines.count(), 64);

    let out = dir.path().join("e8.csv");
    let o = run(&["table", "--scenario", scenario("e8_demo.toml").to_str().unwrap(), "--out", out.to_str().unwrap(), "--with-maps"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(std::fs::read_to_string(&out).unwrap().lines().count(), 1 + 32 * 32);
    let psi = std::fs::read_to_string(dir.path().join("e8_psi.csv")).unwrap();
    assert_eq!(psi.lines().count(), 17);
    assert!(psi.starts_with("source,v1,v2,"));
    let chi = std::fs::read_to_string(dir.path().join("e8_chi.csv")).unwrap();
    assert_eq!(chi.lines().count(), 33);

    let o = run(&["table", "--scenario", scenario("matrix_split.toml").to_str().unwrap(), "--out", out.to_str().unwrap(), "--with-maps"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn invert_elements() {
    let o = run(&["invert", "--scenario", scenario("e6.toml").to_str().unwrap(), "--element", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("xhat coordinates: [1, 0, 0, 0, 0, 0, 0, 0]"), "{text}");
    assert!(text.contains("nonzero residuals: 0"));

    let o = run(&["invert", "--scenario", scenario("e8_demo.toml").to_str().unwrap(), "--element", "1,2,0,-1,3,0,0,1/2,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,0,-1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("nonzero residuals: 0"));

    let o = run(&["invert", "--scenario", scenario("matrix_split.toml").to_str().unwrap(), "--element", "1,0,0,0,0,0,0,0"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not conjugate invertible"));

    let o = run(&["invert", "--scenario", scenario("e6.toml").to_str().unwrap(), "--element", "1,2"]);
    assert_eq!(o.status.code(), Some(2));
}
