use std::fs;
use std::process::Command;

fn wavesearch() -> Command {
    Command::new(env!("CARGO_BIN_EXE_wavesearch"))
}

#[test]
fn success_exits_zero() {
    let out = wavesearch().args(["solve-n", "--queries", "3"]).output().unwrap();
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["summary"]["N_rounded"].as_f64().unwrap(), 20.2);
}

#[test]
fn table_prints_text() {
    let out = wavesearch().arg("table").output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("10.5"));
}

#[test]
fn failure_prints_one_error_line() {
    let out = wavesearch()
        .args(["grover", "--n", "4", "--targets", "9"])
        .output()
        .unwrap();
    assert!(!out.status.success());
    let err = String::from_utf8(out.stderr).unwrap();
    assert_eq!(err.lines().count(), 1);
    assert!(err.starts_with("error kind=index-out-of-range message="));
}

#[test]
fn config_file_overrides_flags() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.json");
    fs::write(&cfg, r#"{"experiment": "grover", "N": 4, "steps": 1}"#).unwrap();
    let out_dir = dir.path().join("out");
    let out = wavesearch()
        .args(["grover", "--n", "1024", "--steps", "9", "--config"])
        .arg(&cfg)
        .arg("--out")
        .arg(&out_dir)
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let csv = fs::read_to_string(out_dir.join("trajectory.csv")).unwrap();
    assert_eq!(csv.lines().count(), 3);
}

#[test]
fn phases_accept_pi_forms() {
    let out = wavesearch()
        .args(["grover", "--n", "16", "--oracle-phase", "-pi", "--diffusion-phase", "pi"])
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
}

#[test]
fn disorder_output_independent_of_thread_count() {
    let dir = tempfile::tempdir().unwrap();
    let mut bodies = Vec::new();
    for threads in ["1", "4"] {
        let out_dir = dir.path().join(threads);
        let status = wavesearch()
            .env("RAYON_NUM_THREADS", threads)
            .args(["lattice", "--length", "256", "--disorder", "2", "--trials", "12", "--seed", "1", "--out"])
            .arg(&out_dir)
            .status()
            .unwrap();
        assert!(status.success());
        bodies.push(fs::read(out_dir.join("disorder_trials.csv")).unwrap());
    }
    assert_eq!(bodies[0], bodies[1]);
}
