use std::process::{Command, Output};

fn clasp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_clasp")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = clasp(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn eval_examples() {
    assert_eq!(stdout(&["eval", "--model", "clasp2.json", "--omega", "1/4,1/4"]), "sigma=0 eta=1 exact=true\n");
    assert_eq!(stdout(&["eval", "--model", "trefoil.json", "--omega", "1/2"]), "sigma=-2 eta=0 exact=true\n");
    assert_eq!(stdout(&["eval", "--model", "trefoil", "--omega", "~3.14159"]), "sigma=-2 eta=0 exact=false\n");
    assert_eq!(stdout(&["eval", "--model", "fox", "--merge", "all", "--omega", "1/5"]), "sigma=0 eta=0 exact=true\n");
}

#[test]
fn delta_prints_the_caveat() {
    let out = stdout(&["delta", "--model", "threecolor.json"]);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("t1*t2*t3 - 1"));
    assert!(lines.next().unwrap().contains("(1 - t_i)"));
}

#[test]
fn potential_prints_numerator_and_denominator() {
    let out = stdout(&["potential", "--model", "trefoil"]);
    assert_eq!(out, "numerator: t^2 - 1 + t^-2\ndenominator: t - t^-1\n");
    assert_eq!(stdout(&["potential", "--model", "hopf2"]), "numerator: 1\ndenominator: 1\n");
}

#[test]
fn other_verbs() {
    assert_eq!(stdout(&["diagonal", "--model", "hopf2", "--omega", "1/3"]), "sigma_lt=-1 eta_lt=0 exact=true\n");
    assert_eq!(stdout(&["merge", "--model", "hopf2", "--omega", "2/7,2/7"]), "sigma=-1 eta=0 exact=true\n");
    assert_eq!(stdout(&["casson-gordon", "--lambda", "[[2]]", "--q", "2", "--n", "1", "--sigma", "0"]), "sigma(M,chi)=0\n");
    assert_eq!(
        stdout(&["casson-gordon", "--lambda", "[[1]]", "--q", "2", "--n", "1", "--model", "unknot"]),
        "sigma(M,chi)=-1/2\n"
    );
    assert!(stdout(&["presentation", "--model", "trefoil"]).starts_with("[[-t + 1, t]"));
    let json: serde_json::Value = serde_json::from_str(&stdout(&["obstruct", "--model", "trefoil", "--max-q", "2"])).unwrap();
    assert_eq!(json, serde_json::json!([{"point": "1/2", "sigma": -2, "eta": 0, "violated": "sigma-nonzero"}]));
    assert_eq!(stdout(&["obstruct", "--model", "fox", "--merge", "all", "--max-q", "8"]).trim(), "[]");
}

#[test]
fn grid_csv_and_output_file() {
    let out = stdout(&["grid", "--model", "clasp2", "--q", "4"]);
    assert_eq!(out.lines().count(), 10);
    assert_eq!(out.lines().nth(1), Some("1,1,4,0,1,1,1"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    assert_eq!(stdout(&["grid", "--model", "clasp2", "--q", "4", "--out", path.to_str().unwrap()]), "");
    assert_eq!(std::fs::read_to_string(&path).unwrap(), out);
}

#[test]
fn examples_roundtrip_through_files() {
    let names = stdout(&["examples", "list"]);
    assert!(names.lines().any(|n| n == "fox"));
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("tref.json");
    stdout(&["examples", "emit", "trefoil", "--out", path.to_str().unwrap()]);
    assert_eq!(stdout(&["eval", "--model", path.to_str().unwrap(), "--omega", "1/2"]), "sigma=-2 eta=0 exact=true\n");
}

#[test]
fn verify_reports() {
    let out = stdout(&["verify", "--q", "8"]);
    assert!(out.ends_with("all properties pass\n"));
    assert!(!out.contains("FAIL"));
    let out = stdout(&["verify", "--model", "trefoil", "--q", "24"]);
    assert!(out.contains("PASS closed form (23 points)"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    let text = stdout(&["examples", "emit", "clasp2"]).replace("\"+-\": [[0]]", "\"+-\": [[1]]");
    std::fs::write(&path, text).unwrap();
    let out = clasp(&["verify", "--model", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL validation"));
    assert!(text.contains("transpose symmetry"));
    assert!(!text.contains("conjugation"));
}

#[test]
fn exit_codes() {
    let out = clasp(&["eval", "--model", "trefoil", "--omega", "2/2"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let out = clasp(&["eval", "--model", "trefoil"]);
    assert_eq!(out.status.code(), Some(2));
    let out = clasp(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
    let out = clasp(&["eval", "--model", "nosuchmodel", "--omega", "1/2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = clasp(&["grid", "--model", "fox", "--q", "1000"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(out.stdout.is_empty());
    let out = clasp(&["merge", "--model", "hopf2", "--omega", "1/3,1/5"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn output_is_deterministic() {
    let args = ["grid", "--model", "fox", "--q", "5"];
    let a = clasp(&args);
    let b = Command::new(env!("CARGO_BIN_EXE_clasp")).args(args).env("CLASP_THREADS", "1").output().unwrap();
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
}
