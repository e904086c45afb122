use std::fs;
use std::process::{Command, Output};

fn symperm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_symperm")).args(args).output().expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = symperm(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exact_plain_three() {
    let csv = stdout(&["exact", "--symmetry", "plain", "--n", "3"]);
    let rows: Vec<&str> = csv.lines().collect();
    assert_eq!(rows[0], "l,numerator,denominator,float_value");
    assert_eq!(rows[3], "2,5,6,0.833333333333");
    assert_eq!(rows.len(), 5);
}

#[test]
fn exact_methods_agree() {
    let args = ["exact", "--symmetry", "invol", "--n", "3", "--m", "2"];
    let rsk = stdout(&[&args[..], &["--method", "rsk"]].concat());
    let brute = stdout(&[&args[..], &["--method", "brute"]].concat());
    assert_eq!(rsk, brute);
    // signed ensembles fall back to enumeration
    let signed = stdout(&["exact", "--symmetry", "signed", "--n", "2"]);
    assert!(signed.lines().last().unwrap().ends_with(",1,1,1"), "{signed}");
}

#[test]
fn empty_permutations_have_lis_zero() {
    let csv = stdout(&["sample", "--symmetry", "plain", "--n", "0", "--samples", "5"]);
    let rows: Vec<&str> = csv.lines().skip(1).collect();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r.split(',').nth(1) == Some("0")));
}

#[test]
fn box_law_at_w_zero_is_f1() {
    let csv = stdout(&["twtable", "--w", "0", "--x-min", "-6", "--x-max", "4", "--step", "0.5"]);
    let mut lines = csv.lines();
    let header: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert_eq!(header, ["x", "F1", "F2", "F4", "Fbox_0", "Fboxtimes_0"]);
    for line in lines {
        let v: Vec<f64> = line.split(',').map(|s| s.parse().unwrap()).collect();
        assert!((v[4] - v[1]).abs() < 1e-6, "{line}");
        assert!((v[5] - v[1] * v[1]).abs() < 1e-6, "{line}");
    }
}

#[test]
fn sampling_is_independent_of_threads() {
    let base = ["sample", "--symmetry", "invol", "--n", "40", "--m", "3", "--samples", "64", "--seed", "11"];
    let one = stdout(&[&base[..], &["--threads", "1"]].concat());
    let four = stdout(&[&base[..], &["--threads", "4"]].concat());
    assert_eq!(one, four);
    let lpp = ["lpp", "--model", "signed", "--N", "8", "--q", "0.25", "--samples", "20", "--seed", "3"];
    assert_eq!(stdout(&[&lpp[..], &["--threads", "1"]].concat()), stdout(&[&lpp[..], &["--threads", "3"]].concat()));
}

#[test]
fn config_replay_reproduces_output() {
    let dir = tempfile::tempdir().unwrap();
    let config = dir.path().join("run.json");
    let args = ["walk", "--steps", "12", "--particles", "3", "--samples", "4", "--seed", "8"];
    fs::write(&config, stdout(&[&args[..], &["--print-config"]].concat())).unwrap();
    let replay = stdout(&["--config", config.to_str().unwrap()]);
    assert_eq!(replay, stdout(&args));
}

#[test]
fn compare_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let sample = dir.path().join("sample.csv");
    let table = dir.path().join("table.csv");
    let s = sample.to_str().unwrap();
    let t = table.to_str().unwrap();
    stdout(&["sample", "--symmetry", "plain", "--n", "200", "--samples", "400", "--seed", "1", "-o", s]);
    stdout(&["twtable", "--step", "0.01", "-o", t]);
    let json: serde_json::Value = serde_json::from_str(&stdout(&["compare", "--sample", s, "--table", t, "--column", "F2", "--seed", "1"])).unwrap();
    assert_eq!(json["n"], 400);
    assert_eq!(json["seed"], 1);
    let ks = json["ks"].as_f64().unwrap();
    assert!(ks > 0.0 && ks < 0.3, "ks = {ks}");
}

#[test]
fn exit_codes() {
    let code = |args: &[&str]| symperm(args).status.code().unwrap();
    assert_eq!(code(&["sample", "--symmetry", "nope", "--n", "3"]), 2);
    assert_eq!(code(&["sample", "--symmetry", "plain"]), 2);
    assert_eq!(code(&["lpp", "--model", "plain", "--N", "4", "--q", "1.5"]), 2);
    assert_eq!(code(&["exact", "--symmetry", "plain", "--n", "50"]), 2);
    assert_eq!(code(&["compare", "--sample", "/missing.csv", "--table", "/missing.csv", "--column", "F2"]), 1);
    assert_eq!(code(&["exact", "--symmetry", "plain", "--n", "2", "-o", "/no/such/dir/out.csv"]), 1);
}
