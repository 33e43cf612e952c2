use std::process::{Command, Output};

use hypersph::coords::CoordinateSystem;
use hypersph::physics::{mode_eval, ModeSpec};
use hypersph::specfun::BesselKind;

fn hypersph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypersph")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_trimmed_values() {
    let o = hypersph(&["eval", "legendre", "--nu", "2", "--x", "0.5"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "-0.125\n");

    let o = hypersph(&["eval", "hyper-assoc", "--nu", "1", "--mu", "1.4142135623730951", "--lambda", "0.5", "--x", "0"]);
    assert_eq!(stdout(&o), "1\n");

    let o = hypersph(&["eval", "hyp2f1", "--alpha", "1", "--beta", "1", "--gamma", "2", "--z", "0.5"]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - 2.0 * 2f64.ln()).abs() < 1e-14);

    let o = hypersph(&["eval", "bessel", "--kind", "J", "--order", "0.5", "--x", "1"]);
    let v: f64 = stdout(&o).trim().parse().unwrap();
    assert!((v - (2.0 / std::f64::consts::PI).sqrt() * 1f64.sin()).abs() < 1e-14);
}

#[test]
fn domain_errors_exit_2() {
    let o = hypersph(&["eval", "legendre", "--nu", "2", "--x", "1.5"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(hypersph(&["eval", "nonsense"]).status.code(), Some(2));
    assert_eq!(hypersph(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(hypersph(&["verify", "coords", "--dims", "9..2"]).status.code(), Some(2));
}

#[test]
fn mode_matches_library() {
    let spec = ModeSpec::new(CoordinateSystem::Hyperspherical, 4, 1, vec![2, 1], 1.7, BesselKind::J);
    let point = [1.3, 0.8, 1.1, 0.4];
    let expected = mode_eval(&spec, &point, 0.0).unwrap();

    let o = hypersph(&[
        "eval", "mode", "--system", "hs", "--dim", "4", "--chain", "2,1", "--m", "1", "--k", "1.7", "--kind", "J",
        "--point", "1.3,0.8,1.1,0.4",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let parts: Vec<f64> = stdout(&o).split_whitespace().map(|s| s.parse().unwrap()).collect();
    assert_eq!(parts.len(), 2);
    assert!((parts[0] - expected.re).abs() < 1e-13 && (parts[1] - expected.im).abs() < 1e-13);

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("mode.json");
    std::fs::write(&path, spec.to_json().unwrap()).unwrap();
    let from_file = hypersph(&["eval", "mode", "--spec", path.to_str().unwrap(), "--point", "1.3,0.8,1.1,0.4"]);
    assert_eq!(stdout(&from_file), stdout(&o));
}

#[test]
fn mode_spec_conflicts_with_flags() {
    let o = hypersph(&["eval", "mode", "--spec", "x.json", "--dim", "3", "--point", "1,1,1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn table_writes_csv_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("fig0.csv");
    let o = hypersph(&["table", "--preset", "fig0", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "x,value_plus,value_minus");
    assert_eq!(lines.len(), 202);
    assert!(!text.contains('\r'));

    let mut rdr = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<(f64, f64, f64)> = rdr.deserialize().map(|r| r.unwrap()).collect();
    assert!((rows[100].1 - 1.0).abs() < 1e-12);
    for i in 0..rows.len() {
        let j = rows.len() - 1 - i;
        assert!((rows[i].1 - rows[j].1).abs() < 1e-12);
    }

    let stdout_table = hypersph(&["table", "--preset", "fig0"]);
    assert_eq!(stdout(&stdout_table), text);
}

#[test]
fn table_write_failure_exits_1() {
    let o = hypersph(&["table", "--preset", "fig0", "--out", "/nonexistent-dir/x.csv"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verify_reports() {
    let o = hypersph(&["verify", "coords", "--dims", "2..4"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("PASS [ 1]") && text.contains("PASS [ 2]"));

    let o = hypersph(&["verify", "legendre", "--erratum-check", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let json: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(json["pass"], true);
    let ids: Vec<u64> = json["checks"].as_array().unwrap().iter().map(|c| c["id"].as_u64().unwrap()).collect();
    assert_eq!(ids, vec![5]);
}
