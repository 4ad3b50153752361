use std::process::{Command, Output};

fn leviflat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_leviflat")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("report is JSON")
}

#[test]
fn analyze_reports_dicritical_pencil() {
    let out = leviflat(&["analyze", "--expr", "Re(z1*conj(z2))"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["schema"], "leviflat.report/1");
    assert_eq!(v["result"]["levi_flat"], true);
    assert_eq!(v["result"]["classification"][0]["class"], "SingularDicritical");
}

#[test]
fn sphere_is_refused_unless_forced() {
    let out = leviflat(&["analyze", "--corpus", "sphere"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["result"]["classification"], "refused");
    assert!(json(&out).get("watermark").is_none());
    let forced = json(&leviflat(&["analyze", "--corpus", "sphere", "--force"]));
    assert!(forced["watermark"].is_string());
}

#[test]
fn exit_codes() {
    // not real-valued
    assert_eq!(leviflat(&["analyze", "--expr", "z1*conj(z2)"]).status.code(), Some(2));
    // syntax error
    assert_eq!(leviflat(&["segre", "--expr", "Re(z1 +"]).status.code(), Some(2));
    // two sources at once
    assert_eq!(leviflat(&["scan", "--expr", "Im(z1*z2)", "--corpus", "cartan"]).status.code(), Some(2));
    // transverse at a dicritical centre
    assert_eq!(leviflat(&["transverse", "--corpus", "pencil"]).status.code(), Some(3));
    // tracing on a non-Levi-flat hypersurface
    assert_eq!(leviflat(&["trace", "--corpus", "sphere", "--point", "1, 0"]).status.code(), Some(3));
}

#[test]
fn trace_writes_csv_and_svg() {
    let dir = tempfile::tempdir().unwrap();
    let (csv, svg, report) = (dir.path().join("leaf.csv"), dir.path().join("leaf.svg"), dir.path().join("leaf.json"));
    let out = leviflat(&[
        "trace", "--corpus", "im_z1z2", "--point", "1, 1",
        "--csv", csv.to_str().unwrap(), "--svg", svg.to_str().unwrap(), "--out", report.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&csv).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("# leviflat.csv/1 trace"));
    assert_eq!(lines.next(), Some("index,re_z1,im_z1,re_z2,im_z2,segre_residual,gamma_residual"));
    for line in lines {
        let f: Vec<f64> = line.split(',').map(|x| x.parse().unwrap()).collect();
        // z1 z2 = 1 on this leaf
        let (a, b) = ((f[1], f[2]), (f[3], f[4]));
        let prod = (a.0 * b.0 - a.1 * b.1, a.0 * b.1 + a.1 * b.0);
        assert!((prod.0 - 1.0).abs() < 1e-8 && prod.1.abs() < 1e-8, "{line}");
        assert!(f[5] < 1e-8 && f[6] < 1e-8);
    }
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let v: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["command"], "trace");
}

#[test]
fn input_file_and_expression_agree() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("rho.txt");
    std::fs::write(&path, "Im(z2 + z1^2)\n").unwrap();
    let a = json(&leviflat(&["slice", "--input", path.to_str().unwrap()]));
    let b = json(&leviflat(&["slice", "--expr", "Im(z2 + z1^2)"]));
    assert_eq!(a["result"], b["result"]);
    assert_eq!(a["input"]["complexification"], b["input"]["complexification"]);
}

#[test]
fn same_seed_same_bytes() {
    let args = ["scan", "--corpus", "im_z2_sq", "--seed", "9", "--scan-samples", "50"];
    let (a, b) = (leviflat(&args), leviflat(&args));
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let c = leviflat(&["scan", "--corpus", "im_z2_sq", "--seed", "10", "--scan-samples", "50"]);
    assert_ne!(a.stdout, c.stdout);
}
