use std::process::{Command, Output};

use finkquad::report::{validate, NumOut, F17};

fn finkquad(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_finkquad")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn report(o: &Output) -> finkquad::report::Report {
    validate(stdout(o).trim_end_matches('\n')).expect("valid report")
}

#[test]
fn verify_canonical_square() {
    let o = finkquad(&["verify", "--fn", "poly:0,0,1", "--n", "2", "--x", "0", "--variant", "G", "--kernel", "canonical"]);
    assert_eq!(o.status.code(), Some(0));
    let r = report(&o);
    let cases = r.verify.unwrap().cases;
    assert_eq!(cases.len(), 1);
    assert_eq!(cases[0].residual, NumOut::Exact("0/1".into()));
}

#[test]
fn verify_printed_kernel_fails() {
    let o = finkquad(&["verify", "--fn", "poly:0,0,1", "--n", "2", "--x", "0", "--variant", "G", "--kernel", "printed"]);
    assert_eq!(o.status.code(), Some(1));
    let r = report(&o);
    assert!(!r.ok);
    assert_eq!(r.verify.unwrap().cases[0].residual, NumOut::Exact("-1/8".into()));
}

#[test]
fn verify_linear_decimal_node() {
    let o = finkquad(&["verify", "--fn", "poly:0,1", "--n", "1", "--x", "0.25"]);
    assert_eq!(o.status.code(), Some(0));
    let case = &report(&o).verify.unwrap().cases[0];
    assert_eq!(case.x, "1/4");
    assert_eq!(case.residual, NumOut::Exact("0/1".into()));
}

#[test]
fn verify_default_grid_and_numeric() {
    for variant in ["G", "TF", "fink"] {
        let o = finkquad(&["verify", "--variant", variant]);
        assert_eq!(o.status.code(), Some(0), "{variant}");
        assert_eq!(report(&o).verify.unwrap().failures, 0);
    }
    let o = finkquad(&["verify", "--fn", "exp:1", "--n", "1,2,3", "--x", "0,1/4,1/2", "--a", "-1", "--b", "2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn quad_examples() {
    let q = report(&finkquad(&["quad", "--fn", "poly:0,0,1", "--n", "2", "--x", "0"])).quad.unwrap();
    assert_eq!(q.value, NumOut::Exact("3/8".into()));
    assert_eq!(q.remainder, NumOut::Exact("-1/24".into()));
    assert_eq!(q.integral_ref, NumOut::Exact("1/3".into()));
    assert!(q.exact);

    let q = report(&finkquad(&["quad", "--fn", "poly:0,1", "--n", "3", "--x", "0.1"])).quad.unwrap();
    assert_eq!(q.remainder, NumOut::Exact("0/1".into()));

    let q = report(&finkquad(&["quad", "--fn", "exp:1", "--n", "2", "--node", "midpoint", "--panels", "4,8,16,32"]))
        .quad
        .unwrap();
    let slope = q.convergence.unwrap().slope.unwrap().0;
    assert!(slope >= 1.8, "slope {slope}");
}

#[test]
fn quad_exact_composite_has_no_slope() {
    let q = report(&finkquad(&["quad", "--fn", "poly:0,1", "--n", "2", "--panels", "2,4,8"])).quad.unwrap();
    let conv = q.convergence.unwrap();
    assert!(conv.slope.is_none());
    assert!(conv.note.is_some());
    assert!(conv.rows.iter().all(|r| r.error == F17(0.0)));
}

#[test]
fn audit_examples() {
    let o = finkquad(&["audit", "--fn", "exp:1", "--n", "2", "--node", "midpoint"]);
    assert_eq!(o.status.code(), Some(0));
    let a = report(&o).audit.unwrap();
    assert_eq!(a.assert_failures, 0);
    assert!(a.reports.iter().filter(|r| r.mode == "ASSERT").all(|r| r.holds));

    let a = report(&finkquad(&["audit", "--fn", "poly:0,0,0,1", "--n", "2", "--x", "0"])).audit.unwrap();
    let left: Vec<_> = a.reports.iter().filter(|r| r.bound_name.starts_with("node_left.")).collect();
    assert_eq!(left.len(), 5);
    assert!(left.iter().all(|r| r.status == "hypothesis_unmet"));

    let a = report(&finkquad(&["audit", "--fn", "sin:3:0", "--n", "3", "--x", "0.25"])).audit.unwrap();
    assert_eq!(a.constants.a, "2/15");
    assert_eq!(a.constants.b, "119/30");
}

#[test]
fn bounds_command() {
    let o = finkquad(&["bounds", "--fn", "exp:1", "--n", "3", "--x", "1/8", "--p", "1,inf"]);
    assert_eq!(o.status.code(), Some(0));
    let b = report(&o).bounds.unwrap();
    assert_eq!(b.constants.len(), 6);
    assert_eq!(b.reports.len(), 6);
    let o = finkquad(&["bounds", "--n", "2", "--p", "2", "--q", "3"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    let args = ["audit", "--fn", "cos:2:0.5", "--n", "3", "--node", "quarter"];
    assert_eq!(finkquad(&args).stdout, finkquad(&args).stdout);
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("finkquad-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("quad.json");
    let o = finkquad(&["quad", "--fn", "poly:1", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    validate(text.trim_end_matches('\n')).unwrap();
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn kernels_csv() {
    let o = finkquad(&["kernels", "--n", "2", "--x", "0", "--points", "5"]);
    assert_eq!(o.status.code(), Some(0));
    let mut rdr = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(rdr.headers().unwrap(), vec!["t", "S", "p", "K_canonical", "K_printed"]);
    let rows: Vec<Vec<f64>> =
        rdr.records().map(|r| r.unwrap().iter().map(|v| v.parse().unwrap()).collect()).collect();
    assert_eq!(rows.len(), 5);
    // left half: both kernels are (x - t) S
    assert_eq!(rows[1], vec![0.25, -0.25, -0.75, 0.0625, 0.0625]);
    // right half: canonical (1 - x - t) S, printed (x - t) S
    assert_eq!(rows[3], vec![0.75, 0.25, -0.25, 0.0625, -0.1875]);
}

#[test]
fn config_errors() {
    for args in [
        &["quad", "--fn", "poly:0,1", "--x", "3/4"][..],
        &["quad", "--fn", "recip:-0.5"],
        &["quad", "--fn", "poly:0,1", "--n", "1,2"],
        &["verify", "--n", "0"],
        &["verify", "--variant", "TF", "--seq", "seq:1;0,2"],
        &["audit", "--fn", "exp:1", "--n", "1"],
        &["quad"],
        &["verify", "--kernel", "bogus"],
    ] {
        let o = finkquad(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}
