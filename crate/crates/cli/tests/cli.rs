use std::process::{Command, Output};

use quenta_cli::output::{read_rows_json, OutputRow, CSV_HEADER};
use quenta_core::quenta::{Classification, DistanceKind, Family};

fn quenta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quenta")).args(args).env_remove("QUENTA_CONFIG").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn one_row(args: &[&str]) -> OutputRow {
    let o = quenta(args);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let mut rows = read_rows_json(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 1);
    rows.remove(0)
}

#[test]
fn cosets_listing() {
    assert_eq!(stdout(&quenta(&["cosets", "--q", "3", "--n", "8"])), "{0}\n{1,3}\n{2,6}\n{4}\n{5,7}\n");
    assert_eq!(stdout(&quenta(&["cosets", "--q", "2", "--n", "7"])), "{0}\n{1,2,4}\n{3,5,6}\n");
    assert_eq!(stdout(&quenta(&["cosets", "--q", "2", "--n", "3"])), "{0}\n{1,2}\n");
    let csv = stdout(&quenta(&["cosets", "--q", "2", "--n", "7", "--format", "csv"]));
    assert_eq!(csv, "representative,size,elements\n0,1,0\n1,3,1;2;4\n3,3,3;5;6\n");
    let json = stdout(&quenta(&["cosets", "--q", "2", "--n", "3", "--format", "json"]));
    let parsed: Vec<Vec<usize>> = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed, vec![vec![0], vec![1, 2]]);
}

#[test]
fn cosets_refuses_shared_factor() {
    let o = quenta(&["cosets", "--q", "2", "--n", "4"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(o.stdout.is_empty());
}

#[test]
fn construct_mds_with_verification() {
    let row = one_row(&["construct", "rs-mds", "--q", "7", "--n", "6", "--k", "3", "--b", "2", "--verify"]);
    assert_eq!((row.n, row.k, row.d, row.c), (6, 3, 4, 3));
    assert_eq!(row.family, Family::RsMds);
    assert_eq!(row.classification, Classification::Mds);
    assert!(row.maximal_entanglement);
    assert_eq!(row.defect, 0);
    assert!(row.verification.as_ref().unwrap().pass);
}

#[test]
fn construct_hermitian_bch() {
    let row = one_row(&["construct", "bch-hermit", "--q", "3", "--a", "2", "--verify"]);
    assert_eq!((row.n, row.k, row.d, row.c), (80, 73, 3, 1));
    assert_eq!(row.d_kind, DistanceKind::LowerBound);
    let v = row.verification.unwrap();
    assert!(v.pass);
    let names: Vec<&str> = v.rows.iter().map(|r| r.name.as_str()).collect();
    assert!(names.contains(&"c") && names.contains(&"d"));
}

#[test]
fn construct_li_and_sets() {
    let row = one_row(&["construct", "li-lcd", "--q", "3", "--m", "2", "--delta", "2"]);
    assert_eq!((row.n, row.k, row.d, row.c), (80, 75, 3, 5));
    assert!(row.verification.is_none());

    let row = one_row(&["construct", "euclid-pair", "--q", "2", "--n", "7", "--z1", "1,2,4", "--z2", "{3,5,6}"]);
    assert_eq!((row.k, row.c), (4, 3));
    let row = one_row(&["construct", "hermitian-lcd", "--q", "2", "--n", "3", "--z", "0"]);
    assert_eq!(row.family, Family::HermitianLcd);
}

#[test]
fn usage_errors_exit_one() {
    for args in [
        &["construct", "nope", "--q", "2"][..],
        &["construct", "rs-mds", "--q", "7", "--k", "3"],
        &["construct", "rs-mds", "--q", "7", "--k", "3", "--b", "2", "--a", "1"],
        &["construct", "rs-mds", "--q", "7", "--k", "4", "--b", "3"],
        &["construct", "bch-euclid", "--q", "3", "--a", "2", "--b", "3"],
        &["construct", "euclid-lcd", "--q", "2", "--n", "7", "--z", "1"],
        &["table", "--family", "li-lcd", "--q", "2"],
        &["verify", "--family", "all", "--q", "2"],
        &["frobnicate"],
    ] {
        let o = quenta(args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn precondition_errors_name_the_parameter() {
    let o = quenta(&["construct", "rs-mds", "--q", "7", "--k", "4", "--b", "3"]);
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("b = 3"), "{err}");
    let o = quenta(&["construct", "rs-mds", "--q", "7", "--k", "3"]);
    assert!(String::from_utf8_lossy(&o.stderr).contains("--b"));
}

#[test]
fn help_exits_zero() {
    let o = quenta(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}

#[test]
fn json_table_round_trips() {
    let o = quenta(&["table", "--family", "bch-euclid", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let rows = read_rows_json(&text).unwrap();
    assert_eq!(rows.len(), 6);
    let mut again = String::new();
    for r in &rows {
        again.push_str(&serde_json::to_string(r).unwrap());
        again.push('\n');
    }
    assert_eq!(again, text);
    let first: serde_json::Value = serde_json::from_str(text.lines().next().unwrap()).unwrap();
    let keys: Vec<&str> = first.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, CSV_HEADER);
}

#[test]
fn csv_table_shape() {
    let o = quenta(&["table", "--family", "rs-mds", "--q", "7", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
    assert_eq!(lines.count(), 9);
    assert!(text.contains("rs-mds,b=(k+1)/2,7,6,3,4,exact,3,true,4,0,MDS,"));

    let o = quenta(&["table", "--family", "euclid-lcd", "--q", "2", "--n", "7", "--format", "csv"]);
    assert!(stdout(&o).contains("z=1;2;3;4;5;6"), "{}", stdout(&o));
}

#[test]
fn empty_range_writes_header_only() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.csv");
    let o = quenta(&[
        "table",
        "--family",
        "li-lcd",
        "--q",
        "2",
        "--m",
        "3",
        "--delta-min",
        "9",
        "--delta-max",
        "8",
        "--format",
        "csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), format!("{}\n", CSV_HEADER.join(",")));
}

#[test]
fn unwritable_output_path() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("t.csv");
    let o = quenta(&["table", "--family", "rs-mds", "--q", "7", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn table_output_is_stable() {
    let args = ["table", "--family", "hermitian", "--q", "2", "--n", "5", "--format", "csv"];
    assert_eq!(quenta(&args).stdout, quenta(&args).stdout);
}

#[test]
fn verify_single_families() {
    let o = quenta(&["verify", "--family", "bch-euclid", "--q", "3"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("bch-euclid q=3: 6 passed, 0 failed, 0 skipped\n"), "{}", stdout(&o));

    let o = quenta(&["verify", "--family", "rs-hermit", "--q", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("d=skipped"));
    assert!(text.ends_with("rs-hermit q=2: 2 passed, 0 failed, 2 skipped\n"));

    let o = quenta(&["verify", "--family", "hermitian-lcd", "--q", "2", "--n", "15", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: quenta_cli::output::VerifyOutput = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.total.failed, 0);
    assert_eq!(v.sweeps[0].reports.len(), v.total.passed);
}

#[test]
fn verify_csv_lists_check_rows() {
    let o = quenta(&["verify", "--family", "rs-mds", "--q", "5", "--n", "4", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("family,instance,params,check,kind,predicted,measured,pass,note\n"));
    assert!(text.contains("rs-mds,q=5 n=4 k=1 b=1,"));
}

#[test]
fn config_from_env_and_flag() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("quenta.conf");
    std::fs::write(&path, "max_matrix_length = 10\n").unwrap();
    let args = ["verify", "--family", "bch-euclid", "--q", "3"];
    let o = Command::new(env!("CARGO_BIN_EXE_quenta")).args(args).env("QUENTA_CONFIG", &path).output().unwrap();
    assert_eq!(o.status.code(), Some(0));
    // n = 8 still fits; a length-80 family does not
    assert!(stdout(&o).contains("0 skipped"));
    let o =
        quenta(&["verify", "--family", "bch-hermit", "--q", "3", "--a-max", "2", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("c=skipped"), "{}", stdout(&o));

    std::fs::write(&path, "colour = red\n").unwrap();
    let o = quenta(&["verify", "--family", "bch-euclid", "--q", "3", "--config", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn verbose_goes_to_stderr_only() {
    let quiet = quenta(&["table", "--family", "rs-mds", "--q", "5"]);
    let loud = quenta(&["table", "--family", "rs-mds", "--q", "5", "--verbose"]);
    assert_eq!(quiet.stdout, loud.stdout);
    assert!(quiet.stderr.is_empty());
    assert!(!loud.stderr.is_empty());
}
