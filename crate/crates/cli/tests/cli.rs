use std::fmt::Write as _;
use std::path::Path;
use std::process::Command;

use clap::Parser;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use sdtest_cli::{from_record, run, Args, CliError};
use tempfile::TempDir;

fn normal_csv(dir: &Path, name: &str, n: usize, (m1, s1): (f64, f64), (m2, s2): (f64, f64), seed: u64) -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (d1, d2) = (Normal::new(m1, s1).unwrap(), Normal::new(m2, s2).unwrap());
    let mut text = String::from("treated,control\n");
    for _ in 0..n {
        let _ = writeln!(text, "{:?},{:?}", d1.sample(&mut rng), d2.sample(&mut rng));
    }
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_owned()
}

fn args(input: &str, extra: &[&str]) -> Args {
    let mut argv = vec!["sdtest", "--input", input, "--quiet"];
    argv.extend_from_slice(extra);
    Args::try_parse_from(argv).unwrap()
}

#[test]
fn default_run_is_lfc_bootstrap() {
    let dir = TempDir::new().unwrap();
    let input = normal_csv(dir.path(), "d.csv", 60, (0.0, 1.0), (0.0, 1.0), 1);
    let bundle = run(&args(&input, &[])).unwrap();
    let cfg = &bundle.result.config;
    assert_eq!(bundle.result.approach, sdtest_core::Approach::Lfc);
    assert_eq!(cfg.plan.method, sdtest_core::Method::RecenteredBootstrap);
    assert_eq!((cfg.s, cfg.ngrid, cfg.plan.nboot, cfg.alpha), (1, 100, 200, 0.05));
    assert_eq!(bundle.result.resampled.len(), 200);
    assert!(bundle.report.contains("* H0 : treated first order SD control"));
    assert!(bundle.curves.is_none());
}

#[test]
fn contact_uses_default_c() {
    let dir = TempDir::new().unwrap();
    let input = normal_csv(dir.path(), "d.csv", 60, (0.0, 1.0), (0.3, 1.0), 2);
    let bundle = run(&args(&input, &["--approach", "contact", "--s", "2"])).unwrap();
    assert_eq!(bundle.result.config.c, 0.75);
    assert!(bundle.result.tuning.contact.is_some());
    assert!(bundle.report.contains("second order SD"));
    assert!(bundle.report.contains("Contact Set Approach"));
}

#[test]
fn subsampling_without_b1_is_config_error() {
    let err = run(&args("unused.csv", &["--resampling", "subsampling"])).unwrap_err();
    assert!(matches!(err, CliError::Config(_)));
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn switch_twice_is_identity() {
    let dir = TempDir::new().unwrap();
    let input = normal_csv(dir.path(), "d.csv", 40, (0.0, 1.0), (0.2, 1.0), 3);
    let straight = run(&args(&input, &["--columns", "treated,control"])).unwrap();
    let swapped = run(&args(&input, &["--columns", "control,treated", "--switch"])).unwrap();
    assert_eq!(straight.record, swapped.record);
    let once = run(&args(&input, &["--switch"])).unwrap();
    assert_eq!(once.result.labels, vec!["control", "treated"]);
}

#[test]
fn long_format_matches_wide() {
    let dir = TempDir::new().unwrap();
    let wide = normal_csv(dir.path(), "w.csv", 30, (0.0, 1.0), (0.5, 2.0), 4);
    let text = std::fs::read_to_string(&wide).unwrap();
    let mut long = String::from("group,y\n");
    for row in text.lines().skip(1) {
        let (a, b) = row.split_once(',').unwrap();
        let _ = writeln!(long, "2,{b}\n1,{a}");
    }
    let long_path = dir.path().join("long.csv");
    std::fs::write(&long_path, long).unwrap();
    let from_wide = run(&args(&wide, &[])).unwrap().result;
    let from_long = run(&args(long_path.to_str().unwrap(), &["--by", "group"])).unwrap().result;
    assert_eq!(from_long.labels, vec!["group=1", "group=2"]);
    assert_eq!(from_wide.statistic, from_long.statistic);
    assert_eq!(from_wide.resampled, from_long.resampled);
}

#[test]
fn curve_export() {
    let dir = TempDir::new().unwrap();
    let input = normal_csv(dir.path(), "d.csv", 80, (0.0, 1.0), (0.4, 1.0), 5);
    let out = dir.path().join("curves.csv");
    let out_s = out.to_str().unwrap();
    let bundle = sdtest_cli::execute(&args(&input, &["--ngrid", "37", "--curves-out", out_s])).unwrap();

    let mut reader = csv::Reader::from_path(&out).unwrap();
    assert_eq!(reader.headers().unwrap().iter().collect::<Vec<_>>(), ["grid", "F1", "F2", "D"]);
    let rows: Vec<Vec<f64>> = reader
        .records()
        .map(|r| r.unwrap().iter().map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 37);
    let sup = rows.iter().map(|r| r[3]).fold(f64::NEG_INFINITY, f64::max);
    let r = &bundle.result;
    assert_eq!(sup * r.lambda, r.statistic);
    for (row, x) in rows.iter().zip(r.grid.points()) {
        assert_eq!(row[0], *x);
        assert_eq!(row[3], row[1] - row[2]);
    }
}

#[test]
fn identical_samples_export_zero_difference() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("same.csv");
    std::fs::write(&path, "a,b\n0.3,0.3\n1.2,1.2\n-0.4,-0.4\n2.0,2.0\n").unwrap();
    let bundle = run(&args(path.to_str().unwrap(), &["--curves-out", "/unused", "--ngrid", "11"])).unwrap();
    let curves = bundle.curves.unwrap();
    for line in curves.lines().skip(1) {
        assert_eq!(line.rsplit(',').next().unwrap(), "0.0");
    }
    assert_eq!(bundle.result.statistic, 0.0);
    assert_eq!(bundle.result.p_value, 1.0);
}

#[test]
fn machine_record_is_reproducible_and_round_trips() {
    let dir = TempDir::new().unwrap();
    let input = normal_csv(dir.path(), "d.csv", 50, (0.0, 1.0), (0.1, 1.2), 6);
    let cases: [&[&str]; 7] = [
        &[],
        &["--approach", "contact", "--q-weight", "-1,1,1,0.5"],
        &["--approach", "sr", "--s", "2"],
        &["--approach", "ndm", "--functional", "l2", "--epsilon", "0.3"],
        &["--resampling", "subsampling", "--b1", "20", "--b2", "25"],
        &["--resampling", "multiplier", "--nboot", "50"],
        &["--approach", "maximality", "--resampling", "paired", "--s", "3"],
    ];
    for extra in cases {
        let a = run(&args(&input, extra)).unwrap();
        let b = run(&args(&input, extra)).unwrap();
        assert_eq!(a.record, b.record, "{extra:?}");
        let mut expected = a.result.clone();
        expected.elapsed = 0.0;
        assert_eq!(from_record(&a.record).unwrap(), expected, "{extra:?}");
    }
}

#[test]
fn labels_with_odd_characters_round_trip() {
    let dir = TempDir::new().unwrap();
    let path = dir.path().join("q.csv");
    std::fs::write(&path, "\"x = \"\"1\"\"\",yé\n1,2\n3,4\n5,0\n").unwrap();
    let bundle = run(&args(path.to_str().unwrap(), &["--nboot", "20"])).unwrap();
    assert_eq!(bundle.result.labels[0], "x = \"1\"");
    let back = from_record(&bundle.record).unwrap();
    assert_eq!(back.labels, bundle.result.labels);
}

#[test]
fn binary_exit_codes() {
    let dir = TempDir::new().unwrap();
    let input = normal_csv(dir.path(), "d.csv", 40, (1.0, 1.0), (0.0, 1.0), 7);
    let machine = dir.path().join("rec.txt");
    let bin = env!("CARGO_BIN_EXE_sdtest");

    let ok = Command::new(bin)
        .args(["--input", &input, "--nboot", "50", "--machine-out", machine.to_str().unwrap()])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let stdout = String::from_utf8(ok.stdout).unwrap();
    assert!(stdout.contains("*** Test Result ***"));
    assert!(from_record(&std::fs::read_to_string(&machine).unwrap()).is_ok());

    let config = Command::new(bin)
        .args(["--input", &input, "--resampling", "subsampling"])
        .output()
        .unwrap();
    assert_eq!(config.status.code(), Some(2));

    let missing = Command::new(bin).args(["--input", "/no/such/file.csv"]).output().unwrap();
    assert_eq!(missing.status.code(), Some(1));

    let quiet = Command::new(bin)
        .args(["--input", &input, "--nboot", "10", "--quiet"])
        .output()
        .unwrap();
    assert_eq!(quiet.status.code(), Some(0));
    assert!(quiet.stdout.is_empty());
}
