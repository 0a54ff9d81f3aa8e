use std::process::{Command, Output};

use proptest::prelude::*;
use regex::Regex;
use serde_json::Value;
use typeb::{Polynomial, Rational};
use typeb_cli::expr::parse_poly;

fn typeb(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_typeb")).args(args).env("NO_COLOR", "1").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = typeb(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn triangle_outputs() {
    assert_eq!(stdout(&["triangle", "stirling-b", "--rows", "3", "--format", "csv"]), "1\n1,1\n1,4,1\n");
    assert_eq!(stdout(&["triangle", "eulerian-b", "--rows", "3", "--format", "table"]), "1\n1 1\n1 6 1\n");
    assert_eq!(stdout(&["triangle", "stirling-b", "--rows", "0"]), "");
    assert_eq!(stdout(&["triangle", "stirling-b", "--rows", "4"]), " 1\n 1  1\n 1  4  1\n 1 13  9  1\n");
    assert_eq!(stdout(&["triangle", "eulerian-a", "--rows", "3", "--format", "bfile"]), "1 1\n2 1\n3 1\n4 1\n5 4\n6 1\n");
    assert_eq!(
        stdout(&["triangle", "stirling-a", "--rows", "3", "--format", "json"]),
        "{\"name\":\"stirling-a\",\"offset\":0,\"rows\":[[1],[0,1],[0,1,1]]}\n"
    );
}

#[test]
fn sequence_and_polynomial_outputs() {
    assert_eq!(stdout(&["seq", "bell-b", "--upto", "4"]), "1 2 6 24 116\n");
    assert_eq!(stdout(&["seq", "ordered-bell-b", "--upto", "3"]), "1 3 17 147\n");
    assert_eq!(stdout(&["seq", "bell-b", "--upto", "0"]), "1\n");
    assert_eq!(stdout(&["seq", "bell-a", "--upto", "5", "--format", "csv"]), "1,1,2,5,15,52\n");
    assert_eq!(stdout(&["poly", "bell-b", "--n", "2"]), "1 + 4*u + u^2\n");
    assert_eq!(stdout(&["poly", "ordered-bell-b", "--n", "2"]), "1 + 8*u + 8*u^2\n");
    assert_eq!(stdout(&["poly", "bell-b", "--n", "0"]), "1\n");
    assert_eq!(stdout(&["poly", "ordered-bell-a", "--n", "3"]), "u + 6*u^2 + 6*u^3\n");
}

#[test]
fn apply_l_outputs() {
    assert_eq!(stdout(&["apply-l", "x^2", "--type", "b"]), "1 + 4*u + u^2\n");
    assert_eq!(stdout(&["apply-l", "x^2", "--type", "b", "--ordered"]), "1 + 8*u + 8*u^2\n");
    assert_eq!(stdout(&["apply-l", "1", "--type", "a"]), "1\n");
    assert_eq!(stdout(&["apply-l", "1", "--ordered"]), "1\n");
    assert_eq!(stdout(&["apply-l", "x^3", "--at", "1"]), "24\n");
    assert_eq!(stdout(&["apply-l", "x^5", "--type", "a", "--at", "1"]), "52\n");
    assert_eq!(stdout(&["apply-l", "(x-1)*(x-3)"]), "u^2\n");
}

#[test]
fn enumerate_outputs() {
    let all = stdout(&["enumerate", "partitions-b", "--n", "2"]);
    assert_eq!(all.lines().filter(|l| !l.starts_with('#')).count(), 6);
    assert!(all.ends_with("# total 6\n"));
    let one = stdout(&["enumerate", "partitions-b", "--n", "2", "--blocks", "1"]);
    assert_eq!(one, "{1,-1},{2}\n{2,-2},{1}\n{1,2}\n{1,-2}\n# total 4\n");
    assert_eq!(stdout(&["enumerate", "partitions-b", "--n", "0"]), "{}\n# total 1\n");
    let ordered = stdout(&["enumerate", "ordered-partitions-b", "--n", "2"]);
    assert!(ordered.ends_with("# total 17\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(typeb(&["verify", "all"]).status.code(), Some(0));
    assert_eq!(typeb(&["verify", "rota-a", "--max-n", "4"]).status.code(), Some(0));
    assert_eq!(typeb(&["verify", "no-such-check"]).status.code(), Some(2));
    assert_eq!(typeb(&["triangle", "nope"]).status.code(), Some(2));
    assert_eq!(typeb(&["apply-l", "x^-1"]).status.code(), Some(2));
    assert_eq!(typeb(&["apply-l", "y"]).status.code(), Some(2));
    assert_eq!(typeb(&["apply-l", "x", "--type", "a", "--ordered"]).status.code(), Some(2));
    assert_eq!(typeb(&["enumerate", "ordered-partitions-b", "--n", "9"]).status.code(), Some(2));
}

#[test]
fn verify_lines_are_plain_with_no_color() {
    let out = stdout(&["verify", "all"]);
    assert!(!out.contains('\x1b'));
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS ")).count(), typeb::verify::CATALOG.len());
    assert!(out.ends_with("10 passed, 0 failed\n"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["triangle", "eulerian-b", "--rows", "12", "--format", "json"][..],
        &["enumerate", "ordered-partitions-b", "--n", "3"][..],
        &["verify", "shift-lemma", "--seed", "99"][..],
    ] {
        assert_eq!(typeb(args).stdout, typeb(args).stdout);
    }
}

#[test]
fn formats_are_well_formed() {
    let bfile_line = Regex::new(r"^[0-9]+ -?[0-9]+$").unwrap();
    for name in ["stirling-b", "stirling-a", "eulerian-b", "eulerian-a"] {
        let csv = stdout(&["triangle", name, "--rows", "25", "--format", "csv"]);
        let offset = usize::from(name == "eulerian-a");
        for (i, line) in csv.lines().enumerate() {
            let fields = line.split(',').count();
            // eulerian-a row n has n entries; the others have n + 1
            assert_eq!(fields, i + 1, "{name} row {}", i + offset);
        }
        let json: Value = serde_json::from_str(&stdout(&["triangle", name, "--rows", "25", "--format", "json"])).unwrap();
        assert_eq!(json["rows"].as_array().unwrap().len(), 25);
        let bfile = stdout(&["triangle", name, "--rows", "25", "--format", "bfile"]);
        assert!(bfile.lines().all(|l| bfile_line.is_match(l)), "{name}");
        assert!(bfile.starts_with(&format!("{offset} 1\n")));
    }
    for name in ["bell-b", "bell-a", "ordered-bell-b"] {
        let json: Value = serde_json::from_str(&stdout(&["seq", name, "--upto", "40", "--format", "json"])).unwrap();
        assert_eq!(json["values"].as_array().unwrap().len(), 41);
        let bfile = stdout(&["seq", name, "--upto", "40", "--format", "bfile"]);
        assert!(bfile.lines().all(|l| bfile_line.is_match(l)));
    }
}

#[test]
fn big_values_stay_exact_in_json() {
    let json: Value = serde_json::from_str(&stdout(&["seq", "ordered-bell-b", "--upto", "30", "--format", "json"])).unwrap();
    let last = json["values"][30].to_string();
    let table = stdout(&["seq", "ordered-bell-b", "--upto", "30"]);
    assert_eq!(table.split_whitespace().last().unwrap(), last);
    assert!(!last.contains('e') && !last.contains('.'));
}

fn rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=9).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
}

proptest! {
    #[test]
    fn rendered_polynomials_reparse(c in prop::collection::vec(rational(), 0..10)) {
        let p = Polynomial::monomial_coeffs("x", c);
        prop_assert_eq!(parse_poly(&p.to_string(), "x").unwrap(), p);
    }
}

#[test]
fn failing_report_maps_to_exit_one() {
    use typeb::verify::{CheckReport, Outcome, Witness};
    use typeb_cli::commands::{exit_status, render_reports, CliError};
    let reports = vec![
        CheckReport { name: "rota-a", ranges: "n <= 3".into(), outcome: Outcome::Pass },
        CheckReport {
            name: "probe",
            ranges: "n <= 2".into(),
            outcome: Outcome::Fail(Witness { instance: "n = 2".into(), lhs: "5".into(), rhs: "6".into() }),
        },
    ];
    let text = render_reports(&reports, |tag, _| tag.to_string());
    assert_eq!(text, "PASS rota-a (n <= 3)\nFAIL probe (n <= 2): at n = 2: lhs = 5, rhs = 6\n1 passed, 1 failed\n");
    let ok = reports.iter().all(|r| r.passed());
    assert_eq!(exit_status(Ok(ok)), 1);
    assert_eq!(exit_status(Ok(true)), 0);
    assert_eq!(exit_status(Err(&CliError::Usage("x".into()))), 2);
}
