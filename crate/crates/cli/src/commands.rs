//! Command implementations. Each returns the full text to print so output
//! stays byte-identical across runs.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::{json, Number, Value};
use thiserror::Error;
use typeb::enumerate;
use typeb::verify::{self, CheckParams, CheckReport};
use typeb::{ExactTables, Functional, Polynomial, Rational, TriangleKind};

use crate::expr::{parse_poly, ParseError};

/// Upper limit on `--rows` / `--upto` / `--n` for the closed-form commands.
pub const MAX_ROWS: usize = 1000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] typeb::Error),
}

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
    Bfile,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum TriangleName {
    StirlingB,
    StirlingA,
    EulerianB,
    EulerianA,
}

impl TriangleName {
    fn kind(self) -> TriangleKind {
        match self {
            TriangleName::StirlingB => TriangleKind::StirlingB,
            TriangleName::StirlingA => TriangleKind::StirlingA,
            TriangleName::EulerianB => TriangleKind::EulerianB,
            TriangleName::EulerianA => TriangleKind::EulerianA,
        }
    }

    /// Index of the first row, and of the first b-file line.
    pub fn offset(self) -> usize {
        match self {
            TriangleName::EulerianA => 1,
            _ => 0,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SeqName {
    BellB,
    BellA,
    OrderedBellB,
}

impl SeqName {
    fn name(self) -> &'static str {
        match self {
            SeqName::BellB => "bell-b",
            SeqName::BellA => "bell-a",
            SeqName::OrderedBellB => "ordered-bell-b",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum PolyName {
    BellB,
    OrderedBellB,
    OrderedBellA,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CoxeterType {
    A,
    B,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum EnumKind {
    PartitionsB,
    OrderedPartitionsB,
}

fn check_size(what: &str, n: usize) -> Result<()> {
    if n > MAX_ROWS {
        return Err(CliError::Usage(format!("{what} {n} exceeds the limit of {MAX_ROWS}")));
    }
    Ok(())
}

fn json_int(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integers are valid JSON numbers"))
}

fn table(rows: &[Vec<BigInt>]) -> String {
    let width = rows.iter().flatten().map(|v| v.to_string().len()).max().unwrap_or(0);
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
    out
}

fn csv(rows: &[Vec<BigInt>]) -> String {
    let mut out = String::new();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", cells.join(",")).unwrap();
    }
    out
}

fn bfile<'a>(values: impl IntoIterator<Item = &'a BigInt>, offset: usize) -> String {
    let mut out = String::new();
    for (i, v) in values.into_iter().enumerate() {
        writeln!(out, "{} {v}", i + offset).unwrap();
    }
    out
}

/// Rows `0..rows` (eulerian-a: `1..=rows`, entries `k = 1..=n`).
pub fn triangle(tables: &ExactTables, name: TriangleName, rows: usize, format: Format) -> Result<String> {
    check_size("rows", rows)?;
    let kind = name.kind();
    let offset = name.offset();
    let data: Vec<Vec<BigInt>> = (offset..rows + offset)
        .map(|n| match kind {
            TriangleKind::EulerianA => tables.eulerian_a_row(n),
            _ => tables.triangle(kind).row(n),
        })
        .collect::<typeb::Result<_>>()?;
    Ok(match format {
        Format::Table => table(&data),
        Format::Csv => csv(&data),
        Format::Bfile => bfile(data.iter().flatten(), offset),
        Format::Json => {
            let rows: Vec<Value> = data.iter().map(|r| Value::Array(r.iter().map(json_int).collect())).collect();
            let v = json!({ "name": kind.name(), "offset": offset, "rows": rows });
            format!("{v}\n")
        }
    })
}

/// Terms `0..=upto`.
pub fn seq(tables: &ExactTables, name: SeqName, upto: usize, format: Format) -> Result<String> {
    check_size("upto", upto)?;
    let values: Vec<BigInt> = (0..=upto)
        .map(|n| match name {
            SeqName::BellB => tables.bell_b(n).number,
            SeqName::BellA => tables.bell_a(n),
            SeqName::OrderedBellB => tables.ordered_bell_b(n),
        })
        .collect();
    let joined = |sep: &str| values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(sep);
    Ok(match format {
        Format::Table => format!("{}\n", joined(" ")),
        Format::Csv => format!("{}\n", joined(",")),
        Format::Bfile => bfile(&values, 0),
        Format::Json => {
            let v = json!({
                "name": name.name(),
                "offset": 0,
                "values": values.iter().map(json_int).collect::<Vec<_>>(),
            });
            format!("{v}\n")
        }
    })
}

pub fn poly(tables: &ExactTables, name: PolyName, n: usize) -> Result<String> {
    check_size("n", n)?;
    let p = match name {
        PolyName::BellB => tables.bell_poly_b(n),
        PolyName::OrderedBellB => tables.ordered_bell_poly_b(n),
        PolyName::OrderedBellA => tables.ordered_bell_poly_a(n),
    };
    Ok(format!("{p}\n"))
}

/// Parse a rational literal `p`, `-p` or `p/q`.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || CliError::Usage(format!("`{text}` is not a rational number"));
    let (num, den) = match text.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den == BigInt::from(0) {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

pub fn apply_l(expr: &str, ordered: bool, ty: CoxeterType, at: Option<&str>) -> Result<String> {
    let functional = match (ty, ordered) {
        (CoxeterType::B, false) => Functional::LB,
        (CoxeterType::B, true) => Functional::LBOrdered,
        (CoxeterType::A, false) => Functional::LA,
        (CoxeterType::A, true) => {
            return Err(CliError::Usage("--ordered is only defined for --type b".into()));
        }
    };
    let p: Polynomial = parse_poly(expr, "x")?;
    match at {
        Some(u0) => {
            let u0 = parse_rational(u0)?;
            Ok(format!("{}\n", functional.apply_at(&p, &u0)?))
        }
        None => Ok(format!("{}\n", functional.apply(&p)?)),
    }
}

pub fn enumerate_cmd(kind: EnumKind, n: usize, blocks: Option<usize>) -> Result<String> {
    let keep = |k: usize| blocks.is_none_or(|b| b == k);
    let mut out = String::new();
    let mut count = 0u64;
    match kind {
        EnumKind::PartitionsB => {
            for p in enumerate::gen_partitions_b(n)?.filter(|p| keep(p.num_blocks())) {
                writeln!(out, "{p}").unwrap();
                count += 1;
            }
            writeln!(out, "# total {count}").unwrap();
        }
        EnumKind::OrderedPartitionsB => {
            for p in enumerate::gen_ordered_partitions_b(n)?.filter(|p| keep(p.num_blocks())) {
                writeln!(out, "{p}").unwrap();
                count += 1;
            }
            writeln!(out, "# total {count}").unwrap();
        }
    }
    Ok(out)
}

/// Output text and whether every check passed.
pub fn verify_cmd(tables: &ExactTables, name: &str, params: &CheckParams) -> Result<(Vec<CheckReport>, bool)> {
    let reports = if name == "all" {
        verify::run_all(tables, params)
    } else {
        let r = verify::run(name, tables, params).ok_or_else(|| {
            CliError::Usage(format!("unknown check `{name}`; known: all, {}", verify::CATALOG.join(", ")))
        })?;
        vec![r]
    };
    let ok = reports.iter().all(|r| r.passed());
    Ok((reports, ok))
}

/// One line per report with the tag passed through `style`, then a summary.
pub fn render_reports(reports: &[CheckReport], style: impl Fn(&str, bool) -> String) -> String {
    let mut out = String::new();
    for r in reports {
        let line = r.to_string();
        let (tag, rest) = line.split_at(4);
        writeln!(out, "{}{rest}", style(tag, r.passed())).unwrap();
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "{} passed, {failed} failed", reports.len() - failed).unwrap();
    out
}

/// 0 when everything passed, 1 when a check failed, 2 on any error.
pub fn exit_status(result: std::result::Result<bool, &CliError>) -> u8 {
    match result {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(_) => 2,
    }
}
