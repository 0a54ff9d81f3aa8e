use std::io::{IsTerminal, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use typeb::verify::{CheckParams, DEFAULT_SEED};
use typeb::ExactTables;
use typeb_cli::commands::{self, CliError, CoxeterType, EnumKind, Format, PolyName, SeqName, TriangleName};

#[derive(Parser)]
#[command(name = "typeb", version, about = "Exact set-partition statistics of types A and B")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a number triangle.
    ///
    /// Rows start at n = 0 (eulerian-a: n = 1, with k = 1..n). In b-file
    /// output the running index starts at the same offset and walks the
    /// triangle row by row.
    Triangle {
        name: TriangleName,
        #[arg(long, default_value_t = 10)]
        rows: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print terms 0..=upto of a sequence. b-file indices start at 0.
    Seq {
        name: SeqName,
        #[arg(long, default_value_t = 10)]
        upto: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Print a generating polynomial in u.
    Poly {
        name: PolyName,
        #[arg(long)]
        n: usize,
    },
    /// Apply an umbral functional to a polynomial in x.
    #[command(name = "apply-l")]
    ApplyL {
        expr: String,
        #[arg(long)]
        ordered: bool,
        #[arg(long = "type", value_enum, default_value_t = CoxeterType::B)]
        ty: CoxeterType,
        /// Specialize u to this rational value.
        #[arg(long, allow_hyphen_values = true)]
        at: Option<String>,
    },
    /// List partitions in standard presentation, one per line.
    Enumerate {
        kind: EnumKind,
        #[arg(long)]
        n: usize,
        /// Keep only partitions with this many non-zero block pairs.
        #[arg(long)]
        blocks: Option<usize>,
    },
    /// Run identity checks by name, or `all`.
    Verify {
        #[arg(default_value = "all")]
        name: String,
        #[arg(long, default_value_t = 10)]
        max_n: usize,
        #[arg(long, default_value_t = 10)]
        max_m: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

fn styled(text: &str, code: &str) -> String {
    let plain = std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty()) || !std::io::stdout().is_terminal();
    if plain {
        text.to_string()
    } else {
        format!("\x1b[{code}m{text}\x1b[0m")
    }
}

fn run(cli: Cli) -> Result<(String, bool), CliError> {
    let tables = ExactTables::new();
    let out = match cli.command {
        Command::Triangle { name, rows, format } => commands::triangle(&tables, name, rows, format)?,
        Command::Seq { name, upto, format } => commands::seq(&tables, name, upto, format)?,
        Command::Poly { name, n } => commands::poly(&tables, name, n)?,
        Command::ApplyL { expr, ordered, ty, at } => commands::apply_l(&expr, ordered, ty, at.as_deref())?,
        Command::Enumerate { kind, n, blocks } => commands::enumerate_cmd(kind, n, blocks)?,
        Command::Verify { name, max_n, max_m, seed } => {
            let params = CheckParams { max_n, max_m, seed, ..CheckParams::default() };
            let (reports, ok) = commands::verify_cmd(&tables, &name, &params)?;
            let out = commands::render_reports(&reports, |tag, pass| styled(tag, if pass { "32" } else { "31" }));
            return Ok((out, ok));
        }
    };
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::from(1);
            }
            ExitCode::from(commands::exit_status(Ok(ok)))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(commands::exit_status(Err(&e)))
        }
    }
}
