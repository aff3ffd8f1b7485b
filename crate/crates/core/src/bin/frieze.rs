use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use affine_frieze::exact::LaurentPoly;
use affine_frieze::frieze::{draw_seed_values, DEFAULT_TERM_BUDGET};
use affine_frieze::quiver::QuiverFile;
use affine_frieze::reduction::build_reduction;
use affine_frieze::report::{dump_frieze, dump_reduction, emit_tables, run_verify, Format, RunConfig};
use affine_frieze::{build_affine_quiver, Error, Family, FriezeTable, Mode, Quiver, Rat};

#[derive(Parser)]
#[command(name = "frieze", version, about = "Exact checks on affine-type frieze patterns")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run relation, reduction and integrability checks and write a report.
    Verify(VerifyArgs),
    /// Print the b, period and A-type recurrence tables with measured values.
    Tables {
        #[arg(long, value_enum, default_value = "text")]
        format: Fmt,
    },
    /// Dump a frieze table.
    Frieze(FriezeArgs),
    /// Dump the reduced system (A, B-hat, C, reduced coordinates).
    Reduce {
        #[command(flatten)]
        quiver: QuiverArgs,
    },
}

#[derive(Args)]
struct QuiverArgs {
    /// A, D, E6, E7 or E8.
    #[arg(long)]
    family: Option<String>,
    #[arg(long = "N")]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    q: Option<usize>,
    /// JSON quiver file, instead of --family.
    #[arg(long, conflicts_with = "family")]
    quiver: Option<PathBuf>,
}

impl QuiverArgs {
    fn build(&self) -> affine_frieze::Result<Quiver> {
        match (&self.family, &self.quiver) {
            (_, Some(path)) => QuiverFile::load(path),
            (Some(f), None) => build_affine_quiver(Family::parse(f, self.n, self.p, self.q)?),
            (None, None) => Err(Error::Usage("give --family or --quiver".into())),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Json,
    Csv,
    Text,
}

impl From<Fmt> for Format {
    fn from(f: Fmt) -> Self {
        match f {
            Fmt::Json => Format::Json,
            Fmt::Csv => Format::Csv,
            Fmt::Text => Format::Text,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Symbolic,
    Specialized,
}

#[derive(Args)]
struct VerifyArgs {
    #[command(flatten)]
    quiver: QuiverArgs,
    #[arg(long, value_enum, default_value = "specialized")]
    mode: ModeArg,
    /// Number of random rational seeds.
    #[arg(long, default_value_t = 20)]
    seeds: usize,
    /// First RNG seed; trial i uses rng_seed + i.
    #[arg(long, default_value_t = 0)]
    rng_seed: u64,
    /// Last table column; computed from the checks when omitted.
    #[arg(long)]
    n_max: Option<usize>,
    /// Values of n tested per check.
    #[arg(long)]
    window: Option<usize>,
    /// Comma-separated check ids or prefixes, or `all`.
    #[arg(long, default_value = "all", value_delimiter = ',')]
    checks: Vec<String>,
    /// Term budget for symbolic tables.
    #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
    budget: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Fmt,
    /// Report path; defaults to $FRIEZE_OUT_DIR/report-<family>.<ext>, else stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct FriezeArgs {
    #[command(flatten)]
    quiver: QuiverArgs,
    /// Last column.
    #[arg(long, default_value_t = 10)]
    n_max: usize,
    /// Random rational initial values from this seed; all ones when omitted.
    #[arg(long)]
    seed: Option<u64>,
    /// Laurent polynomials in the initial cluster instead of numbers.
    #[arg(long, conflicts_with = "seed")]
    symbolic: bool,
    #[arg(long, default_value_t = DEFAULT_TERM_BUDGET)]
    budget: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Fmt,
}

fn run(cli: Cli) -> affine_frieze::Result<u8> {
    match cli.cmd {
        Cmd::Verify(a) => {
            let mut cfg = RunConfig::for_quiver(a.quiver.build()?);
            cfg.mode = match a.mode {
                ModeArg::Symbolic => Mode::Symbolic,
                ModeArg::Specialized => Mode::Specialized,
            };
            cfg.seeds = a.seeds;
            cfg.rng_seed = a.rng_seed;
            cfg.n_max = a.n_max;
            cfg.window = a.window;
            cfg.checks = a.checks;
            cfg.term_budget = a.budget;
            cfg.format = a.format.into();
            cfg.output = a.output;
            Ok(run_verify(&cfg)? as u8)
        }
        Cmd::Tables { format } => {
            print!("{}", emit_tables(format.into())?);
            Ok(0)
        }
        Cmd::Frieze(a) => {
            let q = a.quiver.build()?;
            let text = if a.symbolic {
                let t = FriezeTable::<LaurentPoly>::symbolic(&q, a.n_max, a.budget)?;
                dump_frieze(&q.labels, t.columns(), a.format.into())?
            } else {
                let init = match a.seed {
                    Some(s) => draw_seed_values(q.n_vertices(), s).values,
                    None => vec![Rat::from_integer(1.into()); q.n_vertices()],
                };
                let t = FriezeTable::specialized(&q, init, a.n_max)?;
                dump_frieze(&q.labels, t.columns(), a.format.into())?
            };
            print!("{text}");
            Ok(0)
        }
        Cmd::Reduce { quiver } => {
            print!("{}", dump_reduction(&build_reduction(&quiver.build()?)?)?);
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("frieze: {e}");
            ExitCode::from(2)
        }
    }
}
