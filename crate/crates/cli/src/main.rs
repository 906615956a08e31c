//! `factorlab` command-line front end.
//!
//! Every command prints one JSON object (or a plain-text rendering of it).
//! Exit codes: 0 success, 2 invalid input, 3 precision error, 4 resource limit.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use factorlab::Error;
use serde_json::{Map, Value};

#[derive(Parser, Debug)]
#[command(name = "factorlab", version, about = "Factorization invariants of zero-sum monoids and tiled orders")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Cap on divisor expansions in factorization searches.
    #[arg(long, global = true, default_value_t = 100_000)]
    cap: usize,
    /// Working precision N (p-adic digits) where a command needs one.
    #[arg(long, global = true)]
    precision: Option<u32>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Zero-sum sequences over a finite abelian group.
    #[command(subcommand)]
    Zerosum(ZeroSumCommand),
    /// Tiled orders given by a partition and an exponent matrix.
    #[command(subcommand)]
    Tiled(TiledCommand),
    /// Length set and elasticity of one element.
    Factor(FactorArgs),
    /// T-block monoids.
    #[command(subcommand)]
    Tblock(TBlockCommand),
    /// Truncated p-adic matrix arithmetic.
    #[command(subcommand)]
    Padic(PadicCommand),
}

#[derive(Args, Debug, Clone)]
struct GroupArg {
    /// Cyclic orders, e.g. `2,4` for Z_2 ⊕ Z_4.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    orders: Vec<i64>,
}

#[derive(Subcommand, Debug)]
enum ZeroSumCommand {
    /// Davenport constant, by zero-sumfree extension and by maximal atom length.
    Davenport(GroupArg),
    /// All minimal zero-sum sequences.
    Atoms(GroupArg),
    /// Set of lengths of one zero-sum sequence.
    Lengths {
        #[command(flatten)]
        group: GroupArg,
        /// JSON array of elements, e.g. `[[1],[1],[1]]`.
        #[arg(long)]
        sequence: String,
    },
    /// Brute-force elasticity of B(G) against max{1, D/2}.
    Elasticity(GroupArg),
}

#[derive(Subcommand, Debug)]
enum TiledCommand {
    /// Check the order conditions of a shape.
    Validate(ShapeArg),
    /// Reduce a shape to standard form.
    Reduce(ShapeArg),
    /// Decide whether two standard-form shapes give isomorphic orders.
    Iso {
        #[command(flatten)]
        shape: ShapeArg,
        /// The second shape.
        #[arg(long)]
        other: String,
    },
    /// Decide heredity of a standard-form shape.
    Hereditary(ShapeArg),
    /// Build the witness atoms α_k, α'_k of a non-hereditary shape.
    Witness {
        #[command(flatten)]
        shape: ShapeArg,
        #[arg(long, default_value_t = 1)]
        k: u32,
        #[arg(long, default_value_t = 2)]
        p: u64,
    },
}

#[derive(Args, Debug, Clone)]
struct ShapeArg {
    /// `{"partition":[…],"exponents":[[…]]}`, inline or `@file`.
    #[arg(long)]
    shape: String,
}

#[derive(Args, Debug)]
struct FactorArgs {
    /// Group for a zero-sum element.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, conflicts_with_all = ["matrix", "shape"])]
    orders: Option<Vec<i64>>,
    /// Zero-sum sequence (with `--orders`).
    #[arg(long, requires = "orders")]
    sequence: Option<String>,
    /// Matrix `{"p","precision","entries"}`, inline or `@file`.
    #[arg(long)]
    matrix: Option<String>,
    /// Tiled order containing the matrix; the full matrix ring when omitted.
    #[arg(long, requires = "matrix")]
    shape: Option<String>,
}

#[derive(Subcommand, Debug)]
enum TBlockCommand {
    /// Lift the tiled witness identity to two factorizations in B_T(C, ι).
    Lift {
        /// Path to the JSON class data.
        #[arg(long)]
        config: String,
        /// Overrides `k` from the config.
        #[arg(long)]
        k: Option<u32>,
        /// Overrides `m` from the config.
        #[arg(long)]
        m: Option<u32>,
    },
    /// Upper bound for the elasticity of an order.
    Bound {
        #[arg(long, action = clap::ArgAction::Set)]
        hereditary: bool,
        #[arg(long)]
        n: u64,
        #[arg(long)]
        ram_count: u64,
        #[arg(long)]
        index_valuation: u64,
        #[arg(long)]
        davenport: u64,
    },
}

#[derive(Subcommand, Debug)]
enum PadicCommand {
    /// Recover the unit γ with C = γB from B ≡ C mod p^t.
    Recover {
        #[arg(long)]
        b: String,
        #[arg(long)]
        c: String,
        #[arg(long)]
        t: u32,
    },
}

/// What a command hands back for printing.
pub struct Outcome {
    pub inputs: Value,
    pub result: Map<String, Value>,
    /// A capped search: the result is partial and the exit code is 4.
    pub partial: bool,
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Zerosum(z) => match z {
            ZeroSumCommand::Davenport(_) => "zerosum davenport",
            ZeroSumCommand::Atoms(_) => "zerosum atoms",
            ZeroSumCommand::Lengths { .. } => "zerosum lengths",
            ZeroSumCommand::Elasticity(_) => "zerosum elasticity",
        },
        Command::Tiled(t) => match t {
            TiledCommand::Validate(_) => "tiled validate",
            TiledCommand::Reduce(_) => "tiled reduce",
            TiledCommand::Iso { .. } => "tiled iso",
            TiledCommand::Hereditary(_) => "tiled hereditary",
            TiledCommand::Witness { .. } => "tiled witness",
        },
        Command::Factor(_) => "factor",
        Command::Tblock(TBlockCommand::Lift { .. }) => "tblock lift",
        Command::Tblock(TBlockCommand::Bound { .. }) => "tblock bound",
        Command::Padic(PadicCommand::Recover { .. }) => "padic recover",
    }
}

fn dispatch(cli: &Cli) -> factorlab::Result<Outcome> {
    use commands as c;
    let cap = cli.cap;
    match &cli.command {
        Command::Zerosum(z) => match z {
            ZeroSumCommand::Davenport(g) => c::davenport(&g.orders),
            ZeroSumCommand::Atoms(g) => c::atoms(&g.orders),
            ZeroSumCommand::Lengths { group, sequence } => c::zero_sum_lengths(&group.orders, sequence),
            ZeroSumCommand::Elasticity(g) => c::elasticity(&g.orders),
        },
        Command::Tiled(t) => match t {
            TiledCommand::Validate(s) => c::validate(&s.shape),
            TiledCommand::Reduce(s) => c::reduce(&s.shape),
            TiledCommand::Iso { shape, other } => c::iso(&shape.shape, other),
            TiledCommand::Hereditary(s) => c::hereditary(&s.shape),
            TiledCommand::Witness { shape, k, p } => c::witness(&shape.shape, *k, *p, cli.precision),
        },
        Command::Factor(f) => match (&f.orders, &f.sequence, &f.matrix) {
            (Some(orders), Some(seq), None) => c::factor_zero_sum(orders, seq, cap),
            (None, None, Some(matrix)) => c::factor_matrix(matrix, f.shape.as_deref(), cli.precision, cap),
            _ => Err(Error::invalid("give either --orders with --sequence, or --matrix (optionally with --shape)")),
        },
        Command::Tblock(TBlockCommand::Lift { config, k, m }) => c::lift(config, *k, *m, cli.precision, cap),
        Command::Tblock(TBlockCommand::Bound { hereditary, n, ram_count, index_valuation, davenport }) => {
            c::bound(*hereditary, *n, *ram_count, *index_valuation, *davenport)
        }
        Command::Padic(PadicCommand::Recover { b, c: cm, t }) => c::recover(b, cm, *t, cli.precision),
    }
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::InvalidInput(_) | Error::Schema { .. } => 2,
        Error::Precision(_) => 3,
        Error::ResourceLimit(_) => 4,
    }
}

fn render_text(report: &Map<String, Value>) -> String {
    let mut out = String::new();
    for (key, value) in report {
        let shown = match value {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{key}: {shown}\n"));
    }
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut report = Map::new();
    report.insert("command".into(), Value::from(command_name(&cli.command)));
    report.insert("version".into(), Value::from(env!("CARGO_PKG_VERSION")));
    let code = match dispatch(&cli) {
        Ok(outcome) => {
            report.insert("inputs".into(), outcome.inputs);
            report.extend(outcome.result);
            if outcome.partial {
                4
            } else {
                0
            }
        }
        Err(e) => {
            let mut err = Map::new();
            err.insert("code".into(), Value::from(e.code()));
            err.insert("message".into(), Value::from(e.to_string()));
            if let Error::Schema { pointer, .. } = &e {
                err.insert("pointer".into(), Value::from(pointer.clone()));
            }
            report.insert("error".into(), Value::Object(err));
            eprintln!("factorlab: {e}");
            exit_code(&e)
        }
    };
    match cli.format {
        Format::Json => println!("{}", Value::Object(report)),
        Format::Text => print!("{}", render_text(&report)),
    }
    ExitCode::from(code)
}
