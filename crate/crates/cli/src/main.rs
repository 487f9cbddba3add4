#![allow(clippy::result_large_err)]

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};

use gradalg::scalar::{Field, FieldSpec};

mod commands;
mod report;

use commands::Ctx;
use report::{CliError, Report};

#[derive(Parser)]
#[command(name = "gradalg", version, about = "Gradings on finite-dimensional algebras, computed exactly")]
struct Cli {
    /// Seed for randomized probes.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Field override, e.g. Q, Q(zeta_4), F_3.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Also write the report to this file.
    #[arg(long, global = true)]
    out: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Validate a grading (and its degrees, if given).
    Validate { file: String },
    /// Universal group of a grading.
    UniversalGroup { file: String },
    /// Induced group-grading.
    Induce { file: String },
    /// Products of graded algebras.
    Product {
        #[arg(value_enum)]
        kind: ProductKind,
        file: String,
    },
    /// Loop algebras.
    Loop {
        #[arg(value_enum)]
        action: LoopAction,
        file: String,
    },
    /// Decompose into simple or graded-simple ideals.
    Decompose {
        #[arg(value_enum)]
        kind: DecomposeKind,
        file: String,
    },
    /// Centroid, graded when the file carries degrees.
    Centroid { file: String },
    /// Equivalences of loop algebras.
    Equivalence {
        #[arg(value_enum)]
        action: EquivalenceAction,
        file: String,
    },
    /// Built-in examples.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductKind {
    Grading,
    Free,
    G,
}

#[derive(Clone, Copy, ValueEnum)]
enum LoopAction {
    Build,
    Verify,
    Split,
    Recover,
    Witness,
}

#[derive(Clone, Copy, ValueEnum)]
enum DecomposeKind {
    Simple,
    Graded,
}

#[derive(Clone, Copy, ValueEnum)]
enum EquivalenceAction {
    Extend,
}

#[derive(Subcommand)]
enum CatalogAction {
    /// Run one entry, by name or key letter, or `all`.
    Run {
        name: String,
    },
    List,
}

fn value_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn dispatch(cli: &Cli, ctx: &Ctx, r: &mut Report) -> Result<(), CliError> {
    match &cli.command {
        Command::Validate { file } => commands::validate(&commands::read_instance(file)?, ctx, r),
        Command::UniversalGroup { file } => commands::universal_group(&commands::read_instance(file)?, ctx, r),
        Command::Induce { file } => commands::induce(&commands::read_instance(file)?, ctx, r),
        Command::Product { kind, file } => {
            commands::product(&value_name(*kind), &commands::read_instance(file)?, ctx, r)
        }
        Command::Loop { action, file } => {
            commands::loop_cmd(&value_name(*action), &commands::read_instance(file)?, ctx, r)
        }
        Command::Decompose { kind, file } => {
            commands::decompose(&value_name(*kind), &commands::read_instance(file)?, ctx, r)
        }
        Command::Centroid { file } => commands::centroid_cmd(&commands::read_instance(file)?, ctx, r),
        Command::Equivalence { action: EquivalenceAction::Extend, file } => {
            commands::equivalence_extend(&commands::read_instance(file)?, ctx, r)
        }
        Command::Catalog { action: CatalogAction::Run { name } } => commands::catalog_run(name, ctx, r),
        Command::Catalog { action: CatalogAction::List } => {
            commands::catalog_list(r);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let mut report = Report::new(argv, cli.seed);
    let field = match cli.field.as_deref().map(|s| FieldSpec::from_str(s).and_then(Field::new)) {
        None => Ok(None),
        Some(Ok(f)) => Ok(Some(f)),
        Some(Err(e)) => Err(CliError::Schema(format!("--field: {e}"))),
    };
    let outcome = field.and_then(|field| {
        let ctx = Ctx { seed: cli.seed, field };
        dispatch(&cli, &ctx, &mut report)
    });
    let (json, code) = report.finish(outcome.err());
    let text = serde_json::to_string_pretty(&json).expect("serializable") + "\n";
    print!("{text}");
    if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
            eprintln!("cannot write {path}: {e}");
            return ExitCode::from(report::EXIT_SCHEMA as u8);
        }
    }
    ExitCode::from(code as u8)
}
