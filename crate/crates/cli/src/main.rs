use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use reljsl::demorgan::{open_g, pirr_g};
use reljsl::dep::{dep_reduce, DepMorphism};
use reljsl::equivalence::{dm_completion, nleq_obj, open_obj, pirr_obj};
use reljsl::freecat::{birkhoff_ji, birkhoff_up, free_ba, free_dl, free_jsl, Lattice};
use reljsl::io::check::check_suite;
use reljsl::io::text::{parse_jsl, parse_poset, parse_rel, parse_unary_algebra, parse_ug};
use reljsl::io::{Format, Value};
use reljsl::tensor::{sync_product, tensor, tight_tensor};
use reljsl::{Error, Jsl, Poset, Rel};

#[derive(Parser)]
#[command(name = "reljsl", version, about = "Finite relations, join-semilattices and their dualities")]
struct Cli {
    #[arg(long, value_enum, default_value_t = OutputFormat::Text, global = true)]
    format: OutputFormat,

    /// Write to this file instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Dot,
    Json,
}

impl From<OutputFormat> for Format {
    fn from(f: OutputFormat) -> Format {
        match f {
            OutputFormat::Text => Format::Text,
            OutputFormat::Dot => Format::Dot,
            OutputFormat::Json => Format::Json,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Open sets of a relation.
    Open { rel: PathBuf },
    /// Join-irreducibles against meet-irreducibles under ≰.
    Pirr { jsl: PathBuf },
    /// The relation ≰ on the whole carrier.
    Nleq { jsl: PathBuf },
    /// Dedekind-MacNeille completion of a poset.
    Dm { poset: PathBuf },
    /// Relational composition.
    Compose { left: PathBuf, right: PathBuf },
    /// Dep morphisms between relations.
    #[command(subcommand)]
    Dep(DepCommand),
    /// Tensor product of two semilattices.
    Tensor { left: PathBuf, right: PathBuf },
    /// Tight tensor product.
    Ttensor { left: PathBuf, right: PathBuf },
    /// Synchronous product of two relations.
    Sync { left: PathBuf, right: PathBuf },
    /// De Morgan algebras and undirected graphs.
    #[command(subcommand)]
    Demorgan(DemorganCommand),
    /// Free constructions.
    #[command(subcommand)]
    Free(FreeCommand),
    /// Up-set lattice of a poset, or the irreducible poset of a distributive lattice.
    Birkhoff {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = BirkhoffInput::Poset)]
        from: BirkhoffInput,
    },
    /// Pirr(Open G), the reduced form of a relation.
    Reduce { rel: PathBuf },
    /// Run a property suite on seeded random instances.
    Check {
        #[arg(long)]
        suite: String,
        #[arg(long, default_value_t = 4)]
        max_size: usize,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum DepCommand {
    /// Validate a Dep morphism and print its components.
    Check {
        rel: PathBuf,
        #[arg(long)]
        dom: PathBuf,
        #[arg(long)]
        cod: PathBuf,
    },
    /// Compose `left : dom → mid` with `right : mid → cod`.
    Compose {
        left: PathBuf,
        right: PathBuf,
        #[arg(long)]
        dom: PathBuf,
        #[arg(long)]
        mid: PathBuf,
        #[arg(long)]
        cod: PathBuf,
    },
    /// Drop duplicate and reducible rows and columns.
    Reduce { rel: PathBuf },
}

#[derive(Subcommand)]
enum DemorganCommand {
    /// De Morgan algebra of open sets of a graph.
    ToAlgebra { ug: PathBuf },
    /// Graph on the join-irreducibles of a De Morgan algebra.
    ToGraph { jsl: PathBuf },
}

#[derive(Subcommand)]
enum FreeCommand {
    /// Down-sets of a poset.
    Jsl { poset: PathBuf },
    /// Down-sets of a semilattice, as a distributive lattice.
    Dl { jsl: PathBuf },
    /// Power set of the join-irreducibles of a distributive lattice.
    Ba { jsl: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum BirkhoffInput {
    Poset,
    Lattice,
}

enum Failure {
    Property(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn rel(path: &Path) -> Result<Rel, Failure> {
    Ok(parse_rel(&read(path)?)?)
}

fn jsl(path: &Path) -> Result<Jsl, Failure> {
    Ok(parse_jsl(&read(path)?)?)
}

fn poset(path: &Path) -> Result<Poset, Failure> {
    Ok(parse_poset(&read(path)?)?)
}

fn run(cli: &Cli) -> Result<(String, bool), Failure> {
    let format = Format::from(cli.format);
    let value = match &cli.command {
        Command::Open { rel: r } => Value::Jsl(open_obj(&rel(r)?).jsl().clone()),
        Command::Pirr { jsl: q } => Value::Rel(pirr_obj(&jsl(q)?)),
        Command::Nleq { jsl: q } => Value::Rel(nleq_obj(&jsl(q)?)),
        Command::Dm { poset: p } => Value::Jsl(dm_completion(&poset(p)?).0.jsl().clone()),
        Command::Compose { left, right } => Value::Rel(rel(left)?.compose(&rel(right)?)?),
        Command::Dep(DepCommand::Check { rel: r, dom, cod }) => match DepMorphism::new(rel(r)?, rel(dom)?, rel(cod)?) {
            Ok(d) => Value::Dep(d),
            Err(e @ Error::NotDepMorphism(_)) => return Err(Failure::Property(e.to_string())),
            Err(e) => return Err(e.into()),
        },
        Command::Dep(DepCommand::Compose { left, right, dom, mid, cod }) => {
            let mid = rel(mid)?;
            let first = DepMorphism::new(rel(left)?, rel(dom)?, mid.clone())?;
            let second = DepMorphism::new(rel(right)?, mid, rel(cod)?)?;
            Value::Dep(first.compose(&second)?)
        }
        Command::Dep(DepCommand::Reduce { rel: r }) => Value::Rel(dep_reduce(&rel(r)?).0),
        Command::Tensor { left, right } => Value::Jsl(tensor(&jsl(left)?, &jsl(right)?)?.jsl().clone()),
        Command::Ttensor { left, right } => Value::Jsl(tight_tensor(&jsl(left)?, &jsl(right)?).jsl),
        Command::Sync { left, right } => Value::Rel(sync_product(&rel(left)?, &rel(right)?)),
        Command::Demorgan(DemorganCommand::ToAlgebra { ug }) => Value::Algebra(open_g(&parse_ug(&read(ug)?)?).0),
        Command::Demorgan(DemorganCommand::ToGraph { jsl }) => Value::Graph(pirr_g(&parse_unary_algebra(&read(jsl)?)?)?),
        Command::Free(FreeCommand::Jsl { poset: p }) => Value::Jsl(free_jsl(&poset(p)?).jsl().clone()),
        Command::Free(FreeCommand::Dl { jsl: q }) => Value::Jsl(free_dl(&jsl(q)?).jsl().clone()),
        Command::Free(FreeCommand::Ba { jsl: q }) => Value::Jsl(free_ba(&Lattice::new(jsl(q)?))?.jsl().clone()),
        Command::Birkhoff { file, from: BirkhoffInput::Poset } => Value::Jsl(birkhoff_up(&poset(file)?).0.jsl().clone()),
        Command::Birkhoff { file, from: BirkhoffInput::Lattice } => Value::Poset(birkhoff_ji(&Lattice::new(jsl(file)?))?),
        Command::Reduce { rel: r } => Value::Rel(pirr_obj(open_obj(&rel(r)?).jsl())),
        Command::Check { suite, max_size, cases, seed } => {
            let report = check_suite(suite, *max_size, *cases, *seed)?;
            let out = match format {
                Format::Json => {
                    let v = json!({
                        "suite": report.suite,
                        "theorem": report.theorem,
                        "cases": report.cases,
                        "passed": report.passed(),
                        "counterexample": report.failure.as_ref().map(|c| json!({ "case": c.case, "instance": c.instance })),
                    });
                    serde_json::to_string_pretty(&v).expect("report serializes") + "\n"
                }
                _ => report.to_string(),
            };
            return Ok((out, report.passed()));
        }
    };
    Ok((value.render(format), true))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, ok) = match run(&cli) {
        Ok(r) => r,
        Err(Failure::Property(msg)) => {
            eprintln!("violation: {msg}");
            return ExitCode::from(1);
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match &cli.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &out) {
                eprintln!("error: {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{out}"),
    }
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
