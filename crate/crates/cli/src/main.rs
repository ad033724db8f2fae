use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};

use dialgebra::catalog::ClassId;
use dialgebra::report::Format;
use dialgebra::weights::{Family, SignReading};
use dialgebra::{Algebra, ClassSpec, Rational, WeightTriple};

mod commands;

#[derive(Parser)]
#[command(
    name = "dialg",
    version,
    about = "Exact (ρ,τ,σ)-derivations of left-symmetric dialgebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Debug)]
struct Source {
    /// Algebra file (JSON structure constants)
    #[arg(long, conflicts_with = "class")]
    file: Option<PathBuf>,
    /// Catalog class L1..L6
    #[arg(long)]
    class: Option<ClassId>,
    #[command(flatten)]
    params: Params,
}

#[derive(Args, Clone, Debug, Default)]
struct Params {
    #[arg(long, allow_hyphen_values = true)]
    a: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<Rational>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<Rational>,
}

#[derive(Args, Clone, Debug)]
struct Output {
    /// md, csv or json
    #[arg(long, default_value = "md")]
    format: Format,
    /// Write to this path instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
#[allow(clippy::large_enum_variant)]
enum Command {
    /// Check the left-symmetric and diassociative axioms
    Check {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Compute a derivation space
    Derive {
        #[command(flatten)]
        source: Source,
        /// Family tag: 111,110,101,100,011,001,010,01d
        #[arg(long, conflicts_with_all = ["rho", "tau", "sigma"])]
        family: Option<Family>,
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        rho: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        tau: Option<Rational>,
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<Rational>,
        /// Solve ρ=0 family labels literally instead of by their displayed equations
        #[arg(long)]
        literal_signs: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Reproduce the dimension table with an errata report
    Table {
        #[arg(long)]
        class: Option<ClassId>,
        #[command(flatten)]
        params: Params,
        #[arg(long, allow_hyphen_values = true, default_value = "7")]
        delta: Rational,
        #[arg(long)]
        literal_signs: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Canonical family of a raw triple
    Canon {
        #[arg(allow_hyphen_values = true)]
        rho: Rational,
        #[arg(allow_hyphen_values = true)]
        tau: Rational,
        #[arg(allow_hyphen_values = true)]
        sigma: Rational,
    },
    /// Decide characteristic nilpotency
    Nilpotent {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        output: Output,
    },
    /// Dimensions over a parameter grid, as CSV
    Sweep {
        #[arg(long)]
        class: ClassId,
        /// Comma-separated values for a
        #[arg(long, allow_hyphen_values = true)]
        a: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: Option<String>,
        /// Restrict to one family (default: all eight)
        #[arg(long)]
        family: Option<Family>,
        #[arg(long, allow_hyphen_values = true, default_value = "7")]
        delta: Rational,
        #[arg(long)]
        literal_signs: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

impl Source {
    fn load(&self) -> anyhow::Result<(Algebra, String)> {
        match (&self.file, self.class) {
            (Some(path), _) => {
                let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
                let alg = dialgebra::io::parse_algebra(&text).with_context(|| format!("parsing {}", path.display()))?;
                Ok((alg, path.display().to_string()))
            }
            (None, Some(id)) => {
                let spec =
                    ClassSpec::with_params(id, self.params.a.clone(), self.params.b.clone(), self.params.c.clone());
                let alg = dialgebra::instantiate(&spec)?;
                Ok((alg, spec.to_string()))
            }
            (None, None) => bail!("one of --file or --class is required"),
        }
    }
}

fn reading(literal: bool) -> SignReading {
    if literal {
        SignReading::Literal
    } else {
        SignReading::Displayed
    }
}

fn parse_list(s: &Option<String>) -> anyhow::Result<Option<Vec<Rational>>> {
    s.as_ref()
        .map(|s| {
            s.split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| x.parse::<Rational>().map_err(anyhow::Error::from))
                .collect()
        })
        .transpose()
}

fn emit(text: &str, out: &Option<PathBuf>) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Check { source, output } => {
            let (alg, name) = source.load()?;
            let (text, ok) = commands::check(&alg, &name, output.format);
            emit(&text, &output.out)?;
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Derive {
            source,
            family,
            delta,
            rho,
            tau,
            sigma,
            literal_signs,
            output,
        } => {
            let (alg, name) = source.load()?;
            let target = match (family, rho, tau, sigma) {
                (Some(f), ..) => commands::Target::Family(f, delta),
                (None, Some(r), Some(t), Some(s)) => commands::Target::Triple(WeightTriple::new(r, t, s)),
                _ => bail!("give either --family or all of --rho, --tau, --sigma"),
            };
            let text = commands::derive(&alg, &name, &target, reading(literal_signs), output.format)?;
            emit(&text, &output.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            class,
            params,
            delta,
            literal_signs,
            output,
        } => {
            let opts = dialgebra::report::TableOptions {
                classes: class.map_or_else(|| ClassId::ALL.to_vec(), |c| vec![c]),
                families: Family::TABLE_ORDER.to_vec(),
                a: params.a,
                b: params.b,
                c: params.c,
                delta,
                reading: reading(literal_signs),
            };
            let report = dialgebra::report::build_table(&opts)?;
            emit(&dialgebra::report::render(&report, output.format), &output.out)?;
            Ok(if report.self_consistent() {
                ExitCode::SUCCESS
            } else {
                eprintln!("solver and membership oracle disagree; see report");
                ExitCode::from(1)
            })
        }
        Command::Canon { rho, tau, sigma } => {
            print!("{}", commands::canon(&WeightTriple::new(rho, tau, sigma)));
            Ok(ExitCode::SUCCESS)
        }
        Command::Nilpotent { source, output } => {
            let (alg, name) = source.load()?;
            emit(&commands::nilpotent(&alg, &name, output.format)?, &output.out)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Sweep {
            class,
            a,
            b,
            c,
            family,
            delta,
            literal_signs,
            out,
        } => {
            let grid = dialgebra::report::SweepGrid {
                a: parse_list(&a)?,
                b: parse_list(&b)?,
                c: parse_list(&c)?,
            };
            let families = family.map_or_else(|| Family::TABLE_ORDER.to_vec(), |f| vec![f]);
            let report = dialgebra::report::sweep(class, &grid, &families, &delta, reading(literal_signs))?;
            for note in &report.skipped {
                eprintln!("skipped {note}");
            }
            emit(&report.to_csv(), &out)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
