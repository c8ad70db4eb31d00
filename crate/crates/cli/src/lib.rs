//! Command-line driver for `nexus-core`: JSON inputs, reports, exit codes.
//!
//! Exit codes: 0 success, 1 input error, 2 genericity failure, 3 resource limit.

pub mod formats;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::io::Read as _;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use nexus_core::arrangement::{arrangement_report, CentralArrangement3};
use nexus_core::constraints::{full_report, SingularSetup};
use nexus_core::cyclotomic::{cyclotomic, CycloProduct};
use nexus_core::le::{analyze_generic, SliceSetup, DEFAULT_RANDOM_TRIES};
use nexus_core::local::{Budget, Colength};
use nexus_core::poly::parse;
use serde::{Deserialize, Serialize};

use formats::{AnalyzeJson, ArrangementJson, SetupJson};
use report::{AnalyzeDoc, ArrangementDoc, ConstraintDoc};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_GENERICITY: i32 = 2;
pub const EXIT_RESOURCE: i32 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "nexus",
    version,
    about = "Lê numbers and monodromy constraints for hypersurface singularities"
)]
pub struct Cli {
    /// Read the JSON input from this file.
    #[arg(long, global = true, value_name = "PATH")]
    pub input: Option<PathBuf>,

    /// Inline JSON input.
    #[arg(long, global = true, value_name = "JSON", conflicts_with = "input")]
    pub json: Option<String>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Seed for the generic z0 search.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// S-pairs per basis and reduction steps per normal form.
    #[arg(long, global = true, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_pairs: u64,

    /// Terms per polynomial, stored basis terms and staircase monomials.
    #[arg(long, global = true, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub max_monomials: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Lê numbers of a polynomial, plus constraints when components are given.
    Analyze,
    /// Constraint report for numeric setup data.
    Constraints,
    /// Constraint report for a central plane arrangement in C^3.
    Arrangement,
    /// Cyclotomic polynomial utilities.
    Cyclo {
        #[command(subcommand)]
        op: CycloOp,
    },
}

#[derive(Subcommand, Debug)]
pub enum CycloOp {
    /// Expanded k-th cyclotomic polynomial.
    Phi { k: u64 },
    /// Factorization of t^d - 1.
    Unity { d: u64 },
    /// Characteristic polynomial of a homogeneous isolated singularity.
    Homchar { n: u32, d: u64 },
    /// gcd of two factored products such as "Phi_1^2 * Phi_3".
    Gcd { a: String, b: String },
    /// Expanded form of a factored product.
    Expand { a: String },
    /// Sum of the roots of a factored product.
    Trace { a: String },
}

/// What a run prints and returns.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(err: &anyhow::Error) -> Self {
        Self {
            code: exit_code(err),
            stdout: String::new(),
            stderr: format!("error: {:#}\n", err),
        }
    }
}

/// Maps an error to the exit-code contract.
pub fn exit_code(err: &anyhow::Error) -> i32 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<nexus_core::Error>() {
            return match e {
                nexus_core::Error::Genericity(_) | nexus_core::Error::InvariantViolation(_) => {
                    EXIT_GENERICITY
                }
                nexus_core::Error::ResourceLimit(_) => EXIT_RESOURCE,
                _ => EXIT_INPUT,
            };
        }
    }
    EXIT_INPUT
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    let result = match &cli.command {
        Command::Analyze => read_input(cli).and_then(|text| analyze(cli, &text)),
        Command::Constraints => {
            read_input(cli).and_then(|text| constraints(cli, &text).map(Outcome::ok))
        }
        Command::Arrangement => {
            read_input(cli).and_then(|text| arrangement(cli, &text).map(Outcome::ok))
        }
        Command::Cyclo { op } => cyclo(cli.format, op).map(Outcome::ok),
    };
    result.unwrap_or_else(|e| Outcome::failure(&e))
}

fn budget(cli: &Cli) -> Budget {
    Budget {
        max_pairs: usize::try_from(cli.max_pairs).unwrap_or(usize::MAX),
        max_monomials: usize::try_from(cli.max_monomials).unwrap_or(usize::MAX),
    }
}

fn read_input(cli: &Cli) -> Result<String> {
    if let Some(text) = &cli.json {
        return Ok(text.clone());
    }
    if let Some(path) = &cli.input {
        return fs::read_to_string(path).with_context(|| format!("reading {}", path.display()));
    }
    let mut text = String::new();
    std::io::stdin()
        .read_to_string(&mut text)
        .context("reading standard input")?;
    Ok(text)
}

fn render<T: Serialize>(
    format: Format,
    doc: &T,
    text: impl FnOnce(&T) -> String,
) -> Result<String> {
    Ok(match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(doc)?;
            s.push('\n');
            s
        }
        Format::Text => text(doc),
    })
}

fn analyze(cli: &Cli, input: &str) -> Result<Outcome> {
    let job: AnalyzeJson = serde_json::from_str(input).context("analyze input")?;
    let f = parse(&job.poly, &job.vars).context("polynomial")?;
    let b = budget(cli);
    let (slice, le) = match &job.z0 {
        Some(z) => {
            let slice = SliceSetup::with_linear_form(&f, &z.coefficients(&job.vars)?)?;
            let le = slice.compute_all(&b)?;
            (slice, le)
        }
        None => analyze_generic(&f, job.seed.unwrap_or(cli.seed), DEFAULT_RANDOM_TRIES, &b)?,
    };
    let n = u32::try_from(slice.n()).context("too many variables")?;
    let poly = f.display_with(&job.vars).to_string();
    if !le.genericity_ok {
        let doc = AnalyzeDoc::new(poly, job.vars.clone(), slice.form(), job.d0, &le, None);
        return Ok(Outcome {
            code: EXIT_GENERICITY,
            stdout: render(cli.format, &doc, report::render_analyze)?,
            stderr: format!(
                "error: genericity failure: {}\n",
                le.warnings
                    .last()
                    .map(String::as_str)
                    .unwrap_or("z0 is not generic")
            ),
        });
    }
    let mu0 = match le.mu0 {
        Colength::Finite(m) => m,
        Colength::Infinite => unreachable!("checked by genericity"),
    };
    let d0 = job.d0.or_else(|| detect_degree(&slice, n, mu0));
    let components = match &job.components {
        Some(list) => list
            .iter()
            .enumerate()
            .map(|(i, c)| c.to_component(i))
            .collect::<Result<Vec<_>>>()?,
        None => Vec::new(),
    };
    let setup = SingularSetup {
        d0,
        components,
        ..SingularSetup::new(n, mu0)
    };
    let constraint = full_report(&setup, Some(&le))?;
    let doc = AnalyzeDoc::new(
        poly,
        job.vars.clone(),
        slice.form(),
        d0,
        &le,
        Some(&constraint),
    );
    Ok(Outcome::ok(render(
        cli.format,
        &doc,
        report::render_analyze,
    )?))
}

/// Degree of `f₀` when it is homogeneous with the expected Milnor number.
fn detect_degree(slice: &SliceSetup, n: u32, mu0: u64) -> Option<u64> {
    let f0 = slice.f().restrict_first_var().ok()?;
    let d = f0.homogeneous_degree()?;
    let expected = (d.checked_sub(1)?).checked_pow(n)?;
    (d >= 2 && expected == mu0).then_some(d)
}

fn constraints(cli: &Cli, input: &str) -> Result<String> {
    let job: SetupJson = serde_json::from_str(input).context("setup input")?;
    let setup = job.to_setup()?;
    let r = full_report(&setup, None)?;
    let doc = ConstraintDoc::from(&r);
    render(cli.format, &doc, report::render_constraint_report)
}

fn arrangement(cli: &Cli, input: &str) -> Result<String> {
    let job: ArrangementJson = serde_json::from_str(input).context("arrangement input")?;
    let normals = job
        .normals
        .iter()
        .map(formats::triple)
        .collect::<Result<Vec<_>>>()?;
    let arr = CentralArrangement3::new(normals)?;
    let z0 = match &job.z0 {
        Some(z) => Some(formats::triple(z)?),
        None => None,
    };
    let r = arrangement_report(&arr, z0.as_ref())?;
    let doc = ArrangementDoc::from(&r);
    render(cli.format, &doc, report::render_arrangement)
}

/// Output of the `cyclo` subcommands.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct CycloDoc {
    pub factored: String,
    pub expanded: String,
    pub degree: u64,
    pub trace: i64,
}

impl CycloDoc {
    fn new(p: &CycloProduct) -> Self {
        Self {
            factored: p.to_string(),
            expanded: p.expand().to_string(),
            degree: p.degree(),
            trace: p.trace(),
        }
    }
}

fn product_arg(text: &str) -> Result<CycloProduct> {
    text.parse::<CycloProduct>()
        .with_context(|| format!("'{}' is not a product like \"Phi_1^2 * Phi_3\"", text))
}

fn cyclo(format: Format, op: &CycloOp) -> Result<String> {
    let (doc, text) = match op {
        CycloOp::Phi { k } => {
            if *k == 0 {
                bail!("k must be >= 1");
            }
            let doc = CycloDoc::new(&CycloProduct::phi(*k)?);
            let text = cyclotomic(*k)?.to_string();
            (doc, text)
        }
        CycloOp::Unity { d } => {
            let doc = CycloDoc::new(&CycloProduct::factor_unity(*d)?);
            let text = format!("{} ; {}", doc.factored, doc.expanded);
            (doc, text)
        }
        CycloOp::Homchar { n, d } => {
            let doc = CycloDoc::new(&CycloProduct::homogeneous_char(*n, *d)?);
            let text = format!(
                "{} ; degree {} ; trace {}",
                doc.factored, doc.degree, doc.trace
            );
            (doc, text)
        }
        CycloOp::Gcd { a, b } => {
            let doc = CycloDoc::new(&product_arg(a)?.gcd(&product_arg(b)?));
            let text = format!("{} ; {}", doc.factored, doc.expanded);
            (doc, text)
        }
        CycloOp::Expand { a } => {
            let doc = CycloDoc::new(&product_arg(a)?);
            let text = doc.expanded.clone();
            (doc, text)
        }
        CycloOp::Trace { a } => {
            let doc = CycloDoc::new(&product_arg(a)?);
            let text = doc.trace.to_string();
            (doc, text)
        }
    };
    render(format, &doc, |_| format!("{}\n", text))
}
