//! Command-line front end: expression grammar, generator files, reports and
//! command dispatch.
//!
//! [`run`] takes the full argument list (program name first) and returns
//! the exit code with everything that would be printed, so it can be
//! driven from tests as easily as from `main`.

mod expr;
mod input;
mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::act::{ActionContext, DEFAULT_SAMPLES};
use crate::error::{Error, Result};
use crate::fft::{
    decompose_in_generators, fft_verify_with, generators, invariant_subspace_basis,
    minimal_generator_degrees_with, KernelConfig,
};
use crate::grp::{GroupSpec, DEFAULT_MAX_ORDER};
use crate::poly::SpaceSignature;

pub use expr::parse_expression;
pub use input::parse_generator_file;
pub use report::{cert_report, poly_json, Format, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_INCONCLUSIVE: i32 = 2;

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn error(code: i32, err: &Error) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "classinv",
    version,
    about = "Exact invariants of GL(n), O(n) and Sp(n) over the rationals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GroupArg {
    Gl,
    O,
    Sp,
    Finite,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Args)]
struct Setting {
    #[arg(long, value_enum)]
    group: GroupArg,
    /// Dimension of V. Taken from the generator file for finite groups.
    #[arg(long)]
    n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    covectors: usize,
    #[arg(long, default_value_t = 1)]
    vectors: usize,
    /// Generator matrices of a finite group.
    #[arg(long, value_name = "FILE")]
    generators: Option<PathBuf>,
    /// Largest group order accepted when closing the generators.
    #[arg(long, default_value_t = DEFAULT_MAX_ORDER)]
    max_order: usize,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Test an expression for invariance on sampled group elements.
    Check {
        #[command(flatten)]
        setting: Setting,
        #[arg(long)]
        expr: String,
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Basis of the sampled invariant subspace of one degree.
    Basis {
        #[command(flatten)]
        setting: Setting,
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// List the contraction generators.
    Generators {
        #[command(flatten)]
        setting: Setting,
    },
    /// Certify that contraction products span the invariants of one degree.
    FftVerify {
        #[command(flatten)]
        setting: Setting,
        #[arg(long)]
        degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Report wall-clock time instead of 0.
        #[arg(long)]
        timing: bool,
        /// Upper bound on sampled group elements.
        #[arg(long, default_value_t = KernelConfig::default().max_samples)]
        max_samples: usize,
    },
    /// Write an invariant as a polynomial in the contractions.
    Decompose {
        #[command(flatten)]
        setting: Setting,
        #[arg(long)]
        expr: String,
    },
    /// Degrees of a minimal generating set up to a bound.
    Gendeg {
        #[command(flatten)]
        setting: Setting,
        #[arg(long)]
        max_degree: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Upper bound on sampled group elements per degree.
        #[arg(long, default_value_t = KernelConfig::default().max_samples)]
        max_samples: usize,
    },
    /// Reynolds average of an expression over a finite group.
    Reynolds {
        #[command(flatten)]
        setting: Setting,
        #[arg(long)]
        expr: String,
    },
}

impl Setting {
    fn format(&self) -> Format {
        match self.format {
            FormatArg::Text => Format::Text,
            FormatArg::Json => Format::Json,
        }
    }

    fn resolve(&self) -> Result<(GroupSpec, SpaceSignature)> {
        let spec = match self.group {
            GroupArg::Finite => {
                let path = self.generators.as_ref().ok_or_else(|| {
                    Error::MalformedInput("--group finite needs --generators FILE".into())
                })?;
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::MalformedInput(format!("cannot read {}: {e}", path.display()))
                })?;
                let spec = GroupSpec::finite(parse_generator_file(&text)?, self.max_order)?;
                if let Some(n) = self.n {
                    if n != spec.n() {
                        return Err(Error::InvalidSignature(format!(
                            "--n {n} but the generators are {0}x{0}",
                            spec.n()
                        )));
                    }
                }
                spec
            }
            group => {
                if self.generators.is_some() {
                    return Err(Error::MalformedInput(
                        "--generators is only used with --group finite".into(),
                    ));
                }
                let n = self
                    .n
                    .ok_or_else(|| Error::InvalidSignature("--n is required".into()))?;
                match group {
                    GroupArg::Gl => GroupSpec::general(n)?,
                    GroupArg::O => GroupSpec::orthogonal(n)?,
                    _ => GroupSpec::symplectic(n)?,
                }
            }
        };
        let sig = SpaceSignature::new(spec.n(), self.covectors, self.vectors)?;
        Ok((spec, sig))
    }
}

/// Parses `args` (program name first) and executes the command. Exit code
/// 0 means success or a certified degree, 2 an inconclusive certificate and
/// 1 any error, including bad arguments.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_ERROR,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome::ok(EXIT_OK, text)
            };
        }
    };
    match execute(cli.command) {
        Ok(outcome) => outcome,
        Err(e @ Error::Inconclusive { .. }) => Outcome::error(EXIT_INCONCLUSIVE, &e),
        Err(e) => Outcome::error(EXIT_ERROR, &e),
    }
}

fn kernel_config(max_samples: usize) -> Result<KernelConfig> {
    if max_samples == 0 {
        return Err(Error::MalformedInput(
            "--max-samples must be at least 1".into(),
        ));
    }
    let default = KernelConfig::default();
    Ok(KernelConfig {
        min_samples: default.min_samples.min(max_samples),
        max_samples,
        ..default
    })
}

fn execute(command: Command) -> Result<Outcome> {
    match command {
        Command::Check {
            setting,
            expr,
            samples,
            seed,
        } => {
            let (spec, sig) = setting.resolve()?;
            let f = parse_expression(&expr, sig, spec.family())?;
            let ctx = ActionContext::new(spec.clone(), sig)?;
            let invariant = ctx.is_invariant(&f, samples, seed)?;
            let report = Report::for_setting(&spec, sig)
                .poly("expr", &f)
                .value("invariant", invariant)
                .value("samples", samples)
                .value("seed", seed);
            Ok(Outcome::ok(EXIT_OK, report.render(setting.format())))
        }
        Command::Basis {
            setting,
            degree,
            seed,
        } => {
            let (spec, sig) = setting.resolve()?;
            let sub = invariant_subspace_basis(&spec, sig, degree, seed)?;
            let report = Report::for_setting(&spec, sig)
                .value("degree", degree)
                .value("dim_space", sub.dim_space)
                .value("dim_kernel", sub.dim_kernel())
                .value("samples_used", sub.samples_used)
                .value("stabilized", sub.stabilized)
                .value("seed", seed)
                .polys("basis", &sub.basis);
            Ok(Outcome::ok(EXIT_OK, report.render(setting.format())))
        }
        Command::Generators { setting } => {
            let (spec, sig) = setting.resolve()?;
            let gens = generators(&spec, sig)?;
            let mut json_list = Vec::new();
            let mut lines = Vec::new();
            for g in &gens {
                let p = g.polynomial(sig)?;
                json_list.push(json!({ "name": g.to_string(), "polynomial": poly_json(&p) }));
                lines.push(format!("{g} = {p}"));
            }
            let report = Report::for_setting(&spec, sig)
                .value("count", gens.len())
                .custom(
                    "generators",
                    Some(Value::Array(json_list)),
                    Some(lines.join("\n")),
                );
            Ok(Outcome::ok(EXIT_OK, report.render(setting.format())))
        }
        Command::FftVerify {
            setting,
            degree,
            seed,
            timing,
            max_samples,
        } => {
            let (spec, sig) = setting.resolve()?;
            let r = fft_verify_with(&spec, sig, degree, seed, &kernel_config(max_samples)?)?;
            let code = if r.certified {
                EXIT_OK
            } else {
                EXIT_INCONCLUSIVE
            };
            Ok(Outcome::ok(
                code,
                cert_report(&r, timing).render(setting.format()),
            ))
        }
        Command::Decompose { setting, expr } => {
            let (spec, sig) = setting.resolve()?;
            let f = parse_expression(&expr, sig, spec.family())?;
            let e = decompose_in_generators(&spec, sig, &f)?;
            let terms: Vec<Value> = e
                .terms
                .iter()
                .map(|(p, c)| json!({ "product": p.to_string(), "coeff": c.to_string() }))
                .collect();
            let report = Report::for_setting(&spec, sig)
                .value("degree", f.degree().unwrap_or(0))
                .poly("expr", &f)
                .custom("terms", Some(Value::Array(terms)), None)
                .value("expansion", e.to_string());
            Ok(Outcome::ok(EXIT_OK, report.render(setting.format())))
        }
        Command::Gendeg {
            setting,
            max_degree,
            seed,
            max_samples,
        } => {
            let (spec, sig) = setting.resolve()?;
            let config = kernel_config(max_samples)?;
            let r = minimal_generator_degrees_with(&spec, sig, max_degree, seed, &config)?;
            let steps_json: Vec<Value> = r
                .steps
                .iter()
                .map(|s| {
                    json!({
                        "degree": s.degree,
                        "dim_kernel": s.dim_kernel,
                        "dim_products": s.dim_products,
                        "new_generators": s.new_generators,
                    })
                })
                .collect();
            let steps_text: Vec<String> = r
                .steps
                .iter()
                .map(|s| {
                    format!(
                        "d={}  invariants {}  from products {}  new {}",
                        s.degree, s.dim_kernel, s.dim_products, s.new_generators
                    )
                })
                .collect();
            let degrees: Vec<String> = r.degrees.iter().map(u32::to_string).collect();
            let report = Report::for_setting(&spec, sig)
                .value("max_degree", max_degree)
                .custom(
                    "degrees",
                    Some(json!(r.degrees)),
                    Some(format!("{{{}}}", degrees.join(", "))),
                )
                .custom(
                    "steps",
                    Some(Value::Array(steps_json)),
                    Some(steps_text.join("\n")),
                )
                .value("seed", seed)
                .polys("generators", &r.generators);
            Ok(Outcome::ok(EXIT_OK, report.render(setting.format())))
        }
        Command::Reynolds { setting, expr } => {
            let (spec, sig) = setting.resolve()?;
            let order = spec.as_finite().ok_or(Error::NotFinite)?.order();
            let f = parse_expression(&expr, sig, spec.family())?;
            let avg = ActionContext::new(spec.clone(), sig)?.reynolds(&f)?;
            let report = Report::for_setting(&spec, sig)
                .value("order", order)
                .poly("expr", &f)
                .poly("reynolds", &avg);
            Ok(Outcome::ok(EXIT_OK, report.render(setting.format())))
        }
    }
}
