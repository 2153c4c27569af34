//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on operational errors (bad input, size
//! guards), 2 when `verify` finds a disagreement between routes or a failed
//! check.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::chromatic::Method;
use crate::error::{Error, Result};
use crate::graph::{generate_graph, parse_graph, Family, Graph};
use crate::lattice::BondLattice;
use crate::limits::{Limits, MAX_LATTICE_ENV};
use crate::report::{lattice_json, mult_json, verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DISAGREEMENT: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "chromakac", version, about = "Chromatic polynomials via bond lattices and root multiplicities")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute one polynomial by a chosen route.
    Compute {
        #[command(flatten)]
        opts: CommonOpts,
        #[arg(long, default_value = "bond-lattice")]
        method: Method,
    },
    /// Run every route and every consistency check.
    Verify {
        #[command(flatten)]
        opts: CommonOpts,
        /// Include wall-clock timings in JSON output.
        #[arg(long)]
        timings: bool,
    },
    /// Dump the bond lattice as JSON.
    Lattice {
        #[command(flatten)]
        opts: CommonOpts,
    },
    /// Dump the root multiplicity table as JSON.
    Mult {
        #[command(flatten)]
        opts: CommonOpts,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
}

#[derive(Debug, Args)]
pub struct CommonOpts {
    /// Edge-list file ("-" for standard input).
    #[arg(long, conflicts_with = "gen")]
    pub file: Option<PathBuf>,
    /// Generated graph: <family>:<n>[:p=<p>][:seed=<s>].
    #[arg(long)]
    pub gen: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
    #[arg(long, env = MAX_LATTICE_ENV)]
    pub max_lattice: Option<usize>,
    #[arg(long)]
    pub max_vertices: Option<usize>,
}

impl CommonOpts {
    pub fn limits(&self) -> Limits {
        let mut limits = Limits::default();
        if let Some(n) = self.max_lattice {
            limits.max_lattice = n;
        }
        if let Some(n) = self.max_vertices {
            limits.max_vertices = n;
        }
        limits
    }

    pub fn graph(&self) -> Result<Graph> {
        match (&self.file, &self.gen) {
            (Some(path), None) => {
                let text = if path.as_os_str() == "-" {
                    let mut buf = String::new();
                    std::io::stdin().read_to_string(&mut buf)?;
                    buf
                } else {
                    std::fs::read_to_string(path)?
                };
                parse_graph(&text)
            }
            (None, Some(spec)) => parse_gen_spec(spec),
            _ => Err(Error::InvalidParameter("give exactly one of --file or --gen".into())),
        }
    }
}

/// Parses `<family>:<n>[:p=<p>][:seed=<s>]`.
pub fn parse_gen_spec(spec: &str) -> Result<Graph> {
    let mut parts = spec.split(':');
    let family: Family = parts.next().unwrap_or_default().parse()?;
    let n: usize = parts
        .next()
        .ok_or_else(|| Error::InvalidParameter(format!("{spec:?} is missing the size")))?
        .parse()
        .map_err(|_| Error::InvalidParameter(format!("{spec:?} has an invalid size")))?;
    let (mut p, mut seed) = (None, None);
    for part in parts {
        let bad = || Error::InvalidParameter(format!("invalid option {part:?} in {spec:?}"));
        match part.split_once('=') {
            Some(("p", v)) => p = Some(v.parse::<f64>().map_err(|_| bad())?),
            Some(("seed", v)) => seed = Some(v.parse::<u64>().map_err(|_| bad())?),
            _ => return Err(bad()),
        }
    }
    generate_graph(family, n, seed, p)
}

/// Runs a parsed command, writing results to `out` and diagnostics to `err`.
/// Returns the process exit code.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match dispatch(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn dispatch(cli: &Cli, out: &mut dyn Write) -> Result<i32> {
    match &cli.command {
        Command::Compute { opts, method } => {
            let g = opts.graph()?;
            let p = method.run(&g, &opts.limits())?;
            match opts.format {
                Format::Human => writeln!(out, "{p}")?,
                Format::Json => writeln!(out, "{}", to_json(&p)?)?,
            }
            Ok(EXIT_OK)
        }
        Command::Verify { opts, timings } => {
            let g = opts.graph()?;
            let report = verify(&g, &opts.limits())?;
            let code = if report.passed { EXIT_OK } else { EXIT_DISAGREEMENT };
            match opts.format {
                Format::Human => write!(out, "{}", report.render_human())?,
                Format::Json => {
                    let report = if *timings { report } else { report.without_timings() };
                    writeln!(out, "{}", to_json(&report)?)?
                }
            }
            Ok(code)
        }
        Command::Lattice { opts } => {
            let g = opts.graph()?;
            let lat = BondLattice::enumerate(&g, &opts.limits())?;
            writeln!(out, "{}", to_json(&lattice_json(&lat))?)?;
            Ok(EXIT_OK)
        }
        Command::Mult { opts } => {
            let g = opts.graph()?;
            // Connected subsets are as numerous as lattice-scale objects.
            Limits::check("vertices", g.order() as u128, opts.limits().max_vertices as u128)?;
            writeln!(out, "{}", to_json(&mult_json(&g))?)?;
            Ok(EXIT_OK)
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value).map_err(|e| Error::Invariant(format!("JSON encoding failed: {e}")))
}
