//! `vvjack`: command-line front end for exact vector-valued Jack polynomials.
//!
//! Shapes and weights are comma lists; tableaux and fillings list their rows
//! longest first, rows separated by `;` and entries by `,` (so `3,1;2` is the
//! tableau with rows `3 1` and `2`). Exit status is 0 on success, 2 on a
//! parse or validation error and 1 on a domain error.

mod render;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use num_rational::BigRational;
use serde_json::json;
use thiserror::Error;

use vvjack_core::coeffield::{parse_rational, FieldError};
use vvjack_core::combinatorics::{
    enumerate_rst, parse_filling, parse_shape, parse_tableau, parse_weight, CombinatoricsError,
    Filling, Partition, Rst, Weight,
};
use vvjack_core::jack::{
    antisymmetric_jack, minimal_antisymmetric, minimal_symmetric, nonsymmetric_jack, norm_ratio,
    norm_squared, propagate_vanishings, restrict_jack, shifted_antisymmetric_jack, shifted_jack,
    shifted_symmetric_jack, symmetric_jack, vanishes_at, vanishing_vector,
    CoefficientKind, JackError,
};
use vvjack_core::vvpoly::{pairing, PolyError};
use vvjack_core::ybgraph::{component, GraphError};

use render::{Doc, Format, Renderer};

/// Errors surfaced to the user, split by exit status.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or inconsistent input; exit status 2.
    #[error("invalid input: {0}")]
    Usage(String),
    /// A well-formed request the mathematics rejects; exit status 1.
    #[error("{0}")]
    Domain(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Domain(_) => 1,
        }
    }
}

impl From<CombinatoricsError> for CliError {
    fn from(e: CombinatoricsError) -> Self {
        match e {
            CombinatoricsError::PropertyRViolation(_) => CliError::Domain(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        match e {
            FieldError::Parse(_) => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        match e {
            GraphError::Combinatorics(c) => c.into(),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<PolyError> for CliError {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::ShapeMismatch(..) | PolyError::BadExponent { .. } => CliError::Usage(e.to_string()),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

impl From<JackError> for CliError {
    fn from(e: JackError) -> Self {
        match e {
            JackError::LengthMismatch { .. } => CliError::Usage(e.to_string()),
            JackError::Combinatorics(c) => c.into(),
            JackError::Field(f) => f.into(),
            JackError::Graph(g) => g.into(),
            JackError::Poly(p) => p.into(),
            _ => CliError::Domain(e.to_string()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "vvjack", version, about = "Exact vector-valued Jack polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Evaluate every coefficient at this rational value of alpha.
    #[arg(long, global = true, allow_hyphen_values = true)]
    alpha: Option<String>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the reverse standard tableaux of a shape in canonical order.
    RstList {
        #[arg(long)]
        shape: String,
    },
    /// Yang–Baxter graph queries.
    #[command(subcommand)]
    Graph(GraphCommand),
    /// The nonsymmetric Jack polynomial J_{v,τ}.
    Jack(JackArgs),
    /// The shifted (inhomogeneous) Jack polynomial.
    Shifted(JackArgs),
    /// The squared norm of J_{v,τ}, or its ratio to ||τ||².
    Norm {
        #[command(flatten)]
        jack: JackArgs,
        /// Print ||J||²/||τ||² instead of ||J||².
        #[arg(long)]
        ratio: bool,
    },
    /// The symmetric Jack polynomial of a column-strict filling.
    Sym(SymArgs),
    /// The antisymmetric Jack polynomial of a row-strict filling.
    Antisym(SymArgs),
    /// The minimal-degree symmetric or antisymmetric polynomial of a shape,
    /// normalized by its sink coefficient.
    Minimal {
        #[arg(long)]
        shape: String,
        /// Antisymmetric instead of symmetric.
        #[arg(long)]
        anti: bool,
    },
    /// Restrict J_{v,τ} to the first M variables.
    Restrict {
        #[command(flatten)]
        jack: JackArgs,
        #[arg(long = "m", short = 'm')]
        m: usize,
    },
    /// The vanishing vector of the shifted Jack and the propagated zeros.
    Vanish(JackArgs),
    /// The contravariant pairing of two Jack polynomials of the same shape.
    Pair {
        #[command(flatten)]
        jack: JackArgs,
        /// Tableau of the second polynomial.
        #[arg(long)]
        tableau2: String,
        /// Weight of the second polynomial.
        #[arg(long)]
        weight2: String,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_enum, default_value_t = verify::Suite::All)]
        suite: verify::Suite,
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        #[arg(long, default_value_t = 3)]
        max_deg: u32,
        /// Seed for the randomized suites.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Debug, Subcommand)]
enum GraphCommand {
    /// The component H_T of a filling: vertices and edges.
    Component {
        #[arg(long)]
        shape: Option<String>,
        #[arg(long)]
        filling: String,
        /// Emit Graphviz DOT instead of JSON.
        #[arg(long)]
        dot: bool,
    },
}

#[derive(Debug, Args)]
struct JackArgs {
    /// Shape; optional, checked against the tableau when given.
    #[arg(long)]
    shape: Option<String>,
    #[arg(long)]
    tableau: String,
    #[arg(long)]
    weight: String,
}

#[derive(Debug, Args)]
struct SymArgs {
    #[arg(long)]
    shape: Option<String>,
    #[arg(long)]
    filling: String,
    /// Use shifted Jack polynomials.
    #[arg(long)]
    shifted: bool,
}

fn check_shape(shape: &Option<String>, actual: &Partition) -> Result<(), CliError> {
    if let Some(s) = shape {
        let want = parse_shape(s)?;
        if &want != actual {
            return Err(CliError::Usage(format!("shape {want} does not match the given {actual}")));
        }
    }
    Ok(())
}

fn parse_index(args: &JackArgs) -> Result<(Rst, Weight), CliError> {
    let tau = parse_tableau(&args.tableau)?;
    check_shape(&args.shape, tau.shape())?;
    let v = parse_weight(&args.weight)?;
    if v.len() != tau.size() {
        return Err(CliError::Usage(format!(
            "weight has length {}, tableau has {} entries",
            v.len(),
            tau.size()
        )));
    }
    Ok((tau, v))
}

fn parse_sym(args: &SymArgs) -> Result<Filling, CliError> {
    let t = parse_filling(&args.filling)?;
    check_shape(&args.shape, t.shape())?;
    if !t.is_semistandard_shape() {
        return Err(CliError::Usage(format!("{t} is not weakly increasing along rows and columns")));
    }
    Ok(t)
}

fn configure_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var("VVJACK_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| CliError::Usage(format!("VVJACK_THREADS must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Domain(e.to_string()))
}

fn run(cli: Cli, out: &mut impl Write) -> Result<(), CliError> {
    configure_threads()?;
    let alpha: Option<BigRational> = cli.alpha.as_deref().map(parse_rational).transpose()?;
    let r = Renderer::new(cli.format, alpha);
    let doc = match cli.command {
        Command::RstList { shape } => {
            let shape = parse_shape(&shape)?;
            let tabs: Vec<String> = enumerate_rst(&shape).iter().map(|t| t.to_text()).collect();
            Doc {
                text: tabs.join("\n"),
                json: json!({ "shape": shape.parts(), "count": tabs.len(), "tableaux": tabs }),
            }
        }
        Command::Graph(GraphCommand::Component { shape, filling, dot }) => {
            let t = parse_filling(&filling)?;
            check_shape(&shape, t.shape())?;
            let comp = component(&t)?;
            if dot {
                write!(out, "{}", comp.to_dot()).map_err(|e| CliError::Domain(e.to_string()))?;
                return Ok(());
            }
            r.component(&comp)?
        }
        Command::Jack(args) => {
            let (tau, v) = parse_index(&args)?;
            r.jack(&*nonsymmetric_jack(&v, &tau)?, &v, &tau)?
        }
        Command::Shifted(args) => {
            let (tau, v) = parse_index(&args)?;
            r.jack(&*shifted_jack(&v, &tau)?, &v, &tau)?
        }
        Command::Norm { jack, ratio } => {
            let (tau, v) = parse_index(&jack)?;
            let (key, value) = if ratio {
                ("norm_ratio", norm_ratio(&v, &tau)?)
            } else {
                ("norm_squared", norm_squared(&v, &tau)?)
            };
            let mut json = json!({ "metadata": r.metadata(&v, &tau)? });
            json[key] = r.scalar(&value)?;
            Doc { json, text: r.scalar_text(&value)? }
        }
        Command::Sym(args) => {
            let t = parse_sym(&args)?;
            let p = if args.shifted { shifted_symmetric_jack(&t)? } else { symmetric_jack(&t)? };
            r.symmetrized(&p, &t, CoefficientKind::E, false)?
        }
        Command::Antisym(args) => {
            let t = parse_sym(&args)?;
            let p = if args.shifted { shifted_antisymmetric_jack(&t)? } else { antisymmetric_jack(&t)? };
            r.symmetrized(&p, &t, CoefficientKind::F, false)?
        }
        Command::Minimal { shape, anti } => {
            let shape = parse_shape(&shape)?;
            let (kind, (t, _)) = if anti {
                (CoefficientKind::F, minimal_antisymmetric(&shape))
            } else {
                (CoefficientKind::E, minimal_symmetric(&shape))
            };
            let p = if anti { antisymmetric_jack(&t)? } else { symmetric_jack(&t)? };
            r.symmetrized(&p, &t, kind, true)?
        }
        Command::Restrict { jack, m } => {
            let (tau, v) = parse_index(&jack)?;
            if m == 0 || m > tau.size() {
                return Err(CliError::Usage(format!("M must lie in 1..={}, got {m}", tau.size())));
            }
            let p = restrict_jack(&v, &tau, m)?;
            r.jack(&p, &v[..m], &tau.restrict(m)?)?
        }
        Command::Vanish(args) => {
            let (tau, v) = parse_index(&args)?;
            let j = shifted_jack(&v, &tau)?;
            let vector = if v.iter().any(|&e| e > 0) { Some(vanishing_vector(&v, &tau)?) } else { None };
            let mut points: Vec<_> = vector.iter().map(|vv| vv.pattern()).collect();
            for p in propagate_vanishings(&v, &tau)? {
                if !points.contains(&p) {
                    points.push(p);
                }
            }
            let checked: Vec<bool> = points.iter().map(|p| vanishes_at(&j, p)).collect();
            r.vanishing(&v, &tau, vector.as_ref(), &points, &checked)?
        }
        Command::Pair { jack, tableau2, weight2 } => {
            let (tau, v) = parse_index(&jack)?;
            let (rho, w) = parse_index(&JackArgs { shape: None, tableau: tableau2, weight: weight2 })?;
            if tau.shape() != rho.shape() {
                return Err(CliError::Usage(format!(
                    "tableaux have different shapes {} and {}",
                    tau.shape(),
                    rho.shape()
                )));
            }
            let p = pairing(&*nonsymmetric_jack(&v, &tau)?, &*nonsymmetric_jack(&w, &rho)?)?;
            Doc {
                json: json!({
                    "first": r.metadata(&v, &tau)?,
                    "second": r.metadata(&w, &rho)?,
                    "pairing": r.scalar(&p)?,
                }),
                text: r.scalar_text(&p)?,
            }
        }
        Command::Verify { suite, max_n, max_deg, seed } => {
            if max_n == 0 {
                return Err(CliError::Usage("--max-n must be at least 1".into()));
            }
            let report = verify::run(suite, max_n, max_deg, seed);
            let lines: Vec<String> = report.iter().map(|s| s.to_text()).collect();
            let doc = Doc {
                json: serde_json::to_value(&report).map_err(|e| CliError::Domain(e.to_string()))?,
                text: lines.join("\n"),
            };
            r.emit(out, &doc)?;
            if let Some(first) = report.iter().find_map(|s| s.first_failure.clone()) {
                return Err(CliError::Domain(format!("verification failed: {first}")));
            }
            return Ok(());
        }
    };
    r.emit(out, &doc)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    match run(cli, &mut out) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let _ = out.flush();
            eprintln!("vvjack: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
