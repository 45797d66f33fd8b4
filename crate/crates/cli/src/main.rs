//! Command-line front end for the odd-sum coloring toolkit.
//!
//! Exit codes: 0 on success (or a valid coloring), 1 on invalid input or a
//! failed verification claim, 2 when a configured resource limit stops the
//! computation (enumeration cap, search node budget, brute-force size guard).

mod report;
mod verify;

use std::fmt;
use std::fs;
use std::io::{self, Read as _, Write as _};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use oddsum::codec::{self, CodecError};
use oddsum::coloring::{self, ColoringError, DEFAULT_NODE_BUDGET};
use oddsum::families::{self, FamilyError};
use oddsum::graph::{complete_graph, Graph, GraphError, DEFAULT_SEED};
use oddsum::odd_domination::{self, enumeration_cap_from_env, OdsError};
use oddsum::odd_sum::{self, OddSumError};
use oddsum::surfaces::{self, SurfaceError};

/// Exact solvers and constructions for odd-sum colorings of graphs.
#[derive(Parser)]
#[command(name = "oddsum", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named graph family and print it in the chosen format.
    Construct(ConstructArgs),
    /// Run the exact solvers on a graph read from stdin or a file.
    Solve(SolveArgs),
    /// Run the definition-level brute-force references (small graphs only).
    Oracle(OracleArgs),
    /// Check a coloring file against the odd-sum definition.
    Validate(ValidateArgs),
    /// Surface formulas: Heawood numbers, the odd-sum lower bound, gap tables.
    Surfaces(SurfacesArgs),
    /// Re-check a named claim and print a pass/fail report.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Family name: gabk, J, Jodd, bipartite, thm4, Gt, bowtie, extbowtie,
    /// or product-k2kn.
    family: String,
    /// Count of length-(3k+1) paths (gabk).
    #[arg(long)]
    a: Option<usize>,
    /// Count of length-(3k+2) paths (gabk).
    #[arg(long)]
    b: Option<usize>,
    /// Segment-length parameter (gabk; copy count for J and Jodd).
    #[arg(long)]
    k: Option<usize>,
    /// Target maximum degree (J, Jodd, bipartite).
    #[arg(long)]
    delta: Option<usize>,
    /// Girth target (bipartite).
    #[arg(long)]
    girth: Option<usize>,
    /// Number of attached bowties (Gt).
    #[arg(long)]
    t: Option<usize>,
    /// Optional degree budget for bowtie attachment sites (Gt).
    #[arg(long)]
    max_degree: Option<usize>,
    /// Clique size n in the product of K2 with Kn (product-k2kn).
    #[arg(long)]
    n: Option<usize>,
    /// Output format: graph6, json, or dot.
    #[arg(long, default_value = "graph6")]
    format: String,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    /// What to solve: ods (count odd-dominating sets), chi (chromatic
    /// number), or chios (odd-sum chromatic number).
    target: String,
    /// Read the graph from this file instead of stdin (graph6 or JSON,
    /// detected from the first byte).
    #[arg(long)]
    input: Option<PathBuf>,
    /// Print the bare solution count (ods only; this is also the default).
    #[arg(long)]
    count: bool,
    /// Print a JSON certificate instead of the bare number.
    #[arg(long)]
    certificate: bool,
    /// Cap on the 2^nullity candidate sets enumerated by chios; overrides
    /// the ODDSUM_CAP environment variable.
    #[arg(long)]
    cap: Option<u64>,
    /// Node budget for the branch-and-bound chromatic searches.
    #[arg(long)]
    node_budget: Option<u64>,
}

#[derive(Args)]
struct OracleArgs {
    /// What to compute: ods, chi, or chios.
    target: String,
    /// Read the graph from this file instead of stdin.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Graph file (graph6 or JSON); stdin if omitted.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Coloring file: JSON with a "colors" map from vertex to color.
    /// Certificates from `solve chios --certificate` are accepted as-is.
    #[arg(long)]
    coloring: PathBuf,
}

#[derive(Args)]
struct SurfacesArgs {
    #[command(subcommand)]
    command: SurfacesCommand,
}

#[derive(Subcommand)]
enum SurfacesCommand {
    /// Heawood number of the genus-g surface.
    Heawood {
        /// Surface genus.
        #[arg(long)]
        g: u64,
    },
    /// Odd-sum chromatic lower bound -3 + sqrt(24g - 67) with its witness.
    Bound {
        /// Surface genus (at least 3).
        #[arg(long)]
        g: u64,
        /// Emit JSON instead of text.
        #[arg(long)]
        json: bool,
    },
    /// Gap between the lower bound and the Heawood number at g = 30, 60,
    /// 120, ... (doubling), as CSV.
    Table {
        /// Largest genus sampled.
        #[arg(long, default_value_t = 240)]
        g_max: u64,
        /// Emit JSON rows instead of CSV.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Claim id: propA, lemma2, thm1, thm3, obs5, thm4, lemma6, thm7,
    /// thm8, or k2kn.
    id: String,
    /// Seed for the randomized checks.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Number of random graphs in sampled checks.
    #[arg(long)]
    samples: Option<usize>,
    /// Largest vertex count in sampled checks.
    #[arg(long)]
    max_n: Option<usize>,
    /// Target maximum degree (thm1, thm3).
    #[arg(long)]
    delta: Option<usize>,
    /// Copy-count parameter (thm1).
    #[arg(long)]
    k: Option<usize>,
    /// Girth target (thm3).
    #[arg(long)]
    girth: Option<usize>,
    /// Surface genus (thm8).
    #[arg(long)]
    g: Option<u64>,
    /// Largest bowtie count checked (thm7).
    #[arg(long)]
    t_max: Option<usize>,
    /// Include the slower optional cases (k2kn adds n = 7).
    #[arg(long)]
    long: bool,
    /// Emit the report as JSON.
    #[arg(long)]
    json: bool,
}

/// Top-level failure, carrying the process exit code.
#[derive(Debug)]
enum CliError {
    /// Bad arguments, malformed input, or an invalid coloring: exit 1.
    Invalid(String),
    /// One or more verification claims failed: exit 1.
    ClaimsFailed(usize),
    /// A configured resource limit stopped the computation: exit 2.
    Resource(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) | CliError::ClaimsFailed(_) => 1,
            CliError::Resource(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Invalid(msg) | CliError::Resource(msg) => f.write_str(msg),
            CliError::ClaimsFailed(n) => {
                write!(f, "{n} claim{} failed", if *n == 1 { "" } else { "s" })
            }
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Invalid(format!("io: {e}"))
    }
}

impl From<CodecError> for CliError {
    fn from(e: CodecError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<GraphError> for CliError {
    fn from(e: GraphError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<FamilyError> for CliError {
    fn from(e: FamilyError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<SurfaceError> for CliError {
    fn from(e: SurfaceError) -> Self {
        CliError::Invalid(e.to_string())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        CliError::Invalid(format!("json: {e}"))
    }
}

impl From<OdsError> for CliError {
    fn from(e: OdsError) -> Self {
        // Both variants report a size limit, not bad input.
        CliError::Resource(e.to_string())
    }
}

impl From<ColoringError> for CliError {
    fn from(e: ColoringError) -> Self {
        CliError::Resource(e.to_string())
    }
}

impl From<OddSumError> for CliError {
    fn from(e: OddSumError) -> Self {
        match e {
            OddSumError::Ods(inner) => inner.into(),
            OddSumError::Coloring(inner) => inner.into(),
            limit @ OddSumError::OracleTooLarge { .. } => CliError::Resource(limit.to_string()),
            invalid => CliError::Invalid(invalid.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Solve(args) => cmd_solve(args),
        Command::Oracle(args) => cmd_oracle(args),
        Command::Validate(args) => cmd_validate(args),
        Command::Surfaces(args) => cmd_surfaces(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

// ----- construct --------------------------------------------------------------

fn build_family(args: &ConstructArgs) -> Result<Graph, CliError> {
    fn need(value: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
        value.ok_or_else(|| CliError::Invalid(format!("family '{family}' requires {flag}")))
    }
    let family = args.family.as_str();
    let g = match family {
        "gabk" => families::build_generalized_theta(
            need(args.a, "--a", family)?,
            need(args.b, "--b", family)?,
            need(args.k, "--k", family)?,
        )?,
        "J" => families::build_even_delta_family(
            need(args.delta, "--delta", family)?,
            args.k.unwrap_or(1),
        )?,
        "Jodd" => families::build_odd_delta_family(
            need(args.delta, "--delta", family)?,
            args.k.unwrap_or(1),
        )?,
        "bipartite" => families::build_bipartite_family(
            need(args.delta, "--delta", family)?,
            args.girth.unwrap_or(6),
        )?,
        "thm4" => families::build_tight_example(),
        "Gt" => families::build_tight_example_with_budget(
            need(args.t, "--t", family)?,
            args.max_degree,
        ),
        "bowtie" => families::bowtie(),
        "extbowtie" => families::extended_bowtie(),
        "product-k2kn" => {
            let n = need(args.n, "--n", family)?;
            if n == 0 {
                return Err(CliError::Invalid("--n must be at least 1".into()));
            }
            families::cartesian_product(&complete_graph(2), &complete_graph(n))
        }
        other => {
            return Err(CliError::Invalid(format!(
                "unknown family '{other}' (expected gabk, J, Jodd, bipartite, thm4, Gt, \
                 bowtie, extbowtie, or product-k2kn)"
            )))
        }
    };
    Ok(g)
}

fn render_graph(g: &Graph, format: &str) -> Result<String, CliError> {
    match format {
        "graph6" => Ok(codec::to_graph6(g)),
        "json" => Ok(codec::to_json(g)),
        "dot" => Ok(codec::to_dot(g)),
        other => Err(CliError::Invalid(format!(
            "unknown format '{other}' (expected graph6, json, or dot)"
        ))),
    }
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    let mut body = String::from(text);
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match path {
        Some(p) => fs::write(p, body)?,
        None => io::stdout().write_all(body.as_bytes())?,
    }
    Ok(())
}

fn cmd_construct(args: ConstructArgs) -> Result<(), CliError> {
    let g = build_family(&args)?;
    let text = render_graph(&g, &args.format)?;
    emit(args.output.as_deref(), &text)
}

// ----- graph input -------------------------------------------------------------

fn read_graph(input: Option<&Path>) -> Result<Graph, CliError> {
    let text = match input {
        Some(p) => fs::read_to_string(p)?,
        None => {
            let mut buf = String::new();
            io::stdin().read_to_string(&mut buf)?;
            buf
        }
    };
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(CliError::Invalid(
            "empty graph input; pass graph6 or JSON on stdin or via --input".into(),
        ));
    }
    let g = if trimmed.starts_with('{') {
        codec::from_json(trimmed)?
    } else {
        codec::from_graph6(trimmed)?
    };
    Ok(g)
}

// ----- solve -------------------------------------------------------------------

fn cmd_solve(args: SolveArgs) -> Result<(), CliError> {
    if args.count && args.target != "ods" {
        return Err(CliError::Invalid("--count applies to 'solve ods' only".into()));
    }
    let g = read_graph(args.input.as_deref())?;
    let cap = args.cap.unwrap_or_else(enumeration_cap_from_env);
    let node_budget = args.node_budget.unwrap_or(DEFAULT_NODE_BUDGET);
    match args.target.as_str() {
        "ods" => {
            let system = odd_domination::solve_odd_domination(&g);
            if args.certificate {
                let payload = serde_json::json!({
                    "count": system.count().to_string(),
                    "nullity": system.nullity(),
                    "witness": system.particular().to_indices(),
                });
                println!("{payload}");
            } else {
                println!("{}", system.count());
            }
        }
        "chi" => {
            let coloring = coloring::chromatic_number_with_budget(&g, node_budget)?;
            if args.certificate {
                println!("{}", codec::coloring_to_json(coloring.colors()));
            } else {
                println!("{}", coloring.k());
            }
        }
        "chios" => {
            let cert = odd_sum::odd_sum_chromatic_capped(&g, cap, node_budget)?;
            if args.certificate {
                println!("{}", cert.to_json());
            } else {
                println!("{}", cert.chios());
            }
        }
        other => {
            return Err(CliError::Invalid(format!(
                "unknown solve target '{other}' (expected ods, chi, or chios)"
            )))
        }
    }
    Ok(())
}

// ----- oracle ------------------------------------------------------------------

fn cmd_oracle(args: OracleArgs) -> Result<(), CliError> {
    let g = read_graph(args.input.as_deref())?;
    match args.target.as_str() {
        "ods" => println!("{}", odd_domination::brute_force_odd_dominating_sets(&g)?.len()),
        "chi" => println!("{}", coloring::brute_force_chromatic(&g)?),
        "chios" => println!("{}", odd_sum::oracle_odd_sum_chromatic(&g)?),
        other => {
            return Err(CliError::Invalid(format!(
                "unknown oracle target '{other}' (expected ods, chi, or chios)"
            )))
        }
    }
    Ok(())
}

// ----- validate ----------------------------------------------------------------

fn cmd_validate(args: ValidateArgs) -> Result<(), CliError> {
    let g = read_graph(args.graph.as_deref())?;
    let text = fs::read_to_string(&args.coloring)?;
    let colors = codec::coloring_from_json(&text)?;
    if colors.len() != g.n() {
        return Err(CliError::Invalid(format!(
            "coloring assigns {} vertices but the graph has {}",
            colors.len(),
            g.n()
        )));
    }
    let check = odd_sum::validate_odd_sum_coloring(&g, &colors);
    if check.is_valid() {
        let distinct: std::collections::BTreeSet<_> = colors.iter().collect();
        println!("valid odd-sum coloring using {} distinct colors", distinct.len());
        return Ok(());
    }
    for v in &check.bad_color_vertices {
        println!("color violation: vertex {v} has a nonpositive color");
    }
    for (u, v) in &check.properness_violations {
        println!("properness violation: edge ({u}, {v}) endpoints share a color");
    }
    for v in &check.parity_violations {
        println!("parity violation: closed neighborhood of vertex {v} sums to an even number");
    }
    let total = check.bad_color_vertices.len()
        + check.properness_violations.len()
        + check.parity_violations.len();
    Err(CliError::Invalid(format!("{total} violation{}", if total == 1 { "" } else { "s" })))
}

// ----- surfaces ----------------------------------------------------------------

fn cmd_surfaces(args: SurfacesArgs) -> Result<(), CliError> {
    match args.command {
        SurfacesCommand::Heawood { g } => println!("{}", surfaces::heawood_number(g)),
        SurfacesCommand::Bound { g, json } => {
            let bound = surfaces::chios_surface_lower_bound(g)?;
            if json {
                println!("{}", serde_json::to_string(&surfaces::surface_figures(g))?);
            } else {
                println!(
                    "{:.6} (largest embeddable product witness: n = {})",
                    bound.bound, bound.witness_n
                );
            }
        }
        SurfacesCommand::Table { g_max, json } => {
            let rows = surfaces::gap_divergence_table(g_max)?;
            if json {
                println!("{}", serde_json::to_string(&rows)?);
            } else {
                print!("{}", surfaces::gap_table_csv(&rows));
            }
        }
    }
    Ok(())
}

// ----- verify ------------------------------------------------------------------

fn cmd_verify(args: VerifyArgs) -> Result<(), CliError> {
    let report = verify::run(&args)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        print!("{}", report.render());
    }
    match report.failed() {
        0 => Ok(()),
        n => Err(CliError::ClaimsFailed(n)),
    }
}
