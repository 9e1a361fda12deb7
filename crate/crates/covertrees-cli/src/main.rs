//! `covertrees`: count spanning trees exactly, in graphs and in their
//! (Z/2Z)^m covers, and verify the identities tying the counts together.

mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use covertrees::covers::parse_group_element;
use covertrees::identities::{self, CUBE_DIRECT_LEG_MAX};
use covertrees::spanning::{self, TreeCount};
use covertrees::{Character, Multigraph, VerificationReport, VoltageGraph};

use output::{print_report, write_json_artifact};

/// Vertex budget for any graph a run materializes, derived covers
/// included. Overridden by the COVERTREES_MAX_VERTICES env var.
const DEFAULT_MAX_VERTICES: usize = 4096;

#[derive(Parser)]
#[command(
    name = "covertrees",
    version,
    about = "Exact spanning-tree counts for multigraphs and their (Z/2Z)^m covers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count the spanning trees of a graph
    Kappa(KappaArgs),
    /// Verify the n-cube tree count along every route
    CubeVerify(CubeVerifyArgs),
    /// Classify the intermediate double covers of the cube tower
    Census(CensusArgs),
    /// Check the cover-product identity on a voltage-graph file
    Eq1Verify(Eq1VerifyArgs),
    /// Evaluate the twisted determinant of one character
    Lvalue(LvalueArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    /// Two vertices, n parallel edges
    Theta,
    /// Four vertices, a straight and b crossed parallel edges
    B,
    /// The n-dimensional cube
    Hypercube,
}

#[derive(Args)]
struct EmitArgs {
    /// Also write the JSON report to this path (`-` for stdout)
    #[arg(long, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Omit the generated_at timestamp so identical runs are byte-identical
    #[arg(long)]
    deterministic: bool,
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("source").required(true)))]
struct KappaArgs {
    /// Built-in graph family
    #[arg(long, value_enum, group = "source")]
    family: Option<Family>,
    /// Edge-list file (instead of a family)
    #[arg(long, group = "source", value_name = "PATH")]
    file: Option<PathBuf>,
    /// n for the theta and hypercube families
    #[arg(long)]
    n: Option<u64>,
    /// a for the b family
    #[arg(long)]
    a: Option<u64>,
    /// b for the b family
    #[arg(long)]
    b: Option<u64>,
    #[command(flatten)]
    emit: EmitArgs,
}

#[derive(Args)]
struct CubeVerifyArgs {
    /// Cube dimension
    #[arg(long)]
    n: u32,
    /// Skip the direct Matrix-Tree leg (required beyond n = 8)
    #[arg(long)]
    skip_direct: bool,
    #[command(flatten)]
    emit: EmitArgs,
}

#[derive(Args)]
struct CensusArgs {
    /// Cube dimension (at least 2)
    #[arg(long)]
    n: u32,
    #[command(flatten)]
    emit: EmitArgs,
}

#[derive(Args)]
struct Eq1VerifyArgs {
    /// Voltage-graph file
    #[arg(long, value_name = "PATH")]
    file: PathBuf,
    #[command(flatten)]
    emit: EmitArgs,
}

#[derive(Args)]
struct LvalueArgs {
    /// Voltage-graph file
    #[arg(long, value_name = "PATH")]
    file: PathBuf,
    /// Character mask as a rank-length binary string (leftmost = basis 0)
    #[arg(long)]
    chi: String,
    #[command(flatten)]
    emit: EmitArgs,
}

fn main() -> ExitCode {
    // Die quietly when the output pipe closes (`covertrees census | head`),
    // like any other line-oriented tool.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }

    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

/// 0 when every check in the report passed, 1 otherwise.
fn report_exit_code(report: &VerificationReport) -> ExitCode {
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    let cap = max_vertices()?;
    match command {
        Command::Kappa(args) => cmd_kappa(args, cap),
        Command::CubeVerify(args) => cmd_cube_verify(args, cap),
        Command::Census(args) => cmd_census(args),
        Command::Eq1Verify(args) => cmd_eq1_verify(args, cap),
        Command::Lvalue(args) => cmd_lvalue(args, cap),
    }
}

fn max_vertices() -> Result<usize, String> {
    match std::env::var("COVERTREES_MAX_VERTICES") {
        Ok(raw) => raw.trim().parse::<usize>().map_err(|_| {
            format!("COVERTREES_MAX_VERTICES must be a positive integer, got `{raw}`")
        }),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_VERTICES),
        Err(e) => Err(format!("COVERTREES_MAX_VERTICES: {e}")),
    }
}

fn check_vertex_budget(what: &str, vertices: usize, cap: usize) -> Result<(), String> {
    if vertices > cap {
        return Err(format!(
            "{what} has {vertices} vertices, above the COVERTREES_MAX_VERTICES cap of {cap}"
        ));
    }
    Ok(())
}

fn read_file(path: &PathBuf) -> Result<String, String> {
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn require_param(value: Option<u64>, name: &str, family: &str) -> Result<u64, String> {
    value.ok_or_else(|| format!("--{name} is required for the {family} family"))
}

fn cmd_kappa(args: KappaArgs, cap: usize) -> Result<ExitCode, String> {
    let mut report = VerificationReport::new("kappa");
    let graph = match (&args.family, &args.file) {
        (Some(Family::Theta), None) => {
            let n = require_param(args.n, "n", "theta")?;
            report.push_param("family", "theta");
            report.push_param("n", n);
            Multigraph::theta(n as usize).map_err(|e| e.to_string())?
        }
        (Some(Family::B), None) => {
            let a = require_param(args.a, "a", "b")?;
            let b = require_param(args.b, "b", "b")?;
            report.push_param("family", "b");
            report.push_param("a", a);
            report.push_param("b", b);
            Multigraph::b_graph(a as usize, b as usize).map_err(|e| e.to_string())?
        }
        (Some(Family::Hypercube), None) => {
            let n = require_param(args.n, "n", "hypercube")?;
            let n = u32::try_from(n).map_err(|_| format!("--n {n} is out of range"))?;
            if n < 64 {
                check_vertex_budget("the hypercube", 1usize << n.min(63), cap)?;
            } else {
                return Err(format!("--n {n} is out of range"));
            }
            report.push_param("family", "hypercube");
            report.push_param("n", n);
            Multigraph::hypercube(n).map_err(|e| e.to_string())?
        }
        (None, Some(path)) => {
            report.push_param("file", path.display());
            Multigraph::parse_edge_list(&read_file(path)?).map_err(|e| e.to_string())?
        }
        // clap's `source` group guarantees exactly one of the two.
        _ => unreachable!("argument group enforces one input source"),
    };
    check_vertex_budget("the graph", graph.vertex_count(), cap)?;

    let kappa = spanning::kappa(&graph).map_err(|e| e.to_string())?;
    println!("{kappa}");
    report.push_kappa("kappa", kappa);
    write_json_artifact(&report, &args.emit.json, args.emit.deterministic)?;
    Ok(report_exit_code(&report))
}

fn cmd_cube_verify(args: CubeVerifyArgs, cap: usize) -> Result<ExitCode, String> {
    if args.n > CUBE_DIRECT_LEG_MAX && !args.skip_direct {
        return Err(format!(
            "the direct Matrix-Tree leg is limited to n <= {CUBE_DIRECT_LEG_MAX}; pass --skip-direct for n = {}",
            args.n
        ));
    }
    if args.n < 64 {
        check_vertex_budget("the derived cube", 1usize << args.n.min(63), cap)?;
    } else {
        return Err(format!("--n {} is out of range", args.n));
    }
    let report =
        identities::verify_cube_with(args.n, args.skip_direct).map_err(|e| e.to_string())?;
    print_report(&report);
    write_json_artifact(&report, &args.emit.json, args.emit.deterministic)?;
    Ok(report_exit_code(&report))
}

fn cmd_census(args: CensusArgs) -> Result<ExitCode, String> {
    let report = identities::census(args.n).map_err(|e| e.to_string())?;
    print_report(&report);
    write_json_artifact(&report, &args.emit.json, args.emit.deterministic)?;
    Ok(report_exit_code(&report))
}

fn cmd_eq1_verify(args: Eq1VerifyArgs, cap: usize) -> Result<ExitCode, String> {
    let vg = VoltageGraph::parse(&read_file(&args.file)?).map_err(|e| e.to_string())?;
    check_vertex_budget("the derived graph", vg.derived_vertex_count(), cap)?;
    let mut report = identities::verify_product_formula(&vg).map_err(|e| e.to_string())?;
    report.push_param("file", args.file.display());
    print_report(&report);
    write_json_artifact(&report, &args.emit.json, args.emit.deterministic)?;
    Ok(report_exit_code(&report))
}

fn cmd_lvalue(args: LvalueArgs, cap: usize) -> Result<ExitCode, String> {
    let vg = VoltageGraph::parse(&read_file(&args.file)?).map_err(|e| e.to_string())?;
    check_vertex_budget("the base graph", vg.base().vertex_count(), cap)?;
    let mask = parse_group_element(&args.chi, vg.rank()).map_err(|e| e.to_string())?;
    let chi = Character::new(mask);
    let det = vg.twisted_determinant(&chi).map_err(|e| e.to_string())?;
    println!("{det}");

    let mut report = VerificationReport::new("lvalue");
    report.push_param("file", args.file.display());
    report.push_param("chi", &args.chi);
    let value = det
        .to_biguint()
        .ok_or_else(|| format!("twisted determinant {det} is negative"))?;
    report.push_kappa("lvalue", TreeCount(value));
    write_json_artifact(&report, &args.emit.json, args.emit.deterministic)?;
    Ok(report_exit_code(&report))
}
