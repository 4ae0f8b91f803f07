//! Command-line front end. Graphs come from edge-list files (or stdin) or
//! from family specs like `petersen` and `cycle:7`; results go out as a
//! table, JSON, DOT, or another edge list, so subcommands compose through
//! pipes. Exit codes: 0 success, 1 semantic failure (disconnected input,
//! size caps, a failed verify run), 2 usage or parse errors.

use std::io::Read;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sdimlab::error::Error;
use sdimlab::families;
use sdimlab::graph::io::{parse_edge_list, render_dot, render_edge_list};
use sdimlab::graph::Graph;
use sdimlab::optimize::rational::rat_to_string;
use sdimlab::optimize::{invariant_report, InvariantReport};
use sdimlab::products;
use sdimlab::resolving::strong_resolving_graph;
use sdimlab::verify;

#[derive(Parser)]
#[command(
    name = "sdimlab",
    version,
    about = "Strong resolving graphs and fractional strong metric dimension, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the invariants of one connected graph
    Compute {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
        format: ReportFormat,
    },
    /// Print the strong resolving graph of one connected graph
    Srgraph {
        #[command(flatten)]
        input: GraphInput,
        #[arg(long, value_enum, default_value_t = SrFormat::Edgelist)]
        format: SrFormat,
    },
    /// Build a product of two graphs
    Product {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Left factor as a family spec
        #[arg(long)]
        left: Option<String>,
        /// Left factor as an edge-list file, `-` for stdin
        #[arg(long)]
        left_input: Option<String>,
        /// Right factor as a family spec
        #[arg(long)]
        right: Option<String>,
        /// Right factor as an edge-list file, `-` for stdin
        #[arg(long)]
        right_input: Option<String>,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Generate a named family graph
    Family {
        /// Spec such as `petersen`, `cycle:7`, `multipartite:1,2,2`,
        /// or `randtree:9,42`
        spec: String,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
    },
    /// Run the acceptance battery
    Verify {
        /// Run a single numbered criterion instead of the whole list
        #[arg(long)]
        criterion: Option<usize>,
    },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GraphInput {
    /// Edge-list file, `-` for stdin
    #[arg(long)]
    input: Option<String>,
    /// Family spec such as `petersen` or `cycle:7`
    #[arg(long)]
    family: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Table,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum SrFormat {
    Edgelist,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormat {
    Edgelist,
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Corona,
    Lexicographic,
    Cartesian,
    Direct,
}

fn read_text(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| Error::InvalidParams(format!("reading stdin: {e}")))?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidParams(format!("reading {path}: {e}")))
    }
}

fn load_graph(input: Option<&str>, family: Option<&str>, side: &str) -> Result<Graph, Error> {
    match (input, family) {
        (Some(path), None) => parse_edge_list(&read_text(path)?),
        (None, Some(spec)) => families::generate(&families::parse_spec(spec)?),
        _ => Err(Error::InvalidParams(format!(
            "{side} needs exactly one of a family spec or an edge-list input"
        ))),
    }
}

impl GraphInput {
    fn load(&self) -> Result<Graph, Error> {
        load_graph(self.input.as_deref(), self.family.as_deref(), "graph")
    }
}

fn graph_json(g: &Graph) -> serde_json::Value {
    let mut value = serde_json::json!({
        "order": g.n(),
        "size": g.edge_count(),
        "edges": g.edges(),
    });
    if g.has_labels() {
        value["labels"] =
            serde_json::json!((0..g.n()).map(|v| g.display_label(v)).collect::<Vec<_>>());
    }
    value
}

fn print_graph(g: &Graph, format: GraphFormat) {
    match format {
        GraphFormat::Edgelist => print!("{}", render_edge_list(g)),
        GraphFormat::Dot => print!("{}", render_dot(g)),
        GraphFormat::Json => println!("{}", graph_json(g)),
    }
}

fn print_report_table(report: &InvariantReport) {
    let row = |k: &str, v: String| println!("{k:<20}{v}");
    row("order", report.order.to_string());
    row("size", report.size.to_string());
    row("diameter", report.diameter.to_string());
    row("leaf count", report.leaf_count.to_string());
    row("boundary size", report.boundary.len().to_string());
    row(
        "boundary",
        report
            .boundary
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
    row("sdim_f", rat_to_string(&report.sdim_f));
    row("sl_f", rat_to_string(&report.sl_f));
    row("sdim", report.sdim.to_string());
    row("sr matching", report.sr_matching_number.to_string());
    for (i, c) in report.sr_components.iter().enumerate() {
        let degree = match c.regular_degree {
            Some(d) => format!("{d}-regular"),
            None => "irregular".to_string(),
        };
        let parity = if c.is_bipartite {
            "bipartite"
        } else {
            "non-bipartite"
        };
        row(
            &format!("sr component {i}"),
            format!("order {} {degree} {parity}", c.order),
        );
    }
    row(
        "witness",
        report
            .witness
            .values()
            .iter()
            .map(rat_to_string)
            .collect::<Vec<_>>()
            .join(" "),
    );
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute { input, format } => {
            let g = input.load()?;
            let report = invariant_report(&g)?;
            match format {
                ReportFormat::Table => print_report_table(&report),
                ReportFormat::Json => println!("{}", report.to_json()),
            }
        }
        Command::Srgraph { input, format } => {
            let g = input.load()?;
            let sr = strong_resolving_graph(&g)?;
            match format {
                SrFormat::Edgelist => print!("{}", render_edge_list(sr.graph())),
                SrFormat::Dot => print!("{}", sr.to_dot()),
                SrFormat::Json => println!("{}", sr.to_json()),
            }
        }
        Command::Product {
            kind,
            left,
            left_input,
            right,
            right_input,
            format,
        } => {
            if matches!(
                (left_input.as_deref(), right_input.as_deref()),
                (Some("-"), Some("-"))
            ) {
                return Err(Error::InvalidParams(
                    "only one factor can come from stdin".into(),
                ));
            }
            let g = load_graph(left_input.as_deref(), left.as_deref(), "left factor")?;
            let h = load_graph(right_input.as_deref(), right.as_deref(), "right factor")?;
            let (gh, _) = match kind {
                Kind::Corona => products::corona(&g, &h)?,
                Kind::Lexicographic => products::lexicographic(&g, &h)?,
                Kind::Cartesian => products::cartesian(&g, &h)?,
                Kind::Direct => products::direct(&g, &h)?,
            };
            print_graph(&gh, format);
        }
        Command::Family { spec, format } => {
            let g = families::generate(&families::parse_spec(&spec)?)?;
            print_graph(&g, format);
        }
        Command::Verify { criterion } => {
            let reports = match criterion {
                Some(id) => vec![verify::run_criterion(id)],
                None => verify::run_all(),
            };
            let mut all_pass = true;
            for r in &reports {
                println!(
                    "criterion {:02} {:32} {}",
                    r.id,
                    r.name,
                    if r.pass { "pass" } else { "FAIL" }
                );
                if !r.pass {
                    all_pass = false;
                    eprintln!("  {}", r.detail);
                }
            }
            if !all_pass {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::Parse { .. } | Error::InvalidParams(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
