use std::fmt::Write as _;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tdgraph::graph::{build_td, build_td_closed, build_zero_divisor_graph, to_dot, to_json};
use tdgraph::invariants::{compute_invariant, InvariantValue};
use tdgraph::theorems::{run_all, Budget, CheckReport, Summary};
use tdgraph::{Caps, Error, Graph, RingSpec};

/// Total dot product graphs over finite commutative rings.
#[derive(Parser)]
#[command(name = "tdgraph", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and print it.
    Build {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Compute one invariant with its witness.
    Invariant {
        #[command(flatten)]
        graph: GraphArgs,
        /// degrees, components, domination, clique, independence,
        /// clique-loop, diameter, girth or planar
        name: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Check registered claims and stream JSON-lines reports.
    Verify {
        /// Glob on claim ids (same as --filter).
        pattern: Option<String>,
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, default_value = "default")]
        budget: Budget,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Vertex cap for built graphs.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Write a graph to a file.
    Export {
        #[command(flatten)]
        graph: GraphArgs,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Ring, e.g. Z6, GF(4) or Z2xZ3.
    spec: String,
    /// Dimension n (must be 1 for zdg).
    n: usize,
    #[arg(value_enum)]
    variant: GraphVariant,
    /// Vertex cap for built graphs.
    #[arg(long)]
    cap: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphVariant {
    Td,
    Tdbar,
    Zdg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Dot,
    Json,
    Table,
}

impl GraphVariant {
    fn name(self) -> &'static str {
        match self {
            GraphVariant::Td => "td",
            GraphVariant::Tdbar => "tdbar",
            GraphVariant::Zdg => "zdg",
        }
    }
}

impl Format {
    fn name(self) -> &'static str {
        match self {
            Format::Dot => "dot",
            Format::Json => "json",
            Format::Table => "table",
        }
    }
}

enum Failure {
    Lib(Error),
    Usage(String),
    Io(std::io::Error),
    UnexpectedRefutations(usize),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Lib(e) => match e {
                Error::Syntax { .. }
                | Error::NotPrimePower(_)
                | Error::ModulusTooSmall(_)
                | Error::RingTooLarge(_)
                | Error::Precondition(_) => 2,
                Error::CapExceeded { .. } => 3,
                Error::UnknownInvariant(_) | Error::UnknownClaim(_) | Error::EmptyFilter(_) => 4,
                _ => 1,
            },
            Failure::Usage(_) => 2,
            Failure::Io(_) | Failure::UnexpectedRefutations(_) => 1,
        }
    }

    fn message(&self) -> Option<String> {
        match self {
            Failure::Lib(e) => Some(e.to_string()),
            Failure::Usage(m) => Some(m.clone()),
            Failure::Io(e) if e.kind() == std::io::ErrorKind::BrokenPipe => None,
            Failure::Io(e) => Some(e.to_string()),
            Failure::UnexpectedRefutations(n) => Some(format!("{n} unexpected refutation(s)")),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if let Some(m) = f.message() {
                eprintln!("error: {m}");
            }
            ExitCode::from(f.code())
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    let mut out = std::io::stdout().lock();
    match command {
        Command::Build { graph, format } => {
            let g = build(&graph)?;
            out.write_all(render(&g, format).as_bytes())?;
        }
        Command::Export { graph, format, output } => {
            if format == Format::Table {
                return Err(Failure::Usage("export supports --format dot or json".into()));
            }
            let g = build(&graph)?;
            std::fs::write(&output, render(&g, format))?;
            let line = json!({
                "path": output.display().to_string(),
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "loops": g.loop_count(),
            });
            writeln!(out, "{line}")?;
        }
        Command::Invariant { graph, name, format } => {
            let g = build(&graph)?;
            let caps = caps(graph.cap);
            let value = compute_invariant(&g, &name, &caps)?;
            match format {
                Format::Table => out.write_all(invariant_table(&value).as_bytes())?,
                _ => {
                    let mut v = serde_json::to_value(&value).expect("invariant values serialize");
                    v["config"] = graph_config(&graph, format);
                    writeln!(out, "{}", sorted(v))?;
                }
            }
        }
        Command::Verify { pattern, filter, budget, format, cap } => {
            let filter = match (pattern, filter) {
                (Some(p), Some(f)) if p != f => {
                    return Err(Failure::Usage(format!("conflicting filters `{p}` and `{f}`")));
                }
                (Some(p), _) | (None, Some(p)) => p,
                (None, None) => "*".to_string(),
            };
            let config = json!({
                "budget": budget.to_string(),
                "cap": cap.unwrap_or(Caps::default().graph_vertices),
                "filter": filter,
                "format": format.name(),
            });
            let reports = run_all(&filter, budget, &caps(cap))?;
            let summary = Summary::of(&reports);
            match format {
                Format::Table => out.write_all(verify_table(&config, &reports, &summary).as_bytes())?,
                _ => {
                    writeln!(out, "{}", json!({ "config": config }))?;
                    for r in &reports {
                        writeln!(out, "{}", serde_json::to_string(r).expect("reports serialize"))?;
                    }
                    writeln!(out, "{}", json!({ "summary": summary }))?;
                }
            }
            out.flush()?;
            if summary.refuted_unexpected > 0 {
                return Err(Failure::UnexpectedRefutations(summary.refuted_unexpected));
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn caps(cap: Option<usize>) -> Caps {
    cap.map_or_else(Caps::default, Caps::with_graph_cap)
}

fn build(args: &GraphArgs) -> Result<Graph, Failure> {
    let ring = RingSpec::parse(&args.spec)?;
    let caps = caps(args.cap);
    if args.n == 0 {
        return Err(Failure::Usage("n must be at least 1".into()));
    }
    Ok(match args.variant {
        GraphVariant::Td => build_td(&ring, args.n, &caps)?,
        GraphVariant::Tdbar => build_td_closed(&ring, args.n, &caps)?,
        GraphVariant::Zdg if args.n != 1 => {
            return Err(Failure::Usage("the zdg variant takes n = 1".into()));
        }
        GraphVariant::Zdg => build_zero_divisor_graph(&ring, &caps)?,
    })
}

fn graph_config(args: &GraphArgs, format: Format) -> Value {
    json!({
        "cap": args.cap.unwrap_or(Caps::default().graph_vertices),
        "format": format.name(),
        "n": args.n,
        "spec": args.spec,
        "variant": args.variant.name(),
    })
}

/// Re-serializes through `Value` so object keys come out sorted.
fn sorted(v: Value) -> String {
    serde_json::to_string(&v).expect("json values serialize")
}

fn render(g: &Graph, format: Format) -> String {
    match format {
        Format::Dot => to_dot(g),
        Format::Json => to_json(g) + "\n",
        Format::Table => graph_table(g),
    }
}

fn graph_table(g: &Graph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "vertices {}  edges {}  loops {}", g.vertex_count(), g.edge_count(), g.loop_count());
    let width = (0..g.vertex_count()).map(|v| g.label(v).len()).max().unwrap_or(0).max(5);
    let _ = writeln!(s, "{:>5}  {:<width$}  {:>6}  loop", "id", "label", "degree");
    for v in 0..g.vertex_count() {
        let mark = if g.has_loop(v) { "yes" } else { "no" };
        let _ = writeln!(s, "{:>5}  {:<width$}  {:>6}  {mark}", v, g.label(v), g.degree(v));
    }
    s.push_str("edges\n");
    for (u, v) in g.edges() {
        let _ = writeln!(s, "  {} -- {}", g.label(u), g.label(v));
    }
    s
}

fn invariant_table(v: &InvariantValue) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{}: {}", v.name, serde_json::to_string(&v.value).expect("values serialize"));
    if !v.witness_labels.is_empty() {
        let _ = writeln!(s, "witness: {}", v.witness_labels.join(" "));
    }
    if let Some(d) = &v.detail {
        let _ = writeln!(s, "detail: {d}");
    }
    s
}

fn verify_table(config: &Value, reports: &[CheckReport], summary: &Summary) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "config {config}");
    let width = reports.iter().map(|r| r.claim.len()).max().unwrap_or(5);
    for r in reports {
        let params = serde_json::to_string(&r.params).expect("params serialize");
        let _ = writeln!(s, "{:<width$}  {:<18}  {params}", r.claim, r.status.as_str());
    }
    let _ = writeln!(
        s,
        "confirmed {}  refuted-expected {}  refuted-unexpected {}  skipped {}",
        summary.confirmed, summary.refuted_expected, summary.refuted_unexpected, summary.skipped
    );
    s
}
