use std::fmt::Write as _;
use std::fs;
use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use domindex::domination::{degree_witness, mds_containing_greedy};
use domindex::families::{generate, FamilySpec};
use domindex::io::{emit_dot, emit_edgelist, emit_report_json, parse_edgelist, ProfileReport};
use domindex::ops::OpName;
use domindex::verify::{run_suite, write_ledger, CheckReport, Limits, Suite};
use domindex::{domination_profile, Error, Graph, VertexSet};
use serde_json::json;

#[derive(Parser, Debug)]
#[command(name = "domindex", version, about = "Domination degree and domination index of small graphs")]
struct Cli {
    /// Input edge list (stdin when absent).
    #[arg(long = "in", global = true, value_name = "PATH")]
    input: Option<PathBuf>,
    /// Output file (stdout when absent).
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Largest order accepted by the exponential routines.
    #[arg(long, global = true, default_value_t = 24)]
    max_exact: usize,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Greedy,
    Exact,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Full domination profile of the input graph (JSON by default).
    Analyze,
    /// Edge list of a family member, e.g. `cycle:9` or `windmill:r=3,s=4`.
    Generate { spec: String },
    /// Combine graphs: the `--in` graph (if given) followed by the listed files.
    Op {
        #[arg(value_parser = parse_op)]
        name: OpName,
        files: Vec<PathBuf>,
    },
    /// Domination degree of one vertex and a witness set.
    Degree {
        #[arg(long)]
        vertex: String,
    },
    /// One minimal dominating set containing a vertex.
    MdsContaining {
        #[arg(long)]
        vertex: String,
        #[arg(long, value_enum, default_value_t = Algorithm::Greedy)]
        algorithm: Algorithm,
    },
    /// Run a claim-checking suite, or `all`.
    Verify {
        #[arg(long)]
        suite: String,
        /// Write one JSON line per discrepancy here.
        #[arg(long, value_name = "PATH")]
        ledger: Option<PathBuf>,
        #[arg(long, default_value_t = 6)]
        enum_order: usize,
        #[arg(long, default_value_t = 200)]
        random_graphs: usize,
    },
    /// Place facilities around a hub: the hub's smallest minimal dominating
    /// set, minus the hub.
    Facility {
        #[arg(long)]
        hub: String,
    },
}

fn parse_op(s: &str) -> Result<OpName, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Input(String),
    Cap(String),
    Violation(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Violation(_) => 2,
            Failure::Input(_) => 3,
            Failure::Cap(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Cap(m) | Failure::Violation(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::ExactCapExceeded { .. } | Error::EnumerationCapExceeded { .. } | Error::OrderTooLarge { .. } => {
                Failure::Cap(msg)
            }
            Error::MalformedLine { .. }
            | Error::SelfLoop { .. }
            | Error::InvalidEdge(_)
            | Error::LabelConflict(_)
            | Error::LabelCount { .. } => Failure::Input(msg),
            _ => Failure::Usage(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("domindex: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn read_text(path: Option<&PathBuf>) -> Result<String, Failure> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = fs::read_to_string(p).map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::Input(format!("stdin: {e}")))?;
        }
    }
    Ok(text)
}

fn read_graph(path: Option<&PathBuf>) -> Result<Graph, Failure> {
    let parsed = parse_edgelist(&read_text(path)?)?;
    for d in &parsed.duplicates {
        eprintln!("domindex: line {}: duplicate edge {} {} ignored", d.line, d.u, d.v);
    }
    Ok(parsed.graph)
}

fn guard(g: &Graph, cap: usize) -> Result<(), Failure> {
    if g.order() > cap {
        return Err(Error::ExactCapExceeded { order: g.order(), cap }.into());
    }
    if g.order() == 0 {
        return Err(Error::EmptyGraph.into());
    }
    Ok(())
}

fn labels_line(g: &Graph, s: &VertexSet) -> String {
    g.set_labels(s).join(" ")
}

fn run(cli: &Cli) -> Result<(), Failure> {
    let mut exit = Ok(());
    let output = match &cli.command {
        Command::Analyze => {
            let g = read_graph(cli.input.as_ref())?;
            guard(&g, cli.max_exact)?;
            let report = ProfileReport::new(&g, &domination_profile(&g)?);
            match cli.format.unwrap_or(Format::Json) {
                Format::Json => emit_report_json(&report) + "\n",
                Format::Dot => emit_dot(&g, None),
                Format::Text => analysis_text(&report),
            }
        }
        Command::Generate { spec } => {
            let spec: FamilySpec = spec.parse()?;
            let fg = generate(&spec)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Text => emit_edgelist(&fg.graph),
                Format::Dot => emit_dot(&fg.graph, None),
                Format::Json => {
                    let roles: Vec<_> = fg
                        .predictions()
                        .iter()
                        .enumerate()
                        .map(|(v, r)| {
                            json!({
                                "label": fg.graph.label(v),
                                "role": r.role.to_string(),
                                "predicted_dd": r.predicted.value(),
                            })
                        })
                        .collect();
                    let doc = json!({
                        "spec": spec.to_string(),
                        "n": fg.graph.order(),
                        "m": fg.graph.size(),
                        "edges": edge_pairs_json(&fg.graph),
                        "vertices": roles,
                    });
                    pretty(&doc)
                }
            }
        }
        Command::Op { name, files } => {
            let mut operands = Vec::new();
            if let Some(p) = &cli.input {
                operands.push(read_graph(Some(p))?);
            }
            for f in files {
                operands.push(read_graph(Some(f))?);
            }
            if operands.len() < 2 {
                return Err(Failure::Usage(format!("{name} needs two input graphs")));
            }
            let g = name.apply(&operands)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Text => emit_edgelist(&g),
                Format::Dot => emit_dot(&g, None),
                Format::Json => pretty(&json!({
                    "operation": name.to_string(),
                    "n": g.order(),
                    "m": g.size(),
                    "edges": edge_pairs_json(&g),
                })),
            }
        }
        Command::Degree { vertex } => {
            let g = read_graph(cli.input.as_ref())?;
            guard(&g, cli.max_exact)?;
            let v = g.vertex_or_err(vertex)?;
            let w = degree_witness(&g, v)?;
            set_output(cli, &g, &w, || {
                format!("d_d({vertex}) = {}\nwitness: {}\n", w.len(), labels_line(&g, &w))
            }, json!({"vertex": vertex, "dd": w.len(), "witness": g.set_labels(&w)}))
        }
        Command::MdsContaining { vertex, algorithm } => {
            let g = read_graph(cli.input.as_ref())?;
            guard(&g, cli.max_exact)?;
            let v = g.vertex_or_err(vertex)?;
            let s = match algorithm {
                Algorithm::Greedy => mds_containing_greedy(&g, v)?,
                Algorithm::Exact => degree_witness(&g, v)?,
            };
            let name = format!("{algorithm:?}").to_lowercase();
            set_output(cli, &g, &s, || labels_line(&g, &s) + "\n", json!({
                "vertex": vertex,
                "algorithm": name,
                "size": s.len(),
                "set": g.set_labels(&s),
            }))
        }
        Command::Facility { hub } => {
            let g = read_graph(cli.input.as_ref())?;
            guard(&g, cli.max_exact)?;
            let h = g.vertex_or_err(hub)?;
            let all = degree_witness(&g, h)?;
            let placements = all.without(h);
            set_output(cli, &g, &all, || {
                format!("hub: {hub}\nplacements: {}\n", labels_line(&g, &placements))
            }, json!({
                "hub": hub,
                "placements": g.set_labels(&placements),
                "size": all.len(),
            }))
        }
        Command::Verify {
            suite,
            ledger,
            enum_order,
            random_graphs,
        } => {
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                vec![suite.parse()?]
            };
            let limits = Limits {
                max_exact: cli.max_exact,
                enum_order: *enum_order,
                seed: cli.seed,
                random_graphs: *random_graphs,
            };
            let reports: Vec<CheckReport> = suites
                .iter()
                .map(|&s| run_suite(s, &limits))
                .collect::<Result<_, _>>()?;
            for r in &reports {
                eprintln!("{}: {:.2}s", r.suite, r.runtime_secs);
            }
            if let Some(path) = ledger {
                let file = fs::File::create(path)
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                write_ledger(&reports, io::BufWriter::new(file))
                    .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            }
            let violations: usize = reports.iter().map(CheckReport::proved_violations).sum();
            if violations > 0 {
                exit = Err(Failure::Violation(format!(
                    "{violations} violations of proved claims"
                )));
            }
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => pretty(&serde_json::to_value(&reports).expect("serializable")),
                _ => verify_text(&reports),
            }
        }
    };
    write_output(cli.out.as_ref(), &output)?;
    exit
}

fn set_output(
    cli: &Cli,
    g: &Graph,
    s: &VertexSet,
    text: impl FnOnce() -> String,
    doc: serde_json::Value,
) -> String {
    match cli.format.unwrap_or(Format::Text) {
        Format::Text => text(),
        Format::Json => pretty(&doc),
        Format::Dot => emit_dot(g, Some(s)),
    }
}

fn edge_pairs_json(g: &Graph) -> Vec<[String; 2]> {
    emit_edgelist(g)
        .lines()
        .filter_map(|l| l.split_once(' '))
        .map(|(a, b)| [a.to_string(), b.to_string()])
        .collect()
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn analysis_text(r: &ProfileReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n = {}, m = {}, connected = {}", r.n, r.m, r.connected);
    for v in &r.vertices {
        let _ = writeln!(out, "{:>8}  d_d = {:<3} witness: {}", v.label, v.dd, v.witness.join(" "));
    }
    let _ = writeln!(
        out,
        "gamma = {}, upper gamma = {}, ir = {}, IR = {}",
        r.gamma, r.upper_gamma, r.ir, r.upper_ir
    );
    let _ = writeln!(
        out,
        "DI = {}, min d_d = {}, max d_d = {}, domination regular = {}",
        r.di, r.min_dd, r.max_dd, r.is_drg
    );
    out
}

fn verify_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "{}", r.summary());
        for n in &r.notes {
            let _ = writeln!(out, "  note: {n}");
        }
        for d in &r.discrepancies {
            let _ = writeln!(
                out,
                "  [{}] {} on {}: expected {}, computed {}",
                serde_json::to_value(d.class).expect("serializable").as_str().unwrap_or("?"),
                d.claim,
                d.instance,
                d.expected,
                d.computed
            );
        }
    }
    out
}

fn write_output(path: Option<&PathBuf>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Usage(format!("{}: {e}", p.display()))),
        None => {
            let mut stdout = io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .and_then(|()| stdout.flush())
                .map_err(|e| Failure::Usage(format!("stdout: {e}")))
        }
    }
}
