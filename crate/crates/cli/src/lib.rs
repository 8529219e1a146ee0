//! Command dispatch and report rendering for the `koethe` binary.
//!
//! [`run`] is the whole program minus process plumbing, so tests can drive it
//! with an argument list and a string for stdin.

use std::fmt::Write as _;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use koethe_core::dimseq::{self, DimSeqClass, DimSeqWitness, Rank2Pair};
use koethe_core::format;
use koethe_core::koethe::{self, CrossCheck};
use koethe_core::reflect::{self, EnumeratedIndec, DEFAULT_STEP_CAP};
use koethe_core::rep::{self, RepSummary};
use koethe_core::roots;
use koethe_core::{classify, DiagramType, DimVector, KoetheVerdict, Quiver, VertexId};

#[derive(Debug, Parser)]
#[command(
    name = "koethe",
    version,
    about = "Koethe property and representation calculus for species"
)]
struct Cli {
    /// Print JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Cap on reflection steps during enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_STEP_CAP)]
    max_steps: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Diagram type of each component.
    Classify { file: Option<PathBuf> },
    /// Indecomposable dimension vectors via the reflection tower.
    Indecs { file: Option<PathBuf> },
    /// Positive roots of each (Dynkin) component.
    Roots { file: Option<PathBuf> },
    /// Decide the right Koethe property.
    Koethe {
        file: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = DecideMode::Hereditary)]
        mode: DecideMode,
        /// Exit with status 2 unless the verdict matches.
        #[arg(long, value_enum)]
        expect: Option<Expect>,
    },
    /// Print the separated quiver.
    Separated { file: Option<PathBuf> },
    /// Dimension-sequence arithmetic.
    Dimseq {
        #[command(subcommand)]
        action: DimseqCommand,
    },
    /// Indecomposable matrix representations with their tops.
    Reps { file: Option<PathBuf> },
    /// Compare the diagrammatic verdict with the matrix brute force.
    Crosscheck { file: Option<PathBuf> },
}

#[derive(Debug, Subcommand)]
enum DimseqCommand {
    /// Run both recurrences on a sequence such as 3,1,2,2,1.
    Validate { seq: String },
    /// All cyclically valid sequences of length M, up to rotation and reversal.
    List {
        m: usize,
        #[arg(long, default_value_t = dimseq::DEFAULT_CAP)]
        cap: u32,
    },
    /// Indecomposable dimension pairs for a single arrow carrying SEQ.
    Indecs { seq: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum DecideMode {
    Hereditary,
    Rsz,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expect {
    Yes,
    No,
}

/// Captured result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(message: String) -> Self {
        Output {
            code: 1,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command. Input
/// files named `-` or omitted are read from `stdin`.
pub fn run<I, T>(args: I, stdin: impl Read) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: 1,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output::ok(text)
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(out) => out,
        Err(message) => Output::fail(message),
    }
}

type CmdResult = Result<Output, String>;

fn read_quiver(file: &Option<PathBuf>, mut stdin: impl Read) -> Result<Quiver, String> {
    let (name, text) = match file {
        Some(p) if p.as_os_str() != "-" => {
            let text = std::fs::read_to_string(p).map_err(|e| format!("{}: {e}", p.display()))?;
            (p.display().to_string(), text)
        }
        _ => {
            let mut text = String::new();
            stdin
                .read_to_string(&mut text)
                .map_err(|e| format!("stdin: {e}"))?;
            ("<stdin>".to_string(), text)
        }
    };
    format::parse(&text).map_err(|e| format!("{name}: {e}"))
}

fn parse_seq(text: &str) -> Result<Vec<u32>, String> {
    text.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<u32>()
                .map_err(|_| format!("{:?} is not a nonnegative integer", t.trim()))
        })
        .collect()
}

fn in_component(part: &Quiver, e: impl std::fmt::Display) -> String {
    format!("component {{{}}}: {e}", join_vertices(part.vertices()))
}

fn join_vertices(vs: &[VertexId]) -> String {
    vs.iter()
        .map(VertexId::as_str)
        .collect::<Vec<_>>()
        .join(",")
}

fn seq_text(seq: &[u32]) -> String {
    let parts: Vec<String> = seq.iter().map(u32::to_string).collect();
    format!("({})", parts.join(","))
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

/// Left-aligned columns separated by two spaces.
fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let _ = write!(s, "{cell:<w$}  ");
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(header.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn render<T: Serialize>(json: bool, report: &T, text: impl FnOnce(&T) -> String) -> String {
    if json {
        let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        text(report)
    }
}

#[derive(Serialize)]
struct Components<T> {
    components: Vec<T>,
}

#[derive(Serialize)]
struct ClassifyRow {
    vertices: Vec<VertexId>,
    #[serde(rename = "type")]
    diagram: DiagramType,
    #[serde(rename = "repFinite")]
    rep_finite: bool,
}

#[derive(Serialize)]
struct IndecRow {
    vertices: Vec<VertexId>,
    #[serde(rename = "type")]
    diagram: DiagramType,
    m: usize,
    indecomposables: Vec<EnumeratedIndec>,
}

#[derive(Serialize)]
struct RootRow {
    vertices: Vec<VertexId>,
    #[serde(rename = "type")]
    diagram: DiagramType,
    count: usize,
    highest: Option<DimVector>,
    roots: roots::RootSet,
}

#[derive(Serialize)]
struct RepRow {
    vertices: Vec<VertexId>,
    #[serde(rename = "type")]
    diagram: DiagramType,
    indecomposables: Vec<RepSummary>,
}

#[derive(Serialize)]
struct ValidateReport {
    #[serde(flatten)]
    witness: DimSeqWitness,
    cyclic: bool,
}

#[derive(Serialize)]
struct ListReport {
    m: usize,
    cap: u32,
    classes: Vec<DimSeqClass>,
}

#[derive(Serialize)]
struct Rank2Report {
    seq: Vec<u32>,
    indecomposables: Vec<Rank2Pair>,
}

fn execute(cli: &Cli, stdin: impl Read) -> CmdResult {
    let json = cli.json;
    let cap = cli.max_steps;
    match &cli.command {
        Command::Classify { file } => {
            let q = read_quiver(file, stdin)?;
            let mut rows = Vec::new();
            for part in q.components() {
                let diagram = classify(&part).map_err(|e| in_component(&part, e))?;
                rows.push(ClassifyRow {
                    vertices: part.vertices().to_vec(),
                    diagram,
                    rep_finite: diagram.is_finite(),
                });
            }
            let report = Components { components: rows };
            Ok(Output::ok(render(json, &report, |r| {
                let rows: Vec<Vec<String>> = r
                    .components
                    .iter()
                    .map(|c| {
                        vec![
                            join_vertices(&c.vertices),
                            c.diagram.to_string(),
                            yes_no(c.rep_finite).to_string(),
                        ]
                    })
                    .collect();
                table(&["vertices", "type", "rep-finite"], &rows)
            })))
        }
        Command::Indecs { file } => {
            let q = read_quiver(file, stdin)?;
            let mut rows = Vec::new();
            for part in q.components() {
                let ctx = |e| in_component(&part, e);
                let diagram = classify(&part).map_err(ctx)?;
                let fin = reflect::representation_finiteness(&part, cap).map_err(ctx)?;
                let Some(m) = fin.m else {
                    return Err(ctx(koethe_core::Error::NotRepresentationFinite));
                };
                let indecomposables =
                    reflect::enumerate_indecomposables(&part, cap).map_err(ctx)?;
                rows.push(IndecRow {
                    vertices: part.vertices().to_vec(),
                    diagram,
                    m,
                    indecomposables,
                });
            }
            let report = Components { components: rows };
            Ok(Output::ok(render(json, &report, |r| {
                let mut out = String::new();
                for c in &r.components {
                    let _ = writeln!(
                        out,
                        "component {{{}}}: {}, m = {}, {} indecomposables",
                        join_vertices(&c.vertices),
                        c.diagram,
                        c.m,
                        c.indecomposables.len()
                    );
                    let rows: Vec<Vec<String>> = c
                        .indecomposables
                        .iter()
                        .map(|e| vec![e.t.to_string(), e.sink.to_string(), e.vector.to_string()])
                        .collect();
                    out.push_str(&table(&["t", "sink", "vector"], &rows));
                }
                out
            })))
        }
        Command::Roots { file } => {
            let q = read_quiver(file, stdin)?;
            let mut rows = Vec::new();
            for part in q.components() {
                let ctx = |e| in_component(&part, e);
                let diagram = classify(&part).map_err(ctx)?;
                let set = roots::positive_roots(&part).map_err(ctx)?;
                rows.push(RootRow {
                    vertices: part.vertices().to_vec(),
                    diagram,
                    count: set.len(),
                    highest: set.highest().cloned(),
                    roots: set,
                });
            }
            let report = Components { components: rows };
            Ok(Output::ok(render(json, &report, |r| {
                let mut out = String::new();
                for c in &r.components {
                    let _ = writeln!(
                        out,
                        "component {{{}}}: {}, {} positive roots, highest {}",
                        join_vertices(&c.vertices),
                        c.diagram,
                        c.count,
                        c.highest
                            .as_ref()
                            .map_or("-".to_string(), DimVector::to_string)
                    );
                    for root in c.roots.iter() {
                        let _ = writeln!(out, "  {root}");
                    }
                }
                out
            })))
        }
        Command::Koethe { file, mode, expect } => {
            let q = read_quiver(file, stdin)?;
            let verdict = match mode {
                DecideMode::Hereditary => koethe::decide_hereditary(&q),
                DecideMode::Rsz => koethe::decide_radical_square_zero(&q),
            }
            .map_err(|e| e.to_string())?;
            let mut out = Output::ok(render(json, &verdict, verdict_text));
            if let Some(expect) = expect {
                if (*expect == Expect::Yes) != verdict.koethe {
                    out.code = 2;
                    out.stderr = format!(
                        "expected {}, verdict is {}\n",
                        yes_no(*expect == Expect::Yes),
                        yes_no(verdict.koethe)
                    );
                }
            }
            Ok(out)
        }
        Command::Separated { file } => {
            let q = read_quiver(file, stdin)?;
            let s = koethe::separated_quiver(&q).map_err(|e| e.to_string())?;
            Ok(Output::ok(if json {
                format::emit_json(&s) + "\n"
            } else {
                format::emit_text(&s)
            }))
        }
        Command::Dimseq { action } => dimseq_command(action, json),
        Command::Reps { file } => {
            let q = read_quiver(file, stdin)?;
            let mut rows = Vec::new();
            for part in q.components() {
                let ctx = |e| in_component(&part, e);
                let diagram = classify(&part).map_err(ctx)?;
                let reps = rep::enumerate_indec_reps(&part, cap).map_err(ctx)?;
                rows.push(RepRow {
                    vertices: part.vertices().to_vec(),
                    diagram,
                    indecomposables: reps.iter().map(|e| e.summary()).collect(),
                });
            }
            let report = Components { components: rows };
            Ok(Output::ok(render(json, &report, |r| {
                let mut out = String::new();
                for c in &r.components {
                    let _ = writeln!(
                        out,
                        "component {{{}}}: {}, {} indecomposables",
                        join_vertices(&c.vertices),
                        c.diagram,
                        c.indecomposables.len()
                    );
                    out.push_str(&summary_table(&c.indecomposables));
                }
                out
            })))
        }
        Command::Crosscheck { file } => {
            let q = read_quiver(file, stdin)?;
            let report = koethe::cross_validate(&q, cap).map_err(|e| e.to_string())?;
            Ok(Output::ok(render(json, &report, crosscheck_text)))
        }
    }
}

fn dimseq_command(action: &DimseqCommand, json: bool) -> CmdResult {
    match action {
        DimseqCommand::Validate { seq } => {
            let seq = parse_seq(seq)?;
            let witness = dimseq::validate(&seq).map_err(|e| e.to_string())?;
            let cyclic = dimseq::validate_cyclic(&seq).map_err(|e| e.to_string())?;
            let report = ValidateReport { witness, cyclic };
            Ok(Output::ok(render(json, &report, |r| {
                let w = &r.witness;
                let show = |v: &[i64]| {
                    let parts: Vec<String> = v.iter().map(i64::to_string).collect();
                    format!("({})", parts.join(","))
                };
                format!(
                    "seq {}\nvalid   {}\ncyclic  {}\nx       {}\ny       {}\n",
                    seq_text(&w.seq),
                    yes_no(w.valid),
                    yes_no(r.cyclic),
                    show(&w.x),
                    show(&w.y)
                )
            })))
        }
        DimseqCommand::List { m, cap } => {
            let classes = dimseq::generate(*m, *cap).map_err(|e| e.to_string())?;
            let report = ListReport {
                m: *m,
                cap: *cap,
                classes,
            };
            Ok(Output::ok(render(json, &report, |r| {
                let mut out = format!(
                    "length {}, entries <= {}: {} classes\n",
                    r.m,
                    r.cap,
                    r.classes.len()
                );
                for c in &r.classes {
                    let _ = writeln!(
                        out,
                        "  {}  ({} members)",
                        seq_text(&c.canonical),
                        c.members.len()
                    );
                }
                out
            })))
        }
        DimseqCommand::Indecs { seq } => {
            let seq = parse_seq(seq)?;
            let indecomposables = dimseq::indec_dimvectors(&seq).map_err(|e| e.to_string())?;
            let report = Rank2Report {
                seq,
                indecomposables,
            };
            Ok(Output::ok(render(json, &report, |r| {
                let mut out = format!(
                    "seq {}: {} indecomposables\n",
                    seq_text(&r.seq),
                    r.indecomposables.len()
                );
                for p in &r.indecomposables {
                    let _ = writeln!(out, "  {p}");
                }
                out
            })))
        }
    }
}

fn verdict_text(v: &KoetheVerdict) -> String {
    let rows: Vec<Vec<String>> = v
        .components
        .iter()
        .map(|c| {
            let clause = match (c.clause, c.clause_parameter) {
                (Some(n), Some(t)) => format!("{n} (t={t})"),
                (Some(n), None) => n.to_string(),
                (None, _) => "-".to_string(),
            };
            vec![
                join_vertices(&c.vertices),
                c.diagram.to_string(),
                yes_no(c.rep_finite).to_string(),
                yes_no(c.koethe).to_string(),
                clause,
                c.reason
                    .as_ref()
                    .map_or("-".to_string(), ToString::to_string),
            ]
        })
        .collect();
    let mut out = table(
        &[
            "vertices",
            "type",
            "rep-finite",
            "koethe",
            "clause",
            "reason",
        ],
        &rows,
    );
    let _ = writeln!(out, "koethe: {}", yes_no(v.koethe));
    out
}

fn summary_table(reps: &[RepSummary]) -> String {
    let rows: Vec<Vec<String>> = reps
        .iter()
        .map(|s| {
            vec![
                s.t.to_string(),
                s.sink.to_string(),
                s.dims.to_string(),
                s.top.to_string(),
            ]
        })
        .collect();
    table(&["t", "sink", "dims", "top"], &rows)
}

fn crosscheck_text(c: &CrossCheck) -> String {
    let mut out = verdict_text(&c.verdict);
    let _ = writeln!(out, "brute force: {}", yes_no(c.brute_force));
    let _ = writeln!(out, "agree: {}", yes_no(c.agree));
    if let Some(w) = &c.witness {
        let _ = writeln!(
            out,
            "witness: dims {} top {} (t={}, sink {})",
            w.summary.dims, w.summary.top, w.summary.t, w.summary.sink
        );
        for m in &w.maps {
            let _ = writeln!(out, "  {} -> {}: {}", m.from, m.to, m.matrix);
        }
    }
    out
}
