//! Command-line front end. Each subcommand runs one library operation and
//! writes one JSON document to standard output.
//!
//! Exit status: 0 on success, 1 when a check fails, 2 on usage or input errors.

use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::bundle::{build_bundle, component_history, terminus};
use crate::doc::{
    from_labels, BundleDoc, ClawsDoc, ConnectifyDoc, ImproveDoc, MirrorDoc, PerfectDoc, SolveDoc, TraceDoc,
    VerifyDoc,
};
use crate::enumerate::enumerate_graphs;
use crate::error::{Error, Result};
use crate::forcing::{chronological_list, closure, Chronology, OrderPolicy, Rule};
use crate::graph::Graph;
use crate::graph6::{parse_graph6, parse_graph6_lines};
use crate::reconnection::{connected_complement_trace, improve_component, Improvement};
use crate::solver::{all_minimum_sets, forcing_number};
use crate::verifier::{is_zz_perfect_direct, mirror_check, run_corpus, CorpusMode, CorpusOptions};
use crate::vertex_set::VertexSet;

#[derive(Parser, Debug)]
#[command(name = "zforce", about = "Standard and psd zero forcing on small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Graph input: `--graph6`, else `--edges`, else an edge list on stdin.
#[derive(Args, Debug)]
struct GraphInput {
    #[arg(long)]
    graph6: Option<String>,
    #[arg(long)]
    edges: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum RuleArg {
    Standard,
    Psd,
}

impl From<RuleArg> for Rule {
    fn from(r: RuleArg) -> Rule {
        match r {
            RuleArg::Standard => Rule::Standard,
            RuleArg::Psd => Rule::Psd,
        }
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Schedule {
    Greedy,
    Lex,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    Theorem,
    Corollary,
    Monotonicity,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum PerfectMethod {
    Direct,
    ClawFree,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact forcing number with the lexicographically least witness.
    Solve {
        #[arg(long, value_enum)]
        rule: RuleArg,
        /// Also list up to this many minimum forcing sets.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Forcing trace from an initial blue set.
    Trace {
        #[arg(long, value_enum)]
        rule: RuleArg,
        #[arg(long)]
        blue: String,
        #[arg(long, value_enum, default_value = "greedy")]
        schedule: Schedule,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Lexicographic chronological list of forces (one force per step).
    List {
        #[arg(long, value_enum)]
        rule: RuleArg,
        #[arg(long)]
        blue: String,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Path bundle induced by a vertex, under the psd rule.
    Bundle {
        #[arg(long)]
        x: usize,
        #[arg(long)]
        blue: String,
        #[arg(long, value_enum, default_value = "greedy")]
        schedule: Schedule,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Minimum psd forcing set with connected complement.
    Connectify {
        #[command(flatten)]
        input: GraphInput,
    },
    /// One component-enlarging step for a psd forcing set.
    Improve {
        #[arg(long)]
        blue: String,
        /// Use the component containing this vertex (default: the largest).
        #[arg(long)]
        component: Option<usize>,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Mirror check of the psd run from a connected-complement set.
    Mirror {
        #[arg(long)]
        blue: Option<String>,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Induced claws.
    Claws {
        #[command(flatten)]
        input: GraphInput,
    },
    /// Whether every induced subgraph has equal standard and psd numbers.
    Perfect {
        #[arg(long, value_enum, default_value = "direct")]
        method: PerfectMethod,
        #[command(flatten)]
        input: GraphInput,
    },
    /// Corpus verification over enumerated graphs or a graph6 file.
    Verify {
        #[arg(long, value_enum)]
        mode: ModeArg,
        /// All labeled graphs on 1..=N vertices.
        #[arg(long)]
        enumerate: Option<usize>,
        /// graph6 corpus file, one graph per line (stdin when neither source is given).
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        jobs: Option<usize>,
        /// Maximum graph6 strings kept per failure list.
        #[arg(long, default_value_t = 64)]
        cap: usize,
        /// Theorem mode: also report graphs with a claw where the numbers differ.
        #[arg(long)]
        informational: bool,
    },
}

enum Failure {
    Usage(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Graph6(_)
            | Error::EdgeList(_)
            | Error::VertexOutOfRange { .. }
            | Error::SelfLoop(_)
            | Error::VertexCount(_)
            | Error::Io(_) => Failure::Usage(e.to_string()),
            other => Failure::Check(other.to_string()),
        }
    }
}

/// Runs the CLI on `args` (including the program name). Returns the exit status.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(stderr, "{e}");
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli.command, stdin) {
        Ok((text, ok)) => {
            let _ = writeln!(stdout, "{text}");
            if ok {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            2
        }
        Err(Failure::Check(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            1
        }
    }
}

fn render<T: Serialize>(doc: &T) -> std::result::Result<String, Failure> {
    serde_json::to_string_pretty(doc).map_err(|e| Failure::Usage(e.to_string()))
}

fn read_graph(input: &GraphInput, stdin: &mut dyn Read) -> Result<Graph> {
    if let Some(s) = &input.graph6 {
        return parse_graph6(s);
    }
    let text = match &input.edges {
        Some(path) => {
            std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?
        }
        None => {
            let mut buf = String::new();
            stdin
                .read_to_string(&mut buf)
                .map_err(|e| Error::Io(e.to_string()))?;
            buf
        }
    };
    Graph::parse_edge_list(&text)
}

fn parse_labels(list: &str, n: usize) -> Result<VertexSet> {
    let labels = list
        .split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::EdgeList(format!("bad vertex label {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    from_labels(&labels, n)
}

fn parse_label(label: usize, n: usize) -> Result<usize> {
    if label == 0 || label > n {
        return Err(Error::VertexOutOfRange { vertex: label, n });
    }
    Ok(label - 1)
}

fn schedule_chronology(g: &Graph, b: VertexSet, rule: Rule, schedule: Schedule) -> Result<Chronology> {
    match schedule {
        Schedule::Greedy => Ok(closure(g, b, rule).0),
        Schedule::Lex => chronological_list(g, b, rule, &OrderPolicy::Lex),
    }
}

fn execute(cmd: Command, stdin: &mut dyn Read) -> std::result::Result<(String, bool), Failure> {
    match cmd {
        Command::Solve { rule, cap, input } => {
            let g = read_graph(&input, stdin)?;
            let report = forcing_number(&g, rule.into())?;
            let mut doc = SolveDoc::from(&report);
            if let Some(cap) = cap {
                let sets = all_minimum_sets(&g, rule.into(), cap)?;
                doc.minimum_sets = Some(sets.into_iter().map(VertexSet::to_labels).collect());
            }
            Ok((render(&doc)?, true))
        }
        Command::Trace {
            rule,
            blue,
            schedule,
            input,
        } => {
            let g = read_graph(&input, stdin)?;
            let b = parse_labels(&blue, g.n())?;
            let chron = schedule_chronology(&g, b, rule.into(), schedule)?;
            let name = match schedule {
                Schedule::Greedy => "greedy",
                Schedule::Lex => "lex",
            };
            Ok((render(&TraceDoc::new(&g, &chron, name))?, true))
        }
        Command::List { rule, blue, input } => {
            let g = read_graph(&input, stdin)?;
            let b = parse_labels(&blue, g.n())?;
            let chron = chronological_list(&g, b, rule.into(), &OrderPolicy::Lex)?;
            Ok((render(&TraceDoc::new(&g, &chron, "lex"))?, true))
        }
        Command::Bundle {
            x,
            blue,
            schedule,
            input,
        } => {
            let g = read_graph(&input, stdin)?;
            let b = parse_labels(&blue, g.n())?;
            let x = parse_label(x, g.n())?;
            let chron = schedule_chronology(&g, b, Rule::Psd, schedule)?;
            let history = component_history(&g, &chron, x)?;
            let bundle = build_bundle(&g, &chron, x)?;
            let term = terminus(&chron, &bundle);
            Ok((render(&BundleDoc::new(&chron, &history, &bundle, &term))?, true))
        }
        Command::Connectify { input } => {
            let g = read_graph(&input, stdin)?;
            let trace = connected_complement_trace(&g)?;
            let doc = ConnectifyDoc::new(&g, &trace);
            let ok = doc.complement_connected;
            Ok((render(&doc)?, ok))
        }
        Command::Improve {
            blue,
            component,
            input,
        } => {
            let g = read_graph(&input, stdin)?;
            let s = parse_labels(&blue, g.n())?;
            let rest = s.complement(g.n());
            let comps = g.components(rest);
            let c = match component {
                Some(v) => {
                    let v = parse_label(v, g.n())?;
                    g.component_of(rest, v)
                }
                None => comps
                    .iter()
                    .rev()
                    .max_by_key(|c| c.len())
                    .copied()
                    .unwrap_or(VertexSet::EMPTY),
            };
            let doc = match improve_component(&g, s, c)? {
                Improvement::Step(step) => ImproveDoc::Step((&*step).into()),
                Improvement::Refutation(r) => ImproveDoc::Refutation((&r).into()),
            };
            Ok((render(&doc)?, true))
        }
        Command::Mirror { blue, input } => {
            let g = read_graph(&input, stdin)?;
            let s = match blue {
                Some(b) => parse_labels(&b, g.n())?,
                None => connected_complement_trace(&g)?.result,
            };
            let report = mirror_check(&g, s)?;
            Ok((render(&MirrorDoc::new(s, &report))?, report.passed))
        }
        Command::Claws { input } => {
            let g = read_graph(&input, stdin)?;
            let claws = g.find_claws();
            let doc = ClawsDoc {
                claw_free: claws.is_empty(),
                claws: claws.iter().map(Into::into).collect(),
            };
            Ok((render(&doc)?, true))
        }
        Command::Perfect { method, input } => {
            let g = read_graph(&input, stdin)?;
            let (name, perfect) = match method {
                PerfectMethod::Direct => ("direct", is_zz_perfect_direct(&g)?),
                PerfectMethod::ClawFree => ("claw-free", g.is_claw_free()),
            };
            let doc = PerfectDoc {
                method: name.into(),
                perfect,
            };
            Ok((render(&doc)?, true))
        }
        Command::Verify {
            mode,
            enumerate,
            corpus,
            jobs,
            cap,
            informational,
        } => {
            let mode = match mode {
                ModeArg::Theorem => CorpusMode::Theorem,
                ModeArg::Corollary => CorpusMode::Corollary,
                ModeArg::Monotonicity => CorpusMode::Monotonicity,
            };
            let opts = CorpusOptions {
                jobs,
                informational,
                list_cap: cap,
                ..CorpusOptions::default()
            };
            let (source, summary) = if let Some(max_n) = enumerate {
                let gens = (1..=max_n)
                    .map(|n| enumerate_graphs(n, false))
                    .collect::<Result<Vec<_>>>()?;
                let summary = run_corpus(gens.into_iter().flatten().map(Ok), mode, &opts)?;
                (format!("enumerate:1..={max_n}"), summary)
            } else {
                let (name, text) = match &corpus {
                    Some(path) => (
                        path.display().to_string(),
                        std::fs::read_to_string(path)
                            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?,
                    ),
                    None => {
                        let mut buf = String::new();
                        stdin
                            .read_to_string(&mut buf)
                            .map_err(|e| Error::Io(e.to_string()))?;
                        ("stdin".to_string(), buf)
                    }
                };
                (name, run_corpus(parse_graph6_lines(&text), mode, &opts)?)
            };
            let doc = VerifyDoc {
                source,
                passed: summary.passed(),
                summary,
            };
            let ok = doc.passed;
            Ok((render(&doc)?, ok))
        }
    }
}
