//! Checks of `Z+(G) = Z(G)` on claw-free graphs, single graphs and corpora.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::forcing::{is_valid_force, valid_forces, Force, Rule};
use crate::graph::Graph;
use crate::graph6::to_graph6;
use crate::solver::forcing_number;
use crate::vertex_set::VertexSet;

/// Largest graph [`is_zz_perfect_direct`] accepts; every induced subgraph is solved.
pub const MAX_DIRECT_VERTICES: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EqualityReport {
    /// graph6 encoding of the graph.
    pub graph: String,
    pub z: usize,
    pub z_plus: usize,
    pub equal: bool,
    pub claw_free: bool,
    pub connected: bool,
}

pub fn check_equality(g: &Graph) -> Result<EqualityReport> {
    let z = forcing_number(g, Rule::Standard)?.value;
    let z_plus = forcing_number(g, Rule::Psd)?.value;
    Ok(EqualityReport {
        graph: to_graph6(g),
        z,
        z_plus,
        equal: z == z_plus,
        claw_free: g.is_claw_free(),
        connected: g.is_connected(),
    })
}

/// One force of the mirrored run and the state it was applied to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorStep {
    pub step: usize,
    pub white: VertexSet,
    pub white_components: usize,
    pub force: Force,
    pub standard_valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MirrorReport {
    pub passed: bool,
    pub all_blue: bool,
    pub steps: Vec<MirrorStep>,
}

/// Runs the lexicographic psd chronological list from `s` and records, before
/// every force, whether the white vertices induce a connected subgraph and
/// whether the force is also a valid standard force.
///
/// Meant for `s` a minimum psd forcing set with `G - s` connected on a
/// connected claw-free graph, where every check holds.
pub fn mirror_check(g: &Graph, s: VertexSet) -> Result<MirrorReport> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if !g.is_claw_free() {
        return Err(Error::NotClawFree);
    }
    let mut blue = s;
    let mut steps = Vec::new();
    while let Some(&force) = valid_forces(g, blue, Rule::Psd).first() {
        let white = blue.complement(g.n());
        steps.push(MirrorStep {
            step: steps.len() + 1,
            white,
            white_components: g.components(white).len(),
            force,
            standard_valid: is_valid_force(g, blue, force, Rule::Standard),
        });
        blue.insert(force.target);
    }
    let all_blue = blue == g.vertices();
    let passed = all_blue && steps.iter().all(|s| s.white_components == 1 && s.standard_valid);
    Ok(MirrorReport {
        passed,
        all_blue,
        steps,
    })
}

/// Whether `Z+(H) = Z(H)` for every nonempty induced subgraph `H`, by
/// solving all of them.
pub fn is_zz_perfect_direct(g: &Graph) -> Result<bool> {
    if g.n() > MAX_DIRECT_VERTICES {
        return Err(Error::OutOfRange {
            what: "direct perfection check",
            max: MAX_DIRECT_VERTICES,
            n: g.n(),
        });
    }
    for bits in 1..1u64 << g.n() {
        let (h, _) = g.induced_subgraph(VertexSet::from_bits(bits))?;
        let z = forcing_number(&h, Rule::Standard)?.value;
        let z_plus = forcing_number(&h, Rule::Psd)?.value;
        if z != z_plus {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CorpusMode {
    /// `Z+ = Z` on every connected claw-free graph.
    Theorem,
    /// Direct `(Z+, Z)`-perfection agrees with claw-freeness on every graph.
    Corollary,
    /// `Z+ <= Z` on every graph.
    Monotonicity,
}

impl std::str::FromStr for CorpusMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "theorem" => Ok(CorpusMode::Theorem),
            "corollary" => Ok(CorpusMode::Corollary),
            "monotonicity" => Ok(CorpusMode::Monotonicity),
            other => Err(format!("unknown mode {other:?}")),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CorpusOptions {
    /// Worker threads; `None` or 1 runs on the calling thread.
    pub jobs: Option<usize>,
    /// In theorem mode, also solve graphs that are not connected and
    /// claw-free and list those with `Z+ != Z`.
    pub informational: bool,
    /// Cap on the number of graph6 strings kept per list.
    pub list_cap: usize,
    /// Graphs handed to the workers at once.
    pub chunk: usize,
}

impl Default for CorpusOptions {
    fn default() -> Self {
        CorpusOptions {
            jobs: None,
            informational: false,
            list_cap: 64,
            chunk: 1 << 14,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub mode: Option<CorpusMode>,
    pub total: u64,
    pub claw_free: u64,
    pub connected_claw_free: u64,
    /// Graphs on which the mode's mandatory check was evaluated.
    pub checked: u64,
    pub failure_count: u64,
    /// graph6 strings of graphs failing the mandatory check.
    pub failures: Vec<String>,
    pub informational_count: u64,
    /// Theorem mode only: graphs that are not connected and claw-free, with `Z+ != Z`.
    pub informational: Vec<String>,
    pub errors: Vec<String>,
}

impl CorpusSummary {
    pub fn passed(&self) -> bool {
        self.failure_count == 0 && self.errors.is_empty()
    }
}

#[derive(Default)]
struct Outcome {
    claw_free: bool,
    connected: bool,
    checked: bool,
    failed: bool,
    informational: bool,
    error: Option<String>,
}

fn evaluate(g: &Graph, mode: CorpusMode, informational: bool) -> Outcome {
    let mut out = Outcome {
        claw_free: g.is_claw_free(),
        connected: g.is_connected(),
        ..Outcome::default()
    };
    let solve_both = |g: &Graph| -> Result<(usize, usize)> {
        Ok((
            forcing_number(g, Rule::Standard)?.value,
            forcing_number(g, Rule::Psd)?.value,
        ))
    };
    let result = match mode {
        CorpusMode::Theorem => {
            if out.claw_free && out.connected {
                out.checked = true;
                solve_both(g).map(|(z, zp)| out.failed = z != zp)
            } else if informational {
                solve_both(g).map(|(z, zp)| out.informational = z != zp)
            } else {
                Ok(())
            }
        }
        CorpusMode::Corollary => {
            out.checked = true;
            is_zz_perfect_direct(g).map(|perfect| out.failed = perfect != out.claw_free)
        }
        CorpusMode::Monotonicity => {
            out.checked = true;
            solve_both(g).map(|(z, zp)| out.failed = zp > z)
        }
    };
    if let Err(e) = result {
        out.checked = false;
        out.failed = false;
        out.error = Some(e.to_string());
    }
    out
}

/// Runs `mode` over every graph of `source`. Per-graph errors (including
/// unparsable corpus lines) are recorded in the summary, not returned.
pub fn run_corpus<I>(source: I, mode: CorpusMode, opts: &CorpusOptions) -> Result<CorpusSummary>
where
    I: IntoIterator<Item = Result<Graph>>,
{
    let pool = match opts.jobs {
        Some(j) if j > 1 => Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::Io(e.to_string()))?,
        ),
        _ => None,
    };
    let mut summary = CorpusSummary {
        mode: Some(mode),
        ..CorpusSummary::default()
    };
    let mut source = source.into_iter().peekable();
    let chunk = opts.chunk.max(1);
    while source.peek().is_some() {
        let batch: Vec<Result<Graph>> = source.by_ref().take(chunk).collect();
        let eval = |item: &Result<Graph>| match item {
            Ok(g) => evaluate(g, mode, opts.informational),
            Err(e) => Outcome {
                error: Some(e.to_string()),
                ..Outcome::default()
            },
        };
        let outcomes: Vec<Outcome> = match &pool {
            Some(pool) => pool.install(|| batch.par_iter().map(eval).collect()),
            None => batch.iter().map(eval).collect(),
        };
        for (item, o) in batch.iter().zip(outcomes) {
            summary.total += 1;
            summary.claw_free += o.claw_free as u64;
            summary.connected_claw_free += (o.claw_free && o.connected) as u64;
            summary.checked += o.checked as u64;
            let name = || item.as_ref().map(to_graph6).unwrap_or_default();
            if o.failed {
                summary.failure_count += 1;
                if summary.failures.len() < opts.list_cap {
                    summary.failures.push(name());
                }
            }
            if o.informational {
                summary.informational_count += 1;
                if summary.informational.len() < opts.list_cap {
                    summary.informational.push(name());
                }
            }
            if let Some(e) = o.error {
                summary.errors.push(e);
            }
        }
    }
    Ok(summary)
}
