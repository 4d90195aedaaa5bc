//! Machine-readable output documents. All vertices are 1-based labels.

use serde::{Deserialize, Serialize};

use crate::bundle::{ComponentHistory, PathBundle, Terminus};
use crate::error::{Error, Result};
use crate::forcing::{Chronology, Force, Rule};
use crate::graph::{Claw, Graph};
use crate::reconnection::{MinimalityRefutation, ReconnectionStep, ReconnectionTrace};
use crate::solver::SolverReport;
use crate::verifier::{CorpusSummary, MirrorReport};
use crate::vertex_set::VertexSet;

pub fn labels(s: VertexSet) -> Vec<usize> {
    s.to_labels()
}

/// Inverse of [`labels`], checked against a graph on `n` vertices.
pub fn from_labels(labels: &[usize], n: usize) -> Result<VertexSet> {
    labels
        .iter()
        .map(|&l| {
            if l == 0 || l > n {
                Err(Error::VertexOutOfRange { vertex: l, n })
            } else {
                Ok(l - 1)
            }
        })
        .collect()
}

fn path_labels(paths: &[Vec<usize>]) -> Vec<Vec<usize>> {
    paths.iter().map(|p| p.iter().map(|v| v + 1).collect()).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ForceDoc {
    pub source: usize,
    pub target: usize,
}

impl From<Force> for ForceDoc {
    fn from(f: Force) -> Self {
        ForceDoc {
            source: f.source + 1,
            target: f.target + 1,
        }
    }
}

impl ForceDoc {
    pub fn to_force(self) -> Result<Force> {
        if self.source == 0 || self.target == 0 {
            return Err(Error::VertexOutOfRange { vertex: 0, n: 0 });
        }
        Ok(Force::new(self.source - 1, self.target - 1))
    }
}

/// `elapsed_ms` is wall time and the only field outside the determinism
/// contract.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveDoc {
    pub rule: Rule,
    pub value: usize,
    pub witness: Vec<usize>,
    pub tested: u64,
    pub elapsed_ms: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub minimum_sets: Option<Vec<Vec<usize>>>,
}

impl From<&SolverReport> for SolveDoc {
    fn from(r: &SolverReport) -> Self {
        SolveDoc {
            rule: r.rule,
            value: r.value,
            witness: labels(r.witness),
            tested: r.tested,
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
            minimum_sets: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceDoc {
    pub rule: Rule,
    pub schedule: String,
    pub initial: Vec<usize>,
    pub tau: usize,
    pub steps: Vec<Vec<ForceDoc>>,
    /// Blue set after each step, starting with the initial set.
    pub expansion: Vec<Vec<usize>>,
    pub final_blue: Vec<usize>,
    pub forcing: bool,
}

impl TraceDoc {
    pub fn new(g: &Graph, chron: &Chronology, schedule: &str) -> Self {
        let exp = chron.expansion();
        TraceDoc {
            rule: chron.rule,
            schedule: schedule.to_string(),
            initial: labels(chron.initial),
            tau: chron.tau(),
            steps: chron
                .steps
                .iter()
                .map(|s| s.iter().map(|&f| f.into()).collect())
                .collect(),
            expansion: exp.states.iter().map(|&s| labels(s)).collect(),
            final_blue: labels(exp.last()),
            forcing: exp.last() == g.vertices(),
        }
    }

    /// Rebuilds and revalidates the chronology on `g`.
    pub fn to_chronology(&self, g: &Graph) -> Result<Chronology> {
        let steps = self
            .steps
            .iter()
            .map(|s| s.iter().map(|f| f.to_force()).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Chronology::from_steps(g, from_labels(&self.initial, g.n())?, self.rule, steps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BundleDoc {
    pub x: usize,
    pub t_x: usize,
    pub initial: Vec<usize>,
    /// `C_x^t` for `t = 0..t_x`.
    pub components: Vec<Vec<usize>>,
    pub paths: Vec<Vec<usize>>,
    pub terminus: Vec<usize>,
}

impl BundleDoc {
    pub fn new(chron: &Chronology, history: &ComponentHistory, bundle: &PathBundle, term: &Terminus) -> Self {
        BundleDoc {
            x: bundle.x + 1,
            t_x: bundle.t_x,
            initial: labels(chron.initial),
            components: history.comps.iter().map(|&c| labels(c)).collect(),
            paths: path_labels(&bundle.paths),
            terminus: labels(term.members),
        }
    }

    pub fn to_bundle(&self) -> PathBundle {
        PathBundle {
            x: self.x - 1,
            t_x: self.t_x,
            paths: self
                .paths
                .iter()
                .map(|p| p.iter().map(|v| v - 1).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StepDoc {
    pub s: Vec<usize>,
    pub c: Vec<usize>,
    pub s0: Vec<usize>,
    pub x: usize,
    pub t: usize,
    pub w_star: usize,
    pub bundle: Vec<Vec<usize>>,
    pub s_prime: Vec<usize>,
    pub c_prime: Vec<usize>,
}

impl From<&ReconnectionStep> for StepDoc {
    fn from(st: &ReconnectionStep) -> Self {
        StepDoc {
            s: labels(st.s),
            c: labels(st.c),
            s0: labels(st.s0),
            x: st.x + 1,
            t: st.t,
            w_star: st.w_star + 1,
            bundle: path_labels(&st.bundle.paths),
            s_prime: labels(st.s_prime),
            c_prime: labels(st.c_prime),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RefutationDoc {
    pub y: usize,
    pub smaller: Vec<usize>,
}

impl From<&MinimalityRefutation> for RefutationDoc {
    fn from(r: &MinimalityRefutation) -> Self {
        RefutationDoc {
            y: r.y + 1,
            smaller: labels(r.smaller),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ImproveDoc {
    Step(StepDoc),
    Refutation(RefutationDoc),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectifyDoc {
    pub start: Vec<usize>,
    pub steps: Vec<StepDoc>,
    pub result: Vec<usize>,
    pub iterations: usize,
    pub complement_connected: bool,
}

impl ConnectifyDoc {
    pub fn new(g: &Graph, trace: &ReconnectionTrace) -> Self {
        ConnectifyDoc {
            start: labels(trace.start),
            steps: trace.steps.iter().map(StepDoc::from).collect(),
            result: labels(trace.result),
            iterations: trace.steps.len(),
            complement_connected: g.is_connected_on(trace.result.complement(g.n())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawDoc {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl From<&Claw> for ClawDoc {
    fn from(c: &Claw) -> Self {
        ClawDoc {
            center: c.center + 1,
            leaves: c.leaves.map(|l| l + 1),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClawsDoc {
    pub claw_free: bool,
    pub claws: Vec<ClawDoc>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectDoc {
    pub method: String,
    pub perfect: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorStepDoc {
    pub step: usize,
    pub white: Vec<usize>,
    pub white_components: usize,
    pub force: ForceDoc,
    pub standard_valid: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MirrorDoc {
    pub initial: Vec<usize>,
    pub passed: bool,
    pub all_blue: bool,
    pub steps: Vec<MirrorStepDoc>,
}

impl MirrorDoc {
    pub fn new(initial: VertexSet, r: &MirrorReport) -> Self {
        MirrorDoc {
            initial: labels(initial),
            passed: r.passed,
            all_blue: r.all_blue,
            steps: r
                .steps
                .iter()
                .map(|s| MirrorStepDoc {
                    step: s.step,
                    white: labels(s.white),
                    white_components: s.white_components,
                    force: s.force.into(),
                    standard_valid: s.standard_valid,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDoc {
    pub source: String,
    pub passed: bool,
    #[serde(flatten)]
    pub summary: CorpusSummary,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundle::{build_bundle, component_history, terminus};
    use crate::fixtures::{labeled, two_diamonds};
    use crate::forcing::closure;
    use crate::solver::forcing_number;

    fn round_trip<T>(doc: &T) -> T
    where
        T: Serialize + for<'de> Deserialize<'de>,
    {
        serde_json::from_str(&serde_json::to_string_pretty(doc).unwrap()).unwrap()
    }

    #[test]
    fn trace_round_trip() {
        let g = two_diamonds();
        let (chron, _) = closure(&g, labeled(&[2, 4, 6]), Rule::Psd);
        let doc = TraceDoc::new(&g, &chron, "greedy");
        assert_eq!(
            doc.steps[0],
            vec![
                ForceDoc { source: 4, target: 3 },
                ForceDoc { source: 4, target: 5 }
            ]
        );
        let back = round_trip(&doc);
        assert_eq!(back, doc);
        assert_eq!(back.to_chronology(&g).unwrap(), chron);
    }

    #[test]
    fn bundle_round_trip() {
        let g = two_diamonds();
        let (chron, _) = closure(&g, labeled(&[2, 4, 6]), Rule::Psd);
        let h = component_history(&g, &chron, 6).unwrap();
        let q = build_bundle(&g, &chron, 6).unwrap();
        let doc = BundleDoc::new(&chron, &h, &q, &terminus(&chron, &q));
        assert_eq!(doc.paths, vec![vec![2], vec![4, 5, 7], vec![6]]);
        assert_eq!(doc.terminus, vec![2, 6, 7]);
        let back = round_trip(&doc);
        assert_eq!(back, doc);
        assert_eq!(back.to_bundle(), q);
    }

    #[test]
    fn solve_round_trip() {
        let r = forcing_number(&two_diamonds(), Rule::Standard).unwrap();
        let doc = SolveDoc::from(&r);
        let back = round_trip(&doc);
        assert_eq!(back, doc);
        assert_eq!(from_labels(&back.witness, 8).unwrap(), r.witness);
        assert!(from_labels(&[9], 8).is_err());
    }
}
