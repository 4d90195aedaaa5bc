//! Path bundles induced by a fixed vertex, and their termini.
//!
//! Fix `x` and let `t_x` be the step at which `x` turns blue. For
//! `t < t_x`, `C_x^t` is the component of `G - E[t]` containing `x`. Each
//! initial blue vertex starts a path; at step `t + 1` a path whose current
//! endpoint forces a vertex of `C_x^t` is extended by that vertex. The
//! terminus is the set of bundle vertices that force nothing inside the
//! bundle, i.e. the last vertex of every path.

use crate::error::{Error, Result};
use crate::forcing::{restrict_chronology, Chronology};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentHistory {
    pub x: usize,
    /// Step at which `x` turns blue; 0 when `x` is initially blue.
    pub t_x: usize,
    /// `comps[t]` is `C_x^t` for `t = 0..t_x`.
    pub comps: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathBundle {
    pub x: usize,
    pub t_x: usize,
    /// One path per initial blue vertex, in ascending order of starting vertex.
    pub paths: Vec<Vec<usize>>,
}

impl PathBundle {
    pub fn vertices(&self) -> VertexSet {
        self.paths.iter().flatten().copied().collect()
    }

    pub fn endpoints(&self) -> VertexSet {
        self.paths.iter().filter_map(|p| p.last().copied()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Terminus {
    pub members: VertexSet,
}

pub fn component_history(g: &Graph, f: &Chronology, x: usize) -> Result<ComponentHistory> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: x, n: g.n() });
    }
    let t_x = f.time_of(x).ok_or(Error::Unreached(x))?;
    let exp = f.expansion();
    let comps = exp.states[..t_x]
        .iter()
        .map(|&blue| g.component_of(blue.complement(g.n()), x))
        .collect();
    Ok(ComponentHistory { x, t_x, comps })
}

pub fn build_bundle(g: &Graph, f: &Chronology, x: usize) -> Result<PathBundle> {
    let history = component_history(g, f, x)?;
    let mut paths: Vec<Vec<usize>> = f.initial.iter().map(|v| vec![v]).collect();
    for (t, &comp) in history.comps.iter().enumerate() {
        let mut extended = vec![false; paths.len()];
        for force in &f.steps[t] {
            if !comp.contains(force.target) {
                continue;
            }
            let Some(i) = paths.iter().position(|p| p.last() == Some(&force.source)) else {
                continue;
            };
            if extended[i] {
                return Err(Error::Invariant(format!(
                    "path {i} extended twice in step {}",
                    t + 1
                )));
            }
            extended[i] = true;
            paths[i].push(force.target);
        }
    }
    Ok(PathBundle {
        x,
        t_x: history.t_x,
        paths,
    })
}

/// Bundle vertices that are the source of no force in the restriction of `f`
/// to the bundle.
pub fn terminus(f: &Chronology, bundle: &PathBundle) -> Terminus {
    let h = bundle.vertices();
    let sources: VertexSet = restrict_chronology(f, h)
        .iter()
        .flatten()
        .map(|force| force.source)
        .collect();
    Terminus {
        members: h.difference(sources),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{labeled, two_diamonds};
    use crate::forcing::{chronological_list, Force, OrderPolicy, Rule};

    fn f(s: usize, t: usize) -> Force {
        Force::new(s - 1, t - 1)
    }

    fn relaxed_two_diamond_chronology() -> (Graph, Chronology) {
        let g = two_diamonds();
        let chron = Chronology::from_steps(
            &g,
            labeled(&[2, 4, 6]),
            Rule::Psd,
            vec![vec![f(4, 3), f(4, 5)], vec![f(3, 1), f(5, 7)], vec![f(6, 8)]],
        )
        .unwrap();
        (g, chron)
    }

    #[test]
    fn two_diamond_history_bundle_terminus() {
        let (g, chron) = relaxed_two_diamond_chronology();
        let h = component_history(&g, &chron, 6).unwrap();
        assert_eq!(h.t_x, 2);
        assert_eq!(h.comps, vec![labeled(&[5, 7, 8]), labeled(&[7, 8])]);

        let q = build_bundle(&g, &chron, 6).unwrap();
        assert_eq!(q.paths, vec![vec![1], vec![3, 4, 6], vec![5]]);
        assert_eq!(terminus(&chron, &q).members, labeled(&[2, 6, 7]));
    }

    #[test]
    fn initial_vertex_is_degenerate() {
        let (g, chron) = relaxed_two_diamond_chronology();
        let h = component_history(&g, &chron, 3).unwrap();
        assert_eq!((h.t_x, h.comps.len()), (0, 0));
        let q = build_bundle(&g, &chron, 3).unwrap();
        assert_eq!(q.paths, vec![vec![1], vec![3], vec![5]]);
        assert_eq!(terminus(&chron, &q).members, chron.initial);
    }

    #[test]
    fn path_three() {
        let p3 = Graph::path(3).unwrap();
        let lex = chronological_list(&p3, VertexSet::singleton(1), Rule::Psd, &OrderPolicy::Lex).unwrap();
        let h = component_history(&p3, &lex, 2).unwrap();
        assert_eq!(h.t_x, 2);
        assert_eq!(h.comps, vec![VertexSet::singleton(2); 2]);
        let q = build_bundle(&p3, &lex, 2).unwrap();
        assert_eq!(q.paths, vec![vec![1, 2]]);
        assert_eq!(terminus(&lex, &q).members, VertexSet::singleton(2));

        let other = OrderPolicy::Replay(vec![Force::new(1, 2), Force::new(1, 0)]);
        let l2 = chronological_list(&p3, VertexSet::singleton(1), Rule::Psd, &other).unwrap();
        let q = build_bundle(&p3, &l2, 2).unwrap();
        assert_eq!(q.paths, vec![vec![1, 2]]);
        assert_eq!(q.t_x, 1);
    }

    #[test]
    fn unreached_vertex() {
        let p3 = Graph::path(3).unwrap();
        let empty = Chronology {
            initial: VertexSet::singleton(1),
            steps: vec![],
            rule: Rule::Standard,
        };
        assert_eq!(component_history(&p3, &empty, 0), Err(Error::Unreached(0)));
    }
}
