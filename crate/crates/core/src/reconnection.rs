//! Moving a minimum psd forcing set so that its complement becomes connected.
//!
//! One improvement step takes a psd forcing set `S` whose complement is
//! disconnected and a component `C` of `G - S`. With `S0 = N(C) ∩ S` and a
//! pivot `x ∈ S0` that has a neighbor outside `S0 ∪ C`, it finds the first
//! step `t` of a chronological list at which `N[x] ⊆ E[t] ∪ C`, reroutes the
//! force of step `t` so that `x` performs it, and takes the terminus of the
//! path bundle induced by the rerouted target. The new set has the same size,
//! avoids `C` and `x`, and the component of its complement containing `x`
//! strictly contains `C`. If `t = 0` instead, some `y ∈ S \ S0` can be dropped
//! from `S`, which shows `S` was not minimum.

use crate::bundle::{build_bundle, terminus, PathBundle};
use crate::error::{Error, Result};
use crate::forcing::{
    chronological_list, is_forcing_set, is_valid_force, valid_forces, Chronology, Force, OrderPolicy, Rule,
};
use crate::graph::Graph;
use crate::solver::forcing_number;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReconnectionStep {
    pub s: VertexSet,
    pub c: VertexSet,
    pub s0: VertexSet,
    pub x: usize,
    pub t: usize,
    pub w_star: usize,
    /// The lexicographic chronological list from `s`.
    pub list: Chronology,
    /// `list` with step `t` performed by `x`, continued to completion.
    pub spliced: Chronology,
    pub bundle: PathBundle,
    pub s_prime: VertexSet,
    /// Component of `G - s_prime` containing `x`.
    pub c_prime: VertexSet,
}

/// Certificate that a psd forcing set is not minimum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalityRefutation {
    pub y: usize,
    pub smaller: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Improvement {
    Step(Box<ReconnectionStep>),
    Refutation(MinimalityRefutation),
}

fn check_component(g: &Graph, s: VertexSet, c: VertexSet) -> Result<()> {
    let rest = s.complement(g.n());
    match c.first() {
        Some(v) if c.is_subset(rest) && g.component_of(rest, v) == c => Ok(()),
        _ => Err(Error::NotAComponent),
    }
}

/// `N(C) ∩ S`.
pub fn boundary_set(g: &Graph, s: VertexSet, c: VertexSet) -> Result<VertexSet> {
    check_component(g, s, c)?;
    Ok(g.neighborhood_of(c).intersection(s))
}

/// Least `x ∈ S0` adjacent to some vertex outside `S0 ∪ C`.
pub fn find_pivot(g: &Graph, s: VertexSet, c: VertexSet) -> Result<usize> {
    let s0 = boundary_set(g, s, c)?;
    let inside = s0.union(c);
    s0.iter()
        .find(|&x| !g.neighbors(x).difference(inside).is_empty())
        .ok_or(Error::NoPivot)
}

/// Least `t` with `N[x] ⊆ E[t] ∪ C`.
pub fn first_saturation_time(g: &Graph, f: &Chronology, x: usize, c: VertexSet) -> Result<usize> {
    let nx = g.closed_neighbors(x);
    f.expansion()
        .states
        .iter()
        .position(|&e| nx.is_subset(e.union(c)))
        .ok_or(Error::NeverSaturates(x))
}

pub fn improve_component(g: &Graph, s: VertexSet, c: VertexSet) -> Result<Improvement> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    check_component(g, s, c)?;
    if g.is_connected_on(s.complement(g.n())) {
        return Err(Error::ComplementConnected);
    }
    if !is_forcing_set(g, s, Rule::Psd) {
        return Err(Error::NotForcingSet);
    }
    let s0 = boundary_set(g, s, c)?;
    let x = find_pivot(g, s, c)?;
    let list = chronological_list(g, s, Rule::Psd, &OrderPolicy::Lex)?;
    let t = first_saturation_time(g, &list, x, c)?;

    if t == 0 {
        let y = g
            .neighbors(x)
            .difference(s0.union(c))
            .first()
            .ok_or(Error::NoPivot)?;
        let smaller = s.without(y);
        if !s.contains(y) || !is_forcing_set(g, smaller, Rule::Psd) {
            return Err(Error::Invariant(format!(
                "dropping {y} from a saturated boundary did not leave a forcing set"
            )));
        }
        return Ok(Improvement::Refutation(MinimalityRefutation { y, smaller }));
    }

    let w_star = list.steps[t - 1][0].target;
    if !g.is_adjacent(x, w_star) || c.contains(w_star) {
        return Err(Error::Invariant(format!(
            "vertex forced at saturation step {t} is not an outside neighbor of {x}"
        )));
    }
    let spliced = splice(g, &list, t, Force::new(x, w_star))?;
    let bundle = build_bundle(g, &spliced, w_star)?;
    let s_prime = terminus(&spliced, &bundle).members;
    let c_prime = g.component_of(s_prime.complement(g.n()), x);

    let fail = |what: &str| Err(Error::Invariant(format!("new set {s_prime:?}: {what}")));
    if !is_forcing_set(g, s_prime, Rule::Psd) {
        return fail("not a psd forcing set");
    }
    if s_prime.len() != s.len() {
        return fail("size changed");
    }
    if !s_prime.is_disjoint(c) {
        return fail("meets the component");
    }
    if s_prime.contains(x) {
        return fail("contains the pivot");
    }
    if !(c.is_subset(c_prime) && c != c_prime) {
        return fail("component did not grow");
    }
    Ok(Improvement::Step(Box::new(ReconnectionStep {
        s,
        c,
        s0,
        x,
        t,
        w_star,
        list,
        spliced,
        bundle,
        s_prime,
        c_prime,
    })))
}

/// Replaces the force of step `t` with `replacement` and continues to
/// completion, replaying the earliest original tail force that is still
/// valid at each step and falling back to the lexicographically least valid
/// force otherwise.
fn splice(g: &Graph, list: &Chronology, t: usize, replacement: Force) -> Result<Chronology> {
    let exp = list.expansion();
    let mut blue = exp.states[t - 1];
    if !is_valid_force(g, blue, replacement, Rule::Psd) {
        return Err(Error::Invariant(format!(
            "rerouted force {replacement:?} is not valid before step {t}"
        )));
    }
    let mut steps: Vec<Vec<Force>> = list.steps[..t - 1].to_vec();
    steps.push(vec![replacement]);
    blue.insert(replacement.target);

    let mut tail: Vec<Force> = list.steps[t..].iter().flatten().copied().collect();
    let all = g.vertices();
    while blue != all {
        tail.retain(|f| !blue.contains(f.target));
        let next = match tail.iter().position(|&f| is_valid_force(g, blue, f, Rule::Psd)) {
            Some(i) => tail.remove(i),
            None => *valid_forces(g, blue, Rule::Psd)
                .first()
                .ok_or(Error::IncompleteSchedule {
                    remaining: all.difference(blue).len(),
                })?,
        };
        blue.insert(next.target);
        steps.push(vec![next]);
    }
    Chronology::from_steps(g, list.initial, Rule::Psd, steps)
}

/// Outcome of repeated improvement steps.
#[derive(Clone, Debug)]
pub struct ReconnectionTrace {
    pub start: VertexSet,
    pub steps: Vec<ReconnectionStep>,
    pub result: VertexSet,
}

/// A minimum psd forcing set `S` with `G - S` connected.
pub fn connected_complement_set(g: &Graph) -> Result<VertexSet> {
    Ok(connected_complement_trace(g)?.result)
}

/// Runs the improvement loop from the solver's psd witness.
pub fn connected_complement_trace(g: &Graph) -> Result<ReconnectionTrace> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let start = forcing_number(g, Rule::Psd)?.witness;
    connected_complement_from(g, start)
}

/// Runs the improvement loop from a given psd forcing set. The first
/// component is the largest one of `G - s` (ties to the least member); after
/// that the grown component is carried forward. At most `n` iterations.
pub fn connected_complement_from(g: &Graph, start: VertexSet) -> Result<ReconnectionTrace> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut s = start;
    let mut steps = Vec::new();
    let mut c = None;
    while !g.is_connected_on(s.complement(g.n())) {
        if steps.len() >= g.n() {
            return Err(Error::Invariant(format!(
                "no connected complement after {} iterations",
                steps.len()
            )));
        }
        let comp = match c {
            Some(c) => c,
            None => largest_component(g, s),
        };
        match improve_component(g, s, comp)? {
            Improvement::Step(step) => {
                s = step.s_prime;
                c = Some(step.c_prime);
                steps.push(*step);
            }
            Improvement::Refutation(r) => {
                return Err(Error::Invariant(format!(
                    "start set is not minimum: {} can be dropped",
                    r.y
                )));
            }
        }
    }
    Ok(ReconnectionTrace {
        start,
        steps,
        result: s,
    })
}

fn largest_component(g: &Graph, s: VertexSet) -> VertexSet {
    // components are sorted by least member, so the first maximum wins ties
    g.components(s.complement(g.n()))
        .into_iter()
        .rev()
        .max_by_key(|c| c.len())
        .expect("complement is disconnected, hence nonempty")
}
