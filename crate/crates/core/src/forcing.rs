//! Color change rules, chronologies of forces, and closure.
//!
//! A chronology is a sequence of steps; step `t` (1-based) is a set of forces
//! applied simultaneously to the blue set `E[t-1]`, producing `E[t]`. Every
//! force in a step must be valid for `E[t-1]` and no vertex may be the target
//! of two forces in one step. A chronology with exactly one force per step is
//! a chronological list.

use std::fmt;

use rand::seq::{IndexedRandom, SliceRandom};
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rule {
    /// A blue vertex forces its unique white neighbor.
    Standard,
    /// A blue vertex forces `v` when `v` is its only neighbor inside `v`'s
    /// component of the white subgraph.
    Psd,
}

impl Rule {
    pub fn as_str(self) -> &'static str {
        match self {
            Rule::Standard => "standard",
            Rule::Psd => "psd",
        }
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Rule {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "standard" => Ok(Rule::Standard),
            "psd" => Ok(Rule::Psd),
            other => Err(format!("unknown rule {other:?} (expected standard or psd)")),
        }
    }
}

/// `source -> target`. Ordered by source, then target.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Force {
    pub source: usize,
    pub target: usize,
}

impl Force {
    pub fn new(source: usize, target: usize) -> Self {
        Force { source, target }
    }
}

impl fmt::Debug for Force {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}->{}", self.source, self.target)
    }
}

/// Blue set at a given time step; every other vertex is white.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ColorState {
    pub blue: VertexSet,
    pub time: usize,
}

impl ColorState {
    pub fn new(blue: VertexSet) -> Self {
        ColorState { blue, time: 0 }
    }

    pub fn white(&self, g: &Graph) -> VertexSet {
        self.blue.complement(g.n())
    }
}

/// Whether `force` is valid under `rule` when exactly `blue` is blue.
pub fn is_valid_force(g: &Graph, blue: VertexSet, force: Force, rule: Rule) -> bool {
    let Force { source, target } = force;
    if source >= g.n() || target >= g.n() {
        return false;
    }
    if !blue.contains(source) || blue.contains(target) || !g.is_adjacent(source, target) {
        return false;
    }
    let white = blue.complement(g.n());
    let scope = match rule {
        Rule::Standard => white,
        Rule::Psd => g.component_of(white, target),
    };
    g.neighbors(source).intersection(scope) == VertexSet::singleton(target)
}

/// All valid forces for the blue set `blue`, sorted by `(source, target)`.
pub fn valid_forces(g: &Graph, blue: VertexSet, rule: Rule) -> Vec<Force> {
    let white = blue.complement(g.n());
    let mut out = Vec::new();
    match rule {
        Rule::Standard => {
            for u in blue {
                let w = g.neighbors(u).intersection(white);
                if w.len() == 1 {
                    out.push(Force::new(u, w.first().unwrap()));
                }
            }
        }
        Rule::Psd => {
            let comps = g.components(white);
            for u in blue {
                let nu = g.neighbors(u);
                for &c in &comps {
                    let hit = nu.intersection(c);
                    if hit.len() == 1 {
                        out.push(Force::new(u, hit.first().unwrap()));
                    }
                }
            }
            out.sort_unstable();
        }
    }
    out
}

/// Targets of all valid forces, without materializing the forces.
fn valid_targets(g: &Graph, blue: VertexSet, rule: Rule) -> VertexSet {
    let white = blue.complement(g.n());
    let mut targets = VertexSet::EMPTY;
    match rule {
        Rule::Standard => {
            for u in g.neighborhood_of(white).intersection(blue) {
                let w = g.neighbors(u).intersection(white);
                if w.len() == 1 {
                    targets = targets.union(w);
                }
            }
        }
        Rule::Psd => {
            let mut rest = white;
            while let Some(v) = rest.first() {
                let c = g.component_of(rest, v);
                rest = rest.difference(c);
                for u in g.neighborhood_of(c).intersection(blue) {
                    let hit = g.neighbors(u).intersection(c);
                    if hit.len() == 1 {
                        targets = targets.union(hit);
                    }
                }
            }
        }
    }
    targets
}

/// Final blue set of the greedy all-forces schedule. Same result as
/// [`closure`] without recording the chronology.
pub fn closure_blue(g: &Graph, initial: VertexSet, rule: Rule) -> VertexSet {
    let mut blue = initial.intersection(g.vertices());
    loop {
        let t = valid_targets(g, blue, rule);
        if t.is_empty() {
            return blue;
        }
        blue = blue.union(t);
    }
}

pub fn is_forcing_set(g: &Graph, b: VertexSet, rule: Rule) -> bool {
    closure_blue(g, b, rule) == g.vertices()
}

fn check_step(g: &Graph, blue: VertexSet, chosen: &[Force], rule: Rule, step: usize) -> Result<VertexSet> {
    let mut targets = VertexSet::EMPTY;
    for &f in chosen {
        if targets.contains(f.target) {
            return Err(Error::DuplicateTarget {
                target: f.target,
                step,
            });
        }
        targets.insert(f.target);
    }
    if let Some(&f) = chosen.iter().find(|&&f| !is_valid_force(g, blue, f, rule)) {
        return Err(Error::InvalidForce {
            forcer: f.source,
            target: f.target,
            step,
        });
    }
    Ok(targets)
}

/// Applies one step of simultaneous forces.
pub fn apply_step(g: &Graph, state: ColorState, chosen: &[Force], rule: Rule) -> Result<ColorState> {
    let targets = check_step(g, state.blue, chosen, rule, state.time + 1)?;
    Ok(ColorState {
        blue: state.blue.union(targets),
        time: state.time + 1,
    })
}

/// A (relaxed) chronology of forces: `steps[t-1]` holds the forces of step `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Chronology {
    pub initial: VertexSet,
    pub steps: Vec<Vec<Force>>,
    pub rule: Rule,
}

/// `states[t]` is the blue set after step `t`; `states[0]` is the initial set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionSequence {
    pub states: Vec<VertexSet>,
}

impl ExpansionSequence {
    pub fn tau(&self) -> usize {
        self.states.len() - 1
    }

    pub fn last(&self) -> VertexSet {
        *self.states.last().expect("expansion sequences start with E[0]")
    }
}

impl Chronology {
    /// Validates `steps` against `g`: every step nonempty, every force valid
    /// for the blue set before its step, targets distinct within a step.
    pub fn from_steps(g: &Graph, initial: VertexSet, rule: Rule, steps: Vec<Vec<Force>>) -> Result<Self> {
        let mut blue = initial;
        for (i, step) in steps.iter().enumerate() {
            if step.is_empty() {
                return Err(Error::IncompleteSchedule {
                    remaining: blue.complement(g.n()).len(),
                });
            }
            blue = blue.union(check_step(g, blue, step, rule, i + 1)?);
        }
        Ok(Chronology { initial, steps, rule })
    }

    /// Number of steps, i.e. the terminal time step.
    pub fn tau(&self) -> usize {
        self.steps.len()
    }

    pub fn expansion(&self) -> ExpansionSequence {
        let mut states = Vec::with_capacity(self.steps.len() + 1);
        let mut blue = self.initial;
        states.push(blue);
        for step in &self.steps {
            for f in step {
                blue.insert(f.target);
            }
            states.push(blue);
        }
        ExpansionSequence { states }
    }

    pub fn final_blue(&self) -> VertexSet {
        self.steps
            .iter()
            .flatten()
            .fold(self.initial, |b, f| b.with(f.target))
    }

    /// Whether no valid force remains after the last step.
    pub fn is_terminal(&self, g: &Graph) -> bool {
        valid_forces(g, self.final_blue(), self.rule).is_empty()
    }

    pub fn is_list(&self) -> bool {
        self.steps.iter().all(|s| s.len() == 1)
    }

    /// The step (1-based) at which `v` turns blue; 0 for initial vertices.
    pub fn time_of(&self, v: usize) -> Option<usize> {
        if self.initial.contains(v) {
            return Some(0);
        }
        self.steps
            .iter()
            .position(|s| s.iter().any(|f| f.target == v))
            .map(|i| i + 1)
    }

    /// All forces paired with their 1-based step.
    pub fn forces(&self) -> impl Iterator<Item = (usize, Force)> + '_ {
        self.steps
            .iter()
            .enumerate()
            .flat_map(|(i, s)| s.iter().map(move |&f| (i + 1, f)))
    }
}

/// Greedy maximal schedule: each step applies every valid force, with a
/// target claimed by several sources going to the smallest source.
pub fn closure(g: &Graph, initial: VertexSet, rule: Rule) -> (Chronology, ExpansionSequence) {
    let initial = initial.intersection(g.vertices());
    let mut blue = initial;
    let mut steps = Vec::new();
    loop {
        let mut claimed = VertexSet::EMPTY;
        let step: Vec<Force> = valid_forces(g, blue, rule)
            .into_iter()
            .filter(|f| {
                let fresh = !claimed.contains(f.target);
                claimed.insert(f.target);
                fresh
            })
            .collect();
        if step.is_empty() {
            break;
        }
        blue = blue.union(claimed);
        steps.push(step);
    }
    let chron = Chronology { initial, steps, rule };
    debug_assert!(chron.is_terminal(g));
    let exp = chron.expansion();
    (chron, exp)
}

/// Force order for [`chronological_list`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderPolicy {
    /// Always the valid force with the smallest `(source, target)`.
    Lex,
    /// Apply the supplied forces in order, one per step.
    Replay(Vec<Force>),
}

/// A chronological list (one force per step) that turns every vertex blue.
pub fn chronological_list(g: &Graph, b: VertexSet, rule: Rule, policy: &OrderPolicy) -> Result<Chronology> {
    if !is_forcing_set(g, b, rule) {
        return Err(Error::NotForcingSet);
    }
    let all = g.vertices();
    let mut blue = b;
    let mut steps = Vec::new();
    match policy {
        OrderPolicy::Lex => {
            while blue != all {
                let f = valid_forces(g, blue, rule)[0];
                blue.insert(f.target);
                steps.push(vec![f]);
            }
        }
        OrderPolicy::Replay(list) => {
            for (i, &f) in list.iter().enumerate() {
                if !is_valid_force(g, blue, f, rule) {
                    return Err(Error::InvalidForce {
                        forcer: f.source,
                        target: f.target,
                        step: i + 1,
                    });
                }
                blue.insert(f.target);
                steps.push(vec![f]);
            }
            if blue != all {
                return Err(Error::IncompleteSchedule {
                    remaining: all.difference(blue).len(),
                });
            }
        }
    }
    Ok(Chronology {
        initial: b,
        steps,
        rule,
    })
}

/// Forces of each step with both endpoints in `h`. Empty steps are kept so
/// step indices line up with the original chronology.
pub fn restrict_chronology(f: &Chronology, h: VertexSet) -> Vec<Vec<Force>> {
    f.steps
        .iter()
        .map(|s| {
            s.iter()
                .copied()
                .filter(|x| h.contains(x.source) && h.contains(x.target))
                .collect()
        })
        .collect()
}

/// A random terminal chronology from `initial`.
///
/// With `one_per_step` the result is a chronological list. Otherwise each
/// step applies a random nonempty set of distinct-target forces, each with
/// a randomly chosen source among the valid ones.
pub fn random_chronology<R: Rng + ?Sized>(
    g: &Graph,
    initial: VertexSet,
    rule: Rule,
    one_per_step: bool,
    rng: &mut R,
) -> Chronology {
    let initial = initial.intersection(g.vertices());
    let mut blue = initial;
    let mut steps = Vec::new();
    loop {
        let valid = valid_forces(g, blue, rule);
        if valid.is_empty() {
            break;
        }
        let step = if one_per_step {
            vec![*valid.choose(rng).unwrap()]
        } else {
            let mut by_target: Vec<Vec<Force>> = Vec::new();
            let mut targets: Vec<usize> = valid.iter().map(|f| f.target).collect();
            targets.sort_unstable();
            targets.dedup();
            for &t in &targets {
                by_target.push(valid.iter().copied().filter(|f| f.target == t).collect());
            }
            by_target.shuffle(rng);
            let keep = rng.random_range(1..=by_target.len());
            let mut step: Vec<Force> = by_target[..keep]
                .iter()
                .map(|options| *options.choose(rng).unwrap())
                .collect();
            step.sort_unstable();
            step
        };
        for f in &step {
            blue.insert(f.target);
        }
        steps.push(step);
    }
    Chronology { initial, steps, rule }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_graphs;
    use crate::fixtures::{labeled, two_diamonds};
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn f(s: usize, t: usize) -> Force {
        Force::new(s - 1, t - 1)
    }

    #[test]
    fn two_diamonds_first_step_forces() {
        let g = two_diamonds();
        let b = labeled(&[2, 4, 6]);
        assert_eq!(valid_forces(&g, b, Rule::Psd), vec![f(4, 3), f(4, 5)]);
        assert!(valid_forces(&g, b, Rule::Standard).is_empty());

        let b2 = labeled(&[2, 3, 4, 5, 6]);
        assert_eq!(valid_forces(&g, b2, Rule::Psd), vec![f(2, 1), f(3, 1), f(5, 7)]);
        assert!(valid_forces(&g, g.vertices(), Rule::Psd).is_empty());
        assert!(valid_forces(&g, g.vertices(), Rule::Standard).is_empty());
    }

    #[test]
    fn apply_step_examples() {
        let g = two_diamonds();
        let s0 = ColorState::new(labeled(&[2, 4, 6]));
        let s1 = apply_step(&g, s0, &[f(4, 3), f(4, 5)], Rule::Psd).unwrap();
        assert_eq!(s1.blue, labeled(&[2, 3, 4, 5, 6]));
        assert_eq!(s1.time, 1);

        let same = apply_step(&g, s0, &[], Rule::Psd).unwrap();
        assert_eq!((same.blue, same.time), (s0.blue, 1));

        let b = labeled(&[2, 3, 4, 5, 6]);
        let dup = apply_step(&g, ColorState::new(b), &[f(2, 1), f(3, 1)], Rule::Psd);
        assert_eq!(dup, Err(Error::DuplicateTarget { target: 0, step: 1 }));
        let dup = apply_step(&g, s0, &[f(4, 3), f(2, 3)], Rule::Psd);
        assert_eq!(dup, Err(Error::DuplicateTarget { target: 2, step: 1 }));
        let bad = apply_step(&g, s0, &[f(6, 8)], Rule::Psd);
        assert!(matches!(bad, Err(Error::InvalidForce { .. })));
    }

    #[test]
    fn two_diamonds_closure() {
        let g = two_diamonds();
        let (chron, exp) = closure(&g, labeled(&[2, 4, 6]), Rule::Psd);
        assert_eq!(chron.tau(), 3);
        assert_eq!(
            chron.steps,
            vec![vec![f(4, 3), f(4, 5)], vec![f(2, 1), f(5, 7)], vec![f(6, 8)]]
        );
        assert_eq!(exp.states[1], labeled(&[2, 3, 4, 5, 6]));
        assert_eq!(exp.states[2], labeled(&[1, 2, 3, 4, 5, 6, 7]));
        assert_eq!(exp.states[3], g.vertices());
        assert!(chron.is_terminal(&g));
        assert!(is_forcing_set(&g, labeled(&[2, 4, 6]), Rule::Psd));
    }

    #[test]
    fn path_closures() {
        let p3 = Graph::path(3).unwrap();
        let mid = VertexSet::singleton(1);
        let (c, e) = closure(&p3, mid, Rule::Standard);
        assert_eq!(c.tau(), 0);
        assert_eq!(e.last(), mid);

        let (c, e) = closure(&p3, mid, Rule::Psd);
        assert_eq!(c.steps, vec![vec![Force::new(1, 0), Force::new(1, 2)]]);
        assert_eq!(e.last(), p3.vertices());
    }

    #[test]
    fn star_center() {
        let star = Graph::star(3).unwrap();
        let c = VertexSet::singleton(0);
        assert!(is_forcing_set(&star, c, Rule::Psd));
        assert!(!is_forcing_set(&star, c, Rule::Standard));
        assert!(is_forcing_set(&star, star.vertices(), Rule::Standard));
        assert!(!is_forcing_set(&star, VertexSet::EMPTY, Rule::Psd));
    }

    #[test]
    fn chronological_lists() {
        let p3 = Graph::path(3).unwrap();
        let l = chronological_list(&p3, VertexSet::singleton(1), Rule::Psd, &OrderPolicy::Lex).unwrap();
        assert_eq!(l.steps, vec![vec![Force::new(1, 0)], vec![Force::new(1, 2)]]);
        assert!(l.is_list());

        let g = two_diamonds();
        let l = chronological_list(&g, labeled(&[2, 4, 6]), Rule::Psd, &OrderPolicy::Lex).unwrap();
        assert_eq!(l.tau(), 5);
        assert_eq!(l.steps[0], vec![f(4, 3)]);

        let replay = OrderPolicy::Replay(vec![f(4, 3), f(6, 8)]);
        assert_eq!(
            chronological_list(&g, labeled(&[2, 4, 6]), Rule::Psd, &replay),
            Err(Error::InvalidForce {
                forcer: 5,
                target: 7,
                step: 2
            })
        );
        let short = OrderPolicy::Replay(vec![f(4, 3)]);
        assert!(matches!(
            chronological_list(&g, labeled(&[2, 4, 6]), Rule::Psd, &short),
            Err(Error::IncompleteSchedule { remaining: 4 })
        ));
        assert_eq!(
            chronological_list(&g, labeled(&[2]), Rule::Psd, &OrderPolicy::Lex),
            Err(Error::NotForcingSet)
        );
    }

    #[test]
    fn restriction() {
        let g = two_diamonds();
        let fig = Chronology::from_steps(
            &g,
            labeled(&[2, 4, 6]),
            Rule::Psd,
            vec![vec![f(4, 3), f(4, 5)], vec![f(3, 1), f(5, 7)], vec![f(6, 8)]],
        )
        .unwrap();
        assert_eq!(
            restrict_chronology(&fig, labeled(&[2, 4, 5, 6, 7])),
            vec![vec![f(4, 5)], vec![f(5, 7)], vec![]]
        );
        assert_eq!(restrict_chronology(&fig, g.vertices()), fig.steps);
        assert_eq!(
            restrict_chronology(&fig, VertexSet::EMPTY),
            vec![Vec::<Force>::new(); 3]
        );
    }

    #[test]
    fn from_steps_rejects_bad_input() {
        let g = two_diamonds();
        let b = labeled(&[2, 4, 6]);
        assert!(Chronology::from_steps(&g, b, Rule::Psd, vec![vec![f(6, 8)]]).is_err());
        assert!(Chronology::from_steps(&g, b, Rule::Psd, vec![vec![]]).is_err());
    }

    #[test]
    fn rule_dominance_small_graphs() {
        for n in 1..=5 {
            for g in enumerate_graphs(n, false).unwrap() {
                for bits in 0..1u64 << n {
                    let b = VertexSet::from_bits(bits);
                    let std = valid_forces(&g, b, Rule::Standard);
                    let psd = valid_forces(&g, b, Rule::Psd);
                    assert!(std.iter().all(|x| psd.contains(x)));
                    if is_forcing_set(&g, b, Rule::Standard) {
                        assert!(is_forcing_set(&g, b, Rule::Psd));
                    }
                }
            }
        }
    }

    #[test]
    fn expansion_and_psd_step_shape() {
        let mut rng = StdRng::seed_from_u64(7);
        for g in enumerate_graphs(5, false).unwrap().step_by(7) {
            for bits in [0b1u64, 0b11, 0b101, 0b10010] {
                let b = VertexSet::from_bits(bits);
                let (chron, exp) = closure(&g, b, Rule::Psd);
                for w in exp.states.windows(2) {
                    assert!(w[0].is_subset(w[1]) && w[0] != w[1]);
                }
                let r = random_chronology(&g, b, Rule::Psd, false, &mut rng);
                let r_exp = r.expansion();
                for (t, step) in r.steps.iter().enumerate() {
                    let white = r_exp.states[t].complement(g.n());
                    for c in g.components(white) {
                        for u in 0..g.n() {
                            let hits = step
                                .iter()
                                .filter(|x| x.source == u && c.contains(x.target))
                                .count();
                            assert!(hits <= 1);
                        }
                    }
                }
                assert_eq!(r_exp.last(), exp.last());
                assert_eq!(chron.final_blue(), closure_blue(&g, b, Rule::Psd));
            }
        }
    }
}
