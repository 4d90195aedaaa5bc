//! Exact forcing numbers by size-ascending exhaustive search.
//!
//! Candidates of each size are visited in lexicographic order, so the
//! witness is the lexicographically least minimum forcing set. Disconnected
//! graphs are solved per component; forcing numbers add over components and
//! the union of per-component lex-least witnesses is the global lex-least one.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::forcing::{is_forcing_set, Rule};
use crate::graph::Graph;
use crate::vertex_set::{Combinations, VertexSet, MAX_VERTICES};

/// Largest vertex count the solver accepts. Search is exponential, so
/// anything past about 20 vertices is impractical regardless.
pub const MAX_SOLVER_VERTICES: usize = MAX_VERTICES;

#[derive(Clone, Debug)]
pub struct SolverReport {
    pub rule: Rule,
    pub value: usize,
    pub witness: VertexSet,
    /// Candidate subsets passed to the closure oracle.
    pub tested: u64,
    pub elapsed: Duration,
}

pub fn forcing_number(g: &Graph, rule: Rule) -> Result<SolverReport> {
    if g.n() > MAX_SOLVER_VERTICES {
        return Err(Error::OutOfRange {
            what: "exact solver",
            max: MAX_SOLVER_VERTICES,
            n: g.n(),
        });
    }
    let start = Instant::now();
    let comps = g.components(g.vertices());
    let (value, witness, tested) = if comps.len() == 1 {
        search(g, rule)
    } else {
        let mut total = (0, VertexSet::EMPTY, 0);
        for c in comps {
            let (h, mapping) = g.induced_subgraph(c)?;
            let back: Vec<usize> = c.iter().collect();
            debug_assert!(back.iter().enumerate().all(|(i, &v)| mapping[v] == Some(i)));
            let (value, w, tested) = search(&h, rule);
            total.0 += value;
            total.1 = total.1.union(w.iter().map(|i| back[i]).collect());
            total.2 += tested;
        }
        total
    };
    Ok(SolverReport {
        rule,
        value,
        witness,
        tested,
        elapsed: start.elapsed(),
    })
}

fn search(g: &Graph, rule: Rule) -> (usize, VertexSet, u64) {
    let n = g.n();
    let mut tested = 0;
    for k in 1..=n {
        for s in Combinations::new(n, k) {
            tested += 1;
            if is_forcing_set(g, s, rule) {
                return (k, s, tested);
            }
        }
    }
    unreachable!("the full vertex set always forces")
}

/// Minimum forcing sets in lexicographic order, at most `cap` of them.
pub fn all_minimum_sets(g: &Graph, rule: Rule, cap: usize) -> Result<Vec<VertexSet>> {
    let value = forcing_number(g, rule)?.value;
    Ok(Combinations::new(g.n(), value)
        .filter(|&s| is_forcing_set(g, s, rule))
        .take(cap)
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enumerate_graphs;
    use crate::fixtures::two_diamonds;

    /// Brute force over every subset, independent of the size-ascending search.
    fn brute_minimum(g: &Graph, rule: Rule) -> usize {
        (0..1u64 << g.n())
            .map(VertexSet::from_bits)
            .filter(|&s| is_forcing_set(g, s, rule))
            .map(VertexSet::len)
            .min()
            .unwrap()
    }

    #[test]
    fn claw_numbers() {
        let star = Graph::star(3).unwrap();
        let psd = forcing_number(&star, Rule::Psd).unwrap();
        assert_eq!(psd.value, 1);
        assert_eq!(psd.witness, VertexSet::singleton(0));
        assert_eq!(psd.tested, 1);
        let std = forcing_number(&star, Rule::Standard).unwrap();
        assert_eq!(std.value, 2);
        assert_eq!(std.witness.to_vec(), vec![1, 2]);
    }

    #[test]
    fn paths_have_number_one() {
        for n in 1..=8 {
            let p = Graph::path(n).unwrap();
            assert_eq!(forcing_number(&p, Rule::Psd).unwrap().value, 1);
            assert_eq!(forcing_number(&p, Rule::Standard).unwrap().value, 1);
        }
    }

    #[test]
    fn two_diamonds_numbers() {
        let g = two_diamonds();
        assert_eq!(brute_minimum(&g, Rule::Psd), 3);
        assert_eq!(brute_minimum(&g, Rule::Standard), 3);
        assert_eq!(forcing_number(&g, Rule::Psd).unwrap().value, 3);
        assert_eq!(forcing_number(&g, Rule::Standard).unwrap().value, 3);
    }

    #[test]
    fn minimum_sets() {
        let p3 = Graph::path(3).unwrap();
        let sets = all_minimum_sets(&p3, Rule::Psd, 10).unwrap();
        assert_eq!(
            sets,
            vec![
                VertexSet::singleton(0),
                VertexSet::singleton(1),
                VertexSet::singleton(2)
            ]
        );

        let star = Graph::star(3).unwrap();
        let sets: Vec<Vec<usize>> = all_minimum_sets(&star, Rule::Standard, 10)
            .unwrap()
            .into_iter()
            .map(VertexSet::to_vec)
            .collect();
        assert_eq!(sets, vec![vec![1, 2], vec![1, 3], vec![2, 3]]);

        let one = all_minimum_sets(&two_diamonds(), Rule::Psd, 1).unwrap();
        assert_eq!(
            one,
            vec![forcing_number(&two_diamonds(), Rule::Psd).unwrap().witness]
        );
    }

    #[test]
    fn matches_brute_force_and_minimality() {
        for n in 1..=5 {
            for g in enumerate_graphs(n, false).unwrap() {
                for rule in [Rule::Standard, Rule::Psd] {
                    let r = forcing_number(&g, rule).unwrap();
                    assert_eq!(r.value, brute_minimum(&g, rule), "{g:?} {rule}");
                    assert!(is_forcing_set(&g, r.witness, rule));
                    assert_eq!(r.witness.len(), r.value);
                    // global lex-least among minimum sets
                    let least = Combinations::new(n, r.value)
                        .find(|&s| is_forcing_set(&g, s, rule))
                        .unwrap();
                    assert_eq!(r.witness, least);
                }
            }
        }
    }

    #[test]
    fn disconnected_is_additive() {
        let a = Graph::star(3).unwrap();
        let b = Graph::complete(3).unwrap();
        let u = a.disjoint_union(&b).unwrap();
        let z = forcing_number(&u, Rule::Standard).unwrap();
        assert_eq!(z.value, 2 + 2);
        assert_eq!(z.witness.to_vec(), vec![1, 2, 4, 5]);
        let zp = forcing_number(&u, Rule::Psd).unwrap();
        assert_eq!(zp.value, 1 + 2);
    }
}
