//! Bounded search trees for independent set and dominating set that branch
//! once per distinct label set.
//!
//! `nodes` counts the leaves of the search tree. With at most `2^d` branches
//! per level and depth at most `k`, it never exceeds `2^(kd)`.

use fixedbitset::FixedBitSet;

use crate::error::Result;
use crate::graph::Graph;
use crate::labels::LabelSet;
use crate::simrep::{ensure_valid, SimRep};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FptOutcome {
    pub found: bool,
    /// Sorted witness when `found`.
    pub witness: Option<Vec<usize>>,
    pub nodes: u64,
}

/// `2^(kd)`, saturating.
pub fn search_node_bound(k: usize, d: usize) -> u128 {
    let e = k.saturating_mul(d);
    if e >= 128 {
        u128::MAX
    } else {
        1u128 << e
    }
}

fn closed_nbhd(g: &Graph, v: usize) -> FixedBitSet {
    let mut s = g.adjacency(v).clone();
    s.insert(v);
    s
}

/// Decides whether `g` has an independent set of size `k`.
pub fn independent_set_fpt(g: &Graph, rep: &SimRep, k: usize) -> Result<FptOutcome> {
    ensure_valid(g, rep)?;
    struct Search<'a> {
        g: &'a Graph,
        rep: &'a SimRep,
        nodes: u64,
    }
    impl Search<'_> {
        fn go(&mut self, alive: &FixedBitSet, k: usize, chosen: &mut Vec<usize>) -> bool {
            if k == 0 {
                self.nodes += 1;
                return true;
            }
            // for every label set present, the alive vertex carrying it that ends first
            let mut firsts: Vec<(LabelSet, usize)> = Vec::new();
            for v in alive.ones() {
                let s = self.rep.labels(v);
                let key = |u: usize| (self.rep.interval(u).r, u);
                match firsts.iter_mut().find(|(t, _)| *t == s) {
                    Some(entry) => {
                        if key(v) < key(entry.1) {
                            entry.1 = v;
                        }
                    }
                    None => firsts.push((s, v)),
                }
            }
            if firsts.is_empty() {
                self.nodes += 1;
                return false;
            }
            firsts.sort_unstable();
            for (_, u) in firsts {
                let mut next = alive.clone();
                next.difference_with(&closed_nbhd(self.g, u));
                chosen.push(u);
                if self.go(&next, k - 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
    }
    let mut alive = FixedBitSet::with_capacity(g.n());
    alive.insert_range(..);
    let mut search = Search { g, rep, nodes: 0 };
    let mut chosen = Vec::new();
    let found = search.go(&alive, k, &mut chosen);
    chosen.sort_unstable();
    Ok(FptOutcome { found, witness: found.then_some(chosen), nodes: search.nodes })
}

/// Decides whether `g` has a dominating set of size at most `k`.
///
/// Isolated vertices are taken up front. Afterwards the search keeps the set
/// of dominated vertices (nothing is deleted), looks at the undominated
/// vertex `v` that ends first and, for every label set present in `N[v]`,
/// branches on the vertex of `N[v]` with that label set that ends last.
pub fn dominating_set_fpt(g: &Graph, rep: &SimRep, k: usize) -> Result<FptOutcome> {
    ensure_valid(g, rep)?;
    let isolated: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) == 0).collect();
    if isolated.len() > k {
        return Ok(FptOutcome { found: false, witness: None, nodes: 1 });
    }
    let mut dominated = FixedBitSet::with_capacity(g.n());
    for &v in &isolated {
        dominated.insert(v);
    }

    struct Search<'a> {
        g: &'a Graph,
        rep: &'a SimRep,
        nodes: u64,
    }
    impl Search<'_> {
        fn go(&mut self, dominated: &FixedBitSet, k: usize, chosen: &mut Vec<usize>) -> bool {
            let Some(v) =
                (0..self.g.n()).filter(|&v| !dominated.contains(v)).min_by_key(|&v| (self.rep.interval(v).r, v))
            else {
                self.nodes += 1;
                return true;
            };
            if k == 0 {
                self.nodes += 1;
                return false;
            }
            let mut lasts: Vec<(LabelSet, usize)> = Vec::new();
            for u in closed_nbhd(self.g, v).ones() {
                let s = self.rep.labels(u);
                let r = self.rep.interval(u).r;
                match lasts.iter_mut().find(|(t, _)| *t == s) {
                    Some(entry) => {
                        let (er, eu) = (self.rep.interval(entry.1).r, entry.1);
                        if r > er || (r == er && u < eu) {
                            entry.1 = u;
                        }
                    }
                    None => lasts.push((s, u)),
                }
            }
            lasts.sort_unstable();
            for (_, u) in lasts {
                let mut next = dominated.clone();
                next.union_with(&closed_nbhd(self.g, u));
                chosen.push(u);
                if self.go(&next, k - 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
            false
        }
    }
    let mut search = Search { g, rep, nodes: 0 };
    let mut chosen = isolated.clone();
    let found = search.go(&dominated, k - isolated.len(), &mut chosen);
    chosen.sort_unstable();
    Ok(FptOutcome { found, witness: found.then_some(chosen), nodes: search.nodes })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct_bipartite, construct_cycle, construct_from_edges};
    use crate::graph::{make_named_graph, Family};
    use crate::rational::Rational;
    use crate::simrep::Interval;

    #[test]
    fn cycle_and_bipartite_examples() {
        let (c5, rep) = construct_cycle(5).unwrap();
        assert!(independent_set_fpt(&c5, &rep, 2).unwrap().found);
        assert!(!independent_set_fpt(&c5, &rep, 3).unwrap().found);

        let k33 = make_named_graph(Family::CompleteBipartite, &[3, 3]).unwrap();
        let rep = construct_bipartite(&k33, (&[0, 1, 2], &[3, 4, 5])).unwrap();
        let out = independent_set_fpt(&k33, &rep, 3).unwrap();
        assert!(out.found);
        assert!(k33.is_independent(out.witness.as_ref().unwrap()));

        let star = make_named_graph(Family::Star, &[4]).unwrap();
        let rep = construct_from_edges(&star).unwrap();
        let out = dominating_set_fpt(&star, &rep, 1).unwrap();
        assert_eq!(out.witness, Some(vec![0]));

        let (c6, rep) = construct_cycle(6).unwrap();
        assert!(dominating_set_fpt(&c6, &rep, 2).unwrap().found);
        assert!(!dominating_set_fpt(&c6, &rep, 1).unwrap().found);
    }

    /// A graph where deleting the chosen vertex's neighbourhood loses the
    /// only good second pick: `u` dominates `v` and `z`, then `z` must still
    /// be available to dominate `y` and `y2`.
    #[test]
    fn dominated_vertices_stay_available() {
        let q = |p: i64, d: i64| Rational::new(p, d);
        let iv = |a: Rational, b: Rational| Interval::new(a, b).unwrap();
        let rep = SimRep::new(
            3,
            vec![
                iv(q(0, 1), q(2, 1)),
                iv(q(1, 1), q(4, 1)),
                iv(q(3, 1), q(6, 1)),
                iv(q(5, 1), q(7, 1)),
                iv(q(11, 2), q(15, 2)),
            ],
            vec![
                LabelSet::from_labels([1]),
                LabelSet::from_labels([1]),
                LabelSet::from_labels([1, 2, 3]),
                LabelSet::from_labels([2]),
                LabelSet::from_labels([3]),
            ],
        )
        .unwrap();
        let g = rep.graph();
        let out = dominating_set_fpt(&g, &rep, 2).unwrap();
        assert!(out.found);
        assert!(g.is_dominating(out.witness.as_ref().unwrap()));
    }

    #[test]
    fn isolated_and_empty() {
        let g = Graph::empty(3);
        let rep = SimRep::new(0, vec![Interval::int(0, 1); 3], vec![LabelSet::EMPTY; 3]).unwrap();
        assert!(!dominating_set_fpt(&g, &rep, 2).unwrap().found);
        assert_eq!(dominating_set_fpt(&g, &rep, 3).unwrap().witness, Some(vec![0, 1, 2]));
        let is = independent_set_fpt(&g, &rep, 3).unwrap();
        assert!(is.found && is.nodes <= search_node_bound(3, 0) as u64);
        let e = Graph::empty(0);
        let rep0 = SimRep::new(0, vec![], vec![]).unwrap();
        assert!(dominating_set_fpt(&e, &rep0, 0).unwrap().found);
        assert!(!independent_set_fpt(&e, &rep0, 1).unwrap().found);
    }
}
