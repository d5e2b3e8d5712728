//! Maximal cliques read off a representation.

use std::collections::HashSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labels::LabelSet;
use crate::rational::Rational;
use crate::simrep::{ensure_valid, SimRep};

/// Cap on the number of distinct nonempty label sets; the selection search
/// is exponential in it.
pub const MAX_DISTINCT_LABEL_SETS: usize = 24;

/// `2^(2^d) * n`, saturating.
pub fn clique_count_bound(d: usize, n: usize) -> u128 {
    if d >= 7 {
        return u128::MAX;
    }
    (1u128 << (1usize << d)).saturating_mul(n as u128)
}

/// Pairwise-intersecting selections of `sets`, each a list of indices.
fn intersecting_selections(sets: &[LabelSet]) -> Vec<Vec<usize>> {
    fn grow(sets: &[LabelSet], from: usize, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        for i in from..sets.len() {
            if chosen.iter().all(|&c| sets[c].intersects(sets[i])) {
                chosen.push(i);
                out.push(chosen.clone());
                grow(sets, i + 1, chosen, out);
                chosen.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(sets, 0, &mut Vec::new(), &mut out);
    out
}

/// Maximal cliques of the interval graph on `vertices`. At equal coordinates
/// intervals close before others open, since touching intervals are disjoint.
pub(crate) fn interval_maximal_cliques(rep: &SimRep, vertices: &[usize]) -> Vec<Vec<usize>> {
    // (coordinate, 0 = close / 1 = open, vertex)
    let mut events: Vec<(Rational, u8, usize)> = Vec::with_capacity(2 * vertices.len());
    for &v in vertices {
        let i = rep.interval(v);
        events.push((i.l, 1, v));
        events.push((i.r, 0, v));
    }
    events.sort_unstable();
    let mut active: Vec<usize> = Vec::new();
    let mut grew = false;
    let mut out = Vec::new();
    for (_, kind, v) in events {
        if kind == 1 {
            active.push(v);
            grew = true;
        } else {
            if grew {
                let mut c = active.clone();
                c.sort_unstable();
                out.push(c);
                grew = false;
            }
            active.retain(|&u| u != v);
        }
    }
    out
}

fn is_maximal(g: &Graph, clique: &[usize]) -> bool {
    let Some(&first) = clique.first() else {
        return g.n() == 0;
    };
    !g.neighbors(first).any(|w| clique.iter().all(|&u| u == w || g.has_edge(u, w)) && !clique.contains(&w))
}

/// Every maximal clique of `g`, found by sweeping the intervals of each
/// pairwise-intersecting selection of label sets. Sorted, without duplicates.
pub fn enumerate_maximal_cliques(g: &Graph, rep: &SimRep) -> Result<Vec<Vec<usize>>> {
    ensure_valid(g, rep)?;
    let sets: Vec<LabelSet> = rep.distinct_label_sets().into_iter().filter(|s| !s.is_empty()).collect();
    if sets.len() > MAX_DISTINCT_LABEL_SETS {
        return Err(Error::CapExceeded {
            what: "distinct label sets for clique enumeration",
            size: sets.len(),
            cap: MAX_DISTINCT_LABEL_SETS,
        });
    }
    let members: Vec<Vec<usize>> =
        sets.iter().map(|s| (0..rep.n()).filter(|&v| rep.labels(v) == *s).collect()).collect();
    let selections = intersecting_selections(&sets);
    let found: HashSet<Vec<usize>> = selections
        .par_iter()
        .flat_map_iter(|sel| {
            let vertices: Vec<usize> = sel.iter().flat_map(|&i| members[i].iter().copied()).collect();
            interval_maximal_cliques(rep, &vertices).into_iter().filter(|c| is_maximal(g, c)).collect::<Vec<_>>()
        })
        .chain((0..g.n()).into_par_iter().filter(|&v| g.degree(v) == 0).map(|v| vec![v]))
        .collect();
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort();
    Ok(out)
}

/// A clique of maximum total weight; among equal weights the
/// lexicographically first maximal clique wins.
pub fn max_weight_clique(g: &Graph, rep: &SimRep) -> Result<(Rational, Vec<usize>)> {
    let cliques = enumerate_maximal_cliques(g, rep)?;
    let mut best = (Rational::ZERO, Vec::new());
    for c in cliques {
        let w: Rational = c.iter().map(|&v| g.weight(v)).sum();
        if w > best.0 {
            best = (w, c);
        }
    }
    Ok(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct_from_ecc, construct_from_edges};
    use crate::cover::ecc_greedy;
    use crate::graph::{make_named_graph, Family};
    use crate::simrep::fixtures::c4;

    #[test]
    fn triangle_and_c4() {
        let k3 = make_named_graph(Family::Complete, &[3]).unwrap();
        let rep = construct_from_edges(&k3).unwrap();
        assert_eq!(enumerate_maximal_cliques(&k3, &rep).unwrap(), vec![vec![0, 1, 2]]);
        let (g, rep) = c4();
        assert_eq!(enumerate_maximal_cliques(&g, &rep).unwrap(), vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn complement_of_matching_has_power_of_two_cliques() {
        let g = make_named_graph(Family::ComplementOfMatching, &[6]).unwrap();
        let rep = construct_from_ecc(&g, &ecc_greedy(&g).unwrap()).unwrap();
        let cliques = enumerate_maximal_cliques(&g, &rep).unwrap();
        assert_eq!(cliques.len(), 8);
        assert!(cliques.len() as u128 <= clique_count_bound(rep.d(), g.n()));
    }

    #[test]
    fn touching_intervals_split_cliques() {
        let rep = SimRep::new(
            1,
            vec![crate::Interval::int(0, 1), crate::Interval::int(1, 2), crate::Interval::int(0, 2)],
            vec![LabelSet::singleton(1); 3],
        )
        .unwrap();
        let g = rep.graph();
        assert_eq!(enumerate_maximal_cliques(&g, &rep).unwrap(), vec![vec![0, 2], vec![1, 2]]);
    }

    #[test]
    fn isolated_vertices_are_cliques() {
        let g = Graph::empty(2);
        let rep = SimRep::new(0, vec![crate::Interval::int(0, 1); 2], vec![LabelSet::EMPTY; 2]).unwrap();
        assert_eq!(enumerate_maximal_cliques(&g, &rep).unwrap(), vec![vec![0], vec![1]]);
    }

    #[test]
    fn weighted() {
        let k3 = make_named_graph(Family::Complete, &[3]).unwrap();
        let k3 = k3.with_weights(vec![Rational::integer(1), Rational::integer(2), Rational::integer(3)]).unwrap();
        let rep = construct_from_edges(&k3).unwrap();
        assert_eq!(max_weight_clique(&k3, &rep).unwrap(), (Rational::integer(6), vec![0, 1, 2]));
        let k4 = make_named_graph(Family::Complete, &[4]).unwrap();
        let rep = construct_from_edges(&k4).unwrap();
        assert_eq!(max_weight_clique(&k4, &rep).unwrap().0, Rational::integer(4));
    }

    #[test]
    fn bound_saturates() {
        assert_eq!(clique_count_bound(0, 5), 10);
        assert_eq!(clique_count_bound(2, 3), 48);
        assert_eq!(clique_count_bound(7, 1), u128::MAX);
        assert_eq!(clique_count_bound(6, 2), 1 << 65);
    }
}
