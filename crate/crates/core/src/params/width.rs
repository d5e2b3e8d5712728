//! Pathwidth and linear maximum-induced-matching width, exactly, by dynamic
//! programming over vertex subsets.

use super::layouts::check_layout_cap;
use crate::decomposition::PathDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{bits, brute_force_with, full, OracleCaps, Problem};

pub const PATHWIDTH_CAP: usize = 10;

/// Largest graph whose cuts [`LmimWitness`] certifies.
pub const LMIM_VERIFY_CAP: usize = 12;

/// A vertex ordering with the induced matching number of every cut.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LmimWitness {
    pub order: Vec<usize>,
    /// `cuts[i]`: cut between the first `i + 1` vertices and the rest.
    /// `None` when the graph was too large to certify.
    pub cuts: Option<Vec<usize>>,
    pub bound: usize,
}

impl LmimWitness {
    /// Cut values are known and none exceeds the bound.
    pub fn verified(&self) -> bool {
        self.cuts.as_ref().is_some_and(|c| c.iter().all(|&x| x <= self.bound))
    }

    /// The largest cut value, if certified.
    pub fn value(&self) -> Option<usize> {
        self.cuts.as_ref().map(|c| c.iter().copied().max().unwrap_or(0))
    }
}

/// The bipartite graph of edges between `side` and the other vertices.
fn cut_graph(g: &Graph, side: u128) -> Graph {
    let edges: Vec<(usize, usize)> =
        g.edges().into_iter().filter(|&(u, v)| (side >> u & 1) != (side >> v & 1)).collect();
    Graph::from_edges(g.n(), &edges).expect("edges of g")
}

/// Maximum induced matching of the cut between `side` and the rest.
pub(crate) fn cut_value(g: &Graph, side: u128) -> usize {
    let caps = OracleCaps { induced_matching: g.n(), ..OracleCaps::default() };
    brute_force_with(Problem::MaxInducedMatching, &cut_graph(g, side), &caps).expect("cap set to the graph size").value
}

/// Values of the `n - 1` cuts of `order`.
pub(crate) fn cut_values(g: &Graph, order: &[usize]) -> Vec<usize> {
    let mut side = 0u128;
    let mut out = Vec::new();
    for &v in order.iter().take(order.len().saturating_sub(1)) {
        side |= 1 << v;
        out.push(cut_value(g, side));
    }
    out
}

/// Reads an optimal ordering back out of a subset table, where `best[s]`
/// is the cost of the best ordering of the prefix set `s` and
/// `step(s, v)` the cost of putting `v` last in `s`.
fn trace(n: usize, best: &[usize], step: impl Fn(u128, usize) -> usize) -> Vec<usize> {
    let mut order = Vec::with_capacity(n);
    let mut s = full(n);
    while s != 0 {
        let v = bits(s).find(|&v| step(s, v) == best[s as usize]).expect("table is consistent");
        order.push(v);
        s &= !(1 << v);
    }
    order.reverse();
    order
}

/// Exact pathwidth with a decomposition of that width. Bag `i` holds the
/// `i`-th vertex of an optimal ordering and every earlier vertex that still
/// has a neighbour at or after it.
pub fn pathwidth_exact(g: &Graph) -> Result<(usize, PathDecomposition)> {
    let n = g.n();
    if n > PATHWIDTH_CAP {
        return Err(Error::CapExceeded { what: "pathwidth_exact vertex count", size: n, cap: PATHWIDTH_CAP });
    }
    let adj = g.masks();
    let all = full(n);
    let boundary = |s: u128| bits(s).filter(|&u| adj[u] & !s & all != 0).count();
    // largest bag when the vertices of `s` come first, in the best order
    let mut best = vec![0usize; 1 << n];
    let step = |best: &[usize], s: u128, v: usize| {
        let before = s & !(1 << v);
        best[before as usize].max(1 + boundary(before))
    };
    for s in 1..(1u128 << n) {
        best[s as usize] = bits(s).map(|v| step(&best, s, v)).min().unwrap();
    }
    let order = trace(n, &best, |s, v| step(&best, s, v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let bags = (0..n)
        .map(|i| {
            let mut bag: Vec<usize> =
                order[..i].iter().copied().filter(|&u| bits(adj[u]).any(|w| pos[w] >= i)).collect();
            bag.push(order[i]);
            bag
        })
        .collect();
    let pd = PathDecomposition::new(bags);
    Ok((best[all as usize].saturating_sub(1), pd))
}

/// Exact linear mim-width over all orderings, with an optimal ordering.
pub fn linear_mim_exact(g: &Graph) -> Result<(usize, LmimWitness)> {
    check_layout_cap("linear_mim_exact vertex count", g.n())?;
    let n = g.n();
    let cut: Vec<usize> = (0..1u128 << n).map(|s| cut_value(g, s)).collect();
    let mut best = vec![0usize; 1 << n];
    for s in 1..(1u128 << n) {
        best[s as usize] = cut[s as usize].max(bits(s).map(|v| best[(s & !(1 << v)) as usize]).min().unwrap());
    }
    let order = trace(n, &best, |s, v| cut[s as usize].max(best[(s & !(1 << v)) as usize]));
    let value = best[full(n) as usize];
    let cuts = cut_values(g, &order);
    Ok((value, LmimWitness { order, cuts: Some(cuts), bound: value }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named_graph, Family};

    fn named(f: Family, p: &[usize]) -> Graph {
        make_named_graph(f, p).unwrap()
    }

    #[test]
    fn pathwidth_examples() {
        for (g, pw) in [
            (named(Family::Path, &[5]), 1),
            (named(Family::Cycle, &[4]), 2),
            (named(Family::Complete, &[4]), 3),
            (named(Family::Star, &[5]), 1),
            (Graph::empty(3), 0),
            (named(Family::CompleteBipartite, &[3, 3]), 3),
        ] {
            let (v, pd) = pathwidth_exact(&g).unwrap();
            assert_eq!(v, pw);
            pd.validate(&g).unwrap();
            assert_eq!(pd.width(), pw);
        }
        assert!(pathwidth_exact(&Graph::empty(11)).unwrap_err().is_cap_exceeded());
    }

    #[test]
    fn lmim_examples() {
        let (v, w) = linear_mim_exact(&named(Family::Path, &[5])).unwrap();
        assert_eq!(v, 1);
        assert!(w.verified());
        let (v, _) = linear_mim_exact(&named(Family::Cycle, &[4])).unwrap();
        assert!((1..=2).contains(&v));
        let (v, _) = linear_mim_exact(&named(Family::CompleteBipartite, &[3, 3])).unwrap();
        assert!(v <= 3);
        assert_eq!(linear_mim_exact(&Graph::empty(4)).unwrap().0, 0);
    }

    #[test]
    fn cut_value_on_matching() {
        // 2K2 split across the cut has an induced matching of size 2
        let g = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(cut_value(&g, 0b0101), 2);
        assert_eq!(cut_value(&g, 0b0011), 0);
        assert_eq!(cut_values(&g, &[0, 2, 1, 3]), vec![1, 2, 1]);
    }
}
