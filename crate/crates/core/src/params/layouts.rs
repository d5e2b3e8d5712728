//! Interval layouts: the search space for the exact layout-based parameters.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::full;
use crate::simrep::Interval;

/// Largest vertex count for layout-based searches.
pub const LAYOUT_CAP: usize = 7;

pub(crate) fn check_layout_cap(what: &'static str, n: usize) -> Result<()> {
    if n > LAYOUT_CAP {
        return Err(Error::CapExceeded { what, size: n, cap: LAYOUT_CAP });
    }
    Ok(())
}

/// An order type of `n` open intervals with distinct endpoints. Vertices are
/// numbered in the order their intervals open and endpoints run over `1..=2n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntervalLayout {
    pub endpoints: Vec<(usize, usize)>,
}

impl IntervalLayout {
    pub fn n(&self) -> usize {
        self.endpoints.len()
    }

    pub fn intervals(&self) -> Vec<Interval> {
        self.endpoints.iter().map(|&(l, r)| Interval::int(l as i64, r as i64)).collect()
    }

    pub fn graph(&self) -> Graph {
        let mut g = Graph::empty(self.n());
        let iv = self.intervals();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if iv[u].intersects(&iv[v]) {
                    g.add_edge(u, v).expect("fresh edge");
                }
            }
        }
        g
    }
}

/// Every layout on `n` vertices; there are `(2n-1)!!` of them.
pub fn enumerate_interval_layouts(n: usize) -> Result<Vec<IntervalLayout>> {
    check_layout_cap("interval layout enumeration", n)?;
    fn go(
        n: usize,
        pos: usize,
        next: usize,
        open: &mut Vec<usize>,
        ends: &mut Vec<(usize, usize)>,
        out: &mut Vec<IntervalLayout>,
    ) {
        if pos > 2 * n {
            out.push(IntervalLayout { endpoints: ends.clone() });
            return;
        }
        if next < n {
            ends.push((pos, 0));
            open.push(next);
            go(n, pos + 1, next + 1, open, ends, out);
            open.pop();
            ends.pop();
        }
        for i in 0..open.len() {
            let v = open.remove(i);
            ends[v].1 = pos;
            go(n, pos + 1, next, open, ends, out);
            ends[v].1 = 0;
            open.insert(i, v);
        }
    }
    let mut out = Vec::new();
    go(n, 1, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
    Ok(out)
}

/// An interval supergraph `F` of the target graph together with a layout
/// realising it: vertex `v` occupies `(2 open[v], 2 close[v] + 1)`.
#[derive(Clone, Debug)]
pub(crate) struct Supergraph {
    pub adj: Vec<u128>,
    pub open: Vec<usize>,
    pub close: Vec<usize>,
}

impl Supergraph {
    pub fn intervals(&self) -> Vec<Interval> {
        (0..self.adj.len()).map(|v| Interval::int(2 * self.open[v] as i64, 2 * self.close[v] as i64 + 1)).collect()
    }

    /// The open set at every step. Each maximal clique of `F` is among them.
    pub fn bags(&self) -> Vec<u128> {
        let steps = self.close.iter().copied().max().map_or(0, |s| s + 1);
        (0..steps)
            .map(|s| {
                (0..self.adj.len()).filter(|&v| self.open[v] <= s && s <= self.close[v]).fold(0u128, |m, v| m | 1 << v)
            })
            .collect()
    }
}

/// Every interval graph `F` on the vertices of `g` with `E(g) ⊆ E(F)`, each
/// once, in a fixed order. Layouts are built as alternating blocks of opening
/// and closing vertices; a vertex may close only once all its neighbours in
/// `g` have opened.
pub(crate) fn interval_supergraphs(g: &Graph) -> Result<Vec<Supergraph>> {
    check_layout_cap("interval supergraph enumeration", g.n())?;
    let n = g.n();
    let gadj = g.masks();

    struct State<'a> {
        gadj: &'a [u128],
        open: Vec<usize>,
        close: Vec<usize>,
        adj: Vec<u128>,
        seen: HashSet<Vec<u128>>,
        out: Vec<Supergraph>,
    }

    fn submasks(m: u128) -> impl Iterator<Item = u128> {
        // nonempty submasks in increasing order
        let mut s: u128 = 0;
        std::iter::from_fn(move || {
            s = (s.wrapping_sub(m)) & m;
            (s != 0).then_some(s)
        })
    }

    impl State<'_> {
        fn go(&mut self, unopened: u128, active: u128, step: usize) {
            if unopened == 0 && active == 0 {
                if self.seen.insert(self.adj.clone()) {
                    self.out.push(Supergraph {
                        adj: self.adj.clone(),
                        open: self.open.clone(),
                        close: self.close.clone(),
                    });
                }
                return;
            }
            let opens: Vec<u128> = submasks(unopened).collect();
            for a in opens {
                let now = active | a;
                let rest = unopened & !a;
                for v in crate::oracle::bits(a) {
                    self.open[v] = step;
                }
                let closable =
                    crate::oracle::bits(now).filter(|&v| self.gadj[v] & rest == 0).fold(0u128, |m, v| m | 1 << v);
                let closes: Vec<u128> = if rest == 0 {
                    if closable == now {
                        vec![now]
                    } else {
                        vec![]
                    }
                } else {
                    submasks(closable).collect()
                };
                for b in closes {
                    let saved = self.adj.clone();
                    for v in crate::oracle::bits(b) {
                        self.close[v] = step;
                        self.adj[v] |= now & !(1 << v);
                        for u in crate::oracle::bits(now & !(1 << v)) {
                            self.adj[u] |= 1 << v;
                        }
                    }
                    self.go(rest, now & !b, step + 1);
                    self.adj = saved;
                }
            }
        }
    }

    let mut st = State {
        gadj: &gadj,
        open: vec![0; n],
        close: vec![0; n],
        adj: vec![0; n],
        seen: HashSet::new(),
        out: Vec::new(),
    };
    st.go(full(n), 0, 0);
    Ok(st.out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named_graph, Family};
    use crate::oracle::bits;

    #[test]
    fn layout_counts() {
        let counts: Vec<usize> = (0..=5).map(|n| enumerate_interval_layouts(n).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 3, 15, 105, 945]);
        assert!(enumerate_interval_layouts(8).unwrap_err().is_cap_exceeded());
    }

    #[test]
    fn three_vertex_layouts_realise_every_labelled_graph() {
        let mut patterns = HashSet::new();
        for layout in enumerate_interval_layouts(3).unwrap() {
            let g = layout.graph();
            for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
                let edges: Vec<(usize, usize)> = g
                    .edges()
                    .iter()
                    .map(|&(u, v)| (perm[u].min(perm[v]), perm[u].max(perm[v])))
                    .collect::<std::collections::BTreeSet<_>>()
                    .into_iter()
                    .collect();
                patterns.insert(edges);
            }
        }
        assert_eq!(patterns.len(), 8);
    }

    #[test]
    fn supergraph_counts_without_constraints() {
        let counts: Vec<usize> = (1..=5).map(|n| interval_supergraphs(&Graph::empty(n)).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 2, 8, 61, 822]);
    }

    #[test]
    fn supergraphs_contain_target_and_match_intervals() {
        let c4 = make_named_graph(Family::Cycle, &[4]).unwrap();
        let fs = interval_supergraphs(&c4).unwrap();
        assert!(!fs.is_empty());
        for f in &fs {
            let iv = f.intervals();
            for u in 0..4 {
                for v in 0..4 {
                    if u != v {
                        assert_eq!(f.adj[u] >> v & 1 == 1, iv[u].intersects(&iv[v]));
                    }
                }
                assert_eq!(f.adj[u] & c4.mask(u), c4.mask(u));
            }
            for bag in f.bags() {
                assert!(bits(bag).all(|u| bits(bag).all(|v| u == v || f.adj[u] >> v & 1 == 1)));
            }
        }
    }
}
