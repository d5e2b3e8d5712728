//! Edge clique covers: validation, the sidecar format, exact and greedy covers.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{bits, full, maximal_clique_masks};

/// Default edge cap for [`ecc_exact`].
pub const ECC_EDGE_CAP: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeCliqueCover {
    pub cliques: Vec<Vec<usize>>,
}

impl EdgeCliqueCover {
    /// Sorts each clique; the order of the cliques is kept.
    pub fn new(cliques: Vec<Vec<usize>>) -> Self {
        let cliques = cliques
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c.dedup();
                c
            })
            .collect();
        EdgeCliqueCover { cliques }
    }

    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        for (i, c) in self.cliques.iter().enumerate() {
            if let Some(&v) = c.iter().find(|&&v| v >= g.n()) {
                return Err(Error::InvalidCover(format!("clique {i} names vertex {v}, graph has {}", g.n())));
            }
            for (a, &u) in c.iter().enumerate() {
                if let Some(&v) = c[a + 1..].iter().find(|&&v| !g.has_edge(u, v)) {
                    return Err(Error::InvalidCover(format!("clique {i} is not a clique: {u} {v} is not an edge")));
                }
            }
        }
        let mut covered = Graph::empty(g.n());
        for c in &self.cliques {
            for (a, &u) in c.iter().enumerate() {
                for &v in &c[a + 1..] {
                    if !covered.has_edge(u, v) {
                        covered.add_edge(u, v)?;
                    }
                }
            }
        }
        if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| !covered.has_edge(u, v)) {
            return Err(Error::InvalidCover(format!("edge {u} {v} is not covered")));
        }
        Ok(())
    }
}

/// One clique per line, vertices separated by whitespace, `#` comments.
pub fn parse_cover(text: &str) -> Result<EdgeCliqueCover> {
    let mut cliques = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let clique = line
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(i + 1, format!("not a vertex id: {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        cliques.push(clique);
    }
    Ok(EdgeCliqueCover::new(cliques))
}

pub fn write_cover(cover: &EdgeCliqueCover) -> String {
    let mut out = String::new();
    for c in &cover.cliques {
        let items: Vec<String> = c.iter().map(|v| v.to_string()).collect();
        writeln!(out, "{}", items.join(" ")).unwrap();
    }
    out
}

/// Target edges together with the candidate cliques that may cover them.
struct CoverInstance {
    /// Vertex masks of the maximal cliques of the compatibility graph that
    /// contain at least one target edge, with the target edges they cover.
    cliques: Vec<(u128, u128)>,
    m: usize,
}

impl CoverInstance {
    fn new(targets: &[(usize, usize)], compat: &[u128]) -> Self {
        let mut cliques = maximal_clique_masks(compat)
            .into_iter()
            .filter_map(|c| {
                let mask = targets
                    .iter()
                    .enumerate()
                    .filter(|(_, &(u, v))| c >> u & 1 == 1 && c >> v & 1 == 1)
                    .fold(0u128, |m, (i, _)| m | 1 << i);
                (mask != 0).then_some((c, mask))
            })
            .collect::<Vec<_>>();
        cliques.sort_by_key(|&(c, _)| bits(c).collect::<Vec<_>>());
        CoverInstance { cliques, m: targets.len() }
    }

    fn all(&self) -> u128 {
        full(self.m)
    }

    /// Greedy cover as clique indices, taking the first clique on ties;
    /// `None` if some target pair lies in no clique.
    fn greedy(&self) -> Option<Vec<usize>> {
        let mut uncovered = self.all();
        let mut out = Vec::new();
        while uncovered != 0 {
            let (i, (_, mask)) =
                self.cliques.iter().enumerate().rev().max_by_key(|(_, (_, m))| (m & uncovered).count_ones())?;
            if mask & uncovered == 0 {
                return None;
            }
            out.push(i);
            uncovered &= !mask;
        }
        Some(out)
    }

    /// A minimum cover with at most `limit` cliques, if one exists.
    fn minimum(&self, limit: usize) -> Option<Vec<usize>> {
        let compat: Vec<u128> = (0..self.m)
            .map(|e| self.cliques.iter().filter(|(_, c)| c >> e & 1 == 1).fold(0, |a, (_, c)| a | c))
            .collect();
        struct Search<'a> {
            inst: &'a CoverInstance,
            compat: &'a [u128],
            best: Option<Vec<usize>>,
            bound: usize,
        }
        impl Search<'_> {
            fn lower_bound(&self, uncovered: u128) -> usize {
                let mut blocked = 0u128;
                let mut lb = 0;
                for e in bits(uncovered) {
                    if blocked >> e & 1 == 0 {
                        lb += 1;
                        blocked |= self.compat[e];
                    }
                }
                lb
            }

            fn go(&mut self, uncovered: u128, chosen: &mut Vec<usize>) {
                if uncovered == 0 {
                    self.bound = chosen.len();
                    self.best = Some(chosen.clone());
                    return;
                }
                if chosen.len() + self.lower_bound(uncovered) >= self.bound {
                    return;
                }
                let e = uncovered.trailing_zeros();
                let mut options: Vec<usize> =
                    (0..self.inst.cliques.len()).filter(|&c| self.inst.cliques[c].1 >> e & 1 == 1).collect();
                options.sort_by_key(|&c| std::cmp::Reverse((self.inst.cliques[c].1 & uncovered).count_ones()));
                for c in options {
                    chosen.push(c);
                    self.go(uncovered & !self.inst.cliques[c].1, chosen);
                    chosen.pop();
                }
            }
        }
        let mut search = Search { inst: self, compat: &compat, best: None, bound: limit + 1 };
        if let Some(g) = self.greedy() {
            if g.len() <= limit {
                search.bound = g.len();
                search.best = Some(g);
            }
        }
        search.go(self.all(), &mut Vec::new());
        search.best
    }

    fn sets(&self, picked: &[usize]) -> Vec<Vec<usize>> {
        picked.iter().map(|&i| bits(self.cliques[i].0).collect()).collect()
    }
}

/// Minimum number of cliques of the compatibility graph `compat` (given as
/// neighbourhood masks) covering every pair in `targets`, provided it is at
/// most `limit`. Each pair in `targets` must be an edge of `compat`.
pub(crate) fn constrained_cover(targets: &[(usize, usize)], compat: &[u128], limit: usize) -> Option<Vec<Vec<usize>>> {
    debug_assert!(targets.len() <= 128 && compat.len() <= 128);
    let inst = CoverInstance::new(targets, compat);
    inst.minimum(limit).map(|p| inst.sets(&p))
}

fn check_size(g: &Graph, cap: usize) -> Result<()> {
    let cap = cap.min(128);
    if g.m() > cap {
        return Err(Error::CapExceeded { what: "edge clique cover edge count", size: g.m(), cap });
    }
    if g.n() > 128 {
        return Err(Error::CapExceeded { what: "edge clique cover vertex count", size: g.n(), cap: 128 });
    }
    Ok(())
}

/// Repeatedly takes the maximal clique covering the most uncovered edges;
/// ties go to the lexicographically first clique.
pub fn ecc_greedy(g: &Graph) -> Result<EdgeCliqueCover> {
    check_size(g, 128)?;
    let inst = CoverInstance::new(&g.edges(), &g.masks());
    let picked = inst.greedy().expect("every edge lies in a maximal clique");
    Ok(EdgeCliqueCover::new(inst.sets(&picked)))
}

pub fn ecc_exact(g: &Graph) -> Result<(usize, EdgeCliqueCover)> {
    ecc_exact_with_cap(g, ECC_EDGE_CAP)
}

/// Minimum edge clique cover by branching on which maximal clique covers the
/// first uncovered edge, pruned by a packing of pairwise incompatible edges.
pub fn ecc_exact_with_cap(g: &Graph, cap: usize) -> Result<(usize, EdgeCliqueCover)> {
    check_size(g, cap)?;
    let cliques = constrained_cover(&g.edges(), &g.masks(), g.m()).expect("single edges cover");
    Ok((cliques.len(), EdgeCliqueCover::new(cliques)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named_graph, Family};

    fn named(f: Family, p: &[usize]) -> Graph {
        make_named_graph(f, p).unwrap()
    }

    #[test]
    fn exact_values() {
        assert_eq!(ecc_exact(&named(Family::Complete, &[3])).unwrap().0, 1);
        assert_eq!(ecc_exact(&named(Family::Cycle, &[4])).unwrap().0, 4);
        assert_eq!(ecc_exact(&Graph::empty(3)).unwrap().0, 0);
        // two triangles sharing an edge
        let diamond = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(ecc_exact(&diamond).unwrap().0, 2);
    }

    #[test]
    fn covers_validate() {
        for g in [
            named(Family::ComplementOfMatching, &[6]),
            named(Family::CompleteTripartite, &[2, 2, 2]),
            named(Family::Cycle, &[7]),
        ] {
            let (v, c) = ecc_exact(&g).unwrap();
            c.validate(&g).unwrap();
            let greedy = ecc_greedy(&g).unwrap();
            greedy.validate(&g).unwrap();
            assert!(v <= greedy.len());
        }
    }

    #[test]
    fn validation_names_offender() {
        let c4 = named(Family::Cycle, &[4]);
        let e = EdgeCliqueCover::new(vec![vec![0, 2]]).validate(&c4).unwrap_err();
        assert!(e.to_string().contains("0 2 is not an edge"));
        let e = EdgeCliqueCover::new(vec![vec![0, 1]]).validate(&c4).unwrap_err();
        assert!(e.to_string().contains("edge 0 3 is not covered"));
    }

    #[test]
    fn cap_refuses() {
        let k8 = named(Family::Complete, &[8]);
        assert!(ecc_exact(&k8).unwrap_err().is_cap_exceeded());
        assert_eq!(ecc_exact_with_cap(&k8, 28).unwrap().0, 1);
    }

    #[test]
    fn sidecar_round_trip() {
        let c = EdgeCliqueCover::new(vec![vec![2, 0], vec![1, 3]]);
        assert_eq!(parse_cover(&write_cover(&c)).unwrap(), c);
    }
}
