//! Disjoint Paths instances, the degree-one preprocessing, an exhaustive
//! path-packing oracle and the 2-label colouring gadget.

use std::fmt::Write as _;

use crate::construct::checked;
use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::labels::LabelSet;
use crate::simrep::{Interval, SimRep};

/// Largest `|E(G)|` the path-packing oracle accepts.
pub const PATH_ORACLE_ARC_CAP: usize = 12;

/// Supply digraph `g` and demand digraph `h` on the same vertices. A solution
/// routes every demand `(s, t)` along a path from `t` to `s` in `g`, with
/// the paths pairwise arc-disjoint.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DisjointPathsInstance {
    pub g: Digraph,
    pub h: Digraph,
}

impl DisjointPathsInstance {
    pub fn new(g: Digraph, h: Digraph) -> Result<Self> {
        if g.n() != h.n() {
            return Err(Error::InvalidInstance(format!("supply has {} vertices, demand has {}", g.n(), h.n())));
        }
        let inst = DisjointPathsInstance { g, h };
        inst.validate()?;
        Ok(inst)
    }

    pub fn n(&self) -> usize {
        self.g.n()
    }

    /// Supply acyclic and supply plus demand Eulerian.
    pub fn validate(&self) -> Result<()> {
        if !self.g.is_acyclic() {
            return Err(Error::InvalidInstance("supply digraph has a cycle".into()));
        }
        for v in 0..self.n() {
            let out = self.g.out_degree(v) + self.h.out_degree(v);
            let inn = self.g.in_degree(v) + self.h.in_degree(v);
            if out != inn {
                return Err(Error::InvalidInstance(format!(
                    "vertex {v} has in-degree {inn} and out-degree {out} in supply plus demand"
                )));
            }
        }
        Ok(())
    }

    /// `sum over v of max(0, d_H(v) - 1)`.
    pub fn xi(&self) -> usize {
        (0..self.n()).map(|v| self.h.degree(v).saturating_sub(1)).sum()
    }
}

/// Format: a line `n <count>`, then lines `g u v` for supply arcs and
/// `h u v` for demand arcs. Blank lines and `#` comments are skipped.
pub fn parse_disjoint_paths(text: &str) -> Result<DisjointPathsInstance> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing `n <count>` line"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", c] => c.parse::<usize>().map_err(|_| Error::parse(hl, format!("bad vertex count {c:?}")))?,
        _ => return Err(Error::parse(hl, "expected `n <count>`")),
    };
    if n > crate::graph::MAX_PARSE_VERTICES {
        return Err(Error::parse(hl, format!("vertex count {n} is too large")));
    }
    let (mut g, mut h) = (Digraph::new(n), Digraph::new(n));
    for (line, body) in lines {
        let toks: Vec<&str> = body.split_whitespace().collect();
        let (target, rest) = match toks.as_slice() {
            ["g", rest @ ..] => (&mut g, rest),
            ["h", rest @ ..] => (&mut h, rest),
            _ => return Err(Error::parse(line, "expected `g u v` or `h u v`")),
        };
        let [u, v] = match rest {
            [u, v] => {
                [u, v].map(|t| t.parse::<usize>().map_err(|_| Error::parse(line, format!("not a vertex id: {t:?}"))))
            }
            _ => return Err(Error::parse(line, "an arc needs exactly two endpoints")),
        };
        target.add_arc(u?, v?).map_err(|e| Error::parse(line, e.to_string()))?;
    }
    DisjointPathsInstance::new(g, h)
}

pub fn write_disjoint_paths(inst: &DisjointPathsInstance) -> String {
    let mut out = format!("n {}\n", inst.n());
    for (u, v) in inst.g.arcs() {
        writeln!(out, "g {u} {v}").unwrap();
    }
    for (u, v) in inst.h.arcs() {
        writeln!(out, "h {u} {v}").unwrap();
    }
    out
}

/// One splitting step on the smallest vertex `w` with demand degree at least
/// two; `None` once every demand degree is at most one.
pub fn preprocess_step(inst: &DisjointPathsInstance) -> Option<DisjointPathsInstance> {
    let w = (0..inst.n()).find(|&w| inst.h.degree(w) >= 2)?;
    let (mut g, mut h) = (inst.g.clone(), inst.h.clone());
    let w2 = g.add_vertex();
    h.add_vertex();
    if let Some((v, _)) = inst.h.arcs().find(|&(_, t)| t == w) {
        g.add_arc(w2, w).expect("fresh vertex");
        h.remove_arc(v, w);
        h.add_arc(v, w2).expect("fresh vertex");
    } else {
        let (_, v) = inst.h.arcs().find(|&(s, _)| s == w).expect("w has demand arcs");
        g.add_arc(w, w2).expect("fresh vertex");
        h.remove_arc(w, v);
        h.add_arc(w2, v).expect("fresh vertex");
    }
    Some(DisjointPathsInstance { g, h })
}

/// An equivalent instance in which every vertex has demand degree at most
/// one. Each step adds one vertex and lowers `xi` by one.
pub fn preprocess_degree_one(inst: &DisjointPathsInstance) -> Result<DisjointPathsInstance> {
    inst.validate()?;
    let mut cur = inst.clone();
    while let Some(next) = preprocess_step(&cur) {
        cur = next;
    }
    Ok(cur)
}

/// Decides the instance by trying every assignment of arc-disjoint paths,
/// demand by demand. Returns the path for each demand, as vertex sequences
/// in demand order, when one exists.
pub fn solve_disjoint_paths(inst: &DisjointPathsInstance) -> Result<Option<Vec<Vec<usize>>>> {
    if inst.g.arc_count() > PATH_ORACLE_ARC_CAP {
        return Err(Error::CapExceeded {
            what: "disjoint paths oracle supply arcs",
            size: inst.g.arc_count(),
            cap: PATH_ORACLE_ARC_CAP,
        });
    }
    let arcs: Vec<(usize, usize)> = inst.g.arcs().collect();
    let demands: Vec<(usize, usize)> = inst.h.arcs().collect();

    struct Search<'a> {
        arcs: &'a [(usize, usize)],
        demands: &'a [(usize, usize)],
        used: Vec<bool>,
        paths: Vec<Vec<usize>>,
    }
    impl Search<'_> {
        fn route(&mut self, d: usize) -> bool {
            let Some(&(s, t)) = self.demands.get(d) else {
                return true;
            };
            self.paths.push(vec![t]);
            let found = self.extend(d, t, s);
            if !found {
                self.paths.pop();
            }
            found
        }

        fn extend(&mut self, d: usize, at: usize, goal: usize) -> bool {
            if at == goal {
                return self.route(d + 1);
            }
            for i in 0..self.arcs.len() {
                let (u, v) = self.arcs[i];
                if u != at || self.used[i] {
                    continue;
                }
                self.used[i] = true;
                self.paths[d].push(v);
                if self.extend(d, v, goal) {
                    return true;
                }
                self.paths[d].pop();
                self.used[i] = false;
            }
            false
        }
    }
    let mut search = Search { arcs: &arcs, demands: &demands, used: vec![false; arcs.len()], paths: Vec::new() };
    Ok(search.route(0).then_some(search.paths))
}

/// The interval graph `G'` with its 2-label representation; `G'` is
/// `k`-colourable exactly when the instance has a solution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColoringGadget {
    pub graph: Graph,
    pub rep: SimRep,
    pub k: usize,
}

/// Over the topological order `v_1..v_n` of the supply (smallest id first),
/// supply arc `(v_i, v_j)` becomes `(i, j)` with labels `{1}`; demand arc
/// `(v_i, v_j)`, `i > j`, becomes `(0, j)` and `(i, n+1)` with `{1, 2}` and
/// `(j, i)` with `{2}`. Vertices follow that order: supply arcs, then three
/// per demand arc.
pub fn coloring_gadget(inst: &DisjointPathsInstance) -> Result<ColoringGadget> {
    inst.validate()?;
    if let Some(v) = (0..inst.n()).find(|&v| inst.h.degree(v) > 1) {
        return Err(Error::InvalidInstance(format!("vertex {v} has demand degree {}", inst.h.degree(v))));
    }
    let order = inst.g.topological_order().expect("validated as acyclic");
    let mut pos = vec![0i64; inst.n()];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i as i64 + 1;
    }
    let n = inst.n() as i64;
    let one = LabelSet::singleton(1);
    let two = LabelSet::singleton(2);
    let both = one.union(two);
    let mut intervals = Vec::new();
    let mut labels = Vec::new();
    for (u, v) in inst.g.arcs() {
        intervals.push(Interval::int(pos[u], pos[v]));
        labels.push(one);
    }
    for (u, v) in inst.h.arcs() {
        let (i, j) = (pos[u], pos[v]);
        if i < j {
            return Err(Error::InvalidInstance(format!(
                "demand arc {u} {v} points forward in the topological order, so no path can close it"
            )));
        }
        intervals.extend([Interval::int(0, j), Interval::int(i, n + 1), Interval::int(j, i)]);
        labels.extend([both, both, two]);
    }
    let rep = SimRep::new(2, intervals, labels)?;
    let graph = rep.graph();
    let rep = checked(&graph, rep, "colouring gadget")?;
    Ok(ColoringGadget { graph, rep, k: inst.h.arc_count() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{brute_force_with, OracleCaps, Problem};

    fn inst(n: usize, g: &[(usize, usize)], h: &[(usize, usize)]) -> DisjointPathsInstance {
        DisjointPathsInstance::new(Digraph::from_arcs(n, g).unwrap(), Digraph::from_arcs(n, h).unwrap()).unwrap()
    }

    fn chromatic(g: &Graph) -> usize {
        brute_force_with(Problem::ChromaticNumber, g, &OracleCaps::unlimited()).unwrap().value
    }

    #[test]
    fn validation_names_vertex() {
        let e = DisjointPathsInstance::new(Digraph::from_arcs(3, &[(0, 1)]).unwrap(), Digraph::new(3)).unwrap_err();
        assert!(e.to_string().contains("vertex 0"));
        let cyc = Digraph::from_arcs(2, &[(0, 1), (1, 0)]).unwrap();
        assert!(DisjointPathsInstance::new(cyc, Digraph::new(2)).is_err());
    }

    #[test]
    fn directed_path_is_yes() {
        let i = inst(3, &[(0, 1), (1, 2)], &[(2, 0)]);
        assert_eq!(solve_disjoint_paths(&i).unwrap(), Some(vec![vec![0, 1, 2]]));
        let gadget = coloring_gadget(&i).unwrap();
        assert_eq!(gadget.graph.m(), 0);
        assert_eq!(chromatic(&gadget.graph), 1);
        assert_eq!(gadget.k, 1);
    }

    #[test]
    fn competing_demands_are_no() {
        // demands (3, 0) and (4, 0) both need the arc 0 -> 1
        let i = inst(6, &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (2, 5)], &[(2, 1), (3, 0), (4, 0), (5, 1)]);
        assert_eq!(solve_disjoint_paths(&i).unwrap(), None);
        let pre = preprocess_degree_one(&i).unwrap();
        assert_eq!(pre.xi(), 0);
        assert_eq!(solve_disjoint_paths(&pre).unwrap(), None);
        let gadget = coloring_gadget(&pre).unwrap();
        assert_eq!(gadget.k, 4);
        assert!(chromatic(&gadget.graph) > 4);
    }

    #[test]
    fn preprocessing_splits_until_degree_one() {
        // w = 2 has two demand in-arcs
        let i = inst(3, &[(2, 0), (2, 1)], &[(0, 2), (1, 2)]);
        assert_eq!(i.xi(), 1);
        let step = preprocess_step(&i).unwrap();
        assert_eq!(step.xi(), 0);
        assert!(preprocess_step(&step).is_none());
        step.validate().unwrap();
        assert_eq!(solve_disjoint_paths(&i).unwrap().is_some(), solve_disjoint_paths(&step).unwrap().is_some());
        let already = inst(3, &[(0, 1), (1, 2)], &[(2, 0)]);
        assert_eq!(preprocess_degree_one(&already).unwrap(), already);
    }

    #[test]
    fn forward_demand_is_rejected() {
        let i = inst(2, &[], &[(0, 1), (1, 0)]);
        assert!(coloring_gadget(&i).is_err());
    }

    #[test]
    fn format_round_trip() {
        let i = inst(3, &[(0, 1), (1, 2)], &[(2, 0)]);
        let text = write_disjoint_paths(&i);
        assert_eq!(parse_disjoint_paths(&text).unwrap(), i);
        let e = parse_disjoint_paths("n 2\nx 0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
    }
}
