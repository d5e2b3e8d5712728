//! Multicoloured independent set instances and the gadget turning them into
//! independent dominating set instances on a `(k+2)`-label representation.

use std::fmt::Write as _;

use crate::construct::checked;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labels::{LabelSet, MAX_LABELS};
use crate::rational::Rational;
use crate::simrep::{Interval, SimRep};

/// A graph with `k` independent colour classes of `q` vertices each and a
/// fixed edge order. `classes[i][j]` is vertex `v^{i+1}_{j+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MispInstance {
    pub graph: Graph,
    pub classes: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

impl MispInstance {
    pub fn new(n: usize, edges: Vec<(usize, usize)>, classes: Vec<Vec<usize>>) -> Result<Self> {
        let graph = Graph::from_edges(n, &edges).map_err(|e| Error::InvalidInstance(e.to_string()))?;
        if graph.m() != edges.len() {
            return Err(Error::InvalidInstance("edge list repeats an edge".into()));
        }
        let inst = MispInstance { graph, classes, edges };
        inst.validate()?;
        Ok(inst)
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn q(&self) -> usize {
        self.classes.first().map_or(0, Vec::len)
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Classes partition the vertices, all have size `q`, and none contains
    /// an edge.
    pub fn validate(&self) -> Result<()> {
        let n = self.graph.n();
        let mut seen = vec![false; n];
        for (i, c) in self.classes.iter().enumerate() {
            if c.len() != self.q() {
                return Err(Error::InvalidInstance(format!(
                    "class {} has {} vertices, class 1 has {}",
                    i + 1,
                    c.len(),
                    self.q()
                )));
            }
            for &v in c {
                if v >= n || std::mem::replace(&mut seen[v], true) {
                    return Err(Error::InvalidInstance(format!("vertex {v} is out of range or in two classes")));
                }
            }
            if !self.graph.is_independent(c) {
                return Err(Error::InvalidInstance(format!("class {} contains an edge", i + 1)));
            }
        }
        if let Some(v) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidInstance(format!("vertex {v} is in no class")));
        }
        Ok(())
    }

    /// `(class, position)`, both from 1, for every vertex.
    fn coordinates(&self) -> Vec<(usize, usize)> {
        let mut at = vec![(0, 0); self.graph.n()];
        for (i, c) in self.classes.iter().enumerate() {
            for (j, &v) in c.iter().enumerate() {
                at[v] = (i + 1, j + 1);
            }
        }
        at
    }
}

/// Format: the edge-list header `n m`, then `m` lines `u v` in the edge
/// order, then one line `class v1 v2 ...` per colour class.
pub fn parse_misp(text: &str) -> Result<MispInstance> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let ids = |line: usize, toks: &[&str]| -> Result<Vec<usize>> {
        toks.iter()
            .map(|t| t.parse::<usize>().map_err(|_| Error::parse(line, format!("not a non-negative integer: {t:?}"))))
            .collect()
    };
    let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header line"))?;
    let [n, m] = <[usize; 2]>::try_from(ids(hl, &header.split_whitespace().collect::<Vec<_>>())?)
        .map_err(|_| Error::parse(hl, "header must be `n m`"))?;
    if n > crate::graph::MAX_PARSE_VERTICES {
        return Err(Error::parse(hl, format!("vertex count {n} is too large")));
    }
    let mut edges = Vec::new();
    let mut classes = Vec::new();
    let mut last = hl;
    for (line, body) in lines {
        last = line;
        let toks: Vec<&str> = body.split_whitespace().collect();
        if toks[0] == "class" {
            classes.push(ids(line, &toks[1..])?);
            continue;
        }
        if !classes.is_empty() {
            return Err(Error::parse(line, "edges must come before the class lines"));
        }
        if edges.len() == m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        let [u, v] = <[usize; 2]>::try_from(ids(line, &toks)?).map_err(|_| Error::parse(line, "expected `u v`"))?;
        if u >= n || v >= n || u == v {
            return Err(Error::parse(line, format!("bad edge {u} {v} on {n} vertices")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::parse(last, format!("expected {m} edges, found {}", edges.len())));
    }
    MispInstance::new(n, edges, classes)
}

pub fn write_misp(inst: &MispInstance) -> String {
    let mut out = format!("{} {}\n", inst.graph.n(), inst.m());
    for &(u, v) in &inst.edges {
        writeln!(out, "{u} {v}").unwrap();
    }
    for c in &inst.classes {
        let items: Vec<String> = c.iter().map(|v| v.to_string()).collect();
        writeln!(out, "class {}", items.join(" ")).unwrap();
    }
    out
}

/// Exhaustive search over one vertex per class; the first independent
/// choice in lexicographic order of positions.
pub fn solve_misp(inst: &MispInstance) -> Option<Vec<usize>> {
    fn go(inst: &MispInstance, i: usize, chosen: &mut Vec<usize>) -> bool {
        if i == inst.k() {
            return true;
        }
        for &v in &inst.classes[i] {
            if chosen.iter().all(|&u| !inst.graph.has_edge(u, v)) {
                chosen.push(v);
                if go(inst, i + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    go(inst, 0, &mut chosen).then_some(chosen)
}

/// The gadget graph with its representation and the vertex ids of every
/// interval family.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdspGadget {
    pub graph: Graph,
    pub rep: SimRep,
    pub k: usize,
    pub m: usize,
    pub q: usize,
    /// `k(m+1)`: the IDS size matching a multicoloured independent set.
    pub target: usize,
    /// `w[i][j]`: the `m+1` vertices of `W^{i+1}_{j+1}`, left to right.
    pub w: Vec<Vec<Vec<usize>>>,
    /// `s[i]`: the `2mq+2` vertices of `S_{i+1}`.
    pub s: Vec<Vec<usize>>,
    /// Vertex of the interval for edge `e_{g+1}`.
    pub edge_vertices: Vec<usize>,
}

impl IdspGadget {
    /// All vertices of `W^1_{j_1} ∪ ... ∪ W^k_{j_k}`, `js` counted from 0.
    pub fn w_union(&self, js: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = js.iter().enumerate().flat_map(|(i, &j)| self.w[i][j].iter().copied()).collect();
        out.sort_unstable();
        out
    }
}

/// Builds the gadget with `eps = 1/(2q(k+1))`.
///
/// Vertex intervals `W^i_j` are `(g - 1 + (j-1)/q + i eps, g + (j-1)/q + i eps)`
/// for `g = 1..=m+1`. `S_i` tiles `((q-1)/q + i eps, m + 1 + i eps)` with
/// `2mq+2` touching intervals of length `1/(2q)`, each labelled `{i}`. Edge
/// `e_g = v^i_a v^j_b` with `a < b`, or `a = b` and `i < j`, becomes
/// `(r(I^i_a(g)), l(I^j_b(g+1)))` labelled `{k+1}` for odd `g` and `{k+2}`
/// for even `g`. A vertex interval of `v^i_j` gets `{i}` plus the label of
/// every edge interval it meets whose edge has an endpoint in `V_i` other
/// than `v^i_j`.
///
/// Vertices are numbered `W` (by class, position, then left to right), then
/// `S`, then edges in order.
pub fn misp_to_idsp_gadget(inst: &MispInstance) -> Result<IdspGadget> {
    inst.validate()?;
    let (k, q, m) = (inst.k(), inst.q(), inst.m());
    if m == 0 {
        return Err(Error::InvalidInstance("the gadget needs at least one edge".into()));
    }
    if k + 2 > MAX_LABELS {
        return Err(Error::InvalidInstance(format!("{k} classes need more than {} labels", MAX_LABELS)));
    }
    let coords = inst.coordinates();
    let r = |p: i64, d: i64| Rational::new(p, d);
    let eps = r(1, 2 * q as i64 * (k as i64 + 1));
    let shift = |i: usize| eps * Rational::integer(i as i64);
    let vertex_interval = |i: usize, j: usize, g: usize| {
        let base = Rational::integer(g as i64 - 1) + r(j as i64 - 1, q as i64) + shift(i);
        Interval { l: base, r: base + Rational::ONE }
    };

    let mut intervals = Vec::new();
    let mut labels = Vec::new();
    let mut owner = Vec::new(); // (class, position) for vertex intervals
    let mut w = vec![vec![Vec::with_capacity(m + 1); q]; k];
    for i in 1..=k {
        for j in 1..=q {
            for g in 1..=m + 1 {
                w[i - 1][j - 1].push(intervals.len());
                intervals.push(vertex_interval(i, j, g));
                labels.push(LabelSet::singleton(i));
                owner.push((i, j));
            }
        }
    }
    let mut s = vec![Vec::with_capacity(2 * m * q + 2); k];
    let start = r(q as i64 - 1, q as i64);
    for i in 1..=k {
        for g in 0..=(2 * m * q + 1) as i64 {
            s[i - 1].push(intervals.len());
            intervals.push(Interval {
                l: start + r(g, 2 * q as i64) + shift(i),
                r: start + r(g + 1, 2 * q as i64) + shift(i),
            });
            labels.push(LabelSet::singleton(i));
        }
    }
    let mut edge_vertices = Vec::with_capacity(m);
    let mut edge_ends = Vec::with_capacity(m);
    for (idx, &(x, y)) in inst.edges.iter().enumerate() {
        let g = idx + 1;
        let (mut lo, mut hi) = (coords[x], coords[y]);
        if (lo.1, lo.0) > (hi.1, hi.0) {
            std::mem::swap(&mut lo, &mut hi);
        }
        let iv = Interval { l: vertex_interval(lo.0, lo.1, g).r, r: vertex_interval(hi.0, hi.1, g + 1).l };
        if iv.l >= iv.r {
            return Err(Error::Internal(format!("edge interval {g} is empty")));
        }
        edge_vertices.push(intervals.len());
        edge_ends.push([coords[x], coords[y]]);
        intervals.push(iv);
        labels.push(LabelSet::singleton(if g % 2 == 1 { k + 1 } else { k + 2 }));
    }

    for v in 0..owner.len() {
        let (i, j) = owner[v];
        let met: Vec<usize> = (0..m).filter(|&e| intervals[v].intersects(&intervals[edge_vertices[e]])).collect();
        // every vertex interval meets at most two edge intervals, with different labels
        if met.len() > 2 || (met.len() == 2 && labels[edge_vertices[met[0]]] == labels[edge_vertices[met[1]]]) {
            return Err(Error::Internal(format!(
                "vertex interval {v} meets edge intervals {met:?}, breaking the two-interval property"
            )));
        }
        for e in met {
            let ends = edge_ends[e];
            if ends.iter().any(|&(c, p)| c == i && p != j) {
                labels[v] = labels[v].union(labels[edge_vertices[e]]);
            }
        }
    }

    let rep = SimRep::new(k + 2, intervals, labels)?;
    let graph = rep.graph();
    let rep = checked(&graph, rep, "independent dominating set gadget")?;
    Ok(IdspGadget { graph, rep, k, m, q, target: k * (m + 1), w, s, edge_vertices })
}

/// Whether `ids` contains a whole `W^1_{j_1} ∪ ... ∪ W^k_{j_k}`.
pub fn check_w_structure(gadget: &IdspGadget, ids: &[usize]) -> bool {
    let has = |v: &usize| ids.contains(v);
    gadget.w.iter().all(|class| class.iter().any(|wj| wj.iter().all(has)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn yes_instance() -> MispInstance {
        // k = 2, q = 2, edge v^1_1 v^2_1
        MispInstance::new(4, vec![(0, 2)], vec![vec![0, 1], vec![2, 3]]).unwrap()
    }

    #[test]
    fn sizes_follow_the_arithmetic() {
        let inst = yes_instance();
        let g = misp_to_idsp_gadget(&inst).unwrap();
        let (k, q, m) = (2, 2, 1);
        assert_eq!(g.w.iter().flatten().flatten().count(), k * q * (m + 1));
        assert_eq!(g.s.iter().flatten().count(), k * (2 * m * q + 2));
        assert_eq!(g.edge_vertices.len(), m);
        assert_eq!(g.graph.n(), k * q * (m + 1) + k * (2 * m * q + 2) + m);
        assert_eq!(g.rep.d(), k + 2);
        assert_eq!(g.target, 4);
    }

    #[test]
    fn vertex_labels_are_one_of_four_kinds() {
        let inst = MispInstance::new(4, vec![(0, 2), (1, 3)], vec![vec![0, 1], vec![2, 3]]).unwrap();
        let g = misp_to_idsp_gadget(&inst).unwrap();
        for (i, class) in g.w.iter().enumerate() {
            for v in class.iter().flatten() {
                let l = g.rep.labels(*v);
                assert!(l.contains(i + 1));
                assert!(l.iter().all(|x| x == i + 1 || x == 3 || x == 4));
            }
        }
    }

    #[test]
    fn rejects_bad_instances() {
        assert!(MispInstance::new(4, vec![(0, 1)], vec![vec![0, 1], vec![2, 3]]).is_err());
        assert!(MispInstance::new(3, vec![], vec![vec![0, 1], vec![2]]).is_err());
        let edgeless = MispInstance::new(2, vec![], vec![vec![0], vec![1]]).unwrap();
        assert!(misp_to_idsp_gadget(&edgeless).is_err());
    }

    #[test]
    fn misp_oracle() {
        assert_eq!(solve_misp(&yes_instance()), Some(vec![0, 3]));
        let no = MispInstance::new(2, vec![(0, 1)], vec![vec![0], vec![1]]).unwrap();
        assert_eq!(solve_misp(&no), None);
    }

    #[test]
    fn format_round_trip() {
        let inst = MispInstance::new(4, vec![(2, 1), (0, 3)], vec![vec![0, 1], vec![2, 3]]).unwrap();
        let text = write_misp(&inst);
        assert_eq!(parse_misp(&text).unwrap(), inst);
        let e = parse_misp("2 1\n0 1\nclass 0\n0 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 4, .. }));
    }

    #[test]
    fn w_structure_check() {
        let g = misp_to_idsp_gadget(&yes_instance()).unwrap();
        let full = g.w_union(&[1, 1]);
        assert!(check_w_structure(&g, &full));
        assert!(!check_w_structure(&g, &full[1..]));
    }
}
