//! Simple undirected graphs, directed graphs, the edge-list format and the
//! named families used throughout the crate.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Largest vertex count accepted by [`parse_graph`].
pub const MAX_PARSE_VERTICES: usize = 10_000;

/// Simple undirected graph on vertices `0..n` with optional positive weights.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    m: usize,
    weights: Option<Vec<Rational>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph { n, adj: (0..n).map(|_| FixedBitSet::with_capacity(n)).collect(), m: 0, weights: None }
    }

    /// Builds a graph from an edge list; rejects loops, duplicates and bad ids.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(Error::InvalidArgument(format!("duplicate edge {u} {v}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.m += 1;
        Ok(())
    }

    /// Attaches vertex weights; each must be strictly positive.
    pub fn with_weights(mut self, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != self.n {
            return Err(Error::InvalidArgument(format!("expected {} weights, got {}", self.n, weights.len())));
        }
        if let Some(v) = weights.iter().position(|w| *w <= Rational::ZERO) {
            return Err(Error::InvalidArgument(format!("weight of vertex {v} is not positive")));
        }
        self.weights = Some(weights);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn adjacency(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            out.extend(self.adj[u].ones().filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    pub fn weight(&self, v: usize) -> Rational {
        self.weights.as_ref().map_or(Rational::ONE, |w| w[v])
    }

    pub fn weights(&self) -> Option<&[Rational]> {
        self.weights.as_deref()
    }

    pub fn is_edgeless(&self) -> bool {
        self.m == 0
    }

    pub fn is_clique(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vs: &[usize]) -> bool {
        vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_dominating(&self, vs: &[usize]) -> bool {
        let mut dom = FixedBitSet::with_capacity(self.n);
        for &v in vs {
            if v >= self.n {
                return false;
            }
            dom.insert(v);
            dom.union_with(&self.adj[v]);
        }
        dom.count_ones(..) == self.n
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("fresh edge");
                }
            }
        }
        g.weights = self.weights.clone();
        g
    }

    /// Neighbourhood as a `u128` mask; only meaningful for `n <= 128`.
    pub fn mask(&self, v: usize) -> u128 {
        debug_assert!(self.n <= 128);
        self.adj[v].ones().fold(0u128, |m, u| m | 1 << u)
    }

    pub fn masks(&self) -> Vec<u128> {
        (0..self.n).map(|v| self.mask(v)).collect()
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.n);
        let mut stack = vec![0];
        seen.insert(0);
        while let Some(v) = stack.pop() {
            for u in self.adj[v].ones() {
                if !seen.put(u) {
                    stack.push(u);
                }
            }
        }
        seen.count_ones(..) == self.n
    }

    /// Two-colours the graph if it is bipartite; colour 0 holds vertex 0 of
    /// each component.
    pub fn bipartition(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let mut side = vec![usize::MAX; self.n];
        for s in 0..self.n {
            if side[s] != usize::MAX {
                continue;
            }
            side[s] = 0;
            let mut stack = vec![s];
            while let Some(v) = stack.pop() {
                for u in self.adj[v].ones() {
                    if side[u] == usize::MAX {
                        side[u] = 1 - side[v];
                        stack.push(u);
                    } else if side[u] == side[v] {
                        return None;
                    }
                }
            }
        }
        let x = (0..self.n).filter(|&v| side[v] == 0).collect();
        let y = (0..self.n).filter(|&v| side[v] == 1).collect();
        Some((x, y))
    }
}

/// Parses the edge-list format: a header line `n m` followed by exactly `m`
/// lines `u v` with `0 <= u < v < n`. Blank lines and lines starting with `#`
/// are ignored.
pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut lines =
        text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header line"))?;
    let [n, m] = parse_pair(hline, header)?;
    if n > MAX_PARSE_VERTICES {
        return Err(Error::parse(hline, format!("vertex count {n} exceeds {MAX_PARSE_VERTICES}")));
    }
    if m > n.saturating_mul(n.saturating_sub(1)) / 2 {
        return Err(Error::parse(hline, format!("{m} edges cannot fit on {n} vertices")));
    }

    let mut g = Graph::empty(n);
    let mut seen = 0;
    for (line, body) in lines {
        if seen == m {
            return Err(Error::parse(line, format!("more than the declared {m} edges")));
        }
        let [u, v] = parse_pair(line, body)?;
        if u >= v {
            return Err(Error::parse(line, format!("edge {u} {v} must satisfy u < v")));
        }
        if v >= n {
            return Err(Error::parse(line, format!("vertex {v} out of range 0..{n}")));
        }
        if g.has_edge(u, v) {
            return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
        }
        g.add_edge(u, v).map_err(|e| Error::parse(line, e.to_string()))?;
        seen += 1;
    }
    if seen != m {
        return Err(Error::parse(text.lines().count().max(1), format!("expected {m} edges, found {seen}")));
    }
    Ok(g)
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2]> {
    let mut it = body.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it.next().ok_or_else(|| Error::parse(line, "expected two integers"))?;
        tok.parse::<usize>().map_err(|_| Error::parse(line, format!("not a non-negative integer: {tok:?}")))
    };
    let pair = [next()?, next()?];
    if it.next().is_some() {
        return Err(Error::parse(line, "trailing tokens"));
    }
    Ok(pair)
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// One positive rational per vertex, one per line, `#` comments allowed.
pub fn parse_weights(text: &str, n: usize) -> Result<Vec<Rational>> {
    let mut out = Vec::with_capacity(n);
    for (i, raw) in text.lines().enumerate() {
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let w: Rational = body.parse().map_err(|e| Error::parse(i + 1, format!("{e}")))?;
        if w <= Rational::ZERO {
            return Err(Error::parse(i + 1, "weight must be positive"));
        }
        if out.len() == n {
            return Err(Error::parse(i + 1, format!("more than {n} weights")));
        }
        out.push(w);
    }
    if out.len() != n {
        return Err(Error::parse(text.lines().count().max(1), format!("expected {n} weights, got {}", out.len())));
    }
    Ok(out)
}

/// Subgraph induced by `s`; vertex `i` of the result is `map[i]` in `g`,
/// with `map` sorted ascending.
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
    let mut map: Vec<usize> = s.to_vec();
    map.sort_unstable();
    map.dedup();
    if let Some(&v) = map.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    let mut h = Graph::empty(map.len());
    for i in 0..map.len() {
        for j in i + 1..map.len() {
            if g.has_edge(map[i], map[j]) {
                h.add_edge(i, j)?;
            }
        }
    }
    if let Some(w) = g.weights() {
        h.weights = Some(map.iter().map(|&v| w[v]).collect());
    }
    Ok((h, map))
}

/// Families produced by [`make_named_graph`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// `[n]`: edges `i, i+1`.
    Path,
    /// `[n]`, `n >= 3`: edges `i, i+1 mod n`.
    Cycle,
    /// `[n]`.
    Complete,
    /// `[a, b]`: sides `0..a` and `a..a+b`.
    CompleteBipartite,
    /// `[a, b, c]`: parts `0..a`, `a..a+b`, `a+b..a+b+c`.
    CompleteTripartite,
    /// `[n]`, `n` even: complete graph minus the matching `{2i, 2i+1}`.
    ComplementOfMatching,
    /// `[k]`: centre 0 and leaves `1..=k`.
    Star,
}

impl std::str::FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s.to_ascii_lowercase().replace(['-', '_'], "").as_str() {
            "path" => Family::Path,
            "cycle" => Family::Cycle,
            "complete" => Family::Complete,
            "completebipartite" | "bipartite" => Family::CompleteBipartite,
            "complete3partite" | "completetripartite" | "3partite" => Family::CompleteTripartite,
            "complementofmatching" | "comatching" => Family::ComplementOfMatching,
            "star" => Family::Star,
            _ => return Err(Error::InvalidArgument(format!("unknown graph family {s:?}"))),
        })
    }
}

pub fn make_named_graph(family: Family, params: &[usize]) -> Result<Graph> {
    let want = match family {
        Family::CompleteBipartite => 2,
        Family::CompleteTripartite => 3,
        _ => 1,
    };
    if params.len() != want {
        return Err(Error::InvalidArgument(format!("{family:?} takes {want} size parameter(s), got {}", params.len())));
    }
    if params.contains(&0) {
        return Err(Error::InvalidArgument("sizes must be positive".into()));
    }
    let parts = |sizes: &[usize]| -> Result<Graph> {
        let n: usize = sizes.iter().sum();
        let mut part = Vec::with_capacity(n);
        for (i, &s) in sizes.iter().enumerate() {
            part.extend(std::iter::repeat_n(i, s));
        }
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                if part[u] != part[v] {
                    g.add_edge(u, v)?;
                }
            }
        }
        Ok(g)
    };
    let n = params[0];
    match family {
        Family::Path => Graph::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()),
        Family::Cycle => {
            if n < 3 {
                return Err(Error::InvalidArgument("a cycle needs at least 3 vertices".into()));
            }
            Graph::from_edges(n, &(0..n).map(|i| (i, (i + 1) % n)).collect::<Vec<_>>())
        }
        Family::Complete => parts(&vec![1; n]),
        Family::CompleteBipartite | Family::CompleteTripartite => parts(params),
        Family::ComplementOfMatching => {
            if !n.is_multiple_of(2) {
                return Err(Error::InvalidArgument("complement of a matching needs even n".into()));
            }
            parts(&vec![2; n / 2])
        }
        Family::Star => Graph::from_edges(n + 1, &(1..=n).map(|i| (0, i)).collect::<Vec<_>>()),
    }
}

/// Directed graph without loops; parallel arcs are rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { n, arcs: BTreeSet::new() }
    }

    pub fn from_arcs(n: usize, arcs: &[(usize, usize)]) -> Result<Self> {
        let mut d = Digraph::new(n);
        for &(u, v) in arcs {
            d.add_arc(u, v)?;
        }
        Ok(d)
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at vertex {u}")));
        }
        if !self.arcs.insert((u, v)) {
            return Err(Error::InvalidArgument(format!("duplicate arc {u} {v}")));
        }
        Ok(())
    }

    pub fn remove_arc(&mut self, u: usize, v: usize) -> bool {
        self.arcs.remove(&(u, v))
    }

    /// Adds an isolated vertex and returns its id.
    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Arcs in lexicographic order.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arcs.range((v, 0)..(v + 1, 0)).count()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.arcs.iter().filter(|&&(_, w)| w == v).count()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.in_degree(v) + self.out_degree(v)
    }

    /// Kahn's algorithm, always taking the smallest available vertex.
    pub fn topological_order(&self) -> Option<Vec<usize>> {
        let mut indeg = vec![0usize; self.n];
        for &(_, v) in &self.arcs {
            indeg[v] += 1;
        }
        let mut ready: BTreeSet<usize> = (0..self.n).filter(|&v| indeg[v] == 0).collect();
        let mut order = Vec::with_capacity(self.n);
        while let Some(v) = ready.pop_first() {
            order.push(v);
            for (_, w) in self.arcs.range((v, 0)..(v + 1, 0)) {
                indeg[*w] -= 1;
                if indeg[*w] == 0 {
                    ready.insert(*w);
                }
            }
        }
        (order.len() == self.n).then_some(order)
    }

    pub fn is_acyclic(&self) -> bool {
        self.topological_order().is_some()
    }
}
