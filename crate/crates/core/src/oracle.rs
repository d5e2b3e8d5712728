//! Exhaustive reference solvers. Every other module is checked against these.
//!
//! All searches work on `u128` neighbourhood masks, so 128 vertices is a hard
//! limit on top of the configurable caps in [`OracleCaps`]. Ties are broken
//! towards the lexicographically smallest sorted witness.

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    MaxIndependentSet,
    MinDominatingSet,
    MinIndependentDominatingSet,
    ChromaticNumber,
    CliqueNumber,
    MaxInducedMatching,
}

/// Vertex-count limits for the exhaustive searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleCaps {
    pub subset: usize,
    pub chromatic: usize,
    pub induced_matching: usize,
}

impl Default for OracleCaps {
    fn default() -> Self {
        OracleCaps { subset: 16, chromatic: 10, induced_matching: 10 }
    }
}

impl OracleCaps {
    /// Caps raised to the mask width; used for structured inputs known to be easy.
    pub fn unlimited() -> Self {
        OracleCaps { subset: 128, chromatic: 128, induced_matching: 128 }
    }

    fn cap_for(&self, problem: Problem) -> (usize, &'static str) {
        match problem {
            Problem::ChromaticNumber => (self.chromatic, "chromatic number oracle"),
            Problem::MaxInducedMatching => (self.induced_matching, "induced matching oracle"),
            _ => (self.subset, "subset oracle"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    Vertices(Vec<usize>),
    Edges(Vec<(usize, usize)>),
    /// `colors[v]` in `0..value`.
    Coloring(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    pub value: usize,
    pub witness: Witness,
}

impl Solution {
    /// Re-checks the witness against `g` for `problem`, value included.
    pub fn verify(&self, problem: Problem, g: &Graph) -> bool {
        match (&self.witness, problem) {
            (Witness::Vertices(vs), Problem::MaxIndependentSet) => vs.len() == self.value && g.is_independent(vs),
            (Witness::Vertices(vs), Problem::CliqueNumber) => vs.len() == self.value && g.is_clique(vs),
            (Witness::Vertices(vs), Problem::MinDominatingSet) => vs.len() == self.value && g.is_dominating(vs),
            (Witness::Vertices(vs), Problem::MinIndependentDominatingSet) => {
                vs.len() == self.value && g.is_dominating(vs) && g.is_independent(vs)
            }
            (Witness::Coloring(c), Problem::ChromaticNumber) => {
                c.len() == g.n()
                    && c.iter().all(|&x| x < self.value)
                    && (0..self.value).all(|x| c.contains(&x))
                    && g.edges().iter().all(|&(u, v)| c[u] != c[v])
            }
            (Witness::Edges(es), Problem::MaxInducedMatching) => es.len() == self.value && is_induced_matching(g, es),
            _ => false,
        }
    }
}

pub fn is_induced_matching(g: &Graph, es: &[(usize, usize)]) -> bool {
    if !es.iter().all(|&(u, v)| g.has_edge(u, v)) {
        return false;
    }
    for (i, &(a, b)) in es.iter().enumerate() {
        for &(c, d) in &es[i + 1..] {
            for x in [a, b] {
                for y in [c, d] {
                    if x == y || g.has_edge(x, y) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn brute_force(problem: Problem, g: &Graph) -> Result<Solution> {
    brute_force_with(problem, g, &OracleCaps::default())
}

pub fn brute_force_with(problem: Problem, g: &Graph, caps: &OracleCaps) -> Result<Solution> {
    let (cap, what) = caps.cap_for(problem);
    let cap = cap.min(128);
    if g.n() > cap {
        return Err(Error::CapExceeded { what, size: g.n(), cap });
    }
    let adj = g.masks();
    let all = full(g.n());
    Ok(match problem {
        Problem::MaxIndependentSet => {
            let vs = lex_max_independent(&adj, all);
            Solution { value: vs.len(), witness: Witness::Vertices(vs) }
        }
        Problem::CliqueNumber => {
            let co = complement_masks(&adj);
            let vs = lex_max_independent(&co, all);
            Solution { value: vs.len(), witness: Witness::Vertices(vs) }
        }
        Problem::MinDominatingSet | Problem::MinIndependentDominatingSet => {
            let independent = problem == Problem::MinIndependentDominatingSet;
            let vs = lex_min_dominating(&adj, independent);
            Solution { value: vs.len(), witness: Witness::Vertices(vs) }
        }
        Problem::ChromaticNumber => {
            let colors = lex_min_coloring(&adj);
            let value = colors.iter().max().map_or(0, |c| c + 1);
            Solution { value, witness: Witness::Coloring(colors) }
        }
        Problem::MaxInducedMatching => {
            let edges = g.edges();
            if edges.len() > 128 {
                return Err(Error::CapExceeded { what: "induced matching edge count", size: edges.len(), cap: 128 });
            }
            let conflict = edge_conflicts(&edges, |x, y| x == y || g.has_edge(x, y));
            let picked = lex_max_independent(&conflict, full(edges.len()));
            Solution { value: picked.len(), witness: Witness::Edges(picked.into_iter().map(|i| edges[i]).collect()) }
        }
    })
}

/// All maximal cliques of `g` (Bron-Kerbosch with pivoting), each sorted,
/// the list sorted lexicographically. Isolated vertices are singleton cliques.
pub fn maximal_cliques(g: &Graph) -> Result<Vec<Vec<usize>>> {
    if g.n() > 128 {
        return Err(Error::CapExceeded { what: "maximal clique enumeration", size: g.n(), cap: 128 });
    }
    let mut out: Vec<Vec<usize>> = maximal_clique_masks(&g.masks()).into_iter().map(|m| bits(m).collect()).collect();
    out.sort();
    Ok(out)
}

/// Maximal cliques of the graph given by neighbourhood masks, as masks.
pub(crate) fn maximal_clique_masks(adj: &[u128]) -> Vec<u128> {
    fn bk(adj: &[u128], r: u128, mut p: u128, mut x: u128, out: &mut Vec<u128>) {
        if p == 0 {
            if x == 0 {
                out.push(r);
            }
            return;
        }
        let pivot = bits(p | x).max_by_key(|&u| (adj[u] & p).count_ones()).expect("p is nonempty");
        for v in bits(p & !adj[pivot]) {
            bk(adj, r | 1 << v, p & adj[v], x & adj[v], out);
            p &= !(1 << v);
            x |= 1 << v;
        }
    }
    let mut out = Vec::new();
    if !adj.is_empty() {
        bk(adj, 0, full(adj.len()), 0, &mut out);
    }
    out
}

pub(crate) fn full(n: usize) -> u128 {
    if n >= 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

pub(crate) fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let t = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(t)
    })
}

fn complement_masks(adj: &[u128]) -> Vec<u128> {
    let all = full(adj.len());
    adj.iter().enumerate().map(|(v, &m)| !m & all & !(1u128 << v)).collect()
}

/// Conflict graph on edge indices; `touch(x, y)` says whether two endpoints
/// from different edges prevent the edges from sharing an induced matching.
pub(crate) fn edge_conflicts(edges: &[(usize, usize)], touch: impl Fn(usize, usize) -> bool) -> Vec<u128> {
    let mut conflict = vec![0u128; edges.len()];
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            if touch(a, c) || touch(a, d) || touch(b, c) || touch(b, d) {
                conflict[i] |= 1 << j;
                conflict[j] |= 1 << i;
            }
        }
    }
    conflict
}

/// Size of a maximum independent set inside `cand`.
pub(crate) fn mis_size(adj: &[u128], cand: u128) -> usize {
    if cand == 0 {
        return 0;
    }
    let mut best_low = (usize::MAX, 0);
    let mut best_high = (0usize, 0);
    for v in bits(cand) {
        let deg = (adj[v] & cand).count_ones() as usize;
        if deg < best_low.0 {
            best_low = (deg, v);
        }
        if deg >= best_high.0 {
            best_high = (deg, v);
        }
    }
    let (deg, v) = best_low;
    if deg <= 1 {
        // a vertex of degree at most one is always in some maximum set
        return 1 + mis_size(adj, cand & !adj[v] & !(1 << v));
    }
    let w = best_high.1;
    let take = 1 + mis_size(adj, cand & !adj[w] & !(1 << w));
    let skip = mis_size(adj, cand & !(1 << w));
    take.max(skip)
}

fn lex_max_independent(adj: &[u128], all: u128) -> Vec<usize> {
    let mut need = mis_size(adj, all);
    let mut cand = all;
    let mut chosen = Vec::with_capacity(need);
    for v in 0..adj.len() {
        if need == 0 {
            break;
        }
        if cand >> v & 1 == 0 {
            continue;
        }
        let rest = cand & !adj[v] & !(1 << v);
        if 1 + mis_size(adj, rest) >= need {
            chosen.push(v);
            need -= 1;
            cand = rest;
        } else {
            cand &= !(1 << v);
        }
    }
    chosen
}

struct DomSearch<'a> {
    closed: &'a [u128],
    all: u128,
    independent: bool,
}

impl DomSearch<'_> {
    /// Can `chosen` be extended by at most `budget` vertices from `allowed`
    /// to a (independent) dominating set? Calls `found` on every minimal
    /// completion reached; stops early when `found` returns `true`.
    fn extend(
        &self,
        chosen: &mut Vec<usize>,
        dominated: u128,
        mut allowed: u128,
        budget: usize,
        found: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        let undominated = self.all & !dominated;
        if undominated == 0 {
            return found(chosen);
        }
        if budget == 0 {
            return false;
        }
        let u = undominated.trailing_zeros() as usize;
        let candidates = self.closed[u] & allowed;
        if candidates == 0 {
            return false;
        }
        let best_cover = bits(allowed).map(|c| (self.closed[c] & undominated).count_ones() as usize).max().unwrap_or(0);
        if best_cover * budget < undominated.count_ones() as usize {
            return false;
        }
        for c in bits(candidates) {
            chosen.push(c);
            let mut next_allowed = allowed & !(1 << c);
            if self.independent {
                next_allowed &= !self.closed[c];
            }
            if self.extend(chosen, dominated | self.closed[c], next_allowed, budget - 1, found) {
                chosen.pop();
                return true;
            }
            chosen.pop();
            allowed &= !(1 << c);
        }
        false
    }

    fn feasible(&self, forced: &[usize], allowed: u128, budget: usize) -> bool {
        let mut dominated = 0;
        let mut allowed = allowed;
        for &f in forced {
            dominated |= self.closed[f];
            if self.independent {
                allowed &= !self.closed[f];
            }
        }
        let mut chosen = forced.to_vec();
        self.extend(&mut chosen, dominated, allowed, budget, &mut |_| true)
    }
}

fn closed_masks(adj: &[u128]) -> Vec<u128> {
    adj.iter().enumerate().map(|(v, &m)| m | 1 << v).collect()
}

fn lex_min_dominating(adj: &[u128], independent: bool) -> Vec<usize> {
    let n = adj.len();
    let closed = closed_masks(adj);
    let search = DomSearch { closed: &closed, all: full(n), independent };
    let gamma = (0..=n).find(|&b| search.feasible(&[], full(n), b)).expect("the full vertex set dominates");
    let mut chosen: Vec<usize> = Vec::with_capacity(gamma);
    let mut after = 0;
    while chosen.len() < gamma {
        if search.feasible(&chosen, 0, 0) {
            break;
        }
        let v = (after..n)
            .find(|&v| {
                let mut trial = chosen.clone();
                trial.push(v);
                if independent && !is_independent_masks(adj, &trial) {
                    return false;
                }
                let allowed = full(n) & !full(v + 1);
                search.feasible(&trial, allowed, gamma - trial.len())
            })
            .expect("a minimum set extends the chosen prefix");
        chosen.push(v);
        after = v + 1;
    }
    chosen
}

fn is_independent_masks(adj: &[u128], vs: &[usize]) -> bool {
    let m = vs.iter().fold(0u128, |m, &v| m | 1 << v);
    vs.iter().all(|&v| adj[v] & m == 0)
}

/// Minimum dominating set size of `g` (independent if requested).
pub fn domination_number(g: &Graph, independent: bool, caps: &OracleCaps) -> Result<usize> {
    let problem = if independent { Problem::MinIndependentDominatingSet } else { Problem::MinDominatingSet };
    brute_force_with(problem, g, caps).map(|s| s.value)
}

/// Every minimum independent dominating set of `g`, each sorted, in the
/// order the search meets them.
pub fn all_minimum_ids(g: &Graph, caps: &OracleCaps) -> Result<(usize, Vec<Vec<usize>>)> {
    let gamma = domination_number(g, true, caps)?;
    let adj = g.masks();
    let closed = closed_masks(&adj);
    let search = DomSearch { closed: &closed, all: full(g.n()), independent: true };
    let mut out = Vec::new();
    search.extend(&mut Vec::new(), 0, full(g.n()), gamma, &mut |s| {
        let mut s = s.to_vec();
        s.sort_unstable();
        out.push(s);
        false
    });
    Ok((gamma, out))
}

fn colorable(adj: &[u128], k: usize, colors: &mut Vec<usize>, v: usize, used: usize) -> bool {
    if v == adj.len() {
        return true;
    }
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if bits(adj[v]).filter(|&u| u < v).all(|u| colors[u] != c) {
            colors[v] = c;
            if colorable(adj, k, colors, v + 1, used.max(c + 1)) {
                return true;
            }
        }
    }
    false
}

/// DSatur-ordered k-colourability test.
fn dsatur_colorable(adj: &[u128], k: usize) -> bool {
    fn go(adj: &[u128], k: usize, colors: &mut [usize], left: usize, used: usize) -> bool {
        if left == 0 {
            return true;
        }
        let mut pick = usize::MAX;
        let mut key = (0u32, 0u32);
        for v in 0..adj.len() {
            if colors[v] != usize::MAX {
                continue;
            }
            let sat =
                bits(adj[v]).filter(|&u| colors[u] != usize::MAX).fold(0u128, |m, u| m | 1 << colors[u]).count_ones();
            let deg = adj[v].count_ones();
            if pick == usize::MAX || (sat, deg) > key {
                pick = v;
                key = (sat, deg);
            }
        }
        let v = pick;
        for c in 0..(used + 1).min(k) {
            if bits(adj[v]).all(|u| colors[u] != c) {
                colors[v] = c;
                if go(adj, k, colors, left - 1, used.max(c + 1)) {
                    return true;
                }
                colors[v] = usize::MAX;
            }
        }
        false
    }
    let mut colors = vec![usize::MAX; adj.len()];
    go(adj, k, &mut colors, adj.len(), 0)
}

fn lex_min_coloring(adj: &[u128]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let omega = mis_size(&complement_masks(adj), full(n)).max(1);
    let chi = (omega..=n).find(|&k| dsatur_colorable(adj, k)).expect("n colours suffice");
    let mut colors = vec![0; n];
    assert!(colorable(adj, chi, &mut colors, 0, 0));
    colors
}
