//! Constructions that turn structural information about a graph into a
//! verified representation. Every constructor checks its own output.

mod pathdecomp;

pub use pathdecomp::construct_from_path_decomposition;

use crate::cover::EdgeCliqueCover;
use crate::error::{Error, Result};
use crate::graph::{make_named_graph, Family, Graph};
use crate::labels::LabelSet;
use crate::rational::Rational;
use crate::simrep::{verify_representation, Interval, SimRep};

pub(crate) fn checked(g: &Graph, rep: SimRep, what: &str) -> Result<SimRep> {
    match verify_representation(g, &rep)? {
        None => Ok(rep),
        Some(v) => Err(Error::Internal(format!("{what} construction produced a bad representation: {v}"))),
    }
}

fn unit() -> Interval {
    Interval::int(0, 1)
}

/// Every vertex gets `(0, 1)`; edge `e_i` (edges in lexicographic order)
/// contributes label `i` to both endpoints.
pub fn construct_from_edges(g: &Graph) -> Result<SimRep> {
    construct_from_edges_ordered(g, &g.edges())
}

/// As [`construct_from_edges`] with an explicit edge enumeration.
pub fn construct_from_edges_ordered(g: &Graph, order: &[(usize, usize)]) -> Result<SimRep> {
    let mut sorted: Vec<(usize, usize)> = order.iter().map(|&(u, v)| (u.min(v), u.max(v))).collect();
    sorted.sort_unstable();
    if sorted != g.edges() {
        return Err(Error::InvalidArgument("edge order must list every edge exactly once".into()));
    }
    let mut labels = vec![LabelSet::EMPTY; g.n()];
    for (i, &(u, v)) in order.iter().enumerate() {
        labels[u].insert(i + 1);
        labels[v].insert(i + 1);
    }
    let rep = SimRep::new(order.len(), vec![unit(); g.n()], labels)?;
    checked(g, rep, "edge")
}

/// Every vertex gets `(0, 1)`; clique `C_i` contributes label `i`.
pub fn construct_from_ecc(g: &Graph, cover: &EdgeCliqueCover) -> Result<SimRep> {
    cover.validate(g)?;
    let mut labels = vec![LabelSet::EMPTY; g.n()];
    for (i, c) in cover.cliques.iter().enumerate() {
        for &v in c {
            labels[v].insert(i + 1);
        }
    }
    let rep = SimRep::new(cover.len(), vec![unit(); g.n()], labels)?;
    checked(g, rep, "edge clique cover")
}

/// The smaller side `X` shares `(0, 1)` with one private label per vertex;
/// the other side gets disjoint subintervals labelled by their neighbours.
pub fn construct_bipartite(g: &Graph, sides: (&[usize], &[usize])) -> Result<SimRep> {
    let (mut x, mut y) = (sides.0.to_vec(), sides.1.to_vec());
    x.sort_unstable();
    y.sort_unstable();
    let mut side = vec![None; g.n()];
    for (s, part) in [(0u8, &x), (1u8, &y)] {
        for &v in part.iter() {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if side[v].replace(s).is_some() {
                return Err(Error::InvalidArgument(format!("vertex {v} appears twice in the sides")));
            }
        }
    }
    if let Some(v) = side.iter().position(Option::is_none) {
        return Err(Error::InvalidArgument(format!("vertex {v} is on neither side")));
    }
    if let Some((u, v)) = g.edges().into_iter().find(|&(u, v)| side[u] == side[v]) {
        return Err(Error::InvalidArgument(format!("edge {u} {v} does not cross the bipartition")));
    }
    if x.len() > y.len() {
        std::mem::swap(&mut x, &mut y);
    }
    let mut intervals = vec![unit(); g.n()];
    let mut labels = vec![LabelSet::EMPTY; g.n()];
    for (i, &v) in x.iter().enumerate() {
        labels[v] = LabelSet::singleton(i + 1);
    }
    let parts = y.len() as i64;
    for (j, &v) in y.iter().enumerate() {
        let j = j as i64;
        intervals[v] = Interval::new(Rational::new(j, parts), Rational::new(j + 1, parts))?;
        labels[v] = x.iter().enumerate().filter(|&(_, &u)| g.has_edge(u, v)).map(|(i, _)| i + 1).collect();
    }
    let rep = SimRep::new(x.len(), intervals, labels)?;
    checked(g, rep, "bipartite")
}

/// `K_{s,s,s}` with parts `X = 0..s`, `Y = s..2s`, `Z = 2s..3s` and `s^2`
/// labels; label `(i-1)s + j` stands for the pair `(y_i, z_j)`.
pub fn construct_3partite(sizes: (usize, usize, usize)) -> Result<(Graph, SimRep)> {
    let (a, b, c) = sizes;
    if a != b || b != c {
        return Err(Error::InvalidArgument(format!("parts must have equal size, got {a}, {b}, {c}")));
    }
    let s = a;
    let g = make_named_graph(Family::CompleteTripartite, &[s, s, s])?;
    let label = |i: usize, j: usize| (i - 1) * s + j;
    let mut intervals = vec![unit(); 3 * s];
    let mut labels = vec![LabelSet::EMPTY; 3 * s];
    let all: LabelSet = (1..=s * s).collect();
    for t in 0..s {
        let (lo, hi) = (t as i64, s as i64);
        intervals[t] = Interval::new(Rational::new(lo, hi), Rational::new(lo + 1, hi))?;
        labels[t] = all;
    }
    for i in 1..=s {
        labels[s + i - 1] = (1..=s).map(|j| label(i, j)).collect();
        labels[2 * s + i - 1] = (1..=s).map(|j| label(j, i)).collect();
    }
    let rep = SimRep::new(s * s, intervals, labels)?;
    let rep = checked(&g, rep, "3-partite")?;
    Ok((g, rep))
}

/// The cycle `0 - 1 - ... - (n-1) - 0` with two labels.
///
/// Two long intervals `L` and `R` carry `{1, 2}` and sit on either side of
/// `(0, 1)`. Between them, a chain of `a` intervals labelled `{1}` and a chain
/// of `b` intervals labelled `{2}` each tile `(0, 1)`, with `a + b = n - 2`.
/// Vertex numbering walks the `{1}` chain from right to left, then `L`, the
/// `{2}` chain from left to right, then `R`. For `n = 4` this yields
/// `(0,1){1}`, `(-3/4,1/4){1,2}`, `(0,1){2}`, `(3/4,7/4){1,2}`.
pub fn construct_cycle(n: usize) -> Result<(Graph, SimRep)> {
    if n < 4 {
        return Err(Error::InvalidArgument(format!("cycle length must be at least 4, got {n}")));
    }
    let g = make_named_graph(Family::Cycle, &[n])?;
    let a = (n - 1) / 2;
    let b = (n - 2) / 2;
    let delta = Rational::new(1, 4 * a.max(b) as i64);
    let piece = |i: usize, len: usize| -> Interval {
        let (i, len) = (i as i64, len as i64);
        let mut l = Rational::new(i - 1, len);
        let mut r = Rational::new(i, len);
        if i > 1 {
            l = l - delta;
        }
        if i < len {
            r = r + delta;
        }
        Interval { l, r }
    };
    let mut intervals = Vec::with_capacity(n);
    let mut labels = Vec::with_capacity(n);
    for i in (1..=a).rev() {
        intervals.push(piece(i, a));
        labels.push(LabelSet::singleton(1));
    }
    let both = LabelSet::from_labels([1, 2]);
    intervals.push(Interval { l: Rational::new(-3, 4), r: delta });
    labels.push(both);
    for i in 1..=b {
        intervals.push(piece(i, b));
        labels.push(LabelSet::singleton(2));
    }
    intervals.push(Interval { l: Rational::ONE - delta, r: Rational::new(7, 4) });
    labels.push(both);
    let rep = SimRep::new(2, intervals, labels)?;
    let rep = checked(&g, rep, "cycle")?;
    Ok((g, rep))
}
