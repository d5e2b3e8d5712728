//! d-simultaneous interval representations.
//!
//! Every vertex carries an open interval with rational endpoints and a label
//! set over `{1..d}`. Two vertices are adjacent iff their intervals overlap
//! and their label sets meet; intervals that only touch do not overlap.

mod io;

use std::collections::BTreeMap;

pub use io::{read_rep, write_rep};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labels::{LabelSet, MAX_LABELS};
use crate::rational::Rational;

/// Open interval `(l, r)` with `l < r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub l: Rational,
    pub r: Rational,
}

impl Interval {
    pub fn new(l: Rational, r: Rational) -> Result<Self> {
        if l >= r {
            return Err(Error::InvalidRepresentation(format!("degenerate interval ({l}, {r})")));
        }
        Ok(Interval { l, r })
    }

    /// Shorthand for integer endpoints; panics if `l >= r`.
    pub fn int(l: i64, r: i64) -> Self {
        Interval::new(Rational::integer(l), Rational::integer(r)).expect("l < r")
    }

    pub fn intersects(&self, other: &Interval) -> bool {
        intervals_intersect(self, other)
    }
}

pub fn intervals_intersect(a: &Interval, b: &Interval) -> bool {
    a.l < b.r && b.l < a.r
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimRep {
    d: usize,
    intervals: Vec<Interval>,
    labels: Vec<LabelSet>,
}

/// The first pair on which a representation disagrees with its graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `uv` is an edge of the graph but the representation does not produce it.
    Missing(usize, usize),
    /// The representation produces `uv` but the graph has no such edge.
    Spurious(usize, usize),
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Missing(u, v) => write!(f, "missing edge {u} {v}"),
            Violation::Spurious(u, v) => write!(f, "spurious edge {u} {v}"),
        }
    }
}

impl SimRep {
    pub fn new(d: usize, intervals: Vec<Interval>, labels: Vec<LabelSet>) -> Result<Self> {
        if d > MAX_LABELS {
            return Err(Error::InvalidRepresentation(format!("d = {d} exceeds the label cap {MAX_LABELS}")));
        }
        if intervals.len() != labels.len() {
            return Err(Error::InvalidRepresentation(format!(
                "{} intervals but {} label sets",
                intervals.len(),
                labels.len()
            )));
        }
        if let Some(v) = intervals.iter().position(|i| i.l >= i.r) {
            return Err(Error::InvalidRepresentation(format!("degenerate interval at vertex {v}")));
        }
        if let Some(v) = labels.iter().position(|s| s.max_label() > d) {
            return Err(Error::InvalidRepresentation(format!(
                "label out of range at vertex {v}: {} > d = {d}",
                labels[v].max_label()
            )));
        }
        Ok(SimRep { d, intervals, labels })
    }

    pub fn n(&self) -> usize {
        self.intervals.len()
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn interval(&self, v: usize) -> &Interval {
        &self.intervals[v]
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn labels(&self, v: usize) -> LabelSet {
        self.labels[v]
    }

    pub fn label_sets(&self) -> &[LabelSet] {
        &self.labels
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.labels[u].intersects(self.labels[v]) && self.intervals[u].intersects(&self.intervals[v])
    }

    /// Distinct label sets in ascending bit order, empty set included if present.
    pub fn distinct_label_sets(&self) -> Vec<LabelSet> {
        let mut sets = self.labels.clone();
        sets.sort_unstable();
        sets.dedup();
        sets
    }

    /// Renames labels; `perm` is a permutation of `1..=d` with `perm[i-1]`
    /// the new name of label `i`.
    pub fn rename_labels(&self, perm: &[usize]) -> Result<SimRep> {
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=self.d).collect::<Vec<_>>() {
            return Err(Error::InvalidArgument("not a permutation of the labels".into()));
        }
        let labels = self.labels.iter().map(|s| s.rename(perm)).collect();
        SimRep::new(self.d, self.intervals.clone(), labels)
    }

    /// The graph this representation defines.
    pub fn graph(&self) -> Graph {
        let mut g = Graph::empty(self.n());
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.adjacent(u, v) {
                    g.add_edge(u, v).expect("fresh edge");
                }
            }
        }
        g
    }
}

/// Checks `rep` against `g`; `Ok(None)` means the representation is valid.
/// The reported violation is the lexicographically first bad pair.
pub fn verify_representation(g: &Graph, rep: &SimRep) -> Result<Option<Violation>> {
    if g.n() != rep.n() {
        return Err(Error::InvalidArgument(format!("graph has {} vertices, representation has {}", g.n(), rep.n())));
    }
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            match (g.has_edge(u, v), rep.adjacent(u, v)) {
                (true, false) => return Ok(Some(Violation::Missing(u, v))),
                (false, true) => return Ok(Some(Violation::Spurious(u, v))),
                _ => {}
            }
        }
    }
    Ok(None)
}

/// Like [`verify_representation`] but turns a violation into an error.
pub fn ensure_valid(g: &Graph, rep: &SimRep) -> Result<()> {
    match verify_representation(g, rep)? {
        None => Ok(()),
        Some(v) => Err(Error::InvalidRepresentation(v.to_string())),
    }
}

/// Intersection graph of the intervals alone.
pub fn interval_supergraph(rep: &SimRep) -> Graph {
    let mut g = Graph::empty(rep.n());
    for u in 0..rep.n() {
        for v in u + 1..rep.n() {
            if rep.intervals[u].intersects(&rep.intervals[v]) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// Intersection graph of the label sets alone.
pub fn label_graph(rep: &SimRep) -> Graph {
    let mut g = Graph::empty(rep.n());
    for u in 0..rep.n() {
        for v in u + 1..rep.n() {
            if rep.labels[u].intersects(rep.labels[v]) {
                g.add_edge(u, v).expect("fresh edge");
            }
        }
    }
    g
}

/// Representation of the subgraph induced by `s`, numbered like
/// [`crate::graph::induced_subgraph`] (ascending original ids).
pub fn restrict(rep: &SimRep, s: &[usize]) -> Result<(SimRep, Vec<usize>)> {
    let mut map = s.to_vec();
    map.sort_unstable();
    map.dedup();
    if let Some(&v) = map.iter().find(|&&v| v >= rep.n()) {
        return Err(Error::VertexOutOfRange { vertex: v, n: rep.n() });
    }
    let intervals = map.iter().map(|&v| rep.intervals[v]).collect();
    let labels = map.iter().map(|&v| rep.labels[v]).collect();
    Ok((SimRep::new(rep.d, intervals, labels)?, map))
}

/// Moves every endpoint to its rank among the distinct endpoint values,
/// starting at 1. Equal endpoints stay equal, the order is preserved.
pub fn canonicalize(rep: &SimRep) -> SimRep {
    let mut values: BTreeMap<Rational, i64> = BTreeMap::new();
    for i in &rep.intervals {
        values.insert(i.l, 0);
        values.insert(i.r, 0);
    }
    for (rank, slot) in values.values_mut().enumerate() {
        *slot = rank as i64 + 1;
    }
    let intervals = rep.intervals.iter().map(|i| Interval::int(values[&i.l], values[&i.r])).collect();
    SimRep { d: rep.d, intervals, labels: rep.labels.clone() }
}

/// Splits the representation into one interval system per label. On track
/// `i` a vertex keeps its interval if it carries label `i`; otherwise it gets
/// a private dummy interval to the right of everything real.
pub fn to_track_representation(rep: &SimRep) -> Result<Vec<Vec<Interval>>> {
    if rep.d == 0 {
        return Err(Error::InvalidArgument("a track representation needs d >= 1".into()));
    }
    let right = rep.intervals.iter().map(|i| i.r).max().unwrap_or(Rational::ZERO);
    let tracks = (1..=rep.d)
        .map(|t| {
            (0..rep.n())
                .map(|v| {
                    if rep.labels[v].contains(t) {
                        rep.intervals[v]
                    } else {
                        let base = right + Rational::integer(2 * v as i64 + 1);
                        Interval::new(base, base + Rational::ONE).expect("unit interval")
                    }
                })
                .collect()
        })
        .collect();
    Ok(tracks)
}

/// Adjacency in a multi-track interval system: overlap on some track.
pub fn tracks_adjacent(tracks: &[Vec<Interval>], u: usize, v: usize) -> bool {
    u != v && tracks.iter().any(|t| t[u].intersects(&t[v]))
}

/// Small hand-made representations used by tests and the self-test.
pub mod fixtures {
    use super::*;

    pub fn q(p: i64, d: i64) -> Rational {
        Rational::new(p, d)
    }

    /// The four-cycle 0-1-2-3 with two short intervals and two long ones.
    pub fn c4() -> (Graph, SimRep) {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let rep = SimRep::new(
            2,
            vec![
                Interval::int(0, 1),
                Interval::new(q(-3, 4), q(1, 4)).unwrap(),
                Interval::int(0, 1),
                Interval::new(q(3, 4), q(7, 4)).unwrap(),
            ],
            vec![
                LabelSet::from_labels([1]),
                LabelSet::from_labels([1, 2]),
                LabelSet::from_labels([2]),
                LabelSet::from_labels([1, 2]),
            ],
        )
        .unwrap();
        (g, rep)
    }

    /// The claw with every edge subdivided once (centre 0, legs 1-2, 3-4,
    /// 5-6). Its leaves form an asteroidal triple, so it is not an interval
    /// graph; the leg 1-2 is stacked on the centre and split by labels.
    pub fn long_claw() -> (Graph, SimRep) {
        let g = Graph::from_edges(7, &[(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)]).unwrap();
        let one = LabelSet::singleton(1);
        let rep = SimRep::new(
            2,
            vec![
                Interval::int(0, 3),
                Interval::int(1, 2),
                Interval::int(1, 2),
                Interval::new(q(-1, 2), q(1, 2)).unwrap(),
                Interval::new(q(-5, 4), q(-1, 4)).unwrap(),
                Interval::new(q(5, 2), q(7, 2)).unwrap(),
                Interval::new(q(13, 4), q(17, 4)).unwrap(),
            ],
            vec![one, LabelSet::from_labels([1, 2]), LabelSet::singleton(2), one, one, one, one],
        )
        .unwrap();
        (g, rep)
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use crate::graph::{induced_subgraph, make_named_graph, Family};

    #[test]
    fn touching_intervals_do_not_meet() {
        assert!(!intervals_intersect(&Interval::int(0, 1), &Interval::int(1, 2)));
        assert!(intervals_intersect(&Interval::int(0, 2), &Interval::int(1, 3)));
        assert!(intervals_intersect(&Interval::int(0, 3), &Interval::int(1, 2)));
    }

    #[test]
    fn c4_fixture_verifies() {
        let (g, rep) = c4();
        assert_eq!(verify_representation(&g, &rep).unwrap(), None);
        // the short intervals coincide, so F picks up the chord 0-2
        let f = interval_supergraph(&rep);
        assert_eq!(f.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]);
        assert!(!f.has_edge(1, 3));
    }

    #[test]
    fn four_cycle_supergraph_is_a_diamond() {
        // only the two {1,2} intervals are disjoint
        let (_, rep) = c4();
        let f = interval_supergraph(&rep);
        assert_eq!(f.edges(), vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]);
    }

    #[test]
    fn long_claw_fixture_verifies() {
        let (g, rep) = long_claw();
        assert_eq!(verify_representation(&g, &rep).unwrap(), None);
        assert!(interval_supergraph(&rep).has_edge(0, 2));
    }

    #[test]
    fn edgeless_and_triangle_examples() {
        let g = Graph::empty(3);
        let rep = SimRep::new(0, vec![Interval::int(0, 1); 3], vec![LabelSet::EMPTY; 3]).unwrap();
        assert_eq!(verify_representation(&g, &rep).unwrap(), None);
        assert!(interval_supergraph(&rep).m() == 3);

        let k3 = make_named_graph(Family::Complete, &[3]).unwrap();
        let rep = SimRep::new(
            2,
            vec![Interval::int(0, 1); 3],
            vec![LabelSet::singleton(1), LabelSet::singleton(1), LabelSet::singleton(2)],
        )
        .unwrap();
        assert_eq!(verify_representation(&k3, &rep).unwrap(), Some(Violation::Missing(0, 2)));
        assert!(verify_representation(&Graph::empty(2), &rep).is_err());
    }

    #[test]
    fn label_graph_examples() {
        let rep = SimRep::new(
            2,
            vec![Interval::int(0, 1); 3],
            vec![LabelSet::singleton(1), LabelSet::from_labels([1, 2]), LabelSet::singleton(2)],
        )
        .unwrap();
        assert_eq!(label_graph(&rep).edges(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn constructor_rejects_bad_input() {
        let e = SimRep::new(2, vec![Interval::int(0, 1)], vec![LabelSet::singleton(5)]).unwrap_err();
        assert!(e.to_string().contains("label out of range"));
        assert!(Interval::new(Rational::ONE, Rational::ONE).is_err());
        assert!(SimRep::new(129, vec![], vec![]).is_err());
    }

    #[test]
    fn restrict_c4_gives_p3() {
        let (g, rep) = c4();
        let (sub, map) = restrict(&rep, &[0, 1, 2]).unwrap();
        let (h, hmap) = induced_subgraph(&g, &[0, 1, 2]).unwrap();
        assert_eq!(map, hmap);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(verify_representation(&h, &sub).unwrap(), None);
        assert_eq!(restrict(&rep, &[0, 1, 2, 3]).unwrap().0, rep);
        assert!(restrict(&rep, &[4]).is_err());
    }

    #[test]
    fn canonicalize_example_and_idempotence() {
        let rep = SimRep::new(
            0,
            vec![Interval::new(q(0, 1), q(1, 3)).unwrap(), Interval::new(q(1, 4), q(2, 1)).unwrap()],
            vec![LabelSet::EMPTY; 2],
        )
        .unwrap();
        let c = canonicalize(&rep);
        assert_eq!(c.intervals(), &[Interval::int(1, 3), Interval::int(2, 4)]);
        assert_eq!(canonicalize(&c), c);
        let (_, c4rep) = c4();
        let cc = canonicalize(&c4rep);
        // equal endpoints stay equal
        assert_eq!(cc.interval(0), cc.interval(2));
    }

    #[test]
    fn c4_tracks() {
        let (g, rep) = c4();
        let tracks = to_track_representation(&rep).unwrap();
        assert_eq!(tracks.len(), 2);
        for u in 0..4 {
            for v in 0..4 {
                if u != v {
                    assert_eq!(g.has_edge(u, v), tracks_adjacent(&tracks, u, v));
                }
            }
        }
        let none = SimRep::new(0, vec![Interval::int(0, 1); 2], vec![LabelSet::EMPTY; 2]).unwrap();
        assert!(to_track_representation(&none).is_err());
        let one = SimRep::new(1, vec![Interval::int(0, 1); 2], vec![LabelSet::EMPTY; 2]).unwrap();
        let t = to_track_representation(&one).unwrap();
        assert!(!tracks_adjacent(&t, 0, 1));
    }
}
