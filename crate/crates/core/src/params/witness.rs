//! Certificates read off a representation: a thin ordering, a linear mim
//! ordering and a path decomposition whose bags are cliques of the interval
//! supergraph.

use super::width::{cut_values, LmimWitness, LMIM_VERIFY_CAP};
use crate::decomposition::PathDecomposition;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::labels::LabelSet;
use crate::simrep::{ensure_valid, SimRep};
use crate::solve::interval_maximal_cliques;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThinnessWitness {
    pub partition: Vec<Vec<usize>>,
    pub order: Vec<usize>,
}

impl ThinnessWitness {
    pub fn classes(&self) -> usize {
        self.partition.len()
    }

    /// Checks that `partition` and `order` cover every vertex once and that
    /// for positions `a < b < c` with `a`, `b` in one class, an edge from `a`
    /// to `c` forces one from `b` to `c`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.n();
        let bad = |msg: String| Err(Error::InvalidArgument(format!("thinness witness: {msg}")));
        let mut class = vec![usize::MAX; n];
        for (i, c) in self.partition.iter().enumerate() {
            for &v in c {
                if v >= n || class[v] != usize::MAX {
                    return bad(format!("vertex {v} is out of range or in two classes"));
                }
                class[v] = i;
            }
        }
        if let Some(v) = class.iter().position(|&c| c == usize::MAX) {
            return bad(format!("vertex {v} is in no class"));
        }
        let mut sorted = self.order.clone();
        sorted.sort_unstable();
        if sorted != (0..n).collect::<Vec<_>>() {
            return bad("order is not a permutation of the vertices".into());
        }
        let o = &self.order;
        for c in 0..n {
            for b in 0..c {
                if g.has_edge(o[b], o[c]) {
                    continue;
                }
                if let Some(a) = (0..b).find(|&a| class[o[a]] == class[o[b]] && g.has_edge(o[a], o[c])) {
                    return bad(format!(
                        "{} and {} share a class, {} sees {} but {} does not",
                        o[a], o[b], o[a], o[c], o[b]
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Vertices by ascending right endpoint, ties by id.
fn right_endpoint_order(rep: &SimRep) -> Vec<usize> {
    let mut order: Vec<usize> = (0..rep.n()).collect();
    order.sort_by_key(|&v| (rep.interval(v).r, v));
    order
}

/// Classes are the vertices sharing a label set, so there are at most `2^d`.
pub fn thinness_witness(g: &Graph, rep: &SimRep) -> Result<ThinnessWitness> {
    ensure_valid(g, rep)?;
    let mut keys: Vec<LabelSet> = rep.distinct_label_sets();
    keys.sort_unstable();
    let partition = keys.iter().map(|s| (0..rep.n()).filter(|&v| rep.labels(v) == *s).collect()).collect();
    Ok(ThinnessWitness { partition, order: right_endpoint_order(rep) })
}

/// Right-endpoint ordering with bound `d`. Cut values are computed only up to
/// [`LMIM_VERIFY_CAP`] vertices; larger witnesses come back unverified.
pub fn lmim_witness(g: &Graph, rep: &SimRep) -> Result<LmimWitness> {
    ensure_valid(g, rep)?;
    let order = right_endpoint_order(rep);
    let cuts = (g.n() <= LMIM_VERIFY_CAP).then(|| cut_values(g, &order));
    Ok(LmimWitness { order, cuts, bound: rep.d() })
}

/// Bags are the maximal cliques of the interval supergraph, left to right.
/// Vertices without labels are isolated in `g` and would only inflate the
/// bags, so each gets a singleton bag at the end instead.
pub fn path_decomposition_from_rep(g: &Graph, rep: &SimRep) -> Result<PathDecomposition> {
    ensure_valid(g, rep)?;
    let labelled: Vec<usize> = (0..rep.n()).filter(|&v| !rep.labels(v).is_empty()).collect();
    let mut bags = interval_maximal_cliques(rep, &labelled);
    bags.extend((0..rep.n()).filter(|&v| rep.labels(v).is_empty()).map(|v| vec![v]));
    let pd = PathDecomposition::new(bags);
    pd.validate(g).map_err(|e| Error::Internal(format!("decomposition from representation: {e}")))?;
    Ok(pd)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct_3partite, construct_bipartite, construct_from_edges};
    use crate::graph::{make_named_graph, Family};
    use crate::oracle::{brute_force, Problem};
    use crate::simrep::fixtures::c4;
    use crate::simrep::Interval;

    fn interval_path() -> (Graph, SimRep) {
        let rep = SimRep::new(
            1,
            vec![Interval::int(0, 2), Interval::int(1, 4), Interval::int(3, 6), Interval::int(5, 7)],
            vec![LabelSet::singleton(1); 4],
        )
        .unwrap();
        (rep.graph(), rep)
    }

    #[test]
    fn thinness_examples() {
        let (g, rep) = interval_path();
        let w = thinness_witness(&g, &rep).unwrap();
        assert_eq!(w.classes(), 1);
        w.validate(&g).unwrap();

        let (g, rep) = c4();
        let w = thinness_witness(&g, &rep).unwrap();
        assert_eq!(w.classes(), 3);
        w.validate(&g).unwrap();
    }

    #[test]
    fn thinness_validation_catches_bad_order() {
        let p3 = make_named_graph(Family::Path, &[3]).unwrap();
        let w = ThinnessWitness { partition: vec![vec![0, 1, 2]], order: vec![0, 2, 1] };
        w.validate(&p3).unwrap();
        let p4 = make_named_graph(Family::Path, &[4]).unwrap();
        let w = ThinnessWitness { partition: vec![vec![0, 1, 2, 3]], order: vec![1, 3, 0, 2] };
        assert!(w.validate(&p4).is_err());
        let w = ThinnessWitness { partition: vec![vec![0, 1]], order: vec![0, 1, 2, 3] };
        assert!(w.validate(&p4).unwrap_err().to_string().contains("no class"));
    }

    #[test]
    fn lmim_examples() {
        let (g, rep) = interval_path();
        let w = lmim_witness(&g, &rep).unwrap();
        assert!(w.verified());
        assert_eq!(w.value(), Some(1));

        let (g, rep) = c4();
        assert!(lmim_witness(&g, &rep).unwrap().verified());

        let k33 = make_named_graph(Family::CompleteBipartite, &[3, 3]).unwrap();
        let rep = construct_bipartite(&k33, (&[0, 1, 2], &[3, 4, 5])).unwrap();
        let w = lmim_witness(&k33, &rep).unwrap();
        assert_eq!(w.bound, 3);
        assert!(w.verified());
    }

    #[test]
    fn lmim_large_is_unverified() {
        let g = make_named_graph(Family::Path, &[13]).unwrap();
        let rep = construct_from_edges(&g).unwrap();
        let w = lmim_witness(&g, &rep).unwrap();
        assert_eq!(w.cuts, None);
        assert_eq!(w.order.len(), 13);
        assert!(!w.verified());
    }

    #[test]
    fn decomposition_examples() {
        let (g, rep) = interval_path();
        let pd = path_decomposition_from_rep(&g, &rep).unwrap();
        assert_eq!(pd.bags, vec![vec![0, 1], vec![1, 2], vec![2, 3]]);

        let (g, rep) = c4();
        let pd = path_decomposition_from_rep(&g, &rep).unwrap();
        assert!(pd.independence_number(&g).unwrap() <= 2);

        let (k222, rep) = construct_3partite((2, 2, 2)).unwrap();
        assert_eq!(rep.d(), 4);
        let pd = path_decomposition_from_rep(&k222, &rep).unwrap();
        let omega = brute_force(Problem::CliqueNumber, &k222).unwrap().value;
        assert!(pd.max_bag() <= 4 * omega);
        assert!(pd.independence_number(&k222).unwrap() <= 4);
    }

    #[test]
    fn unlabelled_vertices_get_own_bags() {
        let g = Graph::empty(2);
        let rep = SimRep::new(1, vec![Interval::int(0, 1); 2], vec![LabelSet::EMPTY; 2]).unwrap();
        let pd = path_decomposition_from_rep(&g, &rep).unwrap();
        assert_eq!(pd.bags, vec![vec![0], vec![1]]);
    }
}
