//! Representation with `k(k-1)` labels from a path decomposition with bags
//! of size at most `k`.

use super::checked;
use crate::decomposition::PathDecomposition;
use crate::error::Result;
use crate::graph::Graph;
use crate::labels::LabelSet;
use crate::rational::Rational;
use crate::simrep::{Interval, SimRep};

/// A vertex of the normalised decomposition; ids at or above `g.n()` are
/// isolated helpers that pad bags to full size.
struct Lifetime {
    slot: usize,
    first: usize,
    last: usize,
}

/// Rewrites `pd` so that every bag has exactly `k` members and consecutive
/// bags differ by one removal and one insertion. Returns the lifetimes of
/// all vertices (helpers included) over the new bag indices `1..=p`.
fn normalise(g: &Graph, pd: &PathDecomposition, k: usize) -> Vec<Lifetime> {
    let n = g.n();
    let mut life: Vec<Lifetime> = Vec::new();
    let ensure = |life: &mut Vec<Lifetime>, v: usize| {
        while life.len() <= v {
            life.push(Lifetime { slot: 0, first: 0, last: 0 });
        }
    };
    // slots[s] = vertex currently holding slot s
    let mut slots: Vec<usize> = Vec::with_capacity(k);
    let mut next_helper = n;
    let mut bag_index = 1;

    let bags: Vec<&Vec<usize>> = pd.bags.iter().filter(|b| !b.is_empty()).collect();
    let first_bag = bags.first().map(|b| b.as_slice()).unwrap_or(&[]);
    for s in 0..k {
        let v = match first_bag.get(s) {
            Some(&v) => v,
            None => {
                next_helper += 1;
                next_helper - 1
            }
        };
        ensure(&mut life, v);
        life[v] = Lifetime { slot: s, first: 1, last: 1 };
        slots.push(v);
    }

    for next in bags.iter().skip(1) {
        let forget: Vec<usize> = slots.iter().copied().filter(|&v| v < n && !next.contains(&v)).collect();
        let current: Vec<usize> = slots.clone();
        let introduce: Vec<usize> = next.iter().copied().filter(|v| !current.contains(v)).collect();
        for v in forget {
            let s = life[v].slot;
            let h = next_helper;
            next_helper += 1;
            bag_index += 1;
            ensure(&mut life, h);
            life[h] = Lifetime { slot: s, first: bag_index, last: bag_index };
            slots[s] = h;
            for &u in &slots {
                life[u].last = bag_index;
            }
        }
        for v in introduce {
            let s = (0..k).find(|&s| slots[s] >= n).expect("a helper slot is free");
            bag_index += 1;
            ensure(&mut life, v);
            life[v] = Lifetime { slot: s, first: bag_index, last: bag_index };
            slots[s] = v;
            for &u in &slots {
                life[u].last = bag_index;
            }
        }
    }
    life
}

/// Builds the representation: intervals follow the lifetimes in the
/// normalised decomposition, and every pair of slots `{i, j}` gets two labels
/// handed out by a left-to-right sweep over the alternating active vertices.
pub fn construct_from_path_decomposition(g: &Graph, pd: &PathDecomposition) -> Result<SimRep> {
    pd.validate(g)?;
    let n = g.n();
    let k = pd.max_bag();
    if n == 0 {
        return SimRep::new(0, vec![], vec![]);
    }
    let life = normalise(g, pd, k);
    let quarter = Rational::new(1, 4);
    let intervals: Vec<Interval> = life
        .iter()
        .map(|t| Interval {
            l: Rational::integer(t.first as i64) - quarter,
            r: Rational::integer(t.last as i64) + quarter,
        })
        .collect();
    let adjacent = |u: usize, v: usize| u < n && v < n && g.has_edge(u, v);

    let mut by_slot: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (v, t) in life.iter().enumerate() {
        by_slot[t.slot].push(v);
    }
    for s in &mut by_slot {
        s.sort_by_key(|&v| life[v].first);
    }

    let mut labels = vec![LabelSet::EMPTY; life.len()];
    let mut pair = 0;
    for i in 0..k {
        for j in i + 1..k {
            let a_ij = 2 * pair + 1;
            let b_ij = 2 * pair + 2;
            pair += 1;
            let (x, y) = (by_slot[i][0], by_slot[j][0]);
            // the first active vertex is the first one to end later; ties go to the smaller id
            let mut active = match intervals[x].r.cmp(&intervals[y].r) {
                std::cmp::Ordering::Less => y,
                std::cmp::Ordering::Greater => x,
                std::cmp::Ordering::Equal => x.min(y),
            };
            let mut label = a_ij;
            loop {
                labels[active].insert(label);
                let here = intervals[active];
                let other = if life[active].slot == i { j } else { i };
                for &z in &by_slot[other] {
                    let rz = intervals[z].r;
                    if here.l < rz && rz <= here.r && adjacent(active, z) {
                        labels[z].insert(label);
                    }
                }
                let Some(&w) = by_slot[other].iter().find(|&&w| intervals[w].l < here.r && here.r < intervals[w].r)
                else {
                    break;
                };
                if !adjacent(active, w) {
                    label = if label == a_ij { b_ij } else { a_ij };
                }
                active = w;
            }
        }
    }

    let d = k * k.saturating_sub(1);
    let rep = SimRep::new(d, intervals[..n].to_vec(), labels[..n].to_vec())?;
    checked(g, rep, "path decomposition")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_named_graph, Family};
    use crate::simrep::verify_representation;

    #[test]
    fn documented_examples() {
        let p4 = make_named_graph(Family::Path, &[4]).unwrap();
        let pd = PathDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3]]);
        let rep = construct_from_path_decomposition(&p4, &pd).unwrap();
        assert!(rep.d() <= 2);

        let c4 = make_named_graph(Family::Cycle, &[4]).unwrap();
        let pd = PathDecomposition::new(vec![vec![0, 1, 3], vec![1, 2, 3]]);
        let rep = construct_from_path_decomposition(&c4, &pd).unwrap();
        assert!(rep.d() <= 6);

        let k3 = make_named_graph(Family::Complete, &[3]).unwrap();
        let pd = PathDecomposition::new(vec![vec![0, 1, 2]]);
        let rep = construct_from_path_decomposition(&k3, &pd).unwrap();
        assert_eq!(verify_representation(&k3, &rep).unwrap(), None);
    }

    #[test]
    fn wide_decomposition_of_sparse_graph() {
        let g = Graph::from_edges(6, &[(0, 3), (1, 4), (2, 5), (0, 5)]).unwrap();
        let pd = PathDecomposition::new(vec![vec![0, 1, 2, 5], vec![0, 1, 3, 4], vec![1, 4]]);
        construct_from_path_decomposition(&g, &pd).unwrap();
    }

    #[test]
    fn rejects_invalid_decomposition() {
        let p4 = make_named_graph(Family::Path, &[4]).unwrap();
        let pd = PathDecomposition::new(vec![vec![0, 1], vec![2, 3]]);
        assert!(construct_from_path_decomposition(&p4, &pd).is_err());
    }
}
