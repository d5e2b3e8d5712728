use simint::construct::construct_3partite;
use simint::cover::{ecc_exact, ecc_greedy};
use simint::graph::{make_named_graph, Family};
use simint::params::{
    enumerate_interval_layouts, linear_mim_exact, lmim_witness, path_alpha_exact, pathwidth_exact, si_decide, si_exact,
    LAYOUT_CAP, PATHWIDTH_CAP,
};
use simint::simrep::verify_representation;
use simint::Graph;

fn named(f: Family, p: &[usize]) -> Graph {
    make_named_graph(f, p).unwrap()
}

#[test]
fn layout_counts() {
    let counts: Vec<usize> = (1..=3).map(|n| enumerate_interval_layouts(n).unwrap().len()).collect();
    assert_eq!(counts, vec![1, 3, 15]);
    assert!(enumerate_interval_layouts(LAYOUT_CAP + 1).unwrap_err().is_cap_exceeded());
}

#[test]
fn edge_clique_covers() {
    let (v, _) = ecc_exact(&named(Family::Complete, &[3])).unwrap();
    assert_eq!(v, 1);
    let c4 = named(Family::Cycle, &[4]);
    assert_eq!(ecc_exact(&c4).unwrap().0, 4);
    let comatch = named(Family::ComplementOfMatching, &[6]);
    let (v, cover) = ecc_exact(&comatch).unwrap();
    cover.validate(&comatch).unwrap();
    assert!(v <= ecc_greedy(&comatch).unwrap().len());
    assert!(si_exact(&comatch).unwrap().0 <= v);
}

#[test]
fn decisions() {
    let p4 = named(Family::Path, &[4]);
    assert!(si_decide(&p4, 1).unwrap().is_some());
    let c4 = named(Family::Cycle, &[4]);
    assert!(si_decide(&c4, 1).unwrap().is_none());
    let rep = si_decide(&c4, 2).unwrap().unwrap();
    assert_eq!(verify_representation(&c4, &rep).unwrap(), None);
    let (k222, _) = construct_3partite((2, 2, 2)).unwrap();
    assert!(si_decide(&k222, 3).unwrap().is_none());
    assert!(si_decide(&k222, 4).unwrap().is_some());
}

#[test]
fn exact_values() {
    assert_eq!(si_exact(&Graph::empty(5)).unwrap().0, 0);
    let (v, rep) = si_exact(&named(Family::CompleteBipartite, &[3, 3])).unwrap();
    assert_eq!((v, rep.d()), (3, 3));
    // at least log2(n - 1)
    assert!(si_exact(&named(Family::ComplementOfMatching, &[6])).unwrap().0 >= 3);
}

#[test]
fn pathwidths() {
    assert_eq!(pathwidth_exact(&named(Family::Path, &[5])).unwrap().0, 1);
    assert_eq!(pathwidth_exact(&named(Family::Cycle, &[4])).unwrap().0, 2);
    assert_eq!(pathwidth_exact(&named(Family::Complete, &[4])).unwrap().0, 3);
    let (pw, pd) = pathwidth_exact(&named(Family::Cycle, &[10])).unwrap();
    assert_eq!((pw, pd.width()), (2, 2));
    assert!(pathwidth_exact(&Graph::empty(PATHWIDTH_CAP + 1)).unwrap_err().is_cap_exceeded());
}

#[test]
fn linear_mim() {
    let p6 = named(Family::Path, &[6]);
    let (v, w) = linear_mim_exact(&p6).unwrap();
    assert_eq!((v, w.value()), (1, Some(1)));
    let c4 = named(Family::Cycle, &[4]);
    let v = linear_mim_exact(&c4).unwrap().0;
    assert!((1..=2).contains(&v));
    let k33 = named(Family::CompleteBipartite, &[3, 3]);
    let (_, rep) = si_exact(&k33).unwrap();
    let w = lmim_witness(&k33, &rep).unwrap();
    assert!(w.verified() && w.value().unwrap() <= 3);
    assert!(linear_mim_exact(&k33).unwrap().0 <= 3);
}

#[test]
fn path_independence() {
    assert_eq!(path_alpha_exact(&named(Family::Path, &[5])).unwrap(), 1);
    assert_eq!(path_alpha_exact(&named(Family::Cycle, &[4])).unwrap(), 2);
    for n in [4, 6] {
        assert!(path_alpha_exact(&named(Family::ComplementOfMatching, &[n])).unwrap() <= 2);
    }
}
