use proptest::prelude::*;
use simint::construct::{construct_from_ecc, construct_from_edges, construct_from_path_decomposition};
use simint::cover::ecc_greedy;
use simint::graph::{induced_subgraph, parse_graph, write_graph};
use simint::oracle::{brute_force, Problem};
use simint::params::{path_decomposition_from_rep, pathwidth_exact};
use simint::simrep::{
    canonicalize, interval_supergraph, label_graph, read_rep, restrict, verify_representation, write_rep,
};
use simint::solve::{dominating_set_fpt, independent_set_fpt, search_node_bound};
use simint::{Graph, Interval, LabelSet, Rational, SimRep};

fn rep_strategy(max_n: usize, max_d: usize) -> impl Strategy<Value = SimRep> {
    (1..=max_d, 0..=max_n).prop_flat_map(|(d, n)| {
        let iv = (-8i64..8, 1i64..6, 1i64..4)
            .prop_map(|(l, len, den)| Interval::new(Rational::new(l, den), Rational::new(l + len * den, den)).unwrap());
        let labels = (0u128..1 << d).prop_map(LabelSet::from_bits);
        (prop::collection::vec(iv, n), prop::collection::vec(labels, n))
            .prop_map(move |(ivs, ls)| SimRep::new(d, ivs, ls).unwrap())
    })
}

fn graph_strategy(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn intersection(a: &Graph, b: &Graph) -> Vec<(usize, usize)> {
    a.edges().into_iter().filter(|&(u, v)| b.has_edge(u, v)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_is_interval_and_label_intersection(rep in rep_strategy(12, 6)) {
        let g = rep.graph();
        prop_assert_eq!(g.edges(), intersection(&interval_supergraph(&rep), &label_graph(&rep)));
        prop_assert_eq!(verify_representation(&g, &rep).unwrap(), None);
    }

    #[test]
    fn canonical_form_is_stable(rep in rep_strategy(12, 6)) {
        let c = canonicalize(&rep);
        prop_assert_eq!(canonicalize(&c), c.clone());
        prop_assert_eq!(c.graph(), rep.graph());
        let (g2, r2) = read_rep(&write_rep(&rep.graph(), &c)).unwrap();
        prop_assert_eq!(g2, rep.graph());
        prop_assert_eq!(r2, c);
    }

    #[test]
    fn restriction_represents_induced_subgraph(rep in rep_strategy(12, 5), keep in prop::collection::vec(any::<bool>(), 12)) {
        let s: Vec<usize> = (0..rep.n()).filter(|&v| keep[v]).collect();
        let (sub, map) = restrict(&rep, &s).unwrap();
        let (h, hmap) = induced_subgraph(&rep.graph(), &s).unwrap();
        prop_assert_eq!(&map, &hmap);
        prop_assert_eq!(verify_representation(&h, &sub).unwrap(), None);
    }

    #[test]
    fn constructors_give_valid_representations(g in graph_strategy(9)) {
        let r = construct_from_edges(&g).unwrap();
        prop_assert_eq!(r.d(), g.m());
        prop_assert_eq!(verify_representation(&g, &r).unwrap(), None);
        let cover = ecc_greedy(&g).unwrap();
        let r = construct_from_ecc(&g, &cover).unwrap();
        prop_assert_eq!(r.d(), cover.len());
        prop_assert_eq!(verify_representation(&g, &r).unwrap(), None);
        let (pw, pd) = pathwidth_exact(&g).unwrap();
        let r = construct_from_path_decomposition(&g, &pd).unwrap();
        prop_assert!(r.d() <= (pw + 1) * pw);
        prop_assert_eq!(verify_representation(&g, &r).unwrap(), None);
    }

    #[test]
    fn searches_agree_with_the_oracle(rep in rep_strategy(10, 4), k in 0usize..5) {
        let g = rep.graph();
        let alpha = brute_force(Problem::MaxIndependentSet, &g).unwrap().value;
        let gamma = brute_force(Problem::MinDominatingSet, &g).unwrap().value;
        let is = independent_set_fpt(&g, &rep, k).unwrap();
        prop_assert_eq!(is.found, alpha >= k);
        prop_assert!(is.nodes as u128 <= search_node_bound(k, rep.d()));
        let ds = dominating_set_fpt(&g, &rep, k).unwrap();
        prop_assert_eq!(ds.found, gamma <= k);
        prop_assert!(ds.nodes as u128 <= search_node_bound(k, rep.d()));
        if let Some(w) = ds.witness {
            prop_assert!(g.is_dominating(&w));
        }
    }

    #[test]
    fn decomposition_from_representation(rep in rep_strategy(12, 4)) {
        let g = rep.graph();
        let pd = path_decomposition_from_rep(&g, &rep).unwrap();
        pd.validate(&g).unwrap();
        prop_assert!(pd.independence_number(&g).unwrap() <= rep.d());
    }

    #[test]
    fn edge_list_round_trip(g in graph_strategy(12)) {
        prop_assert_eq!(parse_graph(&write_graph(&g)).unwrap(), g);
    }
}
