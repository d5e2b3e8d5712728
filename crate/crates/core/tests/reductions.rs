use simint::oracle::{all_minimum_ids, brute_force_with, OracleCaps, Problem};
use simint::reduce::{
    check_w_structure, coloring_gadget, misp_to_idsp_gadget, parse_disjoint_paths, parse_misp, preprocess_degree_one,
    preprocess_step, solve_disjoint_paths, solve_misp, write_disjoint_paths, write_misp, MispInstance,
};
use simint::selftest::small_misp_instances;
use simint::simrep::verify_representation;

fn chi(g: &simint::Graph) -> usize {
    brute_force_with(Problem::ChromaticNumber, g, &OracleCaps::unlimited()).unwrap().value
}

#[test]
fn directed_path_is_a_yes_instance() {
    let inst = parse_disjoint_paths("n 3\ng 0 1\ng 1 2\nh 2 0\n").unwrap();
    assert!(solve_disjoint_paths(&inst).unwrap().is_some());
    let gadget = coloring_gadget(&inst).unwrap();
    assert_eq!(gadget.k, 1);
    assert!(gadget.graph.is_edgeless());
    assert_eq!(verify_representation(&gadget.graph, &gadget.rep).unwrap(), None);
    assert_eq!(chi(&gadget.graph), 1);
}

#[test]
fn competing_demands_need_more_colours() {
    // demands 3 -> 0 and 4 -> 0 both have to use the arc 0 -> 1
    let text = "n 6\ng 0 1\ng 0 2\ng 1 2\ng 1 3\ng 1 4\ng 2 5\nh 2 1\nh 3 0\nh 4 0\nh 5 1\n";
    let inst = parse_disjoint_paths(text).unwrap();
    assert_eq!(inst.xi(), 2);
    assert_eq!(solve_disjoint_paths(&inst).unwrap(), None);
    let flat = preprocess_degree_one(&inst).unwrap();
    assert_eq!(flat.xi(), 0);
    assert_eq!(solve_disjoint_paths(&flat).unwrap(), None);
    let gadget = coloring_gadget(&flat).unwrap();
    assert_eq!(gadget.k, 4);
    assert_eq!(gadget.rep.d(), 2);
    assert!(chi(&gadget.graph) > gadget.k);
}

#[test]
fn one_split_for_a_doubled_head() {
    // w = 0 is the head of two demands
    let inst = parse_disjoint_paths("n 3\ng 0 1\ng 0 2\nh 1 0\nh 2 0\n").unwrap();
    assert_eq!(inst.xi(), 1);
    let next = preprocess_step(&inst).unwrap();
    assert_eq!(next.xi(), 0);
    assert_eq!(next.n(), 4);
    assert!(preprocess_step(&next).is_none());
    assert_eq!(solve_disjoint_paths(&inst).unwrap().is_some(), solve_disjoint_paths(&next).unwrap().is_some());
}

#[test]
fn instance_files_round_trip() {
    let text = "n 6\ng 0 1\ng 0 2\ng 1 2\ng 1 3\ng 1 4\ng 2 5\nh 2 1\nh 3 0\nh 4 0\nh 5 1\n";
    let inst = parse_disjoint_paths(text).unwrap();
    assert_eq!(parse_disjoint_paths(&write_disjoint_paths(&inst)).unwrap(), inst);
    for inst in small_misp_instances() {
        assert_eq!(parse_misp(&write_misp(&inst)).unwrap(), inst);
    }
    assert!(parse_disjoint_paths("n 2\ng 0 1\ng 1 0\nh 0 0\n").is_err());
}

#[test]
fn gadget_sizes() {
    for inst in small_misp_instances() {
        let (k, q, m) = (inst.k(), inst.q(), inst.m());
        let g = misp_to_idsp_gadget(&inst).unwrap();
        assert_eq!(g.w.iter().flatten().flatten().count(), k * q * (m + 1));
        assert_eq!(g.s.iter().flatten().count(), k * (2 * m * q + 2));
        assert_eq!(g.edge_vertices.len(), m);
        assert_eq!(g.graph.n(), k * q * (m + 1) + k * (2 * m * q + 2) + m);
        assert_eq!(g.rep.d(), k + 2);
        assert_eq!(verify_representation(&g.graph, &g.rep).unwrap(), None);
    }
}

#[test]
fn one_edge_gadgets() {
    // q = 2 with one edge: choosing the other vertex of either class avoids it
    let yes = MispInstance::new(4, vec![(0, 2)], vec![vec![0, 1], vec![2, 3]]).unwrap();
    assert!(solve_misp(&yes).is_some());
    let g = misp_to_idsp_gadget(&yes).unwrap();
    let (min, all) = all_minimum_ids(&g.graph, &OracleCaps::unlimited()).unwrap();
    assert_eq!((min, g.target), (4, 4));
    assert!(all.iter().all(|d| check_w_structure(&g, d)));

    let no = MispInstance::new(2, vec![(0, 1)], vec![vec![0], vec![1]]).unwrap();
    assert!(solve_misp(&no).is_none());
    let g = misp_to_idsp_gadget(&no).unwrap();
    let (min, _) = all_minimum_ids(&g.graph, &OracleCaps::unlimited()).unwrap();
    assert!(min > g.target);
}

#[test]
fn w_structure_needs_a_full_union() {
    let inst = MispInstance::new(4, vec![(0, 2)], vec![vec![0, 1], vec![2, 3]]).unwrap();
    let g = misp_to_idsp_gadget(&inst).unwrap();
    let full = g.w_union(&[0, 1]);
    assert!(check_w_structure(&g, &full));
    assert!(!check_w_structure(&g, &full[1..]));
    assert!(!check_w_structure(&g, &[]));
}

#[test]
fn w_union_dominates_exactly_for_independent_choices() {
    for inst in small_misp_instances() {
        let g = misp_to_idsp_gadget(&inst).unwrap();
        for a in 0..inst.q() {
            for b in 0..inst.q() {
                let chosen_independent = !inst.graph.has_edge(inst.classes[0][a], inst.classes[1][b]);
                let w = g.w_union(&[a, b]);
                assert_eq!(g.graph.is_dominating(&w), chosen_independent, "{:?} ({a}, {b})", inst.edges);
            }
        }
    }
}

/// The other half does not hold: W intervals of different classes overlap
/// and can both carry the label of an edge they are not incident to.
#[test]
fn w_union_of_independent_choice_can_be_dependent() {
    let inst = MispInstance::new(4, vec![(0, 2)], vec![vec![0, 1], vec![2, 3]]).unwrap();
    let g = misp_to_idsp_gadget(&inst).unwrap();
    assert!(!inst.graph.has_edge(1, 3));
    let w = g.w_union(&[1, 1]);
    assert!(!g.graph.is_independent(&w));
}
