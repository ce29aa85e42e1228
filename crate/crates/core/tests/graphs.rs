use grig_core::graph::{compare_graphs, graph_from_window, DiffSite};
use grig_core::group::{act, act_word, kappa, orbit_size, schreier_graph, GroupWord, TreeVertex};
use grig_core::language::special_sequence_window;
use grig_core::substitution::eta_prefix;
use grig_core::{Generator, LabeledGraph, Letter, PointedWord};

#[test]
fn generators_are_involutions() {
    for n in 1..=8 {
        for bits in 0..1u64 << n {
            let v = TreeVertex::new(n, bits).unwrap();
            for g in Generator::ALL {
                assert_eq!(act(g, act(g, v)), v);
            }
        }
    }
}

#[test]
fn kappa_images() {
    let w: GroupWord = "abcd".parse().unwrap();
    assert_eq!(kappa(&w).to_string(), "acadbc");
}

#[test]
fn bcd_is_trivial() {
    let w: GroupWord = "bcd".parse().unwrap();
    for bits in 0..1u64 << 10 {
        let v = TreeVertex::new(10, bits).unwrap();
        assert_eq!(act_word(&w, v), v);
    }
}

#[test]
fn orbits_are_full_levels() {
    for n in 0..=10 {
        assert_eq!(orbit_size(n).unwrap(), 1 << n);
    }
}

#[test]
fn schreier_graphs_are_paths_from_eta() {
    for n in 2..=9 {
        let g = schreier_graph(n).unwrap();
        assert!(g.is_connected());
        g.check_label_regular(false).unwrap();
        let w = PointedWord::from_start(eta_prefix((1 << n) - 1).unwrap()).unwrap();
        let diff = compare_graphs(&g, &graph_from_window(&w)).unwrap();
        assert_eq!(diff.len(), 6, "n={n}");
        assert!(diff.confined_to_end_loops());
    }
}

#[test]
fn special_graphs_differ_at_the_centre() {
    let gx = graph_from_window(&special_sequence_window(Letter::X, 64).unwrap());
    let gz = graph_from_window(&special_sequence_window(Letter::Z, 64).unwrap());
    let diff = compare_graphs(&gx, &gz).unwrap();
    assert!(!diff.is_empty());
    assert!(diff
        .entries
        .iter()
        .all(|e| matches!(e.site, DiffSite::Loop(i) | DiffSite::Link(i) if (62..=64).contains(&i))));
}

#[test]
fn edge_list_round_trip_level_eight() {
    let g = schreier_graph(8).unwrap();
    let text = g.to_edge_list();
    let back = LabeledGraph::from_edge_list(&text).unwrap();
    assert_eq!(back.to_edge_list(), text);
    assert_eq!(back.census(), g.census());
}
