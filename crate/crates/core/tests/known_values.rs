//! Values computed independently by brute force outside this crate, plus
//! the worked examples that accompany the definitions.

mod common;

use domindex::domination::{domination_profile, mds_containing_greedy};
use domindex::families::{generate, predicted_index, FamilySpec, Predicted};
use domindex::io::parse_edgelist;
use domindex::verify::enumerate_labeled_graphs;
use domindex::Graph;

fn fixture() -> Graph {
    parse_edgelist(include_str!("data/f9.edges")).unwrap().graph
}

fn degrees(spec: &str) -> (Vec<usize>, usize) {
    let g = generate(&spec.parse::<FamilySpec>().unwrap()).unwrap().graph;
    let p = domination_profile(&g).unwrap();
    (p.degrees, p.index)
}

#[test]
fn nine_vertex_fixture() {
    let g = fixture();
    let p = domination_profile(&g).unwrap();
    assert_eq!(p.degrees, vec![3; 9]);
    assert_eq!(p.index, 27);
    assert_eq!((p.gamma, p.upper_gamma, p.ir, p.upper_ir), (3, 3, 3, 3));
    assert_eq!(g.max_degree(), 4);
    assert_eq!(g.wiener_index(), Ok(74));
    let a2 = g.vertex("a2").unwrap();
    let s = mds_containing_greedy(&g, a2).unwrap();
    assert_eq!(g.set_labels(&s), vec!["a2", "a3", "a5"]);
}

#[test]
fn small_graphs() {
    let p3 = domination_profile(&Graph::path(3)).unwrap();
    assert_eq!(p3.degrees, vec![2, 1, 2]);
    assert_eq!((p3.ir, p3.upper_ir), (1, 2));
    assert_eq!(domination_profile(&Graph::cycle(4)).unwrap().upper_gamma, 2);
    let (d, di) = degrees("star:4");
    assert_eq!((d[0], di), (1, 17));
    assert_eq!(domination_profile(&generate(&FamilySpec::Star(4)).unwrap().graph).unwrap().upper_gamma, 4);
}

#[test]
fn named_graphs() {
    let petersen = generate(&FamilySpec::Petersen).unwrap().graph;
    assert_eq!(petersen.wiener_index(), Ok(75));
    assert_eq!(degrees("petersen"), (vec![3; 10], 30));

    let herschel = generate(&FamilySpec::Herschel).unwrap().graph;
    let p = domination_profile(&herschel).unwrap();
    assert_eq!((p.degrees.clone(), p.index), (vec![3; 11], 33));
    assert_eq!((p.upper_gamma, p.upper_ir), (6, 6));

    // the five shadow vertices of the Mycielski construction need four
    assert_eq!(degrees("grotzsch"), (vec![3, 3, 3, 3, 3, 4, 4, 4, 4, 4, 3], 38));
}

#[test]
fn paths() {
    let expected: [(usize, &[usize]); 7] = [
        (2, &[1, 1]),
        (3, &[2, 1, 2]),
        (4, &[2, 2, 2, 2]),
        (5, &[2, 2, 3, 2, 2]),
        (6, &[3, 2, 3, 3, 2, 3]),
        (7, &[3; 7]),
        (8, &[3, 3, 4, 3, 3, 4, 3, 3]),
    ];
    for (n, d) in expected {
        assert_eq!(degrees(&format!("path:{n}")).0, d, "path {n}");
    }
    let index = [(9, 33), (10, 40), (11, 47), (12, 56), (13, 65), (14, 74), (15, 85)];
    for (n, di) in index {
        assert_eq!(degrees(&format!("path:{n}")).1, di, "path {n}");
    }
}

#[test]
fn windmills_and_kragujevac_trees() {
    for (spec, order, di) in [
        ("windmill:2,2", 3, 5),
        ("windmill:3,2", 5, 9),
        ("windmill:3,3", 7, 19),
        ("windmill:4,2", 7, 13),
        ("kragujevac:1,1", 7, 21),
        ("kragujevac:2,2", 11, 55),
        ("kragujevac:2,3", 13, 78),
    ] {
        let (d, index) = degrees(spec);
        assert_eq!((d.len(), index), (order, di), "{spec}");
        let s: FamilySpec = spec.parse().unwrap();
        assert_eq!(predicted_index(&s), Ok(Predicted::Value(di)), "{spec}");
    }
    let (d, _) = degrees("kragujevac:2,3");
    assert!(d.iter().all(|&x| x == d[0]));
}

#[test]
fn labeled_graph_counts() {
    assert_eq!(enumerate_labeled_graphs(4, false).unwrap().count(), 64);
    assert_eq!(enumerate_labeled_graphs(4, true).unwrap().count(), 38);
}

#[test]
fn oracle_agrees_on_fixture() {
    let g = fixture();
    let naive = common::Naive::new(&g);
    assert_eq!(naive.degrees(), vec![3; 9]);
    assert_eq!(naive.wiener(), Some(74));
}
