//! Small named bipartite tournaments used throughout the tests and the
//! CLI: two six-vertex instances whose sink sequences differ in character
//! (one acyclic, one cyclic) and a sink-free instance whose competition
//! index attains the upper bound of 4.

use std::collections::BTreeMap;

use crate::digraph::{validate_bipartite_tournament, BipartiteTournament, Digraph};

fn build(labels: &[&str], n1: usize, arcs: &[(&str, &str)]) -> BipartiteTournament {
    let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
    let index = |l: &str| labels.iter().position(|s| s == l).unwrap();
    let arcs: Vec<(usize, usize)> = arcs.iter().map(|&(u, v)| (index(u), index(v))).collect();
    let n = labels.len();
    let d = Digraph::from_arcs_labeled(n, labels, arcs).expect("fixture arcs are valid");
    validate_bipartite_tournament(d, 0..n1, n1..n).expect("fixture is a bipartite tournament")
}

/// Acyclic instance: parts {x1,x2,x3} and {y1,y2,y3}, nine arcs.
pub fn fig1_d() -> BipartiteTournament {
    build(
        &["x1", "x2", "x3", "y1", "y2", "y3"],
        3,
        &[
            ("x1", "y1"),
            ("x1", "y2"),
            ("x1", "y3"),
            ("y1", "x2"),
            ("y2", "x2"),
            ("x2", "y3"),
            ("y1", "x3"),
            ("y2", "x3"),
            ("x3", "y3"),
        ],
    )
}

/// Cyclic variant of [`fig1_d`]: two arcs reversed, leaving the directed
/// cycle x1 -> y1 -> x2 -> y2 -> x1 after two elimination rounds.
pub fn fig1_dprime() -> BipartiteTournament {
    build(
        &["x1", "x2", "x3", "y1", "y2", "y3"],
        3,
        &[
            ("x1", "y1"),
            ("y2", "x1"),
            ("x1", "y3"),
            ("y1", "x2"),
            ("x2", "y2"),
            ("x2", "y3"),
            ("y1", "x3"),
            ("y2", "x3"),
            ("x3", "y3"),
        ],
    )
}

/// Sink-free instance on parts {a,b,c} and {d,e,f} whose competition
/// index is exactly 4, witnessing sharpness of the sink-free bound.
pub fn fig2_d() -> BipartiteTournament {
    build(
        &["a", "b", "c", "d", "e", "f"],
        3,
        &[
            ("a", "d"),
            ("e", "a"),
            ("a", "f"),
            ("d", "b"),
            ("b", "e"),
            ("b", "f"),
            ("c", "d"),
            ("e", "c"),
            ("f", "c"),
        ],
    )
}

/// All fixtures by name.
pub fn fixtures() -> BTreeMap<&'static str, BipartiteTournament> {
    BTreeMap::from([
        ("fig1_D", fig1_d()),
        ("fig1_Dprime", fig1_dprime()),
        ("fig2_D", fig2_d()),
    ])
}

/// Looks up a single fixture by name.
pub fn fixture(name: &str) -> Option<BipartiteTournament> {
    match name {
        "fig1_D" => Some(fig1_d()),
        "fig1_Dprime" => Some(fig1_dprime()),
        "fig2_D" => Some(fig2_d()),
        _ => None,
    }
}

/// Names accepted by [`fixture`].
pub fn fixture_names() -> Vec<&'static str> {
    vec!["fig1_D", "fig1_Dprime", "fig2_D"]
}
