//! Competition graphs, their m-step generalization by two independent
//! routes, and detection of the index and period at which the graph
//! sequence stabilizes.

use std::collections::HashMap;

use thiserror::Error;

use crate::digraph::Digraph;
use crate::graph::Graph;
use crate::matrix::{adjacency_matrix, BooleanMatrix};
use crate::walks::m_step_prey_set;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("matrix powers did not repeat within the safety cap of {cap} steps")]
    CapExceeded { cap: usize },
}

/// Row graph of `a`: vertices are rows, and two rows are adjacent when
/// they share a 1 in some column.
pub fn row_graph(a: &BooleanMatrix) -> Graph {
    let n = a.n();
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if a.rows_intersect(u, v) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Joins two vertices exactly when they have a common prey.
pub fn competition_graph(d: &Digraph) -> Graph {
    row_graph(&adjacency_matrix(d))
}

/// m-step competition graph via the matrix route: the row graph of the
/// m-th Boolean power of the adjacency matrix.
pub fn m_step_competition_graph(d: &Digraph, m: usize) -> Graph {
    assert!(m >= 1, "step count must be positive");
    row_graph(&adjacency_matrix(d).pow(m))
}

/// m-step competition graph straight from the definition: two vertices
/// are adjacent when their m-step prey sets intersect.
///
/// Built on walk enumeration only, as the independent oracle for
/// [`m_step_competition_graph`].
pub fn m_step_competition_graph_oracle(d: &Digraph, m: usize) -> Graph {
    assert!(m >= 1, "step count must be positive");
    let prey: Vec<_> = (0..d.n()).map(|v| m_step_prey_set(d, v, m)).collect();
    let mut g = Graph::new(d.n());
    for u in 0..d.n() {
        for v in u + 1..d.n() {
            if prey[u].intersection(&prey[v]).next().is_some() {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// The graphs `C^1 .. C^m_max`, sharing one incremental power computation.
pub fn competition_graph_sequence(d: &Digraph, m_max: usize) -> Vec<Graph> {
    let a = adjacency_matrix(d);
    let mut power = a.clone();
    let mut out = Vec::with_capacity(m_max);
    for m in 1..=m_max {
        if m > 1 {
            power = power.mul(&a);
        }
        out.push(row_graph(&power));
    }
    out
}

/// Index and period of the stabilized competition graph sequence,
/// together with the underlying matrix quantities.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompetitionProfile {
    cindex: usize,
    cperiod: usize,
    matrix_index: usize,
    matrix_period: usize,
    graph_prefix: Vec<Graph>,
}

impl CompetitionProfile {
    /// Smallest `q` from which the graph sequence is periodic.
    pub fn cindex(&self) -> usize {
        self.cindex
    }

    /// Smallest `p` with `C^q = C^{q+p}` at `q = cindex`.
    pub fn cperiod(&self) -> usize {
        self.cperiod
    }

    /// Smallest index from which the matrix power sequence is periodic.
    pub fn matrix_index(&self) -> usize {
        self.matrix_index
    }

    /// Minimal period of the matrix power sequence.
    pub fn matrix_period(&self) -> usize {
        self.matrix_period
    }

    /// `C^1 ..= C^{cindex + cperiod}` as evidence for the reported values.
    pub fn graph_prefix(&self) -> &[Graph] {
        &self.graph_prefix
    }
}

/// Default power budget for [`competition_profile`], generous for the
/// instance sizes this crate targets.
pub fn default_safety_cap(n: usize) -> usize {
    2 * n * n + 16
}

/// Detects where the sequence `C^1, C^2, ...` stabilizes.
///
/// The matrix power sequence is scanned with a fingerprint table until a
/// power repeats, which pins the matrix index and period exactly. The
/// graph period is then the smallest divisor of the matrix period that
/// closes the graph cycle, the graph index is found by walking downward
/// from the matrix index, and the period is re-minimized at that index
/// (the defining minimality is on the index first, then the period).
pub fn competition_profile(
    d: &Digraph,
    safety_cap: usize,
) -> Result<CompetitionProfile, ProfileError> {
    assert!(safety_cap >= 1, "safety cap must be positive");
    let a = adjacency_matrix(d);

    // powers[t-1] = A^t; scan until a power repeats
    let mut powers: Vec<BooleanMatrix> = Vec::new();
    let mut seen: HashMap<BooleanMatrix, usize> = HashMap::new();
    let mut matrix_index = 0;
    let mut matrix_period = 0;
    let mut found = false;
    for t in 1..=safety_cap {
        let current = if t == 1 { a.clone() } else { powers.last().unwrap().mul(&a) };
        if let Some(&s) = seen.get(&current) {
            matrix_index = s;
            matrix_period = t - s;
            found = true;
            break;
        }
        seen.insert(current.clone(), t);
        powers.push(current);
    }
    if !found {
        return Err(ProfileError::CapExceeded { cap: safety_cap });
    }

    // A^m for any m >= 1, folding indices beyond the detected cycle;
    // powers holds A^1 ..= A^{matrix_index + matrix_period - 1}
    let power_at = |m: usize| -> &BooleanMatrix {
        let idx = if m < matrix_index + matrix_period {
            m
        } else {
            matrix_index + (m - matrix_index) % matrix_period
        };
        &powers[idx - 1]
    };
    let graph_at = |m: usize| -> Graph { row_graph(power_at(m)) };

    // smallest divisor of the matrix period that is a period of the
    // graph cycle
    let divisors = (1..=matrix_period).filter(|d| matrix_period % d == 0);
    let mut graph_period = matrix_period;
    for dv in divisors {
        if (0..matrix_period).all(|i| graph_at(matrix_index + i) == graph_at(matrix_index + i + dv))
        {
            graph_period = dv;
            break;
        }
    }

    // walk the index downward while the cycle still closes one step earlier
    let closes_at = |q: usize| -> bool {
        let horizon = matrix_index + matrix_period;
        (0..=horizon.saturating_sub(q))
            .all(|i| graph_at(q + i) == graph_at(q + graph_period + i))
    };
    let mut cindex = matrix_index;
    while cindex > 1 && closes_at(cindex - 1) {
        cindex -= 1;
    }

    // re-minimize the period at the final index
    let base = graph_at(cindex);
    let cperiod = (1..=graph_period)
        .find(|&p| base == graph_at(cindex + p))
        .expect("the graph period itself always closes");

    let graph_prefix = (1..=cindex + cperiod).map(graph_at).collect();

    Ok(CompetitionProfile { cindex, cperiod, matrix_index, matrix_period, graph_prefix })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::Digraph;
    use crate::fixtures;
    use crate::matrix::BooleanMatrix;

    fn edge_labels(d: &Digraph, g: &Graph) -> Vec<(String, String)> {
        g.edges()
            .map(|(u, v)| {
                let (a, b) = (d.label(u).to_string(), d.label(v).to_string());
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect()
    }

    #[test]
    fn row_graph_of_identity_is_edgeless() {
        assert!(row_graph(&BooleanMatrix::identity(3)).is_edgeless());
    }

    #[test]
    fn row_graph_of_all_ones_is_complete() {
        let mut a = BooleanMatrix::zeros(4);
        for i in 0..4 {
            for j in 0..4 {
                a.set(i, j, true);
            }
        }
        let g = row_graph(&a);
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn fig1_competition_graph_edges() {
        let bt = fixtures::fig1_d();
        let d = bt.digraph();
        let g = competition_graph(d);
        let expect: Vec<(String, String)> = [("x1", "x2"), ("x1", "x3"), ("x2", "x3"), ("y1", "y2")]
            .iter()
            .map(|&(a, b)| (a.to_string(), b.to_string()))
            .collect();
        let mut got = edge_labels(d, &g);
        got.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn fig2_step_graphs_match_the_published_panels() {
        let bt = fixtures::fig2_d();
        let d = bt.digraph();
        let g3 = m_step_competition_graph(d, 3);
        let mut got3 = edge_labels(d, &g3);
        got3.sort();
        assert_eq!(
            got3,
            [("a", "b"), ("a", "c"), ("b", "c"), ("d", "e"), ("e", "f")]
                .map(|(a, b)| (a.to_string(), b.to_string()))
        );

        let g4 = m_step_competition_graph(d, 4);
        let mut got4 = edge_labels(d, &g4);
        got4.sort();
        assert_eq!(
            got4,
            [("a", "b"), ("a", "c"), ("b", "c"), ("d", "e"), ("d", "f"), ("e", "f")]
                .map(|(a, b)| (a.to_string(), b.to_string()))
        );
    }

    #[test]
    fn fig1_fourth_step_graph_is_edgeless() {
        let bt = fixtures::fig1_d();
        assert!(m_step_competition_graph(bt.digraph(), 4).is_edgeless());
    }

    #[test]
    fn oracle_agrees_on_the_fixtures() {
        for bt in [fixtures::fig1_d(), fixtures::fig1_dprime(), fixtures::fig2_d()] {
            let d = bt.digraph();
            for m in 1..=8 {
                assert_eq!(
                    m_step_competition_graph(d, m),
                    m_step_competition_graph_oracle(d, m),
                    "routes disagree at m={m}"
                );
            }
        }
    }

    #[test]
    fn single_arc_is_edgeless_in_every_step_graph() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        assert!(m_step_competition_graph_oracle(&d, 1).is_edgeless());
    }

    #[test]
    fn directed_four_cycle_step_graphs_are_edgeless() {
        // every vertex has exactly one m-step prey and they are pairwise
        // distinct, so no two vertices ever compete; frozen from the oracle
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        for m in 1..=8 {
            let g = m_step_competition_graph_oracle(&d, m);
            assert!(g.is_edgeless(), "m={m}");
            assert_eq!(g, m_step_competition_graph(&d, m));
        }
    }

    #[test]
    fn sequence_helper_matches_per_step_computation() {
        let bt = fixtures::fig2_d();
        let d = bt.digraph();
        let seq = competition_graph_sequence(d, 6);
        for (i, g) in seq.iter().enumerate() {
            assert_eq!(g, &m_step_competition_graph(d, i + 1));
        }
    }

    #[test]
    fn fig2_profile_is_four_one() {
        let bt = fixtures::fig2_d();
        let p = competition_profile(bt.digraph(), default_safety_cap(6)).unwrap();
        assert_eq!((p.cindex(), p.cperiod()), (4, 1));
        assert_eq!(p.graph_prefix().len(), 5);
    }

    #[test]
    fn fig1_profile_is_three_one() {
        let bt = fixtures::fig1_d();
        let p = competition_profile(bt.digraph(), default_safety_cap(6)).unwrap();
        assert_eq!((p.cindex(), p.cperiod()), (3, 1));
    }

    #[test]
    fn fig1_dprime_profile_is_two_one() {
        let bt = fixtures::fig1_dprime();
        let p = competition_profile(bt.digraph(), default_safety_cap(6)).unwrap();
        assert_eq!((p.cindex(), p.cperiod()), (2, 1));
    }

    #[test]
    fn single_arc_profile_is_one_one() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let p = competition_profile(&d, default_safety_cap(2)).unwrap();
        assert_eq!((p.cindex(), p.cperiod()), (1, 1));
    }

    #[test]
    fn cap_exceeded_is_reported() {
        let bt = fixtures::fig2_d();
        assert_eq!(
            competition_profile(bt.digraph(), 2).unwrap_err(),
            ProfileError::CapExceeded { cap: 2 }
        );
    }
}
