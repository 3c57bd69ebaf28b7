//! Predicted step-graph shapes and stabilization values for bipartite
//! tournaments, split by the acyclic and cyclic characterizations.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::classify::{classify_structure, StructureSummary};
use crate::digraph::{BipartiteTournament, Part};
use crate::graph::Graph;
use crate::sink::{is_acyclic_via_sinks, SinkAnalysis};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PredictError {
    #[error("instance has a directed cycle; the acyclic prediction does not apply")]
    NotAcyclic,
    #[error("instance is acyclic; the cyclic prediction does not apply")]
    NotCyclic,
}

/// A predicted quantity, either pinned exactly or bounded from above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueClaim {
    Exact(usize),
    AtMost(usize),
}

impl ValueClaim {
    pub fn admits(&self, observed: usize) -> bool {
        match *self {
            ValueClaim::Exact(v) => observed == v,
            ValueClaim::AtMost(v) => observed <= v,
        }
    }
}

impl std::fmt::Display for ValueClaim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ValueClaim::Exact(v) => write!(f, "= {v}"),
            ValueClaim::AtMost(v) => write!(f, "<= {v}"),
        }
    }
}

/// Expected shape of one part: nontrivial clique sizes (largest first)
/// plus isolated vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartShape {
    pub clique_sizes: Vec<usize>,
    pub isolated: usize,
}

impl PartShape {
    /// A single clique of `clique` vertices inside a part of `total`
    /// vertices, everything else isolated. Cliques of size 0 or 1
    /// dissolve into the isolated count.
    pub fn single_clique(clique: usize, total: usize) -> Self {
        if clique >= 2 {
            PartShape { clique_sizes: vec![clique], isolated: total - clique }
        } else {
            PartShape { clique_sizes: Vec::new(), isolated: total }
        }
    }

    pub fn label(&self) -> String {
        let mut parts: Vec<String> = self.clique_sizes.iter().map(|s| format!("K{s}")).collect();
        if self.isolated > 0 || parts.is_empty() {
            parts.push(format!("I{}", self.isolated));
        }
        parts.join("+")
    }

    /// Whether a computed classification realizes this shape.
    pub fn matches(&self, observed: &StructureSummary) -> bool {
        observed
            .as_cliques_and_isolated()
            .is_some_and(|(cliques, isolated)| {
                cliques == self.clique_sizes && isolated == self.isolated
            })
    }
}

/// What the characterization says about `C^m` for one particular `m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ShapeClaim {
    /// The whole step graph has no edges.
    EdgelessWholeGraph,
    /// Exact per-part shapes.
    PerPart { part1: PartShape, part2: PartShape },
    /// Each part is a disjoint union of cliques with at most two
    /// nontrivial ones, or two overlapping cliques after removing
    /// isolated vertices.
    TwoCliqueDisjunction,
}

/// Applicability branch of a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Applicability {
    Acyclic,
    CyclicZetaZero,
    CyclicZetaOne,
    CyclicZetaAtLeastTwo,
}

/// Predicted shape for one step count plus the predicted stabilization
/// values for the whole sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Prediction {
    pub m: usize,
    pub shape: ShapeClaim,
    pub cindex: ValueClaim,
    pub cperiod: ValueClaim,
    pub tag: Applicability,
}

fn part_sizes(bt: &BipartiteTournament) -> (usize, usize) {
    (bt.part1().len(), bt.part2().len())
}

fn count_in_part(bt: &BipartiteTournament, set: &BTreeSet<usize>, which: Part) -> usize {
    set.iter().filter(|&&v| bt.part_of(v) == which).count()
}

/// Expected index of an acyclic bipartite tournament from its sink
/// sequence: `zeta + 1` when the last sink level has at least two
/// vertices, else `zeta` or `zeta - 1` depending on the level below.
pub fn acyclic_cindex(a: &SinkAnalysis) -> usize {
    let zeta = a.zeta();
    if zeta == 0 {
        // degenerate (arcless or single-vertex): constant edgeless sequence
        return 1;
    }
    if a.w(zeta).len() >= 2 {
        zeta + 1
    } else if zeta == 1 || a.w(zeta - 1).len() >= 2 {
        zeta
    } else {
        zeta - 1
    }
}

/// Prediction for an acyclic bipartite tournament at step `m`.
pub fn predict_acyclic(
    bt: &BipartiteTournament,
    a: &SinkAnalysis,
    m: usize,
) -> Result<Prediction, PredictError> {
    assert!(m >= 1, "step count must be positive");
    if !is_acyclic_via_sinks(a) {
        return Err(PredictError::NotAcyclic);
    }
    let zeta = a.zeta();
    let (n1, n2) = part_sizes(bt);
    let shape = if m > zeta {
        ShapeClaim::EdgelessWholeGraph
    } else if m == zeta {
        // everything but the last sink level is eliminated, so that level
        // is the lone clique and the rest of both parts sits isolated
        let clique = a.w(zeta).len();
        let host = bt.part_of(*a.w(zeta).first().unwrap());
        let (part1, part2) = match host {
            Part::One => {
                (PartShape::single_clique(clique, n1), PartShape::single_clique(0, n2))
            }
            Part::Two => {
                (PartShape::single_clique(0, n1), PartShape::single_clique(clique, n2))
            }
        };
        ShapeClaim::PerPart { part1, part2 }
    } else {
        let eliminated = a.eliminated_before(m);
        let surv1 = n1 - count_in_part(bt, &eliminated, Part::One);
        let surv2 = n2 - count_in_part(bt, &eliminated, Part::Two);
        ShapeClaim::PerPart {
            part1: PartShape::single_clique(surv1, n1),
            part2: PartShape::single_clique(surv2, n2),
        }
    };
    Ok(Prediction {
        m,
        shape,
        cindex: ValueClaim::Exact(acyclic_cindex(a)),
        cperiod: ValueClaim::Exact(1),
        tag: Applicability::Acyclic,
    })
}

/// Prediction for a bipartite tournament with a directed cycle at step
/// `m >= 2`.
pub fn predict_cyclic(
    bt: &BipartiteTournament,
    a: &SinkAnalysis,
    m: usize,
) -> Result<Prediction, PredictError> {
    assert!(m >= 2, "the cyclic characterization starts at step 2");
    if is_acyclic_via_sinks(a) {
        return Err(PredictError::NotCyclic);
    }
    let zeta = a.zeta();
    let (n1, n2) = part_sizes(bt);
    let (tag, cindex, cperiod, shape) = match zeta {
        0 => (
            Applicability::CyclicZetaZero,
            ValueClaim::AtMost(4),
            ValueClaim::Exact(1),
            ShapeClaim::TwoCliqueDisjunction,
        ),
        1 => (
            Applicability::CyclicZetaOne,
            ValueClaim::AtMost(4),
            ValueClaim::AtMost(2),
            ShapeClaim::TwoCliqueDisjunction,
        ),
        _ => {
            let shape = if m >= zeta {
                let core = a.final_survivors();
                ShapeClaim::PerPart {
                    part1: PartShape::single_clique(count_in_part(bt, core, Part::One), n1),
                    part2: PartShape::single_clique(count_in_part(bt, core, Part::Two), n2),
                }
            } else {
                // 2 <= m <= zeta - 1
                let eliminated = a.eliminated_before(m);
                let surv1 = n1 - count_in_part(bt, &eliminated, Part::One);
                let surv2 = n2 - count_in_part(bt, &eliminated, Part::Two);
                ShapeClaim::PerPart {
                    part1: PartShape::single_clique(surv1, n1),
                    part2: PartShape::single_clique(surv2, n2),
                }
            };
            (
                Applicability::CyclicZetaAtLeastTwo,
                ValueClaim::Exact(zeta),
                ValueClaim::Exact(1),
                shape,
            )
        }
    };
    Ok(Prediction { m, shape, cindex, cperiod, tag })
}

/// Whether a classification satisfies the two-clique disjunction: a
/// disjoint union of cliques with at most two nontrivial ones, or two
/// overlapping cliques once isolated vertices are removed.
pub fn satisfies_two_clique_disjunction(s: &StructureSummary) -> bool {
    match s {
        StructureSummary::Edgeless { .. } => true,
        StructureSummary::CliquesPlusIsolated { clique_sizes, .. } => clique_sizes.len() <= 2,
        StructureSummary::TwoOverlappingCliques { overlap, .. } => *overlap >= 1,
        StructureSummary::Irregular => false,
    }
}

/// Whether a classification is a complete graph or a union of two
/// complete graphs covering the whole part (the sink-free claim, which
/// leaves no isolated vertices outside the union).
pub fn satisfies_sink_free_union(s: &StructureSummary) -> bool {
    match s {
        StructureSummary::Edgeless { vertices } => *vertices <= 2,
        StructureSummary::CliquesPlusIsolated { clique_sizes, isolated } => {
            clique_sizes.len() + isolated <= 2
        }
        StructureSummary::TwoOverlappingCliques { isolated, .. } => *isolated == 0,
        StructureSummary::Irregular => false,
    }
}

/// Checks one step graph against a shape claim; the error carries a
/// human-readable witness.
pub fn check_shape(
    bt: &BipartiteTournament,
    claim: &ShapeClaim,
    step_graph: &Graph,
    m: usize,
) -> Result<(), String> {
    let part_set = |p: &[usize]| -> BTreeSet<usize> { p.iter().copied().collect() };
    match claim {
        ShapeClaim::EdgelessWholeGraph => {
            if step_graph.is_edgeless() {
                Ok(())
            } else {
                let (u, v) = step_graph.edges().next().unwrap();
                Err(format!(
                    "expected edgeless step graph at m={m}, found edge {{{}, {}}}",
                    bt.digraph().label(u),
                    bt.digraph().label(v)
                ))
            }
        }
        ShapeClaim::PerPart { part1, part2 } => {
            for (expected, verts, name) in
                [(part1, bt.part1(), "part1"), (part2, bt.part2(), "part2")]
            {
                let got = classify_structure(step_graph, &part_set(verts));
                if !expected.matches(&got) {
                    return Err(format!(
                        "at m={m}, {name} should be {} but classifies as {}",
                        expected.label(),
                        got.label()
                    ));
                }
            }
            Ok(())
        }
        ShapeClaim::TwoCliqueDisjunction => {
            for (verts, name) in [(bt.part1(), "part1"), (bt.part2(), "part2")] {
                let got = classify_structure(step_graph, &part_set(verts));
                if !satisfies_two_clique_disjunction(&got) {
                    return Err(format!(
                        "at m={m}, {name} classifies as {} which is outside the two-clique family",
                        got.label()
                    ));
                }
            }
            Ok(())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::competition::{competition_profile, default_safety_cap, m_step_competition_graph};
    use crate::fixtures;
    use crate::sink::sink_analysis;

    #[test]
    fn fig1_step_one_prediction() {
        let bt = fixtures::fig1_d();
        let a = sink_analysis(bt.digraph()).unwrap();
        let p = predict_acyclic(&bt, &a, 1).unwrap();
        // one eliminated vertex (y3); survivors form K3 and K2
        assert_eq!(
            p.shape,
            ShapeClaim::PerPart {
                part1: PartShape { clique_sizes: vec![3], isolated: 0 },
                part2: PartShape { clique_sizes: vec![2], isolated: 1 },
            }
        );
        let g1 = m_step_competition_graph(bt.digraph(), 1);
        check_shape(&bt, &p.shape, &g1, 1).unwrap();
    }

    #[test]
    fn fig1_step_zeta_prediction_is_effectively_edgeless() {
        let bt = fixtures::fig1_d();
        let a = sink_analysis(bt.digraph()).unwrap();
        let p = predict_acyclic(&bt, &a, 3).unwrap();
        // last level is a single vertex, so both parts dissolve into
        // isolated vertices
        assert_eq!(
            p.shape,
            ShapeClaim::PerPart {
                part1: PartShape { clique_sizes: vec![], isolated: 3 },
                part2: PartShape { clique_sizes: vec![], isolated: 3 },
            }
        );
        let g3 = m_step_competition_graph(bt.digraph(), 3);
        check_shape(&bt, &p.shape, &g3, 3).unwrap();
    }

    #[test]
    fn fig1_predicted_profile_matches_computed() {
        let bt = fixtures::fig1_d();
        let a = sink_analysis(bt.digraph()).unwrap();
        let p = predict_acyclic(&bt, &a, 1).unwrap();
        assert_eq!(p.cindex, ValueClaim::Exact(3));
        assert_eq!(p.cperiod, ValueClaim::Exact(1));
        let prof = competition_profile(bt.digraph(), default_safety_cap(6)).unwrap();
        assert!(p.cindex.admits(prof.cindex()));
        assert!(p.cperiod.admits(prof.cperiod()));
    }

    #[test]
    fn fig1_dprime_exact_cyclic_prediction() {
        let bt = fixtures::fig1_dprime();
        let a = sink_analysis(bt.digraph()).unwrap();
        let p = predict_cyclic(&bt, &a, 2).unwrap();
        assert_eq!(p.tag, Applicability::CyclicZetaAtLeastTwo);
        assert_eq!(p.cindex, ValueClaim::Exact(2));
        assert_eq!(p.cperiod, ValueClaim::Exact(1));
        // survivors {x1, x2, y1, y2} split two per part
        assert_eq!(
            p.shape,
            ShapeClaim::PerPart {
                part1: PartShape { clique_sizes: vec![2], isolated: 1 },
                part2: PartShape { clique_sizes: vec![2], isolated: 1 },
            }
        );
        for m in 2..=6 {
            let pm = predict_cyclic(&bt, &a, m).unwrap();
            let gm = m_step_competition_graph(bt.digraph(), m);
            check_shape(&bt, &pm.shape, &gm, m).unwrap();
        }
        let prof = competition_profile(bt.digraph(), default_safety_cap(6)).unwrap();
        assert_eq!((prof.cindex(), prof.cperiod()), (2, 1));
    }

    #[test]
    fn fig2_bounds_admit_the_computed_profile() {
        let bt = fixtures::fig2_d();
        let a = sink_analysis(bt.digraph()).unwrap();
        let p = predict_cyclic(&bt, &a, 2).unwrap();
        assert_eq!(p.tag, Applicability::CyclicZetaZero);
        assert_eq!(p.cindex, ValueClaim::AtMost(4));
        assert_eq!(p.cperiod, ValueClaim::Exact(1));
        let prof = competition_profile(bt.digraph(), default_safety_cap(6)).unwrap();
        assert!(p.cindex.admits(prof.cindex()));
        assert!(p.cperiod.admits(prof.cperiod()));
        // the bound is attained exactly here
        assert_eq!(prof.cindex(), 4);
    }

    #[test]
    fn wrong_branch_is_rejected() {
        let bt = fixtures::fig1_d();
        let a = sink_analysis(bt.digraph()).unwrap();
        assert_eq!(predict_cyclic(&bt, &a, 2).unwrap_err(), PredictError::NotCyclic);

        let btc = fixtures::fig2_d();
        let ac = sink_analysis(btc.digraph()).unwrap();
        assert_eq!(predict_acyclic(&btc, &ac, 1).unwrap_err(), PredictError::NotAcyclic);
    }
}
