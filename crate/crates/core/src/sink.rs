//! Sink elimination: repeatedly strip the current sink set and record the
//! levels until the sinks are everything or nothing.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::digraph::{BipartiteTournament, Digraph, Part};
use crate::walks::m_step_prey_set;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SinkError {
    #[error("sink analysis needs at least one vertex")]
    EmptyDigraph,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParityError {
    #[error("parity partition is only defined when the elimination index is at least 1")]
    ZetaZero,
}

/// Vertices of outdegree zero.
pub fn sinks(d: &Digraph) -> BTreeSet<usize> {
    (0..d.n()).filter(|&v| d.out_degree(v) == 0).collect()
}

/// Result of running the sink elimination to completion.
///
/// Level `i` holds the sinks of the `i`-th residual digraph; the recursion
/// stops at the first level whose sinks are the whole residual vertex set
/// or empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SinkAnalysis {
    zeta: usize,
    w_sets: Vec<BTreeSet<usize>>,
    survivors: Vec<BTreeSet<usize>>,
}

impl SinkAnalysis {
    /// The sink elimination index.
    pub fn zeta(&self) -> usize {
        self.zeta
    }

    /// The sink sets `W_0 ..= W_zeta`.
    pub fn w_sets(&self) -> &[BTreeSet<usize>] {
        &self.w_sets
    }

    pub fn w(&self, i: usize) -> &BTreeSet<usize> {
        &self.w_sets[i]
    }

    /// Vertex sets of the residual digraphs `D_0 ..= D_zeta`.
    pub fn survivor_sets(&self) -> &[BTreeSet<usize>] {
        &self.survivors
    }

    /// Vertices of the final residual digraph `D_zeta`.
    pub fn final_survivors(&self) -> &BTreeSet<usize> {
        self.survivors.last().unwrap()
    }

    /// Union of the sink sets strictly below level `k`.
    pub fn eliminated_before(&self, k: usize) -> BTreeSet<usize> {
        let mut out = BTreeSet::new();
        for w in self.w_sets.iter().take(k) {
            out.extend(w.iter().copied());
        }
        out
    }

    /// Level of `v`, or `None` for vertices never eliminated (in a cyclic
    /// digraph the core vertices belong to no sink set).
    pub fn level_of(&self, v: usize) -> Option<usize> {
        self.w_sets.iter().position(|w| w.contains(&v))
    }
}

/// Runs the sink elimination recursion on `d`.
pub fn sink_analysis(d: &Digraph) -> Result<SinkAnalysis, SinkError> {
    if d.n() == 0 {
        return Err(SinkError::EmptyDigraph);
    }
    let mut current = d.clone();
    let mut alive: BTreeSet<usize> = (0..d.n()).collect();
    let mut w_sets = Vec::new();
    let mut survivors = Vec::new();
    loop {
        let w: BTreeSet<usize> = alive.iter().copied().filter(|&v| current.out_degree(v) == 0).collect();
        survivors.push(alive.clone());
        let stop = w == alive || w.is_empty();
        w_sets.push(w.clone());
        if stop {
            break;
        }
        for v in &w {
            alive.remove(v);
        }
        current = current.induced_keeping_indices(&alive);
    }
    let zeta = w_sets.len() - 1;
    Ok(SinkAnalysis { zeta, w_sets, survivors })
}

/// A digraph is acyclic exactly when the final sink set is nonempty.
pub fn is_acyclic_via_sinks(a: &SinkAnalysis) -> bool {
    !a.w_sets[a.zeta].is_empty()
}

/// How the sink levels fall across the bipartition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityReport {
    /// Part hosting the even-indexed sink sets.
    pub even_part: Part,
    /// Part hosting the odd-indexed sink sets.
    pub odd_part: Part,
    /// First level whose sink set leaves its parity's part, whether by
    /// straddling both parts or by sitting wholly in the wrong one.
    pub violation_level: Option<usize>,
    /// Whether the even/odd unions are exactly the two parts.
    pub unions_equal_parts: bool,
    /// Acyclicity per the sink criterion, for cross-checking against
    /// `unions_equal_parts`.
    pub acyclic: bool,
}

/// Reports which part hosts the even levels, which hosts the odd ones,
/// and whether the unions exhaust the parts.
pub fn check_parity_partition(
    bt: &BipartiteTournament,
    a: &SinkAnalysis,
) -> Result<ParityReport, ParityError> {
    if a.zeta() == 0 {
        return Err(ParityError::ZetaZero);
    }
    // zeta >= 1, so W_0 is nonempty; its first vertex names the even part
    // (a straddling W_0 still shows up via violation_level).
    let even_part = bt.part_of(*a.w(0).first().unwrap());
    let odd_part = even_part.other();

    let mut violation_level = None;
    let mut even_union = BTreeSet::new();
    let mut odd_union = BTreeSet::new();
    for (i, w) in a.w_sets().iter().enumerate() {
        if w.is_empty() {
            continue;
        }
        let expected = if i % 2 == 0 { even_part } else { odd_part };
        if w.iter().any(|&v| bt.part_of(v) != expected) {
            violation_level.get_or_insert(i);
            continue;
        }
        if i % 2 == 0 {
            even_union.extend(w.iter().copied());
        } else {
            odd_union.extend(w.iter().copied());
        }
    }

    let part_set = |p: Part| -> BTreeSet<usize> { bt.part(p).iter().copied().collect() };
    let unions_equal_parts =
        even_union == part_set(even_part) && odd_union == part_set(odd_part);

    Ok(ParityReport {
        even_part,
        odd_part,
        violation_level,
        unions_equal_parts,
        acyclic: is_acyclic_via_sinks(a),
    })
}

/// Largest walk length from `source` that is at most `cap`, or `cap + 1`
/// when walks of length `cap + 1` still exist (cyclic reach).
pub fn max_walk_length_from(d: &Digraph, source: usize, cap: usize) -> usize {
    if !m_step_prey_set(d, source, cap + 1).is_empty() {
        return cap + 1;
    }
    (0..=cap)
        .rev()
        .find(|&l| !m_step_prey_set(d, source, l).is_empty())
        .expect("length 0 always has the source itself")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::digraph::{validate_bipartite_tournament, Digraph};
    use crate::fixtures;
    use crate::walks::has_directed_cycle;

    fn idx(d: &Digraph, l: &str) -> usize {
        d.labels().iter().position(|s| s == l).unwrap()
    }

    fn named(d: &Digraph, names: &[&str]) -> BTreeSet<usize> {
        names.iter().map(|l| idx(d, l)).collect()
    }

    #[test]
    fn sinks_examples() {
        let bt = fixtures::fig1_d();
        assert_eq!(sinks(bt.digraph()), named(bt.digraph(), &["y3"]));

        assert_eq!(sinks(&Digraph::new(3)), BTreeSet::from([0, 1, 2]));

        let cyc = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(sinks(&cyc).is_empty());
    }

    #[test]
    fn fig1_d_sink_sequence() {
        let bt = fixtures::fig1_d();
        let d = bt.digraph();
        let a = sink_analysis(d).unwrap();
        assert_eq!(a.zeta(), 3);
        assert_eq!(a.w(0), &named(d, &["y3"]));
        assert_eq!(a.w(1), &named(d, &["x2", "x3"]));
        assert_eq!(a.w(2), &named(d, &["y1", "y2"]));
        assert_eq!(a.w(3), &named(d, &["x1"]));
        // stops because W_3 equals the remaining vertex set
        assert_eq!(a.final_survivors(), &named(d, &["x1"]));
        assert!(is_acyclic_via_sinks(&a));
    }

    #[test]
    fn fig1_dprime_sink_sequence() {
        let bt = fixtures::fig1_dprime();
        let d = bt.digraph();
        let a = sink_analysis(d).unwrap();
        assert_eq!(a.zeta(), 2);
        assert_eq!(a.w(0), &named(d, &["y3"]));
        assert_eq!(a.w(1), &named(d, &["x3"]));
        assert!(a.w(2).is_empty());
        assert_eq!(a.final_survivors(), &named(d, &["x1", "x2", "y1", "y2"]));
        assert!(!is_acyclic_via_sinks(&a));
    }

    #[test]
    fn four_cycle_stops_immediately() {
        let d = Digraph::from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let a = sink_analysis(&d).unwrap();
        assert_eq!(a.zeta(), 0);
        assert!(a.w(0).is_empty());
        assert!(!is_acyclic_via_sinks(&a));
    }

    #[test]
    fn single_vertex_has_zeta_zero() {
        let a = sink_analysis(&Digraph::new(1)).unwrap();
        assert_eq!(a.zeta(), 0);
        assert_eq!(a.w(0), &BTreeSet::from([0]));
        assert!(is_acyclic_via_sinks(&a));
    }

    #[test]
    fn empty_digraph_is_rejected() {
        assert_eq!(sink_analysis(&Digraph::new(0)).unwrap_err(), SinkError::EmptyDigraph);
    }

    #[test]
    fn termination_invariants_hold() {
        for bt in [fixtures::fig1_d(), fixtures::fig1_dprime(), fixtures::fig2_d()] {
            let d = bt.digraph();
            let a = sink_analysis(d).unwrap();
            let last = a.w(a.zeta());
            assert!(last.is_empty() || last == a.final_survivors());
            assert!(!a.final_survivors().is_empty());
            let mut union = a.eliminated_before(a.zeta());
            union.extend(a.final_survivors().iter().copied());
            assert_eq!(union, (0..d.n()).collect::<BTreeSet<_>>());
            // no earlier level satisfies the stopping rule
            for i in 0..a.zeta() {
                assert!(!a.w(i).is_empty());
                assert_ne!(a.w(i), &a.survivor_sets()[i]);
            }
        }
    }

    #[test]
    fn parity_fig1_d() {
        let bt = fixtures::fig1_d();
        let a = sink_analysis(bt.digraph()).unwrap();
        let rep = check_parity_partition(&bt, &a).unwrap();
        assert_eq!(rep.even_part, Part::Two); // y side
        assert_eq!(rep.odd_part, Part::One);
        assert_eq!(rep.violation_level, None);
        assert!(rep.unions_equal_parts);
        assert!(rep.acyclic);
    }

    #[test]
    fn parity_fig1_dprime() {
        let bt = fixtures::fig1_dprime();
        let a = sink_analysis(bt.digraph()).unwrap();
        let rep = check_parity_partition(&bt, &a).unwrap();
        assert_eq!(rep.even_part, Part::Two);
        assert_eq!(rep.violation_level, None);
        assert!(!rep.unions_equal_parts); // survivors remain in both parts
        assert!(!rep.acyclic);
    }

    #[test]
    fn parity_single_arc() {
        let d = Digraph::from_arcs(2, [(0, 1)]).unwrap();
        let bt = validate_bipartite_tournament(d, [0], [1]).unwrap();
        let a = sink_analysis(bt.digraph()).unwrap();
        assert_eq!(a.zeta(), 1);
        let rep = check_parity_partition(&bt, &a).unwrap();
        assert_eq!(rep.even_part, Part::Two);
        assert!(rep.unions_equal_parts);
        assert!(rep.acyclic);
    }

    #[test]
    fn parity_rejects_zeta_zero() {
        let d = Digraph::from_arcs(4, [(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        let bt = validate_bipartite_tournament(d, [0, 1], [2, 3]).unwrap();
        assert!(has_directed_cycle(bt.digraph()));
        let a = sink_analysis(bt.digraph()).unwrap();
        assert_eq!(a.zeta(), 0);
        assert_eq!(check_parity_partition(&bt, &a).unwrap_err(), ParityError::ZetaZero);
    }

    #[test]
    fn max_walk_lengths() {
        let bt = fixtures::fig1_d();
        let d = bt.digraph();
        assert_eq!(max_walk_length_from(d, idx(d, "y3"), 10), 0);
        assert_eq!(max_walk_length_from(d, idx(d, "x1"), 10), 3);

        let btp = fixtures::fig1_dprime();
        let dp = btp.digraph();
        assert_eq!(max_walk_length_from(dp, idx(dp, "x1"), 10), 11);
    }
}
