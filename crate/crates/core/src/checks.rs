//! Registry of named structural checks.
//!
//! Every claim the characterization makes about a bipartite tournament is
//! packaged as a [`TheoremCheck`] behind a common trait: the registry
//! lists them all, callers select by name, and [`verify_instance`] runs
//! whichever apply to a given instance. A failing check carries a
//! concrete witness; on a correct implementation none of them ever fail.

use std::collections::BTreeSet;

use crate::classify::classify_structure;
use crate::competition::{
    competition_graph_sequence, competition_profile, m_step_competition_graph_oracle,
    CompetitionProfile, ProfileError,
};
use crate::digraph::{BipartiteTournament, Part};
use crate::graph::Graph;
use crate::predict::{
    check_shape, predict_acyclic, predict_cyclic, satisfies_sink_free_union, ValueClaim,
};
use crate::sink::{
    check_parity_partition, is_acyclic_via_sinks, max_walk_length_from, sink_analysis,
    SinkAnalysis,
};
use crate::walks::has_directed_cycle;

/// Everything a check may want to look at, computed once per instance.
pub struct VerifyContext<'a> {
    pub bt: &'a BipartiteTournament,
    pub analysis: SinkAnalysis,
    pub profile: Result<CompetitionProfile, ProfileError>,
    /// The step graphs `C^1 ..= C^m_max`.
    pub graphs: Vec<Graph>,
    pub m_max: usize,
}

impl<'a> VerifyContext<'a> {
    pub fn new(bt: &'a BipartiteTournament, m_max: usize, safety_cap: usize) -> Self {
        assert!(m_max >= 2, "checks need at least two step graphs");
        let d = bt.digraph();
        let analysis = sink_analysis(d).expect("bipartite tournaments are nonempty");
        let profile = competition_profile(d, safety_cap);
        let graphs = competition_graph_sequence(d, m_max);
        VerifyContext { bt, analysis, profile, graphs, m_max }
    }

    fn graph(&self, m: usize) -> &Graph {
        &self.graphs[m - 1]
    }

    fn acyclic(&self) -> bool {
        is_acyclic_via_sinks(&self.analysis)
    }

    fn sink_free(&self) -> bool {
        let d = self.bt.digraph();
        (0..d.n()).all(|v| d.out_degree(v) > 0)
    }

    fn profile(&self) -> Result<&CompetitionProfile, String> {
        self.profile.as_ref().map_err(|e| format!("profile unavailable: {e}"))
    }

    fn label(&self, v: usize) -> &str {
        self.bt.digraph().label(v)
    }
}

/// Outcome of asking whether a check applies to an instance.
pub enum Applies {
    Run,
    Skip(&'static str),
}

/// One structural claim, checkable on a single instance.
pub trait TheoremCheck: Sync {
    /// Stable kebab-case identifier used for CLI selection.
    fn name(&self) -> &'static str;
    /// One-line statement of the claim.
    fn description(&self) -> &'static str;
    fn applies(&self, cx: &VerifyContext) -> Applies;
    /// `Err` carries a witness of the violation.
    fn run(&self, cx: &VerifyContext) -> Result<(), String>;
}

fn set_labels(cx: &VerifyContext, s: &BTreeSet<usize>) -> String {
    let names: Vec<&str> = s.iter().map(|&v| cx.label(v)).collect();
    format!("{{{}}}", names.join(", "))
}

// --- the individual checks ---------------------------------------------

/// The final sink level is everything that survives iff the levels cover
/// every vertex.
struct SinkUnionCover;

impl TheoremCheck for SinkUnionCover {
    fn name(&self) -> &'static str {
        "sink-union-cover"
    }
    fn description(&self) -> &'static str {
        "last sink level equals the surviving vertex set iff the levels cover all vertices"
    }
    fn applies(&self, _cx: &VerifyContext) -> Applies {
        Applies::Run
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        let a = &cx.analysis;
        let lhs = a.w(a.zeta()) == a.final_survivors();
        let union = a.eliminated_before(a.zeta() + 1);
        let all: BTreeSet<usize> = (0..cx.bt.digraph().n()).collect();
        let rhs = union == all;
        if lhs == rhs {
            Ok(())
        } else {
            Err(format!(
                "cover equivalence broken: last level {} survivors {}, union {}",
                set_labels(cx, a.w(a.zeta())),
                set_labels(cx, a.final_survivors()),
                set_labels(cx, &union)
            ))
        }
    }
}

/// Sink-based acyclicity agrees with depth-first cycle detection.
struct AcyclicSinkAgreement;

impl TheoremCheck for AcyclicSinkAgreement {
    fn name(&self) -> &'static str {
        "acyclic-sink-agreement"
    }
    fn description(&self) -> &'static str {
        "nonempty final sink level iff depth-first search finds no directed cycle"
    }
    fn applies(&self, _cx: &VerifyContext) -> Applies {
        Applies::Run
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        let via_sinks = cx.acyclic();
        let via_dfs = !has_directed_cycle(cx.bt.digraph());
        if via_sinks == via_dfs {
            Ok(())
        } else {
            Err(format!(
                "sink criterion says acyclic={via_sinks} but cycle search says acyclic={via_dfs}"
            ))
        }
    }
}

/// Sink levels alternate between the two parts, and exhaust both parts
/// exactly when the instance is acyclic.
struct SinkLevelParity;

impl TheoremCheck for SinkLevelParity {
    fn name(&self) -> &'static str {
        "sink-level-parity"
    }
    fn description(&self) -> &'static str {
        "sink levels alternate sides, exhausting both parts iff acyclic"
    }
    fn applies(&self, cx: &VerifyContext) -> Applies {
        if cx.analysis.zeta() >= 1 {
            Applies::Run
        } else {
            Applies::Skip("needs at least one elimination level")
        }
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        let rep = check_parity_partition(cx.bt, &cx.analysis)
            .expect("applicability guarantees zeta >= 1");
        if let Some(level) = rep.violation_level {
            return Err(format!(
                "sink level {level} leaves its parity's part: {}",
                set_labels(cx, cx.analysis.w(level))
            ));
        }
        if rep.unions_equal_parts != rep.acyclic {
            return Err(format!(
                "level unions equal the parts: {}, acyclic: {}; these must coincide",
                rep.unions_equal_parts, rep.acyclic
            ));
        }
        Ok(())
    }
}

/// Walks starting at sink level `i` have length at most `i`.
struct WalkLengthBound;

impl TheoremCheck for WalkLengthBound {
    fn name(&self) -> &'static str {
        "walk-length-bound"
    }
    fn description(&self) -> &'static str {
        "walks from a level-i vertex have length at most i"
    }
    fn applies(&self, cx: &VerifyContext) -> Applies {
        if cx.analysis.zeta() >= 1 {
            Applies::Run
        } else {
            Applies::Skip("needs at least one elimination level")
        }
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        let a = &cx.analysis;
        let zeta = a.zeta();
        let top = if cx.acyclic() { zeta } else { zeta - 1 };
        for i in 0..=top {
            for &v in a.w(i) {
                let longest = max_walk_length_from(cx.bt.digraph(), v, zeta + 1);
                if longest > i {
                    return Err(format!(
                        "vertex {} sits at level {i} but starts a walk of length {longest}",
                        cx.label(v)
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Arc structure between the levels: each level sees arcs from all the
/// not-yet-eliminated vertices of the opposite side, and consecutive
/// levels are completely joined downward.
struct LevelArcStructure;

impl TheoremCheck for LevelArcStructure {
    fn name(&self) -> &'static str {
        "level-arc-structure"
    }
    fn description(&self) -> &'static str {
        "surviving opposite-side vertices point to every vertex of each level"
    }
    fn applies(&self, cx: &VerifyContext) -> Applies {
        if cx.analysis.zeta() >= 1 {
            Applies::Run
        } else {
            Applies::Skip("needs at least one elimination level")
        }
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        let a = &cx.analysis;
        let d = cx.bt.digraph();
        let zeta = a.zeta();
        let even_part = cx.bt.part_of(*a.w(0).first().unwrap());
        let odd_part = even_part.other();

        // predators of a level: every vertex of the other side not yet
        // eliminated when the level was removed
        let predator_check = |level: usize, side_hosting_predators: Part| -> Result<(), String> {
            let eliminated = a.eliminated_before(level);
            for &u in cx.bt.part(side_hosting_predators) {
                if eliminated.contains(&u) {
                    continue;
                }
                for &w in a.w(level) {
                    if !d.has_arc(u, w) {
                        return Err(format!(
                            "missing arc ({}, {}): {} survives level {level} removal",
                            cx.label(u),
                            cx.label(w),
                            cx.label(u)
                        ));
                    }
                }
            }
            Ok(())
        };
        for level in 1..zeta {
            // odd levels sit in the odd part and are preyed on by even-part
            // survivors, and vice versa
            let predators = if level % 2 == 1 { even_part } else { odd_part };
            predator_check(level, predators)?;
        }

        // descending selections: every consecutive level pair is fully
        // arc-joined downward (covers all selections at once)
        let top = if cx.acyclic() { zeta } else { zeta.saturating_sub(1) };
        for i in (0..top).rev() {
            for &hi in a.w(i + 1) {
                for &lo in a.w(i) {
                    if !d.has_arc(hi, lo) {
                        return Err(format!(
                            "no arc from level-{} vertex {} down to level-{} vertex {}",
                            i + 1,
                            cx.label(hi),
                            i,
                            cx.label(lo)
                        ));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Step graphs never join the two parts.
struct NoCrossPartEdges;

impl TheoremCheck for NoCrossPartEdges {
    fn name(&self) -> &'static str {
        "no-cross-part-edges"
    }
    fn description(&self) -> &'static str {
        "no step graph has an edge joining the two parts"
    }
    fn applies(&self, _cx: &VerifyContext) -> Applies {
        Applies::Run
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        for m in 1..=cx.m_max {
            for (u, v) in cx.graph(m).edges() {
                if cx.bt.part_of(u) != cx.bt.part_of(v) {
                    return Err(format!(
                        "edge {{{}, {}}} crosses the parts at m={m}",
                        cx.label(u),
                        cx.label(v)
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Once some step graph is edgeless, all later ones are.
struct EdgeExistenceMonotone;

impl TheoremCheck for EdgeExistenceMonotone {
    fn name(&self) -> &'static str {
        "edge-existence-monotone"
    }
    fn description(&self) -> &'static str {
        "an edgeless step graph stays edgeless at every later step"
    }
    fn applies(&self, _cx: &VerifyContext) -> Applies {
        Applies::Run
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        let mut edgeless_at: Option<usize> = None;
        for m in 1..=cx.m_max {
            match (edgeless_at, cx.graph(m).is_edgeless()) {
                (None, true) => edgeless_at = Some(m),
                (Some(first), false) => {
                    return Err(format!(
                        "step graph was edgeless at m={first} but has an edge again at m={m}"
                    ))
                }
                _ => {}
            }
        }
        Ok(())
    }
}

/// Without sinks, step-graph adjacency only grows with m.
struct AdjacencyMonotoneSinkFree;

impl TheoremCheck for AdjacencyMonotoneSinkFree {
    fn name(&self) -> &'static str {
        "adjacency-monotone-sinkfree"
    }
    fn description(&self) -> &'static str {
        "without sinks, each step graph is a subgraph of the next"
    }
    fn applies(&self, cx: &VerifyContext) -> Applies {
        if cx.sink_free() {
            Applies::Run
        } else {
            Applies::Skip("instance has sinks")
        }
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        for m in 1..cx.m_max {
            if !cx.graph(m).is_subgraph_of(cx.graph(m + 1)) {
                let (u, v) = cx
                    .graph(m)
                    .edges()
                    .find(|&(u, v)| !cx.graph(m + 1).has_edge(u, v))
                    .unwrap();
                return Err(format!(
                    "edge {{{}, {}}} present at m={m} but gone at m={}",
                    cx.label(u),
                    cx.label(v),
                    m + 1
                ));
            }
        }
        Ok(())
    }
}

/// Below the elimination index, the not-yet-eliminated vertices of each
/// part form a clique.
struct SurvivorClique;

impl TheoremCheck for SurvivorClique {
    fn name(&self) -> &'static str {
        "survivor-clique"
    }
    fn description(&self) -> &'static str {
        "for m below the elimination index, each part's surviving vertices form a clique"
    }
    fn applies(&self, cx: &VerifyContext) -> Applies {
        if cx.analysis.zeta() >= 2 {
            Applies::Run
        } else {
            Applies::Skip("no step count lies below the elimination index")
        }
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        let a = &cx.analysis;
        for m in 1..a.zeta().min(cx.m_max + 1) {
            let eliminated = a.eliminated_before(m);
            for part in [Part::One, Part::Two] {
                let survivors: Vec<usize> = cx
                    .bt
                    .part(part)
                    .iter()
                    .copied()
                    .filter(|v| !eliminated.contains(v))
                    .collect();
                for (i, &u) in survivors.iter().enumerate() {
                    for &v in &survivors[i + 1..] {
                        if !cx.graph(m).has_edge(u, v) {
                            return Err(format!(
                                "surviving pair {{{}, {}}} not adjacent at m={m}",
                                cx.label(u),
                                cx.label(v)
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// The acyclic characterization: exact shapes for every step count and
/// the exact index and period.
struct AcyclicCharacterization;

impl TheoremCheck for AcyclicCharacterization {
    fn name(&self) -> &'static str {
        "acyclic-characterization"
    }
    fn description(&self) -> &'static str {
        "acyclic instances realize the predicted shapes, index, and period exactly"
    }
    fn applies(&self, cx: &VerifyContext) -> Applies {
        if cx.acyclic() {
            Applies::Run
        } else {
            Applies::Skip("instance has a directed cycle")
        }
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        for m in 1..=cx.m_max {
            let p = predict_acyclic(cx.bt, &cx.analysis, m).expect("applicability checked");
            check_shape(cx.bt, &p.shape, cx.graph(m), m)?;
        }
        let prof = cx.profile()?;
        let p = predict_acyclic(cx.bt, &cx.analysis, 1).expect("applicability checked");
        claims_admit(&p.cindex, &p.cperiod, prof)
    }
}

/// The cyclic characterization: per-part shape family always, exact
/// shapes and values once the elimination index reaches 2.
struct CyclicCharacterization;

impl TheoremCheck for CyclicCharacterization {
    fn name(&self) -> &'static str {
        "cyclic-characterization"
    }
    fn description(&self) -> &'static str {
        "cyclic instances realize the predicted shape family and index/period claims"
    }
    fn applies(&self, cx: &VerifyContext) -> Applies {
        if cx.acyclic() {
            Applies::Skip("instance is acyclic")
        } else {
            Applies::Run
        }
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        for m in 2..=cx.m_max {
            let p = predict_cyclic(cx.bt, &cx.analysis, m).expect("applicability checked");
            check_shape(cx.bt, &p.shape, cx.graph(m), m)?;
        }
        let prof = cx.profile()?;
        let p = predict_cyclic(cx.bt, &cx.analysis, 2).expect("applicability checked");
        claims_admit(&p.cindex, &p.cperiod, prof)
    }
}

fn claims_admit(
    cindex: &ValueClaim,
    cperiod: &ValueClaim,
    prof: &CompetitionProfile,
) -> Result<(), String> {
    if !cindex.admits(prof.cindex()) {
        return Err(format!("computed cindex {} violates claim {}", prof.cindex(), cindex));
    }
    if !cperiod.admits(prof.cperiod()) {
        return Err(format!("computed cperiod {} violates claim {}", prof.cperiod(), cperiod));
    }
    Ok(())
}

/// Without sinks, each part of every step graph from 2 on is a complete
/// graph or a union of two complete graphs.
struct TwoCliqueStructure;

impl TheoremCheck for TwoCliqueStructure {
    fn name(&self) -> &'static str {
        "two-clique-structure"
    }
    fn description(&self) -> &'static str {
        "without sinks, each part is one clique or a union of two cliques"
    }
    fn applies(&self, cx: &VerifyContext) -> Applies {
        if cx.sink_free() {
            Applies::Run
        } else {
            Applies::Skip("instance has sinks")
        }
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        for m in 2..=cx.m_max {
            for (verts, name) in [(cx.bt.part1(), "part1"), (cx.bt.part2(), "part2")] {
                let part: BTreeSet<usize> = verts.iter().copied().collect();
                let got = classify_structure(cx.graph(m), &part);
                if !satisfies_sink_free_union(&got) {
                    return Err(format!(
                        "at m={m}, {name} classifies as {} which is not a union of two cliques",
                        got.label()
                    ));
                }
            }
        }
        Ok(())
    }
}

/// Without sinks the period is 1 and the index at most 4.
struct SinkFreeStability;

impl TheoremCheck for SinkFreeStability {
    fn name(&self) -> &'static str {
        "sinkfree-stability"
    }
    fn description(&self) -> &'static str {
        "without sinks, the period is 1 and the index at most 4"
    }
    fn applies(&self, cx: &VerifyContext) -> Applies {
        if cx.sink_free() {
            Applies::Run
        } else {
            Applies::Skip("instance has sinks")
        }
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        let prof = cx.profile()?;
        claims_admit(&ValueClaim::AtMost(4), &ValueClaim::Exact(1), prof)
    }
}

/// The matrix route and the walk-enumeration route produce identical
/// step graphs.
struct StepGraphRouteAgreement;

impl TheoremCheck for StepGraphRouteAgreement {
    fn name(&self) -> &'static str {
        "step-graph-route-agreement"
    }
    fn description(&self) -> &'static str {
        "matrix-power and walk-enumeration step graphs are edge-identical"
    }
    fn applies(&self, _cx: &VerifyContext) -> Applies {
        Applies::Run
    }
    fn run(&self, cx: &VerifyContext) -> Result<(), String> {
        for m in 1..=cx.m_max {
            let oracle = m_step_competition_graph_oracle(cx.bt.digraph(), m);
            if &oracle != cx.graph(m) {
                return Err(format!("the two step-graph routes disagree at m={m}"));
            }
        }
        Ok(())
    }
}

// --- registry and runner -------------------------------------------------

/// All checks, in report order.
pub fn registry() -> Vec<Box<dyn TheoremCheck>> {
    vec![
        Box::new(SinkUnionCover),
        Box::new(AcyclicSinkAgreement),
        Box::new(SinkLevelParity),
        Box::new(WalkLengthBound),
        Box::new(LevelArcStructure),
        Box::new(NoCrossPartEdges),
        Box::new(EdgeExistenceMonotone),
        Box::new(AdjacencyMonotoneSinkFree),
        Box::new(SurvivorClique),
        Box::new(AcyclicCharacterization),
        Box::new(CyclicCharacterization),
        Box::new(TwoCliqueStructure),
        Box::new(SinkFreeStability),
        Box::new(StepGraphRouteAgreement),
    ]
}

/// Names of all registered checks, in report order.
pub fn check_names() -> Vec<&'static str> {
    registry().iter().map(|c| c.name()).collect()
}

/// Looks up checks by name, rejecting unknown names.
pub fn checks_by_name(names: &[String]) -> Result<Vec<Box<dyn TheoremCheck>>, String> {
    let mut all = registry();
    let mut picked = Vec::new();
    for name in names {
        match all.iter().position(|c| c.name() == name.as_str()) {
            Some(i) => picked.push(all.remove(i)),
            None => {
                return Err(format!(
                    "unknown check {:?}; available: {}",
                    name,
                    check_names().join(", ")
                ))
            }
        }
    }
    Ok(picked)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

impl CheckStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Skipped => "skipped",
        }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: &'static str,
    pub status: CheckStatus,
    /// Failure witness or skip reason.
    pub witness: Option<String>,
}

#[derive(Debug, Clone)]
pub struct VerificationReport {
    /// Short instance description for report headers.
    pub instance: String,
    pub results: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.status != CheckStatus::Fail)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.results.iter().find(|r| r.status == CheckStatus::Fail)
    }
}

/// Runs the given checks against one instance.
pub fn verify_instance_with(
    bt: &BipartiteTournament,
    m_max: usize,
    safety_cap: usize,
    checks: &[Box<dyn TheoremCheck>],
    instance: String,
) -> VerificationReport {
    let cx = VerifyContext::new(bt, m_max, safety_cap);
    let results = checks
        .iter()
        .map(|check| match check.applies(&cx) {
            Applies::Skip(reason) => CheckResult {
                name: check.name(),
                status: CheckStatus::Skipped,
                witness: Some(reason.to_string()),
            },
            Applies::Run => match check.run(&cx) {
                Ok(()) => CheckResult { name: check.name(), status: CheckStatus::Pass, witness: None },
                Err(w) => {
                    CheckResult { name: check.name(), status: CheckStatus::Fail, witness: Some(w) }
                }
            },
        })
        .collect();
    VerificationReport { instance, results }
}

/// Runs every registered check against one instance.
pub fn verify_instance(bt: &BipartiteTournament, m_max: usize, safety_cap: usize) -> VerificationReport {
    verify_instance_with(bt, m_max, safety_cap, &registry(), String::new())
}

/// Step horizon covering stabilization plus one period with slack.
pub fn default_m_max(analysis: &SinkAnalysis) -> usize {
    analysis.zeta().max(4) + 2
}
