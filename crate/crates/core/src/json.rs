//! JSON schemas for instances and results.
//!
//! Bipartite tournaments use `{"n1", "n2", "labels1", "labels2", "arcs"}`
//! and general digraphs `{"n", "labels", "arcs"}`, with arcs as
//! `[from_label, to_label]` pairs. Loading rejects duplicate arcs and
//! unknown labels; label lists are optional and default to `x1..`/`y1..`
//! for bipartite instances and `v0..` for general ones.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::checks::VerificationReport;
use crate::competition::CompetitionProfile;
use crate::digraph::{
    validate_bipartite_tournament, BipartiteError, BipartiteTournament, Digraph, DigraphError,
};
use crate::graph::Graph;
use crate::sink::SinkAnalysis;

#[derive(Debug, Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Parse(#[from] serde_json::Error),
    #[error("unknown label {0:?} in arc list")]
    UnknownLabel(String),
    #[error(transparent)]
    Digraph(#[from] DigraphError),
    #[error(transparent)]
    Bipartite(#[from] BipartiteError),
}

#[derive(Debug, Serialize, Deserialize)]
pub struct BipartiteJson {
    pub n1: usize,
    pub n2: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels1: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels2: Option<Vec<String>>,
    pub arcs: Vec<(String, String)>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct DigraphJson {
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    pub arcs: Vec<(String, String)>,
}

/// Either instance kind, as distinguished by the schema.
#[derive(Debug)]
pub enum LoadedInstance {
    Bipartite(BipartiteTournament),
    General(Digraph),
}

impl LoadedInstance {
    pub fn digraph(&self) -> &Digraph {
        match self {
            LoadedInstance::Bipartite(bt) => bt.digraph(),
            LoadedInstance::General(d) => d,
        }
    }

    pub fn as_bipartite(&self) -> Option<&BipartiteTournament> {
        match self {
            LoadedInstance::Bipartite(bt) => Some(bt),
            LoadedInstance::General(_) => None,
        }
    }
}

fn arcs_by_label(
    labels: &[String],
    arcs: &[(String, String)],
) -> Result<Vec<(usize, usize)>, JsonError> {
    let index = |l: &String| {
        labels
            .iter()
            .position(|s| s == l)
            .ok_or_else(|| JsonError::UnknownLabel(l.clone()))
    };
    arcs.iter().map(|(from, to)| Ok((index(from)?, index(to)?))).collect()
}

/// Loads either instance schema, deciding by the presence of `n1`.
pub fn load_instance(text: &str) -> Result<LoadedInstance, JsonError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("n1").is_some() {
        let spec: BipartiteJson = serde_json::from_value(value)?;
        Ok(LoadedInstance::Bipartite(bipartite_from_json(&spec)?))
    } else {
        let spec: DigraphJson = serde_json::from_value(value)?;
        Ok(LoadedInstance::General(digraph_from_json(&spec)?))
    }
}

pub fn bipartite_from_json(spec: &BipartiteJson) -> Result<BipartiteTournament, JsonError> {
    let labels1 = spec
        .labels1
        .clone()
        .unwrap_or_else(|| (1..=spec.n1).map(|i| format!("x{i}")).collect());
    let labels2 = spec
        .labels2
        .clone()
        .unwrap_or_else(|| (1..=spec.n2).map(|j| format!("y{j}")).collect());
    if labels1.len() != spec.n1 {
        return Err(DigraphError::LabelCountMismatch { n: spec.n1, got: labels1.len() }.into());
    }
    if labels2.len() != spec.n2 {
        return Err(DigraphError::LabelCountMismatch { n: spec.n2, got: labels2.len() }.into());
    }
    let labels: Vec<String> = labels1.into_iter().chain(labels2).collect();
    let arcs = arcs_by_label(&labels, &spec.arcs)?;
    let n = spec.n1 + spec.n2;
    let d = Digraph::from_arcs_labeled(n, labels, arcs)?;
    Ok(validate_bipartite_tournament(d, 0..spec.n1, spec.n1..n)?)
}

pub fn digraph_from_json(spec: &DigraphJson) -> Result<Digraph, JsonError> {
    let labels = spec
        .labels
        .clone()
        .unwrap_or_else(|| (0..spec.n).map(|i| format!("v{i}")).collect());
    if labels.len() != spec.n {
        return Err(DigraphError::LabelCountMismatch { n: spec.n, got: labels.len() }.into());
    }
    let arcs = arcs_by_label(&labels, &spec.arcs)?;
    Ok(Digraph::from_arcs_labeled(spec.n, labels, arcs)?)
}

fn labeled_arcs(d: &Digraph) -> Vec<(String, String)> {
    d.arcs().map(|(u, v)| (d.label(u).to_string(), d.label(v).to_string())).collect()
}

pub fn bipartite_to_json(bt: &BipartiteTournament) -> BipartiteJson {
    let d = bt.digraph();
    BipartiteJson {
        n1: bt.part1().len(),
        n2: bt.part2().len(),
        labels1: Some(bt.part1().iter().map(|&v| d.label(v).to_string()).collect()),
        labels2: Some(bt.part2().iter().map(|&v| d.label(v).to_string()).collect()),
        arcs: labeled_arcs(d),
    }
}

pub fn digraph_to_json(d: &Digraph) -> DigraphJson {
    DigraphJson { n: d.n(), labels: Some(d.labels().to_vec()), arcs: labeled_arcs(d) }
}

pub fn instance_to_value(inst: &LoadedInstance) -> serde_json::Value {
    match inst {
        LoadedInstance::Bipartite(bt) => serde_json::to_value(bipartite_to_json(bt)).unwrap(),
        LoadedInstance::General(d) => serde_json::to_value(digraph_to_json(d)).unwrap(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct SinkAnalysisJson {
    pub zeta: usize,
    #[serde(rename = "W")]
    pub w: Vec<Vec<String>>,
    pub acyclic: bool,
}

pub fn sink_analysis_to_json(a: &SinkAnalysis, d: &Digraph) -> SinkAnalysisJson {
    SinkAnalysisJson {
        zeta: a.zeta(),
        w: a
            .w_sets()
            .iter()
            .map(|w| w.iter().map(|&v| d.label(v).to_string()).collect())
            .collect(),
        acyclic: crate::sink::is_acyclic_via_sinks(a),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub labels: Vec<String>,
    pub edges: Vec<(String, String)>,
}

pub fn graph_to_json(g: &Graph, labels: &[String]) -> GraphJson {
    GraphJson {
        n: g.n(),
        labels: labels.to_vec(),
        edges: g
            .edges()
            .map(|(u, v)| (labels[u].clone(), labels[v].clone()))
            .collect(),
    }
}

#[derive(Debug, Serialize, Deserialize)]
pub struct ProfileJson {
    pub cindex: usize,
    pub cperiod: usize,
}

pub fn profile_to_json(p: &CompetitionProfile) -> ProfileJson {
    ProfileJson { cindex: p.cindex(), cperiod: p.cperiod() }
}

#[derive(Debug, Serialize)]
pub struct CheckJson {
    pub name: &'static str,
    pub status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Serialize)]
pub struct ReportJson {
    pub instance: serde_json::Value,
    pub checks: Vec<CheckJson>,
}

pub fn report_to_json(report: &VerificationReport, instance: serde_json::Value) -> ReportJson {
    ReportJson {
        instance,
        checks: report
            .results
            .iter()
            .map(|r| CheckJson {
                name: r.name,
                status: r.status.as_str(),
                witness: r.witness.clone(),
            })
            .collect(),
    }
}
