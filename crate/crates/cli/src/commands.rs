//! Implementations of the five subcommands.

use std::collections::BTreeMap;
use std::process::ExitCode;

use complab_core::json::{
    bipartite_to_json, instance_to_value, profile_to_json, report_to_json, sink_analysis_to_json,
    LoadedInstance,
};
use complab_core::{
    check_parity_partition, checks_by_name, classify_structure, competition_graph_sequence,
    competition_profile, default_m_max, default_safety_cap, dot, enumerate_all, registry,
    sink_analysis, verify_instance_with, BipartiteTournament, CheckStatus, GenMode, GenSpec,
    SinkAnalysis, TheoremCheck, VerificationReport,
};

use crate::source::{resolve, ResolvedSource};
use crate::{CapArgs, SourceArgs};

fn resolved_cap(cap: &CapArgs, n: usize) -> Result<usize, String> {
    if let Some(v) = cap.safety_cap {
        return Ok(v.max(1));
    }
    match std::env::var("COMPLAB_SAFETY_CAP") {
        Ok(text) => text
            .parse::<usize>()
            .map(|v| v.max(1))
            .map_err(|_| format!("COMPLAB_SAFETY_CAP is not a number: {text:?}")),
        Err(_) => Ok(default_safety_cap(n)),
    }
}

fn edge_list_text(g: &complab_core::Graph, labels: &[String]) -> String {
    if g.is_edgeless() {
        return "(edgeless)".to_string();
    }
    let edges: Vec<String> =
        g.edges().map(|(u, v)| format!("{}-{}", labels[u], labels[v])).collect();
    edges.join(", ")
}

fn set_text(labels: &[String], set: &std::collections::BTreeSet<usize>) -> String {
    let names: Vec<&str> = set.iter().map(|&v| labels[v].as_str()).collect();
    format!("{{{}}}", names.join(", "))
}

pub fn analyze(
    source: &SourceArgs,
    m_max: Option<usize>,
    format: &str,
    cap: &CapArgs,
) -> Result<ExitCode, String> {
    let ResolvedSource { name, instance } = resolve(source)?;
    let d = instance.digraph();
    let analysis = sink_analysis(d).map_err(|e| e.to_string())?;
    let m_max = m_max.unwrap_or_else(|| default_m_max(&analysis));
    let graphs = competition_graph_sequence(d, m_max);
    let safety_cap = resolved_cap(cap, d.n())?;
    let profile = competition_profile(d, safety_cap).map_err(|e| e.to_string())?;
    let parity = instance.as_bipartite().and_then(|bt| {
        (analysis.zeta() >= 1).then(|| check_parity_partition(bt, &analysis).unwrap())
    });

    match format {
        "text" => {
            println!("instance: {name}");
            match &instance {
                LoadedInstance::Bipartite(bt) => {
                    println!(
                        "kind: bipartite tournament ({}+{})",
                        bt.part1().len(),
                        bt.part2().len()
                    );
                }
                LoadedInstance::General(_) => println!("kind: general digraph"),
            }
            let arcs: Vec<String> =
                d.arcs().map(|(u, v)| format!("{}->{}", d.label(u), d.label(v))).collect();
            println!("arcs ({}): {}", d.arc_count(), arcs.join(", "));
            println!("zeta: {}", analysis.zeta());
            println!(
                "acyclic: {}",
                if complab_core::is_acyclic_via_sinks(&analysis) { "yes" } else { "no" }
            );
            for (i, w) in analysis.w_sets().iter().enumerate() {
                println!("W_{i} = {}", set_text(d.labels(), w));
            }
            if let Some(rep) = &parity {
                println!(
                    "sink parity: even levels in {}, odd levels in {}; unions equal parts: {}",
                    rep.even_part,
                    rep.odd_part,
                    if rep.unions_equal_parts { "yes" } else { "no" }
                );
            }
            for (i, g) in graphs.iter().enumerate() {
                println!("C^{} ({} edges): {}", i + 1, g.edge_count(), edge_list_text(g, d.labels()));
            }
            println!("cindex: {}", profile.cindex());
            println!("cperiod: {}", profile.cperiod());
        }
        "json" => {
            let mut obj = serde_json::Map::new();
            obj.insert("instance".into(), instance_to_value(&instance));
            obj.insert(
                "sink_analysis".into(),
                serde_json::to_value(sink_analysis_to_json(&analysis, d)).unwrap(),
            );
            if let Some(rep) = &parity {
                obj.insert(
                    "parity".into(),
                    serde_json::json!({
                        "even_part": rep.even_part.to_string(),
                        "odd_part": rep.odd_part.to_string(),
                        "unions_equal_parts": rep.unions_equal_parts,
                    }),
                );
            }
            let steps: Vec<serde_json::Value> = graphs
                .iter()
                .enumerate()
                .map(|(i, g)| {
                    let edges: Vec<(String, String)> = g
                        .edges()
                        .map(|(u, v)| (d.label(u).to_string(), d.label(v).to_string()))
                        .collect();
                    serde_json::json!({"m": i + 1, "edges": edges})
                })
                .collect();
            obj.insert("step_graphs".into(), serde_json::Value::Array(steps));
            obj.insert("profile".into(), serde_json::to_value(profile_to_json(&profile)).unwrap());
            println!("{}", serde_json::to_string_pretty(&serde_json::Value::Object(obj)).unwrap());
        }
        other => return Err(format!("unknown format {other:?}; use text or json")),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn generate(source: &SourceArgs, format: &str) -> Result<ExitCode, String> {
    let ResolvedSource { name, instance } = resolve(source)?;
    match format {
        "json" => {
            println!("{}", serde_json::to_string_pretty(&instance_to_value(&instance)).unwrap());
        }
        "dot" => match &instance {
            LoadedInstance::Bipartite(bt) => print!("{}", dot::bipartite_to_dot(bt, &name)),
            LoadedInstance::General(d) => print!("{}", dot::digraph_to_dot(d, &name)),
        },
        other => return Err(format!("unknown format {other:?}; use json or dot")),
    }
    Ok(ExitCode::SUCCESS)
}

fn report_text(report: &VerificationReport) -> String {
    let mut out = String::new();
    out.push_str(&format!("instance: {}\n", report.instance));
    let mut passed = 0;
    let mut skipped = 0;
    for r in &report.results {
        let line = match r.status {
            CheckStatus::Pass => {
                passed += 1;
                format!("  pass  {}", r.name)
            }
            CheckStatus::Skipped => {
                skipped += 1;
                format!("  skip  {} ({})", r.name, r.witness.as_deref().unwrap_or(""))
            }
            CheckStatus::Fail => {
                format!("  FAIL  {}: {}", r.name, r.witness.as_deref().unwrap_or(""))
            }
        };
        out.push_str(&line);
        out.push('\n');
    }
    if report.all_passed() {
        out.push_str(&format!("result: all {passed} applicable checks passed ({skipped} skipped)\n"));
    } else {
        out.push_str("result: FAILED\n");
    }
    out
}

fn run_checks_once(
    bt: &BipartiteTournament,
    analysis: &SinkAnalysis,
    m_max: Option<usize>,
    safety_cap: usize,
    checks: &[Box<dyn TheoremCheck>],
    name: String,
) -> VerificationReport {
    let m_max = m_max.unwrap_or_else(|| default_m_max(analysis)).max(2);
    verify_instance_with(bt, m_max, safety_cap, checks, name)
}

fn write_witness(path: &str, bt: &BipartiteTournament) -> Result<(), String> {
    let text = serde_json::to_string_pretty(&bipartite_to_json(bt)).unwrap();
    std::fs::write(path, text).map_err(|e| format!("cannot write witness to {path}: {e}"))
}

#[allow(clippy::too_many_arguments)]
pub fn verify(
    source: &SourceArgs,
    exhaustive: Option<&[usize]>,
    checks: Option<&[String]>,
    m_max: Option<usize>,
    witness_out: &str,
    format: &str,
    cap: &CapArgs,
    list_checks: bool,
) -> Result<ExitCode, String> {
    if list_checks {
        for c in registry() {
            println!("{:28} {}", c.name(), c.description());
        }
        return Ok(ExitCode::SUCCESS);
    }
    let selected: Vec<Box<dyn TheoremCheck>> = match checks {
        Some(names) => checks_by_name(names)?,
        None => registry(),
    };

    if let Some(sizes) = exhaustive {
        let (n1, n2) = (sizes[0], sizes[1]);
        let safety_cap = resolved_cap(cap, n1 + n2)?;
        let iter = enumerate_all(n1, n2).map_err(|e| e.to_string())?;
        let mut count = 0usize;
        for (mask, bt) in iter {
            count += 1;
            let analysis = sink_analysis(bt.digraph()).unwrap();
            let report = run_checks_once(
                &bt,
                &analysis,
                m_max,
                safety_cap,
                &selected,
                format!("{n1}x{n2}-mask{mask}"),
            );
            if !report.all_passed() {
                let fail = report.first_failure().unwrap();
                eprintln!(
                    "check {} failed on {} : {}",
                    fail.name,
                    report.instance,
                    fail.witness.as_deref().unwrap_or("")
                );
                write_witness(witness_out, &bt)?;
                eprintln!("witness instance written to {witness_out}");
                return Ok(ExitCode::from(3));
            }
        }
        println!("verified {count} instances of sizes ({n1}, {n2}): all checks passed");
        return Ok(ExitCode::SUCCESS);
    }

    let ResolvedSource { name, instance } = resolve(source)?;
    let bt = instance
        .as_bipartite()
        .ok_or_else(|| "verification requires a bipartite tournament instance".to_string())?;
    let analysis = sink_analysis(bt.digraph()).map_err(|e| e.to_string())?;
    let safety_cap = resolved_cap(cap, bt.digraph().n())?;
    let report = run_checks_once(bt, &analysis, m_max, safety_cap, &selected, name);
    match format {
        "text" => print!("{}", report_text(&report)),
        "json" => {
            let j = report_to_json(&report, instance_to_value(&instance));
            println!("{}", serde_json::to_string_pretty(&j).unwrap());
        }
        other => return Err(format!("unknown format {other:?}; use text or json")),
    }
    if report.all_passed() {
        Ok(ExitCode::SUCCESS)
    } else {
        write_witness(witness_out, bt)?;
        eprintln!("witness instance written to {witness_out}");
        Ok(ExitCode::from(3))
    }
}

struct SweepRow {
    n1: usize,
    n2: usize,
    source: String,
    zeta: usize,
    acyclic: bool,
    cindex: usize,
    cperiod: usize,
    shape1: String,
    shape2: String,
}

fn sweep_row(
    bt: &BipartiteTournament,
    source: String,
    safety_cap: usize,
) -> Result<SweepRow, String> {
    let d = bt.digraph();
    let analysis = sink_analysis(d).unwrap();
    let profile = competition_profile(d, safety_cap).map_err(|e| e.to_string())?;
    // classify at the first stabilized step count covered by the theory
    let m_ref = profile.cindex().max(2);
    let g = complab_core::m_step_competition_graph(d, m_ref);
    let shape_of = |verts: &[usize]| {
        classify_structure(&g, &verts.iter().copied().collect()).label()
    };
    Ok(SweepRow {
        n1: bt.part1().len(),
        n2: bt.part2().len(),
        source,
        zeta: analysis.zeta(),
        acyclic: complab_core::is_acyclic_via_sinks(&analysis),
        cindex: profile.cindex(),
        cperiod: profile.cperiod(),
        shape1: shape_of(bt.part1()),
        shape2: shape_of(bt.part2()),
    })
}

fn class_of(row: &SweepRow) -> String {
    if row.acyclic {
        "acyclic".to_string()
    } else {
        format!("cyclic-zeta{}", row.zeta)
    }
}

#[allow(clippy::too_many_arguments)]
pub fn sweep(
    n1: usize,
    n2: usize,
    n1_max: usize,
    n2_max: usize,
    exhaustive: bool,
    samples: Option<usize>,
    seed: u64,
    mode: &str,
    format: &str,
    cap: &CapArgs,
) -> Result<ExitCode, String> {
    if !exhaustive && samples.is_none() {
        return Err("choose --exhaustive or --samples K".to_string());
    }
    if n1 == 0 || n2 == 0 || n1_max < n1 || n2_max < n2 {
        return Err("part-size range is empty".to_string());
    }
    let mode = GenMode::parse(mode)
        .ok_or_else(|| format!("unknown mode {mode:?}; use uniform, acyclic, or sinkless"))?;

    let mut rows = Vec::new();
    for p in n1..=n1_max {
        for q in n2..=n2_max {
            let safety_cap = resolved_cap(cap, p + q)?;
            if exhaustive {
                for (mask, bt) in enumerate_all(p, q).map_err(|e| e.to_string())? {
                    rows.push(sweep_row(&bt, format!("mask={mask}"), safety_cap)?);
                }
            } else {
                for i in 0..samples.unwrap() as u64 {
                    let spec = GenSpec { n1: p, n2: q, seed: seed.wrapping_add(i), mode };
                    let bt = complab_core::generate(&spec).map_err(|e| e.to_string())?;
                    rows.push(sweep_row(&bt, format!("seed={}", spec.seed), safety_cap)?);
                }
            }
        }
    }

    let mut aggregate: BTreeMap<(String, usize, usize), usize> = BTreeMap::new();
    for row in &rows {
        *aggregate.entry((class_of(row), row.cindex, row.cperiod)).or_insert(0) += 1;
    }

    match format {
        "csv" => {
            println!("n1,n2,source,zeta,acyclic,cindex,cperiod,part1_shape,part2_shape");
            for r in &rows {
                println!(
                    "{},{},{},{},{},{},{},{},{}",
                    r.n1, r.n2, r.source, r.zeta, r.acyclic, r.cindex, r.cperiod, r.shape1, r.shape2
                );
            }
            println!("# aggregate: class cindex cperiod count");
            for ((class, ci, cp), count) in &aggregate {
                println!("# {class} {ci} {cp} {count}");
            }
        }
        "json" => {
            let rows_json: Vec<serde_json::Value> = rows
                .iter()
                .map(|r| {
                    serde_json::json!({
                        "n1": r.n1, "n2": r.n2, "source": r.source, "zeta": r.zeta,
                        "acyclic": r.acyclic, "cindex": r.cindex, "cperiod": r.cperiod,
                        "part1_shape": r.shape1, "part2_shape": r.shape2,
                    })
                })
                .collect();
            let agg_json: Vec<serde_json::Value> = aggregate
                .iter()
                .map(|((class, ci, cp), count)| {
                    serde_json::json!({
                        "class": class, "cindex": ci, "cperiod": cp, "count": count,
                    })
                })
                .collect();
            let out = serde_json::json!({"rows": rows_json, "aggregate": agg_json});
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        }
        other => return Err(format!("unknown format {other:?}; use csv or json")),
    }
    Ok(ExitCode::SUCCESS)
}

pub fn export(source: &SourceArgs, ms: &[usize], out_dir: &str) -> Result<ExitCode, String> {
    let ResolvedSource { name, instance } = resolve(source)?;
    let d = instance.digraph();
    if ms.contains(&0) {
        return Err("step counts must be positive".to_string());
    }
    std::fs::create_dir_all(out_dir).map_err(|e| format!("cannot create {out_dir}: {e}"))?;
    let dir = std::path::Path::new(out_dir);

    let digraph_dot = match &instance {
        LoadedInstance::Bipartite(bt) => dot::bipartite_to_dot(bt, &name),
        LoadedInstance::General(dg) => dot::digraph_to_dot(dg, &name),
    };
    let base = dir.join(format!("{name}.dot"));
    std::fs::write(&base, digraph_dot).map_err(|e| format!("cannot write {}: {e}", base.display()))?;
    println!("{}", base.display());

    for &m in ms {
        let g = complab_core::m_step_competition_graph(d, m);
        let text = dot::graph_to_dot(&g, d.labels(), &format!("{name}_C{m}"));
        let path = dir.join(format!("{name}_c{m}.dot"));
        std::fs::write(&path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))?;
        println!("{}", path.display());
    }
    Ok(ExitCode::SUCCESS)
}
