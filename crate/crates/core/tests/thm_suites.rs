//! Exhaustive verification over every small bipartite tournament: all
//! registered checks must pass on every orientation, and the two
//! characterization branches must predict exactly.

use complab_core::{
    classify_structure, competition_profile, default_m_max, default_safety_cap, enumerate_all,
    has_directed_cycle, satisfies_sink_free_union, sink_analysis, sinks, verify_instance,
};

fn sweep(n1: usize, n2: usize) {
    let mut acyclic = 0usize;
    let mut total = 0usize;
    for (mask, bt) in enumerate_all(n1, n2).unwrap() {
        total += 1;
        let a = sink_analysis(bt.digraph()).unwrap();
        if !has_directed_cycle(bt.digraph()) {
            acyclic += 1;
        }
        let report = verify_instance(&bt, default_m_max(&a), default_safety_cap(n1 + n2));
        if let Some(fail) = report.first_failure() {
            panic!(
                "({n1},{n2}) mask {mask}: check {} failed: {}",
                fail.name,
                fail.witness.as_deref().unwrap_or("")
            );
        }
    }
    assert_eq!(total, 1usize << (n1 * n2));
    assert!(acyclic > 0);
}

#[test]
fn every_2x2_orientation_passes_all_checks() {
    sweep(2, 2);
}

#[test]
fn every_2x3_orientation_passes_all_checks() {
    sweep(2, 3);
}

#[test]
fn every_3x3_orientation_passes_all_checks() {
    sweep(3, 3);
}

#[test]
fn acyclic_orientation_count_of_2x2_is_14() {
    // 16 orientations in all; exactly the two cyclic ones host a 4-cycle
    let cyclic = enumerate_all(2, 2)
        .unwrap()
        .filter(|(_, bt)| has_directed_cycle(bt.digraph()))
        .count();
    assert_eq!(cyclic, 2);
}

#[test]
fn sink_free_parts_never_classify_irregular() {
    for (n1, n2) in [(2, 2), (2, 3), (3, 3)] {
        for (_, bt) in enumerate_all(n1, n2).unwrap() {
            if !sinks(bt.digraph()).is_empty() {
                continue;
            }
            for m in 2..=6 {
                let g = complab_core::m_step_competition_graph(bt.digraph(), m);
                for part in [bt.part1(), bt.part2()] {
                    let got = classify_structure(&g, &part.iter().copied().collect());
                    assert!(
                        satisfies_sink_free_union(&got),
                        "({n1},{n2}) m={m}: {}",
                        got.label()
                    );
                }
            }
        }
    }
}

#[test]
fn sink_free_bound_is_attained_at_3x3() {
    // the sink-free index bound of 4 is tight: some 3x3 instance reaches it
    let mut max_cindex = 0;
    for (_, bt) in enumerate_all(3, 3).unwrap() {
        if !sinks(bt.digraph()).is_empty() {
            continue;
        }
        let prof = competition_profile(bt.digraph(), default_safety_cap(6)).unwrap();
        assert_eq!(prof.cperiod(), 1);
        assert!(prof.cindex() <= 4);
        max_cindex = max_cindex.max(prof.cindex());
    }
    assert_eq!(max_cindex, 4);
}
