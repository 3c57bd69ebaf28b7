//! Classifies the induced subgraph on one part of the bipartition into
//! the clique shapes the characterization predicts.

use std::collections::BTreeSet;

use crate::graph::Graph;

/// Shape of an induced subgraph, from most to least specific.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StructureSummary {
    /// No edges at all.
    Edgeless { vertices: usize },
    /// Every connected component is a complete graph. `clique_sizes` lists
    /// the components with at least two vertices, largest first.
    CliquesPlusIsolated { clique_sizes: Vec<usize>, isolated: usize },
    /// After removing isolated vertices, the rest is covered by two
    /// overlapping cliques (equivalently, its complement is bipartite and
    /// nonempty). Sizes are reported largest first.
    TwoOverlappingCliques { size_a: usize, size_b: usize, overlap: usize, isolated: usize },
    /// None of the above.
    Irregular,
}

impl StructureSummary {
    /// Multiset of nontrivial clique sizes plus isolated count, when the
    /// shape is a disjoint union of cliques.
    pub fn as_cliques_and_isolated(&self) -> Option<(Vec<usize>, usize)> {
        match self {
            StructureSummary::Edgeless { vertices } => Some((Vec::new(), *vertices)),
            StructureSummary::CliquesPlusIsolated { clique_sizes, isolated } => {
                Some((clique_sizes.clone(), *isolated))
            }
            _ => None,
        }
    }

    /// Number of connected components, counting isolated vertices.
    pub fn component_count(&self) -> Option<usize> {
        self.as_cliques_and_isolated().map(|(cliques, iso)| cliques.len() + iso)
    }

    /// Compact label such as `K3+K2+I1`, `K2~K2(ov1)`, `I4` or `irregular`.
    pub fn label(&self) -> String {
        match self {
            StructureSummary::Edgeless { vertices } => format!("I{vertices}"),
            StructureSummary::CliquesPlusIsolated { clique_sizes, isolated } => {
                let mut parts: Vec<String> =
                    clique_sizes.iter().map(|s| format!("K{s}")).collect();
                if *isolated > 0 {
                    parts.push(format!("I{isolated}"));
                }
                parts.join("+")
            }
            StructureSummary::TwoOverlappingCliques { size_a, size_b, overlap, isolated } => {
                let mut s = format!("K{size_a}~K{size_b}(ov{overlap})");
                if *isolated > 0 {
                    s.push_str(&format!("+I{isolated}"));
                }
                s
            }
            StructureSummary::Irregular => "irregular".to_string(),
        }
    }
}

/// Classifies the subgraph of `g` induced by `part` as the most specific
/// matching [`StructureSummary`].
pub fn classify_structure(g: &Graph, part: &BTreeSet<usize>) -> StructureSummary {
    let verts: Vec<usize> = part.iter().copied().collect();
    let pos = |v: usize| verts.binary_search(&v).unwrap();
    let k = verts.len();

    // adjacency restricted to the part
    let mut adj = vec![vec![false; k]; k];
    let mut deg = vec![0usize; k];
    for (u, v) in g.edges() {
        if part.contains(&u) && part.contains(&v) {
            let (a, b) = (pos(u), pos(v));
            adj[a][b] = true;
            adj[b][a] = true;
            deg[a] += 1;
            deg[b] += 1;
        }
    }

    if deg.iter().all(|&d| d == 0) {
        return StructureSummary::Edgeless { vertices: k };
    }

    // connected components via repeated sweeps
    let mut comp = vec![usize::MAX; k];
    let mut comp_count = 0;
    for start in 0..k {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = comp_count;
        comp_count += 1;
        let mut stack = vec![start];
        comp[start] = id;
        while let Some(v) = stack.pop() {
            for w in 0..k {
                if adj[v][w] && comp[w] == usize::MAX {
                    comp[w] = id;
                    stack.push(w);
                }
            }
        }
    }

    // disjoint union of cliques: each component must be complete
    let mut sizes = vec![0usize; comp_count];
    for &c in &comp {
        sizes[c] += 1;
    }
    let all_complete = (0..k).all(|v| deg[v] == sizes[comp[v]] - 1);
    if all_complete {
        let mut clique_sizes: Vec<usize> = sizes.iter().copied().filter(|&s| s >= 2).collect();
        clique_sizes.sort_unstable_by(|a, b| b.cmp(a));
        let isolated = sizes.iter().filter(|&&s| s == 1).count();
        return StructureSummary::CliquesPlusIsolated { clique_sizes, isolated };
    }

    // Two overlapping cliques. The remainder R (after dropping isolated
    // vertices) equals a union of cliques X and Y exactly when its
    // complement is a complete bipartite graph plus isolated vertices:
    // the complement-isolated vertices are universal in R and sit in both
    // cliques, and every remaining pair across the two sides must be a
    // complement edge, or that edge of R would lie in neither clique.
    let remainder: Vec<usize> = (0..k).filter(|&v| deg[v] > 0).collect();
    let isolated = k - remainder.len();

    let universal: Vec<usize> = remainder
        .iter()
        .copied()
        .filter(|&v| remainder.iter().all(|&w| w == v || adj[v][w]))
        .collect();
    let core: Vec<usize> =
        remainder.iter().copied().filter(|v| !universal.contains(v)).collect();
    let c = core.len();

    // 2-color the complement restricted to the core; the smallest vertex
    // goes to side A, making the reported cover deterministic.
    let mut color = vec![None; c];
    for start in 0..c {
        if color[start].is_some() {
            continue;
        }
        color[start] = Some(0u8);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in 0..c {
                if w != v && !adj[core[v]][core[w]] {
                    // complement edge v-w
                    match color[w] {
                        None => {
                            color[w] = Some(1 - color[v].unwrap());
                            stack.push(w);
                        }
                        Some(cw) if cw == color[v].unwrap() => return StructureSummary::Irregular,
                        Some(_) => {}
                    }
                }
            }
        }
    }

    // completeness of the complement across the sides
    for v in 0..c {
        for w in v + 1..c {
            if color[v] != color[w] && adj[core[v]][core[w]] {
                return StructureSummary::Irregular;
            }
        }
    }

    let side_len = |side: u8| color.iter().filter(|&&x| x == Some(side)).count();
    let overlap = universal.len();
    let (size_a, size_b) = {
        let (x, y) = (side_len(0) + overlap, side_len(1) + overlap);
        (x.max(y), x.min(y))
    };
    StructureSummary::TwoOverlappingCliques { size_a, size_b, overlap, isolated }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::competition::competition_graph;
    use crate::fixtures;

    fn part(verts: &[usize]) -> BTreeSet<usize> {
        verts.iter().copied().collect()
    }

    #[test]
    fn fig1_competition_graph_part1_is_a_triangle() {
        let bt = fixtures::fig1_d();
        let g = competition_graph(bt.digraph());
        let got = classify_structure(&g, &part(bt.part1()));
        assert_eq!(
            got,
            StructureSummary::CliquesPlusIsolated { clique_sizes: vec![3], isolated: 0 }
        );
    }

    #[test]
    fn path_is_two_overlapping_cliques() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]);
        let got = classify_structure(&g, &part(&[0, 1, 2]));
        assert_eq!(
            got,
            StructureSummary::TwoOverlappingCliques {
                size_a: 2,
                size_b: 2,
                overlap: 1,
                isolated: 0
            }
        );
    }

    #[test]
    fn edgeless_part_is_edgeless() {
        let g = Graph::new(4);
        assert_eq!(
            classify_structure(&g, &part(&[0, 1, 2, 3])),
            StructureSummary::Edgeless { vertices: 4 }
        );
    }

    #[test]
    fn three_disjoint_edges_are_cliques_plus_isolated() {
        let g = Graph::from_edges(6, [(0, 1), (2, 3), (4, 5)]);
        assert_eq!(
            classify_structure(&g, &part(&[0, 1, 2, 3, 4, 5])),
            StructureSummary::CliquesPlusIsolated { clique_sizes: vec![2, 2, 2], isolated: 0 }
        );
    }

    #[test]
    fn five_cycle_is_irregular() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]);
        assert_eq!(classify_structure(&g, &part(&[0, 1, 2, 3, 4])), StructureSummary::Irregular);
    }

    #[test]
    fn four_vertex_path_is_irregular() {
        // the complement of a path on four vertices is bipartite with
        // clique color classes, yet the middle edge lies in neither
        // clique, so no two-clique cover exists
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]);
        assert_eq!(classify_structure(&g, &part(&[0, 1, 2, 3])), StructureSummary::Irregular);
    }

    /// Brute force: does some pair of cliques cover both the vertices and
    /// the edges of the non-isolated remainder?
    fn coverable_by_two_cliques(g: &Graph, verts: &[usize]) -> bool {
        let remainder: Vec<usize> =
            verts.iter().copied().filter(|&v| verts.iter().any(|&w| g.has_edge(v, w))).collect();
        let r = remainder.len();
        let is_clique = |mask: u32| {
            (0..r).all(|i| {
                (i + 1..r).all(|j| {
                    mask >> i & 1 == 0 || mask >> j & 1 == 0
                        || g.has_edge(remainder[i], remainder[j])
                })
            })
        };
        for x in 0..1u32 << r {
            if !is_clique(x) {
                continue;
            }
            for y in 0..1u32 << r {
                if x | y != (1 << r) - 1 || !is_clique(y) {
                    continue;
                }
                let edges_covered = (0..r).all(|i| {
                    (i + 1..r).all(|j| {
                        !g.has_edge(remainder[i], remainder[j])
                            || (x >> i & 1 == 1 && x >> j & 1 == 1)
                            || (y >> i & 1 == 1 && y >> j & 1 == 1)
                    })
                });
                if edges_covered {
                    return true;
                }
            }
        }
        // an edgeless remainder is empty and trivially covered
        r == 0
    }

    fn components_all_complete(g: &Graph, verts: &[usize]) -> bool {
        // complete components = every path of length 2 closes a triangle,
        // checked by transitive adjacency within the part
        for &u in verts {
            for &v in verts {
                for &w in verts {
                    if u != w && g.has_edge(u, v) && g.has_edge(v, w) && !g.has_edge(u, w) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn classification_matches_brute_force_on_all_five_vertex_graphs() {
        let pairs: Vec<(usize, usize)> =
            (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        let verts: Vec<usize> = (0..5).collect();
        let part: BTreeSet<usize> = verts.iter().copied().collect();
        for mask in 0u32..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(5, edges);
            let got = classify_structure(&g, &part);
            let complete = components_all_complete(&g, &verts);
            let coverable = coverable_by_two_cliques(&g, &verts);
            match got {
                StructureSummary::Edgeless { .. } | StructureSummary::CliquesPlusIsolated { .. } => {
                    assert!(complete, "mask {mask}: {got:?} but a component is incomplete");
                }
                StructureSummary::TwoOverlappingCliques { overlap, .. } => {
                    assert!(!complete, "mask {mask}: disjoint case misreported as overlapping");
                    assert!(coverable, "mask {mask}: {got:?} but no cover exists");
                    assert!(overlap >= 1, "mask {mask}: overlap must be positive");
                }
                StructureSummary::Irregular => {
                    assert!(
                        !complete && !coverable,
                        "mask {mask}: irregular but complete={complete} coverable={coverable}"
                    );
                }
            }
        }
    }

    #[test]
    fn overlapping_cover_with_leftover_isolated_vertex() {
        // triangle 0-1-2 plus pendant edge 2-3, vertex 4 isolated:
        // cliques {0,1,2} and {2,3} overlapping in 2
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3)]);
        assert_eq!(
            classify_structure(&g, &part(&[0, 1, 2, 3, 4])),
            StructureSummary::TwoOverlappingCliques {
                size_a: 3,
                size_b: 2,
                overlap: 1,
                isolated: 1
            }
        );
    }

    #[test]
    fn labels_are_compact() {
        assert_eq!(StructureSummary::Edgeless { vertices: 4 }.label(), "I4");
        assert_eq!(
            StructureSummary::CliquesPlusIsolated { clique_sizes: vec![3, 2], isolated: 1 }
                .label(),
            "K3+K2+I1"
        );
        assert_eq!(
            StructureSummary::TwoOverlappingCliques {
                size_a: 2,
                size_b: 2,
                overlap: 1,
                isolated: 0
            }
            .label(),
            "K2~K2(ov1)"
        );
        assert_eq!(StructureSummary::Irregular.label(), "irregular");
    }
}
