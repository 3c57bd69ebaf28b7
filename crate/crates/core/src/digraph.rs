//! Directed graphs on dense integer vertices, plus the validated
//! bipartite-tournament wrapper.
//!
//! Vertices are indices `0..n` so they can double as matrix row/column
//! indices. Labels are carried alongside purely for presentation.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DigraphError {
    #[error("self-loop at vertex {0} is not allowed")]
    SelfLoop(String),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(String, String),
    #[error("vertex index {index} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("expected {n} labels, got {got}")]
    LabelCountMismatch { n: usize, got: usize },
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BipartiteError {
    #[error("parts do not partition the vertex set (vertex {0} misplaced or repeated)")]
    NotAPartition(String),
    #[error("missing arc: neither ({0}, {1}) nor ({1}, {0}) is present")]
    MissingArc(String, String),
    #[error("double arc: both ({0}, {1}) and ({1}, {0}) are present")]
    DoubleArc(String, String),
    #[error("arc ({0}, {1}) joins two vertices of the same part")]
    SamePartArc(String, String),
}

/// A finite simple digraph: no self-loops, no parallel arcs.
///
/// Immutable after construction; adjacency lists are precomputed and always
/// agree with the arc set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    n: usize,
    labels: Vec<String>,
    arcs: BTreeSet<(usize, usize)>,
    out: Vec<Vec<usize>>,
    inn: Vec<Vec<usize>>,
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

fn check_labels(n: usize, labels: &[String]) -> Result<(), DigraphError> {
    if labels.len() != n {
        return Err(DigraphError::LabelCountMismatch { n, got: labels.len() });
    }
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(DigraphError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn build_adjacency(n: usize, arcs: &BTreeSet<(usize, usize)>) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    let mut out = vec![Vec::new(); n];
    let mut inn = vec![Vec::new(); n];
    for &(u, v) in arcs {
        out[u].push(v);
        inn[v].push(u);
    }
    for l in inn.iter_mut() {
        l.sort_unstable();
    }
    (out, inn)
}

impl Digraph {
    /// Digraph with `n` vertices and no arcs.
    pub fn new(n: usize) -> Self {
        Self::from_arcs(n, std::iter::empty()).unwrap()
    }

    pub fn from_arcs(
        n: usize,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DigraphError> {
        Self::from_arcs_labeled(n, default_labels(n), arcs)
    }

    pub fn from_arcs_labeled(
        n: usize,
        labels: Vec<String>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DigraphError> {
        check_labels(n, &labels)?;
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(DigraphError::VertexOutOfRange { index: w, n });
                }
            }
            if u == v {
                return Err(DigraphError::SelfLoop(labels[u].clone()));
            }
            if !set.insert((u, v)) {
                return Err(DigraphError::DuplicateArc(labels[u].clone(), labels[v].clone()));
            }
        }
        let (out, inn) = build_adjacency(n, &set);
        Ok(Digraph { n, labels, arcs: set, out, inn })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.out[v]
    }

    pub fn in_neighbors(&self, v: usize) -> &[usize] {
        &self.inn[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out[v].len()
    }

    /// Subdigraph induced by `keep`, preserving the original indices and
    /// labels (vertices outside `keep` stay present but lose all arcs).
    ///
    /// Keeping indices stable lets results on the induced digraph be
    /// compared against the original without translation.
    pub fn induced_keeping_indices(&self, keep: &BTreeSet<usize>) -> Digraph {
        let arcs: BTreeSet<(usize, usize)> = self
            .arcs
            .iter()
            .copied()
            .filter(|(u, v)| keep.contains(u) && keep.contains(v))
            .collect();
        let (out, inn) = build_adjacency(self.n, &arcs);
        Digraph { n: self.n, labels: self.labels.clone(), arcs, out, inn }
    }
}

impl fmt::Display for Digraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "digraph on {} vertices, {} arcs", self.n, self.arcs.len())
    }
}

/// A digraph that may carry self-loops.
///
/// The power digraph of `D` contains a loop at every vertex lying on a
/// directed cycle whose length divides the exponent, so it cannot be a
/// [`Digraph`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopDigraph {
    n: usize,
    labels: Vec<String>,
    arcs: BTreeSet<(usize, usize)>,
}

impl LoopDigraph {
    pub fn from_arcs_labeled(
        n: usize,
        labels: Vec<String>,
        arcs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, DigraphError> {
        check_labels(n, &labels)?;
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            for w in [u, v] {
                if w >= n {
                    return Err(DigraphError::VertexOutOfRange { index: w, n });
                }
            }
            if !set.insert((u, v)) {
                return Err(DigraphError::DuplicateArc(labels[u].clone(), labels[v].clone()));
            }
        }
        Ok(LoopDigraph { n, labels, arcs: set })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }
}

/// Which side of the bipartition a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    One,
    Two,
}

impl Part {
    pub fn other(self) -> Part {
        match self {
            Part::One => Part::Two,
            Part::Two => Part::One,
        }
    }
}

impl fmt::Display for Part {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Part::One => write!(f, "part1"),
            Part::Two => write!(f, "part2"),
        }
    }
}

/// An orientation of a complete bipartite graph: every cross pair carries
/// exactly one arc, and no arc stays inside a part.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteTournament {
    digraph: Digraph,
    part1: Vec<usize>,
    part2: Vec<usize>,
    side: Vec<Part>,
}

impl BipartiteTournament {
    pub fn digraph(&self) -> &Digraph {
        &self.digraph
    }

    pub fn part1(&self) -> &[usize] {
        &self.part1
    }

    pub fn part2(&self) -> &[usize] {
        &self.part2
    }

    pub fn part_of(&self, v: usize) -> Part {
        self.side[v]
    }

    pub fn part(&self, which: Part) -> &[usize] {
        match which {
            Part::One => &self.part1,
            Part::Two => &self.part2,
        }
    }

    pub fn into_digraph(self) -> Digraph {
        self.digraph
    }
}

/// Checks that `(part1, part2)` is a partition and that `d` orients every
/// cross pair exactly once, reporting the first violating pair otherwise.
///
/// Same-part arcs are scanned in arc order, then cross pairs in
/// (part1 index, part2 index) order.
pub fn validate_bipartite_tournament(
    d: Digraph,
    part1: impl IntoIterator<Item = usize>,
    part2: impl IntoIterator<Item = usize>,
) -> Result<BipartiteTournament, BipartiteError> {
    let part1: Vec<usize> = {
        let mut p: Vec<usize> = part1.into_iter().collect();
        p.sort_unstable();
        p
    };
    let part2: Vec<usize> = {
        let mut p: Vec<usize> = part2.into_iter().collect();
        p.sort_unstable();
        p
    };

    let mut side = vec![None; d.n()];
    for &v in &part1 {
        if v >= d.n() || side[v].is_some() {
            return Err(BipartiteError::NotAPartition(label_or_index(&d, v)));
        }
        side[v] = Some(Part::One);
    }
    for &v in &part2 {
        if v >= d.n() || side[v].is_some() {
            return Err(BipartiteError::NotAPartition(label_or_index(&d, v)));
        }
        side[v] = Some(Part::Two);
    }
    if let Some(v) = (0..d.n()).find(|&v| side[v].is_none()) {
        return Err(BipartiteError::NotAPartition(d.label(v).to_string()));
    }
    let side: Vec<Part> = side.into_iter().map(Option::unwrap).collect();

    for (u, v) in d.arcs() {
        if side[u] == side[v] {
            return Err(BipartiteError::SamePartArc(
                d.label(u).to_string(),
                d.label(v).to_string(),
            ));
        }
    }
    for &u in &part1 {
        for &v in &part2 {
            match (d.has_arc(u, v), d.has_arc(v, u)) {
                (false, false) => {
                    return Err(BipartiteError::MissingArc(
                        d.label(u).to_string(),
                        d.label(v).to_string(),
                    ))
                }
                (true, true) => {
                    return Err(BipartiteError::DoubleArc(
                        d.label(u).to_string(),
                        d.label(v).to_string(),
                    ))
                }
                _ => {}
            }
        }
    }

    Ok(BipartiteTournament { digraph: d, part1, part2, side })
}

fn label_or_index(d: &Digraph, v: usize) -> String {
    if v < d.n() {
        d.label(v).to_string()
    } else {
        format!("#{v}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn adjacency_agrees_with_arc_set() {
        let d = Digraph::from_arcs(4, [(0, 1), (0, 2), (2, 1), (3, 0)]).unwrap();
        for u in 0..4 {
            for v in 0..4 {
                let listed = d.out_neighbors(u).contains(&v);
                assert_eq!(listed, d.has_arc(u, v), "out mismatch at ({u},{v})");
                let listed_in = d.in_neighbors(v).contains(&u);
                assert_eq!(listed_in, d.has_arc(u, v), "in mismatch at ({u},{v})");
            }
        }
    }

    #[test]
    fn rejects_self_loop_and_duplicate() {
        assert_eq!(
            Digraph::from_arcs(2, [(1, 1)]).unwrap_err(),
            DigraphError::SelfLoop("v1".into())
        );
        assert_eq!(
            Digraph::from_arcs(2, [(0, 1), (0, 1)]).unwrap_err(),
            DigraphError::DuplicateArc("v0".into(), "v1".into())
        );
    }

    #[test]
    fn fig1_is_a_valid_bipartite_tournament() {
        let bt = fixtures::fig1_d();
        assert_eq!(bt.part1().len(), 3);
        assert_eq!(bt.part2().len(), 3);
        assert_eq!(bt.digraph().arc_count(), 9);
    }

    #[test]
    fn double_arc_detected() {
        let d = Digraph::from_arcs(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(
            validate_bipartite_tournament(d, [0], [1]).unwrap_err(),
            BipartiteError::DoubleArc("v0".into(), "v1".into())
        );
    }

    #[test]
    fn missing_arc_detected() {
        let d = Digraph::new(2);
        assert_eq!(
            validate_bipartite_tournament(d, [0], [1]).unwrap_err(),
            BipartiteError::MissingArc("v0".into(), "v1".into())
        );
    }

    #[test]
    fn same_part_arc_detected() {
        let d = Digraph::from_arcs(3, [(0, 1), (0, 2), (1, 2)]).unwrap();
        assert_eq!(
            validate_bipartite_tournament(d, [0, 1], [2]).unwrap_err(),
            BipartiteError::SamePartArc("v0".into(), "v1".into())
        );
    }

    #[test]
    fn accepts_exactly_the_orientations_of_complete_bipartite_graphs() {
        // parts (2,2): of all 2^8 subsets of directed cross arcs, exactly
        // 2^4 = 16 pick one orientation per pair.
        let pairs = [(0usize, 2usize), (0, 3), (1, 2), (1, 3)];
        let mut accepted = 0;
        for mask in 0u32..(1 << (2 * pairs.len())) {
            let mut arcs = Vec::new();
            for (k, &(u, v)) in pairs.iter().enumerate() {
                if mask & (1 << (2 * k)) != 0 {
                    arcs.push((u, v));
                }
                if mask & (1 << (2 * k + 1)) != 0 {
                    arcs.push((v, u));
                }
            }
            let d = Digraph::from_arcs(4, arcs).unwrap();
            if validate_bipartite_tournament(d, [0, 1], [2, 3]).is_ok() {
                accepted += 1;
            }
        }
        assert_eq!(accepted, 16);
    }
}
