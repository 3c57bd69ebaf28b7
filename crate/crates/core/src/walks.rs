//! Walk enumeration by direct neighborhood expansion.
//!
//! These functions deliberately avoid the Boolean-matrix machinery: they
//! serve as the independent oracle the matrix route is tested against.

use std::collections::BTreeSet;

use crate::digraph::Digraph;

/// Endpoints of directed walks of length exactly `m` starting at `source`.
///
/// Computed by `m` rounds of out-neighborhood expansion, never via
/// matrices. `m = 0` yields `{source}`.
pub fn m_step_prey_set(d: &Digraph, source: usize, m: usize) -> BTreeSet<usize> {
    assert!(source < d.n(), "source out of range");
    let mut frontier: BTreeSet<usize> = BTreeSet::from([source]);
    for _ in 0..m {
        let mut next = BTreeSet::new();
        for &v in &frontier {
            next.extend(d.out_neighbors(v).iter().copied());
        }
        frontier = next;
        if frontier.is_empty() {
            break;
        }
    }
    frontier
}

/// Depth-first search with an explicit stack; a back edge to a vertex on
/// the current path witnesses a directed cycle.
pub fn has_directed_cycle(d: &Digraph) -> bool {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let mut color = vec![Color::White; d.n()];
    for root in 0..d.n() {
        if color[root] != Color::White {
            continue;
        }
        // stack of (vertex, next out-neighbor position)
        let mut stack: Vec<(usize, usize)> = vec![(root, 0)];
        color[root] = Color::Gray;
        while let Some(&mut (v, ref mut idx)) = stack.last_mut() {
            if let Some(&w) = d.out_neighbors(v).get(*idx) {
                *idx += 1;
                match color[w] {
                    Color::Gray => return true,
                    Color::White => {
                        color[w] = Color::Gray;
                        stack.push((w, 0));
                    }
                    Color::Black => {}
                }
            } else {
                color[v] = Color::Black;
                stack.pop();
            }
        }
    }
    false
}
