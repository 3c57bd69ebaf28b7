//! Deterministic instance generation: seeded random bipartite tournaments
//! in three modes, exhaustive enumeration by orientation bitmask, and a
//! seeded general-digraph sampler.
//!
//! Randomness always comes from the crate's own [`SplitMix64`] so that a
//! given spec reproduces bit-identically across runs and platforms.

use thiserror::Error;

use crate::digraph::{validate_bipartite_tournament, BipartiteTournament, Digraph};
use crate::sink::sinks;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("no sink-free orientation exists for part sizes ({n1}, {n2}); both parts need at least 2 vertices")]
    InfeasibleParts { n1: usize, n2: usize },
    #[error("gave up after {retries} rejected orientations without finding a sink-free one")]
    RetriesExhausted { retries: usize },
    #[error("part sizes ({n1}, {n2}) give {} cross pairs, above the enumeration cap of {cap}", n1 * n2)]
    TooLarge { n1: usize, n2: usize, cap: usize },
}

/// SplitMix64 (Steele, Lea, Flood: "Fast splittable pseudorandom number
/// generators", OOPSLA 2014). State advances by the golden-ratio
/// increment 0x9E3779B97F4A7C15 and the output is a mixed copy using the
/// multipliers 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Fair coin from the top output bit.
    pub fn next_bool(&mut self) -> bool {
        self.next_u64() >> 63 == 1
    }

    /// Uniform value in `0..bound` by 128-bit multiply with rejection
    /// (Lemire's unbiased range reduction).
    pub fn below(&mut self, bound: u64) -> u64 {
        assert!(bound > 0, "bound must be positive");
        let mut x = self.next_u64();
        let mut m = (x as u128) * (bound as u128);
        let mut low = m as u64;
        if low < bound {
            let threshold = bound.wrapping_neg() % bound;
            while low < threshold {
                x = self.next_u64();
                m = (x as u128) * (bound as u128);
                low = m as u64;
            }
        }
        (m >> 64) as u64
    }

    /// In-place Fisher-Yates shuffle, drawing indices high to low.
    pub fn shuffle<T>(&mut self, items: &mut [T]) {
        for i in (1..items.len()).rev() {
            let j = self.below(i as u64 + 1) as usize;
            items.swap(i, j);
        }
    }
}

/// How to orient the cross pairs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GenMode {
    /// Every cross pair oriented by an independent fair coin.
    Uniform,
    /// Oriented along a uniformly random total order, hence acyclic.
    Acyclic,
    /// Uniform orientations rejection-sampled until no vertex is a sink.
    Sinkless,
}

impl GenMode {
    pub fn parse(s: &str) -> Option<GenMode> {
        match s {
            "uniform" => Some(GenMode::Uniform),
            "acyclic" => Some(GenMode::Acyclic),
            "sinkless" => Some(GenMode::Sinkless),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            GenMode::Uniform => "uniform",
            GenMode::Acyclic => "acyclic",
            GenMode::Sinkless => "sinkless",
        }
    }
}

/// A reproducible generation request: identical specs yield identical
/// instances.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GenSpec {
    pub n1: usize,
    pub n2: usize,
    pub seed: u64,
    pub mode: GenMode,
}

/// Retry budget for the sink-free rejection sampler.
pub const DEFAULT_SINKLESS_RETRIES: usize = 10_000;

/// Number of cross pairs [`enumerate_all`] is willing to handle.
pub const ENUMERATION_CAP: usize = 20;

fn part_labels(n1: usize, n2: usize) -> Vec<String> {
    (1..=n1)
        .map(|i| format!("x{i}"))
        .chain((1..=n2).map(|j| format!("y{j}")))
        .collect()
}

fn tournament_from_bits(
    n1: usize,
    n2: usize,
    mut bit_for_pair: impl FnMut(usize, usize) -> bool,
) -> BipartiteTournament {
    let mut arcs = Vec::with_capacity(n1 * n2);
    for i in 0..n1 {
        for j in 0..n2 {
            let (u, v) = (i, n1 + j);
            if bit_for_pair(i, j) {
                arcs.push((u, v));
            } else {
                arcs.push((v, u));
            }
        }
    }
    let d = Digraph::from_arcs_labeled(n1 + n2, part_labels(n1, n2), arcs)
        .expect("one arc per cross pair cannot collide");
    validate_bipartite_tournament(d, 0..n1, n1..n1 + n2)
        .expect("construction orients every cross pair exactly once")
}

/// Uniformly random orientation: one coin per cross pair, drawn in
/// (part1 index, part2 index) order; heads points from part1 to part2.
pub fn random_bipartite_tournament(spec: &GenSpec) -> BipartiteTournament {
    let mut rng = SplitMix64::new(spec.seed);
    tournament_from_bits(spec.n1, spec.n2, |_, _| rng.next_bool())
}

/// Random acyclic orientation: draw a uniform total order on all
/// vertices and orient every cross pair from earlier to later. Every
/// acyclic orientation arises from at least one order.
pub fn random_acyclic_bipartite_tournament(spec: &GenSpec) -> BipartiteTournament {
    let mut rng = SplitMix64::new(spec.seed);
    let n = spec.n1 + spec.n2;
    let mut order: Vec<usize> = (0..n).collect();
    rng.shuffle(&mut order);
    let mut rank = vec![0usize; n];
    for (pos, &v) in order.iter().enumerate() {
        rank[v] = pos;
    }
    tournament_from_bits(spec.n1, spec.n2, |i, j| rank[i] < rank[spec.n1 + j])
}

/// Rejection-samples uniform orientations until none of the vertices is
/// a sink.
pub fn random_sinkless_bipartite_tournament(
    spec: &GenSpec,
    max_retries: usize,
) -> Result<BipartiteTournament, GenError> {
    if spec.n1 < 2 || spec.n2 < 2 {
        return Err(GenError::InfeasibleParts { n1: spec.n1, n2: spec.n2 });
    }
    let mut rng = SplitMix64::new(spec.seed);
    for _ in 0..max_retries {
        let bt = {
            let mut draw = |_: usize, _: usize| rng.next_bool();
            tournament_from_bits(spec.n1, spec.n2, &mut draw)
        };
        if sinks(bt.digraph()).is_empty() {
            return Ok(bt);
        }
    }
    Err(GenError::RetriesExhausted { retries: max_retries })
}

/// Generates per the spec's mode with the default retry budget.
pub fn generate(spec: &GenSpec) -> Result<BipartiteTournament, GenError> {
    match spec.mode {
        GenMode::Uniform => Ok(random_bipartite_tournament(spec)),
        GenMode::Acyclic => Ok(random_acyclic_bipartite_tournament(spec)),
        GenMode::Sinkless => random_sinkless_bipartite_tournament(spec, DEFAULT_SINKLESS_RETRIES),
    }
}

/// The orientation encoded by `mask`: bit `i * n2 + j` set means the arc
/// runs from part1 vertex `i` to part2 vertex `j`.
pub fn tournament_from_mask(n1: usize, n2: usize, mask: u64) -> BipartiteTournament {
    tournament_from_bits(n1, n2, |i, j| mask >> (i * n2 + j) & 1 == 1)
}

/// All `2^(n1*n2)` orientations in ascending bitmask order.
pub fn enumerate_all(
    n1: usize,
    n2: usize,
) -> Result<impl Iterator<Item = (u64, BipartiteTournament)>, GenError> {
    let pairs = n1 * n2;
    if pairs > ENUMERATION_CAP {
        return Err(GenError::TooLarge { n1, n2, cap: ENUMERATION_CAP });
    }
    Ok((0..1u64 << pairs).map(move |mask| (mask, tournament_from_mask(n1, n2, mask))))
}

/// Seeded general digraph on `n` vertices: each ordered pair `(u, v)`,
/// `u != v`, carries an arc with probability 1/2, scanned in row-major
/// order.
pub fn random_digraph(n: usize, seed: u64) -> Digraph {
    let mut rng = SplitMix64::new(seed);
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.next_bool() {
                arcs.push((u, v));
            }
        }
    }
    Digraph::from_arcs(n, arcs).expect("pairs are distinct by construction")
}
