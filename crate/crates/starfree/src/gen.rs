//! Deterministic, seeded graph families for tests and benchmarks.
//!
//! Randomness comes from SplitMix64 (Steele, Lea, Flood 2014): a 64-bit
//! counter-based generator with a fixed, platform-independent algorithm, so
//! the same spec yields the same graph everywhere. Edge probabilities are
//! exact rationals decided by a full-width 64-bit threshold draw; no
//! floating point is involved.

use crate::graph::Graph;
use crate::oracles::is_h_free;
use crate::pattern::StarForest;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// SplitMix64. State advances by the golden-ratio increment; output is the
/// standard 64-bit finalizer of the state.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("probability {num}/{den} is not in [0, 1]")]
    BadProbability { num: u64, den: u64 },
    #[error("part/block sizes must all be at least 1")]
    BadSizes,
    #[error("blowup needs one size per base vertex ({expected}), got {got}")]
    SizeCountMismatch { expected: usize, got: usize },
    #[error("bad pattern in generator spec: {0}")]
    BadPattern(String),
}

/// A serializable recipe for one graph. The seed (where present) fully
/// determines the output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum GenSpec {
    Gnp {
        n: usize,
        p_num: u64,
        p_den: u64,
        seed: u64,
    },
    CliqueUnion {
        sizes: Vec<usize>,
    },
    CompleteMultipartite {
        sizes: Vec<usize>,
    },
    Blowup {
        base: Box<GenSpec>,
        sizes: Vec<usize>,
    },
    Mycielski {
        base: Box<GenSpec>,
    },
    RejectionHFree {
        base: Box<GenSpec>,
        pattern: String,
        max_tries: u64,
    },
}

/// G(n, p) with p = p_num/p_den. Pairs are visited in lexicographic order
/// (u, v), u < v; each gets one SplitMix64 draw d, and the edge is present
/// iff d * p_den < p_num * 2^64.
pub fn gnp(n: usize, p_num: u64, p_den: u64, seed: u64) -> Graph {
    assert!(p_den > 0 && p_num <= p_den, "probability must be in [0, 1]");
    let mut rng = SplitMix64::new(seed);
    let threshold = (p_num as u128) << 64;
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            let draw = rng.next_u64() as u128;
            if draw * (p_den as u128) < threshold {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Disjoint union of cliques of the given sizes.
pub fn clique_union(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut g = Graph::empty(n);
    let mut start = 0;
    for &s in sizes {
        for i in 0..s {
            for j in i + 1..s {
                g.add_edge(start + i, start + j);
            }
        }
        start += s;
    }
    g
}

/// Complete multipartite graph with the given part sizes.
pub fn complete_multipartite(sizes: &[usize]) -> Graph {
    let n: usize = sizes.iter().sum();
    let mut bounds = Vec::with_capacity(sizes.len() + 1);
    let mut acc = 0;
    bounds.push(0);
    for &s in sizes {
        acc += s;
        bounds.push(acc);
    }
    let mut g = Graph::empty(n);
    for pi in 0..sizes.len() {
        for pj in pi + 1..sizes.len() {
            for u in bounds[pi]..bounds[pi + 1] {
                for v in bounds[pj]..bounds[pj + 1] {
                    g.add_edge(u, v);
                }
            }
        }
    }
    g
}

/// Replaces vertex i of `base` by a clique of `sizes[i]` vertices, with a
/// complete join along every original edge.
pub fn blowup(base: &Graph, sizes: &[usize]) -> Graph {
    assert_eq!(sizes.len(), base.n(), "one size per base vertex");
    let n: usize = sizes.iter().sum();
    let mut start = vec![0usize; base.n() + 1];
    for i in 0..base.n() {
        start[i + 1] = start[i] + sizes[i];
    }
    let mut g = Graph::empty(n);
    for i in 0..base.n() {
        for a in start[i]..start[i + 1] {
            for b in a + 1..start[i + 1] {
                g.add_edge(a, b);
            }
        }
        for j in base.neighbors(i).iter() {
            if j > i {
                for a in start[i]..start[i + 1] {
                    for b in start[j]..start[j + 1] {
                        g.add_edge(a, b);
                    }
                }
            }
        }
    }
    g
}

/// The Mycielski construction: vertices v_i, shadows u_i (adjacent to the
/// neighbors of v_i), and an apex adjacent to every shadow. Preserves
/// triangle-freeness and increments the chromatic number.
pub fn mycielski(base: &Graph) -> Graph {
    let n = base.n();
    let mut g = Graph::empty(2 * n + 1);
    for (u, v) in base.edges() {
        g.add_edge(u, v);
        g.add_edge(n + u, v);
        g.add_edge(u, n + v);
    }
    for i in 0..n {
        g.add_edge(2 * n, n + i);
    }
    g
}

/// Draws from `base` with derived seeds until the result passes `is_h_free`,
/// up to `max_tries` attempts. `None` means no H-free draw was found.
pub fn rejection_h_free(base: &GenSpec, h: &StarForest, max_tries: u64) -> Result<Option<Graph>, GenError> {
    let mut derive = SplitMix64::new(spec_seed(base).unwrap_or(0));
    for attempt in 0..max_tries {
        let candidate = if attempt == 0 {
            base.clone()
        } else {
            let mut c = base.clone();
            reseed(&mut c, derive.next_u64());
            c
        };
        if let Some(g) = generate(&candidate)? {
            if is_h_free(&g, h) {
                return Ok(Some(g));
            }
        }
        if spec_seed(base).is_none() {
            break; // deterministic base: retrying cannot change the outcome
        }
    }
    Ok(None)
}

fn spec_seed(spec: &GenSpec) -> Option<u64> {
    match spec {
        GenSpec::Gnp { seed, .. } => Some(*seed),
        GenSpec::Blowup { base, .. }
        | GenSpec::Mycielski { base }
        | GenSpec::RejectionHFree { base, .. } => spec_seed(base),
        _ => None,
    }
}

fn reseed(spec: &mut GenSpec, new_seed: u64) {
    match spec {
        GenSpec::Gnp { seed, .. } => *seed = new_seed,
        GenSpec::Blowup { base, .. }
        | GenSpec::Mycielski { base }
        | GenSpec::RejectionHFree { base, .. } => reseed(base, new_seed),
        _ => {}
    }
}

/// Runs a spec. Only `rejection_h_free` can come back `None`.
pub fn generate(spec: &GenSpec) -> Result<Option<Graph>, GenError> {
    match spec {
        GenSpec::Gnp {
            n,
            p_num,
            p_den,
            seed,
        } => {
            if *p_den == 0 || p_num > p_den {
                return Err(GenError::BadProbability {
                    num: *p_num,
                    den: *p_den,
                });
            }
            Ok(Some(gnp(*n, *p_num, *p_den, *seed)))
        }
        GenSpec::CliqueUnion { sizes } | GenSpec::CompleteMultipartite { sizes } => {
            if sizes.is_empty() || sizes.contains(&0) {
                return Err(GenError::BadSizes);
            }
            Ok(Some(match spec {
                GenSpec::CliqueUnion { .. } => clique_union(sizes),
                _ => complete_multipartite(sizes),
            }))
        }
        GenSpec::Blowup { base, sizes } => {
            let Some(g) = generate(base)? else {
                return Ok(None);
            };
            if sizes.len() != g.n() {
                return Err(GenError::SizeCountMismatch {
                    expected: g.n(),
                    got: sizes.len(),
                });
            }
            if sizes.contains(&0) {
                return Err(GenError::BadSizes);
            }
            Ok(Some(blowup(&g, sizes)))
        }
        GenSpec::Mycielski { base } => {
            Ok(generate(base)?.map(|g| mycielski(&g)))
        }
        GenSpec::RejectionHFree {
            base,
            pattern,
            max_tries,
        } => {
            let h = StarForest::parse(pattern)
                .map_err(|e| GenError::BadPattern(e.to_string()))?;
            rejection_h_free(base, &h, *max_tries)
        }
    }
}
