//! Constructive Ramsey-type bound: a graph with no stable set of size k has
//! at most omega^{k-1} + omega^{k-2} + ... + omega vertices.
//!
//! `ramsey_witness` makes the inductive proof executable: it either builds a
//! stable set of size k by recursing into the non-neighborhood of a vertex of
//! a maximum clique, or certifies the vertex-count bound.

use super::clique::{clique_number, max_clique};
use crate::bitset::VertexSet;
use crate::graph::Graph;
use num_bigint::BigUint;

/// Exact value of omega^{k-1} + ... + omega; the empty sum (k = 1) is 0.
pub fn ramsey_bound(omega: u64, k: u64) -> BigUint {
    let mut sum: BigUint = num_traits::Zero::zero();
    let base = BigUint::from(omega);
    let mut pow = base.clone();
    for _ in 1..k {
        sum += &pow;
        pow *= &base;
    }
    sum
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RamseyOutcome {
    /// A stable set of exactly k vertices.
    StableSet(VertexSet),
    /// The bound holds: vertex_count <= bound = ramsey_bound(omega, k).
    Certificate {
        omega: usize,
        k: usize,
        bound: BigUint,
        vertex_count: usize,
    },
}

/// Mirrors the inductive proof: pick a maximum clique X; for each x in X,
/// recurse with k-1 into the set of vertices nonadjacent to x (excluding x
/// itself), and prepend x to any stable set found. If every branch comes
/// back empty, the additive counting argument certifies the bound.
pub fn ramsey_witness(g: &Graph, k: usize) -> RamseyOutcome {
    assert!(k >= 1, "k must be at least 1");
    if let Some(stable) = find_stable(g, k) {
        let set = VertexSet::from_members(g.n(), stable);
        debug_assert_eq!(set.len(), k);
        return RamseyOutcome::StableSet(set);
    }
    let omega = clique_number(g);
    RamseyOutcome::Certificate {
        omega,
        k,
        bound: ramsey_bound(omega as u64, k as u64),
        vertex_count: g.n(),
    }
}

fn find_stable(g: &Graph, k: usize) -> Option<Vec<usize>> {
    if k == 1 {
        return if g.n() > 0 { Some(vec![0]) } else { None };
    }
    let clique = max_clique(g);
    for x in clique.iter() {
        let mut w = g.full_vertex_set();
        w.subtract(g.neighbors(x));
        w.remove(x);
        let (sub, labels) = g.induced(&w);
        if let Some(stable) = find_stable(&sub, k - 1) {
            let mut out = vec![x];
            out.extend(stable.into_iter().map(|v| labels[v]));
            return Some(out);
        }
    }
    None
}
