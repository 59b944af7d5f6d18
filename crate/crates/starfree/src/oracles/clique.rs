//! Exact maximum clique and maximum stable set.
//!
//! Branch and bound with greedy-coloring upper bounds on the candidate set.
//! The returned set is always the lexicographically smallest among optimal
//! ones, so downstream decompositions are reproducible byte for byte.

use crate::bitset::VertexSet;
use crate::graph::Graph;

/// Greedy color classes over `cand`, ascending vertex order. Returns the
/// candidates sorted by class, each tagged with its class number + 1 (an
/// upper bound on the largest clique through that vertex and its
/// predecessors in the returned order).
fn color_sort(g: &Graph, cand: &VertexSet) -> Vec<(usize, usize)> {
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_sets: Vec<VertexSet> = Vec::new();
    for v in cand.iter() {
        let mut placed = false;
        for (ci, cs) in class_sets.iter_mut().enumerate() {
            if cs.is_disjoint(g.neighbors(v)) {
                cs.insert(v);
                classes[ci].push(v);
                placed = true;
                break;
            }
        }
        if !placed {
            let mut cs = VertexSet::empty(g.n());
            cs.insert(v);
            class_sets.push(cs);
            classes.push(vec![v]);
        }
    }
    let mut out = Vec::with_capacity(cand.len());
    for (ci, class) in classes.iter().enumerate() {
        for &v in class {
            out.push((v, ci + 1));
        }
    }
    out
}

fn expand(
    g: &Graph,
    ordered: &[(usize, usize)],
    mut cand: VertexSet,
    depth: usize,
    best: &mut usize,
    stop: Option<usize>,
) {
    for &(v, bound) in ordered.iter().rev() {
        if let Some(s) = stop {
            if *best >= s {
                return;
            }
        }
        if depth + bound <= *best {
            return; // bounds only shrink towards the front of `ordered`
        }
        let next = cand.intersection(g.neighbors(v));
        if depth + 1 > *best {
            *best = depth + 1;
        }
        if !next.is_empty() {
            let next_ordered = color_sort(g, &next);
            expand(g, &next_ordered, next, depth + 1, best, stop);
        }
        cand.remove(v);
    }
}

/// Size of the largest clique inside `cand`. With `stop = Some(s)` the search
/// may return early once a clique of size >= s is known; the returned value is
/// then only guaranteed to be >= s (or exact if below).
pub fn max_clique_size_in(g: &Graph, cand: &VertexSet, stop: Option<usize>) -> usize {
    if cand.is_empty() {
        return 0;
    }
    let mut best = 0;
    let ordered = color_sort(g, cand);
    expand(g, &ordered, cand.clone(), 0, &mut best, stop);
    best
}

pub fn clique_number(g: &Graph) -> usize {
    max_clique_size_in(g, &g.full_vertex_set(), None)
}

/// The lexicographically smallest maximum clique inside `cand`: built
/// greedily, keeping a vertex exactly when a maximum clique through the
/// current prefix still exists.
pub fn max_clique_in(g: &Graph, cand: &VertexSet) -> VertexSet {
    let omega = max_clique_size_in(g, cand, None);
    let mut chosen = VertexSet::empty(g.n());
    let mut cand = cand.clone();
    let mut need = omega;
    while need > 0 {
        let mut advanced = false;
        for v in cand.iter() {
            let sub = cand.intersection(g.neighbors(v));
            if need == 1 || max_clique_size_in(g, &sub, Some(need - 1)) >= need - 1 {
                chosen.insert(v);
                cand = sub;
                need -= 1;
                advanced = true;
                break;
            }
        }
        assert!(advanced, "maximum clique extension must exist");
    }
    chosen
}

pub fn max_clique(g: &Graph) -> VertexSet {
    max_clique_in(g, &g.full_vertex_set())
}

/// Maximum stable set: the maximum clique of the complement, under the same
/// lexicographic tie rule.
pub fn max_stable_set(g: &Graph) -> VertexSet {
    max_clique(&g.complement())
}

pub fn stability_number(g: &Graph) -> usize {
    max_stable_set(g).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, petersen, Graph};

    /// Independent oracle: largest clique by exhaustive subset enumeration.
    fn brute_omega(g: &Graph) -> usize {
        let n = g.n();
        assert!(n <= 16);
        let mut best = 0;
        for mask in 0u32..(1 << n) {
            let verts: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if verts.len() <= best {
                continue;
            }
            let is_clique = verts
                .iter()
                .enumerate()
                .all(|(i, &u)| verts[i + 1..].iter().all(|&v| g.has_edge(u, v)));
            if is_clique {
                best = verts.len();
            }
        }
        best
    }

    #[test]
    fn clique_of_k5_is_everything() {
        let c = max_clique(&complete(5));
        assert_eq!(c.to_vec(), vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn clique_of_c5_is_lex_least_edge() {
        let c = max_clique(&cycle(5));
        assert_eq!(c.to_vec(), vec![0, 1]);
    }

    #[test]
    fn petersen_clique_and_stable_set() {
        let g = petersen();
        assert_eq!(brute_omega(&g), 2);
        assert_eq!(clique_number(&g), 2);
        assert_eq!(max_stable_set(&g).len(), 4);
    }

    #[test]
    fn empty_graph() {
        let g = Graph::empty(0);
        assert!(max_clique(&g).is_empty());
        assert_eq!(clique_number(&g), 0);
    }

    #[test]
    fn stable_set_of_edgeless_is_everything() {
        let g = Graph::empty(7);
        assert_eq!(max_stable_set(&g).len(), 7);
        assert_eq!(max_stable_set(&cycle(5)).len(), 2);
    }

    #[test]
    fn agrees_with_brute_force_on_seeded_graphs() {
        for seed in 0..40u64 {
            let g = crate::gen::gnp(10, 1, 2, seed);
            assert_eq!(clique_number(&g), brute_omega(&g), "seed {seed}");
            let c = max_clique(&g);
            assert_eq!(c.len(), brute_omega(&g));
            let verts = c.to_vec();
            for (i, &u) in verts.iter().enumerate() {
                for &v in &verts[i + 1..] {
                    assert!(g.has_edge(u, v));
                }
            }
        }
    }

    #[test]
    fn stable_equals_complement_clique() {
        for seed in 0..10u64 {
            let g = crate::gen::gnp(9, 2, 3, seed);
            assert_eq!(max_stable_set(&g), max_clique(&g.complement()));
        }
    }
}
