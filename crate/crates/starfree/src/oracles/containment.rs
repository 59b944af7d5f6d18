//! Induced star-forest containment by pruned backtracking.
//!
//! Stars are placed largest first (most constrained). An induced embedding
//! needs each center adjacent to its leaves, leaves of a star pairwise
//! nonadjacent, and distinct stars pairwise anticomplete.

use crate::bitset::VertexSet;
use crate::graph::Graph;
use crate::pattern::StarForest;
use serde::{Deserialize, Serialize};

/// Where one star of the pattern landed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarEmbedding {
    pub center: usize,
    pub leaves: Vec<usize>,
}

/// An induced embedding of a star forest, star records aligned with the
/// pattern's canonical (ascending) star order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Embedding {
    pub stars: Vec<StarEmbedding>,
}

impl Embedding {
    /// Full validity check against the definition; used by tests and callers
    /// that want an external certificate.
    pub fn is_valid(&self, g: &Graph, h: &StarForest) -> bool {
        if self.stars.len() != h.stars().len() {
            return false;
        }
        let mut all = Vec::new();
        for (emb, &k) in self.stars.iter().zip(h.stars()) {
            if emb.leaves.len() != k as usize {
                return false;
            }
            if emb.center >= g.n() || emb.leaves.iter().any(|&l| l >= g.n()) {
                return false;
            }
            for (i, &l) in emb.leaves.iter().enumerate() {
                if !g.has_edge(emb.center, l) {
                    return false;
                }
                for &l2 in &emb.leaves[i + 1..] {
                    if g.has_edge(l, l2) {
                        return false;
                    }
                }
            }
            all.push(std::iter::once(emb.center).chain(emb.leaves.iter().copied()));
        }
        // distinctness plus anticompleteness across stars
        let flat: Vec<(usize, usize)> = self
            .stars
            .iter()
            .enumerate()
            .flat_map(|(si, emb)| {
                std::iter::once((si, emb.center)).chain(emb.leaves.iter().map(move |&l| (si, l)))
            })
            .collect();
        for (i, &(si, u)) in flat.iter().enumerate() {
            for &(sj, v) in &flat[i + 1..] {
                if u == v {
                    return false;
                }
                if si != sj && g.has_edge(u, v) {
                    return false;
                }
            }
        }
        true
    }
}

struct Search<'a> {
    g: &'a Graph,
    stars: &'a [u32],
    /// canonical star indices, largest leaf count first
    order: Vec<usize>,
    placed: Vec<Option<StarEmbedding>>,
}

impl Search<'_> {
    fn place(&mut self, pos: usize, allowed: &VertexSet, prev_center: Option<usize>) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let k = self.stars[self.order[pos]] as usize;
        let remaining: usize = self.order[pos..]
            .iter()
            .map(|&i| self.stars[i] as usize + 1)
            .sum();
        if allowed.len() < remaining {
            return false;
        }
        // equal stars are interchangeable: force centers strictly increasing
        let min_center = match prev_center {
            Some(c) if self.stars[self.order[pos - 1]] == self.stars[self.order[pos]] => c + 1,
            _ => 0,
        };
        for center in allowed.iter() {
            if center < min_center {
                continue;
            }
            let leaf_cand = allowed.intersection(self.g.neighbors(center));
            if leaf_cand.len() < k {
                continue;
            }
            let mut leaves = Vec::with_capacity(k);
            if self.pick_leaves(pos, center, &leaf_cand, 0, &mut leaves, allowed) {
                return true;
            }
        }
        false
    }

    fn pick_leaves(
        &mut self,
        pos: usize,
        center: usize,
        leaf_cand: &VertexSet,
        start: usize,
        leaves: &mut Vec<usize>,
        allowed: &VertexSet,
    ) -> bool {
        let k = self.stars[self.order[pos]] as usize;
        if leaves.len() == k {
            let mut next_allowed = allowed.clone();
            next_allowed.remove(center);
            next_allowed.subtract(self.g.neighbors(center));
            for &l in leaves.iter() {
                next_allowed.remove(l);
                next_allowed.subtract(self.g.neighbors(l));
            }
            self.placed[self.order[pos]] = Some(StarEmbedding {
                center,
                leaves: leaves.clone(),
            });
            if self.place(pos + 1, &next_allowed, Some(center)) {
                return true;
            }
            self.placed[self.order[pos]] = None;
            return false;
        }
        for l in leaf_cand.iter() {
            if l < start {
                continue;
            }
            if leaves.iter().any(|&prev| self.g.has_edge(prev, l)) {
                continue; // leaves must be pairwise nonadjacent
            }
            leaves.push(l);
            if self.pick_leaves(pos, center, leaf_cand, l + 1, leaves, allowed) {
                return true;
            }
            leaves.pop();
        }
        false
    }
}

/// Finds an induced embedding of `h` in `g`, or `None`. Deterministic:
/// the search scans vertices ascending at every choice point.
pub fn contains_induced_star_forest(g: &Graph, h: &StarForest) -> Option<Embedding> {
    let stars = h.stars();
    let mut order: Vec<usize> = (0..stars.len()).collect();
    order.sort_by(|&a, &b| stars[b].cmp(&stars[a]).then(a.cmp(&b)));
    let mut search = Search {
        g,
        stars,
        order,
        placed: vec![None; stars.len()],
    };
    if search.place(0, &g.full_vertex_set(), None) {
        let emb = Embedding {
            stars: search.placed.into_iter().map(Option::unwrap).collect(),
        };
        debug_assert!(emb.is_valid(g, h));
        Some(emb)
    } else {
        None
    }
}

pub fn is_h_free(g: &Graph, h: &StarForest) -> bool {
    contains_induced_star_forest(g, h).is_none()
}
