//! Exact chromatic number, desk scale only. Test oracle, never a fast path.

use super::clique::{clique_number, max_clique};
use crate::graph::Graph;
use thiserror::Error;

pub const DEFAULT_CHI_CAP: usize = 20;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle scale: n={n} exceeds the exact-chromatic cap {cap}")]
    ScaleCap { n: usize, cap: usize },
}

/// Exact chromatic number via branch and bound between the clique lower
/// bound and a greedy upper bound, with the default scale cap.
pub fn chromatic_number_exact(g: &Graph) -> Result<usize, OracleError> {
    chromatic_number_exact_with_cap(g, DEFAULT_CHI_CAP)
}

pub fn chromatic_number_exact_with_cap(g: &Graph, cap: usize) -> Result<usize, OracleError> {
    if g.n() > cap {
        return Err(OracleError::ScaleCap { n: g.n(), cap });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    // Degree-descending order (index on ties) works well for both the greedy
    // upper bound and the backtracking below.
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));

    let lower = clique_number(g);
    let upper = crate::colorer::greedy_color(g, &order).palette_size;
    if lower == upper {
        return Ok(lower);
    }
    // Pin a maximum clique to distinct colors up front; any proper coloring
    // can be permuted to agree, so this only breaks symmetry.
    let clique = max_clique(g).to_vec();
    let mut colors = vec![usize::MAX; g.n()];
    for (c, &v) in clique.iter().enumerate() {
        colors[v] = c;
    }
    let rest: Vec<usize> = order.iter().copied().filter(|v| !clique.contains(v)).collect();

    for k in lower..upper {
        let mut cols = colors.clone();
        if colorable(g, &rest, 0, &mut cols, lower, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

fn colorable(
    g: &Graph,
    rest: &[usize],
    pos: usize,
    colors: &mut [usize],
    used: usize,
    k: usize,
) -> bool {
    if pos == rest.len() {
        return true;
    }
    let v = rest[pos];
    let limit = (used + 1).min(k);
    for c in 0..limit {
        let conflict = g.neighbors(v).iter().any(|u| colors[u] == c);
        if conflict {
            continue;
        }
        colors[v] = c;
        let next_used = used.max(c + 1);
        if colorable(g, rest, pos + 1, colors, next_used, k) {
            return true;
        }
        colors[v] = usize::MAX;
    }
    false
}
