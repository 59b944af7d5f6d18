//! First-fit coloring and the degeneracy (smallest-last) order.

use crate::graph::Graph;

use super::Coloring;

/// First-fit coloring along `order`, which must be a permutation of the
/// vertices. Uses at most max-degree + 1 colors.
pub fn greedy_color(g: &Graph, order: &[usize]) -> Coloring {
    debug_assert_eq!(order.len(), g.n());
    debug_assert!({
        let mut seen = vec![false; g.n()];
        order.iter().all(|&v| !std::mem::replace(&mut seen[v], true))
    });
    let mut colors = vec![usize::MAX; g.n()];
    let mut palette = 0;
    let mut taken = Vec::new();
    for &v in order {
        taken.clear();
        taken.resize(palette + 1, false);
        for u in g.neighbors(v).iter() {
            if colors[u] != usize::MAX && colors[u] < taken.len() {
                taken[colors[u]] = true;
            }
        }
        let c = taken.iter().position(|&t| !t).expect("a free color exists");
        colors[v] = c;
        palette = palette.max(c + 1);
    }
    Coloring {
        colors,
        palette_size: palette,
    }
}

/// Smallest-last ordering: repeatedly delete a minimum-degree vertex (lowest
/// index on ties); the order is the reverse of the deletions.
pub fn degeneracy_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut alive = vec![true; n];
    let mut deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    let mut removal = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| alive[v])
            .min_by_key(|&v| (deg[v], v))
            .expect("a live vertex remains");
        alive[v] = false;
        removal.push(v);
        for u in g.neighbors(v).iter() {
            if alive[u] {
                deg[u] -= 1;
            }
        }
    }
    removal.reverse();
    removal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::colorer::verify_coloring;
    use crate::graph::{complete, cycle, Graph};

    #[test]
    fn k3_needs_three_any_order() {
        let g = complete(3);
        for order in [[0, 1, 2], [2, 0, 1], [1, 2, 0]] {
            let col = greedy_color(&g, &order);
            assert_eq!(col.palette_size, 3);
            assert!(verify_coloring(&g, &col));
        }
    }

    #[test]
    fn edgeless_uses_one_color() {
        let g = Graph::empty(4);
        let col = greedy_color(&g, &[0, 1, 2, 3]);
        assert_eq!(col.palette_size, 1);
        let empty = Graph::empty(0);
        assert_eq!(greedy_color(&empty, &[]).palette_size, 0);
    }

    #[test]
    fn c5_natural_order_uses_three() {
        // 0->0, 1->1, 2->0, 3->1, 4->2 by first-fit simulation
        let col = greedy_color(&cycle(5), &[0, 1, 2, 3, 4]);
        assert_eq!(col.colors, vec![0, 1, 0, 1, 2]);
        assert_eq!(col.palette_size, 3);
    }

    #[test]
    fn degeneracy_order_of_a_tree_ends_low_degree() {
        // star K_{1,4}: leaves 1..3 removed first; once only {0, 4} remain
        // both have degree 1 and the lowest index (the center) goes next
        let g = Graph::build(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let order = degeneracy_order(&g);
        assert_eq!(order, vec![4, 0, 3, 2, 1]);
        let col = greedy_color(&g, &order);
        assert_eq!(col.palette_size, 2);
    }
}
