//! The excluded pattern: a star forest, stored as a canonical multiset of
//! star leaf counts.
//!
//! Pattern strings are a sum of terms joined by `+`:
//!
//! ```text
//! term    := [ INT "x" ] base          (INT-fold repetition)
//! base    := "star:" INT               (star with INT leaves)
//!          | "K1," INT                 (same, classical notation)
//!          | "K2"                      (star with one leaf)
//!          | "K1"                      (single vertex)
//! ```
//!
//! Examples: `star:3`, `K1,3+2xK2`, `star:1+star:1`.

use crate::graph::Graph;
use serde::{Deserialize, Serialize};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("bad pattern term '{term}': {reason}")]
pub struct PatternParseError {
    pub term: String,
    pub reason: String,
}

/// A star forest: component `i` is the star with `stars[i]` leaves
/// (so `stars[i] + 1` vertices). Kept sorted ascending as the canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarForest {
    stars: Vec<u32>,
}

impl StarForest {
    pub fn new(mut stars: Vec<u32>) -> Self {
        stars.sort_unstable();
        StarForest { stars }
    }

    pub fn empty() -> Self {
        StarForest { stars: Vec::new() }
    }

    /// Leaf counts, ascending.
    pub fn stars(&self) -> &[u32] {
        &self.stars
    }

    pub fn component_count(&self) -> usize {
        self.stars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.stars.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.stars.iter().map(|&k| k as usize + 1).sum()
    }

    /// The pattern as a concrete graph: per star a center adjacent to its
    /// leaves, components anticomplete. Vertex order follows the canonical
    /// star order, center first within each star.
    pub fn to_graph(&self) -> Graph {
        let mut g = Graph::empty(self.vertex_count());
        let mut next = 0;
        for &k in &self.stars {
            let center = next;
            for leaf in 1..=k as usize {
                g.add_edge(center, center + leaf);
            }
            next += k as usize + 1;
        }
        g
    }

    pub fn parse(text: &str) -> Result<Self, PatternParseError> {
        let err = |term: &str, reason: &str| PatternParseError {
            term: term.to_string(),
            reason: reason.to_string(),
        };
        let mut stars = Vec::new();
        let trimmed = text.trim();
        if trimmed.is_empty() {
            return Ok(StarForest::empty());
        }
        for raw in trimmed.split('+') {
            let term = raw.trim();
            if term.is_empty() {
                return Err(err(raw, "empty term"));
            }
            let (count, base) = match term.split_once(['x', 'X']) {
                // "K1,3" contains no 'x'; "2xK2" does. A leading integer
                // before 'x' is a repetition count.
                Some((pre, post)) if pre.chars().all(|c| c.is_ascii_digit()) && !pre.is_empty() => {
                    let c: u32 = pre.parse().map_err(|_| err(term, "bad repetition count"))?;
                    (c, post.trim())
                }
                _ => (1, term),
            };
            if count == 0 {
                return Err(err(term, "repetition count must be at least 1"));
            }
            let lower = base.to_ascii_lowercase();
            let leaves: u32 = if let Some(k) = lower.strip_prefix("star:") {
                k.trim().parse().map_err(|_| err(term, "bad leaf count"))?
            } else if let Some(k) = lower.strip_prefix("k1,") {
                k.trim().parse().map_err(|_| err(term, "bad leaf count"))?
            } else if lower == "k2" {
                1
            } else if lower == "k1" {
                0
            } else {
                return Err(err(term, "expected star:<k>, K1,<k>, K2, or K1"));
            };
            for _ in 0..count {
                stars.push(leaves);
            }
        }
        Ok(StarForest::new(stars))
    }
}

impl fmt::Display for StarForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.stars.is_empty() {
            return write!(f, "empty");
        }
        let terms: Vec<String> = self.stars.iter().map(|k| format!("star:{k}")).collect();
        write!(f, "{}", terms.join("+"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_plain_terms() {
        assert_eq!(StarForest::parse("star:3").unwrap(), StarForest::new(vec![3]));
        assert_eq!(
            StarForest::parse("star:3+star:1+star:1").unwrap(),
            StarForest::new(vec![1, 1, 3])
        );
    }

    #[test]
    fn parse_sugar() {
        assert_eq!(
            StarForest::parse("K1,3+2xK2").unwrap(),
            StarForest::new(vec![1, 1, 3])
        );
        assert_eq!(StarForest::parse("K1").unwrap(), StarForest::new(vec![0]));
        assert_eq!(
            StarForest::parse("3xK1,2").unwrap(),
            StarForest::new(vec![2, 2, 2])
        );
    }

    #[test]
    fn canonical_order_is_ascending() {
        let h = StarForest::parse("star:4+star:0+star:2").unwrap();
        assert_eq!(h.stars(), &[0, 2, 4]);
        assert_eq!(h.to_string(), "star:0+star:2+star:4");
    }

    #[test]
    fn parse_rejections() {
        assert!(StarForest::parse("star:").is_err());
        assert!(StarForest::parse("P4").is_err());
        assert!(StarForest::parse("0xK2").is_err());
        assert!(StarForest::parse("K2++K2").is_err());
    }

    #[test]
    fn pattern_graph_shape() {
        let h = StarForest::parse("2xK2").unwrap();
        let g = h.to_graph();
        assert_eq!(g.n(), 4);
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
        let claw = StarForest::parse("K1,3").unwrap().to_graph();
        assert_eq!(claw.degree(0), 3);
        assert_eq!(claw.edge_count(), 3);
    }

    #[test]
    fn empty_pattern() {
        let h = StarForest::parse("").unwrap();
        assert!(h.is_empty());
        assert_eq!(h.vertex_count(), 0);
        assert_eq!(h.to_graph().n(), 0);
    }
}
