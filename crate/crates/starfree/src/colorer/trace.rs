//! The decomposition trace: one node per recursive call, recording every
//! object the coloring argument produces. Vertex lists always use the
//! labels of the original input graph; palette ranges are absolute offsets
//! into the final coloring's palette.

use serde::{Deserialize, Serialize};

/// Half-open color range `[start, end)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PaletteRange {
    pub start: usize,
    pub end: usize,
}

impl PaletteRange {
    pub fn len(&self) -> usize {
        self.end - self.start
    }

    pub fn is_empty(&self) -> bool {
        self.start == self.end
    }

    pub fn overlaps(&self, other: &PaletteRange) -> bool {
        self.start < other.end && other.start < self.end
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GreedyOrder {
    Natural,
    Degeneracy,
}

/// One stable-set block of the decomposition: the stable k-subset `y` of the
/// extracted cliques, the vertices it frees, and the recursion that colored
/// them.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct YBlock {
    pub y: Vec<usize>,
    pub a_y: Vec<usize>,
    pub palette: PaletteRange,
    pub child: DecompositionTrace,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum DecompositionTrace {
    /// First-fit coloring sufficed (low degree, or clique number <= 1).
    GreedyLeaf {
        vertices: Vec<usize>,
        order: GreedyOrder,
        colors_used: usize,
    },
    /// Single-star base case: degree bound plus greedy in degeneracy order.
    BaseStarLeaf {
        vertices: Vec<usize>,
        star_leaves: u32,
        colors_used: usize,
    },
    /// A high-degree vertex was decomposed.
    Decompose {
        vertices: Vec<usize>,
        omega: usize,
        /// leaf count of the star peeled at this level
        peeled_star: u32,
        /// number of cliques extracted: omega^{peeled_star + 1}
        clique_budget: usize,
        v: usize,
        x_cliques: Vec<Vec<usize>>,
        x0: Vec<usize>,
        t: usize,
        spine_palette: PaletteRange,
        x0_palette: PaletteRange,
        x0_child: Box<DecompositionTrace>,
        y_blocks: Vec<YBlock>,
        b: Vec<usize>,
        b_palette: PaletteRange,
        b_child: Box<DecompositionTrace>,
        colors_used: usize,
    },
}

impl DecompositionTrace {
    pub fn colors_used(&self) -> usize {
        match self {
            DecompositionTrace::GreedyLeaf { colors_used, .. }
            | DecompositionTrace::BaseStarLeaf { colors_used, .. }
            | DecompositionTrace::Decompose { colors_used, .. } => *colors_used,
        }
    }

    pub fn vertices(&self) -> &[usize] {
        match self {
            DecompositionTrace::GreedyLeaf { vertices, .. }
            | DecompositionTrace::BaseStarLeaf { vertices, .. }
            | DecompositionTrace::Decompose { vertices, .. } => vertices,
        }
    }

    /// Number of `Decompose` nodes in the subtree.
    pub fn decompose_count(&self) -> usize {
        match self {
            DecompositionTrace::Decompose {
                x0_child,
                y_blocks,
                b_child,
                ..
            } => {
                1 + x0_child.decompose_count()
                    + y_blocks
                        .iter()
                        .map(|yb| yb.child.decompose_count())
                        .sum::<usize>()
                    + b_child.decompose_count()
            }
            _ => 0,
        }
    }
}
