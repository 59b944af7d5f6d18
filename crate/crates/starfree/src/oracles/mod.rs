//! Exact ground-truth engines: exponential-time, desk-scale, deterministic.

mod chromatic;
mod clique;
mod containment;
mod ramsey;

pub use chromatic::{
    chromatic_number_exact, chromatic_number_exact_with_cap, OracleError, DEFAULT_CHI_CAP,
};
pub use clique::{
    clique_number, max_clique, max_clique_in, max_clique_size_in, max_stable_set,
    stability_number,
};
pub use containment::{contains_induced_star_forest, is_h_free, Embedding, StarEmbedding};
pub use ramsey::{ramsey_bound, ramsey_witness, RamseyOutcome};
