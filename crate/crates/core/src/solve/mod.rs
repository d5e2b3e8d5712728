//! Solvers that exploit a representation.

mod cliques;
mod fpt;

pub(crate) use cliques::interval_maximal_cliques;
pub use cliques::{clique_count_bound, enumerate_maximal_cliques, max_weight_clique, MAX_DISTINCT_LABEL_SETS};
pub use fpt::{dominating_set_fpt, independent_set_fpt, search_node_bound, FptOutcome};
