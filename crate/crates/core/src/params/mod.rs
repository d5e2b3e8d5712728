//! Exact values of the simultaneous interval number and related width
//! parameters on small graphs, and certificates extracted from a
//! representation.

mod layouts;
mod si;
mod width;
mod witness;

pub use crate::cover::{ecc_exact, ecc_exact_with_cap, ecc_greedy, ECC_EDGE_CAP};
pub use layouts::{enumerate_interval_layouts, IntervalLayout, LAYOUT_CAP};
pub use si::{path_alpha_exact, si_decide, si_exact};
pub use width::{linear_mim_exact, pathwidth_exact, LmimWitness, LMIM_VERIFY_CAP, PATHWIDTH_CAP};
pub use witness::{lmim_witness, path_decomposition_from_rep, thinness_witness, ThinnessWitness};
