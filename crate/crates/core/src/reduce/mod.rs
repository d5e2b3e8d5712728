//! Generators for the two hardness constructions, with the exhaustive
//! oracles used to check them.

mod idsp;
mod paths;

pub use idsp::{check_w_structure, misp_to_idsp_gadget, parse_misp, solve_misp, write_misp, IdspGadget, MispInstance};
pub use paths::{
    coloring_gadget, parse_disjoint_paths, preprocess_degree_one, preprocess_step, solve_disjoint_paths,
    write_disjoint_paths, ColoringGadget, DisjointPathsInstance, PATH_ORACLE_ARC_CAP,
};
