//! Simultaneous interval representations of graphs.

pub mod construct;
pub mod cover;
pub mod decomposition;
pub mod error;
pub mod graph;
pub mod labels;
pub mod oracle;
pub mod params;
pub mod rational;
pub mod reduce;
pub mod selftest;
pub mod simrep;
pub mod solve;

pub use cover::EdgeCliqueCover;
pub use decomposition::PathDecomposition;
pub use error::{Error, Result};
pub use graph::{Digraph, Graph};
pub use labels::LabelSet;
pub use rational::Rational;
pub use simrep::{Interval, SimRep};
