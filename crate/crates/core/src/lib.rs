//! Standard and positive semidefinite zero forcing on small graphs.
//!
//! The crate covers the forcing games themselves ([`forcing`]), exact forcing
//! numbers ([`solver`]), path bundles and their termini ([`bundle`]), the
//! reconnection procedure that produces a minimum psd forcing set with a
//! connected complement ([`reconnection`]), and exhaustive checks of the
//! claw-free equality `Z+(G) = Z(G)` ([`verifier`]).

pub mod bundle;
pub mod cli;
pub mod doc;
pub mod enumerate;
pub mod error;
pub mod fixtures;
pub mod forcing;
pub mod graph;
pub mod graph6;
pub mod reconnection;
pub mod solver;
pub mod verifier;
pub mod vertex_set;

pub use enumerate::enumerate_graphs;
pub use error::{Error, Result};
pub use forcing::{
    apply_step, chronological_list, closure, is_forcing_set, restrict_chronology, valid_forces, Chronology,
    ColorState, ExpansionSequence, Force, OrderPolicy, Rule,
};
pub use graph::{Claw, Graph};
pub use graph6::{parse_graph6, to_graph6};
pub use vertex_set::VertexSet;
