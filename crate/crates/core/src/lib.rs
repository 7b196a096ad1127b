//! Torus embeddability for graphs with no K3,3-subdivision.
//!
//! A graph without K3,3-subdivisions is either planar or contains a
//! K5-subdivision whose corner set splits the graph into side components, one
//! per pair of corners. Whether the graph embeds in the torus depends only on
//! the planarity of those components, and, when exactly one of them is
//! non-planar, on a subdivision of the M-graph (two K5's sharing an edge).
//! [`toroidality::decide_toroidal`] implements that test and returns a
//! certificate that can be re-checked with the planarity module.
//!
//! [`obstructions`] holds the four minor-minimal and eleven topologically
//! minimal non-toroidal graphs of the class and the procedures that verify
//! them; [`genus`] is an independent rotation-system engine used to check the
//! decision procedure on small graphs.

pub mod error;
pub mod genus;
pub mod graph;
pub mod obstructions;
pub mod planarity;
pub mod structure;
pub mod toroidality;
mod witness;

pub use error::{CatalogError, ClassError, GraphError, OracleError};
pub use graph::{Edge, Graph, Vertex};
pub use witness::{m_graph, BranchPath, Pattern, SubdivisionWitness, M_CENTRAL};
