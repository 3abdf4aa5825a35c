//! Sequential kernel dynamics on graphs: fixing words, fixing sets, permis
//! search, and the reductions behind the hardness results.
//!
//! Graphs have at most 62 vertices and vertex sets are 64-bit masks. The
//! exhaustive procedures document their own, much smaller, order limits.

pub mod dynamics;
pub mod enumerate;
pub mod error;
pub mod generators;
pub mod graph;
pub mod io;
pub mod mis;
pub mod permis;
pub mod reductions;
pub mod sets;
pub mod vertex_set;
pub mod words;

pub use dynamics::{Configuration, Trajectory, Word};
pub use error::{Error, Result};
pub use graph::{compose, Composition, Graph};
pub use sets::DominionRule;
pub use vertex_set::VertexSet;
pub use words::{Witness, WordVerdict};
