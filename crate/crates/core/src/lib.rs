//! Exact domination degree and domination index of small simple graphs.
//!
//! The domination degree of a vertex is the smallest size of a minimal
//! dominating set containing it; the domination index of a graph is the sum
//! of its vertices' domination degrees. Besides the exact engine the crate
//! ships generators for the classical graph families, graph operations,
//! text formats and a harness that checks closed-form predictions against
//! exhaustive computation.

pub mod domination;
pub mod error;
pub mod families;
pub mod graph;
pub mod io;
pub mod ops;
pub mod verify;
pub mod vertex_set;

pub use domination::{domination_profile, DominationProfile};
pub use error::{Error, Result};
pub use families::{generate, FamilySpec};
pub use graph::Graph;
pub use vertex_set::{VertexSet, MAX_ORDER};
