//! Mixed graphs for causal modelling.
//!
//! This crate implements acyclic directed mixed graphs (ADMGs), maximal
//! ancestral graphs (MAGs) and summary graphs, together with the machinery
//! needed to decide Markov equivalence between them:
//!
//! * structural queries (parents, siblings, ancestors, districts, barren
//!   subsets, anteriors) on a single [`MixedGraph`] type,
//! * m-separation, both as a fast walk-reachability test and as an
//!   exhaustive path-enumeration oracle,
//! * heads, tails and parametrizing sets, with a fast `O(ne^2)` extraction
//!   of the size-limited parametrizing set of a MAG,
//! * an `O(n^2 e)` projection of an ADMG or summary graph onto a Markov
//!   equivalent MAG, and the classical latent projection of a DAG,
//! * equivalence tests by three independent routes (parametrizing sets,
//!   the skeleton/collider/discriminating-path criterion, and full
//!   separation signatures),
//! * seeded random-graph generators and an operation-counting harness for
//!   empirical complexity experiments.

pub mod bench;
pub mod equiv;
mod error;
pub mod format;
pub mod graph;
pub mod heads;
pub mod msep;
pub mod opcount;
pub mod projection;
mod set;

pub use error::{Error, Result};
pub use graph::{Edge, EdgeKind, GraphType, MixedGraph};
pub use set::VertexSet;
