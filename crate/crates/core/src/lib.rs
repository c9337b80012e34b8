//! Constructive k-tuple domination for regular graphs.
//!
//! For a connected r-regular graph this crate builds an (r-1)-tuple total
//! dominating set of size at most `(r(r-1)-1)/(r(r-1)) · n` and an r-tuple
//! dominating set of size at most `(r²-1)/r² · n`, by properly coloring an
//! auxiliary graph with the degree-bound number of colors (Brooks) and
//! discarding the largest color class. The two extremal families where
//! that coloring does not exist, projective-plane incidence graphs and
//! Moore graphs of diameter 2, are recognized and answered exactly.
//!
//! Alongside the constructions there are verifiers, an exact
//! branch-and-bound solver, the older probabilistic bounds for comparison,
//! a graph atlas, a random regular graph generator and graph6/DIMACS I/O.

pub mod atlas;
pub mod aux;
pub mod bounds;
pub mod coloring;
pub mod domination;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod io;

pub use domination::{Branch, DominationCertificate, Variant};
pub use error::{Error, Hypothesis, Result};
pub use graph::{Distance, Graph, Vertex, VertexSet};
