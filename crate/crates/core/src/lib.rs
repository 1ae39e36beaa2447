//! Exact edge-isoperimetric computations on generalized Sierpinski graphs.
//!
//! Graph construction lives in [`graphs`], boundaries and Lex profiles in
//! [`eip`], the stabilization order and its ideals in [`posets`], the
//! set-to-set symmetrization operations in [`steiner`], and exhaustive
//! solvers and claim checks in [`oracle`].

pub mod eip;
pub mod error;
pub mod graphs;
pub mod oracle;
pub mod posets;
pub mod steiner;
pub mod word;

pub use eip::{DecoratedContext, PermutationOrder, ProfileTable, VertexSet};
pub use error::{Error, Result};
pub use graphs::{EmbeddingPoint, Family, Graph, GraphSpec, Sierpinski};
pub use posets::{DerivedNetwork, Poset, StabOrder};
pub use word::{VertexWord, WordSpace};
