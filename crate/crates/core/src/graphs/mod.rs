//! Graph families: Sierpinski graphs `S(n, m)`, their triangle quotients
//! `S[n, m]`, Hamming graphs `K_m^n`, and explicit adjacency-list graphs.

mod embed;
mod graph;
mod quotient;
mod sierpinski;
mod spec;

pub use embed::{embed, embed_packed, EmbeddingPoint};
pub use graph::Graph;
pub use quotient::{quotient_graph, ClassInfo, QuotientGraph};
pub use sierpinski::{Sierpinski, MATERIALIZE_LIMIT};
pub use spec::{hamming, Family, GraphSpec};
