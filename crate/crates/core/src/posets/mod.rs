//! The stabilization order, its components and ideals, and the weighted
//! network of ideals.

mod network;
mod poset;
mod stab;
mod stirling;

pub use network::{DerivedNetwork, NetworkNode};
pub use poset::Poset;
pub use stab::{bits_of, quotient_stab_order, ComponentInfo, CoverInfo, StabOrder, STAB_LIMIT};
pub use stirling::{component_count_formula, stirling2};
