//! Set-to-set operations that never increase the decorated boundary:
//! stabilization, section compression, subadditivation and product
//! compression, plus the `rho`/`tau` potentials used to audit convergence.

mod compress;
mod potentials;
mod product;
mod stabilize;
mod subadd;
mod trace;

pub use compress::{
    compress, compress_fix, compress_fix_audited, is_compressed, is_h_compressed, CompressionRun,
    SectionOrderContext,
};
pub use potentials::{potentials, rho, tau, Potentials};
pub use product::{column_sizes, product_compress, product_lower_bound};
pub use stabilize::{is_stable, stabilize, stabilize_fix, stabilize_fix_traced};
pub use subadd::{subadditivate, subadditivate_unchecked, DeltaParts, SubAddOutcome};
pub use trace::{to_jsonl, TraceRecord};

use crate::eip::{DecoratedContext, VertexSet};
use crate::error::Result;
use crate::graphs::Sierpinski;

/// A cardinality-preserving set operation on a decorated Sierpinski graph.
pub trait SteinerOperation {
    fn name(&self) -> String;
    fn apply(&self, g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<VertexSet>;
}

/// `Stab_{ij}` for a fixed pair `i < j`.
#[derive(Debug, Clone, Copy)]
pub struct Stabilization {
    pub i: u32,
    pub j: u32,
}

/// `Comp_{Lex_h}` for a fixed section `h`.
#[derive(Debug, Clone, Copy)]
pub struct Compression {
    pub h: u32,
}

/// `SubAdd`, applied without checking that the input is stable and compressed.
#[derive(Debug, Clone, Copy)]
pub struct Subadditivation;

impl SteinerOperation for Stabilization {
    fn name(&self) -> String {
        format!("stab({},{})", self.i, self.j)
    }

    fn apply(&self, g: &Sierpinski, s: &VertexSet, _ctx: &DecoratedContext) -> Result<VertexSet> {
        stabilize(g, s, self.i, self.j)
    }
}

impl SteinerOperation for Compression {
    fn name(&self) -> String {
        format!("comp({})", self.h)
    }

    fn apply(&self, g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<VertexSet> {
        compress(g, s, self.h, ctx)
    }
}

impl SteinerOperation for Subadditivation {
    fn name(&self) -> String {
        "subadd".to_string()
    }

    fn apply(&self, g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<VertexSet> {
        Ok(subadditivate_unchecked(g, s, ctx)?.set)
    }
}
