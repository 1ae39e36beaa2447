use serde::Serialize;

use crate::eip::{boundary_parts, DecoratedContext, VertexSet};
use crate::error::{Error, Result};
use crate::graphs::Sierpinski;
use crate::steiner::{is_compressed, is_stable, SectionOrderContext};

/// Change in decorated boundary split by edge kind.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct DeltaParts {
    /// Edges inside a section.
    pub interior: i64,
    /// Edges between two sections.
    pub exterior: i64,
    /// Phantom corner edges.
    pub corner: i64,
}

impl DeltaParts {
    pub fn total(&self) -> i64 {
        self.interior + self.exterior + self.corner
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SubAddOutcome {
    pub set: VertexSet,
    /// False when the section vector is already Lex-last (`h_min >= h_max`)
    /// and the set was returned unchanged.
    pub applied: bool,
    pub h_min: Option<u32>,
    pub h_max: Option<u32>,
    pub delta: DeltaParts,
}

/// `SubAdd` on a stable, compressed set. Errors if the input is not both.
pub fn subadditivate(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<SubAddOutcome> {
    if !is_stable(g, s)? {
        return Err(Error::param(format!("{s} is not stable")));
    }
    if !is_compressed(g, s, ctx)? {
        return Err(Error::param(format!("{s} is not compressed under {ctx}")));
    }
    subadditivate_unchecked(g, s, ctx)
}

/// `SubAdd` without the input checks.
///
/// With `h_min` the first section that is not full and `h_max` the last that
/// is not empty, the two sections are merged: if `l_min + l_max <= m^(n-1)`
/// everything goes into `h_min`, otherwise `h_min` is filled and the rest
/// stays in `h_max`. Each merged section is an initial segment of its order
/// `Lex_h` as read off the input set.
pub fn subadditivate_unchecked(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<SubAddOutcome> {
    let sections = s.section_vector();
    let block = g.vertex_count() / g.m() as u64;
    let h_min = sections.iter().position(|&l| l < block).map(|h| h as u32);
    let h_max = sections.iter().rposition(|&l| l > 0).map(|h| h as u32);
    let (lo, hi) = match (h_min, h_max) {
        (Some(lo), Some(hi)) if lo < hi => (lo, hi),
        _ => {
            return Ok(SubAddOutcome {
                set: s.clone(),
                applied: false,
                h_min,
                h_max,
                delta: DeltaParts::default(),
            })
        }
    };
    let order_lo = SectionOrderContext::of(g, s, lo, ctx)?.order;
    let order_hi = SectionOrderContext::of(g, s, hi, ctx)?.order;
    let sub = crate::word::WordSpace::new(g.n() - 1, g.m())?;
    let total = sections[lo as usize] + sections[hi as usize];
    let (fill_lo, fill_hi) = if total <= block { (total, 0) } else { (block, total - block) };
    let mut out = s.clone();
    for w in 0..block {
        out.remove(lo as u64 * block + w);
        out.remove(hi as u64 * block + w);
    }
    for idx in 0..fill_lo {
        out.insert(lo as u64 * block + order_lo.word_at(sub, idx));
    }
    for idx in 0..fill_hi {
        out.insert(hi as u64 * block + order_hi.word_at(sub, idx));
    }
    let before = boundary_parts(g, s, ctx)?;
    let after = boundary_parts(g, &out, ctx)?;
    let diff = |a: u64, b: u64| a as i64 - b as i64;
    Ok(SubAddOutcome {
        set: out,
        applied: true,
        h_min,
        h_max,
        delta: DeltaParts {
            interior: diff(after.within_sections, before.within_sections),
            exterior: diff(after.between_sections, before.between_sections),
            corner: diff(after.phantom, before.phantom),
        },
    })
}
