use std::collections::HashSet;

use serde::Serialize;

use crate::eip::{check_ctx, check_set, DecoratedContext, PermutationOrder, VertexSet};
use crate::error::{Error, Result};
use crate::graphs::Sierpinski;
use crate::steiner::potentials::section_corner;
use crate::steiner::{potentials, TraceRecord};
use crate::word::WordSpace;

/// How section `h` sees its surroundings: which of its corners face a member
/// (`I_h`), face nothing (`J_h`) or face a non-member (`K_h`).
///
/// Corner `h c^(n-1)` with `c != h` faces `c h^(n-1)`; corner `h^n` faces the
/// phantom vertex of the decoration.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SectionOrderContext {
    pub h: u32,
    pub i_h: Vec<u32>,
    pub j_h: Vec<u32>,
    pub k_h: Vec<u32>,
    /// `I_h J_h K_h`, each part ascending.
    pub order: PermutationOrder,
}

impl SectionOrderContext {
    pub fn of(g: &Sierpinski, s: &VertexSet, h: u32, ctx: &DecoratedContext) -> Result<Self> {
        check_set(g, s)?;
        check_ctx(g, ctx)?;
        if h >= g.m() {
            return Err(Error::param(format!("section {h} out of range for m={}", g.m())));
        }
        let (mut i_h, mut j_h, mut k_h) = (Vec::new(), Vec::new(), Vec::new());
        for c in 0..g.m() {
            let inside = if c == h {
                if ctx.in_i(h) {
                    Some(true)
                } else if ctx.in_k(h) {
                    Some(false)
                } else {
                    None
                }
            } else {
                Some(s.contains(section_corner(g, c, h)))
            };
            match inside {
                Some(true) => i_h.push(c),
                Some(false) => k_h.push(c),
                None => j_h.push(c),
            }
        }
        let order: Vec<u8> = i_h.iter().chain(&j_h).chain(&k_h).map(|&c| c as u8).collect();
        Ok(SectionOrderContext {
            h,
            i_h,
            j_h,
            k_h,
            order: PermutationOrder::new(order)?,
        })
    }
}

fn section_space(g: &Sierpinski) -> WordSpace {
    WordSpace::new(g.n() - 1, g.m()).expect("section of a valid space")
}

/// `Comp_{Lex_h}`: replaces the members in section `h` by the first `l_h`
/// section words under the order `I_h J_h K_h` read off the current set.
pub fn compress(g: &Sierpinski, s: &VertexSet, h: u32, ctx: &DecoratedContext) -> Result<VertexSet> {
    let sec = SectionOrderContext::of(g, s, h, ctx)?;
    let sub = section_space(g);
    let base = h as u64 * sub.size();
    let ell = s.section_vector()[h as usize];
    let mut out = s.clone();
    for w in 0..sub.size() {
        out.remove(base + w);
    }
    for idx in 0..ell {
        out.insert(base + sec.order.word_at(sub, idx));
    }
    Ok(out)
}

pub fn is_h_compressed(g: &Sierpinski, s: &VertexSet, h: u32, ctx: &DecoratedContext) -> Result<bool> {
    Ok(compress(g, s, h, ctx)? == *s)
}

/// True if `s` is `h`-compressed for every section `h`.
pub fn is_compressed(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<bool> {
    for h in 0..g.m() {
        if !is_h_compressed(g, s, h, ctx)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Result of cycling section compressions to a fixed point.
#[derive(Debug, Clone, Serialize)]
pub struct CompressionRun {
    pub set: VertexSet,
    /// Full cycles `h = 0..m` that changed the set.
    pub cycles: u64,
    /// `1 + m * rho(S)` for the input.
    pub bound: u64,
    /// `1 + rho(S_1)`, with `S_1` the set after the first full cycle.
    pub corrected_bound: u64,
    pub rho_initial: u64,
    pub rho_final: u64,
    /// Applications after the first cycle that changed the set without
    /// lowering `rho`, as `(cycle, h, rho_before, rho_after)`.
    pub rho_stalls: Vec<(u64, u32, u64, u64)>,
    pub trace: Vec<TraceRecord>,
}

impl CompressionRun {
    /// Stalls in which `rho` went up rather than staying level.
    pub fn rho_rises(&self) -> usize {
        self.rho_stalls.iter().filter(|s| s.3 > s.2).count()
    }
}

/// Guard against runaway iteration; far above anything observed.
const CYCLE_CAP: u64 = 1 << 16;

/// Cycles `Comp_{Lex_h}` for `h = 0, 1, ..., m-1` until a full cycle leaves
/// the set unchanged, auditing `rho` on the way.
///
/// Fails with a defect if the iteration revisits a set without settling,
/// i.e. the cyclic composition is periodic rather than eventually constant.
pub fn compress_fix_audited(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<CompressionRun> {
    let rho_initial = potentials(g, s, ctx)?.rho;
    let mut run = CompressionRun {
        set: s.clone(),
        cycles: 0,
        bound: 1 + g.m() as u64 * rho_initial,
        corrected_bound: 1 + rho_initial,
        rho_initial,
        rho_final: rho_initial,
        rho_stalls: Vec::new(),
        trace: Vec::new(),
    };
    let mut seen = HashSet::new();
    let mut step = 0;
    let mut rho_cur = rho_initial;
    loop {
        let mut changed = false;
        for h in 0..g.m() {
            let next = compress(g, &run.set, h, ctx)?;
            if next == run.set {
                continue;
            }
            changed = true;
            let pot = potentials(g, &next, ctx)?;
            if run.cycles > 0 && pot.rho >= rho_cur {
                run.rho_stalls.push((run.cycles, h, rho_cur, pot.rho));
            }
            rho_cur = pot.rho;
            step += 1;
            run.trace.push(TraceRecord::new(g, ctx, format!("comp({h})"), step, &next)?);
            run.set = next;
        }
        if !changed {
            break;
        }
        if run.cycles == 0 {
            run.corrected_bound = 1 + rho_cur;
        }
        run.cycles += 1;
        if !seen.insert(run.set.clone()) || run.cycles > CYCLE_CAP {
            return Err(Error::Defect(format!(
                "cyclic compression of {s} under {ctx} does not settle after {} cycles",
                run.cycles
            )));
        }
    }
    run.rho_final = rho_cur;
    Ok(run)
}

/// `Comp_inf`: the fixed point of cyclic section compression.
///
/// The number of changing cycles is not bounded by `1 + m * rho(S)` in
/// general; see [`CompressionRun`] for the audited figures.
pub fn compress_fix(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<VertexSet> {
    Ok(compress_fix_audited(g, s, ctx)?.set)
}
