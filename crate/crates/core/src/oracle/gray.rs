use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::oracle::SearchBudget;

/// A graph on at most 63 vertices prepared for subset sweeps, with an
/// optional phantom term: `phantom[v]` is `+1` if adding `v` cuts a phantom
/// edge, `-1` if it heals one, and `base` counts phantom edges cut by the
/// empty set.
#[derive(Debug, Clone)]
pub(crate) struct SweepGraph {
    pub adj: Vec<u64>,
    pub phantom: Vec<i64>,
    pub base: i64,
}

impl SweepGraph {
    pub fn new(g: &Graph, phantom: Option<(Vec<i64>, i64)>) -> Result<Self> {
        let adj = match g.neighbor_masks() {
            Some(a) if a.len() < 64 => a,
            _ => {
                return Err(Error::budget(
                    "subset sweep vertex count",
                    g.vertex_count() as u64,
                    63,
                    0,
                ))
            }
        };
        let (phantom, base) = phantom.unwrap_or_else(|| (vec![0; adj.len()], 0));
        Ok(SweepGraph { adj, phantom, base })
    }

    pub fn len(&self) -> u32 {
        self.adj.len() as u32
    }

    /// Boundary of `mask` computed from scratch.
    pub fn boundary(&self, mask: u64) -> i64 {
        let mut b = self.base;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            b += (self.adj[v] & !mask).count_ones() as i64 + self.phantom[v];
        }
        b
    }

    /// Boundary change from toggling `v` in `mask`.
    #[inline(always)]
    pub fn toggle_delta(&self, mask: u64, v: usize) -> i64 {
        let a = self.adj[v];
        let inside = (a & mask).count_ones() as i64;
        let outside = a.count_ones() as i64 - inside;
        let add = outside - inside + self.phantom[v];
        if mask >> v & 1 == 1 {
            -add
        } else {
            add
        }
    }

    pub fn check_budget(&self, budget: &SearchBudget) -> Result<()> {
        let needed = 1u64 << self.len();
        if needed > budget.max_subsets {
            return Err(Error::BudgetExceeded {
                what: format!("subset sweep over {} vertices", self.len()),
                needed,
                limit: budget.max_subsets,
                partial: 0,
                hint: "; use the ideal-restricted solver instead".into(),
            });
        }
        Ok(())
    }

    /// Visits every subset once, in reflected Gray-code order within each of
    /// `2^k` blocks that fix the top `k` bits. Blocks run in parallel, each
    /// with its own state; states are merged with `merge`.
    pub fn sweep<S, I, V, M>(&self, budget: &SearchBudget, init: I, visit: V, merge: M) -> Result<S>
    where
        S: Send,
        I: Fn() -> S + Sync + Send,
        V: Fn(&mut S, u64, u32, i64) + Sync + Send,
        M: Fn(S, S) -> S + Sync + Send,
    {
        self.check_budget(budget)?;
        let len = self.len();
        let k = if len <= 14 {
            0
        } else {
            (usize::BITS - (budget.parallel_width * 8).leading_zeros()).min(len - 10)
        };
        let low = len - k;
        let walk = |state: &mut S, prefix: u64| {
            let mut mask = prefix << low;
            let mut pop = mask.count_ones();
            let mut b = self.boundary(mask);
            visit(state, mask, pop, b);
            for step in 1u64..1 << low {
                let v = step.trailing_zeros() as usize;
                b += self.toggle_delta(mask, v);
                mask ^= 1 << v;
                if mask >> v & 1 == 1 {
                    pop += 1;
                } else {
                    pop -= 1;
                }
                visit(state, mask, pop, b);
            }
        };
        let pool = budget.pool()?;
        Ok(pool.install(|| {
            (0u64..1 << k)
                .into_par_iter()
                .fold(&init, |mut s, p| {
                    walk(&mut s, p);
                    s
                })
                .reduce(&init, &merge)
        }))
    }
}

/// Replays the Gray-code walk over all subsets of `g` and compares the
/// running boundary with a from-scratch evaluation at the given step
/// indices. Returns the number of disagreements.
pub fn audit_gray_checkpoints(g: &Graph, checkpoints: &[u64]) -> Result<u64> {
    let sg = SweepGraph::new(g, None)?;
    if let Some(&bad) = checkpoints.iter().find(|&&c| c >> sg.len() != 0) {
        return Err(Error::param(format!("checkpoint {bad} beyond 2^{}", sg.len())));
    }
    Ok(audit_checkpoints(&sg, checkpoints))
}

fn audit_checkpoints(sg: &SweepGraph, checkpoints: &[u64]) -> u64 {
    let mut cps = checkpoints.to_vec();
    cps.sort_unstable();
    cps.dedup();
    let Some(&last) = cps.last() else {
        return 0;
    };
    let mut next = cps.iter().peekable();
    let (mut mask, mut b, mut bad) = (0u64, sg.base, 0u64);
    for step in 0..=last {
        if step > 0 {
            let v = step.trailing_zeros() as usize;
            b += sg.toggle_delta(mask, v);
            mask ^= 1 << v;
        }
        if next.peek() == Some(&&step) {
            next.next();
            if sg.boundary(mask) != b || mask != step ^ (step >> 1) {
                bad += 1;
            }
        }
    }
    bad
}
