use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::eip::{DecoratedContext, VertexSet};
use crate::error::{Error, Result};
use crate::graphs::{Graph, Sierpinski};
use crate::oracle::gray::SweepGraph;
use crate::oracle::SearchBudget;
use crate::posets::StabOrder;

/// Minimum (decorated) boundary for every set size, with one witness each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExactProfile {
    pub values: Vec<u64>,
    /// A minimiser per size: the one with the smallest bitmask value, so the
    /// result does not depend on the sweep's partitioning.
    #[serde(skip)]
    pub witnesses: Vec<FixedBitSet>,
}

impl ExactProfile {
    pub fn is_symmetric(&self) -> bool {
        self.values.iter().eq(self.values.iter().rev())
    }

    pub fn witness_labels(&self, g: &Graph, ell: usize) -> Vec<String> {
        self.witnesses[ell].ones().map(|v| g.label(v).to_string()).collect()
    }
}

#[derive(Clone)]
struct Best {
    value: Vec<i64>,
    mask: Vec<u64>,
}

impl Best {
    fn new(len: usize) -> Self {
        Best {
            value: vec![i64::MAX; len + 1],
            mask: vec![u64::MAX; len + 1],
        }
    }

    #[inline(always)]
    fn offer(&mut self, mask: u64, pop: u32, b: i64) {
        let k = pop as usize;
        if b < self.value[k] || (b == self.value[k] && mask < self.mask[k]) {
            self.value[k] = b;
            self.mask[k] = mask;
        }
    }

    fn merge(mut self, other: Best) -> Best {
        for k in 0..self.value.len() {
            self.offer(other.mask[k], k as u32, other.value[k]);
        }
        self
    }
}

fn mask_to_bits(mask: u64, len: usize) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(len);
    for v in 0..len {
        if mask >> v & 1 == 1 {
            b.insert(v);
        }
    }
    b
}

pub(crate) fn sweep_profile(sg: &SweepGraph, budget: &SearchBudget) -> Result<ExactProfile> {
    let len = sg.len() as usize;
    let best = sg.sweep(
        budget,
        || Best::new(len),
        |s, mask, pop, b| s.offer(mask, pop, b),
        Best::merge,
    )?;
    Ok(ExactProfile {
        values: best.value.iter().map(|&v| v as u64).collect(),
        witnesses: best.mask.iter().map(|&m| mask_to_bits(m, len)).collect(),
    })
}

/// Phantom terms for `S_{s,t}(n, m)` on the packed vertex indexing.
pub(crate) fn phantom_terms(g: &Sierpinski, ctx: &DecoratedContext) -> Result<(Vec<i64>, i64)> {
    if ctx.m() != g.m() {
        return Err(Error::param(format!("decoration for m={} used with m={}", ctx.m(), g.m())));
    }
    let mut phantom = vec![0i64; g.vertex_count() as usize];
    let mut base = 0;
    for i in 0..g.m() {
        let c = g.corner(i) as usize;
        if ctx.in_i(i) {
            phantom[c] = -1;
            base += 1;
        } else if ctx.in_k(i) {
            phantom[c] = 1;
        }
    }
    Ok((phantom, base))
}

/// Exact edge-isoperimetric profile of `g` by a full subset sweep.
pub fn exact_profile(g: &Graph, budget: &SearchBudget) -> Result<ExactProfile> {
    sweep_profile(&SweepGraph::new(g, None)?, budget)
}

/// Exact decorated profile of `S_{s,t}(n, m)` by a full subset sweep.
pub fn exact_profile_decorated(g: &Sierpinski, ctx: &DecoratedContext, budget: &SearchBudget) -> Result<ExactProfile> {
    let graph = g.to_graph()?;
    sweep_profile(&SweepGraph::new(&graph, Some(phantom_terms(g, ctx)?))?, budget)
}

/// Minimum decorated boundary over the ideals of the stabilization order
/// only. Ties keep the first ideal in enumeration order.
pub fn exact_profile_ideals(
    g: &Sierpinski,
    order: &StabOrder,
    ctx: &DecoratedContext,
    budget: &SearchBudget,
) -> Result<ExactProfile> {
    if order.space() != g.space() {
        return Err(Error::param("stabilization order built for a different space"));
    }
    let len = g.vertex_count() as usize;
    let mut values = vec![u64::MAX; len + 1];
    let mut witnesses = vec![FixedBitSet::with_capacity(len); len + 1];
    for bits in order.poset().enumerate_ideals(budget.max_ideals)? {
        let k = bits.count_ones(..);
        let s = VertexSet::from_packed(g.space(), bits.ones().map(|v| v as u64))?;
        let b = crate::eip::decorated_boundary(g, &s, ctx)?;
        if b < values[k] {
            values[k] = b;
            witnesses[k] = bits;
        }
    }
    Ok(ExactProfile { values, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eip::{decorated_lex_profile_table, lex_profile_table};

    #[test]
    fn complete_graph_profile() {
        for m in 2..=6 {
            let p = exact_profile(&Graph::complete(m), &SearchBudget::default()).unwrap();
            let expect: Vec<u64> = (0..=m as u64).map(|l| l * (m as u64 - l)).collect();
            assert_eq!(p.values, expect);
        }
    }

    #[test]
    fn s23_matches_lex_and_witnesses_recheck() {
        let g = Sierpinski::new(2, 3).unwrap();
        let graph = g.to_graph().unwrap();
        let p = exact_profile(&graph, &SearchBudget::default()).unwrap();
        assert_eq!(p.values, lex_profile_table(2, 3).unwrap().values);
        assert!(p.is_symmetric());
        for (k, w) in p.witnesses.iter().enumerate() {
            assert_eq!(w.count_ones(..), k);
            assert_eq!(graph.boundary(w), p.values[k]);
        }
    }

    #[test]
    fn decorated_and_ideal_solvers_agree_on_s23() {
        let g = Sierpinski::new(2, 3).unwrap();
        let order = StabOrder::build(2, 3).unwrap();
        let budget = SearchBudget::default();
        for ctx in DecoratedContext::all(3) {
            let full = exact_profile_decorated(&g, &ctx, &budget).unwrap();
            let ideals = exact_profile_ideals(&g, &order, &ctx, &budget).unwrap();
            assert_eq!(full.values, ideals.values, "{ctx}");
            assert_eq!(full.values, decorated_lex_profile_table(2, 3, &ctx).unwrap().values);
        }
    }

    #[test]
    fn witness_choice_ignores_width() {
        let g = Sierpinski::new(2, 4).unwrap().to_graph().unwrap();
        let a = exact_profile(&g, &SearchBudget::default().with_width(1)).unwrap();
        let b = exact_profile(&g, &SearchBudget::default().with_width(5)).unwrap();
        assert_eq!(a, b);
    }
}
