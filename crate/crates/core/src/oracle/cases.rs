use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::eip::{lex_segment, DecoratedContext, PermutationOrder, VertexSet};
use crate::error::{Error, Result};
use crate::graphs::Sierpinski;
use crate::oracle::SearchBudget;
use crate::posets::StabOrder;
use crate::steiner::{is_compressed, subadditivate_unchecked};

/// One cell of the case grid: an ideal of the two-digit component together
/// with a decoration.
#[derive(Debug, Clone, Serialize)]
pub struct CaseRow {
    pub index: usize,
    /// Members of the component ideal, as words.
    pub ideal: Vec<String>,
    pub s: u32,
    pub t: u32,
    /// Index of the dual case (complement of the digit-reversed ideal, with
    /// decoration `(m-s-t, t)`).
    pub dual: usize,
    /// Stable, compressed sets falling in this case.
    pub sets: u64,
    /// Sets on which subadditivation changed something.
    pub applied: u64,
    /// Sets left unchanged although they are not a Lex segment.
    pub stuck: u64,
    pub max_delta: Option<i64>,
    /// A set with positive `Delta`, if any.
    pub witness: Option<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CaseGrid {
    pub n: u32,
    pub m: u32,
    /// Ideals of the component of `0 1^(n-1)`.
    pub ideal_count: usize,
    pub decoration_count: usize,
    pub raw_cases: usize,
    pub self_dual: usize,
    /// Cases up to duality.
    pub dual_classes: usize,
    /// Cases containing at least one stable compressed set.
    pub populated: usize,
    /// Cases in which subadditivation acts on some set.
    pub nontrivial: usize,
    pub max_delta: Option<i64>,
    pub counterexamples: usize,
    pub rows: Vec<CaseRow>,
}

/// Enumerates the grid of (component ideal, decoration) cases of `S(n, m)`,
/// and for each case runs subadditivation over every stable set that is
/// compressed under that decoration, recording the largest change `Delta`
/// in decorated boundary.
pub fn enumerate_cases(n: u32, m: u32, budget: &SearchBudget) -> Result<CaseGrid> {
    if n < 2 || m < 3 {
        return Err(Error::param(format!("case grid needs n >= 2 and m >= 3, got ({n},{m})")));
    }
    let g = Sierpinski::new(n, m)?;
    let space = g.space();
    let order = StabOrder::build(n, m)?;
    let tail = crate::word::repunit(m as u64, n - 1);
    let (comp, elems) = order.component_poset(tail)?;
    let comp_ideals: Vec<Vec<u64>> = comp
        .enumerate_ideals(budget.max_ideals)?
        .iter()
        .map(|b| b.ones().map(|x| elems[x] as u64).collect())
        .collect();
    let ideal_index: HashMap<Vec<u64>, usize> =
        comp_ideals.iter().enumerate().map(|(i, v)| (v.clone(), i)).collect();
    let decorations = DecoratedContext::all(m);
    let ctx_index: HashMap<DecoratedContext, usize> =
        decorations.iter().enumerate().map(|(i, c)| (*c, i)).collect();
    let nd = decorations.len();

    let reverse: Vec<u8> = (0..m as u8).rev().collect();
    let mut rows = Vec::with_capacity(comp_ideals.len() * nd);
    for (ii, ideal) in comp_ideals.iter().enumerate() {
        let mut dual_ideal: Vec<u64> = elems
            .iter()
            .map(|&e| e as u64)
            .filter(|&e| !ideal.contains(&space.relabel(e, &reverse)))
            .collect();
        dual_ideal.sort_unstable();
        let di = *ideal_index
            .get(&dual_ideal)
            .ok_or_else(|| Error::Defect("dual of a component ideal is not an ideal".into()))?;
        for (ci, ctx) in decorations.iter().enumerate() {
            rows.push(CaseRow {
                index: ii * nd + ci,
                ideal: ideal.iter().map(|&v| space.format(v)).collect(),
                s: ctx.s(),
                t: ctx.t(),
                dual: di * nd + ctx_index[&ctx.dual()],
                sets: 0,
                applied: 0,
                stuck: 0,
                max_delta: None,
                witness: None,
            });
        }
    }

    let mut comp_mask = FixedBitSet::with_capacity(space.size() as usize);
    for &e in &elems {
        comp_mask.insert(e as usize);
    }
    let lex = PermutationOrder::identity(m);
    for bits in order.poset().enumerate_ideals(budget.max_ideals)? {
        let s = VertexSet::from_packed(space, bits.ones().map(|v| v as u64))?;
        let key: Vec<u64> = bits.intersection(&comp_mask).map(|v| v as u64).collect();
        let ii = ideal_index[&key];
        let is_lex = s == lex_segment(s.len(), &lex, space)?;
        for (ci, ctx) in decorations.iter().enumerate() {
            if !is_compressed(&g, &s, ctx)? {
                continue;
            }
            let row = &mut rows[ii * nd + ci];
            row.sets += 1;
            let out = subadditivate_unchecked(&g, &s, ctx)?;
            if out.applied {
                row.applied += 1;
            } else if !is_lex {
                row.stuck += 1;
            }
            let d = out.delta.total();
            row.max_delta = Some(row.max_delta.map_or(d, |x| x.max(d)));
            if d > 0 && row.witness.is_none() {
                row.witness = Some(s.words());
            }
        }
    }

    let self_dual = rows.iter().filter(|r| r.dual == r.index).count();
    Ok(CaseGrid {
        n,
        m,
        ideal_count: comp_ideals.len(),
        decoration_count: nd,
        raw_cases: rows.len(),
        self_dual,
        dual_classes: (rows.len() + self_dual) / 2,
        populated: rows.iter().filter(|r| r.sets > 0).count(),
        nontrivial: rows.iter().filter(|r| r.applied > 0).count(),
        max_delta: rows.iter().filter_map(|r| r.max_delta).max(),
        counterexamples: rows.iter().filter(|r| r.witness.is_some()).count(),
        rows,
    })
}
