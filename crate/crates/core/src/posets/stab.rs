use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::eip::VertexSet;
use crate::error::{Error, Result};
use crate::graphs::{embed_packed, QuotientGraph, Sierpinski};
use crate::posets::Poset;
use crate::word::WordSpace;

/// Largest `S(n, m)` whose stabilization order we build.
pub const STAB_LIMIT: u64 = 1 << 20;

/// The stabilization order on the words of `S(n, m)`.
///
/// For digits `i < j`, the reflection `(ij)` exchanges `i` and `j`
/// everywhere in a word; it sends `v` upward when `i` occurs in `v` before
/// any `j`, the side where `y_i(v) > y_j(v)`. The order is generated by all
/// such steps. Steps between non-adjacent digits are needed: they give
/// covers (e.g. `02 < 20` in `S(2,3)`) that no chain of adjacent steps
/// produces.
///
/// Each step raises the Lex rank, so packed order is a linear extension.
#[derive(Debug, Clone)]
pub struct StabOrder {
    space: WordSpace,
    poset: Poset,
    /// Reflection `(i, j)` producing each cover, keyed like `poset.covers()`.
    cover_labels: Vec<((u32, u32), (u32, u32))>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ComponentInfo {
    pub index: usize,
    pub minimum: String,
    pub size: usize,
    pub members: Vec<String>,
    pub covers: Vec<CoverInfo>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CoverInfo {
    pub lower: String,
    pub upper: String,
    pub reflection: (u32, u32),
}

impl StabOrder {
    pub fn build(n: u32, m: u32) -> Result<Self> {
        let g = Sierpinski::new(n, m)?;
        let space = g.space();
        if space.size() > STAB_LIMIT {
            return Err(Error::budget(
                format!("stabilization order of S({n},{m})"),
                space.size(),
                STAB_LIMIT,
                0,
            ));
        }
        let mut arcs = Vec::new();
        let mut labels_of = std::collections::HashMap::new();
        for v in 0..space.size() {
            for i in 0..m {
                for j in i + 1..m {
                    if space.first_of(v, i, j) == Some(i) {
                        let w = space.swap_digits(v, i, j);
                        arcs.push((v as u32, w as u32));
                        labels_of.entry((v as u32, w as u32)).or_insert((i, j));
                    }
                }
            }
        }
        let labels = (0..space.size()).map(|v| space.format(v)).collect();
        let poset = Poset::from_generators(labels, &arcs)?;
        let cover_labels = poset
            .covers()
            .into_iter()
            .map(|c| (c, labels_of[&c]))
            .collect();
        let order = StabOrder {
            space,
            poset,
            cover_labels,
        };
        order.check_chamber_minima()?;
        Ok(order)
    }

    fn check_chamber_minima(&self) -> Result<()> {
        for comp in self.poset.components() {
            let minima: Vec<u32> = comp
                .iter()
                .copied()
                .filter(|&x| self.poset.lower_covers(x as usize).is_empty())
                .collect();
            if minima.len() != 1 {
                return Err(Error::Defect(format!(
                    "component of {} has {} minimal elements",
                    self.space.format(comp[0] as u64),
                    minima.len()
                )));
            }
            let y = embed_packed(self.space, minima[0] as u64)?;
            if !y.in_fundamental_chamber() {
                return Err(Error::Defect(format!(
                    "minimum {} lies outside the chamber",
                    self.space.format(minima[0] as u64)
                )));
            }
        }
        Ok(())
    }

    pub fn space(&self) -> WordSpace {
        self.space
    }

    pub fn poset(&self) -> &Poset {
        &self.poset
    }

    pub fn component_count(&self) -> usize {
        self.poset.components().len()
    }

    /// The component containing packed word `v`, as an induced poset plus
    /// the packed words of its elements.
    pub fn component_poset(&self, v: u64) -> Result<(Poset, Vec<u32>)> {
        let c = self.poset.component_of(v as usize);
        self.poset.restrict(&self.poset.components()[c])
    }

    /// `v` and everything below it, as an induced poset.
    pub fn down_set_poset(&self, v: u64) -> Result<(Poset, Vec<u32>)> {
        self.poset.restrict(&self.poset.principal_ideal(v as usize))
    }

    pub fn is_ideal(&self, s: &VertexSet) -> bool {
        s.space() == self.space && self.poset.is_ideal(s.bits())
    }

    /// All ideals of the whole order as vertex sets.
    pub fn ideals(&self, cap: u64) -> Result<Vec<VertexSet>> {
        self.poset
            .enumerate_ideals(cap)?
            .into_iter()
            .map(|bits| VertexSet::from_packed(self.space, bits.ones().map(|x| x as u64)))
            .collect()
    }

    pub fn cover_reflection(&self, lower: u32, upper: u32) -> Option<(u32, u32)> {
        self.cover_labels
            .binary_search_by_key(&(lower, upper), |&(c, _)| c)
            .ok()
            .map(|k| self.cover_labels[k].1)
    }

    pub fn component_inventory(&self) -> Vec<ComponentInfo> {
        self.poset
            .components()
            .iter()
            .enumerate()
            .map(|(index, comp)| {
                let members: Vec<String> =
                    comp.iter().map(|&x| self.space.format(x as u64)).collect();
                let covers = self
                    .cover_labels
                    .iter()
                    .filter(|((a, _), _)| self.poset.component_of(*a as usize) == index)
                    .map(|&((a, b), r)| CoverInfo {
                        lower: self.space.format(a as u64),
                        upper: self.space.format(b as u64),
                        reflection: r,
                    })
                    .collect();
                ComponentInfo {
                    index,
                    minimum: members[0].clone(),
                    size: comp.len(),
                    members,
                    covers,
                }
            })
            .collect()
    }
}

/// The stabilization order induced on the classes of `S[n, m]`.
///
/// A reflection maps classes to classes. A class it maps to itself is fixed;
/// otherwise the class moves up when its Lex-least member does.
pub fn quotient_stab_order(q: &QuotientGraph) -> Result<Poset> {
    let base = q.base();
    let space = base.space();
    let m = base.m();
    let mut arcs = Vec::new();
    for c in 0..q.classes().len() {
        let rep = q.representative(c);
        for i in 0..m {
            for j in i + 1..m {
                let image = q.class_of(space.swap_digits(rep, i, j));
                if image != c && space.first_of(rep, i, j) == Some(i) {
                    arcs.push((c as u32, image as u32));
                }
            }
        }
    }
    let labels = q.graph().labels().to_vec();
    Poset::from_generators(labels, &arcs)
}

/// Bitset of packed words from a list of element indices.
pub fn bits_of(len: usize, members: &[u32]) -> FixedBitSet {
    let mut b = FixedBitSet::with_capacity(len);
    for &x in members {
        b.insert(x as usize);
    }
    b
}
