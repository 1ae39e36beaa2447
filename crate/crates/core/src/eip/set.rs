use std::fmt;

use fixedbitset::FixedBitSet;
use serde::{Serialize, Serializer};

use crate::eip::{lex_segment, PermutationOrder};
use crate::error::{Error, Result};
use crate::word::{VertexWord, WordSpace};

/// Largest vertex space a [`VertexSet`] will allocate a bitset for.
pub const SET_LIMIT: u64 = 1 << 32;

/// A subset of `{0..m-1}^n`, stored as a bitset over packed words.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VertexSet {
    space: WordSpace,
    bits: FixedBitSet,
}

impl VertexSet {
    pub fn empty(space: WordSpace) -> Result<Self> {
        if space.size() > SET_LIMIT {
            return Err(Error::budget(
                "vertex set allocation",
                space.size(),
                SET_LIMIT,
                0,
            ));
        }
        Ok(VertexSet {
            space,
            bits: FixedBitSet::with_capacity(space.size() as usize),
        })
    }

    pub fn full(space: WordSpace) -> Result<Self> {
        let mut s = VertexSet::empty(space)?;
        s.bits.insert_range(..);
        Ok(s)
    }

    pub fn from_packed(space: WordSpace, members: impl IntoIterator<Item = u64>) -> Result<Self> {
        let mut s = VertexSet::empty(space)?;
        for v in members {
            s.try_insert(v)?;
        }
        Ok(s)
    }

    pub fn from_words<'a>(space: WordSpace, words: impl IntoIterator<Item = &'a VertexWord>) -> Result<Self> {
        let mut s = VertexSet::empty(space)?;
        for w in words {
            if w.n() != space.n() || w.m() != space.m() {
                return Err(Error::DimensionMismatch {
                    expected_n: space.n(),
                    expected_m: space.m(),
                    got_n: w.n(),
                    got_m: w.m(),
                });
            }
            s.bits.insert(space.pack(w.digits()) as usize);
        }
        Ok(s)
    }

    /// Builds a set from the low bits of `mask` (bit `v` = packed word `v`).
    pub fn from_mask(space: WordSpace, mask: u64) -> Result<Self> {
        if space.size() > 64 {
            return Err(Error::param("bitmask sets need at most 64 vertices"));
        }
        if space.size() < 64 && mask >> space.size() != 0 {
            return Err(Error::param(format!("mask {mask:#x} has bits outside the space")));
        }
        let mut s = VertexSet::empty(space)?;
        for v in 0..space.size() {
            if mask >> v & 1 == 1 {
                s.bits.insert(v as usize);
            }
        }
        Ok(s)
    }

    /// Parses `lex:<ell>`, or a comma-separated list of digit strings
    /// (`{}` or an empty string for the empty set).
    pub fn parse(spec: &str, space: WordSpace) -> Result<Self> {
        let spec = spec.trim();
        if let Some(rest) = spec.strip_prefix("lex:") {
            let ell: u64 = rest
                .trim()
                .parse()
                .map_err(|_| Error::param(format!("bad Lex size {rest:?}")))?;
            return lex_segment(ell, &PermutationOrder::identity(space.m()), space);
        }
        let body = spec.trim_start_matches('{').trim_end_matches('}').trim();
        let mut s = VertexSet::empty(space)?;
        if body.is_empty() {
            return Ok(s);
        }
        for token in body.split(',') {
            let v = space.parse(token.trim())?;
            s.bits.insert(v as usize);
        }
        Ok(s)
    }

    #[inline]
    pub fn space(&self) -> WordSpace {
        self.space
    }

    #[inline]
    pub fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    #[inline]
    pub fn len(&self) -> u64 {
        self.bits.count_ones(..) as u64
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    #[inline]
    pub fn contains(&self, v: u64) -> bool {
        self.bits.contains(v as usize)
    }

    #[inline]
    pub fn insert(&mut self, v: u64) {
        self.bits.insert(v as usize);
    }

    pub fn try_insert(&mut self, v: u64) -> Result<()> {
        if v >= self.space.size() {
            return Err(Error::param(format!(
                "vertex {v} outside a space of {} words",
                self.space.size()
            )));
        }
        self.insert(v);
        Ok(())
    }

    #[inline]
    pub fn remove(&mut self, v: u64) {
        self.bits.set(v as usize, false);
    }

    #[inline]
    pub fn set(&mut self, v: u64, present: bool) {
        self.bits.set(v as usize, present);
    }

    /// Members in increasing packed (= Lex) order.
    pub fn iter(&self) -> impl Iterator<Item = u64> + '_ {
        self.bits.ones().map(|v| v as u64)
    }

    pub fn complement(&self) -> VertexSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        VertexSet {
            space: self.space,
            bits,
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    /// `(l_0, ..., l_{m-1})` with `l_h` the number of members starting with `h`.
    pub fn section_vector(&self) -> Vec<u64> {
        let block = self.space.size() / self.space.m() as u64;
        (0..self.space.m() as u64)
            .map(|h| self.bits.count_ones((h * block) as usize..((h + 1) * block) as usize) as u64)
            .collect()
    }

    /// Bitmask form, for spaces of at most 64 words.
    pub fn to_mask(&self) -> Option<u64> {
        (self.space.size() <= 64).then(|| self.iter().fold(0u64, |acc, v| acc | 1 << v))
    }

    pub fn words(&self) -> Vec<String> {
        self.iter().map(|v| self.space.format(v)).collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.words().join(","))
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.words().join(","))
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_seq(self.words())
    }
}
