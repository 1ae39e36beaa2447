use std::fmt;

use serde::Serialize;

use crate::eip::VertexSet;
use crate::error::{Error, Result};
use crate::word::WordSpace;

/// A ranking of the digits `0..m`, inducing the order `Lex_pi` on words.
///
/// `order[r]` is the digit of rank `r`. `Lex_pi(v)` ranks words by
/// lexicographic comparison after each digit is replaced by its rank, so the
/// identity order gives plain Lex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PermutationOrder {
    order: Vec<u8>,
    #[serde(skip)]
    rank: Vec<u8>,
}

impl PermutationOrder {
    pub fn new(order: Vec<u8>) -> Result<Self> {
        let m = order.len();
        let mut rank = vec![u8::MAX; m];
        for (r, &d) in order.iter().enumerate() {
            if d as usize >= m || rank[d as usize] != u8::MAX {
                return Err(Error::param(format!("{order:?} is not a permutation of 0..{m}")));
            }
            rank[d as usize] = r as u8;
        }
        Ok(PermutationOrder { order, rank })
    }

    pub fn identity(m: u32) -> Self {
        PermutationOrder::new((0..m as u8).collect()).expect("identity is a permutation")
    }

    pub fn m(&self) -> u32 {
        self.order.len() as u32
    }

    pub fn order(&self) -> &[u8] {
        &self.order
    }

    #[inline]
    pub fn rank(&self, digit: u32) -> u32 {
        self.rank[digit as usize] as u32
    }

    pub fn is_identity(&self) -> bool {
        self.order.iter().enumerate().all(|(r, &d)| r == d as usize)
    }

    /// True if digit `i` is ranked before digit `j`.
    pub fn precedes(&self, i: u32, j: u32) -> bool {
        self.rank(i) < self.rank(j)
    }

    /// The order with digits `i` and `j` exchanged in rank.
    pub fn swapped(&self, i: u32, j: u32) -> PermutationOrder {
        let mut order = self.order.clone();
        let (ri, rj) = (self.rank(i) as usize, self.rank(j) as usize);
        order.swap(ri, rj);
        PermutationOrder::new(order).expect("swap keeps a permutation")
    }

    /// Zero-based rank of the packed word `v`, i.e. `Lex_pi(v) - 1`.
    #[inline]
    pub fn index(&self, space: WordSpace, v: u64) -> u64 {
        space.relabel(v, &self.rank)
    }

    /// The word of zero-based rank `idx`.
    #[inline]
    pub fn word_at(&self, space: WordSpace, idx: u64) -> u64 {
        space.relabel(idx, &self.order)
    }
}

impl fmt::Display for PermutationOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.order {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// The first `ell` words under `order`.
pub fn lex_segment(ell: u64, order: &PermutationOrder, space: WordSpace) -> Result<VertexSet> {
    if order.m() != space.m() {
        return Err(Error::param(format!(
            "order on {} digits used for m={}",
            order.m(),
            space.m()
        )));
    }
    if ell > space.size() {
        return Err(Error::param(format!(
            "segment size {ell} exceeds {} words",
            space.size()
        )));
    }
    if order.is_identity() {
        let mut s = VertexSet::empty(space)?;
        for v in 0..ell {
            s.insert(v);
        }
        return Ok(s);
    }
    VertexSet::from_packed(space, (0..ell).map(|i| order.word_at(space, i)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_segments() {
        let sp = WordSpace::new(2, 3).unwrap();
        let id = PermutationOrder::identity(3);
        assert!(lex_segment(0, &id, sp).unwrap().is_empty());
        assert_eq!(lex_segment(9, &id, sp).unwrap().len(), 9);
        assert_eq!(lex_segment(3, &id, sp).unwrap().words(), ["00", "01", "02"]);
        assert!(lex_segment(10, &id, sp).is_err());
    }

    #[test]
    fn relabelled_order() {
        let sp = WordSpace::new(2, 3).unwrap();
        let pi = PermutationOrder::new(vec![2, 0, 1]).unwrap();
        assert_eq!(lex_segment(4, &pi, sp).unwrap().words(), ["02", "20", "21", "22"]);
        for v in 0..sp.size() {
            assert_eq!(pi.word_at(sp, pi.index(sp, v)), v);
        }
        assert_eq!(pi.swapped(2, 1).order(), &[1, 0, 2]);
        assert!(pi.precedes(2, 0));
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(PermutationOrder::new(vec![0, 0, 1]).is_err());
        assert!(PermutationOrder::new(vec![0, 3, 1]).is_err());
    }
}
