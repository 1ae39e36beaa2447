use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Corner decoration `(s, t)` of `S_{s,t}(n, m)`.
///
/// Every corner `i^n` gets a phantom exterior neighbour `v_i`. Digits split
/// into `I = {0..s-1}` (phantom counted inside the set), `J = {s..s+t-1}`
/// (no phantom edge) and `K = {s+t..m-1}` (phantom counted outside).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct DecoratedContext {
    m: u32,
    s: u32,
    t: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CornerClass {
    I,
    J,
    K,
}

impl DecoratedContext {
    pub fn new(m: u32, s: u32, t: u32) -> Result<Self> {
        if s.checked_add(t).is_none_or(|st| st > m) {
            return Err(Error::param(format!("decoration (s,t)=({s},{t}) needs s+t <= m={m}")));
        }
        Ok(DecoratedContext { m, s, t })
    }

    /// `S_{0,m}`: no phantom edges at all.
    pub fn plain(m: u32) -> Self {
        DecoratedContext { m, s: 0, t: m }
    }

    /// All `(m+2)(m+1)/2` decorations, ordered by `s` then `t`.
    pub fn all(m: u32) -> Vec<DecoratedContext> {
        (0..=m)
            .flat_map(|s| (0..=m - s).map(move |t| DecoratedContext { m, s, t }))
            .collect()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn t(&self) -> u32 {
        self.t
    }

    pub fn is_plain(&self) -> bool {
        self.s == 0 && self.t == self.m
    }

    #[inline]
    pub fn class(&self, i: u32) -> CornerClass {
        if i < self.s {
            CornerClass::I
        } else if i < self.s + self.t {
            CornerClass::J
        } else {
            CornerClass::K
        }
    }

    #[inline]
    pub fn in_i(&self, i: u32) -> bool {
        i < self.s
    }

    #[inline]
    pub fn in_k(&self, i: u32) -> bool {
        i >= self.s + self.t
    }

    pub fn i_set(&self) -> Vec<u32> {
        (0..self.s).collect()
    }

    pub fn j_set(&self) -> Vec<u32> {
        (self.s..self.s + self.t).collect()
    }

    pub fn k_set(&self) -> Vec<u32> {
        (self.s + self.t..self.m).collect()
    }

    /// Phantom edge cost at corner `i`: cut iff the corner's membership
    /// differs from its phantom neighbour's.
    #[inline]
    pub fn phantom_cost(&self, i: u32, corner_in_set: bool) -> u64 {
        match self.class(i) {
            CornerClass::I => u64::from(!corner_in_set),
            CornerClass::J => 0,
            CornerClass::K => u64::from(corner_in_set),
        }
    }

    /// The decoration seen after complementing the set and reversing digits:
    /// `(s, t) -> (m-s-t, t)`.
    pub fn dual(&self) -> DecoratedContext {
        DecoratedContext {
            m: self.m,
            s: self.m - self.s - self.t,
            t: self.t,
        }
    }
}

impl fmt::Display for DecoratedContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.s, self.t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_sizes() {
        let c = DecoratedContext::new(5, 2, 1).unwrap();
        assert_eq!(c.i_set(), vec![0, 1]);
        assert_eq!(c.j_set(), vec![2]);
        assert_eq!(c.k_set(), vec![3, 4]);
        assert!(DecoratedContext::new(3, 2, 2).is_err());
    }

    #[test]
    fn decoration_counts() {
        assert_eq!(DecoratedContext::all(3).len(), 10);
        assert_eq!(DecoratedContext::all(4).len(), 15);
        assert!(DecoratedContext::plain(4).is_plain());
    }

    #[test]
    fn dual_is_involution() {
        for c in DecoratedContext::all(4) {
            assert_eq!(c.dual().dual(), c);
        }
    }
}
