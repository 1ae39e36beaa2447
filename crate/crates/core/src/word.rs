//! Base-`m` words of length `n` and their packed integer encoding.
//!
//! A word `v = v_1 v_2 ... v_n` is packed as `sum v_i m^(n-i)`, so the packed
//! value of a word is exactly its zero-based rank in lexicographic order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest number of words we are willing to index with packed integers.
pub const MAX_PACKED: u64 = 1 << 40;

/// The set `{0, ..., m-1}^n` of words, with packing helpers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WordSpace {
    n: u32,
    m: u32,
    size: u64,
}

impl WordSpace {
    /// `n = 0` is allowed (a single empty word); it shows up as the section
    /// space of `S(1, m)`.
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if m == 0 || m > 255 {
            return Err(Error::param(format!("alphabet size m={m} must be in 1..=255")));
        }
        let size = (m as u64)
            .checked_pow(n)
            .filter(|&s| s <= MAX_PACKED)
            .ok_or_else(|| Error::Overflow(format!("{m}^{n} words")))?;
        Ok(WordSpace { n, m, size })
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.n
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.m
    }

    /// `m^n`.
    #[inline]
    pub fn size(&self) -> u64 {
        self.size
    }

    /// `m^k` for `k <= n`.
    #[inline]
    pub fn power(&self, k: u32) -> u64 {
        debug_assert!(k <= self.n);
        (self.m as u64).pow(k)
    }

    /// Digit at position `pos` (0-based from the most significant digit).
    #[inline]
    pub fn digit(&self, packed: u64, pos: u32) -> u32 {
        ((packed / self.power(self.n - 1 - pos)) % self.m as u64) as u32
    }

    pub fn unpack(&self, packed: u64) -> Vec<u8> {
        let mut digits = vec![0u8; self.n as usize];
        let mut x = packed;
        for d in digits.iter_mut().rev() {
            *d = (x % self.m as u64) as u8;
            x /= self.m as u64;
        }
        digits
    }

    pub fn pack(&self, digits: &[u8]) -> u64 {
        digits
            .iter()
            .fold(0u64, |acc, &d| acc * self.m as u64 + d as u64)
    }

    /// The constant word `i^n`.
    pub fn constant(&self, i: u32) -> u64 {
        i as u64 * repunit(self.m as u64, self.n)
    }

    /// Applies a digit relabelling `perm` to every position.
    pub fn relabel(&self, packed: u64, perm: &[u8]) -> u64 {
        let mut x = packed;
        let mut out = 0u64;
        let mut place = 1u64;
        for _ in 0..self.n {
            let d = (x % self.m as u64) as usize;
            out += perm[d] as u64 * place;
            place *= self.m as u64;
            x /= self.m as u64;
        }
        out
    }

    /// Swaps digits `i` and `j` everywhere in the word.
    pub fn swap_digits(&self, packed: u64, i: u32, j: u32) -> u64 {
        let mut x = packed;
        let mut out = 0u64;
        let mut place = 1u64;
        let m = self.m as u64;
        for _ in 0..self.n {
            let d = (x % m) as u32;
            let e = if d == i {
                j
            } else if d == j {
                i
            } else {
                d
            };
            out += e as u64 * place;
            place *= m;
            x /= m;
        }
        out
    }

    /// The digit among `{i, j}` occurring first in the word, if any.
    pub fn first_of(&self, packed: u64, i: u32, j: u32) -> Option<u32> {
        (0..self.n)
            .map(|pos| self.digit(packed, pos))
            .find(|&d| d == i || d == j)
    }

    pub fn format(&self, packed: u64) -> String {
        self.unpack(packed)
            .iter()
            .map(|&d| digit_char(d))
            .collect()
    }

    pub fn parse(&self, s: &str) -> Result<u64> {
        let w = VertexWord::parse(s, self.m)?;
        if w.n() != self.n {
            return Err(Error::DimensionMismatch {
                expected_n: self.n,
                expected_m: self.m,
                got_n: w.n(),
                got_m: self.m,
            });
        }
        Ok(self.pack(w.digits()))
    }
}

/// `(m^k - 1) / (m - 1)`, i.e. the packed value of `1^k`.
#[inline]
pub fn repunit(m: u64, k: u32) -> u64 {
    (0..k).fold(0u64, |acc, _| acc * m + 1)
}

fn digit_char(d: u8) -> char {
    std::char::from_digit(d as u32, 36).expect("digit below 36")
}

/// An `n`-digit base-`m` word.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexWord {
    m: u32,
    digits: Vec<u8>,
}

impl VertexWord {
    pub fn new(digits: Vec<u8>, m: u32) -> Result<Self> {
        if !(2..=36).contains(&m) {
            return Err(Error::param(format!("alphabet size m={m} must be in 2..=36")));
        }
        if digits.is_empty() {
            return Err(Error::param("a vertex word needs at least one digit"));
        }
        if let Some(&d) = digits.iter().find(|&&d| d as u32 >= m) {
            return Err(Error::param(format!("digit {d} out of range for m={m}")));
        }
        Ok(VertexWord { m, digits })
    }

    /// Parses a digit string such as `"0120"`.
    pub fn parse(s: &str, m: u32) -> Result<Self> {
        let digits = s
            .trim()
            .chars()
            .map(|c| {
                c.to_digit(36)
                    .map(|d| d as u8)
                    .ok_or_else(|| Error::param(format!("bad digit {c:?} in word {s:?}")))
            })
            .collect::<Result<Vec<u8>>>()?;
        VertexWord::new(digits, m)
    }

    pub fn n(&self) -> u32 {
        self.digits.len() as u32
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn digits(&self) -> &[u8] {
        &self.digits
    }

    pub(crate) fn same_space(&self, other: &VertexWord) -> Result<()> {
        if self.n() != other.n() || self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected_n: self.n(),
                expected_m: self.m,
                got_n: other.n(),
                got_m: other.m,
            });
        }
        Ok(())
    }
}

impl fmt::Display for VertexWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &d in &self.digits {
            write!(f, "{}", digit_char(d))?;
        }
        Ok(())
    }
}
