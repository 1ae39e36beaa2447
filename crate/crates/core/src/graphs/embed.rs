use serde::Serialize;

use crate::error::{Error, Result};
use crate::word::{VertexWord, WordSpace};

/// Integer point `y(v)` in `R^m` for a vertex of `S(n, m)`.
///
/// Position `p` (0-based, most significant first) contributes `2^(n-1-p)` to
/// the coordinate named by its digit, so the last digit carries `2^0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EmbeddingPoint {
    coordinates: Vec<u64>,
}

pub fn embed(v: &VertexWord) -> Result<EmbeddingPoint> {
    embed_digits(v.digits(), v.m())
}

pub fn embed_packed(space: WordSpace, v: u64) -> Result<EmbeddingPoint> {
    embed_digits(&space.unpack(v), space.m())
}

fn embed_digits(digits: &[u8], m: u32) -> Result<EmbeddingPoint> {
    let n = digits.len();
    if n >= 64 {
        return Err(Error::Overflow(format!("embedding a word of length {n}")));
    }
    let mut coordinates = vec![0u64; m as usize];
    for (p, &d) in digits.iter().enumerate() {
        coordinates[d as usize] += 1u64 << (n - 1 - p);
    }
    Ok(EmbeddingPoint { coordinates })
}

impl EmbeddingPoint {
    pub fn coordinates(&self) -> &[u64] {
        &self.coordinates
    }

    pub fn sum(&self) -> u64 {
        self.coordinates.iter().sum()
    }

    /// `y_0 >= y_1 >= ... >= y_{m-1}`.
    pub fn in_fundamental_chamber(&self) -> bool {
        self.coordinates.windows(2).all(|w| w[0] >= w[1])
    }

    /// Squared distance measured in units of the simplex side length, which
    /// is `sqrt 2` in raw coordinates. Always an integer since both points lie
    /// on the same hyperplane. Equals 1 exactly for edges of `S(n, m)`.
    pub fn squared_side_distance(&self, other: &EmbeddingPoint) -> u64 {
        let raw: u64 = self
            .coordinates
            .iter()
            .zip(&other.coordinates)
            .map(|(&a, &b)| a.abs_diff(b).pow(2))
            .sum();
        raw / 2
    }
}
