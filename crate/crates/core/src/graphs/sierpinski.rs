use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::word::{repunit, VertexWord, WordSpace};

/// Largest `S(n, m)` we materialize as an adjacency list.
pub const MATERIALIZE_LIMIT: u64 = 1 << 16;

/// The generalized Sierpinski graph `S(n, m)` on `{0..m-1}^n`.
///
/// Vertices are packed words (see [`WordSpace`]). Adjacency is evaluated from
/// the edge rule on demand, so nothing is materialized unless
/// [`Sierpinski::to_graph`] is called.
///
/// `u ~ v` iff there is a position `h` with a common prefix before `h`,
/// `u_h != v_h`, and `u_j = v_h`, `v_j = u_h` for every `j > h`. With `h = n`
/// this gives the interior `K_m` cliques (words differing only in the last
/// digit); with `h < n` the unique exterior edge `p a b^k -- p b a^k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Sierpinski {
    space: WordSpace,
}

impl Sierpinski {
    pub fn new(n: u32, m: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("S(n,m) needs n >= 1"));
        }
        if m < 2 {
            return Err(Error::param("S(n,m) needs m >= 2"));
        }
        Ok(Sierpinski {
            space: WordSpace::new(n, m)?,
        })
    }

    #[inline]
    pub fn space(&self) -> WordSpace {
        self.space
    }

    #[inline]
    pub fn n(&self) -> u32 {
        self.space.n()
    }

    #[inline]
    pub fn m(&self) -> u32 {
        self.space.m()
    }

    #[inline]
    pub fn vertex_count(&self) -> u64 {
        self.space.size()
    }

    /// `(m^n, (m^(n+1) - m) / 2)`, with overflow reported rather than wrapped.
    pub fn counts(&self) -> Result<(u64, u64)> {
        let m = self.m() as u64;
        let big = m
            .checked_pow(self.n() + 1)
            .ok_or_else(|| Error::Overflow(format!("m^(n+1) for S({},{})", self.n(), m)))?;
        Ok((self.vertex_count(), (big - m) / 2))
    }

    /// The unique exterior neighbour, or `None` at a corner `i^n`.
    pub fn exterior_neighbor(&self, v: u64) -> Option<u64> {
        let m = self.m() as u64;
        let n = self.n();
        let b = v % m;
        let mut rest = v / m;
        let mut k = 1u32;
        while k < n && rest % m == b {
            rest /= m;
            k += 1;
        }
        if k == n {
            return None;
        }
        let a = rest % m;
        let prefix = rest / m;
        let mk = m.pow(k);
        let rep = repunit(m, k);
        Some(prefix * mk * m + b * mk + a * rep)
    }

    /// Calls `f` on every neighbour: the `m-1` interior ones in increasing
    /// order, then the exterior one if present.
    #[inline]
    pub fn for_each_neighbor(&self, v: u64, mut f: impl FnMut(u64)) {
        let m = self.m() as u64;
        let base = v - v % m;
        for c in 0..m {
            if base + c != v {
                f(base + c);
            }
        }
        if let Some(u) = self.exterior_neighbor(v) {
            f(u);
        }
    }

    pub fn neighbors(&self, v: u64) -> Vec<u64> {
        let mut out = Vec::with_capacity(self.m() as usize);
        self.for_each_neighbor(v, |u| out.push(u));
        out.sort_unstable();
        out
    }

    pub fn neighbors_of(&self, v: &VertexWord) -> Result<Vec<VertexWord>> {
        let packed = self.check_word(v)?;
        self.neighbors(packed)
            .into_iter()
            .map(|u| VertexWord::new(self.space.unpack(u), self.m()))
            .collect()
    }

    #[inline]
    pub fn degree(&self, v: u64) -> u32 {
        self.m() - 1 + u32::from(self.exterior_neighbor(v).is_some())
    }

    /// Edge test on packed words; `false` when `u == v`.
    pub fn is_edge(&self, u: u64, v: u64) -> bool {
        self.edge_level(u, v).is_some()
    }

    /// The position `h` (1-based) witnessing the edge rule, if `{u, v}` is an edge.
    pub fn edge_level(&self, u: u64, v: u64) -> Option<u32> {
        if u == v {
            return None;
        }
        let du = self.space.unpack(u);
        let dv = self.space.unpack(v);
        let h = du.iter().zip(&dv).position(|(a, b)| a != b)?;
        let (a, b) = (du[h], dv[h]);
        let tail_ok = du[h + 1..].iter().all(|&x| x == b) && dv[h + 1..].iter().all(|&x| x == a);
        tail_ok.then_some(h as u32 + 1)
    }

    /// Word-level edge test. Self-loops and mismatched words are errors.
    pub fn is_edge_words(&self, u: &VertexWord, v: &VertexWord) -> Result<bool> {
        u.same_space(v)?;
        let pu = self.check_word(u)?;
        let pv = self.check_word(v)?;
        if pu == pv {
            return Err(Error::param(format!("self-loop query on {u}")));
        }
        Ok(self.is_edge(pu, pv))
    }

    pub fn check_word(&self, v: &VertexWord) -> Result<u64> {
        if v.n() != self.n() || v.m() != self.m() {
            return Err(Error::DimensionMismatch {
                expected_n: self.n(),
                expected_m: self.m(),
                got_n: v.n(),
                got_m: v.m(),
            });
        }
        Ok(self.space.pack(v.digits()))
    }

    #[inline]
    pub fn corner(&self, i: u32) -> u64 {
        self.space.constant(i)
    }

    pub fn corners(&self) -> Vec<u64> {
        (0..self.m()).map(|i| self.corner(i)).collect()
    }

    /// The `m^(n-1)` interior cliques, each listed in increasing order.
    pub fn km_decomposition(&self) -> Vec<Vec<u64>> {
        let m = self.m() as u64;
        (0..self.vertex_count() / m)
            .map(|block| (0..m).map(|c| block * m + c).collect())
            .collect()
    }

    /// All edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(u64, u64)> {
        let mut out = Vec::new();
        for v in 0..self.vertex_count() {
            self.for_each_neighbor(v, |u| {
                if v < u {
                    out.push((v, u));
                }
            });
        }
        out.sort_unstable();
        out
    }

    pub fn to_graph(&self) -> Result<Graph> {
        if self.vertex_count() > MATERIALIZE_LIMIT {
            return Err(Error::budget(
                format!("materializing S({},{})", self.n(), self.m()),
                self.vertex_count(),
                MATERIALIZE_LIMIT,
                0,
            ));
        }
        let labels = (0..self.vertex_count()).map(|v| self.space.format(v)).collect();
        let edges = self.edges().into_iter().map(|(u, v)| (u as usize, v as usize));
        Graph::from_edges(self.vertex_count() as usize, edges, labels)
    }
}
