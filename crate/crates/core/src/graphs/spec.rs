use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{quotient_graph, Graph, Sierpinski};
use crate::word::{VertexWord, WordSpace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Sierpinski,
    SierpinskiQuotient,
    Hamming,
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::Sierpinski => "sierpinski",
            Family::SierpinskiQuotient => "sierpinski-quotient",
            Family::Hamming => "hamming",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "sierpinski" => Ok(Family::Sierpinski),
            "sierpinski-quotient" | "quotient" => Ok(Family::SierpinskiQuotient),
            "hamming" => Ok(Family::Hamming),
            other => Err(Error::param(format!("unknown graph family {other:?}"))),
        }
    }
}

/// A member of one of the supported graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GraphSpec {
    pub family: Family,
    pub n: u32,
    pub m: u32,
}

impl GraphSpec {
    pub fn new(family: Family, n: u32, m: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::param("n must be positive"));
        }
        if m < 2 {
            return Err(Error::param("m must be at least 2"));
        }
        if family == Family::SierpinskiQuotient && m < 3 {
            return Err(Error::param("the quotient needs m >= 3"));
        }
        WordSpace::new(n, m)?;
        Ok(GraphSpec { family, n, m })
    }

    pub fn sierpinski(n: u32, m: u32) -> Result<Self> {
        GraphSpec::new(Family::Sierpinski, n, m)
    }

    /// `SG_n = S[n, 3]`.
    pub fn gasket(n: u32) -> Result<Self> {
        GraphSpec::new(Family::SierpinskiQuotient, n, 3)
    }

    /// `Q_n = K_2^n`.
    pub fn hypercube(n: u32) -> Result<Self> {
        GraphSpec::new(Family::Hamming, n, 2)
    }

    pub fn words(&self) -> WordSpace {
        WordSpace::new(self.n, self.m).expect("validated on construction")
    }

    /// Vertex count; for the quotient this is computed by building it.
    pub fn vertex_count(&self) -> Result<u64> {
        match self.family {
            Family::Sierpinski | Family::Hamming => Ok(self.words().size()),
            Family::SierpinskiQuotient => {
                Ok(quotient_graph(self.n, self.m)?.graph().vertex_count() as u64)
            }
        }
    }

    /// Edge test on words. The quotient has no word-level edge rule; query
    /// its [`Graph`] instead.
    pub fn is_edge(&self, u: &VertexWord, v: &VertexWord) -> Result<bool> {
        u.same_space(v)?;
        match self.family {
            Family::Sierpinski => Sierpinski::new(self.n, self.m)?.is_edge_words(u, v),
            Family::Hamming => {
                if u.n() != self.n || u.m() != self.m {
                    return Err(Error::DimensionMismatch {
                        expected_n: self.n,
                        expected_m: self.m,
                        got_n: u.n(),
                        got_m: u.m(),
                    });
                }
                if u == v {
                    return Err(Error::param(format!("self-loop query on {u}")));
                }
                let diff = u.digits().iter().zip(v.digits()).filter(|(a, b)| a != b).count();
                Ok(diff == 1)
            }
            Family::SierpinskiQuotient => Err(Error::param(
                "quotient edges are queried on the contracted graph",
            )),
        }
    }

    pub fn materialize(&self) -> Result<Graph> {
        match self.family {
            Family::Sierpinski => Sierpinski::new(self.n, self.m)?.to_graph(),
            Family::SierpinskiQuotient => Ok(quotient_graph(self.n, self.m)?.graph().clone()),
            Family::Hamming => hamming(self.n, self.m),
        }
    }

    /// Edge list with a `# family=<tag> n=<n> m=<m>` header.
    pub fn edge_list_text(&self) -> Result<String> {
        let header = format!("family={} n={} m={}", self.family.tag(), self.n, self.m);
        Ok(self.materialize()?.edge_list_text(&[header]))
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.family, self.m) {
            (Family::Sierpinski, _) => write!(f, "S({},{})", self.n, self.m),
            (Family::SierpinskiQuotient, 3) => write!(f, "SG{}", self.n),
            (Family::SierpinskiQuotient, _) => write!(f, "S[{},{}]", self.n, self.m),
            (Family::Hamming, 2) => write!(f, "Q{}", self.n),
            (Family::Hamming, _) => write!(f, "K{}^{}", self.m, self.n),
        }
    }
}

/// Accepts `SG<n>`, `Q<n>`, `K<m>`, `S(<n>,<m>)` and `S[<n>,<m>]`.
impl FromStr for GraphSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let num = |t: &str| -> Result<u32> {
            t.trim()
                .parse()
                .map_err(|_| Error::param(format!("bad graph name {s:?}")))
        };
        let pair = |t: &str| -> Result<(u32, u32)> {
            let (a, b) = t
                .split_once(',')
                .ok_or_else(|| Error::param(format!("bad graph name {s:?}")))?;
            Ok((num(a)?, num(b)?))
        };
        if let Some(rest) = s.strip_prefix("SG") {
            GraphSpec::gasket(num(rest)?)
        } else if let Some(rest) = s.strip_prefix('Q') {
            GraphSpec::hypercube(num(rest)?)
        } else if let Some(rest) = s.strip_prefix('K') {
            GraphSpec::new(Family::Hamming, 1, num(rest)?)
        } else if let Some(rest) = s.strip_prefix("S(").and_then(|r| r.strip_suffix(')')) {
            let (n, m) = pair(rest)?;
            GraphSpec::sierpinski(n, m)
        } else if let Some(rest) = s.strip_prefix("S[").and_then(|r| r.strip_suffix(']')) {
            let (n, m) = pair(rest)?;
            GraphSpec::new(Family::SierpinskiQuotient, n, m)
        } else {
            Err(Error::param(format!("unknown graph {s:?}")))
        }
    }
}

/// The Hamming graph `K_m^n`: words adjacent iff they differ in one position.
pub fn hamming(n: u32, m: u32) -> Result<Graph> {
    let space = WordSpace::new(n, m)?;
    if space.size() > crate::graphs::MATERIALIZE_LIMIT {
        return Err(Error::budget(
            format!("materializing K_{m}^{n}"),
            space.size(),
            crate::graphs::MATERIALIZE_LIMIT,
            0,
        ));
    }
    let mm = m as u64;
    let mut edges = Vec::new();
    for v in 0..space.size() {
        let mut place = 1u64;
        for _ in 0..n {
            let d = (v / place) % mm;
            for e in d + 1..mm {
                edges.push((v as usize, (v + (e - d) * place) as usize));
            }
            place *= mm;
        }
    }
    let labels = (0..space.size()).map(|v| space.format(v)).collect();
    Graph::from_edges(space.size() as usize, edges, labels)
}
