use serde::Serialize;

use crate::eip::{decorated_boundary, raw_boundary, DecoratedContext, VertexSet};
use crate::error::Result;
use crate::graphs::Sierpinski;
use crate::steiner::potentials;

/// One application of an operation, for offline convergence audits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceRecord {
    pub op: String,
    pub step: u64,
    pub sections: Vec<u64>,
    pub boundary: u64,
    pub rho: Option<u64>,
    pub tau: Option<u64>,
}

impl TraceRecord {
    pub fn new(g: &Sierpinski, ctx: &DecoratedContext, op: String, step: u64, s: &VertexSet) -> Result<Self> {
        let pot = potentials(g, s, ctx)?;
        Ok(TraceRecord {
            op,
            step,
            sections: s.section_vector(),
            boundary: decorated_boundary(g, s, ctx)?,
            rho: Some(pot.rho),
            tau: Some(pot.tau),
        })
    }

    /// A record without decoration: plain boundary, no potentials.
    pub(crate) fn plain(g: &Sierpinski, op: String, step: u64, s: &VertexSet) -> Self {
        TraceRecord {
            op,
            step,
            sections: s.section_vector(),
            boundary: raw_boundary(g, s),
            rho: None,
            tau: None,
        }
    }
}

/// One JSON object per line.
pub fn to_jsonl(records: &[TraceRecord]) -> Result<String> {
    let mut out = String::new();
    for r in records {
        out.push_str(&serde_json::to_string(r)?);
        out.push('\n');
    }
    Ok(out)
}
