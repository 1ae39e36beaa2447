use serde::Serialize;

use crate::eip::{DecoratedContext, VertexSet};
use crate::error::{Error, Result};
use crate::graphs::Sierpinski;

/// Cut edges of a set in `S_{s,t}(n, m)`, split by where they live.
///
/// `within_sections` counts edges inside some `{h} x S(n-1, m)`,
/// `between_sections` the edges joining two sections, and `phantom` the
/// decoration edges at the corners.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct BoundaryParts {
    pub within_sections: u64,
    pub between_sections: u64,
    pub phantom: u64,
}

impl BoundaryParts {
    pub fn total(&self) -> u64 {
        self.within_sections + self.between_sections + self.phantom
    }
}

pub(crate) fn check_set(g: &Sierpinski, s: &VertexSet) -> Result<()> {
    if s.space() != g.space() {
        return Err(Error::DimensionMismatch {
            expected_n: g.n(),
            expected_m: g.m(),
            got_n: s.space().n(),
            got_m: s.space().m(),
        });
    }
    Ok(())
}

pub(crate) fn check_ctx(g: &Sierpinski, ctx: &DecoratedContext) -> Result<()> {
    if ctx.m() != g.m() {
        return Err(Error::param(format!(
            "decoration for m={} used on S({},{})",
            ctx.m(),
            g.n(),
            g.m()
        )));
    }
    Ok(())
}

/// Number of edges of `S(n, m)` with exactly one endpoint in `s`.
pub fn boundary(g: &Sierpinski, s: &VertexSet) -> Result<u64> {
    check_set(g, s)?;
    Ok(raw_boundary(g, s))
}

#[inline]
pub(crate) fn raw_boundary(g: &Sierpinski, s: &VertexSet) -> u64 {
    let mut cut = 0;
    for v in s.iter() {
        g.for_each_neighbor(v, |u| {
            if !s.contains(u) {
                cut += 1;
            }
        });
    }
    cut
}

#[inline]
pub(crate) fn raw_phantom(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> u64 {
    (0..g.m())
        .map(|i| ctx.phantom_cost(i, s.contains(g.corner(i))))
        .sum()
}

/// Boundary in `S_{s,t}(n, m)`: the ordinary boundary plus one for every
/// `I`-corner outside `s` and every `K`-corner inside it.
pub fn decorated_boundary(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<u64> {
    check_set(g, s)?;
    check_ctx(g, ctx)?;
    Ok(raw_boundary(g, s) + raw_phantom(g, s, ctx))
}

pub fn boundary_parts(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<BoundaryParts> {
    check_set(g, s)?;
    check_ctx(g, ctx)?;
    let block = g.vertex_count() / g.m() as u64;
    let mut parts = BoundaryParts {
        phantom: raw_phantom(g, s, ctx),
        ..BoundaryParts::default()
    };
    for v in s.iter() {
        g.for_each_neighbor(v, |u| {
            if !s.contains(u) {
                if u / block == v / block {
                    parts.within_sections += 1;
                } else {
                    parts.between_sections += 1;
                }
            }
        });
    }
    Ok(parts)
}

/// Cut edges as `(u, v)` with `u < v`, sorted.
pub fn cut_edges(g: &Sierpinski, s: &VertexSet) -> Result<Vec<(u64, u64)>> {
    check_set(g, s)?;
    let mut out = Vec::new();
    for v in s.iter() {
        g.for_each_neighbor(v, |u| {
            if !s.contains(u) {
                out.push((u.min(v), u.max(v)));
            }
        });
    }
    out.sort_unstable();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::WordSpace;

    fn set(n: u32, m: u32, spec: &str) -> VertexSet {
        VertexSet::parse(spec, WordSpace::new(n, m).unwrap()).unwrap()
    }

    #[test]
    fn complete_graph_boundary() {
        for m in 2..=6 {
            let g = Sierpinski::new(1, m).unwrap();
            for ell in 0..=m as u64 {
                let s = set(1, m, &format!("lex:{ell}"));
                assert_eq!(boundary(&g, &s).unwrap(), ell * (m as u64 - ell));
            }
        }
    }

    #[test]
    fn first_section_of_s23() {
        let g = Sierpinski::new(2, 3).unwrap();
        let s = set(2, 3, "00,01,02");
        assert_eq!(boundary(&g, &s).unwrap(), 2);
        let space = g.space();
        let cuts: Vec<(String, String)> = cut_edges(&g, &s)
            .unwrap()
            .into_iter()
            .map(|(u, v)| (space.format(u), space.format(v)))
            .collect();
        assert_eq!(
            cuts,
            [("01".to_string(), "10".to_string()), ("02".to_string(), "20".to_string())]
        );
    }

    #[test]
    fn empty_and_full_have_no_boundary() {
        let g = Sierpinski::new(3, 3).unwrap();
        let e = VertexSet::empty(g.space()).unwrap();
        assert_eq!(boundary(&g, &e).unwrap(), 0);
        assert_eq!(boundary(&g, &e.complement()).unwrap(), 0);
    }

    #[test]
    fn decorated_examples() {
        let g = Sierpinski::new(1, 3).unwrap();
        let ctx = DecoratedContext::new(3, 1, 0).unwrap();
        assert_eq!(decorated_boundary(&g, &set(1, 3, "0"), &ctx).unwrap(), 2);
        // I = {0}, K = {1, 2}: two interior cuts, the unfilled I-corner 0,
        // and the filled K-corner 1.
        assert_eq!(decorated_boundary(&g, &set(1, 3, "1"), &ctx).unwrap(), 4);
        let plain = DecoratedContext::plain(3);
        let s = set(1, 3, "1");
        assert_eq!(decorated_boundary(&g, &s, &plain).unwrap(), boundary(&g, &s).unwrap());
    }

    #[test]
    fn empty_set_pays_for_filled_rows() {
        let g = Sierpinski::new(2, 4).unwrap();
        let e = VertexSet::empty(g.space()).unwrap();
        for j in 0..=4 {
            let ctx = DecoratedContext::new(4, j, 0).unwrap();
            assert_eq!(decorated_boundary(&g, &e, &ctx).unwrap(), j as u64);
        }
    }

    #[test]
    fn parts_add_up() {
        let g = Sierpinski::new(3, 3).unwrap();
        let s = set(3, 3, "000,001,012,100,222,210");
        let ctx = DecoratedContext::new(3, 1, 1).unwrap();
        let p = boundary_parts(&g, &s, &ctx).unwrap();
        assert_eq!(p.total(), decorated_boundary(&g, &s, &ctx).unwrap());
    }

    #[test]
    fn mismatched_inputs_rejected() {
        let g = Sierpinski::new(2, 3).unwrap();
        assert!(boundary(&g, &set(3, 3, "000")).is_err());
        let ctx = DecoratedContext::plain(4);
        assert!(decorated_boundary(&g, &set(2, 3, "00"), &ctx).is_err());
    }
}
