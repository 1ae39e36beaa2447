use serde::Serialize;

use crate::eip::{check_ctx, check_set, DecoratedContext, VertexSet};
use crate::error::Result;
use crate::graphs::Sierpinski;
use crate::word::repunit;

/// Exterior-edge potentials of a set with respect to the section split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Potentials {
    /// Distinct cut edges among inter-section and phantom edges.
    pub tau: u64,
    /// Sum over corners `ij^(n-1)` of `m - j` when the corner is outside the
    /// set but its exterior neighbour is inside, and `j` in the reverse case.
    pub rho: u64,
}

/// Membership of the exterior neighbour of corner `i j^(n-1)` of section `i`.
///
/// For `j != i` that neighbour is `j i^(n-1)`; for `j = i` it is the phantom
/// vertex, inside for `I`-digits, outside for `K`-digits, absent for `J`.
pub(crate) fn outer_state(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext, i: u32, j: u32) -> Option<bool> {
    if i == j {
        if ctx.in_i(i) {
            Some(true)
        } else if ctx.in_k(i) {
            Some(false)
        } else {
            None
        }
    } else {
        Some(s.contains(section_corner(g, j, i)))
    }
}

/// The packed word `h c^(n-1)`: corner `c` of section `h`.
#[inline]
pub(crate) fn section_corner(g: &Sierpinski, h: u32, c: u32) -> u64 {
    let block = g.vertex_count() / g.m() as u64;
    h as u64 * block + c as u64 * repunit(g.m() as u64, g.n() - 1)
}

pub fn potentials(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<Potentials> {
    check_set(g, s)?;
    check_ctx(g, ctx)?;
    let m = g.m();
    let (mut rho, mut crossing, mut phantom) = (0u64, 0u64, 0u64);
    for i in 0..m {
        for j in 0..m {
            let inside = s.contains(section_corner(g, i, j));
            let Some(outer) = outer_state(g, s, ctx, i, j) else {
                continue;
            };
            if inside == outer {
                continue;
            }
            rho += if inside { j as u64 } else { (m - j) as u64 };
            if i == j {
                phantom += 1;
            } else {
                crossing += 1;
            }
        }
    }
    Ok(Potentials {
        tau: crossing / 2 + phantom,
        rho,
    })
}

pub fn rho(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<u64> {
    Ok(potentials(g, s, ctx)?.rho)
}

pub fn tau(g: &Sierpinski, s: &VertexSet, ctx: &DecoratedContext) -> Result<u64> {
    Ok(potentials(g, s, ctx)?.tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eip::boundary_parts;

    #[test]
    fn empty_set_without_inside_phantoms() {
        let g = Sierpinski::new(3, 3).unwrap();
        let s = VertexSet::empty(g.space()).unwrap();
        for ctx in DecoratedContext::all(3).into_iter().filter(|c| c.s() == 0) {
            assert_eq!(potentials(&g, &s, &ctx).unwrap(), Potentials { tau: 0, rho: 0 });
        }
    }

    #[test]
    fn tau_is_the_exterior_part_of_the_boundary() {
        let g = Sierpinski::new(3, 3).unwrap();
        for ctx in DecoratedContext::all(3) {
            for ell in [0, 5, 9, 13, 18, 26, 27] {
                let s = VertexSet::parse(&format!("lex:{ell}"), g.space()).unwrap();
                let parts = boundary_parts(&g, &s, &ctx).unwrap();
                assert_eq!(tau(&g, &s, &ctx).unwrap(), parts.between_sections + parts.phantom);
            }
        }
    }

    #[test]
    fn rho_weights_by_corner_digit() {
        // {0^3} in S(3,3), undecorated: the corners 011 and 022 face 100 and
        // 200, both outside, so nothing in section 0 is mismatched; sections
        // 1 and 2 see no member either.
        let g = Sierpinski::new(3, 3).unwrap();
        let ctx = DecoratedContext::plain(3);
        let s = VertexSet::parse("000", g.space()).unwrap();
        assert_eq!(rho(&g, &s, &ctx).unwrap(), 0);
        // {100}: corner 100 is inside and faces 011 outside, weight j = 0;
        // corner 011 is outside facing 100 inside, weight m - j = 2.
        let s = VertexSet::parse("100", g.space()).unwrap();
        assert_eq!(rho(&g, &s, &ctx).unwrap(), 2);
        assert_eq!(tau(&g, &s, &ctx).unwrap(), 1);
    }
}
