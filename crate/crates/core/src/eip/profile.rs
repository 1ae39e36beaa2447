//! Lex profiles `f(l) = |Theta(Lex^-1 {1..l})|` on `S(n, m)`.
//!
//! Three independent evaluators are provided: a direct edge scan, the
//! two-part recursion for `m = 3`, and a level-by-level closed form for all
//! `m`.
//!
//! The closed form expands `l - 1 = sum e_h m^(n-h)`. At level `h` the `m`
//! subcopies of one `S(n-h+1, m)` are joined pairwise by single edges; copies
//! `0..e_h` are full, copy `e_h` is partial, the rest are empty. With
//! `c_h` = number of corners `c != e_h` of the partial copy whose word
//! `c^(n-h)` is `<=` the remaining digits (every corner when nothing remains),
//! the level contributes `e_h (m - e_h) + |c_h - e_h| - e_h`. The partial
//! copy's own corner `e_h^(n-h)` never carries a level-`h` edge, so it is
//! excluded from `c_h`; counting it over-counts, e.g. `f(3) = 4` instead of
//! `2` on `S(2, 3)`. [`ClosedFormConvention`] exposes the alternatives so the
//! choice can be checked against the direct scan.

use std::fmt::Write as _;

use serde::Serialize;

use crate::eip::{DecoratedContext, PermutationOrder};
use crate::error::{Error, Result};
use crate::graphs::{Graph, Sierpinski};
use crate::word::WordSpace;

/// Largest table (in entries) a profile builder will allocate.
pub const PROFILE_LIMIT: u64 = 1 << 27;

/// `l -> boundary` for `l = 0..=|V|`, with optional `m = 3` recursion parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProfileTable {
    pub n: u32,
    pub m: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub decoration: Option<DecoratedContext>,
    pub values: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta0: Option<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub theta1: Option<Vec<u64>>,
}

impl ProfileTable {
    pub fn new(n: u32, m: u32, values: Vec<u64>) -> Self {
        ProfileTable {
            n,
            m,
            decoration: None,
            values,
            theta0: None,
            theta1: None,
        }
    }

    pub fn value(&self, ell: u64) -> u64 {
        self.values[ell as usize]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn is_symmetric(&self) -> bool {
        let v = &self.values;
        (0..v.len()).all(|i| v[i] == v[v.len() - 1 - i])
    }

    /// `ell,theta[,theta0,theta1]` rows in increasing `ell`, `\n` endings.
    pub fn to_csv(&self) -> String {
        let parts = self.theta0.as_ref().zip(self.theta1.as_ref());
        let mut out = String::from(if parts.is_some() {
            "ell,theta,theta0,theta1\n"
        } else {
            "ell,theta\n"
        });
        for (ell, v) in self.values.iter().enumerate() {
            match parts {
                Some((t0, t1)) => writeln!(out, "{ell},{v},{},{}", t0[ell], t1[ell]),
                None => writeln!(out, "{ell},{v}"),
            }
            .expect("writing to a String");
        }
        out
    }
}

fn check_table_size(g: &Sierpinski) -> Result<()> {
    if g.vertex_count() + 1 > PROFILE_LIMIT {
        return Err(Error::budget(
            format!("profile table for S({},{})", g.n(), g.m()),
            g.vertex_count() + 1,
            PROFILE_LIMIT,
            0,
        ));
    }
    Ok(())
}

/// Boundary of the first `ell` words in Lex order, by edge scan.
pub fn lex_profile_direct(n: u32, m: u32, ell: u64) -> Result<u64> {
    let g = Sierpinski::new(n, m)?;
    if ell > g.vertex_count() {
        return Err(Error::param(format!("ell={ell} exceeds {}", g.vertex_count())));
    }
    let mut cut = 0;
    for v in 0..ell {
        g.for_each_neighbor(v, |u| {
            if u >= ell {
                cut += 1;
            }
        });
    }
    Ok(cut)
}

/// The whole Lex profile, built incrementally in one pass.
pub fn lex_profile_table(n: u32, m: u32) -> Result<ProfileTable> {
    let g = Sierpinski::new(n, m)?;
    let values = decorated_order_profile(&g, &PermutationOrder::identity(m), &DecoratedContext::plain(m))?;
    Ok(ProfileTable::new(n, m, values))
}

/// Decorated boundaries of the `Lex` segments of `S_{s,t}(n, m)`.
pub fn decorated_lex_profile_table(n: u32, m: u32, ctx: &DecoratedContext) -> Result<ProfileTable> {
    let g = Sierpinski::new(n, m)?;
    let values = decorated_order_profile(&g, &PermutationOrder::identity(m), ctx)?;
    Ok(ProfileTable {
        decoration: Some(*ctx),
        ..ProfileTable::new(n, m, values)
    })
}

/// Decorated boundaries of the `Lex_pi` segments, `l = 0..=m^n`.
pub fn decorated_order_profile(
    g: &Sierpinski,
    order: &PermutationOrder,
    ctx: &DecoratedContext,
) -> Result<Vec<u64>> {
    check_table_size(g)?;
    if ctx.m() != g.m() || order.m() != g.m() {
        return Err(Error::param("order or decoration does not match m"));
    }
    let space = g.space();
    let corners: Vec<u64> = g.corners();
    let mut values = Vec::with_capacity(g.vertex_count() as usize + 1);
    let mut cur = ctx.s() as i64;
    values.push(cur as u64);
    for idx in 0..g.vertex_count() {
        let v = order.word_at(space, idx);
        let mut delta = 0i64;
        g.for_each_neighbor(v, |u| {
            delta += if order.index(space, u) < idx { -1 } else { 1 };
        });
        if let Some(i) = corners.iter().position(|&c| c == v) {
            let i = i as u32;
            delta += ctx.phantom_cost(i, true) as i64 - ctx.phantom_cost(i, false) as i64;
        }
        cur += delta;
        values.push(cur as u64);
    }
    Ok(values)
}

/// Boundaries of the initial segments `{0..l-1}` of an explicit graph's
/// vertex indexing.
pub fn index_order_profile(g: &Graph) -> Vec<u64> {
    let mut values = Vec::with_capacity(g.vertex_count() + 1);
    let mut cur = 0i64;
    values.push(0);
    for v in 0..g.vertex_count() {
        for &u in g.neighbors(v) {
            cur += if (u as usize) < v { -1 } else { 1 };
        }
        values.push(cur as u64);
    }
    values
}

/// `Theta0` and `Theta1` for `m = 3`; their sum is the Lex profile.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RecursiveValue {
    pub theta0: u64,
    pub theta1: u64,
}

impl RecursiveValue {
    pub fn total(&self) -> u64 {
        self.theta0 + self.theta1
    }
}

fn pow3(n: u32) -> Result<u64> {
    3u64.checked_pow(n)
        .ok_or_else(|| Error::Overflow(format!("3^{n}")))
}

/// Exterior part: 0 at the ends, 1 within `3^(n-1)/2` of an end, 2 otherwise.
/// Thresholds are compared after doubling, so they are never attained.
pub fn theta0_m3(n: u32, ell: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::param("Theta0 needs n >= 1"));
    }
    let full = pow3(n)?;
    let sub = full / 3;
    if ell > full {
        return Err(Error::param(format!("ell={ell} exceeds 3^{n}")));
    }
    Ok(if ell == 0 || ell == full {
        0
    } else if 2 * ell < sub || 2 * ell > 2 * full - sub {
        1
    } else {
        2
    })
}

/// Interior part: `f(n-1, l mod 3^(n-1)) - 1`, or 0 when that residue is 0.
/// At `n = 0` only `l = 0` is accepted and gives 0.
pub fn theta1_m3(n: u32, ell: u64) -> Result<u64> {
    if n == 0 {
        return if ell == 0 {
            Ok(0)
        } else {
            Err(Error::param("Theta1(0, l) is only defined at l = 0"))
        };
    }
    let full = pow3(n)?;
    if ell > full {
        return Err(Error::param(format!("ell={ell} exceeds 3^{n}")));
    }
    let r = ell % (full / 3);
    if r == 0 {
        Ok(0)
    } else {
        Ok(profile_recursive_m3(n - 1, r)?.total() - 1)
    }
}

/// Lex profile of `S(n, 3)` via `Theta0 + Theta1`.
pub fn profile_recursive_m3(n: u32, ell: u64) -> Result<RecursiveValue> {
    Ok(RecursiveValue {
        theta0: theta0_m3(n, ell)?,
        theta1: theta1_m3(n, ell)?,
    })
}

/// Whole-table form of the recursion, built level by level from `n = 1`.
pub fn recursive_table_m3(n: u32) -> Result<ProfileTable> {
    let g = Sierpinski::new(n, 3)?;
    check_table_size(&g)?;
    let mut prev: Vec<u64> = vec![0, 2, 2, 0];
    let mut t0 = vec![0, 2, 2, 0];
    let mut t1 = vec![0; 4];
    for k in 2..=n {
        let full = pow3(k)?;
        let sub = full / 3;
        t0 = (0..=full).map(|ell| theta0_m3(k, ell)).collect::<Result<_>>()?;
        t1 = (0..=full)
            .map(|ell| {
                let r = ell % sub;
                if r == 0 {
                    0
                } else {
                    prev[r as usize] - 1
                }
            })
            .collect();
        prev = t0.iter().zip(&t1).map(|(a, b)| a + b).collect();
    }
    Ok(ProfileTable {
        theta0: Some(t0),
        theta1: Some(t1),
        ..ProfileTable::new(n, 3, prev)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Comparison {
    Inclusive,
    Strict,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum EmptySuffix {
    AllCorners,
    NoCorners,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum SelfCorner {
    Counted,
    Excluded,
}

/// One reading of the corner count `c_h` in the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ClosedFormConvention {
    pub comparison: Comparison,
    pub empty_suffix: EmptySuffix,
    pub self_corner: SelfCorner,
}

impl ClosedFormConvention {
    /// The reading that matches the direct scan.
    pub const RESOLVED: ClosedFormConvention = ClosedFormConvention {
        comparison: Comparison::Inclusive,
        empty_suffix: EmptySuffix::AllCorners,
        self_corner: SelfCorner::Excluded,
    };

    /// `1 + max{j : j^(n-h) <= suffix}`, which counts the partial copy's own corner.
    pub const LITERAL: ClosedFormConvention = ClosedFormConvention {
        comparison: Comparison::Inclusive,
        empty_suffix: EmptySuffix::AllCorners,
        self_corner: SelfCorner::Counted,
    };

    pub fn all() -> Vec<ClosedFormConvention> {
        let mut out = Vec::new();
        for comparison in [Comparison::Inclusive, Comparison::Strict] {
            for empty_suffix in [EmptySuffix::AllCorners, EmptySuffix::NoCorners] {
                for self_corner in [SelfCorner::Counted, SelfCorner::Excluded] {
                    out.push(ClosedFormConvention {
                        comparison,
                        empty_suffix,
                        self_corner,
                    });
                }
            }
        }
        out
    }
}

/// Closed-form Lex profile under the resolved convention.
pub fn profile_closed_form(n: u32, m: u32, ell: u64) -> Result<u64> {
    let v = profile_closed_form_with(n, m, ell, ClosedFormConvention::RESOLVED)?;
    Ok(v as u64)
}

/// Closed form under an arbitrary convention; other readings may even go negative.
pub fn profile_closed_form_with(n: u32, m: u32, ell: u64, conv: ClosedFormConvention) -> Result<i64> {
    let space = WordSpace::new(n, m)?;
    if ell > space.size() {
        return Err(Error::param(format!("ell={ell} exceeds {}", space.size())));
    }
    if ell == 0 || ell == space.size() {
        return Ok(0);
    }
    let digits = space.unpack(ell - 1);
    let m = m as i64;
    let mut total = 0i64;
    for h in 0..n as usize {
        let e = digits[h] as i64;
        let suffix = &digits[h + 1..];
        let corners = (0..m as u8)
            .filter(|&c| !(conv.self_corner == SelfCorner::Excluded && c as i64 == e))
            .filter(|&c| corner_counts(c, suffix, conv))
            .count() as i64;
        total += e * (m - e) + (corners - e).abs() - e;
    }
    Ok(total)
}

fn corner_counts(c: u8, suffix: &[u8], conv: ClosedFormConvention) -> bool {
    if suffix.is_empty() {
        return conv.empty_suffix == EmptySuffix::AllCorners;
    }
    match suffix.iter().find(|&&d| d != c) {
        None => conv.comparison == Comparison::Inclusive,
        Some(&d) => c < d,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s23_profile() {
        let t = lex_profile_table(2, 3).unwrap();
        assert_eq!(t.values, vec![0, 2, 3, 2, 3, 3, 2, 3, 2, 0]);
        for ell in 0..=9 {
            assert_eq!(lex_profile_direct(2, 3, ell).unwrap(), t.value(ell));
        }
        assert!(t.is_symmetric());
    }

    #[test]
    fn path_profile() {
        for n in 1..=8 {
            let t = lex_profile_table(n, 2).unwrap();
            let last = t.len() - 1;
            assert!(t.values[1..last].iter().all(|&v| v == 1));
        }
    }

    #[test]
    fn recursion_examples() {
        let a = profile_recursive_m3(2, 1).unwrap();
        assert_eq!((a.theta0, a.theta1, a.total()), (1, 1, 2));
        let b = profile_recursive_m3(2, 3).unwrap();
        assert_eq!((b.theta0, b.theta1, b.total()), (2, 0, 2));
        assert_eq!(profile_recursive_m3(4, 0).unwrap().total(), 0);
        assert!(theta1_m3(0, 1).is_err());
    }

    #[test]
    fn recursion_table_matches_pointwise() {
        let t = recursive_table_m3(4).unwrap();
        for ell in 0..=81 {
            let r = profile_recursive_m3(4, ell).unwrap();
            assert_eq!(t.value(ell), r.total());
            assert_eq!(t.theta0.as_ref().unwrap()[ell as usize], r.theta0);
        }
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(profile_closed_form(2, 3, 3).unwrap(), 2);
        assert_eq!(profile_closed_form(2, 3, 5).unwrap(), 3);
        assert_eq!(profile_closed_form_with(2, 3, 3, ClosedFormConvention::LITERAL).unwrap(), 4);
        for (n, m) in [(3, 3), (3, 4), (2, 5)] {
            for k in 1..n {
                assert_eq!(profile_closed_form(n, m, (m as u64).pow(k)).unwrap(), m as u64 - 1);
            }
        }
    }

    #[test]
    fn decorated_table_matches_pointwise() {
        use crate::eip::{decorated_boundary, lex_segment};
        let g = Sierpinski::new(2, 4).unwrap();
        for ctx in DecoratedContext::all(4) {
            let t = decorated_lex_profile_table(2, 4, &ctx).unwrap();
            for ell in 0..=16 {
                let s = lex_segment(ell, &PermutationOrder::identity(4), g.space()).unwrap();
                assert_eq!(t.value(ell), decorated_boundary(&g, &s, &ctx).unwrap());
            }
        }
    }

    #[test]
    fn csv_layout() {
        let t = recursive_table_m3(1).unwrap();
        assert_eq!(t.to_csv(), "ell,theta,theta0,theta1\n0,0,0,0\n1,2,2,0\n2,2,2,0\n3,0,0,0\n");
        let plain = lex_profile_table(1, 2).unwrap();
        assert_eq!(plain.to_csv(), "ell,theta\n0,0\n1,1\n2,0\n");
    }
}
