use crate::eip::{check_set, VertexSet};
use crate::error::{Error, Result};
use crate::graphs::Sierpinski;
use crate::steiner::TraceRecord;

/// `Stab_{ij}`: every orbit pair `{v, (ij)v}` with exactly one member in `s`
/// keeps the member in which `i` occurs before `j` (the chamber side).
pub fn stabilize(g: &Sierpinski, s: &VertexSet, i: u32, j: u32) -> Result<VertexSet> {
    check_set(g, s)?;
    if i >= j || j >= g.m() {
        return Err(Error::param(format!(
            "stabilization needs 0 <= i < j < m={}, got ({i},{j})",
            g.m()
        )));
    }
    let space = g.space();
    let mut out = s.clone();
    for v in s.iter() {
        if space.first_of(v, i, j) != Some(j) {
            continue;
        }
        let low = space.swap_digits(v, i, j);
        if !s.contains(low) {
            out.remove(v);
            out.insert(low);
        }
    }
    Ok(out)
}

/// True if `s` is fixed by every `Stab_{ij}`.
pub fn is_stable(g: &Sierpinski, s: &VertexSet) -> Result<bool> {
    for (i, j) in pairs(g.m()) {
        if stabilize(g, s, i, j)? != *s {
            return Ok(false);
        }
    }
    Ok(true)
}

fn pairs(m: u32) -> impl Iterator<Item = (u32, u32)> {
    (0..m).flat_map(move |i| (i + 1..m).map(move |j| (i, j)))
}

/// `Stab_inf`: applies `Stab_{ij}` for all `i < j` in lexicographic order,
/// cycling until a full pass changes nothing.
///
/// Each effective move replaces a word by a smaller packed word, so the pass
/// count is bounded by the set's total packed weight.
pub fn stabilize_fix(g: &Sierpinski, s: &VertexSet) -> Result<VertexSet> {
    run_fix(g, s, None)
}

/// [`stabilize_fix`] recording one trace record per effective application.
pub fn stabilize_fix_traced(g: &Sierpinski, s: &VertexSet) -> Result<(VertexSet, Vec<TraceRecord>)> {
    let mut trace = Vec::new();
    let out = run_fix(g, s, Some(&mut trace))?;
    Ok((out, trace))
}

fn run_fix(g: &Sierpinski, s: &VertexSet, mut trace: Option<&mut Vec<TraceRecord>>) -> Result<VertexSet> {
    check_set(g, s)?;
    let cap = s.iter().sum::<u64>() + 2;
    let mut cur = s.clone();
    let mut step = 0;
    for _ in 0..cap {
        let mut changed = false;
        for (i, j) in pairs(g.m()) {
            let next = stabilize(g, &cur, i, j)?;
            if next != cur {
                changed = true;
                cur = next;
                step += 1;
                if let Some(t) = trace.as_deref_mut() {
                    t.push(TraceRecord::plain(g, format!("stab({i},{j})"), step, &cur));
                }
            }
        }
        if !changed {
            return Ok(cur);
        }
    }
    Err(Error::Defect(format!(
        "stabilization of {s} did not settle within {cap} passes"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eip::{boundary, lex_segment, PermutationOrder};
    use crate::posets::StabOrder;

    fn set(g: &Sierpinski, spec: &str) -> VertexSet {
        VertexSet::parse(spec, g.space()).unwrap()
    }

    #[test]
    fn single_pair_moves_to_chamber_side() {
        let g = Sierpinski::new(1, 3).unwrap();
        assert_eq!(stabilize(&g, &set(&g, "1"), 0, 1).unwrap(), set(&g, "0"));
        assert_eq!(stabilize(&g, &set(&g, "0,1"), 0, 1).unwrap(), set(&g, "0,1"));
        assert_eq!(stabilize(&g, &set(&g, "2"), 0, 1).unwrap(), set(&g, "2"));
    }

    #[test]
    fn rejects_bad_pairs() {
        let g = Sierpinski::new(2, 3).unwrap();
        let s = set(&g, "01");
        assert!(stabilize(&g, &s, 1, 1).is_err());
        assert!(stabilize(&g, &s, 2, 1).is_err());
        assert!(stabilize(&g, &s, 0, 3).is_err());
    }

    #[test]
    fn permuted_lex_segments_follow_the_swap_rule() {
        let g = Sierpinski::new(3, 3).unwrap();
        let sp = g.space();
        for order in [[0u8, 1, 2], [1, 0, 2], [2, 1, 0], [1, 2, 0]] {
            let pi = PermutationOrder::new(order.to_vec()).unwrap();
            for ell in 0..=27 {
                let seg = lex_segment(ell, &pi, sp).unwrap();
                for (i, j) in pairs(3) {
                    let expect = if pi.precedes(i, j) {
                        seg.clone()
                    } else {
                        lex_segment(ell, &pi.swapped(i, j), sp).unwrap()
                    };
                    assert_eq!(stabilize(&g, &seg, i, j).unwrap(), expect, "{pi} {ell} ({i}{j})");
                }
            }
        }
    }

    #[test]
    fn fixed_points_are_exactly_the_ideals() {
        let g = Sierpinski::new(2, 3).unwrap();
        let order = StabOrder::build(2, 3).unwrap();
        for mask in 0u64..1 << 9 {
            let s = VertexSet::from_mask(g.space(), mask).unwrap();
            assert_eq!(is_stable(&g, &s).unwrap(), order.is_ideal(&s), "{s}");
            let f = stabilize_fix(&g, &s).unwrap();
            assert!(order.is_ideal(&f));
            assert_eq!(f.len(), s.len());
            assert!(boundary(&g, &f).unwrap() <= boundary(&g, &s).unwrap());
            let v = f.section_vector();
            assert!(v.windows(2).all(|w| w[0] >= w[1]), "{f}");
        }
    }

    #[test]
    fn traced_fix_agrees() {
        let g = Sierpinski::new(2, 4).unwrap();
        let s = set(&g, "33,32,13");
        let (f, trace) = stabilize_fix_traced(&g, &s).unwrap();
        assert_eq!(f, stabilize_fix(&g, &s).unwrap());
        assert!(!trace.is_empty());
        assert_eq!(trace.last().unwrap().sections, f.section_vector());
    }
}
