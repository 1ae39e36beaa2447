use std::collections::HashMap;

use serde::Serialize;

use crate::error::Result;
use crate::graphs::Graph;
use crate::oracle::gray::SweepGraph;
use crate::oracle::solve::sweep_profile;
use crate::oracle::SearchBudget;

/// Largest number of sets listed per level in a refutation certificate.
const CERTIFICATE_LIST: usize = 64;

/// Outcome of the nested-solutions search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NestedOutcome {
    pub exists: bool,
    pub profile: Vec<u64>,
    /// Number of optimal sets of each size.
    pub optimal_counts: Vec<u64>,
    /// Optimal sets of each size reachable from the empty set through
    /// optimal sets, one vertex at a time.
    pub reachable_counts: Vec<u64>,
    /// Vertex labels in insertion order, when a chain exists.
    pub chain: Option<Vec<String>>,
    pub certificate: Option<Refutation>,
}

/// The first size with no reachable optimal set, and the sets that show it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Refutation {
    pub level: usize,
    /// Reachable optimal sets one size below `level` (at most 64 listed).
    pub reachable_below: Vec<Vec<String>>,
    /// Optimal sets of size `level` (at most 64 listed); none contains any
    /// set of `reachable_below`.
    pub optimal_at_level: Vec<Vec<String>>,
}

fn labels(g: &Graph, mask: u64) -> Vec<String> {
    (0..g.vertex_count())
        .filter(|&v| mask >> v & 1 == 1)
        .map(|v| g.label(v).to_string())
        .collect()
}

/// Decides whether `g` has nested solutions: a chain `S_0 < S_1 < ... <
/// S_|V|` of optimal sets. Two sweeps: one for the profile, one collecting
/// every optimal set; then reachability level by level.
pub fn nested_solutions_exists(g: &Graph, budget: &SearchBudget) -> Result<NestedOutcome> {
    let sg = SweepGraph::new(g, None)?;
    let profile = sweep_profile(&sg, budget)?.values;
    let len = g.vertex_count();
    let target: Vec<i64> = profile.iter().map(|&v| v as i64).collect();
    let mut optimal = sg.sweep(
        budget,
        || vec![Vec::new(); len + 1],
        |s: &mut Vec<Vec<u64>>, mask, pop, b| {
            if b == target[pop as usize] {
                s[pop as usize].push(mask);
            }
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                x.extend(y);
            }
            a
        },
    )?;
    for level in &mut optimal {
        level.sort_unstable();
    }
    let optimal_counts: Vec<u64> = optimal.iter().map(|l| l.len() as u64).collect();
    // parent[level][mask] = predecessor mask
    let mut parents: Vec<HashMap<u64, u64>> = vec![HashMap::new(); len + 1];
    parents[0].insert(0, 0);
    let mut reachable_counts = vec![0u64; len + 1];
    reachable_counts[0] = 1;
    for level in 1..=len {
        let (below, here) = parents.split_at_mut(level);
        let prev = &below[level - 1];
        for &mask in &optimal[level] {
            let mut rest = mask;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                if prev.contains_key(&(mask ^ bit)) {
                    here[0].insert(mask, mask ^ bit);
                    break;
                }
            }
        }
        reachable_counts[level] = here[0].len() as u64;
        if here[0].is_empty() {
            let mut reach: Vec<u64> = prev.keys().copied().collect();
            reach.sort_unstable();
            let certificate = Refutation {
                level,
                reachable_below: reach.iter().take(CERTIFICATE_LIST).map(|&m| labels(g, m)).collect(),
                optimal_at_level: optimal[level]
                    .iter()
                    .take(CERTIFICATE_LIST)
                    .map(|&m| labels(g, m))
                    .collect(),
            };
            return Ok(NestedOutcome {
                exists: false,
                profile,
                optimal_counts,
                reachable_counts,
                chain: None,
                certificate: Some(certificate),
            });
        }
    }
    let mut order = Vec::with_capacity(len);
    let mut cur = *parents[len].keys().next().expect("full set reached");
    for level in (1..=len).rev() {
        let prev = parents[level][&cur];
        order.push(g.label((cur ^ prev).trailing_zeros() as usize).to_string());
        cur = prev;
    }
    order.reverse();
    Ok(NestedOutcome {
        exists: true,
        profile,
        optimal_counts,
        reachable_counts,
        chain: Some(order),
        certificate: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{quotient_graph, Sierpinski};

    #[test]
    fn gasket_two_has_a_chain() {
        let q = quotient_graph(2, 3).unwrap();
        let out = nested_solutions_exists(q.graph(), &SearchBudget::default()).unwrap();
        assert!(out.exists);
        assert_eq!(out.chain.as_ref().unwrap().len(), 6);
    }

    #[test]
    fn gasket_three_has_none() {
        let q = quotient_graph(3, 3).unwrap();
        let out = nested_solutions_exists(q.graph(), &SearchBudget::default()).unwrap();
        assert!(!out.exists);
        let cert = out.certificate.unwrap();
        assert!(cert.level > 0 && !cert.optimal_at_level.is_empty());
    }

    #[test]
    fn paths_are_nested() {
        for n in 1..=4 {
            let g = Sierpinski::new(n, 2).unwrap().to_graph().unwrap();
            assert!(nested_solutions_exists(&g, &SearchBudget::default()).unwrap().exists);
        }
    }
}
