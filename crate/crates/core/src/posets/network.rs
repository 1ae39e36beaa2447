use std::collections::HashMap;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::posets::Poset;

/// Hasse diagram of the ideals of a poset, each ideal weighted by its edge
/// boundary in a graph on the same element set.
#[derive(Debug, Clone)]
pub struct DerivedNetwork {
    ideals: Vec<FixedBitSet>,
    weights: Vec<u64>,
    /// `(smaller, larger)` pairs differing in one element.
    arcs: Vec<(u32, u32)>,
    predecessors: Vec<Vec<u32>>,
    labels: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NetworkNode {
    pub index: usize,
    pub size: usize,
    pub weight: u64,
    pub members: Vec<String>,
}

impl DerivedNetwork {
    pub fn build(poset: &Poset, graph: &Graph, cap: u64) -> Result<Self> {
        if poset.len() != graph.vertex_count() {
            return Err(Error::param(format!(
                "poset on {} elements paired with a graph on {} vertices",
                poset.len(),
                graph.vertex_count()
            )));
        }
        let ideals = poset.enumerate_ideals(cap)?;
        let index: HashMap<&FixedBitSet, u32> =
            ideals.iter().enumerate().map(|(i, s)| (s, i as u32)).collect();
        let weights = ideals.iter().map(|s| graph.boundary(s)).collect();
        let mut arcs = Vec::new();
        let mut predecessors = vec![Vec::new(); ideals.len()];
        for (i, s) in ideals.iter().enumerate() {
            for x in 0..poset.len() {
                if s.contains(x) || !poset.lower_covers(x).iter().all(|&y| s.contains(y as usize)) {
                    continue;
                }
                let mut t = s.clone();
                t.insert(x);
                let j = index[&t];
                arcs.push((i as u32, j));
                predecessors[j as usize].push(i as u32);
            }
        }
        arcs.sort_unstable();
        for p in &mut predecessors {
            p.sort_unstable();
        }
        Ok(DerivedNetwork {
            ideals,
            weights,
            arcs,
            predecessors,
            labels: poset.labels().to_vec(),
        })
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn ideal(&self, i: usize) -> &FixedBitSet {
        &self.ideals[i]
    }

    pub fn weight(&self, i: usize) -> u64 {
        self.weights[i]
    }

    pub fn arcs(&self) -> &[(u32, u32)] {
        &self.arcs
    }

    pub fn node(&self, i: usize) -> NetworkNode {
        NetworkNode {
            index: i,
            size: self.ideals[i].count_ones(..),
            weight: self.weights[i],
            members: self.ideals[i].ones().map(|x| self.labels[x].clone()).collect(),
        }
    }

    /// Least weight among ideals of each size `0..=|P|`.
    pub fn min_weight_by_size(&self) -> Vec<u64> {
        let full = self.labels.len();
        let mut best = vec![u64::MAX; full + 1];
        for (s, &w) in self.ideals.iter().zip(&self.weights) {
            let k = s.count_ones(..);
            best[k] = best[k].min(w);
        }
        best
    }

    /// A chain `{} = I_0 < I_1 < ... < I_|P|` with `weight(I_k) = profile[k]`
    /// for every `k`, if one exists. Ties resolve to the lowest node index.
    pub fn optimal_chain(&self, profile: &[u64]) -> Option<Vec<usize>> {
        let full = self.labels.len();
        if profile.len() != full + 1 {
            return None;
        }
        let mut good = vec![false; self.len()];
        let mut back = vec![u32::MAX; self.len()];
        // Ideals are sorted by size, so predecessors are settled first.
        for i in 0..self.len() {
            let k = self.ideals[i].count_ones(..);
            if self.weights[i] != profile[k] {
                continue;
            }
            if k == 0 {
                good[i] = true;
            } else if let Some(&p) = self.predecessors[i].iter().find(|&&p| good[p as usize]) {
                good[i] = true;
                back[i] = p;
            }
        }
        let top = (0..self.len()).find(|&i| self.ideals[i].count_ones(..) == full && good[i])?;
        let mut chain = vec![top];
        let mut cur = top;
        while back[cur] != u32::MAX {
            cur = back[cur] as usize;
            chain.push(cur);
        }
        chain.reverse();
        Some(chain)
    }

    /// A maximal chain minimising the total weight of its nodes.
    pub fn min_total_weight_chain(&self) -> Vec<usize> {
        let mut cost = vec![u64::MAX; self.len()];
        let mut back = vec![u32::MAX; self.len()];
        for i in 0..self.len() {
            if self.ideals[i].count_ones(..) == 0 {
                cost[i] = self.weights[i];
                continue;
            }
            for &p in &self.predecessors[i] {
                let c = cost[p as usize].saturating_add(self.weights[i]);
                if c < cost[i] {
                    cost[i] = c;
                    back[i] = p;
                }
            }
        }
        let mut cur = self.len() - 1;
        let mut chain = vec![cur];
        while back[cur] != u32::MAX {
            cur = back[cur] as usize;
            chain.push(cur);
        }
        chain.reverse();
        chain
    }

    /// DOT with node labels `size/weight`; `highlight` nodes are drawn bold.
    pub fn to_dot(&self, name: &str, highlight: &[usize]) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{name}\" {{");
        let _ = writeln!(out, "  rankdir=BT;");
        for i in 0..self.len() {
            let style = if highlight.contains(&i) { ", style=bold" } else { "" };
            let _ = writeln!(
                out,
                "  n{i} [label=\"{}/{}\"{style}];",
                self.ideals[i].count_ones(..),
                self.weights[i]
            );
        }
        for (a, b) in &self.arcs {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }
}
