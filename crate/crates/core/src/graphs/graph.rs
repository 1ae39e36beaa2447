use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A simple undirected graph stored as sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<u32>>,
    labels: Vec<String>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges are merged; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
        labels: Vec<String>,
    ) -> Result<Self> {
        if labels.len() != vertex_count {
            return Err(Error::param(format!(
                "{} labels for {vertex_count} vertices",
                labels.len()
            )));
        }
        if vertex_count > u32::MAX as usize {
            return Err(Error::Overflow(format!("{vertex_count} vertices")));
        }
        let mut adjacency = vec![Vec::new(); vertex_count];
        for (u, v) in edges {
            if u >= vertex_count || v >= vertex_count {
                return Err(Error::param(format!("edge ({u},{v}) out of range")));
            }
            if u == v {
                return Err(Error::param(format!("self-loop at {u}")));
            }
            adjacency[u].push(v as u32);
            adjacency[v].push(u as u32);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adjacency,
            labels,
            edge_count: edge_count / 2,
        })
    }

    /// Labels are the decimal vertex indices.
    pub fn unlabeled(vertex_count: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let labels = (0..vertex_count).map(|v| v.to_string()).collect();
        Graph::from_edges(vertex_count, edges, labels)
    }

    pub fn complete(m: usize) -> Graph {
        let edges = (0..m).flat_map(|u| (u + 1..m).map(move |v| (u, v)));
        Graph::unlabeled(m, edges).expect("complete graph is simple")
    }

    pub fn path(len: usize) -> Graph {
        Graph::unlabeled(len, (1..len).map(|v| (v - 1, v))).expect("path is simple")
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in increasing order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for (u, list) in self.adjacency.iter().enumerate() {
            for &v in list {
                if u < v as usize {
                    out.push((u, v as usize));
                }
            }
        }
        out
    }

    /// Number of edges with exactly one endpoint in `set`.
    pub fn boundary(&self, set: &FixedBitSet) -> u64 {
        set.ones()
            .map(|u| {
                self.adjacency[u]
                    .iter()
                    .filter(|&&v| !set.contains(v as usize))
                    .count() as u64
            })
            .sum()
    }

    pub fn cut_edges(&self, set: &FixedBitSet) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = set
            .ones()
            .flat_map(|u| {
                self.adjacency[u]
                    .iter()
                    .filter(|&&v| !set.contains(v as usize))
                    .map(move |&v| (u.min(v as usize), u.max(v as usize)))
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Neighbour sets as bitmasks, available when there are at most 64 vertices.
    pub fn neighbor_masks(&self) -> Option<Vec<u64>> {
        if self.vertex_count() > 64 {
            return None;
        }
        Some(
            self.adjacency
                .iter()
                .map(|list| list.iter().fold(0u64, |acc, &v| acc | 1 << v))
                .collect(),
        )
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count() == 0 {
            return true;
        }
        let mut seen = FixedBitSet::with_capacity(self.vertex_count());
        let mut stack = vec![0usize];
        seen.insert(0);
        while let Some(u) = stack.pop() {
            for &v in &self.adjacency[u] {
                if !seen.put(v as usize) {
                    stack.push(v as usize);
                }
            }
        }
        seen.count_ones(..) == self.vertex_count()
    }

    /// True if vertex `i` is adjacent to `i+1` and nothing else is adjacent.
    pub fn is_path_in_index_order(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count + 1 == n.max(1) && (1..n).all(|v| self.has_edge(v - 1, v))
    }

    /// Cartesian product `self [] other`; vertex `(g, w)` has index `w * |self| + g`.
    pub fn cartesian_product(&self, other: &Graph) -> Result<Graph> {
        let ng = self.vertex_count();
        let nh = other.vertex_count();
        let total = ng
            .checked_mul(nh)
            .ok_or_else(|| Error::Overflow("product vertex count".into()))?;
        let mut edges = Vec::new();
        for w in 0..nh {
            for (g1, g2) in self.edges() {
                edges.push((w * ng + g1, w * ng + g2));
            }
        }
        for (w1, w2) in other.edges() {
            for g in 0..ng {
                edges.push((w1 * ng + g, w2 * ng + g));
            }
        }
        let mut labels = Vec::with_capacity(total);
        for w in 0..nh {
            for g in 0..ng {
                labels.push(format!("{}|{}", self.labels[g], other.labels[w]));
            }
        }
        Graph::from_edges(total, edges, labels)
    }

    /// Plain-text edge list: `#` header lines, then `u v` per line by label.
    pub fn edge_list_text(&self, header: &[String]) -> String {
        let mut out = String::new();
        for line in header {
            let _ = writeln!(out, "# {line}");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", self.labels[u], self.labels[v]);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_edges_merge() {
        let g = Graph::unlabeled(3, [(0, 1), (1, 0), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn rejects_loops_and_range() {
        assert!(Graph::unlabeled(3, [(1, 1)]).is_err());
        assert!(Graph::unlabeled(3, [(1, 3)]).is_err());
    }

    #[test]
    fn boundary_of_path_segment() {
        let p = Graph::path(5);
        let mut s = FixedBitSet::with_capacity(5);
        s.insert(1);
        s.insert(2);
        assert_eq!(p.boundary(&s), 2);
        assert_eq!(p.cut_edges(&s), vec![(0, 1), (2, 3)]);
        assert!(p.is_path_in_index_order());
    }

    #[test]
    fn product_of_edges_is_square() {
        let k2 = Graph::complete(2);
        let sq = k2.cartesian_product(&k2).unwrap();
        assert_eq!(sq.vertex_count(), 4);
        assert_eq!(sq.edge_count(), 4);
        assert!(sq.degree(0) == 2 && sq.is_connected());
        assert_eq!(sq.label(3), "1|1");
    }

    #[test]
    fn masks_only_for_small_graphs() {
        assert!(Graph::complete(65).neighbor_masks().is_none());
        let masks = Graph::complete(3).neighbor_masks().unwrap();
        assert_eq!(masks, vec![0b110, 0b101, 0b011]);
    }

    #[test]
    fn edge_list_round_trip() {
        let text = Graph::complete(3).edge_list_text(&["K3".into()]);
        let body: Vec<&str> = text.lines().filter(|l| !l.starts_with('#')).collect();
        assert_eq!(body, ["0 1", "0 2", "1 2"]);
    }
}
