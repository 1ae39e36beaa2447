use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::{Graph, Sierpinski};

/// `S[n, m]`: `S(n, m)` with every edge that lies in no triangle contracted.
///
/// Classes are the connected components of the non-triangle edges. Each class
/// is named by its Lex-least member, and classes are indexed in that order.
#[derive(Debug, Clone)]
pub struct QuotientGraph {
    base: Sierpinski,
    graph: Graph,
    classes: Vec<Vec<u64>>,
    class_of: Vec<u32>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassInfo {
    pub index: usize,
    pub name: String,
    pub members: Vec<String>,
}

pub fn quotient_graph(n: u32, m: u32) -> Result<QuotientGraph> {
    if m < 3 {
        return Err(Error::param("S[n,m] needs m >= 3; S(n,2) has no triangles"));
    }
    let base = Sierpinski::new(n, m)?;
    let full = base.to_graph()?;
    let size = full.vertex_count();

    let mut parent: Vec<usize> = (0..size).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let in_triangle = |u: usize, v: usize| {
        full.neighbors(u)
            .iter()
            .any(|&w| w as usize != v && full.has_edge(v, w as usize))
    };
    let mut triangle_edges = Vec::new();
    for (u, v) in full.edges() {
        if in_triangle(u, v) {
            triangle_edges.push((u, v));
        } else {
            let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
            parent[ru.max(rv)] = ru.min(rv);
        }
    }

    // Roots are the least members, so scanning in index order yields classes
    // already sorted by representative.
    let mut class_of = vec![u32::MAX; size];
    let mut classes: Vec<Vec<u64>> = Vec::new();
    for v in 0..size {
        let r = find(&mut parent, v);
        if class_of[r] == u32::MAX {
            class_of[r] = classes.len() as u32;
            classes.push(Vec::new());
        }
        class_of[v] = class_of[r];
        classes[class_of[v] as usize].push(v as u64);
    }

    let space = base.space();
    let labels = classes.iter().map(|c| space.format(c[0])).collect();
    let edges = triangle_edges
        .into_iter()
        .map(|(u, v)| (class_of[u] as usize, class_of[v] as usize))
        .filter(|(a, b)| a != b);
    let graph = Graph::from_edges(classes.len(), edges, labels)?;
    Ok(QuotientGraph {
        base,
        graph,
        classes,
        class_of,
    })
}

impl QuotientGraph {
    pub fn base(&self) -> Sierpinski {
        self.base
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    /// Members of each class, in increasing packed order.
    pub fn classes(&self) -> &[Vec<u64>] {
        &self.classes
    }

    pub fn class_of(&self, v: u64) -> usize {
        self.class_of[v as usize] as usize
    }

    /// The Lex-least member of class `c`.
    pub fn representative(&self, c: usize) -> u64 {
        self.classes[c][0]
    }

    pub fn class_info(&self) -> Vec<ClassInfo> {
        let space = self.base.space();
        self.classes
            .iter()
            .enumerate()
            .map(|(index, members)| ClassInfo {
                index,
                name: space.format(members[0]),
                members: members.iter().map(|&v| space.format(v)).collect(),
            })
            .collect()
    }
}
