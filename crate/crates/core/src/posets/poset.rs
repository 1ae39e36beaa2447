use std::collections::VecDeque;
use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

/// A finite poset given by generating arcs `a < b`, stored component-wise.
///
/// Reachability is kept as one bitset per element over the element's own
/// connected component, so memory grows with the sum of squared component
/// sizes rather than with `|P|^2`.
#[derive(Debug, Clone)]
pub struct Poset {
    labels: Vec<String>,
    component_of: Vec<u32>,
    local_index: Vec<u32>,
    components: Vec<Vec<u32>>,
    /// `above[x]`: elements strictly above `x`, as local indices in its component.
    above: Vec<FixedBitSet>,
    lower_covers: Vec<Vec<u32>>,
    upper_covers: Vec<Vec<u32>>,
    linear_extension: Vec<u32>,
}

impl Poset {
    /// Builds the order generated by `arcs` (`(a, b)` meaning `a < b`).
    /// Fails if the arcs contain a cycle.
    pub fn from_generators(labels: Vec<String>, arcs: &[(u32, u32)]) -> Result<Self> {
        let len = labels.len();
        let mut succ = vec![Vec::new(); len];
        let mut indegree = vec![0u32; len];
        let mut parent: Vec<usize> = (0..len).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for &(a, b) in arcs {
            let (a, b) = (a as usize, b as usize);
            if a >= len || b >= len || a == b {
                return Err(Error::param(format!("bad order arc ({a},{b})")));
            }
            succ[a].push(b as u32);
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra.max(rb)] = ra.min(rb);
        }
        for list in &mut succ {
            list.sort_unstable();
            list.dedup();
            for &b in list.iter() {
                indegree[b as usize] += 1;
            }
        }

        // Kahn's algorithm, smallest index first, for a deterministic extension.
        let mut ready: std::collections::BTreeSet<u32> =
            (0..len as u32).filter(|&x| indegree[x as usize] == 0).collect();
        let mut linear_extension = Vec::with_capacity(len);
        while let Some(x) = ready.pop_first() {
            linear_extension.push(x);
            for &y in &succ[x as usize] {
                indegree[y as usize] -= 1;
                if indegree[y as usize] == 0 {
                    ready.insert(y);
                }
            }
        }
        if linear_extension.len() != len {
            return Err(Error::Defect("order arcs contain a cycle".into()));
        }

        let mut component_of = vec![u32::MAX; len];
        let mut local_index = vec![0u32; len];
        let mut components: Vec<Vec<u32>> = Vec::new();
        let mut root_comp = vec![u32::MAX; len];
        for x in 0..len {
            let r = find(&mut parent, x);
            if root_comp[r] == u32::MAX {
                root_comp[r] = components.len() as u32;
                components.push(Vec::new());
            }
            let c = root_comp[r];
            component_of[x] = c;
            local_index[x] = components[c as usize].len() as u32;
            components[c as usize].push(x as u32);
        }

        // Strict up-sets in reverse linear order.
        let mut above: Vec<FixedBitSet> = (0..len)
            .map(|x| FixedBitSet::with_capacity(components[component_of[x] as usize].len()))
            .collect();
        for &x in linear_extension.iter().rev() {
            let mut acc = FixedBitSet::with_capacity(above[x as usize].len());
            for &y in &succ[x as usize] {
                acc.insert(local_index[y as usize] as usize);
                acc.union_with(&above[y as usize]);
            }
            above[x as usize] = acc;
        }

        // A generator target is a cover unless reachable through another target.
        let mut lower_covers = vec![Vec::new(); len];
        let mut upper_covers = vec![Vec::new(); len];
        for x in 0..len {
            for &y in &succ[x] {
                let ly = local_index[y as usize] as usize;
                let redundant = succ[x]
                    .iter()
                    .any(|&z| z != y && above[z as usize].contains(ly));
                if !redundant {
                    upper_covers[x].push(y);
                    lower_covers[y as usize].push(x as u32);
                }
            }
        }
        for list in &mut lower_covers {
            list.sort_unstable();
        }

        Ok(Poset {
            labels,
            component_of,
            local_index,
            components,
            above,
            lower_covers,
            upper_covers,
            linear_extension,
        })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `x <= y`.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        x == y
            || (self.component_of[x] == self.component_of[y]
                && self.above[x].contains(self.local_index[y] as usize))
    }

    /// Covering pairs `(lower, upper)`, sorted.
    pub fn covers(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = self
            .upper_covers
            .iter()
            .enumerate()
            .flat_map(|(x, ups)| ups.iter().map(move |&y| (x as u32, y)))
            .collect();
        out.sort_unstable();
        out
    }

    pub fn lower_covers(&self, x: usize) -> &[u32] {
        &self.lower_covers[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[u32] {
        &self.upper_covers[x]
    }

    /// Connected components of the Hasse diagram, each in increasing order.
    pub fn components(&self) -> &[Vec<u32>] {
        &self.components
    }

    pub fn component_of(&self, x: usize) -> usize {
        self.component_of[x] as usize
    }

    pub fn minimal_elements(&self) -> Vec<u32> {
        (0..self.len() as u32)
            .filter(|&x| self.lower_covers[x as usize].is_empty())
            .collect()
    }

    pub fn linear_extension(&self) -> &[u32] {
        &self.linear_extension
    }

    /// Down-closed: every lower cover of a member is a member.
    pub fn is_ideal(&self, set: &FixedBitSet) -> bool {
        set.ones()
            .all(|x| self.lower_covers[x].iter().all(|&y| set.contains(y as usize)))
    }

    /// `x` and everything below it.
    pub fn principal_ideal(&self, x: usize) -> Vec<u32> {
        let c = self.component_of[x] as usize;
        self.components[c]
            .iter()
            .copied()
            .filter(|&y| self.leq(y as usize, x))
            .collect()
    }

    /// The induced subposet on `elements` (given in any order; output
    /// indices follow the sorted order).
    pub fn restrict(&self, elements: &[u32]) -> Result<(Poset, Vec<u32>)> {
        let mut elems = elements.to_vec();
        elems.sort_unstable();
        elems.dedup();
        let mut pos = std::collections::HashMap::new();
        for (i, &x) in elems.iter().enumerate() {
            pos.insert(x, i as u32);
        }
        let mut arcs = Vec::new();
        for (i, &x) in elems.iter().enumerate() {
            for (j, &y) in elems.iter().enumerate() {
                if i != j && self.leq(x as usize, y as usize) {
                    arcs.push((i as u32, j as u32));
                }
            }
        }
        let labels = elems.iter().map(|&x| self.labels[x as usize].clone()).collect();
        Ok((Poset::from_generators(labels, &arcs)?, elems))
    }

    /// Every ideal, each exactly once, sorted by size and then by member list.
    /// Fails with the partial count once more than `cap` ideals are found.
    pub fn enumerate_ideals(&self, cap: u64) -> Result<Vec<FixedBitSet>> {
        let mut out = Vec::new();
        let mut current = FixedBitSet::with_capacity(self.len());
        self.extend_ideals(0, &mut current, cap, &mut |s| out.push(s.clone()))?;
        out.sort_by(|a, b| {
            a.count_ones(..)
                .cmp(&b.count_ones(..))
                .then_with(|| a.ones().cmp(b.ones()))
        });
        Ok(out)
    }

    /// Ideal count, with the same cap behaviour; components are counted
    /// separately and multiplied.
    pub fn count_ideals(&self, cap: u64) -> Result<u64> {
        let mut total: u64 = 1;
        for comp in &self.components {
            let (sub, _) = self.restrict(comp)?;
            let mut count = 0u64;
            let mut current = FixedBitSet::with_capacity(sub.len());
            sub.extend_ideals(0, &mut current, cap, &mut |_| count += 1)?;
            total = total
                .checked_mul(count)
                .filter(|&t| t <= cap)
                .ok_or_else(|| Error::budget("poset ideals", total.saturating_mul(count), cap, total))?;
        }
        Ok(total)
    }

    /// Depth-first include/exclude over the linear extension. Including an
    /// element requires its lower covers, which precede it.
    fn extend_ideals(
        &self,
        pos: usize,
        current: &mut FixedBitSet,
        cap: u64,
        emit: &mut dyn FnMut(&FixedBitSet),
    ) -> Result<u64> {
        let mut emitted = 0u64;
        self.dfs(pos, current, cap, emit, &mut emitted)?;
        Ok(emitted)
    }

    fn dfs(
        &self,
        pos: usize,
        current: &mut FixedBitSet,
        cap: u64,
        emit: &mut dyn FnMut(&FixedBitSet),
        emitted: &mut u64,
    ) -> Result<()> {
        if pos == self.linear_extension.len() {
            *emitted += 1;
            if *emitted > cap {
                return Err(Error::budget("poset ideals", *emitted, cap, cap));
            }
            emit(current);
            return Ok(());
        }
        let x = self.linear_extension[pos] as usize;
        self.dfs(pos + 1, current, cap, emit, emitted)?;
        if self.lower_covers[x].iter().all(|&y| current.contains(y as usize)) {
            current.insert(x);
            self.dfs(pos + 1, current, cap, emit, emitted)?;
            current.set(x, false);
        }
        Ok(())
    }

    /// Hasse diagram in DOT, bottom to top.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "digraph \"{name}\" {{");
        let _ = writeln!(out, "  rankdir=BT;");
        for (x, l) in self.labels.iter().enumerate() {
            let _ = writeln!(out, "  n{x} [label=\"{l}\"];");
        }
        for (a, b) in self.covers() {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    /// Elements reachable upward from `start` by covers, in BFS order.
    pub fn up_closure(&self, start: &[u32]) -> Vec<u32> {
        let mut seen = FixedBitSet::with_capacity(self.len());
        let mut queue: VecDeque<u32> = start.iter().copied().collect();
        for &s in start {
            seen.insert(s as usize);
        }
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            out.push(x);
            for &y in &self.upper_covers[x as usize] {
                if !seen.put(y as usize) {
                    queue.push_back(y);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(n: usize) -> Vec<String> {
        (0..n).map(|i| i.to_string()).collect()
    }

    #[test]
    fn chain_has_k_plus_one_ideals() {
        for k in 1..8u32 {
            let arcs: Vec<(u32, u32)> = (1..k).map(|i| (i - 1, i)).collect();
            let p = Poset::from_generators(labels(k as usize), &arcs).unwrap();
            assert_eq!(p.enumerate_ideals(1000).unwrap().len() as u32, k + 1);
            assert_eq!(p.count_ideals(1000).unwrap() as u32, k + 1);
        }
    }

    #[test]
    fn transitive_arcs_are_not_covers() {
        let p = Poset::from_generators(labels(3), &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        assert!(p.leq(0, 2) && !p.leq(2, 0));
    }

    #[test]
    fn antichain_ideals_and_cap() {
        let p = Poset::from_generators(labels(4), &[]).unwrap();
        assert_eq!(p.components().len(), 4);
        assert_eq!(p.enumerate_ideals(16).unwrap().len(), 16);
        match p.enumerate_ideals(10) {
            Err(Error::BudgetExceeded { .. }) => {}
            other => panic!("expected budget error, got {other:?}"),
        }
        assert!(p.count_ideals(10).is_err());
    }

    #[test]
    fn cycles_rejected() {
        assert!(Poset::from_generators(labels(2), &[(0, 1), (1, 0)]).is_err());
    }

    #[test]
    fn ideals_sorted_and_down_closed() {
        // Diamond 0 < 1, 2 < 3.
        let p = Poset::from_generators(labels(4), &[(0, 1), (0, 2), (1, 3), (2, 3)]).unwrap();
        let ideals = p.enumerate_ideals(100).unwrap();
        let lists: Vec<Vec<usize>> = ideals.iter().map(|s| s.ones().collect()).collect();
        assert_eq!(lists, vec![vec![], vec![0], vec![0, 1], vec![0, 2], vec![0, 1, 2], vec![0, 1, 2, 3]]);
        assert!(ideals.iter().all(|s| p.is_ideal(s)));
        assert_eq!(p.principal_ideal(1), vec![0, 1]);
    }
}
