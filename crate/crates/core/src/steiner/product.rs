use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::graphs::Graph;

/// Column sizes `l_w = |S ∩ (G x {w})|` of a set in `G x H`, where vertex
/// `(g, w)` has index `w * |G| + g` as in [`Graph::cartesian_product`].
pub fn column_sizes(s: &FixedBitSet, g_len: usize, h_len: usize) -> Result<Vec<usize>> {
    if s.len() != g_len * h_len {
        return Err(Error::param(format!(
            "set over {} vertices used with a product of {g_len} x {h_len}",
            s.len()
        )));
    }
    Ok((0..h_len)
        .map(|w| s.count_ones(w * g_len..(w + 1) * g_len))
        .collect())
}

fn check_numbering(eta: &[usize], g_len: usize) -> Result<()> {
    let mut seen = vec![false; g_len];
    if eta.len() != g_len || eta.iter().any(|&v| v >= g_len || std::mem::replace(&mut seen[v], true)) {
        return Err(Error::param(format!(
            "numbering {eta:?} is not a bijection onto 0..{g_len}"
        )));
    }
    Ok(())
}

/// `Comp_{eta, G x H}`: each column `G x {w}` is replaced by the first `l_w`
/// vertices of `G` in the numbering `eta` (`eta[k]` is the vertex ranked `k`).
pub fn product_compress(s: &FixedBitSet, g: &Graph, h: &Graph, eta: &[usize]) -> Result<FixedBitSet> {
    let n = g.vertex_count();
    check_numbering(eta, n)?;
    let sizes = column_sizes(s, n, h.vertex_count())?;
    let mut out = FixedBitSet::with_capacity(s.len());
    for (w, &l) in sizes.iter().enumerate() {
        for &v in &eta[..l] {
            out.insert(w * n + v);
        }
    }
    Ok(out)
}

/// `sum_w profile_G(l_w) + sum_{w1 w2 in E_H} |l_w1 - l_w2|`, a lower bound
/// on the boundary of any set in `G x H` with column sizes `l_w`.
pub fn product_lower_bound(s: &FixedBitSet, g_profile: &[u64], h: &Graph) -> Result<u64> {
    if g_profile.is_empty() {
        return Err(Error::param("empty profile"));
    }
    let g_len = g_profile.len() - 1;
    let sizes = column_sizes(s, g_len, h.vertex_count())?;
    let columns: u64 = sizes.iter().map(|&l| g_profile[l]).sum();
    let between: u64 = h
        .edges()
        .iter()
        .map(|&(a, b)| sizes[a].abs_diff(sizes[b]) as u64)
        .sum();
    Ok(columns + between)
}
