use sierpinski_eip::graphs::{embed, hamming, quotient_graph, GraphSpec};
use sierpinski_eip::{Sierpinski, VertexWord, WordSpace};

/// The edge rule read literally: a common prefix, then `u_h != v_h` with
/// `u_j = v_h` and `v_j = u_h` for every later position.
fn literal_edge(u: &[u8], v: &[u8]) -> bool {
    (0..u.len()).any(|h| {
        u[..h] == v[..h] && u[h] != v[h] && (h + 1..u.len()).all(|j| u[j] == v[h] && v[j] == u[h])
    })
}

#[test]
fn edge_rule_matches_literal_reading() {
    for n in 1..=3 {
        for m in 2..=4 {
            let g = Sierpinski::new(n, m).unwrap();
            let space = g.space();
            for a in 0..space.size() {
                for b in 0..space.size() {
                    if a == b {
                        continue;
                    }
                    let (u, v) = (space.unpack(a), space.unpack(b));
                    assert_eq!(g.is_edge(a, b), literal_edge(&u, &v), "S({n},{m}) {u:?} {v:?}");
                }
            }
        }
    }
}

#[test]
fn degrees() {
    let g = Sierpinski::new(3, 4).unwrap();
    let corners = g.corners();
    for v in 0..g.vertex_count() {
        let want = if corners.contains(&v) { 3 } else { 4 };
        assert_eq!(g.degree(v), want);
    }
}

#[test]
fn embedding_sums() {
    let space = WordSpace::new(4, 3).unwrap();
    for v in 0..space.size() {
        let w = VertexWord::new(space.unpack(v), 3).unwrap();
        assert_eq!(embed(&w).unwrap().sum(), (1 << 4) - 1);
    }
}

#[test]
fn gasket_vertex_counts() {
    for n in 1..=5 {
        let q = quotient_graph(n, 3).unwrap();
        assert_eq!(q.graph().vertex_count() as u64, (3u64.pow(n) + 3) / 2, "SG{n}");
        assert!(q.graph().is_connected());
        assert_eq!(GraphSpec::gasket(n).unwrap().vertex_count().unwrap(), (3u64.pow(n) + 3) / 2);
    }
}

#[test]
fn hamming_graphs() {
    let k = hamming(2, 3).unwrap();
    assert_eq!((k.vertex_count(), k.edge_count()), (9, 18));
    assert!((0..9).all(|v| k.degree(v) == 4));
}
