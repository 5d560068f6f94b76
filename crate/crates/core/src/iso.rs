//! Isomorphism tools for small multigraphs: a 64-bit invariant hash based on
//! iterated neighborhood refinement, and an exact backtracking isomorphism
//! test that uses the refinement colors for pruning.
//!
//! The hash is a true invariant (equal on isomorphic graphs); collisions
//! between non-isomorphic graphs are possible and are always resolved by
//! [`are_isomorphic`]. Both are built for graphs on ≤ ~20 vertices.

use crate::graph::{MultiGraph, VertexId};

/// splitmix64 finalizer; fixed for all time so hashes are stable across runs.
pub(crate) fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

fn combine(seed: u64, value: u64) -> u64 {
    mix(seed ^ value.wrapping_mul(0xff51afd7ed558ccd))
}

/// Stable per-vertex colors after iterated refinement. Round zero colors by
/// degree; each round folds in the sorted multiset of (neighbor color,
/// multiplicity) pairs. Runs n rounds, which is enough to stabilize.
fn refinement_colors(g: &MultiGraph) -> Vec<u64> {
    let n = g.vertex_count();
    let mut colors: Vec<u64> = (0..n).map(|v| mix(g.degree(v) as u64)).collect();
    for _ in 0..n {
        let mut next = Vec::with_capacity(n);
        for v in 0..n {
            let mut sig: Vec<(u64, u64)> = Vec::with_capacity(g.degree(v));
            for &e in g.incident_edges(v) {
                let w = g.other_endpoint(e, v);
                sig.push((colors[w], g.multiplicity(v, w) as u64));
            }
            sig.sort_unstable();
            let mut h = combine(colors[v], 0x5ca1ab1e);
            for (c, m) in sig {
                h = combine(combine(h, c), m);
            }
            next.push(h);
        }
        colors = next;
    }
    colors
}

/// 64-bit isomorphism invariant. Folds in the vertex count, edge count,
/// sorted refined vertex colors, and sorted edge signatures, so graphs of
/// different sizes (K4 vs K_{3,3}) can never collide.
pub fn invariant_hash(g: &MultiGraph) -> u64 {
    let colors = refinement_colors(g);
    let mut sorted = colors.clone();
    sorted.sort_unstable();
    let mut h = combine(mix(g.vertex_count() as u64), mix(g.edge_count() as u64));
    for c in &sorted {
        h = combine(h, *c);
    }
    let mut edge_sigs: Vec<(u64, u64)> = g
        .edges()
        .iter()
        .map(|&(a, b)| {
            let (x, y) = (colors[a].min(colors[b]), colors[a].max(colors[b]));
            (x, y)
        })
        .collect();
    edge_sigs.sort_unstable();
    for (x, y) in edge_sigs {
        h = combine(h, combine(x, y));
    }
    h
}

/// Exact isomorphism test preserving edge multiplicities. Backtracks over
/// vertex maps, restricted to refinement color classes; intended for n ≤ 14.
pub fn are_isomorphic(a: &MultiGraph, b: &MultiGraph) -> bool {
    if a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() {
        return false;
    }
    let n = a.vertex_count();
    if n == 0 {
        return true;
    }
    let ca = refinement_colors(a);
    let cb = refinement_colors(b);
    let mut sa = ca.clone();
    let mut sb = cb.clone();
    sa.sort_unstable();
    sb.sort_unstable();
    if sa != sb {
        return false;
    }

    // Map vertices of `a` in order of rarest color class first: fewer
    // candidates near the root keeps the search shallow.
    let mut class_size = std::collections::HashMap::new();
    for &c in &ca {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&ca[v]], v));

    let mut mapping: Vec<Option<VertexId>> = vec![None; n];
    let mut used = vec![false; n];

    #[allow(clippy::too_many_arguments)]
    fn extend(
        a: &MultiGraph,
        b: &MultiGraph,
        ca: &[u64],
        cb: &[u64],
        order: &[VertexId],
        depth: usize,
        mapping: &mut [Option<VertexId>],
        used: &mut [bool],
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        for cand in 0..b.vertex_count() {
            if used[cand] || cb[cand] != ca[v] {
                continue;
            }
            // Multiplicities to every already-mapped vertex must agree,
            // including zero (non-adjacency).
            let ok = order[..depth].iter().all(|&w| {
                let img = mapping[w].unwrap();
                a.multiplicity(v, w) == b.multiplicity(cand, img)
            });
            if ok {
                mapping[v] = Some(cand);
                used[cand] = true;
                if extend(a, b, ca, cb, order, depth + 1, mapping, used) {
                    return true;
                }
                mapping[v] = None;
                used[cand] = false;
            }
        }
        false
    }

    extend(a, b, &ca, &cb, &order, 0, &mut mapping, &mut used)
}
