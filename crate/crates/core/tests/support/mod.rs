//! Shared fixtures for the integration suites: a definition-level coloring
//! oracle and alternative enumeration strategies. Everything here is kept
//! deliberately naive and structurally unlike the library code it checks.
#![allow(dead_code)]

use std::collections::HashSet;

use maxkec_core::MultiGraph;

/// ν_k by exhaustive assignment: every edge is either left uncolored or
/// given one of the k colors, with properness re-derived from scratch at
/// each step. Edges are decided in reverse index order and colors tried
/// highest first — orderings deliberately unlike the solver's — and there is
/// no symmetry breaking; the only pruning is the trivial count bound.
pub fn nu_exhaustive(g: &MultiGraph, k: u8) -> usize {
    fn proper_at(g: &MultiGraph, assignment: &[u8], e: usize, color: u8) -> bool {
        let (u, v) = g.endpoints(e);
        g.incident_edges(u)
            .iter()
            .chain(g.incident_edges(v))
            .all(|&f| f == e || assignment[f] != color)
    }
    fn go(
        g: &MultiGraph,
        k: u8,
        assignment: &mut [u8],
        undecided: usize,
        colored: usize,
        best: &mut usize,
    ) {
        if undecided == 0 {
            *best = (*best).max(colored);
            return;
        }
        if colored + undecided <= *best {
            return;
        }
        let e = undecided - 1;
        for color in (1..=k).rev() {
            if proper_at(g, assignment, e, color) {
                assignment[e] = color;
                go(g, k, assignment, e, colored + 1, best);
                assignment[e] = 0;
            }
        }
        go(g, k, assignment, e, colored, best);
    }
    let mut assignment = vec![0u8; g.edge_count()];
    let mut best = 0;
    go(g, k, &mut assignment, g.edge_count(), 0, &mut best);
    best
}

/// Enumeration cross-check, strategy B: plain row-major edge-multiplicity
/// assignment with no labeling restrictions, filtered for connectivity and
/// deduplicated up to isomorphism. Slower than the production enumerator by
/// orders of magnitude but with no search-space pruning to get wrong.
pub fn enumerate_by_plain_multiplicity(n: usize) -> Vec<MultiGraph> {
    use maxkec_core::iso::{are_isomorphic, invariant_hash};
    use std::collections::HashMap;

    fn fill(
        n: usize,
        i: usize,
        j: usize,
        rem: &mut [u8],
        edges: &mut Vec<(usize, usize)>,
        out: &mut impl FnMut(&[(usize, usize)]),
    ) {
        if i == n {
            out(edges);
            return;
        }
        if j == n {
            if rem[i] == 0 {
                fill(n, i + 1, i + 2, rem, edges, out);
            }
            return;
        }
        let capacity: u8 = rem[j..n].iter().sum();
        if rem[i] > capacity {
            return;
        }
        let top = rem[i].min(rem[j]);
        for t in 0..=top {
            if t > 0 {
                rem[i] -= 1;
                rem[j] -= 1;
                edges.push((i, j));
            }
            fill(n, i, j + 1, rem, edges, out);
        }
        rem[i] += top;
        rem[j] += top;
        edges.truncate(edges.len() - top as usize);
    }

    if n == 0 || !n.is_multiple_of(2) {
        return Vec::new();
    }
    let mut out: Vec<MultiGraph> = Vec::new();
    let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut rem = vec![3u8; n];
    let mut edges = Vec::new();
    fill(n, 0, 1, &mut rem, &mut edges, &mut |edges| {
        let g = MultiGraph::build(n, edges).unwrap();
        if !g.is_connected() {
            return;
        }
        let h = invariant_hash(&g);
        let bucket = buckets.entry(h).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&out[i], &g)) {
            return;
        }
        bucket.push(out.len());
        out.push(g);
    });
    out
}

/// Enumeration cross-check, strategy C: literal stub pairings. Each vertex
/// contributes three numbered stubs; perfect pairings of the stub set that
/// avoid same-vertex pairs are exactly the loopless cubic labeled
/// multigraphs. Deduplication is by minimum-over-all-permutations of the
/// multiplicity triangle, so this count shares nothing with the library's
/// isomorphism code. Practical for n ≤ 6.
pub fn count_by_stub_pairing(n: usize) -> usize {
    if n == 0 || !n.is_multiple_of(2) {
        return 0;
    }
    let stubs = 3 * n;
    let mut paired = vec![false; stubs];
    let mut mult = vec![vec![0u8; n]; n];
    let mut labeled: HashSet<Vec<u8>> = HashSet::new();
    collect_pairings(n, stubs, &mut paired, &mut mult, &mut labeled);

    let perms = permutations(n);
    let mut classes: HashSet<Vec<u8>> = HashSet::new();
    for tri in labeled {
        classes.insert(min_triangle(n, &tri, &perms));
    }
    classes.len()
}

fn collect_pairings(
    n: usize,
    stubs: usize,
    paired: &mut Vec<bool>,
    mult: &mut Vec<Vec<u8>>,
    labeled: &mut HashSet<Vec<u8>>,
) {
    let Some(s) = (0..stubs).find(|&s| !paired[s]) else {
        if connected_mult(n, mult) {
            labeled.insert(triangle_of(n, mult));
        }
        return;
    };
    paired[s] = true;
    for t in s + 1..stubs {
        if paired[t] || t / 3 == s / 3 {
            continue;
        }
        paired[t] = true;
        mult[s / 3][t / 3] += 1;
        mult[t / 3][s / 3] += 1;
        collect_pairings(n, stubs, paired, mult, labeled);
        mult[s / 3][t / 3] -= 1;
        mult[t / 3][s / 3] -= 1;
        paired[t] = false;
    }
    paired[s] = false;
}

fn connected_mult(n: usize, mult: &[Vec<u8>]) -> bool {
    let mut seen = vec![false; n];
    let mut stack = vec![0usize];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if mult[v][w] > 0 && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen.into_iter().all(|b| b)
}

fn triangle_of(n: usize, mult: &[Vec<u8>]) -> Vec<u8> {
    let mut tri = Vec::with_capacity(n * (n - 1) / 2);
    for (i, row) in mult.iter().enumerate() {
        tri.extend_from_slice(&row[i + 1..]);
    }
    tri
}

fn min_triangle(n: usize, tri: &[u8], perms: &[Vec<usize>]) -> Vec<u8> {
    let idx = |i: usize, j: usize| -> usize {
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        a * n - a * (a + 1) / 2 + (b - a - 1)
    };
    let mut best: Option<Vec<u8>> = None;
    for p in perms {
        let mut cand = Vec::with_capacity(tri.len());
        for i in 0..n {
            for j in i + 1..n {
                cand.push(tri[idx(p[i], p[j])]);
            }
        }
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..n).collect();
    heap_permute(n, &mut cur, &mut out);
    out
}

fn heap_permute(k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(cur.clone());
        return;
    }
    for i in 0..k {
        heap_permute(k - 1, cur, out);
        if k.is_multiple_of(2) {
            cur.swap(i, k - 1);
        } else {
            cur.swap(0, k - 1);
        }
    }
}
