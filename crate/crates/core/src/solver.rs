//! Exact maximum k-edge-colorable subgraph search, k ≤ 3.
//!
//! A single branch-and-bound core runs in three modes over the edges in id
//! order: optimal value, lexicographically least optimal witness, and
//! exhaustive enumeration of the uncolored sets of all maximum colorings.
//! Color symmetry is broken by restricted growth (an edge may introduce at
//! most one color beyond those already in use), which visits exactly one
//! representative per color permutation class — and for the complement
//! enumeration that is enough, because permuting colors never changes which
//! edges stay uncolored.

use crate::coloring::PartialColoring;
use crate::graph::{EdgeSet, MultiGraph};
use crate::matching;
use std::collections::BTreeMap;
use thiserror::Error;

/// Largest vertex count accepted by the complement enumeration.
pub const COMPLEMENT_ENUM_VERTEX_CAP: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolverError {
    #[error(
        "graph has {n} vertices, above the complement-enumeration cap of {cap}; \
         enumerating every maximum coloring of larger graphs is not desk-scale"
    )]
    CapExceeded { n: usize, cap: usize },
}

/// An exact optimum together with a canonical witness coloring.
#[derive(Debug, Clone)]
pub struct NuRecord {
    pub k: u8,
    pub value: usize,
    /// Proper partial coloring with `value` colored edges whose assignment
    /// vector is lexicographically least among all optima (0 = uncolored).
    pub witness: PartialColoring,
}

struct Search<'g> {
    g: &'g MultiGraph,
    k: u8,
    m: usize,
    /// Bitmask of colors present at each vertex, bit c-1 for color c.
    used: Vec<u8>,
}

impl<'g> Search<'g> {
    fn new(g: &'g MultiGraph, k: u8) -> Search<'g> {
        Search {
            g,
            k,
            m: g.edge_count(),
            used: vec![0; g.vertex_count()],
        }
    }

    fn optimum(&mut self) -> usize {
        let mut best = 0;
        self.optimum_rec(0, 0, 0, &mut best);
        best
    }

    fn optimum_rec(&mut self, i: usize, count: usize, palette: u8, best: &mut usize) {
        if count + (self.m - i) <= *best {
            return;
        }
        if i == self.m {
            *best = count;
            return;
        }
        let (a, b) = self.g.endpoints(i);
        let blocked = self.used[a] | self.used[b];
        // Colors before skipping finds full colorings early and tightens the
        // bound; which color is immaterial for the value.
        for c in 1..=self.k.min(palette + 1) {
            let bit = 1u8 << (c - 1);
            if blocked & bit == 0 {
                self.used[a] |= bit;
                self.used[b] |= bit;
                self.optimum_rec(i + 1, count + 1, palette.max(c), best);
                self.used[a] &= !bit;
                self.used[b] &= !bit;
            }
        }
        self.optimum_rec(i + 1, count, palette, best);
    }

    /// First leaf in assignment-vector order (0 < 1 < 2 < 3 per edge) that
    /// colors `target` edges. Restricted growth loses nothing here: first-
    /// appearance relabeling maps any witness to a no-greater vector, so the
    /// least canonical witness is the least witness outright.
    fn lex_min(&mut self, target: usize) -> Option<Vec<u8>> {
        let mut assignment = vec![0u8; self.m];
        self.lex_min_rec(0, 0, 0, target, &mut assignment)
            .then_some(assignment)
    }

    fn lex_min_rec(
        &mut self,
        i: usize,
        count: usize,
        palette: u8,
        target: usize,
        assignment: &mut [u8],
    ) -> bool {
        if count + (self.m - i) < target {
            return false;
        }
        if i == self.m {
            return true;
        }
        let (a, b) = self.g.endpoints(i);
        let blocked = self.used[a] | self.used[b];
        assignment[i] = 0;
        if self.lex_min_rec(i + 1, count, palette, target, assignment) {
            return true;
        }
        for c in 1..=self.k.min(palette + 1) {
            let bit = 1u8 << (c - 1);
            if blocked & bit == 0 {
                assignment[i] = c;
                self.used[a] |= bit;
                self.used[b] |= bit;
                if self.lex_min_rec(i + 1, count + 1, palette.max(c), target, assignment) {
                    return true;
                }
                self.used[a] &= !bit;
                self.used[b] &= !bit;
            }
        }
        assignment[i] = 0;
        false
    }

    fn complements(&mut self, target: usize) -> BTreeMap<EdgeSet, Vec<u8>> {
        let mut out = BTreeMap::new();
        let mut assignment = vec![0u8; self.m];
        self.complements_rec(0, 0, 0, target, &mut assignment, &mut out);
        out
    }

    fn complements_rec(
        &mut self,
        i: usize,
        count: usize,
        palette: u8,
        target: usize,
        assignment: &mut Vec<u8>,
        out: &mut BTreeMap<EdgeSet, Vec<u8>>,
    ) {
        if count + (self.m - i) < target {
            return;
        }
        if i == self.m {
            // target is the optimum, so count == target here.
            let uncolored = EdgeSet::from_edges((0..self.m).filter(|&e| assignment[e] == 0));
            out.entry(uncolored).or_insert_with(|| assignment.clone());
            return;
        }
        let (a, b) = self.g.endpoints(i);
        let blocked = self.used[a] | self.used[b];
        for c in 1..=self.k.min(palette + 1) {
            let bit = 1u8 << (c - 1);
            if blocked & bit == 0 {
                self.used[a] |= bit;
                self.used[b] |= bit;
                assignment[i] = c;
                self.complements_rec(i + 1, count + 1, palette.max(c), target, assignment, out);
                assignment[i] = 0;
                self.used[a] &= !bit;
                self.used[b] &= !bit;
            }
        }
        self.complements_rec(i + 1, count, palette, target, assignment, out);
    }
}

/// Size of a maximum k-edge-colorable subgraph, by branch and bound.
pub fn max_colorable_size(g: &MultiGraph, k: u8) -> usize {
    assert!((1..=3).contains(&k), "k must be 1, 2 or 3; got {k}");
    Search::new(g, k).optimum()
}

/// Exact ν_k with a canonical witness.
///
/// For k = 1 the value comes from the matching solver and the witness search
/// then independently re-attains it — a disagreement between the two routes
/// cannot pass silently.
pub fn nu(g: &MultiGraph, k: u8) -> NuRecord {
    assert!((1..=3).contains(&k), "k must be 1, 2 or 3; got {k}");
    let value = match k {
        1 => matching::maximum_matching(g).len(),
        _ => max_colorable_size(g, k),
    };
    let assignment = Search::new(g, k)
        .lex_min(value)
        .expect("optimal value is attainable by construction");
    let witness =
        PartialColoring::from_assignment(g, assignment).expect("search respects properness");
    debug_assert!(witness.validate(g));
    debug_assert_eq!(witness.colored_count(), value);
    NuRecord { k, value, witness }
}

/// Every distinct uncolored edge set over all maximum 3-edge-colorable
/// subgraphs, in ascending order. Exhaustive, hence capped.
pub fn enumerate_max_3ec_complements(g: &MultiGraph) -> Result<Vec<EdgeSet>, SolverError> {
    enumerate_max_3ec_complements_with_cap(g, COMPLEMENT_ENUM_VERTEX_CAP)
}

pub fn enumerate_max_3ec_complements_with_cap(
    g: &MultiGraph,
    cap: usize,
) -> Result<Vec<EdgeSet>, SolverError> {
    Ok(enumerate_max_3ec_complements_detailed_with_cap(g, cap)?
        .into_iter()
        .map(|(u, _)| u)
        .collect())
}

/// As [`enumerate_max_3ec_complements`], but each uncolored set comes with
/// one maximum coloring realizing it (the first found, deterministic).
pub fn enumerate_max_3ec_complements_detailed(
    g: &MultiGraph,
) -> Result<Vec<(EdgeSet, PartialColoring)>, SolverError> {
    enumerate_max_3ec_complements_detailed_with_cap(g, COMPLEMENT_ENUM_VERTEX_CAP)
}

pub fn enumerate_max_3ec_complements_detailed_with_cap(
    g: &MultiGraph,
    cap: usize,
) -> Result<Vec<(EdgeSet, PartialColoring)>, SolverError> {
    let n = g.vertex_count();
    if n > cap {
        return Err(SolverError::CapExceeded { n, cap });
    }
    let target = max_colorable_size(g, 3);
    Search::new(g, 3)
        .complements(target)
        .into_iter()
        .map(|(u, assignment)| {
            let c = PartialColoring::from_assignment(g, assignment)
                .expect("search respects properness");
            debug_assert_eq!(u, c.uncolored_edges());
            Ok((u, c))
        })
        .collect()
}
