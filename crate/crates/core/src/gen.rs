//! Corpus generation: exhaustive enumeration of connected loopless cubic
//! multigraphs up to isomorphism, and seeded configuration-model sampling.

use crate::graph::{MultiGraph, VertexId};
use crate::iso::{are_isomorphic, invariant_hash, mix};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::collections::HashMap;
use thiserror::Error;

/// Largest vertex count the exhaustive enumerator accepts.
pub const ENUM_VERTEX_CAP: usize = 12;

/// Resampling budget per requested random graph.
const SAMPLE_ATTEMPT_CAP: usize = 100_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GenError {
    #[error("no cubic multigraph exists on {n} vertices; n must be even and at least 2")]
    InfeasibleOrder { n: usize },
    #[error("exhaustive enumeration is capped at {cap} vertices; got {n}")]
    EnumCapExceeded { n: usize, cap: usize },
    #[error("sampling at n = {n} found no admissible graph in {attempts} attempts")]
    SamplingStalled { n: usize, attempts: usize },
}

/// Parameters for [`random_cubic`].
#[derive(Debug, Clone, Copy)]
pub struct GenConfig {
    pub n: usize,
    pub count: usize,
    pub seed: u64,
    /// Reject disconnected samples (on by default).
    pub connected_only: bool,
}

impl GenConfig {
    pub fn new(n: usize, count: usize, seed: u64) -> GenConfig {
        GenConfig {
            n,
            count,
            seed,
            connected_only: true,
        }
    }
}

/// Every connected loopless cubic multigraph on `n` vertices, exactly once
/// up to isomorphism, in a deterministic order.
///
/// Enumeration runs over edge-multiplicity assignments of the vertex pairs
/// (equivalent to pairings of the 3n half-edge stubs, but without the
/// factorial blowup of intra-vertex stub orderings). Only labelings
/// compatible with a breadth-first search order survive — every connected
/// graph has one, so no class is lost, while almost all of the n!
/// relabelings are never visited. Survivors are deduplicated with
/// invariant-hash buckets refined by exact isomorphism tests.
pub fn enumerate_cubic(n: usize) -> Result<Vec<MultiGraph>, GenError> {
    if n > ENUM_VERTEX_CAP {
        return Err(GenError::EnumCapExceeded {
            n,
            cap: ENUM_VERTEX_CAP,
        });
    }
    if n == 0 || !n.is_multiple_of(2) {
        return Ok(Vec::new());
    }
    let mut out: Vec<MultiGraph> = Vec::new();
    let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
    let mut emit = |n: usize, edges: &[(VertexId, VertexId)]| {
        let g = MultiGraph::build(n, edges).expect("enumerator emits loopless edges");
        debug_assert!(g.is_connected(), "BFS-order pruning implies connectivity");
        let h = invariant_hash(&g);
        let bucket = buckets.entry(h).or_default();
        if bucket.iter().any(|&i| are_isomorphic(&out[i], &g)) {
            return;
        }
        bucket.push(out.len());
        out.push(g);
    };
    let mut search = RowSearch {
        n,
        rem: vec![3; n],
        edges: Vec::with_capacity(3 * n / 2),
        emit: &mut emit,
    };
    search.fill_row(0, 1, RowState::fresh());
    drop(search);
    Ok(out)
}

/// Per-row pruning state for the BFS-order restriction. A column j with
/// rem[j] still 3 is "unattached": it has no edge yet, and a positive entry
/// there makes j a child of the current row.
#[derive(Clone, Copy)]
struct RowState {
    /// An unattached column was left unattached earlier in this row.
    skipped_unattached: bool,
    /// A child was already attached in this row.
    child_seen: bool,
    /// Multiplicity of the most recent child edge in this row.
    last_child_mult: u8,
}

impl RowState {
    fn fresh() -> RowState {
        RowState {
            skipped_unattached: false,
            child_seen: false,
            last_child_mult: 3,
        }
    }
}

type EmitFn<'a> = &'a mut dyn FnMut(usize, &[(VertexId, VertexId)]);

struct RowSearch<'a> {
    n: usize,
    rem: Vec<u8>,
    edges: Vec<(VertexId, VertexId)>,
    emit: EmitFn<'a>,
}

impl RowSearch<'_> {
    /// Assigns the multiplicity of pair (i, j) and recurses column-by-column;
    /// `rem` tracks missing degree and rows must close exactly at 3.
    ///
    /// BFS-order pruning: every vertex i ≥ 1 must be attached by an earlier
    /// row; within a row, edges to already-attached vertices come before the
    /// first child, children carry non-increasing multiplicities, and no
    /// child may follow a skipped unattached column. Any breadth-first
    /// labeling (root's scan order by descending multiplicity) satisfies all
    /// of these, so every isomorphism class is still emitted.
    fn fill_row(&mut self, i: usize, j: usize, state: RowState) {
        if j == self.n {
            if self.rem[i] != 0 {
                return;
            }
            let next = i + 1;
            if next == self.n {
                (self.emit)(self.n, &self.edges);
            } else if self.rem[next] < 3 {
                self.fill_row(next, next + 1, RowState::fresh());
            }
            return;
        }
        // Row i can close only if enough capacity remains to its right.
        let capacity: u8 = (j..self.n).map(|x| self.rem[x]).sum();
        if self.rem[i] > capacity {
            return;
        }
        let unattached = self.rem[j] == 3;
        let positive_allowed = if unattached {
            !state.skipped_unattached
        } else {
            !state.child_seen
        };
        if positive_allowed {
            let top = self.rem[i].min(self.rem[j]).min(if unattached {
                state.last_child_mult
            } else {
                3
            });
            let mut next = state;
            if unattached {
                next.child_seen = true;
            }
            for t in 1..=top {
                self.rem[i] -= t;
                self.rem[j] -= t;
                for _ in 0..t {
                    self.edges.push((i, j));
                }
                if unattached {
                    next.last_child_mult = t;
                }
                self.fill_row(i, j + 1, next);
                self.rem[i] += t;
                self.rem[j] += t;
                self.edges.truncate(self.edges.len() - t as usize);
            }
        }
        let mut zero = state;
        zero.skipped_unattached |= unattached;
        self.fill_row(i, j + 1, zero);
    }
}

/// Seeded configuration-model samples: pair 3n half-edge stubs uniformly,
/// reject loops (and disconnected graphs when asked), repeat. Each sample
/// index derives its own generator from the seed, so the stream is
/// reproducible regardless of evaluation order.
pub fn random_cubic(cfg: &GenConfig) -> Result<Vec<MultiGraph>, GenError> {
    if cfg.n == 0 || !cfg.n.is_multiple_of(2) {
        return Err(GenError::InfeasibleOrder { n: cfg.n });
    }
    (0..cfg.count as u64)
        .map(|i| sample_one(cfg, mix(cfg.seed ^ i.wrapping_mul(0x9E37_79B9_7F4A_7C15))))
        .collect()
}

fn sample_one(cfg: &GenConfig, sample_seed: u64) -> Result<MultiGraph, GenError> {
    let mut rng = ChaCha8Rng::seed_from_u64(sample_seed);
    let mut stubs: Vec<VertexId> = (0..cfg.n).flat_map(|v| [v, v, v]).collect();
    for _ in 0..SAMPLE_ATTEMPT_CAP {
        stubs.shuffle(&mut rng);
        if stubs.chunks_exact(2).any(|p| p[0] == p[1]) {
            continue;
        }
        let mut edges: Vec<(VertexId, VertexId)> = stubs
            .chunks_exact(2)
            .map(|p| (p[0].min(p[1]), p[0].max(p[1])))
            .collect();
        edges.sort_unstable();
        let g = MultiGraph::build(cfg.n, &edges).expect("loop-free by the rejection test");
        if cfg.connected_only && !g.is_connected() {
            continue;
        }
        return Ok(g);
    }
    Err(GenError::SamplingStalled {
        n: cfg.n,
        attempts: SAMPLE_ATTEMPT_CAP,
    })
}
