//! Kempe-chain machinery: maximal two-color alternating chains, color
//! shifts, the odd cycle classifying an uncolored edge of a maximum
//! coloring, and the two constructive extension procedures built on top.
//!
//! Everything here operates on maximum proper partial 3-edge-colorings of
//! cubic multigraphs. The structural facts the procedures lean on — an
//! uncolored edge sees exactly two colors at each endpoint, the two-color
//! chain between its endpoints closes an odd cycle, every cycle vertex hangs
//! a pendant edge in the shared color — are consequences of maximality. They
//! are re-checked at every step rather than assumed, and a failed check
//! surfaces as [`StructureViolation`], so feeding in a coloring that is
//! merely proper (not maximum) is detected instead of mis-handled.

use crate::coloring::{Color, PartialColoring};
use crate::graph::{EdgeId, MultiGraph, VertexId};
use crate::matching::OneFactor;
use crate::solver;
use serde::Serialize;
use std::collections::BTreeSet;
use thiserror::Error;

/// A structural invariant of maximum colorings failed to hold. Carrying the
/// offending edge and a prose reason, this is the evidence behind a
/// VIOLATION-FOUND certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Error)]
#[error("maximum-coloring structure violated at edge {edge}: {detail}")]
pub struct StructureViolation {
    pub edge: EdgeId,
    pub detail: String,
}

#[derive(Debug, Error)]
pub enum KempeError {
    #[error("graph is not cubic: vertex {vertex} has degree {degree}")]
    NotCubic { vertex: VertexId, degree: usize },
    #[error("edge {edge} is already colored")]
    EdgeAlreadyColored { edge: EdgeId },
    #[error("coloring is not a proper partial 3-edge-coloring")]
    ImproperColoring,
    #[error("{0}")]
    Structure(#[from] StructureViolation),
}

fn violation(edge: EdgeId, detail: impl Into<String>) -> KempeError {
    KempeError::Structure(StructureViolation {
        edge,
        detail: detail.into(),
    })
}

fn ensure_cubic(g: &MultiGraph) -> Result<(), KempeError> {
    if g.is_cubic() {
        return Ok(());
    }
    let vertex = g.vertices().find(|&v| g.degree(v) != 3).unwrap_or(0);
    let degree = if vertex < g.vertex_count() {
        g.degree(vertex)
    } else {
        0
    };
    Err(KempeError::NotCubic { vertex, degree })
}

/// A maximal chain in two colors: a path, or a closed even cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KempeChain {
    pub a: Color,
    pub b: Color,
    /// Walk vertices; for a cycle the first vertex is repeated at the end.
    /// A vertex with no edge in either color yields the single-vertex chain.
    pub vertices: Vec<VertexId>,
    /// edges[i] joins vertices[i] and vertices[i+1]; colors alternate.
    pub edges: Vec<EdgeId>,
    pub is_cycle: bool,
}

impl KempeChain {
    /// The far endpoint of a path chain, seen from `v`. `None` for cycles or
    /// when `v` is not an endpoint.
    pub fn other_end(&self, v: VertexId) -> Option<VertexId> {
        if self.is_cycle || self.vertices.len() < 2 {
            return None;
        }
        let (first, last) = (self.vertices[0], *self.vertices.last().unwrap());
        if first == v {
            Some(last)
        } else if last == v {
            Some(first)
        } else {
            None
        }
    }
}

/// The maximal chain through `v` in colors `a`, `b` of a proper coloring.
/// Since a proper coloring gives every vertex at most one edge of each
/// color, the two-color subgraph has maximum degree 2 and the chain is a
/// path or an even cycle; alternation is automatic. Paths are oriented from
/// their smaller-numbered endpoint; cycles start and end at `v`.
pub fn alternating_path(
    g: &MultiGraph,
    c: &PartialColoring,
    v: VertexId,
    a: Color,
    b: Color,
) -> KempeChain {
    let chain_edges_at = |at: VertexId| -> Vec<EdgeId> {
        g.incident_edges(at)
            .iter()
            .copied()
            .filter(|&e| matches!(c.get(e), Some(col) if col == a || col == b))
            .collect()
    };
    let local = chain_edges_at(v);
    debug_assert!(local.len() <= 2, "more than two chain edges at {v}");
    if local.is_empty() {
        return KempeChain {
            a,
            b,
            vertices: vec![v],
            edges: vec![],
            is_cycle: false,
        };
    }
    // Walk away from v along `start` until the chain ends or closes at v.
    let walk = |start: EdgeId| -> (Vec<VertexId>, Vec<EdgeId>, bool) {
        let mut verts = vec![v];
        let mut edges = Vec::new();
        let mut cur = v;
        let mut via = start;
        loop {
            edges.push(via);
            cur = g.other_endpoint(via, cur);
            verts.push(cur);
            if cur == v {
                return (verts, edges, true);
            }
            match chain_edges_at(cur).into_iter().find(|&x| x != via) {
                Some(next) => via = next,
                None => return (verts, edges, false),
            }
            assert!(
                edges.len() <= g.edge_count(),
                "chain walk revisited an edge; coloring is not proper"
            );
        }
    };
    let (fwd_v, fwd_e, closed) = walk(local[0]);
    if closed {
        return KempeChain {
            a,
            b,
            vertices: fwd_v,
            edges: fwd_e,
            is_cycle: true,
        };
    }
    let (mut vertices, mut edges) = if local.len() == 2 {
        let (bwd_v, bwd_e, _) = walk(local[1]);
        let mut vs: Vec<VertexId> = bwd_v.into_iter().rev().collect();
        let mut es: Vec<EdgeId> = bwd_e.into_iter().rev().collect();
        vs.extend_from_slice(&fwd_v[1..]);
        es.extend_from_slice(&fwd_e);
        (vs, es)
    } else {
        (fwd_v, fwd_e)
    };
    if vertices[vertices.len() - 1] < vertices[0] {
        vertices.reverse();
        edges.reverse();
    }
    KempeChain {
        a,
        b,
        vertices,
        edges,
        is_cycle: false,
    }
}

/// Swap colors `a` and `b` on the given edges. For a maximal chain this
/// keeps the coloring proper and twice applied is the identity; shifting a
/// non-maximal edge set is the caller's responsibility.
pub fn shift(c: &mut PartialColoring, edges: &[EdgeId], a: Color, b: Color) {
    for &e in edges {
        match c.get(e) {
            Some(col) if col == a => c.set(e, b),
            Some(col) if col == b => c.set(e, a),
            other => panic!("edge {e} is colored {other:?}, cannot shift {a}/{b}"),
        }
    }
}

/// The odd cycle classifying an uncolored edge of a maximum coloring: the
/// hole's endpoints share exactly one color α, the chain in the two
/// remaining colors runs from one endpoint to the other, and every vertex on
/// the cycle hangs its third edge colored α.
#[derive(Debug, Clone)]
pub struct OddCycle {
    pub hole: EdgeId,
    pub alpha: Color,
    pub beta: Color,
    pub gamma: Color,
    /// Cycle vertices from u = vertices[0] (hole's smaller endpoint) to
    /// v = vertices.last(); the hole closes the walk back to u.
    pub vertices: Vec<VertexId>,
    /// path_edges[i] joins vertices[i] and vertices[i+1], colored beta at
    /// even i and gamma at odd i; always an even count.
    pub path_edges: Vec<EdgeId>,
    /// pendants[i] is the alpha-colored edge at vertices[i]. Pendants may
    /// coincide or chord back onto the cycle; only their color matters.
    pub pendants: Vec<EdgeId>,
}

/// Endpoint color frame of an uncolored edge in a maximum coloring:
/// (u, v, alpha, beta, gamma) with C(u) = {alpha, beta}, C(v) = {alpha, gamma}.
fn edge_frame(
    g: &MultiGraph,
    c: &PartialColoring,
    e: EdgeId,
) -> Result<(VertexId, VertexId, Color, Color, Color), KempeError> {
    let (u, v) = g.endpoints(e);
    let cu = c.colors_at(g, u);
    let cv = c.colors_at(g, v);
    if cu.len() != 2 || cv.len() != 2 {
        return Err(violation(
            e,
            format!(
                "endpoints of an uncolored edge must each see two colors; found {} at {u} and {} at {v}",
                cu.len(),
                cv.len()
            ),
        ));
    }
    let Some(alpha) = cu.intersection(cv).single() else {
        return Err(violation(
            e,
            "endpoint color sets must share exactly one color",
        ));
    };
    let beta = cu.iter().find(|&x| x != alpha).expect("|C(u)| = 2");
    let gamma = cv.iter().find(|&x| x != alpha).expect("|C(v)| = 2");
    Ok((u, v, alpha, beta, gamma))
}

/// Extracts the odd cycle at uncolored edge `e`. On a maximum coloring this
/// always succeeds; any failure is reported as a structure violation rather
/// than silently absorbed.
pub fn find_odd_cycle(
    g: &MultiGraph,
    c: &PartialColoring,
    e: EdgeId,
) -> Result<OddCycle, KempeError> {
    ensure_cubic(g)?;
    if c.is_colored(e) {
        return Err(KempeError::EdgeAlreadyColored { edge: e });
    }
    if !c.validate(g) {
        return Err(KempeError::ImproperColoring);
    }
    let (u, v, alpha, beta, gamma) = edge_frame(g, c, e)?;
    let mut vertices = vec![u];
    let mut path_edges = Vec::new();
    let mut cur = u;
    let mut want = beta;
    loop {
        let Some(next) = c.edge_with_color_at(g, cur, want) else {
            if cur == v {
                break;
            }
            return Err(violation(
                e,
                format!("two-color chain from {u} ran out at {cur} before reaching {v}"),
            ));
        };
        path_edges.push(next);
        cur = g.other_endpoint(next, cur);
        vertices.push(cur);
        want = if want == beta { gamma } else { beta };
        if path_edges.len() > g.edge_count() {
            return Err(violation(e, "two-color chain revisited edges"));
        }
    }
    debug_assert_eq!(path_edges.len() % 2, 0, "chain into v must arrive in gamma");
    let mut pendants = Vec::with_capacity(vertices.len());
    for &w in &vertices {
        let Some(p) = c.edge_with_color_at(g, w, alpha) else {
            return Err(violation(
                e,
                format!("cycle vertex {w} lacks an {alpha}-colored pendant"),
            ));
        };
        pendants.push(p);
    }
    Ok(OddCycle {
        hole: e,
        alpha,
        beta,
        gamma,
        vertices,
        path_edges,
        pendants,
    })
}

/// Moves the hole of `cyc` onto the cycle edge `target`: uncolors it and
/// re-colors the remaining even path through the old hole alternately,
/// starting at target's lower-index endpoint. Properness survives because
/// path endpoints keep only a pendant (α) next to the fresh hole and every
/// interior vertex sees two alternating path colors plus α.
fn rotate_hole_to(c: &mut PartialColoring, cyc: &OddCycle, target: EdgeId) {
    let j = cyc
        .path_edges
        .iter()
        .position(|&x| x == target)
        .expect("target lies on the cycle");
    c.clear(target);
    let mut seq: Vec<EdgeId> = Vec::with_capacity(cyc.path_edges.len());
    seq.extend(cyc.path_edges[..j].iter().rev());
    seq.push(cyc.hole);
    seq.extend(cyc.path_edges[j + 1..].iter().rev());
    for (k, &edge) in seq.iter().enumerate() {
        c.set(edge, if k % 2 == 0 { cyc.beta } else { cyc.gamma });
    }
}

/// Colors every edge of a 1-factor inside some maximum 3-edge-colorable
/// subgraph, starting from a freshly computed maximum coloring.
pub fn extend_one_factor(g: &MultiGraph, f: &OneFactor) -> Result<PartialColoring, KempeError> {
    extend_one_factor_from(g, f, solver::nu(g, 3).witness)
}

/// Same, continuing from a caller-supplied maximum coloring.
///
/// Each round picks the lowest uncolored factor edge e = (u, v), evicts the
/// color β that u sees but v does not from u's β-edge, and gives it to e.
/// The trade keeps the coloring proper and the colored count fixed, and the
/// evicted edge cannot lie in the factor (it shares u with e), so the number
/// of colored factor edges strictly grows — at most n/2 rounds.
pub fn extend_one_factor_from(
    g: &MultiGraph,
    f: &OneFactor,
    mut c: PartialColoring,
) -> Result<PartialColoring, KempeError> {
    ensure_cubic(g)?;
    if !c.validate(g) {
        return Err(KempeError::ImproperColoring);
    }
    let total = c.colored_count();
    let colored_factor_edges =
        |c: &PartialColoring| f.edges().iter().filter(|&e| c.is_colored(e)).count();
    let mut rounds = 0;
    loop {
        let Some(e) = f.edges().iter().find(|&e| !c.is_colored(e)) else {
            return Ok(c);
        };
        rounds += 1;
        if rounds > f.len() {
            return Err(violation(e, "factor extension failed to converge"));
        }
        let before = colored_factor_edges(&c);
        let (u, _, _, beta, _) = edge_frame(g, &c, e)?;
        let evicted = c
            .edge_with_color_at(g, u, beta)
            .expect("beta was observed at u");
        debug_assert!(!f.contains(evicted), "factor is a matching");
        c.clear(evicted);
        c.set(e, beta);
        if !c.validate(g) {
            return Err(violation(e, "color trade broke properness"));
        }
        if c.colored_count() != total {
            return Err(violation(e, "color trade changed the colored count"));
        }
        if colored_factor_edges(&c) != before + 1 {
            return Err(violation(e, "color trade made no progress"));
        }
    }
}

/// Produces a maximum coloring whose uncolored edges all lie inside the
/// given 1-factor — equivalently, one that colors the complementary
/// 2-factor entirely.
pub fn extend_avoiding(g: &MultiGraph, f: &OneFactor) -> Result<PartialColoring, KempeError> {
    extend_avoiding_from(g, f, solver::nu(g, 3).witness)
}

/// Same, continuing from a caller-supplied maximum coloring.
///
/// Each round takes the lowest hole e outside the factor and inspects its
/// odd cycle. If a factor edge lies on the cycle, the hole rotates onto it
/// directly. Otherwise every cycle vertex is matched through its pendant
/// (the factor covers all vertices but owns no cycle edge), and the round
/// re-shapes the coloring so a factor pendant joins the cycle: clear the
/// cycle, shift the lowest cycle vertex w whose α–γ chain leaves the cycle
/// (parity of the odd cycle guarantees one), re-close the cycle starting at
/// w so the hole parks on a cycle edge at w, and rotate the hole onto a
/// factor edge of the freshly classified cycle. Either way the number of
/// holes outside the factor drops by exactly one per round.
pub fn extend_avoiding_from(
    g: &MultiGraph,
    f: &OneFactor,
    mut c: PartialColoring,
) -> Result<PartialColoring, KempeError> {
    ensure_cubic(g)?;
    if !c.validate(g) {
        return Err(KempeError::ImproperColoring);
    }
    let total = c.colored_count();
    let stray_holes = |c: &PartialColoring| -> Vec<EdgeId> {
        c.uncolored_edges()
            .iter()
            .filter(|&e| !f.contains(e))
            .collect()
    };
    // Each round strictly shrinks the stray-hole count, so m rounds already
    // cannot happen; the margin only guards the violation path.
    let cap = 10 * g.edge_count() + 10;
    let mut rounds = 0;
    loop {
        let strays = stray_holes(&c);
        let Some(&e) = strays.first() else {
            return Ok(c);
        };
        rounds += 1;
        if rounds > cap {
            return Err(violation(e, "avoidance loop failed to converge"));
        }
        let cyc = find_odd_cycle(g, &c, e)?;
        match cyc
            .path_edges
            .iter()
            .copied()
            .filter(|&x| f.contains(x))
            .min()
        {
            Some(target) => rotate_hole_to(&mut c, &cyc, target),
            None => reshape_through_factor(g, &mut c, f, &cyc)?,
        }
        if !c.validate(g) {
            return Err(violation(e, "cycle surgery broke properness"));
        }
        if c.colored_count() != total {
            return Err(violation(e, "cycle surgery changed the colored count"));
        }
        if stray_holes(&c).len() != strays.len() - 1 {
            return Err(violation(e, "cycle surgery made no progress"));
        }
    }
}

/// The no-factor-edge-on-cycle round of [`extend_avoiding_from`]. See its
/// doc comment for the plan; the properness bookkeeping is spelled out
/// inline because every line of it carries an invariant.
fn reshape_through_factor(
    g: &MultiGraph,
    c: &mut PartialColoring,
    f: &OneFactor,
    cyc: &OddCycle,
) -> Result<(), KempeError> {
    let OddCycle {
        hole,
        alpha,
        beta,
        gamma,
        vertices,
        path_edges,
        ..
    } = cyc;
    let on_cycle: BTreeSet<VertexId> = vertices.iter().copied().collect();

    // Clear the cycle. Every cycle vertex now has exactly one colored edge:
    // its α pendant.
    for &p in path_edges {
        c.clear(p);
    }

    // The α–γ chains starting at the cycle vertices pair those that end on
    // the cycle with each other; the cycle has odd length, so some chain
    // escapes. Take the lowest-numbered escaping vertex.
    let mut escape = None;
    let mut ordered: Vec<VertexId> = on_cycle.iter().copied().collect();
    ordered.sort_unstable();
    for w in ordered {
        let chain = alternating_path(g, c, w, *alpha, *gamma);
        let Some(end) = chain.other_end(w) else {
            return Err(violation(
                *hole,
                format!("cycle vertex {w} is not an endpoint of its two-color chain"),
            ));
        };
        if !on_cycle.contains(&end) {
            escape = Some((w, chain));
            break;
        }
    }
    let Some((w, chain)) = escape else {
        return Err(violation(
            *hole,
            "every two-color chain returns to the cycle; odd parity forbids this",
        ));
    };

    // Shift the escaping chain: w's pendant turns γ, every other cycle
    // pendant is untouched (interior chain vertices are off-cycle).
    shift(c, &chain.edges, *alpha, *gamma);

    // Re-close the cycle walking away from w, β first, leaving the hole on
    // a cycle edge at w. At w the new β edge meets the γ pendant; each far
    // endpoint of the walk ends on γ against its α pendant; interior
    // vertices alternate β/γ under α pendants. Proper throughout.
    let j = vertices
        .iter()
        .position(|&x| x == w)
        .expect("w lies on the cycle");
    let last = vertices.len() - 1;
    let mut seq: Vec<EdgeId> = Vec::with_capacity(path_edges.len());
    let parked: EdgeId = if j == 0 {
        seq.extend(path_edges.iter());
        *hole
    } else if j == last {
        seq.extend(path_edges.iter().rev());
        *hole
    } else {
        let (down, up) = (path_edges[j - 1], path_edges[j]);
        if down < up {
            // Hole parks below w; walk upward through the old hole.
            seq.extend(path_edges[j..].iter());
            seq.push(*hole);
            seq.extend(path_edges[..j - 1].iter());
            down
        } else {
            // Hole parks above w; walk downward through the old hole.
            seq.extend(path_edges[..j].iter().rev());
            seq.push(*hole);
            seq.extend(path_edges[j + 1..].iter().rev());
            up
        }
    };
    debug_assert_eq!(seq.len(), path_edges.len());
    for (k, &edge) in seq.iter().enumerate() {
        c.set(edge, if k % 2 == 0 { *beta } else { *gamma });
    }

    // The parked hole classifies into a fresh odd cycle that runs through an
    // original pendant — a factor edge, since the factor covers every cycle
    // vertex yet owned no cycle edge. Rotate the hole onto it.
    let cyc2 = find_odd_cycle(g, c, parked)?;
    let Some(target) = cyc2
        .path_edges
        .iter()
        .copied()
        .filter(|&x| f.contains(x))
        .min()
    else {
        return Err(violation(parked, "re-closed cycle carries no factor edge"));
    };
    rotate_hole_to(c, &cyc2, target);
    Ok(())
}
