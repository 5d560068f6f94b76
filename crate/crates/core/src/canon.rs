//! Pinned reference graphs, addressable by name from the CLI.

use crate::graph::MultiGraph;

/// Names accepted by [`by_name`], in display order.
pub const NAMES: [&str; 5] = ["THETA", "K4", "K33", "PETERSEN", "S6"];

/// Triple edge on two vertices — the smallest loopless cubic multigraph.
pub fn theta() -> MultiGraph {
    MultiGraph::build(2, &[(0, 1), (0, 1), (0, 1)]).expect("valid by construction")
}

/// Complete graph on four vertices.
pub fn k4() -> MultiGraph {
    MultiGraph::build(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
        .expect("valid by construction")
}

/// Complete bipartite graph on parts {0, 1, 2} and {3, 4, 5}.
pub fn k33() -> MultiGraph {
    let edges: Vec<_> = (0..3).flat_map(|u| (3..6).map(move |v| (u, v))).collect();
    MultiGraph::build(6, &edges).expect("valid by construction")
}

/// Petersen graph: outer 5-cycle 0–4 (edges 0–4), spokes i–(i+5)
/// (edges 5–9), inner pentagram 5+i – 5+((i+2) mod 5) (edges 10–14).
pub fn petersen() -> MultiGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
    }
    for i in 0..5 {
        edges.push((i, i + 5));
    }
    for i in 0..5 {
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    MultiGraph::build(10, &edges).expect("valid by construction")
}

/// Two triangles, each carrying one doubled edge — (0,1) twice over apex 2,
/// and (3,4) twice over apex 5 — bridged by the apex edge (2,5). The
/// smallest graph with ν₂ + ν₃ = 2n exactly, and the CLI's `S6`.
pub fn tight_pair() -> MultiGraph {
    MultiGraph::build(
        6,
        &[
            (0, 1),
            (0, 1),
            (0, 2),
            (1, 2),
            (2, 5),
            (3, 4),
            (3, 4),
            (3, 5),
            (4, 5),
        ],
    )
    .expect("valid by construction")
}

/// Case-insensitive lookup; unknown names report the available corpus.
pub fn by_name(name: &str) -> Result<MultiGraph, String> {
    match name.to_ascii_uppercase().as_str() {
        "THETA" => Ok(theta()),
        "K4" => Ok(k4()),
        "K33" => Ok(k33()),
        "PETERSEN" => Ok(petersen()),
        "S6" => Ok(tight_pair()),
        other => Err(format!(
            "unknown graph {other:?}; available: {}",
            NAMES.join(", ")
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;
    use crate::matching::enumerate_perfect_matchings;

    fn corpus() -> Vec<MultiGraph> {
        NAMES.iter().map(|n| by_name(n).unwrap()).collect()
    }

    #[test]
    fn all_entries_are_connected_cubic() {
        for g in corpus() {
            assert!(g.is_cubic());
            assert!(g.is_connected());
            assert_eq!(g.edge_count() * 2, 3 * g.vertex_count());
        }
    }

    #[test]
    fn entries_are_pairwise_non_isomorphic() {
        let graphs = corpus();
        for i in 0..graphs.len() {
            for j in i + 1..graphs.len() {
                assert!(!are_isomorphic(&graphs[i], &graphs[j]), "{i} vs {j}");
            }
        }
    }

    #[test]
    fn perfect_matching_counts() {
        let counts: Vec<usize> = corpus()
            .iter()
            .map(|g| enumerate_perfect_matchings(g).unwrap().len())
            .collect();
        assert_eq!(counts, vec![3, 3, 6, 6, 4]);
    }

    #[test]
    fn tight_pair_keeps_its_parallel_classes() {
        let g = tight_pair();
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(g.multiplicity(3, 4), 2);
        assert_eq!(g.multiplicity(2, 5), 1);
        // Swapping the two gadgets is an automorphism-like relabeling.
        let mirrored = MultiGraph::build(
            6,
            &[
                (3, 4),
                (3, 4),
                (3, 5),
                (4, 5),
                (5, 2),
                (0, 1),
                (0, 1),
                (0, 2),
                (1, 2),
            ],
        )
        .unwrap();
        assert!(are_isomorphic(&g, &mirrored));
    }

    #[test]
    fn petersen_has_girth_five() {
        let g = petersen();
        // Shortest cycle through each vertex via BFS with parent edges.
        let mut girth = usize::MAX;
        for s in g.vertices() {
            let mut dist = vec![usize::MAX; g.vertex_count()];
            let mut via = vec![usize::MAX; g.vertex_count()];
            dist[s] = 0;
            let mut queue = std::collections::VecDeque::from([s]);
            while let Some(x) = queue.pop_front() {
                for &e in g.incident_edges(x) {
                    let y = g.other_endpoint(e, x);
                    if dist[y] == usize::MAX {
                        dist[y] = dist[x] + 1;
                        via[y] = e;
                        queue.push_back(y);
                    } else if via[x] != e {
                        girth = girth.min(dist[x] + dist[y] + 1);
                    }
                }
            }
        }
        assert_eq!(girth, 5);
    }

    #[test]
    fn unknown_names_list_the_corpus() {
        let err = by_name("K5").unwrap_err();
        assert!(err.contains("PETERSEN") && err.contains("S6"), "{err}");
        assert!(by_name("s6").is_ok(), "names are case-insensitive");
    }
}
