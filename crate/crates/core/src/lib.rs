//! Exact machinery for maximum k-edge-colorable subgraphs of cubic multigraphs.
//!
//! The crate is organized around a small immutable [`graph::MultiGraph`] type
//! with first-class parallel edges. On top of it sit exact matching and
//! edge-coloring solvers (`matching`, `solver`), Kempe-chain recoloring
//! procedures that push the uncolored edges of a maximum coloring into or out
//! of a given perfect matching (`kempe`), generators and serialization for
//! small cubic multigraphs (`gen`, `io`), and a certificate-producing
//! verification harness for the structural claims the toolkit is built to
//! check (`certify`, `harness`).
//!
//! Everything is sized for desk-scale experiments (graphs on at most ~20
//! vertices, exhaustive corpora up to 12); all searches are exact, and all
//! public entry points are deterministic: same input, same bytes out.

pub mod canon;
pub mod certify;
pub mod coloring;
pub mod gen;
pub mod graph;
pub mod harness;
pub mod io;
pub mod iso;
pub mod kempe;
pub mod matching;
pub mod solver;

pub use graph::{EdgeId, EdgeSet, MultiGraph, VertexId};
