//! Partial proper 3-edge-colorings.
//!
//! A [`PartialColoring`] assigns each edge one of the colors 1..3 or leaves
//! it uncolored. Properness (no two like-colored edges sharing a vertex) is
//! the central invariant everything downstream relies on; it is checked by
//! [`PartialColoring::validate`] and asserted after every mutation in the
//! recoloring algorithms.

use crate::graph::{EdgeId, EdgeSet, MultiGraph, VertexId};
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Marker for an uncolored edge in an assignment vector.
pub const UNCOLORED: u8 = 0;

/// One of the three edge colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(u8);

impl Color {
    pub const ALL: [Color; 3] = [Color(1), Color(2), Color(3)];

    pub fn new(value: u8) -> Option<Color> {
        (1..=3).contains(&value).then_some(Color(value))
    }

    pub fn value(self) -> u8 {
        self.0
    }

    /// The two colors other than `self`, ascending.
    pub fn others(self) -> [Color; 2] {
        match self.0 {
            1 => [Color(2), Color(3)],
            2 => [Color(1), Color(3)],
            _ => [Color(1), Color(2)],
        }
    }
}

impl std::fmt::Display for Color {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A subset of the three colors, as a tiny bitmask.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct ColorSet(u8);

impl ColorSet {
    pub fn empty() -> ColorSet {
        ColorSet(0)
    }

    pub fn insert(&mut self, c: Color) {
        self.0 |= 1 << c.value();
    }

    pub fn contains(self, c: Color) -> bool {
        self.0 & (1 << c.value()) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersection(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 & other.0)
    }

    pub fn union(self, other: ColorSet) -> ColorSet {
        ColorSet(self.0 | other.0)
    }

    /// Colors of {1,2,3} not in this set, ascending.
    pub fn missing(self) -> Vec<Color> {
        Color::ALL
            .iter()
            .copied()
            .filter(|c| !self.contains(*c))
            .collect()
    }

    pub fn iter(self) -> impl Iterator<Item = Color> {
        Color::ALL.into_iter().filter(move |c| self.contains(*c))
    }

    /// The sole member, if the set is a singleton.
    pub fn single(self) -> Option<Color> {
        (self.len() == 1).then(|| self.iter().next().unwrap())
    }
}

impl FromIterator<Color> for ColorSet {
    fn from_iter<I: IntoIterator<Item = Color>>(iter: I) -> Self {
        let mut s = ColorSet::empty();
        for c in iter {
            s.insert(c);
        }
        s
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("assignment has {got} entries, graph has {expected} edges")]
    LengthMismatch { got: usize, expected: usize },
    #[error("assignment value {value} at edge {edge} is not in 0..=3")]
    BadValue { edge: EdgeId, value: u8 },
}

/// A partial assignment of colors 1..3 to the edges of one fixed graph.
/// Entry 0 means uncolored. The coloring does not hold a graph reference;
/// callers pass the graph to the operations that need incidence structure.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PartialColoring {
    assignment: Vec<u8>,
}

impl PartialColoring {
    /// The all-uncolored coloring on `m` edges.
    pub fn empty(m: usize) -> PartialColoring {
        PartialColoring {
            assignment: vec![UNCOLORED; m],
        }
    }

    pub fn from_assignment(
        g: &MultiGraph,
        assignment: Vec<u8>,
    ) -> Result<PartialColoring, ColoringError> {
        if assignment.len() != g.edge_count() {
            return Err(ColoringError::LengthMismatch {
                got: assignment.len(),
                expected: g.edge_count(),
            });
        }
        for (edge, &value) in assignment.iter().enumerate() {
            if value > 3 {
                return Err(ColoringError::BadValue { edge, value });
            }
        }
        Ok(PartialColoring { assignment })
    }

    pub fn edge_count(&self) -> usize {
        self.assignment.len()
    }

    pub fn get(&self, e: EdgeId) -> Option<Color> {
        Color::new(self.assignment[e])
    }

    pub fn is_colored(&self, e: EdgeId) -> bool {
        self.assignment[e] != UNCOLORED
    }

    pub fn set(&mut self, e: EdgeId, c: Color) {
        self.assignment[e] = c.value();
    }

    pub fn clear(&mut self, e: EdgeId) {
        self.assignment[e] = UNCOLORED;
    }

    pub fn assignment(&self) -> &[u8] {
        &self.assignment
    }

    pub fn colored_count(&self) -> usize {
        self.assignment.iter().filter(|&&v| v != UNCOLORED).count()
    }

    pub fn colored_edges(&self) -> EdgeSet {
        EdgeSet::from_edges(
            self.assignment
                .iter()
                .enumerate()
                .filter(|(_, &v)| v != UNCOLORED)
                .map(|(e, _)| e),
        )
    }

    pub fn uncolored_edges(&self) -> EdgeSet {
        EdgeSet::from_edges(
            self.assignment
                .iter()
                .enumerate()
                .filter(|(_, &v)| v == UNCOLORED)
                .map(|(e, _)| e),
        )
    }

    /// Colors present on edges incident to `v`.
    pub fn colors_at(&self, g: &MultiGraph, v: VertexId) -> ColorSet {
        g.incident_edges(v)
            .iter()
            .filter_map(|&e| self.get(e))
            .collect()
    }

    /// The edge at `v` carrying color `c`, if any. Properness guarantees at
    /// most one.
    pub fn edge_with_color_at(&self, g: &MultiGraph, v: VertexId, c: Color) -> Option<EdgeId> {
        g.incident_edges(v)
            .iter()
            .copied()
            .find(|&e| self.get(e) == Some(c))
    }

    /// Properness: no vertex has two incident edges of the same color.
    pub fn validate(&self, g: &MultiGraph) -> bool {
        debug_assert_eq!(self.assignment.len(), g.edge_count());
        g.vertices().all(|v| {
            let mut seen = ColorSet::empty();
            for &e in g.incident_edges(v) {
                if let Some(c) = self.get(e) {
                    if seen.contains(c) {
                        return false;
                    }
                    seen.insert(c);
                }
            }
            true
        })
    }

    /// The edges of each color class, indexed by color value - 1.
    pub fn color_classes(&self) -> [EdgeSet; 3] {
        let mut classes = [EdgeSet::new(), EdgeSet::new(), EdgeSet::new()];
        for (e, &v) in self.assignment.iter().enumerate() {
            if v != UNCOLORED {
                classes[(v - 1) as usize].insert(e);
            }
        }
        classes
    }
}

/// Self-contained JSON form of a coloring: graph dimensions plus the
/// per-edge assignment (0 = uncolored). Field order is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColoringWitness {
    pub n: usize,
    pub m: usize,
    pub assignment: Vec<u8>,
}

impl ColoringWitness {
    pub fn new(g: &MultiGraph, c: &PartialColoring) -> ColoringWitness {
        ColoringWitness {
            n: g.vertex_count(),
            m: g.edge_count(),
            assignment: c.assignment().to_vec(),
        }
    }

    /// Rebuilds the coloring, checking it against the graph it claims to be
    /// for.
    pub fn to_coloring(&self, g: &MultiGraph) -> Result<PartialColoring, ColoringError> {
        if self.n != g.vertex_count() || self.m != g.edge_count() {
            return Err(ColoringError::LengthMismatch {
                got: self.m,
                expected: g.edge_count(),
            });
        }
        PartialColoring::from_assignment(g, self.assignment.clone())
    }
}
