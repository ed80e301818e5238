//! Exact graph predicates and enumerators.
//!
//! The submodules work on dense adjacency rows (`&[u64]`, one bitmask per
//! vertex, at most 64 vertices); the functions here are the label-level
//! entry points over [`Graph`].

pub mod coloring;
pub mod connectivity;
pub mod edge2;
pub mod hamiltonian;
pub mod pattern;
pub mod planarity;
pub mod subgraph;

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::dense::{bits, Indexer};
use crate::graph::{Graph, VertexLabel};

pub use pattern::StrongClass;
pub use planarity::PLANARITY_LIMIT;
pub use subgraph::PatternMatcher;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PropertyError {
    #[error("graph has {vertices} vertices; this test is limited to {limit}")]
    TooLarge { vertices: usize, limit: usize },
    #[error("pattern graph has no edges")]
    EmptyPattern,
    #[error("graph is not edge 2-colorable")]
    NotEdge2Colorable,
    #[error("k must be at least 1")]
    InvalidK,
}

fn dense(g: &Graph) -> (Indexer, Vec<u64>) {
    let ix = Indexer::for_graphs([g]).expect("graph exceeds 64 vertices");
    let adj = ix.adjacency(g);
    (ix, adj)
}

pub fn is_hamiltonian(g: &Graph) -> bool {
    hamiltonian::has_hamiltonian_cycle(&dense(g).1)
}

pub fn is_planar(g: &Graph) -> Result<bool, PropertyError> {
    let n = g.vertex_count();
    if n > PLANARITY_LIMIT {
        return Err(PropertyError::TooLarge {
            vertices: n,
            limit: PLANARITY_LIMIT,
        });
    }
    Ok(planarity::is_planar(&dense(g).1))
}

pub fn contains_subgraph(pattern: &Graph, g: &Graph) -> bool {
    subgraph::contains_subgraph(&dense(pattern).1, &dense(g).1)
}

/// A good coloring: nonempty independent blocks, ordered by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ColoringPartition {
    pub blocks: Vec<BTreeSet<VertexLabel>>,
}

pub fn enumerate_proper_colorings(
    g: &Graph,
    k: usize,
) -> Result<BTreeSet<ColoringPartition>, PropertyError> {
    if k == 0 {
        return Err(PropertyError::InvalidK);
    }
    let (ix, adj) = dense(g);
    Ok(coloring::colorings(&adj, k)
        .into_iter()
        .map(|blocks| ColoringPartition {
            blocks: blocks.into_iter().map(|b| ix.labels_of(b)).collect(),
        })
        .collect())
}

pub fn is_edge_2_colorable(g: &Graph) -> bool {
    edge2::is_edge2_colorable(&dense(g).1)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathComponent {
    /// endpoints, smaller label first
    pub ends: (VertexLabel, VertexLabel),
    pub odd: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Edge2Profile {
    pub paths: Vec<PathComponent>,
    pub cycles: Vec<BTreeSet<VertexLabel>>,
    pub degrees: BTreeMap<VertexLabel, usize>,
}

pub fn edge2_profile(g: &Graph) -> Result<Edge2Profile, PropertyError> {
    let (ix, adj) = dense(g);
    if !edge2::is_edge2_colorable(&adj) {
        return Err(PropertyError::NotEdge2Colorable);
    }
    let paths = edge2::path_components(&adj)
        .into_iter()
        .map(|(_, (a, b), len)| PathComponent {
            ends: (ix.label(a).clone(), ix.label(b).clone()),
            odd: len % 2 == 1,
        })
        .collect();
    let cycles = crate::dense::components(&adj, ix.full_mask())
        .into_iter()
        .filter(|&c| bits(c).all(|v| adj[v].count_ones() == 2))
        .map(|c| ix.labels_of(c))
        .collect();
    Ok(Edge2Profile {
        paths,
        cycles,
        degrees: g.degrees(),
    })
}

pub fn cutsets_below(g: &Graph, k: usize) -> Result<Vec<BTreeSet<VertexLabel>>, PropertyError> {
    if k == 0 {
        return Err(PropertyError::InvalidK);
    }
    let (ix, adj) = dense(g);
    Ok(connectivity::cutsets_below(&adj, k)
        .into_iter()
        .map(|c| ix.labels_of(c))
        .collect())
}

pub fn is_k_connected(g: &Graph, k: usize) -> Result<bool, PropertyError> {
    if k == 0 {
        return Err(PropertyError::InvalidK);
    }
    Ok(connectivity::is_k_connected(&dense(g).1, k))
}

pub fn classify_pattern(h: &Graph) -> Result<StrongClass, PropertyError> {
    if h.is_empty() {
        return Err(PropertyError::EmptyPattern);
    }
    Ok(pattern::classify(&dense(h).1))
}

/// A graph property evaluated on dense adjacency rows.
///
/// `k = 0` is accepted here and gives the natural degenerate predicate;
/// the label-level entry points reject it.
#[derive(Debug, Clone)]
pub enum Evaluator {
    Hamiltonian,
    NonPlanar,
    Subgraph(PatternMatcher),
    KColorable(usize),
    Edge2Colorable,
    /// has a cutset of size below k
    CutsetBelow(usize),
    /// at most k vertices or a cutset of size below k
    NotKConnected(usize),
}

impl Evaluator {
    pub fn holds(&self, adj: &[u64]) -> Result<bool, PropertyError> {
        Ok(match self {
            Evaluator::Hamiltonian => hamiltonian::has_hamiltonian_cycle(adj),
            Evaluator::NonPlanar => {
                let n = crate::dense::vertex_mask(adj).count_ones() as usize;
                if n > PLANARITY_LIMIT {
                    return Err(PropertyError::TooLarge {
                        vertices: n,
                        limit: PLANARITY_LIMIT,
                    });
                }
                !planarity::is_planar(adj)
            }
            Evaluator::Subgraph(m) => m.is_found_in(adj),
            Evaluator::KColorable(k) => coloring::is_colorable(adj, *k),
            Evaluator::Edge2Colorable => edge2::is_edge2_colorable(adj),
            Evaluator::CutsetBelow(k) => connectivity::has_cutset_below(adj, *k),
            Evaluator::NotKConnected(k) => !connectivity::is_k_connected(adj, *k),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_complete, build_cycle, build_path, label_set, parse_graph};

    #[test]
    fn label_level_examples() {
        let tri = build_cycle(&["a", "b", "c"]).unwrap();
        assert!(is_hamiltonian(&tri));
        assert!(!is_hamiltonian(&build_path(&["a", "b", "c"]).unwrap()));
        let k4e = parse_graph("a b\na c\na d\nb c\nc d").unwrap();
        assert!(is_hamiltonian(&k4e));

        let k5 = build_complete(&label_set(["a", "b", "c", "d", "e"]).unwrap()).unwrap();
        assert!(!is_planar(&k5).unwrap());
        let big = build_path(&[
            "a", "b", "c", "d", "e", "f", "g", "h", "i", "j", "k", "l", "m", "n", "o", "p", "q",
        ])
        .unwrap();
        assert_eq!(
            is_planar(&big),
            Err(PropertyError::TooLarge {
                vertices: 17,
                limit: 16
            })
        );
    }

    #[test]
    fn colorings_as_labels() {
        let path = build_path(&["a", "b", "c"]).unwrap();
        let got = enumerate_proper_colorings(&path, 2).unwrap();
        let want = ColoringPartition {
            blocks: vec![label_set(["a", "c"]).unwrap(), label_set(["b"]).unwrap()],
        };
        assert_eq!(got.into_iter().collect::<Vec<_>>(), vec![want]);
        assert_eq!(enumerate_proper_colorings(&path, 0), Err(PropertyError::InvalidK));
    }

    #[test]
    fn edge2_profile_of_cycle_and_path() {
        let c4 = build_cycle(&["a", "b", "c", "d"]).unwrap();
        let p = edge2_profile(&c4).unwrap();
        assert!(p.paths.is_empty());
        assert_eq!(p.cycles, vec![label_set(["a", "b", "c", "d"]).unwrap()]);
        let path = build_path(&["c", "a", "b"]).unwrap();
        let p = edge2_profile(&path).unwrap();
        assert_eq!(p.paths.len(), 1);
        assert_eq!(p.paths[0].ends.0.as_str(), "b");
        assert_eq!(p.paths[0].ends.1.as_str(), "c");
        assert!(!p.paths[0].odd);
        let star = parse_graph("a b\na c\na d").unwrap();
        assert_eq!(edge2_profile(&star), Err(PropertyError::NotEdge2Colorable));
    }

    #[test]
    fn cutsets_as_labels() {
        let path = build_path(&["a", "b", "c"]).unwrap();
        assert_eq!(cutsets_below(&path, 2).unwrap(), vec![label_set(["b"]).unwrap()]);
        let two = parse_graph("a b\nc d").unwrap();
        assert_eq!(cutsets_below(&two, 1).unwrap(), vec![BTreeSet::new()]);
        assert!(is_k_connected(&build_complete(&label_set(["a", "b", "c", "d"]).unwrap()).unwrap(), 3).unwrap());
    }

    #[test]
    fn pattern_classes() {
        assert_eq!(classify_pattern(&Graph::new()), Err(PropertyError::EmptyPattern));
        let p4 = build_path(&["a", "b", "c", "d", "e"]).unwrap();
        assert_eq!(classify_pattern(&p4).unwrap(), StrongClass::NotStrongTree);
    }
}
