//! Classification of subgraph patterns by the shape that makes containment strong.

use serde::Serialize;

use super::connectivity::{has_cutset_below, is_cutset, is_k_connected};
use crate::dense::{bits, edge_count, is_connected_within, subsets_of_size, vertex_mask};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum StrongClass {
    Star,
    Cycle,
    Complete,
    ThreeConnected,
    TwoConnCutsetEdges,
    ThreeEdgePath,
    NotStrongTree,
    UnknownClass,
}

impl StrongClass {
    /// Whether containing a pattern of this class is known to be strong.
    pub fn is_strong(self) -> bool {
        !matches!(self, StrongClass::NotStrongTree | StrongClass::UnknownClass)
    }
}

/// Classifies a nonempty pattern; the first matching class wins.
pub fn classify(adj: &[u64]) -> StrongClass {
    let all = vertex_mask(adj);
    let n = all.count_ones() as usize;
    let m = edge_count(adj);
    debug_assert!(m > 0, "pattern must have an edge");
    let connected = is_connected_within(adj, all);
    if bits(all).any(|v| adj[v].count_ones() as usize == m) {
        StrongClass::Star
    } else if connected && bits(all).all(|v| adj[v].count_ones() == 2) {
        StrongClass::Cycle
    } else if m == n * (n - 1) / 2 {
        StrongClass::Complete
    } else if is_k_connected(adj, 3) {
        StrongClass::ThreeConnected
    } else if n > 2
        && !has_cutset_below(adj, 2)
        && subsets_of_size(all, 2).into_iter().all(|c| {
            let mut ends = bits(c);
            let (x, y) = (ends.next().unwrap(), ends.next().unwrap());
            !is_cutset(adj, c) || adj[x] & (1 << y) != 0
        })
    {
        StrongClass::TwoConnCutsetEdges
    } else if connected && m + 1 == n {
        if m == 3 {
            StrongClass::ThreeEdgePath
        } else {
            StrongClass::NotStrongTree
        }
    } else {
        StrongClass::UnknownClass
    }
}
