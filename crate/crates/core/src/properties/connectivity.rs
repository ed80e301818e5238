//! Cutsets and k-connectivity.
//!
//! `C = ∅` is a cutset iff the graph is disconnected. A nonempty `C` is a
//! cutset iff some pair of vertices outside `C` that is connected in the graph
//! becomes disconnected once `C` is deleted.

use crate::dense::{components, is_connected_within, subsets_of_size, vertex_mask};

pub fn is_cutset(adj: &[u64], c: u64) -> bool {
    let all = vertex_mask(adj);
    if c == 0 {
        return !is_connected_within(adj, all);
    }
    components(adj, all).into_iter().any(|comp| {
        let rest = comp & !c;
        rest != 0 && !is_connected_within(adj, rest)
    })
}

/// All cutsets with fewer than `k` vertices, by size then lexicographically.
pub fn cutsets_below(adj: &[u64], k: usize) -> Vec<u64> {
    let all = vertex_mask(adj);
    (0..k.min(all.count_ones() as usize + 1))
        .flat_map(|size| subsets_of_size(all, size))
        .filter(|&c| is_cutset(adj, c))
        .collect()
}

pub fn has_cutset_below(adj: &[u64], k: usize) -> bool {
    let all = vertex_mask(adj);
    (0..k.min(all.count_ones() as usize + 1))
        .any(|size| subsets_of_size(all, size).into_iter().any(|c| is_cutset(adj, c)))
}

/// More than `k` vertices and no cutset of size below `k`.
pub fn is_k_connected(adj: &[u64], k: usize) -> bool {
    vertex_mask(adj).count_ones() as usize > k && !has_cutset_below(adj, k)
}
