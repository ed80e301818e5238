//! Hamiltonian cycle search by pruned backtracking.

use crate::dense::{bit, bits, is_connected_within, vertex_mask};

/// Whether the graph has a cycle through every vertex exactly once.
/// Graphs on fewer than three vertices have no such cycle.
pub fn has_hamiltonian_cycle(adj: &[u64]) -> bool {
    let all = vertex_mask(adj);
    if all.count_ones() < 3 {
        return false;
    }
    if bits(all).any(|v| adj[v].count_ones() < 2) || !is_connected_within(adj, all) {
        return false;
    }
    let start = all.trailing_zeros() as usize;
    extend(adj, all, start, start, bit(start))
}

fn extend(adj: &[u64], all: u64, start: usize, cur: usize, visited: u64) -> bool {
    if visited == all {
        return adj[cur] & bit(start) != 0;
    }
    let unvisited = all & !visited;
    // a vertex left with fewer than two usable neighbours can never be threaded
    for u in bits(unvisited) {
        let usable = adj[u] & (unvisited | bit(cur) | bit(start));
        if usable.count_ones() < 2 {
            return false;
        }
    }
    for next in bits(adj[cur] & unvisited) {
        if extend(adj, all, start, next, visited | bit(next)) {
            return true;
        }
    }
    false
}
