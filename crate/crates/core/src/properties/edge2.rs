//! Edge 2-colorability: every component is a path or an even cycle.

use crate::dense::{bits, components, vertex_mask};

pub fn is_edge2_colorable(adj: &[u64]) -> bool {
    let all = vertex_mask(adj);
    if bits(all).any(|v| adj[v].count_ones() > 2) {
        return false;
    }
    components(adj, all).into_iter().all(|comp| {
        let is_cycle = bits(comp).all(|v| adj[v].count_ones() == 2);
        !is_cycle || comp.count_ones() % 2 == 0
    })
}

/// Path components of a graph of maximum degree two: `(component, endpoints, edge count)`.
pub fn path_components(adj: &[u64]) -> Vec<(u64, (usize, usize), usize)> {
    let all = vertex_mask(adj);
    components(adj, all)
        .into_iter()
        .filter_map(|comp| {
            let mut ends = bits(comp).filter(|&v| adj[v].count_ones() == 1);
            let a = ends.next()?;
            let b = ends.next()?;
            Some((comp, (a, b), comp.count_ones() as usize - 1))
        })
        .collect()
}
