//! Good k-colorings as partitions into at most k nonempty independent blocks.

use crate::dense::{bit, bits, components, vertex_mask};

/// Every good coloring with at most `k` blocks. Blocks are listed by
/// increasing smallest vertex, which makes each partition canonical.
pub fn colorings(adj: &[u64], k: usize) -> Vec<Vec<u64>> {
    let order: Vec<usize> = bits(vertex_mask(adj)).collect();
    let mut out = Vec::new();
    let mut blocks = Vec::new();
    assign(adj, &order, k, &mut blocks, &mut |b| {
        out.push(b.to_vec());
        false
    });
    out
}

pub fn is_colorable(adj: &[u64], k: usize) -> bool {
    let order: Vec<usize> = bits(vertex_mask(adj)).collect();
    let mut blocks = Vec::new();
    assign(adj, &order, k, &mut blocks, &mut |_| true)
}

/// Restricted-growth backtracking; `visit` returns true to stop early.
fn assign(
    adj: &[u64],
    order: &[usize],
    k: usize,
    blocks: &mut Vec<u64>,
    visit: &mut dyn FnMut(&[u64]) -> bool,
) -> bool {
    let Some((&v, rest)) = order.split_first() else {
        return visit(blocks);
    };
    for i in 0..blocks.len() {
        if blocks[i] & adj[v] == 0 {
            blocks[i] |= bit(v);
            let stop = assign(adj, rest, k, blocks, visit);
            blocks[i] &= !bit(v);
            if stop {
                return true;
            }
        }
    }
    if blocks.len() < k {
        blocks.push(bit(v));
        let stop = assign(adj, rest, k, blocks, visit);
        blocks.pop();
        if stop {
            return true;
        }
    }
    false
}

/// Per-component bipartitions `(component, side holding its smallest vertex)`,
/// or `None` when some component has an odd cycle.
pub fn bipartitions(adj: &[u64]) -> Option<Vec<(u64, u64)>> {
    let mut out = Vec::new();
    for comp in components(adj, vertex_mask(adj)) {
        let s = comp.trailing_zeros() as usize;
        let mut side = [bit(s), 0u64];
        let mut frontier = bit(s);
        let mut parity = 0;
        let mut seen = bit(s);
        while frontier != 0 {
            let mut next = 0;
            for v in bits(frontier) {
                next |= adj[v];
            }
            if next & side[parity] != 0 {
                return None;
            }
            parity ^= 1;
            next &= !seen;
            side[parity] |= next;
            seen |= next;
            frontier = next;
        }
        if side[0] & side[1] != 0 {
            return None;
        }
        out.push((comp, side[0]));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dense::add_edge;

    fn adj(n: usize, edges: &[(usize, usize)]) -> Vec<u64> {
        let mut a = vec![0; n];
        for &(u, v) in edges {
            add_edge(&mut a, u, v);
        }
        a
    }

    /// Bell-style enumeration of all set partitions, filtered afterwards.
    fn brute(adj: &[u64], k: usize) -> Vec<Vec<u64>> {
        let vs: Vec<usize> = bits(vertex_mask(adj)).collect();
        let mut parts: Vec<Vec<u64>> = vec![vec![]];
        for &v in &vs {
            let mut next = Vec::new();
            for p in &parts {
                for i in 0..p.len() {
                    let mut q = p.clone();
                    q[i] |= bit(v);
                    next.push(q);
                }
                let mut q = p.clone();
                q.push(bit(v));
                next.push(q);
            }
            parts = next;
        }
        let mut good: Vec<Vec<u64>> = parts
            .into_iter()
            .filter(|p| p.len() <= k)
            .filter(|p| p.iter().all(|&b| bits(b).all(|v| adj[v] & b == 0)))
            .map(|mut p| {
                p.sort_by_key(|b| b.trailing_zeros());
                p
            })
            .collect();
        good.sort();
        good
    }

    #[test]
    fn spec_examples() {
        assert_eq!(colorings(&adj(2, &[(0, 1)]), 2), vec![vec![0b01, 0b10]]);
        assert!(colorings(&adj(3, &[(0, 1), (1, 2), (0, 2)]), 2).is_empty());
        assert_eq!(colorings(&adj(3, &[(0, 1), (1, 2)]), 2), vec![vec![0b101, 0b010]]);
        // empty graph: the single empty partition
        assert_eq!(colorings(&adj(0, &[]), 1), vec![Vec::<u64>::new()]);
        assert!(is_colorable(&adj(0, &[]), 1));
    }

    #[test]
    fn agrees_with_partition_filtering() {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        for mask in (0u32..(1 << pairs.len())).step_by(7) {
            let edges: Vec<_> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, p)| *p)
                .collect();
            let a = adj(5, &edges);
            for k in 1..=4 {
                let mut got = colorings(&a, k);
                got.sort();
                assert_eq!(got, brute(&a, k));
                assert_eq!(is_colorable(&a, k), !got.is_empty());
            }
        }
    }

    #[test]
    fn bipartitions_detect_odd_cycles() {
        assert!(bipartitions(&adj(3, &[(0, 1), (1, 2), (0, 2)])).is_none());
        let parts = bipartitions(&adj(5, &[(0, 1), (1, 2), (3, 4)])).unwrap();
        assert_eq!(parts, vec![(0b00111, 0b00101), (0b11000, 0b01000)]);
        assert!(bipartitions(&adj(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])).is_none());
    }
}
