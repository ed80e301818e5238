//! Non-induced subgraph containment by ordered backtracking.

use crate::dense::{bit, bits, edge_count, vertex_mask};

/// A pattern prepared for repeated matching against many hosts.
#[derive(Debug, Clone)]
pub struct PatternMatcher {
    /// pattern vertices in matching order
    order: Vec<usize>,
    /// for each position, the earlier positions adjacent to it
    back: Vec<Vec<usize>>,
    degree: Vec<u32>,
    edges: usize,
}

impl PatternMatcher {
    pub fn new(pattern: &[u64]) -> Self {
        let all = vertex_mask(pattern);
        let mut order: Vec<usize> = Vec::new();
        let mut placed = 0u64;
        while placed != all {
            let next = bits(all & !placed)
                .max_by_key(|&v| {
                    (
                        (pattern[v] & placed).count_ones(),
                        pattern[v].count_ones(),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("unplaced vertex");
            order.push(next);
            placed |= bit(next);
        }
        let back = order
            .iter()
            .enumerate()
            .map(|(i, &v)| (0..i).filter(|&j| pattern[v] & bit(order[j]) != 0).collect())
            .collect();
        let degree = order.iter().map(|&v| pattern[v].count_ones()).collect();
        PatternMatcher {
            order,
            back,
            degree,
            edges: edge_count(pattern),
        }
    }

    pub fn is_found_in(&self, host: &[u64]) -> bool {
        let hv = vertex_mask(host);
        if self.order.len() > hv.count_ones() as usize || self.edges > edge_count(host) {
            return false;
        }
        let mut image = vec![0usize; self.order.len()];
        self.search(host, hv, 0, &mut image, 0)
    }

    fn search(&self, host: &[u64], hv: u64, pos: usize, image: &mut [usize], used: u64) -> bool {
        if pos == self.order.len() {
            return true;
        }
        let mut cand = hv & !used;
        for &q in &self.back[pos] {
            cand &= host[image[q]];
        }
        for t in bits(cand) {
            if host[t].count_ones() < self.degree[pos] {
                continue;
            }
            image[pos] = t;
            if self.search(host, hv, pos + 1, image, used | bit(t)) {
                return true;
            }
        }
        false
    }
}

pub fn contains_subgraph(pattern: &[u64], host: &[u64]) -> bool {
    PatternMatcher::new(pattern).is_found_in(host)
}
