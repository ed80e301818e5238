//! Bitmask adjacency over at most 64 indexed vertices.
//!
//! Every exponential predicate in the crate works on `&[u64]` adjacency rows:
//! bit `j` of `adj[i]` is set iff vertices `i` and `j` are adjacent. A vertex
//! belongs to the graph iff its row is nonzero, which mirrors the edge-set
//! convention of [`Graph`].

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Edge, Graph, VertexLabel};

pub const MAX_VERTICES: usize = 64;

#[inline]
pub fn bit(i: usize) -> u64 {
    1u64 << i
}

/// Iterates the set bit positions of `mask`, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

/// Vertices with at least one neighbour.
pub fn vertex_mask(adj: &[u64]) -> u64 {
    adj.iter()
        .enumerate()
        .filter(|(_, row)| **row != 0)
        .fold(0, |m, (i, _)| m | bit(i))
}

pub fn edge_count(adj: &[u64]) -> usize {
    adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
}

pub fn add_edge(adj: &mut [u64], u: usize, v: usize) {
    adj[u] |= bit(v);
    adj[v] |= bit(u);
}

pub fn remove_edge(adj: &mut [u64], u: usize, v: usize) {
    adj[u] &= !bit(v);
    adj[v] &= !bit(u);
}

/// Vertices of `within` reachable from `start` using only vertices of `within`.
pub fn reach(adj: &[u64], start: usize, within: u64) -> u64 {
    let mut seen = bit(start);
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0;
        for v in bits(frontier) {
            next |= adj[v];
        }
        next &= within & !seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Connected components of the subgraph induced on `within`. Vertices of
/// `within` with no neighbour inside it are singleton components.
pub fn components(adj: &[u64], within: u64) -> Vec<u64> {
    let mut left = within;
    let mut out = Vec::new();
    while left != 0 {
        let s = left.trailing_zeros() as usize;
        let comp = reach(adj, s, within);
        out.push(comp);
        left &= !comp;
    }
    out
}

/// Whether the subgraph induced on `within` has at most one component.
pub fn is_connected_within(adj: &[u64], within: u64) -> bool {
    within == 0 || reach(adj, within.trailing_zeros() as usize, within) == within
}

/// Lexicographic successor of a k-combination of `0..n`; false when exhausted.
pub fn next_combination(comb: &mut [usize], n: usize) -> bool {
    let k = comb.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if comb[i] < n - k + i {
            comb[i] += 1;
            for j in i + 1..k {
                comb[j] = comb[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// All subsets of `mask` with exactly `size` elements, in increasing
/// lexicographic order of their element lists.
pub fn subsets_of_size(mask: u64, size: usize) -> Vec<u64> {
    let elems: Vec<usize> = bits(mask).collect();
    if size > elems.len() {
        return Vec::new();
    }
    let mut comb: Vec<usize> = (0..size).collect();
    let mut out = Vec::new();
    loop {
        out.push(comb.iter().fold(0, |m, &i| m | bit(elems[i])));
        if size == 0 || !next_combination(&mut comb, elems.len()) {
            break;
        }
    }
    out
}

/// Bijection between vertex labels and bit positions.
///
/// Labels are numbered in sorted order so that index order agrees with the
/// canonical label order.
#[derive(Debug, Clone, Default)]
pub struct Indexer {
    labels: Vec<VertexLabel>,
    index: BTreeMap<VertexLabel, usize>,
}

impl Indexer {
    /// Indexes the given labels; `None` if there are more than 64.
    pub fn new(labels: impl IntoIterator<Item = VertexLabel>) -> Option<Self> {
        let set: BTreeSet<VertexLabel> = labels.into_iter().collect();
        if set.len() > MAX_VERTICES {
            return None;
        }
        let labels: Vec<VertexLabel> = set.into_iter().collect();
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        Some(Indexer { labels, index })
    }

    pub fn for_graphs<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> Option<Self> {
        Indexer::new(graphs.into_iter().flat_map(Graph::vertices))
    }

    /// Appends labels after the existing ones (used for fresh vertices).
    pub fn extended(&self, extra: impl IntoIterator<Item = VertexLabel>) -> Option<Self> {
        let mut labels = self.labels.clone();
        let mut index = self.index.clone();
        for l in extra {
            if !index.contains_key(&l) {
                index.insert(l.clone(), labels.len());
                labels.push(l);
            }
        }
        (labels.len() <= MAX_VERTICES).then_some(Indexer { labels, index })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &VertexLabel {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[VertexLabel] {
        &self.labels
    }

    pub fn index_of(&self, v: &VertexLabel) -> Option<usize> {
        self.index.get(v).copied()
    }

    pub fn full_mask(&self) -> u64 {
        if self.labels.len() == 64 {
            u64::MAX
        } else {
            bit(self.labels.len()) - 1
        }
    }

    /// Adjacency rows of `g`; every vertex of `g` must be indexed.
    pub fn adjacency(&self, g: &Graph) -> Vec<u64> {
        let mut adj = vec![0u64; self.labels.len()];
        for e in g.edges() {
            let (u, v) = e.endpoints();
            add_edge(&mut adj, self.index[u], self.index[v]);
        }
        adj
    }

    pub fn mask_of<'a>(&self, vs: impl IntoIterator<Item = &'a VertexLabel>) -> u64 {
        vs.into_iter().fold(0, |m, v| m | bit(self.index[v]))
    }

    pub fn labels_of(&self, mask: u64) -> BTreeSet<VertexLabel> {
        bits(mask).map(|i| self.labels[i].clone()).collect()
    }

    pub fn edge(&self, u: usize, v: usize) -> Edge {
        Edge::new(self.labels[u].clone(), self.labels[v].clone()).expect("distinct indices")
    }

    pub fn graph_of(&self, adj: &[u64]) -> Graph {
        let mut g = Graph::new();
        for (u, row) in adj.iter().enumerate() {
            for v in bits(*row).filter(|&v| v > u) {
                g.insert(self.edge(u, v));
            }
        }
        g
    }
}
