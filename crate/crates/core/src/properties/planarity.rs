//! Exact planarity test.
//!
//! The graph is split into biconnected blocks (a graph is planar iff every
//! block is) and each block is embedded incrementally by path addition in the
//! style of Demoucron, Malgrange and Pertuiset: keep a plane subgraph with its
//! face cycles, compute the fragments hanging off it, and embed a path of a
//! fragment that has the fewest admissible faces. A fragment with no
//! admissible face certifies non-planarity.

use crate::dense::{bit, bits, components, edge_count, vertex_mask};

/// Largest vertex count accepted by the public planarity predicate.
pub const PLANARITY_LIMIT: usize = 16;

pub fn is_planar(adj: &[u64]) -> bool {
    let n = vertex_mask(adj).count_ones() as usize;
    let m = edge_count(adj);
    if n <= 4 || m <= 8 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(adj).iter().all(|b| block_is_planar(b))
}

/// Edge sets of the biconnected blocks, each as adjacency rows.
pub fn biconnected_blocks(adj: &[u64]) -> Vec<Vec<u64>> {
    let mut state = Tarjan {
        adj,
        disc: vec![0; adj.len()],
        low: vec![0; adj.len()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in bits(vertex_mask(adj)) {
        if state.disc[v] == 0 {
            state.visit(v, usize::MAX);
        }
    }
    state.blocks
}

struct Tarjan<'a> {
    adj: &'a [u64],
    disc: Vec<u32>,
    low: Vec<u32>,
    time: u32,
    stack: Vec<(usize, usize)>,
    blocks: Vec<Vec<u64>>,
}

impl Tarjan<'_> {
    fn visit(&mut self, u: usize, parent: usize) {
        self.time += 1;
        self.disc[u] = self.time;
        self.low[u] = self.time;
        for v in bits(self.adj[u]) {
            if self.disc[v] == 0 {
                self.stack.push((u, v));
                self.visit(v, u);
                self.low[u] = self.low[u].min(self.low[v]);
                if self.low[v] >= self.disc[u] {
                    let mut block = vec![0u64; self.adj.len()];
                    while let Some((a, b)) = self.stack.pop() {
                        block[a] |= bit(b);
                        block[b] |= bit(a);
                        if (a, b) == (u, v) {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if v != parent && self.disc[v] < self.disc[u] {
                self.stack.push((u, v));
                self.low[u] = self.low[u].min(self.disc[v]);
            }
        }
    }
}

enum Fragment {
    Chord(usize, usize),
    Piece { inner: u64, attach: u64 },
}

impl Fragment {
    fn attachments(&self) -> u64 {
        match *self {
            Fragment::Chord(u, v) => bit(u) | bit(v),
            Fragment::Piece { attach, .. } => attach,
        }
    }
}

fn block_is_planar(adj: &[u64]) -> bool {
    let all = vertex_mask(adj);
    let n = all.count_ones() as usize;
    let m = edge_count(adj);
    if n <= 4 || m <= 8 {
        return true;
    }
    if m > 3 * n - 6 {
        return false;
    }

    let u = all.trailing_zeros() as usize;
    let v = adj[u].trailing_zeros() as usize;
    let cycle = {
        let mut without = adj.to_vec();
        without[u] &= !bit(v);
        without[v] &= !bit(u);
        shortest_path(&without, v, u, all).expect("every block edge lies on a cycle")
    };

    let mut plane = vec![0u64; adj.len()];
    for w in cycle.windows(2) {
        plane[w[0]] |= bit(w[1]);
        plane[w[1]] |= bit(w[0]);
    }
    plane[u] |= bit(v);
    plane[v] |= bit(u);
    let mut placed = cycle.iter().fold(0, |m, &x| m | bit(x));
    let mut faces = vec![cycle.clone(), cycle];

    loop {
        let frags = fragments(adj, &plane, placed, all);
        if frags.is_empty() {
            return true;
        }
        let face_masks: Vec<u64> = faces
            .iter()
            .map(|f| f.iter().fold(0, |m, &x| m | bit(x)))
            .collect();
        let mut choice: Option<(usize, usize, usize)> = None;
        for (fi, frag) in frags.iter().enumerate() {
            let attach = frag.attachments();
            let admissible: Vec<usize> = face_masks
                .iter()
                .enumerate()
                .filter(|(_, fm)| attach & !**fm == 0)
                .map(|(i, _)| i)
                .collect();
            if admissible.is_empty() {
                return false;
            }
            if choice.is_none_or(|(_, _, count)| admissible.len() < count) {
                choice = Some((fi, admissible[0], admissible.len()));
            }
        }
        let (fi, face_idx, _) = choice.expect("at least one fragment");
        let path = fragment_path(adj, placed, &frags[fi]);

        for w in path.windows(2) {
            plane[w[0]] |= bit(w[1]);
            plane[w[1]] |= bit(w[0]);
        }
        placed |= path.iter().fold(0, |m, &x| m | bit(x));

        let face = &faces[face_idx];
        let (a, b) = (path[0], path[path.len() - 1]);
        let i = face.iter().position(|&x| x == a).expect("attachment on face");
        let j = face.iter().position(|&x| x == b).expect("attachment on face");
        let interior = &path[1..path.len() - 1];
        let mut first = arc(face, i, j);
        first.extend(interior.iter().rev());
        let mut second = arc(face, j, i);
        second.extend(interior.iter());
        faces[face_idx] = first;
        faces.push(second);
    }
}

fn arc(face: &[usize], from: usize, to: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut k = from;
    loop {
        out.push(face[k]);
        if k == to {
            return out;
        }
        k = (k + 1) % face.len();
    }
}

fn fragments(adj: &[u64], plane: &[u64], placed: u64, all: u64) -> Vec<Fragment> {
    let mut out = Vec::new();
    for u in bits(placed) {
        for v in bits(adj[u] & placed & !plane[u]) {
            if v > u {
                out.push(Fragment::Chord(u, v));
            }
        }
    }
    for inner in components(adj, all & !placed) {
        let attach = bits(inner).fold(0, |m, x| m | (adj[x] & placed));
        out.push(Fragment::Piece { inner, attach });
    }
    out
}

/// A path through the fragment joining two distinct attachment vertices.
fn fragment_path(adj: &[u64], placed: u64, frag: &Fragment) -> Vec<usize> {
    match *frag {
        Fragment::Chord(u, v) => vec![u, v],
        Fragment::Piece { inner, attach } => {
            let a = attach.trailing_zeros() as usize;
            let entry = (adj[a] & inner).trailing_zeros() as usize;
            let mut parent = vec![usize::MAX; adj.len()];
            let mut seen = bit(entry);
            let mut queue = std::collections::VecDeque::from([entry]);
            while let Some(d) = queue.pop_front() {
                let exits = adj[d] & placed & !bit(a);
                if exits != 0 {
                    let mut path = vec![exits.trailing_zeros() as usize, d];
                    let mut x = d;
                    while parent[x] != usize::MAX {
                        x = parent[x];
                        path.push(x);
                    }
                    path.push(a);
                    path.reverse();
                    return path;
                }
                for w in bits(adj[d] & inner & !seen) {
                    seen |= bit(w);
                    parent[w] = d;
                    queue.push_back(w);
                }
            }
            unreachable!("a fragment of a biconnected block has two attachments")
        }
    }
}

fn shortest_path(adj: &[u64], from: usize, to: usize, within: u64) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; adj.len()];
    let mut seen = bit(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(x) = queue.pop_front() {
        if x == to {
            let mut path = vec![to];
            let mut y = to;
            while parent[y] != usize::MAX {
                y = parent[y];
                path.push(y);
            }
            path.reverse();
            return Some(path);
        }
        for w in bits(adj[x] & within & !seen) {
            seen |= bit(w);
            parent[w] = x;
            queue.push_back(w);
        }
    }
    None
}
