//! Separating extensions built from the non-equivalence proofs.
//!
//! A witness for a non-equivalent pair `(G, H)` is a graph `F` such that
//! exactly one of `G ∪ F` and `H ∪ F` has the property. Every builder first
//! checks the bare pair (`F = ∅` separates whenever `G` and `H` already
//! disagree), then applies the gadget for its property. Whatever the builder
//! produces is checked with [`verify_witness`] before it is returned.

mod coloring;
mod connectivity;
mod edge2;
mod hamiltonian;
mod planarity;
mod subgraph;

use std::collections::BTreeSet;

use serde::Serialize;

use crate::deciders::{dense_pair, PropertySelector};
use crate::dense::{bits, vertex_mask, Indexer};
use crate::error::{Error, Result};
use crate::graph::{fresh_vertices, Graph, VertexLabel};

/// Which input graph has the property once `F` is added.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    First,
    Second,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::First => Side::Second,
            Side::Second => Side::First,
        }
    }
}

/// Names the gadget a witness was built from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Construction {
    /// the pair already disagrees; `F = ∅`
    BaseDifference,
    /// `F` is one of the inputs, so the union `G ∪ H` meets the other input
    UnionTransfer,
    /// `(K - e)` plus the fresh-vertex path gadget of the hamiltonian case
    CompleteMinusEdge,
    /// `K5 - e` around a single edge
    PlanarK5,
    /// two fresh vertices joined to a triangle and to each other
    PlanarTriangle,
    /// one fresh vertex joined to `e` and the two opposite face vertices
    PlanarApex,
    /// fresh leaves completing a star
    StarLeaves,
    /// fresh path closing a cycle through `e`
    CyclePath,
    /// fresh copy of the pattern glued along `e`, minus `e`
    PatternCopy,
    /// 3-edge path pattern, `e` is an isolated edge
    PathIsolatedEdge,
    /// 3-edge path pattern, `e` is a star edge
    PathStarEdge,
    /// 3-edge path pattern, `e` is a triangle edge
    PathTriangleEdge,
    /// `K_{k+1}` minus an edge on a vertex missing from one side
    ColoringClique,
    /// complete k-partite graph on a coloring of one side only
    ColoringMultipartite,
    /// two fresh pendant edges on a vertex missing from one side
    Edge2VertexGap,
    /// one fresh pendant edge on a vertex whose degree differs
    Edge2DegreeGap,
    /// closing a path into an odd cycle on one side only
    Edge2PathClosure,
    /// an edge of one side only, pushing a vertex of the other to degree 3
    Edge2DegreeOverflow,
    /// star on the other side's vertices plus a pendant edge
    ConnStarPendant,
    /// a fresh edge disjoint from everything
    ConnDisjointEdge,
    /// clique with one vertex attached through a small fresh set
    ConnCliqueAttach,
    /// two cliques joined through a small universal set
    ConnComponentCliques,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub extension: Graph,
    pub property_side: Side,
    pub construction: Construction,
    /// Generated vertices used by `extension`.
    pub fresh: Vec<VertexLabel>,
}

impl Witness {
    /// The same witness for the pair with its two graphs exchanged.
    pub fn swapped(mut self) -> Witness {
        self.property_side = self.property_side.flip();
        self
    }

    pub fn verify(&self, prop: &PropertySelector, g: &Graph, h: &Graph) -> Result<bool> {
        Ok(property_side(prop, g, h, &self.extension)? == Some(self.property_side))
    }
}

/// The side whose union with `f` has the property, or `None` when both or
/// neither do.
pub fn property_side(
    prop: &PropertySelector,
    g: &Graph,
    h: &Graph,
    f: &Graph,
) -> Result<Option<Side>> {
    let ev = prop.evaluator()?;
    let ix = Indexer::for_graphs([g, h, f])
        .ok_or_else(|| Error::TooManyVertices(g.union(h).union(f).vertex_count()))?;
    let ff = ix.adjacency(f);
    let a = or_rows(&ix.adjacency(g), &ff);
    let b = or_rows(&ix.adjacency(h), &ff);
    Ok(match (ev.holds(&a)?, ev.holds(&b)?) {
        (true, false) => Some(Side::First),
        (false, true) => Some(Side::Second),
        _ => None,
    })
}

/// True iff exactly one of `g ∪ f` and `h ∪ f` has the property.
pub fn verify_witness(prop: &PropertySelector, g: &Graph, h: &Graph, f: &Graph) -> Result<bool> {
    Ok(property_side(prop, g, h, f)?.is_some())
}

pub(crate) fn or_rows(a: &[u64], b: &[u64]) -> Vec<u64> {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}

/// Builds and verifies a separating extension for a non-equivalent pair.
pub fn witness_for(prop: &PropertySelector, g: &Graph, h: &Graph) -> Result<Witness> {
    prop.validate()?;
    if g == h {
        return Err(Error::NoWitness("the two graphs are equal".into()));
    }
    let empty = Graph::new();
    if let Some(side) = property_side(prop, g, h, &empty)? {
        return Ok(Witness {
            extension: empty,
            property_side: side,
            construction: Construction::BaseDifference,
            fresh: Vec::new(),
        });
    }
    let ctx = Pair::new(g, h)?;
    let draft = match prop {
        PropertySelector::Hamiltonian => hamiltonian::build(&ctx),
        PropertySelector::Planarity => planarity::build(&ctx),
        PropertySelector::Subgraph(p) => subgraph::build(&ctx, p),
        PropertySelector::KColor(k) => coloring::build(&ctx, *k),
        PropertySelector::Edge2Color => edge2::build(&ctx),
        PropertySelector::KConn(k) | PropertySelector::KConnPsi(k) => {
            connectivity::build(&ctx, *k)
        }
    }?;
    let w = draft.finish();
    if w.verify(prop, g, h)? {
        Ok(w)
    } else {
        Err(Error::NoWitness(format!(
            "{:?} extension failed verification for {prop}",
            w.construction
        )))
    }
}

/// The input pair on a shared index, with room for fresh vertices.
pub(crate) struct Pair {
    pub ix: Indexer,
    pub a: Vec<u64>,
    pub b: Vec<u64>,
    avoid: BTreeSet<VertexLabel>,
}

impl Pair {
    fn new(g: &Graph, h: &Graph) -> Result<Pair> {
        let (ix, a, b) = dense_pair(g, h)?;
        let avoid = ix.labels().iter().cloned().collect();
        Ok(Pair { ix, a, b, avoid })
    }

    pub fn vertices(&self) -> u64 {
        vertex_mask(&self.a) | vertex_mask(&self.b)
    }

    /// The pair's rows as `(first, second)` or swapped, with the side that
    /// `First` maps to.
    pub fn oriented(&self, swap: bool) -> (&[u64], &[u64], Side) {
        if swap {
            (&self.b, &self.a, Side::Second)
        } else {
            (&self.a, &self.b, Side::First)
        }
    }

    /// An empty extension with `count` fresh vertices appended to the index.
    pub fn draft(&self, count: usize, side: Side, construction: Construction) -> Draft {
        let fresh = fresh_vertices(count, &self.avoid);
        let ix = self
            .ix
            .extended(fresh)
            .expect("fresh vertices keep the pool within 64");
        let base = self.ix.len();
        Draft {
            f: vec![0; ix.len()],
            ix,
            base,
            side,
            construction,
        }
    }

    /// Lowest edge in `p` but not in `q`.
    pub fn edge_only_in(p: &[u64], q: &[u64]) -> Option<(usize, usize)> {
        p.iter()
            .zip(q)
            .enumerate()
            .find_map(|(u, (x, y))| bits(x & !y).find(|&v| v > u).map(|v| (u, v)))
    }
}

/// An extension under construction on the pair's index plus fresh vertices.
pub(crate) struct Draft {
    pub ix: Indexer,
    pub f: Vec<u64>,
    /// index of the first fresh vertex
    pub base: usize,
    pub side: Side,
    pub construction: Construction,
}

impl Draft {
    pub fn fresh(&self, i: usize) -> usize {
        self.base + i
    }

    pub fn add(&mut self, u: usize, v: usize) {
        crate::dense::add_edge(&mut self.f, u, v);
    }

    pub fn remove(&mut self, u: usize, v: usize) {
        crate::dense::remove_edge(&mut self.f, u, v);
    }

    /// Adds all of `rows` (which may be shorter than the draft).
    pub fn add_rows(&mut self, rows: &[u64]) {
        for (r, x) in self.f.iter_mut().zip(rows) {
            *r |= x;
        }
    }

    pub fn clique(&mut self, mask: u64) {
        for u in bits(mask) {
            self.f[u] |= mask & !crate::dense::bit(u);
        }
    }

    fn finish(self) -> Witness {
        let used = vertex_mask(&self.f);
        let fresh = (self.base..self.ix.len())
            .filter(|&i| used & crate::dense::bit(i) != 0)
            .map(|i| self.ix.label(i).clone())
            .collect();
        Witness {
            extension: self.ix.graph_of(&self.f),
            property_side: self.side,
            construction: self.construction,
            fresh,
        }
    }
}
