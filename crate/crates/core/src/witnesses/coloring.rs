//! k-colorability: separate by vertex sets, then by a coloring of one side only.

use super::{Construction, Draft, Pair, Side};
use crate::dense::{bit, vertex_mask};
use crate::error::{Error, Result};
use crate::properties::coloring::colorings;

/// Both graphs are k-colorable here. A vertex `v` on one side only, with a
/// neighbour `x`, gets `K_{k+1}` minus `vx` on `{v, x}` and `k - 1` fresh
/// vertices. With equal vertex sets, the smallest coloring of exactly one
/// side becomes a complete multipartite `F`; when that coloring has fewer
/// than `k` blocks, fresh singleton blocks are added so that `F` has no other
/// k-coloring.
pub(super) fn build(p: &Pair, k: usize) -> Result<Draft> {
    let (va, vb) = (vertex_mask(&p.a), vertex_mask(&p.b));
    if va != vb {
        let swap = va & !vb == 0;
        let (first, second, side) = p.oriented(swap);
        let v = (vertex_mask(first) & !vertex_mask(second)).trailing_zeros() as usize;
        let x = first[v].trailing_zeros() as usize;
        // the property (k-colorability) survives on the side lacking v
        let mut d = p.draft(k - 1, side.flip(), Construction::ColoringClique);
        let mut clique = bit(v) | bit(x);
        for i in 0..k - 1 {
            clique |= bit(d.fresh(i));
        }
        d.clique(clique);
        d.remove(v, x);
        return Ok(d);
    }
    let mut ca = colorings(&p.a, k);
    let mut cb = colorings(&p.b, k);
    ca.sort_unstable();
    cb.sort_unstable();
    let only_a = ca.iter().find(|c| cb.binary_search(c).is_err());
    let only_b = cb.iter().find(|c| ca.binary_search(c).is_err());
    let (blocks, side) = match (only_a, only_b) {
        (Some(c), Some(d)) if d < c => (d, Side::Second),
        (Some(c), _) => (c, Side::First),
        (None, Some(d)) => (d, Side::Second),
        (None, None) => return Err(Error::NoWitness("coloring families are equal".into())),
    };
    let pad = k.saturating_sub(blocks.len());
    let mut d = p.draft(pad, side, Construction::ColoringMultipartite);
    let mut parts = blocks.clone();
    parts.extend((0..pad).map(|i| bit(d.fresh(i))));
    let all = parts.iter().fold(0, |m, b| m | b);
    for &b in &parts {
        for u in crate::dense::bits(b) {
            d.f[u] |= all & !b;
        }
    }
    Ok(d)
}
