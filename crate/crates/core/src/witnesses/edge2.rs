//! Edge 2-colorability: vertex, degree and path-endpoint mismatches.

use super::{Construction, Draft, Pair, Side};
use crate::dense::{bits, vertex_mask};
use crate::error::{Error, Result};
use crate::properties::edge2::path_components;

/// Both graphs are edge 2-colorable here. In order of the checks:
/// a vertex `u` present on one side only gets two fresh pendant edges; a
/// vertex of degree 1 on one side and 2 on the other gets one; a path `P`
/// whose endpoints `a, b` do not bound a path of the same parity on the other
/// side is closed into an odd cycle by `{au, ub}` (odd `P`) or `{ab}` (even `P`).
/// When all of that matches, an edge on one side only with an endpoint of
/// degree 2 is added to the other side, where that endpoint reaches degree 3.
pub(super) fn build(p: &Pair) -> Result<Draft> {
    let (va, vb) = (vertex_mask(&p.a), vertex_mask(&p.b));
    if va != vb {
        // the side missing u keeps the property
        let (u, side) = match (vb & !va).trailing_zeros() {
            64 => ((va & !vb).trailing_zeros() as usize, Side::Second),
            t => (t as usize, Side::First),
        };
        let mut d = p.draft(2, side, Construction::Edge2VertexGap);
        let (v, w) = (d.fresh(0), d.fresh(1));
        d.add(v, u);
        d.add(w, u);
        return Ok(d);
    }
    for u in bits(va) {
        let (da, db) = (p.a[u].count_ones(), p.b[u].count_ones());
        if da != db {
            let side = if da < db { Side::First } else { Side::Second };
            let mut d = p.draft(1, side, Construction::Edge2DegreeGap);
            let v = d.fresh(0);
            d.add(v, u);
            return Ok(d);
        }
    }
    for swap in [false, true] {
        let (first, second, side) = p.oriented(swap);
        let theirs = path_components(second);
        for (_, (a, b), len) in path_components(first) {
            let matched = theirs
                .iter()
                .any(|&(_, ends, l)| ends == (a, b) && l % 2 == len % 2);
            if matched {
                continue;
            }
            // the other side keeps the property
            let mut d = p.draft(1, side.flip(), Construction::Edge2PathClosure);
            if len % 2 == 1 {
                let u = d.fresh(0);
                d.add(a, u);
                d.add(u, b);
            } else {
                d.add(a, b);
            }
            return Ok(d);
        }
    }
    for swap in [false, true] {
        let (first, second, side) = p.oriented(swap);
        let only = bits(va).find_map(|u| {
            bits(first[u] & !second[u])
                .find(|&v| first[u].count_ones() == 2 || first[v].count_ones() == 2)
                .map(|v| (u, v))
        });
        if let Some((u, v)) = only {
            // degrees agree, so the endpoint overflows on the second side
            let mut d = p.draft(0, side, Construction::Edge2DegreeOverflow);
            d.add(u, v);
            return Ok(d);
        }
    }
    Err(Error::NoWitness("the graphs are equal".into()))
}
