//! Non-planarity: planar pairs are separated by completing a `K5` across `e`.

use super::{or_rows, Construction, Draft, Pair, Side};
use crate::dense::{add_edge, bit, bits, remove_edge, vertex_mask};
use crate::error::{Error, Result};
use crate::properties::planarity::is_planar;

/// If `G ∪ H` is already non-planar, `F = H` works. Otherwise grow `G ∪ H`
/// greedily to a maximal planar `G''` on the same vertices and search the
/// gadgets that turn `G''` non-planar while `G'' - e` stays planar; the
/// extension is `(G'' - e)` plus that gadget.
pub(super) fn build(p: &Pair) -> Result<Draft> {
    let union = or_rows(&p.a, &p.b);
    if !is_planar(&union) {
        let mut d = p.draft(0, Side::First, Construction::UnionTransfer);
        d.add_rows(&p.b);
        return Ok(d);
    }
    let swap = Pair::edge_only_in(&p.a, &p.b).is_none();
    let (first, second, side) = p.oriented(swap);
    let (x, y) = Pair::edge_only_in(first, second)
        .ok_or_else(|| Error::NoWitness("graphs are equal".into()))?;

    let full = maximal_planar(&union);
    let all = vertex_mask(&full);
    let n = all.count_ones();
    let mut rest = full.clone();
    remove_edge(&mut rest, x, y);

    if n == 2 {
        let mut d = p.draft(3, side, Construction::PlanarK5);
        d.clique(bit(x) | bit(y) | bit(d.fresh(0)) | bit(d.fresh(1)) | bit(d.fresh(2)));
        d.remove(x, y);
        return Ok(d);
    }

    let common = full[x] & full[y];
    // apex gadget: w joined to x, y and two common neighbours
    let cs: Vec<usize> = bits(common).collect();
    for (i, &v1) in cs.iter().enumerate() {
        for &v2 in &cs[i + 1..] {
            let mut d = p.draft(1, side, Construction::PlanarApex);
            let w = d.fresh(0);
            for t in [x, y, v1, v2] {
                d.add(w, t);
            }
            if separates(&full, &rest, &d.f) {
                d.add_rows(&rest);
                return Ok(d);
            }
        }
    }
    // triangle gadget: v, w joined to each other and to x, y, z
    for z in cs {
        let mut d = p.draft(2, side, Construction::PlanarTriangle);
        let (v, w) = (d.fresh(0), d.fresh(1));
        d.add(v, w);
        for t in [x, y, z] {
            d.add(v, t);
            d.add(w, t);
        }
        if separates(&full, &rest, &d.f) {
            d.add_rows(&rest);
            return Ok(d);
        }
    }
    Err(Error::NoWitness("no planarity gadget separates the pair".into()))
}

fn separates(full: &[u64], rest: &[u64], gadget: &[u64]) -> bool {
    let mut with = gadget.to_vec();
    let mut without = gadget.to_vec();
    for (i, (a, b)) in full.iter().zip(rest).enumerate() {
        with[i] |= a;
        without[i] |= b;
    }
    !is_planar(&with) && is_planar(&without)
}

/// Adds vertex pairs in lexicographic order whenever the result stays planar.
fn maximal_planar(adj: &[u64]) -> Vec<u64> {
    let mut g = adj.to_vec();
    let all = vertex_mask(adj);
    for u in bits(all) {
        for v in bits(all & !g[u]).filter(|&v| v > u) {
            add_edge(&mut g, u, v);
            if !is_planar(&g) {
                remove_edge(&mut g, u, v);
            }
        }
    }
    g
}
