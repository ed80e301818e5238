//! Cutsets below k: vertex-set gaps and component-family violations.

use super::{Construction, Draft, Pair};
use crate::deciders::component_violation;
use crate::dense::{bit, bits, components, vertex_mask};
use crate::error::{Error, Result};

/// The extensions separate both "has a cutset of size below k" and
/// "is not k-connected".
pub(super) fn build(p: &Pair, k: usize) -> Result<Draft> {
    let (va, vb) = (vertex_mask(&p.a), vertex_mask(&p.b));
    if va != vb {
        return vertex_gap(p, k, va, vb);
    }
    let c = component_violation(&p.a, &p.b, k)
        .ok_or_else(|| Error::NoWitness("component families agree".into()))?;
    component_gap(p, k, c)
}

/// `x` lies in `H` only; `G ∪ F` gets a small cutset and `H ∪ F` none.
fn vertex_gap(p: &Pair, k: usize, va: u64, vb: u64) -> Result<Draft> {
    // orient so that `second` holds x
    let swap = vb & !va == 0;
    let (first, second, side) = p.oriented(swap);
    let (vg, vh) = (vertex_mask(first), vertex_mask(second));
    let x = (vh & !vg).trailing_zeros() as usize;
    if k == 1 {
        let others = vh & !bit(x);
        if vg == 0 && others.count_ones() == 1 {
            // G is empty and H a single edge: a disjoint fresh edge
            // disconnects H ∪ F and leaves G ∪ F connected
            let mut d = p.draft(2, side.flip(), Construction::ConnDisjointEdge);
            let (u, v) = (d.fresh(0), d.fresh(1));
            d.add(u, v);
            return Ok(d);
        }
        let z = others.trailing_zeros() as usize;
        let mut d = p.draft(1, side, Construction::ConnStarPendant);
        for u in bits(others & !bit(z)) {
            d.add(z, u);
        }
        let y = d.fresh(0);
        d.add(x, y);
        return Ok(d);
    }
    let l = k.saturating_sub(second[x].count_ones() as usize).max(1);
    let mut d = p.draft(k, side, Construction::ConnCliqueAttach);
    let fresh: u64 = (0..k).fold(0, |m, i| m | bit(d.fresh(i)));
    d.clique((vh | fresh) & !bit(x));
    for i in 0..l {
        let f = d.fresh(i);
        d.add(x, f);
    }
    Ok(d)
}

/// `G - C` and `H - C` have different component families. An edge `e` of
/// `H - C` joins two components of `G - C`; with `G'` one of them and `L`
/// holding `k - 1 - |C|` fresh vertices, `F` is complete on `V(G) ∪ L` except
/// between `V(G')` and the rest of `G - C`. Then `C ∪ L` cuts `G ∪ F = F`,
/// while `e` reconnects `H ∪ F`.
fn component_gap(p: &Pair, k: usize, c: u64) -> Result<Draft> {
    let all = vertex_mask(&p.a);
    let live = all & !c;
    for swap in [false, true] {
        let (first, second, side) = p.oriented(swap);
        let comps = components(first, live);
        let comp_of = |v: usize| comps.iter().copied().find(|m| m & bit(v) != 0).unwrap_or(0);
        let crossing = bits(live).find_map(|u| {
            bits(second[u] & live)
                .find(|&v| comp_of(u) != comp_of(v))
                .map(|_| u)
        });
        let Some(u) = crossing else { continue };
        let g1 = comp_of(u);
        let l = k - 1 - c.count_ones() as usize;
        let mut d = p.draft(l, side, Construction::ConnComponentCliques);
        let lmask: u64 = (0..l).fold(0, |m, i| m | bit(d.fresh(i)));
        d.clique(all | lmask);
        for a in bits(g1) {
            for b in bits(live & !g1) {
                d.remove(a, b);
            }
        }
        return Ok(d);
    }
    Err(Error::NoWitness("no edge crosses the component families".into()))
}
