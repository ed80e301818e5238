//! Pattern containment for the classes where containment is strong.

use super::{or_rows, Construction, Draft, Pair, Side};
use crate::deciders::dense;
use crate::dense::{bit, bits, remove_edge};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::properties::{pattern, PatternMatcher, StrongClass};

/// Neither graph contains the pattern. If `G ∪ H` does, `F = H`. Otherwise
/// `F = (G' - e) ∪ F1` with `G' = G ∪ H`, `e` in one graph only and `F1` the
/// class gadget that completes the pattern through `e` and nowhere else.
pub(super) fn build(p: &Pair, pat: &Graph) -> Result<Draft> {
    let (_, pa) = dense(pat)?;
    let class = pattern::classify(&pa);
    if !class.is_strong() {
        return Err(Error::Unsupported(format!(
            "no separating construction is known for {class:?} patterns"
        )));
    }
    let union = or_rows(&p.a, &p.b);
    if PatternMatcher::new(&pa).is_found_in(&union) {
        let mut d = p.draft(0, Side::First, Construction::UnionTransfer);
        d.add_rows(&p.b);
        return Ok(d);
    }
    let swap = Pair::edge_only_in(&p.a, &p.b).is_none();
    let (first, second, side) = p.oriented(swap);
    let (x, y) = Pair::edge_only_in(first, second)
        .ok_or_else(|| Error::NoWitness("graphs are equal".into()))?;
    let mut rest = union.clone();
    remove_edge(&mut rest, x, y);

    let pv: Vec<usize> = bits(crate::dense::vertex_mask(&pa)).collect();
    let k = crate::dense::edge_count(&pa);
    let mut d = match class {
        StrongClass::Star => {
            let need = k - union[x].count_ones() as usize;
            let mut d = p.draft(need, side, Construction::StarLeaves);
            for i in 0..need {
                let l = d.fresh(i);
                d.add(x, l);
            }
            d
        }
        StrongClass::Cycle => {
            let mut d = p.draft(k - 2, side, Construction::CyclePath);
            let mut prev = x;
            for i in 0..k - 2 {
                let w = d.fresh(i);
                d.add(prev, w);
                prev = w;
            }
            d.add(prev, y);
            d
        }
        StrongClass::Complete | StrongClass::ThreeConnected | StrongClass::TwoConnCutsetEdges => {
            // map the pattern's first edge onto (x, y), everything else fresh
            let p0 = pv[0];
            let q0 = bits(pa[p0]).next().expect("pattern vertex has a neighbour");
            let mut d = p.draft(pv.len() - 2, side, Construction::PatternCopy);
            let mut image = vec![usize::MAX; pa.len()];
            image[p0] = x;
            image[q0] = y;
            let mut next = 0;
            for &v in &pv {
                if image[v] == usize::MAX {
                    image[v] = d.fresh(next);
                    next += 1;
                }
            }
            for &u in &pv {
                for v in bits(pa[u]).filter(|&v| v > u) {
                    d.add(image[u], image[v]);
                }
            }
            d.remove(x, y);
            d
        }
        StrongClass::ThreeEdgePath => path3_gadget(p, &union, x, y, side)?,
        StrongClass::NotStrongTree | StrongClass::UnknownClass => unreachable!(),
    };
    d.add_rows(&rest);
    Ok(d)
}

/// Components without a 3-edge path are stars and triangles; extend the one
/// holding `e` so that it gains a 3-edge path only while `e` is present.
fn path3_gadget(p: &Pair, g: &[u64], x: usize, y: usize, side: Side) -> Result<Draft> {
    let (dx, dy) = (g[x].count_ones(), g[y].count_ones());
    let common = g[x] & g[y] & !bit(x) & !bit(y);
    if dx == 1 && dy == 1 {
        let mut d = p.draft(2, side, Construction::PathIsolatedEdge);
        let (z, u) = (d.fresh(0), d.fresh(1));
        d.add(y, z);
        d.add(z, u);
        Ok(d)
    } else if common != 0 {
        let t = common.trailing_zeros() as usize;
        let mut d = p.draft(1, side, Construction::PathTriangleEdge);
        let z = d.fresh(0);
        d.add(t, z);
        Ok(d)
    } else {
        // star edge: extend at the leaf
        let leaf = if dx == 1 { x } else { y };
        let mut d = p.draft(1, side, Construction::PathStarEdge);
        let z = d.fresh(0);
        d.add(leaf, z);
        Ok(d)
    }
}
