//! Hamiltonicity: every pair of distinct graphs is separated.

use super::{Construction, Draft, Pair};
use crate::dense::{bit, bits};
use crate::error::{Error, Result};

/// With `e` in one graph only and `K` complete on both vertex sets, take
/// `F = (K - e) ∪ F1`, where `F1` makes `K ∪ F1` hamiltonian but not
/// `(K - e) ∪ F1`: two fresh edges to a new vertex when `K = {e}`, nothing
/// when `K` is a triangle, and otherwise the path `v3 w3 v4 w4 ... w(n-1) vn`
/// through fresh `w`s with `e = v1 v2`.
pub(super) fn build(p: &Pair) -> Result<Draft> {
    let swap = Pair::edge_only_in(&p.a, &p.b).is_none();
    let (first, second, side) = p.oriented(swap);
    let (x, y) = Pair::edge_only_in(first, second)
        .ok_or_else(|| Error::NoWitness("graphs are equal".into()))?;
    let all = p.vertices();
    let n = all.count_ones() as usize;
    let extra = match n {
        2 => 1,
        3 => 0,
        _ => n - 3,
    };
    let mut d = p.draft(extra, side, Construction::CompleteMinusEdge);
    d.clique(all);
    d.remove(x, y);
    if n == 2 {
        let w = d.fresh(0);
        d.add(x, w);
        d.add(y, w);
    } else if n > 3 {
        let rest: Vec<usize> = bits(all & !bit(x) & !bit(y)).collect();
        // rest = v3 .. vn
        for (i, pair) in rest.windows(2).enumerate() {
            let w = d.fresh(i);
            d.add(pair[0], w);
            d.add(w, pair[1]);
        }
    }
    Ok(d)
}
