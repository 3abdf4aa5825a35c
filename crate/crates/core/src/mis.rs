//! Maximal independent set enumeration (Bron–Kerbosch with pivoting on the
//! complement, all sets as 64-bit masks).

use std::ops::ControlFlow;

use crate::graph::Graph;
use crate::vertex_set::{low_mask, VertexSet};

/// Calls `visit` on every maximal independent set of `G[allowed]`, stopping
/// early if it returns `Break`.
pub fn for_each_maximal_independent<B>(
    g: &Graph,
    allowed: VertexSet,
    mut visit: impl FnMut(VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    let full = low_mask(g.n()) & allowed.0;
    let non_adj: Vec<u64> = (0..g.n()).map(|v| full & !g.adjacency()[v] & !(1 << v)).collect();
    expand(&non_adj, 0, full, 0, &mut visit)
}

fn expand<B>(
    non_adj: &[u64],
    chosen: u64,
    mut candidates: u64,
    mut excluded: u64,
    visit: &mut impl FnMut(VertexSet) -> ControlFlow<B>,
) -> ControlFlow<B> {
    if candidates == 0 {
        if excluded == 0 {
            return visit(VertexSet(chosen));
        }
        return ControlFlow::Continue(());
    }
    let pivot = VertexSet(candidates | excluded)
        .iter()
        .max_by_key(|&u| (candidates & non_adj[u]).count_ones())
        .expect("nonempty");
    let mut branch = candidates & !non_adj[pivot];
    while branch != 0 {
        let v = branch.trailing_zeros() as usize;
        branch &= branch - 1;
        expand(non_adj, chosen | 1 << v, candidates & non_adj[v], excluded & non_adj[v], visit)?;
        candidates &= !(1 << v);
        excluded |= 1 << v;
    }
    ControlFlow::Continue(())
}

/// All maximal independent sets of `g`, sorted by mask value.
pub fn maximal_independent_sets(g: &Graph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    let _ = for_each_maximal_independent::<()>(g, g.vertices(), |s| {
        out.push(s);
        ControlFlow::Continue(())
    });
    out.sort();
    out
}
