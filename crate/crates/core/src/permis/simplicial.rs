//! Permis for graphs whose simplicial vertices dominate: a maximal
//! independent set `M` of simplicial vertices is updated last.

use super::{ordered_word, verified};
use crate::dynamics::Word;
use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// A maximal independent set made of simplicial vertices, if they dominate.
///
/// Shrinks the simplicial vertices to a minimal dominating subset, then drops
/// one of any two adjacent members. Adjacent simplicial vertices are closed
/// twins, so each drop keeps the set dominating.
pub fn simplicial_maximal_independent(g: &Graph) -> Option<VertexSet> {
    let simplicial = g.simplicial_vertices();
    if !g.dominates(simplicial, g.vertices()) {
        return None;
    }
    let mut m = simplicial;
    for v in simplicial.iter() {
        let smaller = m.difference(VertexSet::singleton(v));
        if g.dominates(smaller, g.vertices()) {
            m = smaller;
        }
    }
    while let Some((_, t)) = m.iter().flat_map(|s| g.neighbours(s).intersection(m).iter().map(move |t| (s, t))).next() {
        m.remove(t);
        assert!(g.dominates(m, g.vertices()), "dropping a closed twin keeps domination");
    }
    debug_assert!(g.is_independent(m));
    Some(m)
}

/// Every other vertex ascending, then `M` ascending.
pub fn simplicial_permis(g: &Graph) -> Result<Option<Word>> {
    match simplicial_maximal_independent(g) {
        None => Ok(None),
        Some(m) => {
            let w = ordered_word(g.vertices().difference(m), m);
            verified(g, w, "simplicial_permis").map(Some)
        }
    }
}
