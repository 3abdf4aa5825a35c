//! Transitive orientations and the comparability-graph permis.
//!
//! Two recognizers are provided: brute force over all `2^m` orientations,
//! and Golumbic's implication-class decomposition (the forcing relation Γ).
//! The permis visits vertices from lowest to highest in the partial order.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::verified;
use crate::dynamics::Word;
use crate::error::Result;
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest edge count handled by [`transitive_orientation_brute_force`].
pub const MAX_BRUTE_FORCE_EDGES: usize = 20;

/// `out[u]` holds every `v` with an arc `u → v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    pub out: Vec<u64>,
}

impl Orientation {
    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        (self.out[u] >> v) & 1 == 1
    }
}

/// Every edge oriented exactly once, and `u → v → w` implies `u → w`.
pub fn is_transitive_orientation(g: &Graph, o: &Orientation) -> bool {
    let n = g.n();
    o.out.len() == n
        && g.edges().all(|(u, v)| o.has_arc(u, v) != o.has_arc(v, u))
        && (0..n).all(|u| o.out[u] & !g.adjacency()[u] == 0)
        && (0..n).all(|u| VertexSet(o.out[u]).iter().all(|v| o.out[v] & !o.out[u] == 0))
}

/// First transitive orientation in the order of edge bit patterns, if any.
///
/// Returns `None` without deciding when the graph has more than
/// [`MAX_BRUTE_FORCE_EDGES`] edges; callers check the edge count first.
pub fn transitive_orientation_brute_force(g: &Graph) -> Option<Orientation> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.len() > MAX_BRUTE_FORCE_EDGES {
        return None;
    }
    (0u64..1 << edges.len()).find_map(|pattern| {
        let mut out = vec![0u64; g.n()];
        for (k, &(u, v)) in edges.iter().enumerate() {
            if (pattern >> k) & 1 == 0 {
                out[u] |= 1 << v;
            } else {
                out[v] |= 1 << u;
            }
        }
        let o = Orientation { out };
        is_transitive_orientation(g, &o).then_some(o)
    })
}

/// Golumbic's decomposition: repeatedly orient the implication class of the
/// least remaining edge within the graph of remaining edges. The graph is a
/// comparability graph exactly when no class contains both directions of an
/// edge, and then the union of the classes is transitive.
pub fn transitive_orientation_forcing(g: &Graph) -> Option<Orientation> {
    let n = g.n();
    let mut remaining = g.adjacency().to_vec();
    let mut out = vec![0u64; n];
    while let Some(u) = (0..n).find(|&u| remaining[u] != 0) {
        let v = remaining[u].trailing_zeros() as usize;
        let class = implication_class(&remaining, u, v)?;
        for (a, row) in class.iter().enumerate() {
            out[a] |= row;
            for b in VertexSet(*row).iter() {
                remaining[a] &= !(1 << b);
                remaining[b] &= !(1 << a);
            }
        }
    }
    let o = Orientation { out };
    debug_assert!(is_transitive_orientation(g, &o));
    Some(o)
}

/// Closure of the arc `u → v` under Γ in the graph `adj`, or `None` if it
/// forces some edge both ways.
fn implication_class(adj: &[u64], u: usize, v: usize) -> Option<Vec<u64>> {
    let mut class = vec![0u64; adj.len()];
    let mut stack = vec![(u, v)];
    class[u] |= 1 << v;
    while let Some((a, b)) = stack.pop() {
        if (class[b] >> a) & 1 == 1 {
            return None;
        }
        // a → b forces a → c for c ~ a, c ≁ b, and c → b for c ~ b, c ≁ a
        let from_a = adj[a] & !adj[b] & !(1 << b);
        let into_b = adj[b] & !adj[a] & !(1 << a);
        for c in VertexSet(from_a).iter() {
            if (class[a] >> c) & 1 == 0 {
                class[a] |= 1 << c;
                stack.push((a, c));
            }
        }
        for c in VertexSet(into_b).iter() {
            if (class[c] >> b) & 1 == 0 {
                class[c] |= 1 << b;
                stack.push((c, b));
            }
        }
    }
    Some(class)
}

/// Brute force when the edge count allows it, forcing otherwise.
pub fn transitive_orientation(g: &Graph) -> Option<Orientation> {
    if g.edge_count() <= MAX_BRUTE_FORCE_EDGES {
        transitive_orientation_brute_force(g)
    } else {
        transitive_orientation_forcing(g)
    }
}

/// Sources first, ties broken by the smallest index.
pub fn linear_extension(o: &Orientation) -> Word {
    let n = o.out.len();
    let mut indegree = vec![0usize; n];
    for &row in &o.out {
        for v in VertexSet(row).iter() {
            indegree[v] += 1;
        }
    }
    let mut ready: BinaryHeap<Reverse<usize>> = (0..n).filter(|&v| indegree[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(u)) = ready.pop() {
        order.push(u);
        for v in VertexSet(o.out[u]).iter() {
            indegree[v] -= 1;
            if indegree[v] == 0 {
                ready.push(Reverse(v));
            }
        }
    }
    assert_eq!(order.len(), n, "transitive orientations are acyclic");
    Word(order)
}

/// A permis for a comparability graph, `None` if `G` is not one.
pub fn comparability_permis(g: &Graph) -> Result<Option<Word>> {
    match transitive_orientation(g) {
        None => Ok(None),
        Some(o) => verified(g, linear_extension(&o), "comparability_permis").map(Some),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;

    #[test]
    fn examples() {
        assert_eq!(comparability_permis(&complete(3).unwrap()).unwrap(), Some(Word(vec![0, 1, 2])));
        assert!(comparability_permis(&cycle(6).unwrap()).unwrap().is_some());
        assert_eq!(comparability_permis(&cycle(5).unwrap()).unwrap(), None);
        assert_eq!(comparability_permis(&cycle(7).unwrap()).unwrap(), None);
    }

    #[test]
    fn recognizers_agree_on_small_families() {
        let graphs = [
            path(5).unwrap(),
            cycle(4).unwrap(),
            cycle(5).unwrap(),
            wheel(5).unwrap(),
            wheel(6).unwrap(),
            star(5).unwrap(),
            complete(5).unwrap(),
            Graph::empty(3),
            // the 3-sun: not a comparability graph
            Graph::new(6, [(0, 1), (1, 2), (0, 2), (0, 3), (1, 3), (1, 4), (2, 4), (0, 5), (2, 5)]).unwrap(),
        ];
        for g in graphs {
            let brute = transitive_orientation_brute_force(&g);
            let forcing = transitive_orientation_forcing(&g);
            assert_eq!(brute.is_some(), forcing.is_some(), "{g:?}");
            if let Some(o) = forcing {
                assert!(is_transitive_orientation(&g, &o));
            }
        }
    }

    #[test]
    fn forcing_handles_many_edges() {
        let k8 = complete(8).unwrap();
        assert!(transitive_orientation_brute_force(&k8).is_none());
        let word = comparability_permis(&k8).unwrap().unwrap();
        assert!(word.is_permutation_of(8));
    }
}
