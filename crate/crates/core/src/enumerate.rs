//! Canonical forms and isomorphism-free enumeration of small graphs.
//!
//! The canonical form of a graph is the lexicographically smallest upper
//! triangle (graph6 column order) over all vertex orderings. It is found by
//! branch and bound over orderings: placing vertex `k` fixes the next `k`
//! bits, so any partial ordering whose prefix already exceeds the best one
//! is abandoned.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Largest order for which canonical codes fit in 128 bits.
pub const MAX_CANONICAL_ORDER: usize = 16;

/// Largest order supported by [`enumerate_graphs`].
pub const MAX_ENUMERATION_ORDER: usize = 8;

/// Canonical upper-triangle bit string, first bit most significant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: u8,
    pub code: u128,
}

impl CanonicalForm {
    pub fn to_graph(self) -> Graph {
        let n = self.n as usize;
        let len = triangle(n);
        let mut edges = Vec::new();
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if (self.code >> (len - 1 - k)) & 1 == 1 {
                    edges.push((i, j));
                }
                k += 1;
            }
        }
        Graph::new(n, edges).expect("canonical codes decode to valid graphs")
    }
}

#[inline]
const fn triangle(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

struct Search<'a> {
    g: &'a Graph,
    n: usize,
    len: usize,
    order: Vec<usize>,
    best: Option<(u128, Vec<usize>)>,
}

impl Search<'_> {
    fn run(&mut self, used: u64, prefix: u128) {
        let k = self.order.len();
        if k == self.n {
            if self.best.as_ref().map_or(true, |(b, _)| prefix < *b) {
                self.best = Some((prefix, self.order.clone()));
            }
            return;
        }
        let placed_len = triangle(k + 1);
        for u in 0..self.n {
            if (used >> u) & 1 == 1 {
                continue;
            }
            let column = self.order.iter().fold(0u128, |acc, &p| (acc << 1) | self.g.has_edge(p, u) as u128);
            let next = (prefix << k) | column;
            if let Some((best, _)) = &self.best {
                if next > best >> (self.len - placed_len) {
                    continue;
                }
            }
            self.order.push(u);
            self.run(used | 1 << u, next);
            self.order.pop();
        }
    }
}

/// Canonical form plus an ordering achieving it (`order[k]` is the vertex placed at position `k`).
pub fn canonical_labelling(g: &Graph) -> Result<(CanonicalForm, Vec<usize>)> {
    let n = g.n();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::TooLarge { what: "canonical form", n, max: MAX_CANONICAL_ORDER });
    }
    let mut search = Search { g, n, len: triangle(n), order: Vec::with_capacity(n), best: None };
    search.run(0, 0);
    let (code, order) = search.best.expect("at least one ordering exists");
    Ok((CanonicalForm { n: n as u8, code }, order))
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    canonical_labelling(g).map(|(c, _)| c)
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> Result<bool> {
    Ok(g.n() == h.n() && canonical_form(g)? == canonical_form(h)?)
}

/// One graph per isomorphism class on `n` vertices, in increasing canonical order.
///
/// Each graph is returned in its canonical labelling. Classes are grown one
/// vertex at a time: every `n`-vertex graph minus its last vertex is
/// isomorphic to some `(n-1)`-vertex representative.
pub fn enumerate_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(enumerate_forms(n)?.into_iter().map(CanonicalForm::to_graph).collect())
}

pub fn enumerate_forms(n: usize) -> Result<Vec<CanonicalForm>> {
    if n == 0 {
        return Err(Error::TooSmall { what: "enumerate_graphs", n, min: 1 });
    }
    if n > MAX_ENUMERATION_ORDER {
        return Err(Error::TooLarge { what: "enumerate_graphs", n, max: MAX_ENUMERATION_ORDER });
    }
    let mut forms = vec![CanonicalForm { n: 1, code: 0 }];
    for k in 2..=n {
        let parents: Vec<Graph> = forms.iter().map(|f| f.to_graph()).collect();
        let children: BTreeSet<CanonicalForm> = parents
            .par_iter()
            .flat_map_iter(|p| {
                (0u64..1 << (k - 1)).map(move |attach| {
                    let mut adj = p.adjacency().to_vec();
                    for (v, row) in adj.iter_mut().enumerate() {
                        *row |= ((attach >> v) & 1) << (k - 1);
                    }
                    adj.push(attach);
                    let g = Graph::from_adjacency(adj).expect("augmentation keeps invariants");
                    canonical_form(&g).expect("k <= 8")
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        forms = children.into_iter().collect();
    }
    Ok(forms)
}
