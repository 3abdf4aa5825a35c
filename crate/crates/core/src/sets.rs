//! Vertex covers, colonies and dominions.
//!
//! A set `S` is a colony of `G` when some independent set `I` has
//! `S ⊆ N(I)`; equivalently some maximal independent set avoids `S`, which is
//! how it is decided here.
//!
//! A set `W` is a dominion when some vertex `v ∉ W` admits an independent
//! `I` with `W ∩ N(v) ⊆ N(I)`. Two readings of where `I` may live are
//! supported, see [`DominionRule`].

use std::ops::ControlFlow;

use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::mis::for_each_maximal_independent;
use crate::vertex_set::VertexSet;

/// Where the independent set of a dominion witness may be taken from.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DominionRule {
    /// `I ⊆ V ∖ N[v]`, i.e. `W ∩ N(v)` is a colony of `G − (N[v] ∖ W)`.
    ///
    /// This is the reading under which non-dominions are exactly the sets
    /// whose words map every independent configuration to a kernel.
    #[default]
    Closed,
    /// `I ⊆ V ∖ {v}`, i.e. `W ∩ N(v)` is a colony of `G − v`.
    Open,
}

impl DominionRule {
    /// Vertices allowed in `I` for the candidate vertex `v`.
    pub fn allowed(self, g: &Graph, v: usize) -> VertexSet {
        match self {
            DominionRule::Closed => g.vertices().difference(g.closed_neighbours(v)),
            DominionRule::Open => g.vertices().difference(VertexSet::singleton(v)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColonyWitness {
    #[serde(rename = "I")]
    pub i: VertexSet,
}

impl ColonyWitness {
    /// `I ⊆ allowed`, `I` independent and `S ⊆ N(I)`.
    pub fn validate(&self, g: &Graph, allowed: VertexSet, s: VertexSet) -> bool {
        self.i.is_subset(allowed) && g.is_independent(self.i) && s.is_subset(g.neighbourhood_of(self.i))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominionWitness {
    pub v: usize,
    #[serde(rename = "I")]
    pub i: VertexSet,
}

impl DominionWitness {
    pub fn validate(&self, g: &Graph, w: VertexSet, rule: DominionRule) -> bool {
        self.v < g.n()
            && !w.contains(self.v)
            && ColonyWitness { i: self.i }.validate(g, rule.allowed(g, self.v), w.intersection(g.neighbours(self.v)))
    }
}

/// `Ok(())` when every edge meets `s`, otherwise the least uncovered edge.
pub fn is_vertex_cover(g: &Graph, s: VertexSet) -> Result<(), (usize, usize)> {
    match g.edges().find(|&(u, v)| !s.contains(u) && !s.contains(v)) {
        Some(e) => Err(e),
        None => Ok(()),
    }
}

/// Looks for an independent `I ⊆ allowed` with `s ⊆ N(I)`.
///
/// Searches the maximal independent sets of `G[allowed ∖ s]` for one that
/// dominates `s`; any valid `I` extends to such a set. The witness keeps only
/// the part adjacent to `s`.
pub fn colony_within(g: &Graph, allowed: VertexSet, s: VertexSet) -> Option<ColonyWitness> {
    let found = for_each_maximal_independent(g, allowed.difference(s), |m| {
        if g.dominates(m, s) {
            ControlFlow::Break(m)
        } else {
            ControlFlow::Continue(())
        }
    });
    match found {
        ControlFlow::Break(m) => {
            let witness = ColonyWitness { i: m.intersection(g.neighbourhood_of(s)) };
            debug_assert!(witness.validate(g, allowed, s));
            Some(witness)
        }
        ControlFlow::Continue(()) => None,
    }
}

pub fn is_colony(g: &Graph, s: VertexSet) -> Option<ColonyWitness> {
    colony_within(g, g.vertices(), s)
}

/// First dominion witness in vertex order, if `w` is a dominion.
pub fn is_dominion(g: &Graph, w: VertexSet, rule: DominionRule) -> Option<DominionWitness> {
    g.vertices().difference(w).iter().find_map(|v| {
        colony_within(g, rule.allowed(g, v), w.intersection(g.neighbours(v))).map(|c| DominionWitness { v, i: c.i })
    })
}

pub fn is_non_dominion(g: &Graph, w: VertexSet, rule: DominionRule) -> bool {
    is_dominion(g, w, rule).is_none()
}
