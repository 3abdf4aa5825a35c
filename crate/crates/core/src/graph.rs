//! Undirected simple graphs on at most [`MAX_ORDER`] vertices, stored as
//! per-vertex neighbour masks.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::vertex_set::{low_mask, VertexSet};

/// Largest supported order; matches the graph6 short form.
pub const MAX_ORDER: usize = 62;

/// Simple undirected graph on vertices `0..n`.
///
/// Invariants: `adj` is symmetric, loop-free, and has no bits at or above `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate pairs collapse.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        check_order(n, "graph")?;
        let mut adj = vec![0u64; n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { n, adj })
    }

    /// Validates and wraps raw neighbour masks.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        check_order(n, "graph")?;
        let mask = low_mask(n);
        for (v, &row) in adj.iter().enumerate() {
            if row & !mask != 0 {
                let vertex = (row & !mask).trailing_zeros() as usize;
                return Err(Error::VertexOutOfRange { vertex, n });
            }
            if (row >> v) & 1 == 1 {
                return Err(Error::SelfLoop(v));
            }
            for u in VertexSet(row) {
                if (adj[u] >> v) & 1 == 0 {
                    return Err(Error::Parse(format!("adjacency not symmetric at ({v},{u})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    /// Edgeless graph on `n` vertices (`n = 0` allowed).
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph { n, adj: vec![0; n] }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Open neighbourhood N(v).
    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// Closed neighbourhood N[v].
    #[inline]
    pub fn closed_neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        (self.adj[u] >> v) & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| VertexSet(self.adj[u] & !low_mask(u + 1)).iter().map(move |v| (u, v)))
    }

    /// N(S): vertices adjacent to some member of `s` (may intersect `s`).
    pub fn neighbourhood_of(&self, s: VertexSet) -> VertexSet {
        VertexSet(s.iter().fold(0, |acc, v| acc | self.adj[v]))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v] & s.0 == 0)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.0 & !(self.adj[v] | 1 << v) == 0)
    }

    /// Every vertex of `target` is in `d` or adjacent to it.
    pub fn dominates(&self, d: VertexSet, target: VertexSet) -> bool {
        target.difference(d).is_subset(self.neighbourhood_of(d))
    }

    /// `s` must be a subset of the vertex set.
    pub fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).first() {
            Some(vertex) => Err(Error::VertexOutOfRange { vertex, n: self.n }),
            None => Ok(()),
        }
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn complement(&self) -> Graph {
        let full = low_mask(self.n);
        let adj = (0..self.n).map(|v| full & !self.adj[v] & !(1 << v)).collect();
        Graph { n: self.n, adj }
    }

    /// G[S] together with the original index of each new vertex.
    pub fn induced_subgraph(&self, s: VertexSet) -> (Graph, Vec<usize>) {
        let map: Vec<usize> = s.intersection(self.vertices()).to_vec();
        let mut position = [usize::MAX; 64];
        for (i, &v) in map.iter().enumerate() {
            position[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| VertexSet(self.adj[v] & s.0).iter().fold(0u64, |acc, u| acc | 1 << position[u]))
            .collect();
        (Graph { n: map.len(), adj }, map)
    }

    /// G − v, with the index map back into `self`.
    pub fn remove_vertices(&self, removed: VertexSet) -> (Graph, Vec<usize>) {
        self.induced_subgraph(self.vertices().difference(removed))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut adj = vec![0u64; self.n];
        for (u, v) in self.edges() {
            adj[perm[u]] |= 1 << perm[v];
            adj[perm[v]] |= 1 << perm[u];
        }
        Graph { n: self.n, adj }
    }

    /// Adds a pendant vertex `n + v` attached to each vertex `v`.
    pub fn add_pendant_to_each(&self) -> Result<Graph> {
        let n = self.n;
        check_order(2 * n, "add_pendant_to_each")?;
        let mut adj = self.adj.clone();
        adj.resize(2 * n, 0);
        for v in 0..n {
            adj[v] |= 1 << (n + v);
            adj[n + v] = 1 << v;
        }
        Ok(Graph { n: 2 * n, adj })
    }

    /// Vertices whose neighbourhood is a clique; isolated vertices included.
    pub fn simplicial_vertices(&self) -> VertexSet {
        (0..self.n).filter(|&v| self.is_clique(self.neighbours(v))).collect()
    }

    /// Every `s` in `S` is adjacent to every vertex of `N(S) \ S`.
    pub fn is_tethered(&self, s: VertexSet) -> bool {
        let boundary = self.neighbourhood_of(s).difference(s);
        s.iter().all(|v| boundary.is_subset(self.neighbours(v)))
    }

    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else {
            return true;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighbourhood_of(frontier).intersection(s).difference(seen);
            seen = seen.union(next);
            frontier = next;
        }
        seen == s
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

pub(crate) fn check_order(n: usize, what: &'static str) -> Result<()> {
    if n > MAX_ORDER {
        Err(Error::TooLarge { what, n, max: MAX_ORDER })
    } else {
        Ok(())
    }
}

/// Result of `H(G_1, ..., G_k)`: the graph plus the vertex block of each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Composition {
    pub graph: Graph,
    /// `blocks[v]` holds the vertices that replaced vertex `v` of the outer graph.
    pub blocks: Vec<Range<usize>>,
}

/// Substitutes `parts[v]` for every vertex `v` of `outer`, joining two blocks
/// completely whenever their outer vertices are adjacent.
pub fn compose(outer: &Graph, parts: &[Graph]) -> Result<Composition> {
    if parts.len() != outer.n() {
        return Err(Error::ArityMismatch { expected: outer.n(), got: parts.len() });
    }
    let mut blocks = Vec::with_capacity(parts.len());
    let mut offset = 0;
    for part in parts {
        blocks.push(offset..offset + part.n());
        offset += part.n();
    }
    check_order(offset, "compose")?;
    let block_mask = |r: &Range<usize>| low_mask(r.end) & !low_mask(r.start);
    let mut adj = vec![0u64; offset];
    for (b, part) in parts.iter().enumerate() {
        let start = blocks[b].start;
        let outside = outer.neighbours(b).iter().fold(0u64, |acc, c| acc | block_mask(&blocks[c]));
        for v in 0..part.n() {
            adj[start + v] = (part.adj[v] << start) | outside;
        }
    }
    Ok(Composition { graph: Graph { n: offset, adj }, blocks })
}
