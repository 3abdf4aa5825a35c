//! Brute-force oracles written straight from the definitions, on a boolean
//! adjacency matrix and boolean state vectors.

#![allow(dead_code)]

use kernelfix::Graph;

pub struct Oracle {
    pub n: usize,
    pub adj: Vec<Vec<bool>>,
}

impl Oracle {
    pub fn new(g: &Graph) -> Self {
        let n = g.n();
        let adj = (0..n).map(|u| (0..n).map(|v| g.has_edge(u, v)).collect()).collect();
        Oracle { n, adj }
    }

    /// Every labelled graph on `n` vertices.
    pub fn all_labelled(n: usize) -> Vec<Graph> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        (0u64..1 << pairs.len())
            .map(|mask| {
                Graph::new(n, pairs.iter().enumerate().filter(|(k, _)| (mask >> k) & 1 == 1).map(|(_, &e)| e)).unwrap()
            })
            .collect()
    }

    pub fn configs(&self) -> impl Iterator<Item = Vec<bool>> + '_ {
        (0u64..1 << self.n).map(move |m| (0..self.n).map(|v| (m >> v) & 1 == 1).collect())
    }

    pub fn subsets(&self) -> impl Iterator<Item = Vec<bool>> + '_ {
        self.configs()
    }

    pub fn update(&self, x: &mut [bool], v: usize) {
        x[v] = (0..self.n).all(|u| !(self.adj[v][u] && x[u]));
    }

    pub fn apply(&self, x: &[bool], word: &[usize]) -> Vec<bool> {
        let mut y = x.to_vec();
        for &v in word {
            self.update(&mut y, v);
        }
        y
    }

    pub fn independent(&self, x: &[bool]) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| !(x[u] && x[v] && self.adj[u][v])))
    }

    /// Maximal independent: independent, and every 0 vertex has a 1 neighbour.
    pub fn kernel(&self, x: &[bool]) -> bool {
        self.independent(x) && (0..self.n).all(|v| x[v] || (0..self.n).any(|u| self.adj[v][u] && x[u]))
    }

    /// K(x) = x for the simultaneous update.
    pub fn fixed(&self, x: &[bool]) -> bool {
        (0..self.n).all(|v| x[v] == (0..self.n).all(|u| !(self.adj[v][u] && x[u])))
    }

    pub fn fixes(&self, word: &[usize]) -> bool {
        self.configs().all(|x| self.kernel(&self.apply(&x, word)))
    }

    /// Semantic prefix property: every image is independent.
    pub fn prefixes(&self, word: &[usize]) -> bool {
        self.configs().all(|x| self.independent(&self.apply(&x, word)))
    }

    /// Semantic suffix property: independent starts end in a kernel.
    pub fn suffixes(&self, word: &[usize]) -> bool {
        self.configs().filter(|x| self.independent(x)).all(|x| self.kernel(&self.apply(&x, word)))
    }

    fn neighbourhood(&self, set: &[bool]) -> Vec<bool> {
        (0..self.n).map(|v| (0..self.n).any(|u| set[u] && self.adj[u][v])).collect()
    }

    /// Some independent `I` inside `allowed` with `s ⊆ N(I)`.
    pub fn colony_within(&self, allowed: &[bool], s: &[bool]) -> Option<Vec<bool>> {
        self.subsets().find(|i| {
            (0..self.n).all(|v| !i[v] || allowed[v]) && self.independent(i) && {
                let nb = self.neighbourhood(i);
                (0..self.n).all(|v| !s[v] || nb[v])
            }
        })
    }

    pub fn colony(&self, s: &[bool]) -> bool {
        self.colony_within(&vec![true; self.n], s).is_some()
    }

    /// `closed`: I avoids N[v]; otherwise I only avoids v.
    pub fn dominion(&self, w: &[bool], closed: bool) -> bool {
        (0..self.n).filter(|&v| !w[v]).any(|v| {
            let allowed: Vec<bool> = (0..self.n).map(|u| u != v && !(closed && self.adj[v][u])).collect();
            let need: Vec<bool> = (0..self.n).map(|u| w[u] && self.adj[v][u]).collect();
            self.colony_within(&allowed, &need).is_some()
        })
    }

    pub fn vertex_cover(&self, s: &[bool]) -> bool {
        (0..self.n).all(|u| (0..self.n).all(|v| !self.adj[u][v] || s[u] || s[v]))
    }
}

pub fn members(s: &[bool]) -> Vec<usize> {
    (0..s.len()).filter(|&v| s[v]).collect()
}

pub fn to_mask(s: &[bool]) -> u64 {
    members(s).iter().fold(0, |acc, &v| acc | 1 << v)
}

/// All permutations of `items` in lexicographic order of positions.
pub fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for (k, &first) in items.iter().enumerate() {
        let mut rest = items.to_vec();
        rest.remove(k);
        for mut tail in permutations(&rest) {
            tail.insert(0, first);
            out.push(tail);
        }
    }
    out
}
