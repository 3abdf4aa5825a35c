//! Exhaustive permis search with counterexample-driven pruning.
//!
//! Permutations are explored depth first in lexicographic order. Every
//! permutation that fails contributes its least counterexample to a cache;
//! the images of cached configurations are maintained along the current
//! prefix. Once `N[v]` has been fully placed, the state around `v` is final,
//! so a cached configuration that already violates the kernel condition at
//! such a `v` rules out the whole subtree.

use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::time::Instant;

use rayon::prelude::*;

use super::{verified, Certificate, PermisVerdict};
use crate::dynamics::{update_bits, Word};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::words::least_counterexample;

/// Largest order searched exhaustively unless the caller raises it.
pub const DEFAULT_MAX_ORDER: usize = 10;

const CACHE_CAPACITY: usize = 128;
const DEADLINE_POLL: u64 = 1 << 12;

#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Larger graphs get an `Unknown` verdict without searching.
    pub max_order: usize,
    /// Searches still running at this instant give up with `Unknown`.
    pub deadline: Option<Instant>,
    /// Split the search over first letters on the rayon pool.
    pub parallel: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { max_order: DEFAULT_MAX_ORDER, deadline: None, parallel: true }
    }
}

pub fn find_permis(g: &Graph) -> PermisVerdict {
    find_permis_with(g, &SearchOptions::default())
}

enum Outcome {
    Found(Vec<usize>),
    Exhausted,
    Aborted,
}

/// Returns the lexicographically least permis when the search completes.
///
/// If the deadline cuts some branches short but another branch found a
/// permis, that permis is returned; it is still verified but may not be the
/// least one.
pub fn find_permis_with(g: &Graph, options: &SearchOptions) -> PermisVerdict {
    let n = g.n();
    if n > options.max_order {
        return PermisVerdict::unknown();
    }
    if n == 0 {
        return PermisVerdict::exists(Word::default());
    }
    let best = AtomicUsize::new(n);
    let expired = AtomicBool::new(false);
    let run = |first: usize| Branch::new(g, first, options.deadline, &best, &expired).run();
    let outcomes: Vec<Outcome> =
        if options.parallel { (0..n).into_par_iter().map(run).collect() } else { (0..n).map(run).collect() };
    let mut aborted = false;
    for outcome in outcomes {
        match outcome {
            Outcome::Found(perm) => {
                let word = verified(g, Word(perm), "find_permis").expect("search only accepts permis");
                return PermisVerdict::exists(word);
            }
            Outcome::Aborted => aborted = true,
            Outcome::Exhausted => {}
        }
    }
    if aborted {
        PermisVerdict::unknown()
    } else {
        PermisVerdict::not_exists(Certificate::Exhaustive)
    }
}

struct Branch<'a> {
    adj: &'a [u64],
    closed: Vec<u64>,
    first: usize,
    perm: Vec<usize>,
    cache: Vec<u64>,
    /// `states[d][k]`: cached configuration `k` after the first `d` letters.
    states: Vec<Vec<u64>>,
    nodes: u64,
    deadline: Option<Instant>,
    best: &'a AtomicUsize,
    expired: &'a AtomicBool,
}

impl<'a> Branch<'a> {
    fn new(
        g: &'a Graph,
        first: usize,
        deadline: Option<Instant>,
        best: &'a AtomicUsize,
        expired: &'a AtomicBool,
    ) -> Self {
        let n = g.n();
        Branch {
            adj: g.adjacency(),
            closed: (0..n).map(|v| g.closed_neighbours(v).0).collect(),
            first,
            perm: Vec::with_capacity(n),
            cache: Vec::new(),
            states: vec![Vec::new(); n + 1],
            nodes: 0,
            deadline,
            best,
            expired,
        }
    }

    fn run(mut self) -> Outcome {
        self.descend(self.first, 0)
    }

    fn stop_requested(&mut self) -> bool {
        self.nodes += 1;
        if self.best.load(Ordering::Relaxed) < self.first || self.expired.load(Ordering::Relaxed) {
            return true;
        }
        if self.nodes % DEADLINE_POLL == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    self.expired.store(true, Ordering::Relaxed);
                    return true;
                }
            }
        }
        false
    }

    /// Vertices whose closed neighbourhood lies inside `placed`.
    fn frozen(&self, placed: u64) -> u64 {
        self.closed.iter().enumerate().filter(|(_, &c)| c & !placed == 0).fold(0, |acc, (v, _)| acc | 1 << v)
    }

    fn violates(&self, y: u64, vertices: u64) -> bool {
        VertexSet(vertices).iter().any(|v| ((y >> v) & 1 == 1) != (self.adj[v] & y == 0))
    }

    fn any_violation(&self, depth: usize, from: usize, vertices: u64) -> bool {
        vertices != 0 && self.states[depth][from..].iter().any(|&y| self.violates(y, vertices))
    }

    /// Places `v` at position `depth` and explores everything below.
    fn descend(&mut self, v: usize, depth: usize) -> Outcome {
        if self.stop_requested() {
            return Outcome::Aborted;
        }
        let placed_before = self.perm.iter().fold(0u64, |acc, &u| acc | 1 << u);
        let placed = placed_before | 1 << v;
        self.perm.push(v);
        let next: Vec<u64> = self.states[depth].iter().map(|&y| update_bits(self.adj, y, v)).collect();
        self.states[depth + 1] = next;

        let frozen = self.frozen(placed);
        let outcome = if self.any_violation(depth + 1, 0, frozen & !self.frozen(placed_before)) {
            Outcome::Exhausted
        } else if self.perm.len() == self.adj.len() {
            self.leaf()
        } else {
            self.children(depth + 1, placed, frozen)
        };
        self.perm.pop();
        outcome
    }

    fn children(&mut self, depth: usize, placed: u64, frozen: u64) -> Outcome {
        let n = self.adj.len();
        let mut checked = self.cache.len();
        for u in 0..n {
            if (placed >> u) & 1 == 1 {
                continue;
            }
            match self.descend(u, depth) {
                Outcome::Exhausted => {}
                other => return other,
            }
            // configurations learnt below may already condemn this prefix
            if self.any_violation(depth, checked, frozen) {
                return Outcome::Exhausted;
            }
            checked = self.cache.len();
        }
        Outcome::Exhausted
    }

    fn leaf(&mut self) -> Outcome {
        match least_counterexample(self.adj, &self.perm) {
            None => {
                self.best.fetch_min(self.first, Ordering::Relaxed);
                Outcome::Found(self.perm.clone())
            }
            Some(x) => {
                if self.cache.len() < CACHE_CAPACITY {
                    self.cache.push(x);
                    let mut y = x;
                    self.states[0].push(y);
                    for (d, &v) in self.perm.iter().enumerate() {
                        y = update_bits(self.adj, y, v);
                        self.states[d + 1].push(y);
                    }
                }
                Outcome::Exhausted
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::*;
    use crate::permis::PermisAnswer;

    fn brute_force(g: &Graph) -> Option<Vec<usize>> {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        loop {
            if least_counterexample(g.adjacency(), &perm).is_none() {
                return Some(perm);
            }
            // next lexicographic permutation
            let i = (1..n).rev().find(|&i| perm[i - 1] < perm[i])?;
            let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
            perm.swap(i - 1, j);
            perm[i..].reverse();
        }
    }

    #[test]
    fn p3_least_permis() {
        let v = find_permis(&path(3).unwrap());
        assert_eq!(v.answer, PermisAnswer::Exists);
        assert_eq!(v.word, Some(Word(vec![0, 2, 1])));
    }

    #[test]
    fn agrees_with_plain_enumeration() {
        let graphs = [
            path(5).unwrap(),
            cycle(5).unwrap(),
            cycle(6).unwrap(),
            wheel(6).unwrap(),
            complete(4).unwrap(),
            Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 5)]).unwrap(),
        ];
        for g in graphs {
            for parallel in [false, true] {
                let options = SearchOptions { parallel, ..SearchOptions::default() };
                assert_eq!(find_permis_with(&g, &options).word.map(|w| w.0), brute_force(&g), "{g:?}");
            }
        }
    }

    #[test]
    fn heptagon_has_none() {
        let v = find_permis(&cycle(7).unwrap());
        assert_eq!(v.answer, PermisAnswer::NotExists);
        assert_eq!(v.certificate, Some(Certificate::Exhaustive));
    }

    #[test]
    fn limits() {
        assert_eq!(find_permis(&Graph::empty(11)).answer, PermisAnswer::Unknown);
        assert_eq!(find_permis(&Graph::empty(0)).word, Some(Word::default()));
        let past = SearchOptions { deadline: Some(Instant::now()), ..SearchOptions::default() };
        // an expired deadline only stops long searches; a found permis still counts
        let v = find_permis_with(&cycle(9).unwrap(), &past);
        assert_ne!(v.answer, PermisAnswer::Exists);
    }
}
