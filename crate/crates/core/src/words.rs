//! Deciders for words: prefixes, suffixes, fixes, fixing sets, and a bounded
//! search for shortest fixing words.
//!
//! `prefixes` and `suffixes` use the structural characterizations (vertex
//! cover, non-dominion). `fixes` is the definition itself, an exhaustive scan
//! of all configurations in lexicographic order.

use rayon::prelude::*;
use serde::Serialize;

use crate::dynamics::{apply_bits, apply_word, config_at_rank, is_fixed_bits, Configuration, Word};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::sets::{is_dominion, is_vertex_cover, DominionRule};
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`fixes`].
pub const MAX_FIXES_ORDER: usize = 25;

/// Largest order accepted by [`shortest_fixing_word`].
pub const MAX_SHORTEST_ORDER: usize = 12;

/// Below this order the scan runs on the calling thread.
const PARALLEL_SCAN_ORDER: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Witness {
    /// `K^w(x) = y` is not a kernel.
    Config { x: Configuration, y: Configuration },
    /// Neither endpoint is visited; `x` is 1 exactly on the edge.
    Edge { u: usize, v: usize, x: Configuration },
    /// `v` and everything around it stay 0 when starting from `x = 1_I`.
    Dominion {
        v: usize,
        #[serde(rename = "I")]
        i: VertexSet,
        x: Configuration,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct WordVerdict {
    pub answer: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl WordVerdict {
    pub const YES: WordVerdict = WordVerdict { answer: true, witness: None };

    fn no(witness: Witness) -> Self {
        WordVerdict { answer: false, witness: Some(witness) }
    }

    /// Replays the witness of a negative verdict against `w`.
    ///
    /// An edge witness must map to a non-independent configuration; the
    /// other kinds must map to a non-kernel.
    pub fn validate(&self, g: &Graph, w: &Word) -> bool {
        if self.answer {
            return self.witness.is_none();
        }
        let Some(witness) = self.witness else {
            return false;
        };
        let replay = |x: Configuration| apply_word(g, x, w).ok();
        match witness {
            Witness::Config { x, y } => replay(x) == Some(y) && !crate::dynamics::is_kernel(g, y),
            Witness::Edge { u, v, x } => {
                g.has_edge(u, v)
                    && x.ones() == VertexSet::singleton(u).union(VertexSet::singleton(v))
                    && replay(x).is_some_and(|y| !crate::dynamics::is_independent(g, y))
            }
            Witness::Dominion { v, i, x } => {
                crate::sets::DominionWitness { v, i }.validate(g, w.visited(), DominionRule::Closed)
                    && x.ones() == i
                    && replay(x).is_some_and(|y| !crate::dynamics::is_kernel(g, y))
            }
        }
    }
}

/// `[w]` is a vertex cover.
pub fn prefixes(g: &Graph, w: &Word) -> Result<WordVerdict> {
    w.check(g)?;
    Ok(cover_verdict(g, w.visited()))
}

fn cover_verdict(g: &Graph, s: VertexSet) -> WordVerdict {
    match is_vertex_cover(g, s) {
        Ok(()) => WordVerdict::YES,
        Err((u, v)) => WordVerdict::no(Witness::Edge { u, v, x: Configuration::new(g.n(), 1 << u | 1 << v) }),
    }
}

/// `[w]` is a non-dominion.
pub fn suffixes(g: &Graph, w: &Word) -> Result<WordVerdict> {
    w.check(g)?;
    Ok(non_dominion_verdict(g, w.visited()))
}

fn non_dominion_verdict(g: &Graph, s: VertexSet) -> WordVerdict {
    match is_dominion(g, s, DominionRule::Closed) {
        None => WordVerdict::YES,
        Some(d) => WordVerdict::no(Witness::Dominion { v: d.v, i: d.i, x: Configuration::from_set(g.n(), d.i) }),
    }
}

/// Lexicographically least `x` whose image under `word` is not a kernel.
pub(crate) fn least_counterexample(adj: &[u64], word: &[usize]) -> Option<u64> {
    let n = adj.len();
    let bad = |r: u64| {
        let x = config_at_rank(n, r);
        !is_fixed_bits(adj, apply_bits(adj, x, word))
    };
    let first = if n < PARALLEL_SCAN_ORDER {
        (0..1u64 << n).find(|&r| bad(r))
    } else {
        (0..1u64 << n).into_par_iter().find_first(|&r| bad(r))
    };
    first.map(|r| config_at_rank(n, r))
}

/// `K^w(x)` is a kernel for every configuration `x`.
pub fn fixes(g: &Graph, w: &Word) -> Result<WordVerdict> {
    if g.n() > MAX_FIXES_ORDER {
        return Err(Error::TooLarge { what: "fixes", n: g.n(), max: MAX_FIXES_ORDER });
    }
    w.check(g)?;
    Ok(match least_counterexample(g.adjacency(), w.letters()) {
        None => WordVerdict::YES,
        Some(bits) => {
            let x = Configuration::new(g.n(), bits);
            let y = Configuration::new(g.n(), apply_bits(g.adjacency(), bits, w.letters()));
            WordVerdict::no(Witness::Config { x, y })
        }
    })
}

/// The word `ωω` with `ω` the ascending enumeration of `s`.
pub fn doubled_word(s: VertexSet) -> Word {
    let omega = s.to_vec();
    Word(omega.iter().chain(&omega).copied().collect())
}

/// `s` is a vertex cover and a non-dominion. Witnesses replay on [`doubled_word`].
pub fn fixing_set(g: &Graph, s: VertexSet) -> Result<WordVerdict> {
    g.check_set(s)?;
    let cover = cover_verdict(g, s);
    if !cover.answer {
        return Ok(cover);
    }
    Ok(non_dominion_verdict(g, s))
}

/// Decides `fixing_set` by running [`fixes`] on `ωω`.
pub fn fixing_set_by_word(g: &Graph, s: VertexSet) -> Result<WordVerdict> {
    g.check_set(s)?;
    fixes(g, &doubled_word(s))
}

/// Sufficient condition for `w` to fix: `w_1..w_a` prefixes, `w_b..w_l`
/// suffixes and `[w_b..w_a]` is independent.
///
/// Indices are 1-based letter positions in `0..=l`. `a = 0` is the empty
/// prefix and `b = 0` is read as `b = 1`. When `a < b` the middle set is
/// empty.
pub fn check_prop2(g: &Graph, w: &Word, a: usize, b: usize) -> Result<bool> {
    w.check(g)?;
    let l = w.len();
    for index in [a, b] {
        if index > l {
            return Err(Error::IndexOutOfRange { index, len: l });
        }
    }
    let b = b.max(1);
    let prefix = w.slice(0, a).visited();
    let suffix = w.slice((b - 1).min(l), l).visited();
    let middle = if a >= b { w.slice(b - 1, a).visited() } else { VertexSet::EMPTY };
    Ok(is_vertex_cover(g, prefix).is_ok()
        && is_dominion(g, suffix, DominionRule::Closed).is_none()
        && g.is_independent(middle))
}

/// Rewrites `w` with `K^{vv} = K^v` and `K^{uv} = K^{vu}` (u, v non-adjacent)
/// until neither applies: repeated letters separated only by non-neighbours
/// are dropped, and commuting neighbours are sorted ascending.
pub fn normalize_word(g: &Graph, w: &Word) -> Result<Word> {
    w.check(g)?;
    let mut letters = w.0.clone();
    loop {
        if let Some(j) = removable_repeat(g, &letters) {
            letters.remove(j);
            continue;
        }
        let mut swapped = false;
        for i in 1..letters.len() {
            let (u, v) = (letters[i - 1], letters[i]);
            if u > v && !g.has_edge(u, v) {
                letters.swap(i - 1, i);
                swapped = true;
            }
        }
        if !swapped {
            return Ok(Word(letters));
        }
    }
}

fn removable_repeat(g: &Graph, letters: &[usize]) -> Option<usize> {
    (0..letters.len()).find_map(|i| {
        let v = letters[i];
        letters[i + 1..].iter().take_while(|&&u| u == v || !g.has_edge(u, v)).position(|&u| u == v).map(|k| i + 1 + k)
    })
}

/// Outcome of [`shortest_fixing_word`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ShortestWord {
    /// A fixing word of minimum length.
    Found { word: Word },
    /// No word of length at most `bound` fixes.
    NoneUpTo { bound: usize },
    /// Lengths up to `complete_up_to` were ruled out before the node budget ran out.
    Unknown { complete_up_to: usize },
}

/// Node budget for [`shortest_fixing_word`] when none is given.
pub const DEFAULT_SHORTEST_BUDGET: u64 = 50_000_000;

/// Iterative deepening over irreducible words (those [`normalize_word`]
/// leaves unchanged), in lexicographic order, so the result is the least
/// fixing word of minimum length.
pub fn shortest_fixing_word(g: &Graph, max_len: usize, budget: u64) -> Result<ShortestWord> {
    let n = g.n();
    if n > MAX_SHORTEST_ORDER {
        return Err(Error::TooLarge { what: "shortest_fixing_word", n, max: MAX_SHORTEST_ORDER });
    }
    if max_len > 4 * n.max(1) {
        return Err(Error::TooLarge { what: "shortest_fixing_word length bound", n: max_len, max: 4 * n.max(1) });
    }
    let mut search = Deepening { g, word: Vec::with_capacity(max_len), nodes: 0, budget };
    for len in 0..=max_len {
        match search.run(len) {
            Some(true) => return Ok(ShortestWord::Found { word: Word(search.word) }),
            Some(false) => {}
            None => {
                return Ok(ShortestWord::Unknown { complete_up_to: len.saturating_sub(1) });
            }
        }
    }
    Ok(ShortestWord::NoneUpTo { bound: max_len })
}

struct Deepening<'a> {
    g: &'a Graph,
    word: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Deepening<'_> {
    /// `Some(found)` or `None` when the budget is exhausted.
    fn run(&mut self, target: usize) -> Option<bool> {
        self.word.clear();
        self.extend(target)
    }

    fn extend(&mut self, target: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        if self.word.len() == target {
            let visited: VertexSet = self.word.iter().copied().collect();
            let found = is_vertex_cover(self.g, visited).is_ok()
                && least_counterexample(self.g.adjacency(), &self.word).is_none();
            return Some(found);
        }
        for v in 0..self.g.n() {
            if !self.accepts(v) {
                continue;
            }
            self.word.push(v);
            if self.extend(target)? {
                return Some(true);
            }
            self.word.pop();
        }
        Some(false)
    }

    /// Appending `v` keeps the word irreducible.
    fn accepts(&self, v: usize) -> bool {
        let g = self.g;
        if let Some(&last) = self.word.last() {
            if last > v && !g.has_edge(last, v) {
                return false;
            }
        }
        for &u in self.word.iter().rev() {
            if u == v {
                return false;
            }
            if g.has_edge(u, v) {
                break;
            }
        }
        true
    }
}
