//! The kernel network: vertex `v` updates to 1 exactly when none of its
//! neighbours is 1 (isolated vertices always update to 1).
//!
//! Configurations are bit masks (bit `v` is the state of vertex `v`). Their
//! text form lists vertex 0 first, so `"011"` on P3 means `a = 0, b = c = 1`.
//! Exhaustive scans visit configurations in lexicographic order of that text
//! form; see [`config_at_rank`].

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::mis::maximal_independent_sets;
use crate::vertex_set::{low_mask, VertexSet};

/// Largest order for a full `2^n` configuration scan.
pub const MAX_SCAN_ORDER: usize = 30;

/// A state vector `x ∈ {0,1}^n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Configuration {
    bits: u64,
    n: u8,
}

impl Configuration {
    pub fn new(n: usize, bits: u64) -> Self {
        assert!(n <= 64);
        Configuration { bits: bits & low_mask(n), n: n as u8 }
    }

    pub fn zeros(n: usize) -> Self {
        Self::new(n, 0)
    }

    pub fn ones_config(n: usize) -> Self {
        Self::new(n, u64::MAX)
    }

    pub fn from_set(n: usize, s: VertexSet) -> Self {
        Self::new(n, s.0)
    }

    #[inline]
    pub fn bits(self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn n(self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(self, v: usize) -> bool {
        (self.bits >> v) & 1 == 1
    }

    /// one(x)
    pub fn ones(self) -> VertexSet {
        VertexSet(self.bits)
    }

    /// zero(x)
    pub fn zeros_set(self) -> VertexSet {
        VertexSet(!self.bits & low_mask(self.n()))
    }

    /// Position in the lexicographic order of the text form.
    pub fn rank(self) -> u64 {
        reverse_low(self.bits, self.n())
    }
}

#[inline]
fn reverse_low(bits: u64, n: usize) -> u64 {
    if n == 0 {
        0
    } else {
        bits.reverse_bits() >> (64 - n)
    }
}

/// The configuration whose text form is the `rank`-th in lexicographic order.
#[inline]
pub fn config_at_rank(n: usize, rank: u64) -> u64 {
    reverse_low(rank, n)
}

impl Ord for Configuration {
    fn cmp(&self, other: &Self) -> Ordering {
        self.n.cmp(&other.n).then(self.rank().cmp(&other.rank()))
    }
}

impl PartialOrd for Configuration {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 0..self.n() {
            f.write_str(if self.get(v) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Configuration({self})")
    }
}

impl FromStr for Configuration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.len() > 64 {
            return Err(Error::Parse(format!("configuration longer than 64 bits: {s}")));
        }
        let mut bits = 0u64;
        for (v, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << v,
                _ => return Err(Error::Parse(format!("invalid configuration character {c:?}"))),
            }
        }
        Ok(Configuration::new(s.len(), bits))
    }
}

impl Serialize for Configuration {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Configuration {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A finite sequence of vertices; repeats allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Word(pub Vec<usize>);

impl Word {
    pub fn new(letters: Vec<usize>) -> Self {
        Word(letters)
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// [w]: the set of visited vertices.
    pub fn visited(&self) -> VertexSet {
        self.0.iter().copied().collect()
    }

    /// Letters `from..to` (0-based, half open).
    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(self.0[from..to].to_vec())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// Every vertex exactly once.
    pub fn is_permutation_of(&self, n: usize) -> bool {
        self.len() == n && self.visited() == VertexSet::full(n)
    }

    pub fn check(&self, g: &Graph) -> Result<()> {
        self.0.iter().try_for_each(|&v| g.check_vertex(v))
    }

    /// Letters `a, b, c, ...` for graphs with at most 26 vertices.
    pub fn to_letters(&self) -> String {
        self.0.iter().map(|&v| vertex_name(v)).collect::<Vec<_>>().join(" ")
    }
}

/// Human-readable vertex name: `a..z` below 26, the index otherwise.
pub fn vertex_name(v: usize) -> String {
    if v < 26 {
        ((b'a' + v as u8) as char).to_string()
    } else {
        v.to_string()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Space- or comma-separated vertex indices.
    fn from_str(s: &str) -> Result<Self> {
        s.split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| Error::Parse(format!("invalid vertex {t:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(Word)
    }
}

impl From<Vec<usize>> for Word {
    fn from(v: Vec<usize>) -> Self {
        Word(v)
    }
}

/// `y^0 = x, y^1, ..., y^l`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Trajectory(pub Vec<Configuration>);

impl Trajectory {
    /// Consecutive entries differ at most at the letter applied between them.
    pub fn is_local(&self, w: &Word) -> bool {
        self.0.len() == w.len() + 1
            && self.0.windows(2).zip(w.letters()).all(|(pair, &v)| (pair[0].bits ^ pair[1].bits) & !(1 << v) == 0)
    }
}

/// Single-vertex update on raw masks.
#[inline(always)]
pub(crate) fn update_bits(adj: &[u64], x: u64, v: usize) -> u64 {
    if adj[v] & x == 0 {
        x | 1 << v
    } else {
        x & !(1 << v)
    }
}

#[inline]
pub(crate) fn apply_bits(adj: &[u64], mut x: u64, word: &[usize]) -> u64 {
    for &v in word {
        x = update_bits(adj, x, v);
    }
    x
}

/// Fixed point of the simultaneous map, i.e. a kernel.
#[inline]
pub(crate) fn is_fixed_bits(adj: &[u64], x: u64) -> bool {
    adj.iter().enumerate().all(|(v, &row)| ((x >> v) & 1 == 1) == (row & x == 0))
}

fn check_width(g: &Graph, x: Configuration) -> Result<()> {
    if x.n() != g.n() {
        return Err(Error::WidthMismatch { expected: g.n(), got: x.n() });
    }
    Ok(())
}

pub fn kernel_update(g: &Graph, x: Configuration, v: usize) -> Result<Configuration> {
    check_width(g, x)?;
    g.check_vertex(v)?;
    Ok(Configuration { bits: update_bits(g.adjacency(), x.bits, v), n: x.n })
}

/// K^w(x): letters applied left to right.
pub fn apply_word(g: &Graph, x: Configuration, w: &Word) -> Result<Configuration> {
    check_width(g, x)?;
    w.check(g)?;
    Ok(Configuration { bits: apply_bits(g.adjacency(), x.bits, &w.0), n: x.n })
}

/// Like [`apply_word`] but records every intermediate configuration.
pub fn apply_word_traced(g: &Graph, x: Configuration, w: &Word) -> Result<(Configuration, Trajectory)> {
    check_width(g, x)?;
    w.check(g)?;
    let mut states = Vec::with_capacity(w.len() + 1);
    let mut y = x.bits;
    states.push(x);
    for &v in w.letters() {
        y = update_bits(g.adjacency(), y, v);
        states.push(Configuration { bits: y, n: x.n });
    }
    Ok((Configuration { bits: y, n: x.n }, Trajectory(states)))
}

/// K(x): every vertex updated from the same source `x`.
pub fn simultaneous_update(g: &Graph, x: Configuration) -> Configuration {
    let adj = g.adjacency();
    let bits = (0..g.n()).fold(0u64, |acc, v| acc | ((adj[v] & x.bits == 0) as u64) << v);
    Configuration { bits, n: x.n }
}

/// one(x) contains no edge.
pub fn is_independent(g: &Graph, x: Configuration) -> bool {
    g.is_independent(x.ones())
}

/// one(x) is independent and every vertex of zero(x) has a neighbour in one(x).
pub fn is_kernel(g: &Graph, x: Configuration) -> bool {
    is_independent(g, x) && g.dominates(x.ones(), g.vertices())
}

/// Kernels(G) via maximal independent set enumeration, in scan order.
pub fn enumerate_kernels(g: &Graph) -> Vec<Configuration> {
    let mut out: Vec<Configuration> =
        maximal_independent_sets(g).into_iter().map(|s| Configuration::from_set(g.n(), s)).collect();
    out.sort();
    out
}

/// Fix(K(G)) by scanning all `2^n` configurations in lexicographic order.
pub fn fixed_points(g: &Graph) -> Result<Vec<Configuration>> {
    let n = g.n();
    if n > MAX_SCAN_ORDER {
        return Err(Error::TooLarge { what: "fixed_points", n, max: MAX_SCAN_ORDER });
    }
    Ok((0..1u64 << n)
        .map(|r| Configuration::new(n, config_at_rank(n, r)))
        .filter(|&x| simultaneous_update(g, x) == x)
        .collect())
}
