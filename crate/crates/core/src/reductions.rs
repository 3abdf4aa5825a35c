//! The reduction chain Set Cover → Colony → Dominion, Non-Dominion →
//! Fixing Set → Fixing Word, with structural audits and an oracle harness
//! that checks answer preservation on concrete instances.
//!
//! Vertex layouts are deterministic: source vertices keep their indices and
//! auxiliary vertices follow in the order documented on each constructor.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::dynamics::{apply_bits, is_fixed_bits, Configuration, Word};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::io::{write_graph6, GraphSource};
use crate::sets::{is_vertex_cover, DominionRule};
use crate::vertex_set::VertexSet;
use crate::words::{doubled_word, fixes};

/// Largest output graph accepted by [`verify_preservation`].
pub const MAX_ORACLE_ORDER: usize = 25;

/// Elements are `0..n`; JSON `{"n": int, "subsets": [[...]], "k": int}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetCoverInstance {
    pub n: usize,
    pub subsets: Vec<Vec<usize>>,
    pub k: usize,
}

impl SetCoverInstance {
    pub fn validate(&self) -> Result<()> {
        for subset in &self.subsets {
            if let Some(&x) = subset.iter().find(|&&x| x >= self.n) {
                return Err(Error::IndexOutOfRange { index: x, len: self.n });
            }
        }
        Ok(())
    }

    fn masks(&self) -> Vec<u64> {
        self.subsets.iter().map(|c| c.iter().fold(0, |acc, &x| acc | 1 << x)).collect()
    }

    /// Indices of at most `k` subsets covering every element, by brute force.
    pub fn solve(&self) -> Option<Vec<usize>> {
        let masks = self.masks();
        let full = (1u64 << self.n) - 1;
        (0u64..1 << masks.len())
            .filter(|choice| choice.count_ones() as usize <= self.k)
            .find(|&choice| VertexSet(choice).iter().fold(0, |acc, j| acc | masks[j]) == full)
            .map(|choice| VertexSet(choice).to_vec())
    }
}

/// A graph with a distinguished vertex set and names for gadget vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TargetedGraph {
    pub graph: Graph,
    pub target: VertexSet,
    pub labels: BTreeMap<String, usize>,
}

/// JSON form: `{"graph6": str, "target": [...], "labels": {...}}`. On input
/// `"graph"` (graph6 string or edge list) may replace `"graph6"`, and
/// `"labels"` is optional.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TargetedGraphJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph6: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub graph: Option<GraphSource>,
    pub target: VertexSet,
    #[serde(default)]
    pub labels: BTreeMap<String, usize>,
}

impl From<&TargetedGraph> for TargetedGraphJson {
    fn from(t: &TargetedGraph) -> Self {
        TargetedGraphJson {
            graph6: Some(write_graph6(&t.graph)),
            graph: None,
            target: t.target,
            labels: t.labels.clone(),
        }
    }
}

impl TryFrom<TargetedGraphJson> for TargetedGraph {
    type Error = Error;

    fn try_from(j: TargetedGraphJson) -> Result<Self> {
        let graph = match (j.graph6, j.graph) {
            (Some(g6), None) => crate::io::parse_graph6(&g6)?,
            (None, Some(source)) => source.to_graph()?,
            _ => return Err(Error::Parse("give exactly one of \"graph6\" and \"graph\"".into())),
        };
        graph.check_set(j.target)?;
        if let Some(&v) = j.labels.values().find(|&&v| v >= graph.n()) {
            return Err(Error::VertexOutOfRange { vertex: v, n: graph.n() });
        }
        Ok(TargetedGraph { graph, target: j.target, labels: j.labels })
    }
}

/// Vertex `v_i` is `i`; `q_j^l` is `n + j·k + l` (all 0-based). Every
/// `q_j^l` sees the `v_i` with `x_i ∈ C_j`, and each level `l` is a clique.
/// The target is `{v_i}`.
pub fn setcover_to_colony(inst: &SetCoverInstance) -> Result<TargetedGraph> {
    inst.validate()?;
    let (n, m, k) = (inst.n, inst.subsets.len(), inst.k);
    let q = |j: usize, l: usize| n + j * k + l;
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();
    for i in 0..n {
        labels.insert(format!("v_{}", i + 1), i);
    }
    for (j, subset) in inst.subsets.iter().enumerate() {
        for l in 0..k {
            labels.insert(format!("q_{}^{}", j + 1, l + 1), q(j, l));
            edges.extend(subset.iter().map(|&i| (q(j, l), i)));
            edges.extend((0..j).map(|j2| (q(j2, l), q(j, l))));
        }
    }
    let graph = Graph::new(n + m * k, edges)?;
    for j in 0..m {
        for l in 0..k {
            let expected: VertexSet =
                inst.subsets[j].iter().copied().chain((0..m).filter(|&j2| j2 != j).map(|j2| q(j2, l))).collect();
            assert_eq!(graph.neighbours(q(j, l)), expected, "gadget vertex q_{}^{}", j + 1, l + 1);
        }
    }
    Ok(TargetedGraph { graph, target: VertexSet::full(n), labels })
}

/// Appends `t'` for each `t ∈ T = V ∖ S` in ascending order, then `v̂`.
/// Edges `tt'` and `s v̂`; the target is `S ∪ T'`.
pub fn colony_to_dominion(g: &Graph, s: VertexSet) -> Result<TargetedGraph> {
    g.check_set(s)?;
    let n = g.n();
    let t: Vec<usize> = g.vertices().difference(s).to_vec();
    let hat = n + t.len();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let mut labels = BTreeMap::new();
    let mut target = s;
    for (k, &tv) in t.iter().enumerate() {
        edges.push((tv, n + k));
        labels.insert(format!("{tv}'"), n + k);
        target.insert(n + k);
    }
    edges.extend(s.iter().map(|sv| (sv, hat)));
    labels.insert("v^".into(), hat);
    let graph = Graph::new(hat + 1, edges)?;
    for (k, &tv) in t.iter().enumerate() {
        assert_eq!(graph.neighbours(n + k), VertexSet::singleton(tv), "t' must be a pendant of t");
    }
    assert_eq!(graph.neighbours(hat), s, "N(v^) must equal S");
    Ok(TargetedGraph { graph, target, labels })
}

/// One block of `n` vertices per `t ∈ T = V ∖ S`, in ascending order of `t`.
/// In the block of `t`, slot `u ≠ t` is the copy `u_t` and slot `t` is `t̂`.
/// Copies keep every edge of `G` avoiding `t`; `t̂` sees the copies of the
/// `S`-neighbours of `t`. The target is every copy `u_t`.
///
/// With `T = ∅` the instance is returned unchanged with target `V`.
pub fn nondominion_to_fixingset(g: &Graph, s: VertexSet) -> Result<TargetedGraph> {
    g.check_set(s)?;
    let n = g.n();
    let t: Vec<usize> = g.vertices().difference(s).to_vec();
    if t.is_empty() {
        return Ok(TargetedGraph { graph: g.clone(), target: s, labels: BTreeMap::new() });
    }
    let mut edges = Vec::new();
    let mut labels = BTreeMap::new();
    let mut target = VertexSet::EMPTY;
    for (block, &tv) in t.iter().enumerate() {
        let at = |u: usize| block * n + u;
        for u in 0..n {
            if u == tv {
                labels.insert(format!("{tv}^"), at(u));
            } else {
                labels.insert(format!("{u}_{tv}"), at(u));
                target.insert(at(u));
            }
        }
        edges.extend(g.edges().filter(|&(a, b)| a != tv && b != tv).map(|(a, b)| (at(a), at(b))));
        edges.extend(g.neighbours(tv).intersection(s).iter().map(|sv| (at(sv), at(tv))));
    }
    let graph = Graph::new(t.len() * n, edges)?;
    assert!(is_vertex_cover(&graph, target).is_ok(), "the target must be a vertex cover");
    assert_eq!(graph.vertices().difference(target).len(), t.len());
    Ok(TargetedGraph { graph, target, labels })
}

/// `ω` lists `S` ascending; the word is `ωω`.
pub fn fixingset_to_fixingword(g: &Graph, s: VertexSet) -> Result<(Graph, Word)> {
    g.check_set(s)?;
    Ok((g.clone(), doubled_word(s)))
}

/// Input to [`verify_preservation`].
#[derive(Clone, Debug)]
pub enum ReductionInput {
    SetCoverToColony(SetCoverInstance),
    ColonyToDominion { graph: Graph, set: VertexSet },
    NonDominionToFixingSet { graph: Graph, set: VertexSet },
    FixingSetToFixingWord { graph: Graph, set: VertexSet },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PreservationReport {
    pub reduction: &'static str,
    pub source_answer: bool,
    pub target_answer: bool,
    pub preserved: bool,
    pub source_witness: Option<Value>,
    pub target_witness: Option<Value>,
}

/// Yes (with an optional witness) or no (with an optional refutation).
type Side = std::result::Result<Option<Value>, Option<Value>>;

/// Runs the reduction, then decides both sides with brute-force oracles
/// that share no code with the structural deciders.
///
/// Dominion questions use the rule each construction was built for: the
/// source of `nondominion_to_fixingset` is read with [`DominionRule::Open`];
/// elsewhere [`DominionRule::Closed`] applies.
pub fn verify_preservation(input: &ReductionInput) -> Result<PreservationReport> {
    let colony_side =
        |g: &Graph, s: VertexSet| -> Side { colony_oracle(g, s).map(|i| Some(json!({ "I": i }))).ok_or(None) };
    let (reduction, source, target): (&'static str, Side, Side) = match input {
        ReductionInput::SetCoverToColony(inst) => {
            let out = setcover_to_colony(inst)?;
            check_oracle_order(&out.graph)?;
            let source = inst.solve().map(|c| Some(json!({ "subsets": c }))).ok_or(None);
            ("setcover-colony", source, colony_side(&out.graph, out.target))
        }
        ReductionInput::ColonyToDominion { graph, set } => {
            let out = colony_to_dominion(graph, *set)?;
            check_oracle_order(&out.graph)?;
            let target = dominion_oracle(&out.graph, out.target, DominionRule::Closed)
                .map(|(v, i)| Some(json!({ "v": v, "I": i })))
                .ok_or(None);
            ("colony-dominion", colony_side(graph, *set), target)
        }
        ReductionInput::NonDominionToFixingSet { graph, set } => {
            let out = nondominion_to_fixingset(graph, *set)?;
            check_oracle_order(&out.graph)?;
            let source = match dominion_oracle(graph, *set, DominionRule::Open) {
                Some((v, i)) => Err(Some(json!({ "kind": "dominion", "v": v, "I": i }))),
                None => Ok(None),
            };
            ("nondominion-fixingset", source, fixing_set_oracle(&out.graph, out.target))
        }
        ReductionInput::FixingSetToFixingWord { graph, set } => {
            let (g, word) = fixingset_to_fixingword(graph, *set)?;
            check_oracle_order(&g)?;
            let source = match (is_vertex_cover_oracle(graph, *set), dominion_oracle(graph, *set, DominionRule::Closed))
            {
                (Some((u, v)), _) => Err(Some(json!({ "kind": "edge", "u": u, "v": v }))),
                (None, Some((v, i))) => Err(Some(json!({ "kind": "dominion", "v": v, "I": i }))),
                (None, None) => Ok(None),
            };
            let target = match fixes(&g, &word)?.witness {
                Some(w) => Err(Some(serde_json::to_value(w).expect("witness serializes"))),
                None => Ok(None),
            };
            ("fixingset-word", source, target)
        }
    };
    let answer = |side: &Side| side.is_ok();
    let witness = |side: Side| match side {
        Ok(w) | Err(w) => w,
    };
    Ok(PreservationReport {
        reduction,
        source_answer: answer(&source),
        target_answer: answer(&target),
        preserved: answer(&source) == answer(&target),
        source_witness: witness(source),
        target_witness: witness(target),
    })
}

fn check_oracle_order(g: &Graph) -> Result<()> {
    if g.n() > MAX_ORACLE_ORDER {
        return Err(Error::TooLarge { what: "preservation oracle", n: g.n(), max: MAX_ORACLE_ORDER });
    }
    Ok(())
}

/// Calls `visit` on every independent subset of `allowed` until it returns true.
fn find_independent(g: &Graph, allowed: VertexSet, visit: &mut impl FnMut(VertexSet) -> bool) -> Option<VertexSet> {
    fn go(g: &Graph, rest: u64, chosen: u64, visit: &mut impl FnMut(VertexSet) -> bool) -> Option<VertexSet> {
        if rest == 0 {
            return visit(VertexSet(chosen)).then_some(VertexSet(chosen));
        }
        let v = rest.trailing_zeros() as usize;
        let rest = rest & !(1 << v);
        go(g, rest & !g.adjacency()[v], chosen | 1 << v, visit).or_else(|| go(g, rest, chosen, visit))
    }
    go(g, allowed.0, 0, visit)
}

/// Some independent `I` with `s ⊆ N(I)`, searched over all independent sets.
fn colony_oracle(g: &Graph, s: VertexSet) -> Option<VertexSet> {
    find_independent(g, g.vertices(), &mut |i| s.is_subset(g.neighbourhood_of(i)))
}

fn dominion_oracle(g: &Graph, w: VertexSet, rule: DominionRule) -> Option<(usize, VertexSet)> {
    g.vertices().difference(w).iter().find_map(|v| {
        let need = w.intersection(g.neighbours(v));
        find_independent(g, rule.allowed(g, v), &mut |i| need.is_subset(g.neighbourhood_of(i))).map(|i| (v, i))
    })
}

fn is_vertex_cover_oracle(g: &Graph, s: VertexSet) -> Option<(usize, usize)> {
    (0..g.n())
        .flat_map(|u| (u + 1..g.n()).map(move |v| (u, v)))
        .find(|&(u, v)| g.has_edge(u, v) && !s.contains(u) && !s.contains(v))
}

/// `ωω` over `s` fixes, checked over every configuration.
fn fixing_set_oracle(g: &Graph, s: VertexSet) -> Side {
    let word = doubled_word(s);
    let adj = g.adjacency();
    let bad = (0u64..1 << g.n()).find(|&x| !is_fixed_bits(adj, apply_bits(adj, x, word.letters())));
    match bad {
        Some(x) => Err(Some(json!({ "kind": "config", "x": Configuration::new(g.n(), x) }))),
        None => Ok(None),
    }
}
