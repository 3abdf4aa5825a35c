//! Permis: permutations of the vertex set that fix the kernel network.
//!
//! [`find_permis`] decides existence by exhaustive search. The constructive
//! routes build a permis directly for comparability graphs, graphs whose
//! simplicial vertices dominate, and compositions. [`certify_no_permis_tethered`]
//! proves non-existence from a tethered induced subgraph without a permis.

mod census;
mod comparability;
mod composition;
mod odd_hole;
mod search;
mod simplicial;
mod tethered;

use serde::{Deserialize, Serialize};

use crate::dynamics::Word;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;
use crate::words::fixes;

pub use census::{census, classify, CensusRecord, CensusReport, MAX_CENSUS_ORDER};
pub use comparability::{
    comparability_permis, is_transitive_orientation, linear_extension, transitive_orientation,
    transitive_orientation_brute_force, transitive_orientation_forcing, Orientation, MAX_BRUTE_FORCE_EDGES,
};
pub use composition::composition_permis;
pub use odd_hole::{odd_hole_counterexample, OddHoleWitness};
pub use search::{find_permis, find_permis_with, SearchOptions, DEFAULT_MAX_ORDER};
pub use simplicial::{simplicial_maximal_independent, simplicial_permis};
pub use tethered::{certify_no_permis_tethered, NoPermisMemo, MAX_TETHERED_ORDER};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PermisAnswer {
    Exists,
    NotExists,
    Unknown,
}

/// Evidence that no permis exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Certificate {
    /// Every permutation was tried.
    Exhaustive,
    /// `G[S]` has no permis and `S` is tethered.
    Tethered {
        #[serde(rename = "S")]
        set: VertexSet,
        inner: Box<Certificate>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermisVerdict {
    pub answer: PermisAnswer,
    pub word: Option<Word>,
    pub certificate: Option<Certificate>,
}

impl PermisVerdict {
    pub fn exists(word: Word) -> Self {
        PermisVerdict { answer: PermisAnswer::Exists, word: Some(word), certificate: None }
    }

    pub fn not_exists(certificate: Certificate) -> Self {
        PermisVerdict { answer: PermisAnswer::NotExists, word: None, certificate: Some(certificate) }
    }

    pub fn unknown() -> Self {
        PermisVerdict { answer: PermisAnswer::Unknown, word: None, certificate: None }
    }
}

/// `w` is a permutation of `V(G)` that fixes `K(G)`.
pub fn is_permis(g: &Graph, w: &Word) -> Result<bool> {
    Ok(w.is_permutation_of(g.n()) && fixes(g, w)?.answer)
}

/// Re-checks a permis before handing it out.
pub(crate) fn verified(g: &Graph, w: Word, origin: &str) -> Result<Word> {
    if is_permis(g, &w)? {
        Ok(w)
    } else {
        Err(Error::UnverifiedPermis(format!("{origin} produced {w}, which is not a permis")))
    }
}

/// Vertices of `s` in ascending order followed by the rest of `V` ascending.
pub(crate) fn ordered_word(first: VertexSet, last: VertexSet) -> Word {
    Word(first.iter().chain(last.iter()).collect())
}
