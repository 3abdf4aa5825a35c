//! Permis for a composition `H(G_1, ..., G_n)` from permises of its pieces.

use super::{is_permis, verified};
use crate::dynamics::Word;
use crate::error::{Error, Result};
use crate::graph::{compose, Composition, Graph};

/// Follows `outer_permis` and replaces each letter `b` by the permis of
/// `G_b`, shifted into the block `compose` assigned to it.
///
/// Every input permis is checked first and the result is checked again.
pub fn composition_permis(
    outer: &Graph,
    parts: &[Graph],
    part_permises: &[Word],
    outer_permis: &Word,
) -> Result<(Composition, Word)> {
    if parts.len() != outer.n() {
        return Err(Error::ArityMismatch { expected: outer.n(), got: parts.len() });
    }
    if part_permises.len() != parts.len() {
        return Err(Error::ArityMismatch { expected: parts.len(), got: part_permises.len() });
    }
    if !is_permis(outer, outer_permis)? {
        return Err(Error::UnverifiedPermis(format!("{outer_permis} is not a permis of the outer graph")));
    }
    for (k, (part, w)) in parts.iter().zip(part_permises).enumerate() {
        if !is_permis(part, w)? {
            return Err(Error::UnverifiedPermis(format!("{w} is not a permis of part {k}")));
        }
    }
    let composition = compose(outer, parts)?;
    let letters = outer_permis
        .letters()
        .iter()
        .flat_map(|&b| {
            let start = composition.blocks[b].start;
            part_permises[b].letters().iter().map(move |&v| start + v)
        })
        .collect();
    let word = verified(&composition.graph, Word(letters), "composition_permis")?;
    Ok((composition, word))
}
