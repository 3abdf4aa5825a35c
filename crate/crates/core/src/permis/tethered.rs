//! Non-existence certificates from tethered sets.
//!
//! If `S` is tethered, every vertex outside `S` that sees `S` sees all of it,
//! so a permis of `G` restricts to a permis of `G[S]`. Finding a tethered `S`
//! with no permis therefore proves that `G` has none.

use std::collections::HashMap;

use super::{find_permis, Certificate, PermisAnswer};
use crate::enumerate::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`certify_no_permis_tethered`].
pub const MAX_TETHERED_ORDER: usize = 14;

/// Permis existence of induced subgraphs, keyed by canonical form.
/// `true` means the class has no permis.
pub type NoPermisMemo = HashMap<CanonicalForm, bool>;

/// The first proper, connected, tethered `S` (by size, then by mask) whose
/// induced subgraph provably has no permis.
///
/// `None` means no certificate was found, not that a permis exists.
pub fn certify_no_permis_tethered(g: &Graph, memo: &mut NoPermisMemo) -> Result<Option<Certificate>> {
    let n = g.n();
    if n > MAX_TETHERED_ORDER {
        return Err(Error::TooLarge { what: "certify_no_permis_tethered", n, max: MAX_TETHERED_ORDER });
    }
    let mut candidates: Vec<u64> = (1u64..(1 << n) - 1).collect();
    candidates.sort_by_key(|s| (s.count_ones(), *s));
    for s in candidates.into_iter().map(VertexSet) {
        if !g.is_connected_set(s) || !g.is_tethered(s) {
            continue;
        }
        let (sub, _) = g.induced_subgraph(s);
        let form = canonical_form(&sub)?;
        let lacks_permis = match memo.get(&form) {
            Some(&known) => known,
            None => match find_permis(&sub).answer {
                PermisAnswer::Unknown => continue,
                answer => {
                    let lacks = answer == PermisAnswer::NotExists;
                    memo.insert(form, lacks);
                    lacks
                }
            },
        };
        if lacks_permis {
            return Ok(Some(Certificate::Tethered { set: s, inner: Box::new(Certificate::Exhaustive) }));
        }
    }
    Ok(None)
}
