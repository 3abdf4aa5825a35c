//! Explicit counterexamples showing that odd holes of length at least 7
//! have no permis.
//!
//! Orient each cycle edge from the earlier to the later vertex of a
//! permutation. An odd cycle cannot alternate, so some path `c → b → a`
//! exists. Looking back along `d, e, f` beyond `c`, one of four patterns
//! applies and each yields a configuration ending with `N[c]` all zero.

use serde::Serialize;

use crate::dynamics::{apply_word, Configuration, Word};
use crate::error::{Error, Result};
use crate::generators::cycle;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct OddHoleWitness {
    /// Pattern number, 1 to 4.
    pub case: u8,
    /// The window `[f, e, d, c, b, a]`.
    pub window: [usize; 6],
    pub x: Configuration,
    pub y: Configuration,
}

/// Builds the counterexample for a permutation `w` of `C_n`, `n` odd and at least 7.
pub fn odd_hole_counterexample(n: usize, w: &Word) -> Result<OddHoleWitness> {
    if n < 7 || n % 2 == 0 {
        return Err(Error::TooSmall { what: "odd hole of length >= 7", n, min: 7 });
    }
    if !w.is_permutation_of(n) {
        return Err(Error::Parse(format!("{w} is not a permutation of 0..{n}")));
    }
    let mut pos = vec![0; n];
    for (i, &v) in w.letters().iter().enumerate() {
        pos[v] = i;
    }
    let step = |v: usize, dir: isize| (v as isize + dir).rem_euclid(n as isize) as usize;
    let (b, dir) = (0..n)
        .flat_map(|b| [(b, 1isize), (b, -1)])
        .find(|&(b, dir)| pos[step(b, -dir)] < pos[b] && pos[b] < pos[step(b, dir)])
        .expect("an odd cycle has two consecutive arcs in the same direction");
    let a = step(b, dir);
    let c = step(b, -dir);
    let d = step(c, -dir);
    let e = step(d, -dir);
    let f = step(e, -dir);
    let before = |u: usize, v: usize| pos[u] < pos[v];
    let (case, ones): (u8, Vec<usize>) = if before(d, c) {
        (1, vec![a, b, c])
    } else if before(d, e) {
        (2, vec![a, b, d, e])
    } else if before(f, e) {
        (3, vec![a, b, e])
    } else {
        (4, vec![a, b])
    };
    let x = Configuration::new(n, ones.iter().fold(0, |acc, &v| acc | 1 << v));
    let y = apply_word(&cycle(n)?, x, w)?;
    Ok(OddHoleWitness { case, window: [f, e, d, c, b, a], x, y })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::is_kernel;

    #[test]
    fn identity_on_c7() {
        let w = Word((0..7).collect());
        let witness = odd_hole_counterexample(7, &w).unwrap();
        let [_, _, d, c, b, _] = witness.window;
        assert!(!witness.y.get(b) && !witness.y.get(c) && !witness.y.get(d));
        assert!(!is_kernel(&cycle(7).unwrap(), witness.y));
    }

    #[test]
    fn rejects_other_orders() {
        assert!(odd_hole_counterexample(5, &Word((0..5).collect())).is_err());
        assert!(odd_hole_counterexample(8, &Word((0..8).collect())).is_err());
        assert!(odd_hole_counterexample(7, &Word((0..6).collect())).is_err());
    }
}
