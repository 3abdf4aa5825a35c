//! Standard graph families.

use crate::error::{Error, Result};
use crate::graph::{check_order, Graph};

fn at_least(what: &'static str, n: usize, min: usize) -> Result<()> {
    if n < min {
        return Err(Error::TooSmall { what, n, min });
    }
    check_order(n, what)
}

pub fn empty(n: usize) -> Result<Graph> {
    at_least("empty", n, 1)?;
    Ok(Graph::empty(n))
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph> {
    at_least("path", n, 1)?;
    Graph::new(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    at_least("cycle", n, 3)?;
    Graph::new(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    at_least("complete", n, 1)?;
    Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `K_{1,n-1}` with centre 0.
pub fn star(n: usize) -> Result<Graph> {
    at_least("star", n, 1)?;
    Graph::new(n, (1..n).map(|v| (0, v)))
}

/// Wheel on `m` vertices: rim `C_{m-1}` on `0..m-1`, hub `m-1`.
///
/// This is exactly `compose(K_2, [C_{m-1}, K_1])`, vertex for vertex.
pub fn wheel(m: usize) -> Result<Graph> {
    at_least("wheel", m, 4)?;
    let rim = m - 1;
    Graph::new(m, (0..rim).flat_map(|v| [(v, (v + 1) % rim), (v, rim)]))
}

/// Resolves a family name such as `P3`, `C7`, `K4`, `E2`, `S4` or `W8`.
pub fn by_name(name: &str) -> Option<Result<Graph>> {
    let mut chars = name.chars();
    let family = chars.next()?;
    let n: usize = chars.as_str().parse().ok()?;
    let build = match family {
        'P' => path,
        'C' => cycle,
        'K' => complete,
        'E' => empty,
        'S' => star,
        'W' => wheel,
        _ => return None,
    };
    Some(build(n))
}
