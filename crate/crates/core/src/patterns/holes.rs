use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

use super::DETECT_CAP;

/// Calls `visit` once per hole of length at most `max_len` containing every
/// vertex of `through`. Each cycle is reported starting at its smallest
/// vertex, with its second vertex smaller than its last.
pub fn for_each_hole<F>(g: &Graph, max_len: usize, through: VertexSet, mut visit: F) -> Result<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    if g.n() > DETECT_CAP {
        return Err(Error::ScaleCap { what: "hole enumeration", size: g.n(), cap: DETECT_CAP });
    }
    g.check_set(through)?;
    let start_limit = through.min().unwrap_or(usize::MAX);
    for s in 0..g.n() {
        if s > start_limit {
            break;
        }
        let higher = g.vertices() - VertexSet::full(s + 1);
        let mut path = vec![s];
        if extend(g, s, higher, max_len, through, &mut path, VertexSet::singleton(s), &mut visit).is_break() {
            break;
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn extend<F>(
    g: &Graph,
    s: usize,
    allowed: VertexSet,
    max_len: usize,
    through: VertexSet,
    path: &mut Vec<usize>,
    blocked: VertexSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let last = *path.last().unwrap();
    // `blocked` is the closed neighbourhood of path[1..len-1] plus s.
    for u in g.neighbors(last) & (allowed - blocked) {
        if path.len() >= 2 && g.adjacent(u, s) {
            if path.len() >= 3 && path[1] < u {
                path.push(u);
                let in_path: VertexSet = path.iter().collect();
                let r = if through.is_subset(&in_path) { visit(path) } else { ControlFlow::Continue(()) };
                path.pop();
                r?;
            }
            continue;
        }
        if path.len() + 1 >= max_len {
            continue;
        }
        let next_blocked = if path.len() >= 2 { blocked | g.closed_neighbors(last) } else { blocked };
        path.push(u);
        let r = extend(g, s, allowed, max_len, through, path, next_blocked, visit);
        path.pop();
        r?;
    }
    ControlFlow::Continue(())
}

/// All holes with at most `max_len` vertices through `through`, each exactly
/// once up to rotation and reflection.
pub fn holes_enumerate(g: &Graph, max_len: usize, through: VertexSet) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_hole(g, max_len, through, |c| {
        out.push(c.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}
