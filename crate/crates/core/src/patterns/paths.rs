//! Sequential backtracking search for families of induced paths with
//! pairwise anticomplete private parts. Holes, thetas, pyramids and prisms
//! are all instances.

use std::ops::ControlFlow;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug)]
pub(crate) struct PathSpec {
    pub start: usize,
    pub end: usize,
    /// Minimum length in edges.
    pub min_len: usize,
}

/// Searches for induced paths `P_i` from `specs[i].start` to `specs[i].end`
/// such that
/// * interiors avoid `blocked`, every endpoint, and each other's closed
///   neighbourhoods;
/// * an interior vertex of `P_i` has no neighbour among the endpoints other
///   than the ends of `P_i`.
///
/// Endpoint-to-endpoint adjacencies are the caller's business. `visit`
/// receives each complete family; returning `Break` stops the search.
/// When `ordered` is set, consecutive paths with identical endpoints must
/// have increasing second vertices (to skip permutations of the same set).
pub(crate) fn search_paths<F>(
    g: &Graph,
    specs: &[PathSpec],
    blocked: VertexSet,
    ordered: bool,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&[Vec<usize>]) -> ControlFlow<()>,
{
    let specials: VertexSet = specs.iter().flat_map(|s| [s.start, s.end]).collect();
    let mut ctx = Ctx { g, specs, specials, ordered, found: Vec::with_capacity(specs.len()) };
    let avail = g.vertices() - blocked - specials;
    ctx.next_path(avail, visit)
}

struct Ctx<'a> {
    g: &'a Graph,
    specs: &'a [PathSpec],
    specials: VertexSet,
    ordered: bool,
    found: Vec<Vec<usize>>,
}

impl Ctx<'_> {
    fn next_path<F>(&mut self, avail: VertexSet, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[Vec<usize>]) -> ControlFlow<()>,
    {
        let i = self.found.len();
        if i == self.specs.len() {
            return visit(&self.found);
        }
        let spec = self.specs[i];
        let g = self.g;
        if spec.start == spec.end {
            self.found.push(vec![spec.start]);
            let r = self.next_path(avail, visit);
            self.found.pop();
            return r;
        }
        if g.adjacent(spec.start, spec.end) {
            if spec.min_len > 1 {
                return ControlFlow::Continue(());
            }
            self.found.push(vec![spec.start, spec.end]);
            let r = self.next_path(avail, visit);
            self.found.pop();
            return r;
        }
        let mut other = self.specials;
        other.remove(spec.start);
        other.remove(spec.end);
        let mut interior_ok = avail;
        for s in other {
            interior_ok -= g.neighbors(s);
        }
        let min_second = match (self.ordered, i) {
            (true, i) if i > 0 => {
                let prev = &self.specs[i - 1];
                if prev.start == spec.start && prev.end == spec.end {
                    self.found[i - 1].get(1).copied()
                } else {
                    None
                }
            }
            _ => None,
        };
        let mut path = vec![spec.start];
        self.extend(spec, &mut path, VertexSet::new(), interior_ok, avail, min_second, visit)
    }

    #[allow(clippy::too_many_arguments)]
    fn extend<F>(
        &mut self,
        spec: PathSpec,
        path: &mut Vec<usize>,
        earlier_nbhd: VertexSet,
        interior_ok: VertexSet,
        avail: VertexSet,
        min_second: Option<usize>,
        visit: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[Vec<usize>]) -> ControlFlow<()>,
    {
        let g = self.g;
        let last = *path.last().unwrap();
        if path.len() > 1 && g.adjacent(last, spec.end) {
            if path.len() < spec.min_len {
                return ControlFlow::Continue(());
            }
            path.push(spec.end);
            let done = path.clone();
            path.pop();
            let interior: VertexSet = done[1..done.len() - 1].iter().collect();
            let mut closed = interior;
            for v in interior {
                closed |= g.neighbors(v);
            }
            self.found.push(done);
            let r = self.next_path(avail - closed, visit);
            self.found.pop();
            return r;
        }
        // `earlier_nbhd` is N of every path vertex before `last`.
        let candidates = g.neighbors(last) & (interior_ok - earlier_nbhd);
        let next_earlier = earlier_nbhd | g.neighbors(last);
        for u in candidates {
            if path.len() == 1 {
                if let Some(m) = min_second {
                    if u <= m {
                        continue;
                    }
                }
            }
            if path.contains(&u) {
                continue;
            }
            path.push(u);
            let r = self.extend(spec, path, next_earlier, interior_ok, avail, min_second, visit);
            path.pop();
            r?;
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn count(g: &Graph, specs: &[PathSpec], ordered: bool) -> usize {
        let mut c = 0;
        let _ = search_paths(g, specs, VertexSet::new(), ordered, &mut |_| {
            c += 1;
            ControlFlow::Continue(())
        });
        c
    }

    #[test]
    fn theta_paths_found_once_when_ordered() {
        let g = named::theta([2, 3, 4]);
        let spec = PathSpec { start: 0, end: 1, min_len: 2 };
        assert_eq!(count(&g, &[spec; 3], true), 1);
        assert_eq!(count(&g, &[spec; 3], false), 6);
    }

    #[test]
    fn hole_through_two_vertices() {
        let c6 = named::cycle(6);
        let spec = PathSpec { start: 0, end: 3, min_len: 2 };
        assert_eq!(count(&c6, &[spec; 2], true), 1);
        // a chord 1-4 splits the hexagon: no hole through 0 and 3 avoids it
        let mut chorded = c6.clone();
        chorded.add_edge(1, 4);
        assert_eq!(count(&chorded, &[spec; 2], true), 0);
    }
}
