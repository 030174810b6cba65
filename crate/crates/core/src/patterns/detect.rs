use std::ops::ControlFlow;

use super::paths::{search_paths, PathSpec};
use super::{PatternKind, PatternWitness};
use crate::cliques::triangles;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Largest order accepted by the exponential searches (holes, clocks,
/// wheels, three-path configurations).
pub const DETECT_CAP: usize = 64;

/// Searches exhaustively for an induced occurrence of `kind`. Every witness
/// returned has been re-validated.
pub fn find_pattern(g: &Graph, kind: PatternKind) -> Result<Option<PatternWitness>> {
    let exponential = !matches!(
        kind,
        PatternKind::Diamond | PatternKind::Paw | PatternKind::Seagull | PatternKind::Claw
    );
    if exponential && g.n() > DETECT_CAP {
        return Err(Error::ScaleCap { what: "pattern search", size: g.n(), cap: DETECT_CAP });
    }
    let found = match kind {
        PatternKind::Hole => find_hole(g),
        PatternKind::Clock => find_clock(g, 2),
        PatternKind::TClock(t) => {
            if t == 0 {
                return Err(Error::InvalidParameter("t-clock needs t >= 1".into()));
            }
            find_clock(g, t.max(2)).map(|w| PatternWitness { kind, ..w })
        }
        PatternKind::Wheel => find_wheel(g),
        PatternKind::Diamond => find_diamond(g),
        PatternKind::Paw => find_paw(g),
        PatternKind::Seagull => find_seagull(g),
        PatternKind::Claw => find_claw(g),
        PatternKind::Theta => find_theta(g),
        PatternKind::Pyramid => find_pyramid(g, false),
        PatternKind::ShortPyramid => find_pyramid(g, true),
        PatternKind::Prism => find_prism(g),
        PatternKind::ThreePathConfig => find_theta(g).or_else(|| find_pyramid(g, false)).or_else(|| find_prism(g)),
    };
    if let Some(w) = &found {
        if let Err(m) = super::validate_witness(g, w) {
            panic!("detector produced an invalid {} witness: {m}", w.kind);
        }
    }
    Ok(found)
}

/// Chordality by maximum cardinality search: the reverse visiting order is
/// a perfect elimination ordering exactly when the graph is chordal.
pub fn is_chordal(g: &Graph) -> bool {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut visited = VertexSet::new();
    for _ in 0..n {
        let v = (g.vertices() - visited).iter().max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        if !g.is_clique(g.neighbors(v) & visited) {
            return false;
        }
        visited.insert(v);
        for u in g.neighbors(v) - visited {
            weight[u] += 1;
        }
    }
    true
}

fn cycle_from_paths(p: &[usize], q: &[usize]) -> Vec<usize> {
    let mut c = p.to_vec();
    c.extend(q[1..q.len() - 1].iter().rev());
    c
}

fn find_hole(g: &Graph) -> Option<PatternWitness> {
    if is_chordal(g) {
        return None;
    }
    let mut found = None;
    let _ = super::for_each_hole(g, usize::MAX, VertexSet::new(), |c| {
        found = Some(c.to_vec());
        ControlFlow::Break(())
    });
    found.map(|c| PatternWitness::new(PatternKind::Hole).with_role("cycle", c))
}

/// A hole of `g - blocked` through non-adjacent `x` and `y` whose two arcs
/// have length at least `min_arc`; `visit` sees each such hole once.
fn holes_through_pair<F>(g: &Graph, x: usize, y: usize, min_arc: usize, blocked: VertexSet, mut visit: F)
where
    F: FnMut(Vec<usize>) -> ControlFlow<()>,
{
    let spec = PathSpec { start: x, end: y, min_len: min_arc };
    let _ = search_paths(g, &[spec, spec], blocked, true, &mut |ps| visit(cycle_from_paths(&ps[0], &ps[1])));
}

fn find_clock(g: &Graph, min_arc: usize) -> Option<PatternWitness> {
    if is_chordal(g) {
        return None;
    }
    for v in 0..g.n() {
        let nb = g.neighbors(v).to_vec();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.adjacent(x, y) {
                    continue;
                }
                let mut found = None;
                holes_through_pair(g, x, y, min_arc, VertexSet::singleton(v), |c| {
                    found = Some(c);
                    ControlFlow::Break(())
                });
                if let Some(c) = found {
                    return Some(
                        PatternWitness::new(PatternKind::Clock).with_role("hole", c).with_role("center", vec![v]),
                    );
                }
            }
        }
    }
    None
}

fn find_wheel(g: &Graph) -> Option<PatternWitness> {
    if is_chordal(g) {
        return None;
    }
    for v in 0..g.n() {
        let nbhd = g.neighbors(v);
        let nb = nbhd.to_vec();
        for (i, &x) in nb.iter().enumerate() {
            for &y in &nb[i + 1..] {
                if g.adjacent(x, y) {
                    continue;
                }
                let mut found = None;
                holes_through_pair(g, x, y, 2, VertexSet::singleton(v), |c| {
                    if c.iter().filter(|&&u| nbhd.contains(u)).count() >= 3 {
                        found = Some(c);
                        ControlFlow::Break(())
                    } else {
                        ControlFlow::Continue(())
                    }
                });
                if let Some(c) = found {
                    return Some(
                        PatternWitness::new(PatternKind::Wheel).with_role("hole", c).with_role("center", vec![v]),
                    );
                }
            }
        }
    }
    None
}

fn find_diamond(g: &Graph) -> Option<PatternWitness> {
    for (x, y) in g.edges() {
        let common = g.neighbors(x) & g.neighbors(y);
        for a in common {
            if let Some(b) = (common - g.closed_neighbors(a)).iter().find(|&b| b > a) {
                return Some(
                    PatternWitness::new(PatternKind::Diamond).with_role("spine", vec![x, y]).with_role("tips", vec![a, b]),
                );
            }
        }
    }
    None
}

fn find_paw(g: &Graph) -> Option<PatternWitness> {
    for v in 0..g.n() {
        for u in g.neighbors(v) {
            let rest = g.neighbors(v) - g.closed_neighbors(u);
            for a in rest {
                if let Some(a2) = (g.neighbors(a) & rest).iter().find(|&a2| a2 > a) {
                    return Some(
                        PatternWitness::new(PatternKind::Paw)
                            .with_role("a", vec![a])
                            .with_role("a_prime", vec![a2])
                            .with_role("v", vec![v])
                            .with_role("u", vec![u]),
                    );
                }
            }
        }
    }
    None
}

fn find_seagull(g: &Graph) -> Option<PatternWitness> {
    for v in 0..g.n() {
        for a in g.neighbors(v) {
            if let Some(u) = (g.neighbors(v) - g.closed_neighbors(a)).iter().find(|&u| u > a) {
                return Some(
                    PatternWitness::new(PatternKind::Seagull)
                        .with_role("v", vec![v])
                        .with_role("a", vec![a])
                        .with_role("u", vec![u]),
                );
            }
        }
    }
    None
}

fn find_claw(g: &Graph) -> Option<PatternWitness> {
    (0..g.n()).find_map(|v| {
        is_claw_center(g, v).map(|l| {
            PatternWitness::new(PatternKind::Claw).with_role("center", vec![v]).with_role("leaves", l.to_vec())
        })
    })
}

/// The lexicographically smallest stable triple in `N(v)`, if any.
pub fn is_claw_center(g: &Graph, v: usize) -> Option<[usize; 3]> {
    let nb = g.neighbors(v);
    for x in nb {
        let rest = nb - g.closed_neighbors(x);
        for y in rest.iter().filter(|&y| y > x) {
            if let Some(z) = (rest - g.closed_neighbors(y)).iter().find(|&z| z > y) {
                return Some([x, y, z]);
            }
        }
    }
    None
}

/// A vertex `v` with `N(u) \ {v}` a clique. Neighbours of `u` are tried
/// first in ascending order; when `N(u)` is empty any vertex qualifies and
/// the smallest vertex other than `u` (or `u` itself when alone) is returned.
pub fn near_simplicial_witness(g: &Graph, u: usize) -> Option<usize> {
    let nb = g.neighbors(u);
    if nb.is_empty() {
        return (0..g.n()).find(|&v| v != u).or(Some(u));
    }
    nb.iter().find(|&v| g.is_clique(nb - VertexSet::singleton(v)))
}

fn find_theta(g: &Graph) -> Option<PatternWitness> {
    for a in 0..g.n() {
        if g.degree(a) < 3 {
            continue;
        }
        for b in a + 1..g.n() {
            if g.adjacent(a, b) || g.degree(b) < 3 {
                continue;
            }
            let spec = PathSpec { start: a, end: b, min_len: 2 };
            let mut found = None;
            let _ = search_paths(g, &[spec; 3], VertexSet::new(), true, &mut |ps| {
                found = Some(ps.to_vec());
                ControlFlow::Break(())
            });
            if let Some(paths) = found {
                return Some(PatternWitness::new(PatternKind::Theta).with_role("ends", vec![a, b]).with_paths(paths));
            }
        }
    }
    None
}

fn find_pyramid(g: &Graph, short_only: bool) -> Option<PatternWitness> {
    let tris = triangles(g);
    for a in 0..g.n() {
        if g.degree(a) < 3 {
            continue;
        }
        for &t in &tris {
            if t.contains(&a) {
                continue;
            }
            let hits = t.iter().filter(|&&b| g.adjacent(a, b)).count();
            if hits > 1 || (short_only && hits == 0) {
                continue;
            }
            let specs: Vec<PathSpec> = t.iter().map(|&b| PathSpec { start: a, end: b, min_len: 1 }).collect();
            let mut found = None;
            let _ = search_paths(g, &specs, VertexSet::new(), false, &mut |ps| {
                found = Some(ps.to_vec());
                ControlFlow::Break(())
            });
            if let Some(paths) = found {
                let kind = if hits == 1 { PatternKind::ShortPyramid } else { PatternKind::Pyramid };
                let kind = if short_only { kind } else { PatternKind::Pyramid };
                return Some(
                    PatternWitness::new(kind).with_role("apex", vec![a]).with_role("base", t.to_vec()).with_paths(paths),
                );
            }
        }
    }
    None
}

const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];

fn find_prism(g: &Graph) -> Option<PatternWitness> {
    let tris = triangles(g);
    for (i, ta) in tris.iter().enumerate() {
        let sa: VertexSet = ta.iter().collect();
        for tb in &tris[i + 1..] {
            if tb.iter().any(|&b| sa.contains(b)) || tb[0] < ta[0] {
                continue;
            }
            for perm in PERMS {
                let b = [tb[perm[0]], tb[perm[1]], tb[perm[2]]];
                let crossing = (0..3).any(|p| (0..3).any(|q| p != q && g.adjacent(ta[p], b[q])));
                if crossing {
                    continue;
                }
                let specs: Vec<PathSpec> = (0..3).map(|p| PathSpec { start: ta[p], end: b[p], min_len: 1 }).collect();
                let mut found = None;
                let _ = search_paths(g, &specs, VertexSet::new(), false, &mut |ps| {
                    found = Some(ps.to_vec());
                    ControlFlow::Break(())
                });
                if let Some(paths) = found {
                    return Some(
                        PatternWitness::new(PatternKind::Prism)
                            .with_role("triangle_a", ta.to_vec())
                            .with_role("triangle_b", b.to_vec())
                            .with_paths(paths),
                    );
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    fn plus_vertex(g: &Graph, nbrs: &[usize]) -> Graph {
        let mut h = g.disjoint_union(&Graph::empty(1)).unwrap();
        for &u in nbrs {
            h.add_edge(g.n(), u);
        }
        h
    }

    #[test]
    fn clock_examples() {
        let c4 = named::cycle(4);
        let g = plus_vertex(&c4, &[0, 2]);
        assert!(find_pattern(&g, PatternKind::Clock).unwrap().is_some());
        let named_witness = PatternWitness::new(PatternKind::Clock)
            .with_role("hole", vec![0, 1, 2, 3])
            .with_role("center", vec![4]);
        assert!(named_witness.validate(&g).is_ok());
        assert!(find_pattern(&named::complete(4), PatternKind::Clock).unwrap().is_none());
        let wheel = plus_vertex(&c4, &[0, 1, 2, 3]);
        assert!(find_pattern(&wheel, PatternKind::Clock).unwrap().is_some());
        assert!(find_pattern(&wheel, PatternKind::Wheel).unwrap().is_some());
        assert!(find_pattern(&g, PatternKind::Wheel).unwrap().is_none());
    }

    #[test]
    fn short_pyramid_clock_centers_on_base() {
        // apex 0, base 1,2,3; P1 = 0-1 and P2, P3 of length 2
        let g = named::pyramid([1, 2, 2]);
        let w = find_pattern(&g, PatternKind::Clock).unwrap().unwrap();
        assert_eq!(w.vertex("center"), Some(1));
        assert!(find_pattern(&g, PatternKind::ShortPyramid).unwrap().is_some());
    }

    #[test]
    fn local_patterns() {
        assert!(find_pattern(&named::diamond(), PatternKind::Diamond).unwrap().is_some());
        assert!(find_pattern(&named::complete(4), PatternKind::Diamond).unwrap().is_none());
        assert!(find_pattern(&named::paw(), PatternKind::Paw).unwrap().is_some());
        assert!(find_pattern(&named::path(3), PatternKind::Seagull).unwrap().is_some());
        assert!(find_pattern(&named::star(3), PatternKind::Claw).unwrap().is_some());
    }

    #[test]
    fn three_path_configurations() {
        let k23 = named::complete_bipartite(2, 3);
        let w = find_pattern(&k23, PatternKind::Theta).unwrap().unwrap();
        assert_eq!(w.role("ends"), &[0, 1]);
        assert!(find_pattern(&named::prism(), PatternKind::Prism).unwrap().is_some());
        assert!(find_pattern(&named::prism(), PatternKind::Pyramid).unwrap().is_none());
        assert!(find_pattern(&named::pyramid([2, 2, 3]), PatternKind::Pyramid).unwrap().is_some());
        assert!(find_pattern(&named::pyramid([2, 2, 3]), PatternKind::ShortPyramid).unwrap().is_none());
        assert!(find_pattern(&named::cycle(7), PatternKind::ThreePathConfig).unwrap().is_none());
    }

    #[test]
    fn claw_centers_and_near_simplicial() {
        assert_eq!(is_claw_center(&named::star(3), 0), Some([1, 2, 3]));
        let prism = named::prism();
        assert!((0..6).all(|v| is_claw_center(&prism, v).is_none()));
        assert!(is_claw_center(&named::cycle(6), 0).is_none());
        assert_eq!(near_simplicial_witness(&named::paw(), 3), Some(2));
        assert_eq!(near_simplicial_witness(&named::star(3), 0), None);
        assert_eq!(near_simplicial_witness(&named::complete(4), 0), Some(1));
    }

    #[test]
    fn chordality() {
        assert!(is_chordal(&named::complete(5)));
        assert!(is_chordal(&named::path(6)));
        assert!(!is_chordal(&named::cycle(4)));
        assert!(!is_chordal(&named::prism()));
    }
}
