use super::connector::{minimal_connector_within, MinimalConnectorOutcome, NeighbourPattern};
use super::{find_pattern, validate_witness, PatternKind, PatternWitness};
use crate::cutsets::find_star_cutset;
use crate::error::{Error, Result};
use crate::graph::{components, Graph, VertexSet};

fn with_end(mut p: Vec<usize>, end: usize) -> Vec<usize> {
    p.push(end);
    p
}

fn with_start(start: usize, p: &[usize]) -> Vec<usize> {
    let mut out = vec![start];
    out.extend_from_slice(p);
    out
}

fn rev(p: &[usize]) -> Vec<usize> {
    p.iter().rev().copied().collect()
}

/// A prism, pyramid or theta containing `v` and its neighbours `x_1, x_2,
/// x_3`, built from a minimal connector of the `x_i` in `G \ N[v]`.
///
/// Requires `G` clock-free, diamond-free and without a star cutset; each
/// violation is reported with its own witness.
pub fn three_path_config_through(g: &Graph, v: usize, xs: [usize; 3]) -> Result<PatternWitness> {
    g.check_vertex(v)?;
    for &x in &xs {
        g.check_vertex(x)?;
    }
    if g.degree(v) < 3 {
        return Err(Error::Hypothesis(format!("vertex {v} has fewer than three neighbours")));
    }
    let xset: VertexSet = xs.iter().collect();
    if xset.len() != 3 || !xset.is_subset(&g.neighbors(v)) {
        return Err(Error::Hypothesis(format!("{xs:?} are not three distinct neighbours of {v}")));
    }
    if g.is_clique(xset) {
        return Err(Error::Hypothesis(format!("{xs:?} is a clique")));
    }
    if let Some(w) = find_pattern(g, PatternKind::Clock)? {
        return Err(Error::ClockFound(Box::new(w)));
    }
    if let Some(w) = find_pattern(g, PatternKind::Diamond)? {
        return Err(Error::DiamondDetected(Box::new(w)));
    }
    if let Some(c) = find_star_cutset(g) {
        return Err(Error::StarCutset { center: c.center().unwrap_or(v), cutset: c.x });
    }

    let d = g.vertices() - g.closed_neighbors(v);
    let comps = components(g, d);
    if comps.len() != 1 || !xset.is_subset(&g.neighborhood_of(d)) {
        return Err(Error::Hypothesis(format!("G \\ N[{v}] is not a connected set attached to {xs:?}")));
    }
    let mc = minimal_connector_within(g, xs, d)?;
    let w = match mc.outcome {
        MinimalConnectorOutcome::PathOrHole { i, j, k, path, x_k_sees, .. } => {
            let (xi, xj, xk) = (xs[i], xs[j], xs[k]);
            let inner = &path[1..path.len() - 1];
            let seen: Vec<usize> = inner.iter().copied().filter(|&u| g.adjacent(xk, u)).collect();
            if x_k_sees == NeighbourPattern::NonAdjacentPair {
                let hole = if g.adjacent(xi, xj) { path.clone() } else { with_end(path.clone(), v) };
                let w = PatternWitness::new(PatternKind::Clock).with_role("hole", hole).with_role("center", vec![xk]);
                return Err(Error::ClockFound(Box::new(w)));
            }
            let cut1 = inner.iter().position(|&u| u == seen[0]).unwrap();
            let cut2 = inner.iter().position(|&u| u == seen[1]).unwrap();
            let (h1, h2) = (seen[0], seen[1]);
            let left = &path[..=cut1 + 1];
            let right = rev(&path[cut2 + 1..]);
            if g.adjacent(xi, xj) {
                PatternWitness::new(PatternKind::Prism)
                    .with_role("triangle_a", vec![xi, xj, v])
                    .with_role("triangle_b", vec![h1, h2, xk])
                    .with_paths(vec![left.to_vec(), right, vec![v, xk]])
            } else {
                PatternWitness::new(PatternKind::Pyramid)
                    .with_role("apex", vec![v])
                    .with_role("base", vec![h1, h2, xk])
                    .with_paths(vec![with_start(v, left), with_start(v, &right), vec![v, xk]])
            }
        }
        MinimalConnectorOutcome::Hub { a, paths } => match edge_among(g, xs) {
            None => PatternWitness::new(PatternKind::Theta)
                .with_role("ends", vec![a, v])
                .with_paths(paths.iter().map(|p| with_end(p.clone(), v)).collect()),
            Some((i, j, k)) => PatternWitness::new(PatternKind::Pyramid)
                .with_role("apex", vec![a])
                .with_role("base", vec![xs[i], xs[j], v])
                .with_paths(vec![paths[i].clone(), paths[j].clone(), with_end(paths[k].clone(), v)]),
        },
        MinimalConnectorOutcome::Triangle { triangle, paths } => match edge_among(g, xs) {
            None => PatternWitness::new(PatternKind::Pyramid)
                .with_role("apex", vec![v])
                .with_role("base", triangle.to_vec())
                .with_paths(paths.iter().map(|p| with_start(v, &rev(p))).collect()),
            Some((i, j, k)) => PatternWitness::new(PatternKind::Prism)
                .with_role("triangle_a", vec![triangle[i], triangle[j], triangle[k]])
                .with_role("triangle_b", vec![xs[i], xs[j], v])
                .with_paths(vec![paths[i].clone(), paths[j].clone(), with_end(paths[k].clone(), v)]),
        },
    };
    let w = if w.kind == PatternKind::Pyramid && w.paths.iter().any(|p| p.len() == 2) {
        PatternWitness { kind: PatternKind::ShortPyramid, ..w }
    } else {
        w
    };
    validate_witness(g, &w).map_err(|m| Error::Hypothesis(format!("assembled configuration is invalid: {m}")))?;
    debug_assert!(w.vertices().contains(v) && xset.is_subset(&w.vertices()));
    Ok(w)
}

/// The unique edge `x_i x_j` among the terminals, with the third index.
fn edge_among(g: &Graph, xs: [usize; 3]) -> Option<(usize, usize, usize)> {
    [(0, 1, 2), (0, 2, 1), (1, 2, 0)].into_iter().find(|&(i, j, _)| g.adjacent(xs[i], xs[j]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn theta_returns_itself() {
        let g = named::theta([3, 3, 3]);
        // end 0 has neighbours 2, 4, 6
        let w = three_path_config_through(&g, 0, [2, 4, 6]).unwrap();
        assert_eq!(w.kind, PatternKind::Theta);
        assert_eq!(w.vertices(), g.vertices());
    }

    #[test]
    fn prism_returns_prism() {
        let g = named::prism();
        let w = three_path_config_through(&g, 0, [1, 2, 3]).unwrap();
        assert_eq!(w.kind, PatternKind::Prism);
        assert_eq!(w.vertices(), g.vertices());
    }

    #[test]
    fn too_few_neighbours() {
        let g = named::cycle(6);
        assert!(matches!(three_path_config_through(&g, 0, [1, 5, 2]), Err(Error::Hypothesis(_))));
    }

    #[test]
    fn star_cutset_reported() {
        // theta plus a pendant vertex: the pendant's neighbour is a cut vertex
        let mut g = named::theta([3, 3, 3]).disjoint_union(&Graph::empty(1)).unwrap();
        g.add_edge(8, 1);
        assert!(matches!(three_path_config_through(&g, 0, [2, 4, 6]), Err(Error::StarCutset { .. })));
    }
}
