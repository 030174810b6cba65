//! Brute-force checkers used to re-validate suite outcomes. They work from
//! adjacency alone and share no search code with the library.

use crate::graph::{Graph, VertexSet};
use crate::weights::{Rational, Weighting};

/// Largest order for the subset-based brute force.
pub const BRUTE_CAP: usize = 20;

fn masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= BRUTE_CAP, "brute-force checks are limited to {BRUTE_CAP} vertices");
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u)).collect()
}

fn connected(adj: &[u32], mask: u32) -> bool {
    if mask == 0 {
        return true;
    }
    let mut seen = mask & mask.wrapping_neg();
    let mut frontier = seen;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let new = adj[v] & mask & !seen;
        seen |= new;
        frontier |= new;
    }
    seen == mask
}

fn is_hole(adj: &[u32], mask: u32) -> bool {
    if mask.count_ones() < 4 {
        return false;
    }
    let mut m = mask;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        if (adj[v] & mask).count_ones() != 2 {
            return false;
        }
    }
    connected(adj, mask)
}

/// Some hole plus an outside vertex with two non-adjacent neighbours on it.
pub fn has_clock(g: &Graph) -> bool {
    let adj = masks(g);
    let n = g.n();
    (0u32..1 << n).any(|s| {
        is_hole(&adj, s)
            && (0..n).filter(|&v| s >> v & 1 == 0).any(|v| {
                let nb = adj[v] & s;
                (0..n).filter(|&u| nb >> u & 1 == 1).any(|u| nb & !adj[u] & !(1 << u) != 0)
            })
    })
}

/// Some hole plus an outside vertex with at least three neighbours on it.
pub fn has_wheel(g: &Graph) -> bool {
    let adj = masks(g);
    let n = g.n();
    (0u32..1 << n).any(|s| is_hole(&adj, s) && (0..n).any(|v| s >> v & 1 == 0 && (adj[v] & s).count_ones() >= 3))
}

/// Four vertices spanning exactly five edges.
pub fn has_diamond(g: &Graph) -> bool {
    let adj = masks(g);
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    let s: u32 = 1 << a | 1 << b | 1 << c | 1 << d;
                    let edges: u32 = [a, b, c, d].iter().map(|&v| (adj[v] & s).count_ones()).sum::<u32>() / 2;
                    if edges == 5 {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Some `X` with `x ∈ X ⊆ N[x]` whose removal leaves at least two
/// components.
pub fn has_star_cutset(g: &Graph) -> bool {
    let adj = masks(g);
    let n = g.n();
    let all: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    for x in 0..n {
        let nb: Vec<usize> = (0..n).filter(|&u| adj[x] >> u & 1 == 1).collect();
        for pick in 0u32..1 << nb.len() {
            let mut cut: u32 = 1 << x;
            for (i, &u) in nb.iter().enumerate() {
                if pick >> i & 1 == 1 {
                    cut |= 1 << u;
                }
            }
            let rest = all & !cut;
            if rest != 0 && !connected(&adj, rest) {
                return true;
            }
        }
    }
    false
}

pub fn is_clique(g: &Graph, s: VertexSet) -> bool {
    let v = s.to_vec();
    v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| g.adjacent(a, b)))
}

pub fn is_stable(g: &Graph, s: VertexSet) -> bool {
    let v = s.to_vec();
    v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| !g.adjacent(a, b)))
}

/// Whether `N(v)` has three pairwise non-adjacent vertices.
pub fn is_claw_center(g: &Graph, v: usize) -> bool {
    let nb = g.neighbors(v).to_vec();
    for i in 0..nb.len() {
        for j in i + 1..nb.len() {
            for k in j + 1..nb.len() {
                if is_stable(g, [nb[i], nb[j], nb[k]].iter().collect()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Largest clique order, by exhaustive subsets.
pub fn clique_number(g: &Graph) -> usize {
    let adj = masks(g);
    let n = g.n();
    (0u32..1 << n)
        .filter(|&s| (0..n).filter(|&v| s >> v & 1 == 1).all(|v| (adj[v] | 1 << v) & s == s))
        .map(u32::count_ones)
        .max()
        .unwrap_or(0) as usize
}

/// Components of `G` restricted to `within`, by breadth-first search.
pub fn components(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut left = within;
    let mut out = Vec::new();
    while let Some(start) = left.min() {
        let mut comp = VertexSet::singleton(start);
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for u in g.neighbors(v) {
                if within.contains(u) && !comp.contains(u) {
                    comp.insert(u);
                    queue.push(u);
                }
            }
        }
        left -= comp;
        out.push(comp);
    }
    out
}

pub fn weight(w: &Weighting, s: VertexSet) -> Rational {
    s.iter().map(|v| w.get(v)).fold(Rational::from_integer(0), |a, b| a + b)
}

/// Every component of `G \ x` weighs at most `1/2`.
pub fn is_balanced(g: &Graph, w: &Weighting, x: VertexSet) -> bool {
    let half = Rational::new(1, 2);
    components(g, g.vertices() - x).into_iter().all(|d| weight(w, d) <= half)
}

/// The component of `G \ x` heavier than `1/2`, if any.
pub fn heavy_component(g: &Graph, w: &Weighting, x: VertexSet) -> Option<VertexSet> {
    let half = Rational::new(1, 2);
    components(g, g.vertices() - x).into_iter().find(|&d| weight(w, d) > half)
}

/// No path from `from` to `to` avoids `x`.
pub fn separates(g: &Graph, x: VertexSet, from: VertexSet, to: VertexSet) -> bool {
    if from.intersects(&x) || to.intersects(&x) {
        return false;
    }
    components(g, g.vertices() - x).iter().all(|d| !(d.intersects(&from) && d.intersects(&to)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn brute_force_patterns() {
        let w4 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 1), (4, 2), (4, 3)]).unwrap();
        assert!(has_clock(&w4) && has_wheel(&w4));
        assert!(!has_clock(&named::cycle(6)));
        assert!(!has_clock(&named::prism()));
        assert!(has_diamond(&named::diamond()) && !has_diamond(&named::complete(4)));
        assert!(has_star_cutset(&named::path(4)));
        assert!(!has_star_cutset(&named::cycle(6)));
        assert!(!has_star_cutset(&named::prism()));
        assert_eq!(clique_number(&named::prism()), 3);
        assert!(is_claw_center(&named::star(3), 0));
    }
}
