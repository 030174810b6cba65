use super::{Graph, VertexSet};
use crate::error::{Error, Result};

/// Largest order accepted by [`are_isomorphic`].
pub const ISO_CAP: usize = 128;

/// A vertex bijection `G -> H` preserving adjacency and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Isomorphism {
    pub mapping: Vec<usize>,
}

impl Isomorphism {
    pub fn is_valid(&self, g: &Graph, h: &Graph) -> bool {
        let n = g.n();
        if h.n() != n || self.mapping.len() != n {
            return false;
        }
        let image: VertexSet = self.mapping.iter().collect();
        if image.len() != n || image.max().is_some_and(|m| m >= n) {
            return false;
        }
        (0..n).all(|u| {
            (u + 1..n).all(|v| g.adjacent(u, v) == h.adjacent(self.mapping[u], self.mapping[v]))
        })
    }
}

fn mix(mut h: u64, x: u64) -> u64 {
    h ^= x.wrapping_add(0x9e37_79b9_7f4a_7c15).wrapping_add(h << 6).wrapping_add(h >> 2);
    h.wrapping_mul(0xff51_afd7_ed55_8ccd)
}

/// Colour refinement. Colours are ranks of sorted signatures, so they are
/// invariant under relabelling; `trace` records the signature multiset of
/// every round.
fn refine(g: &Graph) -> (Vec<usize>, Vec<u64>) {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut classes = if n == 0 { 0 } else { 1 };
    let mut trace = vec![n as u64, g.edge_count() as u64];
    loop {
        let mut sigs: Vec<(usize, Vec<usize>, usize)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb, v)
            })
            .collect();
        sigs.sort();
        let mut next = vec![0usize; n];
        let mut rank = 0;
        let mut round = 0u64;
        for i in 0..n {
            if i > 0 && (sigs[i].0, &sigs[i].1) != (sigs[i - 1].0, &sigs[i - 1].1) {
                rank += 1;
            }
            next[sigs[i].2] = rank;
            let mut h = mix(rank as u64, sigs[i].0 as u64);
            for &c in &sigs[i].1 {
                h = mix(h, c as u64);
            }
            round = mix(round, h);
        }
        trace.push(round);
        let count = if n == 0 { 0 } else { rank + 1 };
        colors = next;
        if count == classes {
            break;
        }
        classes = count;
    }
    (colors, trace)
}

/// An isomorphism-invariant fingerprint (colour-refinement trace). Equal
/// graphs up to isomorphism always share a key.
pub fn invariant_key(g: &Graph) -> Vec<u64> {
    refine(g).1
}

/// Exact isomorphism test by colour-constrained backtracking.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<Option<Isomorphism>> {
    let n = g.n();
    if n.max(h.n()) > ISO_CAP {
        return Err(Error::ScaleCap { what: "isomorphism", size: n.max(h.n()), cap: ISO_CAP });
    }
    if n != h.n() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let (cg, tg) = refine(g);
    let (ch, th) = refine(h);
    if tg != th {
        return Ok(None);
    }
    let classes = cg.iter().max().map_or(0, |m| m + 1);
    let mut class_size = vec![0usize; classes];
    for &c in &cg {
        class_size[c] += 1;
    }
    // Map vertices of G in an order that keeps each new vertex attached to
    // already-mapped ones where possible.
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::new();
    while order.len() < n {
        let next = (0..n)
            .filter(|v| !placed.contains(*v))
            .max_by_key(|&v| {
                let attached = (g.neighbors(v) & placed).len();
                (attached, std::cmp::Reverse(class_size[cg[v]]), std::cmp::Reverse(v))
            })
            .unwrap();
        placed.insert(next);
        order.push(next);
    }
    let mut by_color: Vec<Vec<usize>> = vec![Vec::new(); classes];
    for v in 0..n {
        by_color[ch[v]].push(v);
    }
    let mut mapping = vec![usize::MAX; n];
    let mut used = VertexSet::new();
    if extend(g, h, &cg, &by_color, &order, 0, &mut mapping, &mut used) {
        Ok(Some(Isomorphism { mapping }))
    } else {
        Ok(None)
    }
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    by_color: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    mapping: &mut [usize],
    used: &mut VertexSet,
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    'cand: for &w in &by_color[cg[v]] {
        if used.contains(w) {
            continue;
        }
        for &u in &order[..depth] {
            if g.adjacent(u, v) != h.adjacent(mapping[u], w) {
                continue 'cand;
            }
        }
        mapping[v] = w;
        used.insert(w);
        if extend(g, h, cg, by_color, order, depth + 1, mapping, used) {
            return true;
        }
        used.remove(w);
    }
    mapping[v] = usize::MAX;
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn examples() {
        let c5 = named::cycle(5);
        let relabelled = c5.permuted(&[3, 0, 4, 1, 2]);
        let iso = are_isomorphic(&c5, &relabelled).unwrap().unwrap();
        assert!(iso.is_valid(&c5, &relabelled));

        let two_triangles = named::complete(3).disjoint_union(&named::complete(3)).unwrap();
        assert!(are_isomorphic(&named::cycle(6), &two_triangles).unwrap().is_none());

        let k33 = named::complete_bipartite(3, 3);
        assert!(are_isomorphic(&k33, &k33).unwrap().is_some());
        assert!(are_isomorphic(&k33, &named::prism()).unwrap().is_none());
    }

    #[test]
    fn scale_cap() {
        let big = Graph::empty(ISO_CAP + 1);
        assert!(are_isomorphic(&big, &big).unwrap_err().is_scale_cap());
    }
}
