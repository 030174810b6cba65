//! Clique enumeration.

use crate::graph::{Graph, VertexSet};

/// Triangles as sorted triples, in lexicographic order.
pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        for b in g.neighbors(a).iter().filter(|&b| b > a) {
            for c in (g.neighbors(a) & g.neighbors(b)).iter().filter(|&c| c > b) {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Calls `visit` on every nonempty clique inside `within` with at most
/// `max_size` vertices, in lexicographic order of the sorted vertex lists.
/// Returning `false` from `visit` stops the enumeration.
pub fn for_each_clique<F>(g: &Graph, within: VertexSet, max_size: usize, mut visit: F)
where
    F: FnMut(VertexSet) -> bool,
{
    fn go<F: FnMut(VertexSet) -> bool>(
        g: &Graph,
        current: VertexSet,
        candidates: VertexSet,
        room: usize,
        visit: &mut F,
    ) -> bool {
        for v in candidates {
            let next = current | VertexSet::singleton(v);
            if !visit(next) {
                return false;
            }
            if room > 1 {
                let later = candidates & (g.neighbors(v) - VertexSet::full(v + 1));
                if !go(g, next, later, room - 1, visit) {
                    return false;
                }
            }
        }
        true
    }
    if max_size > 0 {
        go(g, VertexSet::new(), within & g.vertices(), max_size, &mut visit);
    }
}

/// Every nonempty clique of at most `max_size` vertices, lexicographically.
pub fn cliques(g: &Graph, max_size: usize) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for_each_clique(g, g.vertices(), max_size, |k| {
        out.push(k);
        true
    });
    out
}

/// Maximal cliques by Bron–Kerbosch with Tomita pivoting, sorted
/// lexicographically.
pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    fn bk(g: &Graph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r);
            }
            return;
        }
        let pivot = (p | x).iter().max_by_key(|&u| (p & g.neighbors(u)).len()).unwrap();
        for v in p - g.neighbors(pivot) {
            let nv = g.neighbors(v);
            bk(g, r | VertexSet::singleton(v), p & nv, x & nv, out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    if g.n() > 0 {
        bk(g, VertexSet::new(), g.vertices(), VertexSet::new(), &mut out);
    }
    out.sort_by(|a, b| a.lex_cmp(b));
    out
}

/// Size of a largest clique.
pub fn clique_number(g: &Graph) -> usize {
    maximal_cliques(g).iter().map(VertexSet::len).max().unwrap_or(0)
}
