//! Small-graph enumeration up to isomorphism.

use std::io::BufRead;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{decode_graph6, is_connected, Graph};

/// Largest order the internal enumerator generates.
pub const ENUM_CAP: usize = 9;

/// Largest order [`canonical_form`] accepts.
pub const CANON_CAP: usize = 16;

/// Upper-triangle adjacency bits in the order `(0,1), (0,2), (1,2), (0,3), ...`.
type Code = u128;

fn pair_bit(i: usize, j: usize) -> u32 {
    let (i, j) = if i < j { (i, j) } else { (j, i) };
    (j * (j - 1) / 2 + i) as u32
}

/// Ranks `key(v)` over all vertices; equal keys share a colour and colours
/// follow key order.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter().map(|k| sorted.binary_search(k).expect("present")).collect()
}

fn class_count(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |m| m + 1)
}

/// Refines an ordered colouring until every vertex in a class sees the same
/// number of vertices of each class.
fn refine(adj: &[u16], mut colors: Vec<usize>) -> Vec<usize> {
    loop {
        let k = class_count(&colors);
        let keys: Vec<(usize, Vec<u8>)> = (0..adj.len())
            .map(|v| {
                let mut counts = vec![0u8; k];
                let mut m = adj[v];
                while m != 0 {
                    let u = m.trailing_zeros() as usize;
                    m &= m - 1;
                    counts[colors[u]] += 1;
                }
                (colors[v], counts)
            })
            .collect();
        let next = rank(&keys);
        if class_count(&next) == k {
            return next;
        }
        colors = next;
    }
}

fn code_of(adj: &[u16], order: &[usize]) -> Code {
    let mut code: Code = 0;
    for j in 1..order.len() {
        for i in 0..j {
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1 << pair_bit(i, j);
            }
        }
    }
    code
}

fn search(adj: &[u16], colors: Vec<usize>, best: &mut Option<(Code, Vec<usize>)>) {
    let colors = refine(adj, colors);
    let n = adj.len();
    let k = class_count(&colors);
    if k == n {
        let mut order = vec![0; n];
        for v in 0..n {
            order[colors[v]] = v;
        }
        let code = code_of(adj, &order);
        if best.as_ref().is_none_or(|(c, _)| code > *c) {
            *best = Some((code, order));
        }
        return;
    }
    let mut size = vec![0usize; k];
    for &c in &colors {
        size[c] += 1;
    }
    let target = (0..k).find(|&c| size[c] > 1).expect("not discrete");
    let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // Swapping twins is an automorphism fixing the colouring, so their
        // subtrees give the same codes.
        let twin = tried.iter().any(|&u| adj[u] & !(1 << v) == adj[v] & !(1 << u));
        if twin {
            continue;
        }
        tried.push(v);
        let split: Vec<usize> = (0..n).map(|u| 2 * colors[u] + (colors[u] == target && u != v) as usize).collect();
        search(adj, rank(&split), best);
    }
}

fn masks(g: &Graph) -> Vec<u16> {
    (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u16, |m, u| m | 1 << u)).collect()
}

fn canonical_code(adj: &[u16]) -> (Code, Vec<usize>) {
    let mut best = None;
    search(adj, vec![0; adj.len()], &mut best);
    best.unwrap_or((0, Vec::new()))
}

fn decode(n: usize, code: Code) -> Graph {
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            if code >> pair_bit(i, j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid code")
}

/// The canonical relabelling of `g`: isomorphic graphs map to identical
/// graphs.
pub fn canonical_form(g: &Graph) -> Result<Graph> {
    if g.n() > CANON_CAP {
        return Err(Error::ScaleCap { what: "canonical form", size: g.n(), cap: CANON_CAP });
    }
    let (code, _) = canonical_code(&masks(g));
    Ok(decode(g.n(), code))
}

/// Every graph of order `0..=n` (one per isomorphism class, in canonical
/// order) all of whose induced subgraphs satisfy `keep`. `keep` must be
/// closed under taking induced subgraphs; the result is indexed by order.
pub fn enumerate_hereditary<F>(n: usize, keep: F) -> Result<Vec<Vec<Graph>>>
where
    F: Fn(&Graph) -> bool + Sync,
{
    if n > ENUM_CAP {
        return Err(Error::ScaleCap { what: "internal graph enumeration", size: n, cap: ENUM_CAP });
    }
    let mut levels: Vec<Vec<Graph>> = vec![vec![Graph::empty(0)]];
    for order in 1..=n {
        let parents = &levels[order - 1];
        let mut codes: Vec<Code> = parents
            .par_iter()
            .flat_map_iter(|p| {
                let base = masks(p);
                (0u16..1 << (order - 1)).map(move |nb| {
                    let mut adj = base.clone();
                    adj.push(nb);
                    for (u, a) in adj.iter_mut().enumerate().take(order - 1) {
                        *a |= (nb >> u & 1) << (order - 1);
                    }
                    canonical_code(&adj).0
                })
            })
            .collect();
        codes.par_sort_unstable();
        codes.dedup();
        let level: Vec<Graph> = codes
            .par_iter()
            .map(|&c| decode(order, c))
            .filter(|g| keep(g))
            .collect();
        levels.push(level);
    }
    Ok(levels)
}

/// Every graph on `n` vertices up to isomorphism, exactly once, optionally
/// only the connected ones.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    let mut levels = enumerate_hereditary(n, |_| true)?;
    let mut out = levels.pop().expect("level n");
    if connected_only {
        out.retain(|g| is_connected(g, g.vertices()));
    }
    Ok(out)
}

/// Reads one graph6 graph per non-empty line.
pub fn graph6_stream<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader.lines().filter_map(|line| match line {
        Ok(l) if l.trim().is_empty() => None,
        Ok(l) => Some(decode_graph6(l.trim())),
        Err(e) => Some(Err(e.into())),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, named};

    #[test]
    fn known_counts() {
        let all = [1, 2, 4, 11, 34, 156, 1044];
        let connected = [1, 1, 2, 6, 21, 112, 853];
        for n in 1..=7 {
            assert_eq!(enumerate_graphs(n, false).unwrap().len(), all[n - 1], "n = {n}");
            assert_eq!(enumerate_graphs(n, true).unwrap().len(), connected[n - 1], "n = {n}");
        }
        assert!(enumerate_graphs(10, false).is_err());
    }

    #[test]
    fn canonical_forms_agree() {
        let g = named::theta([2, 3, 4]);
        let perm: Vec<usize> = (0..g.n()).map(|i| (i * 3 + 1) % g.n()).collect();
        let h = g.permuted(&perm);
        let cg = canonical_form(&g).unwrap();
        assert_eq!(cg, canonical_form(&h).unwrap());
        assert!(are_isomorphic(&cg, &g).unwrap().is_some());
        assert_ne!(canonical_form(&named::cycle(6)).unwrap(), canonical_form(&named::prism()).unwrap());
    }

    #[test]
    fn hereditary_filter() {
        let triangle_free = enumerate_hereditary(5, |g| crate::cliques::triangles(g).is_empty()).unwrap();
        // Triangle-free graphs on 1..=5 vertices.
        let counts: Vec<usize> = triangle_free.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 7, 14]);
    }

    #[test]
    fn stream() {
        let text = "Bw\n\nCF\n";
        let graphs: Vec<Graph> = graph6_stream(text.as_bytes()).collect::<Result<_>>().unwrap();
        assert_eq!(graphs.len(), 2);
        assert_eq!(graphs[0].edge_count(), 3);
    }
}
