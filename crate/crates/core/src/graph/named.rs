//! Small named graphs used as fixtures throughout the crate.

use super::Graph;

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for i in 1..n {
        g.add_edge(i - 1, i);
    }
    g
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut g = path(n);
    g.add_edge(n - 1, 0);
    g
}

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    g
}

/// `K_{a,b}` with sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b);
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v);
        }
    }
    g
}

/// `K_{1,k}` with center 0.
pub fn star(k: usize) -> Graph {
    complete_bipartite(1, k)
}

/// Triangular prism: triangles `{0,1,2}` and `{3,4,5}`, matching `i - (i+3)`.
pub fn prism() -> Graph {
    Graph::from_edges(6, &[(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5), (0, 3), (1, 4), (2, 5)])
        .unwrap()
}

/// `K_4` minus the edge `0-3`; 1 and 2 are the degree-3 vertices.
pub fn diamond() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap()
}

/// Triangle `{0,1,2}` with pendant 3 on vertex 2.
pub fn paw() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (2, 3)]).unwrap()
}

/// Theta with ends 0 and 1 and internally disjoint paths whose lengths are
/// given; interior vertices are numbered path by path from 2 upwards.
pub fn theta(lengths: [usize; 3]) -> Graph {
    assert!(lengths.iter().all(|&l| l >= 2));
    let n = 2 + lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut g = Graph::empty(n);
    let mut next = 2;
    for &len in &lengths {
        let mut prev = 0;
        for _ in 0..len - 1 {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1);
    }
    g
}

/// Pyramid with apex 0, base triangle `{1,2,3}` and paths of the given
/// lengths from the apex to base vertex `1 + i`.
pub fn pyramid(lengths: [usize; 3]) -> Graph {
    assert!(lengths.iter().all(|&l| l >= 1));
    let n = 4 + lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut g = Graph::empty(n);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    let mut next = 4;
    for (i, &len) in lengths.iter().enumerate() {
        let mut prev = 0;
        for _ in 0..len - 1 {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, 1 + i);
    }
    g
}

/// Prism with triangles `{0,1,2}`, `{3,4,5}` and paths of the given lengths
/// from `i` to `i + 3`.
pub fn long_prism(lengths: [usize; 3]) -> Graph {
    assert!(lengths.iter().all(|&l| l >= 1));
    let n = 6 + lengths.iter().map(|l| l - 1).sum::<usize>();
    let mut g = Graph::empty(n);
    for (a, b) in [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)] {
        g.add_edge(a, b);
    }
    let mut next = 6;
    for (i, &len) in lengths.iter().enumerate() {
        let mut prev = i;
        for _ in 0..len - 1 {
            g.add_edge(prev, next);
            prev = next;
            next += 1;
        }
        g.add_edge(prev, i + 3);
    }
    g
}

/// `n x m` grid; vertex `(r, c)` is `r * m + c`.
pub fn grid(rows: usize, cols: usize) -> Graph {
    let mut g = Graph::empty(rows * cols);
    for r in 0..rows {
        for c in 0..cols {
            let v = r * cols + c;
            if c + 1 < cols {
                g.add_edge(v, v + 1);
            }
            if r + 1 < rows {
                g.add_edge(v, v + cols);
            }
        }
    }
    g
}
