//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexSet};
use crate::weights::Weighting;

pub type InstanceRng = ChaCha8Rng;

/// Generator for instance `index` of a run seeded with `seed`, so instances
/// can be built in any order.
pub fn instance_rng(seed: u64, index: u64) -> InstanceRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

pub fn erdos_renyi(n: usize, p: f64, rng: &mut InstanceRng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("in range")
}

/// Adds vertices one at a time, each joined to earlier vertices with
/// probability `p`, redrawing while `keep` fails. `keep` should hold for a
/// pendant vertex added to any graph it accepts; after 64 failed draws the
/// new vertex is attached as a pendant.
pub fn grow<F>(n: usize, p: f64, rng: &mut InstanceRng, keep: F) -> Graph
where
    F: Fn(&Graph) -> bool,
{
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        let mut chosen = None;
        for _ in 0..64 {
            let mut nb: Vec<usize> = (0..v).filter(|_| rng.gen_bool(p)).collect();
            if nb.is_empty() {
                nb.push(rng.gen_range(0..v));
            }
            let mut trial = edges.clone();
            trial.extend(nb.iter().map(|&u| (u, v)));
            let g = Graph::from_edges(v + 1, &trial).expect("in range");
            if keep(&g) {
                chosen = Some(trial);
                break;
            }
        }
        edges = chosen.unwrap_or_else(|| {
            let mut e = edges.clone();
            e.push((rng.gen_range(0..v), v));
            e
        });
    }
    Graph::from_edges(n, &edges).expect("in range")
}

/// Integer weights in `0..=9`, or one planted vertex carrying most of the
/// weight, or uniform on a random subset.
pub fn random_weighting(n: usize, rng: &mut InstanceRng) -> Weighting {
    assert!(n > 0);
    let mut values: Vec<u64> = match rng.gen_range(0..3) {
        0 => (0..n).map(|_| rng.gen_range(0..=9)).collect(),
        1 => {
            let mut v: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=3)).collect();
            let heavy = rng.gen_range(0..n);
            v[heavy] = v.iter().sum::<u64>();
            v
        }
        _ => {
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(rng);
            let k = rng.gen_range(1..=n);
            let support: VertexSet = order[..k].iter().collect();
            (0..n).map(|v| support.contains(v) as u64).collect()
        }
    };
    if values.iter().all(|&x| x == 0) {
        values[rng.gen_range(0..n)] = 1;
    }
    Weighting::from_integers(&values).expect("positive total")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::harness::check;

    #[test]
    fn reproducible() {
        let a = erdos_renyi(10, 0.3, &mut instance_rng(7, 3));
        let b = erdos_renyi(10, 0.3, &mut instance_rng(7, 3));
        assert_eq!(a, b);
        let c = erdos_renyi(10, 0.3, &mut instance_rng(7, 4));
        assert_ne!(a, c);
    }

    #[test]
    fn grown_graphs_keep_property() {
        for i in 0..20 {
            let g = grow(10, 0.4, &mut instance_rng(1, i), |g| !check::has_clock(g));
            assert!(!check::has_clock(&g));
            assert!(crate::graph::is_connected(&g, g.vertices()));
        }
    }
}
