//! Inputs shared by the benchmarks.

use clockfree::graph::named;
use clockfree::harness::random::{grow, instance_rng, random_weighting};
use clockfree::harness::check;
use clockfree::obstructions::{pohoata_davies, wall};
use clockfree::weights::Weighting;
use clockfree::Graph;

/// Named graphs of a few sizes, labelled for benchmark ids.
pub fn fixtures() -> Vec<(&'static str, Graph)> {
    vec![
        ("prism", named::prism()),
        ("theta-3-4-4", named::theta([3, 4, 4])),
        ("wall-3", wall(3).expect("valid")),
        ("grid-4x4", named::grid(4, 4)),
        ("pd-2", pohoata_davies(2).expect("valid")),
        ("pd-3", pohoata_davies(3).expect("valid")),
    ]
}

/// Seeded (clock, diamond)-free graphs on `n` vertices with weightings.
pub fn clock_free_instances(n: usize, count: u64) -> Vec<(Graph, Weighting)> {
    (0..count)
        .map(|i| {
            let mut rng = instance_rng(7, i);
            let g = grow(n, 0.3, &mut rng, |g| !check::has_clock(g) && !check::has_diamond(g));
            let w = random_weighting(n, &mut rng);
            (g, w)
        })
        .collect()
}
