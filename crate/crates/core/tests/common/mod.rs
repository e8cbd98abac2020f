//! Seeded tiny instances shared by the integration tests.

#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tmatch::detect::Variant;
use tmatch::generators::{PlantKind, plant_forbidden, random_bounded, sprinkle, vertex_induced_weights};
use tmatch::graph::Graph;
use tmatch::oracle::brute_force_subgraphs;

#[derive(Clone, Copy, Debug)]
pub struct Config {
    pub name: &'static str,
    pub t: usize,
    pub variant: Variant,
    pub plants: &'static [PlantKind],
}

pub const CONFIGS: [Config; 5] = [
    Config {
        name: "t=3 restricted",
        t: 3,
        variant: Variant::Restricted,
        plants: &[
            PlantKind::Clique,
            PlantKind::Biclique,
            PlantKind::CliquePair,
            PlantKind::BicliquePair,
            PlantKind::BicliqueCrossPair,
            PlantKind::CliqueBiclique,
        ],
    },
    Config {
        name: "t=4 p=5 q=1",
        t: 4,
        variant: Variant::KpqFree { p: 5, q: 1 },
        plants: &[PlantKind::Clique, PlantKind::CliquePair, PlantKind::PartitePair { p: 5, q: 1 }],
    },
    Config {
        name: "t=3 p=2 q=3",
        t: 3,
        variant: Variant::KpqFree { p: 2, q: 3 },
        plants: &[
            PlantKind::Partite { p: 2, q: 3 },
            PlantKind::PartitePair { p: 2, q: 3 },
            PlantKind::BicliqueCrossPair,
        ],
    },
    Config {
        name: "t=4 p=3 q=2",
        t: 4,
        variant: Variant::KpqFree { p: 3, q: 2 },
        plants: &[
            PlantKind::Partite { p: 3, q: 2 },
            PlantKind::PartitePair { p: 3, q: 2 },
            PlantKind::Dense { p: 3 },
            PlantKind::DenseMinusEdge { p: 3 },
        ],
    },
    Config {
        name: "t=6 p=3 q=3",
        t: 6,
        variant: Variant::KpqFree { p: 3, q: 3 },
        plants: &[PlantKind::Partite { p: 3, q: 3 }],
    },
];

/// A random graph on at most `max_n` vertices, either `G(n, p)` or a planted
/// structure padded with spare vertices and extra random edges.
pub fn tiny_graph(cfg: &Config, max_n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    if rng.gen_bool(0.35) {
        let n = rng.gen_range(4..=max_n);
        let prob = rng.gen_range(0.3..1.0);
        return random_bounded(n, cfg.t, prob, rng.r#gen()).unwrap();
    }
    let kind = cfg.plants[rng.gen_range(0..cfg.plants.len())];
    let empty = Graph::unweighted(0, cfg.t, &[]).unwrap();
    let mut g = plant_forbidden(&empty, kind, 1, rng.r#gen()).unwrap();
    if g.n() * 2 <= max_n && rng.gen_bool(0.5) {
        g = plant_forbidden(&g, kind, 1, rng.r#gen()).unwrap();
    }
    let pad = rng.gen_range(0..=max_n.saturating_sub(g.n()));
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
    let g = Graph::unweighted(g.n() + pad, cfg.t, &edges).unwrap();
    let extra = rng.gen_range(0..=6);
    sprinkle(&g, extra, rng.r#gen()).unwrap()
}

/// Vertex-induced weights on every forbidden subgraph found by the oracle.
/// Odd seeds first try a range with negative potentials.
pub fn weigh(g: &Graph, variant: Variant, seed: u64) -> Graph {
    let groups: Vec<Vec<usize>> = brute_force_subgraphs(g, variant)
        .unwrap()
        .into_iter()
        .map(|c| c.concat())
        .collect();
    let planted = if seed % 2 == 1 {
        vertex_induced_weights(g, &groups, -2..=5, 9, seed).ok()
    } else {
        None
    };
    let planted = planted.unwrap_or_else(|| vertex_induced_weights(g, &groups, 0..=4, 9, seed).unwrap());
    g.with_weights(&planted.weights).unwrap()
}
