//! Seeded instance generators. All randomness comes from ChaCha8, so a seed
//! gives the same instance on every platform.

use std::ops::RangeInclusive;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `G(n, p)` over pairs in lexicographic order, skipping any pair whose
/// endpoint already has degree `t + 1`. Unit weights.
pub fn random_bounded(n: usize, t: usize, edge_prob: f64, seed: u64) -> Result<Graph> {
    let mut rng = rng(seed);
    let mut degree = vec![0usize; n];
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(edge_prob.clamp(0.0, 1.0)) && degree[u] <= t && degree[v] <= t {
                degree[u] += 1;
                degree[v] += 1;
                edges.push((u, v));
            }
        }
    }
    Graph::unweighted(n, t, &edges)
}

/// What to plant. Every structure goes on fresh vertices appended to the
/// graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PlantKind {
    /// `K_{t+1}`.
    Clique,
    /// `K_{t,t}`.
    Biclique,
    /// `K^p_q` with `(p-1)q = t`.
    Partite { p: usize, q: usize },
    /// Two `K_{t+1}` sharing a `K_t` (`K_{t+2}` minus an edge).
    CliquePair,
    /// `K_{t,t+1}`: several `K_{t,t}` sharing a `K_{t,t-1}`.
    BicliquePair,
    /// Two `K_{t,t}` sharing exactly a `K_{t-1,t-1}`.
    BicliqueCrossPair,
    /// Two `K^p_q` differing in one vertex of one class.
    PartitePair { p: usize, q: usize },
    /// `K_{2p}`, which holds many `K^p_2` on one vertex set.
    Dense { p: usize },
    /// `K_{2p}` minus one edge: the two ends fall outside the core.
    DenseMinusEdge { p: usize },
    /// `K_4` and `K_{3,3}` sharing a `K_{2,2}` (`t = 3` only).
    CliqueBiclique,
}

impl PlantKind {
    /// Edges of one copy on vertices `0..k`, with `k`.
    fn template(self, t: usize) -> Result<(usize, Vec<(usize, usize)>)> {
        let mut e = Vec::new();
        let complete = |k: usize, e: &mut Vec<(usize, usize)>| {
            for u in 0..k {
                for v in u + 1..k {
                    e.push((u, v));
                }
            }
        };
        let partite = |p: usize, q: usize, e: &mut Vec<(usize, usize)>| {
            for u in 0..p * q {
                for v in u + 1..p * q {
                    if u / q != v / q {
                        e.push((u, v));
                    }
                }
            }
        };
        let check = |p: usize, q: usize| {
            if p < 2 || q < 1 || (p - 1) * q != t {
                Err(Error::Parameters(format!("(p-1)*q must equal t: p={p}, q={q}, t={t}")))
            } else {
                Ok(())
            }
        };
        let k = match self {
            PlantKind::Clique => {
                complete(t + 1, &mut e);
                t + 1
            }
            PlantKind::Biclique => {
                partite(2, t, &mut e);
                2 * t
            }
            PlantKind::Partite { p, q } => {
                check(p, q)?;
                partite(p, q, &mut e);
                p * q
            }
            PlantKind::CliquePair => {
                complete(t + 2, &mut e);
                e.retain(|&(u, v)| (u, v) != (0, t + 1));
                t + 2
            }
            PlantKind::BicliquePair => {
                for a in 0..t {
                    for b in t..2 * t + 1 {
                        e.push((a, b));
                    }
                }
                2 * t + 1
            }
            PlantKind::BicliqueCrossPair => {
                // Shared sides 0..t-1 and t-1..2t-2; a, b and a', b' complete them.
                let a_side: Vec<usize> = (0..t - 1).collect();
                let b_side: Vec<usize> = (t - 1..2 * t - 2).collect();
                let (a, b, a2, b2) = (2 * t - 2, 2 * t - 1, 2 * t, 2 * t + 1);
                for &x in &a_side {
                    for &y in &b_side {
                        e.push((x, y));
                    }
                }
                for (p, q) in [(a, b), (a2, b2)] {
                    for &y in &b_side {
                        e.push((y, p));
                    }
                    for &x in &a_side {
                        e.push((x, q));
                    }
                    e.push((p, q));
                }
                2 * t + 2
            }
            PlantKind::PartitePair { p, q } => {
                check(p, q)?;
                partite(p, q, &mut e);
                let extra = p * q;
                for v in q..p * q {
                    e.push((v, extra));
                }
                p * q + 1
            }
            PlantKind::Dense { p } => {
                check(p, 2)?;
                complete(2 * p, &mut e);
                2 * p
            }
            PlantKind::DenseMinusEdge { p } => {
                check(p, 2)?;
                complete(2 * p, &mut e);
                e.retain(|&(u, v)| (u, v) != (0, 1));
                2 * p
            }
            PlantKind::CliqueBiclique => {
                if t != 3 {
                    return Err(Error::Parameters("a K_4 and K_{3,3} overlap needs t = 3".into()));
                }
                partite(2, 3, &mut e);
                e.push((0, 1));
                e.push((3, 4));
                6
            }
        };
        for x in e.iter_mut() {
            *x = (x.0.min(x.1), x.0.max(x.1));
        }
        Ok((k, e))
    }
}

impl FromStr for PlantKind {
    type Err = Error;

    /// `clique`, `biclique`, `partite:P:Q`, `clique-pair`, `biclique-pair`,
    /// `biclique-cross-pair`, `partite-pair:P:Q`, `dense:P`, `dense-minus-edge:P`,
    /// `clique-biclique`.
    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |i: usize| -> Result<usize> {
            parts
                .get(i)
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| Error::Parameters(format!("bad plant kind {s:?}")))
        };
        Ok(match parts[0] {
            "clique" => PlantKind::Clique,
            "biclique" => PlantKind::Biclique,
            "partite" => PlantKind::Partite { p: num(1)?, q: num(2)? },
            "clique-pair" => PlantKind::CliquePair,
            "biclique-pair" => PlantKind::BicliquePair,
            "biclique-cross-pair" => PlantKind::BicliqueCrossPair,
            "partite-pair" => PlantKind::PartitePair { p: num(1)?, q: num(2)? },
            "dense" => PlantKind::Dense { p: num(1)? },
            "dense-minus-edge" => PlantKind::DenseMinusEdge { p: num(1)? },
            "clique-biclique" => PlantKind::CliqueBiclique,
            _ => return Err(Error::Parameters(format!("bad plant kind {s:?}"))),
        })
    }
}

/// `g` plus `count` copies of `kind` on new vertices, each copy relabelled
/// by a seeded shuffle. Existing weights are kept, new edges get weight 1.
pub fn plant_forbidden(g: &Graph, kind: PlantKind, count: usize, seed: u64) -> Result<Graph> {
    let (k, template) = kind.template(g.t())?;
    let mut rng = rng(seed);
    let mut edges: Vec<(usize, usize, i64)> = g.edges().iter().map(|e| (e.u, e.v, e.weight / 2)).collect();
    let mut n = g.n();
    for _ in 0..count {
        let mut label: Vec<usize> = (n..n + k).collect();
        for i in (1..k).rev() {
            label.swap(i, rng.gen_range(0..=i));
        }
        edges.extend(template.iter().map(|&(u, v)| (label[u], label[v], 1)));
        n += k;
    }
    Graph::new(n, g.t(), &edges)
}

/// Adds up to `count` random edges between vertices with spare degree,
/// weight 1, so planted structures touch the rest of the graph.
pub fn sprinkle(g: &Graph, count: usize, seed: u64) -> Result<Graph> {
    let mut rng = rng(seed);
    let mut edges: Vec<(usize, usize, i64)> = g.edges().iter().map(|e| (e.u, e.v, e.weight / 2)).collect();
    let mut degree: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut present: std::collections::HashSet<(usize, usize)> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    if g.n() < 2 {
        return Ok(g.clone());
    }
    for _ in 0..count * 4 {
        if edges.len() - g.m() >= count {
            break;
        }
        let u = rng.gen_range(0..g.n());
        let v = rng.gen_range(0..g.n());
        let key = (u.min(v), u.max(v));
        if u == v || degree[u] > g.t() || degree[v] > g.t() || present.contains(&key) {
            continue;
        }
        present.insert(key);
        degree[u] += 1;
        degree[v] += 1;
        edges.push((key.0, key.1, 1));
    }
    Graph::new(g.n(), g.t(), &edges)
}

/// Input weights plus the planted doubled potentials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlantedWeights {
    pub weights: Vec<i64>,
    pub potentials: Vec<Option<i64>>,
}

/// Weights that are vertex-induced on every listed vertex group: each vertex
/// of a group gets a potential from `potential_range` (all shifted by 1/2 on
/// a seeded coin), every edge inside the union of groups gets the sum, and
/// other edges draw from `0..=noise_max`. Draws giving a negative weight are
/// repeated a bounded number of times.
pub fn vertex_induced_weights(
    g: &Graph,
    groups: &[Vec<usize>],
    potential_range: RangeInclusive<i64>,
    noise_max: i64,
    seed: u64,
) -> Result<PlantedWeights> {
    let mut rng = rng(seed);
    let mut member = vec![false; g.n()];
    for &v in groups.iter().flatten() {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        member[v] = true;
    }
    let half = rng.gen_bool(0.5) as i64;
    for _ in 0..64 {
        let potentials: Vec<Option<i64>> = member
            .iter()
            .map(|&m| m.then(|| 2 * rng.gen_range(potential_range.clone()) + half))
            .collect();
        let weights: Vec<i64> = g
            .edges()
            .iter()
            .map(|e| match (potentials[e.u], potentials[e.v]) {
                (Some(a), Some(b)) => (a + b) / 2,
                _ => rng.gen_range(0..=noise_max.max(0)),
            })
            .collect();
        if weights.iter().all(|&w| w >= 0) {
            return Ok(PlantedWeights { weights, potentials });
        }
    }
    Err(Error::Parameters("no non-negative weights for this potential range, try another seed".into()))
}
