//! Exhaustive ground truth for tiny instances. Nothing here shares code with
//! the solver: subgraphs come from subset enumeration, optima from subset
//! enumeration or a hitting-set branch and bound.

use std::collections::BTreeSet;

use crate::detect::Variant;
use crate::error::{Error, Result};
use crate::graph::{CapacityVector, Graph, MultiGraph};

pub const SUBGRAPH_LIMIT: usize = 14;
pub const ENUMERATION_LIMIT: usize = 22;
pub const COVER_LIMIT: usize = 40;

/// A forbidden subgraph as sorted color classes (singletons for `K_{t+1}`),
/// classes ordered by their first vertex.
pub type Classes = Vec<Vec<usize>>;

fn adjacency_masks(g: &Graph) -> Vec<u64> {
    let mut adj = vec![0u64; g.n()];
    for e in g.edges() {
        adj[e.u] |= 1 << e.v;
        adj[e.v] |= 1 << e.u;
    }
    adj
}

fn complete_between(adj: &[u64], classes: &[Vec<usize>]) -> bool {
    for (i, a) in classes.iter().enumerate() {
        let mut other = 0u64;
        for b in &classes[i + 1..] {
            for &y in b {
                other |= 1 << y;
            }
        }
        if a.iter().any(|&x| adj[x] & other != other) {
            return false;
        }
    }
    true
}

/// Every partition of `set` (ascending) into classes of size `q`, each class
/// led by the smallest vertex left.
fn partitions(set: &[usize], q: usize) -> Vec<Classes> {
    if set.is_empty() {
        return vec![Vec::new()];
    }
    let first = set[0];
    let rest = &set[1..];
    let mut out = Vec::new();
    let mut pick = Vec::new();
    choose(rest, q - 1, 0, &mut pick, &mut |mates: &[usize]| {
        let mut class = vec![first];
        class.extend_from_slice(mates);
        let left: Vec<usize> = rest.iter().copied().filter(|x| !mates.contains(x)).collect();
        for mut tail in partitions(&left, q) {
            tail.insert(0, class.clone());
            out.push(tail);
        }
    });
    out
}

fn choose(items: &[usize], k: usize, from: usize, pick: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if pick.len() == k {
        f(pick);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < k - pick.len() {
            break;
        }
        pick.push(items[i]);
        choose(items, k, i + 1, pick, f);
        pick.pop();
    }
}

/// All forbidden subgraphs of `g` for `variant`, as a set of class lists.
pub fn brute_force_subgraphs(g: &Graph, variant: Variant) -> Result<BTreeSet<Classes>> {
    if g.n() > SUBGRAPH_LIMIT {
        return Err(Error::InstanceTooLarge(format!("{} vertices, limit {SUBGRAPH_LIMIT}", g.n())));
    }
    variant.validate(g.t())?;
    let t = g.t();
    let shapes: Vec<(usize, usize)> = match variant {
        Variant::Restricted => vec![(t + 1, 1), (2, t)],
        Variant::KpqFree { p, q } => vec![(p, q)],
    };
    let adj = adjacency_masks(g);
    let vertices: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) >= t).collect();
    let mut found = BTreeSet::new();
    for (p, q) in shapes {
        let mut pick = Vec::new();
        choose(&vertices, p * q, 0, &mut pick, &mut |set: &[usize]| {
            for classes in partitions(set, q) {
                if complete_between(&adj, &classes) {
                    found.insert(classes);
                }
            }
        });
    }
    Ok(found)
}

fn edge_sets(g: &Graph, subgraphs: &BTreeSet<Classes>) -> Vec<u64> {
    subgraphs
        .iter()
        .map(|classes| {
            let mut mask = 0u64;
            for (i, a) in classes.iter().enumerate() {
                for b in &classes[i + 1..] {
                    for &x in a {
                        for &y in b {
                            let e = g.edge_between(x, y).expect("classes are complete");
                            mask |= 1 << e;
                        }
                    }
                }
            }
            mask
        })
        .collect()
}

/// Best t-matching by trying all `2^m` edge subsets (doubled weight, kept
/// edge ids). Above the enumeration limit the cover search answers instead.
pub fn brute_force_optimum(g: &Graph, variant: Variant) -> Result<(i64, Vec<usize>)> {
    if g.m() > ENUMERATION_LIMIT {
        return brute_force_optimum_by_cover(g, variant);
    }
    let forbidden = edge_sets(g, &brute_force_subgraphs(g, variant)?);
    let m = g.m();
    let mut best = (-1i64, 0u64);
    'subsets: for set in 0u64..(1 << m) {
        let mut degree = vec![0usize; g.n()];
        let mut weight = 0;
        for e in 0..m {
            if set >> e & 1 == 1 {
                let edge = g.edge(e);
                degree[edge.u] += 1;
                degree[edge.v] += 1;
                if degree[edge.u] > g.t() || degree[edge.v] > g.t() {
                    continue 'subsets;
                }
                weight += edge.weight;
            }
        }
        if forbidden.iter().any(|&h| set & h == h) {
            continue;
        }
        if weight > best.0 {
            best = (weight, set);
        }
    }
    Ok((best.0, bits(best.1, m)))
}

fn bits(set: u64, m: usize) -> Vec<usize> {
    (0..m).filter(|&e| set >> e & 1 == 1).collect()
}

/// Same optimum computed as total weight minus [`brute_force_min_cover`].
pub fn brute_force_optimum_by_cover(g: &Graph, variant: Variant) -> Result<(i64, Vec<usize>)> {
    let (w, removed) = brute_force_min_cover(g, variant)?;
    let kept = (0..g.m()).filter(|e| !removed.contains(e)).collect();
    Ok((g.total_weight() - w, kept))
}

/// Minimum weight covering co-t-matching (doubled weight, edge ids): every
/// vertex keeps at most `t` edges and every forbidden subgraph loses one.
/// Branch and bound over the first unmet constraint.
pub fn brute_force_min_cover(g: &Graph, variant: Variant) -> Result<(i64, Vec<usize>)> {
    if g.m() > COVER_LIMIT {
        return Err(Error::InstanceTooLarge(format!("{} edges, limit {COVER_LIMIT}", g.m())));
    }
    let mut constraints: Vec<(u64, usize)> = Vec::new();
    for v in 0..g.n() {
        let excess = g.degree(v).saturating_sub(g.t());
        if excess > 0 {
            let mask = g.adjacency(v).iter().fold(0u64, |acc, &(_, e)| acc | 1 << e);
            constraints.push((mask, excess));
        }
    }
    for mask in edge_sets(g, &brute_force_subgraphs(g, variant)?) {
        constraints.push((mask, 1));
    }
    let weights: Vec<i64> = g.edges().iter().map(|e| e.weight).collect();
    let mut best = (i64::MAX, 0u64);
    cover_search(&constraints, &weights, 0, 0, 0, &mut best);
    Ok((best.0, bits(best.1, g.m())))
}

/// `banned` holds edges an earlier branch already decided to leave out.
fn cover_search(constraints: &[(u64, usize)], weights: &[i64], chosen: u64, banned: u64, weight: i64, best: &mut (i64, u64)) {
    if weight >= best.0 {
        return;
    }
    let unmet = constraints
        .iter()
        .filter(|&&(mask, need)| ((mask & chosen).count_ones() as usize) < need)
        .min_by_key(|&&(mask, _)| (mask & !chosen & !banned).count_ones());
    let Some(&(mask, _)) = unmet else {
        *best = (weight, chosen);
        return;
    };
    let mut free = mask & !chosen & !banned;
    let mut banned = banned;
    while free != 0 {
        let e = free.trailing_zeros() as usize;
        free &= free - 1;
        cover_search(constraints, weights, chosen | 1 << e, banned, weight + weights[e], best);
        banned |= 1 << e;
    }
}

/// Exact `(l, b)`-matching optima by enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LbOptimum {
    pub min_weight: i64,
    pub min_cardinality: usize,
}

pub fn brute_force_lb(g: &MultiGraph, caps: &CapacityVector, costs: &[i64]) -> Result<LbOptimum> {
    let m = g.m();
    if m > ENUMERATION_LIMIT {
        return Err(Error::InstanceTooLarge(format!("{m} edges, limit {ENUMERATION_LIMIT}")));
    }
    if costs.len() != m || caps.len() != g.n() {
        return Err(Error::Parameters("costs or capacities do not fit the graph".into()));
    }
    let mut best: Option<LbOptimum> = None;
    for set in 0u64..(1 << m) {
        let mut degree = vec![0usize; g.n()];
        let mut weight = 0;
        for e in 0..m {
            if set >> e & 1 == 1 {
                let edge = g.edge(e);
                degree[edge.u] += 1;
                degree[edge.v] += 1;
                weight += costs[e];
            }
        }
        if (0..g.n()).any(|v| degree[v] < caps.lower[v] || degree[v] > caps.upper[v]) {
            continue;
        }
        let size = set.count_ones() as usize;
        best = Some(match best {
            None => LbOptimum {
                min_weight: weight,
                min_cardinality: size,
            },
            Some(b) => LbOptimum {
                min_weight: b.min_weight.min(weight),
                min_cardinality: b.min_cardinality.min(size),
            },
        });
    }
    best.ok_or(Error::Infeasible)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeTag;

    fn complete(n: usize, t: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::unweighted(n, t, &e).unwrap()
    }

    fn k33() -> Graph {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        Graph::unweighted(6, 3, &e).unwrap()
    }

    #[test]
    fn subgraph_examples() {
        assert_eq!(brute_force_subgraphs(&complete(5, 3), Variant::Restricted).unwrap().len(), 5);
        let c6: Vec<_> = (0..6).map(|i| (i, (i + 1) % 6)).collect();
        let c6 = Graph::unweighted(6, 3, &c6).unwrap();
        assert!(brute_force_subgraphs(&c6, Variant::Restricted).unwrap().is_empty());
        let k6 = complete(6, 4);
        assert_eq!(brute_force_subgraphs(&k6, Variant::KpqFree { p: 3, q: 2 }).unwrap().len(), 15);
        let found = brute_force_subgraphs(&k33(), Variant::Restricted).unwrap();
        assert_eq!(found.into_iter().collect::<Vec<_>>(), vec![vec![vec![0, 1, 2], vec![3, 4, 5]]]);
    }

    #[test]
    fn optimum_examples() {
        assert_eq!(brute_force_optimum(&complete(4, 3), Variant::Restricted).unwrap().0, 10);
        assert_eq!(brute_force_optimum(&k33(), Variant::Restricted).unwrap().0, 16);
        let k6 = complete(6, 4);
        assert_eq!(brute_force_optimum(&k6, Variant::KpqFree { p: 3, q: 2 }).unwrap().0, 22);
        assert_eq!(brute_force_min_cover(&k6, Variant::KpqFree { p: 3, q: 2 }).unwrap().1.len(), 4);
        let k5 = complete(5, 3);
        assert_eq!(brute_force_optimum(&k5, Variant::Restricted).unwrap().0, 14);
        assert_eq!(brute_force_min_cover(&k5, Variant::Restricted).unwrap().1.len(), 3);
    }

    #[test]
    fn both_searches_agree() {
        let g = Graph::new(
            5,
            3,
            &[(0, 1, 3), (0, 2, 1), (0, 3, 4), (0, 4, 1), (1, 2, 5), (1, 3, 9), (2, 3, 2), (3, 4, 6)],
        )
        .unwrap();
        for variant in [Variant::Restricted, Variant::KpqFree { p: 4, q: 1 }] {
            assert_eq!(
                brute_force_optimum(&g, variant).unwrap().0,
                brute_force_optimum_by_cover(&g, variant).unwrap().0
            );
        }
    }

    fn multigraph(n: usize, edges: &[(usize, usize)]) -> MultiGraph {
        let mut g = MultiGraph::new(n);
        for (k, &(u, v)) in edges.iter().enumerate() {
            g.add_edge(u, v, 0, EdgeTag::Original(k)).unwrap();
        }
        g
    }

    #[test]
    fn lb_examples() {
        let star = multigraph(4, &[(0, 1), (0, 2), (0, 3)]);
        let caps = CapacityVector::new(vec![1, 0, 0, 0], vec![1; 4]).unwrap();
        assert_eq!(brute_force_lb(&star, &caps, &[3, 1, 2]).unwrap().min_weight, 1);
        let caps = CapacityVector::new(vec![4, 0, 0, 0], vec![4, 1, 1, 1]).unwrap();
        assert_eq!(brute_force_lb(&star, &caps, &[3, 1, 2]), Err(Error::Infeasible));
        let c4 = multigraph(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]);
        let caps = CapacityVector::new(vec![1; 4], vec![1; 4]).unwrap();
        let opt = brute_force_lb(&c4, &caps, &[1, 2, 1, 2]).unwrap();
        assert_eq!(opt, LbOptimum { min_weight: 2, min_cardinality: 2 });
    }
}
