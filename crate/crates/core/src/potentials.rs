//! Vertex potentials witnessing that weights are vertex-induced on a
//! subgraph: `r(u) + r(v) = w(u, v)` on each of its edges. All values are
//! doubled, like the graph weights.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::detect::{ForbiddenSubgraph, Kind};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PotentialFunction {
    /// Doubled potential of each vertex of the subgraph.
    pub assignments: BTreeMap<usize, i64>,
}

impl PotentialFunction {
    pub fn get(&self, v: usize) -> Option<i64> {
        self.assignments.get(&v).copied()
    }

    /// Potential 1/2 (doubled: 1) on every listed vertex.
    pub fn uniform_half(vertices: &[usize]) -> Self {
        PotentialFunction {
            assignments: vertices.iter().map(|&v| (v, 1)).collect(),
        }
    }
}

/// The unique potentials of a triangle, doubled in and out:
/// `r_a = (w_ab + w_ac - w_bc) / 2` and symmetric.
pub fn triangle_potential(w_ab: i64, w_ac: i64, w_bc: i64) -> (i64, i64, i64) {
    let sum = w_ab + w_ac + w_bc;
    // Doubled weights are even, so every difference below is even too.
    ((sum - 2 * w_bc) / 2, (sum - 2 * w_ac) / 2, (sum - 2 * w_ab) / 2)
}

/// Potentials of `h`, or [`Error::NotVertexInduced`] naming an edge that
/// breaks them.
pub fn extract_potential(g: &Graph, h: &ForbiddenSubgraph) -> Result<PotentialFunction> {
    let order: Vec<usize> = if h.is_dense() {
        h.members[0].iter().flatten().copied().collect()
    } else {
        h.classes().into_iter().flatten().collect()
    };
    extract_potential_in_order(g, h, &order)
}

/// As [`extract_potential`], anchoring on the first triangle of `h` met in
/// `order` (first vertex and its first neighbour for `K_{t,t}`) and
/// propagating along `order`.
pub fn extract_potential_in_order(g: &Graph, h: &ForbiddenSubgraph, order: &[usize]) -> Result<PotentialFunction> {
    let classes = if h.is_dense() {
        h.members[0].clone()
    } else {
        h.classes()
    };
    let class_of = |v: usize| classes.iter().position(|c| c.contains(&v));
    let linked = |a: usize, b: usize| class_of(a) != class_of(b);
    let w = |a: usize, b: usize| -> Result<i64> {
        g.weight(a, b)
            .ok_or_else(|| Error::Internal(format!("({a}, {b}) is not an edge of subgraph {}", h.id)))
    };
    let mut r: BTreeMap<usize, i64> = BTreeMap::new();
    match h.kind {
        Kind::Ktt => {
            let a = order[0];
            let b = *order
                .iter()
                .find(|&&b| linked(a, b))
                .ok_or_else(|| Error::Internal("biclique with one class".into()))?;
            let wab = w(a, b)?;
            r.insert(a, wab / 2);
            r.insert(b, wab - wab / 2);
        }
        _ => {
            let (a, b, c) = first_triangle(order, &linked)
                .ok_or_else(|| Error::Internal(format!("subgraph {} has no triangle", h.id)))?;
            let (ra, rb, rc) = triangle_potential(w(a, b)?, w(a, c)?, w(b, c)?);
            r.insert(a, ra);
            r.insert(b, rb);
            r.insert(c, rc);
        }
    }
    // Each pass fixes every vertex linked to an already fixed one.
    while r.len() < order.len() {
        let before = r.len();
        for &v in order {
            if r.contains_key(&v) {
                continue;
            }
            if let Some(&u) = order.iter().find(|&&u| r.contains_key(&u) && linked(u, v)) {
                let val = w(u, v)? - r[&u];
                r.insert(v, val);
            }
        }
        if r.len() == before {
            return Err(Error::Internal(format!("subgraph {} is disconnected", h.id)));
        }
    }
    let pf = PotentialFunction { assignments: r };
    match first_violation(g, h, &pf) {
        None => Ok(pf),
        Some((u, v)) => Err(Error::NotVertexInduced { subgraph: h.id, u, v }),
    }
}

fn first_triangle(order: &[usize], linked: &dyn Fn(usize, usize) -> bool) -> Option<(usize, usize, usize)> {
    for (i, &a) in order.iter().enumerate() {
        for (j, &b) in order.iter().enumerate().skip(i + 1) {
            if !linked(a, b) {
                continue;
            }
            for &c in &order[j + 1..] {
                if linked(a, c) && linked(b, c) {
                    return Some((a, b, c));
                }
            }
        }
    }
    None
}

fn first_violation(g: &Graph, h: &ForbiddenSubgraph, pf: &PotentialFunction) -> Option<(usize, usize)> {
    for e in h.edge_ids(g) {
        let edge = g.edge(e);
        match (pf.get(edge.u), pf.get(edge.v)) {
            (Some(a), Some(b)) if a + b == edge.weight => {}
            _ => return Some((edge.u, edge.v)),
        }
    }
    None
}

/// Whether `pf` satisfies the edge identity on every edge of `h`.
pub fn verify_vertex_induced(g: &Graph, h: &ForbiddenSubgraph, pf: &PotentialFunction) -> bool {
    first_violation(g, h, pf).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{Variant, analyze};

    #[test]
    fn triangle_examples() {
        assert_eq!(triangle_potential(6, 8, 10), (2, 4, 6));
        assert_eq!(triangle_potential(2, 2, 2), (1, 1, 1));
        assert_eq!(triangle_potential(0, 0, 0), (0, 0, 0));
    }

    fn k4(weights: [i64; 6]) -> Graph {
        let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
        let e: Vec<_> = pairs.iter().zip(weights).map(|(&(u, v), w)| (u, v, w)).collect();
        Graph::new(4, 3, &e).unwrap()
    }

    #[test]
    fn clique_extraction() {
        let g = k4([1; 6]);
        let d = analyze(&g, Variant::Restricted).unwrap();
        let pf = extract_potential(&g, &d.subgraphs[0]).unwrap();
        assert!(pf.assignments.values().all(|&r| r == 1));
        let mut bad = pf.clone();
        *bad.assignments.get_mut(&0).unwrap() += 2;
        assert!(!verify_vertex_induced(&g, &d.subgraphs[0], &bad));
        let g = k4([1, 1, 1, 1, 1, 2]);
        let d = analyze(&g, Variant::Restricted).unwrap();
        assert!(matches!(
            extract_potential(&g, &d.subgraphs[0]),
            Err(Error::NotVertexInduced { .. })
        ));
    }

    #[test]
    fn biclique_recovers_planted_values_up_to_shift() {
        let a = [1, 2, 3];
        let b = [4, 5, 6];
        let mut e = Vec::new();
        for i in 0..3 {
            for j in 0..3 {
                e.push((i, 3 + j, a[i] + b[j]));
            }
        }
        let g = Graph::new(6, 3, &e).unwrap();
        let d = analyze(&g, Variant::Restricted).unwrap();
        let h = &d.subgraphs[0];
        let pf = extract_potential(&g, h).unwrap();
        let shift = pf.get(0).unwrap() - 2 * a[0];
        for i in 0..3 {
            assert_eq!(pf.get(i).unwrap(), 2 * a[i] + shift);
            assert_eq!(pf.get(3 + i).unwrap(), 2 * b[i] - shift);
        }
    }
}
