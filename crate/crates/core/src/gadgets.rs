//! The auxiliary instance: the original graph with a gadget attached to every
//! problematic subgraph and to every dense subgraph whose center has a
//! non-negative potential, plus the capacity intervals.

use std::collections::HashMap;
use std::fmt::Write as _;

use serde::Serialize;

use crate::detect::{Detection, ForbiddenSubgraph, Kind};
use crate::error::{Error, Result};
use crate::graph::{CapacityVector, EdgeTag, Graph, MultiGraph};
use crate::potentials::{PotentialFunction, extract_potential};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum GadgetKind {
    Clique,
    Biclique,
    Partite { p: usize },
    /// Core of size `2k`.
    Dense { p: usize, k: usize },
}

#[derive(Clone, Debug, Serialize)]
pub struct Gadget {
    pub id: usize,
    /// Id of the subgraph in the detection.
    pub subgraph: usize,
    pub kind: GadgetKind,
    /// Subdivision vertices joined to original vertices (`u_H`, or `u_H^i`).
    pub subdivision: Vec<usize>,
    /// Original vertices reached from each subdivision vertex, index-aligned.
    pub attached: Vec<Vec<usize>>,
    /// `u_H^c` of a dense gadget.
    pub center_vertex: Option<usize>,
    /// `z_H`.
    pub global: Option<usize>,
    /// `c_H` of a dense gadget.
    pub center: Option<usize>,
}

impl Gadget {
    /// `|M'_H| - w'(M'_H)` for any feasible matching, in real units.
    pub fn count_contribution(&self) -> i64 {
        match self.kind {
            GadgetKind::Clique | GadgetKind::Biclique => 1,
            GadgetKind::Partite { p } => p as i64 - 1,
            GadgetKind::Dense { p, k } => (p - k) as i64 + 1,
        }
    }
}

#[derive(Clone, Debug)]
pub struct AuxiliaryInstance {
    pub graph: MultiGraph,
    pub capacities: CapacityVector,
    pub gadgets: Vec<Gadget>,
    pub original_n: usize,
    pub original_m: usize,
    /// Dense subgraphs left without a gadget (negative center potential).
    pub bare_dense: Vec<usize>,
    /// Potentials of gadget owners and dense records, by subgraph id.
    pub potentials: HashMap<usize, PotentialFunction>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct GadgetStats {
    pub added_vertices: usize,
    pub added_edges: usize,
    pub sum_b: usize,
}

/// Potentials for every subgraph that may receive a gadget. In weighted mode
/// every forbidden subgraph is checked, so non-vertex-induced weights fail
/// here; unweighted mode uses 1/2 everywhere.
pub fn compute_potentials(
    g: &Graph,
    detection: &Detection,
    weighted: bool,
) -> Result<HashMap<usize, PotentialFunction>> {
    let mut out = HashMap::new();
    for h in &detection.subgraphs {
        let needed = h.problematic || h.is_dense();
        if weighted {
            let pf = extract_potential(g, h)?;
            if needed {
                out.insert(h.id, pf);
            }
        } else if needed {
            out.insert(h.id, PotentialFunction::uniform_half(&h.vertices));
        }
    }
    Ok(out)
}

/// Capacity of an original vertex: `[1, t+1]` at degree `t + 1`, otherwise
/// `[0, deg]`.
pub fn original_capacity(g: &Graph, v: usize) -> (usize, usize) {
    let d = g.degree(v);
    if d == g.t() + 1 { (1, d) } else { (0, d) }
}

pub fn build_auxiliary(
    g: &Graph,
    detection: &Detection,
    potentials: HashMap<usize, PotentialFunction>,
) -> Result<AuxiliaryInstance> {
    let mut graph = MultiGraph::new(g.n());
    for (k, e) in g.edges().iter().enumerate() {
        graph.add_edge(e.u, e.v, e.weight, EdgeTag::Original(k))?;
    }
    let mut capacities = CapacityVector::new(Vec::new(), Vec::new())?;
    for v in 0..g.n() {
        let (l, b) = original_capacity(g, v);
        capacities.push(l, b);
    }
    let mut aux = AuxiliaryInstance {
        graph,
        capacities,
        gadgets: Vec::new(),
        original_n: g.n(),
        original_m: g.m(),
        bare_dense: Vec::new(),
        potentials,
    };
    let mut owner: Vec<Option<usize>> = vec![None; g.n()];
    for h in &detection.subgraphs {
        if !(h.problematic || h.is_dense()) {
            continue;
        }
        for &v in &h.vertices {
            if let Some(o) = owner[v].replace(h.id) {
                return Err(Error::Internal(format!(
                    "gadget owners {o} and {} share vertex {v}",
                    h.id
                )));
            }
        }
        let pf = aux
            .potentials
            .get(&h.id)
            .cloned()
            .ok_or_else(|| Error::Internal(format!("no potential for subgraph {}", h.id)))?;
        match h.kind {
            Kind::Kt1 => attach(&mut aux, h, GadgetKind::Clique, vec![h.vertices.clone()], &pf, [2, 2])?,
            Kind::Ktt => attach(&mut aux, h, GadgetKind::Biclique, h.color_classes.clone(), &pf, [1, 1])?,
            Kind::Kpq { p, .. } => attach_partite(&mut aux, h, p, &pf)?,
            Kind::Dense => attach_dense(&mut aux, g, h, &pf)?,
        }
    }
    Ok(aux)
}

fn add_vertex(aux: &mut AuxiliaryInstance, l: usize, b: usize) -> usize {
    aux.capacities.push(l, b);
    aux.graph.add_vertex()
}

fn half_edges(aux: &mut AuxiliaryInstance, gadget: usize, sub: usize, targets: &[usize], pf: &PotentialFunction) -> Result<()> {
    for &v in targets {
        let r = pf
            .get(v)
            .ok_or_else(|| Error::Internal(format!("vertex {v} has no potential")))?;
        aux.graph.add_edge(v, sub, r, EdgeTag::HalfEdge { gadget, vertex: v })?;
    }
    Ok(())
}

fn attach(
    aux: &mut AuxiliaryInstance,
    h: &ForbiddenSubgraph,
    kind: GadgetKind,
    groups: Vec<Vec<usize>>,
    pf: &PotentialFunction,
    cap: [usize; 2],
) -> Result<()> {
    let id = aux.gadgets.len();
    let mut subdivision = Vec::new();
    for group in &groups {
        let u = add_vertex(aux, cap[0], cap[1]);
        half_edges(aux, id, u, group, pf)?;
        subdivision.push(u);
    }
    aux.gadgets.push(Gadget {
        id,
        subgraph: h.id,
        kind,
        subdivision,
        attached: groups,
        center_vertex: None,
        global: None,
        center: None,
    });
    Ok(())
}

fn attach_partite(aux: &mut AuxiliaryInstance, h: &ForbiddenSubgraph, p: usize, pf: &PotentialFunction) -> Result<()> {
    let id = aux.gadgets.len();
    let z = add_vertex(aux, p - 2, p - 2);
    let mut subdivision = Vec::new();
    for class in &h.color_classes {
        let u = add_vertex(aux, 1, 1);
        half_edges(aux, id, u, class, pf)?;
        aux.graph.add_edge(u, z, 0, EdgeTag::GadgetInternal { gadget: id })?;
        subdivision.push(u);
    }
    aux.gadgets.push(Gadget {
        id,
        subgraph: h.id,
        kind: GadgetKind::Partite { p },
        subdivision,
        attached: h.color_classes.clone(),
        center_vertex: None,
        global: Some(z),
        center: None,
    });
    Ok(())
}

fn attach_dense(aux: &mut AuxiliaryInstance, g: &Graph, h: &ForbiddenSubgraph, pf: &PotentialFunction) -> Result<()> {
    let core = &h.core;
    if core.len() < 4 || core.len() % 2 == 1 {
        return Err(Error::Internal(format!("dense subgraph {} has core of size {}", h.id, core.len())));
    }
    let center = *core
        .iter()
        .min_by_key(|&&c| (pf.get(c).unwrap_or(i64::MAX), c))
        .expect("core is non-empty");
    if pf.get(center).unwrap_or(0) < 0 {
        aux.bare_dense.push(h.id);
        return Ok(());
    }
    let p = h.color_classes.len();
    let k = core.len() / 2;
    let outer: Vec<Vec<usize>> = h
        .color_classes
        .iter()
        .filter(|c| !c.iter().all(|v| core.binary_search(v).is_ok()))
        .cloned()
        .collect();
    if outer.len() != p - k {
        return Err(Error::Internal(format!(
            "dense subgraph {}: {} classes outside a core of size {}",
            h.id,
            outer.len(),
            core.len()
        )));
    }
    debug_assert!(core.iter().all(|&c| g.degree(c) == g.t() + 1));
    let id = aux.gadgets.len();
    let z = add_vertex(aux, p - k, p - k);
    let uc = add_vertex(aux, 2, 2);
    half_edges(aux, id, uc, &[center, center], pf)?;
    for _ in 0..2 {
        aux.graph.add_edge(uc, z, 0, EdgeTag::GadgetInternal { gadget: id })?;
    }
    let mut subdivision = Vec::new();
    for class in &outer {
        let u = add_vertex(aux, 1, 1);
        half_edges(aux, id, u, class, pf)?;
        aux.graph.add_edge(u, z, 0, EdgeTag::GadgetInternal { gadget: id })?;
        subdivision.push(u);
    }
    aux.gadgets.push(Gadget {
        id,
        subgraph: h.id,
        kind: GadgetKind::Dense { p, k },
        subdivision,
        attached: outer,
        center_vertex: Some(uc),
        global: Some(z),
        center: Some(center),
    });
    Ok(())
}

pub fn gadget_stats(aux: &AuxiliaryInstance) -> GadgetStats {
    GadgetStats {
        added_vertices: aux.graph.n() - aux.original_n,
        added_edges: aux.graph.m() - aux.original_m,
        sum_b: aux.capacities.upper.iter().sum(),
    }
}

/// Doubled weight written in real units.
pub fn format_doubled(w: i64) -> String {
    let sign = if w < 0 { "-" } else { "" };
    let a = w.unsigned_abs();
    if a % 2 == 0 {
        format!("{sign}{}", a / 2)
    } else {
        format!("{sign}{}.5", a / 2)
    }
}

/// One line per edge: `u v w kind gadget_id`.
pub fn dump_auxiliary(aux: &AuxiliaryInstance) -> String {
    let mut out = String::new();
    for e in aux.graph.edges() {
        let (kind, gadget) = match e.tag {
            EdgeTag::Original(_) => ("original", "-".to_string()),
            EdgeTag::HalfEdge { gadget, .. } => ("half", gadget.to_string()),
            EdgeTag::GadgetInternal { gadget } => ("internal", gadget.to_string()),
        };
        let _ = writeln!(out, "{} {} {} {} {}", e.u, e.v, format_doubled(e.weight), kind, gadget);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{Variant, analyze};

    fn complete(n: usize, t: usize) -> Graph {
        let mut e = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                e.push((u, v));
            }
        }
        Graph::unweighted(n, t, &e).unwrap()
    }

    fn build(g: &Graph, variant: Variant) -> AuxiliaryInstance {
        let d = analyze(g, variant).unwrap();
        let pf = compute_potentials(g, &d, false).unwrap();
        build_auxiliary(g, &d, pf).unwrap()
    }

    #[test]
    fn clique_gadget() {
        let aux = build(&complete(4, 3), Variant::Restricted);
        assert_eq!(aux.gadgets.len(), 1);
        let u = aux.gadgets[0].subdivision[0];
        assert_eq!((aux.capacities.lower[u], aux.capacities.upper[u]), (2, 2));
        assert_eq!(aux.graph.degree(u), 4);
        assert!(aux.graph.incident(u).iter().all(|&e| aux.graph.edge(e).weight == 1));
        for v in 0..4 {
            assert_eq!((aux.capacities.lower[v], aux.capacities.upper[v]), (0, 3));
        }
        let s = gadget_stats(&aux);
        assert_eq!((s.added_vertices, s.added_edges), (1, 4));
    }

    #[test]
    fn biclique_gadget() {
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        let aux = build(&Graph::unweighted(6, 3, &e).unwrap(), Variant::Restricted);
        let gad = &aux.gadgets[0];
        assert_eq!(gad.subdivision.len(), 2);
        for &u in &gad.subdivision {
            assert_eq!((aux.capacities.lower[u], aux.capacities.upper[u]), (1, 1));
            assert_eq!(aux.graph.degree(u), 3);
        }
    }

    #[test]
    fn dense_gadget_on_k6() {
        let aux = build(&complete(6, 4), Variant::KpqFree { p: 3, q: 2 });
        assert_eq!(aux.gadgets.len(), 1);
        let gad = &aux.gadgets[0];
        assert_eq!(gad.kind, GadgetKind::Dense { p: 3, k: 3 });
        assert!(gad.subdivision.is_empty());
        let z = gad.global.unwrap();
        assert_eq!((aux.capacities.lower[z], aux.capacities.upper[z]), (0, 0));
        let uc = gad.center_vertex.unwrap();
        assert_eq!(aux.graph.degree(uc), 4);
    }

    #[test]
    fn no_gadgets_without_forbidden_subgraphs() {
        let g = Graph::unweighted(4, 3, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let aux = build(&g, Variant::Restricted);
        assert_eq!(
            gadget_stats(&aux),
            GadgetStats {
                added_vertices: 0,
                added_edges: 0,
                sum_b: 6
            }
        );
    }

    #[test]
    fn doubled_formatting() {
        assert_eq!(format_doubled(4), "2");
        assert_eq!(format_doubled(3), "1.5");
        assert_eq!(format_doubled(-1), "-0.5");
        assert_eq!(format_doubled(-3), "-1.5");
    }
}
