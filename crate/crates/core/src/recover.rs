//! From an optimal `(l, b)`-matching of the auxiliary instance back to a
//! covering co-t-matching of the original graph, repair of uncovered
//! unproblematic subgraphs, and the final certificate.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::detect::{Detection, ForbiddenSubgraph, Kind};
use crate::error::{Error, Result};
use crate::gadgets::{AuxiliaryInstance, GadgetKind};
use crate::graph::{EdgeTag, Graph};
use crate::lb::LbMatching;

/// Edge ids of the original graph removed from `E`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CoTMatching {
    pub edges: BTreeSet<usize>,
}

impl CoTMatching {
    pub fn weight(&self, g: &Graph) -> i64 {
        self.edges.iter().map(|&e| g.edge(e).weight).sum()
    }

    pub fn contains(&self, g: &Graph, u: usize, v: usize) -> bool {
        g.edge_between(u, v).is_some_and(|e| self.edges.contains(&e))
    }

    /// Every vertex of degree `t + 1` touches a removed edge.
    pub fn is_co_t_matching(&self, g: &Graph) -> bool {
        let mut touched = vec![false; g.n()];
        for &e in &self.edges {
            let edge = g.edge(e);
            touched[edge.u] = true;
            touched[edge.v] = true;
        }
        (0..g.n()).all(|v| g.degree(v) <= g.t() || touched[v])
    }

    pub fn covers(&self, g: &Graph, h: &ForbiddenSubgraph) -> bool {
        h.edge_ids(g).iter().any(|e| self.edges.contains(e))
    }

    fn insert(&mut self, g: &Graph, u: usize, v: usize) -> Result<()> {
        let e = g
            .edge_between(u, v)
            .ok_or_else(|| Error::Internal(format!("recovery needs missing edge ({u}, {v})")))?;
        self.edges.insert(e);
        Ok(())
    }

    fn remove(&mut self, g: &Graph, u: usize, v: usize) {
        if let Some(e) = g.edge_between(u, v) {
            self.edges.remove(&e);
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Rule {
    /// Two half-edges at distinct vertices became the edge between them.
    HalfEdgePair,
    /// Both dense half-edges at the center: a core edge split into two.
    DenseSplit,
    /// Both dense half-edges at the center: two boundary edges rewired.
    DenseRewire,
    /// A dense subgraph without gadget was found uncovered and split.
    DenseNegativeCenter,
    /// One edge moved from the partner's extra vertex to ours.
    Shift,
    /// Two crossing edges of a biclique swapped for two others.
    Cross,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RepairEvent {
    pub subgraph: usize,
    pub rule: Rule,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub partner: Option<usize>,
}

/// Translates `m` into a co-t-matching covering every subgraph that owns a
/// gadget and every dense subgraph.
pub fn matching_to_cotmatching(
    g: &Graph,
    detection: &Detection,
    aux: &AuxiliaryInstance,
    m: &LbMatching,
) -> Result<(CoTMatching, Vec<RepairEvent>)> {
    let mut mbar = CoTMatching::default();
    let mut halves: Vec<Vec<usize>> = vec![Vec::new(); aux.gadgets.len()];
    let mut original = BTreeSet::new();
    for &k in &m.edges {
        match aux.graph.edge(k).tag {
            EdgeTag::Original(e) => {
                original.insert(e);
            }
            EdgeTag::HalfEdge { gadget, vertex } => halves[gadget].push(vertex),
            EdgeTag::GadgetInternal { .. } => {}
        }
    }
    mbar.edges = original.clone();
    let mut events = Vec::new();
    for gad in &aux.gadgets {
        let ends = &halves[gad.id];
        if ends.len() != 2 {
            return Err(Error::Internal(format!(
                "gadget {} carries {} half-edges",
                gad.id,
                ends.len()
            )));
        }
        let (a, b) = (ends[0], ends[1]);
        if a != b {
            mbar.insert(g, a, b)?;
            events.push(RepairEvent {
                subgraph: gad.subgraph,
                rule: Rule::HalfEdgePair,
                partner: None,
            });
            continue;
        }
        if !matches!(gad.kind, GadgetKind::Dense { .. }) || gad.center != Some(a) {
            return Err(Error::Internal(format!("gadget {} has both half-edges at {a}", gad.id)));
        }
        let h = &detection.subgraphs[gad.subgraph];
        let rule = split_at_center(g, h, a, &original, &mut mbar)?;
        events.push(RepairEvent {
            subgraph: h.id,
            rule,
            partner: None,
        });
    }
    for &id in &aux.bare_dense {
        let h = &detection.subgraphs[id];
        if dense_covered(g, h, &mbar) {
            continue;
        }
        let pf = &aux.potentials[&id];
        let c = *h
            .core
            .iter()
            .min_by_key(|&&c| (pf.get(c).unwrap_or(i64::MAX), c))
            .expect("core is non-empty");
        let pair = core_edge_avoiding(g, h, c, &mbar.edges)
            .ok_or_else(|| Error::Internal(format!("uncovered dense subgraph {id} has no core edge to split")))?;
        mbar.remove(g, pair.0, pair.1);
        mbar.insert(g, c, pair.0)?;
        mbar.insert(g, c, pair.1)?;
        events.push(RepairEvent {
            subgraph: id,
            rule: Rule::DenseNegativeCenter,
            partner: None,
        });
        if !dense_covered(g, h, &mbar) {
            return Err(Error::Internal(format!("dense subgraph {id} still uncovered")));
        }
    }
    Ok((mbar, events))
}

fn dense_covered(g: &Graph, h: &ForbiddenSubgraph, mbar: &CoTMatching) -> bool {
    h.members.iter().all(|classes| {
        crate::detect::cross_pairs(classes).any(|(u, v)| mbar.contains(g, u, v))
    })
}

/// An edge of `edges` with both ends in the core minus `c`.
fn core_edge_avoiding(g: &Graph, h: &ForbiddenSubgraph, c: usize, edges: &BTreeSet<usize>) -> Option<(usize, usize)> {
    let inner = |x: usize| x != c && h.core.binary_search(&x).is_ok();
    edges
        .iter()
        .map(|&e| g.edge(e))
        .find(|e| inner(e.u) && inner(e.v))
        .map(|e| (e.u, e.v))
}

fn split_at_center(
    g: &Graph,
    h: &ForbiddenSubgraph,
    c: usize,
    original: &BTreeSet<usize>,
    mbar: &mut CoTMatching,
) -> Result<Rule> {
    if let Some((v1, v2)) = core_edge_avoiding(g, h, c, original) {
        mbar.remove(g, v1, v2);
        mbar.insert(g, c, v1)?;
        mbar.insert(g, c, v2)?;
        return Ok(Rule::DenseSplit);
    }
    let in_core = |x: usize| h.core.binary_search(&x).is_ok();
    let mut boundary: Vec<(usize, usize)> = Vec::new();
    for &v in &h.core {
        if v == c || boundary.iter().any(|&(x, _)| x == v) {
            continue;
        }
        let hit = g
            .adjacency(v)
            .iter()
            .find(|&&(u, e)| original.contains(&e) && !in_core(u) && h.contains(u));
        if let Some(&(u, _)) = hit {
            boundary.push((v, u));
        }
        if boundary.len() == 2 {
            break;
        }
    }
    let [(v1, u1), (v2, u2)] = boundary[..] else {
        return Err(Error::Internal(format!(
            "dense subgraph {}: no two boundary edges for the center",
            h.id
        )));
    };
    mbar.remove(g, v1, u1);
    mbar.remove(g, v2, u2);
    mbar.insert(g, v1, v2)?;
    mbar.insert(g, c, u1)?;
    mbar.insert(g, c, u2)?;
    Ok(Rule::DenseRewire)
}

/// Whether `other` lets `h` be unproblematic.
fn admissible_partner(h: &ForbiddenSubgraph, other: &ForbiddenSubgraph) -> bool {
    if other.absorbed.is_some() || other.is_dense() {
        return false;
    }
    match (h.kind, other.kind) {
        (Kind::Kt1, Kind::Ktt) => true,
        (a, b) if a == b => h.weight <= other.weight,
        _ => false,
    }
}

/// Applies shift and cross flips until every forbidden subgraph is covered.
/// Each accepted flip keeps the co-t-matching property, does not increase the
/// weight and keeps everything covered before it covered.
pub fn cover_unproblematic(g: &Graph, detection: &Detection, mbar: &mut CoTMatching) -> Result<Vec<RepairEvent>> {
    let forbidden: Vec<&ForbiddenSubgraph> = detection.forbidden().collect();
    let mut events = Vec::new();
    for h in &forbidden {
        if mbar.covers(g, h) {
            continue;
        }
        if h.problematic || h.absorbed.is_some() {
            return Err(Error::Internal(format!("subgraph {} should be covered already", h.id)));
        }
        let covered_before: Vec<usize> = forbidden
            .iter()
            .filter(|x| mbar.covers(g, x))
            .map(|x| x.id)
            .collect();
        let weight_before = mbar.weight(g);
        let mut done = false;
        for partner in detection.intersections.partners(h.id) {
            let other = &detection.subgraphs[partner];
            if !admissible_partner(h, other) {
                continue;
            }
            for (rule, candidate) in flips(g, h, other, mbar) {
                let ok = candidate.is_co_t_matching(g)
                    && candidate.weight(g) <= weight_before
                    && candidate.covers(g, h)
                    && covered_before
                        .iter()
                        .all(|&id| candidate.covers(g, &detection.subgraphs[id]));
                if ok {
                    *mbar = candidate;
                    events.push(RepairEvent {
                        subgraph: h.id,
                        rule,
                        partner: Some(partner),
                    });
                    done = true;
                    break;
                }
            }
            if done {
                break;
            }
        }
        if !done {
            return Err(Error::Internal(format!("no valid flip covers subgraph {}", h.id)));
        }
    }
    Ok(events)
}

/// Candidate flips for covering `h` using `other`, lowest indices first.
fn flips(g: &Graph, h: &ForbiddenSubgraph, other: &ForbiddenSubgraph, mbar: &CoTMatching) -> Vec<(Rule, CoTMatching)> {
    let only_h: Vec<usize> = h.vertices.iter().copied().filter(|&v| !other.contains(v)).collect();
    let only_o: Vec<usize> = other.vertices.iter().copied().filter(|&v| !h.contains(v)).collect();
    let mut out = Vec::new();
    if h.kind == other.kind && only_h.len() == 1 && only_o.len() == 1 {
        let (u, u2) = (only_h[0], only_o[0]);
        let cu = h.class_of(u);
        for &z in &h.vertices {
            if z == u || h.class_of(z) == cu {
                continue;
            }
            let (Some(wu), Some(wo)) = (g.weight(u, z), g.weight(u2, z)) else {
                continue;
            };
            if wu <= wo && mbar.contains(g, u2, z) && !mbar.contains(g, u, z) {
                let mut next = mbar.clone();
                next.remove(g, u2, z);
                if next.insert(g, u, z).is_ok() {
                    out.push((Rule::Shift, next));
                }
            }
        }
    }
    if other.kind == Kind::Ktt && (h.kind == Kind::Kt1 || only_h.len() == 2) {
        let classes = other.classes();
        for side in 0..2 {
            let (a, b) = (&classes[side], &classes[1 - side]);
            let outside = |c: &Vec<usize>| c.iter().copied().filter(|&x| !h.contains(x)).collect::<Vec<_>>();
            for &u1 in &outside(a) {
                for &u2 in &outside(b) {
                    for &v1 in a.iter().filter(|&&x| h.contains(x)) {
                        for &v2 in b.iter().filter(|&&x| h.contains(x)) {
                            if h.class_of(v1) == h.class_of(v2) && h.kind != Kind::Kt1 {
                                continue;
                            }
                            if mbar.contains(g, v1, u2) && mbar.contains(g, v2, u1) {
                                let mut next = mbar.clone();
                                next.remove(g, v1, u2);
                                next.remove(g, v2, u1);
                                if next.insert(g, v1, v2).is_ok() && next.insert(g, u1, u2).is_ok() {
                                    out.push((Rule::Cross, next));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum Violation {
    Degree { vertex: usize, degree: usize },
    Contains { subgraph: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub max_degree: usize,
    pub subgraphs_checked: usize,
}

/// Checks the t-matching directly: degrees at most `t` and no forbidden
/// subgraph fully contained.
pub fn verify_solution<'a>(
    g: &Graph,
    forbidden: impl IntoIterator<Item = &'a ForbiddenSubgraph>,
    tmatching: &[usize],
) -> std::result::Result<Certificate, Violation> {
    let mut degree = vec![0usize; g.n()];
    let mut inside = vec![false; g.m()];
    for &e in tmatching {
        let edge = g.edge(e);
        degree[edge.u] += 1;
        degree[edge.v] += 1;
        inside[e] = true;
    }
    if let Some(v) = (0..g.n()).find(|&v| degree[v] > g.t()) {
        return Err(Violation::Degree {
            vertex: v,
            degree: degree[v],
        });
    }
    let mut checked = 0;
    for h in forbidden {
        if h.is_dense() {
            continue;
        }
        checked += 1;
        if h.edge_ids(g).iter().all(|&e| inside[e]) {
            return Err(Violation::Contains { subgraph: h.id });
        }
    }
    Ok(Certificate {
        max_degree: degree.iter().copied().max().unwrap_or(0),
        subgraphs_checked: checked,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SolveResult {
    /// Edge ids kept, ascending.
    pub tmatching: Vec<usize>,
    pub cotmatching: CoTMatching,
    /// Doubled.
    pub weight: i64,
    pub diagnostics: Vec<RepairEvent>,
    pub certificate: Certificate,
}

/// Complements the covering co-t-matching and certifies the result.
pub fn finalize(
    g: &Graph,
    detection: &Detection,
    mbar: CoTMatching,
    diagnostics: Vec<RepairEvent>,
) -> Result<SolveResult> {
    if !mbar.is_co_t_matching(g) {
        return Err(Error::Internal("removed edge set misses a vertex of degree t+1".into()));
    }
    let tmatching: Vec<usize> = (0..g.m()).filter(|e| !mbar.edges.contains(e)).collect();
    let weight = g.total_weight() - mbar.weight(g);
    let certificate = verify_solution(g, &detection.subgraphs, &tmatching)
        .map_err(|v| Error::Internal(format!("certificate failed: {v:?}")))?;
    Ok(SolveResult {
        tmatching,
        cotmatching: mbar,
        weight,
        diagnostics,
        certificate,
    })
}
