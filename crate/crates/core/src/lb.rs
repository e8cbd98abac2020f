//! Degree-constrained subgraphs: minimum weight and minimum cardinality
//! `(l, b)`-matchings on multigraphs.
//!
//! Every solver first drops edges that no optimal solution needs (positive
//! cost, both endpoints without a lower bound), then splits the rest into
//! connected components and reduces each one to ordinary matching.

use crate::error::{Error, Result};
use crate::gadgets::{AuxiliaryInstance, GadgetKind};
use crate::graph::{CapacityVector, EdgeTag, MultiGraph};
use crate::matching::{max_matching_covering, max_weight_matching};

/// An `(l, b)`-matching given by edge ids of the multigraph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LbMatching {
    /// Edge ids, ascending.
    pub edges: Vec<usize>,
    /// Degree of every vertex in the matching.
    pub degree: Vec<usize>,
}

impl LbMatching {
    pub fn from_edges(g: &MultiGraph, mut edges: Vec<usize>) -> Self {
        edges.sort_unstable();
        let mut degree = vec![0; g.n()];
        for &k in &edges {
            let e = g.edge(k);
            degree[e.u] += 1;
            degree[e.v] += 1;
        }
        LbMatching { edges, degree }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Sum of edge weights (same scale as the multigraph).
    pub fn weight(&self, g: &MultiGraph) -> i64 {
        self.edges.iter().map(|&k| g.edge(k).weight).sum()
    }

    pub fn is_feasible(&self, caps: &CapacityVector) -> bool {
        (0..caps.len()).all(|v| caps.lower[v] <= self.degree[v] && self.degree[v] <= caps.upper[v])
    }
}

/// How a component is turned into an ordinary matching problem.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Reduction {
    /// One port per edge end plus slack vertices; lower bounds enforced by a
    /// coverage bonus on a maximum weight matching.
    #[default]
    PortSplit,
    /// Two copies joined by length-3 paths, then vertex substitutes, then a
    /// maximum weight perfect matching.
    TwinCopies,
}

/// A maximum weight perfect matching.
#[derive(Clone, Debug)]
pub struct PerfectMatching {
    /// Edge ids, ascending.
    pub edges: Vec<usize>,
    pub weight: i64,
}

/// Maximum weight perfect matching of a multigraph, using edge weights as
/// given. Among parallel edges only the heaviest can be useful.
pub fn max_weight_perfect_matching(g: &MultiGraph) -> Result<PerfectMatching> {
    let n = g.n();
    if n % 2 == 1 {
        return Err(Error::Infeasible);
    }
    let mut best: std::collections::HashMap<(usize, usize), usize> = Default::default();
    for (k, e) in g.edges().iter().enumerate() {
        let key = (e.u.min(e.v), e.u.max(e.v));
        match best.get(&key) {
            Some(&j) if g.edge(j).weight >= e.weight => {}
            _ => {
                best.insert(key, k);
            }
        }
    }
    let mut ids: Vec<usize> = best.into_values().collect();
    ids.sort_unstable();
    let simple: Vec<(usize, usize, i64)> = ids
        .iter()
        .map(|&k| {
            let e = g.edge(k);
            (e.u, e.v, e.weight)
        })
        .collect();
    let m = max_weight_matching(n, &simple, true)?;
    if !m.is_perfect() {
        return Err(Error::Infeasible);
    }
    let mut edges: Vec<usize> = m.edges.iter().map(|&i| ids[i]).collect();
    edges.sort_unstable();
    let weight = edges.iter().map(|&k| g.edge(k).weight).sum();
    Ok(PerfectMatching { edges, weight })
}

/// Costs ordering matchings by weight first and edge count second:
/// `w(e) * (|E| + 1) + 1`.
pub fn lexicographic_costs(g: &MultiGraph) -> Result<Vec<i64>> {
    let m = g.m() as i128;
    let wmax = g.max_abs_weight() as i128;
    let bound = 2 * wmax * (m + 1) * m.max(1);
    if bound >= 1i128 << 62 {
        return Err(Error::Overflow(format!(
            "max |w| = {wmax} with {m} edges exceeds the exact range"
        )));
    }
    let scale = g.m() as i64 + 1;
    Ok(g.edges().iter().map(|e| e.weight * scale + 1).collect())
}

/// Minimum weight `(l, b)`-matching; among those of minimum weight, one with
/// the fewest edges.
pub fn solve_min_weight(g: &MultiGraph, caps: &CapacityVector, reduction: Reduction) -> Result<LbMatching> {
    let costs = lexicographic_costs(g)?;
    solve_min_cost(g, caps, &costs, reduction)
}

/// Minimum total cost `(l, b)`-matching for arbitrary integer costs.
pub fn solve_min_cost(
    g: &MultiGraph,
    caps: &CapacityVector,
    costs: &[i64],
    reduction: Reduction,
) -> Result<LbMatching> {
    check_caps(g, caps)?;
    let keep: Vec<bool> = (0..g.m())
        .map(|k| {
            let e = g.edge(k);
            caps.upper[e.u] > 0
                && caps.upper[e.v] > 0
                && (costs[k] <= 0 || caps.lower[e.u] > 0 || caps.lower[e.v] > 0)
        })
        .collect();
    let mut chosen = Vec::new();
    for comp in components(g, caps, &keep)? {
        let part = match reduction {
            Reduction::PortSplit => port_split(g, caps, costs, &comp)?,
            Reduction::TwinCopies => twin_copies(g, caps, costs, &comp)?,
        };
        chosen.extend(part);
    }
    let result = LbMatching::from_edges(g, chosen);
    if !result.is_feasible(caps) {
        return Err(Error::Internal("solver returned an infeasible (l,b)-matching".into()));
    }
    Ok(result)
}

/// Minimum cardinality `(l, b)`-matching through the auxiliary-vertex
/// reduction: every `v` gets a partner `v'` joined by `b(v) - l(v)` parallel
/// edges, `v` must be saturated and the resulting `b`-matching is maximized.
pub fn solve_min_cardinality_lb(g: &MultiGraph, caps: &CapacityVector) -> Result<CardinalityOutcome> {
    solve_min_cardinality_from(g, caps, None)
}

/// Result of the cardinality solver with the reduction's bookkeeping.
#[derive(Clone, Debug)]
pub struct CardinalityOutcome {
    pub matching: LbMatching,
    /// Size of the maximum `b*`-matching in the auxiliary graph.
    pub star_size: usize,
    /// Sum of the (degree-clamped) upper bounds over non-isolated vertices.
    pub sum_upper: usize,
}

/// As [`solve_min_cardinality_lb`], optionally warm-started from a feasible
/// `(l, b)`-matching.
pub fn solve_min_cardinality_from(
    g: &MultiGraph,
    caps: &CapacityVector,
    warm: Option<&LbMatching>,
) -> Result<CardinalityOutcome> {
    check_caps(g, caps)?;
    let keep: Vec<bool> = (0..g.m())
        .map(|k| {
            let e = g.edge(k);
            caps.upper[e.u] > 0 && caps.upper[e.v] > 0 && (caps.lower[e.u] > 0 || caps.lower[e.v] > 0)
        })
        .collect();
    if let Some(w) = warm {
        if !w.is_feasible(caps) {
            return Err(Error::Parameters("warm start is not an (l,b)-matching".into()));
        }
    }
    let mut in_warm = vec![false; g.m()];
    if let Some(w) = warm {
        for &k in &w.edges {
            in_warm[k] = true;
        }
    }
    let mut chosen = Vec::new();
    let mut star_size = 0;
    let mut sum_upper = 0;
    for comp in components(g, caps, &keep)? {
        // Pruned warm edges join two vertices without lower bound, so
        // dropping them keeps the start feasible.
        let (edges, star, upper) = aux_vertex_reduction(g, caps, &comp, warm.map(|_| &in_warm))?;
        chosen.extend(edges);
        star_size += star;
        sum_upper += upper;
    }
    let matching = LbMatching::from_edges(g, chosen);
    if !matching.is_feasible(caps) {
        return Err(Error::Internal("cardinality solver returned an infeasible matching".into()));
    }
    if star_size + matching.len() != sum_upper {
        return Err(Error::Internal(format!(
            "|M*| = {star_size} but sum(b) - |M| = {}",
            sum_upper as i64 - matching.len() as i64
        )));
    }
    Ok(CardinalityOutcome {
        matching,
        star_size,
        sum_upper,
    })
}

/// Minimum weight `(l, b)`-matching of the auxiliary instance, fewest edges
/// among those.
pub fn solve_min_weight_lb(aux: &AuxiliaryInstance) -> Result<LbMatching> {
    solve_min_weight(&aux.graph, &aux.capacities, Reduction::PortSplit)
}

/// A feasible matching of the auxiliary instance with `O(n)` edges: the
/// cheapest fixed choice inside every gadget, then one original edge at each
/// vertex that still lacks one.
pub fn greedy_feasible(aux: &AuxiliaryInstance) -> Result<LbMatching> {
    let g = &aux.graph;
    let caps = &aux.capacities;
    let mut chosen = Vec::new();
    let mut degree = vec![0usize; g.n()];
    let take = |k: usize, chosen: &mut Vec<usize>, degree: &mut Vec<usize>| {
        let e = g.edge(k);
        degree[e.u] += 1;
        degree[e.v] += 1;
        chosen.push(k);
    };
    let internal_to = |u: usize, z: usize| -> Vec<usize> {
        g.incident(u)
            .iter()
            .copied()
            .filter(|&k| g.edge(k).other(u) == z && matches!(g.edge(k).tag, EdgeTag::GadgetInternal { .. }))
            .collect()
    };
    let halves = |u: usize| -> Vec<usize> {
        g.incident(u)
            .iter()
            .copied()
            .filter(|&k| matches!(g.edge(k).tag, EdgeTag::HalfEdge { .. }))
            .collect()
    };
    for gad in &aux.gadgets {
        match gad.kind {
            GadgetKind::Clique => {
                for k in halves(gad.subdivision[0]).into_iter().take(2) {
                    take(k, &mut chosen, &mut degree);
                }
            }
            GadgetKind::Biclique => {
                for &u in &gad.subdivision {
                    take(halves(u)[0], &mut chosen, &mut degree);
                }
            }
            GadgetKind::Partite { .. } => {
                let z = gad.global.expect("partite gadget has a global vertex");
                for (i, &u) in gad.subdivision.iter().enumerate() {
                    let k = if i < 2 { halves(u)[0] } else { internal_to(u, z)[0] };
                    take(k, &mut chosen, &mut degree);
                }
            }
            GadgetKind::Dense { .. } => {
                let z = gad.global.expect("dense gadget has a global vertex");
                for k in halves(gad.center_vertex.expect("dense gadget has u_c")) {
                    take(k, &mut chosen, &mut degree);
                }
                for &u in &gad.subdivision {
                    take(internal_to(u, z)[0], &mut chosen, &mut degree);
                }
            }
        }
    }
    let mut used = vec![false; g.m()];
    for &k in &chosen {
        used[k] = true;
    }
    let originals: Vec<usize> = (0..g.m())
        .filter(|&k| matches!(g.edge(k).tag, EdgeTag::Original(_)))
        .collect();
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for &k in &originals {
        let e = g.edge(k);
        by_vertex[e.u].push(k);
        by_vertex[e.v].push(k);
    }
    // First pair up uncovered vertices, then cover the rest one edge each.
    for pass in 0..2 {
        for v in 0..aux.original_n {
            if degree[v] >= caps.lower[v] {
                continue;
            }
            let pick = by_vertex[v].iter().copied().find(|&k| {
                let w = g.edge(k).other(v);
                !used[k]
                    && degree[w] < caps.upper[w]
                    && degree[v] < caps.upper[v]
                    && (pass == 1 || degree[w] < caps.lower[w])
            });
            if let Some(k) = pick {
                used[k] = true;
                take(k, &mut chosen, &mut degree);
            }
        }
    }
    let m = LbMatching::from_edges(g, chosen);
    if !m.is_feasible(caps) {
        return Err(Error::Infeasible);
    }
    Ok(m)
}

/// Minimum cardinality `(l, b)`-matching of the auxiliary instance with every
/// upper bound lowered to the degree in a greedy feasible matching, which
/// also serves as the starting point.
pub fn solve_min_cardinality_capped(aux: &AuxiliaryInstance) -> Result<CardinalityOutcome> {
    let start = greedy_feasible(aux)?;
    let capped = CapacityVector::new(aux.capacities.lower.clone(), start.degree.clone())?;
    solve_min_cardinality_from(&aux.graph, &capped, Some(&start))
}

/// `|M'| - w'(M')` in real units, checked against the gadget count formula.
pub fn count_weight_identity(aux: &AuxiliaryInstance, m: &LbMatching) -> Result<i64> {
    let w = m.weight(&aux.graph);
    if w % 2 != 0 {
        return Err(Error::Internal(format!("odd doubled weight {w} on an unweighted instance")));
    }
    let value = m.len() as i64 - w / 2;
    let expected: i64 = aux.gadgets.iter().map(|g| g.count_contribution()).sum();
    if value != expected {
        return Err(Error::Internal(format!(
            "|M'| - w'(M') = {value}, gadget count gives {expected}"
        )));
    }
    Ok(value)
}

fn check_caps(g: &MultiGraph, caps: &CapacityVector) -> Result<()> {
    if caps.len() != g.n() {
        return Err(Error::Parameters(format!(
            "{} capacity intervals for {} vertices",
            caps.len(),
            g.n()
        )));
    }
    if let Some(v) = (0..g.n()).find(|&v| caps.lower[v] > caps.upper[v]) {
        return Err(Error::Parameters(format!("vertex {v} has l > b")));
    }
    Ok(())
}

struct Component {
    vertices: Vec<usize>,
    edges: Vec<usize>,
}

/// Connected components over kept edges. Vertices with a positive lower bound
/// and no kept edge make the instance infeasible.
fn components(g: &MultiGraph, caps: &CapacityVector, keep: &[bool]) -> Result<Vec<Component>> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut touched = vec![false; n];
    for (k, e) in g.edges().iter().enumerate() {
        if keep[k] {
            touched[e.u] = true;
            touched[e.v] = true;
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            if a != b {
                parent[a] = b;
            }
        }
    }
    if (0..n).any(|v| caps.lower[v] > 0 && !touched[v]) {
        return Err(Error::Infeasible);
    }
    let mut index = vec![usize::MAX; n];
    let mut comps: Vec<Component> = Vec::new();
    for v in 0..n {
        if touched[v] {
            let r = find(&mut parent, v);
            if index[r] == usize::MAX {
                index[r] = comps.len();
                comps.push(Component {
                    vertices: Vec::new(),
                    edges: Vec::new(),
                });
            }
            comps[index[r]].vertices.push(v);
        }
    }
    for (k, e) in g.edges().iter().enumerate() {
        if keep[k] {
            let r = find(&mut parent, e.u);
            comps[index[r]].edges.push(k);
        }
    }
    Ok(comps)
}

/// Local degrees and clamped upper bounds of a component.
fn local_bounds(g: &MultiGraph, caps: &CapacityVector, comp: &Component) -> Result<(Vec<usize>, Vec<usize>, Vec<Vec<usize>>)> {
    let pos: std::collections::HashMap<usize, usize> =
        comp.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut incident = vec![Vec::new(); comp.vertices.len()];
    for &k in &comp.edges {
        let e = g.edge(k);
        incident[pos[&e.u]].push(k);
        incident[pos[&e.v]].push(k);
    }
    let mut lower = Vec::new();
    let mut upper = Vec::new();
    for (i, &v) in comp.vertices.iter().enumerate() {
        let d = incident[i].len();
        if caps.lower[v] > d {
            return Err(Error::Infeasible);
        }
        lower.push(caps.lower[v]);
        upper.push(caps.upper[v].min(d));
    }
    Ok((lower, upper, incident))
}

fn port_split(g: &MultiGraph, caps: &CapacityVector, costs: &[i64], comp: &Component) -> Result<Vec<usize>> {
    let (lower, upper, incident) = local_bounds(g, caps, comp)?;
    let total: i128 = comp.edges.iter().map(|&k| (costs[k] as i128).abs()).sum();
    let bonus = total + 1;
    if 4 * bonus + total >= 1i128 << 60 {
        return Err(Error::Overflow("coverage bonus exceeds the exact range".into()));
    }
    let bonus = bonus as i64;
    let mut next = 0usize;
    let mut port: std::collections::HashMap<(usize, usize), usize> = Default::default();
    let mut edges: Vec<(usize, usize, i64)> = Vec::new();
    let mut required = Vec::new();
    for (i, list) in incident.iter().enumerate() {
        let ports: Vec<usize> = list
            .iter()
            .map(|&k| {
                let id = next;
                next += 1;
                required.push(true);
                port.insert((k, comp.vertices[i]), id);
                id
            })
            .collect();
        let d = list.len();
        let mandatory = d - upper[i];
        let optional = upper[i] - lower[i];
        for s in 0..mandatory + optional {
            let id = next;
            next += 1;
            required.push(s < mandatory);
            let w = if s < mandatory { 2 * bonus } else { bonus };
            for &p in &ports {
                edges.push((p, id, w));
            }
        }
    }
    let cross_start = edges.len();
    for &k in &comp.edges {
        let e = g.edge(k);
        edges.push((port[&(k, e.u)], port[&(k, e.v)], 2 * bonus - costs[k]));
    }
    let m = max_weight_matching(next, &edges, false)?;
    if (0..next).any(|x| required[x] && m.mate_edge[x].is_none()) {
        return Err(Error::Infeasible);
    }
    Ok(m.edges
        .iter()
        .filter(|&&i| i >= cross_start)
        .map(|&i| comp.edges[i - cross_start])
        .collect())
}

fn twin_copies(g: &MultiGraph, caps: &CapacityVector, costs: &[i64], comp: &Component) -> Result<Vec<usize>> {
    let (lower, upper, _) = local_bounds(g, caps, comp)?;
    let nv = comp.vertices.len();
    let pos: std::collections::HashMap<usize, usize> =
        comp.vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let wmax = comp.edges.iter().map(|&k| costs[k].abs()).max().unwrap_or(0).max(1);
    // Doubled graph: copies 0..nv and nv..2nv, then path interiors.
    let mut star_edges: Vec<(usize, usize, i64)> = Vec::new();
    let mut exact: Vec<usize> = upper.iter().chain(upper.iter()).copied().collect();
    for &k in &comp.edges {
        let e = g.edge(k);
        star_edges.push((pos[&e.u], pos[&e.v], -costs[k]));
    }
    for &k in &comp.edges {
        let e = g.edge(k);
        star_edges.push((nv + pos[&e.u], nv + pos[&e.v], -costs[k]));
    }
    for i in 0..nv {
        for _ in 0..upper[i] - lower[i] {
            let a = exact.len();
            let b = a + 1;
            exact.push(1);
            exact.push(1);
            star_edges.push((i, a, wmax));
            star_edges.push((a, b, 2 * wmax));
            star_edges.push((b, nv + i, wmax));
        }
    }
    // Substitutes: degree-many external vertices, degree minus demand internal ones.
    let ns = exact.len();
    let mut incident = vec![Vec::new(); ns];
    for (j, &(x, y, _)) in star_edges.iter().enumerate() {
        incident[x].push(j);
        incident[y].push(j);
    }
    let mut next = 0usize;
    let mut external: std::collections::HashMap<(usize, usize), usize> = Default::default();
    let mut hat: Vec<(usize, usize, i64)> = Vec::new();
    for x in 0..ns {
        let d = incident[x].len();
        if exact[x] > d {
            return Err(Error::Infeasible);
        }
        let ext: Vec<usize> = incident[x]
            .iter()
            .map(|&j| {
                let id = next;
                next += 1;
                external.insert((j, x), id);
                id
            })
            .collect();
        for _ in 0..d - exact[x] {
            let id = next;
            next += 1;
            for &p in &ext {
                hat.push((p, id, 2 * wmax));
            }
        }
    }
    let cross_start = hat.len();
    for (j, &(x, y, w)) in star_edges.iter().enumerate() {
        hat.push((external[&(j, x)], external[&(j, y)], w));
    }
    let bound = (hat.len() as i128 + 1) * 4 * wmax as i128;
    if bound >= 1i128 << 60 {
        return Err(Error::Overflow("expanded instance weights exceed the exact range".into()));
    }
    let m = max_weight_matching(next, &hat, true)?;
    if !m.is_perfect() {
        return Err(Error::Infeasible);
    }
    let first_copy = comp.edges.len();
    Ok(m.edges
        .iter()
        .filter(|&&i| i >= cross_start && i - cross_start < first_copy)
        .map(|&i| comp.edges[i - cross_start])
        .collect())
}

/// Auxiliary-vertex reduction for one component. Returns chosen edges, the size of
/// the maximum `b*`-matching and the component's sum of upper bounds.
fn aux_vertex_reduction(
    g: &MultiGraph,
    caps: &CapacityVector,
    comp: &Component,
    warm: Option<&Vec<bool>>,
) -> Result<(Vec<usize>, usize, usize)> {
    let (lower, upper, incident) = local_bounds(g, caps, comp)?;
    let mut next = 0usize;
    let mut required = Vec::new();
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut port: std::collections::HashMap<(usize, usize), usize> = Default::default();
    let mut initial: Vec<(usize, usize)> = Vec::new();
    let mut copy_ranges = Vec::new();
    for (i, list) in incident.iter().enumerate() {
        let v = comp.vertices[i];
        let d = list.len();
        let spare = upper[i] - lower[i];
        let own: Vec<usize> = (0..d + spare)
            .map(|_| {
                next += 1;
                required.push(true);
                next - 1
            })
            .collect();
        for (j, &k) in list.iter().enumerate() {
            port.insert((k, v), own[j]);
        }
        // v' has exactly `spare` ports and no slack.
        let partner: Vec<usize> = (0..spare)
            .map(|_| {
                next += 1;
                required.push(false);
                next - 1
            })
            .collect();
        let copy_start = edges.len();
        for j in 0..spare {
            edges.push((own[d + j], partner[j]));
        }
        copy_ranges.push(copy_start..edges.len());
        let slacks: Vec<usize> = (0..d - lower[i])
            .map(|_| {
                next += 1;
                required.push(true);
                next - 1
            })
            .collect();
        for &p in &own {
            for &s in &slacks {
                edges.push((p, s));
            }
        }
        if let Some(in_warm) = warm {
            let used: Vec<bool> = list.iter().map(|&k| in_warm[k]).collect();
            let deg = used.iter().filter(|&&u| u).count();
            let copies = upper[i] - deg.min(upper[i]);
            if deg < lower[i] || deg > upper[i] {
                return Err(Error::Parameters("warm start violates capacities".into()));
            }
            for j in 0..copies {
                initial.push((own[d + j], partner[j]));
            }
            let mut free_ports: Vec<usize> = (0..d).filter(|&j| !used[j]).map(|j| own[j]).collect();
            free_ports.extend((copies..spare).map(|j| own[d + j]));
            debug_assert_eq!(free_ports.len(), slacks.len());
            for (&p, &s) in free_ports.iter().zip(&slacks) {
                initial.push((p, s));
            }
        }
    }
    let cross_start = edges.len();
    for &k in &comp.edges {
        let e = g.edge(k);
        edges.push((port[&(k, e.u)], port[&(k, e.v)]));
        if let Some(in_warm) = warm {
            if in_warm[k] {
                initial.push((port[&(k, e.u)], port[&(k, e.v)]));
            }
        }
    }
    let m = max_matching_covering(next, &edges, &required, &initial)?;
    let mut chosen = Vec::new();
    for (idx, &k) in comp.edges.iter().enumerate() {
        let (a, b) = edges[cross_start + idx];
        if m.mate[a] == Some(b) {
            chosen.push(k);
        }
    }
    let mut copies_used = 0;
    for range in copy_ranges {
        for j in range {
            let (a, b) = edges[j];
            if m.mate[a] == Some(b) {
                copies_used += 1;
            }
        }
    }
    let sum_upper: usize = upper.iter().sum();
    let star = chosen.len() + copies_used;
    Ok((chosen, star, sum_upper))
}
