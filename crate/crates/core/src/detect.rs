//! Detection of forbidden complete partite subgraphs in graphs of maximum
//! degree `t + 1`, intersection bookkeeping, dense `K^p_2` clusters and the
//! problematic/unproblematic classification.
//!
//! Subgraphs are not required to be induced: a `K^p_q` is any `p` disjoint
//! classes of `q` vertices with every cross pair adjacent.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, Pattern, classify_pattern};

/// Which subgraphs are forbidden.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "variant", rename_all = "snake_case")]
pub enum Variant {
    /// `K_{t+1}` and `K_{t,t}`.
    Restricted,
    /// `t`-regular `K^p_q` with `(p - 1) q = t`.
    KpqFree { p: usize, q: usize },
}

impl Variant {
    pub fn validate(&self, t: usize) -> Result<()> {
        if t < 3 {
            return Err(Error::Parameters(format!("t must be at least 3, got {t}")));
        }
        if let Variant::KpqFree { p, q } = *self {
            if p < 2 || q < 1 {
                return Err(Error::Parameters(format!("need p >= 2 and q >= 1, got p={p} q={q}")));
            }
            if (p - 1) * q != t {
                return Err(Error::Parameters(format!(
                    "(p-1)*q must equal t: ({p}-1)*{q} != {t}"
                )));
            }
        }
        Ok(())
    }

    /// The `(p, q)` shapes searched for.
    pub fn shapes(&self, t: usize) -> Vec<(usize, usize)> {
        match *self {
            Variant::Restricted => vec![(t + 1, 1), (2, t)],
            Variant::KpqFree { p, q } => vec![(p, q)],
        }
    }

    /// Parameter `p` of the counting formula (clique/biclique gadgets count 1).
    pub fn p(&self) -> usize {
        match *self {
            Variant::Restricted => 2,
            Variant::KpqFree { p, .. } => p,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Kind {
    Kt1,
    Ktt,
    Kpq { p: usize, q: usize },
    Dense,
}

impl Kind {
    fn of_shape(p: usize, q: usize) -> Kind {
        if q == 1 {
            Kind::Kt1
        } else if p == 2 {
            Kind::Ktt
        } else {
            Kind::Kpq { p, q }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Kind::Kt1 => "K_t+1",
            Kind::Ktt => "K_t,t",
            Kind::Kpq { .. } => "K^p_q",
            Kind::Dense => "dense",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ForbiddenSubgraph {
    pub id: usize,
    #[serde(flatten)]
    pub kind: Kind,
    /// Sorted.
    pub vertices: Vec<usize>,
    /// Sorted classes in sorted order; empty for `K_{t+1}`.
    pub color_classes: Vec<Vec<usize>>,
    /// Dense records only.
    pub core: Vec<usize>,
    /// Dense records only: class lists of the `K^p_2`'s it contains.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub members: Vec<Vec<Vec<usize>>>,
    /// Doubled.
    pub weight: i64,
    pub problematic: bool,
    /// Id of the dense record containing this `K^p_2`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub absorbed: Option<usize>,
}

impl ForbiddenSubgraph {
    fn from_classes(g: &Graph, kind: Kind, classes: Vec<Vec<usize>>) -> Self {
        let mut vertices: Vec<usize> = classes.iter().flatten().copied().collect();
        vertices.sort_unstable();
        let weight = cross_pairs(&classes)
            .map(|(u, v)| g.weight(u, v).expect("cross pair is an edge"))
            .sum();
        let color_classes = if kind == Kind::Kt1 { Vec::new() } else { classes };
        ForbiddenSubgraph {
            id: 0,
            kind,
            vertices,
            color_classes,
            core: Vec::new(),
            members: Vec::new(),
            weight,
            problematic: false,
            absorbed: None,
        }
    }

    /// Color classes, with singletons for cliques.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        if self.kind == Kind::Kt1 {
            self.vertices.iter().map(|&v| vec![v]).collect()
        } else {
            self.color_classes.clone()
        }
    }

    pub fn is_dense(&self) -> bool {
        self.kind == Kind::Dense
    }

    /// Edge ids of the subgraph. For a dense record: every edge of `G[A]`.
    pub fn edge_ids(&self, g: &Graph) -> Vec<usize> {
        let mut ids: Vec<usize> = if self.is_dense() {
            let mut out = Vec::new();
            for (i, &u) in self.vertices.iter().enumerate() {
                for &v in &self.vertices[i + 1..] {
                    if let Some(e) = g.edge_between(u, v) {
                        out.push(e);
                    }
                }
            }
            out
        } else {
            cross_pairs(&self.classes())
                .map(|(u, v)| g.edge_between(u, v).expect("cross pair is an edge"))
                .collect()
        };
        ids.sort_unstable();
        ids
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }

    /// Index of the class holding `v`.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes().iter().position(|c| c.contains(&v))
    }
}

/// All cross-class vertex pairs.
pub fn cross_pairs(classes: &[Vec<usize>]) -> impl Iterator<Item = (usize, usize)> + '_ {
    classes.iter().enumerate().flat_map(move |(i, a)| {
        classes[i + 1..]
            .iter()
            .flat_map(move |b| a.iter().flat_map(move |&x| b.iter().map(move |&y| (x, y))))
    })
}

fn canonical(mut classes: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    for c in classes.iter_mut() {
        c.sort_unstable();
    }
    classes.sort();
    classes
}

/// Pairs of forbidden subgraphs sharing a vertex, by id, `a < b`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct IntersectionRecord {
    pub pairs: Vec<(usize, usize)>,
}

impl IntersectionRecord {
    pub fn partners(&self, id: usize) -> impl Iterator<Item = usize> + '_ {
        self.pairs.iter().filter_map(move |&(a, b)| {
            if a == id {
                Some(b)
            } else if b == id {
                Some(a)
            } else {
                None
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartnerProbe {
    NoKpq,
    Partner(usize),
}

/// The current graph of the search: original adjacency with removed vertices
/// masked out. Every adjacency entry looked at counts as one probe.
struct Live<'a> {
    g: &'a Graph,
    alive: Vec<bool>,
    degree: Vec<usize>,
    probes: u64,
}

impl<'a> Live<'a> {
    fn new(g: &'a Graph) -> Self {
        Live {
            g,
            alive: vec![true; g.n()],
            degree: (0..g.n()).map(|v| g.degree(v)).collect(),
            probes: 0,
        }
    }

    fn neighbors(&mut self, v: usize) -> Vec<usize> {
        let adj = self.g.adjacency(v);
        self.probes += adj.len() as u64;
        adj.iter().map(|&(u, _)| u).filter(|&u| self.alive[u]).collect()
    }

    fn adjacent(&mut self, u: usize, v: usize) -> bool {
        self.probes += 1;
        self.g.adjacent(u, v)
    }

    fn common_count(&mut self, u: usize, v: usize) -> usize {
        let (a, b) = (self.g.adjacency(u), self.g.adjacency(v));
        self.probes += (a.len() + b.len()) as u64;
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    if self.alive[a[i].0] {
                        count += 1;
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Removes `v` and then every vertex whose live degree drops below `t`.
    fn remove(&mut self, v: usize, t: usize) {
        let mut stack = vec![v];
        while let Some(x) = stack.pop() {
            if !self.alive[x] {
                continue;
            }
            self.alive[x] = false;
            let adj = self.g.adjacency(x);
            self.probes += adj.len() as u64;
            for &(u, _) in adj {
                if self.alive[u] {
                    self.degree[u] -= 1;
                    if self.degree[u] < t {
                        stack.push(u);
                    }
                }
            }
        }
    }

    fn first_two(&mut self, v: usize, skip: usize) -> Vec<usize> {
        let adj = self.g.adjacency(v);
        let mut out = Vec::with_capacity(2);
        for &(u, _) in adj {
            self.probes += 1;
            if u != skip && self.alive[u] {
                out.push(u);
                if out.len() == 2 {
                    break;
                }
            }
        }
        out
    }

    fn partner(&mut self, v: usize, p: usize, q: usize) -> PartnerProbe {
        let threshold = (p.saturating_sub(2)).max(1) * q;
        for u in self.first_two(v, usize::MAX) {
            for z in self.first_two(u, v) {
                if self.common_count(v, z) >= threshold {
                    return PartnerProbe::Partner(z);
                }
            }
        }
        PartnerProbe::NoKpq
    }

    /// Canonical class lists of every `K^p_q` of the live graph containing `v`.
    ///
    /// The classes other than `v`'s cover exactly `t` neighbours of `v`; every
    /// non-adjacent pair among them has to share a class, so the components of
    /// the complement are packed into `p - 1` groups of `q`. The rest of `v`'s
    /// class comes from the vertices adjacent to all of them.
    fn kpq_at(&mut self, v: usize, p: usize, q: usize) -> Vec<Vec<Vec<usize>>> {
        let t = (p - 1) * q;
        let mut out = Vec::new();
        if !self.alive[v] {
            return out;
        }
        let nbrs = self.neighbors(v);
        if nbrs.len() < t {
            return out;
        }
        for x in combinations(&nbrs, t) {
            let mut complement = Vec::new();
            for i in 0..t {
                for j in i + 1..t {
                    if !self.adjacent(x[i], x[j]) {
                        complement.push((x[i], x[j]));
                    }
                }
            }
            let admissible = match q {
                1 => classify_pattern(&complement, &x) == Pattern::Empty,
                2 => matches!(classify_pattern(&complement, &x), Pattern::Empty | Pattern::Matching)
                    || single_edge(&complement),
                _ => true,
            };
            if !admissible {
                continue;
            }
            let Some(components) = components_within(&x, &complement, q) else {
                continue;
            };
            let mut mates = Vec::new();
            for y in self.neighbors(x[0]) {
                if y == v || x.contains(&y) {
                    continue;
                }
                if x[1..].iter().all(|&z| self.adjacent(y, z)) {
                    mates.push(y);
                }
            }
            if mates.len() + 1 < q {
                continue;
            }
            for groups in packings(&components, p - 1, q) {
                for chosen in combinations(&mates, q - 1) {
                    let mut own = chosen;
                    own.push(v);
                    let mut classes = groups.clone();
                    classes.push(own);
                    out.push(canonical(classes));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

fn single_edge(complement: &[(usize, usize)]) -> bool {
    complement.len() == 1
}

/// Components of the complement on `x`; `None` if one exceeds `q` vertices.
fn components_within(x: &[usize], complement: &[(usize, usize)], q: usize) -> Option<Vec<Vec<usize>>> {
    let idx: HashMap<usize, usize> = x.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut parent: Vec<usize> = (0..x.len()).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for &(a, b) in complement {
        let (ra, rb) = (find(&mut parent, idx[&a]), find(&mut parent, idx[&b]));
        if ra != rb {
            parent[ra] = rb;
        }
    }
    let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
    for (i, &v) in x.iter().enumerate() {
        groups.entry(find(&mut parent, i)).or_default().push(v);
    }
    let mut comps: Vec<Vec<usize>> = groups.into_values().collect();
    if comps.iter().any(|c| c.len() > q) {
        return None;
    }
    comps.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    Some(comps)
}

/// Every way to pack the components into `groups` groups of exactly `q`.
fn packings(components: &[Vec<usize>], groups: usize, q: usize) -> Vec<Vec<Vec<usize>>> {
    fn rec(
        comps: &[Vec<usize>],
        i: usize,
        bins: &mut Vec<Vec<usize>>,
        limit: usize,
        q: usize,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if i == comps.len() {
            if bins.len() == limit && bins.iter().all(|b| b.len() == q) {
                out.push(bins.clone());
            }
            return;
        }
        let size = comps[i].len();
        for b in 0..bins.len() {
            if bins[b].len() + size <= q {
                bins[b].extend_from_slice(&comps[i]);
                rec(comps, i + 1, bins, limit, q, out);
                let keep = bins[b].len() - size;
                bins[b].truncate(keep);
            }
        }
        if bins.len() < limit {
            bins.push(comps[i].clone());
            rec(comps, i + 1, bins, limit, q, out);
            bins.pop();
        }
    }
    let mut out = Vec::new();
    rec(components, 0, &mut Vec::new(), groups, q, &mut out);
    out
}

/// All `k`-subsets of `items`, order preserved.
pub(crate) fn combinations(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(items, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= items.len() {
        rec(items, k, 0, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Looks for a vertex with at least `max{p-2, 1} q` common neighbours with
/// `v`, probing two neighbours of `v` and two further neighbours of each.
/// `NoKpq` certifies that `v` lies in no `K^p_q`.
pub fn find_partner(g: &Graph, v: usize, p: usize, q: usize) -> Result<PartnerProbe> {
    check_shape(g, p, q)?;
    check_vertex(g, v)?;
    Ok(Live::new(g).partner(v, p, q))
}

/// Every `K^p_q` of `g` containing `v`.
pub fn find_kpq_at(g: &Graph, v: usize, p: usize, q: usize) -> Result<Vec<ForbiddenSubgraph>> {
    check_shape(g, p, q)?;
    check_vertex(g, v)?;
    let kind = Kind::of_shape(p, q);
    Ok(Live::new(g)
        .kpq_at(v, p, q)
        .into_iter()
        .enumerate()
        .map(|(i, c)| {
            let mut h = ForbiddenSubgraph::from_classes(g, kind, c);
            h.id = i;
            h
        })
        .collect())
}

fn check_shape(g: &Graph, p: usize, q: usize) -> Result<()> {
    if p < 2 || q < 1 || (p - 1) * q != g.t() {
        return Err(Error::Parameters(format!(
            "(p-1)*q must equal t: ({p}-1)*{q} != {}",
            g.t()
        )));
    }
    Ok(())
}

fn check_vertex(g: &Graph, v: usize) -> Result<()> {
    if v >= g.n() {
        return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
    }
    Ok(())
}

/// Output of [`find_all_forbidden`].
#[derive(Clone, Debug)]
pub struct Found {
    pub subgraphs: Vec<ForbiddenSubgraph>,
    pub intersections: IntersectionRecord,
    /// Adjacency entries inspected.
    pub probes: u64,
}

/// One pass of the linear-time search for a single shape.
fn search_shape(g: &Graph, p: usize, q: usize, probes: &mut u64) -> Vec<Vec<Vec<usize>>> {
    let t = g.t();
    let mut live = Live::new(g);
    let mut seen: HashSet<Vec<Vec<usize>>> = HashSet::new();
    let mut found: Vec<Vec<Vec<usize>>> = Vec::new();
    for v in 0..g.n() {
        if live.alive[v] && live.degree[v] < t {
            live.remove(v, t);
        }
    }
    for v in 0..g.n() {
        while live.alive[v] {
            match live.partner(v, p, q) {
                PartnerProbe::NoKpq => live.remove(v, t),
                PartnerProbe::Partner(v2) => {
                    let mut batch = live.kpq_at(v, p, q);
                    batch.extend(live.kpq_at(v2, p, q));
                    if batch.is_empty() {
                        let adj: Vec<usize> = live.neighbors(v);
                        let common: Vec<usize> = adj.into_iter().filter(|&x| live.adjacent(x, v2)).collect();
                        live.remove(v, t);
                        live.remove(v2, t);
                        for x in common {
                            live.remove(x, t);
                        }
                        continue;
                    }
                    let region: BTreeSet<usize> = batch.iter().flatten().flatten().copied().collect();
                    for &r in &region {
                        batch.extend(live.kpq_at(r, p, q));
                    }
                    for classes in batch {
                        if seen.insert(classes.clone()) {
                            found.push(classes);
                        }
                    }
                    for r in region {
                        live.remove(r, t);
                    }
                }
            }
        }
    }
    *probes += live.probes;
    found
}

/// All forbidden subgraphs of `g` for the variant, each once, with every
/// intersecting pair.
pub fn find_all_forbidden(g: &Graph, variant: Variant) -> Result<Found> {
    variant.validate(g.t())?;
    let mut probes = 0;
    let mut subgraphs = Vec::new();
    for (p, q) in variant.shapes(g.t()) {
        let kind = Kind::of_shape(p, q);
        let mut batch = search_shape(g, p, q, &mut probes);
        batch.sort();
        for classes in batch {
            let mut h = ForbiddenSubgraph::from_classes(g, kind, classes);
            h.id = subgraphs.len();
            subgraphs.push(h);
        }
    }
    let intersections = intersections_of(g, &subgraphs)?;
    Ok(Found {
        subgraphs,
        intersections,
        probes,
    })
}

fn intersections_of(g: &Graph, subgraphs: &[ForbiddenSubgraph]) -> Result<IntersectionRecord> {
    let mut by_vertex: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for h in subgraphs {
        for &v in &h.vertices {
            by_vertex[v].push(h.id);
        }
    }
    let mut pairs = BTreeSet::new();
    for list in &by_vertex {
        for (i, &a) in list.iter().enumerate() {
            for &b in &list[i + 1..] {
                pairs.insert((a.min(b), a.max(b)));
            }
        }
    }
    for &(a, b) in &pairs {
        let (ka, kb) = (subgraphs[a].kind, subgraphs[b].kind);
        if ka != kb && g.t() != 3 {
            return Err(Error::Internal(format!(
                "{} {a} and {} {b} intersect with t = {}",
                ka.name(),
                kb.name(),
                g.t()
            )));
        }
    }
    Ok(IntersectionRecord {
        pairs: pairs.into_iter().collect(),
    })
}

/// Groups `K^p_2`'s by vertex set; every group of two or more becomes a dense
/// record (ids continue after the list) and its members are marked absorbed.
pub fn find_dense(g: &Graph, kpq: &mut [ForbiddenSubgraph]) -> Vec<ForbiddenSubgraph> {
    let mut groups: std::collections::BTreeMap<Vec<usize>, Vec<usize>> = Default::default();
    for h in kpq.iter() {
        if matches!(h.kind, Kind::Kpq { q: 2, .. }) {
            groups.entry(h.vertices.clone()).or_default().push(h.id);
        }
    }
    let t = g.t();
    let mut dense = Vec::new();
    for (vertices, ids) in groups {
        if ids.len() < 2 {
            continue;
        }
        let id = kpq.len() + dense.len();
        let core: Vec<usize> = vertices
            .iter()
            .copied()
            .filter(|&a| g.degree(a) == t + 1 && g.neighbors(a).all(|u| vertices.binary_search(&u).is_ok()))
            .collect();
        let members: Vec<Vec<Vec<usize>>> = ids.iter().map(|&i| kpq[i].color_classes.clone()).collect();
        for &i in &ids {
            kpq[i].absorbed = Some(id);
        }
        let mut weight = 0;
        for (i, &u) in vertices.iter().enumerate() {
            for &v in &vertices[i + 1..] {
                weight += g.weight(u, v).unwrap_or(0);
            }
        }
        dense.push(ForbiddenSubgraph {
            id,
            kind: Kind::Dense,
            color_classes: members[0].clone(),
            vertices,
            core,
            members,
            weight,
            problematic: true,
            absorbed: None,
        });
    }
    dense
}

/// Marks every subgraph problematic or not and checks that problematic ones
/// (dense records included) are pairwise vertex-disjoint.
pub fn classify_problematic(subgraphs: &mut [ForbiddenSubgraph], intersections: &IntersectionRecord) -> Result<()> {
    let mut partners: Vec<Vec<usize>> = vec![Vec::new(); subgraphs.len()];
    for &(a, b) in &intersections.pairs {
        partners[a].push(b);
        partners[b].push(a);
    }
    for id in 0..subgraphs.len() {
        let h = &subgraphs[id];
        let flag = match h.kind {
            Kind::Dense => true,
            _ if h.absorbed.is_some() => false,
            kind => !partners[id].iter().any(|&o| {
                let other = &subgraphs[o];
                if other.absorbed.is_some() || other.is_dense() {
                    return false;
                }
                match (kind, other.kind) {
                    (Kind::Kt1, Kind::Ktt) => true,
                    (a, b) if a == b => h.weight <= other.weight,
                    _ => false,
                }
            }),
        };
        subgraphs[id].problematic = flag;
    }
    let mut owner: HashMap<usize, usize> = HashMap::new();
    for h in subgraphs.iter().filter(|h| h.problematic) {
        for &v in &h.vertices {
            if let Some(o) = owner.insert(v, h.id) {
                return Err(Error::Internal(format!(
                    "problematic subgraphs {o} and {} share vertex {v}",
                    h.id
                )));
            }
        }
    }
    Ok(())
}

/// Everything the solver needs to know about forbidden subgraphs.
#[derive(Clone, Debug, Serialize)]
pub struct Detection {
    pub variant: Variant,
    /// Forbidden subgraphs first, then dense records; `subgraphs[i].id == i`.
    pub subgraphs: Vec<ForbiddenSubgraph>,
    pub intersections: IntersectionRecord,
    pub probes: u64,
}

impl Detection {
    /// Actual forbidden subgraphs (dense records excluded).
    pub fn forbidden(&self) -> impl Iterator<Item = &ForbiddenSubgraph> {
        self.subgraphs.iter().filter(|h| !h.is_dense())
    }

    pub fn dense(&self) -> impl Iterator<Item = &ForbiddenSubgraph> {
        self.subgraphs.iter().filter(|h| h.is_dense())
    }
}

/// Detection, dense grouping and classification in one call.
pub fn analyze(g: &Graph, variant: Variant) -> Result<Detection> {
    let Found {
        mut subgraphs,
        intersections,
        probes,
    } = find_all_forbidden(g, variant)?;
    if matches!(variant, Variant::KpqFree { q: 2, p } if p >= 3) {
        let dense = find_dense(g, &mut subgraphs);
        subgraphs.extend(dense);
    }
    classify_problematic(&mut subgraphs, &intersections)?;
    Ok(Detection {
        variant,
        subgraphs,
        intersections,
        probes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

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

    fn octahedron() -> Graph {
        let mut e = Vec::new();
        for u in 0..6 {
            for v in u + 1..6 {
                if v != u + 3 {
                    e.push((u, v));
                }
            }
        }
        Graph::unweighted(6, 4, &e).unwrap()
    }

    #[test]
    fn partner_examples() {
        let c5 = Graph::unweighted(5, 3, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(find_partner(&c5, 0, 4, 1).unwrap(), PartnerProbe::NoKpq);
        let k4 = complete(4, 3);
        match find_partner(&k4, 0, 4, 1).unwrap() {
            PartnerProbe::Partner(u) => assert!(crate::graph::common_neighbors(&k4, 0, u).unwrap().len() >= 2),
            PartnerProbe::NoKpq => panic!("K_4 vertex has a partner"),
        }
        match find_partner(&k33(), 0, 2, 3).unwrap() {
            PartnerProbe::Partner(u) => assert!(u < 3 && u != 0),
            PartnerProbe::NoKpq => panic!("K_3,3 vertex has a partner"),
        }
    }

    #[test]
    fn local_search_examples() {
        assert_eq!(find_kpq_at(&complete(5, 4), 2, 5, 1).unwrap().len(), 1);
        assert_eq!(find_kpq_at(&complete(6, 4), 0, 5, 1).unwrap().len(), 5);
        let oct = find_kpq_at(&octahedron(), 0, 3, 2).unwrap();
        assert_eq!(oct.len(), 1);
        assert_eq!(oct[0].color_classes, vec![vec![0, 3], vec![1, 4], vec![2, 5]]);
    }

    #[test]
    fn restricted_examples() {
        let path: Vec<(usize, usize)> = (0..9).map(|i| (i, i + 1)).collect();
        let found = find_all_forbidden(&Graph::unweighted(10, 3, &path).unwrap(), Variant::Restricted).unwrap();
        assert!(found.subgraphs.is_empty());
        let mut two = Vec::new();
        for base in [0, 4] {
            for u in 0..4 {
                for v in u + 1..4 {
                    two.push((base + u, base + v));
                }
            }
        }
        let found = find_all_forbidden(&Graph::unweighted(8, 3, &two).unwrap(), Variant::Restricted).unwrap();
        assert_eq!(found.subgraphs.len(), 2);
        assert!(found.intersections.pairs.is_empty());
        let k5 = find_all_forbidden(&complete(5, 3), Variant::Restricted).unwrap();
        assert_eq!(k5.subgraphs.len(), 5);
        assert_eq!(k5.intersections.pairs.len(), 10);
    }

    #[test]
    fn dense_examples() {
        let k6 = complete(6, 4);
        let d = analyze(&k6, Variant::KpqFree { p: 3, q: 2 }).unwrap();
        assert_eq!(d.forbidden().count(), 15);
        let dense: Vec<_> = d.dense().collect();
        assert_eq!(dense.len(), 1);
        assert_eq!(dense[0].core, vec![0, 1, 2, 3, 4, 5]);
        let d = analyze(&octahedron(), Variant::KpqFree { p: 3, q: 2 }).unwrap();
        assert_eq!(d.dense().count(), 0);
        assert!(d.subgraphs[0].problematic);
    }

    #[test]
    fn classification_examples() {
        let k5 = analyze(&complete(5, 3), Variant::Restricted).unwrap();
        assert!(k5.subgraphs.iter().all(|h| !h.problematic));
        // K_3,3 on {0,1,2}x{3,4,5} plus edges 0-1 and 3-4 closes the K_4 {0,1,3,4}.
        let mut e = Vec::new();
        for a in 0..3 {
            for b in 3..6 {
                e.push((a, b));
            }
        }
        e.push((0, 1));
        e.push((3, 4));
        let g = Graph::unweighted(6, 3, &e).unwrap();
        let d = analyze(&g, Variant::Restricted).unwrap();
        let clique = d.subgraphs.iter().find(|h| h.kind == Kind::Kt1).unwrap();
        assert_eq!(clique.vertices, vec![0, 1, 3, 4]);
        assert!(!clique.problematic);
        assert!(d.subgraphs.iter().any(|h| h.kind == Kind::Ktt && h.problematic));
    }
}
