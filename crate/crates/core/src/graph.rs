//! Simple graphs with doubled integer weights, annotated multigraphs and
//! the small neighbourhood queries used by detection.

use serde::Serialize;

use crate::error::{Error, Result};

/// An undirected edge. `weight` holds twice the input weight.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub weight: i64,
}

impl Edge {
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Simple undirected graph whose maximum degree is at most `t + 1`.
#[derive(Clone, Debug)]
pub struct Graph {
    n: usize,
    t: usize,
    edges: Vec<Edge>,
    adjacency: Vec<Vec<(usize, usize)>>,
}

impl Graph {
    /// Builds a graph from input weights, which are doubled on the way in.
    pub fn new(n: usize, t: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        if t < 3 {
            return Err(Error::Parameters(format!("t must be at least 3, got {t}")));
        }
        let mut adjacency: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
        let mut stored = Vec::with_capacity(edges.len());
        for (id, &(u, v, w)) in edges.iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if w < 0 {
                return Err(Error::NegativeWeight { u, v, weight: w });
            }
            let weight = w
                .checked_mul(2)
                .ok_or_else(|| Error::Overflow(format!("weight {w} on edge ({u}, {v})")))?;
            let (a, b) = if u < v { (u, v) } else { (v, u) };
            stored.push(Edge { u: a, v: b, weight });
            adjacency[a].push((b, id));
            adjacency[b].push((a, id));
        }
        for (x, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0].0 == w[1].0) {
                return Err(Error::ParallelEdge(x.min(w[0].0), x.max(w[0].0)));
            }
            if list.len() > t + 1 {
                return Err(Error::DegreeBound {
                    vertex: x,
                    degree: list.len(),
                    bound: t + 1,
                });
            }
        }
        Ok(Graph {
            n,
            t,
            edges: stored,
            adjacency,
        })
    }

    /// Builds a graph in which every edge has weight 1.
    pub fn unweighted(n: usize, t: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let weighted: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Graph::new(n, t, &weighted)
    }

    /// Same vertices and edges, new input weights (one per edge id).
    pub fn with_weights(&self, weights: &[i64]) -> Result<Self> {
        if weights.len() != self.edges.len() {
            return Err(Error::Parameters(format!(
                "expected {} weights, got {}",
                self.edges.len(),
                weights.len()
            )));
        }
        let list: Vec<_> = self
            .edges
            .iter()
            .zip(weights)
            .map(|(e, &w)| (e.u, e.v, w))
            .collect();
        Graph::new(self.n, self.t, &list)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn t(&self) -> usize {
        self.t
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> Edge {
        self.edges[id]
    }

    /// Neighbours of `v` with the connecting edge id, sorted by neighbour.
    pub fn adjacency(&self, v: usize) -> &[(usize, usize)] {
        &self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[v].iter().map(|&(x, _)| x)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edge_between(&self, u: usize, v: usize) -> Option<usize> {
        let (a, b) = if self.degree(u) <= self.degree(v) {
            (u, v)
        } else {
            (v, u)
        };
        self.adjacency[a]
            .iter()
            .find(|&&(x, _)| x == b)
            .map(|&(_, id)| id)
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.edge_between(u, v).is_some()
    }

    /// Doubled weight of the edge `(u, v)`, if present.
    pub fn weight(&self, u: usize, v: usize) -> Option<i64> {
        self.edge_between(u, v).map(|id| self.edges[id].weight)
    }

    /// Doubled total weight of all edges.
    pub fn total_weight(&self) -> i64 {
        self.edges.iter().map(|e| e.weight).sum()
    }

    /// Input (undoubled) weights indexed by edge id.
    pub fn input_weights(&self) -> Vec<i64> {
        self.edges.iter().map(|e| e.weight / 2).collect()
    }

    fn check(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }
}

/// Sorted list of common neighbours of `u` and `v`.
pub fn common_neighbors(g: &Graph, u: usize, v: usize) -> Result<Vec<usize>> {
    g.check(u)?;
    g.check(v)?;
    if u == v {
        return Err(Error::Parameters(format!(
            "common neighbours need distinct vertices, got {u} twice"
        )));
    }
    let (a, b) = (g.adjacency(u), g.adjacency(v));
    let (mut i, mut j) = (0, 0);
    let mut out = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].0.cmp(&b[j].0) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i].0);
                i += 1;
                j += 1;
            }
        }
    }
    Ok(out)
}

/// All non-adjacent pairs `(x, y)` with `x < y` inside the vertex set `a`.
pub fn induced_complement(g: &Graph, a: &[usize]) -> Result<Vec<(usize, usize)>> {
    for &x in a {
        g.check(x)?;
    }
    let mut set = a.to_vec();
    set.sort_unstable();
    set.dedup();
    let mut out = Vec::new();
    for (i, &x) in set.iter().enumerate() {
        let adj = g.adjacency(x);
        let mut k = 0;
        for &y in &set[i + 1..] {
            while k < adj.len() && adj[k].0 < y {
                k += 1;
            }
            if k == adj.len() || adj[k].0 != y {
                out.push((x, y));
            }
        }
    }
    Ok(out)
}

/// Shape of a small edge set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Pattern {
    Empty,
    /// Every edge shares one vertex. A single edge has both endpoints as centers.
    Star { centers: Vec<usize> },
    Matching,
    Other,
}

/// Classifies the complement edge list `edges` over vertex set `a`.
pub fn classify_pattern(edges: &[(usize, usize)], a: &[usize]) -> Pattern {
    debug_assert!(edges.iter().all(|(x, y)| a.contains(x) && a.contains(y)));
    match edges {
        [] => Pattern::Empty,
        [(x, y)] => {
            let mut centers = vec![*x, *y];
            centers.sort_unstable();
            Pattern::Star { centers }
        }
        [(x, y), rest @ ..] => {
            for c in [*x, *y] {
                if rest.iter().all(|&(p, q)| p == c || q == c) {
                    return Pattern::Star { centers: vec![c] };
                }
            }
            let mut seen: Vec<usize> = edges.iter().flat_map(|&(p, q)| [p, q]).collect();
            seen.sort_unstable();
            let len = seen.len();
            seen.dedup();
            if seen.len() == len {
                Pattern::Matching
            } else {
                Pattern::Other
            }
        }
    }
}

/// Provenance of an auxiliary multigraph edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EdgeTag {
    /// An edge of the input graph, by edge id.
    Original(usize),
    /// A gadget edge standing for half of an input edge at `vertex`.
    HalfEdge { gadget: usize, vertex: usize },
    /// Any other gadget edge.
    GadgetInternal { gadget: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MultiEdge {
    pub u: usize,
    pub v: usize,
    pub weight: i64,
    pub tag: EdgeTag,
}

impl MultiEdge {
    pub fn other(&self, x: usize) -> usize {
        if self.u == x {
            self.v
        } else {
            self.u
        }
    }
}

/// Undirected multigraph without loops. Weights may be negative.
#[derive(Clone, Debug, Default)]
pub struct MultiGraph {
    edges: Vec<MultiEdge>,
    incidence: Vec<Vec<usize>>,
}

impl MultiGraph {
    pub fn new(n: usize) -> Self {
        MultiGraph {
            edges: Vec::new(),
            incidence: vec![Vec::new(); n],
        }
    }

    /// Multigraph with untagged edges, each marked `Original(index)`.
    pub fn from_edges(n: usize, edges: &[(usize, usize, i64)]) -> Result<Self> {
        let mut g = MultiGraph::new(n);
        for (i, &(u, v, w)) in edges.iter().enumerate() {
            g.add_edge(u, v, w, EdgeTag::Original(i))?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> usize {
        self.incidence.push(Vec::new());
        self.incidence.len() - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize, weight: i64, tag: EdgeTag) -> Result<usize> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::VertexOutOfRange { vertex: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let id = self.edges.len();
        self.edges.push(MultiEdge { u, v, weight, tag });
        self.incidence[u].push(id);
        self.incidence[v].push(id);
        Ok(id)
    }

    pub fn n(&self) -> usize {
        self.incidence.len()
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> MultiEdge {
        self.edges[id]
    }

    /// Ids of edges incident to `v`.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn max_abs_weight(&self) -> i64 {
        self.edges.iter().map(|e| e.weight.abs()).max().unwrap_or(0)
    }
}

/// Per-vertex capacity interval `[lower, upper]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CapacityVector {
    pub lower: Vec<usize>,
    pub upper: Vec<usize>,
}

impl CapacityVector {
    pub fn new(lower: Vec<usize>, upper: Vec<usize>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::Parameters("capacity vectors differ in length".into()));
        }
        if let Some(v) = (0..lower.len()).find(|&v| lower[v] > upper[v]) {
            return Err(Error::Parameters(format!(
                "vertex {v} has lower bound {} above upper bound {}",
                lower[v], upper[v]
            )));
        }
        Ok(CapacityVector { lower, upper })
    }

    pub fn push(&mut self, lower: usize, upper: usize) {
        debug_assert!(lower <= upper);
        self.lower.push(lower);
        self.upper.push(upper);
    }

    pub fn len(&self) -> usize {
        self.lower.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lower.is_empty()
    }

    /// Clamps every upper bound to the vertex degree.
    pub fn normalize(&mut self, g: &MultiGraph) {
        for v in 0..self.len() {
            self.upper[v] = self.upper[v].min(g.degree(v));
        }
    }

    /// True when some vertex cannot possibly meet its lower bound.
    pub fn trivially_infeasible(&self, g: &MultiGraph) -> bool {
        (0..self.len()).any(|v| self.lower[v] > self.upper[v].min(g.degree(v)))
    }

    pub fn sum_upper(&self) -> usize {
        self.upper.iter().sum()
    }
}
