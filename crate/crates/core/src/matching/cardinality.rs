//! Maximum cardinality matching in general graphs, with a set of vertices
//! that must stay covered.
//!
//! Edmonds' search with blossom shrinking over base pointers. The first phase
//! covers every required vertex: from an exposed required root the search
//! stops either at an exposed vertex (augment) or at an outer vertex that is
//! not required (flip the even alternating path, exposing that vertex instead).
//! The second phase augments from every remaining exposed vertex. Augmenting
//! never exposes a covered vertex, so the result is a maximum matching that
//! covers the required set. After a failed second-phase search the whole
//! alternating tree is discarded for the rest of the run.

use std::collections::VecDeque;

use crate::error::{Error, Result};

const NONE: usize = usize::MAX;

#[derive(Clone, Debug)]
pub struct CardinalityMatching {
    /// Mate of every vertex.
    pub mate: Vec<Option<usize>>,
    pub size: usize,
}

/// Maximum matching of the simple graph on `n` vertices covering every `v`
/// with `required[v]`, starting from `initial` pairs when given.
///
/// Returns [`Error::Infeasible`] when no matching covers the required set.
pub fn max_matching_covering(
    n: usize,
    edges: &[(usize, usize)],
    required: &[bool],
    initial: &[(usize, usize)],
) -> Result<CardinalityMatching> {
    if required.len() != n {
        return Err(Error::Parameters("required mask has wrong length".into()));
    }
    let mut search = Search::new(n, edges)?;
    for &(u, v) in initial {
        if search.mate[u] != NONE || search.mate[v] != NONE || !search.has_edge(u, v) {
            return Err(Error::Parameters(format!(
                "initial pair ({u}, {v}) is not a matching edge"
            )));
        }
        search.mate[u] = v;
        search.mate[v] = u;
    }
    let mut order: Vec<usize> = (0..n).filter(|&v| required[v]).collect();
    order.extend((0..n).filter(|&v| !required[v]));
    for &v in &order {
        if search.mate[v] != NONE {
            continue;
        }
        let free = search.adj(v).iter().copied().find(|&u| search.mate[u] == NONE);
        if let Some(u) = free {
            search.mate[u] = v;
            search.mate[v] = u;
        }
    }
    for v in 0..n {
        if required[v] && search.mate[v] == NONE && !search.cover(v, required) {
            return Err(Error::Infeasible);
        }
    }
    for v in 0..n {
        if search.mate[v] == NONE && !search.dead[v] && !search.augment_from(v) {
            search.discard_tree();
        }
        search.reset();
    }
    let mate: Vec<Option<usize>> = search
        .mate
        .iter()
        .map(|&u| if u == NONE { None } else { Some(u) })
        .collect();
    let size = mate.iter().filter(|m| m.is_some()).count() / 2;
    Ok(CardinalityMatching { mate, size })
}

struct Search {
    start: Vec<usize>,
    targets: Vec<usize>,
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    outer: Vec<bool>,
    in_blossom: Vec<bool>,
    stamp: Vec<u32>,
    lca_mark: Vec<u32>,
    clock: u32,
    dead: Vec<bool>,
    touched: Vec<usize>,
    queue: VecDeque<usize>,
}

enum Found {
    Exposed(usize),
    Releasable(usize),
    Nothing,
}

impl Search {
    fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut degree = vec![0usize; n + 1];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: u.max(v),
                    n,
                });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            degree[u] += 1;
            degree[v] += 1;
        }
        let mut start = vec![0usize; n + 1];
        for v in 0..n {
            start[v + 1] = start[v] + degree[v];
        }
        let mut fill = start.clone();
        let mut targets = vec![0usize; start[n]];
        for &(u, v) in edges {
            targets[fill[u]] = v;
            fill[u] += 1;
            targets[fill[v]] = u;
            fill[v] += 1;
        }
        Ok(Search {
            start,
            targets,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            outer: vec![false; n],
            in_blossom: vec![false; n],
            stamp: vec![0; n],
            lca_mark: vec![0; n],
            clock: 0,
            dead: vec![false; n],
            touched: Vec::new(),
            queue: VecDeque::new(),
        })
    }

    fn adj(&self, v: usize) -> &[usize] {
        &self.targets[self.start[v]..self.start[v + 1]]
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj(u).contains(&v)
    }

    fn touch(&mut self, v: usize) {
        if self.stamp[v] != u32::MAX {
            self.stamp[v] = u32::MAX;
            self.touched.push(v);
        }
    }

    fn reset(&mut self) {
        for &v in &self.touched {
            self.parent[v] = NONE;
            self.base[v] = v;
            self.outer[v] = false;
            self.in_blossom[v] = false;
            self.stamp[v] = 0;
        }
        self.touched.clear();
        self.queue.clear();
    }

    fn discard_tree(&mut self) {
        for i in 0..self.touched.len() {
            let v = self.touched[i];
            self.dead[v] = true;
        }
    }

    fn lca(&mut self, a: usize, b: usize) -> usize {
        if self.clock == u32::MAX {
            self.lca_mark.iter_mut().for_each(|m| *m = 0);
            self.clock = 0;
        }
        self.clock += 1;
        let mark = self.clock;
        let mut a = a;
        loop {
            a = self.base[a];
            self.lca_mark[a] = mark;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        let mut b = b;
        loop {
            b = self.base[b];
            if self.lca_mark[b] == mark {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, v: usize, b: usize, child: usize) {
        let (mut v, mut child) = (v, child);
        while self.base[v] != b {
            let m = self.mate[v];
            let bv = self.base[v];
            let bm = self.base[m];
            self.in_blossom[bv] = true;
            self.in_blossom[bm] = true;
            self.parent[v] = child;
            child = m;
            v = self.parent[m];
        }
    }

    /// Alternating search from `root`. With `required` given, outer vertices
    /// outside that set also end the search.
    fn grow(&mut self, root: usize, required: Option<&[bool]>) -> Found {
        self.touch(root);
        self.outer[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for idx in self.start[v]..self.start[v + 1] {
                let to = self.targets[idx];
                if self.dead[to] || self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                let to_outer = to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE);
                if to_outer {
                    let cur = self.lca(v, to);
                    for i in 0..self.touched.len() {
                        let x = self.touched[i];
                        self.in_blossom[x] = false;
                    }
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..self.touched.len() {
                        let x = self.touched[i];
                        if self.in_blossom[self.base[x]] {
                            self.base[x] = cur;
                            if !self.outer[x] {
                                self.outer[x] = true;
                                self.queue.push_back(x);
                                if let Some(req) = required {
                                    if !req[x] && x != root {
                                        return Found::Releasable(x);
                                    }
                                }
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.touch(to);
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Found::Exposed(to);
                    }
                    let m = self.mate[to];
                    self.touch(m);
                    self.outer[m] = true;
                    self.queue.push_back(m);
                    if let Some(req) = required {
                        if !req[m] {
                            return Found::Releasable(m);
                        }
                    }
                }
            }
        }
        Found::Nothing
    }

    fn flip_from(&mut self, v: usize) {
        let mut v = v;
        while v != NONE {
            let pv = self.parent[v];
            let ppv = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = ppv;
        }
    }

    fn augment_from(&mut self, root: usize) -> bool {
        match self.grow(root, None) {
            Found::Exposed(v) => {
                self.flip_from(v);
                true
            }
            _ => false,
        }
    }

    fn cover(&mut self, root: usize, required: &[bool]) -> bool {
        let found = self.grow(root, Some(required));
        let ok = match found {
            Found::Exposed(v) => {
                self.flip_from(v);
                true
            }
            Found::Releasable(u) => {
                let x = self.mate[u];
                self.mate[u] = NONE;
                self.mate[x] = NONE;
                self.flip_from(x);
                true
            }
            Found::Nothing => false,
        };
        self.reset();
        ok
    }
}
