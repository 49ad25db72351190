//! Simple undirected graphs over dense vertex identifiers `0..n`.
//!
//! A [`Graph`] is immutable once built. Use [`GraphBuilder`] to assemble one
//! edge at a time; the builder deduplicates repeated edges so that edge
//! families described as sets can be inserted naively.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::GraphError;

/// Vertex identifier. Identifiers are dense: a graph on `n` vertices uses `0..n`.
pub type Vertex = usize;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    edge_count: usize,
    labels: BTreeMap<Vertex, String>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            edge_count: 0,
            labels: BTreeMap::new(),
        }
    }

    /// Builds a graph from an edge list, rejecting self-loops, repeated
    /// edges and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            if !b.add_edge(u, v)? {
                let (a, c) = if u < v { (u, v) } else { (v, u) };
                return Err(GraphError::DuplicateEdge(a, c));
            }
        }
        Ok(b.build())
    }

    pub fn complete(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            for v in u + 1..n {
                b.add_edge(u, v).expect("in range");
            }
        }
        b.build()
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let mut b = GraphBuilder::new(n);
        for u in 0..n {
            b.add_edge(u, (u + 1) % n).expect("in range");
        }
        b.build()
    }

    pub fn path(n: usize) -> Self {
        let mut b = GraphBuilder::new(n);
        for u in 1..n {
            b.add_edge(u - 1, u).expect("in range");
        }
        b.build()
    }

    /// Star `K_{1,leaves}` with centre `0`.
    pub fn star(leaves: usize) -> Self {
        let mut b = GraphBuilder::new(leaves + 1);
        for v in 1..=leaves {
            b.add_edge(0, v).expect("in range");
        }
        b.build()
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    /// Sorted neighbour list of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.adj.len()
    }

    pub fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(GraphError::UnknownVertex {
                vertex: v,
                n: self.vertex_count(),
            })
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, ns)| {
            ns.iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    pub fn label(&self, v: Vertex) -> Option<&str> {
        self.labels.get(&v).map(String::as_str)
    }

    pub fn labels(&self) -> &BTreeMap<Vertex, String> {
        &self.labels
    }

    /// First vertex carrying `label`, if any.
    pub fn find_label(&self, label: &str) -> Option<Vertex> {
        self.labels
            .iter()
            .find(|(_, l)| l.as_str() == label)
            .map(|(&v, _)| v)
    }

    /// Human readable name: the label if present, the identifier otherwise.
    pub fn name(&self, v: Vertex) -> String {
        self.label(v).map_or_else(|| v.to_string(), str::to_owned)
    }

    pub fn with_labels(mut self, labels: BTreeMap<Vertex, String>) -> Result<Self, GraphError> {
        for &v in labels.keys() {
            self.check_vertex(v)?;
        }
        self.labels = labels;
        Ok(self)
    }

    /// Returns a copy of this graph with one extra edge.
    pub fn with_edge(&self, u: Vertex, v: Vertex) -> Result<Self, GraphError> {
        let mut b = GraphBuilder::from_graph(self);
        if !b.add_edge(u, v)? {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        Ok(b.build())
    }

    /// Breadth-first distances from `source`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, source: Vertex) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Vertices within distance `radius` of `v`, including `v`, sorted.
    pub fn ball(&self, v: Vertex, radius: usize) -> Vec<Vertex> {
        let mut seen = BTreeSet::from([v]);
        let mut frontier = vec![v];
        for _ in 0..radius {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in &self.adj[u] {
                    if seen.insert(w) {
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        seen.into_iter().collect()
    }

    /// True when `u` and `v` are distinct and at distance at most two.
    pub fn within_two(&self, u: Vertex, v: Vertex) -> bool {
        if u == v {
            return false;
        }
        if self.has_edge(u, v) {
            return true;
        }
        let (a, b) = (&self.adj[u], &self.adj[v]);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return true,
            }
        }
        false
    }
}

/// Incremental constructor for [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    adj: Vec<BTreeSet<Vertex>>,
    labels: BTreeMap<Vertex, String>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            adj: vec![BTreeSet::new(); n],
            labels: BTreeMap::new(),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            adj: g
                .adj
                .iter()
                .map(|ns| ns.iter().copied().collect())
                .collect(),
            labels: g.labels.clone(),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    /// Appends a fresh vertex and returns its identifier.
    pub fn add_vertex(&mut self, label: Option<String>) -> Vertex {
        let v = self.adj.len();
        self.adj.push(BTreeSet::new());
        if let Some(l) = label {
            self.labels.insert(v, l);
        }
        v
    }

    pub fn set_label(&mut self, v: Vertex, label: impl Into<String>) {
        self.labels.insert(v, label.into());
    }

    /// Inserts `uv`. Returns `Ok(false)` if the edge was already present.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        let n = self.adj.len();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::UnknownVertex { vertex: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        let fresh = self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(fresh)
    }

    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        let present = u < self.adj.len() && self.adj[u].remove(&v);
        if present {
            self.adj[v].remove(&u);
        }
        present
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adj.get(u).is_some_and(|s| s.contains(&v))
    }

    pub fn build(self) -> Graph {
        let adj: Vec<Vec<Vertex>> = self
            .adj
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        let edge_count = adj.iter().map(Vec::len).sum::<usize>() / 2;
        Graph {
            adj,
            edge_count,
            labels: self.labels,
        }
    }
}

/// The square of `g`: same vertices, `u ~ v` iff `0 < dist(u, v) <= 2`.
pub fn square(g: &Graph) -> Graph {
    let mut b = GraphBuilder::from_graph(g);
    for w in g.vertices() {
        let ns = g.neighbors(w);
        for (i, &x) in ns.iter().enumerate() {
            for &y in &ns[i + 1..] {
                b.add_edge(x, y)
                    .expect("neighbours are distinct vertices of g");
            }
        }
    }
    b.build()
}

/// Sorted, deduplicated copy of a vertex set after validating membership.
pub fn normalize_set(g: &Graph, set: &[Vertex]) -> Result<Vec<Vertex>, GraphError> {
    let mut out = set.to_vec();
    for &v in &out {
        g.check_vertex(v)?;
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// `‖A‖`: the number of edges of `g` with both ends in `set`.
pub fn edges_within(g: &Graph, set: &[Vertex]) -> Result<usize, GraphError> {
    let set = normalize_set(g, set)?;
    let mut inside = vec![false; g.vertex_count()];
    for &v in &set {
        inside[v] = true;
    }
    let twice: usize = set
        .iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| inside[w]).count())
        .sum();
    Ok(twice / 2)
}

/// Subgraph induced by `set`. Vertices are renumbered `0..|set|` in
/// increasing order of their identifier in `g`; labels are carried over.
pub fn induced_subgraph(g: &Graph, set: &[Vertex]) -> Result<Graph, GraphError> {
    let set = normalize_set(g, set)?;
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in set.iter().enumerate() {
        index[v] = i;
    }
    let mut b = GraphBuilder::new(set.len());
    for (i, &v) in set.iter().enumerate() {
        for &w in g.neighbors(v) {
            let j = index[w];
            if j != usize::MAX && i < j {
                b.add_edge(i, j)?;
            }
        }
        if let Some(l) = g.label(v) {
            b.set_label(i, l);
        }
    }
    Ok(b.build())
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct DegreeHistogram {
    /// degree -> number of vertices with that degree
    pub counts: BTreeMap<usize, usize>,
    /// number of vertices of degree at least three
    pub n3: usize,
}

pub fn degree_histogram(g: &Graph) -> DegreeHistogram {
    let mut counts = BTreeMap::new();
    for v in g.vertices() {
        *counts.entry(g.degree(v)).or_insert(0) += 1;
    }
    let n3 = counts.range(3..).map(|(_, &c)| c).sum();
    DegreeHistogram { counts, n3 }
}
