//! Simple undirected graphs with contiguous vertex ids.
//!
//! Graphs are immutable: every operator returns a fresh graph, and the
//! operators that renumber vertices (identification, vertex deletion,
//! disjoint union) also return a [`VertexMap`] so callers can track where
//! their vertices went.

use std::collections::BTreeMap;
use std::collections::BTreeSet;
use std::fmt;

use serde::ser::{Serialize, SerializeSeq, SerializeStruct, Serializer};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range")]
    InvalidVertex(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("self-loop at vertex {0} not allowed")]
    SelfLoop(usize),
    #[error("edge {0}-{1} already present")]
    DuplicateEdge(usize, usize),
    #[error("edge {0}-{1} not present")]
    MissingEdge(usize, usize),
    #[error("cannot identify {0} and {1}: they are adjacent")]
    IdentifyAdjacent(usize, usize),
    #[error("cannot identify {0} and {1}: common neighbor {2} would create a double edge")]
    IdentifyCommonNeighbor(usize, usize, usize),
}

/// Total or partial map from the vertex ids of an input graph to the ids
/// of a derived graph. Only vertex deletion leaves a hole.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexMap {
    images: Vec<Option<usize>>,
}

impl VertexMap {
    pub fn identity(n: usize) -> Self {
        Self {
            images: (0..n).map(Some).collect(),
        }
    }

    pub(crate) fn from_images(images: Vec<Option<usize>>) -> Self {
        Self { images }
    }

    /// Number of vertices in the input graph.
    pub fn input_len(&self) -> usize {
        self.images.len()
    }

    pub fn image(&self, v: usize) -> Option<usize> {
        self.images.get(v).copied().flatten()
    }

    /// Like [`VertexMap::image`] but panics on a deleted or out-of-range
    /// vertex; for callers that know the map is total.
    pub fn apply(&self, v: usize) -> usize {
        self.image(v)
            .unwrap_or_else(|| panic!("vertex {v} has no image"))
    }

    /// `self` followed by `next`.
    pub fn compose(&self, next: &VertexMap) -> VertexMap {
        VertexMap {
            images: self
                .images
                .iter()
                .map(|img| img.and_then(|m| next.image(m)))
                .collect(),
        }
    }
}

/// Multiset of edge endpoint-degree pairs `{d_u, d_v}`, keyed with the
/// smaller degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Census {
    counts: BTreeMap<(usize, usize), u64>,
}

impl Census {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, a: usize, b: usize) {
        self.add_count(a, b, 1);
    }

    /// Adds `count` edges with endpoint degrees `{a, b}`; zero counts are
    /// dropped so predicted and observed censuses compare cleanly.
    pub fn add_count(&mut self, a: usize, b: usize, count: u64) {
        if count == 0 {
            return;
        }
        let key = (a.min(b), a.max(b));
        *self.counts.entry(key).or_insert(0) += count;
    }

    pub fn get(&self, a: usize, b: usize) -> u64 {
        let key = (a.min(b), a.max(b));
        self.counts.get(&key).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), u64)> + '_ {
        self.counts.iter().map(|(k, v)| (*k, *v))
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }
}

impl fmt::Display for Census {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((a, b), count) in &self.counts {
            if !first {
                writeln!(f)?;
            }
            first = false;
            write!(f, "{{{a},{b}}}: {count}")?;
        }
        Ok(())
    }
}

impl Serialize for Census {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        struct Entry {
            degrees: (usize, usize),
            count: u64,
        }
        impl Serialize for Entry {
            fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
                let mut st = serializer.serialize_struct("Entry", 2)?;
                st.serialize_field("degrees", &[self.degrees.0, self.degrees.1])?;
                st.serialize_field("count", &self.count)?;
                st.end()
            }
        }
        let mut seq = serializer.serialize_seq(Some(self.counts.len()))?;
        for ((a, b), count) in &self.counts {
            seq.serialize_element(&Entry {
                degrees: (*a, *b),
                count: *count,
            })?;
        }
        seq.end()
    }
}

/// Simple undirected graph. Neighbor sets are ordered so every iteration
/// order, and hence every derived artifact, is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<BTreeSet<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Self {
            adj: vec![BTreeSet::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an explicit edge list; rejects out-of-range
    /// endpoints, self-loops and duplicate edges.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Cycle `C_q`, `q ≥ 3`, with vertices in cyclic order.
    pub fn cycle(q: usize) -> Result<Self, GraphError> {
        if q < 3 {
            return Err(GraphError::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {q}"
            )));
        }
        let mut g = Self::empty(q);
        for i in 0..q {
            g.insert_edge(i, (i + 1) % q)?;
        }
        Ok(g)
    }

    /// Complete graph `K_n`, `n ≥ 1`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter(
                "complete graph needs at least 1 vertex".into(),
            ));
        }
        let mut g = Self::empty(n);
        for u in 0..n {
            for v in (u + 1)..n {
                g.insert_edge(u, v)?;
            }
        }
        Ok(g)
    }

    /// Path `P_n` on `n ≥ 1` vertices (so `n − 1` edges).
    pub fn path(n: usize) -> Result<Self, GraphError> {
        if n < 1 {
            return Err(GraphError::InvalidParameter(
                "path needs at least 1 vertex".into(),
            ));
        }
        let mut g = Self::empty(n);
        for i in 1..n {
            g.insert_edge(i - 1, i)?;
        }
        Ok(g)
    }

    /// Star `K_{1,n}`: center 0 and `n` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Self::empty(leaves + 1);
        for i in 1..=leaves {
            g.insert_edge(0, i).expect("star edges are distinct");
        }
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        v < self.adj.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj.get(u).is_some_and(|set| set.contains(&v))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, set)| {
            set.iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if self.has_vertex(v) {
            Ok(())
        } else {
            Err(GraphError::InvalidVertex(v))
        }
    }

    pub(crate) fn insert_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.adj[u].contains(&v) {
            return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        self.edge_count += 1;
        Ok(())
    }

    /// Copy of the graph with one extra edge.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        let mut g = self.clone();
        g.insert_edge(u, v)?;
        Ok(g)
    }

    /// Copy of the graph without the edge `u-v`.
    pub fn delete_edge(&self, u: usize, v: usize) -> Result<Self, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(GraphError::MissingEdge(u.min(v), u.max(v)));
        }
        let mut g = self.clone();
        g.adj[u].remove(&v);
        g.adj[v].remove(&u);
        g.edge_count -= 1;
        Ok(g)
    }

    /// Removes vertex `v` and its incident edges; remaining ids shift down
    /// to stay contiguous, as recorded by the returned map.
    pub fn delete_vertex(&self, v: usize) -> Result<(Self, VertexMap), GraphError> {
        self.check_vertex(v)?;
        let n = self.vertex_count();
        let images: Vec<Option<usize>> = (0..n)
            .map(|w| match w.cmp(&v) {
                std::cmp::Ordering::Less => Some(w),
                std::cmp::Ordering::Equal => None,
                std::cmp::Ordering::Greater => Some(w - 1),
            })
            .collect();
        let map = VertexMap::from_images(images);
        let mut g = Self::empty(n - 1);
        for (a, b) in self.edges() {
            if a == v || b == v {
                continue;
            }
            g.insert_edge(map.apply(a), map.apply(b))?;
        }
        Ok((g, map))
    }

    /// Identifies `u` and `v` into a single vertex (point-attachment).
    ///
    /// The inputs must be distinct, non-adjacent and without common
    /// neighbors, so the merged graph is again simple. The merged vertex
    /// keeps the smaller id; ids above the larger one shift down.
    pub fn identify(&self, u: usize, v: usize) -> Result<(Self, VertexMap), GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::InvalidParameter(format!(
                "cannot identify vertex {u} with itself"
            )));
        }
        if self.has_edge(u, v) {
            return Err(GraphError::IdentifyAdjacent(u, v));
        }
        if let Some(w) = self.adj[u].intersection(&self.adj[v]).next() {
            return Err(GraphError::IdentifyCommonNeighbor(u, v, *w));
        }
        let (keep, drop) = (u.min(v), u.max(v));
        let n = self.vertex_count();
        let images: Vec<Option<usize>> = (0..n)
            .map(|w| {
                if w == drop {
                    Some(keep)
                } else if w > drop {
                    Some(w - 1)
                } else {
                    Some(w)
                }
            })
            .collect();
        let map = VertexMap::from_images(images);
        let mut g = Self::empty(n - 1);
        for (a, b) in self.edges() {
            g.insert_edge(map.apply(a), map.apply(b))?;
        }
        Ok((g, map))
    }

    /// True iff the graph has exactly one connected component (vacuously
    /// true on zero or one vertices).
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = vec![0usize];
        seen[0] = true;
        let mut reached = 1usize;
        while let Some(v) = queue.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    queue.push(w);
                }
            }
        }
        reached == n
    }

    /// Degree-pair census over all edges.
    pub fn edge_census(&self) -> Census {
        let mut census = Census::new();
        for (u, v) in self.edges() {
            census.add(self.degree(u), self.degree(v));
        }
        census
    }
}

/// Disjoint union; component `i` is embedded via the `i`-th returned map.
pub fn disjoint_union(graphs: &[Graph]) -> (Graph, Vec<VertexMap>) {
    let total: usize = graphs.iter().map(Graph::vertex_count).sum();
    let mut g = Graph::empty(total);
    let mut maps = Vec::with_capacity(graphs.len());
    let mut offset = 0usize;
    for part in graphs {
        let n = part.vertex_count();
        maps.push(VertexMap::from_images(
            (0..n).map(|v| Some(v + offset)).collect(),
        ));
        for (u, v) in part.edges() {
            g.insert_edge(u + offset, v + offset)
                .expect("offset edges cannot collide");
        }
        offset += n;
    }
    (g, maps)
}
