//! Simple undirected graphs on dense vertex labels `0..n`.
//!
//! Adjacency is a packed bit matrix: each vertex owns a row of `u64` words, so pair
//! lookup is O(1) and neighbor iteration walks set bits. A [`Graph`] is immutable once
//! built; mutation goes through [`GraphBuilder`] or operations returning new values.

use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("edge {0}-{1} is not present")]
    MissingEdge(Vertex, Vertex),
    #[error("edge {0}-{1} listed more than once")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {0} listed more than once")]
    DuplicateVertex(Vertex),
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Normalizes an edge so the smaller endpoint comes first.
#[inline]
pub fn ordered(u: Vertex, v: Vertex) -> Edge {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    edges: usize,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            bits: vec![0; n * words],
            edges: 0,
        }
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
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    /// Complete multipartite graph with consecutive index blocks of the given sizes.
    pub fn complete_multipartite(sizes: &[usize]) -> Self {
        let n = sizes.iter().sum();
        let mut b = GraphBuilder::new(n);
        let blocks = blocks(sizes);
        for (i, a) in blocks.iter().enumerate() {
            for c in &blocks[i + 1..] {
                for u in a.clone() {
                    for v in c.clone() {
                        b.add_edge(u, v).expect("in range");
                    }
                }
            }
        }
        b.build()
    }

    /// Blow-up of the cycle `C_m`, `m = sizes.len() >= 3`: class `i` is an independent
    /// set joined completely to classes `i-1` and `i+1` (indices mod `m`).
    pub fn cycle_blowup(sizes: &[usize]) -> Self {
        assert!(sizes.len() >= 3, "cycle blow-up needs at least 3 classes");
        let n = sizes.iter().sum();
        let mut b = GraphBuilder::new(n);
        let blocks = blocks(sizes);
        let m = blocks.len();
        for i in 0..m {
            let j = (i + 1) % m;
            for u in blocks[i].clone() {
                for v in blocks[j].clone() {
                    b.add_edge(u, v).expect("in range");
                }
            }
        }
        b.build()
    }

    /// The Petersen graph with outer cycle `0..5` and inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((5 + i, 5 + (i + 2) % 5));
        }
        Self::from_edges(10, edges).expect("valid Petersen graph")
    }

    /// Builds a graph from an edge list; repeated edges collapse to one.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = Edge>,
    {
        let mut b = GraphBuilder::new(n);
        for (u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// Packed neighbor bitset of `v`.
    #[inline]
    pub fn row(&self, v: Vertex) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        BitIter::new(self.row(v))
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Returns the common degree if every vertex has it.
    pub fn is_regular(&self) -> Option<usize> {
        let mut degrees = (0..self.n).map(|v| self.degree(v));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (0..self.n).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Returns a copy with the listed edges removed.
    ///
    /// Every edge must be present and appear once; either endpoint order is accepted.
    pub fn delete_edges(&self, edges: &[Edge]) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::from_graph(self);
        let mut seen = std::collections::HashSet::with_capacity(edges.len());
        for &(u, v) in edges {
            self.check_vertex(u)?;
            self.check_vertex(v)?;
            let e = ordered(u, v);
            if !seen.insert(e) {
                return Err(GraphError::DuplicateEdge(e.0, e.1));
            }
            if !b.remove_edge(u, v) {
                return Err(GraphError::MissingEdge(e.0, e.1));
            }
        }
        Ok(b.build())
    }

    /// Induced subgraph on `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced(&self, vertices: &[Vertex]) -> Graph {
        let mut b = GraphBuilder::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j).expect("in range");
                }
            }
        }
        b.build()
    }

    fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Mutable adjacency used to assemble a [`Graph`] on one thread.
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    graph: Graph,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Self {
        GraphBuilder {
            graph: Graph::empty(n),
        }
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder { graph: g.clone() }
    }

    pub fn order(&self) -> usize {
        self.graph.n
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.graph.has_edge(u, v)
    }

    /// Adds `uv`; returns whether it was new.
    pub fn add_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        self.graph.check_vertex(u)?;
        self.graph.check_vertex(v)?;
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        if self.graph.has_edge(u, v) {
            return Ok(false);
        }
        self.flip(u, v);
        self.graph.edges += 1;
        Ok(true)
    }

    /// Removes `uv`; returns whether it was present.
    pub fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u == v || !self.graph.has_edge(u, v) {
            return false;
        }
        self.flip(u, v);
        self.graph.edges -= 1;
        true
    }

    fn flip(&mut self, u: Vertex, v: Vertex) {
        let w = self.graph.words;
        self.graph.bits[u * w + v / 64] ^= 1 << (v % 64);
        self.graph.bits[v * w + u / 64] ^= 1 << (u % 64);
    }

    pub fn build(self) -> Graph {
        self.graph
    }
}

/// Iterator over the set bits of a packed word slice.
pub(crate) struct BitIter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl<'a> BitIter<'a> {
    pub(crate) fn new(words: &'a [u64]) -> Self {
        BitIter {
            words,
            index: 0,
            current: words.first().copied().unwrap_or(0),
        }
    }
}

impl Iterator for BitIter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * 64 + bit);
            }
            self.index += 1;
            self.current = *self.words.get(self.index)?;
        }
    }
}

/// A subset of `0..n`, kept sorted and duplicate-free.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexSet(Vec<Vertex>);

impl VertexSet {
    pub fn new(n: usize, mut vertices: Vec<Vertex>) -> Result<Self, GraphError> {
        vertices.sort_unstable();
        for w in vertices.windows(2) {
            if w[0] == w[1] {
                return Err(GraphError::DuplicateVertex(w[0]));
            }
        }
        if let Some(&v) = vertices.last() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { vertex: v, n });
            }
        }
        Ok(VertexSet(vertices))
    }

    pub fn range(r: std::ops::Range<Vertex>) -> Self {
        VertexSet(r.collect())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Index ranges of consecutive class blocks.
pub fn blocks(sizes: &[usize]) -> Vec<std::ops::Range<Vertex>> {
    let mut start = 0;
    sizes
        .iter()
        .map(|&s| {
            let r = start..start + s;
            start += s;
            r
        })
        .collect()
}
