//! Simple undirected graphs and their degree sequences.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest vertex count accepted by [`Graph::new`].
pub const MAX_VERTICES: usize = 4096;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph must have at least one vertex")]
    NoVertices,
    #[error("{0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooManyVertices(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {{{0},{1}}} references a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("no edges")]
    NoEdges,
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(min, max)` pairs in lexicographic order; neighbor
/// lists are sorted. The value is immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicate edges and out-of-range endpoints.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }
        canon.sort_unstable();
        if let Some(w) = canon.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &canon {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: canon,
            adjacency,
        })
    }

    pub fn empty(n: usize) -> Result<Self, GraphError> {
        Self::new(n, std::iter::empty())
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    /// Edges in canonical order: lexicographic on `(min, max)`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence::from_unsorted(self.degrees())
    }

    /// Multiset `{d_i + d_j - 2 : ij ∈ E}` sorted non-increasingly, without
    /// building the line graph.
    pub fn line_degree_sequence(&self) -> Result<LineDegreeSequence, GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::NoEdges);
        }
        let mut values: Vec<usize> = self
            .edges
            .iter()
            .map(|&(u, v)| self.degree(u) + self.degree(v) - 2)
            .collect();
        values.sort_unstable_by(|a, b| b.cmp(a));
        Ok(LineDegreeSequence(values))
    }

    /// The line graph. Vertex `i` of the result is `self.edges()[i]`.
    pub fn line_graph(&self) -> Result<Graph, GraphError> {
        if self.edges.is_empty() {
            return Err(GraphError::NoEdges);
        }
        // Edges incident to each vertex, by line-graph index.
        let mut incident: Vec<Vec<usize>> = vec![Vec::new(); self.n];
        for (idx, &(u, v)) in self.edges.iter().enumerate() {
            incident[u].push(idx);
            incident[v].push(idx);
        }
        let mut line_edges = Vec::new();
        for star in &incident {
            for (a, &e) in star.iter().enumerate() {
                for &f in &star[a + 1..] {
                    line_edges.push((e, f));
                }
            }
        }
        // Two distinct edges of a simple graph share at most one endpoint,
        // so no pair is produced twice.
        Graph::new(self.edges.len(), line_edges)
    }

    /// Vertex sets of the connected components, each sorted, ordered by
    /// smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut stack = vec![start];
            let mut comp = Vec::new();
            while let Some(v) = stack.pop() {
                comp.push(v);
                for &w in &self.adjacency[v] {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    pub fn is_regular(&self) -> bool {
        self.degree_sequence().is_regular()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

fn check_sorted(values: &[usize]) -> bool {
    values.windows(2).all(|w| w[0] >= w[1])
}

/// Vertex degrees `d_1 >= d_2 >= ... >= d_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn from_unsorted(mut values: Vec<usize>) -> Self {
        values.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(values)
    }

    /// Wraps an already non-increasing sequence; `None` if it is empty, not
    /// sorted, or has an entry larger than `n - 1`.
    pub fn from_sorted(values: Vec<usize>) -> Option<Self> {
        let n = values.len();
        if n == 0 || !check_sorted(&values) || values[0] >= n {
            return None;
        }
        Some(DegreeSequence(values))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> usize {
        self.0[0]
    }

    pub fn min(&self) -> usize {
        self.0[self.0.len() - 1]
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of edges, `sum / 2`.
    pub fn edge_count(&self) -> usize {
        self.sum() / 2
    }

    /// Average degree `2m / n`.
    pub fn average(&self) -> f64 {
        self.sum() as f64 / self.0.len() as f64
    }

    pub fn sum_of_squares(&self) -> usize {
        self.0.iter().map(|d| d * d).sum()
    }

    pub fn is_regular(&self) -> bool {
        self.max() == self.min()
    }
}

/// Line-graph degrees `Δ_1 >= ... >= Δ_m`, one entry `d_i + d_j - 2` per edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LineDegreeSequence(Vec<usize>);

impl LineDegreeSequence {
    /// Wraps a non-empty non-increasing sequence.
    pub fn from_sorted(values: Vec<usize>) -> Option<Self> {
        if values.is_empty() || !check_sorted(&values) {
            return None;
        }
        Some(LineDegreeSequence(values))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> usize {
        self.0[0]
    }

    pub fn min(&self) -> usize {
        self.0[self.0.len() - 1]
    }
}
