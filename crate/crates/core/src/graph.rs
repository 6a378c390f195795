//! Canonical simple undirected graphs.

use alloc::vec;
use alloc::vec::Vec;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
}

/// A simple undirected graph on vertices `0..n`.
///
/// Edges are stored as `(u, v)` with `u < v`, sorted lexicographically, so two
/// equal graphs always have identical representations and every edge has a
/// stable index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph from arbitrary vertex pairs, normalizing each pair to
    /// `u < v` and sorting the list.
    pub fn new<I>(n: usize, edge_pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut edges = Vec::new();
        for (a, b) in edge_pairs {
            for vertex in [a, b] {
                if vertex >= n {
                    return Err(GraphError::VertexOutOfRange { vertex, n });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge(a));
            }
            edges.push(if a < b { (a, b) } else { (b, a) });
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        Ok(Graph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Graph { n, edges }
    }

    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Graph { n, edges }
    }

    /// The Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Graph::new(10, outer.chain(spokes).chain(inner)).expect("petersen graph is simple")
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, index: usize) -> (usize, usize) {
        self.edges[index]
    }

    /// Index of edge `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Per-vertex lists of `(neighbor, edge index)`, neighbors ascending.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            adj[u].push((v, i));
            adj[v].push((u, i));
        }
        // Sorted edge order already yields ascending neighbors per vertex.
        debug_assert!(adj.iter().all(|l| l.windows(2).all(|w| w[0].0 < w[1].0)));
        adj
    }

    pub fn degrees(&self) -> VertexDegrees {
        let mut deg = vec![0usize; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        VertexDegrees(deg)
    }

    /// True iff every vertex has degree exactly `r`.
    pub fn is_regular(&self, r: usize) -> bool {
        self.degrees().iter().all(|&d| d == r)
    }

    /// The common degree, if the graph is regular and nonempty.
    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        let first = *deg.0.first()?;
        deg.iter().all(|&d| d == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let adj = self.adjacency();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &(w, _) in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Indices of all bridges, ascending. Uses an iterative depth-first
    /// search with low-link values.
    pub fn bridges(&self) -> Vec<usize> {
        let adj = self.adjacency();
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut bridges = Vec::new();
        let mut timer = 0;
        // (vertex, edge used to enter it, next adjacency position)
        let mut stack: Vec<(usize, usize, usize)> = Vec::new();
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            disc[root] = timer;
            low[root] = timer;
            timer += 1;
            stack.push((root, usize::MAX, 0));
            while let Some(top) = stack.last_mut() {
                let (u, parent_edge, pos) = *top;
                if pos < adj[u].len() {
                    top.2 += 1;
                    let (w, e) = adj[u][pos];
                    if e == parent_edge {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = timer;
                        low[w] = timer;
                        timer += 1;
                        stack.push((w, e, 0));
                    } else {
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(p, _, _)) = stack.last() {
                        low[p] = low[p].min(low[u]);
                        if low[u] > disc[p] {
                            bridges.push(parent_edge);
                        }
                    }
                }
            }
        }
        bridges.sort_unstable();
        bridges
    }

    /// Connected, at least two vertices, and no bridge.
    pub fn is_two_edge_connected(&self) -> bool {
        self.n >= 2 && self.is_connected() && self.bridges().is_empty()
    }

    /// Copy of the graph with edge `index` removed.
    pub fn without_edge(&self, index: usize) -> Graph {
        let mut edges = self.edges.clone();
        edges.remove(index);
        Graph { n: self.n, edges }
    }
}

/// Degree of every vertex, indexed by vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDegrees(pub Vec<usize>);

impl VertexDegrees {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> core::slice::Iter<'_, usize> {
        self.0.iter()
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn all_even(&self) -> bool {
        self.0.iter().all(|d| d % 2 == 0)
    }

    /// Degrees sorted nonincreasing.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }
}

impl core::ops::Index<usize> for VertexDegrees {
    type Output = usize;

    fn index(&self, v: usize) -> &usize {
        &self.0[v]
    }
}

/// Free-function form of [`Graph::new`].
pub fn build_graph<I>(n: usize, edge_pairs: I) -> Result<Graph, GraphError>
where
    I: IntoIterator<Item = (usize, usize)>,
{
    Graph::new(n, edge_pairs)
}

pub fn degrees(g: &Graph) -> VertexDegrees {
    g.degrees()
}

pub fn is_regular(g: &Graph, r: usize) -> bool {
    g.is_regular(r)
}

pub fn is_two_edge_connected(g: &Graph) -> bool {
    g.is_two_edge_connected()
}
