//! Graph storage and breadth-first shortest-path machinery.
//!
//! Graphs are simple, undirected, and connected, with vertices `0..n`.
//! Edges are kept in a canonical sorted list (`u < v`, lexicographic), so
//! edge ids are stable across runs and output stays deterministic.

use std::collections::VecDeque;
use thiserror::Error;

/// Vertex handle, always in `0..n`.
pub type VertexId = usize;

/// Errors from graph construction and shortest-path routines.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph needs at least one vertex")]
    NoVertices,
    #[error("vertex {vertex} out of range for n={n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is not connected ({reachable} of {n} vertices reachable from vertex 0)")]
    Disconnected { reachable: usize, n: usize },
    #[error("shortest-path count overflowed at vertex {0}")]
    PathCountOverflow(usize),
}

/// Simple connected undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
    // Edge id of adj[u][k] is adj_edge_ids[u][k]; lets hot loops avoid lookups.
    adj_edge_ids: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges, out-of-range
    /// endpoints, and disconnected inputs.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::build_inner(n, edges, false)
    }

    /// Like [`Graph::build`] but silently deduplicates repeated edges.
    pub fn build_lenient(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::build_inner(n, edges, true)
    }

    fn build_inner(n: usize, edges: &[(usize, usize)], lenient: bool) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut canonical = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n {
                return Err(GraphError::VertexOutOfRange { vertex: a, n });
            }
            if b >= n {
                return Err(GraphError::VertexOutOfRange { vertex: b, n });
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            canonical.push((a.min(b), a.max(b)));
        }
        canonical.sort_unstable();
        if lenient {
            canonical.dedup();
        } else if let Some(w) = canonical.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let g = Self::from_sorted_edges_unchecked(n, canonical);
        let reachable = g.reachable_from(0);
        if reachable != n {
            return Err(GraphError::Disconnected { reachable, n });
        }
        Ok(g)
    }

    /// Internal constructor: `edges` must already be canonical (u < v, sorted,
    /// distinct, in range) and the graph connected.
    pub(crate) fn from_sorted_edges_unchecked(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        let mut adj_edge_ids = vec![Vec::new(); n];
        for (id, &(u, v)) in edges.iter().enumerate() {
            adj[u].push(v);
            adj_edge_ids[u].push(id);
            adj[v].push(u);
            adj_edge_ids[v].push(id);
        }
        Graph { n, edges, adj, adj_edge_ids }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, u: VertexId) -> &[usize] {
        &self.adj[u]
    }

    pub fn degree(&self, u: VertexId) -> usize {
        self.adj[u].len()
    }

    /// Neighbor list of `u` zipped with the canonical edge id of each edge.
    pub fn neighbors_with_edge_ids(&self, u: VertexId) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj[u].iter().copied().zip(self.adj_edge_ids[u].iter().copied())
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Canonical edge id of `{u, v}`, if present.
    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok()
    }

    fn reachable_from(&self, source: VertexId) -> usize {
        let mut seen = vec![false; self.n];
        let mut queue = VecDeque::new();
        seen[source] = true;
        queue.push_back(source);
        let mut count = 1;
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    queue.push_back(w);
                }
            }
        }
        count
    }

    /// Hop distances from `source` to every vertex.
    pub fn distances(&self, source: VertexId) -> Vec<u32> {
        assert!(source < self.n, "source {source} out of range for n={}", self.n);
        let mut dist = vec![u32::MAX; self.n];
        let mut queue = VecDeque::new();
        dist[source] = 0;
        queue.push_back(source);
        while let Some(v) = queue.pop_front() {
            for &w in &self.adj[v] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Largest hop distance from `source`.
    pub fn eccentricity(&self, source: VertexId) -> u32 {
        self.distances(source).into_iter().max().unwrap_or(0)
    }

    /// Single-source BFS with shortest-path counts and predecessor lists.
    pub fn shortest_paths(&self, source: VertexId) -> Result<ShortestPathData, GraphError> {
        assert!(source < self.n, "source {source} out of range for n={}", self.n);
        let n = self.n;
        let mut dist = vec![u32::MAX; n];
        let mut sigma = vec![0u64; n];
        let mut preds = vec![Vec::new(); n];
        let mut order = Vec::with_capacity(n);
        dist[source] = 0;
        sigma[source] = 1;
        order.push(source);
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            let dv = dist[v];
            for &w in &self.adj[v] {
                if dist[w] == u32::MAX {
                    dist[w] = dv + 1;
                    order.push(w);
                }
                if dist[w] == dv + 1 {
                    sigma[w] = sigma[w]
                        .checked_add(sigma[v])
                        .ok_or(GraphError::PathCountOverflow(w))?;
                    preds[w].push(v);
                }
            }
        }
        Ok(ShortestPathData { source, dist, sigma, preds, order })
    }
}

/// BFS output for one source: distances, shortest-path counts, predecessor
/// lists, and the visit order (non-decreasing distance).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShortestPathData {
    pub source: VertexId,
    pub dist: Vec<u32>,
    pub sigma: Vec<u64>,
    pub preds: Vec<Vec<VertexId>>,
    /// Vertices in visit order; reversing it gives a valid order for
    /// dependency accumulation without re-sorting.
    pub order: Vec<VertexId>,
}

/// Errors from reading edge-list text.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Parses edge-list text: one `u v` pair per line, `#` comments, and an
/// optional `# n=<k>` header fixing the vertex count. Without a header the
/// count is the largest endpoint plus one.
pub fn parse_edge_list(text: &str, lenient: bool) -> Result<Graph, EdgeListError> {
    let mut header_n: Option<usize> = None;
    let mut edges = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() {
            continue;
        }
        if let Some(comment) = trimmed.strip_prefix('#') {
            let comment = comment.trim();
            if let Some(value) = comment.strip_prefix("n=") {
                let k: usize = value.trim().parse().map_err(|_| EdgeListError::Syntax {
                    line,
                    msg: format!("bad vertex count in header: {value:?}"),
                })?;
                if header_n.replace(k).is_some() {
                    return Err(EdgeListError::Syntax {
                        line,
                        msg: "repeated n= header".to_string(),
                    });
                }
            }
            continue;
        }
        let mut parts = trimmed.split_whitespace();
        let u = parse_endpoint(parts.next(), line)?;
        let v = parse_endpoint(parts.next(), line)?;
        if parts.next().is_some() {
            return Err(EdgeListError::Syntax {
                line,
                msg: "expected exactly two endpoints per line".to_string(),
            });
        }
        edges.push((u, v));
    }
    let n = match header_n {
        Some(k) => k,
        None => edges
            .iter()
            .map(|&(u, v)| u.max(v) + 1)
            .max()
            .unwrap_or(0),
    };
    let g = if lenient {
        Graph::build_lenient(n, &edges)?
    } else {
        Graph::build(n, &edges)?
    };
    Ok(g)
}

fn parse_endpoint(token: Option<&str>, line: usize) -> Result<usize, EdgeListError> {
    let token = token.ok_or_else(|| EdgeListError::Syntax {
        line,
        msg: "expected two endpoints".to_string(),
    })?;
    token.parse().map_err(|_| EdgeListError::Syntax {
        line,
        msg: format!("bad vertex id: {token:?}"),
    })
}

/// Renders a graph as edge-list text with an `# n=<k>` header and optional
/// extra comment lines. Inverse of [`parse_edge_list`].
pub fn write_edge_list(g: &Graph, comments: &[&str]) -> String {
    let mut out = format!("# n={}\n", g.n());
    for c in comments {
        out.push_str("# ");
        out.push_str(c);
        out.push('\n');
    }
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
