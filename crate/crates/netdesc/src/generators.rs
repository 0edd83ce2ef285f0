//! Constructors for the named graph families the bounds and scans refer to:
//! paths, stars, complete graphs, cycles, brooms, and circulants.
//!
//! Vertex numbering is fixed so descriptor rows line up with the closed
//! forms: vertex 0 is the path end, the star center, and the broom's handle
//! start.

use crate::graph::{Graph, GraphError};
use std::collections::BTreeSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeneratorError {
    #[error("family needs at least {needed} vertices, got {got}")]
    TooFewVertices { needed: usize, got: usize },
    #[error("broom depth {depth} out of range 1..={max} for n={n}")]
    DepthOutOfRange { n: usize, depth: usize, max: usize },
    #[error("circulant offset set is empty")]
    EmptyOffsets,
    #[error("circulant offset {offset} out of range 1..={max} for n={n}")]
    OffsetOutOfRange { n: usize, offset: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Path `0 − 1 − ⋯ − (n−1)`.
pub fn path(n: usize) -> Result<Graph, GeneratorError> {
    at_least(1, n)?;
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Ok(Graph::build(n, &edges)?)
}

/// Star with center 0 and leaves `1..n`.
pub fn star(n: usize) -> Result<Graph, GeneratorError> {
    at_least(1, n)?;
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Ok(Graph::build(n, &edges)?)
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Result<Graph, GeneratorError> {
    at_least(1, n)?;
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Ok(Graph::build(n, &edges)?)
}

/// Cycle `0 − 1 − ⋯ − (n−1) − 0`; needs `n ≥ 3`.
pub fn cycle(n: usize) -> Result<Graph, GeneratorError> {
    at_least(3, n)?;
    let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Ok(Graph::build(n, &edges)?)
}

/// Broom: a handle path `0 − 1 − ⋯ − depth` with the remaining
/// `n − depth − 1` vertices attached as leaves next to the far end (on
/// vertex `depth − 1`), so vertex 0 sees `depth` handle distances and the
/// rest of the graph at distance `depth`. `depth = n−1` is the path,
/// `depth = 1` the star.
pub fn broom(n: usize, depth: usize) -> Result<Graph, GeneratorError> {
    at_least(2, n)?;
    if depth < 1 || depth > n - 1 {
        return Err(GeneratorError::DepthOutOfRange { n, depth, max: n - 1 });
    }
    let mut edges: Vec<_> = (1..=depth).map(|v| (v - 1, v)).collect();
    for v in (depth + 1)..n {
        edges.push((depth - 1, v));
    }
    Ok(Graph::build(n, &edges)?)
}

/// Circulant graph: vertex `u` is adjacent to `u ± o (mod n)` for each
/// offset `o`. Offsets must lie in `1..=n/2`; duplicates collapse. The
/// result must be connected (offsets all sharing a common factor with `n`
/// are rejected via the connectivity check).
pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph, GeneratorError> {
    at_least(2, n)?;
    if offsets.is_empty() {
        return Err(GeneratorError::EmptyOffsets);
    }
    let max = n / 2;
    let mut cleaned = BTreeSet::new();
    for &o in offsets {
        if o < 1 || o > max {
            return Err(GeneratorError::OffsetOutOfRange { n, offset: o, max });
        }
        cleaned.insert(o);
    }
    let mut edges = BTreeSet::new();
    for u in 0..n {
        for &o in &cleaned {
            let v = (u + o) % n;
            if u != v {
                edges.insert((u.min(v), u.max(v)));
            }
        }
    }
    let edges: Vec<_> = edges.into_iter().collect();
    Ok(Graph::build(n, &edges)?)
}

fn at_least(needed: usize, got: usize) -> Result<(), GeneratorError> {
    if got < needed {
        return Err(GeneratorError::TooFewVertices { needed, got });
    }
    Ok(())
}
