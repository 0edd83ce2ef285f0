//! The λ-weighted descriptor family: transmission, edge betweenness,
//! centrality, networkness, and surplus.
//!
//! For a connected graph, a weight `λ` strictly between 0 and 1, and hop
//! distance `d`:
//!
//! * transmission      `t(u) = Σ_{v≠u} d(u,v)·λ^{d(u,v)}`
//! * edge betweenness  `b(e) = Σ_{{k,l}} (σ_e(k,l)/σ(k,l))·λ^{d(k,l)}`,
//!   summed over unordered vertex pairs, where `σ(k,l)` counts shortest
//!   k–l paths and `σ_e(k,l)` counts those passing through edge `e`
//! * centrality        `c(u) = Σ_{e incident to u} b(e)`
//! * networkness       `N(u) = c(u)/t(u)`
//! * surplus           `ν(u) = c(u) − t(u)`
//!
//! Every pair is weighted by the pair distance `λ^{d(k,l)}`, not by the unit
//! length of the edge itself. A pair containing `u` touches exactly one edge
//! at `u`, while a pair routed through `u` touches two; that accounting is
//! precisely what makes the balance identity `Σ_u t(u) = Σ_u c(u)` hold on
//! every connected graph, and it is load-bearing for the extremal bounds in
//! [`crate::bounds`].
//!
//! `betweenness` runs a per-source dependency accumulation (linear in edges
//! per source); `betweenness_oracle` recomputes the same numbers by explicit
//! enumeration of every shortest path and exists to cross-check the fast
//! path on small graphs.

use crate::graph::{Graph, GraphError};
use serde::Serialize;
use thiserror::Error;

/// Errors from descriptor computation.
#[derive(Debug, Error, PartialEq)]
pub enum DescriptorError {
    #[error("lambda must lie strictly between 0 and 1, got {0}")]
    BadLambda(f64),
    #[error("descriptors are undefined on a single-vertex graph")]
    SingletonGraph,
    #[error("path-enumeration oracle accepts at most 10 vertices, got {0}")]
    OracleTooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Decay weight, validated to lie strictly inside the unit interval.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Lambda(f64);

impl Lambda {
    pub fn new(value: f64) -> Result<Self, DescriptorError> {
        if value.is_finite() && 0.0 < value && value < 1.0 {
            Ok(Lambda(value))
        } else {
            Err(DescriptorError::BadLambda(value))
        }
    }

    pub fn get(self) -> f64 {
        self.0
    }
}

/// All per-vertex and per-edge descriptors of one graph at one λ.
#[derive(Debug, Clone, Serialize)]
pub struct DescriptorTable {
    pub lambda: f64,
    pub transmission: Vec<f64>,
    pub centrality: Vec<f64>,
    pub networkness: Vec<f64>,
    pub surplus: Vec<f64>,
    /// Indexed by canonical edge id, parallel to [`Graph::edges`].
    pub edge_betweenness: Vec<f64>,
}

/// One extremal vertex value; ties resolve to the smallest vertex id.
#[derive(Debug, Clone, Copy, Serialize, PartialEq)]
pub struct Extremum {
    pub value: f64,
    pub vertex: usize,
}

/// The eight descriptor aggregates of one graph.
#[derive(Debug, Clone, Copy, Serialize, PartialEq)]
pub struct AggregateSummary {
    pub min_transmission: Extremum,
    pub max_transmission: Extremum,
    pub min_centrality: Extremum,
    pub max_centrality: Extremum,
    pub min_networkness: Extremum,
    pub max_networkness: Extremum,
    pub min_surplus: Extremum,
    pub max_surplus: Extremum,
}

/// Powers λ^0..=λ^max by iterated multiplication.
fn power_table(lambda: f64, max: usize) -> Vec<f64> {
    let mut pow = Vec::with_capacity(max + 1);
    pow.push(1.0);
    for k in 1..=max {
        pow.push(pow[k - 1] * lambda);
    }
    pow
}

/// Reusable buffers for descriptor computation; lets exhaustive scans run
/// without per-graph allocation.
#[derive(Debug, Default)]
pub(crate) struct Scratch {
    dist: Vec<u32>,
    sigma: Vec<u64>,
    order: Vec<usize>,
    delta: Vec<f64>,
    pow: Vec<f64>,
    pub(crate) transmission: Vec<f64>,
    pub(crate) centrality: Vec<f64>,
    pub(crate) networkness: Vec<f64>,
    pub(crate) surplus: Vec<f64>,
    pub(crate) edge_betweenness: Vec<f64>,
}

impl Scratch {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    /// Computes every descriptor of `g` at `lambda` into the scratch buffers.
    pub(crate) fn compute(&mut self, g: &Graph, lambda: f64) -> Result<(), GraphError> {
        let n = g.n();
        let m = g.edge_count();
        self.pow.clear();
        self.pow.push(1.0);
        for k in 1..n {
            self.pow.push(self.pow[k - 1] * lambda);
        }
        self.transmission.clear();
        self.transmission.resize(n, 0.0);
        self.edge_betweenness.clear();
        self.edge_betweenness.resize(m, 0.0);
        self.dist.resize(n, 0);
        self.sigma.resize(n, 0);
        self.delta.resize(n, 0.0);

        for s in 0..n {
            // Forward BFS: distances, path counts, visit order.
            self.dist.fill(u32::MAX);
            self.sigma.fill(0);
            self.order.clear();
            self.dist[s] = 0;
            self.sigma[s] = 1;
            self.order.push(s);
            let mut head = 0;
            while head < self.order.len() {
                let v = self.order[head];
                head += 1;
                let dv = self.dist[v];
                for &w in g.neighbors(v) {
                    if self.dist[w] == u32::MAX {
                        self.dist[w] = dv + 1;
                        self.order.push(w);
                    }
                    if self.dist[w] == dv + 1 {
                        self.sigma[w] = self.sigma[w]
                            .checked_add(self.sigma[v])
                            .ok_or(GraphError::PathCountOverflow(w))?;
                    }
                }
            }

            let mut t = 0.0;
            for w in 0..n {
                let d = self.dist[w] as usize;
                t += d as f64 * self.pow[d];
            }
            self.transmission[s] = t;

            // Reverse pass: each target w seeds λ^{d(s,w)}; edge (v,w) on the
            // shortest-path DAG receives (σ_v/σ_w)·(seed(w) + δ(w)).
            self.delta.fill(0.0);
            for &w in self.order.iter().skip(1).rev() {
                let coef = (self.pow[self.dist[w] as usize] + self.delta[w])
                    / self.sigma[w] as f64;
                let dw = self.dist[w];
                for (v, eid) in g.neighbors_with_edge_ids(w) {
                    if self.dist[v] + 1 == dw {
                        let contrib = self.sigma[v] as f64 * coef;
                        self.edge_betweenness[eid] += contrib;
                        self.delta[v] += contrib;
                    }
                }
            }
        }

        // Each unordered pair was accumulated from both of its endpoints.
        for b in &mut self.edge_betweenness {
            *b *= 0.5;
        }

        self.centrality.clear();
        self.centrality.resize(n, 0.0);
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            self.centrality[u] += self.edge_betweenness[id];
            self.centrality[v] += self.edge_betweenness[id];
        }
        self.networkness.clear();
        self.surplus.clear();
        for u in 0..n {
            self.networkness.push(self.centrality[u] / self.transmission[u]);
            self.surplus.push(self.centrality[u] - self.transmission[u]);
        }
        Ok(())
    }
}

/// Transmission of every vertex: `t(u) = Σ_v d(u,v)·λ^{d(u,v)}`.
pub fn transmission(g: &Graph, lambda: Lambda) -> Vec<f64> {
    let n = g.n();
    let pow = power_table(lambda.get(), n.saturating_sub(1));
    (0..n)
        .map(|s| {
            g.distances(s)
                .into_iter()
                .map(|d| d as f64 * pow[d as usize])
                .sum()
        })
        .collect()
}

/// Edge betweenness and vertex centrality via per-source accumulation.
/// Returns `(per-edge values, per-vertex centrality)`.
pub fn betweenness(g: &Graph, lambda: Lambda) -> Result<(Vec<f64>, Vec<f64>), DescriptorError> {
    let mut scratch = Scratch::new();
    scratch.compute(g, lambda.get())?;
    Ok((scratch.edge_betweenness, scratch.centrality))
}

/// Same quantities as [`betweenness`], recomputed by explicitly enumerating
/// every shortest path of every vertex pair. Quadratic and allocation-heavy
/// by design; capped at 10 vertices.
pub fn betweenness_oracle(
    g: &Graph,
    lambda: Lambda,
) -> Result<(Vec<f64>, Vec<f64>), DescriptorError> {
    let n = g.n();
    if n > 10 {
        return Err(DescriptorError::OracleTooLarge(n));
    }
    let pow = power_table(lambda.get(), n.saturating_sub(1));
    let mut edge_b = vec![0.0; g.edge_count()];
    let mut tally = vec![0u64; g.edge_count()];
    for k in 0..n {
        let spd = g.shortest_paths(k)?;
        for l in (k + 1)..n {
            tally.fill(0);
            let mut paths = 0u64;
            let mut edge_stack = Vec::new();
            walk_back(g, &spd, l, k, &mut edge_stack, &mut tally, &mut paths);
            assert_eq!(
                paths, spd.sigma[l],
                "path enumeration disagrees with sigma for pair ({k},{l})"
            );
            let weight = pow[spd.dist[l] as usize];
            for (eid, &t) in tally.iter().enumerate() {
                if t > 0 {
                    edge_b[eid] += (t as f64 / paths as f64) * weight;
                }
            }
        }
    }
    let mut centrality = vec![0.0; n];
    for (id, &(u, v)) in g.edges().iter().enumerate() {
        centrality[u] += edge_b[id];
        centrality[v] += edge_b[id];
    }
    Ok((edge_b, centrality))
}

/// Walks every shortest path from `v` back to `source`, tallying edge visits.
fn walk_back(
    g: &Graph,
    spd: &crate::graph::ShortestPathData,
    v: usize,
    source: usize,
    edge_stack: &mut Vec<usize>,
    tally: &mut [u64],
    paths: &mut u64,
) {
    if v == source {
        *paths += 1;
        for &e in edge_stack.iter() {
            tally[e] += 1;
        }
        return;
    }
    for &p in &spd.preds[v] {
        edge_stack.push(g.edge_id(p, v).expect("predecessor edge exists"));
        walk_back(g, spd, p, source, edge_stack, tally, paths);
        edge_stack.pop();
    }
}

/// Computes the full descriptor table of a graph with at least two vertices.
pub fn descriptor_table(g: &Graph, lambda: Lambda) -> Result<DescriptorTable, DescriptorError> {
    if g.n() < 2 {
        return Err(DescriptorError::SingletonGraph);
    }
    let mut scratch = Scratch::new();
    scratch.compute(g, lambda.get())?;
    Ok(DescriptorTable {
        lambda: lambda.get(),
        transmission: scratch.transmission,
        centrality: scratch.centrality,
        networkness: scratch.networkness,
        surplus: scratch.surplus,
        edge_betweenness: scratch.edge_betweenness,
    })
}

fn extremum_min(values: &[f64]) -> Extremum {
    let mut best = Extremum { value: values[0], vertex: 0 };
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v < best.value {
            best = Extremum { value: v, vertex: i };
        }
    }
    best
}

fn extremum_max(values: &[f64]) -> Extremum {
    let mut best = Extremum { value: values[0], vertex: 0 };
    for (i, &v) in values.iter().enumerate().skip(1) {
        if v > best.value {
            best = Extremum { value: v, vertex: i };
        }
    }
    best
}

pub(crate) fn aggregates_from(
    transmission: &[f64],
    centrality: &[f64],
    networkness: &[f64],
    surplus: &[f64],
) -> AggregateSummary {
    AggregateSummary {
        min_transmission: extremum_min(transmission),
        max_transmission: extremum_max(transmission),
        min_centrality: extremum_min(centrality),
        max_centrality: extremum_max(centrality),
        min_networkness: extremum_min(networkness),
        max_networkness: extremum_max(networkness),
        min_surplus: extremum_min(surplus),
        max_surplus: extremum_max(surplus),
    }
}

/// The eight aggregates (min/max of each per-vertex descriptor) with their
/// witness vertices.
pub fn aggregates(table: &DescriptorTable) -> AggregateSummary {
    aggregates_from(
        &table.transmission,
        &table.centrality,
        &table.networkness,
        &table.surplus,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    const TOL: f64 = 1e-12;

    fn lam(v: f64) -> Lambda {
        Lambda::new(v).unwrap()
    }

    fn assert_close(a: f64, b: f64) {
        assert!((a - b).abs() <= TOL, "{a} vs {b}");
    }

    #[test]
    fn lambda_rejects_out_of_range() {
        assert!(Lambda::new(0.0).is_err());
        assert!(Lambda::new(1.0).is_err());
        assert!(Lambda::new(-0.3).is_err());
        assert!(Lambda::new(f64::NAN).is_err());
        assert!(Lambda::new(0.5).is_ok());
    }

    #[test]
    fn transmission_of_complete_graph() {
        let g = generators::complete(4).unwrap();
        for t in transmission(&g, lam(0.5)) {
            assert_close(t, 1.5);
        }
    }

    #[test]
    fn transmission_of_path_end() {
        let g = generators::path(3).unwrap();
        let t = transmission(&g, lam(0.5));
        assert_close(t[0], 1.0);
        assert_close(t[1], 1.0);
        assert_close(t[2], 1.0);
    }

    #[test]
    fn transmission_of_broom_start() {
        // Distances from vertex 0 of broom(5,2) are [0,1,2,2,2].
        let g = generators::broom(5, 2).unwrap();
        let t = transmission(&g, lam(0.5));
        assert_close(t[0], 2.0);
    }

    #[test]
    fn betweenness_of_complete_graph_is_lambda_per_edge() {
        // In K_n only the endpoint pair itself crosses each edge.
        let g = generators::complete(5).unwrap();
        let (edge_b, c) = betweenness(&g, lam(0.3)).unwrap();
        for b in edge_b {
            assert_close(b, 0.3);
        }
        for v in c {
            assert_close(v, 4.0 * 0.3);
        }
    }

    #[test]
    fn betweenness_of_three_vertex_path() {
        let g = generators::path(3).unwrap();
        let (edge_b, c) = betweenness(&g, lam(0.5)).unwrap();
        // Each edge carries its endpoint pair (λ) plus the end-to-end pair (λ²).
        assert_close(edge_b[0], 0.75);
        assert_close(edge_b[1], 0.75);
        assert_close(c[0], 0.75);
        assert_close(c[1], 1.5);
        assert_close(c[2], 0.75);
        let sum_c: f64 = c.iter().sum();
        assert_close(sum_c, 3.0);
    }

    #[test]
    fn betweenness_of_star_center() {
        // Each leaf pair routes through two center edges, so the center
        // collects (n−1)λ + (n−1)(n−2)λ².
        let g = generators::star(4).unwrap();
        let (edge_b, c) = betweenness(&g, lam(0.5)).unwrap();
        for b in edge_b {
            assert_close(b, 1.0);
        }
        assert_close(c[0], 3.0);
        assert_close(c[1], 1.0);
    }

    #[test]
    fn betweenness_of_cycle4_splits_diagonal_pairs() {
        let g = generators::cycle(4).unwrap();
        let (edge_b, _) = betweenness(&g, lam(0.5)).unwrap();
        // λ + (1/2)λ² from each of the two diagonal pairs crossing the edge.
        for b in edge_b {
            assert_close(b, 0.75);
        }
    }

    #[test]
    fn oracle_matches_fast_path_on_small_graphs() {
        let graphs = vec![
            generators::path(5).unwrap(),
            generators::star(6).unwrap(),
            generators::cycle(6).unwrap(),
            generators::complete(5).unwrap(),
            generators::broom(6, 3).unwrap(),
            crate::graph::Graph::build(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 4), (3, 4)])
                .unwrap(),
        ];
        for g in &graphs {
            for &l in &[0.1, 0.5, 0.9] {
                let (fast_e, fast_c) = betweenness(g, lam(l)).unwrap();
                let (oracle_e, oracle_c) = betweenness_oracle(g, lam(l)).unwrap();
                for (a, b) in fast_e.iter().zip(&oracle_e) {
                    assert!((a - b).abs() < 1e-12, "edge mismatch: {a} vs {b}");
                }
                for (a, b) in fast_c.iter().zip(&oracle_c) {
                    assert!((a - b).abs() < 1e-12, "centrality mismatch: {a} vs {b}");
                }
            }
        }
    }

    #[test]
    fn oracle_rejects_large_graphs() {
        let g = generators::path(11).unwrap();
        assert_eq!(
            betweenness_oracle(&g, lam(0.5)).unwrap_err(),
            DescriptorError::OracleTooLarge(11)
        );
    }

    #[test]
    fn table_recomputes_ratios_and_differences() {
        let g = generators::broom(6, 3).unwrap();
        let table = descriptor_table(&g, lam(0.3)).unwrap();
        for u in 0..g.n() {
            assert_close(
                table.networkness[u],
                table.centrality[u] / table.transmission[u],
            );
            assert_close(table.surplus[u], table.centrality[u] - table.transmission[u]);
            assert!(table.transmission[u] > 0.0);
            assert!(table.centrality[u] > 0.0);
        }
        let sum_t: f64 = table.transmission.iter().sum();
        let sum_c: f64 = table.centrality.iter().sum();
        assert!((sum_t - sum_c).abs() <= 1e-12 * sum_t.max(1.0));
        // Edge decomposition: Σ_e 2·b(e) = Σ_u c(u).
        let sum_b: f64 = table.edge_betweenness.iter().sum();
        assert!((2.0 * sum_b - sum_c).abs() <= 1e-12 * sum_c.max(1.0));
    }

    #[test]
    fn table_rejects_singleton() {
        let g = crate::graph::Graph::build(1, &[]).unwrap();
        assert_eq!(
            descriptor_table(&g, lam(0.5)).unwrap_err(),
            DescriptorError::SingletonGraph
        );
    }

    #[test]
    fn vertex_transitive_graphs_have_unit_networkness() {
        for g in [
            generators::cycle(7).unwrap(),
            generators::complete(6).unwrap(),
            generators::circulant(6, &[1, 2]).unwrap(),
        ] {
            let table = descriptor_table(&g, lam(0.7)).unwrap();
            for u in 0..g.n() {
                assert!((table.networkness[u] - 1.0).abs() <= 1e-12);
                assert!(table.surplus[u].abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn aggregates_break_ties_toward_smallest_vertex() {
        let g = generators::cycle(5).unwrap();
        let table = descriptor_table(&g, lam(0.5)).unwrap();
        let agg = aggregates(&table);
        assert_eq!(agg.min_transmission.vertex, 0);
        assert_eq!(agg.max_networkness.vertex, 0);
    }

    #[test]
    fn aggregates_of_three_vertex_path() {
        let g = generators::path(3).unwrap();
        let table = descriptor_table(&g, lam(0.5)).unwrap();
        let agg = aggregates(&table);
        assert_close(agg.min_centrality.value, 0.75);
        assert_eq!(agg.min_centrality.vertex, 0);
        assert_close(agg.max_centrality.value, 1.5);
        assert_eq!(agg.max_centrality.vertex, 1);
        assert_close(agg.min_transmission.value, 1.0);
        assert_eq!(agg.min_transmission.vertex, 0);
    }

    /// Reference accumulation that processes vertices sorted by (distance
    /// descending, id ascending) instead of reverse BFS order; any order that
    /// finishes a layer before the one above it must give identical results.
    fn betweenness_layer_sorted(g: &Graph, lambda: f64) -> Vec<f64> {
        let n = g.n();
        let pow = power_table(lambda, n - 1);
        let mut edge_b = vec![0.0; g.edge_count()];
        for s in 0..n {
            let spd = g.shortest_paths(s).unwrap();
            let mut by_depth: Vec<usize> = (0..n).filter(|&w| w != s).collect();
            by_depth.sort_by_key(|&w| (std::cmp::Reverse(spd.dist[w]), w));
            let mut delta = vec![0.0; n];
            for &w in &by_depth {
                let coef = (pow[spd.dist[w] as usize] + delta[w]) / spd.sigma[w] as f64;
                for &p in &spd.preds[w] {
                    let contrib = spd.sigma[p] as f64 * coef;
                    edge_b[g.edge_id(p, w).unwrap()] += contrib;
                    delta[p] += contrib;
                }
            }
        }
        for b in &mut edge_b {
            *b *= 0.5;
        }
        edge_b
    }

    #[test]
    fn accumulation_order_within_layers_does_not_matter() {
        for g in [
            generators::broom(7, 3).unwrap(),
            generators::cycle(8).unwrap(),
            crate::graph::Graph::build(6, &[(0, 1), (0, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
                .unwrap(),
        ] {
            let (fast, _) = betweenness(&g, lam(0.49)).unwrap();
            let sorted = betweenness_layer_sorted(&g, 0.49);
            for (a, b) in fast.iter().zip(&sorted) {
                assert!((a - b).abs() <= 1e-12);
            }
        }
    }

    /// On a tree, an edge's betweenness is exactly the λ-weighted count of
    /// pairs it separates.
    #[test]
    fn tree_betweenness_matches_pair_partition() {
        for g in [
            generators::path(6).unwrap(),
            generators::star(6).unwrap(),
            generators::broom(7, 4).unwrap(),
        ] {
            let lambda = 0.37;
            let (edge_b, _) = betweenness(&g, lam(lambda)).unwrap();
            let n = g.n();
            let all_dist: Vec<Vec<u32>> = (0..n).map(|s| g.distances(s)).collect();
            let pow = power_table(lambda, n - 1);
            for (eid, &(u, v)) in g.edges().iter().enumerate() {
                // Side of u in the forest after deleting {u,v}.
                let mut side = vec![false; n];
                side[u] = true;
                let mut stack = vec![u];
                while let Some(x) = stack.pop() {
                    for &y in g.neighbors(x) {
                        if (x, y) == (u, v) || (x, y) == (v, u) || side[y] {
                            continue;
                        }
                        side[y] = true;
                        stack.push(y);
                    }
                }
                let mut expected = 0.0;
                for k in 0..n {
                    for l in (k + 1)..n {
                        if side[k] != side[l] {
                            expected += pow[all_dist[k][l] as usize];
                        }
                    }
                }
                assert!((edge_b[eid] - expected).abs() <= 1e-12);
            }
        }
    }
}
