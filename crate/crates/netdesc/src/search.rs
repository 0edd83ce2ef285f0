//! Exhaustive verification of the aggregate bounds over every labeled
//! connected graph on up to eight vertices.
//!
//! Graphs are enumerated as bitmask codes over the `n(n−1)/2` vertex pairs
//! in lexicographic order, so a code decodes straight into a canonical edge
//! list. Connectivity is screened with a bitmask flood fill before any
//! decoding happens; the survivors stream through a shared descriptor
//! scratch buffer under rayon.
//!
//! Three probes are provided: [`verify_claims`] checks every bound claim
//! and reports witnesses and counterexamples; [`probe_conjecture`] compares
//! the cycle against all 2-connected graphs on the max-transmission
//! aggregate; [`probe_open_problems`] reports the graphs minimizing the
//! max-transmission and max-centrality aggregates, where no closed-form
//! lower bound is known.
//!
//! All merges break ties toward the smaller code, so reports are
//! deterministic regardless of thread count.

use crate::bounds::{
    complete_transmission, cycle_transmission, descriptor_bounds, path_end_centrality,
    star_center_centrality, star_center_networkness, star_center_surplus,
};
use crate::descriptors::{Lambda, Scratch};
use crate::graph::{Graph, GraphError};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

/// Largest vertex count the exhaustive scans accept. `n = 8` already means
/// 2^28 candidate masks and is gated behind an explicit opt-in.
pub const MAX_SCAN_N: usize = 8;

#[derive(Debug, Error, PartialEq)]
pub enum SearchError {
    #[error("scan needs at least {min} vertices, got {n}")]
    NTooSmall { n: usize, min: usize },
    #[error("scan supports at most {max} vertices, got {n}")]
    NTooLarge { n: usize, max: usize },
    #[error("scanning all {n}-vertex graphs takes minutes; enable it explicitly")]
    LargeScanNotEnabled { n: usize },
    #[error("edge probability must lie in (0, 1], got {0}")]
    BadProbability(f64),
    #[error("no connected sample after {attempts} attempts; raise the edge probability")]
    GivenUpAfterRetries { attempts: u32 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// A labeled graph packed into the bits of one integer: bit `k` is the k-th
/// vertex pair in lexicographic order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GraphCode {
    pub n: usize,
    pub code: u64,
}

impl GraphCode {
    /// Packs a graph; the code space only fits `n ≤ 11`.
    pub fn encode(g: &Graph) -> Self {
        let n = g.n();
        assert!(n >= 1 && n * (n - 1) / 2 <= 64, "graph code space fits n <= 11, got {n}");
        let mut code = 0u64;
        for &(u, v) in g.edges() {
            code |= 1 << pair_index(n, u, v);
        }
        GraphCode { n, code }
    }

    /// Unpacks the edge list in canonical order.
    pub fn edges(self) -> Vec<(usize, usize)> {
        let mut edges = Vec::new();
        let mut k = 0;
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.code >> k & 1 == 1 {
                    edges.push((u, v));
                }
                k += 1;
            }
        }
        edges
    }

    /// Rebuilds the graph, rejecting disconnected codes.
    pub fn decode(self) -> Result<Graph, SearchError> {
        Ok(Graph::build(self.n, &self.edges())?)
    }
}

fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

/// Flood fill on adjacency bitmasks; avoids building a `Graph` for the
/// (vast) disconnected majority of the code space.
fn mask_connected(n: usize, code: u64) -> bool {
    let mut rows = [0u32; MAX_SCAN_N];
    let mut k = 0;
    for u in 0..n {
        for v in (u + 1)..n {
            if code >> k & 1 == 1 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            k += 1;
        }
    }
    let all = (1u32 << n) - 1;
    let mut visited = 1u32;
    let mut frontier = 1u32;
    while frontier != 0 {
        let mut next = 0;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            next |= rows[v];
        }
        frontier = next & !visited;
        visited |= next;
    }
    visited == all
}

fn graph_from_code(n: usize, code: u64) -> Graph {
    Graph::from_sorted_edges_unchecked(n, GraphCode { n, code }.edges())
}

fn scan_guard(n: usize, min: usize, allow_large: bool) -> Result<(), SearchError> {
    if n < min {
        Err(SearchError::NTooSmall { n, min })
    } else if n > MAX_SCAN_N {
        Err(SearchError::NTooLarge { n, max: MAX_SCAN_N })
    } else if n == MAX_SCAN_N && !allow_large {
        Err(SearchError::LargeScanNotEnabled { n })
    } else {
        Ok(())
    }
}

/// Streams the codes of every labeled connected graph on `n` vertices, in
/// increasing code order.
pub fn enumerate_connected(
    n: usize,
    allow_large: bool,
) -> Result<impl Iterator<Item = GraphCode>, SearchError> {
    scan_guard(n, 2, allow_large)?;
    let bits = n * (n - 1) / 2;
    Ok((0..1u64 << bits)
        .filter(move |&code| mask_connected(n, code))
        .map(move |code| GraphCode { n, code }))
}

fn run_in_pool<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> T {
    if jobs == 0 {
        f()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("building a rayon pool")
            .install(f)
    }
}

/// A scan extreme together with the code attaining it; ties go to the
/// smaller code so parallel reduces stay deterministic.
#[derive(Clone, Copy)]
struct Tracked {
    value: f64,
    code: u64,
}

impl Tracked {
    fn worst_min() -> Self {
        Tracked { value: f64::INFINITY, code: u64::MAX }
    }
    fn worst_max() -> Self {
        Tracked { value: f64::NEG_INFINITY, code: u64::MAX }
    }
    fn take_min(&mut self, value: f64, code: u64) {
        if value < self.value || (value == self.value && code < self.code) {
            *self = Tracked { value, code };
        }
    }
    fn take_max(&mut self, value: f64, code: u64) {
        if value > self.value || (value == self.value && code < self.code) {
            *self = Tracked { value, code };
        }
    }
    fn merge_min(mut self, other: Tracked) -> Tracked {
        self.take_min(other.value, other.code);
        self
    }
    fn merge_max(mut self, other: Tracked) -> Tracked {
        self.take_max(other.value, other.code);
        self
    }
}

/// One labeled graph pinned as evidence in a report.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct WitnessGraph {
    pub code: u64,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub value: f64,
}

impl WitnessGraph {
    fn from_tracked(n: usize, t: Tracked) -> Self {
        WitnessGraph {
            code: t.code,
            n,
            edges: GraphCode { n, code: t.code }.edges(),
            value: t.value,
        }
    }
}

#[derive(Debug, Clone, Copy, Serialize, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum ClaimStatus {
    Verified,
    Violated,
    NotApplicable,
}

/// Outcome of one bound claim over the whole scan. `observed` is the scan
/// extreme the bound constrains; `attained` says whether some graph meets
/// the bound within tolerance (absent for the balance identity, which has
/// no attainment notion).
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct Claim {
    pub name: &'static str,
    pub status: ClaimStatus,
    pub bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub observed: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub attained: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessGraph>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub counterexamples: Vec<WitnessGraph>,
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct VerificationReport {
    pub n: usize,
    pub lambda: f64,
    pub graph_count: u64,
    pub claims: Vec<Claim>,
    pub all_verified: bool,
}

#[derive(Clone, Copy, PartialEq)]
enum Side {
    AtLeast,
    AtMost,
}

/// Index into the per-graph aggregate array; `IMBALANCE` addresses the
/// relative transmission/centrality mismatch instead.
const MT: usize = 0;
const XT: usize = 1;
const MC: usize = 2;
const XC: usize = 3;
const MN: usize = 4;
const XN: usize = 5;
const MS: usize = 6;
const XS: usize = 7;
const IMBALANCE: usize = 8;

const BALANCE_BOUND: f64 = 1e-12;

struct ClaimSpec {
    name: &'static str,
    agg: usize,
    side: Side,
    bound: f64,
    tol: f64,
    applicable: bool,
}

fn spec(name: &'static str, agg: usize, side: Side, bound: f64) -> ClaimSpec {
    ClaimSpec { name, agg, side, bound, tol: 1e-9 * bound.abs().max(1.0), applicable: true }
}

fn claim_specs(n: usize, lambda: Lambda) -> Vec<ClaimSpec> {
    let b = descriptor_bounds(n, lambda);
    let small_lambda = lambda.get() < 0.5;
    let flat = complete_transmission(n, lambda);
    let mut specs = vec![
        spec("min_transmission_lower", MT, Side::AtLeast, b.min_transmission_lower),
        spec("max_transmission_upper", XT, Side::AtMost, b.max_transmission_upper),
        spec("min_centrality_lower", MC, Side::AtLeast, path_end_centrality(n, lambda)),
        spec("max_centrality_upper", XC, Side::AtMost, star_center_centrality(n, lambda)),
        spec("min_networkness_lower", MN, Side::AtLeast, b.min_networkness_lower),
        spec("min_networkness_upper_one", MN, Side::AtMost, 1.0),
        spec("max_networkness_lower_one", XN, Side::AtLeast, 1.0),
        spec("max_networkness_upper", XN, Side::AtMost, star_center_networkness(n, lambda)),
        spec("min_surplus_lower", MS, Side::AtLeast, b.min_surplus_lower),
        spec("min_surplus_upper_zero", MS, Side::AtMost, 0.0),
        spec("max_surplus_lower_zero", XS, Side::AtLeast, 0.0),
        spec("max_surplus_upper", XS, Side::AtMost, star_center_surplus(n, lambda)),
        spec("min_transmission_upper_half_lambda", MT, Side::AtMost, flat),
        spec("min_centrality_upper_half_lambda", MC, Side::AtMost, flat),
        ClaimSpec {
            name: "transmission_centrality_balance",
            agg: IMBALANCE,
            side: Side::AtMost,
            bound: BALANCE_BOUND,
            tol: 0.0,
            applicable: true,
        },
    ];
    if !small_lambda {
        for s in &mut specs {
            if s.name.ends_with("half_lambda") {
                s.applicable = false;
            }
        }
    }
    specs
}

const MAX_COUNTEREXAMPLES: usize = 3;

struct VerifyAcc {
    scratch: Scratch,
    count: u64,
    min: [Tracked; 8],
    max: [Tracked; 8],
    imbalance: Tracked,
    violations: Vec<Vec<(u64, f64)>>,
}

impl VerifyAcc {
    fn new(claims: usize) -> Self {
        VerifyAcc {
            scratch: Scratch::new(),
            count: 0,
            min: [Tracked::worst_min(); 8],
            max: [Tracked::worst_max(); 8],
            imbalance: Tracked::worst_max(),
            violations: vec![Vec::new(); claims],
        }
    }

    fn step(mut self, n: usize, code: u64, lambda: f64, specs: &[ClaimSpec]) -> Self {
        let g = graph_from_code(n, code);
        self.scratch
            .compute(&g, lambda)
            .expect("shortest-path counts fit u64 for n <= 8");
        let mut agg = [0.0f64; 8];
        let pairs = [
            (MT, XT, &self.scratch.transmission),
            (MC, XC, &self.scratch.centrality),
            (MN, XN, &self.scratch.networkness),
            (MS, XS, &self.scratch.surplus),
        ];
        for (lo_i, hi_i, values) in pairs {
            let mut lo = f64::INFINITY;
            let mut hi = f64::NEG_INFINITY;
            for &v in values.iter() {
                lo = lo.min(v);
                hi = hi.max(v);
            }
            agg[lo_i] = lo;
            agg[hi_i] = hi;
        }
        let sum_t: f64 = self.scratch.transmission.iter().sum();
        let sum_c: f64 = self.scratch.centrality.iter().sum();
        let imbalance = (sum_t - sum_c).abs() / sum_t.max(1.0);
        self.count += 1;
        for (i, &value) in agg.iter().enumerate() {
            self.min[i].take_min(value, code);
            self.max[i].take_max(value, code);
        }
        self.imbalance.take_max(imbalance, code);
        for (i, s) in specs.iter().enumerate() {
            if !s.applicable {
                continue;
            }
            let v = if s.agg == IMBALANCE { imbalance } else { agg[s.agg] };
            let violated = match s.side {
                Side::AtLeast => v < s.bound - s.tol,
                Side::AtMost => v > s.bound + s.tol,
            };
            if violated && self.violations[i].len() < MAX_COUNTEREXAMPLES {
                // Codes arrive in increasing order within a fold chunk, so
                // each list stays sorted.
                self.violations[i].push((code, v));
            }
        }
        self
    }

    fn merge(mut self, other: Self) -> Self {
        self.count += other.count;
        for i in 0..8 {
            self.min[i] = self.min[i].merge_min(other.min[i]);
            self.max[i] = self.max[i].merge_max(other.max[i]);
        }
        self.imbalance = self.imbalance.merge_max(other.imbalance);
        for (mine, theirs) in self.violations.iter_mut().zip(other.violations) {
            let merged = merge_sorted_capped(mine, &theirs);
            *mine = merged;
        }
        self
    }
}

fn merge_sorted_capped(a: &[(u64, f64)], b: &[(u64, f64)]) -> Vec<(u64, f64)> {
    let mut out = Vec::with_capacity(MAX_COUNTEREXAMPLES);
    let (mut i, mut j) = (0, 0);
    while out.len() < MAX_COUNTEREXAMPLES && (i < a.len() || j < b.len()) {
        let from_a = j >= b.len() || (i < a.len() && a[i].0 <= b[j].0);
        if from_a {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out
}

/// Checks every aggregate bound against every labeled connected graph on
/// `n ∈ 2..=8` vertices at one λ. `jobs = 0` uses the default rayon pool.
pub fn verify_claims(
    n: usize,
    lambda: Lambda,
    jobs: usize,
    allow_large: bool,
) -> Result<VerificationReport, SearchError> {
    scan_guard(n, 2, allow_large)?;
    let specs = claim_specs(n, lambda);
    let l = lambda.get();
    let bits = n * (n - 1) / 2;
    let acc = run_in_pool(jobs, || {
        (0..1u64 << bits)
            .into_par_iter()
            .filter(|&code| mask_connected(n, code))
            .fold(
                || VerifyAcc::new(specs.len()),
                |acc, code| acc.step(n, code, l, &specs),
            )
            .reduce(|| VerifyAcc::new(specs.len()), VerifyAcc::merge)
    });
    let claims = specs
        .iter()
        .enumerate()
        .map(|(i, s)| {
            if !s.applicable {
                return Claim {
                    name: s.name,
                    status: ClaimStatus::NotApplicable,
                    bound: s.bound,
                    observed: None,
                    attained: None,
                    witness: None,
                    counterexamples: Vec::new(),
                };
            }
            let tracked = if s.agg == IMBALANCE {
                acc.imbalance
            } else {
                match s.side {
                    Side::AtLeast => acc.min[s.agg],
                    Side::AtMost => acc.max[s.agg],
                }
            };
            let violated = match s.side {
                Side::AtLeast => tracked.value < s.bound - s.tol,
                Side::AtMost => tracked.value > s.bound + s.tol,
            };
            debug_assert_eq!(violated, !acc.violations[i].is_empty());
            let attained = (s.agg != IMBALANCE)
                .then(|| (tracked.value - s.bound).abs() <= s.tol);
            Claim {
                name: s.name,
                status: if violated { ClaimStatus::Violated } else { ClaimStatus::Verified },
                bound: s.bound,
                observed: Some(tracked.value),
                attained,
                witness: Some(WitnessGraph::from_tracked(n, tracked)),
                counterexamples: acc.violations[i]
                    .iter()
                    .map(|&(code, value)| WitnessGraph {
                        code,
                        n,
                        edges: GraphCode { n, code }.edges(),
                        value,
                    })
                    .collect(),
            }
        })
        .collect::<Vec<_>>();
    let all_verified = claims.iter().all(|c| c.status != ClaimStatus::Violated);
    Ok(VerificationReport { n, lambda: lambda.get(), graph_count: acc.count, claims, all_verified })
}

/// Scan outcome for the conjecture that the cycle minimizes the
/// max-transmission aggregate among 2-connected graphs. The claim is only
/// asserted for λ < 1/2 (`asserted`); above that the scan is exploratory.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct ConjectureReport {
    pub n: usize,
    pub lambda: f64,
    pub asserted: bool,
    pub cycle_value: f64,
    pub graph_count: u64,
    pub two_connected_count: u64,
    pub two_connected_min: f64,
    pub two_connected_witness: WitnessGraph,
    pub cycle_is_minimizer: bool,
    /// Minimum over all connected graphs, for contrast; trees usually dip
    /// below the cycle here.
    pub all_graphs_min: f64,
    pub all_graphs_witness: WitnessGraph,
}

struct ConjAcc {
    scratch: Scratch,
    count: u64,
    two_count: u64,
    stratum_min: Tracked,
    all_min: Tracked,
}

impl ConjAcc {
    fn new() -> Self {
        ConjAcc {
            scratch: Scratch::new(),
            count: 0,
            two_count: 0,
            stratum_min: Tracked::worst_min(),
            all_min: Tracked::worst_min(),
        }
    }

    fn step(mut self, n: usize, code: u64, lambda: f64) -> Self {
        let g = graph_from_code(n, code);
        self.scratch
            .compute(&g, lambda)
            .expect("shortest-path counts fit u64 for n <= 8");
        let max_t = self
            .scratch
            .transmission
            .iter()
            .fold(f64::NEG_INFINITY, |a, &b| a.max(b));
        self.count += 1;
        self.all_min.take_min(max_t, code);
        if is_two_connected(&g) {
            self.two_count += 1;
            self.stratum_min.take_min(max_t, code);
        }
        self
    }

    fn merge(mut self, other: Self) -> Self {
        self.count += other.count;
        self.two_count += other.two_count;
        self.stratum_min = self.stratum_min.merge_min(other.stratum_min);
        self.all_min = self.all_min.merge_min(other.all_min);
        self
    }
}

/// Scans all connected graphs on `n ∈ 3..=8` vertices and compares the
/// 2-connected stratum's least max-transmission against the cycle.
pub fn probe_conjecture(
    n: usize,
    lambda: Lambda,
    jobs: usize,
    allow_large: bool,
) -> Result<ConjectureReport, SearchError> {
    scan_guard(n, 3, allow_large)?;
    let l = lambda.get();
    let bits = n * (n - 1) / 2;
    let acc = run_in_pool(jobs, || {
        (0..1u64 << bits)
            .into_par_iter()
            .filter(|&code| mask_connected(n, code))
            .fold(ConjAcc::new, |acc, code| acc.step(n, code, l))
            .reduce(ConjAcc::new, ConjAcc::merge)
    });
    let cycle_value = cycle_transmission(n, lambda);
    let tol = 1e-9 * cycle_value.max(1.0);
    let cycle_is_minimizer = acc.stratum_min.value >= cycle_value - tol
        && (acc.stratum_min.value - cycle_value).abs() <= tol;
    Ok(ConjectureReport {
        n,
        lambda: l,
        asserted: l < 0.5,
        cycle_value,
        graph_count: acc.count,
        two_connected_count: acc.two_count,
        two_connected_min: acc.stratum_min.value,
        two_connected_witness: WitnessGraph::from_tracked(n, acc.stratum_min),
        cycle_is_minimizer,
        all_graphs_min: acc.all_min.value,
        all_graphs_witness: WitnessGraph::from_tracked(n, acc.all_min),
    })
}

/// Scan outcome for the two aggregates with no known closed-form lower
/// bound: the least max-transmission and least max-centrality over all
/// connected graphs.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct OpenProblemsReport {
    pub n: usize,
    pub lambda: f64,
    pub graph_count: u64,
    pub min_max_transmission: f64,
    pub min_max_transmission_witness: WitnessGraph,
    pub min_max_centrality: f64,
    pub min_max_centrality_witness: WitnessGraph,
}

struct OpenAcc {
    scratch: Scratch,
    count: u64,
    min_max_t: Tracked,
    min_max_c: Tracked,
}

impl OpenAcc {
    fn new() -> Self {
        OpenAcc {
            scratch: Scratch::new(),
            count: 0,
            min_max_t: Tracked::worst_min(),
            min_max_c: Tracked::worst_min(),
        }
    }

    fn step(mut self, n: usize, code: u64, lambda: f64) -> Self {
        let g = graph_from_code(n, code);
        self.scratch
            .compute(&g, lambda)
            .expect("shortest-path counts fit u64 for n <= 8");
        let max_of = |v: &[f64]| v.iter().fold(f64::NEG_INFINITY, |a, &b| a.max(b));
        let max_t = max_of(&self.scratch.transmission);
        let max_c = max_of(&self.scratch.centrality);
        self.count += 1;
        self.min_max_t.take_min(max_t, code);
        self.min_max_c.take_min(max_c, code);
        self
    }

    fn merge(mut self, other: Self) -> Self {
        self.count += other.count;
        self.min_max_t = self.min_max_t.merge_min(other.min_max_t);
        self.min_max_c = self.min_max_c.merge_min(other.min_max_c);
        self
    }
}

/// Reports which connected graphs minimize the max-transmission and
/// max-centrality aggregates, the two quantities whose sharp lower bounds
/// are open.
pub fn probe_open_problems(
    n: usize,
    lambda: Lambda,
    jobs: usize,
    allow_large: bool,
) -> Result<OpenProblemsReport, SearchError> {
    scan_guard(n, 2, allow_large)?;
    let l = lambda.get();
    let bits = n * (n - 1) / 2;
    let acc = run_in_pool(jobs, || {
        (0..1u64 << bits)
            .into_par_iter()
            .filter(|&code| mask_connected(n, code))
            .fold(OpenAcc::new, |acc, code| acc.step(n, code, l))
            .reduce(OpenAcc::new, OpenAcc::merge)
    });
    Ok(OpenProblemsReport {
        n,
        lambda: l,
        graph_count: acc.count,
        min_max_transmission: acc.min_max_t.value,
        min_max_transmission_witness: WitnessGraph::from_tracked(n, acc.min_max_t),
        min_max_centrality: acc.min_max_c.value,
        min_max_centrality_witness: WitnessGraph::from_tracked(n, acc.min_max_c),
    })
}

/// True when the graph stays connected after removing any single vertex;
/// requires `n ≥ 3`. Recursive lowpoint search, so intended for the modest
/// vertex counts the scans handle.
pub fn is_two_connected(g: &Graph) -> bool {
    let n = g.n();
    if n < 3 {
        return false;
    }
    fn search(
        g: &Graph,
        u: usize,
        parent: usize,
        timer: &mut usize,
        disc: &mut [usize],
        low: &mut [usize],
    ) -> bool {
        disc[u] = *timer;
        low[u] = *timer;
        *timer += 1;
        let mut children = 0;
        for &v in g.neighbors(u) {
            if disc[v] == usize::MAX {
                children += 1;
                if search(g, v, u, timer, disc, low) {
                    return true;
                }
                low[u] = low[u].min(low[v]);
                if parent != usize::MAX && low[v] >= disc[u] {
                    return true;
                }
            } else if v != parent {
                low[u] = low[u].min(disc[v]);
            }
        }
        parent == usize::MAX && children > 1
    }
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut timer = 0;
    !search(g, 0, usize::MAX, &mut timer, &mut disc, &mut low)
}

const RANDOM_ATTEMPTS: u32 = 10_000;

/// Samples a connected graph: each vertex pair becomes an edge independently
/// with probability `p`, redrawing until the result is connected. The same
/// seed always returns the same graph.
pub fn random_connected(n: usize, p: f64, seed: u64) -> Result<Graph, SearchError> {
    if n < 1 {
        return Err(SearchError::NTooSmall { n, min: 1 });
    }
    if !(p > 0.0 && p <= 1.0) {
        return Err(SearchError::BadProbability(p));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for _ in 0..RANDOM_ATTEMPTS {
        edges.clear();
        for u in 0..n {
            for v in (u + 1)..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        match Graph::build(n, &edges) {
            Ok(g) => return Ok(g),
            Err(GraphError::Disconnected { .. }) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(SearchError::GivenUpAfterRetries { attempts: RANDOM_ATTEMPTS })
}
