//! Closed-form extremal values of the descriptor aggregates over connected
//! graphs on `n` vertices, and the graph families that attain them.
//!
//! The broom with handle depth `D` (a path `0−1−⋯−D` with the remaining
//! `n−D−1` vertices attached next to the far end) sweeps out the extremal
//! range for the minimum-transmission, minimum-networkness, and
//! minimum-surplus aggregates as `D` runs over `1..=n−1`; the path end and
//! the star center pin the centrality extremes; the complete graph pins the
//! two small-λ upper bounds; the cycle is the conjectured transmission
//! optimum among 2-connected graphs.
//!
//! Star-center values here carry the full through-pair term: a pair of
//! leaves routes through two center edges, so the center's centrality is
//! `(n−1)[λ + (n−2)λ²]`, its networkness `1 + (n−2)λ`, and its surplus
//! `(n−1)(n−2)λ²`. These are exactly the values the descriptor engine
//! assigns to a generated star, and the exhaustive scans in
//! [`crate::search`] confirm they are the attained maxima.
//!
//! Every closed form here is cross-checked against its defining finite sum
//! by the test suite; scans over `D` are authoritative and the stationary
//! points serve only as an agreement check.

use crate::descriptors::Lambda;
use serde::Serialize;

/// `Σ_{i=1}^{d} λ^i`, in closed form.
pub fn geometric_sum(d: usize, lambda: f64) -> f64 {
    if d == 0 {
        return 0.0;
    }
    lambda * (1.0 - lambda.powi(d as i32)) / (1.0 - lambda)
}

/// `Σ_{i=1}^{d} i·λ^i`, in closed form.
pub fn weighted_geometric_sum(d: usize, lambda: f64) -> f64 {
    if d == 0 {
        return 0.0;
    }
    let ld = lambda.powi(d as i32);
    lambda * (1.0 - (d as f64 + 1.0) * ld + d as f64 * ld * lambda)
        / ((1.0 - lambda) * (1.0 - lambda))
}

/// Transmission of the broom's starting vertex: distances run `1..=d` along
/// the handle and the `n−1−d` remaining vertices sit at distance `d`.
pub fn broom_transmission(n: usize, d: usize, lambda: Lambda) -> f64 {
    check_depth(n, d);
    let l = lambda.get();
    weighted_geometric_sum(d, l) + ((n - 1 - d) as f64) * d as f64 * l.powi(d as i32)
}

/// Centrality of the broom's starting vertex.
pub fn broom_centrality(n: usize, d: usize, lambda: Lambda) -> f64 {
    check_depth(n, d);
    let l = lambda.get();
    geometric_sum(d, l) + ((n - 1 - d) as f64) * l.powi(d as i32)
}

/// Networkness of the broom's starting vertex, for handle depth `d ≥ 2`;
/// evaluates to 1 at `d = 1`, which never lowers a minimum scan.
pub fn broom_networkness(n: usize, d: usize, lambda: Lambda) -> f64 {
    check_depth(n, d);
    let l = lambda.get();
    let ld = l.powi(d as i32);
    let spread = 1.0 / ((n - d) as f64);
    (ld + spread * geometric_sum(d - 1, l)) / (d as f64 * ld + spread * weighted_geometric_sum(d - 1, l))
}

/// Surplus of the broom's starting vertex, for handle depth `d ≥ 2`;
/// evaluates to 0 at `d = 1`.
pub fn broom_surplus(n: usize, d: usize, lambda: Lambda) -> f64 {
    check_depth(n, d);
    let l = lambda.get();
    let ld = l.powi(d as i32);
    (geometric_sum(d, l) - weighted_geometric_sum(d, l))
        + ((n - 1 - d) as f64) * (ld - d as f64 * ld)
}

fn check_depth(n: usize, d: usize) {
    assert!(n >= 2, "broom needs n >= 2, got {n}");
    assert!(d >= 1 && d < n, "depth {d} out of 1..={} for n={n}", n - 1);
}

fn scan_broom(
    n: usize,
    lambda: Lambda,
    f: impl Fn(usize) -> f64,
    take_max: bool,
) -> (f64, usize) {
    let _ = lambda;
    let mut best = (f(1), 1);
    for d in 2..n {
        let v = f(d);
        if (take_max && v > best.0) || (!take_max && v < best.0) {
            best = (v, d);
        }
    }
    best
}

/// Minimum of the broom-start transmission over handle depths; a lower bound
/// for the min-transmission aggregate of every connected graph. Returns the
/// value and its depth.
pub fn min_broom_transmission(n: usize, lambda: Lambda) -> (f64, usize) {
    scan_broom(n, lambda, |d| broom_transmission(n, d, lambda), false)
}

/// Maximum of the broom-start transmission over handle depths; an upper bound
/// for the max-transmission aggregate.
pub fn max_broom_transmission(n: usize, lambda: Lambda) -> (f64, usize) {
    scan_broom(n, lambda, |d| broom_transmission(n, d, lambda), true)
}

/// Minimum of the broom-start networkness over handle depths; a lower bound
/// for the min-networkness aggregate.
pub fn min_broom_networkness(n: usize, lambda: Lambda) -> (f64, usize) {
    scan_broom(n, lambda, |d| broom_networkness(n, d, lambda), false)
}

/// Minimum of the broom-start surplus over handle depths; a lower bound for
/// the min-surplus aggregate.
pub fn min_broom_surplus(n: usize, lambda: Lambda) -> (f64, usize) {
    scan_broom(n, lambda, |d| broom_surplus(n, d, lambda), false)
}

/// Centrality of a path end: `Σ_{i=1}^{n−1} λ^i`. The least centrality any
/// vertex of a connected n-vertex graph can have.
pub fn path_end_centrality(n: usize, lambda: Lambda) -> f64 {
    assert!(n >= 2);
    geometric_sum(n - 1, lambda.get())
}

/// Centrality of a star center: `(n−1)[λ + (n−2)λ²]`. The largest centrality
/// any vertex of a connected n-vertex graph can have.
pub fn star_center_centrality(n: usize, lambda: Lambda) -> f64 {
    assert!(n >= 2);
    let l = lambda.get();
    (n as f64 - 1.0) * (l + (n as f64 - 2.0) * l * l)
}

/// Networkness of a star center: `1 + (n−2)λ`. The largest networkness any
/// vertex can have.
pub fn star_center_networkness(n: usize, lambda: Lambda) -> f64 {
    assert!(n >= 2);
    1.0 + (n as f64 - 2.0) * lambda.get()
}

/// Surplus of a star center: `(n−1)(n−2)λ²`. The largest surplus any vertex
/// can have.
pub fn star_center_surplus(n: usize, lambda: Lambda) -> f64 {
    assert!(n >= 2);
    let l = lambda.get();
    (n as f64 - 1.0) * (n as f64 - 2.0) * l * l
}

/// Transmission of every complete-graph vertex: `(n−1)λ`. For `λ < 1/2` it
/// also caps the min-transmission and min-centrality aggregates, because
/// each pair's term `d·λ^d` is then largest at `d = 1`.
pub fn complete_transmission(n: usize, lambda: Lambda) -> f64 {
    assert!(n >= 2);
    (n as f64 - 1.0) * lambda.get()
}

/// Transmission of every cycle vertex. For odd `n` the distance profile is
/// two vertices at each of `1..=(n−1)/2`; even cycles add one antipodal
/// vertex at distance `n/2`.
pub fn cycle_transmission(n: usize, lambda: Lambda) -> f64 {
    assert!(n >= 2);
    let l = lambda.get();
    if n % 2 == 1 {
        2.0 * weighted_geometric_sum((n - 1) / 2, l)
    } else {
        let half = n / 2;
        2.0 * weighted_geometric_sum(half - 1, l) + half as f64 * l.powi(half as i32)
    }
}

/// One-sided aggregate bounds for connected graphs on `n` vertices, with the
/// arg-extremal broom depths. Lower bounds for the max-transmission and
/// max-centrality aggregates are open and deliberately absent; the two
/// `Option` uppers require `λ < 1/2`.
#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BoundSet {
    pub n: usize,
    pub lambda: f64,
    pub min_transmission_lower: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_transmission_upper: Option<f64>,
    pub max_transmission_upper: f64,
    pub min_centrality_lower: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub min_centrality_upper: Option<f64>,
    pub max_centrality_upper: f64,
    pub min_networkness_lower: f64,
    pub max_networkness_upper: f64,
    pub min_surplus_lower: f64,
    pub max_surplus_upper: f64,
    /// Conjectured least max-transmission among 2-connected graphs (n ≥ 3).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_transmission: Option<f64>,
    pub argmin_d_transmission: usize,
    pub argmax_d_transmission: usize,
    pub argmin_d_networkness: usize,
    pub argmin_d_surplus: usize,
}

/// Assembles every aggregate bound for `n ≥ 2` vertices at one λ.
pub fn descriptor_bounds(n: usize, lambda: Lambda) -> BoundSet {
    assert!(n >= 2, "bounds need n >= 2, got {n}");
    let small_lambda = lambda.get() < 0.5;
    let (min_t, argmin_t) = min_broom_transmission(n, lambda);
    let (max_t, argmax_t) = max_broom_transmission(n, lambda);
    let (min_nw, argmin_nw) = min_broom_networkness(n, lambda);
    let (min_sp, argmin_sp) = min_broom_surplus(n, lambda);
    BoundSet {
        n,
        lambda: lambda.get(),
        min_transmission_lower: min_t,
        min_transmission_upper: small_lambda.then(|| complete_transmission(n, lambda)),
        max_transmission_upper: max_t,
        min_centrality_lower: path_end_centrality(n, lambda),
        min_centrality_upper: small_lambda.then(|| complete_transmission(n, lambda)),
        max_centrality_upper: star_center_centrality(n, lambda),
        min_networkness_lower: min_nw,
        max_networkness_upper: star_center_networkness(n, lambda),
        min_surplus_lower: min_sp,
        max_surplus_upper: star_center_surplus(n, lambda),
        cycle_transmission: (n >= 3).then(|| cycle_transmission(n, lambda)),
        argmin_d_transmission: argmin_t,
        argmax_d_transmission: argmax_t,
        argmin_d_networkness: argmin_nw,
        argmin_d_surplus: argmin_sp,
    }
}

/// Stationary points of the continuous broom-transmission curve in the handle
/// depth. `d1` is the local minimum, `d2` the local maximum; both are absent
/// when the discriminant is negative.
#[derive(Debug, Clone, Copy, Serialize, PartialEq)]
pub struct StationaryPoints {
    pub discriminant: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d1: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d2: Option<f64>,
}

/// Solves for the stationary depths of [`broom_transmission_real`].
pub fn stationary_points(n: usize, lambda: Lambda) -> StationaryPoints {
    let l = lambda.get();
    let log = l.ln();
    let nf = n as f64;
    let bracket = (nf - 1.0) * (nf - 1.0) + l * l * nf * nf - 2.0 * l * (nf * nf - nf + 2.0);
    let disc = 4.0 * (l - 1.0) * (l - 1.0) + bracket * log * log;
    if disc < 0.0 {
        return StationaryPoints { discriminant: disc, d1: None, d2: None };
    }
    let root = disc.sqrt();
    let denom = 2.0 * (l - 1.0) * log;
    let base = 2.0 - 2.0 * l + (1.0 + (l - 1.0) * nf) * log;
    StationaryPoints {
        discriminant: disc,
        d1: Some((base + root) / denom),
        d2: Some((base - root) / denom),
    }
}

/// Continuous extension of [`broom_transmission`] to a real handle depth.
pub fn broom_transmission_real(n: usize, d: f64, lambda: Lambda) -> f64 {
    let l = lambda.get();
    let ld = (d * l.ln()).exp();
    l * (1.0 - (d + 1.0) * ld + d * ld * l) / ((l - 1.0) * (l - 1.0))
        + (n as f64 - d - 1.0) * d * ld
}

/// Derivative of [`broom_transmission_real`] in the depth, as
/// `λ^d/(λ−1)²·(A·d² + B·d + C)` with the positive leading coefficient
/// `A = −ln λ·(λ−1)²`.
pub fn broom_transmission_slope(n: usize, d: f64, lambda: Lambda) -> f64 {
    let l = lambda.get();
    let log = l.ln();
    let nf = n as f64;
    let a = -log * (l - 1.0) * (l - 1.0);
    let b = 4.0 * l - 2.0 - 2.0 * l * l + log * (l - 1.0 + nf - 2.0 * l * nf + l * l * nf);
    let c = l + nf - 1.0 - 2.0 * l * nf + l * l * nf - l * log;
    let ld = (d * log).exp();
    ld / ((l - 1.0) * (l - 1.0)) * (a * d * d + b * d + c)
}

/// Least 2-connected-shaped distance-profile transmission: minimizes
/// `Σ x_i·i·λ^i` over profiles with every layer of size ≥ 2 except a final
/// layer of size ≥ 1, summing to `n−1`. For `λ < 1/2` the minimizer spreads
/// the layers maximally thin: `(2,…,2)` for odd `n`, `(2,…,2,1)` for even.
/// Returns the minimizing profile and its value.
pub fn min_profile_transmission(n: usize, lambda: Lambda) -> (Vec<u32>, f64) {
    assert!(n >= 3, "profiles need n >= 3, got {n}");
    assert!(lambda.get() < 0.5, "the thin-profile minimizer needs lambda < 1/2");
    let mut profile = vec![2u32; (n - 1) / 2];
    if n.is_multiple_of(2) {
        profile.push(1);
    }
    (profile.clone(), profile_value(&profile, lambda.get()))
}

/// Direct summation of `Σ x_i·i·λ^i` over a profile.
pub fn profile_value(profile: &[u32], lambda: f64) -> f64 {
    let mut value = 0.0;
    let mut pw = 1.0;
    for (idx, &x) in profile.iter().enumerate() {
        let i = idx + 1;
        pw *= lambda;
        value += x as f64 * i as f64 * pw;
    }
    value
}

/// Exhaustive minimizer over the same profile set, for cross-checking
/// [`min_profile_transmission`]; capped at `n ≤ 15`.
pub fn min_profile_transmission_exhaustive(n: usize, lambda: Lambda) -> (Vec<u32>, f64) {
    assert!(n >= 3, "profiles need n >= 3, got {n}");
    assert!(n <= 15, "exhaustive profile scan capped at n = 15, got {n}");
    let mut best: Option<(Vec<u32>, f64)> = None;
    let mut current = Vec::new();
    enumerate_profiles(n - 1, &mut current, &mut |profile| {
        let v = profile_value(profile, lambda.get());
        match &best {
            Some((_, bv)) if *bv <= v => {}
            _ => best = Some((profile.to_vec(), v)),
        }
    });
    best.expect("profile set is nonempty for n >= 3")
}

/// Emits every profile whose entries are all ≥ 2 except a last entry ≥ 1,
/// summing to `remaining`.
fn enumerate_profiles(remaining: usize, current: &mut Vec<u32>, emit: &mut impl FnMut(&[u32])) {
    for take in 1..=remaining {
        current.push(take as u32);
        if take == remaining {
            emit(current);
        } else if take >= 2 {
            enumerate_profiles(remaining - take, current, emit);
        }
        current.pop();
    }
}
