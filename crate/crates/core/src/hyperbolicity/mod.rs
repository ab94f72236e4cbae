//! Exact Gromov hyperbolicity over far-apart pairs.
//!
//! The solver scans far-apart pairs `(x, y)` by non-increasing distance and
//! combines each with the previously reported far-apart pairs `(v, w)` at
//! distance at least `d(x, y)`. Once `d(x, y) ≤ 2δL` no later 4-tuple can
//! beat the current lower bound `δL`, so the scan stops.
//!
//! All quantities are kept doubled: with `D = 2δL` every threshold is an
//! integer. The vertex classification used for each pair reads, for a vertex
//! `v` with `a = d(x,v)`, `b = d(y,v)`, `d = d(x,y)`, `e = ecc(v)`:
//!
//! * skippable when `v` is in no previously scanned pair;
//! * skippable when `2·min(a, b) ≤ D`;
//! * skippable when `2e − a − b < 2D + 2 − d`;
//! * skippable when `2e + 2d − 3D − 3 < 2·max(a, b)`;
//! * otherwise acceptable, and valuable if also `2·d(c,v) − D > a + b − d`
//!   for the fixed center `c`.
//!
//! Distances from `x` and `y` come from BFSes pruned to vertices with
//! `2e − 2·d(x,v) ≥ 3D − 3 − 2d`, which contains every acceptable vertex.

mod cache;

use std::fmt;
use std::time::{Duration, Instant};

use crate::eccentricity::all_eccentricities;
use crate::farpairs::{far_sets_from_distances, FarApartStore};
use crate::graph::{bfs, biconnected_components, DistanceVector, EccVector, Graph, Vertex, INF};
use crate::{Error, Result};

pub use cache::BfsCache;

/// Twice the hyperbolicity, so that half-integral values stay exact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeltaDoubled(pub u32);

impl DeltaDoubled {
    pub fn as_f64(self) -> f64 {
        f64::from(self.0) / 2.0
    }
}

/// One fractional digit: `3.0`, `1.5`.
impl fmt::Display for DeltaDoubled {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let frac = if self.0.is_multiple_of(2) { 0 } else { 5 };
        write!(f, "{}.{}", self.0 / 2, frac)
    }
}

/// `2δ(u, v, x, y)`: the largest of `d(u,v)+d(x,y)`, `d(u,x)+d(v,y)`,
/// `d(u,y)+d(v,x)` minus the second largest.
pub fn delta4(
    d_uv: u32,
    d_xy: u32,
    d_ux: u32,
    d_vy: u32,
    d_uy: u32,
    d_vx: u32,
) -> Result<DeltaDoubled> {
    if [d_uv, d_xy, d_ux, d_vy, d_uy, d_vx].contains(&INF) {
        return Err(Error::InfiniteDistance);
    }
    let s1 = d_uv + d_xy;
    let s2 = d_ux + d_vy;
    let s3 = d_uy + d_vx;
    let largest = s1.max(s2).max(s3);
    let second = if largest == s1 {
        s2.max(s3)
    } else if largest == s2 {
        s1.max(s3)
    } else {
        s1.max(s2)
    };
    Ok(DeltaDoubled(largest - second))
}

/// Whether `v` survives every skip condition for the pair at distance
/// `d_xy` under the bound `delta2`. Unreached vertices (`INF`) never do.
pub fn is_acceptable(
    seen: bool,
    d_xv: u32,
    d_yv: u32,
    d_xy: u32,
    ecc_v: u32,
    delta2: DeltaDoubled,
) -> bool {
    if !seen || d_xv == INF || d_yv == INF {
        return false;
    }
    let (a, b) = (i64::from(d_xv), i64::from(d_yv));
    let (d, e, big_d) = (i64::from(d_xy), i64::from(ecc_v), i64::from(delta2.0));
    2 * a.min(b) > big_d
        && 2 * e - a - b >= 2 * big_d + 2 - d
        && 2 * e + 2 * d - 3 * big_d - 3 >= 2 * a.max(b)
}

/// Valuable refinement of an acceptable vertex relative to the center.
pub fn is_valuable(d_cv: u32, d_xv: u32, d_yv: u32, d_xy: u32, delta2: DeltaDoubled) -> bool {
    2 * i64::from(d_cv) - i64::from(delta2.0) > i64::from(d_xv) + i64::from(d_yv) - i64::from(d_xy)
}

/// Doubled cutoff for the pruned BFS from either endpoint of a pair.
pub fn prune_cutoff2(d_xy: u32, delta2: DeltaDoubled) -> i64 {
    3 * i64::from(delta2.0) - 3 - 2 * i64::from(d_xy)
}

/// Acceptable and valuable vertices for one pair, both ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct AccVal {
    pub acceptable: Vec<Vertex>,
    pub valuable: Vec<Vertex>,
}

/// Classifies the vertices visited by the smaller of the two searches.
/// `dx` and `dy` may be pruned; `dc` must be a complete BFS from the center.
pub fn compute_acc_val(
    dx: &DistanceVector,
    dy: &DistanceVector,
    ecc: &EccVector,
    delta2: DeltaDoubled,
    seen: &[bool],
    dc: &DistanceVector,
) -> AccVal {
    let mut out = AccVal::default();
    classify(dx, dy, ecc, delta2, seen, dc, |v, valuable| {
        out.acceptable.push(v);
        if valuable {
            out.valuable.push(v);
        }
    });
    out.acceptable.sort_unstable();
    out.valuable.sort_unstable();
    out
}

fn classify<F>(
    dx: &DistanceVector,
    dy: &DistanceVector,
    ecc: &EccVector,
    delta2: DeltaDoubled,
    seen: &[bool],
    dc: &DistanceVector,
    mut emit: F,
) where
    F: FnMut(Vertex, bool),
{
    let d_xy = dx.get(dy.source());
    let scan = if dy.visited_count() < dx.visited_count() {
        dy
    } else {
        dx
    };
    for &v in scan.visited() {
        let (a, b) = (dx.get(v), dy.get(v));
        if is_acceptable(seen[v as usize], a, b, d_xy, ecc.get(v), delta2) {
            emit(v, is_valuable(dc.get(v), a, b, d_xy, delta2));
        }
    }
}

/// Number of `(source, farthest vertex)` pairs the lower-bound heuristic
/// combines.
pub const HEURISTIC_PAIRS: usize = 64;

/// Lower bound from the eccentricity pass.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HeuristicBound {
    pub delta2: DeltaDoubled,
    pub witness: Option<[Vertex; 4]>,
    /// Extra BFSes needed for endpoints that were not sources.
    pub bfs_runs: usize,
}

/// Pairs each complete BFS source with its smallest-id farthest vertex (up
/// to [`HEURISTIC_PAIRS`] of them) and takes the best 4-point value over all
/// pairs of such pairs. Every value is a genuine `δ` of four vertices, so the
/// result never exceeds the hyperbolicity.
pub fn lower_bound_heuristic(g: &Graph, sources: &[DistanceVector]) -> Result<HeuristicBound> {
    let mut out = HeuristicBound::default();
    if g.num_vertices() < 4 {
        return Ok(out);
    }
    let sources = &sources[..sources.len().min(HEURISTIC_PAIRS)];
    let mut pairs = Vec::with_capacity(sources.len());
    for dv in sources {
        if !dv.is_complete() {
            return Err(Error::PrunedDistances(dv.source()));
        }
        let far = dv.max_distance();
        let t = g
            .vertices()
            .find(|&v| dv.get(v) == far)
            .expect("source is visited");
        pairs.push((dv.source(), t));
    }
    // Farthest vertices that were not sources themselves need their own BFS.
    let mut extra: Vec<DistanceVector> = Vec::new();
    for &(_, t) in &pairs {
        let known = sources.iter().chain(&extra).any(|dv| dv.source() == t);
        if !known {
            out.bfs_runs += 1;
            extra.push(bfs(g, t));
        }
    }
    let d = |a: Vertex, b: Vertex| {
        sources
            .iter()
            .chain(&extra)
            .find(|dv| dv.source() == a)
            .expect("every endpoint has a row")
            .get(b)
    };
    for (i, &(u, v)) in pairs.iter().enumerate() {
        for &(x, y) in &pairs[i + 1..] {
            let value = delta4(d(u, v), d(x, y), d(u, x), d(v, y), d(u, y), d(v, x))?;
            if value > out.delta2 {
                out.delta2 = value;
                out.witness = Some([u, v, x, y]);
            }
        }
    }
    Ok(out)
}

/// Solver settings.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Options {
    /// Maximum number of BFS vectors kept; 0 recomputes every time.
    pub cache_capacity: usize,
    pub use_heuristic: bool,
    pub use_pruning: bool,
    /// Stop scanning once this much time has passed and report a bracket.
    pub time_budget: Option<Duration>,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            cache_capacity: 1000,
            use_heuristic: true,
            use_pruning: true,
            time_budget: None,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counters {
    /// Far-apart pairs produced by the iterator, including the one that
    /// triggered termination.
    pub pairs_emitted: usize,
    /// Pairs that went through classification.
    pub pairs_evaluated: usize,
    pub tuples_tested: usize,
    pub bfs_runs: usize,
    pub cache_hits: usize,
    pub cache_misses: usize,
}

impl Counters {
    fn absorb(&mut self, other: &Counters) {
        self.pairs_emitted += other.pairs_emitted;
        self.pairs_evaluated += other.pairs_evaluated;
        self.tuples_tested += other.tuples_tested;
        self.bfs_runs += other.bfs_runs;
        self.cache_hits += other.cache_hits;
        self.cache_misses += other.cache_misses;
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HyperbolicityReport {
    /// Best value found; exact unless `interrupted` is set.
    pub delta2: DeltaDoubled,
    /// Four vertices whose 4-point value equals `delta2`, when `n ≥ 4`.
    pub witness: Option<[Vertex; 4]>,
    /// Value of the lower-bound heuristic (0 when disabled).
    pub heuristic: DeltaDoubled,
    pub counters: Counters,
    pub peak_store_entries: usize,
    pub peak_cache_bytes: usize,
    /// `(lower, upper)` on `2δ` when the time budget ran out.
    pub interrupted: Option<(DeltaDoubled, DeltaDoubled)>,
}

/// What the solver sees for one classified pair; handed to the observer of
/// [`run_observed`].
pub struct PairTrace<'a> {
    pub x: Vertex,
    pub y: Vertex,
    pub d: u32,
    pub delta2: DeltaDoubled,
    pub dx: &'a DistanceVector,
    pub dy: &'a DistanceVector,
    pub seen: &'a [bool],
    pub ecc: &'a EccVector,
}

/// Hyperbolicity of a connected graph (normally a biconnected component).
pub fn run(g: &Graph, opts: &Options) -> Result<HyperbolicityReport> {
    run_observed(g, opts, |_| {})
}

/// [`run`] with a callback invoked after each pair is classified.
pub fn run_observed<F>(g: &Graph, opts: &Options, mut observe: F) -> Result<HyperbolicityReport>
where
    F: FnMut(&PairTrace<'_>),
{
    let start = Instant::now();
    let n = g.num_vertices();
    let mut report = HyperbolicityReport::default();
    if n < 4 {
        if !g.is_connected() {
            let visited = bfs(g, 0).visited_count();
            return Err(Error::Disconnected { visited, n });
        }
        return Ok(report);
    }

    let mut seeds = Vec::new();
    let mut sources = Vec::new();
    let ecc = all_eccentricities(g, |dv| {
        seeds.push(far_sets_from_distances(g, dv).expect("eccentricity BFS is complete"));
        if opts.use_heuristic && sources.len() < HEURISTIC_PAIRS {
            sources.push(dv.clone());
        }
    })?;
    let counters = &mut report.counters;
    counters.bfs_runs += seeds.len();

    let mut delta2 = DeltaDoubled(0);
    if opts.use_heuristic {
        let h = lower_bound_heuristic(g, &sources)?;
        counters.bfs_runs += h.bfs_runs;
        delta2 = h.delta2;
        report.heuristic = h.delta2;
        report.witness = h.witness;
    }
    drop(sources);

    let center = ecc.center().expect("nonempty graph");
    let dc = bfs(g, center);
    counters.bfs_runs += 1;

    let mut store = FarApartStore::with_reported(g, &ecc);
    for b in seeds {
        store.fill_buckets(b);
    }
    store.set_floor(delta2.0.min(store.current_level()))?;

    let mut cache = BfsCache::new(opts.cache_capacity);
    let mut seen = vec![false; n];
    let mut stamp = vec![0u32; n];
    let mut epoch = 0u32;
    let mut valuable = Vec::new();

    while let Some(pair) = store.next() {
        let (x, y, d) = (pair.u, pair.v, pair.d);
        if d <= delta2.0 {
            break;
        }
        if opts.time_budget.is_some_and(|b| start.elapsed() > b) {
            report.interrupted = Some((delta2, delta2.max(DeltaDoubled(d))));
            break;
        }
        counters.pairs_evaluated += 1;

        let cutoff2 = opts.use_pruning.then(|| prune_cutoff2(d, delta2));
        let dx = cache.get_or_compute(g, x, &ecc, cutoff2);
        let dy = cache.get_or_compute(g, y, &ecc, cutoff2);

        epoch += 1;
        valuable.clear();
        classify(&dx, &dy, &ecc, delta2, &seen, &dc, |v, is_val| {
            stamp[v as usize] = epoch;
            if is_val {
                valuable.push(v);
            }
        });
        observe(&PairTrace {
            x,
            y,
            d,
            delta2,
            dx: &dx,
            dy: &dy,
            seen: &seen,
            ecc: &ecc,
        });

        for &v in &valuable {
            for dvw in d..=ecc.get(v) {
                for &w in store.mates(v, dvw)? {
                    if stamp[w as usize] != epoch {
                        continue;
                    }
                    counters.tuples_tested += 1;
                    let (dxv, dyv, dxw, dyw) = (dx.get(v), dy.get(v), dx.get(w), dy.get(w));
                    let value = delta4(d, dvw, dxv, dyw, dxw, dyv)?;
                    // With d(x,y) + d(v,w) the largest sum the value is at
                    // most 2·min(d(x,y), d(v,w)) = 2·d(x,y).
                    debug_assert!(
                        d + dvw < (dxv + dyw).max(dxw + dyv) || value.0 <= 2 * d,
                        "largest-sum bound violated"
                    );
                    if value > delta2 {
                        delta2 = value;
                        report.witness = Some([x, y, v, w]);
                    }
                }
            }
        }
        seen[x as usize] = true;
        seen[y as usize] = true;
        store.set_floor(delta2.0.min(store.current_level()))?;
    }

    if report.witness.is_none() && report.interrupted.is_none() {
        // 0-hyperbolic: every 4-tuple attains 0.
        report.witness = Some([0, 1, 2, 3]);
    }
    let stats = store.stats();
    report.delta2 = delta2;
    report.counters.pairs_emitted = stats.pairs_emitted;
    report.counters.bfs_runs += stats.bfs_runs + cache.misses();
    report.counters.cache_hits = cache.hits();
    report.counters.cache_misses = cache.misses();
    report.peak_store_entries = stats.peak_stored_entries;
    report.peak_cache_bytes = cache.peak_bytes();
    Ok(report)
}

/// Maximum over all biconnected components with at least four vertices.
/// Witness vertices refer to `g`. The time budget is shared across
/// components.
pub fn run_all_components(g: &Graph, opts: &Options) -> Result<HyperbolicityReport> {
    let start = Instant::now();
    let mut total = HyperbolicityReport::default();
    let mut lower = DeltaDoubled(0);
    let mut upper = DeltaDoubled(0);
    for block in biconnected_components(g) {
        if block.len() < 4 {
            continue;
        }
        let (sub, map) = g.induced_subgraph(&block);
        let mut local = opts.clone();
        local.time_budget = opts.time_budget.map(|b| b.saturating_sub(start.elapsed()));
        let r = run(&sub, &local)?;
        total.counters.absorb(&r.counters);
        total.peak_store_entries = total.peak_store_entries.max(r.peak_store_entries);
        total.peak_cache_bytes = total.peak_cache_bytes.max(r.peak_cache_bytes);
        total.heuristic = total.heuristic.max(r.heuristic);
        let (lo, hi) = r.interrupted.unwrap_or((r.delta2, r.delta2));
        if r.interrupted.is_some() {
            total.interrupted = Some((lo, hi));
        }
        upper = upper.max(hi);
        if r.delta2 > lower || total.witness.is_none() {
            lower = lower.max(r.delta2);
            if r.delta2 == lower {
                total.witness = r.witness.map(|w| w.map(|v| map[v as usize]));
            }
        }
    }
    total.delta2 = lower;
    if total.interrupted.is_some() {
        total.interrupted = Some((lower, upper));
    }
    Ok(total)
}
