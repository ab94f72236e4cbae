//! Far-apart pairs, enumerated lazily by non-increasing distance.
//!
//! Vertex `u` is *`v`-far* when no neighbor of `u` is strictly farther from
//! `v` than `u` itself, i.e. `u` is a leaf of every shortest-path tree
//! rooted at `v`. A pair is *far-apart* when each endpoint is far from the
//! other.
//!
//! [`FarApartStore`] keeps, for every distance `d`, a map from vertex `u` to
//! the sorted list `F_u^d` of `u`-far vertices at distance `d`. A vertex whose
//! lists have not been computed yet is represented by a single empty
//! *sentinel* list at `d = ecc(u)`; meeting it triggers a BFS. When the
//! cursor sits at level `d`, every vertex with eccentricity above `d` has
//! already been filled, so all far-apart pairs at `d` are discoverable.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::ops::Bound;

use crate::eccentricity::all_eccentricities;
use crate::graph::{bfs, DistanceVector, EccVector, Graph, Vertex, INF};
use crate::{Error, Result};

/// A far-apart pair with `u < v` at distance `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FarPair {
    pub u: Vertex,
    pub v: Vertex,
    pub d: u32,
}

/// The far sets of one source, bucketed by distance. `at(d)` is sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FarBuckets {
    source: Vertex,
    buckets: Vec<Vec<Vertex>>,
}

impl FarBuckets {
    pub fn source(&self) -> Vertex {
        self.source
    }

    /// Largest distance with a bucket (the source's eccentricity).
    pub fn max_distance(&self) -> u32 {
        self.buckets.len().saturating_sub(1) as u32
    }

    pub fn at(&self, d: u32) -> &[Vertex] {
        self.buckets.get(d as usize).map_or(&[], Vec::as_slice)
    }

    /// `|F_v|`, the number of source-far vertices over all distances.
    pub fn total(&self) -> usize {
        self.buckets.iter().map(Vec::len).sum()
    }
}

/// Splits a complete BFS into per-distance lists of source-far vertices.
pub fn far_sets_from_distances(g: &Graph, dv: &DistanceVector) -> Result<FarBuckets> {
    if !dv.is_complete() {
        return Err(Error::PrunedDistances(dv.source()));
    }
    let mut buckets = vec![Vec::new(); dv.max_distance() as usize + 1];
    for u in g.vertices() {
        let d = dv.get(u);
        if d == INF {
            continue;
        }
        if g.neighbors(u).iter().all(|&w| dv.get(w) <= d) {
            buckets[d as usize].push(u);
        }
    }
    Ok(FarBuckets {
        source: dv.source(),
        buckets,
    })
}

/// Counters exposed for reporting and for the memory tests.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct StoreStats {
    /// BFSes run by the store itself (seeded fills not included).
    pub bfs_runs: usize,
    pub pairs_emitted: usize,
    /// Partner entries currently held across all levels and the reported map.
    pub stored_entries: usize,
    pub peak_stored_entries: usize,
}

#[derive(Debug)]
struct Sweep {
    u: Vertex,
    partners: Vec<Vertex>,
    index: usize,
    survivors: Vec<Vertex>,
}

type Level = BTreeMap<Vertex, Vec<Vertex>>;

fn level_entries(level: &Level) -> usize {
    level.values().map(Vec::len).sum()
}

/// The lazy far-apart pair iterator.
///
/// Pairs come out by non-increasing distance; within a distance by
/// ascending `u`, then ascending `v`; each pair once with `u < v`.
#[derive(Debug)]
pub struct FarApartStore<'g> {
    graph: &'g Graph,
    ecc: &'g EccVector,
    levels: Vec<Level>,
    filled: Vec<bool>,
    /// Partners reported at the current level, kept only when mates are
    /// needed. Swapped into the level once it is exhausted.
    reported: Option<Level>,
    floor: u32,
    level: u32,
    last: Option<Vertex>,
    sweep: Option<Sweep>,
    stats: StoreStats,
}

impl<'g> FarApartStore<'g> {
    /// Store that drops each level once it has been enumerated.
    pub fn new(graph: &'g Graph, ecc: &'g EccVector) -> Self {
        Self::build(graph, ecc, false)
    }

    /// Store that keeps every reported pair so [`mates`](Self::mates) can
    /// answer queries at the current and all higher levels.
    pub fn with_reported(graph: &'g Graph, ecc: &'g EccVector) -> Self {
        Self::build(graph, ecc, true)
    }

    /// Store prefilled from BFSes already performed (typically by the
    /// eccentricity pass).
    pub fn init<I>(graph: &'g Graph, ecc: &'g EccVector, seeds: I) -> Self
    where
        I: IntoIterator<Item = FarBuckets>,
    {
        let mut store = Self::new(graph, ecc);
        for b in seeds {
            store.fill_buckets(b);
        }
        store
    }

    fn build(graph: &'g Graph, ecc: &'g EccVector, keep_reported: bool) -> Self {
        let diameter = ecc.diameter();
        let mut levels = vec![Level::new(); diameter as usize + 1];
        for u in graph.vertices() {
            let e = ecc.get(u);
            if e > 0 {
                levels[e as usize].insert(u, Vec::new());
            }
        }
        Self {
            graph,
            ecc,
            levels,
            filled: vec![false; graph.num_vertices()],
            reported: keep_reported.then(Level::new),
            floor: 0,
            level: diameter,
            last: None,
            sweep: None,
            stats: StoreStats::default(),
        }
    }

    pub fn stats(&self) -> StoreStats {
        self.stats
    }

    /// Distance of the level the cursor is on.
    pub fn current_level(&self) -> u32 {
        self.level
    }

    pub fn floor(&self) -> u32 {
        self.floor
    }

    pub fn is_filled(&self, v: Vertex) -> bool {
        self.filled[v as usize]
    }

    /// Stored map at distance `d` (sentinels appear as empty lists).
    pub fn level(&self, d: u32) -> impl Iterator<Item = (Vertex, &[Vertex])> {
        self.levels
            .get(d as usize)
            .into_iter()
            .flat_map(|l| l.iter().map(|(&u, f)| (u, f.as_slice())))
    }

    /// Every vertex whose eccentricity exceeds the cursor level (and the
    /// floor) has been filled.
    pub fn level_invariant_holds(&self) -> bool {
        self.graph.vertices().all(|v| {
            let e = self.ecc.get(v);
            e <= self.level.max(self.floor) || self.filled[v as usize]
        })
    }

    fn grow(&mut self, added: usize) {
        self.stats.stored_entries += added;
        self.stats.peak_stored_entries = self
            .stats
            .peak_stored_entries
            .max(self.stats.stored_entries);
    }

    fn shrink(&mut self, removed: usize) {
        self.stats.stored_entries -= removed;
    }

    /// Inserts the far sets of `dv.source()` from a complete BFS. Refilling
    /// a filled vertex is a no-op.
    pub fn fill(&mut self, dv: &DistanceVector) -> Result<()> {
        if self.filled[dv.source() as usize] {
            return Ok(());
        }
        let b = far_sets_from_distances(self.graph, dv)?;
        self.fill_buckets(b);
        Ok(())
    }

    /// Like [`fill`](Self::fill) with precomputed buckets. Levels at or
    /// below the floor are skipped.
    pub fn fill_buckets(&mut self, b: FarBuckets) {
        let u = b.source;
        if self.filled[u as usize] {
            return;
        }
        self.filled[u as usize] = true;
        let e = self.ecc.get(u);
        if e > 0 {
            if let Some(sentinel) = self.levels[e as usize].get(&u) {
                debug_assert!(sentinel.is_empty());
                self.levels[e as usize].remove(&u);
            }
        }
        let mut added = 0;
        for (d, far) in b.buckets.into_iter().enumerate().skip(1) {
            if d as u32 <= self.floor || far.is_empty() {
                continue;
            }
            debug_assert!(d as u32 <= self.level, "fill above the cursor");
            added += far.len();
            self.levels[d].insert(u, far);
        }
        self.grow(added);
    }

    fn ensure_filled(&mut self, v: Vertex) {
        if !self.filled[v as usize] {
            let dv = bfs(self.graph, v);
            self.stats.bfs_runs += 1;
            self.fill(&dv).expect("plain BFS is complete");
        }
    }

    fn is_far_at(&self, d: u32, from: Vertex, candidate: Vertex) -> bool {
        self.levels[d as usize]
            .get(&from)
            .is_some_and(|f| f.binary_search(&candidate).is_ok())
    }

    /// Raises the minimum distance of interest: pairs at distance `≤ d_min`
    /// are never produced, and their levels are neither filled nor kept.
    /// Lowering the floor is a no-op.
    pub fn set_floor(&mut self, d_min: u32) -> Result<()> {
        if d_min > self.level {
            return Err(Error::FloorAboveCursor {
                floor: d_min,
                current: self.level,
            });
        }
        if d_min <= self.floor {
            return Ok(());
        }
        let top = d_min.min(self.level.saturating_sub(1));
        let mut freed = 0;
        for d in self.floor + 1..=top {
            freed += level_entries(&self.levels[d as usize]);
            self.levels[d as usize] = Level::new();
        }
        self.shrink(freed);
        self.floor = d_min;
        Ok(())
    }

    /// Previously reported far-apart partners of `v` at distance `d`, where
    /// `d` is at least the distance of the pair most recently returned.
    pub fn mates(&self, v: Vertex, d: u32) -> Result<&[Vertex]> {
        let Some(reported) = &self.reported else {
            return Err(Error::MatesUnavailable);
        };
        if d < self.level {
            return Err(Error::MatesBelowCursor {
                requested: d,
                current: self.level,
            });
        }
        let list = if d == self.level {
            reported.get(&v)
        } else {
            self.levels.get(d as usize).and_then(|l| l.get(&v))
        };
        Ok(list.map_or(&[], Vec::as_slice))
    }

    fn record(&mut self, u: Vertex, w: Vertex) {
        if let Some(reported) = &mut self.reported {
            reported.entry(u).or_default().push(w);
            reported.entry(w).or_default().push(u);
            self.grow(2);
        }
    }

    fn finish_level(&mut self) {
        let d = self.level as usize;
        let spent = std::mem::take(&mut self.levels[d]);
        self.shrink(level_entries(&spent));
        if let Some(reported) = &mut self.reported {
            // Every far-apart pair at d has been reported; the reported map
            // is exactly the far-apart adjacency at this distance.
            self.levels[d] = std::mem::take(reported);
        }
        self.level -= 1;
        self.last = None;
    }

    fn next_pair(&mut self) -> Option<FarPair> {
        loop {
            if self.level == 0 || self.level <= self.floor {
                return None;
            }
            let d = self.level;
            let mut sweep = match self.sweep.take() {
                Some(s) => s,
                None => {
                    let lower = self.last.map_or(Bound::Unbounded, Bound::Excluded);
                    let next = self.levels[d as usize]
                        .range((lower, Bound::Unbounded))
                        .next()
                        .map(|(&u, _)| u);
                    let Some(u) = next else {
                        self.finish_level();
                        continue;
                    };
                    self.ensure_filled(u);
                    let partners = self.levels[d as usize].remove(&u).unwrap_or_default();
                    Sweep {
                        u,
                        partners,
                        index: 0,
                        survivors: Vec::new(),
                    }
                }
            };
            let u = sweep.u;
            while sweep.index < sweep.partners.len() {
                let w = sweep.partners[sweep.index];
                sweep.index += 1;
                if w < u {
                    // (w, u) was decided during w's sweep, whose survivors
                    // are exactly w's far-apart partners at d.
                    debug_assert!(self.filled[w as usize]);
                    if self.is_far_at(d, w, u) {
                        sweep.survivors.push(w);
                    }
                    continue;
                }
                self.ensure_filled(w);
                if self.is_far_at(d, w, u) {
                    sweep.survivors.push(w);
                    self.sweep = Some(sweep);
                    self.record(u, w);
                    self.stats.pairs_emitted += 1;
                    return Some(FarPair { u, v: w, d });
                }
            }
            // Replace F_u^d by the partners that were confirmed far-apart.
            self.shrink(sweep.partners.len());
            if !sweep.survivors.is_empty() {
                self.grow(sweep.survivors.len());
                self.levels[d as usize].insert(u, sweep.survivors);
            }
            self.last = Some(u);
        }
    }
}

impl Iterator for FarApartStore<'_> {
    type Item = FarPair;

    fn next(&mut self) -> Option<FarPair> {
        self.next_pair()
    }
}

/// All far-apart pairs of a connected graph, in emission order.
pub fn far_apart_pairs(g: &Graph) -> Result<Vec<FarPair>> {
    let mut seeds = Vec::new();
    let ecc = all_eccentricities(g, |dv| {
        seeds.push(far_sets_from_distances(g, dv).expect("complete BFS"));
    })?;
    Ok(FarApartStore::init(g, &ecc, seeds).collect())
}

/// Vertices at distance at least `c` from `far.source()`, with their
/// distances, sorted by vertex id.
///
/// Reverse BFS from the far vertices: level `L_d` starts with the far
/// vertices at distance `d`; scanning `L_d` from `d = ecc` downwards, every
/// neighbor not already in `L_d ∪ L_{d+1}` lies at distance `d − 1`. Costs
/// `O(|F_v| + Σ_{u ∈ S} deg(u))`.
pub fn vertices_at_distance_at_least(
    g: &Graph,
    c: u32,
    far: &FarBuckets,
) -> Result<Vec<(Vertex, u32)>> {
    if c == 0 {
        return Err(Error::NonPositiveThreshold);
    }
    let top = far.max_distance();
    if c > top {
        return Ok(Vec::new());
    }
    let mut level_of: HashMap<Vertex, u32> = HashMap::new();
    let mut layers: Vec<Vec<Vertex>> = vec![Vec::new(); top as usize + 1];
    for d in c..=top {
        for &u in far.at(d) {
            level_of.insert(u, d);
            layers[d as usize].push(u);
        }
    }
    for d in (c + 1..=top).rev() {
        let layer = std::mem::take(&mut layers[d as usize]);
        for &u in &layer {
            for &w in g.neighbors(u) {
                if let Entry::Vacant(slot) = level_of.entry(w) {
                    slot.insert(d - 1);
                    layers[d as usize - 1].push(w);
                }
            }
        }
        layers[d as usize] = layer;
    }
    let mut out: Vec<(Vertex, u32)> = level_of.into_iter().collect();
    out.sort_unstable();
    Ok(out)
}
