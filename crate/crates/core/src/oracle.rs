//! Brute-force references. Slow on purpose; the test suites compare the
//! engineered code paths against these.

use crate::farpairs::{far_sets_from_distances, FarPair};
use crate::graph::{bfs, Graph, Vertex, INF};
use crate::hyperbolicity::DeltaDoubled;
use crate::{Error, Result};

/// Default size guard for [`brute_hyperbolicity`].
pub const DEFAULT_ORACLE_LIMIT: usize = 500;

fn require_connected(g: &Graph, dist: &[u32]) -> Result<()> {
    let reached = dist.iter().filter(|&&d| d != INF).count();
    if reached != g.num_vertices() {
        return Err(Error::Disconnected {
            visited: reached,
            n: g.num_vertices(),
        });
    }
    Ok(())
}

/// All far-apart pairs from the far sets of every vertex: `O(nm)` time,
/// `O(n²)` space. Sorted by decreasing distance, then `(u, v)`.
pub fn brute_far_pairs(g: &Graph) -> Result<Vec<FarPair>> {
    let n = g.num_vertices();
    let mut far = vec![false; n * n];
    let mut dist = vec![0u32; n * n];
    for s in g.vertices() {
        let dv = bfs(g, s);
        require_connected(g, dv.distances())?;
        let b = far_sets_from_distances(g, &dv)?;
        for d in 0..=b.max_distance() {
            for &u in b.at(d) {
                far[s as usize * n + u as usize] = true;
            }
        }
        dist[s as usize * n..(s as usize + 1) * n].copy_from_slice(dv.distances());
    }
    let mut pairs = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if far[u * n + v] && far[v * n + u] {
                pairs.push(FarPair {
                    u: u as Vertex,
                    v: v as Vertex,
                    d: dist[u * n + v],
                });
            }
        }
    }
    sort_pairs(&mut pairs);
    Ok(pairs)
}

/// Same output with `O(n)` working space: for each `u` and each `u`-far `v`,
/// a BFS from every neighbor `w` of `u` checks that none is farther from
/// `v`. `O(m²)` time.
pub fn low_memory_far_pairs(g: &Graph) -> Result<Vec<FarPair>> {
    let mut pairs = Vec::new();
    for u in g.vertices() {
        let du = bfs(g, u);
        require_connected(g, du.distances())?;
        let b = far_sets_from_distances(g, &du)?;
        let mut candidates: Vec<Vertex> = (1..=b.max_distance())
            .flat_map(|d| b.at(d).iter().copied())
            .filter(|&v| u < v)
            .collect();
        for &w in g.neighbors(u) {
            let dw = bfs(g, w);
            candidates.retain(|&v| dw.get(v) <= du.get(v));
        }
        pairs.extend(
            candidates
                .into_iter()
                .map(|v| FarPair { u, v, d: du.get(v) }),
        );
    }
    sort_pairs(&mut pairs);
    Ok(pairs)
}

/// Canonical order: decreasing distance, then ascending `(u, v)`, which is
/// also the order the lazy iterator emits in.
pub fn sort_pairs(pairs: &mut [FarPair]) {
    pairs.sort_unstable_by(|a, b| b.d.cmp(&a.d).then((a.u, a.v).cmp(&(b.u, b.v))));
}

/// Maximum of `δ(u, v, x, y)` over all 4-subsets using a full distance
/// table. Graphs with fewer than four vertices give 0 with no witness.
pub fn brute_hyperbolicity(g: &Graph) -> Result<(DeltaDoubled, Option<[Vertex; 4]>)> {
    brute_hyperbolicity_with_limit(g, DEFAULT_ORACLE_LIMIT)
}

pub fn brute_hyperbolicity_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<(DeltaDoubled, Option<[Vertex; 4]>)> {
    let n = g.num_vertices();
    if n > limit {
        return Err(Error::OracleTooLarge { n, limit });
    }
    let mut dist = vec![0u32; n * n];
    for s in g.vertices() {
        let dv = bfs(g, s);
        require_connected(g, dv.distances())?;
        dist[s as usize * n..(s as usize + 1) * n].copy_from_slice(dv.distances());
    }
    let d = |a: usize, b: usize| dist[a * n + b];

    let mut best = DeltaDoubled(0);
    let mut witness = None;
    for u in 0..n {
        for v in u + 1..n {
            for x in v + 1..n {
                for y in x + 1..n {
                    let mut sums = [d(u, v) + d(x, y), d(u, x) + d(v, y), d(u, y) + d(v, x)];
                    sums.sort_unstable();
                    let value = DeltaDoubled(sums[2] - sums[1]);
                    if witness.is_none() || value > best {
                        best = value;
                        witness = Some([u, v, x, y].map(|i| i as Vertex));
                    }
                }
            }
        }
    }
    Ok((best, witness))
}
