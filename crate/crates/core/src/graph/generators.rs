//! Deterministic graph families. Seeded generators use ChaCha8, so a given
//! seed yields the same graph on every platform.

use std::collections::HashSet;

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, Vertex};
use crate::{Error, Result};

fn require(ok: bool, msg: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::Generator(msg.into()))
    }
}

pub fn path(k: usize) -> Result<Graph> {
    require(k >= 1, "path needs at least one vertex")?;
    Graph::from_edges(k, (1..k as Vertex).map(|i| (i - 1, i)))
}

pub fn cycle(k: usize) -> Result<Graph> {
    require(k >= 3, "cycle needs at least three vertices")?;
    let k = k as Vertex;
    Graph::from_edges(k as usize, (0..k).map(|i| (i, (i + 1) % k)))
}

pub fn clique(k: usize) -> Result<Graph> {
    require(k >= 1, "clique needs at least one vertex")?;
    let k = k as Vertex;
    Graph::from_edges(
        k as usize,
        (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))),
    )
}

/// `p × q` grid, vertex `(i, j)` has id `i·q + j`.
pub fn grid(p: usize, q: usize) -> Result<Graph> {
    require(p >= 1 && q >= 1, "grid sides must be positive")?;
    Graph::from_edges(p * q, grid_edges(p, q))
}

fn grid_edges(p: usize, q: usize) -> Vec<(Vertex, Vertex)> {
    let id = |i: usize, j: usize| (i * q + j) as Vertex;
    let mut edges = Vec::with_capacity(2 * p * q);
    for i in 0..p {
        for j in 0..q {
            if j + 1 < q {
                edges.push((id(i, j), id(i, j + 1)));
            }
            if i + 1 < p {
                edges.push((id(i, j), id(i + 1, j)));
            }
        }
    }
    edges
}

/// Grid with `⌊fraction · m⌋` edges removed uniformly at random. The result
/// may be disconnected; callers usually keep the largest biconnected
/// component.
pub fn grid_with_deletions(p: usize, q: usize, fraction: f64, seed: u64) -> Result<Graph> {
    require(p >= 1 && q >= 1, "grid sides must be positive")?;
    require(
        (0.0..1.0).contains(&fraction),
        "deletion fraction must lie in [0, 1)",
    )?;
    let edges = grid_edges(p, q);
    let remove = (fraction * edges.len() as f64).floor() as usize;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drop = vec![false; edges.len()];
    for i in index::sample(&mut rng, edges.len(), remove) {
        drop[i] = true;
    }
    let kept = edges
        .into_iter()
        .zip(drop)
        .filter(|(_, d)| !d)
        .map(|(e, _)| e);
    Graph::from_edges(p * q, kept)
}

/// Connected graph with exactly `m` edges: a random spanning tree plus
/// uniformly chosen extra edges.
pub fn random_connected(n: usize, m: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, "graph needs at least one vertex")?;
    let max_edges = n * (n - 1) / 2;
    require(
        m + 1 >= n && m <= max_edges,
        format!(
            "need {} <= m <= {max_edges} for n = {n}, got m = {m}",
            n - 1
        ),
    )?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = random_tree_edges(n, &mut rng);
    let mut present: HashSet<(Vertex, Vertex)> = edges.iter().copied().collect();

    let extra = m - edges.len();
    if extra > 0 && 2 * m > max_edges {
        // Dense: sample directly from the complement.
        let mut missing: Vec<(Vertex, Vertex)> = (0..n as Vertex)
            .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)))
            .filter(|e| !present.contains(e))
            .collect();
        missing.shuffle(&mut rng);
        edges.extend(missing.into_iter().take(extra));
    } else {
        while edges.len() < m {
            let u = rng.gen_range(0..n as Vertex);
            let v = rng.gen_range(0..n as Vertex);
            if u == v {
                continue;
            }
            let e = (u.min(v), u.max(v));
            if present.insert(e) {
                edges.push(e);
            }
        }
    }
    Graph::from_edges(n, edges)
}

fn random_tree_edges(n: usize, rng: &mut ChaCha8Rng) -> Vec<(Vertex, Vertex)> {
    let mut perm: Vec<Vertex> = (0..n as Vertex).collect();
    perm.shuffle(rng);
    (1..n)
        .map(|i| {
            let (a, b) = (perm[i], perm[rng.gen_range(0..i)]);
            (a.min(b), a.max(b))
        })
        .collect()
}

/// Uniform random recursive tree on `n` vertices with shuffled labels.
pub fn random_tree(n: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, "tree needs at least one vertex")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Graph::from_edges(n, random_tree_edges(n, &mut rng))
}

/// Connected block graph (every biconnected component a clique) on exactly
/// `n` vertices: cliques of 2 to 5 vertices glued at random existing
/// vertices.
pub fn random_block_graph(n: usize, seed: u64) -> Result<Graph> {
    require(n >= 1, "block graph needs at least one vertex")?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    let mut size = 1usize;
    while size < n {
        let anchor = rng.gen_range(0..size) as Vertex;
        let fresh = rng.gen_range(1..=4usize).min(n - size);
        let mut members = vec![anchor];
        members.extend((size..size + fresh).map(|v| v as Vertex));
        for (i, &a) in members.iter().enumerate() {
            for &b in &members[i + 1..] {
                edges.push((a, b));
            }
        }
        size += fresh;
    }
    Graph::from_edges(n, edges)
}
