//! Compressed adjacency graphs, BFS, biconnected decomposition and
//! synthetic generators.

mod bcc;
mod bfs;
pub mod generators;
mod io;

pub use bcc::{biconnected_components, largest_biconnected_component};
pub use bfs::{bfs, pruned_bfs};
pub use io::{parse_edge_list, write_edge_list, LabeledGraph};

use crate::{Error, Result};

/// Vertex identifier. Ids are dense, `0..n`.
pub type Vertex = u32;

/// Sentinel hop count for vertices a BFS did not reach.
pub const INF: u32 = u32::MAX;

/// Simple undirected graph in compressed row layout.
///
/// Neighbor lists are sorted ascending and contain no self-loops or
/// duplicates, so every traversal over a `Graph` is deterministic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<Vertex>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Self-loops and repeated edges (in
    /// either orientation) are dropped.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n > u32::MAX as usize {
            return Err(Error::VertexOutOfRange {
                vertex: n as u64,
                n,
            });
        }
        let mut arcs: Vec<(Vertex, Vertex)> = Vec::new();
        for (u, v) in edges {
            for x in [u, v] {
                if x as usize >= n {
                    return Err(Error::VertexOutOfRange {
                        vertex: x as u64,
                        n,
                    });
                }
            }
            if u != v {
                arcs.push((u, v));
                arcs.push((v, u));
            }
        }
        arcs.sort_unstable();
        arcs.dedup();

        let mut offsets = vec![0usize; n + 1];
        for &(u, _) in &arcs {
            offsets[u as usize + 1] += 1;
        }
        for i in 0..n {
            offsets[i + 1] += offsets[i];
        }
        let targets = arcs.into_iter().map(|(_, v)| v).collect();
        Ok(Self { offsets, targets })
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.targets.len() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        let v = v as usize;
        &self.targets[self.offsets[v]..self.offsets[v + 1]]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        let v = v as usize;
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> {
        0..self.num_vertices() as Vertex
    }

    /// Each undirected edge once, as `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// Subgraph induced by `vertices`, renumbered in the given order. The
    /// returned map sends each new id to its id in `self`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_id = vec![INF; self.num_vertices()];
        for (i, &v) in vertices.iter().enumerate() {
            new_id[v as usize] = i as Vertex;
        }
        let mut edges = Vec::new();
        for &u in vertices {
            for &v in self.neighbors(u) {
                let (a, b) = (new_id[u as usize], new_id[v as usize]);
                if b != INF && a < b {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(vertices.len(), edges).expect("ids are in range");
        (g, vertices.to_vec())
    }

    pub fn is_connected(&self) -> bool {
        self.num_vertices() == 0 || bfs(self, 0).visited_count() == self.num_vertices()
    }
}

/// Hop distances from one source. Entries the search did not reach hold
/// [`INF`]; `order` lists the reached vertices in visiting order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceVector {
    source: Vertex,
    dist: Vec<u32>,
    order: Vec<Vertex>,
    complete: bool,
}

impl DistanceVector {
    pub(crate) fn new(source: Vertex, dist: Vec<u32>, order: Vec<Vertex>, complete: bool) -> Self {
        Self {
            source,
            dist,
            order,
            complete,
        }
    }

    pub fn source(&self) -> Vertex {
        self.source
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> u32 {
        self.dist[v as usize]
    }

    pub fn distances(&self) -> &[u32] {
        &self.dist
    }

    /// Vertices reached by the search, in BFS order.
    pub fn visited(&self) -> &[Vertex] {
        &self.order
    }

    pub fn visited_count(&self) -> usize {
        self.order.len()
    }

    /// `false` for the output of a pruned BFS, even when pruning happened
    /// to cut nothing.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Largest finite entry (the source's eccentricity for a complete
    /// search on a connected graph).
    pub fn max_distance(&self) -> u32 {
        self.order.last().map_or(0, |&v| self.dist[v as usize])
    }

    pub fn heap_bytes(&self) -> usize {
        (self.dist.capacity() + self.order.capacity()) * std::mem::size_of::<u32>()
    }
}

/// Exact eccentricities of a connected graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EccVector {
    ecc: Vec<u32>,
    diameter: u32,
    radius: u32,
}

impl EccVector {
    pub fn from_values(ecc: Vec<u32>) -> Self {
        let diameter = ecc.iter().copied().max().unwrap_or(0);
        let radius = ecc.iter().copied().min().unwrap_or(0);
        Self {
            ecc,
            diameter,
            radius,
        }
    }

    #[inline]
    pub fn get(&self, v: Vertex) -> u32 {
        self.ecc[v as usize]
    }

    pub fn values(&self) -> &[u32] {
        &self.ecc
    }

    pub fn diameter(&self) -> u32 {
        self.diameter
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Vertex of minimum eccentricity, smallest id on ties.
    pub fn center(&self) -> Option<Vertex> {
        self.ecc
            .iter()
            .position(|&e| e == self.radius)
            .map(|v| v as Vertex)
    }
}
