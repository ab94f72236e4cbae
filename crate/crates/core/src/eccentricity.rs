//! Exact eccentricities by iterative bound refinement.
//!
//! Every vertex keeps a lower and an upper bound on its eccentricity. A BFS
//! from `v` with eccentricity `e` tightens, for each `u` at distance `d`,
//! `lower[u] ≥ max(d, e − d)` and `upper[u] ≤ e + d`. Sources alternate
//! between the unresolved vertex with the largest upper bound and the one
//! with the smallest lower bound (smallest id on ties), until every gap is
//! closed.

use crate::graph::{bfs, DistanceVector, EccVector, Graph, Vertex, INF};
use crate::{Error, Result};

/// Refinement state; drive it with [`EccentricityBounds::step`].
#[derive(Clone, Debug)]
pub struct EccentricityBounds<'g> {
    graph: &'g Graph,
    lower: Vec<u32>,
    upper: Vec<u32>,
    unresolved: usize,
    steps: usize,
}

impl<'g> EccentricityBounds<'g> {
    pub fn new(graph: &'g Graph) -> Self {
        let n = graph.num_vertices();
        Self {
            graph,
            lower: vec![0; n],
            upper: vec![INF; n],
            unresolved: n,
            steps: 0,
        }
    }

    pub fn lower(&self) -> &[u32] {
        &self.lower
    }

    pub fn upper(&self) -> &[u32] {
        &self.upper
    }

    pub fn is_done(&self) -> bool {
        self.unresolved == 0
    }

    /// Number of BFSes performed so far.
    pub fn bfs_count(&self) -> usize {
        self.steps
    }

    fn next_source(&self) -> Option<Vertex> {
        let open = self
            .graph
            .vertices()
            .filter(|&v| self.lower[v as usize] != self.upper[v as usize]);
        if self.steps == 0 {
            // min_by_key keeps the first minimum, hence the smallest id.
            return open.min_by_key(|&v| std::cmp::Reverse(self.graph.degree(v)));
        }
        if self.steps % 2 == 1 {
            open.min_by_key(|&v| std::cmp::Reverse(self.upper[v as usize]))
        } else {
            open.min_by_key(|&v| self.lower[v as usize])
        }
    }

    /// Runs one BFS and tightens all bounds. Returns `Ok(None)` once every
    /// eccentricity is exact.
    pub fn step(&mut self) -> Result<Option<DistanceVector>> {
        let Some(v) = self.next_source() else {
            return Ok(None);
        };
        let dv = bfs(self.graph, v);
        self.steps += 1;
        let n = self.graph.num_vertices();
        if dv.visited_count() != n {
            return Err(Error::Disconnected {
                visited: dv.visited_count(),
                n,
            });
        }
        let e = dv.max_distance();
        for (u, &d) in dv.distances().iter().enumerate() {
            if self.lower[u] == self.upper[u] {
                continue;
            }
            self.lower[u] = self.lower[u].max(d).max(e - d);
            self.upper[u] = self.upper[u].min(e + d);
            if self.lower[u] == self.upper[u] {
                self.unresolved -= 1;
            }
        }
        debug_assert_eq!(self.lower[v as usize], e);
        Ok(Some(dv))
    }

    pub fn finish(self) -> EccVector {
        debug_assert!(self.is_done());
        EccVector::from_values(self.lower)
    }
}

/// Exact eccentricities of a connected graph. `on_bfs` sees every BFS the
/// refinement performs, with its complete distance vector.
pub fn all_eccentricities<F>(g: &Graph, mut on_bfs: F) -> Result<EccVector>
where
    F: FnMut(&DistanceVector),
{
    let mut bounds = EccentricityBounds::new(g);
    while let Some(dv) = bounds.step()? {
        on_bfs(&dv);
    }
    Ok(bounds.finish())
}

pub fn eccentricities(g: &Graph) -> Result<EccVector> {
    all_eccentricities(g, |_| {})
}

pub fn diameter(g: &Graph) -> Result<u32> {
    Ok(eccentricities(g)?.diameter())
}

pub fn radius(g: &Graph) -> Result<u32> {
    Ok(eccentricities(g)?.radius())
}
