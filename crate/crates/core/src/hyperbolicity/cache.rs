use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use crate::graph::{bfs, pruned_bfs, DistanceVector, EccVector, Graph, Vertex};

/// Bounded least-recently-used cache of BFS distance vectors.
///
/// Each entry carries the value of a counter `τ` at its last access; a full
/// cache evicts the entry with the smallest stamp. Vectors are handed out as
/// `Rc` so evicting an entry never invalidates a vector the caller still
/// holds. Capacity 0 disables caching: every request runs a fresh search.
#[derive(Debug)]
pub struct BfsCache {
    capacity: usize,
    tau: u64,
    entries: HashMap<Vertex, (Rc<DistanceVector>, u64)>,
    by_age: BTreeMap<u64, Vertex>,
    hits: usize,
    misses: usize,
    bytes: usize,
    peak_bytes: usize,
}

impl BfsCache {
    pub fn new(capacity: usize) -> Self {
        Self {
            capacity,
            tau: 0,
            entries: HashMap::new(),
            by_age: BTreeMap::new(),
            hits: 0,
            misses: 0,
            bytes: 0,
            peak_bytes: 0,
        }
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn contains(&self, x: Vertex) -> bool {
        self.entries.contains_key(&x)
    }

    pub fn hits(&self) -> usize {
        self.hits
    }

    pub fn misses(&self) -> usize {
        self.misses
    }

    /// Largest total heap size of the cached vectors seen so far.
    pub fn peak_bytes(&self) -> usize {
        self.peak_bytes
    }

    /// Distances from `x`, pruned with `cutoff2` when given, otherwise a
    /// plain BFS.
    ///
    /// A cached vector is returned as-is. That is sound only while cutoffs
    /// requested for the same source never decrease: a vector pruned with a
    /// smaller cutoff visits a superset of the vertices a larger cutoff would
    /// admit, with the same exact distances.
    pub fn get_or_compute(
        &mut self,
        g: &Graph,
        x: Vertex,
        ecc: &EccVector,
        cutoff2: Option<i64>,
    ) -> Rc<DistanceVector> {
        self.tau += 1;
        if let Some((dv, age)) = self.entries.get_mut(&x) {
            self.hits += 1;
            self.by_age.remove(age);
            *age = self.tau;
            self.by_age.insert(self.tau, x);
            return Rc::clone(dv);
        }
        self.misses += 1;
        let dv = Rc::new(match cutoff2 {
            Some(c) => pruned_bfs(g, x, ecc, c),
            None => bfs(g, x),
        });
        if self.capacity == 0 {
            return dv;
        }
        if self.entries.len() == self.capacity {
            let (_, old) = self.by_age.pop_first().expect("full cache is nonempty");
            let (evicted, _) = self.entries.remove(&old).expect("age index in sync");
            self.bytes -= evicted.heap_bytes();
        }
        self.bytes += dv.heap_bytes();
        self.peak_bytes = self.peak_bytes.max(self.bytes);
        self.entries.insert(x, (Rc::clone(&dv), self.tau));
        self.by_age.insert(self.tau, x);
        dv
    }
}
