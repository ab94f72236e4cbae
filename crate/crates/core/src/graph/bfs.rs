use super::{DistanceVector, EccVector, Graph, Vertex, INF};

/// Breadth-first search from `source`.
pub fn bfs(g: &Graph, source: Vertex) -> DistanceVector {
    search(g, source, |_, _| true, true)
}

/// BFS from `x` that only enqueues vertices `v` with
/// `2·ecc(v) − 2·d(x,v) ≥ cutoff2`.
///
/// `cutoff2` is twice the (half-integral) cutoff `c`. The hyperbolicity
/// solver passes `2c = 3·(2δL) − 3 − 2·d(x,y)`. The source is always
/// visited. Every vertex satisfying the inequality has a neighbor one step
/// closer to `x` that satisfies it too, so the visited set is exactly the
/// set of satisfying vertices reachable through satisfying vertices, and
/// visited vertices carry exact distances.
pub fn pruned_bfs(g: &Graph, x: Vertex, ecc: &EccVector, cutoff2: i64) -> DistanceVector {
    let vacuous = cutoff2 <= -2 * i64::from(ecc.diameter());
    search(
        g,
        x,
        |v, d| 2 * i64::from(ecc.get(v)) - 2 * i64::from(d) >= cutoff2,
        vacuous,
    )
}

fn search<F>(g: &Graph, source: Vertex, admit: F, complete: bool) -> DistanceVector
where
    F: Fn(Vertex, u32) -> bool,
{
    let n = g.num_vertices();
    let mut dist = vec![INF; n];
    let mut order = Vec::with_capacity(if complete { n } else { 0 });
    dist[source as usize] = 0;
    order.push(source);
    let mut head = 0;
    while head < order.len() {
        let u = order[head];
        head += 1;
        let next = dist[u as usize] + 1;
        for &v in g.neighbors(u) {
            if dist[v as usize] == INF && admit(v, next) {
                dist[v as usize] = next;
                order.push(v);
            }
        }
    }
    DistanceVector::new(source, dist, order, complete)
}
