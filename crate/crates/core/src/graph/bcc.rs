use std::cmp::Reverse;

use super::{Graph, Vertex, INF};
use crate::{Error, Result};

struct Frame {
    v: Vertex,
    parent: Vertex,
    next: usize,
}

/// Biconnected components (blocks) as sorted vertex lists.
///
/// Iterative Hopcroft–Tarjan with an edge stack, so deep DFS trees (long
/// paths, large grids) do not overflow the call stack. Every edge lies in
/// exactly one block; cut vertices appear in several. Isolated vertices
/// belong to no block. Blocks are ordered by their smallest vertex.
pub fn biconnected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let n = g.num_vertices();
    let mut disc = vec![0u32; n];
    let mut low = vec![0u32; n];
    let mut timer = 1u32;
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let mut stack: Vec<Frame> = Vec::new();
    let mut blocks = Vec::new();

    for root in g.vertices() {
        if disc[root as usize] != 0 || g.degree(root) == 0 {
            continue;
        }
        disc[root as usize] = timer;
        low[root as usize] = timer;
        timer += 1;
        stack.push(Frame {
            v: root,
            parent: INF,
            next: 0,
        });

        while let Some(frame) = stack.last_mut() {
            let v = frame.v;
            let nbrs = g.neighbors(v);
            if frame.next < nbrs.len() {
                let w = nbrs[frame.next];
                frame.next += 1;
                if disc[w as usize] == 0 {
                    edges.push((v, w));
                    disc[w as usize] = timer;
                    low[w as usize] = timer;
                    timer += 1;
                    stack.push(Frame {
                        v: w,
                        parent: v,
                        next: 0,
                    });
                } else if w != frame.parent && disc[w as usize] < disc[v as usize] {
                    edges.push((v, w));
                    low[v as usize] = low[v as usize].min(disc[w as usize]);
                }
                continue;
            }

            stack.pop();
            let Some(top) = stack.last() else { break };
            let p = top.v;
            low[p as usize] = low[p as usize].min(low[v as usize]);
            if low[v as usize] >= disc[p as usize] {
                // p separates the subtree of v: pop its block.
                let mut block = Vec::new();
                while let Some((a, b)) = edges.pop() {
                    block.push(a);
                    block.push(b);
                    if (a, b) == (p, v) {
                        break;
                    }
                }
                block.sort_unstable();
                block.dedup();
                blocks.push(block);
            }
        }
    }
    blocks.sort_by(|a: &Vec<Vertex>, b| a[0].cmp(&b[0]).then(b.len().cmp(&a.len())));
    blocks
}

/// Subgraph induced by the block with the most vertices; ties go to the
/// block whose smallest vertex id is smallest. Returns the block renumbered
/// in ascending original id, plus the map from new to original ids.
pub fn largest_biconnected_component(g: &Graph) -> Result<(Graph, Vec<Vertex>)> {
    let block = biconnected_components(g)
        .into_iter()
        .max_by_key(|b| (b.len(), Reverse(b[0])))
        .ok_or(Error::NoBiconnectedComponent)?;
    Ok(g.induced_subgraph(&block))
}
