//! Acceptance run: one PASS/FAIL/SKIP line per criterion, nonzero exit if
//! any criterion fails.
//!
//! Optional inputs:
//! * `FARAPART_DATASETS` names a directory holding `facebook_combined.txt`,
//!   `p2p-Gnutella09.txt` and `as20000102.txt` edge lists.
//! * `FARAPART_SLOW=1` also runs the far-pair percentage check on a
//!   regenerated 301×301 grid with 10% of its edges deleted.

use std::collections::{BTreeSet, HashSet};
use std::fs::File;
use std::io::BufReader;
use std::path::PathBuf;
use std::time::{Duration, Instant};

use farapart::eccentricity::{all_eccentricities, eccentricities};
use farapart::farpairs::{
    far_apart_pairs, far_sets_from_distances, vertices_at_distance_at_least, FarApartStore, FarPair,
};
use farapart::graph::generators::{
    clique, cycle, grid, grid_with_deletions, path, random_block_graph, random_connected,
    random_tree,
};
use farapart::graph::{bfs, largest_biconnected_component, parse_edge_list, pruned_bfs};
use farapart::hyperbolicity::{
    is_acceptable, run, run_all_components, run_observed, DeltaDoubled, Options,
};
use farapart::oracle::{brute_far_pairs, brute_hyperbolicity, low_memory_far_pairs, sort_pairs};
use farapart::{Graph, Vertex, INF};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

enum Verdict {
    Pass(String),
    Fail(String),
    Skip(String),
}

type Check = std::result::Result<String, String>;
type CheckFn = Box<dyn Fn() -> Verdict>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Random connected graph with `n` in `lo..=hi` and `m ≤ max_factor·n`.
fn random_graph(rng: &mut ChaCha8Rng, lo: usize, hi: usize, max_factor: usize) -> (Graph, String) {
    let n = rng.gen_range(lo..=hi);
    let max_m = (max_factor * n).min(n * (n - 1) / 2);
    let m = rng.gen_range(n - 1..=max_m.max(n - 1));
    let seed = rng.gen::<u64>();
    let g = random_connected(n, m, seed).expect("valid parameters");
    (g, format!("random_connected({n}, {m}, {seed})"))
}

fn named_families() -> Vec<(Graph, String)> {
    let mut out = Vec::new();
    for k in [4, 5, 6, 7, 9, 12] {
        out.push((cycle(k).unwrap(), format!("cycle({k})")));
    }
    for k in [4, 5, 8] {
        out.push((clique(k).unwrap(), format!("clique({k})")));
    }
    for (p, q) in [(2, 2), (2, 7), (3, 5), (4, 4), (5, 6), (6, 6)] {
        out.push((grid(p, q).unwrap(), format!("grid({p}, {q})")));
    }
    out.push((path(9).unwrap(), "path(9)".into()));
    out.push((random_tree(30, 1).unwrap(), "random_tree(30, 1)".into()));
    out.push((
        random_block_graph(30, 2).unwrap(),
        "random_block_graph(30, 2)".into(),
    ));
    let (bcc, _) =
        largest_biconnected_component(&grid_with_deletions(8, 8, 0.2, 5).unwrap()).unwrap();
    out.push((bcc, "bcc(grid_with_deletions(8, 8, 0.2, 5))".into()));
    out
}

fn all_distances(g: &Graph) -> Vec<Vec<u32>> {
    g.vertices()
        .map(|v| bfs(g, v).distances().to_vec())
        .collect()
}

fn criterion_1() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..500 {
        let (g, name) = random_graph(&mut rng, 4, 40, 3);
        let got = run(&g, &Options::default()).map_err(|e| format!("{name}: {e}"))?;
        let (want, _) = brute_hyperbolicity(&g).unwrap();
        ensure(got.delta2 == want, || {
            format!("{name}: run gives 2δ = {}, oracle {}", got.delta2.0, want.0)
        })?;
    }
    Ok("500 random graphs, 4 ≤ n ≤ 40, m ≤ 3n".into())
}

fn criterion_2() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..500 {
        let (g, name) = random_graph(&mut rng, 2, 60, 3);
        let got = far_apart_pairs(&g).map_err(|e| format!("{name}: {e}"))?;
        ensure(got.windows(2).all(|w| w[0].d >= w[1].d), || {
            format!("{name}: emission order not non-increasing")
        })?;
        let mut sorted = got.clone();
        sort_pairs(&mut sorted);
        let brute = brute_far_pairs(&g).unwrap();
        ensure(sorted == brute, || {
            format!("{name}: iterator differs from brute_far_pairs")
        })?;
        ensure(brute == low_memory_far_pairs(&g).unwrap(), || {
            format!("{name}: oracles disagree")
        })?;
    }
    Ok("500 random graphs, n ≤ 60".into())
}

fn criterion_3() -> Check {
    for p in 2..=12 {
        for q in 2..=12 {
            let n = far_apart_pairs(&grid(p, q).unwrap()).unwrap().len();
            ensure(n == 2, || format!("grid({p}, {q}) has {n} far-apart pairs"))?;
        }
    }
    for k in 2..=20 {
        let n = far_apart_pairs(&clique(k).unwrap()).unwrap().len();
        ensure(n == k * (k - 1) / 2, || {
            format!("clique({k}) has {n} far-apart pairs")
        })?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut graphs = named_families();
    graphs.extend((0..100).map(|_| random_graph(&mut rng, 2, 50, 3)));
    for (g, name) in &graphs {
        let pairs: HashSet<(Vertex, Vertex)> = far_apart_pairs(g)
            .unwrap()
            .iter()
            .map(|p| (p.u, p.v))
            .collect();
        let dist = all_distances(g);
        let diam = dist.iter().flatten().copied().max().unwrap_or(0);
        for u in g.vertices() {
            for v in u + 1..g.num_vertices() as Vertex {
                if dist[u as usize][v as usize] == diam {
                    ensure(pairs.contains(&(u, v)), || {
                        format!("{name}: diameter pair ({u}, {v}) missing")
                    })?;
                }
            }
        }
    }
    Ok("grids 2..12 × 2..12, cliques up to 20, diameter pairs on 122 graphs".into())
}

fn criterion_4() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let mut direct = 0;
    for i in 0..60 {
        let n = rng.gen_range(4..=200);
        let seed = rng.gen::<u64>();
        let (g, name) = if i % 2 == 0 {
            (
                random_tree(n, seed).unwrap(),
                format!("random_tree({n}, {seed})"),
            )
        } else {
            (
                random_block_graph(n, seed).unwrap(),
                format!("random_block_graph({n}, {seed})"),
            )
        };
        let r = run_all_components(&g, &Options::default()).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.delta2 == DeltaDoubled(0), || {
            format!("{name}: 2δ = {}", r.delta2.0)
        })?;
        // The solver on the whole graph scans every leaf pair when δ = 0,
        // so only the smaller graphs go through it directly.
        if n <= 60 {
            direct += 1;
            let r = run(&g, &Options::default()).map_err(|e| format!("{name}: {e}"))?;
            ensure(r.delta2 == DeltaDoubled(0), || {
                format!("{name}: whole-graph 2δ = {}", r.delta2.0)
            })?;
        }
    }
    Ok(format!(
        "30 trees and 30 block graphs, n ≤ 200, per block; {direct} with n ≤ 60 also whole"
    ))
}

fn criterion_5() -> Check {
    for k in 2..=6 {
        let g = grid(k, k).unwrap();
        let want = DeltaDoubled(2 * (k as u32 - 1));
        let (brute, _) = brute_hyperbolicity(&g).unwrap();
        ensure(brute == want, || {
            format!("oracle gives 2δ = {} on grid({k}, {k})", brute.0)
        })?;
        let got = run(&g, &Options::default()).unwrap().delta2;
        ensure(got == want, || {
            format!("run gives 2δ = {} on grid({k}, {k})", got.0)
        })?;
    }
    let mut slowest = Duration::ZERO;
    for k in [10, 50, 100, 200, 300] {
        let g = grid(k, k).unwrap();
        let start = Instant::now();
        let got = run(&g, &Options::default()).unwrap().delta2;
        let took = start.elapsed();
        slowest = slowest.max(took);
        ensure(got == DeltaDoubled(2 * (k as u32 - 1)), || {
            format!("grid({k}, {k}) gives 2δ = {}", got.0)
        })?;
        ensure(took < Duration::from_secs(60), || {
            format!("grid({k}, {k}) took {took:?}")
        })?;
    }
    Ok(format!(
        "k ≤ 6 against the oracle; k up to 300 exact, slowest {slowest:.2?}"
    ))
}

fn criterion_6() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut graphs = named_families();
    graphs.extend((0..100).map(|_| random_graph(&mut rng, 4, 40, 3)));
    for (g, name) in &graphs {
        let mut values = BTreeSet::new();
        for use_heuristic in [false, true] {
            for use_pruning in [false, true] {
                for cache_capacity in [0, 2, 16, 1000] {
                    let opts = Options {
                        cache_capacity,
                        use_heuristic,
                        use_pruning,
                        time_budget: None,
                    };
                    values.insert(run(g, &opts).unwrap().delta2);
                }
            }
        }
        ensure(values.len() == 1, || {
            format!("{name}: configurations disagree: {values:?}")
        })?;
    }
    Ok(format!("{} graphs × 16 configurations", graphs.len()))
}

/// Vertices reachable from `x` through vertices passing the cutoff.
fn filtered_reachability(g: &Graph, x: Vertex, admitted: &[bool]) -> BTreeSet<Vertex> {
    let mut seen = BTreeSet::from([x]);
    let mut stack = vec![x];
    while let Some(u) = stack.pop() {
        for &w in g.neighbors(u) {
            if admitted[w as usize] && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    seen
}

fn criterion_7() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut pairs_checked = 0usize;
    for _ in 0..200 {
        let (g, name) = random_graph(&mut rng, 4, 60, 3);
        let ecc = eccentricities(&g).unwrap();
        let dist = all_distances(&g);
        for _ in 0..5 {
            let x = rng.gen_range(0..g.num_vertices()) as Vertex;
            let cutoff2 = rng
                .gen_range(-2 * i64::from(ecc.diameter()) - 2..=2 * i64::from(ecc.diameter()) + 2);
            let admitted: Vec<bool> = g
                .vertices()
                .map(|v| {
                    2 * i64::from(ecc.get(v)) - 2 * i64::from(dist[x as usize][v as usize])
                        >= cutoff2
                })
                .collect();
            let want = filtered_reachability(&g, x, &admitted);
            let dv = pruned_bfs(&g, x, &ecc, cutoff2);
            let got: BTreeSet<Vertex> = dv.visited().iter().copied().collect();
            ensure(got == want, || {
                format!("{name}: pruned_bfs({x}, {cutoff2}) visited set differs")
            })?;
            for v in g.vertices() {
                let expect = if got.contains(&v) {
                    dist[x as usize][v as usize]
                } else {
                    INF
                };
                ensure(dv.get(v) == expect, || {
                    format!("{name}: distance to {v} differs")
                })?;
            }
        }
        let mut failure = None;
        run_observed(&g, &Options::default(), |t| {
            pairs_checked += 1;
            for v in g.vertices() {
                let (a, b) = (
                    dist[t.x as usize][v as usize],
                    dist[t.y as usize][v as usize],
                );
                if is_acceptable(t.seen[v as usize], a, b, t.d, t.ecc.get(v), t.delta2)
                    && (t.dx.get(v) == INF || t.dy.get(v) == INF)
                    && failure.is_none()
                {
                    failure = Some(format!(
                        "{name}: acceptable {v} not visited for pair ({}, {})",
                        t.x, t.y
                    ));
                }
            }
        })
        .unwrap();
        if let Some(f) = failure {
            return Err(f);
        }
    }
    Ok(format!(
        "200 graphs, 1000 pruned searches, {pairs_checked} instrumented pairs"
    ))
}

fn criterion_8() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut graphs = named_families();
    graphs.extend((0..200).map(|_| random_graph(&mut rng, 1, 200, 3)));
    for (g, name) in &graphs {
        let want: Vec<u32> = g.vertices().map(|v| bfs(g, v).max_distance()).collect();
        let got = all_eccentricities(g, |_| {}).unwrap();
        ensure(got.values() == want.as_slice(), || {
            format!("{name}: eccentricities differ")
        })?;
    }
    Ok(format!("{} graphs", graphs.len()))
}

fn criterion_9() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..100 {
        let (g, name) = random_graph(&mut rng, 2, 60, 3);
        for v in g.vertices() {
            let dv = bfs(&g, v);
            let far = far_sets_from_distances(&g, &dv).unwrap();
            for c in 1..=far.max_distance() + 1 {
                let want: Vec<(Vertex, u32)> = g
                    .vertices()
                    .filter(|&u| dv.get(u) >= c)
                    .map(|u| (u, dv.get(u)))
                    .collect();
                let got = vertices_at_distance_at_least(&g, c, &far).unwrap();
                ensure(got == want, || {
                    format!("{name}: threshold set differs at v={v}, c={c}")
                })?;
            }
            // A random shortest-path tree rooted at v.
            let mut has_child = vec![false; g.num_vertices()];
            for u in g.vertices().filter(|&u| u != v) {
                let parents: Vec<Vertex> = g
                    .neighbors(u)
                    .iter()
                    .copied()
                    .filter(|&w| dv.get(w) + 1 == dv.get(u))
                    .collect();
                has_child[parents[rng.gen_range(0..parents.len())] as usize] = true;
            }
            let leaves = g
                .vertices()
                .filter(|&u| u != v && !has_child[u as usize])
                .count();
            let far_count = far.total() - far.at(0).len();
            ensure(leaves >= far_count, || {
                format!("{name}: tree at {v} has {leaves} leaves, |F_v| = {far_count}")
            })?;
        }
    }
    Ok("100 random graphs, every (v, c)".into())
}

fn load_dataset(path: &PathBuf) -> std::result::Result<Graph, String> {
    let file = File::open(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let lg = parse_edge_list(BufReader::new(file)).map_err(|e| e.to_string())?;
    Ok(largest_biconnected_component(&lg.graph)
        .map_err(|e| e.to_string())?
        .0)
}

fn criterion_10() -> Verdict {
    let mut notes = Vec::new();
    let mut ran = false;
    if let Some(dir) = std::env::var_os("FARAPART_DATASETS") {
        let dir = PathBuf::from(dir);
        for (file, want) in [
            ("facebook_combined.txt", DeltaDoubled(3)),
            ("p2p-Gnutella09.txt", DeltaDoubled(6)),
            ("as20000102.txt", DeltaDoubled(5)),
        ] {
            let path = dir.join(file);
            if !path.exists() {
                notes.push(format!("{file} absent"));
                continue;
            }
            ran = true;
            let g = match load_dataset(&path) {
                Ok(g) => g,
                Err(e) => return Verdict::Fail(e),
            };
            let got = run(&g, &Options::default()).map(|r| r.delta2);
            match got {
                Ok(d) if d == want => notes.push(format!("{file}: δ = {d}")),
                Ok(d) => return Verdict::Fail(format!("{file}: δ = {d}, expected {want}")),
                Err(e) => return Verdict::Fail(format!("{file}: {e}")),
            }
        }
    } else {
        notes.push("FARAPART_DATASETS not set".into());
    }
    if std::env::var_os("FARAPART_SLOW").is_some() {
        ran = true;
        let raw = grid_with_deletions(301, 301, 0.1, 300).unwrap();
        let (g, _) = largest_biconnected_component(&raw).unwrap();
        let n = g.num_vertices() as f64;
        let count = far_apart_pairs(&g).unwrap().len() as f64;
        let pct = 100.0 * count / (n * (n - 1.0) / 2.0);
        if (pct - 0.04).abs() > 0.02 {
            return Verdict::Fail(format!(
                "gridd(301, 301, 0.1) far pairs {pct:.4}%, expected 0.04 ± 0.02"
            ));
        }
        notes.push(format!("gridd(301, 301, 0.1) far pairs {pct:.4}%"));
    } else {
        notes.push("FARAPART_SLOW not set".into());
    }
    if ran {
        Verdict::Pass(notes.join("; "))
    } else {
        Verdict::Skip(notes.join("; "))
    }
}

fn criterion_11() -> Check {
    let mut peaks = Vec::new();
    for k in [100, 200, 300] {
        let g = grid(k, k).unwrap();
        let ecc = eccentricities(&g).unwrap();
        let mut store = FarApartStore::with_reported(&g, &ecc);
        store.set_floor(ecc.diameter() - 1).unwrap();
        let pairs: Vec<FarPair> = store.by_ref().collect();
        let kk = (k * k - 1) as Vertex;
        let corners = vec![
            FarPair {
                u: 0,
                v: kk,
                d: ecc.diameter(),
            },
            FarPair {
                u: k as Vertex - 1,
                v: kk + 1 - k as Vertex,
                d: ecc.diameter(),
            },
        ];
        ensure(pairs == corners, || {
            format!("grid({k}, {k}): pairs {pairs:?}")
        })?;
        let stats = store.stats();
        ensure(stats.stored_entries == 4, || {
            format!("grid({k}, {k}): {} entries retained", stats.stored_entries)
        })?;
        let hyp_peak = run(&g, &Options::default()).unwrap().peak_store_entries;
        peaks.push((k, stats.peak_stored_entries, hyp_peak));
    }
    let bounded = peaks.iter().all(|&(_, a, b)| a <= 64 && b <= 64);
    ensure(bounded, || {
        format!("peaks (k, iterator, solver): {peaks:?}")
    })?;
    Ok(format!(
        "2 pairs retained; peak entries (k, iterator, solver) {peaks:?}"
    ))
}

fn main() {
    let checks: Vec<(u32, &str, CheckFn)> = vec![
        (
            1,
            "hyperbolicity equals the brute-force oracle",
            Box::new(|| criterion_1().into_verdict()),
        ),
        (
            2,
            "far-apart pairs equal both oracles",
            Box::new(|| criterion_2().into_verdict()),
        ),
        (
            3,
            "grid, clique and diameter-pair structure",
            Box::new(|| criterion_3().into_verdict()),
        ),
        (
            4,
            "block graphs are 0-hyperbolic",
            Box::new(|| criterion_4().into_verdict()),
        ),
        (
            5,
            "grid hyperbolicity",
            Box::new(|| criterion_5().into_verdict()),
        ),
        (
            6,
            "option invariance",
            Box::new(|| criterion_6().into_verdict()),
        ),
        (
            7,
            "pruned BFS properties",
            Box::new(|| criterion_7().into_verdict()),
        ),
        (
            8,
            "eccentricity exactness",
            Box::new(|| criterion_8().into_verdict()),
        ),
        (
            9,
            "distance thresholds and leaf bound",
            Box::new(|| criterion_9().into_verdict()),
        ),
        (10, "dataset spot checks", Box::new(criterion_10)),
        (
            11,
            "constant store size on grids",
            Box::new(|| criterion_11().into_verdict()),
        ),
    ];
    let mut failed = 0;
    for (id, title, check) in checks {
        let start = Instant::now();
        let verdict = check();
        let took = start.elapsed();
        let (tag, detail) = match verdict {
            Verdict::Pass(d) => ("PASS", d),
            Verdict::Skip(d) => ("SKIP", d),
            Verdict::Fail(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} criterion {id:>2}: {title} ({detail}) [{took:.2?}]");
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}

trait IntoVerdict {
    fn into_verdict(self) -> Verdict;
}

impl IntoVerdict for Check {
    fn into_verdict(self) -> Verdict {
        match self {
            Ok(d) => Verdict::Pass(d),
            Err(d) => Verdict::Fail(d),
        }
    }
}
