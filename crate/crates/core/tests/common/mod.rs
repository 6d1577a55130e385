//! Generators and brute-force references shared by the integration tests.
#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::seq::{IndexedRandom, SliceRandom};
use rand::{Rng, SeedableRng};
use twinedge::graph::{connected_components, Graph};
use twinedge::VertexColoring;

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// G(n, p) with edges in random order.
pub fn gnp(rng: &mut StdRng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    edges.shuffle(rng);
    Graph::new(n, edges).unwrap()
}

/// Random graph with exactly `m` edges (capped at the number of pairs).
pub fn gnm(rng: &mut StdRng, n: usize, m: usize) -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    pairs.shuffle(rng);
    pairs.truncate(m);
    Graph::new(n, pairs).unwrap()
}

/// Drops the edge of every `K_2` component, leaving two isolated vertices.
pub fn make_nice(g: &Graph) -> Graph {
    let mut bad = vec![false; g.n()];
    for comp in connected_components(g) {
        if comp.len() == 2 {
            for v in comp {
                bad[v] = true;
            }
        }
    }
    Graph::new(g.n(), g.edges().iter().copied().filter(|&(u, _)| !bad[u])).unwrap()
}

/// Random connected graph: a random tree plus `extra` random chords.
pub fn random_connected(rng: &mut StdRng, n: usize, extra: usize) -> Graph {
    let mut edges = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    for i in 1..n {
        let j = rng.random_range(0..i);
        edges.push((perm[i], perm[j]));
    }
    let mut tries = 0;
    let mut added = 0;
    while added < extra && tries < 50 * (extra + 1) {
        tries += 1;
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        if u == v || edges.iter().any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u)) {
            continue;
        }
        edges.push((u, v));
        added += 1;
    }
    Graph::new(n, edges).unwrap()
}

/// Random proper coloring with colors in `0..k`, by greedy over a random order
/// with random choices among free colors. `None` if greedy gets stuck.
pub fn random_proper_coloring(rng: &mut StdRng, g: &Graph, k: usize) -> Option<VertexColoring> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.shuffle(rng);
    let mut colors = vec![usize::MAX; g.n()];
    for &v in &order {
        let free: Vec<usize> = (0..k)
            .filter(|&c| g.neighbors(v).all(|u| colors[u] != c))
            .collect();
        colors[v] = *free.choose(rng)?;
    }
    Some(VertexColoring::new(k, colors).unwrap())
}

pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    g.edges().iter().all(|&(u, v)| colors[u] != colors[v])
}

/// Smallest `k` with a proper `k`-coloring, by trying every assignment.
pub fn brute_chromatic(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n()).find(|&k| brute_colorings(g, k, |_| true)).unwrap()
}

/// Calls `visit` on every proper coloring with colors in `0..k` until it
/// returns `false`; returns whether any proper coloring was seen.
pub fn brute_colorings(g: &Graph, k: usize, mut visit: impl FnMut(&[usize]) -> bool) -> bool {
    let n = g.n();
    let mut colors = vec![0usize; n];
    let mut seen = false;
    loop {
        if is_proper(g, &colors) {
            seen = true;
            if !visit(&colors) {
                return true;
            }
        }
        let mut i = 0;
        loop {
            if i == n {
                return seen;
            }
            colors[i] += 1;
            if colors[i] < k {
                break;
            }
            colors[i] = 0;
            i += 1;
        }
    }
}

/// Class sizes of `colors` over `0..k`, sorted.
pub fn sizes(colors: &[usize], k: usize) -> Vec<usize> {
    let mut s = vec![0; k];
    for &c in colors {
        s[c] += 1;
    }
    s.sort_unstable();
    s
}

/// Whether every proper `chi`-coloring has only odd classes.
pub fn brute_all_odd(g: &Graph) -> bool {
    let k = brute_chromatic(g);
    let mut all_odd = true;
    brute_colorings(g, k, |c| {
        all_odd = sizes(c, k).iter().all(|s| s % 2 == 1);
        all_odd
    });
    all_odd
}

/// Vertex sums of `values` in `Z_m`.
pub fn vertex_sums(g: &Graph, values: &[usize], m: usize) -> Vec<usize> {
    let mut sums = vec![0; g.n()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        sums[u] = (sums[u] + values[e]) % m;
        sums[v] = (sums[v] + values[e]) % m;
    }
    sums
}

/// Whether some `s: E -> Z_m` satisfies `accept(vertex sums)`, by odometer.
pub fn brute_edge_search(g: &Graph, m: usize, mut accept: impl FnMut(&[usize]) -> bool) -> bool {
    let mut values = vec![0usize; g.m()];
    loop {
        if accept(&vertex_sums(g, &values, m)) {
            return true;
        }
        let mut i = 0;
        loop {
            if i == values.len() {
                return false;
            }
            values[i] += 1;
            if values[i] < m {
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

/// Smallest `m >= 2` admitting a twin edge coloring, by odometer.
pub fn brute_chi_it(g: &Graph) -> usize {
    (2..)
        .find(|&m| brute_edge_search(g, m, |sums| is_proper(g, sums)))
        .unwrap()
}

/// Whether `g` is bipartite, by BFS two-coloring.
pub fn is_bipartite(g: &Graph) -> bool {
    let mut side = vec![usize::MAX; g.n()];
    for s in 0..g.n() {
        if side[s] != usize::MAX {
            continue;
        }
        side[s] = 0;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in g.neighbors(u) {
                if side[w] == usize::MAX {
                    side[w] = 1 - side[u];
                    stack.push(w);
                } else if side[w] == side[u] {
                    return false;
                }
            }
        }
    }
    true
}

/// The modulus used by the constructor: `k + 1` exactly when `k = 2 (mod 4)`
/// and some component has an odd number of vertices of every color in `0..k`.
pub fn expected_modulus(g: &Graph, f: &VertexColoring) -> usize {
    let k = f.k();
    if k == 1 {
        return 2;
    }
    if k % 4 != 2 {
        return k;
    }
    let promote = connected_components(g).iter().any(|comp| {
        let mut count = vec![0usize; k];
        for &v in comp {
            count[f.color(v)] += 1;
        }
        count.iter().all(|c| c % 2 == 1)
    });
    if promote {
        k + 1
    } else {
        k
    }
}

/// Random interval graph with its left-endpoint order, which is a
/// co-comparability order.
pub fn random_interval(rng: &mut StdRng, n: usize, span: usize) -> (Graph, Vec<usize>) {
    let mut iv: Vec<(usize, usize)> = (0..n)
        .map(|_| {
            let a = rng.random_range(0..span);
            let len = rng.random_range(0..span / 2 + 1);
            (a, a + len)
        })
        .collect();
    iv.sort();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if iv[j].0 <= iv[i].1 {
                edges.push((i, j));
            }
        }
    }
    let g = Graph::new(n, edges).unwrap();
    (g, (0..n).collect())
}

/// Random split graph: a clique on `0..c`, independent vertices `c..n` each
/// joined to a random subset of the clique.
pub fn random_split(rng: &mut StdRng, c: usize, s: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..c {
        for v in u + 1..c {
            edges.push((u, v));
        }
    }
    for x in c..c + s {
        for u in 0..c {
            if rng.random_bool(0.5) {
                edges.push((u, x));
            }
        }
    }
    let mut perm: Vec<usize> = (0..c + s).collect();
    perm.shuffle(rng);
    Graph::new(c + s, edges).unwrap().relabel(&perm)
}
