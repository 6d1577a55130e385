//! Exhaustive ground truth for small graphs: chromatic number, optimal
//! colorings, the all-odd predicate and the twin chromatic index.
//!
//! Vertex colorings are searched as set partitions (each class labeled by
//! its first vertex in the search order), so permuting labels never produces
//! a second copy. Edge colorings are searched label by label, since the
//! values in `Z_m` are arithmetic.

use std::collections::{HashMap, HashSet};
use std::ops::ControlFlow;

use thiserror::Error;

use crate::graph::{check_nice, connected_components, Graph, Vertex};
use crate::zk::{zm, VertexColoring, ZkEdgeColoring};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count accepted by any search.
    pub max_vertices: usize,
    /// Bound on `|E| * log2(chi + 1)`, rounded up, for edge coloring searches.
    pub max_work_bits: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_vertices: 18,
            max_work_bits: 64,
        }
    }
}

impl Limits {
    pub fn with_max_vertices(max_vertices: usize) -> Self {
        Self {
            max_vertices,
            ..Self::default()
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} is {size}, above the configured limit of {limit}")]
    SizeLimit {
        what: &'static str,
        size: usize,
        limit: usize,
    },
    #[error("graph is not nice: component {0:?} of size 2")]
    NotNice(Vec<Vertex>),
    #[error("no twin edge coloring with at most {0} colors")]
    Exhausted(usize),
}

/// Bitmask searches cap the vertex count regardless of the configured limit.
const MASK_BITS: usize = 128;

fn check_size(g: &Graph, limits: &Limits) -> Result<(), OracleError> {
    let limit = limits.max_vertices.min(MASK_BITS);
    if g.n() > limit {
        return Err(OracleError::SizeLimit {
            what: "vertex count",
            size: g.n(),
            limit,
        });
    }
    Ok(())
}

/// Vertex order for the searches: maximum cardinality search, so each
/// vertex after the first of its component has an earlier neighbor. Starts
/// (and restarts per component) at a vertex of largest degree.
fn search_order(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    let mut placed = vec![false; n];
    let mut weight = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (weight[v], g.degree(v), std::cmp::Reverse(v)))
            .expect("an unplaced vertex remains");
        placed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            weight[w] += 1;
        }
    }
    order
}

// ---------------------------------------------------------------------------
// Vertex colorings
// ---------------------------------------------------------------------------

struct PartitionSearch<'a> {
    adj: &'a [u128],
    order: &'a [Vertex],
    k: usize,
    /// Visit only partitions with exactly `k` classes (else at most `k`).
    exact: bool,
    classes: Vec<u128>,
}

impl PartitionSearch<'_> {
    fn run<F>(&mut self, i: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[u128]) -> ControlFlow<()>,
    {
        if i == self.order.len() {
            if self.exact && self.classes.len() != self.k {
                return ControlFlow::Continue(());
            }
            return visit(&self.classes);
        }
        if self.exact && self.order.len() - i < self.k - self.classes.len() {
            return ControlFlow::Continue(());
        }
        let v = self.order[i];
        let bit = 1u128 << v;
        for c in 0..self.classes.len() {
            if self.classes[c] & self.adj[v] == 0 {
                self.classes[c] |= bit;
                let flow = self.run(i + 1, visit);
                self.classes[c] &= !bit;
                flow?;
            }
        }
        if self.classes.len() < self.k {
            self.classes.push(bit);
            let flow = self.run(i + 1, visit);
            self.classes.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }
}

fn search_partitions<F>(g: &Graph, k: usize, exact: bool, mut visit: F) -> ControlFlow<()>
where
    F: FnMut(&[u128]) -> ControlFlow<()>,
{
    let adj = g.adjacency_masks();
    let order = search_order(g);
    PartitionSearch {
        adj: &adj,
        order: &order,
        k,
        exact,
        classes: Vec::with_capacity(k),
    }
    .run(0, &mut visit)
}

fn colorable(g: &Graph, k: usize) -> bool {
    search_partitions(g, k, false, |_| ControlFlow::Break(())).is_break()
}

fn chromatic_number_unchecked(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    let mut k = if g.m() == 0 { 1 } else { 2 };
    while !colorable(g, k) {
        k += 1;
    }
    k
}

fn mask_to_class(mut mask: u128) -> Vec<Vertex> {
    let mut class = Vec::with_capacity(mask.count_ones() as usize);
    while mask != 0 {
        class.push(mask.trailing_zeros() as usize);
        mask &= mask - 1;
    }
    class
}

/// A set partition of the vertices, classes sorted by smallest element.
pub type Partition = Vec<Vec<Vertex>>;

fn canonical_partition(classes: &[u128]) -> Partition {
    let mut p: Partition = classes.iter().map(|&c| mask_to_class(c)).collect();
    p.sort_unstable_by_key(|c| c[0]);
    p
}

pub fn chromatic_number(g: &Graph, limits: &Limits) -> Result<usize, OracleError> {
    check_size(g, limits)?;
    Ok(chromatic_number_unchecked(g))
}

/// Some proper `chi(G)`-coloring; labels follow the canonical partition.
pub fn optimal_coloring(g: &Graph, limits: &Limits) -> Result<VertexColoring, OracleError> {
    check_size(g, limits)?;
    let k = chromatic_number_unchecked(g);
    let mut found = None;
    let _ = search_partitions(g, k, true, |classes| {
        found = Some(canonical_partition(classes));
        ControlFlow::Break(())
    });
    let mut colors = vec![0; g.n()];
    for (c, class) in found.unwrap_or_default().iter().enumerate() {
        for &v in class {
            colors[v] = c;
        }
    }
    Ok(VertexColoring::new(k.max(1), colors).expect("labels are below k"))
}

/// Calls `visit` on every partition into exactly `chi(G)` independent
/// classes until it breaks. Returns `chi(G)`.
pub fn for_each_optimal_partition<F>(g: &Graph, limits: &Limits, mut visit: F) -> Result<usize, OracleError>
where
    F: FnMut(&Partition) -> ControlFlow<()>,
{
    check_size(g, limits)?;
    let k = chromatic_number_unchecked(g);
    let _ = search_partitions(g, k, true, |classes| visit(&canonical_partition(classes)));
    Ok(k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OptimalColoringEnumeration {
    pub k: usize,
    pub partitions: Vec<Partition>,
}

pub fn enumerate_optimal_partitions(
    g: &Graph,
    limits: &Limits,
) -> Result<OptimalColoringEnumeration, OracleError> {
    let mut partitions = Vec::new();
    let k = for_each_optimal_partition(g, limits, |p| {
        partitions.push(p.clone());
        ControlFlow::Continue(())
    })?;
    partitions.sort();
    Ok(OptimalColoringEnumeration { k, partitions })
}

/// Whether every `chi(G)`-coloring has only odd classes. Stops at the first
/// counterexample.
pub fn all_odd_all_optimal(g: &Graph, limits: &Limits) -> Result<bool, OracleError> {
    check_size(g, limits)?;
    let k = chromatic_number_unchecked(g);
    let flow = search_partitions(g, k, true, |classes| {
        if classes.iter().all(|c| c.count_ones() % 2 == 1) {
            ControlFlow::Continue(())
        } else {
            ControlFlow::Break(())
        }
    });
    Ok(flow.is_continue())
}

/// A `chi(G)`-coloring with an even class, if there is one.
pub fn optimal_coloring_with_even_class(
    g: &Graph,
    limits: &Limits,
) -> Result<Option<Partition>, OracleError> {
    let mut found = None;
    for_each_optimal_partition(g, limits, |p| {
        if p.iter().any(|c| c.len() % 2 == 0) {
            found = Some(p.clone());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

/// `chi'_it(G)` from the chromatic number and the all-odd condition:
/// `chi + 1` exactly when `chi = 2 (mod 4)` and some component with
/// chromatic number `chi` has only all-odd optimal colorings. (Across
/// components this is the same as asking that every `chi`-coloring of the
/// whole graph leave some component with all `chi` classes odd.) Edgeless
/// graphs get 2.
pub fn chi_it_predict(g: &Graph, limits: &Limits) -> Result<usize, OracleError> {
    check_size(g, limits)?;
    check_nice(g).map_err(OracleError::NotNice)?;
    let chi = chromatic_number_unchecked(g);
    if chi <= 1 {
        return Ok(2);
    }
    if chi % 4 != 2 {
        return Ok(chi);
    }
    for comp in connected_components(g) {
        let h = g.induced_subgraph(&comp);
        if chromatic_number_unchecked(&h) == chi && all_odd_all_optimal(&h, limits)? {
            return Ok(chi + 1);
        }
    }
    Ok(chi)
}

// ---------------------------------------------------------------------------
// Edge colorings
// ---------------------------------------------------------------------------

const NONE: usize = usize::MAX;

/// Depth-first search over edge values in a fixed order. A vertex's sum is
/// final once its last edge is set; at that point it is checked (against
/// finished neighbors, or against a fixed target). States that failed are
/// remembered by the sums still relevant to the rest of the search.
struct EdgeSearch<'a> {
    m: usize,
    edges: Vec<(Vertex, Vertex, usize)>,
    /// Pairs to compare once position `p` is set.
    checks: Vec<Vec<(Vertex, Vertex)>>,
    /// Vertices whose sum is final once position `p` is set.
    finishing: Vec<Vec<Vertex>>,
    /// Vertices whose sums determine the future, before position `p` is set.
    live: Vec<Vec<Vertex>>,
    target: Option<&'a [usize]>,
    sums: Vec<usize>,
    values: Vec<usize>,
    bits: u32,
    dead: Vec<HashSet<u128>>,
}

impl<'a> EdgeSearch<'a> {
    fn new(g: &Graph, m: usize, target: Option<&'a [usize]>) -> Self {
        let n = g.n();
        let order = search_order(g);
        let mut pos = vec![0; n];
        for (i, &v) in order.iter().enumerate() {
            pos[v] = i;
        }
        // Edges grouped by their later endpoint in the search order.
        let mut edges: Vec<(Vertex, Vertex, usize)> = g
            .edges()
            .iter()
            .enumerate()
            .map(|(e, &(u, v))| (u, v, e))
            .collect();
        edges.sort_by_key(|&(u, v, _)| {
            let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            (b, a)
        });
        let len = edges.len();
        let mut first = vec![NONE; n];
        let mut last = vec![NONE; n];
        for (p, &(u, v, _)) in edges.iter().enumerate() {
            for x in [u, v] {
                if first[x] == NONE {
                    first[x] = p;
                }
                last[x] = p;
            }
        }
        let mut finishing = vec![Vec::new(); len];
        for v in 0..n {
            if last[v] != NONE {
                finishing[last[v]].push(v);
            }
        }
        let mut checks = vec![Vec::new(); len];
        for &(u, v) in g.edges() {
            checks[last[u].max(last[v])].push((u, v));
        }
        // A vertex matters while it or a neighbor still has an edge to set.
        let mut horizon = last.clone();
        for &(u, v) in g.edges() {
            horizon[u] = horizon[u].max(last[v]);
            horizon[v] = horizon[v].max(last[u]);
        }
        let live = (0..len)
            .map(|p| {
                (0..n)
                    .filter(|&v| first[v] != NONE && first[v] < p && horizon[v] >= p)
                    .collect()
            })
            .collect();
        let bits = usize::BITS - m.saturating_sub(1).leading_zeros();
        Self {
            m,
            edges,
            checks,
            finishing,
            live,
            target,
            sums: vec![0; n],
            values: vec![0; g.m()],
            bits,
            dead: vec![HashSet::new(); len],
        }
    }

    fn key(&self, p: usize) -> Option<u128> {
        let live = &self.live[p];
        if live.len() * self.bits as usize > 128 {
            return None;
        }
        Some(
            live.iter()
                .fold(0u128, |k, &v| (k << self.bits) | self.sums[v] as u128),
        )
    }

    fn consistent(&self, p: usize) -> bool {
        match self.target {
            Some(t) => self.finishing[p].iter().all(|&v| self.sums[v] == t[v]),
            None => self.checks[p].iter().all(|&(u, v)| self.sums[u] != self.sums[v]),
        }
    }

    fn run(&mut self, p: usize) -> bool {
        if p == self.edges.len() {
            return true;
        }
        let key = self.key(p);
        if key.is_some_and(|k| self.dead[p].contains(&k)) {
            return false;
        }
        let (u, v, e) = self.edges[p];
        let m = self.m;
        for x in 0..m {
            self.sums[u] = zm::add(self.sums[u], x, m);
            self.sums[v] = zm::add(self.sums[v], x, m);
            if self.consistent(p) && self.run(p + 1) {
                self.values[e] = x;
                return true;
            }
            self.sums[u] = zm::sub(self.sums[u], x, m);
            self.sums[v] = zm::sub(self.sums[v], x, m);
        }
        if let Some(k) = key {
            self.dead[p].insert(k);
        }
        false
    }

    fn solve(mut self) -> Option<ZkEdgeColoring> {
        let ok = match self.target {
            // Isolated vertices keep sum 0.
            Some(t) => (0..self.sums.len())
                .filter(|&v| !self.finishing.iter().any(|f| f.contains(&v)))
                .all(|v| t[v] == 0),
            None => true,
        };
        (ok && self.run(0)).then(|| ZkEdgeColoring::from_reduced(self.m, self.values))
    }
}

/// A twin `m`-edge coloring of `g`, if one exists, by exhaustive search.
pub fn find_twin_coloring(
    g: &Graph,
    m: usize,
    limits: &Limits,
) -> Result<Option<ZkEdgeColoring>, OracleError> {
    check_size(g, limits)?;
    check_work(g, m, limits)?;
    if m < 2 {
        return Ok(None);
    }
    // Components are independent; solve each and merge.
    let mut values = vec![0; g.m()];
    for comp in connected_components(g) {
        if comp.len() == 1 {
            continue;
        }
        let h = g.induced_subgraph(&comp);
        let Some(s) = EdgeSearch::new(&h, m, None).solve() else {
            return Ok(None);
        };
        for (e, &(u, v)) in h.edges().iter().enumerate() {
            let id = g.edge_id(comp[u], comp[v]).expect("edge of the subgraph");
            values[id] = s.value(e);
        }
    }
    Ok(Some(ZkEdgeColoring::from_reduced(m, values)))
}

fn check_work(g: &Graph, m: usize, limits: &Limits) -> Result<(), OracleError> {
    let bits = (g.m() as f64 * (m.max(2) as f64).log2()).ceil() as usize;
    if bits > limits.max_work_bits {
        return Err(OracleError::SizeLimit {
            what: "edge search work (bits)",
            size: bits,
            limit: limits.max_work_bits,
        });
    }
    Ok(())
}

/// Smallest `m >= 2` admitting a twin `m`-edge coloring, by exhaustive
/// search. No modulus below `chi(G)` can work (the induced coloring is a
/// proper `m`-coloring), so the search starts at `max(2, chi)`.
pub fn chi_it_bruteforce(g: &Graph, limits: &Limits) -> Result<usize, OracleError> {
    check_size(g, limits)?;
    check_nice(g).map_err(OracleError::NotNice)?;
    let chi = chromatic_number_unchecked(g);
    check_work(g, chi + 1, limits)?;
    let start = chi.max(2);
    for m in start..=start + 1 {
        if find_twin_coloring(g, m, limits)?.is_some() {
            return Ok(m);
        }
    }
    Err(OracleError::Exhausted(start + 1))
}

/// Whether some `s` in `Z_t^|E|` induces exactly `f`, by exhaustive search.
pub fn exists_inducing(
    g: &Graph,
    f: &VertexColoring,
    t: usize,
    limits: &Limits,
) -> Result<Option<ZkEdgeColoring>, OracleError> {
    check_size(g, limits)?;
    check_work(g, t, limits)?;
    if t < 2 || f.len() != g.n() || f.colors().iter().any(|&c| c >= t) {
        return Ok(None);
    }
    Ok(EdgeSearch::new(g, t, Some(f.colors())).solve())
}

// ---------------------------------------------------------------------------
// Catalog of small connected graphs
// ---------------------------------------------------------------------------

/// Small graph as adjacency rows; vertex count at most 8.
#[derive(Clone, Copy)]
struct Small {
    n: usize,
    adj: [u8; 8],
}

impl Small {
    /// Upper-triangle bits in pair order `(0,1), (0,2), (1,2), (0,3), ...`
    /// under the relabeling `new i = old perm[i]`.
    fn code(&self, perm: &[usize]) -> u32 {
        let mut code = 0u32;
        let mut bit = 0;
        for b in 1..self.n {
            for a in 0..b {
                if self.adj[perm[a]] >> perm[b] & 1 == 1 {
                    code |= 1 << bit;
                }
                bit += 1;
            }
        }
        code
    }

    fn decode(n: usize, code: u32) -> Self {
        let mut adj = [0u8; 8];
        let mut bit = 0;
        for b in 1..n {
            for a in 0..b {
                if code >> bit & 1 == 1 {
                    adj[a] |= 1 << b;
                    adj[b] |= 1 << a;
                }
                bit += 1;
            }
        }
        Self { n, adj }
    }

    fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    /// Smallest code over relabelings that sort vertices by an invariant
    /// (degree, then neighbor degrees); only vertices with equal invariants
    /// are permuted among themselves.
    fn canonical(&self) -> u32 {
        let invariant = |v: usize| {
            let mut nd: Vec<u32> = (0..self.n)
                .filter(|&w| self.adj[v] >> w & 1 == 1)
                .map(|w| self.degree(w))
                .collect();
            nd.sort_unstable();
            (self.degree(v), nd)
        };
        let mut keyed: Vec<_> = (0..self.n).map(|v| (invariant(v), v)).collect();
        keyed.sort();
        let mut cells: Vec<Vec<usize>> = Vec::new();
        for i in 0..keyed.len() {
            if i > 0 && keyed[i].0 == keyed[i - 1].0 {
                cells.last_mut().expect("a cell is open").push(keyed[i].1);
            } else {
                cells.push(vec![keyed[i].1]);
            }
        }
        let mut best = u32::MAX;
        let mut perm = Vec::with_capacity(self.n);
        self.permute_cells(&mut cells, 0, &mut perm, &mut best);
        best
    }

    fn permute_cells(&self, cells: &mut [Vec<usize>], i: usize, perm: &mut Vec<usize>, best: &mut u32) {
        if i == cells.len() {
            *best = (*best).min(self.code(perm));
            return;
        }
        let size = cells[i].len();
        let mut cell = cells[i].clone();
        for_each_permutation(&mut cell, size, &mut |p| {
            let mark = perm.len();
            perm.extend_from_slice(p);
            self.permute_cells(cells, i + 1, perm, best);
            perm.truncate(mark);
        });
    }
}

/// Heap's algorithm.
fn for_each_permutation(items: &mut [usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    if k <= 1 {
        f(items);
        return;
    }
    for i in 0..k - 1 {
        for_each_permutation(items, k - 1, f);
        if k % 2 == 0 {
            items.swap(i, k - 1);
        } else {
            items.swap(0, k - 1);
        }
    }
    for_each_permutation(items, k - 1, f);
}

/// All connected graphs on `n` vertices up to isomorphism, `1 <= n <= 8`.
/// Built by attaching a new vertex to every non-empty subset of the vertices
/// of each smaller graph (every connected graph has a vertex whose removal
/// keeps it connected).
pub fn connected_catalog(n: usize) -> Vec<Graph> {
    assert!((1..=8).contains(&n), "catalog supports 1 to 8 vertices");
    let mut level: Vec<u32> = vec![0];
    for size in 2..=n {
        let mut next = HashSet::new();
        for &code in &level {
            let base = Small::decode(size - 1, code);
            for subset in 1u32..(1 << (size - 1)) {
                let mut g = base;
                g.n = size;
                g.adj[size - 1] = subset as u8;
                for v in 0..size - 1 {
                    if subset >> v & 1 == 1 {
                        g.adj[v] |= 1 << (size - 1);
                    }
                }
                next.insert(g.canonical());
            }
        }
        level = next.into_iter().collect();
        level.sort_unstable();
    }
    level
        .into_iter()
        .map(|code| {
            let s = Small::decode(n, code);
            let edges = (0..n).flat_map(|b| (0..b).map(move |a| (a, b)));
            let edges: Vec<_> = edges.filter(|&(a, b)| s.adj[a] >> b & 1 == 1).collect();
            Graph::new(n, edges).expect("decoded graph is simple")
        })
        .collect()
}

/// Class sizes of a partition, ascending.
pub fn partition_type(p: &Partition) -> Vec<usize> {
    let mut sizes: Vec<usize> = p.iter().map(Vec::len).collect();
    sizes.sort_unstable();
    sizes
}

/// Multiset of partition types, for summaries.
pub fn type_census(e: &OptimalColoringEnumeration) -> HashMap<Vec<usize>, usize> {
    let mut census = HashMap::new();
    for p in &e.partitions {
        *census.entry(partition_type(p)).or_insert(0) += 1;
    }
    census
}
