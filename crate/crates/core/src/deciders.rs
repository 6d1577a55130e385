//! Polynomial deciders for the all-odd predicate ("is every class of every
//! `chi(G)`-coloring odd?") on special graph classes.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::{connected_components, Graph, Vertex};
use crate::zk::{ColoringType, VertexColoring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeciderError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("graph is not split")]
    NotSplit,
    #[error("graph is not chordal; chordless cycle {0:?}")]
    NotChordal(Vec<Vertex>),
    #[error("complement is not chordal; chordless cycle {0:?} in the complement")]
    NotCochordal(Vec<Vertex>),
    #[error("invalid co-comparability order: {0}")]
    InvalidOrder(OrderError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("not a permutation of the vertices")]
    NotAPermutation,
    #[error("vertices {a}, {b}, {c} appear in this order, {a}-{b} and {b}-{c} are non-edges but {a}-{c} is an edge")]
    Umbrella { a: Vertex, b: Vertex, c: Vertex },
}

struct Matrix {
    n: usize,
    bits: Vec<bool>,
}

impl Matrix {
    fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut bits = vec![false; n * n];
        for &(u, v) in g.edges() {
            bits[u * n + v] = true;
            bits[v * n + u] = true;
        }
        Self { n, bits }
    }

    #[inline]
    fn adj(&self, u: Vertex, v: Vertex) -> bool {
        self.bits[u * self.n + v]
    }
}

// ---------------------------------------------------------------------------
// Bounded degree
// ---------------------------------------------------------------------------

/// Graphs with maximum degree below `k` and chromatic number `k`: yes exactly
/// for an odd number of disjoint `k`-cliques.
pub fn decide_bounded_degree(g: &Graph, k: usize) -> Result<bool, DeciderError> {
    if k == 0 {
        return Err(DeciderError::PreconditionViolated("k must be positive".into()));
    }
    if g.n() > 0 && g.max_degree() >= k {
        return Err(DeciderError::PreconditionViolated(format!(
            "maximum degree {} is not below k = {k}",
            g.max_degree()
        )));
    }
    let comps = connected_components(g);
    let is_clique = |c: &Vec<Vertex>| c.len() == k && c.iter().all(|&v| g.degree(v) == k - 1);
    let is_odd_cycle = |c: &Vec<Vertex>| c.len() % 2 == 1 && c.iter().all(|&v| g.degree(v) == 2);
    // With degrees below k, chromatic number k needs a k-clique component,
    // or an odd cycle when k = 3.
    let reaches_k = comps.iter().any(|c| is_clique(c) || (k == 3 && is_odd_cycle(c)));
    if !reaches_k {
        return Err(DeciderError::PreconditionViolated(format!(
            "chromatic number is not {k}"
        )));
    }
    Ok(comps.iter().all(is_clique) && comps.len() % 2 == 1)
}

// ---------------------------------------------------------------------------
// Split graphs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitDecomposition {
    /// A maximum clique.
    pub clique: Vec<Vertex>,
    pub independent: Vec<Vertex>,
}

/// Degree-sequence split recognition: with degrees sorted non-increasingly
/// (ties by vertex index), the graph is split iff the first `w` vertices
/// form a clique and the rest an independent set, `w` being the largest `i`
/// with `d_i >= i - 1`. An independent vertex adjacent to the whole clique is
/// then moved over so the clique is maximum.
pub fn recognize_split(g: &Graph) -> Result<SplitDecomposition, DeciderError> {
    let n = g.n();
    let mut by_degree: Vec<Vertex> = (0..n).collect();
    by_degree.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let w = (1..=n)
        .filter(|&i| g.degree(by_degree[i - 1]) + 1 >= i)
        .max()
        .unwrap_or(0);
    let head: usize = by_degree[..w].iter().map(|&v| g.degree(v)).sum();
    let tail: usize = by_degree[w..].iter().map(|&v| g.degree(v)).sum();
    if head != w * w.saturating_sub(1) + tail {
        return Err(DeciderError::NotSplit);
    }
    let mut clique = by_degree[..w].to_vec();
    let mut independent = by_degree[w..].to_vec();
    while let Some(pos) = independent
        .iter()
        .position(|&s| clique.iter().all(|&c| g.has_edge(s, c)))
    {
        clique.push(independent.remove(pos));
    }
    clique.sort_unstable();
    independent.sort_unstable();
    Ok(SplitDecomposition { clique, independent })
}

/// All-odd predicate on split graphs: every independent vertex has degree
/// `k - 1` and every clique vertex has degree of parity opposite to `k + s`.
pub fn decide_split(g: &Graph) -> Result<bool, DeciderError> {
    let d = recognize_split(g)?;
    let k = d.clique.len();
    let s = d.independent.len();
    let independent_ok = d.independent.iter().all(|&v| g.degree(v) + 1 == k);
    let clique_ok = d.clique.iter().all(|&v| (g.degree(v) + k + s) % 2 == 1);
    Ok(independent_ok && clique_ok)
}

// ---------------------------------------------------------------------------
// Chordal graphs
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordalAnalysis {
    /// Perfect elimination ordering.
    pub peo: Vec<Vertex>,
    pub maximal_cliques: Vec<Vec<Vertex>>,
    pub max_independent_set: Vec<Vertex>,
}

/// Lexicographic BFS by partition refinement; ties broken by smallest
/// vertex. Returns the visit order.
pub fn lex_bfs(g: &Graph) -> Vec<Vertex> {
    let n = g.n();
    // Ordered list of cells; the next vertex is taken from the first cell.
    let mut cells: Vec<Vec<Vertex>> = if n == 0 {
        Vec::new()
    } else {
        vec![(0..n).collect()]
    };
    let mut order = Vec::with_capacity(n);
    let mut visited = vec![false; n];
    let mut marked = vec![false; n];
    while let Some(first) = cells.first_mut() {
        let v = first.remove(0);
        if first.is_empty() {
            cells.remove(0);
        }
        visited[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            marked[w] = !visited[w];
        }
        let mut refined = Vec::with_capacity(cells.len() * 2);
        for cell in cells {
            let (hit, miss): (Vec<Vertex>, Vec<Vertex>) = cell.into_iter().partition(|&w| marked[w]);
            if !hit.is_empty() {
                refined.push(hit);
            }
            if !miss.is_empty() {
                refined.push(miss);
            }
        }
        cells = refined;
        for w in g.neighbors(v) {
            marked[w] = false;
        }
    }
    order
}

/// Chordless cycle `v, p, ..., w` through the non-adjacent neighbors `p`, `w`
/// of `v`: a shortest `p`-`w` path avoiding the rest of `N[v]`.
fn chordless_cycle_through(g: &Graph, v: Vertex, p: Vertex, w: Vertex) -> Option<Vec<Vertex>> {
    let n = g.n();
    let mut blocked = vec![false; n];
    blocked[v] = true;
    for x in g.neighbors(v) {
        blocked[x] = x != p && x != w;
    }
    let mut prev = vec![usize::MAX; n];
    let mut queue = std::collections::VecDeque::from([p]);
    prev[p] = p;
    while let Some(x) = queue.pop_front() {
        if x == w {
            let mut path = vec![w];
            let mut y = w;
            while y != p {
                y = prev[y];
                path.push(y);
            }
            path.push(v);
            path.reverse();
            return Some(path);
        }
        for y in g.neighbors(x) {
            if !blocked[y] && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    None
}

/// Some chordless cycle of length at least 4, if the graph has one.
pub fn find_chordless_cycle(g: &Graph) -> Option<Vec<Vertex>> {
    let peo: Vec<Vertex> = lex_bfs(g).into_iter().rev().collect();
    if let Some((v, p, w)) = peo_violation(g, &peo) {
        if let Some(c) = chordless_cycle_through(g, v, p, w) {
            return Some(c);
        }
    }
    // Exhaustive fallback: a graph has a chordless cycle of length >= 4 iff
    // some vertex has two non-adjacent neighbors joined outside its closed
    // neighborhood.
    for v in 0..g.n() {
        let nbrs: Vec<Vertex> = g.neighbors(v).collect();
        for (i, &p) in nbrs.iter().enumerate() {
            for &w in &nbrs[i + 1..] {
                if !g.has_edge(p, w) {
                    if let Some(c) = chordless_cycle_through(g, v, p, w) {
                        return Some(c);
                    }
                }
            }
        }
    }
    None
}

/// First `(v, p, w)` where `p` is `v`'s earliest later neighbor and `w` is
/// another later neighbor not adjacent to `p`.
fn peo_violation(g: &Graph, peo: &[Vertex]) -> Option<(Vertex, Vertex, Vertex)> {
    let mut pos = vec![0; g.n()];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    for &v in peo {
        let later: Vec<Vertex> = g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect();
        let Some(&p) = later.iter().min_by_key(|&&w| pos[w]) else {
            continue;
        };
        if let Some(&w) = later.iter().find(|&&w| w != p && !g.has_edge(p, w)) {
            return Some((v, p, w));
        }
    }
    None
}

pub fn is_perfect_elimination_ordering(g: &Graph, order: &[Vertex]) -> bool {
    order.len() == g.n() && peo_violation(g, order).is_none()
}

pub fn chordal_analysis(g: &Graph) -> Result<ChordalAnalysis, DeciderError> {
    let n = g.n();
    let peo: Vec<Vertex> = lex_bfs(g).into_iter().rev().collect();
    if peo_violation(g, &peo).is_some() {
        let cycle = find_chordless_cycle(g).expect("a graph without a PEO has a chordless cycle");
        return Err(DeciderError::NotChordal(cycle));
    }
    let mut pos = vec![0; n];
    for (i, &v) in peo.iter().enumerate() {
        pos[v] = i;
    }
    let later: Vec<Vec<Vertex>> = (0..n)
        .map(|v| g.neighbors(v).filter(|&w| pos[w] > pos[v]).collect())
        .collect();
    // {v} + later(v) fails to be maximal exactly when some earlier u has v as
    // its first later neighbor and later(u) = {v} + later(v).
    let mut absorbed = vec![false; n];
    for &u in &peo {
        if let Some(&p) = later[u].iter().min_by_key(|&&w| pos[w]) {
            if later[u].len() == later[p].len() + 1 {
                absorbed[p] = true;
            }
        }
    }
    let maximal_cliques = peo
        .iter()
        .filter(|&&v| !absorbed[v])
        .map(|&v| {
            let mut c = later[v].clone();
            c.push(v);
            c.sort_unstable();
            c
        })
        .collect();
    let mut taken = vec![false; n];
    let mut max_independent_set = Vec::new();
    for &v in &peo {
        if !g.neighbors(v).any(|w| taken[w]) {
            taken[v] = true;
            max_independent_set.push(v);
        }
    }
    max_independent_set.sort_unstable();
    Ok(ChordalAnalysis {
        peo,
        maximal_cliques,
        max_independent_set,
    })
}

// ---------------------------------------------------------------------------
// Co-chordal graphs
// ---------------------------------------------------------------------------

/// Chromatic number of a co-chordal graph: the independence number of its
/// chordal complement.
fn cochordal_chi(complement: &Graph) -> usize {
    chordal_analysis(complement)
        .expect("induced subgraphs of chordal graphs are chordal")
        .max_independent_set
        .len()
}

fn remove(g: &Graph, drop: &[Vertex]) -> Graph {
    let mut gone = vec![false; g.n()];
    for &v in drop {
        gone[v] = true;
    }
    let keep: Vec<Vertex> = (0..g.n()).filter(|&v| !gone[v]).collect();
    g.induced_subgraph(&keep)
}

/// All-odd predicate on graphs with a chordal complement.
///
/// Some optimal coloring has an even class iff either an even maximal
/// independent set `S` has `chi(G - S) = chi(G) - 1`, or an odd one `S` has
/// such a vertex `x` that `chi(G - (S - x)) = chi(G) - 1`.
pub fn decide_cochordal(g: &Graph) -> Result<bool, DeciderError> {
    let complement = g.complement();
    let analysis = match chordal_analysis(&complement) {
        Ok(a) => a,
        Err(DeciderError::NotChordal(cycle)) => return Err(DeciderError::NotCochordal(cycle)),
        Err(e) => return Err(e),
    };
    let chi = analysis.max_independent_set.len();
    if chi == 0 {
        return Ok(true);
    }
    let drops_a_color = |s: &[Vertex]| cochordal_chi(&remove(&complement, s)) + 1 == chi;
    let independent_sets = &analysis.maximal_cliques;
    if independent_sets
        .iter()
        .filter(|s| s.len() % 2 == 0)
        .any(|s| drops_a_color(s))
    {
        return Ok(false);
    }
    for s in independent_sets.iter().filter(|s| s.len() % 2 == 1) {
        for i in 0..s.len() {
            let mut rest = s.clone();
            rest.remove(i);
            if drops_a_color(&rest) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

// ---------------------------------------------------------------------------
// Co-comparability graphs
// ---------------------------------------------------------------------------

/// Checks that no `a < b < c` in `order` has `ab` and `bc` non-edges but
/// `ac` an edge.
pub fn verify_cocomp_order(g: &Graph, order: &[Vertex]) -> Result<(), OrderError> {
    let n = g.n();
    let mut seen = vec![false; n];
    if order.len() != n
        || order
            .iter()
            .any(|&v| v >= n || std::mem::replace(&mut seen[v], true))
    {
        return Err(OrderError::NotAPermutation);
    }
    let adj = Matrix::of(g);
    for j in 1..n {
        let b = order[j];
        for i in 0..j {
            let a = order[i];
            if adj.adj(a, b) {
                continue;
            }
            for &c in &order[j + 1..] {
                if !adj.adj(b, c) && adj.adj(a, c) {
                    return Err(OrderError::Umbrella { a, b, c });
                }
            }
        }
    }
    Ok(())
}

/// State of the prefix dynamic program: one `(class size, rank of the last
/// vertex put in the class)` pair per color, rank 0 meaning empty, sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CocompState(pub Vec<(usize, usize)>);

/// Class-size types of all proper `k`-colorings (with every color used) of a
/// graph given with a co-comparability order. In such an order a vertex can
/// join a class exactly when it is not adjacent to the class's last vertex.
///
/// `k` must be the chromatic number: if some coloring leaves a color empty,
/// or none exists, the precondition is reported as violated.
pub fn cocomp_coloring_types(
    g: &Graph,
    order: &[Vertex],
    k: usize,
) -> Result<BTreeSet<ColoringType>, DeciderError> {
    verify_cocomp_order(g, order).map_err(DeciderError::InvalidOrder)?;
    if g.n() == 0 || k == 0 {
        return Err(DeciderError::PreconditionViolated(
            "needs at least one vertex and one color".into(),
        ));
    }
    let adj = Matrix::of(g);
    let mut start = vec![(0, 0); k - 1];
    start.push((1, 1));
    let mut states = BTreeSet::from([CocompState(start)]);
    for rank in 2..=g.n() {
        let x = order[rank - 1];
        let mut next = BTreeSet::new();
        for state in &states {
            for a in 0..k {
                let (size, last) = state.0[a];
                if last != 0 && adj.adj(x, order[last - 1]) {
                    continue;
                }
                // Equal entries give the same successor.
                if a > 0 && state.0[a - 1] == state.0[a] {
                    continue;
                }
                let mut entries = state.0.clone();
                entries[a] = (size + 1, rank);
                entries.sort_unstable();
                next.insert(CocompState(entries));
            }
        }
        states = next;
    }
    let types: BTreeSet<ColoringType> = states
        .iter()
        .map(|s| ColoringType::from_sizes(s.0.iter().map(|&(size, _)| size).collect()))
        .collect();
    if types.is_empty() {
        return Err(DeciderError::PreconditionViolated(format!(
            "no proper {k}-coloring exists"
        )));
    }
    if types.iter().any(|t| t.sizes().contains(&0)) {
        return Err(DeciderError::PreconditionViolated(format!(
            "a coloring with fewer than {k} colors exists"
        )));
    }
    Ok(types)
}

pub fn decide_cocomp(g: &Graph, order: &[Vertex], k: usize) -> Result<bool, DeciderError> {
    Ok(cocomp_coloring_types(g, order, k)?
        .iter()
        .all(ColoringType::all_odd))
}

// ---------------------------------------------------------------------------

/// Whether every color class is a maximal independent set: each used color
/// appears in the closed neighborhood of every vertex.
pub fn is_complete_coloring(g: &Graph, c: &VertexColoring) -> bool {
    let mut used = vec![false; c.k()];
    for &x in c.colors() {
        used[x] = true;
    }
    let used_count = used.iter().filter(|&&u| u).count();
    let mut seen = vec![usize::MAX; c.k()];
    (0..g.n()).all(|v| {
        let mut count = 0;
        for w in std::iter::once(v).chain(g.neighbors(v)) {
            let x = c.color(w);
            if seen[x] != v {
                seen[x] = v;
                count += 1;
            }
        }
        count == used_count
    })
}
