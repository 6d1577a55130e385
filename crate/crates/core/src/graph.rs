//! Simple undirected graphs and the traversal primitives the edge-coloring
//! constructions are built from.
//!
//! Vertices are `0..n`. Edges are stored canonically as `(min, max)` and
//! identified by their position in [`Graph::edges`]; every adjacency entry
//! carries the id of the edge it came from, so colorings can be stored as
//! plain vectors indexed by edge id.

use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type EdgeId = usize;

const NONE: usize = usize::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("self-loop on vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("the component of vertex {0} is bipartite")]
    BipartiteComponent(Vertex),
}

/// A neighbor together with the id of the connecting edge.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Incidence {
    pub neighbor: Vertex,
    pub edge: EdgeId,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    // CSR layout: incidences of `v` are `incidences[offsets[v]..offsets[v + 1]]`,
    // sorted by neighbor.
    offsets: Vec<usize>,
    incidences: Vec<Incidence>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicates and out-of-range
    /// endpoints. Edge ids follow the order of `edges`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut canon = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            canon.push((u.min(v), u.max(v)));
        }

        // Two stable counting-sort passes order the arcs by (tail, head) in
        // linear time; duplicates then sit next to each other.
        let m = canon.len();
        let mut arcs = Vec::with_capacity(2 * m);
        for (id, &(u, v)) in canon.iter().enumerate() {
            arcs.push((u, v, id));
            arcs.push((v, u, id));
        }
        let arcs = counting_sort_by(n, arcs, |a| a.1);
        let arcs = counting_sort_by(n, arcs, |a| a.0);

        let mut offsets = vec![0; n + 1];
        for a in &arcs {
            offsets[a.0 + 1] += 1;
        }
        for v in 0..n {
            offsets[v + 1] += offsets[v];
        }
        let mut incidences = Vec::with_capacity(arcs.len());
        for (i, &(u, v, id)) in arcs.iter().enumerate() {
            if i > 0 && arcs[i - 1].0 == u && arcs[i - 1].1 == v {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            incidences.push(Incidence {
                neighbor: v,
                edge: id,
            });
        }

        Ok(Self {
            n,
            edges: canon,
            offsets,
            incidences,
        })
    }

    pub fn empty(n: usize) -> Self {
        Self::new(n, std::iter::empty()).expect("edgeless graph is valid")
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph is simple")
    }

    /// The cycle `0-1-...-(n-1)-0`; `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        Self::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("cycle is simple")
    }

    /// The path `0-1-...-(n-1)` on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|i| (i - 1, i))).expect("path is simple")
    }

    /// `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        Self::new(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("star is simple")
    }

    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        Self::new(10, outer.chain(spokes).chain(inner)).expect("Petersen graph is simple")
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Graph::new(self.n + other.n, edges).expect("disjoint union stays simple")
    }

    /// Induced subgraph on `keep` (in the given order); vertex `keep[i]`
    /// becomes `i`.
    pub fn induced_subgraph(&self, keep: &[Vertex]) -> Graph {
        let mut index = vec![NONE; self.n];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != NONE && index[v] != NONE)
            .map(|&(u, v)| (index[u], index[v]));
        Graph::new(keep.len(), edges).expect("induced subgraph stays simple")
    }

    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            let mut nbrs = self.neighbors(u).peekable();
            for v in u + 1..self.n {
                while nbrs.peek().is_some_and(|&w| w < v) {
                    nbrs.next();
                }
                if nbrs.peek() != Some(&v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(self.n, edges).expect("complement is simple")
    }

    /// Applies a vertex relabeling `v -> perm[v]`, keeping edge ids.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.n);
        Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
            .expect("relabeling by a permutation stays simple")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.edges.len()
    }

    #[inline]
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    #[inline]
    pub fn edge(&self, id: EdgeId) -> (Vertex, Vertex) {
        self.edges[id]
    }

    #[inline]
    pub fn incidences(&self, v: Vertex) -> &[Incidence] {
        &self.incidences[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incidences(v).iter().map(|inc| inc.neighbor)
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_id(&self, u: Vertex, v: Vertex) -> Option<EdgeId> {
        if u >= self.n || v >= self.n {
            return None;
        }
        let inc = self.incidences(u);
        inc.binary_search_by_key(&v, |i| i.neighbor)
            .ok()
            .map(|pos| inc[pos].edge)
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.edge_id(u, v).is_some()
    }

    /// Adjacency as bitmasks; only for graphs with at most 128 vertices.
    pub(crate) fn adjacency_masks(&self) -> Vec<u128> {
        assert!(self.n <= 128, "bitmask adjacency supports at most 128 vertices");
        let mut masks = vec![0u128; self.n];
        for &(u, v) in &self.edges {
            masks[u] |= 1 << v;
            masks[v] |= 1 << u;
        }
        masks
    }
}

fn counting_sort_by<T: Copy>(buckets: usize, items: Vec<T>, key: impl Fn(&T) -> usize) -> Vec<T> {
    let mut start = vec![0usize; buckets + 1];
    for it in &items {
        start[key(it) + 1] += 1;
    }
    for b in 0..buckets {
        start[b + 1] += start[b];
    }
    let mut out: Vec<Option<T>> = vec![None; items.len()];
    for it in items {
        let k = key(&it);
        out[start[k]] = Some(it);
        start[k] += 1;
    }
    out.into_iter()
        .map(|x| x.expect("every slot is filled"))
        .collect()
}

/// Connected components as a vertex labeling: `label[v]` is the index of
/// `v`'s component, components numbered by their smallest vertex.
pub fn component_labels(g: &Graph) -> (Vec<usize>, usize) {
    let mut label = vec![NONE; g.n()];
    let mut queue = Vec::with_capacity(g.n());
    let mut count = 0;
    for s in 0..g.n() {
        if label[s] != NONE {
            continue;
        }
        label[s] = count;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for w in g.neighbors(u) {
                if label[w] == NONE {
                    label[w] = count;
                    queue.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

/// Partition of the vertex set into connected components, each sorted, in
/// order of smallest vertex.
pub fn connected_components(g: &Graph) -> Vec<Vec<Vertex>> {
    let (label, count) = component_labels(g);
    let mut comps = vec![Vec::new(); count];
    for v in 0..g.n() {
        comps[label[v]].push(v);
    }
    comps
}

/// `Err` carries the first component with exactly two vertices.
pub fn check_nice(g: &Graph) -> Result<(), Vec<Vertex>> {
    // A K2 component is an edge whose ends both have degree one.
    for v in 0..g.n() {
        if g.degree(v) == 1 {
            let w = g.incidences(v)[0].neighbor;
            if w > v && g.degree(w) == 1 {
                return Err(vec![v, w]);
            }
        }
    }
    Ok(())
}

/// How far ahead of a random-access loop memory is requested.
pub(crate) const LOOKAHEAD: usize = 16;

#[inline(always)]
pub(crate) fn prefetch<T>(x: &T) {
    // SAFETY: a prefetch is a hint; it never faults and `x` is a live reference.
    #[cfg(target_arch = "x86_64")]
    unsafe {
        std::arch::x86_64::_mm_prefetch::<{ std::arch::x86_64::_MM_HINT_T0 }>((x as *const T).cast())
    };
    #[cfg(not(target_arch = "x86_64"))]
    let _ = x;
}

/// Prefetches `data[i]` when it exists.
#[inline(always)]
pub(crate) fn prefetch_at<T>(data: &[T], i: usize) {
    if let Some(x) = data.get(i) {
        prefetch(x);
    }
}

/// Fixed-size bit set; one bit per vertex keeps hot membership checks in
/// cache on large graphs.
#[derive(Debug, Clone)]
pub(crate) struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Self(vec![0; n.div_ceil(64)])
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.0[i >> 6] >> (i & 63) & 1 == 1
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.0[i >> 6] |= 1 << (i & 63);
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Link {
    parent: u32,
    edge: u32,
}

impl Link {
    const ROOT: Link = Link {
        parent: u32::MAX,
        edge: u32::MAX,
    };

    fn new(parent: Vertex, edge: EdgeId) -> Self {
        Self {
            parent: u32::try_from(parent).expect("vertex index fits in u32"),
            edge: u32::try_from(edge).expect("edge index fits in u32"),
        }
    }
}

/// A BFS forest grown from a list of roots, each in its own component.
///
/// `order` lists the visited vertices tree by tree; the vertices of the tree
/// rooted at `roots[i]` occupy `order[spans[i]..spans[i + 1]]`.
#[derive(Debug, Clone)]
pub(crate) struct BfsForest {
    pub roots: Vec<Vertex>,
    pub spans: Vec<usize>,
    pub order: Vec<Vertex>,
    /// Parent and parent edge per vertex, packed so that one read gets both.
    links: Vec<Link>,
    /// Per tree, the first edge joining two vertices of equal depth.
    intra: Vec<Option<(Vertex, Vertex, EdgeId)>>,
    seen: Bits,
    /// Depth parity.
    odd: Bits,
}

impl BfsForest {
    fn empty(n: usize) -> Self {
        Self {
            roots: Vec::new(),
            spans: vec![0],
            order: Vec::with_capacity(n),
            links: vec![Link::ROOT; n],
            intra: Vec::new(),
            seen: Bits::new(n),
            odd: Bits::new(n),
        }
    }

    fn extend(&mut self, g: &Graph, r: Vertex) {
        assert!(!self.seen.get(r), "two roots in one component");
        self.seen.set(r);
        self.roots.push(r);
        let mut head = self.order.len();
        self.order.push(r);
        let mut intra = None;
        while head < self.order.len() {
            if let Some(&ahead) = self.order.get(head + LOOKAHEAD) {
                prefetch(&g.offsets[ahead]);
            }
            if let Some(&near) = self.order.get(head + LOOKAHEAD / 2) {
                if let Some(inc) = g.incidences.get(g.offsets[near]) {
                    prefetch(inc);
                }
            }
            let u = self.order[head];
            head += 1;
            let child_odd = !self.odd.get(u);
            for inc in g.incidences(u) {
                let w = inc.neighbor;
                if self.seen.get(w) {
                    // Seen neighbors are one layer up or on u's layer.
                    if intra.is_none() && self.odd.get(w) != child_odd {
                        intra = Some((u, w, inc.edge));
                    }
                } else {
                    self.seen.set(w);
                    if child_odd {
                        self.odd.set(w);
                    }
                    self.links[w] = Link::new(u, inc.edge);
                    self.order.push(w);
                }
            }
        }
        self.spans.push(self.order.len());
        self.intra.push(intra);
    }

    pub fn grow(g: &Graph, roots: &[Vertex]) -> Self {
        let mut forest = Self::empty(g.n());
        for &r in roots {
            forest.extend(g, r);
        }
        forest
    }

    /// One tree per component, rooted at its smallest vertex.
    pub fn grow_all(g: &Graph) -> Self {
        let mut forest = Self::empty(g.n());
        for v in 0..g.n() {
            if !forest.seen.get(v) {
                forest.extend(g, v);
            }
        }
        forest
    }

    #[inline]
    pub fn tree(&self, i: usize) -> &[Vertex] {
        &self.order[self.spans[i]..self.spans[i + 1]]
    }

    #[inline]
    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.link(v).map(|(p, _)| p)
    }

    /// Parent and the edge to it, or `None` at a root or unvisited vertex.
    #[inline]
    pub fn link(&self, v: Vertex) -> Option<(Vertex, EdgeId)> {
        let l = self.links[v];
        (l != Link::ROOT).then_some((l.parent as usize, l.edge as usize))
    }

    #[inline(always)]
    pub fn prefetch_link(&self, v: Vertex) {
        prefetch(&self.links[v]);
    }

    pub fn vertex_count(&self) -> usize {
        self.links.len()
    }

    /// Whether `v` sits at odd depth in its tree.
    #[inline]
    pub fn is_odd(&self, v: Vertex) -> bool {
        self.odd.get(v)
    }

    /// First edge joining two vertices of equal depth in tree `i`, scanning
    /// vertices in BFS order and neighbors ascending.
    pub fn intra_layer_edge(&self, i: usize) -> Option<(Vertex, Vertex, EdgeId)> {
        self.intra[i]
    }

    /// Odd closed walk at the root of tree `i`: root path to the lowest
    /// common ancestor of an intra-layer edge, around the odd cycle, and back.
    pub fn odd_walk(&self, g: &Graph, i: usize) -> Option<OddClosedWalk> {
        let (u, w, uw) = self.intra_layer_edge(i)?;
        let root = self.roots[i];

        // Climb from u and w in lockstep (equal depths) to their LCA.
        let mut up_u = Vec::new();
        let mut up_w = Vec::new();
        let (mut a, mut b) = (u, w);
        while a != b {
            let (pa, ea) = self.link(a).expect("below the root");
            let (pb, eb) = self.link(b).expect("below the root");
            up_u.push((ea, a));
            up_w.push((eb, b));
            a = pa;
            b = pb;
        }
        let lca = a;
        let mut down = Vec::new();
        let mut x = lca;
        while x != root {
            let (p, e) = self.link(x).expect("below the root");
            down.push(Traversal {
                edge: e,
                from: p,
                to: x,
            });
            x = p;
        }
        down.reverse();

        let mut steps = down.clone();
        // lca -> ... -> u
        for &(e, child) in up_u.iter().rev() {
            steps.push(Traversal {
                edge: e,
                from: other_end(g, e, child),
                to: child,
            });
        }
        steps.push(Traversal {
            edge: uw,
            from: u,
            to: w,
        });
        // w -> ... -> lca
        for &(e, child) in &up_w {
            steps.push(Traversal {
                edge: e,
                from: child,
                to: other_end(g, e, child),
            });
        }
        // lca -> root
        for t in down.iter().rev() {
            steps.push(Traversal {
                edge: t.edge,
                from: t.to,
                to: t.from,
            });
        }
        Some(OddClosedWalk {
            start: root,
            steps,
            cycle_len: 2 * up_u.len() + 1,
        })
    }
}

#[inline]
pub(crate) fn other_end(g: &Graph, e: EdgeId, v: Vertex) -> Vertex {
    let (a, b) = g.edge(e);
    if a == v {
        b
    } else {
        a
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanningTree {
    pub root: Vertex,
    /// Parent of each vertex; `None` for the root and for vertices outside
    /// the root's component.
    pub parent: Vec<Option<Vertex>>,
    /// Edge to the parent, aligned with `parent`.
    pub parent_edge: Vec<Option<EdgeId>>,
    /// Vertices of the root's component in BFS order.
    pub order: Vec<Vertex>,
}

impl SpanningTree {
    pub fn tree_edges(&self) -> Vec<EdgeId> {
        self.order.iter().filter_map(|&v| self.parent_edge[v]).collect()
    }

    pub fn degree_of(&self, v: Vertex) -> usize {
        let children = self.order.iter().filter(|&&u| self.parent[u] == Some(v)).count();
        children + usize::from(self.parent[v].is_some())
    }
}

/// BFS spanning tree of `root`'s component. Neighbors are explored in
/// ascending order, so every neighbor of the root is its child.
pub fn bfs_spanning_tree(g: &Graph, root: Vertex) -> SpanningTree {
    let forest = BfsForest::grow(g, &[root]);
    let parent_edge = (0..g.n()).map(|v| forest.link(v).map(|(_, e)| e)).collect();
    let parent = (0..g.n()).map(|v| forest.parent(v)).collect();
    SpanningTree {
        root,
        parent,
        parent_edge,
        order: forest.order,
    }
}

/// One traversal of an edge in a walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Traversal {
    pub edge: EdgeId,
    pub from: Vertex,
    pub to: Vertex,
}

/// An odd closed walk `P · C · reverse(P)` starting and ending at `start`,
/// where `C` is an odd cycle and `P` a path from `start` to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddClosedWalk {
    pub start: Vertex,
    pub steps: Vec<Traversal>,
    pub cycle_len: usize,
}

impl OddClosedWalk {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Length of the path from `start` to the cycle.
    pub fn stem_len(&self) -> usize {
        (self.steps.len() - self.cycle_len) / 2
    }

    /// The vertices of the odd cycle in traversal order.
    pub fn cycle(&self) -> Vec<Vertex> {
        let stem = self.stem_len();
        self.steps[stem..stem + self.cycle_len]
            .iter()
            .map(|t| t.from)
            .collect()
    }
}

/// Odd closed walk through `v`, built from a BFS rooted at `v`.
pub fn find_odd_closed_walk(g: &Graph, v: Vertex) -> Result<OddClosedWalk, GraphError> {
    if v >= g.n() {
        return Err(GraphError::VertexOutOfRange { vertex: v, n: g.n() });
    }
    BfsForest::grow(g, &[v])
        .odd_walk(g, 0)
        .ok_or(GraphError::BipartiteComponent(v))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ComponentSides {
    Bipartite { x: Vec<Vertex>, y: Vec<Vertex> },
    NonBipartite { odd_cycle: Vec<Vertex> },
}

impl ComponentSides {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, ComponentSides::Bipartite { .. })
    }
}

/// Per-component two-coloring, in component order. `x` holds the vertices
/// at even BFS depth from the component's smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub components: Vec<ComponentSides>,
}

impl Bipartition {
    pub fn is_bipartite(&self) -> bool {
        self.components.iter().all(ComponentSides::is_bipartite)
    }
}

pub fn bipartition(g: &Graph) -> Bipartition {
    let comps = connected_components(g);
    let roots: Vec<Vertex> = comps.iter().map(|c| c[0]).collect();
    let forest = BfsForest::grow(g, &roots);
    let components = comps
        .iter()
        .enumerate()
        .map(|(i, comp)| match forest.odd_walk(g, i) {
            Some(walk) => ComponentSides::NonBipartite {
                odd_cycle: walk.cycle(),
            },
            None => {
                let (x, y) = comp.iter().partition(|&&v| !forest.is_odd(v));
                ComponentSides::Bipartite { x, y }
            }
        })
        .collect();
    Bipartition { components }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle() -> Graph {
        Graph::new(3, [(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    /// C5 on 0..5 plus pendant vertex 5 attached to 0.
    fn c5_pendant() -> Graph {
        Graph::new(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)]).unwrap()
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert_eq!(Graph::new(3, [(1, 1)]), Err(GraphError::SelfLoop(1)));
        assert_eq!(
            Graph::new(3, [(0, 1), (2, 0), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        );
        assert!(matches!(
            Graph::new(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        ));
    }

    #[test]
    fn adjacency_is_sorted_and_consistent() {
        let g = Graph::new(4, [(3, 0), (1, 0), (2, 1), (0, 2)]).unwrap();
        assert_eq!(g.neighbors(0).collect::<Vec<_>>(), vec![1, 2, 3]);
        let total: usize = (0..4).map(|v| g.degree(v)).sum();
        assert_eq!(total, 2 * g.m());
        for (id, &(u, v)) in g.edges().iter().enumerate() {
            assert!(u < v);
            assert_eq!(g.edge_id(u, v), Some(id));
            assert_eq!(g.edge_id(v, u), Some(id));
        }
        assert_eq!(g.edge_id(1, 3), None);
    }

    #[test]
    fn components() {
        assert_eq!(connected_components(&triangle()), vec![vec![0, 1, 2]]);
        let two = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(connected_components(&two), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(
            connected_components(&Graph::empty(3)),
            vec![vec![0], vec![1], vec![2]]
        );
    }

    #[test]
    fn niceness() {
        assert_eq!(check_nice(&Graph::path(2)), Err(vec![0, 1]));
        assert_eq!(check_nice(&Graph::path(3)), Ok(()));
        let g = Graph::complete(4).disjoint_union(&Graph::path(2));
        assert_eq!(check_nice(&g), Err(vec![4, 5]));
        assert_eq!(check_nice(&Graph::empty(1)), Ok(()));
    }

    #[test]
    fn bipartition_examples() {
        let c4 = bipartition(&Graph::cycle(4));
        assert_eq!(
            c4.components,
            vec![ComponentSides::Bipartite {
                x: vec![0, 2],
                y: vec![1, 3]
            }]
        );
        let c5 = bipartition(&Graph::cycle(5));
        match &c5.components[0] {
            ComponentSides::NonBipartite { odd_cycle } => assert_eq!(odd_cycle.len(), 5),
            other => panic!("expected odd cycle, got {other:?}"),
        }
        let star = bipartition(&Graph::star(3));
        assert_eq!(
            star.components,
            vec![ComponentSides::Bipartite {
                x: vec![0],
                y: vec![1, 2, 3]
            }]
        );
    }

    #[test]
    fn spanning_trees() {
        let star = bfs_spanning_tree(&Graph::star(4), 0);
        assert_eq!(star.tree_edges().len(), 4);
        assert_eq!(star.degree_of(0), 4);

        let c4 = Graph::cycle(4);
        let t = bfs_spanning_tree(&c4, 0);
        let mut edges: Vec<_> = t.tree_edges().iter().map(|&e| c4.edge(e)).collect();
        edges.sort();
        assert_eq!(edges, vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(t.parent[0], None);

        let tri = bfs_spanning_tree(&triangle(), 0);
        assert_eq!(tri.degree_of(0), 2);
    }

    #[test]
    fn spanning_tree_ignores_other_components() {
        let g = Graph::path(3).disjoint_union(&Graph::cycle(3));
        let t = bfs_spanning_tree(&g, 4);
        assert_eq!(t.order, vec![4, 3, 5]);
        assert!(t.parent[..3].iter().all(Option::is_none));
    }

    #[test]
    fn odd_walks() {
        let w = find_odd_closed_walk(&triangle(), 0).unwrap();
        assert_eq!(w.len(), 3);
        assert_eq!(w.stem_len(), 0);

        let w = find_odd_closed_walk(&c5_pendant(), 5).unwrap();
        assert_eq!(w.len(), 7);
        assert_eq!(w.stem_len(), 1);
        assert_eq!(w.steps.first().unwrap().from, 5);
        assert_eq!(w.steps.last().unwrap().to, 5);
        for pair in w.steps.windows(2) {
            assert_eq!(pair[0].to, pair[1].from);
        }

        assert_eq!(
            find_odd_closed_walk(&Graph::cycle(4), 0),
            Err(GraphError::BipartiteComponent(0))
        );
    }

    #[test]
    fn complement_and_induced() {
        let c5 = Graph::cycle(5);
        let comp = c5.complement();
        assert_eq!(comp.m(), 5);
        assert!(comp.has_edge(0, 2) && !comp.has_edge(0, 1));
        let sub = c5.induced_subgraph(&[0, 1, 2]);
        assert_eq!(sub.edges(), &[(0, 1), (1, 2)]);
    }
}
