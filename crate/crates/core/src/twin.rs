//! Constructive twin edge colorings.
//!
//! Everything here is built from two moves:
//!
//! * tree fitting: with non-tree edges at 0, color a spanning tree from the
//!   leaves up so that every non-root vertex gets its target sum; only the
//!   root (the *defective* vertex) may be off;
//! * walk shifting: adding `+x, -x, +x, ...` along an odd closed walk at the
//!   root leaves every other vertex's sum unchanged and moves the root's sum
//!   by `2x`.
//!
//! On non-bipartite components the two together reach any target coloring
//! when `2x = target - current` is solvable in `Z_m`: always for odd `m`, and
//! for even `m` exactly when the component's color sum is even. Bipartite
//! components get a fresh two-valued target instead.
//!
//! [`construct`] applies this per component in `O(|V| + |E|)` and uses `k + 1`
//! colors only when `k = 2 (mod 4)` and some component has an odd number of
//! vertices of every color.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{check_nice, prefetch, BfsForest, Graph, OddClosedWalk, SpanningTree, Vertex, LOOKAHEAD};
use crate::zk::{first_conflict, induced_coloring, zm, VertexColoring, ZkEdgeColoring};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TwinError {
    #[error("graph is not nice: component {0:?} of size 2")]
    NotNice(Vec<Vertex>),
    #[error("input coloring is not proper: edge {u}-{v} is monochromatic")]
    ImproperInput { u: Vertex, v: Vertex },
    #[error("coloring has {got} entries but the graph has {expected} vertices")]
    DomainMismatch { expected: usize, got: usize },
    #[error("modulus {0} is too small")]
    ModulusTooSmall(usize),
    #[error("modulus {modulus} cannot represent color {color} of vertex {vertex}")]
    ColorExceedsModulus {
        vertex: Vertex,
        color: usize,
        modulus: usize,
    },
    #[error("{0:?} is not the vertex set of a connected component")]
    NotAComponent(Vec<Vertex>),
    #[error("needs 3 colors: both sides of the bipartition are odd ({x} and {y})")]
    NeedsThreeColors { x: usize, y: usize },
    #[error("component is bipartite")]
    Bipartite,
    #[error("component is not bipartite")]
    NotBipartite,
    #[error("modulus {0} has the wrong parity for this construction")]
    WrongParity(usize),
    #[error("odd sum: the colors of the component add up to {sum}")]
    OddSum { sum: usize },
    #[error("requested {requested} colors but the vertex coloring already uses a palette of {k}")]
    BelowPalette { requested: usize, k: usize },
}

/// An edge coloring that induces `target` everywhere except possibly at
/// `defective`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlmostInducedColoring {
    pub s: ZkEdgeColoring,
    pub target: VertexColoring,
    pub defective: Vertex,
}

impl AlmostInducedColoring {
    /// Whether the defective vertex happens to be correct too.
    pub fn is_exact(&self, g: &Graph) -> bool {
        let c = induced_coloring(g, &self.s).expect("built on g");
        c.color(self.defective) == self.target.color(self.defective) % self.s.modulus()
    }
}

/// How a component was handled by [`construct`] or [`monotone_extend`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Bipartite, two colors, root in an even side.
    Bip2,
    /// Bipartite, at least three colors.
    BipT,
    /// Non-bipartite, odd modulus, input coloring induced exactly.
    OddT,
    /// Non-bipartite, even modulus, color sum already even.
    EvenTDirect,
    /// Non-bipartite, even modulus, colors adjusted to an even sum first.
    EvenTRebalanced,
    /// Component with an odd number of vertices of each of the `k = 2 (mod 4)`
    /// colors; handled with `k + 1` colors.
    PromoteKPlus1,
    Isolated,
}

impl Strategy {
    pub fn tag(self) -> &'static str {
        match self {
            Strategy::Bip2 => "bip2",
            Strategy::BipT => "bip_t",
            Strategy::OddT => "odd_t",
            Strategy::EvenTDirect => "even_t_direct",
            Strategy::EvenTRebalanced => "even_t_rebalanced",
            Strategy::PromoteKPlus1 => "promote_k_plus_1",
            Strategy::Isolated => "isolated",
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ComponentReport {
    /// Index of the component, ordered by smallest vertex.
    pub component: usize,
    /// Smallest vertex of the component.
    pub first_vertex: Vertex,
    pub size: usize,
    pub strategy: Strategy,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BuildReport {
    pub palette_used: usize,
    pub per_component: Vec<ComponentReport>,
    pub induced: VertexColoring,
}

// ---------------------------------------------------------------------------
// The two moves
// ---------------------------------------------------------------------------

/// Colors the tree edges of every tree in `forest` from the leaves up so that
/// each non-root vertex sums to `target` (mod `m`). Returns the resulting sum
/// at every vertex, which for roots is their induced color.
///
/// `values` must be zero on every edge of the forest's components.
fn fit_forest(g: &Graph, forest: &BfsForest, target: &[usize], m: usize, values: &mut [usize]) -> Vec<usize> {
    let mut acc = vec![0usize; g.n()];
    let order = &forest.order;
    for i in (0..order.len()).rev() {
        if let Some(&far) = i.checked_sub(LOOKAHEAD).map(|j| &order[j]) {
            forest.prefetch_link(far);
            prefetch(&target[far]);
            prefetch(&acc[far]);
        }
        if let Some((p, e)) = i.checked_sub(LOOKAHEAD / 2).and_then(|j| forest.link(order[j])) {
            prefetch(&acc[p]);
            prefetch(&values[e]);
        }
        let v = order[i];
        let Some((parent, e)) = forest.link(v) else {
            continue;
        };
        let x = zm::sub(target[v], acc[v], m);
        values[e] = x;
        acc[v] = target[v];
        acc[parent] = zm::add(acc[parent], x, m);
    }
    acc
}

fn shift_in_place(values: &mut [usize], walk: &OddClosedWalk, x: usize, m: usize) {
    let minus_x = zm::neg(x % m, m);
    for (i, step) in walk.steps.iter().enumerate() {
        let delta = if i % 2 == 0 { x % m } else { minus_x };
        values[step.edge] = zm::add(values[step.edge], delta, m);
    }
}

/// Tree fitting on a given spanning tree: non-tree edges get 0 and every
/// vertex of the tree other than its root receives its color from `c`.
pub fn almost_induce_from_tree(
    g: &Graph,
    c: &VertexColoring,
    t: &SpanningTree,
    m: usize,
) -> Result<AlmostInducedColoring, TwinError> {
    if m < 2 {
        return Err(TwinError::ModulusTooSmall(m));
    }
    check_domain(g, c)?;
    check_fits(c, m)?;
    // Same bottom-up pass as `fit_forest`, over the caller's tree.
    let mut values = vec![0; g.m()];
    let mut acc = vec![0usize; g.n()];
    for &v in t.order.iter().rev() {
        let (Some(parent), Some(e)) = (t.parent[v], t.parent_edge[v]) else {
            continue;
        };
        let x = zm::sub(c.color(v), acc[v], m);
        values[e] = x;
        acc[parent] = zm::add(acc[parent], x, m);
    }
    Ok(AlmostInducedColoring {
        s: ZkEdgeColoring::from_reduced(m, values),
        target: c.clone(),
        defective: t.root,
    })
}

/// Adds `+x` to odd-numbered and `-x` to even-numbered edge occurrences of
/// `w` (counting from 1). Only the induced color of `w.start` changes, by
/// `2x`.
pub fn shift_odd_walk(s: &ZkEdgeColoring, w: &OddClosedWalk, x: usize) -> ZkEdgeColoring {
    let m = s.modulus();
    let mut values = s.values().to_vec();
    shift_in_place(&mut values, w, x, m);
    ZkEdgeColoring::from_reduced(m, values)
}

// ---------------------------------------------------------------------------
// Component plans
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum PlanKind {
    Isolated,
    /// Target is 1 on the root's side and 0 on the other.
    Bipartite,
    /// Target is given; fixed at the root with a walk shift.
    Exact,
}

#[derive(Debug, Clone, Copy)]
struct Plan {
    root: Vertex,
    kind: PlanKind,
}

/// Runs the plans over one shared BFS forest. `target` must already hold the
/// desired color of every vertex covered by a non-isolated plan.
/// Carries out `plans[i]` on tree `i` of `forest`. A plan may name a root
/// other than the tree's own; the defect is then carried along the tree path.
fn execute(g: &Graph, forest: &BfsForest, plans: &[Plan], target: &[usize], m: usize) -> Vec<usize> {
    debug_assert_eq!(forest.roots.len(), plans.len());
    let mut values = vec![0; g.m()];
    let mut acc = fit_forest(g, forest, target, m, &mut values);

    for (i, plan) in plans.iter().enumerate() {
        let v = plan.root;
        let r = forest.roots[i];
        if v != r && plan.kind != PlanKind::Isolated {
            move_defect(forest, r, v, target, m, &mut acc, &mut values);
        }
        match plan.kind {
            PlanKind::Isolated => {}
            PlanKind::Bipartite => {
                if m == 2 {
                    debug_assert_eq!(acc[v], target[v], "root sits in an even side");
                    continue;
                }
                if acc[v] != 0 {
                    continue;
                }
                // Bump the edges to the two smallest neighbors: the root gains
                // 2 * bump, each of those neighbors gains bump.
                let bump = if m == 4 { 3 } else { 2 };
                for inc in &g.incidences(v)[..2] {
                    values[inc.edge] = zm::add(values[inc.edge], bump, m);
                }
            }
            PlanKind::Exact => {
                if acc[v] == target[v] {
                    continue;
                }
                let d = zm::sub(target[v], acc[v], m);
                let x = zm::halve(d, m).expect("2x = d is solvable under the plan's parity");
                let walk = forest
                    .odd_walk(g, i)
                    .expect("exact plans are only made for non-bipartite components");
                shift_in_place(&mut values, &walk, x, m);
            }
        }
    }
    values
}

/// Alternating +d, -d along the tree path from `r` down to `v` fixes `r` and
/// leaves every inner vertex unchanged, so only `v` keeps a defect.
fn move_defect(
    forest: &BfsForest,
    r: Vertex,
    v: Vertex,
    target: &[usize],
    m: usize,
    acc: &mut [usize],
    values: &mut [usize],
) {
    let d = zm::sub(target[r], acc[r], m);
    let mut path = Vec::new();
    let mut u = v;
    while u != r {
        let (p, e) = forest.link(u).expect("v lies in the tree of r");
        path.push(e);
        u = p;
    }
    let minus_d = zm::neg(d, m);
    for (j, &e) in path.iter().rev().enumerate() {
        let delta = if j % 2 == 0 { d } else { minus_d };
        values[e] = zm::add(values[e], delta, m);
    }
    acc[r] = target[r];
    let last = if path.len() % 2 == 1 { d } else { minus_d };
    acc[v] = zm::add(acc[v], last, m);
}

/// Per-component facts gathered by one BFS from each component's smallest
/// vertex.
struct Survey {
    forest: BfsForest,
    bipartite: Vec<bool>,
}

impl Survey {
    fn new(g: &Graph) -> Self {
        let forest = BfsForest::grow_all(g);
        let bipartite = (0..forest.roots.len())
            .map(|i| forest.intra_layer_edge(i).is_none())
            .collect();
        Self { forest, bipartite }
    }

    fn components(&self) -> usize {
        self.forest.roots.len()
    }

    fn vertices(&self, i: usize) -> &[Vertex] {
        self.forest.tree(i)
    }

    fn smallest(&self, i: usize) -> Vertex {
        self.forest.roots[i]
    }

    fn side(&self, v: Vertex) -> usize {
        usize::from(self.forest.is_odd(v))
    }

    /// Sizes of the even-depth and odd-depth sides of bipartite component `i`.
    fn side_sizes(&self, i: usize) -> (usize, usize) {
        let even = self.vertices(i).iter().filter(|&&v| self.side(v) == 0).count();
        (even, self.vertices(i).len() - even)
    }

    /// Root for a bipartite component with at least three colors: the
    /// smallest vertex of degree at least two.
    fn branching_root(&self, g: &Graph, i: usize) -> Vertex {
        self.vertices(i)
            .iter()
            .copied()
            .filter(|&v| g.degree(v) >= 2)
            .min()
            .expect("a connected component on at least 3 vertices has a vertex of degree 2")
    }

    /// Root for a bipartite component with two colors: the smallest vertex of
    /// an even side.
    fn even_side_root(&self, i: usize) -> Option<Vertex> {
        let (even, odd) = self.side_sizes(i);
        let side = if even % 2 == 0 {
            0
        } else if odd % 2 == 0 {
            1
        } else {
            return None;
        };
        self.vertices(i)
            .iter()
            .copied()
            .filter(|&v| self.side(v) == side)
            .min()
    }

    /// Writes the bipartite target (1 on the root's side, 0 elsewhere).
    fn fill_sides(&self, i: usize, root: Vertex, target: &mut [usize]) {
        let root_side = self.side(root);
        let vertices = self.vertices(i);
        for (j, &v) in vertices.iter().enumerate() {
            if let Some(&ahead) = vertices.get(j + LOOKAHEAD) {
                prefetch(&target[ahead]);
            }
            target[v] = usize::from(self.side(v) == root_side);
        }
    }
}

fn load_targets(
    vertices: &[Vertex],
    colors: &[usize],
    target: &mut [usize],
    relabel: impl Fn(usize) -> usize,
) {
    for (j, &v) in vertices.iter().enumerate() {
        if let Some(&ahead) = vertices.get(j + LOOKAHEAD) {
            prefetch(&colors[ahead]);
            prefetch(&target[ahead]);
        }
        target[v] = relabel(colors[v]);
    }
}

/// Per-label class sizes within one component, using a scratch array of
/// palette size that is cleared again afterwards.
struct ClassCounter {
    counts: Vec<usize>,
    touched: Vec<usize>,
}

impl ClassCounter {
    fn new(k: usize) -> Self {
        Self {
            counts: vec![0; k],
            touched: Vec::new(),
        }
    }

    fn load(&mut self, colors: &[usize], comp: &[Vertex]) {
        for &label in &self.touched {
            self.counts[label] = 0;
        }
        self.touched.clear();
        for (j, &v) in comp.iter().enumerate() {
            if let Some(&ahead) = comp.get(j + LOOKAHEAD) {
                prefetch(&colors[ahead]);
            }
            let c = colors[v];
            if self.counts[c] == 0 {
                self.touched.push(c);
            }
            self.counts[c] += 1;
        }
        self.touched.sort_unstable();
    }

    fn k(&self) -> usize {
        self.counts.len()
    }

    /// Every one of the `k` labels has an odd class (so all are used).
    fn all_odd(&self) -> bool {
        self.touched.len() == self.k() && self.touched.iter().all(|&c| self.counts[c] % 2 == 1)
    }

    /// Smallest label of the given parity whose class size has the given
    /// parity. Unused labels count as size 0.
    fn find(&self, label_parity: usize, size_parity: usize) -> Option<usize> {
        let used = self
            .touched
            .iter()
            .copied()
            .find(|&c| c % 2 == label_parity && self.counts[c] % 2 == size_parity);
        if size_parity == 1 {
            return used;
        }
        // The first unused label of this parity is found after skipping at
        // most |touched| used ones.
        let unused = (label_parity..self.k()).step_by(2).find(|&c| self.counts[c] == 0);
        match (used, unused) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// Plan for the component last loaded.
    fn plan(&self) -> Rebalance {
        let sum_parity = self.touched.iter().map(|&c| c * self.counts[c]).sum::<usize>() % 2;
        if sum_parity == 0 {
            return Rebalance::AlreadyEven;
        }
        // Swapping an odd label with an even one flips the parity exactly when
        // their classes have sizes of different parity.
        for (odd_size, even_size) in [(1, 0), (0, 1)] {
            if let (Some(odd_label), Some(even_label)) = (self.find(1, odd_size), self.find(0, even_size)) {
                return Rebalance::Swap {
                    odd_label,
                    even_label,
                };
            }
        }
        Rebalance::Impossible
    }
}

/// Outcome of looking for a relabeling of one component with even color sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rebalance {
    AlreadyEven,
    /// Exchange these two labels inside the component.
    Swap {
        odd_label: usize,
        even_label: usize,
    },
    /// Every class is odd and there is an odd number of odd labels.
    Impossible,
}

impl Rebalance {
    fn relabel(self, c: usize) -> usize {
        match self {
            Rebalance::Swap {
                odd_label,
                even_label,
            } if c == odd_label => even_label,
            Rebalance::Swap {
                odd_label,
                even_label,
            } if c == even_label => odd_label,
            _ => c,
        }
    }
}

pub fn plan_rebalance(f: &VertexColoring, comp: &[Vertex]) -> Rebalance {
    let mut counter = ClassCounter::new(f.k());
    counter.load(f.colors(), comp);
    counter.plan()
}

/// Relabels the color classes of `comp` so that their color sum is even.
/// Vertices outside `comp` keep their colors. `None` exactly when every class
/// inside the component is odd (unused labels count as empty) and there is an
/// odd number of odd labels in the palette; for even palettes, when it is
/// `2 (mod 4)`.
pub fn rebalance_even_sum(f: &VertexColoring, comp: &[Vertex]) -> Option<VertexColoring> {
    let plan = plan_rebalance(f, comp);
    if plan == Rebalance::Impossible {
        return None;
    }
    let mut colors = f.colors().to_vec();
    for &v in comp {
        colors[v] = plan.relabel(colors[v]);
    }
    Some(VertexColoring::new(f.k(), colors).expect("relabeling stays in the palette"))
}

// ---------------------------------------------------------------------------
// Single-component builders
// ---------------------------------------------------------------------------

fn check_domain(g: &Graph, f: &VertexColoring) -> Result<(), TwinError> {
    if f.len() != g.n() {
        return Err(TwinError::DomainMismatch {
            expected: g.n(),
            got: f.len(),
        });
    }
    Ok(())
}

fn check_fits(f: &VertexColoring, m: usize) -> Result<(), TwinError> {
    match f.colors().iter().enumerate().find(|(_, &c)| c >= m) {
        Some((vertex, &color)) => Err(TwinError::ColorExceedsModulus {
            vertex,
            color,
            modulus: m,
        }),
        None => Ok(()),
    }
}

fn check_proper(g: &Graph, colors: &[usize]) -> Result<(), TwinError> {
    match first_conflict(g, colors) {
        Some((u, v)) => Err(TwinError::ImproperInput { u, v }),
        None => Ok(()),
    }
}

/// Confirms `comp` is exactly one component and returns its index in the
/// survey.
fn locate_component(survey: &Survey, comp: &[Vertex]) -> Result<usize, TwinError> {
    let err = || TwinError::NotAComponent(comp.to_vec());
    let &first = comp.iter().min().ok_or_else(err)?;
    if first >= survey.forest.vertex_count() {
        return Err(err());
    }
    // Roots are component minima in increasing order.
    let i = survey.forest.roots.partition_point(|&r| r <= first) - 1;
    let mut sorted = comp.to_vec();
    sorted.sort_unstable();
    let mut members = survey.vertices(i).to_vec();
    members.sort_unstable();
    if sorted != members {
        return Err(err());
    }
    Ok(i)
}

fn finish_component(g: &Graph, tree_root: Vertex, plan: Plan, target: &[usize], m: usize) -> ZkEdgeColoring {
    let forest = BfsForest::grow(g, &[tree_root]);
    ZkEdgeColoring::from_reduced(m, execute(g, &forest, &[plan], target, m))
}

/// Twin `t`-edge coloring of one bipartite component (zero elsewhere). For
/// `t = 2` one side must have even size.
pub fn build_bipartite_component(g: &Graph, comp: &[Vertex], t: usize) -> Result<ZkEdgeColoring, TwinError> {
    if t < 2 {
        return Err(TwinError::ModulusTooSmall(t));
    }
    let survey = Survey::new(g);
    let i = locate_component(&survey, comp)?;
    let size = survey.vertices(i).len();
    if size == 2 {
        return Err(TwinError::NotNice(survey.vertices(i).to_vec()));
    }
    if !survey.bipartite[i] {
        return Err(TwinError::NotBipartite);
    }
    if size == 1 {
        return Ok(ZkEdgeColoring::from_reduced(t, vec![0; g.m()]));
    }
    let root = if t == 2 {
        let (x, y) = survey.side_sizes(i);
        survey
            .even_side_root(i)
            .ok_or(TwinError::NeedsThreeColors { x, y })?
    } else {
        survey.branching_root(g, i)
    };
    let mut target = vec![0; g.n()];
    survey.fill_sides(i, root, &mut target);
    let plan = Plan {
        root,
        kind: PlanKind::Bipartite,
    };
    Ok(finish_component(g, survey.smallest(i), plan, &target, t))
}

/// Shared checks for the exact builders; returns the component index.
fn exact_preconditions(
    g: &Graph,
    survey: &Survey,
    comp: &[Vertex],
    f: &VertexColoring,
    t: usize,
) -> Result<usize, TwinError> {
    check_domain(g, f)?;
    let i = locate_component(survey, comp)?;
    if survey.bipartite[i] {
        return Err(TwinError::Bipartite);
    }
    for &v in survey.vertices(i) {
        if f.color(v) >= t {
            return Err(TwinError::ColorExceedsModulus {
                vertex: v,
                color: f.color(v),
                modulus: t,
            });
        }
        if let Some(w) = g.neighbors(v).find(|&w| f.color(w) == f.color(v)) {
            return Err(TwinError::ImproperInput {
                u: v.min(w),
                v: v.max(w),
            });
        }
    }
    Ok(i)
}

/// Edge coloring of a non-bipartite component with odd modulus `t` whose
/// induced coloring equals `f` on the component.
pub fn build_component_odd_t(
    g: &Graph,
    comp: &[Vertex],
    f: &VertexColoring,
    t: usize,
) -> Result<ZkEdgeColoring, TwinError> {
    if t < 3 {
        return Err(TwinError::ModulusTooSmall(t));
    }
    if t % 2 == 0 {
        return Err(TwinError::WrongParity(t));
    }
    let survey = Survey::new(g);
    let i = exact_preconditions(g, &survey, comp, f, t)?;
    let plan = Plan {
        root: survey.smallest(i),
        kind: PlanKind::Exact,
    };
    Ok(finish_component(g, survey.smallest(i), plan, f.colors(), t))
}

/// Edge coloring of a non-bipartite component with even modulus `t` whose
/// induced coloring equals `f` on the component; requires an even color sum
/// over the component.
pub fn build_component_even_t(
    g: &Graph,
    comp: &[Vertex],
    f: &VertexColoring,
    t: usize,
) -> Result<ZkEdgeColoring, TwinError> {
    if t < 2 {
        return Err(TwinError::ModulusTooSmall(t));
    }
    if t % 2 == 1 {
        return Err(TwinError::WrongParity(t));
    }
    let survey = Survey::new(g);
    let i = exact_preconditions(g, &survey, comp, f, t)?;
    let sum: usize = survey.vertices(i).iter().map(|&v| f.color(v)).sum();
    if sum % 2 == 1 {
        return Err(TwinError::OddSum { sum });
    }
    let plan = Plan {
        root: survey.smallest(i),
        kind: PlanKind::Exact,
    };
    Ok(finish_component(g, survey.smallest(i), plan, f.colors(), t))
}

// ---------------------------------------------------------------------------
// Whole-graph constructors
// ---------------------------------------------------------------------------

fn validate_input(g: &Graph, f: &VertexColoring) -> Result<(), TwinError> {
    check_domain(g, f)?;
    check_nice(g).map_err(TwinError::NotNice)?;
    check_proper(g, f.colors())
}

fn report(
    g: &Graph,
    survey: &Survey,
    strategies: Vec<Strategy>,
    values: Vec<usize>,
    m: usize,
) -> (ZkEdgeColoring, BuildReport) {
    let s = ZkEdgeColoring::from_reduced(m, values);
    let induced = induced_coloring(g, &s).expect("built on g");
    debug_assert!(first_conflict(g, induced.colors()).is_none());
    let per_component = strategies
        .into_iter()
        .enumerate()
        .map(|(i, strategy)| ComponentReport {
            component: i,
            first_vertex: survey.smallest(i),
            size: survey.vertices(i).len(),
            strategy,
        })
        .collect();
    (
        s,
        BuildReport {
            palette_used: m,
            per_component,
            induced,
        },
    )
}

/// Whether `f` (with palette `k = 2 mod 4`) has a component containing an odd
/// number of vertices of each of the `k` colors; the condition under which
/// [`construct`] needs `k + 1` colors.
pub fn needs_extra_color(g: &Graph, f: &VertexColoring) -> bool {
    if f.k() % 4 != 2 || f.len() != g.n() {
        return false;
    }
    let survey = Survey::new(g);
    let mut counter = ClassCounter::new(f.k());
    (0..survey.components()).any(|i| {
        counter.load(f.colors(), survey.vertices(i));
        counter.all_odd()
    })
}

/// Twin edge coloring of a nice graph from a proper `k`-vertex coloring, with
/// `k` colors, or `k + 1` when `k = 2 (mod 4)` and some component has an odd
/// number of vertices of each color. Linear in `|V| + |E|`.
///
/// The induced coloring matches `f` on non-bipartite components up to a
/// relabeling of classes; bipartite components get their own coloring.
pub fn construct(g: &Graph, f: &VertexColoring) -> Result<(ZkEdgeColoring, BuildReport), TwinError> {
    validate_input(g, f)?;
    let k = f.k();
    let survey = Survey::new(g);
    let comps = survey.components();

    let mut counter = ClassCounter::new(k);
    let mut all_odd = vec![false; comps];
    if k % 4 == 2 {
        for (i, flag) in all_odd.iter_mut().enumerate() {
            counter.load(f.colors(), survey.vertices(i));
            *flag = counter.all_odd();
        }
    }
    let promote = all_odd.iter().any(|&b| b);
    let m = if promote { k + 1 } else { k.max(2) };

    let mut target = vec![0; g.n()];
    let mut plans = Vec::with_capacity(comps);
    let mut strategies = Vec::with_capacity(comps);
    for i in 0..comps {
        let vertices = survey.vertices(i);
        let (plan, strategy) = if vertices.len() == 1 {
            let root = survey.smallest(i);
            (
                Plan {
                    root,
                    kind: PlanKind::Isolated,
                },
                Strategy::Isolated,
            )
        } else if survey.bipartite[i] {
            let (root, strategy) = if m == 2 {
                let root = survey
                    .even_side_root(i)
                    .expect("with 2 colors and no all-odd component, some side is even");
                (root, Strategy::Bip2)
            } else {
                (survey.branching_root(g, i), Strategy::BipT)
            };
            survey.fill_sides(i, root, &mut target);
            (
                Plan {
                    root,
                    kind: PlanKind::Bipartite,
                },
                strategy,
            )
        } else {
            let strategy = if m % 2 == 1 {
                load_targets(vertices, f.colors(), &mut target, |c| c);
                Strategy::OddT
            } else {
                counter.load(f.colors(), vertices);
                let plan = counter.plan();
                assert_ne!(
                    plan,
                    Rebalance::Impossible,
                    "all-odd components force an odd modulus"
                );
                load_targets(vertices, f.colors(), &mut target, |c| plan.relabel(c));
                if plan == Rebalance::AlreadyEven {
                    Strategy::EvenTDirect
                } else {
                    Strategy::EvenTRebalanced
                }
            };
            let root = survey.smallest(i);
            (
                Plan {
                    root,
                    kind: PlanKind::Exact,
                },
                strategy,
            )
        };
        plans.push(plan);
        let strategy = if all_odd[i] && strategy != Strategy::Isolated {
            Strategy::PromoteKPlus1
        } else {
            strategy
        };
        strategies.push(strategy);
    }

    let values = execute(g, &survey.forest, &plans, &target, m);
    Ok(report(g, &survey, strategies, values, m))
}

/// Twin `t`-edge coloring for any `t >= k`, given a proper `k`-vertex
/// coloring `f`.
///
/// For `t = k` this is [`construct`], which may report `k + 1` colors in
/// `palette_used`; that is the only case where the result does not use `t`.
pub fn monotone_extend(
    g: &Graph,
    f: &VertexColoring,
    t: usize,
) -> Result<(ZkEdgeColoring, BuildReport), TwinError> {
    let k = f.k();
    if t < k {
        return Err(TwinError::BelowPalette { requested: t, k });
    }
    if t == k {
        return construct(g, f);
    }
    validate_input(g, f)?;
    let survey = Survey::new(g);
    let comps = survey.components();
    let mut target = vec![0; g.n()];
    let mut plans = Vec::with_capacity(comps);
    let mut strategies = Vec::with_capacity(comps);

    for i in 0..comps {
        let vertices = survey.vertices(i);
        if vertices.len() == 1 {
            plans.push(Plan {
                root: vertices[0],
                kind: PlanKind::Isolated,
            });
            strategies.push(Strategy::Isolated);
            continue;
        }
        if survey.bipartite[i] {
            // t > k >= 2 here.
            let root = survey.branching_root(g, i);
            survey.fill_sides(i, root, &mut target);
            plans.push(Plan {
                root,
                kind: PlanKind::Bipartite,
            });
            strategies.push(Strategy::BipT);
            continue;
        }
        load_targets(vertices, f.colors(), &mut target, |c| c);
        let strategy = if t % 2 == 1 {
            Strategy::OddT
        } else if vertices.iter().map(|&v| f.color(v)).sum::<usize>() % 2 == 0 {
            Strategy::EvenTDirect
        } else {
            // Move one vertex of the largest color used here up by one; no
            // vertex of the component has that color yet, and it is < t.
            let top = vertices.iter().map(|&v| f.color(v)).max().expect("non-empty");
            let &v = vertices
                .iter()
                .find(|&&v| f.color(v) == top)
                .expect("top color is used");
            target[v] = top + 1;
            Strategy::EvenTRebalanced
        };
        plans.push(Plan {
            root: survey.smallest(i),
            kind: PlanKind::Exact,
        });
        strategies.push(strategy);
    }

    let values = execute(g, &survey.forest, &plans, &target, t);
    Ok(report(g, &survey, strategies, values, t))
}
