//! Instance generators behind the hardness results: the clause gadget, the
//! 3-SAT reduction to (the complement of) the all-odd problem, the
//! bounded-degree gadget `H(p, l)` and the degree reduction built from it.

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, Vertex};
use crate::zk::VertexColoring;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("literal {literal} in clause {clause} is outside 1..={num_vars}")]
    LiteralOutOfRange {
        clause: usize,
        literal: i32,
        num_vars: usize,
    },
}

/// Colors used by the reduction's witness colorings.
pub const TRUE: usize = 0;
pub const FALSE: usize = 1;
pub const RED: usize = 2;

// ---------------------------------------------------------------------------
// Clause gadget
// ---------------------------------------------------------------------------

/// Edges of the clause gadget over local vertices `a1..a5 = 0..5`, literal
/// vertices `x = 5`, `y = 6`, `z = 7` and the clause-class vertex `X = 8`.
pub const GADGET_EDGES: [(usize, usize); 10] = [
    (5, 0),
    (6, 1),
    (0, 1),
    (0, 2),
    (1, 2),
    (2, 3),
    (3, 4),
    (3, 8),
    (4, 8),
    (7, 4),
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClauseGadget {
    /// `a1..a5`.
    pub a: [Vertex; 5],
    pub edges: Vec<(Vertex, Vertex)>,
}

/// The gadget for clause `(x, y, z)` attached to `x_ext`, with internal
/// vertices numbered from `first`. Literal vertices may coincide.
pub fn clause_gadget(x: Vertex, y: Vertex, z: Vertex, x_ext: Vertex, first: Vertex) -> ClauseGadget {
    let a = [first, first + 1, first + 2, first + 3, first + 4];
    let external = [x, y, z, x_ext];
    let map = |v: usize| if v < 5 { a[v] } else { external[v - 5] };
    let edges = GADGET_EDGES.iter().map(|&(u, v)| (map(u), map(v))).collect();
    ClauseGadget { a, edges }
}

/// All proper 3-colorings of `a1..a5` extending the given colors of `x, y,
/// z` and `X`, in lexicographic order.
pub fn gadget_extensions(literals: [usize; 3], x_ext: usize) -> Vec<[usize; 5]> {
    let fixed = [literals[0], literals[1], literals[2], x_ext];
    let color = |a: &[usize; 5], v: usize| if v < 5 { a[v] } else { fixed[v - 5] };
    let mut out = Vec::new();
    for code in 0..243usize {
        let mut a = [0; 5];
        let mut rest = code;
        for slot in a.iter_mut().rev() {
            *slot = rest % 3;
            rest /= 3;
        }
        if GADGET_EDGES.iter().all(|&(u, v)| color(&a, u) != color(&a, v)) {
            out.push(a);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// 3-SAT reduction
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    pub num_vars: usize,
    /// Signed, 1-indexed literals.
    pub clauses: Vec<[i32; 3]>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<[i32; 3]>) -> Result<Self, GadgetError> {
        for (i, clause) in clauses.iter().enumerate() {
            for &literal in clause {
                if literal == 0 || literal.unsigned_abs() as usize > num_vars {
                    return Err(GadgetError::LiteralOutOfRange {
                        clause: i + 1,
                        literal,
                        num_vars,
                    });
                }
            }
        }
        Ok(Self { num_vars, clauses })
    }

    pub fn satisfied_by(&self, assignment: &[bool]) -> bool {
        self.clauses.iter().all(|c| {
            c.iter()
                .any(|&l| assignment[l.unsigned_abs() as usize - 1] == (l > 0))
        })
    }

    /// A satisfying assignment by trying all `2^n`.
    pub fn brute_force_solve(&self) -> Option<Vec<bool>> {
        assert!(self.num_vars < 32, "exhaustive solving is for tiny formulas");
        (0u32..1 << self.num_vars)
            .map(|bits| (0..self.num_vars).map(|i| bits >> i & 1 == 1).collect::<Vec<_>>())
            .find(|a| self.satisfied_by(a))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Variable `var` (1-indexed), positive or negated.
    Literal {
        var: usize,
        positive: bool,
    },
    XTrue,
    XFalse,
    R,
    /// Vertex `a_index` (1..=5) of the gadget of clause `clause` (1-indexed,
    /// after preprocessing).
    Gadget {
        clause: usize,
        a_index: usize,
    },
    /// Vertex `index` (1-indexed) of the padding clique.
    Padding {
        index: usize,
    },
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Role::Literal { var, positive } => {
                write!(f, "literal({var},{})", if *positive { '+' } else { '-' })
            }
            Role::XTrue => f.write_str("X_T"),
            Role::XFalse => f.write_str("X_F"),
            Role::R => f.write_str("R"),
            Role::Gadget { clause, a_index } => write!(f, "gadget({clause},a{a_index})"),
            Role::Padding { index } => write!(f, "padding({index})"),
        }
    }
}

/// What was done to the formula before building the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Preprocessing {
    pub source: CnfFormula,
    pub added_variable: bool,
    /// Clauses true under the all-true assignment (`m_T`) and false (`m_F`),
    /// counted before doubling.
    pub true_clauses: usize,
    pub false_clauses: usize,
    pub doubled: bool,
}

#[derive(Debug, Clone)]
pub struct ReductionInstance {
    pub graph: Graph,
    pub k: usize,
    /// A `k`-clique: `R`, the two literals of variable 1 and the padding.
    pub clique: Vec<Vertex>,
    pub witness_coloring: VertexColoring,
    pub roles: Vec<Role>,
    /// The formula the graph encodes (after preprocessing).
    pub formula: CnfFormula,
    pub preprocessing: Preprocessing,
}

impl ReductionInstance {
    pub const R: Vertex = 0;
    pub const X_TRUE: Vertex = 1;
    pub const X_FALSE: Vertex = 2;

    pub fn literal_vertex(&self, literal: i32) -> Vertex {
        literal_vertex(literal)
    }

    fn clause_class_vertex(&self, clause: &[i32; 3]) -> Vertex {
        if clause.iter().any(|&l| l > 0) {
            Self::X_TRUE
        } else {
            Self::X_FALSE
        }
    }

    fn first_gadget_vertex(&self) -> Vertex {
        3 + 2 * self.formula.num_vars
    }

    /// Coloring from a truth assignment of the preprocessed formula: `R`
    /// gets `RED`, both `X_T` and `X_F` get `TRUE`, literals follow the
    /// assignment and each gadget takes its first extension. `None` if some
    /// gadget cannot be extended, which happens exactly for clauses the
    /// assignment falsifies.
    pub fn satisfying_coloring(&self, assignment: &[bool]) -> Option<VertexColoring> {
        let mut colors = vec![TRUE; self.graph.n()];
        colors[Self::R] = RED;
        colors[Self::X_TRUE] = TRUE;
        colors[Self::X_FALSE] = TRUE;
        self.fill(&mut colors, assignment, TRUE, TRUE)?;
        Some(VertexColoring::new(self.k, colors).expect("colors are below k"))
    }

    /// Colors literal vertices from `assignment`, extends every gadget and
    /// colors the padding.
    fn fill(&self, colors: &mut [usize], assignment: &[bool], x_true: usize, x_false: usize) -> Option<()> {
        for var in 1..=self.formula.num_vars {
            let value = assignment[var - 1];
            colors[literal_vertex(var as i32)] = if value { TRUE } else { FALSE };
            colors[literal_vertex(-(var as i32))] = if value { FALSE } else { TRUE };
        }
        let base = self.first_gadget_vertex();
        for (j, clause) in self.formula.clauses.iter().enumerate() {
            let lits = clause.map(|l| colors[literal_vertex(l)]);
            let x = if self.clause_class_vertex(clause) == Self::X_TRUE {
                x_true
            } else {
                x_false
            };
            let ext = *gadget_extensions(lits, x).first()?;
            colors[base + 5 * j..base + 5 * j + 5].copy_from_slice(&ext);
        }
        let padding = base + 5 * self.formula.clauses.len();
        for (i, c) in colors[padding..].iter_mut().enumerate() {
            *c = 3 + i;
        }
        Some(())
    }
}

fn literal_vertex(literal: i32) -> Vertex {
    let var = literal.unsigned_abs() as usize;
    3 + 2 * (var - 1) + usize::from(literal < 0)
}

/// Builds the graph of the reduction from 3-SAT: `I` is satisfiable iff the
/// graph has a `k`-coloring with an even class.
///
/// Vertex numbering: `R = 0`, `X_T = 1`, `X_F = 2`, then `x_i, not x_i` for
/// each variable, then `a1..a5` for each clause, then the `k - 3` padding
/// vertices, which are adjacent to everything.
pub fn sat_to_allodd_instance(f: &CnfFormula, k: usize) -> Result<ReductionInstance, GadgetError> {
    if k < 3 {
        return Err(GadgetError::InvalidParameter(format!(
            "k = {k} must be at least 3"
        )));
    }
    if f.num_vars == 0 {
        return Err(GadgetError::InvalidParameter(
            "the formula needs a variable".into(),
        ));
    }
    let f = CnfFormula::new(f.num_vars, f.clauses.clone())?;
    let added_variable = f.num_vars % 2 == 1;
    let num_vars = f.num_vars + usize::from(added_variable);
    let true_clauses = f.clauses.iter().filter(|c| c.iter().any(|&l| l > 0)).count();
    let false_clauses = f.clauses.len() - true_clauses;
    let doubled = true_clauses % 2 == 1 || false_clauses % 2 == 1;
    let clauses: Vec<[i32; 3]> = if doubled {
        f.clauses.iter().flat_map(|&c| [c, c]).collect()
    } else {
        f.clauses.clone()
    };
    let formula = CnfFormula { num_vars, clauses };

    let gadgets_at = 3 + 2 * num_vars;
    let padding_at = gadgets_at + 5 * formula.clauses.len();
    let n = padding_at + (k - 3);
    let mut roles = vec![Role::R; n];
    roles[ReductionInstance::X_TRUE] = Role::XTrue;
    roles[ReductionInstance::X_FALSE] = Role::XFalse;
    let mut edges = Vec::new();
    for var in 1..=num_vars {
        let (pos, neg) = (literal_vertex(var as i32), literal_vertex(-(var as i32)));
        roles[pos] = Role::Literal { var, positive: true };
        roles[neg] = Role::Literal { var, positive: false };
        edges.extend([
            (pos, neg),
            (ReductionInstance::R, pos),
            (ReductionInstance::R, neg),
        ]);
    }
    edges.push((ReductionInstance::R, ReductionInstance::X_TRUE));
    edges.push((ReductionInstance::R, ReductionInstance::X_FALSE));
    for (j, clause) in formula.clauses.iter().enumerate() {
        let x_ext = if clause.iter().any(|&l| l > 0) {
            ReductionInstance::X_TRUE
        } else {
            ReductionInstance::X_FALSE
        };
        let [x, y, z] = clause.map(literal_vertex);
        let gadget = clause_gadget(x, y, z, x_ext, gadgets_at + 5 * j);
        for (i, &a) in gadget.a.iter().enumerate() {
            roles[a] = Role::Gadget {
                clause: j + 1,
                a_index: i + 1,
            };
        }
        edges.extend(gadget.edges);
    }
    for p in padding_at..n {
        roles[p] = Role::Padding {
            index: p - padding_at + 1,
        };
        edges.extend((0..p).map(|v| (v, p)));
    }
    let graph = Graph::new(n, edges).expect("reduction graph is simple");

    let mut clique = vec![ReductionInstance::R, literal_vertex(1), literal_vertex(-1)];
    clique.extend(padding_at..n);

    let mut instance = ReductionInstance {
        graph,
        k,
        clique,
        witness_coloring: VertexColoring::new(k, vec![0; n]).expect("k is positive"),
        roles,
        formula,
        preprocessing: Preprocessing {
            source: f,
            added_variable,
            true_clauses,
            false_clauses,
            doubled,
        },
    };
    // All variables true; X_T gets T and X_F gets F.
    let mut colors = vec![TRUE; n];
    colors[ReductionInstance::R] = RED;
    colors[ReductionInstance::X_FALSE] = FALSE;
    instance
        .fill(&mut colors, &vec![true; num_vars], TRUE, FALSE)
        .expect("every gadget extends under the all-true assignment");
    instance.witness_coloring = VertexColoring::new(k, colors).expect("colors are below k");
    Ok(instance)
}

// ---------------------------------------------------------------------------
// Bounded-degree gadget
// ---------------------------------------------------------------------------

#[derive(Debug, Clone)]
pub struct HGadget {
    pub graph: Graph,
    pub p: usize,
    pub ell: usize,
    pub k: usize,
    /// `K_1..K_p`, each a `(k-1)`-clique.
    pub cliques: Vec<Vec<Vertex>>,
    /// The independent set, in order `x_11, ..., x_1l, x_21, ...`.
    pub s: Vec<Vertex>,
}

impl HGadget {
    /// Vertex `x_ij` (1-indexed), if present.
    pub fn x(&self, i: usize, j: usize) -> Option<Vertex> {
        if i == 0 || j == 0 || i >= self.p || j > self.ell {
            return None;
        }
        self.s.get((i - 1) * self.ell + (j - 1)).copied()
    }
}

/// Builds `H(p, l)` for palette `k`: `p` disjoint `(k-1)`-cliques and an odd
/// independent set `S = {x_ij : 1 <= i < p, 1 <= j <= l}` (minus `x_{p-1,l}`
/// when `l(p-1)` is even). Every vertex of `K_i` sees `x_i1..x_il`, and part
/// `j` of `K_{i+1}` (split into `l` consecutive parts of size at most
/// `ceil((k-1)/l)`) sees `x_ij`.
///
/// When `x_{p-1,l}` is dropped, the last part of `K_p` would see nothing in
/// `S`, and its vertices could take the color of `S`; they are attached
/// round-robin to `x_{p-1,1}, ..., x_{p-1,l-1}` instead. Every vertex then
/// still sees `S` and the degree bound is unchanged.
pub fn build_h(p: usize, ell: usize, k: usize) -> Result<HGadget, GadgetError> {
    if p < 2 || p % 2 == 1 {
        return Err(GadgetError::InvalidParameter(format!(
            "p = {p} must be even and at least 2"
        )));
    }
    if ell == 0 {
        return Err(GadgetError::InvalidParameter("l must be positive".into()));
    }
    if k < 3 {
        return Err(GadgetError::InvalidParameter(format!(
            "k = {k} must be at least 3"
        )));
    }
    let q = k - 1;
    let cliques: Vec<Vec<Vertex>> = (0..p).map(|i| (i * q..(i + 1) * q).collect()).collect();
    let full = ell * (p - 1);
    let s_len = if full % 2 == 1 { full } else { full - 1 };
    let s: Vec<Vertex> = (p * q..p * q + s_len).collect();
    let x = |i: usize, j: usize| -> Option<Vertex> {
        let idx = (i - 1) * ell + (j - 1);
        (idx < s_len).then(|| s[idx])
    };
    let chunk = q.div_ceil(ell);
    let part = |clique: &[Vertex], j: usize| -> Vec<Vertex> {
        let lo = ((j - 1) * chunk).min(q);
        let hi = (j * chunk).min(q);
        clique[lo..hi].to_vec()
    };

    let mut edges = Vec::new();
    for c in &cliques {
        for (a, &u) in c.iter().enumerate() {
            edges.extend(c[a + 1..].iter().map(|&v| (u, v)));
        }
    }
    for i in 1..p {
        for j in 1..=ell {
            let Some(xij) = x(i, j) else { continue };
            edges.extend(cliques[i - 1].iter().map(|&u| (u, xij)));
            edges.extend(part(&cliques[i], j).into_iter().map(|u| (u, xij)));
        }
    }
    if s_len < full {
        let orphans = part(&cliques[p - 1], ell);
        for (t, u) in orphans.into_iter().enumerate() {
            let target = x(p - 1, 1 + t % (ell - 1)).expect("l >= 2 when l(p-1) is even");
            edges.push((u, target));
        }
    }
    let graph = Graph::new(p * q + s_len, edges).expect("H is simple");
    Ok(HGadget {
        graph,
        p,
        ell,
        k,
        cliques,
        s,
    })
}

/// `g(k) = k + ceil(sqrt(k - 2))`.
pub fn degree_bound(k: usize) -> usize {
    k + ceil_sqrt(k - 2)
}

fn ceil_sqrt(x: usize) -> usize {
    let mut r = (x as f64).sqrt() as usize;
    while r * r < x {
        r += 1;
    }
    while r > 0 && (r - 1) * (r - 1) >= x {
        r -= 1;
    }
    r
}

/// Gadget parameters `(p, l)` for replacing a vertex of degree `delta`.
pub fn replacement_parameters(delta: usize, k: usize) -> (usize, usize) {
    let ell = 1 + ceil_sqrt(k - 2);
    let p = 2 * delta.div_ceil(2 * ell) + 2;
    (p, ell)
}

/// Deletes `x` and attaches a fresh `H(p, l)`, matching the `t`-th neighbor
/// of `x` (ascending, 1-indexed) to `x_{ceil(t/l), t - l(ceil(t/l) - 1)}`.
/// Remaining vertices keep their relative order; the gadget is appended.
pub fn replace_vertex(g: &Graph, x: Vertex, k: usize) -> Result<Graph, GadgetError> {
    if k < 3 {
        return Err(GadgetError::InvalidParameter(format!(
            "k = {k} must be at least 3"
        )));
    }
    if x >= g.n() {
        return Err(GadgetError::InvalidParameter(format!(
            "vertex {x} is out of range"
        )));
    }
    let neighbors: Vec<Vertex> = g.neighbors(x).collect();
    let (p, ell) = replacement_parameters(neighbors.len(), k);
    let h = build_h(p, ell, k)?;
    let shift = |v: Vertex| if v > x { v - 1 } else { v };
    let base = g.n() - 1;
    let mut edges: Vec<(Vertex, Vertex)> = g
        .edges()
        .iter()
        .filter(|&&(u, v)| u != x && v != x)
        .map(|&(u, v)| (shift(u), shift(v)))
        .collect();
    edges.extend(h.graph.edges().iter().map(|&(u, v)| (base + u, base + v)));
    for (t, &y) in neighbors.iter().enumerate() {
        let t = t + 1;
        let i = t.div_ceil(ell);
        let j = t - ell * (i - 1);
        let xij = h.x(i, j).expect("p is large enough for the matching");
        edges.push((shift(y), base + xij));
    }
    Ok(Graph::new(base + h.graph.n(), edges).expect("replacement stays simple"))
}

/// Replaces vertices of degree above `g(k)` (largest degree first, smallest
/// index among ties) until the maximum degree is at most `g(k)`.
pub fn reduce_degree(g: &Graph, k: usize) -> Result<Graph, GadgetError> {
    if k < 3 {
        return Err(GadgetError::InvalidParameter(format!(
            "k = {k} must be at least 3"
        )));
    }
    let bound = degree_bound(k);
    let mut current = g.clone();
    while current.n() > 0 && current.max_degree() > bound {
        let delta = current.max_degree();
        let x = (0..current.n())
            .find(|&v| current.degree(v) == delta)
            .expect("some vertex has maximum degree");
        current = replace_vertex(&current, x, k)?;
    }
    Ok(current)
}
