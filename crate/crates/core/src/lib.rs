//! Improper twin edge colorings of graphs.
//!
//! An edge coloring `s: E -> Z_m` induces the vertex coloring
//! `c_s(v) = sum of s(e) over edges at v (mod m)`; it is a *twin* edge
//! coloring when `c_s` is proper. The twin chromatic index `chi'_it(G)` is
//! the least `m` for which one exists, defined for graphs without a `K_2`
//! component. It is `chi(G)` or `chi(G) + 1`, the latter exactly when
//! `chi(G) = 2 (mod 4)` and every optimal vertex coloring of some component
//! has only odd classes.
//!
//! * [`graph`]: the graph type, traversals, odd closed walks;
//! * [`zk`]: vertex and `Z_m` edge colorings, induced sums, verification;
//! * [`twin`]: linear-time construction of twin edge colorings;
//! * [`oracle`]: exhaustive ground truth for small graphs;
//! * [`deciders`]: polynomial deciders for the all-odd predicate;
//! * [`gadgets`]: hardness constructions as instance generators;
//! * [`io`]: text formats.

pub mod deciders;
pub mod gadgets;
pub mod graph;
pub mod io;
pub mod oracle;
pub mod twin;
pub mod zk;

pub use graph::{Graph, GraphError, Vertex};
pub use twin::{construct, monotone_extend, BuildReport, Strategy, TwinError};
pub use zk::{induced_coloring, verify_twin, TwinVerdict, VertexColoring, ZkEdgeColoring};
