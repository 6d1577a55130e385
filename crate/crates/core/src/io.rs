//! Text formats.
//!
//! * graphs: DIMACS, `p edge <n> <m>` then `e <u> <v>` (1-indexed);
//! * vertex colorings: `k <K>` then `v <vertex> <color>` (1-indexed vertex,
//!   0-indexed color);
//! * edge colorings: `m <M>` then `s <u> <v> <value>`;
//! * vertex orders: `o <v1> ... <vn>`;
//! * CNF formulas: DIMACS `p cnf <n> <m>`, clauses terminated by `0`;
//! * role sidecars: `r <vertex> <role>`.
//!
//! Lines starting with `c` and blank lines are ignored everywhere.

use std::fmt::{self, Write as _};

use crate::gadgets::CnfFormula;
use crate::graph::{Graph, GraphError, Vertex};
use crate::zk::{VertexColoring, ZkEdgeColoring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-indexed line, 0 when the problem is not tied to one line.
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            f.write_str(&self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError {
        line,
        message: message.into(),
    })
}

/// Non-comment lines as `(line number, tokens)`.
fn records(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        match tokens.first() {
            Some(t) if !t.starts_with('c') => Some((i + 1, tokens)),
            _ => None,
        }
    })
}

fn number<T: std::str::FromStr>(line: usize, token: &str, what: &str) -> Result<T, ParseError> {
    token.parse().map_err(|_| ParseError {
        line,
        message: format!("{what} {token:?} is not a valid number"),
    })
}

/// 1-indexed vertex token to a 0-indexed vertex below `n`.
fn vertex(line: usize, token: &str, n: usize) -> Result<Vertex, ParseError> {
    let v: usize = number(line, token, "vertex")?;
    if v == 0 || v > n {
        return err(line, format!("vertex {v} is outside 1..={n}"));
    }
    Ok(v - 1)
}

fn expect_len(line: usize, tokens: &[&str], len: usize, shape: &str) -> Result<(), ParseError> {
    if tokens.len() != len {
        return err(line, format!("expected `{shape}`"));
    }
    Ok(())
}

pub fn parse_dimacs(text: &str) -> Result<Graph, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    for (line, t) in records(text) {
        match t[0] {
            "p" => {
                expect_len(line, &t, 4, "p edge <n> <m>")?;
                if t[1] != "edge" && t[1] != "col" {
                    return err(line, format!("unknown problem type {:?}", t[1]));
                }
                if header.is_some() {
                    return err(line, "second header");
                }
                header = Some((
                    number(line, t[2], "vertex count")?,
                    number(line, t[3], "edge count")?,
                ));
            }
            "e" => {
                let Some((n, _)) = header else {
                    return err(line, "edge before the `p edge` header");
                };
                expect_len(line, &t, 3, "e <u> <v>")?;
                edges.push((line, vertex(line, t[1], n)?, vertex(line, t[2], n)?));
            }
            other => return err(line, format!("unexpected record {other:?}")),
        }
    }
    let Some((n, m)) = header else {
        return err(0, "missing `p edge <n> <m>` header");
    };
    if edges.len() != m {
        return err(0, format!("header announces {m} edges, found {}", edges.len()));
    }
    Graph::new(n, edges.iter().map(|&(_, u, v)| (u, v))).map_err(|e| {
        let at = |u: Vertex, v: Vertex| {
            edges
                .iter()
                .rev()
                .find(|&&(_, a, b)| (a, b) == (u, v) || (a, b) == (v, u))
                .map(|&(l, _, _)| l)
                .unwrap_or(0)
        };
        match e {
            GraphError::SelfLoop(v) => ParseError {
                line: at(v, v),
                message: format!("self-loop at vertex {}", v + 1),
            },
            GraphError::DuplicateEdge(u, v) => ParseError {
                line: at(u, v),
                message: format!("duplicate edge {}-{}", u + 1, v + 1),
            },
            other => ParseError {
                line: 0,
                message: other.to_string(),
            },
        }
    })
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    out
}

/// Reads a vertex coloring of `n` vertices; every vertex must appear once.
pub fn parse_vertex_coloring(text: &str, n: usize) -> Result<VertexColoring, ParseError> {
    let mut k: Option<usize> = None;
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for (line, t) in records(text) {
        match t[0] {
            "k" => {
                expect_len(line, &t, 2, "k <K>")?;
                if k.is_some() {
                    return err(line, "second `k` header");
                }
                let value: usize = number(line, t[1], "palette size")?;
                if value == 0 {
                    return err(line, "palette size must be positive");
                }
                k = Some(value);
            }
            "v" => {
                let Some(k) = k else {
                    return err(line, "color before the `k <K>` header");
                };
                expect_len(line, &t, 3, "v <vertex> <color>")?;
                let v = vertex(line, t[1], n)?;
                let c: usize = number(line, t[2], "color")?;
                if c >= k {
                    return err(line, format!("color {c} is outside 0..{k}"));
                }
                if colors[v].replace(c).is_some() {
                    return err(line, format!("vertex {} colored twice", v + 1));
                }
            }
            other => return err(line, format!("unexpected record {other:?}")),
        }
    }
    let Some(k) = k else {
        return err(0, "missing `k <K>` header");
    };
    let colors = colors
        .into_iter()
        .enumerate()
        .map(|(v, c)| {
            c.ok_or(ParseError {
                line: 0,
                message: format!("vertex {} has no color", v + 1),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(VertexColoring::new(k, colors).expect("colors checked against k"))
}

pub fn write_vertex_coloring(c: &VertexColoring) -> String {
    let mut out = format!("k {}\n", c.k());
    for (v, &x) in c.colors().iter().enumerate() {
        let _ = writeln!(out, "v {} {x}", v + 1);
    }
    out
}

/// Reads an edge coloring of `g`; every edge must appear once.
pub fn parse_edge_coloring(text: &str, g: &Graph) -> Result<ZkEdgeColoring, ParseError> {
    let mut modulus: Option<usize> = None;
    let mut values: Vec<Option<usize>> = vec![None; g.m()];
    for (line, t) in records(text) {
        match t[0] {
            "m" => {
                expect_len(line, &t, 2, "m <M>")?;
                if modulus.is_some() {
                    return err(line, "second `m` header");
                }
                let value: usize = number(line, t[1], "modulus")?;
                if value < 2 {
                    return err(line, format!("modulus {value} must be at least 2"));
                }
                modulus = Some(value);
            }
            "s" => {
                let Some(m) = modulus else {
                    return err(line, "value before the `m <M>` header");
                };
                expect_len(line, &t, 4, "s <u> <v> <value>")?;
                let u = vertex(line, t[1], g.n())?;
                let v = vertex(line, t[2], g.n())?;
                let x: usize = number(line, t[3], "value")?;
                if x >= m {
                    return err(line, format!("value {x} is outside 0..{m}"));
                }
                let Some(e) = g.edge_id(u, v) else {
                    return err(line, format!("{}-{} is not an edge", u + 1, v + 1));
                };
                if values[e].replace(x).is_some() {
                    return err(line, format!("edge {}-{} colored twice", u + 1, v + 1));
                }
            }
            other => return err(line, format!("unexpected record {other:?}")),
        }
    }
    let Some(m) = modulus else {
        return err(0, "missing `m <M>` header");
    };
    let values = values
        .into_iter()
        .enumerate()
        .map(|(e, x)| {
            let (u, v) = g.edge(e);
            x.ok_or(ParseError {
                line: 0,
                message: format!("edge {}-{} has no value", u + 1, v + 1),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ZkEdgeColoring::new(m, values).expect("values checked against the modulus"))
}

pub fn write_edge_coloring(g: &Graph, s: &ZkEdgeColoring) -> String {
    let mut out = format!("m {}\n", s.modulus());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let _ = writeln!(out, "s {} {} {}", u + 1, v + 1, s.value(e));
    }
    out
}

/// Reads `o v1 ... vn`; the order may span several `o` lines. Checking that
/// it is a permutation is left to the consumer.
pub fn parse_order(text: &str, n: usize) -> Result<Vec<Vertex>, ParseError> {
    let mut order = Vec::with_capacity(n);
    for (line, t) in records(text) {
        if t[0] != "o" {
            return err(line, format!("unexpected record {:?}", t[0]));
        }
        for token in &t[1..] {
            order.push(vertex(line, token, n)?);
        }
    }
    Ok(order)
}

pub fn write_order(order: &[Vertex]) -> String {
    let mut out = String::from("o");
    for &v in order {
        let _ = write!(out, " {}", v + 1);
    }
    out.push('\n');
    out
}

/// Reads a 3-CNF formula; every clause must have exactly three literals.
pub fn parse_cnf(text: &str) -> Result<CnfFormula, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 0;
    for (line, t) in records(text) {
        last_line = line;
        if t[0] == "p" {
            expect_len(line, &t, 4, "p cnf <n> <m>")?;
            if t[1] != "cnf" {
                return err(line, format!("unknown problem type {:?}", t[1]));
            }
            if header.is_some() {
                return err(line, "second header");
            }
            header = Some((
                number(line, t[2], "variable count")?,
                number(line, t[3], "clause count")?,
            ));
            continue;
        }
        let Some((n, _)) = header else {
            return err(line, "clause before the `p cnf` header");
        };
        if t[0] == "%" {
            break;
        }
        for token in t {
            let literal: i32 = number(line, token, "literal")?;
            if literal == 0 {
                let Ok(clause) = <[i32; 3]>::try_from(current.as_slice()) else {
                    return err(line, format!("clause has {} literals, expected 3", current.len()));
                };
                clauses.push(clause);
                current.clear();
            } else {
                if literal.unsigned_abs() as usize > n {
                    return err(line, format!("literal {literal} exceeds {n} variables"));
                }
                current.push(literal);
            }
        }
    }
    let Some((n, m)) = header else {
        return err(0, "missing `p cnf <n> <m>` header");
    };
    if !current.is_empty() {
        return err(last_line, "last clause is not terminated by 0");
    }
    if clauses.len() != m {
        return err(
            0,
            format!("header announces {m} clauses, found {}", clauses.len()),
        );
    }
    CnfFormula::new(n, clauses).map_err(|e| ParseError {
        line: 0,
        message: e.to_string(),
    })
}

pub fn write_cnf(f: &CnfFormula) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars, f.clauses.len());
    for c in &f.clauses {
        let _ = writeln!(out, "{} {} {} 0", c[0], c[1], c[2]);
    }
    out
}

/// Role sidecar lines `r <vertex> <role>`.
pub fn write_roles<R: fmt::Display>(roles: &[R]) -> String {
    let mut out = String::new();
    for (v, role) in roles.iter().enumerate() {
        let _ = writeln!(out, "r {} {role}", v + 1);
    }
    out
}
