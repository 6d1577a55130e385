//! Vertex and edge colorings over `Z_m`, the induced vertex coloring
//! `c_s(v) = sum of s(e) over edges at v (mod m)`, and the twin verifier.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{check_nice, prefetch, prefetch_at, Graph, Vertex, LOOKAHEAD};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("color {color} of vertex {vertex} is not below the palette size {k}")]
    ColorOutOfRange { vertex: Vertex, color: usize, k: usize },
    #[error("edge value {value} is not below the modulus {modulus}")]
    ValueOutOfRange { value: usize, modulus: usize },
    #[error("palette size must be at least 1")]
    EmptyPalette,
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(usize),
    #[error("coloring covers {got} items but the graph has {expected}")]
    DomainMismatch { expected: usize, got: usize },
    #[error("graph is not nice: component {0:?} has exactly two vertices")]
    NotNice(Vec<Vertex>),
}

/// A total map `vertex -> {0..k-1}`. Properness is checked separately.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct VertexColoring {
    k: usize,
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(k: usize, colors: Vec<usize>) -> Result<Self, ColoringError> {
        if k == 0 {
            return Err(ColoringError::EmptyPalette);
        }
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c >= k) {
            return Err(ColoringError::ColorOutOfRange { vertex, color, k });
        }
        Ok(Self { k, colors })
    }

    #[inline]
    pub fn k(&self) -> usize {
        self.k
    }

    #[inline]
    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    #[inline]
    pub fn color(&self, v: Vertex) -> usize {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn into_colors(self) -> Vec<usize> {
        self.colors
    }

    /// Same colors, larger palette.
    pub fn with_palette(&self, k: usize) -> Result<Self, ColoringError> {
        Self::new(k, self.colors.clone())
    }
}

/// An edge coloring `s: E -> Z_m`, indexed by edge id.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ZkEdgeColoring {
    modulus: usize,
    values: Vec<usize>,
}

impl ZkEdgeColoring {
    pub fn new(modulus: usize, values: Vec<usize>) -> Result<Self, ColoringError> {
        if modulus < 2 {
            return Err(ColoringError::ModulusTooSmall(modulus));
        }
        if let Some(&value) = values.iter().find(|&&x| x >= modulus) {
            return Err(ColoringError::ValueOutOfRange { value, modulus });
        }
        Ok(Self { modulus, values })
    }

    pub fn zeros(modulus: usize, m: usize) -> Result<Self, ColoringError> {
        Self::new(modulus, vec![0; m])
    }

    /// Caller guarantees every value is reduced.
    pub(crate) fn from_reduced(modulus: usize, values: Vec<usize>) -> Self {
        debug_assert!(modulus >= 2 && values.iter().all(|&x| x < modulus));
        Self { modulus, values }
    }

    #[inline]
    pub fn modulus(&self) -> usize {
        self.modulus
    }

    #[inline]
    pub fn values(&self) -> &[usize] {
        &self.values
    }

    #[inline]
    pub fn value(&self, e: usize) -> usize {
        self.values[e]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    fn check_domain(&self, g: &Graph) -> Result<(), ColoringError> {
        if self.values.len() != g.m() {
            return Err(ColoringError::DomainMismatch {
                expected: g.m(),
                got: self.values.len(),
            });
        }
        Ok(())
    }
}

/// Arithmetic in `Z_m` on reduced representatives.
pub mod zm {
    #[inline]
    pub fn add(a: usize, b: usize, m: usize) -> usize {
        let s = a + b;
        if s >= m {
            s - m
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(a: usize, b: usize, m: usize) -> usize {
        if a >= b {
            a - b
        } else {
            a + m - b
        }
    }

    #[inline]
    pub fn neg(a: usize, m: usize) -> usize {
        sub(0, a, m)
    }

    /// `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
    pub fn extended_gcd(a: i128, b: i128) -> (i128, i128, i128) {
        if b == 0 {
            (a, 1, 0)
        } else {
            let (g, x, y) = extended_gcd(b, a % b);
            (g, y, x - (a / b) * y)
        }
    }

    /// Inverse of `a` modulo `m`, if it exists.
    pub fn inverse(a: usize, m: usize) -> Option<usize> {
        let (g, x, _) = extended_gcd(a as i128 % m as i128, m as i128);
        (g == 1).then(|| x.rem_euclid(m as i128) as usize)
    }

    /// Smallest `x` in `0..m` with `2x = d (mod m)`, if any.
    pub fn halve(d: usize, m: usize) -> Option<usize> {
        if m % 2 == 1 {
            let inv2 = inverse(2, m)?;
            Some(((d as u128 * inv2 as u128) % m as u128) as usize)
        } else if d % 2 == 0 {
            Some(d / 2)
        } else {
            None
        }
    }
}

/// `c_s` as a vertex coloring with palette `m`; isolated vertices get 0.
pub fn induced_coloring(g: &Graph, s: &ZkEdgeColoring) -> Result<VertexColoring, ColoringError> {
    s.check_domain(g)?;
    Ok(VertexColoring {
        k: s.modulus,
        colors: induced_sums(g, s.values(), s.modulus),
    })
}

pub(crate) fn induced_sums(g: &Graph, values: &[usize], m: usize) -> Vec<usize> {
    let mut sums = vec![0usize; g.n()];
    let edges = g.edges();
    for (e, &(u, v)) in edges.iter().enumerate() {
        if let Some(&(a, b)) = edges.get(e + LOOKAHEAD) {
            prefetch(&sums[a]);
            prefetch(&sums[b]);
        }
        sums[u] = zm::add(sums[u], values[e], m);
        sums[v] = zm::add(sums[v], values[e], m);
    }
    sums
}

/// First monochromatic edge, in edge-id order.
pub fn first_conflict(g: &Graph, colors: &[usize]) -> Option<(Vertex, Vertex)> {
    let edges = g.edges();
    edges.iter().enumerate().find_map(|(e, &(u, v))| {
        if let Some(&(a, b)) = edges.get(e + LOOKAHEAD) {
            prefetch_at(colors, a);
            prefetch_at(colors, b);
        }
        (colors[u] == colors[v]).then_some((u, v))
    })
}

pub fn is_proper(g: &Graph, c: &VertexColoring) -> bool {
    c.len() == g.n() && first_conflict(g, c.colors()).is_none()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum TwinVerdict {
    Valid,
    /// Both endpoints of `(u, v)` receive the induced color `color`.
    Conflict {
        u: Vertex,
        v: Vertex,
        color: usize,
    },
}

impl TwinVerdict {
    pub fn is_valid(&self) -> bool {
        matches!(self, TwinVerdict::Valid)
    }
}

/// Checks that `s` is an improper twin edge coloring of the nice graph `g`.
pub fn verify_twin(g: &Graph, s: &ZkEdgeColoring) -> Result<TwinVerdict, ColoringError> {
    check_nice(g).map_err(ColoringError::NotNice)?;
    let c = induced_coloring(g, s)?;
    Ok(match first_conflict(g, c.colors()) {
        None => TwinVerdict::Valid,
        Some((u, v)) => TwinVerdict::Conflict {
            u,
            v,
            color: c.color(u),
        },
    })
}

/// Class sizes of a coloring, non-decreasing, zero-size classes included.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ColoringType(Vec<usize>);

impl ColoringType {
    pub fn from_sizes(mut sizes: Vec<usize>) -> Self {
        sizes.sort_unstable();
        Self(sizes)
    }

    pub fn sizes(&self) -> &[usize] {
        &self.0
    }

    pub fn all_odd(&self) -> bool {
        self.0.iter().all(|s| s % 2 == 1)
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

pub fn class_sizes(c: &VertexColoring) -> ColoringType {
    let mut sizes = vec![0; c.k()];
    for &x in c.colors() {
        sizes[x] += 1;
    }
    ColoringType::from_sizes(sizes)
}
