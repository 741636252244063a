//! Cycle-shaped graphs with half-edge involution, orientations, and the
//! sink/source combinatorics that drives reflection functors.
//!
//! Every quiver in this crate is an orientation of the cycle graph on
//! `N = n + 1` vertices (the double edge for `N = 2`, a single loop for the
//! degenerate `cyclic(1)` builder). Vertices are `0..N` in cycle order and
//! edge `e` joins `e` and `e + 1 (mod N)`. Each edge carries two half-edges,
//! `2e` (from `e` to `e+1`) and `2e+1` (the reverse); `bar` flips the low bit.

use std::fmt;
use std::ops::{Add, Index, Sub};
use thiserror::Error;

/// Errors from quiver construction and orientation combinatorics.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QuiverError {
    #[error("orientation word has length {found}, expected {expected}")]
    BadLength { expected: usize, found: usize },
    #[error("orientation is an oriented cycle")]
    CyclicOrientation,
    #[error("unknown vertex {0}")]
    UnknownVertex(usize),
    #[error("invalid orientation sign {0:?} (expected '+' or '-')")]
    BadSign(char),
}

/// Orientation of one cycle edge: `Forward` points edge `e` as
/// `e -> e+1 (mod N)`, `Backward` the other way.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Forward,
    Backward,
}

impl Sign {
    pub fn flipped(self) -> Sign {
        match self {
            Sign::Forward => Sign::Backward,
            Sign::Backward => Sign::Forward,
        }
    }

    pub fn from_char(c: char) -> Result<Sign, QuiverError> {
        match c {
            '+' => Ok(Sign::Forward),
            // ASCII hyphen-minus and U+2212 both denote the reversed edge.
            '-' | '\u{2212}' => Ok(Sign::Backward),
            other => Err(QuiverError::BadSign(other)),
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Sign::Forward => '+',
            Sign::Backward => '-',
        }
    }
}

/// A quiver: the cycle graph `(I, H)` together with an orientation subset of
/// its half-edges, stored as one sign per edge.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: usize,
    signs: Vec<Sign>,
}

impl Quiver {
    /// Affine quiver of type A with `n + 1` vertices. Sign `s_e` orients the
    /// edge between `e` and `e + 1 (mod n+1)`: `'+'` as `e -> e+1`, `'-'` as
    /// `e+1 -> e`. Constant words are rejected: they orient the whole cycle.
    pub fn affine_a(n: usize, orientation_word: &str) -> Result<Quiver, QuiverError> {
        assert!(n >= 1, "affine A quivers need at least two vertices");
        let signs: Vec<Sign> = orientation_word
            .chars()
            .map(Sign::from_char)
            .collect::<Result<_, _>>()?;
        if signs.len() != n + 1 {
            return Err(QuiverError::BadLength { expected: n + 1, found: signs.len() });
        }
        let q = Quiver { vertices: n + 1, signs };
        if !q.is_acyclic() {
            return Err(QuiverError::CyclicOrientation);
        }
        Ok(q)
    }

    /// Cyclic quiver on `Z/pZ` with arrows `r -> r-1`. For `p = 1` this is a
    /// single loop, permitted only here as a degenerate builder.
    pub fn cyclic(p: usize) -> Quiver {
        assert!(p >= 1, "cyclic quivers need at least one vertex");
        // Edge e joins e and e+1; the arrow (e+1) -> e realizes r -> r-1 at r = e+1.
        Quiver { vertices: p, signs: vec![Sign::Backward; p] }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices
    }

    pub fn edge_count(&self) -> usize {
        self.signs.len()
    }

    pub fn half_edge_count(&self) -> usize {
        2 * self.signs.len()
    }

    /// Endpoints of edge `e` in cycle order.
    pub fn edge_endpoints(&self, e: usize) -> (usize, usize) {
        (e, (e + 1) % self.vertices)
    }

    pub fn sign(&self, e: usize) -> Sign {
        self.signs[e]
    }

    /// Starting vertex of half-edge `h`.
    pub fn start(&self, h: usize) -> usize {
        let (u, v) = self.edge_endpoints(h / 2);
        if h.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    /// Terminating vertex of half-edge `h`.
    pub fn end(&self, h: usize) -> usize {
        self.start(h ^ 1)
    }

    /// The involution on half-edges.
    pub fn bar(&self, h: usize) -> usize {
        h ^ 1
    }

    /// Whether half-edge `h` belongs to the orientation.
    pub fn is_arrow(&self, h: usize) -> bool {
        let fwd = h.is_multiple_of(2);
        match self.signs[h / 2] {
            Sign::Forward => fwd,
            Sign::Backward => !fwd,
        }
    }

    /// The arrows (oriented half-edges), one per edge, in edge order.
    pub fn arrows(&self) -> Vec<usize> {
        (0..self.edge_count())
            .map(|e| match self.signs[e] {
                Sign::Forward => 2 * e,
                Sign::Backward => 2 * e + 1,
            })
            .collect()
    }

    /// Index of half-edge `h` in `arrows()`, if it is an arrow.
    pub fn arrow_index(&self, h: usize) -> Option<usize> {
        if self.is_arrow(h) {
            Some(h / 2)
        } else {
            None
        }
    }

    pub fn arrows_into(&self, i: usize) -> Vec<usize> {
        self.arrows().into_iter().filter(|&h| self.end(h) == i).collect()
    }

    pub fn arrows_out_of(&self, i: usize) -> Vec<usize> {
        self.arrows().into_iter().filter(|&h| self.start(h) == i).collect()
    }

    pub fn is_sink(&self, i: usize) -> bool {
        self.arrows_out_of(i).is_empty()
    }

    pub fn is_source(&self, i: usize) -> bool {
        self.arrows_into(i).is_empty()
    }

    pub fn has_loop(&self) -> bool {
        self.vertices == 1
    }

    /// An orientation of the cycle is acyclic exactly when it is not constant.
    pub fn is_acyclic(&self) -> bool {
        if self.has_loop() {
            return false;
        }
        self.signs.iter().any(|&s| s != self.signs[0])
    }

    /// The same graph with every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices,
            signs: self.signs.iter().map(|s| s.flipped()).collect(),
        }
    }

    /// Reverse the arrows starting or terminating at `i`, producing the
    /// re-oriented quiver. Applying it twice at the same vertex is the identity.
    pub fn sigma_reverse(&self, i: usize) -> Result<Quiver, QuiverError> {
        if i >= self.vertices {
            return Err(QuiverError::UnknownVertex(i));
        }
        let signs = (0..self.edge_count())
            .map(|e| {
                let (u, v) = self.edge_endpoints(e);
                if u == i || v == i {
                    self.signs[e].flipped()
                } else {
                    self.signs[e]
                }
            })
            .collect();
        Ok(Quiver { vertices: self.vertices, signs })
    }

    /// Order all vertices `(i_1, ..., i_N)` so that `i_r` is a sink of
    /// `sigma_{i_{r-1}} ... sigma_{i_1} Q`. Ties among sinks are broken by the
    /// smallest vertex id, and composing all reversals restores the original
    /// orientation.
    pub fn admissible_sink_sequence(&self) -> Result<Vec<usize>, QuiverError> {
        let mut current = self.clone();
        let mut remaining: Vec<bool> = vec![true; self.vertices];
        let mut order = Vec::with_capacity(self.vertices);
        for _ in 0..self.vertices {
            let sink = (0..self.vertices)
                .find(|&i| remaining[i] && current.is_sink(i))
                .ok_or(QuiverError::CyclicOrientation)?;
            order.push(sink);
            remaining[sink] = false;
            current = current.sigma_reverse(sink)?;
        }
        debug_assert_eq!(&current, self);
        Ok(order)
    }

    /// Orientation word, one sign per edge in cycle order.
    pub fn orientation_word(&self) -> String {
        self.signs.iter().map(|s| s.to_char()).collect()
    }

    /// All-ones dimension vector.
    pub fn delta(&self) -> DimVector {
        DimVector::delta(self.vertices)
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arrows: Vec<String> = self
            .arrows()
            .iter()
            .map(|&h| format!("{}->{}", self.start(h), self.end(h)))
            .collect();
        write!(f, "quiver[{}; {}]", self.vertices, arrows.join(", "))
    }
}

/// Per-vertex integer multiplicities. Representation dimensions are
/// non-negative; reflection arithmetic passes through signed values.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVector(Vec<i64>);

impl DimVector {
    pub fn new(entries: Vec<i64>) -> DimVector {
        DimVector(entries)
    }

    pub fn zeros(len: usize) -> DimVector {
        DimVector(vec![0; len])
    }

    /// Coordinate vector of a single vertex.
    pub fn unit(len: usize, i: usize) -> DimVector {
        let mut v = vec![0; len];
        v[i] = 1;
        DimVector(v)
    }

    /// The all-ones vector, the minimal positive imaginary root.
    pub fn delta(len: usize) -> DimVector {
        DimVector(vec![1; len])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&x| x >= 0)
    }

    /// Componentwise comparison.
    pub fn leq(&self, other: &DimVector) -> bool {
        self.len() == other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scaled(&self, k: i64) -> DimVector {
        DimVector(self.0.iter().map(|x| x * k).collect())
    }

    /// `Some(r)` when the vector is `r * delta` with `r >= 1`.
    pub fn multiple_of_delta(&self) -> Option<i64> {
        let r = self.0.first().copied()?;
        if r >= 1 && self.0.iter().all(|&x| x == r) {
            Some(r)
        } else {
            None
        }
    }

    /// Vertices with a nonzero entry.
    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] != 0).collect()
    }

    pub fn set(&mut self, i: usize, value: i64) {
        self.0[i] = value;
    }

    pub fn parse(text: &str) -> Option<DimVector> {
        let entries: Option<Vec<i64>> =
            text.split(',').map(|t| t.trim().parse::<i64>().ok()).collect();
        entries.map(DimVector)
    }
}

impl Index<usize> for DimVector {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &DimVector {
    type Output = DimVector;
    fn add(self, other: &DimVector) -> DimVector {
        assert_eq!(self.len(), other.len());
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DimVector {
    type Output = DimVector;
    fn sub(self, other: &DimVector) -> DimVector {
        assert_eq!(self.len(), other.len());
        DimVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Display for DimVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}
