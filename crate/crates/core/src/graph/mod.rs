//! Finite simple undirected graphs on vertices `0..n`.
//!
//! Adjacency is stored as one bitset row per vertex, so membership is a
//! single word probe and whole-row intersections (triangle detection,
//! extension checks, common-neighbour counts) run a word at a time.
//!
//! Every construction in this module fixes its vertex numbering:
//!
//! * [`Graph::disjoint_union`] keeps the left operand at `0..n_a` and shifts
//!   the right operand by `n_a`;
//! * [`Graph::join`] uses the same numbering as the union;
//! * [`Graph::lex_product`] numbers the pair `(u, v)` as `u * n_b + v`;
//! * [`Graph::power`] applies `X -> complement(X + X)` repeatedly, so the
//!   vertex `(c, x)` of the doubled graph is `c * n_x + x`.
//!
//! With these conventions the algebraic identities relating powers and
//! lexicographic products hold as equalities of labeled graphs, not merely
//! up to isomorphism.

mod constructors;
mod distance;
mod graph6;
mod properties;

pub use constructors::seeded_rng;
pub use distance::{
    distance_matrix, is_distance_regular, similar, DistanceProfile, NotDistanceRegular, UNREACHABLE,
};
pub use graph6::{decode_graph6, encode_graph6, Graph6Error};
pub use properties::{
    automorphism_exists, chromatic_number, is_strongly_regular, twins, vertex_connectivity,
    vertex_connectivity_at_least, Srg, SrgParams, TwinKind, TwinPair, AUTOMORPHISM_MAX_VERTICES,
    CHROMATIC_MAX_VERTICES,
};

use std::fmt;

use thiserror::Error;

/// Errors raised by graph constructors and guarded graph algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{operation} refused: {n} vertices exceeds the limit of {limit}")]
    TooLarge {
        operation: &'static str,
        n: usize,
        limit: usize,
    },
}

/// A finite simple undirected graph with vertex set `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    words: usize,
    rows: Vec<u64>,
}

#[inline]
pub(crate) fn words_for(n: usize) -> usize {
    n.div_ceil(64)
}

/// Iterator over the set bits of a bitset row.
pub struct Ones<'a> {
    row: &'a [u64],
    word: usize,
    cur: u64,
}

impl<'a> Ones<'a> {
    pub(crate) fn new(row: &'a [u64]) -> Self {
        let cur = row.first().copied().unwrap_or(0);
        Ones { row, word: 0, cur }
    }
}

impl Iterator for Ones<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.cur != 0 {
                let bit = self.cur.trailing_zeros() as usize;
                self.cur &= self.cur - 1;
                return Some(self.word * 64 + bit);
            }
            self.word += 1;
            if self.word >= self.row.len() {
                return None;
            }
            self.cur = self.row[self.word];
        }
    }
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = words_for(n);
        Graph {
            n,
            words,
            rows: vec![0; n * words],
        }
    }

    /// Builds a graph from an edge list. Loops are rejected, repeated edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::InvalidParameter(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if u == v {
                return Err(GraphError::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a predicate evaluated on every pair `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Graph::empty(n);
        for v in 1..n {
            for u in 0..v {
                if adjacent(u, v) {
                    g.add_edge(u, v);
                }
            }
        }
        g
    }

    /// Decodes the labeled graph whose `u < v` pairs, enumerated as
    /// `(0,1), (0,2), (1,2), (0,3), ...`, are switched on by the bits of `mask`.
    ///
    /// This is the numbering used by the exhaustive corpora: every labeled
    /// graph on `n <= 11` vertices is `from_mask(n, m)` for exactly one `m`.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        let mut g = Graph::empty(n);
        let mut bit = 0;
        for v in 1..n {
            for u in 0..v {
                if mask >> bit & 1 == 1 {
                    g.add_edge(u, v);
                }
                bit += 1;
            }
        }
        g
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Number of 64-bit words per adjacency row.
    #[inline]
    pub fn words(&self) -> usize {
        self.words
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    /// The neighbourhood of `v` as a bitset row.
    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.rows[v * self.words..(v + 1) * self.words]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u != v, "loop at vertex {u}");
        let w = self.words;
        self.rows[u * w + v / 64] |= 1 << (v % 64);
        self.rows[v * w + u / 64] |= 1 << (u % 64);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        let w = self.words;
        self.rows[u * w + v / 64] &= !(1 << (v % 64));
        self.rows[v * w + u / 64] &= !(1 << (u % 64));
    }

    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        Ones::new(self.row(v))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|w| w.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges as pairs `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            out.extend(self.neighbors(u).filter(|&v| v > u).map(|v| (u, v)));
        }
        out
    }

    /// `|N(u) ∩ N(v)|`.
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Checks symmetry, irreflexivity and that no bits are set past `n`.
    pub fn check_invariants(&self) -> bool {
        for u in 0..self.n {
            if self.adjacent(u, u) {
                return false;
            }
            if let Some(last) = self.row(u).last() {
                let used = self.n % 64;
                if used != 0 && last >> used != 0 {
                    return false;
                }
            }
            for v in self.neighbors(u) {
                if !self.adjacent(v, u) {
                    return false;
                }
            }
        }
        true
    }

    /// The subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |i, j| {
            self.adjacent(vertices[i], vertices[j])
        })
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        let w = self.words;
        for u in 0..self.n {
            for k in 0..w {
                let mut full = !0u64;
                if k == w - 1 && self.n % 64 != 0 {
                    full = (1u64 << (self.n % 64)) - 1;
                }
                g.rows[u * w + k] = !self.rows[u * w + k] & full;
            }
            g.rows[u * w + u / 64] &= !(1 << (u % 64));
        }
        g
    }

    /// `self + other`: `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off);
        }
        g
    }

    /// `s` disjoint copies; copy `c` occupies `c * n .. (c + 1) * n`.
    pub fn copies(&self, s: usize) -> Graph {
        let n = self.n;
        let mut g = Graph::empty(n * s);
        let edges = self.edges();
        for c in 0..s {
            for &(u, v) in &edges {
                g.add_edge(c * n + u, c * n + v);
            }
        }
        g
    }

    /// `self * other`: the disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &Graph) -> Graph {
        let mut g = self.disjoint_union(other);
        for u in 0..self.n {
            for v in 0..other.n {
                g.add_edge(u, self.n + v);
            }
        }
        g
    }

    /// Lexicographic product `self · other` with `(u, v)` numbered `u * n_b + v`.
    pub fn lex_product(&self, other: &Graph) -> Graph {
        let nb = other.n;
        Graph::from_fn(self.n * nb, |p, q| {
            let (u, v) = (p / nb, p % nb);
            let (x, y) = (q / nb, q % nb);
            self.adjacent(u, x) || (u == x && other.adjacent(v, y))
        })
    }

    /// `X^1 = X`, `X^{i+1} = complement(X^i + X^i)`.
    pub fn power(&self, i: usize) -> Result<Graph, GraphError> {
        if i == 0 {
            return Err(GraphError::InvalidParameter(
                "graph power exponent must be at least 1".into(),
            ));
        }
        let mut g = self.clone();
        for _ in 1..i {
            g = g.copies(2).complement();
        }
        Ok(g)
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let all: Vec<usize> = (0..self.n).collect();
        self.components_within(&all, false)
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Components of the subgraph induced on `block`, in `self` or (with
    /// `in_complement`) in the complement, without materialising either.
    pub(crate) fn components_within(&self, block: &[usize], in_complement: bool) -> Vec<Vec<usize>> {
        let w = self.words;
        let mut remaining = vec![0u64; w];
        for &v in block {
            remaining[v / 64] |= 1 << (v % 64);
        }
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for &start in block {
            if remaining[start / 64] >> (start % 64) & 1 == 0 {
                continue;
            }
            remaining[start / 64] &= !(1 << (start % 64));
            let mut comp = vec![start];
            stack.push(start);
            while let Some(u) = stack.pop() {
                let row = self.row(u);
                for k in 0..w {
                    let reach = if in_complement { !row[k] } else { row[k] };
                    let mut hit = reach & remaining[k];
                    remaining[k] &= !hit;
                    while hit != 0 {
                        let v = k * 64 + hit.trailing_zeros() as usize;
                        hit &= hit - 1;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out.sort_by_key(|c| c[0]);
        out
    }

    /// Brute-force isomorphism test for small graphs.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.n != other.n || self.edge_count() != other.edge_count() {
            return false;
        }
        let mut a = self.degrees();
        let mut b = other.degrees();
        a.sort_unstable();
        b.sort_unstable();
        a == b && crate::patterns::contains_induced(other, self).is_some()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&encode_graph6(self))
    }
}

/// Serialized as its graph6 string.
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&encode_graph6(self))
    }
}
