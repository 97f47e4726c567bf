//! Simple undirected graphs with 0-based vertex labels.

use thiserror::Error;

/// Largest vertex count accepted by constructors and parsers.
///
/// Dense adjacency storage is quadratic; this cap keeps a malformed
/// multi-byte graph6 header from requesting gigabytes.
pub const MAX_VERTICES: usize = 8192;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex index {index} out of range for {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },
    #[error("self-loop at vertex {vertex} is not allowed")]
    SelfLoop { vertex: usize },
    #[error("graph order {n} exceeds the supported maximum {MAX_VERTICES}")]
    TooLarge { n: usize },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("relabeling is not a permutation of the vertex set")]
    NotAPermutation,
}

/// A simple undirected graph: loop-free symmetric adjacency on `n` vertices.
///
/// The adjacency relation is stored as one bitset row per vertex, so
/// neighborhood intersections (used heavily by the strong-regularity check)
/// are word-parallel.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    stride: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// An edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge { n });
        }
        let stride = n.div_ceil(64);
        Ok(Graph {
            n,
            stride,
            bits: vec![0; n * stride],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; both
    /// orientations of a pair are accepted.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange {
                index: u,
                n: self.n,
            });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange {
                index: v,
                n: self.n,
            });
        }
        if u == v {
            return Err(GraphError::SelfLoop { vertex: u });
        }
        self.bits[u * self.stride + v / 64] |= 1 << (v % 64);
        self.bits[v * self.stride + u / 64] |= 1 << (u % 64);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n && v < self.n);
        self.bits[u * self.stride + v / 64] >> (v % 64) & 1 == 1
    }

    /// Adjacency indicator as an integer, convenient in closed-form entry rules.
    #[inline]
    pub fn adj(&self, u: usize, v: usize) -> i64 {
        self.has_edge(u, v) as i64
    }

    pub fn degree(&self, v: usize) -> usize {
        let row = &self.bits[v * self.stride..(v + 1) * self.stride];
        row.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Returns `Some(k)` when every vertex has degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let k = self.degree(0);
        (1..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        total / 2
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = &self.bits[v * self.stride..(v + 1) * self.stride];
        row.iter().enumerate().flat_map(|(blk, &w)| {
            let base = blk * 64;
            BitIter(w).map(move |b| base + b)
        })
    }

    /// Edges as ordered pairs `(u, v)` with `u < v`, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Number of common neighbors of `u` and `v` (word-parallel intersection).
    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        let ru = &self.bits[u * self.stride..(u + 1) * self.stride];
        let rv = &self.bits[v * self.stride..(v + 1) * self.stride];
        ru.iter()
            .zip(rv)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n).expect("same order");
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    g.add_edge(u, v).expect("valid pair");
                }
            }
        }
        g
    }

    /// The image of the graph under a vertex relabeling: vertex `v` of `self`
    /// becomes `perm[v]`. `perm` must be a permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n {
            return Err(GraphError::NotAPermutation);
        }
        for &p in perm {
            if p >= self.n || seen[p] {
                return Err(GraphError::NotAPermutation);
            }
            seen[p] = true;
        }
        let mut g = Graph::empty(self.n)?;
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut g = Graph::empty(n).expect("sum of valid orders");
        for (u, v) in self.edges() {
            g.add_edge(u, v).expect("valid");
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n).expect("valid");
        }
        g
    }

    /// Dense 0/1 adjacency rows, mostly for handing to matrix code.
    pub fn adjacency_rows(&self) -> Vec<Vec<u8>> {
        (0..self.n)
            .map(|u| (0..self.n).map(|v| self.has_edge(u, v) as u8).collect())
            .collect()
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

struct BitIter(u64);

impl Iterator for BitIter {
    type Item = usize;
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let b = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(b)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_and_query() {
        let g = Graph::from_edges(4, [(0, 1), (1, 0), (2, 3)]).unwrap();
        assert!(g.has_edge(0, 1));
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.degrees(), vec![1, 1, 1, 1]);
        assert_eq!(g.edges(), vec![(0, 1), (2, 3)]);
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(
            Graph::from_edges(3, [(0, 3)]).unwrap_err(),
            GraphError::VertexOutOfRange { index: 3, n: 3 }
        );
        assert_eq!(
            Graph::from_edges(3, [(1, 1)]).unwrap_err(),
            GraphError::SelfLoop { vertex: 1 }
        );
        assert_eq!(Graph::empty(0).unwrap_err(), GraphError::Empty);
    }

    #[test]
    fn degree_sum_is_twice_edges() {
        let g = Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (3, 4)]).unwrap();
        let sum: usize = g.degrees().iter().sum();
        assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn complement_of_complement() {
        let g = Graph::from_edges(5, [(0, 1), (2, 4), (1, 3)]).unwrap();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn common_neighbors_across_words() {
        // 70 vertices forces two 64-bit blocks per row.
        let mut g = Graph::empty(70).unwrap();
        for v in [1, 2, 65, 68] {
            g.add_edge(0, v).unwrap();
            g.add_edge(69, v).unwrap();
        }
        assert_eq!(g.common_neighbors(0, 69), 4);
        let ns: Vec<usize> = g.neighbors(0).collect();
        assert_eq!(ns, vec![1, 2, 65, 68]);
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.relabel(&[3, 2, 1, 0]).unwrap();
        assert_eq!(h.edges(), vec![(0, 1), (1, 2), (2, 3)]);
        assert_eq!(
            g.relabel(&[0, 0, 1, 2]).unwrap_err(),
            GraphError::NotAPermutation
        );
        assert_eq!(
            g.relabel(&[0, 1, 2]).unwrap_err(),
            GraphError::NotAPermutation
        );
    }
}
