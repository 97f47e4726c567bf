//! The arc-space walk operator, its transition-matrix companion, and the
//! support operators applied to walk powers.
//!
//! The walk operator acts on arcs: row `(i,j)` has a nonzero in column
//! `(k,l)` exactly when `j = k`, with value `2/d(j) - 1` on the reversing
//! column (`l = i`) and `2/d(j)` otherwise. It is real-orthogonal, so all
//! entries of all of its powers lie in `[-1, 1]`.

use crate::arcs::ArcSpace;
use crate::graph::Graph;
use crate::matrix::{BinaryMatrix, IntMatrix, RationalMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WalkError {
    #[error("graph has no edges; the arc space is empty")]
    Edgeless,
    #[error("vertex {vertex} is isolated; the walk operator requires positive degree")]
    IsolatedVertex { vertex: usize },
    #[error(
        "vertex {vertex} has degree {degree}; this invariant requires minimum degree {required}"
    )]
    MinDegree {
        vertex: usize,
        degree: usize,
        required: usize,
    },
}

fn check_min_degree(g: &Graph, required: usize) -> Result<(), WalkError> {
    for v in 0..g.n() {
        let d = g.degree(v);
        if d == 0 {
            return Err(WalkError::IsolatedVertex { vertex: v });
        }
        if d < required {
            return Err(WalkError::MinDegree {
                vertex: v,
                degree: d,
                required,
            });
        }
    }
    Ok(())
}

/// Builds the arc-indexed walk operator in exact rationals, together with
/// the arc ordering that indexes it. Isolated vertices are rejected;
/// degree-1 and degree-2 vertices are allowed.
pub fn walk_matrix(g: &Graph) -> Result<(ArcSpace, RationalMatrix), WalkError> {
    check_min_degree(g, 1)?;
    let arcs = ArcSpace::from_graph(g)?;
    let degrees = g.degrees();
    let dim = arcs.len();
    let mut u = RationalMatrix::zeros(dim);
    for (row, (i, j)) in arcs.arcs().enumerate() {
        let two_over_d = BigRational::new(BigInt::from(2), BigInt::from(degrees[j] as i64));
        for l in g.neighbors(j) {
            let col = arcs.index_of(j, l).expect("arc exists");
            let value = if l == i {
                &two_over_d - BigRational::from(BigInt::from(1))
            } else {
                two_over_d.clone()
            };
            u.set(row, col, value);
        }
    }
    Ok((arcs, u))
}

/// The degree-normalized transition matrix: entry `(i,j)` is `1/d(j)` when
/// `{i,j}` is an edge. Every column of a graph without isolated vertices
/// sums to 1; isolated vertices yield an all-zero row and column.
pub fn transition_matrix(g: &Graph) -> RationalMatrix {
    let n = g.n();
    let mut t = RationalMatrix::zeros(n);
    for (j, degree) in g.degrees().into_iter().enumerate() {
        if degree == 0 {
            continue;
        }
        let inv = BigRational::new(BigInt::from(1), BigInt::from(degree as i64));
        for i in g.neighbors(j) {
            t.set(i, j, inv.clone());
        }
    }
    t
}

/// Support of the walk operator itself (no positivity filter).
pub fn walk_support(g: &Graph) -> Result<(ArcSpace, BinaryMatrix), WalkError> {
    let (arcs, u) = walk_matrix(g)?;
    let s = u.support();
    Ok((arcs, s))
}

/// The strict-positivity support of the `p`-th power of the walk operator.
///
/// Minimum degree 3 is required: below it the positive support degenerates
/// (reversal entries vanish or flip sign) and the closed-form results that
/// consume this matrix no longer apply.
pub fn positive_support_power(g: &Graph, p: u32) -> Result<(ArcSpace, BinaryMatrix), WalkError> {
    assert!(p >= 1, "power must be positive");
    check_min_degree(g, 3)?;
    let arcs = ArcSpace::from_graph(g)?;
    if let Some(k) = g.regularity() {
        // Regular fast path: scale the operator by k to land in integers.
        // Orthogonality bounds every entry of the p-th power by 1, so the
        // scaled entries are bounded by k^p; guard i64 anyway.
        if (k as f64).powi(p as i32) < 9.0e18 {
            let scaled = scaled_walk_int(g, &arcs, k);
            let mut acc = scaled.clone();
            for _ in 1..p {
                acc = acc.mul(&scaled);
            }
            return Ok((arcs, acc.positive_support()));
        }
    }
    let (arcs, u) = walk_matrix(g)?;
    let powered = u.pow(p);
    Ok((arcs, powered.positive_support()))
}

/// `k` times the walk operator of a `k`-regular graph, in machine integers.
fn scaled_walk_int(g: &Graph, arcs: &ArcSpace, k: usize) -> IntMatrix {
    let dim = arcs.len();
    let mut m = IntMatrix::zeros(dim);
    for (row, (i, j)) in arcs.arcs().enumerate() {
        for l in g.neighbors(j) {
            let col = arcs.index_of(j, l).expect("arc exists");
            m.set(row, col, if l == i { 2 - k as i64 } else { 2 });
        }
    }
    m
}

/// Support of the `p`-th power of the adjacency matrix: entry 1 exactly
/// when a walk of length `p` joins the pair, so the boolean power computes
/// it without overflow.
pub fn adjacency_power_support(g: &Graph, p: u32) -> BinaryMatrix {
    assert!(p >= 1, "power must be positive");
    let n = g.n();
    let adj = BinaryMatrix::from_fn(n, |r, c| g.has_edge(r, c));
    adj.pow_bool(p)
}

/// Adjacency matrix as integers, for spectral backends.
pub fn adjacency_matrix(g: &Graph) -> IntMatrix {
    let n = g.n();
    let mut m = IntMatrix::zeros(n);
    for (u, v) in g.edges() {
        m.set(u, v, 1);
        m.set(v, u, 1);
    }
    m
}
