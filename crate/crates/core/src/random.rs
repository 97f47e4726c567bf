//! Seeded random test graphs: Erdős–Rényi with a degree floor, and the
//! pairing model for regular graphs. Used by the verification and property
//! suites; not a general-purpose generator.

use crate::graph::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// G(n, p) with independent edges.
pub fn gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).expect("n >= 1");
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("valid");
            }
        }
    }
    g
}

/// A random graph with every degree at least `min_degree`: G(n, p) followed
/// by attaching random extra edges to deficient vertices.
pub fn gnp_min_degree<R: Rng>(rng: &mut R, n: usize, p: f64, min_degree: usize) -> Graph {
    assert!(min_degree < n, "degree floor must be below n");
    let mut g = gnp(rng, n, p);
    loop {
        let Some(v) = (0..n).find(|&v| g.degree(v) < min_degree) else {
            return g;
        };
        let candidates: Vec<usize> = (0..n).filter(|&u| u != v && !g.has_edge(u, v)).collect();
        let &u = candidates.choose(rng).expect("degree floor below n-1");
        g.add_edge(u, v).expect("valid");
    }
}

/// A uniform-ish random k-regular graph by the pairing model, retrying on
/// collisions. Returns `None` when nk is odd, k >= n, or no simple pairing
/// shows up within the attempt budget (does not happen for the small n, k
/// used in tests).
pub fn random_regular<R: Rng>(rng: &mut R, n: usize, k: usize) -> Option<Graph> {
    if k >= n || !(n * k).is_multiple_of(2) {
        return None;
    }
    'attempt: for _ in 0..10_000 {
        let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, k)).collect();
        stubs.shuffle(rng);
        let mut g = Graph::empty(n).expect("n >= 1");
        for pair in stubs.chunks(2) {
            let (a, b) = (pair[0], pair[1]);
            if a == b || g.has_edge(a, b) {
                continue 'attempt;
            }
            g.add_edge(a, b).expect("valid");
        }
        return Some(g);
    }
    None
}
