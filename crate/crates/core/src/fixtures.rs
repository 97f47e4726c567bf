//! Named graphs used by the verification suite and tests. All are built
//! from their standard combinatorial descriptions, not from encoded data.

use crate::graph::Graph;

pub fn complete(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("n >= 1");
    for u in 0..n {
        for v in (u + 1)..n {
            g.add_edge(u, v).expect("valid");
        }
    }
    g
}

pub fn cycle(n: usize) -> Option<Graph> {
    if n < 3 {
        return None;
    }
    let mut g = Graph::empty(n).expect("n >= 3");
    for v in 0..n {
        g.add_edge(v, (v + 1) % n).expect("valid");
    }
    Some(g)
}

pub fn path(n: usize) -> Graph {
    let mut g = Graph::empty(n).expect("n >= 1");
    for v in 0..n.saturating_sub(1) {
        g.add_edge(v, v + 1).expect("valid");
    }
    g
}

/// Star with `leaves` leaves: center 0, leaves 1..=leaves.
pub fn star(leaves: usize) -> Graph {
    let mut g = Graph::empty(leaves + 1).expect("n >= 1");
    for v in 1..=leaves {
        g.add_edge(0, v).expect("valid");
    }
    g
}

pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    let mut g = Graph::empty(a + b).expect("n >= 1");
    for u in 0..a {
        for v in a..a + b {
            g.add_edge(u, v).expect("valid");
        }
    }
    g
}

/// The cospectral mate pair of small graphs: a four-cycle plus an isolated
/// vertex (this one), against the four-leaf star.
pub fn c4_plus_isolated() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 3), (2, 3)]).expect("valid")
}

/// Kneser graph on the 2-subsets of a 5-set: the (10,3,0,1) strongly
/// regular graph.
pub fn petersen() -> Graph {
    let pairs = two_subsets(5);
    let mut g = Graph::empty(10).expect("valid");
    for a in 0..10 {
        for b in (a + 1)..10 {
            if pairs[a] & pairs[b] == 0 {
                g.add_edge(a, b).expect("valid");
            }
        }
    }
    g
}

/// The 4x4 rook's graph (line graph of K(4,4)): one of the two (16,6,2,2)
/// strongly regular graphs.
pub fn rook_4x4() -> Graph {
    let mut g = Graph::empty(16).expect("valid");
    for a in 0..16 {
        for b in (a + 1)..16 {
            let (r1, c1) = (a / 4, a % 4);
            let (r2, c2) = (b / 4, b % 4);
            if (r1 == r2) != (c1 == c2) {
                g.add_edge(a, b).expect("valid");
            }
        }
    }
    g
}

/// The Shrikhande graph: Cayley graph on Z4 x Z4 with connection set
/// {±(1,0), ±(0,1), ±(1,1)}; the other (16,6,2,2) strongly regular graph.
pub fn shrikhande() -> Graph {
    let connection = [(1, 0), (3, 0), (0, 1), (0, 3), (1, 1), (3, 3)];
    let mut g = Graph::empty(16).expect("valid");
    for a in 0..16usize {
        for b in (a + 1)..16usize {
            let d = ((a / 4 + 4 - b / 4) % 4, (a % 4 + 4 - b % 4) % 4);
            if connection.contains(&d) {
                g.add_edge(a, b).expect("valid");
            }
        }
    }
    g
}

/// The Clebsch graph (folded 5-cube): the unique (16,5,0,2) strongly
/// regular graph. Vertices are F2^4 words; edges join words differing by a
/// unit vector or the all-ones word.
pub fn clebsch() -> Graph {
    let gens = [0b0001u8, 0b0010, 0b0100, 0b1000, 0b1111];
    let mut g = Graph::empty(16).expect("valid");
    for a in 0..16u8 {
        for b in (a + 1)..16u8 {
            if gens.contains(&(a ^ b)) {
                g.add_edge(a as usize, b as usize).expect("valid");
            }
        }
    }
    g
}

/// The triangular graph on an 8-set (line graph of K8): the (28,12,6,4)
/// strongly regular graph with the largest automorphism group.
pub fn triangular_t8() -> Graph {
    let pairs = two_subsets(8);
    let mut g = Graph::empty(28).expect("valid");
    for a in 0..28 {
        for b in (a + 1)..28 {
            if pairs[a] & pairs[b] != 0 {
                g.add_edge(a, b).expect("valid");
            }
        }
    }
    g
}

/// The three graphs obtained from [`triangular_t8`] by Seidel switching
/// along a 2-regular spanning subgraph of the underlying 8-set: a perfect
/// matching (`1`), an 8-cycle (`2`), or a triangle plus a pentagon (`3`).
/// Together with the triangular graph these are all four (28,12,6,4)
/// strongly regular graphs.
pub fn chang(which: u8) -> Graph {
    let base_edges: &[(usize, usize)] = match which {
        1 => &[(0, 1), (2, 3), (4, 5), (6, 7)],
        2 => &[
            (0, 1),
            (1, 2),
            (2, 3),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 0),
        ],
        3 => &[
            (0, 1),
            (1, 2),
            (2, 0),
            (3, 4),
            (4, 5),
            (5, 6),
            (6, 7),
            (7, 3),
        ],
        _ => panic!("chang index must be 1, 2, or 3"),
    };
    let pairs = two_subsets(8);
    let switch_set: Vec<usize> = base_edges
        .iter()
        .map(|&(a, b)| {
            let mask = (1u32 << a) | (1 << b);
            pairs.iter().position(|&p| p == mask).expect("pair present")
        })
        .collect();
    seidel_switch(&triangular_t8(), &switch_set)
}

/// Seidel switching: complement the adjacency between `set` and its
/// complement, leaving both sides internally unchanged.
pub fn seidel_switch(g: &Graph, set: &[usize]) -> Graph {
    let in_set: Vec<bool> = {
        let mut v = vec![false; g.n()];
        for &x in set {
            v[x] = true;
        }
        v
    };
    let mut out = Graph::empty(g.n()).expect("valid");
    for u in 0..g.n() {
        for v in (u + 1)..g.n() {
            let crossing = in_set[u] != in_set[v];
            let edge = g.has_edge(u, v) != crossing;
            if edge {
                out.add_edge(u, v).expect("valid");
            }
        }
    }
    out
}

/// Paley graph on a prime `q` congruent to 1 mod 4: vertices Z_q, edges
/// between residues differing by a nonzero square. Gives (13,6,2,3) and
/// (29,14,6,7) strongly regular graphs for q = 13, 29.
pub fn paley(q: usize) -> Option<Graph> {
    if q < 5 || q % 4 != 1 || !is_prime(q) {
        return None;
    }
    let mut squares = vec![false; q];
    for x in 1..q {
        squares[x * x % q] = true;
    }
    let mut g = Graph::empty(q).expect("valid");
    for a in 0..q {
        for b in (a + 1)..q {
            if squares[(b - a) % q] {
                g.add_edge(a, b).expect("valid");
            }
        }
    }
    Some(g)
}

fn is_prime(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// 2-subsets of {0..k} as bitmasks, in lexicographic pair order.
fn two_subsets(k: usize) -> Vec<u32> {
    let mut out = Vec::new();
    for a in 0..k {
        for b in (a + 1)..k {
            out.push((1u32 << a) | (1 << b));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders_and_degrees() {
        assert_eq!(petersen().degrees(), vec![3; 10]);
        assert_eq!(rook_4x4().regularity(), Some(6));
        assert_eq!(shrikhande().regularity(), Some(6));
        assert_eq!(clebsch().regularity(), Some(5));
        assert_eq!(triangular_t8().regularity(), Some(12));
        for w in 1..=3 {
            assert_eq!(chang(w).regularity(), Some(12));
        }
        assert_eq!(paley(13).unwrap().regularity(), Some(6));
        assert_eq!(paley(29).unwrap().regularity(), Some(14));
        assert!(paley(7).is_none());
        assert!(paley(15).is_none());
    }

    #[test]
    fn c4_plus_isolated_shape() {
        let g = c4_plus_isolated();
        assert_eq!(g.n(), 5);
        assert_eq!(g.edge_count(), 4);
        assert_eq!(g.degree(4), 0);
    }
}
