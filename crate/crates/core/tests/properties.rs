//! Cross-module invariants: codec round trips, exact walk-operator
//! structure, the line-digraph support identity against an independent
//! construction, and closed-form spectra against the floating eigensolver.

use num_complex::Complex64;
use proptest::collection::vec;
use proptest::prelude::*;
use qwalk_core::charpoly::{charpoly_exact, signature, SignatureMode, SIGNATURE_PRIMES};
use qwalk_core::eig::eigenvalues;
use qwalk_core::fixtures;
use qwalk_core::graph::Graph;
use qwalk_core::graph6::{encode_graph6, parse_graph6};
use qwalk_core::matrix::{BinaryMatrix, IntMatrix};
use qwalk_core::spectrum::{
    multiset_eq, positive_support_spectrum, positive_support_square_spectrum,
    walk_spectrum_from_transition, ComplexSpectrum,
};
use qwalk_core::walk::{
    adjacency_matrix, positive_support_power, transition_matrix, walk_matrix, walk_support,
};
use qwalk_core::ArcSpace;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_from_bits(n: usize, bits: &[bool]) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    let mut idx = 0;
    for col in 1..n {
        for row in 0..col {
            if bits[idx] {
                g.add_edge(row, col).unwrap();
            }
            idx += 1;
        }
    }
    g
}

fn arbitrary_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| graph_from_bits(n, &bits))
    })
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arbitrary_graph(40)) {
        let encoded = encode_graph6(&g);
        let parsed = parse_graph6(encoded.as_bytes()).unwrap();
        prop_assert_eq!(parsed, g);
    }

    #[test]
    fn parse_is_deterministic_and_degree_sum_even(g in arbitrary_graph(30)) {
        let encoded = encode_graph6(&g);
        let once = parse_graph6(encoded.as_bytes()).unwrap();
        let twice = parse_graph6(encoded.as_bytes()).unwrap();
        prop_assert_eq!(&once, &twice);
        let degree_sum: usize = once.degrees().iter().sum();
        prop_assert_eq!(degree_sum % 2, 0);
    }

    #[test]
    fn walk_operator_is_orthogonal(g in arbitrary_graph(9)) {
        prop_assume!(g.edge_count() >= 1 && g.min_degree() >= 1);
        let (_, u) = walk_matrix(&g).unwrap();
        prop_assert!(u.mul(&u.transpose()).is_identity());
    }

    #[test]
    fn relabeling_conjugates_the_walk_operator(
        g in arbitrary_graph(8),
        seed in any::<u64>(),
    ) {
        prop_assume!(g.edge_count() >= 1 && g.min_degree() >= 1);
        use rand::seq::SliceRandom;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut perm: Vec<usize> = (0..g.n()).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm).unwrap();
        let (arcs_g, u_g) = walk_matrix(&g).unwrap();
        let (arcs_h, u_h) = walk_matrix(&h).unwrap();
        // The induced arc permutation carries entries across unchanged.
        for (r, (i, j)) in arcs_g.arcs().enumerate() {
            for (c, (k, l)) in arcs_g.arcs().enumerate() {
                let pr = arcs_h.index_of(perm[i], perm[j]).unwrap();
                let pc = arcs_h.index_of(perm[k], perm[l]).unwrap();
                prop_assert_eq!(u_g.get(r, c), u_h.get(pr, pc));
            }
        }
    }

    #[test]
    fn modular_signature_reduces_exact(entries in vec(-4i64..=4, 36)) {
        let m = IntMatrix::from_rows(
            &entries.chunks(6).map(|c| c.to_vec()).collect::<Vec<_>>(),
        );
        let exact = signature(&m, SignatureMode::Exact).unwrap();
        let modular = signature(&m, SignatureMode::Modular).unwrap();
        prop_assert_eq!(exact.reduce_mod(&SIGNATURE_PRIMES).unwrap(), modular);
    }

    #[test]
    fn eig_is_conjugate_closed(entries in vec(-3.0f64..3.0, 25)) {
        let rows: Vec<Vec<f64>> = entries.chunks(5).map(|c| c.to_vec()).collect();
        let vals = eigenvalues(&rows).unwrap();
        let spectrum = ComplexSpectrum::new(vals.clone());
        let conjugate = ComplexSpectrum::new(vals.iter().map(|z| z.conj()).collect());
        prop_assert!(multiset_eq(&spectrum, &conjugate, 1e-7));
    }

    #[test]
    fn transition_to_walk_spectrum_is_injective(
        reals in vec(-0.999f64..=0.999, 1..8),
        shift_at in any::<prop::sample::Index>(),
    ) {
        // Equal transition multisets map to equal walk multisets, and a
        // perturbed multiset maps to a visibly different one.
        let n = reals.len();
        let m = n + 2;
        let sp = ComplexSpectrum::from_reals(&reals);
        let out1 = walk_spectrum_from_transition(&sp, n, m, 1e-9).unwrap();
        let out2 = walk_spectrum_from_transition(&sp, n, m, 1e-9).unwrap();
        prop_assert!(multiset_eq(&out1, &out2, 0.0));

        let idx = shift_at.index(n);
        let mut moved = reals.clone();
        moved[idx] = (moved[idx] - 0.37).rem_euclid(1.8) - 0.9;
        prop_assume!((moved[idx] - reals[idx]).abs() > 1e-3);
        let out3 = walk_spectrum_from_transition(
            &ComplexSpectrum::from_reals(&moved), n, m, 1e-9).unwrap();
        prop_assert!(!multiset_eq(&out1, &out3, 1e-6));
    }
}

/// Independent line-digraph construction straight from the definition:
/// vertices are the arcs, with an arc from (i,j) to (k,l) exactly when
/// j = k. The oracle for the walk-support identity.
fn line_digraph_adjacency(g: &Graph) -> BinaryMatrix {
    let arcs = ArcSpace::from_graph(g).unwrap();
    BinaryMatrix::from_fn(arcs.len(), |r, c| {
        let (_, j) = arcs.arc(r);
        let (k, _) = arcs.arc(c);
        j == k
    })
}

#[test]
fn walk_support_equals_line_digraph() {
    let mut rng = ChaCha8Rng::seed_from_u64(20240811);
    let mut cases: Vec<Graph> = vec![
        fixtures::petersen(),
        fixtures::complete(4),
        fixtures::complete_bipartite(3, 4),
    ];
    for _ in 0..10 {
        cases.push(qwalk_core::random::gnp_min_degree(&mut rng, 9, 0.5, 3));
    }
    for g in cases {
        assert!(g.min_degree() >= 3);
        let (_, support) = walk_support(&g).unwrap();
        assert_eq!(support, line_digraph_adjacency(&g));
    }
}

#[test]
fn line_digraph_charpoly_identity() {
    // charpoly(support of the walk operator) = x^(2m - n) * charpoly(adjacency)
    for g in [
        fixtures::complete(4),
        fixtures::complete_bipartite(3, 3),
        fixtures::petersen(),
    ] {
        let (n, m) = (g.n(), g.edge_count());
        let (_, support) = walk_support(&g).unwrap();
        let left = charpoly_exact(&support.to_int_matrix()).unwrap();
        let mut right = charpoly_exact(&adjacency_matrix(&g)).unwrap();
        right.extend(std::iter::repeat_n(num_bigint::BigInt::from(0), 2 * m - n));
        assert_eq!(left, right);
    }
}

fn eig_spectrum(rows: Vec<Vec<f64>>) -> ComplexSpectrum {
    ComplexSpectrum::new(eigenvalues(&rows).unwrap())
}

#[test]
fn walk_spectrum_closed_form_matches_eigensolver() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut cases = vec![fixtures::complete(4), fixtures::petersen()];
    for _ in 0..12 {
        cases.push(qwalk_core::random::gnp_min_degree(&mut rng, 10, 0.5, 3));
    }
    for g in cases {
        let (n, m) = (g.n(), g.edge_count());
        let tol = 1e-8 * (2 * m) as f64;
        let (_, u) = walk_matrix(&g).unwrap();
        let direct = eig_spectrum(u.to_float_rows());
        let t_spectrum = eig_spectrum(transition_matrix(&g).to_float_rows());
        let closed = walk_spectrum_from_transition(&t_spectrum, n, m, tol).unwrap();
        assert!(
            multiset_eq(&direct, &closed, tol),
            "walk spectrum mismatch on n={n}, m={m}"
        );
    }
}

#[test]
fn positive_support_closed_forms_match_eigensolver() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let mut cases = vec![
        fixtures::complete(4),
        fixtures::petersen(),
        fixtures::complete_bipartite(3, 3),
    ];
    for k in [3usize, 4, 5] {
        for n in [8usize, 10, 12] {
            if (n * k) % 2 == 0 {
                cases.push(qwalk_core::random::random_regular(&mut rng, n, k).unwrap());
            }
        }
    }
    for g in cases {
        let (n, k) = (g.n(), g.regularity().unwrap());
        let tol = 1e-8 * (n * k) as f64;
        let adj = eig_spectrum(adjacency_matrix(&g).to_float_rows());
        let (_, s1) = positive_support_power(&g, 1).unwrap();
        let direct1 = eig_spectrum(s1.to_int_matrix().to_float_rows());
        let closed1 = positive_support_spectrum(&adj, n, k, tol).unwrap();
        assert!(
            multiset_eq(&direct1, &closed1, tol),
            "first-power support spectrum mismatch at n={n}, k={k}"
        );

        let (_, s2) = positive_support_power(&g, 2).unwrap();
        let direct2 = eig_spectrum(s2.to_int_matrix().to_float_rows());
        let closed2 = positive_support_square_spectrum(&adj, n, k, tol).unwrap();
        assert!(
            multiset_eq(&direct2, &closed2, tol),
            "squared support spectrum mismatch at n={n}, k={k}"
        );
        // The residual block of the squared support is n(k-2) copies of 2.
        assert!(direct2.count_near(Complex64::new(2.0, 0.0), 1e-6) >= n * (k - 2));
    }
}

#[test]
fn small_cospectral_mates_example() {
    // Adjacency-cospectral non-isomorphic pair; squared-support spectra differ.
    let g = fixtures::c4_plus_isolated();
    let h = fixtures::star(4);
    let sp_g = eig_spectrum(adjacency_matrix(&g).to_float_rows());
    let sp_h = eig_spectrum(adjacency_matrix(&h).to_float_rows());
    assert!(multiset_eq(&sp_g, &sp_h, 1e-9));
    // {-2, 0^3, 2} for both.
    assert_eq!(sp_g.count_near(Complex64::new(0.0, 0.0), 1e-9), 3);
    assert_eq!(sp_g.count_near(Complex64::new(2.0, 0.0), 1e-9), 1);
    assert_eq!(sp_g.count_near(Complex64::new(-2.0, 0.0), 1e-9), 1);

    use qwalk_core::walk::adjacency_power_support;
    let sq_g = eig_spectrum(
        adjacency_power_support(&g, 2)
            .to_int_matrix()
            .to_float_rows(),
    );
    let sq_h = eig_spectrum(
        adjacency_power_support(&h, 2)
            .to_int_matrix()
            .to_float_rows(),
    );
    assert!(!multiset_eq(&sq_g, &sq_h, 1e-6));
    // {0^3, 2^2} against {0^3, 1, 4}.
    assert_eq!(sq_g.count_near(Complex64::new(2.0, 0.0), 1e-9), 2);
    assert_eq!(sq_h.count_near(Complex64::new(4.0, 0.0), 1e-9), 1);
    assert_eq!(sq_h.count_near(Complex64::new(1.0, 0.0), 1e-9), 1);
}

#[test]
fn multiset_eq_tolerance_edge() {
    let tol = 1e-8;
    let a = ComplexSpectrum::from_reals(&[1.0]);
    let b = ComplexSpectrum::from_reals(&[1.0 + 2.0 * tol]);
    assert!(!multiset_eq(&a, &b, tol));
    assert!(multiset_eq(&a, &a, 0.0));
}

proptest! {
    // Parsers must reject garbage with typed errors, never panic.
    #[test]
    fn graph6_parser_never_panics(bytes in vec(any::<u8>(), 0..200)) {
        let _ = parse_graph6(&bytes);
    }

    #[test]
    fn edge_list_parser_never_panics(text in "\\PC{0,120}") {
        let _ = qwalk_core::edgelist::parse_edge_list(&text);
    }

    #[test]
    fn family_loader_never_panics(text in "\\PC{0,160}") {
        use qwalk_core::family::{load_family, FamilyFormat};
        let _ = load_family(&text, FamilyFormat::Graph6, "fuzz");
        let _ = load_family(&text, FamilyFormat::EdgeList, "fuzz");
    }
}

#[test]
fn oversized_graph6_order_is_rejected() {
    use qwalk_core::graph::{GraphError, MAX_VERTICES};
    use qwalk_core::graph6::Graph6Error;
    // '~' header carrying an 18-bit order beyond the supported maximum.
    let n = MAX_VERTICES + 1;
    let header = [
        126u8,
        ((n >> 12) & 0x3f) as u8 + 63,
        ((n >> 6) & 0x3f) as u8 + 63,
        (n & 0x3f) as u8 + 63,
    ];
    assert_eq!(
        parse_graph6(&header),
        Err(Graph6Error::Graph(GraphError::TooLarge { n }))
    );
}

#[test]
fn eigensolver_dimension_guard() {
    use qwalk_core::eig::{EigError, MAX_EIG_DIM};
    let rows = vec![vec![0.0f64; MAX_EIG_DIM + 1]; MAX_EIG_DIM + 1];
    assert_eq!(
        eigenvalues(&rows),
        Err(EigError::TooLarge {
            dim: MAX_EIG_DIM + 1
        })
    );
}

#[test]
fn closed_form_holds_at_six_hundred_dimensions() {
    // One larger instance: a 5-regular graph on 120 vertices gives a
    // 600-dimensional positive support, exercising the eigensolver well
    // beyond the desk-scale fixtures.
    let mut rng = ChaCha8Rng::seed_from_u64(600);
    let g = qwalk_core::random::random_regular(&mut rng, 120, 5).unwrap();
    let (n, k) = (120, 5);
    let tol = 1e-8 * (n * k) as f64;
    let adj = eig_spectrum(adjacency_matrix(&g).to_float_rows());
    let (_, s1) = positive_support_power(&g, 1).unwrap();
    let direct = eig_spectrum(s1.to_int_matrix().to_float_rows());
    let closed = positive_support_spectrum(&adj, n, k, tol).unwrap();
    assert_eq!(direct.len(), 600);
    assert!(multiset_eq(&direct, &closed, tol));
}
