use madsq_core::coloring::is_clique_in_square;
use madsq_core::constructions::{
    build_counterexample_mad2k, build_counterexample_mad4, build_tight_mad4_minus, latin_square,
    primality_check,
};
use madsq_core::density::{check_mad_bound, PotentialParams};
use madsq_core::{degree_histogram, square};
use proptest::prelude::*;

fn x_label(i: usize, j: usize) -> String {
    format!("x_{{{i},{j}}}")
}

/// Degree of `x_{i,j}` in `G_n`, counted from the edge families directly.
fn mad4_x_degree(n: usize, i: usize, j: usize) -> usize {
    // one edge to S and one to T; chords between x_{1,1+r} and x_{i,i+r}
    let on_diagonal = |i: usize, j: usize| (0..2).any(|r| (i - 1 + r) % n + 1 == j);
    match (i, j) {
        (1, 1) | (1, 2) => 2 + (n - 1),
        _ if i >= 2 && on_diagonal(i, j) => 3,
        _ => 2,
    }
}

#[test]
fn mad4_counts_and_degrees() {
    for n in 2..=8 {
        let cert = build_counterexample_mad4(n).unwrap();
        let g = &cert.graph;
        assert_eq!(g.vertex_count(), n * n + 2 * n + 2);
        assert_eq!(g.edge_count(), 2 * n * n + 4 * n - 1);
        assert_eq!(g.max_degree(), n + 1);
        for i in 1..=n {
            for j in 1..=n {
                let v = g.find_label(&x_label(i, j)).unwrap();
                assert_eq!(
                    g.degree(v),
                    mad4_x_degree(n, i, j),
                    "n = {n}, x_{{{i},{j}}}"
                );
            }
        }
        for name in ["u".to_string(), "v".to_string()]
            .into_iter()
            .chain((1..=n).flat_map(|i| [format!("u_{i}"), format!("v_{i}")]))
        {
            assert_eq!(g.degree(g.find_label(&name).unwrap()), n + 1, "{name}");
        }
        assert_eq!(cert.claimed_clique.len(), 2 * n + 4);
        assert!(
            is_clique_in_square(g, &cert.claimed_clique)
                .unwrap()
                .is_clique
        );
    }
}

#[test]
fn smallest_mad4_histogram() {
    let g = build_counterexample_mad4(2).unwrap().graph;
    let h = degree_histogram(&g);
    assert_eq!(h.counts.into_iter().collect::<Vec<_>>(), vec![(3, 10)]);
    assert_eq!(h.n3, 10);
}

#[test]
fn tight_family() {
    for c in 2..=4 {
        let cert = build_tight_mad4_minus(c).unwrap();
        let g = &cert.graph;
        assert_eq!(g.vertex_count(), 4 * c * c + 4 * c + 2);
        assert_eq!(g.edge_count(), 8 * c * c + 6 * c);
        assert_eq!(g.max_degree(), 2 * c + 1);
        assert_eq!(cert.claimed_clique.len(), 2 * g.max_degree() + 1);
        assert!(
            is_clique_in_square(g, &cert.claimed_clique)
                .unwrap()
                .is_clique
        );
        assert_eq!(g.degree(g.find_label(&x_label(1, 2)).unwrap()), 2);
    }
    for c in 2..=3 {
        let cert = build_tight_mad4_minus(c).unwrap();
        let p = PotentialParams::mad4_minus(c as i64);
        assert!(check_mad_bound(&cert.graph, p).unwrap().holds);
    }
    // without the chord removal the bound fails
    let g = build_counterexample_mad4(4).unwrap().graph;
    assert!(
        !check_mad_bound(&g, PotentialParams::mad4_minus(2))
            .unwrap()
            .holds
    );
}

/// Degree of `x_{i,j}` in `G_{k,n}` counted from the edge families.
fn mad2k_x_degree(k: usize, n: usize, i: usize, j: usize) -> usize {
    let chords = k * k - k;
    let offset = (j + n - i) % n;
    if i == 1 {
        if j <= chords {
            k + n - 1
        } else {
            k
        }
    } else if offset < chords {
        k + 1
    } else {
        k
    }
}

#[test]
fn mad2k_structure() {
    for (k, n) in [(3, 7), (3, 11), (3, 13), (4, 13)] {
        let cert = build_counterexample_mad2k(k, n).unwrap();
        let g = &cert.graph;
        assert_eq!(g.vertex_count(), k + k * n + n * n);
        assert_eq!(g.max_degree(), n + k - 1);
        for i in 1..=k {
            assert_eq!(
                g.degree(g.find_label(&format!("u_{i}")).unwrap()),
                n + k - 1
            );
            for j in 1..=n {
                assert_eq!(
                    g.degree(g.find_label(&format!("u_{{{i},{j}}}")).unwrap()),
                    n + 1
                );
            }
        }
        for i in 1..=n {
            for j in 1..=n {
                let v = g.find_label(&x_label(i, j)).unwrap();
                assert_eq!(
                    g.degree(v),
                    mad2k_x_degree(k, n, i, j),
                    "k = {k}, n = {n}, x_{{{i},{j}}}"
                );
            }
        }
        assert_eq!(cert.claimed_clique.len(), k * g.max_degree() + k);
        assert!(
            is_clique_in_square(g, &cert.claimed_clique)
                .unwrap()
                .is_clique
        );
    }
}

#[test]
fn diagonals_cover_every_symbol() {
    let k = 3;
    for n in [7, 11, 13] {
        for ell in 1..=k - 2 {
            let l = latin_square(n, ell).unwrap();
            for r in 0..k * k - k {
                let mut seen: Vec<usize> = (1..=n).map(|i| l.get(i, i + r)).collect();
                seen.sort_unstable();
                assert_eq!(seen, (1..=n).collect::<Vec<_>>(), "n = {n}, r = {r}");
            }
        }
        let g = build_counterexample_mad2k(k, n).unwrap().graph;
        let sq = square(&g);
        for r in 0..k * k - k {
            let x = g.find_label(&x_label(1, 1 + r)).unwrap();
            for i in 1..=k {
                for j in 1..=n {
                    let leaf = g.find_label(&format!("u_{{{i},{j}}}")).unwrap();
                    assert!(sq.has_edge(x, leaf));
                }
            }
        }
    }
}

#[test]
fn mad2k_potential_small() {
    let cert = build_counterexample_mad2k(3, 7).unwrap();
    assert!(
        check_mad_bound(&cert.graph, PotentialParams::mad2k(3))
            .unwrap()
            .holds
    );
}

#[test]
fn prime_spot_values() {
    assert!(primality_check(7));
    assert!(!primality_check(1));
    assert!(!primality_check(91));
    let primes: Vec<u64> = (0..30).filter(|&n| primality_check(n)).collect();
    assert_eq!(primes, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
}

proptest! {
    #[test]
    fn latin_rows_and_columns_are_permutations(n in 2usize..=13, ell_seed in 0usize..100) {
        let ell = 1 + ell_seed % (n - 1);
        let l = latin_square(n, ell).unwrap();
        for i in 1..=n {
            let mut row = l.row(i).to_vec();
            row.sort_unstable();
            prop_assert_eq!(row, (1..=n).collect::<Vec<_>>());
        }
        // columns step by ell, so they cover every symbol exactly when ell is a unit mod n
        prop_assert_eq!(l.is_latin(), gcd(n, ell) == 1);
        for j in 1..=n {
            prop_assert_eq!(l.get(1, j), j);
        }
    }

    #[test]
    fn orthogonal_for_prime_order(idx in 0usize..4, a in 1usize..13, b in 1usize..13) {
        let n = [5usize, 7, 11, 13][idx];
        let (a, b) = (1 + a % (n - 1), 1 + b % (n - 1));
        prop_assume!(a != b);
        let la = latin_square(n, a).unwrap();
        let lb = latin_square(n, b).unwrap();
        prop_assert!(la.is_orthogonal_to(&lb));
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}
