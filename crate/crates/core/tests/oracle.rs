mod common;

use std::ops::ControlFlow;

use common::*;
use proptest::prelude::*;
use twinedge::graph::{connected_components, Graph};
use twinedge::oracle::{
    all_odd_all_optimal, chi_it_bruteforce, chi_it_predict, chromatic_number, connected_catalog,
    enumerate_optimal_partitions, exists_inducing, find_twin_coloring, for_each_optimal_partition,
    optimal_coloring, optimal_coloring_with_even_class, partition_type, type_census, Limits, OracleError,
};
use twinedge::{verify_twin, VertexColoring};

fn lim() -> Limits {
    Limits::default()
}

fn factorial(k: usize) -> usize {
    (1..=k).product()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn chromatic_number_matches_brute_force(seed in any::<u64>(), n in 1usize..8, p in 0.0f64..1.0) {
        let g = gnp(&mut rng(seed), n, p);
        prop_assert_eq!(chromatic_number(&g, &lim()).unwrap(), brute_chromatic(&g));
        let c = optimal_coloring(&g, &lim()).unwrap();
        prop_assert!(is_proper(&g, c.colors()));
    }

    #[test]
    fn partition_enumeration_matches_labelled_count(seed in any::<u64>(), n in 1usize..8, p in 0.0f64..1.0) {
        let g = gnp(&mut rng(seed), n, p);
        let k = brute_chromatic(&g);
        let mut labelled = 0;
        brute_colorings(&g, k, |_| { labelled += 1; true });
        let e = enumerate_optimal_partitions(&g, &lim()).unwrap();
        prop_assert_eq!(e.k, k);
        prop_assert_eq!(e.partitions.len() * factorial(k), labelled);
        for p in &e.partitions {
            prop_assert_eq!(p.len(), k);
            prop_assert_eq!(partition_type(p).iter().sum::<usize>(), n);
        }
        prop_assert_eq!(type_census(&e).values().sum::<usize>(), e.partitions.len());
    }

    #[test]
    fn all_odd_matches_brute_force(seed in any::<u64>(), n in 1usize..8, p in 0.0f64..1.0) {
        let g = gnp(&mut rng(seed), n, p);
        let expected = brute_all_odd(&g);
        prop_assert_eq!(all_odd_all_optimal(&g, &lim()).unwrap(), expected);
        let witness = optimal_coloring_with_even_class(&g, &lim()).unwrap();
        prop_assert_eq!(witness.is_none(), expected);
    }

    #[test]
    fn chi_it_search_matches_odometer(seed in any::<u64>(), n in 3usize..8, m in 0usize..9) {
        let g = make_nice(&gnm(&mut rng(seed), n, m));
        let expected = brute_chi_it(&g);
        prop_assert_eq!(chi_it_bruteforce(&g, &lim()).unwrap(), expected);
        prop_assert_eq!(chi_it_predict(&g, &lim()).unwrap(), expected);
        let s = find_twin_coloring(&g, expected, &lim()).unwrap().unwrap();
        prop_assert!(verify_twin(&g, &s).unwrap().is_valid());
        if expected > 2 {
            prop_assert!(find_twin_coloring(&g, expected - 1, &lim()).unwrap().is_none());
        }
    }

    #[test]
    fn exists_inducing_matches_odometer(seed in any::<u64>(), n in 3usize..7, extra in 0usize..5, t in 2usize..5) {
        let mut r = rng(seed);
        let g = random_connected(&mut r, n, extra);
        let Some(f) = random_proper_coloring(&mut r, &g, t) else { return Ok(()) };
        let expected = brute_edge_search(&g, t, |sums| sums == f.colors());
        let found = exists_inducing(&g, &f, t, &lim()).unwrap();
        prop_assert_eq!(found.is_some(), expected);
        if let Some(s) = found {
            prop_assert_eq!(vertex_sums(&g, s.values(), t), f.colors().to_vec());
        }
    }
}

#[test]
fn catalog_sizes() {
    let counts: Vec<usize> = (1..=6).map(|n| connected_catalog(n).len()).collect();
    assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
}

/// Whether two graphs on at most 6 vertices are isomorphic, by trying every
/// permutation.
fn isomorphic(a: &Graph, b: &Graph) -> bool {
    fn permutations(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in permutations(n - 1) {
            for i in 0..n {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }
    if a.n() != b.n() || a.m() != b.m() {
        return false;
    }
    permutations(a.n())
        .iter()
        .any(|p| a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])))
}

#[test]
fn catalog_is_connected_and_isomorph_free() {
    for n in 1..=5 {
        let cat = connected_catalog(n);
        for g in &cat {
            assert_eq!(connected_components(g).len(), 1);
        }
        for i in 0..cat.len() {
            for j in i + 1..cat.len() {
                assert!(!isomorphic(&cat[i], &cat[j]), "n={n}: {i} and {j}");
            }
        }
    }
}

#[test]
fn named_values() {
    let l = lim();
    assert_eq!(chromatic_number(&Graph::petersen(), &l).unwrap(), 3);
    assert_eq!(chi_it_bruteforce(&Graph::petersen(), &l).unwrap(), 3);
    assert_eq!(chi_it_bruteforce(&Graph::cycle(8), &l).unwrap(), 2);
    assert_eq!(chi_it_bruteforce(&Graph::path(6), &l).unwrap(), 3);
    assert_eq!(chi_it_bruteforce(&Graph::star(3), &l).unwrap(), 3);
    assert_eq!(chi_it_predict(&Graph::complete(6), &l).unwrap(), 7);
    assert_eq!(
        chi_it_predict(&Graph::complete(10), &Limits::with_max_vertices(10)).unwrap(),
        11
    );
    assert_eq!(chi_it_predict(&Graph::complete(5), &l).unwrap(), 5);
    assert_eq!(chi_it_predict(&Graph::empty(3), &l).unwrap(), 2);
    assert!(all_odd_all_optimal(&Graph::complete(6), &l).unwrap());
}

#[test]
fn partition_visitor_can_stop_early() {
    let g = Graph::empty(6);
    let mut seen = 0;
    let k = for_each_optimal_partition(&g, &lim(), |_| {
        seen += 1;
        ControlFlow::Break(())
    })
    .unwrap();
    assert_eq!((k, seen), (1, 1));
}

#[test]
fn limits_are_enforced() {
    let g = Graph::cycle(30);
    assert!(matches!(
        chromatic_number(&g, &lim()),
        Err(OracleError::SizeLimit { .. })
    ));
    assert!(chromatic_number(&g, &Limits::with_max_vertices(30)).is_ok());
    let g = Graph::complete(9);
    assert!(matches!(
        chi_it_bruteforce(&g, &lim()),
        Err(OracleError::SizeLimit { .. })
    ));
    let g = Graph::path(5).disjoint_union(&Graph::path(2));
    assert!(matches!(
        chi_it_bruteforce(&g, &lim()),
        Err(OracleError::NotNice(_))
    ));
    assert!(matches!(chi_it_predict(&g, &lim()), Err(OracleError::NotNice(_))));
}

#[test]
fn inducing_rejects_out_of_range_targets() {
    let g = Graph::complete(3);
    let f = VertexColoring::new(3, vec![0, 1, 2]).unwrap();
    assert!(exists_inducing(&g, &f, 2, &lim()).unwrap().is_none());
    assert!(exists_inducing(&g, &f, 3, &lim()).unwrap().is_some());
    // K3 with t = 4 and colors 0, 1, 2 has an odd sum.
    let f = VertexColoring::new(4, vec![0, 1, 2]).unwrap();
    assert!(exists_inducing(&g, &f, 4, &lim()).unwrap().is_none());
}
