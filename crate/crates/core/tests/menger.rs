//! Flow-based disjoint paths against exhaustive search.

mod common;

use leantd::menger::{distinguishes_efficiently, is_separator, MengerEngine};
use leantd::zoo::{gen_clique_rows, gen_planar_witness, CliqueRowsConfig, PlanarWitnessConfig};
use leantd::{max_disjoint_paths, Graph, VertexSet};
use proptest::prelude::*;

fn random_sets(n: usize, seed: u64, a: usize, b: usize) -> (VertexSet, VertexSet) {
    let mut r = common::rng(seed ^ 0x5eed);
    let a = rand::seq::index::sample(&mut r, n, a.min(n))
        .into_iter()
        .collect();
    let b = rand::seq::index::sample(&mut r, n, b.min(n))
        .into_iter()
        .collect();
    (a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn flow_matches_brute_force(seed in 0u64..100_000, n in 1usize..11, p in 0.1f64..0.7, a in 1usize..5, b in 1usize..5) {
        let g = leantd::zoo::gen_standard(leantd::zoo::Family::Random { n, p, seed }).unwrap();
        let (a, b) = random_sets(n, seed, a, b);
        let res = max_disjoint_paths(&g, &a, &b).unwrap();
        prop_assert!(res.paths.validate(&g).is_ok());
        prop_assert!(res.separator.validate(&g, &a, &b).is_ok());
        prop_assert_eq!(res.k(), res.separator.order());
        prop_assert_eq!(res.k(), common::brute_max_paths(&g, &a, &b));
        prop_assert_eq!(res.k(), common::brute_min_separator(&g, &a, &b));
    }

    #[test]
    fn separator_test_matches_reachability(seed in 0u64..100_000, n in 2usize..10, x in 0usize..4) {
        let g = leantd::zoo::gen_standard(leantd::zoo::Family::Random { n, p: 0.35, seed }).unwrap();
        let (a, b) = random_sets(n, seed, 2, 2);
        let (x, _) = random_sets(n, seed + 1, x, 0);
        let check = is_separator(&g, &x, &a, &b).unwrap();
        let remaining = g.without_vertices(&x);
        let reach = a.iter().filter(|v| !x.contains(*v)).any(|s| {
            remaining.components(&x).iter().any(|c| c.contains(s) && b.iter().any(|t| c.contains(t)))
        });
        prop_assert_eq!(check.separates, !reach);
        if let Some(path) = check.violating_path {
            prop_assert!(path.iter().all(|v| !x.contains(*v)));
            prop_assert!(a.contains(path[0]) && b.contains(*path.last().unwrap()));
        }
        if check.separates {
            let eff = distinguishes_efficiently(&g, &x, &a, &b).unwrap();
            prop_assert_eq!(eff, x.len() == common::brute_min_separator(&g, &a, &b));
        }
    }
}

#[test]
fn engine_reuse_gives_same_answers() {
    let g = leantd::zoo::gen_standard(leantd::zoo::Family::Grid(4, 4)).unwrap();
    let mut engine = MengerEngine::new(&g);
    let sets: Vec<VertexSet> = (0..16).map(VertexSet::singleton).collect();
    for a in &sets {
        for b in &sets {
            let fresh = max_disjoint_paths(&g, a, b).unwrap();
            assert_eq!(engine.solve(a, b).unwrap(), fresh);
        }
    }
}

#[test]
fn planar_frontier_flow() {
    let (g, atlas) = gen_planar_witness(&PlanarWitnessConfig::default()).unwrap();
    let eps = atlas.set("eps_frontier").unwrap();
    let eps1 = atlas.set("eps_1_frontier").unwrap();
    let res = max_disjoint_paths(&g, &eps, &eps1).unwrap();
    assert_eq!(res.k(), 7);
    res.paths.validate(&g).unwrap();
    res.separator.validate(&g, &eps, &eps1).unwrap();
    let s1 = atlas.set("S_1").unwrap();
    assert!(is_separator(&g, &s1, &eps, &eps1).unwrap().separates);
    assert!(distinguishes_efficiently(&g, &s1, &eps, &eps1).unwrap());
}

#[test]
fn clique_rows_separation() {
    for w in 5..=9 {
        let (g, atlas) = gen_clique_rows(&CliqueRowsConfig { width: w }).unwrap();
        let (u, wv) = (atlas.set("u").unwrap(), atlas.set("w").unwrap());
        for m in 1..=w - 4 {
            let k = atlas.set(&format!("K_{m:02}")).unwrap();
            assert!(
                is_separator(&g, &k, &u, &wv).unwrap().separates,
                "W={w} m={m}"
            );
        }
    }
}

#[test]
fn errors_are_reported() {
    let g = Graph::new(3, &[(0, 1)]).unwrap();
    assert!(max_disjoint_paths(&g, &VertexSet::new(), &VertexSet::singleton(1)).is_err());
    assert!(max_disjoint_paths(&g, &VertexSet::singleton(5), &VertexSet::singleton(1)).is_err());
    let x = VertexSet::new();
    assert!(
        distinguishes_efficiently(&g, &x, &VertexSet::singleton(0), &VertexSet::singleton(1))
            .is_err()
    );
}
