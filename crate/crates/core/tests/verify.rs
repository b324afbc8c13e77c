//! Property checkers against brute-force oracles on random decompositions.

mod common;

use leantd::decomp::{fatness, require_valid};
use leantd::verify::{
    check_componental, check_lean, check_lean_with, check_linked, check_strongly_linked,
    check_tight, cumulative_closure, make_tight, ray_decomposition, verify_properties, LeanOptions,
    Property, VerifyError,
};
use leantd::zoo::clique_rows::{gen_clique_rows, handcrafted_decomposition, CliqueRowsConfig};
use leantd::{width, Graph, TreeDecomposition, VertexSet};
use proptest::prelude::*;

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(150))]

    #[test]
    fn lean_check_matches_oracle(seed in 0u64..1_000_000, n in 1usize..7, nodes in 1usize..5, p in 0.2f64..0.9) {
        let mut r = common::rng(seed);
        let (g, td) = common::random_td(&mut r, n, nodes, p);
        let found = check_lean(&g, &td, 12).unwrap();
        let oracle = common::brute_lean_violation_order(&g, &td);
        prop_assert_eq!(found.violation().map(|v| v.order()), oracle);
        if let Some(v) = found.violation() {
            prop_assert!(v.revalidate(&g, &td).is_ok());
        }
    }

    #[test]
    fn link_checks_match_oracle(seed in 0u64..1_000_000, n in 1usize..8, nodes in 1usize..6, p in 0.2f64..0.9) {
        let mut r = common::rng(seed);
        let (g, td) = common::random_td(&mut r, n, nodes, p);
        prop_assert_eq!(check_linked(&g, &td).unwrap().is_none(), common::brute_linked(&g, &td, true));
        prop_assert_eq!(check_strongly_linked(&g, &td).unwrap().is_none(), common::brute_linked(&g, &td, false));
    }

    #[test]
    fn comparable_only_is_weaker(seed in 0u64..1_000_000, n in 1usize..8, nodes in 1usize..6) {
        let mut r = common::rng(seed);
        let (g, td) = common::random_td(&mut r, n, nodes, 0.5);
        let full = check_lean(&g, &td, 12).unwrap().is_lean();
        let opts = LeanOptions { comparable_only: true, ..LeanOptions::default() };
        let comparable = check_lean_with(&g, &td, &opts).unwrap();
        prop_assert!(!full || comparable.is_lean());
        if let Some(v) = comparable.violation() {
            let rooted = td.rooted();
            prop_assert!(rooted.is_ancestor(v.s, v.t) || rooted.is_ancestor(v.t, v.s));
        }
    }

    #[test]
    fn closure_contract(seed in 0u64..1_000_000, n in 1usize..9, nodes in 1usize..7) {
        let mut r = common::rng(seed);
        let (g, td) = common::random_td(&mut r, n, nodes, 0.5);
        let cc = cumulative_closure(&g, &td).unwrap();
        require_valid(&g, &cc).unwrap();
        prop_assert!(common::brute_linked(&g, &cc, false));
        prop_assert_eq!(cumulative_closure(&g, &cc).unwrap(), cc.clone());
        if check_componental(&g, &td).unwrap().is_none() {
            prop_assert!(check_componental(&g, &cc).unwrap().is_none());
        }
    }

    #[test]
    fn tight_contract(seed in 0u64..1_000_000, n in 2usize..9, nodes in 2usize..6) {
        let mut r = common::rng(seed);
        let (g, td) = common::random_td(&mut r, n, nodes, 0.85);
        match make_tight(&g, &td) {
            Ok(t) => {
                require_valid(&g, &t).unwrap();
                prop_assert!(check_tight(&g, &t).unwrap().is_none());
                prop_assert!(check_componental(&g, &t).unwrap().is_none());
                prop_assert!(width(&t) <= width(&td));
                prop_assert_eq!(make_tight(&g, &t).unwrap(), t);
            }
            Err(VerifyError::NotComponental(..)) => {
                prop_assert!(check_componental(&g, &td).unwrap().is_some());
            }
            Err(e) => prop_assert!(false, "{e}"),
        }
    }

    #[test]
    fn report_witnesses_revalidate(seed in 0u64..1_000_000, n in 1usize..8, nodes in 1usize..5) {
        let mut r = common::rng(seed);
        let (g, td) = common::random_td(&mut r, n, nodes, 0.5);
        let rep = verify_properties(&g, &td, &Property::ALL, &LeanOptions::default()).unwrap();
        prop_assert!(rep.revalidate(&g, &td).is_ok());
        prop_assert_eq!(rep.lines.len(), Property::ALL.len());
        prop_assert_eq!(rep.to_string().lines().count(), Property::ALL.len());
    }
}

#[test]
fn clique_rows_bag_violation_sizes() {
    let cfg = CliqueRowsConfig { width: 7 };
    let (g, atlas) = gen_clique_rows(&cfg).unwrap();
    let (td, leaf) = handcrafted_decomposition(&cfg, 3).unwrap();
    let opts = LeanOptions {
        pairs: Some(vec![(leaf, leaf)]),
        ..LeanOptions::default()
    };
    let found = check_lean_with(&g, &td, &opts).unwrap();
    let v = found.violation().unwrap();
    assert_eq!((v.s, v.t, v.ell, v.order()), (leaf, leaf, 6, 5));
    assert_eq!(v.z_s, atlas.set("Z2_03").unwrap());
    assert_eq!(v.z_t, atlas.set("Z1_03").unwrap());
    v.revalidate(&g, &td).unwrap();
}

#[test]
fn two_triangles_strongly_linked() {
    let g = Graph::new(6, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (4, 5), (3, 5)]).unwrap();
    let td = TreeDecomposition::new(
        6,
        vec![set(&[0, 1, 2]), set(&[2, 3]), set(&[3, 4, 5])],
        &[(0, 1), (1, 2)],
    )
    .unwrap();
    assert!(check_strongly_linked(&g, &td).unwrap().is_none());
    assert!(check_linked(&g, &td).unwrap().is_none());
    assert!(check_lean(&g, &td, 12).unwrap().is_lean());
}

#[test]
fn ray_decompositions_of_cliques_are_lean() {
    for n in 1..=8 {
        let k = leantd::zoo::gen_standard(leantd::zoo::Family::Clique(n)).unwrap();
        let order: Vec<usize> = (0..n).rev().collect();
        let td = ray_decomposition(&k, &order).unwrap();
        assert_eq!(td.node_count(), n);
        assert!(check_lean(&k, &td, 12).unwrap().is_lean(), "K_{n}");
        assert_eq!(fatness(&td).counts().iter().sum::<usize>(), n);
    }
}

#[test]
fn ray_decomposition_rejects_bad_orders() {
    let g = Graph::new(3, &[(0, 1)]).unwrap();
    assert!(ray_decomposition(&g, &[0, 1]).is_err());
    assert!(ray_decomposition(&g, &[0, 1, 1]).is_err());
    assert!(ray_decomposition(&g, &[0, 1, 3]).is_err());
}

#[test]
fn scale_limit_is_an_error() {
    let k = leantd::zoo::gen_standard(leantd::zoo::Family::Clique(6)).unwrap();
    let td = TreeDecomposition::trivial(6, (0..6).collect()).unwrap();
    assert!(matches!(
        check_lean(&k, &td, 5),
        Err(VerifyError::ScaleLimit {
            node: 0,
            size: 6,
            cap: 5
        })
    ));
}
