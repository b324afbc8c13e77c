//! Round trips and error positions of the text formats.

mod common;

use leantd::format::{
    parse_atlas, parse_gr, parse_labels, parse_td, write_atlas, write_gr, write_labels, write_td,
    ParseErrorKind,
};
use leantd::zoo::{gen_standard, Family, LandmarkAtlas};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn graph_and_decomposition_round_trip(seed in 0u64..1_000_000, n in 1usize..12, nodes in 1usize..8) {
        let mut r = common::rng(seed);
        let (g, td) = common::random_td(&mut r, n, nodes, 0.5);
        let gr = write_gr(&g);
        let g2 = parse_gr(&gr).unwrap();
        prop_assert_eq!(write_gr(&g2), gr);
        prop_assert!(g2.edges().eq(g.edges()));
        let text = write_td(&td);
        let td2 = parse_td(&text).unwrap();
        prop_assert_eq!(write_td(&td2), text);
        prop_assert_eq!(td2.bags(), td.bags());
        let mut e1 = td.edges();
        let mut e2 = td2.edges();
        e1.sort_unstable();
        e2.sort_unstable();
        prop_assert_eq!(e1, e2);
    }

    #[test]
    fn atlas_round_trip(names in proptest::collection::btree_map("[a-z_0-9]{1,8}", proptest::collection::vec(0usize..20, 0..6), 0..6)) {
        let mut atlas = LandmarkAtlas::default();
        for (k, v) in names {
            atlas.insert(k, v);
        }
        let text = write_atlas(&atlas);
        let back = parse_atlas(&text, 20).unwrap();
        prop_assert_eq!(&back, &atlas);
        prop_assert_eq!(write_atlas(&back), text);
    }
}

#[test]
fn errors_carry_line_numbers() {
    let e = parse_gr("c hello\np tw 2 1\n1 3\n").unwrap_err();
    assert_eq!(e.line, 3);
    assert!(matches!(
        e.kind,
        ParseErrorKind::IndexOutOfRange { index: 3, .. }
    ));
    let e = parse_gr("p tw 3 2\n1 2\n").unwrap_err();
    assert!(matches!(e.kind, ParseErrorKind::CountMismatch { .. }));
    let e = parse_td("s td 2 2 3\nb 1 1 2\nb 2 2 3\n1 3\n").unwrap_err();
    assert_eq!(e.line, 4);
    let e = parse_labels("1\ta\n1\tb\n", 2).unwrap_err();
    assert_eq!(e.line, 2);
    let e = parse_atlas("x\t1 9\n", 3).unwrap_err();
    assert_eq!(e.line, 1);
}

#[test]
fn labels_round_trip() {
    let labels: Vec<String> = (0..5).map(|i| format!("({i}/2,1)")).collect();
    let text = write_labels(&labels);
    assert_eq!(parse_labels(&text, 5).unwrap(), labels);
    let g = gen_standard(Family::Grid(2, 2)).unwrap();
    assert_eq!(write_gr(&g), "p tw 4 4\n1 2\n1 3\n2 4\n3 4\n");
}
