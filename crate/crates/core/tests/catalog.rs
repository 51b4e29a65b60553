//! Catalog derived from the order-6 census: expansion closure, widths,
//! round trips, and a truncated catalog as a negative control.

use std::sync::OnceLock;

use k33_core::branch::branchwidth_exact;
use k33_core::census::{catalog_from_levels, census_level, expand_marked, verify_level, CensusConfig, LevelResult};
use k33_core::classify::{classify, Classification, SporadicCatalog};
use k33_core::graph::families;
use k33_core::{canonical, immerses, PatternGraph};

fn level6() -> &'static (LevelResult, SporadicCatalog) {
    static CELL: OnceLock<(LevelResult, SporadicCatalog)> = OnceLock::new();
    CELL.get_or_init(|| {
        let cfg = CensusConfig { n: 6..=6, collect_frontier: true, ..Default::default() };
        let level = census_level(6, &cfg).unwrap();
        let catalog = catalog_from_levels(std::slice::from_ref(&level)).catalog;
        (level, catalog)
    })
}

#[test]
fn order_six_split() {
    let (_, cat) = level6();
    assert_eq!((cat.t3.len(), cat.t4.len()), (17, 14));
    assert!(cat.t4.contains(&canonical(&families::octahedron())));
}

#[test]
fn marked_pairs_expand_without_k33() {
    let (_, cat) = level6();
    for entry in &cat.t3 {
        let k = entry.marked.len();
        let mut plans: Vec<Vec<usize>> = (0..k)
            .flat_map(|i| {
                [3, 4].map(|t| {
                    let mut v = vec![2; k];
                    v[i] = t;
                    v
                })
            })
            .collect();
        plans.push(vec![3; k]);
        for orders in plans {
            let g = expand_marked(entry, &orders).unwrap();
            assert!(immerses(&g, &PatternGraph::K33).is_none(), "{} expanded to {orders:?}", entry.code);
            match classify(&g, Some(cat)).unwrap() {
                Classification::Type3 { code, .. } => assert_eq!(code, entry.code),
                other => panic!("{} expanded to {orders:?} classified {}", entry.code, other.label()),
            }
        }
    }
}

#[test]
fn t4_members_classify_as_t4() {
    let (_, cat) = level6();
    for code in &cat.t4 {
        let got = classify(&code.to_graph(), Some(cat)).unwrap();
        assert_eq!(got, Classification::Type4 { code: code.clone() });
    }
}

#[test]
fn only_the_octahedron_needs_width_four() {
    let (_, cat) = level6();
    let octa = canonical(&families::octahedron());
    let codes = cat.t3.iter().map(|e| &e.code).chain(&cat.t4);
    for code in codes {
        let bw = branchwidth_exact(&code.to_graph()).unwrap();
        if *code == octa {
            assert_eq!(bw, 4);
        } else {
            assert!(bw <= 3, "{code} has branch-width {bw}");
        }
    }
}

#[test]
fn catalog_text_round_trips() {
    let (_, cat) = level6();
    assert_eq!(&SporadicCatalog::parse(&cat.to_text()).unwrap(), cat);
}

#[test]
fn classification_json_round_trips() {
    let (_, cat) = level6();
    let g = expand_marked(&cat.t3[0], &vec![3; cat.t3[0].marked.len()]).unwrap();
    let c = classify(&g, Some(cat)).unwrap();
    let back: Classification = serde_json::from_str(&serde_json::to_string(&c).unwrap()).unwrap();
    assert_eq!(back, c);
}

#[test]
fn truncated_catalog_is_caught() {
    let (level, cat) = level6();
    let full = verify_level(level, cat);
    assert!(full.violations.is_empty());

    let mut no_t4 = cat.clone();
    let dropped = no_t4.t4.remove(0);
    let report = verify_level(level, &no_t4);
    assert!(report.violations.iter().any(|v| v.code == dropped.to_string()), "{:?}", report.violations);

    let mut no_t3 = cat.clone();
    no_t3.t3.truncate(cat.t3.len() - 1);
    assert!(!verify_level(level, &no_t3).violations.is_empty());
}
