//! Structural invariants of cuts, operations, canonical forms and the
//! reduction pipeline.

mod common;

use std::collections::HashSet;

use k33_core::classify::is_type2;
use k33_core::graph::families;
use k33_core::reduction::{decompose, expand_sausage, find_sausages, sausage_reduce, sausage_shorten};
use k33_core::segment::find_segmentation;
use k33_core::{canonical, immerses, is_isomorphic, Multigraph, PatternGraph, VertexSet};
use proptest::prelude::*;

fn multigraph(max_n: usize, max_mult: u32) -> impl Strategy<Value = Multigraph> {
    (2..=max_n).prop_flat_map(move |n| {
        let slot = prop_oneof![3 => Just(0u32), 2 => 1..=max_mult];
        prop::collection::vec(slot, n * (n - 1) / 2).prop_map(move |u| Multigraph::from_upper(n, &u).unwrap())
    })
}

/// `host` plus a doubled path of `len` new vertices from `a` to `b`.
fn with_chain(host: &Multigraph, a: usize, b: usize, len: usize) -> Multigraph {
    let mut g = host.clone();
    let first = g.n();
    for _ in 0..len {
        g = g.add_vertex().unwrap();
    }
    let mut prev = a;
    for v in first..first + len {
        g = g.add_edges(prev, v, 2).unwrap();
        prev = v;
    }
    g.add_edges(prev, b, 2).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn cuts_are_symmetric_and_submodular(g in multigraph(8, 3), x in any::<u32>(), y in any::<u32>()) {
        let n = g.n();
        let (x, y) = (VertexSet(x).intersection(VertexSet::full(n)), VertexSet(y).intersection(VertexSet::full(n)));
        prop_assert_eq!(g.cut_size(x), g.cut_size(x.complement(n)));
        prop_assert!(g.cut_size(x) + g.cut_size(y) >= g.cut_size(x.intersection(y)) + g.cut_size(x.union(y)));
    }

    #[test]
    fn split_off_reverses(g in multigraph(7, 3), y in 0usize..7, i in 0usize..7, j in 0usize..7) {
        let y = y % g.n();
        let nbrs: Vec<usize> = g.neighbors(y).collect();
        prop_assume!(nbrs.len() >= 2);
        let (x, z) = (nbrs[i % nbrs.len()], nbrs[j % nbrs.len()]);
        prop_assume!(x != z);
        let h = g.split_off(x, y, z).unwrap();
        prop_assert_eq!(h.edge_count() + 1, g.edge_count());
        prop_assert_eq!(h.degree(y) + 2, g.degree(y));
        let back = h.remove_edge(x, z).unwrap().add_edges(x, y, 1).unwrap().add_edges(y, z, 1).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn identified_root_has_degree_of_cut(g in multigraph(8, 3), x in 1u32..) {
        let set = VertexSet(x).intersection(VertexSet::full(g.n()));
        prop_assume!(!set.is_empty());
        let r = g.identify(set).unwrap();
        prop_assert_eq!(r.graph.degree(r.roots[0]), g.cut_size(set));
        prop_assert_eq!(r.graph.n(), g.n() - set.len() + 1);
    }

    #[test]
    fn canonical_code_ignores_labels(g in multigraph(8, 3), seed in any::<u64>()) {
        let mut perm: Vec<usize> = (0..g.n()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.permute(&perm);
        prop_assert_eq!(canonical(&g), canonical(&h));
        prop_assert_eq!(canonical(&g).to_graph(), canonical(&h).to_graph());
    }

    #[test]
    fn decomposition_and_reduction_keep_the_answer(g in multigraph(8, 4)) {
        let direct = immerses(&g, &PatternGraph::K33).is_some();
        let parts = decompose(&g).unwrap();
        prop_assert_eq!(direct, parts.components.iter().any(|c| immerses(c, &PatternGraph::K33).is_some()));
        prop_assert_eq!(direct, immerses(&sausage_reduce(&g), &PatternGraph::K33).is_some());
    }

    #[test]
    fn reduction_is_idempotent(host in multigraph(4, 2), a in 0usize..4, b in 0usize..4, len in 0usize..5) {
        let (a, b) = (a % host.n(), b % host.n());
        prop_assume!(a != b);
        let g = with_chain(&host, a, b, len);
        let once = sausage_reduce(&g);
        prop_assert!(find_sausages(&once).iter().all(|c| c.order() <= 2));
        prop_assert_eq!(sausage_reduce(&once), once);
    }

    #[test]
    fn expansion_inverts_shortening(host in multigraph(4, 2), a in 0usize..4, b in 0usize..4, len in 3usize..6) {
        let (a, b) = (a % host.n(), b % host.n());
        prop_assume!(a != b);
        let g = with_chain(&host, a, b, len);
        let chain = find_sausages(&g).into_iter().find(|c| c.order() >= 3).unwrap();
        let (x, y) = (chain.vertices[0], chain.vertices[1]);
        let (short, map) = g.identify_with_map(VertexSet::from_slice(&[x, y])).unwrap();
        prop_assert_eq!(&sausage_shorten(&g, x, y).unwrap(), &short);
        let image: Vec<usize> = chain.vertices[1..].iter().map(|&v| map[v]).collect();
        let shorter = find_sausages(&short)
            .into_iter()
            .find(|c| VertexSet::from_slice(&c.vertices) == VertexSet::from_slice(&image))
            .unwrap();
        let back = expand_sausage(&short, &shorter, chain.order()).unwrap();
        prop_assert!(is_isomorphic(&back, &g));
    }
}

/// Doubled `k`-cycle with the classes `W`, `W'` at positions 0 and `j`, each
/// optionally split in two; variant B routes `W`-`W'` through a new vertex.
fn type2_family() -> Vec<Multigraph> {
    let mut out = Vec::new();
    let mut seen = HashSet::new();
    for k in 4..=5 {
        for j in 2..=k - 2 {
            for middle in [false, true] {
                let (w, w2) = (0, j);
                let mut base = families::doubled_cycle(k);
                if middle {
                    base = base.add_vertex().unwrap();
                    let v = base.n() - 1;
                    base = base.add_edges(w, v, 1).unwrap().add_edges(v, w2, 1).unwrap();
                } else {
                    base = base.add_edges(w, w2, 1).unwrap();
                }
                for g in split_vertex(&base, w) {
                    for h in split_vertex(&g, w2) {
                        if seen.insert(canonical(&h)) {
                            out.push(h);
                        }
                    }
                }
            }
        }
    }
    out
}

/// `g` itself and every split of `v` into `v` and a new vertex joined by
/// 1 or 2 edges, each edge end at `v` kept or moved.
fn split_vertex(g: &Multigraph, v: usize) -> Vec<Multigraph> {
    let ends: Vec<usize> = g.neighbors(v).flat_map(|u| std::iter::repeat_n(u, g.mult(u, v) as usize)).collect();
    let mut out = vec![g.clone()];
    for mask in 1u32..(1 << ends.len()) - 1 {
        for inner in 1..=2 {
            let mut h = g.add_vertex().unwrap();
            let t = h.n() - 1;
            for (i, &u) in ends.iter().enumerate() {
                if mask >> i & 1 == 1 {
                    h = h.remove_edge(u, v).unwrap().add_edges(u, t, 1).unwrap();
                }
            }
            out.push(h.add_edges(v, t, inner).unwrap());
        }
    }
    out
}

#[test]
fn type2_graphs_are_k33_free() {
    let family = type2_family();
    let mut recognized = 0;
    for g in &family {
        if let Some(w) = is_type2(g) {
            recognized += 1;
            assert!(w.is_valid(g), "{g:?}");
            assert!(immerses(g, &PatternGraph::K33).is_none(), "{g:?}");
        }
    }
    assert!(recognized * 2 > family.len(), "{recognized} of {}", family.len());
}

#[test]
fn segmentation_extensions_split_evenly() {
    let population = common::width4_population(6, 7, 2);
    assert!(!population.is_empty());
    for g in &population {
        let seg = find_segmentation(g, 3, 3, 4).expect("population is segmentable");
        assert!(seg.is_valid(g));
        let sets = seg.sets();
        for (i, &x) in seg.extension.iter().enumerate() {
            let before = g.edges_to(x, sets[i]);
            let after = g.edges_to(x, sets[i + 1].complement(g.n()));
            assert_eq!(before, after, "{g:?} at {x}");
            assert_eq!(g.degree(x), before + after);
        }
    }
}
