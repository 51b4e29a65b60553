//! Minor containment on underlying simple graphs.
//!
//! Every minor arises from vertex deletions and edge contractions followed by
//! edge deletions, so the search only branches on the vertex-reducing
//! operations and finishes with a spanning-subgraph test.

use std::collections::HashSet;

use crate::canon::{canonical, CanonicalCode};
use crate::graph::{Multigraph, VertexSet};
use crate::pattern::PatternGraph;

pub fn has_minor(g: &Multigraph, h: &PatternGraph) -> bool {
    has_minor_graph(g, &h.graph())
}

pub fn has_minor_graph(g: &Multigraph, h: &Multigraph) -> bool {
    let h = strip_isolated(&h.underlying_simple());
    let g = g.underlying_simple();
    if h.n() == 0 {
        return true;
    }
    let min_deg = (0..h.n()).map(|v| h.degree(v)).min().unwrap_or(0);
    let mut dead = HashSet::new();
    search(&g, &h, min_deg, &mut dead)
}

fn strip_isolated(g: &Multigraph) -> Multigraph {
    let keep: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
    if keep.len() == g.n() {
        return g.clone();
    }
    g.induced(VertexSet::from_slice(&keep))
}

/// Applies reductions that preserve the existence of an `h` minor when every
/// vertex of `h` has degree at least `min_deg`.
fn simplify(mut g: Multigraph, min_deg: u32, target_n: usize) -> Multigraph {
    loop {
        if g.n() <= target_n {
            return g;
        }
        let low = (0..g.n()).find(|&v| g.degree(v) == 0 || (min_deg >= 2 && g.degree(v) == 1));
        if let Some(v) = low {
            g = g.delete_vertex(v).expect("vertex in range");
            continue;
        }
        if min_deg >= 3 {
            if let Some(v) = (0..g.n()).find(|&v| g.degree(v) == 2) {
                let u = g.neighbors(v).next().expect("degree two");
                g = contract(&g, u, v);
                continue;
            }
        }
        return g;
    }
}

fn contract(g: &Multigraph, u: usize, v: usize) -> Multigraph {
    g.identify(VertexSet::from_slice(&[u, v])).expect("nonempty").graph.underlying_simple()
}

fn search(g: &Multigraph, h: &Multigraph, min_deg: u32, dead: &mut HashSet<CanonicalCode>) -> bool {
    let g = simplify(g.clone(), min_deg, h.n());
    if g.n() < h.n() || g.edge_count() < h.edge_count() {
        return false;
    }
    if g.n() == h.n() {
        return spanning_subgraph(h, &g);
    }
    let code = canonical(&g);
    if dead.contains(&code) {
        return false;
    }
    for v in 0..g.n() {
        if search(&g.delete_vertex(v).expect("vertex in range"), h, min_deg, dead) {
            return true;
        }
    }
    for (u, v, _) in g.pairs() {
        if search(&contract(&g, u, v), h, min_deg, dead) {
            return true;
        }
    }
    dead.insert(code);
    false
}

/// Whether `h` is isomorphic to a spanning subgraph of `g` (both simple, equal order).
pub(crate) fn spanning_subgraph(h: &Multigraph, g: &Multigraph) -> bool {
    let n = h.n();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
    let mut map = vec![usize::MAX; n];
    let mut used = 0u32;
    fn rec(i: usize, order: &[usize], h: &Multigraph, g: &Multigraph, map: &mut [usize], used: &mut u32) -> bool {
        if i == order.len() {
            return true;
        }
        let hv = order[i];
        for gv in 0..g.n() {
            if *used & (1 << gv) != 0 || g.degree(gv) < h.degree(hv) {
                continue;
            }
            let ok = order[..i].iter().all(|&hu| h.mult(hu, hv) == 0 || g.mult(map[hu], gv) > 0);
            if !ok {
                continue;
            }
            map[hv] = gv;
            *used |= 1 << gv;
            if rec(i + 1, order, h, g, map, used) {
                return true;
            }
            *used &= !(1 << gv);
        }
        false
    }
    rec(0, &order, h, g, &mut map, &mut used)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    #[test]
    fn kuratowski_patterns() {
        assert!(has_minor(&complete(5), &PatternGraph::K5));
        assert!(has_minor(&petersen(), &PatternGraph::K5));
        assert!(has_minor(&petersen(), &PatternGraph::K33));
        assert!(!has_minor(&cube(), &PatternGraph::K33));
        assert!(!has_minor(&cube(), &PatternGraph::K5));
        assert!(!has_minor(&octahedron(), &PatternGraph::K5));
        assert!(has_minor(&k33(), &PatternGraph::K33));
        assert!(!has_minor(&k33(), &PatternGraph::K5));
    }

    #[test]
    fn small_patterns() {
        let tri = PatternGraph::custom(complete(3), vec![]).unwrap();
        assert!(has_minor(&cycle(7), &tri));
        assert!(!has_minor(&path(7), &tri));
        let k4 = PatternGraph::custom(complete(4), vec![]).unwrap();
        assert!(has_minor(&prism(), &k4));
        assert!(!has_minor(&wheel(5).delete_vertex(0).unwrap(), &k4));
    }

    #[test]
    fn multiplicities_ignored() {
        assert!(!has_minor(&doubled_cycle(6), &PatternGraph::K5));
        assert!(has_minor(&doubled_cycle(3), &PatternGraph::custom(complete(3), vec![]).unwrap()));
    }
}
