//! Recognizers for rooted graphs that cannot immerse Eyeglasses or W4.

use serde::{Deserialize, Serialize};

use crate::canon::is_isomorphic;
use crate::classify::{classes_of_map, match_cycle_plus, quotient, small_sets, CycleVariant};
use crate::error::{Error, Result};
use crate::graph::{families, RootedMultigraph, VertexSet};
use crate::planar::outer_face_cyclic;
use crate::reduction::is_doubled_path;
use crate::segment::{find_segmentation_relative, Segmentation};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum EyeglassesObstruction {
    /// Subcubic with the root neighbours `(s0, s1, t0, t1)` on one face in that order.
    Type1 { order: [usize; 4] },
    /// Both roots joined to the two ends `u`, `v` of a doubled path.
    Type2 { ends: (usize, usize) },
    /// K4 minus an edge.
    Type3,
}

/// Requires two roots of degree two and at least four vertices.
pub fn eyeglasses_obstruction(r: &RootedMultigraph) -> Result<Option<EyeglassesObstruction>> {
    let g = &r.graph;
    let [x0, x1] = r.roots[..] else {
        return Err(Error::Precondition(format!("need two roots, got {}", r.roots.len())));
    };
    if g.n() < 4 || g.degree(x0) != 2 || g.degree(x1) != 2 {
        return Err(Error::Precondition("roots must have degree 2 and |V| ≥ 4".into()));
    }
    let roots = VertexSet::from_slice(&[x0, x1]);
    let rest = roots.complement(g.n());
    let inner = g.induced(rest);
    let relabel = |v: usize| rest.iter().position(|u| u == v);

    let n0: Vec<usize> = g.neighbors(x0).collect();
    let n1: Vec<usize> = g.neighbors(x1).collect();
    let subcubic = rest.iter().all(|v| g.degree(v) == 3);
    if subcubic && n0.len() == 2 && n1.len() == 2 {
        let order = [n0[0], n1[0], n0[1], n1[1]];
        let distinct = VertexSet::from_slice(&order);
        if distinct.len() == 4 && distinct.intersection(roots).is_empty() {
            let local: Vec<usize> = order.iter().map(|&v| relabel(v).unwrap()).collect();
            if outer_face_cyclic(&inner, &local) {
                return Ok(Some(EyeglassesObstruction::Type1 { order }));
            }
        }
    }

    if n0.len() == 2 && n0 == n1 && VertexSet::from_slice(&n0).intersection(roots).is_empty() {
        let (u, v) = (n0[0], n0[1]);
        let (lu, lv) = (relabel(u).unwrap(), relabel(v).unwrap());
        if is_doubled_path(&inner) && inner.degree(lu) == 2 && inner.degree(lv) == 2 {
            return Ok(Some(EyeglassesObstruction::Type2 { ends: (u, v) }));
        }
    }

    let k4e = families::complete(4).with_multiplicity(0, 1, 0)?;
    if is_isomorphic(g, &k4e) {
        return Ok(Some(EyeglassesObstruction::Type3));
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum W4Obstruction {
    /// A (2,3)-segmentation of width 4 whose head contains the root.
    TypeI { segmentation: Segmentation },
    /// Identifying `w` gives a doubled cycle through the root plus extra edges.
    TypeII { variant: CycleVariant, w: Vec<usize>, cycle: Vec<Vec<usize>> },
}

/// Requires one root of degree 4 or 5 in a 3-edge-connected, internally
/// 4-edge-connected graph on at least five vertices.
pub fn w4_obstruction(r: &RootedMultigraph) -> Result<Option<W4Obstruction>> {
    let g = &r.graph;
    let [x] = r.roots[..] else {
        return Err(Error::Precondition(format!("need one root, got {}", r.roots.len())));
    };
    if !(4..=5).contains(&g.degree(x)) {
        return Err(Error::Precondition(format!("root degree {} not in {{4, 5}}", g.degree(x))));
    }
    if g.n() < 5 || !g.edge_connectivity_at_least(3, false)? || !g.edge_connectivity_at_least(4, true)? {
        return Err(Error::Precondition(
            "need |V| ≥ 5, 3-edge-connectivity and internal 4-edge-connectivity".into(),
        ));
    }
    if let Some(s) = find_segmentation_relative(g, 2, 3, 4, VertexSet::singleton(x)) {
        return Ok(Some(W4Obstruction::TypeI { segmentation: s }));
    }
    for w in small_sets(g.n(), VertexSet::singleton(x)) {
        let (star, map) = quotient(g, &[w]);
        let Some(m) = match_cycle_plus(&star, map[x], map[w.min().unwrap()]) else { continue };
        if m.variant == CycleVariant::C && w.len() != 2 {
            continue;
        }
        let classes = classes_of_map(&map, star.n());
        return Ok(Some(W4Obstruction::TypeII {
            variant: m.variant,
            w: w.to_vec(),
            cycle: m.cycle.iter().map(|&c| classes[c].clone()).collect(),
        }));
    }
    Ok(None)
}

/// Doubled path on `len` vertices whose ends are both joined to two new roots.
pub fn eyeglasses_type2_example(len: usize) -> RootedMultigraph {
    let p = families::doubled_path(len);
    let mut g = p.add_vertex().and_then(|g| g.add_vertex()).expect("small");
    let (x0, x1) = (len, len + 1);
    for x in [x0, x1] {
        g = g.add_edges(x, 0, 1).and_then(|g| g.add_edges(x, len - 1, 1)).expect("in range");
    }
    RootedMultigraph::new(g, vec![x0, x1]).expect("distinct roots")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::immersion::immerses_rooted;
    use crate::graph::Multigraph;
    use crate::pattern::PatternGraph;

    #[test]
    fn k4_minus_edge_is_type3() {
        let g = families::complete(4).with_multiplicity(0, 1, 0).unwrap();
        let r = RootedMultigraph::new(g, vec![0, 1]).unwrap();
        assert_eq!(eyeglasses_obstruction(&r).unwrap(), Some(EyeglassesObstruction::Type3));
        assert!(immerses_rooted(&r, &PatternGraph::Eyeglasses).unwrap().is_none());
    }

    #[test]
    fn doubled_path_is_type2() {
        for len in 2..5 {
            let r = eyeglasses_type2_example(len);
            assert!(matches!(eyeglasses_obstruction(&r).unwrap(), Some(EyeglassesObstruction::Type2 { .. })));
            assert!(immerses_rooted(&r, &PatternGraph::Eyeglasses).unwrap().is_none());
        }
    }

    #[test]
    fn planar_ladder_is_type1() {
        // 4-cycle a b c d with chord-free square; roots x0 on (a, c), x1 on (b, d)
        let g = Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (4, 0), (4, 2), (5, 1), (5, 3)]).unwrap();
        let r = RootedMultigraph::new(g, vec![4, 5]).unwrap();
        assert!(matches!(eyeglasses_obstruction(&r).unwrap(), Some(EyeglassesObstruction::Type1 { .. })));
        assert!(immerses_rooted(&r, &PatternGraph::Eyeglasses).unwrap().is_none());
    }

    #[test]
    fn eyeglasses_itself_has_no_obstruction() {
        let r = RootedMultigraph::new(PatternGraph::Eyeglasses.graph(), vec![0, 3]).unwrap();
        assert_eq!(eyeglasses_obstruction(&r).unwrap(), None);
        let bad = RootedMultigraph::new(families::complete(4), vec![0, 1]).unwrap();
        assert!(eyeglasses_obstruction(&bad).is_err());
    }

    #[test]
    fn w4_cases() {
        let r = RootedMultigraph::new(families::doubled_cycle(6), vec![2]).unwrap();
        assert!(matches!(w4_obstruction(&r).unwrap(), Some(W4Obstruction::TypeI { .. })));
        let r = RootedMultigraph::new(families::wheel(4), vec![0]).unwrap();
        assert_eq!(w4_obstruction(&r).unwrap(), None);
        assert!(immerses_rooted(&r, &PatternGraph::W4).unwrap().is_some());
        // doubled 5-cycle plus x-v-w, root x of degree 5
        let mut g = families::doubled_cycle(5);
        g = g.add_edges(0, 1, 1).unwrap().add_edges(1, 2, 1).unwrap();
        let r = RootedMultigraph::new(g, vec![0]).unwrap();
        match w4_obstruction(&r).unwrap() {
            // W = {2} gives II B; W = {1, 2} gives II C, found first
            Some(W4Obstruction::TypeII { variant, w, .. }) => {
                assert!(variant == CycleVariant::B || (variant == CycleVariant::C && w.len() == 2))
            }
            Some(W4Obstruction::TypeI { .. }) => {}
            None => panic!("expected an obstruction"),
        }
        assert!(immerses_rooted(&r, &PatternGraph::W4).unwrap().is_none());
        let bad = RootedMultigraph::new(families::cube(), vec![0]).unwrap();
        assert!(w4_obstruction(&bad).is_err());
    }
}
