//! Cut decomposition into 3-edge-connected, internally 4-edge-connected
//! pieces, and chains of sausages.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::format::write_mgf;
use crate::graph::{Multigraph, VertexSet, MAX_CUT_ENUMERATION};

/// One operation in the history of a decomposition component. Vertex labels
/// refer to the graph the operation was applied to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CutStep {
    /// Restricted to one connected component.
    Component { vertices: Vec<usize> },
    /// Every cut-edge deleted.
    CutEdges { edges: Vec<(usize, usize)> },
    /// `side` identified to one vertex which was then suppressed.
    TwoCut { side: Vec<usize> },
    /// `side` identified to one vertex of degree three.
    ThreeCut { side: Vec<usize> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionReport {
    pub components: Vec<Multigraph>,
    pub provenance: Vec<Vec<CutStep>>,
}

impl DecompositionReport {
    /// mgf blocks separated by blank lines, each preceded by its history.
    pub fn to_mgf(&self) -> String {
        let mut out = String::new();
        for (i, (g, steps)) in self.components.iter().zip(&self.provenance).enumerate() {
            if i > 0 {
                out.push('\n');
            }
            let _ = writeln!(out, "# component {i}");
            for s in steps {
                let _ = writeln!(out, "# {}", describe_step(s));
            }
            out.push_str(&write_mgf(g));
        }
        out
    }
}

fn describe_step(s: &CutStep) -> String {
    match s {
        CutStep::Component { vertices } => format!("component {vertices:?}"),
        CutStep::CutEdges { edges } => format!("delete cut-edges {edges:?}"),
        CutStep::TwoCut { side } => format!("2-cut: identify {side:?} and suppress"),
        CutStep::ThreeCut { side } => format!("3-cut: identify {side:?}"),
    }
}

/// Applies the cut-edge, 2-cut and 3-cut steps until every component is
/// 3-edge-connected and internally 4-edge-connected. The least violating cut
/// is always processed first; components below two vertices are dropped.
pub fn decompose(g: &Multigraph) -> Result<DecompositionReport> {
    if g.n() > MAX_CUT_ENUMERATION {
        return Err(Error::TooLarge { n: g.n(), max: MAX_CUT_ENUMERATION });
    }
    let mut work: Vec<(Multigraph, Vec<CutStep>)> = vec![(g.clone(), Vec::new())];
    let mut report = DecompositionReport { components: Vec::new(), provenance: Vec::new() };
    while let Some((h, steps)) = work.pop() {
        if h.n() < 2 {
            continue;
        }
        let comps = h.components();
        if comps.len() > 1 {
            for c in comps.into_iter().rev() {
                let mut s = steps.clone();
                s.push(CutStep::Component { vertices: c.to_vec() });
                work.push((h.induced(c), s));
            }
            continue;
        }
        let bridges = cut_edges(&h);
        if !bridges.is_empty() {
            let mut next = h.clone();
            for &(u, v) in &bridges {
                next.set(u, v, 0);
            }
            let mut s = steps;
            s.push(CutStep::CutEdges { edges: bridges });
            work.push((next, s));
            continue;
        }
        if let Some(x) = h.first_cut_below(3, false) {
            let y = x.complement(h.n());
            for side in [y, x] {
                let (merged, map) = h.identify_with_map(side).expect("side nonempty");
                let root = map[side.min().unwrap()];
                let piece = merged.suppress(root).expect("a 2-cut leaves degree two");
                let mut s = steps.clone();
                s.push(CutStep::TwoCut { side: side.to_vec() });
                work.push((piece, s));
            }
            continue;
        }
        if let Some(x) = h.first_cut_below(4, true) {
            let y = x.complement(h.n());
            for side in [y, x] {
                let mut s = steps.clone();
                s.push(CutStep::ThreeCut { side: side.to_vec() });
                work.push((h.identify(side).expect("side nonempty").graph, s));
            }
            continue;
        }
        report.components.push(h);
        report.provenance.push(steps);
    }
    Ok(report)
}

/// Edges of multiplicity one whose removal disconnects their component.
fn cut_edges(g: &Multigraph) -> Vec<(usize, usize)> {
    let all = VertexSet::full(g.n());
    g.pairs()
        .filter(|&(u, v, k)| {
            if k != 1 {
                return false;
            }
            let mut h = g.clone();
            h.set(u, v, 0);
            !h.reach(u, all).contains(v)
        })
        .map(|(u, v, _)| (u, v))
        .collect()
}

/// A chain of sausages: `vertices` in path order, lesser endpoint first.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SausageChain {
    pub vertices: Vec<usize>,
}

impl SausageChain {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn set(&self) -> VertexSet {
        VertexSet::from_slice(&self.vertices)
    }

    /// `G.(V \ X)`, which must be a doubled cycle of length `order + 1`.
    pub fn certificate(&self, g: &Multigraph) -> Result<Multigraph> {
        let rest = self.set().complement(g.n());
        Ok(g.identify(rest)?.graph)
    }

    pub fn is_valid(&self, g: &Multigraph) -> bool {
        self.order() >= 2
            && self.vertices.iter().all(|&v| v < g.n())
            && self.set().len() == self.order()
            && self.vertices.windows(2).all(|w| g.mult(w[0], w[1]) == 2)
            && matches!(self.certificate(g), Ok(c) if c.n() == self.order() + 1 && is_doubled_cycle(&c))
    }
}

/// Every multiplicity is 0 or 2 and the doubled pairs form one Hamiltonian cycle
/// on at least three vertices.
pub fn is_doubled_cycle(g: &Multigraph) -> bool {
    g.n() >= 3
        && g.pairs().all(|(_, _, k)| k == 2)
        && (0..g.n()).all(|v| g.degree(v) == 4)
        && g.is_connected()
}

/// Every multiplicity is 0 or 2 and the doubled pairs form a Hamiltonian path.
pub fn is_doubled_path(g: &Multigraph) -> bool {
    g.n() >= 2
        && g.pairs().all(|(_, _, k)| k == 2)
        && (0..g.n()).all(|v| g.degree(v) <= 4)
        && (0..g.n()).filter(|&v| g.degree(v) == 2).count() == 2
        && g.is_connected()
}

/// Doubled edges between degree-four vertices; each vertex has at most two.
fn sausage_links(g: &Multigraph) -> Vec<Vec<usize>> {
    let mut links = vec![Vec::new(); g.n()];
    for (u, v, k) in g.pairs() {
        if k == 2 && g.degree(u) == 4 && g.degree(v) == 4 {
            links[u].push(v);
            links[v].push(u);
        }
    }
    links
}

/// All maximal chains of sausages of order at least two. When the links close
/// into a cycle every path omitting one cycle vertex is maximal, so each is reported.
pub fn find_sausages(g: &Multigraph) -> Vec<SausageChain> {
    let links = sausage_links(g);
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for s in 0..g.n() {
        if seen.contains(s) || links[s].is_empty() {
            continue;
        }
        // collect the link component
        let mut comp = VertexSet::singleton(s);
        let mut stack = vec![s];
        while let Some(x) = stack.pop() {
            for &y in &links[x] {
                if !comp.contains(y) {
                    comp = comp.insert(y);
                    stack.push(y);
                }
            }
        }
        seen = seen.union(comp);
        let ends: Vec<usize> = comp.iter().filter(|&v| links[v].len() == 1).collect();
        let paths: Vec<Vec<usize>> = if let Some(&start) = ends.first() {
            vec![walk(&links, start, None, comp.len())]
        } else {
            let cyc = walk(&links, comp.min().unwrap(), None, comp.len());
            let k = cyc.len();
            (0..k).map(|skip| (1..k).map(|i| cyc[(skip + i) % k]).collect()).collect()
        };
        for path in paths {
            maximal_valid_subpaths(g, &path, &mut out);
        }
    }
    out.sort_by(|a, b| a.vertices.cmp(&b.vertices));
    out.dedup();
    out
}

/// Adds the valid contiguous subpaths of `path` not inside an already found
/// chain. Subpaths of a valid chain are valid, so longest-first suffices.
fn maximal_valid_subpaths(g: &Multigraph, path: &[usize], out: &mut Vec<SausageChain>) {
    let k = path.len();
    for len in (2..=k).rev() {
        for i in 0..=k - len {
            let set = VertexSet::from_slice(&path[i..i + len]);
            if out.iter().any(|c| set.intersection(c.set()) == set) {
                continue;
            }
            let chain = oriented(path[i..i + len].to_vec());
            if chain.is_valid(g) {
                out.push(chain);
            }
        }
    }
}

fn walk(links: &[Vec<usize>], start: usize, prev: Option<usize>, len: usize) -> Vec<usize> {
    let mut path = vec![start];
    let mut prev = prev;
    let mut cur = start;
    while path.len() < len {
        let next = links[cur].iter().copied().find(|&y| Some(y) != prev && !path.contains(&y));
        match next {
            Some(y) => {
                path.push(y);
                prev = Some(cur);
                cur = y;
            }
            None => break,
        }
    }
    path
}

fn oriented(mut path: Vec<usize>) -> SausageChain {
    if path.first() > path.last() {
        path.reverse();
    }
    SausageChain { vertices: path }
}

/// Identifies the adjacent chain vertices `x`, `y`; requires a chain of order ≥ 3
/// containing both.
pub fn sausage_shorten(g: &Multigraph, x: usize, y: usize) -> Result<Multigraph> {
    let ok = find_sausages(g).iter().any(|c| {
        c.order() >= 3 && c.vertices.windows(2).any(|w| (w[0], w[1]) == (x, y) || (w[0], w[1]) == (y, x))
    });
    if !ok {
        return Err(Error::Precondition(format!(
            "{x} and {y} are not adjacent in a chain of sausages of order at least 3"
        )));
    }
    Ok(g.identify(VertexSet::from_slice(&[x, y]))?.graph)
}

#[derive(Clone, Debug)]
pub struct Reduction {
    pub graph: Multigraph,
    /// Old vertex to reduced vertex.
    pub map: Vec<usize>,
    /// Reduced vertex pairs that replace a chain of order at least 3.
    pub shortened: Vec<(usize, usize)>,
}

/// Shortens chains until none of order ≥ 3 remains.
pub fn sausage_reduce(g: &Multigraph) -> Multigraph {
    sausage_reduce_tracked(g).graph
}

pub fn sausage_reduce_tracked(g: &Multigraph) -> Reduction {
    let long: Vec<SausageChain> = find_sausages(g).into_iter().filter(|c| c.order() >= 3).collect();
    let mut cur = g.clone();
    let mut map: Vec<usize> = (0..g.n()).collect();
    while let Some(c) = find_sausages(&cur).into_iter().find(|c| c.order() >= 3) {
        let (next, step) = cur
            .identify_with_map(VertexSet::from_slice(&c.vertices[..2]))
            .expect("nonempty");
        for m in map.iter_mut() {
            *m = step[*m];
        }
        cur = next;
    }
    let mut shortened: Vec<(usize, usize)> = long
        .iter()
        .filter_map(|c| {
            let img = VertexSet::from_slice(&c.vertices.iter().map(|&v| map[v]).collect::<Vec<_>>());
            let v = img.to_vec();
            (v.len() == 2).then(|| (v[0], v[1]))
        })
        .collect();
    shortened.sort();
    shortened.dedup();
    Reduction { graph: cur, map, shortened }
}

/// Lengthens `chain` to `target_order` by subdividing its last doubled link.
pub fn expand_sausage(g: &Multigraph, chain: &SausageChain, target_order: usize) -> Result<Multigraph> {
    if !chain.is_valid(g) {
        return Err(Error::Precondition(format!("{:?} is not a chain of sausages", chain.vertices)));
    }
    if target_order < chain.order() {
        return Err(Error::Precondition(format!(
            "target order {target_order} below chain order {}",
            chain.order()
        )));
    }
    let k = chain.order();
    let (mut a, b) = (chain.vertices[k - 2], chain.vertices[k - 1]);
    let mut h = g.clone();
    for _ in k..target_order {
        h = h.add_vertex()?;
        let z = h.n() - 1;
        h.set(a, b, 0);
        h.set(a, z, 2);
        h.set(z, b, 2);
        a = z;
    }
    Ok(h)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::is_isomorphic;
    use crate::graph::families::*;

    fn sizes(r: &DecompositionReport) -> Vec<usize> {
        let mut v: Vec<usize> = r.components.iter().map(Multigraph::n).collect();
        v.sort();
        v
    }

    #[test]
    fn prism_splits_into_two_k4() {
        let r = decompose(&prism()).unwrap();
        assert_eq!(sizes(&r), vec![4, 4]);
        assert!(r.components.iter().all(|c| is_isomorphic(c, &complete(4))));
        assert!(r.provenance.iter().all(|p| matches!(p.last(), Some(CutStep::ThreeCut { .. }))));
    }

    #[test]
    fn trees_vanish_and_cube_survives() {
        let r = decompose(&path(6)).unwrap();
        assert!(r.components.is_empty());
        let r = decompose(&cube()).unwrap();
        assert_eq!(r.components.len(), 1);
        assert!(is_isomorphic(&r.components[0], &cube()));
        assert!(r.provenance[0].is_empty());
    }

    #[test]
    fn two_cut_step() {
        // two K4 joined by two disjoint edges: each side becomes K4 with one edge
        // subdivided and then suppressed, i.e. K4 again
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
                edges.push((u + 4, v + 4));
            }
        }
        edges.push((0, 4));
        edges.push((1, 5));
        let g = Multigraph::from_edges(8, &edges).unwrap();
        let r = decompose(&g).unwrap();
        assert_eq!(sizes(&r), vec![4, 4]);
        for c in &r.components {
            assert!(is_isomorphic(c, &complete(4).add_edges(0, 1, 1).unwrap()));
        }
        // a bridge between two K4s is deleted
        let mut edges2: Vec<(usize, usize)> = edges[..12].to_vec();
        edges2.push((0, 4));
        let g = Multigraph::from_edges(8, &edges2).unwrap();
        let r = decompose(&g).unwrap();
        assert_eq!(sizes(&r), vec![4, 4]);
        assert!(r.to_mgf().contains("cut-edges"));
    }

    #[test]
    fn components_meet_connectivity() {
        let g = Multigraph::build(7, &[(0, 1, 2), (1, 2, 1), (2, 0, 1), (2, 3, 1), (3, 4, 3), (4, 5, 1), (5, 6, 2), (6, 3, 1), (5, 3, 1)])
            .unwrap();
        let r = decompose(&g).unwrap();
        for c in &r.components {
            assert!(c.edge_connectivity_at_least(3, false).unwrap());
            assert!(c.edge_connectivity_at_least(4, true).unwrap());
        }
    }

    #[test]
    fn sausages_of_doubled_cycle() {
        let g = doubled_cycle(6);
        let chains = find_sausages(&g);
        assert_eq!(chains.len(), 6);
        assert!(chains.iter().all(|c| c.order() == 5));
        assert!(find_sausages(&cube()).is_empty());
        let r = sausage_reduce(&doubled_cycle(9));
        assert!(is_isomorphic(&r, &doubled_cycle(3)));
        assert!(is_isomorphic(&sausage_reduce(&cube()), &cube()));
    }

    #[test]
    fn shorten_and_expand() {
        let g = doubled_cycle(7);
        let chains = find_sausages(&g);
        let c = &chains[0];
        let s = sausage_shorten(&g, c.vertices[0], c.vertices[1]).unwrap();
        assert!(is_isomorphic(&s, &doubled_cycle(6)));
        let e = expand_sausage(&doubled_cycle(4), &find_sausages(&doubled_cycle(4))[0], 4).unwrap();
        assert!(is_isomorphic(&e, &doubled_cycle(5)));
        // order-two chains cannot be shortened
        let g3 = doubled_cycle(3);
        let c3 = &find_sausages(&g3)[0];
        assert_eq!(c3.order(), 2);
        assert!(sausage_shorten(&g3, c3.vertices[0], c3.vertices[1]).is_err());
    }

    #[test]
    fn chain_inside_a_larger_graph() {
        // K4 with edge 01 replaced by a doubled path 0 = a = b = 1 of two sausages,
        // attached through single edges at 0 and 1 to keep degrees at four
        let g = Multigraph::build(6, &[(0, 2, 1), (0, 3, 1), (1, 2, 1), (1, 3, 1), (2, 3, 1), (0, 4, 2), (4, 5, 2), (5, 1, 2)])
            .unwrap();
        let chains = find_sausages(&g);
        assert_eq!(chains.len(), 1);
        let c = &chains[0];
        assert!(c.order() >= 2);
        let bigger = expand_sausage(&g, c, c.order() + 3).unwrap();
        let red = sausage_reduce_tracked(&bigger);
        assert_eq!(red.graph.n(), g.n() - c.order() + 2);
        assert_eq!(red.shortened.len(), 1);
        assert!(expand_sausage(&g, c, 1).is_err());
    }

    #[test]
    fn chain_strictly_inside_its_link_path() {
        // triangle 0 1 2 with 1 = 3 = 4 = 5 = 0; the whole link path 1..0 is no
        // chain, but dropping either end leaves one
        let g = Multigraph::build(6, &[(0, 1, 1), (0, 2, 1), (1, 2, 1), (1, 3, 2), (3, 4, 2), (4, 5, 2), (5, 0, 2)])
            .unwrap();
        let chains = find_sausages(&g);
        let expect = vec![SausageChain { vertices: vec![0, 5, 4, 3] }, SausageChain { vertices: vec![1, 3, 4, 5] }];
        assert_eq!(chains, expect);
        let reduced = sausage_reduce(&g);
        assert!(find_sausages(&reduced).iter().all(|c| c.order() <= 2));
    }
}
