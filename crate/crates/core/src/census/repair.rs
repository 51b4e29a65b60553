//! Multiplicity assignments over a fixed simple graph: edge-minimal repairs
//! meeting the census cut conditions, and their K3,3-free upward closure.

use std::collections::{HashSet, VecDeque};

use crate::canon::{canonical, CanonicalCode};
use crate::graph::{Multigraph, VertexSet};
use crate::immersion::immerses;
use crate::pattern::PatternGraph;

/// Default multiplicity ceiling: no immersion of a 9-edge pattern needs more.
pub const DEFAULT_CAP: u32 = 9;

/// Least `X` (never containing vertex `n-1`) violating a census cut condition,
/// with the bound it misses: `d ≥ 3` always, `d ≥ 4` with both sides ≥ 2, and
/// `d ≥ 5` with both sides ≥ 3.
pub fn first_census_violation(g: &Multigraph) -> Option<(VertexSet, u32)> {
    let n = g.n();
    if n < 2 {
        return None;
    }
    let half = 1u32 << (n - 1);
    let degrees = g.degrees();
    let mut d = vec![0u32; half as usize];
    for mask in 1..half {
        let v = (u32::BITS - 1 - mask.leading_zeros()) as usize;
        let rest = mask & !(1 << v);
        d[mask as usize] = d[rest as usize] + degrees[v] - 2 * g.edges_to(v, VertexSet(rest));
        let s = mask.count_ones() as usize;
        let small = s.min(n - s);
        let need = match small {
            0 => 0,
            1 => 3,
            2 => 4,
            _ => 5,
        };
        if d[mask as usize] < need {
            return Some((VertexSet(mask), need));
        }
    }
    None
}

/// 3-edge-connected, internally 4-edge-connected, and `d(X) ≥ 5` for
/// `3 ≤ |X| ≤ ⌊n/2⌋`.
pub fn meets_census_conditions(g: &Multigraph) -> bool {
    first_census_violation(g).is_none()
}

/// A simple graph with its edges fixed in `pairs()` order, so assignments are
/// plain multiplicity vectors.
#[derive(Clone, Debug)]
pub struct Skeleton {
    pub base: Multigraph,
    pub edges: Vec<(usize, usize)>,
}

impl Skeleton {
    pub fn new(simple: &Multigraph) -> Self {
        let base = simple.underlying_simple();
        let edges = base.pairs().map(|(u, v, _)| (u, v)).collect();
        Skeleton { base, edges }
    }

    pub fn realize(&self, mult: &[u32]) -> Multigraph {
        let mut g = self.base.clone();
        for (&(u, v), &k) in self.edges.iter().zip(mult) {
            g.set(u, v, k);
        }
        g
    }

    fn crossing(&self, x: VertexSet) -> Vec<usize> {
        (0..self.edges.len())
            .filter(|&i| {
                let (u, v) = self.edges[i];
                x.contains(u) != x.contains(v)
            })
            .collect()
    }
}

/// Every edge-minimal assignment (multiplicities in `1..=cap`) meeting the
/// census cut conditions, regardless of immersions.
pub fn minimal_assignments(simple: &Multigraph, cap: u32) -> Vec<Vec<u32>> {
    let sk = Skeleton::new(simple);
    if !sk.base.is_connected() || sk.base.n() < 2 {
        return Vec::new();
    }
    let mut found: Vec<Vec<u32>> = Vec::new();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut stack = vec![vec![1u32; sk.edges.len()]];
    while let Some(m) = stack.pop() {
        if !seen.insert(m.clone()) {
            continue;
        }
        if found.iter().any(|f| dominates(&m, f)) {
            continue;
        }
        let g = sk.realize(&m);
        match first_census_violation(&g) {
            None => found.push(m),
            Some((x, _)) => {
                for i in sk.crossing(x) {
                    if m[i] < cap {
                        let mut next = m.clone();
                        next[i] += 1;
                        stack.push(next);
                    }
                }
            }
        }
    }
    found.retain(|m| is_minimal(&sk, m));
    found.sort();
    found
}

fn dominates(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x >= y)
}

fn is_minimal(sk: &Skeleton, m: &[u32]) -> bool {
    (0..m.len()).all(|i| {
        if m[i] == 1 {
            return true;
        }
        let mut lower = m.to_vec();
        lower[i] -= 1;
        !meets_census_conditions(&sk.realize(&lower))
    })
}

/// Edge-minimal multigraphs over `simple` meeting the census cut conditions
/// and not immersing K3,3; one per isomorphism class.
pub fn repair(simple: &Multigraph, cap: u32) -> Vec<Multigraph> {
    let sk = Skeleton::new(simple);
    let mut seen = HashSet::new();
    minimal_assignments(simple, cap)
        .into_iter()
        .map(|m| sk.realize(&m))
        .filter(|g| seen.insert(canonical(g)))
        .filter(|g| immerses(g, &PatternGraph::K33).is_none())
        .collect()
}

/// All multigraphs over the same simple graph with multiplicities ≤ `cap`
/// that meet the census conditions and do not immerse K3,3, reached by
/// single-edge bumps from `repaired`. Conditions are re-checked on each graph.
/// Also returns the bumped graphs that do immerse K3,3 (the frontier).
pub fn obstruction_closure(repaired: &[Multigraph], cap: u32) -> (Vec<Multigraph>, Vec<Multigraph>) {
    let mut visited: HashSet<CanonicalCode> = HashSet::new();
    let mut queue: VecDeque<Multigraph> = VecDeque::new();
    let mut closed = Vec::new();
    let mut frontier = Vec::new();
    for g in repaired {
        if visited.insert(canonical(g)) && meets_census_conditions(g) && immerses(g, &PatternGraph::K33).is_none() {
            queue.push_back(g.clone());
        }
    }
    while let Some(g) = queue.pop_front() {
        for (u, v, k) in g.pairs().collect::<Vec<_>>() {
            if k >= cap {
                continue;
            }
            let mut h = g.clone();
            h.set(u, v, k + 1);
            if !visited.insert(canonical(&h)) || !meets_census_conditions(&h) {
                continue;
            }
            if immerses(&h, &PatternGraph::K33).is_none() {
                queue.push_back(h);
            } else {
                frontier.push(h);
            }
        }
        closed.push(g);
    }
    closed.sort_by_cached_key(canonical);
    frontier.sort_by_cached_key(canonical);
    (closed, frontier)
}
