//! Exact immersion search.
//!
//! After capping parallel classes at `|E(H)|`, terminal injections are
//! enumerated with degree feasibility and one representative per orbit of the
//! pattern's (root-fixing) automorphism group. Each injection is then routed
//! by backtracking edge-disjoint path packing: demands in pattern edge order,
//! candidate paths by increasing length then lexicographically. Every partial
//! packing is checked against the cut condition (for each vertex set `X`, the
//! unrouted demands crossing `X` fit into the residual `d(X)`).

use serde::{Deserialize, Serialize};

use crate::canon::automorphisms;
use crate::error::{Error, Result};
use crate::graph::{Multigraph, RootedMultigraph};
use crate::pattern::PatternGraph;

/// Cut pruning enumerates `2^(n-1)` vertex sets per routed path.
const CUT_PRUNE_MAX_N: usize = 14;

/// Terminal injection plus one path (vertex sequence) per pattern edge.
///
/// `paths[i]` realizes the `i`-th entry of the pattern's
/// [`edge_list`](Multigraph::edge_list), parallel copies listed separately.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ImmersionWitness {
    pub terminal_map: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

impl ImmersionWitness {
    /// Pairs `(G-path endpoints)` of every pattern edge, for display.
    pub fn describe(&self, pattern: &Multigraph) -> String {
        let mut s = format!("terminals {:?}\n", self.terminal_map);
        for ((a, b), p) in pattern.edge_list().iter().zip(&self.paths) {
            let path: Vec<String> = p.iter().map(usize::to_string).collect();
            s.push_str(&format!("{a}-{b}: {}\n", path.join(" ")));
        }
        s
    }
}

/// Reduces every parallel class to at most `|E(H)|` edges; this never changes
/// whether `H` immerses.
pub fn cap_multiplicities(g: &Multigraph, h: &PatternGraph) -> Multigraph {
    cap_at(g, h.edge_count())
}

pub(crate) fn cap_at(g: &Multigraph, cap: u32) -> Multigraph {
    let mut out = g.clone();
    for (u, v, k) in g.pairs() {
        if k > cap {
            out.set(u, v, cap);
        }
    }
    out
}

pub fn immerses(g: &Multigraph, h: &PatternGraph) -> Option<ImmersionWitness> {
    search(g, &h.graph(), &[], &[])
}

/// Rooted immersion: pattern root `i` must land on host root `i`.
pub fn immerses_rooted(g: &RootedMultigraph, h: &PatternGraph) -> Result<Option<ImmersionWitness>> {
    let roots = h.roots();
    if roots.len() != g.roots.len() {
        return Err(Error::RootCountMismatch { host: g.roots.len(), pattern: roots.len() });
    }
    Ok(search(&g.graph, &h.graph(), &roots, &g.roots))
}

/// Immersion of an arbitrary pattern multigraph with pattern vertex
/// `pattern_roots[i]` pinned to host vertex `host_roots[i]`.
pub fn immerses_graph(
    g: &Multigraph,
    h: &Multigraph,
    pattern_roots: &[usize],
    host_roots: &[usize],
) -> Option<ImmersionWitness> {
    search(g, h, pattern_roots, host_roots)
}

pub fn verify_witness(g: &Multigraph, h: &PatternGraph, w: &ImmersionWitness) -> bool {
    verify_graph_witness(g, &h.graph(), w)
}

pub fn verify_graph_witness(g: &Multigraph, h: &Multigraph, w: &ImmersionWitness) -> bool {
    let n = g.n();
    if w.terminal_map.len() != h.n() || w.terminal_map.iter().any(|&v| v >= n) {
        return false;
    }
    let mut seen = vec![false; n];
    for &v in &w.terminal_map {
        if seen[v] {
            return false;
        }
        seen[v] = true;
    }
    let edges = h.edge_list();
    if edges.len() != w.paths.len() {
        return false;
    }
    let mut used = vec![0u32; n * n];
    for (&(a, b), path) in edges.iter().zip(&w.paths) {
        let (s, t) = (w.terminal_map[a], w.terminal_map[b]);
        let ok_ends = matches!((path.first(), path.last()), (Some(&p), Some(&q)) if (p, q) == (s, t) || (p, q) == (t, s));
        if !ok_ends || path.len() < 2 {
            return false;
        }
        for step in path.windows(2) {
            let (u, v) = (step[0], step[1]);
            if u >= n || v >= n || u == v {
                return false;
            }
            used[u * n + v] += 1;
            used[v * n + u] += 1;
            if used[u * n + v] > g.mult(u, v) {
                return false;
            }
        }
    }
    true
}

fn search(g: &Multigraph, h: &Multigraph, pattern_roots: &[usize], host_roots: &[usize]) -> Option<ImmersionWitness> {
    let hn = h.n();
    let edge_total = h.edge_count();
    if hn > g.n() {
        return None;
    }
    if edge_total == 0 {
        // only the injection matters
        let mut map = vec![usize::MAX; hn];
        for (&p, &q) in pattern_roots.iter().zip(host_roots) {
            map[p] = q;
        }
        let mut free = (0..g.n()).filter(|v| !host_roots.contains(v));
        for slot in map.iter_mut() {
            if *slot == usize::MAX {
                *slot = free.next()?;
            }
        }
        return Some(ImmersionWitness { terminal_map: map, paths: Vec::new() });
    }
    let g = cap_at(g, edge_total);
    if g.edge_count() < edge_total {
        return None;
    }
    let mut gdeg = g.degrees();
    let mut hdeg = h.degrees();
    {
        gdeg.sort_unstable_by(|a, b| b.cmp(a));
        hdeg.sort_unstable_by(|a, b| b.cmp(a));
        if hdeg.iter().zip(&gdeg).any(|(a, b)| a > b) {
            return None;
        }
    }
    let gdeg = g.degrees();
    let hdeg = h.degrees();

    let mut colors = vec![0u32; hn];
    for (i, &r) in pattern_roots.iter().enumerate() {
        colors[r] = i as u32 + 1;
    }
    let autos: Vec<Vec<usize>> = automorphisms(h, &colors)
        .into_iter()
        .filter(|a| a.iter().enumerate().any(|(i, &j)| i != j))
        .collect();

    let mut fixed = vec![None; hn];
    for (&p, &q) in pattern_roots.iter().zip(host_roots) {
        if gdeg[q] < hdeg[p] {
            return None;
        }
        fixed[p] = Some(q);
    }
    let demands = h.edge_list();
    let mut router = Router::new(&g, demands.len());
    let mut map = vec![usize::MAX; hn];
    let mut used = vec![false; g.n()];
    for &q in host_roots {
        used[q] = true;
    }
    let mut found = None;
    assign(0, &g, h, &gdeg, &hdeg, &fixed, &autos, &demands, &mut map, &mut used, &mut router, &mut found);
    found
}

#[allow(clippy::too_many_arguments)]
fn assign(
    i: usize,
    g: &Multigraph,
    h: &Multigraph,
    gdeg: &[u32],
    hdeg: &[u32],
    fixed: &[Option<usize>],
    autos: &[Vec<usize>],
    demands: &[(usize, usize)],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    router: &mut Router,
    found: &mut Option<ImmersionWitness>,
) -> bool {
    let hn = h.n();
    if i == hn {
        // one representative per automorphism orbit: the lexicographically least
        for a in autos {
            let image: Vec<usize> = (0..hn).map(|v| map[a[v]]).collect();
            if image < *map {
                return false;
            }
        }
        let pairs: Vec<(usize, usize)> = demands.iter().map(|&(a, b)| (map[a], map[b])).collect();
        if let Some(paths) = router.route(g, &pairs) {
            *found = Some(ImmersionWitness { terminal_map: map.clone(), paths });
            return true;
        }
        return false;
    }
    if let Some(q) = fixed[i] {
        map[i] = q;
        return assign(i + 1, g, h, gdeg, hdeg, fixed, autos, demands, map, used, router, found);
    }
    for v in 0..g.n() {
        if used[v] || gdeg[v] < hdeg[i] {
            continue;
        }
        used[v] = true;
        map[i] = v;
        let done = assign(i + 1, g, h, gdeg, hdeg, fixed, autos, demands, map, used, router, found);
        used[v] = false;
        if done {
            return true;
        }
    }
    map[i] = usize::MAX;
    false
}

/// Backtracking edge-disjoint path packer over residual multiplicities.
struct Router {
    n: usize,
    residual: Vec<u32>,
    /// Residual `d(X)` for every `X` not containing vertex `n - 1`.
    cut_residual: Vec<i32>,
    /// Bitset of demands separated by `X`, per `X`.
    crossing: Vec<u64>,
    use_cuts: bool,
    demands: Vec<(usize, usize)>,
    remaining: u64,
    paths: Vec<Vec<usize>>,
    stack: Vec<usize>,
}

impl Router {
    fn new(g: &Multigraph, demand_count: usize) -> Self {
        let n = g.n();
        let use_cuts = (2..=CUT_PRUNE_MAX_N).contains(&n) && demand_count <= 64;
        let half = if use_cuts { 1usize << (n - 1) } else { 0 };
        Router {
            n,
            residual: Vec::new(),
            cut_residual: vec![0; half],
            crossing: vec![0; half],
            use_cuts,
            demands: Vec::new(),
            remaining: 0,
            paths: Vec::new(),
            stack: Vec::new(),
        }
    }

    fn route(&mut self, g: &Multigraph, demands: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
        let n = self.n;
        self.residual = (0..n * n).map(|i| g.mult(i / n, i % n)).collect();
        self.demands = demands.to_vec();
        self.remaining = if demands.len() == 64 { u64::MAX } else { (1u64 << demands.len()) - 1 };
        self.paths = vec![Vec::new(); demands.len()];
        if self.use_cuts {
            let cuts = g.all_cut_sizes().expect("n within cut-prune bound");
            for mask in 0..self.cut_residual.len() {
                self.cut_residual[mask] = cuts[mask] as i32;
                let mut bits = 0u64;
                for (j, &(s, t)) in demands.iter().enumerate() {
                    if ((mask >> s) ^ (mask >> t)) & 1 == 1 {
                        bits |= 1 << j;
                    }
                }
                self.crossing[mask] = bits;
            }
        }
        if !self.feasible() {
            return None;
        }
        if self.route_from(0) {
            Some(std::mem::take(&mut self.paths))
        } else {
            None
        }
    }

    fn feasible(&self) -> bool {
        if self.use_cuts {
            self.cut_residual
                .iter()
                .zip(&self.crossing)
                .all(|(&cap, &bits)| (bits & self.remaining).count_ones() as i32 <= cap)
        } else {
            let mut need = vec![0u32; self.n];
            for (j, &(s, t)) in self.demands.iter().enumerate() {
                if self.remaining & (1 << j) != 0 {
                    need[s] += 1;
                    need[t] += 1;
                }
            }
            (0..self.n).all(|v| {
                let deg: u32 = self.residual[v * self.n..(v + 1) * self.n].iter().sum();
                need[v] <= deg
            })
        }
    }

    fn use_edge(&mut self, a: usize, b: usize, delta: i32) {
        let n = self.n;
        let k = (self.residual[a * n + b] as i32 - delta) as u32;
        self.residual[a * n + b] = k;
        self.residual[b * n + a] = k;
        if self.use_cuts {
            for (mask, cap) in self.cut_residual.iter_mut().enumerate() {
                if ((mask >> a) ^ (mask >> b)) & 1 == 1 {
                    *cap -= delta;
                }
            }
        }
    }

    fn route_from(&mut self, k: usize) -> bool {
        if k == self.demands.len() {
            return true;
        }
        let (s, t) = self.demands[k];
        let lower = (k > 0 && self.demands[k - 1] == (s, t)).then(|| self.paths[k - 1].clone());
        for len in 1..self.n {
            if let Some(prev) = &lower {
                if prev.len() - 1 > len {
                    continue;
                }
            }
            self.stack.clear();
            self.stack.push(s);
            if self.extend(k, t, len, 1u32 << s, lower.as_deref()) {
                return true;
            }
        }
        false
    }

    /// Depth-first extension of `self.stack` towards `t` with exactly `len` edges.
    fn extend(&mut self, k: usize, t: usize, len: usize, visited: u32, lower: Option<&[usize]>) -> bool {
        let cur = *self.stack.last().unwrap();
        let depth = self.stack.len() - 1;
        if depth == len {
            if cur != t {
                return false;
            }
            if let Some(prev) = lower {
                if prev.len() == self.stack.len() && self.stack.as_slice() < prev {
                    return false;
                }
            }
            return self.commit(k);
        }
        let n = self.n;
        for v in 0..n {
            if self.residual[cur * n + v] == 0 || visited & (1 << v) != 0 {
                continue;
            }
            // the target may only appear as the final vertex
            if (v == t) != (depth + 1 == len) {
                continue;
            }
            self.stack.push(v);
            if self.extend(k, t, len, visited | (1 << v), lower) {
                return true;
            }
            self.stack.pop();
        }
        false
    }

    fn commit(&mut self, k: usize) -> bool {
        let path = self.stack.clone();
        for w in path.windows(2) {
            self.use_edge(w[0], w[1], 1);
        }
        self.remaining &= !(1u64 << k);
        if self.feasible() {
            self.paths[k] = path.clone();
            let saved = std::mem::take(&mut self.stack);
            if self.route_from(k + 1) {
                return true;
            }
            self.stack = saved;
        }
        self.remaining |= 1u64 << k;
        for w in path.windows(2) {
            self.use_edge(w[0], w[1], -1);
        }
        false
    }
}
