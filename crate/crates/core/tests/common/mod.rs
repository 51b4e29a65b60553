//! Test support: an independent split-off oracle and generated populations.
#![allow(dead_code)]

use std::collections::HashSet;

use k33_core::canon::{canonical_labeling, CanonicalCode};
use k33_core::graph::{Multigraph, RootedMultigraph, VertexSet};
use rand::Rng;

/// Dense symmetric multiplicity matrix.
#[derive(Clone)]
struct Mat {
    n: usize,
    m: Vec<u32>,
}

impl Mat {
    fn of(g: &Multigraph) -> Self {
        let n = g.n();
        let mut m = vec![0; n * n];
        for u in 0..n {
            for v in 0..n {
                m[u * n + v] = g.mult(u, v);
            }
        }
        Mat { n, m }
    }

    fn get(&self, u: usize, v: usize) -> u32 {
        self.m[u * self.n + v]
    }

    fn add(&mut self, u: usize, v: usize, d: i32) {
        let k = (self.get(u, v) as i32 + d) as u32;
        self.m[u * self.n + v] = k;
        self.m[v * self.n + u] = k;
    }

    fn degree(&self, v: usize) -> u32 {
        (0..self.n).map(|u| self.get(u, v)).sum()
    }

    fn to_graph(&self) -> Multigraph {
        let mut t = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if self.get(u, v) > 0 {
                    t.push((u, v, self.get(u, v)));
                }
            }
        }
        Multigraph::build(self.n, &t).unwrap()
    }
}

/// Injective map `V(H) → V(G)` with `e_G(φu, φv) ≥ e_H(u, v)`, honouring `fixed`.
fn embeds(h: &Mat, g: &Mat, fixed: &[(usize, usize)]) -> bool {
    fn rec(h: &Mat, g: &Mat, phi: &mut Vec<Option<usize>>, used: &mut Vec<bool>, i: usize) -> bool {
        if i == h.n {
            return true;
        }
        if let Some(t) = phi[i] {
            let ok = (0..i).all(|j| g.get(t, phi[j].unwrap()) >= h.get(i, j));
            return ok && rec(h, g, phi, used, i + 1);
        }
        for t in 0..g.n {
            if used[t] || g.degree(t) < h.degree(i) {
                continue;
            }
            if (0..i).all(|j| g.get(t, phi[j].unwrap()) >= h.get(i, j))
                && (i + 1..h.n).all(|j| phi[j].is_none_or(|s| g.get(t, s) >= h.get(i, j)))
            {
                phi[i] = Some(t);
                used[t] = true;
                if rec(h, g, phi, used, i + 1) {
                    return true;
                }
                phi[i] = None;
                used[t] = false;
            }
        }
        false
    }
    let mut phi = vec![None; h.n];
    let mut used = vec![false; g.n];
    for &(a, b) in fixed {
        phi[a] = Some(b);
        used[b] = true;
    }
    rec(h, g, &mut phi, &mut used, 0)
}

/// Whether `H` (with `roots_h[i] ↦ roots_g[i]`) is reachable from `G` by
/// split-offs followed by taking a subgraph. Exhaustive over split-off
/// sequences, memoized on root-coloured canonical codes.
pub fn brute_immerses(g: &Multigraph, roots_g: &[usize], h: &Multigraph, roots_h: &[usize]) -> bool {
    let hm = Mat::of(h);
    let mut hdeg: Vec<u32> = (0..h.n()).map(|v| hm.degree(v)).collect();
    hdeg.sort_unstable_by(|a, b| b.cmp(a));
    let h_edges = h.edge_count();
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    let mut stack = vec![(Mat::of(g), roots_g.to_vec())];
    while let Some((gm, roots)) = stack.pop() {
        let gg = gm.to_graph();
        let mut colors = vec![0u32; gm.n];
        for (i, &r) in roots.iter().enumerate() {
            colors[r] = i as u32 + 1;
        }
        if !seen.insert(canonical_labeling(&gg, &colors).1) {
            continue;
        }
        if gg.edge_count() < h_edges {
            continue;
        }
        let mut gdeg: Vec<u32> = (0..gm.n).map(|v| gm.degree(v)).collect();
        gdeg.sort_unstable_by(|a, b| b.cmp(a));
        if gdeg.len() < hdeg.len() || hdeg.iter().zip(&gdeg).any(|(a, b)| a > b) {
            continue;
        }
        if roots_h.iter().zip(&roots).any(|(&y, &x)| hm.degree(y) > gm.degree(x)) {
            continue;
        }
        let fixed: Vec<(usize, usize)> = roots_h.iter().copied().zip(roots.iter().copied()).collect();
        if embeds(&hm, &gm, &fixed) {
            return true;
        }
        for y in 0..gm.n {
            for x in 0..gm.n {
                if x == y || gm.get(x, y) == 0 {
                    continue;
                }
                for z in x + 1..gm.n {
                    if z == y || gm.get(y, z) == 0 {
                        continue;
                    }
                    let mut next = gm.clone();
                    next.add(x, y, -1);
                    next.add(y, z, -1);
                    next.add(x, z, 1);
                    stack.push((next, roots.clone()));
                }
            }
        }
    }
    false
}

/// Dense upper-triangle index pairs.
fn pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect()
}

/// Every vector in `0..=cap` of length `len`.
fn assignments(len: usize, cap: u32) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=cap).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

/// Ways to split `total` into `parts` nonnegative summands.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    if parts == 0 {
        return if total == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1).into_iter().map(move |mut rest| {
                rest.insert(0, first);
                rest
            })
        })
        .collect()
}

#[derive(Clone)]
struct Partial {
    g: Mat,
    /// Half-edges still owed across the current width-4 cut, per vertex.
    open: Vec<u32>,
}

fn key(p: &Partial) -> CanonicalCode {
    canonical_labeling(&p.g.to_graph(), &p.open).1
}

/// Every 3-edge-connected multigraph with `min_n..=max_n` vertices and
/// multiplicities `≤ cap` that has a (3,3)-segmentation of width 4, grown one
/// segmentation vertex at a time. One graph per isomorphism class.
pub fn width4_population(min_n: usize, max_n: usize, cap: u32) -> Vec<Multigraph> {
    let mut level: Vec<Partial> = Vec::new();
    let mut seen: HashSet<CanonicalCode> = HashSet::new();
    for h in 1..=3usize {
        for inner in assignments(h * (h - 1) / 2, cap) {
            for open in compositions(4, h) {
                let mut g = Mat { n: h, m: vec![0; h * h] };
                for (&(u, v), &k) in pairs(h).iter().zip(&inner) {
                    g.add(u, v, k as i32);
                }
                let p = Partial { g, open };
                if seen.insert(key(&p)) {
                    level.push(p);
                }
            }
        }
    }
    let mut all = level.clone();
    // extension steps: the new vertex takes k ≥ 2 open ends and owes k more
    while !level.is_empty() {
        let mut next = Vec::new();
        for p in &level {
            if p.g.n + 2 > max_n {
                continue;
            }
            let n = p.g.n;
            let choices: Vec<Vec<u32>> = p.open.iter().map(|&o| (0..=o).collect()).collect();
            let mut takes = vec![Vec::new()];
            for c in &choices {
                takes = takes
                    .into_iter()
                    .flat_map(|t: Vec<u32>| {
                        c.iter().map(move |&k| {
                            let mut w = t.clone();
                            w.push(k);
                            w
                        })
                    })
                    .collect();
            }
            for take in takes {
                let k: u32 = take.iter().sum();
                if k < 2 || take.iter().any(|&t| t > cap) {
                    continue;
                }
                let mut g = Mat { n: n + 1, m: vec![0; (n + 1) * (n + 1)] };
                for u in 0..n {
                    for v in 0..n {
                        g.m[u * (n + 1) + v] = p.g.get(u, v);
                    }
                }
                let mut open: Vec<u32> = p.open.iter().zip(&take).map(|(o, t)| o - t).collect();
                for (u, &t) in take.iter().enumerate() {
                    g.add(u, n, t as i32);
                }
                open.push(k);
                let q = Partial { g, open };
                if seen.insert(key(&q)) {
                    next.push(q);
                }
            }
        }
        all.extend(next.iter().cloned());
        level = next;
    }

    let mut out = Vec::new();
    let mut done: HashSet<CanonicalCode> = HashSet::new();
    for p in &all {
        let n = p.g.n;
        for y in 1..=3usize {
            if n + y < min_n || n + y > max_n {
                continue;
            }
            let holders: Vec<usize> = (0..n).filter(|&v| p.open[v] > 0).collect();
            let mut spreads = vec![Vec::new()];
            for &v in &holders {
                spreads = spreads
                    .into_iter()
                    .flat_map(|s: Vec<Vec<u32>>| {
                        compositions(p.open[v], y).into_iter().map(move |c| {
                            let mut w = s.clone();
                            w.push(c);
                            w
                        })
                    })
                    .collect();
            }
            for inner in assignments(y * (y - 1) / 2, cap) {
                for spread in &spreads {
                    let total = n + y;
                    let mut g = Mat { n: total, m: vec![0; total * total] };
                    for u in 0..n {
                        for v in 0..n {
                            g.m[u * total + v] = p.g.get(u, v);
                        }
                    }
                    for (&(a, b), &k) in pairs(y).iter().zip(&inner) {
                        g.add(n + a, n + b, k as i32);
                    }
                    for (&v, c) in holders.iter().zip(spread) {
                        for (j, &k) in c.iter().enumerate() {
                            g.add(v, n + j, k as i32);
                        }
                    }
                    if g.m.iter().any(|&k| k > cap) {
                        continue;
                    }
                    let graph = g.to_graph();
                    if !graph.edge_connectivity_at_least(3, false).unwrap() {
                        continue;
                    }
                    if done.insert(canonical_labeling(&graph, &vec![0; total]).1) {
                        out.push(graph);
                    }
                }
            }
        }
    }
    out
}

/// Conditions (i) to (iii) of the Eyeglasses theorem for roots `x0`, `x1`.
pub fn eyeglasses_conditions(g: &Multigraph, x0: usize, x1: usize) -> bool {
    let n = g.n();
    if n < 4 || g.degree(x0) != 2 || g.degree(x1) != 2 || !g.is_connected() {
        return false;
    }
    for mask in 1u32..(1 << n) - 1 {
        let x = VertexSet(mask);
        let d = g.cut_size(x);
        if x.contains(x0) && !x.contains(x1) && d < 2 {
            return false;
        }
        if !x.contains(x0) && !x.contains(x1)
            && (d < 3 || (x.len() >= 2 && d < 4)) {
                return false;
            }
    }
    true
}

/// Rooted multigraphs on `4..=max_n` vertices with multiplicities `≤ cap`
/// meeting the Eyeglasses conditions; roots are the last two vertices.
pub fn eyeglasses_population(max_n: usize, cap: u32) -> Vec<RootedMultigraph> {
    let mut out = Vec::new();
    for n in 4..=max_n {
        let k = n - 2;
        let ps = pairs(k);
        let mut inner_seen: HashSet<CanonicalCode> = HashSet::new();
        let mut rooted_seen: HashSet<CanonicalCode> = HashSet::new();
        let ends: Vec<(usize, usize)> = (0..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect();
        for inner in assignments(ps.len(), cap) {
            let mut deg = vec![0u32; k];
            for (&(u, v), &m) in ps.iter().zip(&inner) {
                deg[u] += m;
                deg[v] += m;
            }
            // four root half-edges must lift every inner degree to 3
            if deg.iter().map(|&d| 3u32.saturating_sub(d)).sum::<u32>() > 4 {
                continue;
            }
            let t: Vec<(usize, usize, u32)> =
                ps.iter().zip(&inner).filter(|(_, &m)| m > 0).map(|(&(u, v), &m)| (u, v, m)).collect();
            let base = Multigraph::build(k, &t).unwrap();
            if !inner_seen.insert(canonical_labeling(&base, &vec![0; k]).1) {
                continue;
            }
            for &(a0, b0) in &ends {
                for &(a1, b1) in &ends {
                    let mut t2 = t.clone();
                    t2.extend([(a0, k, 1), (b0, k, 1), (a1, k + 1, 1), (b1, k + 1, 1)]);
                    let g = Multigraph::build(n, &t2).unwrap();
                    if !eyeglasses_conditions(&g, k, k + 1) {
                        continue;
                    }
                    let mut colors = vec![0u32; n];
                    colors[k] = 1;
                    colors[k + 1] = 2;
                    if rooted_seen.insert(canonical_labeling(&g, &colors).1) {
                        out.push(RootedMultigraph::new(g, vec![k, k + 1]).unwrap());
                    }
                }
            }
        }
    }
    out
}

/// Random connected-or-not multigraph with multiplicities in `0..=max_mult`.
pub fn random_multigraph<R: Rng>(rng: &mut R, n: usize, max_mult: u32, density: f64) -> Multigraph {
    let mut t = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                let k = rng.gen_range(1..=max_mult);
                t.push((u, v, k));
            }
        }
    }
    Multigraph::build(n, &t).unwrap()
}
