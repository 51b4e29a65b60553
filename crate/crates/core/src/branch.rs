//! Branch decompositions: separation order, good orderings of width-4
//! segmentation graphs, caterpillar construction, and exact branch-width on
//! tiny graphs.
//!
//! Edges are addressed by their index in [`Multigraph::edge_list`].

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Multigraph;
use crate::segment::Segmentation;

/// Largest simple edge count accepted by the exact subset searches.
pub const MAX_EXACT_EDGES: usize = 16;
/// Largest final block (in parallel classes) ordered by exhaustive search.
const MAX_BLOCK_CLASSES: usize = 16;

fn edge_mask(m: usize, a: &[usize]) -> Result<Vec<bool>> {
    let mut in_a = vec![false; m];
    for &e in a {
        if e >= m {
            return Err(Error::Precondition(format!("edge index {e} out of range (|E| = {m})")));
        }
        in_a[e] = true;
    }
    Ok(in_a)
}

fn order_of(edges: &[(usize, usize)], n: usize, in_a: &[bool]) -> usize {
    let mut side = vec![0u8; n];
    for (i, &(u, v)) in edges.iter().enumerate() {
        let bit = if in_a[i] { 1 } else { 2 };
        side[u] |= bit;
        side[v] |= bit;
    }
    side.iter().filter(|&&s| s == 3).count()
}

/// `o(A, E \ A)`: vertices incident with an edge on each side.
pub fn separation_order(g: &Multigraph, a: &[usize]) -> Result<usize> {
    let edges = g.edge_list();
    let in_a = edge_mask(edges.len(), a)?;
    Ok(order_of(&edges, g.n(), &in_a))
}

/// Edge indices grouped by parallel class, keyed by vertex pair.
fn parallel_classes(edges: &[(usize, usize)]) -> BTreeMap<(usize, usize), Vec<usize>> {
    let mut classes: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for (i, &p) in edges.iter().enumerate() {
        classes.entry(p).or_default().push(i);
    }
    classes
}

/// Partition `E_0, …, E_k` of the edge indices; inner blocks are parallel classes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoodOrdering {
    pub blocks: Vec<Vec<usize>>,
}

impl GoodOrdering {
    /// Partition, inner blocks are whole parallel classes, every proper prefix
    /// union has separation order at most 3.
    pub fn is_valid(&self, g: &Multigraph) -> bool {
        let edges = g.edge_list();
        let m = edges.len();
        let mut seen = vec![false; m];
        for b in &self.blocks {
            for &e in b {
                if e >= m || seen[e] {
                    return false;
                }
                seen[e] = true;
            }
        }
        if !seen.iter().all(|&s| s) {
            return false;
        }
        let classes = parallel_classes(&edges);
        let k = self.blocks.len();
        for b in self.blocks.iter().take(k.saturating_sub(1)).skip(1) {
            let Some(&first) = b.first() else { return false };
            let mut sorted = b.clone();
            sorted.sort_unstable();
            if classes[&edges[first]] != sorted {
                return false;
            }
        }
        let mut prefix = vec![false; m];
        for b in self.blocks.iter().take(k.saturating_sub(1)) {
            for &e in b {
                prefix[e] = true;
            }
            if order_of(&edges, g.n(), &prefix) > 3 {
                return false;
            }
        }
        true
    }
}

/// Greedy good ordering along a `(3,3)`-segmentation of width at most 4: the
/// edges inside the head, then for each `x_i` the classes joining it to
/// `U_{i-1}` (the class at the least `v ∈ Z_{i-1} \ Z_i` first when
/// `|Z_{i-1}| = 3`), then every remaining edge.
pub fn good_ordering(g: &Multigraph, seg: &Segmentation) -> Result<GoodOrdering> {
    if !seg.is_valid(g) || seg.width > 4 || seg.head.len() > 3 || seg.tail.len() > 3 {
        return Err(Error::Precondition("not a valid (3,3)-segmentation of width at most 4".into()));
    }
    let edges = g.edge_list();
    let classes = parallel_classes(&edges);
    let sets = seg.sets();
    let mut used = vec![false; edges.len()];
    let mut blocks: Vec<Vec<usize>> = Vec::new();

    let head = sets[0];
    let e0: Vec<usize> = (0..edges.len()).filter(|&i| head.contains(edges[i].0) && head.contains(edges[i].1)).collect();
    for &e in &e0 {
        used[e] = true;
    }
    if !e0.is_empty() {
        blocks.push(e0);
    }

    for (i, &x) in seg.extension.iter().enumerate() {
        let prev = sets[i];
        let z_prev = seg.boundary(g, i);
        let z_cur = seg.boundary(g, i + 1);
        let mut nbrs: Vec<usize> = prev.iter().filter(|&u| g.mult(u, x) > 0).collect();
        if z_prev.len() == 3 {
            let first = z_prev.iter().filter(|v| !z_cur.contains(*v)).find(|&v| g.mult(v, x) > 0);
            if let Some(v) = first {
                nbrs.retain(|&u| u != v);
                nbrs.insert(0, v);
            }
        }
        for u in nbrs {
            let class = classes[&(u.min(x), u.max(x))].clone();
            for &e in &class {
                used[e] = true;
            }
            blocks.push(class);
        }
    }

    let rest: Vec<usize> = (0..edges.len()).filter(|&e| !used[e]).collect();
    if !rest.is_empty() {
        blocks.push(rest);
    }
    Ok(GoodOrdering { blocks })
}

/// Cubic tree (every node of degree 1 or 3) given as a parent array, with
/// `leaf_of_edge[i]` the leaf carrying edge `i` of `edge_list()`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchDecomposition {
    pub parent: Vec<Option<usize>>,
    pub leaf_of_edge: Vec<usize>,
}

/// Rooted binary trees under construction; the final root is suppressed.
struct TreeBuilder {
    parent: Vec<Option<usize>>,
}

impl TreeBuilder {
    fn node(&mut self) -> usize {
        self.parent.push(None);
        self.parent.len() - 1
    }

    fn join(&mut self, a: usize, b: usize) -> usize {
        let p = self.node();
        self.parent[a] = Some(p);
        self.parent[b] = Some(p);
        p
    }

    /// Left-leaning chain over `parts`; returns its root.
    fn chain(&mut self, parts: &[usize]) -> Option<usize> {
        let (&first, rest) = parts.split_first()?;
        Some(rest.iter().fold(first, |acc, &t| self.join(acc, t)))
    }

    /// Drops the degree-2 root `r` (the last node created) by hanging one
    /// child under the other.
    fn finish(mut self, r: usize) -> Vec<Option<usize>> {
        let children: Vec<usize> = (0..self.parent.len()).filter(|&v| self.parent[v] == Some(r)).collect();
        if children.len() == 2 {
            debug_assert_eq!(r, self.parent.len() - 1);
            let (a, b) = (children[0], children[1]);
            self.parent[a] = None;
            self.parent[b] = Some(a);
            self.parent.pop();
        }
        self.parent
    }
}

impl BranchDecomposition {
    /// Caterpillar over `items` (each a nonempty edge list, laid out as its own
    /// chain); the spine follows the item order.
    pub fn caterpillar(m: usize, items: &[Vec<usize>]) -> Result<Self> {
        let mut b = TreeBuilder { parent: Vec::new() };
        let mut leaf_of_edge = vec![usize::MAX; m];
        let mut roots = Vec::new();
        for item in items {
            let leaves: Vec<usize> = item
                .iter()
                .map(|&e| {
                    let leaf = b.node();
                    leaf_of_edge[e] = leaf;
                    leaf
                })
                .collect();
            if let Some(r) = b.chain(&leaves) {
                roots.push(r);
            }
        }
        if leaf_of_edge.contains(&usize::MAX) {
            return Err(Error::MalformedDecomposition("items do not cover every edge".into()));
        }
        let parent = match b.chain(&roots) {
            Some(r) => b.finish(r),
            None => Vec::new(),
        };
        let bd = BranchDecomposition { parent, leaf_of_edge };
        bd.validate(m)?;
        Ok(bd)
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.parent.len()];
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                deg[v] += 1;
                deg[p] += 1;
            }
        }
        deg
    }

    /// Tree shape, cubic degrees, and a bijection from edges to leaves.
    pub fn validate(&self, m: usize) -> Result<()> {
        let bad = |msg: String| Err(Error::MalformedDecomposition(msg));
        let t = self.parent.len();
        if self.leaf_of_edge.len() != m {
            return bad(format!("leaf map has {} entries for {m} edges", self.leaf_of_edge.len()));
        }
        if m == 0 {
            return if t == 0 { Ok(()) } else { bad("nonempty tree for an edgeless graph".into()) };
        }
        if self.parent.iter().filter(|p| p.is_none()).count() != 1 {
            return bad("parent array must have exactly one root".into());
        }
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = *p {
                if p >= t || p == v {
                    return bad(format!("node {v} has invalid parent {p}"));
                }
            }
        }
        // every node reaches the root within t steps
        for v in 0..t {
            let (mut cur, mut steps) = (v, 0);
            while let Some(p) = self.parent[cur] {
                cur = p;
                steps += 1;
                if steps > t {
                    return bad("parent array has a cycle".into());
                }
            }
        }
        let deg = self.degrees();
        if t > 2 && deg.iter().any(|&d| d != 1 && d != 3) {
            return bad("tree is not cubic".into());
        }
        let leaves: Vec<usize> = (0..t).filter(|&v| deg[v] <= 1).collect();
        let mut hit = vec![false; t];
        for &l in &self.leaf_of_edge {
            if l >= t || deg[l] > 1 || hit[l] {
                return bad(format!("leaf map entry {l} is not a distinct leaf"));
            }
            hit[l] = true;
        }
        if leaves.iter().any(|&l| !hit[l]) {
            return bad("some leaf carries no edge".into());
        }
        Ok(())
    }

    /// Number of tree nodes.
    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn to_dot(&self, g: &Multigraph) -> String {
        let edges = g.edge_list();
        let mut label = vec![None; self.parent.len()];
        for (i, &l) in self.leaf_of_edge.iter().enumerate() {
            label[l] = edges.get(i).copied();
        }
        let mut s = String::from("graph branch_decomposition {\n");
        for (v, l) in label.iter().enumerate() {
            match l {
                Some((a, b)) => writeln!(s, "  t{v} [shape=box, label=\"{a}-{b}\"];").unwrap(),
                None => writeln!(s, "  t{v} [shape=point];").unwrap(),
            }
        }
        for (v, p) in self.parent.iter().enumerate() {
            if let Some(p) = p {
                writeln!(s, "  t{p} -- t{v};").unwrap();
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Maximum `w(e)` over the tree edges of `bd`.
pub fn width(g: &Multigraph, bd: &BranchDecomposition) -> Result<usize> {
    let edges = g.edge_list();
    bd.validate(edges.len())?;
    let t = bd.parent.len();
    let mut edge_at = vec![None; t];
    for (i, &l) in bd.leaf_of_edge.iter().enumerate() {
        edge_at[l] = Some(i);
    }
    let mut best = 0;
    for v in 0..t {
        if bd.parent[v].is_none() {
            continue;
        }
        let mut side = vec![false; edges.len()];
        for (u, e) in edge_at.iter().enumerate() {
            if let Some(e) = *e {
                let mut cur = u;
                while cur != v {
                    match bd.parent[cur] {
                        Some(p) => cur = p,
                        None => break,
                    }
                }
                side[e] = cur == v;
            }
        }
        best = best.max(order_of(&edges, g.n(), &side));
    }
    Ok(best)
}

/// Orders the parallel classes of `block` after the fixed prefix `base`,
/// minimizing the largest prefix separation order.
fn order_final_block(edges: &[(usize, usize)], n: usize, base: &[bool], block: &[usize]) -> Vec<Vec<usize>> {
    let mut grouped: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for &e in block {
        grouped.entry(edges[e]).or_default().push(e);
    }
    let classes: Vec<Vec<usize>> = grouped.into_values().collect();
    let q = classes.len();
    if q > MAX_BLOCK_CLASSES || q <= 1 {
        return classes;
    }
    let full = (1usize << q) - 1;
    let order_with = |mask: usize| {
        let mut side = base.to_vec();
        for (j, c) in classes.iter().enumerate() {
            if mask >> j & 1 == 1 {
                for &e in c {
                    side[e] = true;
                }
            }
        }
        order_of(edges, n, &side)
    };
    // best[mask]: least bottleneck over orderings of `mask`, with its last class
    let mut best = vec![(usize::MAX, usize::MAX); full + 1];
    best[0] = (0, usize::MAX);
    for mask in 1..=full {
        let here = order_with(mask);
        for j in 0..q {
            if mask >> j & 1 == 1 {
                let prev = best[mask & !(1 << j)].0;
                let cost = prev.max(here);
                if cost < best[mask].0 {
                    best[mask] = (cost, j);
                }
            }
        }
    }
    let mut out = Vec::with_capacity(q);
    let mut mask = full;
    while mask != 0 {
        let j = best[mask].1;
        out.push(classes[j].clone());
        mask &= !(1 << j);
    }
    out.reverse();
    out
}

/// Caterpillar whose spine follows `ordering`: first and last blocks are split
/// into parallel classes, the last ordered to keep prefix orders small.
pub fn caterpillar_decomposition(g: &Multigraph, ordering: &GoodOrdering) -> Result<BranchDecomposition> {
    let edges = g.edge_list();
    let k = ordering.blocks.len();
    let mut items: Vec<Vec<usize>> = Vec::new();
    let mut base = vec![false; edges.len()];
    for (i, block) in ordering.blocks.iter().enumerate() {
        if block.is_empty() {
            continue;
        }
        if i + 1 == k && k > 1 {
            items.extend(order_final_block(&edges, g.n(), &base, block));
        } else if i == 0 {
            let mut grouped: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
            for &e in block {
                grouped.entry(edges[e]).or_default().push(e);
            }
            items.extend(grouped.into_values());
        } else {
            items.push(block.clone());
        }
        for &e in block {
            base[e] = true;
        }
    }
    BranchDecomposition::caterpillar(edges.len(), &items)
}

/// Simple edges with per-vertex incidence masks, within the exact-search guard.
fn simple_masks(g: &Multigraph) -> Result<(usize, Vec<u32>)> {
    let simple = g.underlying_simple();
    let edges = simple.edge_list();
    let m = edges.len();
    if m > MAX_EXACT_EDGES {
        return Err(Error::TooLarge { n: m, max: MAX_EXACT_EDGES });
    }
    let mut inc = vec![0u32; g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        inc[u] |= 1 << i;
        inc[v] |= 1 << i;
    }
    Ok((m, inc))
}

fn mask_order(inc: &[u32], full: u32, a: u32) -> usize {
    inc.iter().filter(|&&s| s & a != 0 && s & full & !a != 0).count()
}

/// Exact branch-width of the underlying simple graph (at most
/// [`MAX_EXACT_EDGES`] edges); 0 for at most one edge.
pub fn branchwidth_exact(g: &Multigraph) -> Result<usize> {
    let (m, inc) = simple_masks(g)?;
    if m <= 1 {
        return Ok(0);
    }
    let full: u32 = (1 << m) - 1;
    // f[A]: least width of a rooted binary tree on A, counting the edge above it
    let mut f = vec![0usize; 1 << m];
    for a in 1..=full {
        let o = mask_order(&inc, full, a);
        if a.count_ones() == 1 {
            f[a as usize] = o;
            continue;
        }
        let low = a & a.wrapping_neg();
        let rest = a & !low;
        let mut best = usize::MAX;
        // B ranges over proper subsets containing the lowest bit
        let mut s = rest;
        loop {
            let b = s | low;
            if b != a {
                best = best.min(f[b as usize].max(f[(a & !b) as usize]));
            }
            if s == 0 {
                break;
            }
            s = (s - 1) & rest;
        }
        f[a as usize] = best.max(o);
    }
    Ok(f[full as usize])
}

/// Least width of a caterpillar decomposition of the underlying simple graph.
pub fn best_caterpillar_width(g: &Multigraph) -> Result<usize> {
    let (m, inc) = simple_masks(g)?;
    if m <= 1 {
        return Ok(0);
    }
    let full: u32 = (1 << m) - 1;
    // c[A]: least over orderings of A of the largest prefix order
    let mut c = vec![usize::MAX; 1 << m];
    c[0] = 0;
    for a in 1..=full {
        let o = mask_order(&inc, full, a);
        let mut best = usize::MAX;
        let mut bits = a;
        while bits != 0 {
            let e = bits & bits.wrapping_neg();
            bits &= !e;
            best = best.min(c[(a & !e) as usize]);
        }
        c[a as usize] = best.max(o);
    }
    let leaf = (0..m).map(|i| mask_order(&inc, full, 1 << i)).max().unwrap_or(0);
    let spine = (0..m).map(|i| c[(full & !(1 << i)) as usize]).min().unwrap_or(0);
    Ok(leaf.max(spine))
}

/// Convenience: segmentation to verified caterpillar width.
pub fn segmentation_width(g: &Multigraph, seg: &Segmentation) -> Result<usize> {
    let ordering = good_ordering(g, seg)?;
    width(g, &caterpillar_decomposition(g, &ordering)?)
}
