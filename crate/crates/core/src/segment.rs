//! Segmentations: nested vertex sets growing one vertex at a time while every
//! cut keeps the same size.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::graph::{Multigraph, VertexSet};

/// Sets `U_0 = head`, `U_i = U_{i-1} + extension[i-1]`; `tail = V \ U_t`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Segmentation {
    pub head: Vec<usize>,
    pub extension: Vec<usize>,
    pub tail: Vec<usize>,
    pub width: u32,
    pub bounds: (usize, usize),
}

impl Segmentation {
    /// `U_0, …, U_t`.
    pub fn sets(&self) -> Vec<VertexSet> {
        let mut cur = VertexSet::from_slice(&self.head);
        let mut out = vec![cur];
        for &x in &self.extension {
            cur = cur.insert(x);
            out.push(cur);
        }
        out
    }

    pub fn is_valid(&self, g: &Multigraph) -> bool {
        let n = g.n();
        if self.head.is_empty() || self.head.len() > self.bounds.0 || self.tail.len() > self.bounds.1 {
            return false;
        }
        let sets = self.sets();
        let last = *sets.last().unwrap();
        let tail = VertexSet::from_slice(&self.tail);
        let sizes_ok = self.head.len() + self.extension.len() + self.tail.len() == n;
        sizes_ok
            && last.union(tail) == VertexSet::full(n)
            && last.intersection(tail).is_empty()
            && sets.windows(2).all(|w| w[1].len() == w[0].len() + 1)
            && sets.iter().all(|&s| g.cut_size(s) == self.width)
    }

    /// Vertices of `U_i` incident with an edge of `δ(U_i)`.
    pub fn boundary(&self, g: &Multigraph, i: usize) -> VertexSet {
        let u = self.sets()[i];
        let out = u.complement(g.n());
        VertexSet::from_slice(&u.iter().filter(|&v| g.edges_to(v, out) > 0).collect::<Vec<_>>())
    }
}

/// An `(a, b)`-segmentation of width `w`, if any. Complete search.
pub fn find_segmentation(g: &Multigraph, a: usize, b: usize, w: u32) -> Option<Segmentation> {
    find_segmentation_relative(g, a, b, w, VertexSet::EMPTY)
}

/// As [`find_segmentation`], restricted to heads containing `within_head`.
pub fn find_segmentation_relative(
    g: &Multigraph,
    a: usize,
    b: usize,
    w: u32,
    within_head: VertexSet,
) -> Option<Segmentation> {
    let n = g.n();
    if n == 0 || w == 0 {
        return None;
    }
    let full = VertexSet::full(n);
    let mut dead: HashSet<u32> = HashSet::new();
    let mut heads: Vec<VertexSet> = Vec::new();
    subsets_up_to(n, a, &mut heads);
    heads.retain(|h| h.intersection(within_head) == within_head && !h.is_empty());
    heads.sort_by_key(|h| (h.len(), h.0));
    for head in heads {
        if g.cut_size(head) != w {
            continue;
        }
        let mut ext = Vec::new();
        if extend(g, full, head, b, &mut dead, &mut ext) {
            let last = ext.iter().fold(head, |s, &x| s.insert(x));
            return Some(Segmentation {
                head: head.to_vec(),
                extension: ext,
                tail: last.complement(n).to_vec(),
                width: w,
                bounds: (a, b),
            });
        }
    }
    None
}

fn extend(
    g: &Multigraph,
    full: VertexSet,
    cur: VertexSet,
    b: usize,
    dead: &mut HashSet<u32>,
    ext: &mut Vec<usize>,
) -> bool {
    let rest = VertexSet(full.0 & !cur.0);
    if rest.len() <= b {
        return true;
    }
    if dead.contains(&cur.0) {
        return false;
    }
    for x in rest.iter() {
        let next = cur.insert(x);
        // d(next) = d(cur) - e(x, cur) + e(x, rest - x)
        if g.edges_to(x, cur) != g.edges_to(x, rest.remove(x)) {
            continue;
        }
        ext.push(x);
        if extend(g, full, next, b, dead, ext) {
            return true;
        }
        ext.pop();
    }
    dead.insert(cur.0);
    false
}

fn subsets_up_to(n: usize, k: usize, out: &mut Vec<VertexSet>) {
    fn rec(start: usize, n: usize, left: usize, cur: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(cur);
        if left == 0 {
            return;
        }
        for v in start..n {
            rec(v + 1, n, left - 1, cur.insert(v), out);
        }
    }
    rec(0, n, k, VertexSet::EMPTY, out);
}
