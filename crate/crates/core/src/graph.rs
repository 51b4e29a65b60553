//! Dense loopless multigraphs on at most 32 vertices.
//!
//! Vertices are `0..n`. Every operation returns a fresh value; vertex
//! deletions renumber the survivors contiguously in their original order.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hard ceiling on vertex count; vertex sets are `u32` bitmasks.
pub const MAX_VERTICES: usize = 32;

/// Ceiling for operations that enumerate every vertex-subset cut.
pub const MAX_CUT_ENUMERATION: usize = 24;

/// A set of vertices stored as a bitmask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn full(n: usize) -> Self {
        if n >= 32 {
            VertexSet(u32::MAX)
        } else {
            VertexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_slice(vs: &[usize]) -> Self {
        VertexSet(vs.iter().fold(0u32, |m, &v| m | (1 << v)))
    }

    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 & (1 << v) != 0
    }

    pub fn insert(self, v: usize) -> Self {
        VertexSet(self.0 | (1 << v))
    }

    pub fn remove(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self, n: usize) -> Self {
        VertexSet(!self.0 & Self::full(n).0)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Loopless undirected multigraph as a symmetric multiplicity matrix.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "EdgeListRepr", try_from = "EdgeListRepr")]
pub struct Multigraph {
    n: usize,
    mult: Vec<u32>,
}

#[derive(Serialize, Deserialize)]
struct EdgeListRepr {
    n: usize,
    edges: Vec<(usize, usize, u32)>,
}

impl From<Multigraph> for EdgeListRepr {
    fn from(g: Multigraph) -> Self {
        EdgeListRepr { n: g.n, edges: g.pairs().collect() }
    }
}

impl TryFrom<EdgeListRepr> for Multigraph {
    type Error = Error;
    fn try_from(r: EdgeListRepr) -> Result<Self> {
        Multigraph::build(r.n, &r.edges)
    }
}

/// A multigraph together with an ordered tuple of distinct root vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RootedMultigraph {
    pub graph: Multigraph,
    pub roots: Vec<usize>,
}

/// The edge cut `δ(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CutReport {
    pub side: VertexSet,
    /// Crossing vertex pairs `(u, v, k)` with `u ∈ X`, `v ∉ X`, `k = e(u, v)`.
    pub delta: Vec<(usize, usize, u32)>,
    pub size: u32,
}

impl Multigraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge { n, max: MAX_VERTICES });
        }
        Ok(Multigraph { n, mult: vec![0; n * n] })
    }

    /// Builds a graph from `(u, v, multiplicity)` triples. Repeated pairs accumulate.
    pub fn build(n: usize, edges: &[(usize, usize, u32)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v, k) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if k == 0 {
                return Err(Error::ZeroMultiplicity(u, v));
            }
            g.add(u, v, k);
        }
        Ok(g)
    }

    /// Simple graph from an edge list.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let triples: Vec<_> = edges.iter().map(|&(u, v)| (u, v, 1)).collect();
        Self::build(n, &triples)
    }

    /// Rebuilds a graph from its row-major upper triangle (`(0,1), (0,2), …, (n-2,n-1)`).
    pub fn from_upper(n: usize, upper: &[u32]) -> Result<Self> {
        if upper.len() != n * n.saturating_sub(1) / 2 {
            return Err(Error::Precondition(format!(
                "upper triangle of a {n}-vertex graph needs {} entries, got {}",
                n * n.saturating_sub(1) / 2,
                upper.len()
            )));
        }
        let mut g = Self::empty(n)?;
        let mut it = upper.iter();
        for u in 0..n {
            for v in u + 1..n {
                let k = *it.next().unwrap();
                g.set(u, v, k);
            }
        }
        Ok(g)
    }

    pub fn upper(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.n * self.n.saturating_sub(1) / 2);
        for u in 0..self.n {
            for v in u + 1..self.n {
                out.push(self.mult(u, v));
            }
        }
        out
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn set(&mut self, u: usize, v: usize, k: u32) {
        debug_assert!(u != v || k == 0);
        self.mult[u * self.n + v] = k;
        self.mult[v * self.n + u] = k;
    }

    pub(crate) fn add(&mut self, u: usize, v: usize, k: u32) {
        let cur = self.mult(u, v);
        self.set(u, v, cur + k);
    }

    /// Copy with `e(u, v)` replaced by `k`.
    pub fn with_multiplicity(&self, u: usize, v: usize, k: u32) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        let mut g = self.clone();
        g.set(u, v, k);
        Ok(g)
    }

    /// Copy with `k` more parallel `uv` edges.
    pub fn add_edges(&self, u: usize, v: usize, k: u32) -> Result<Self> {
        self.with_multiplicity(u, v, self.mult(u, v) + k)
    }

    /// Copy with one `uv` edge removed.
    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if self.mult(u, v) == 0 {
            return Err(Error::MissingEdge(u, v));
        }
        let mut g = self.clone();
        g.set(u, v, self.mult(u, v) - 1);
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn mult(&self, u: usize, v: usize) -> u32 {
        self.mult[u * self.n + v]
    }

    pub fn degree(&self, v: usize) -> u32 {
        self.mult[v * self.n..(v + 1) * self.n].iter().sum()
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Total number of edges, parallel copies included.
    pub fn edge_count(&self) -> u32 {
        self.mult.iter().sum::<u32>() / 2
    }

    /// Number of adjacent vertex pairs.
    pub fn simple_edge_count(&self) -> usize {
        self.pairs().count()
    }

    pub fn max_multiplicity(&self) -> u32 {
        self.mult.iter().copied().max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&u| self.mult(v, u) > 0)
    }

    pub fn neighbor_set(&self, v: usize) -> VertexSet {
        VertexSet(self.neighbors(v).fold(0, |m, u| m | (1 << u)))
    }

    /// Adjacent pairs `(u, v, e(u, v))` with `u < v`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, u32)> + '_ {
        (0..self.n).flat_map(move |u| {
            (u + 1..self.n).filter_map(move |v| {
                let k = self.mult(u, v);
                (k > 0).then_some((u, v, k))
            })
        })
    }

    /// Every edge as a separate `(u, v)` item, parallel copies repeated.
    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (u, v, k) in self.pairs() {
            for _ in 0..k {
                out.push((u, v));
            }
        }
        out
    }

    pub fn underlying_simple(&self) -> Multigraph {
        let mut g = self.clone();
        for m in g.mult.iter_mut() {
            *m = (*m).min(1);
        }
        g
    }

    pub fn is_simple(&self) -> bool {
        self.mult.iter().all(|&m| m <= 1)
    }

    pub fn is_cubic(&self) -> bool {
        (0..self.n).all(|v| self.degree(v) == 3)
    }

    /// `e(v, X)`: number of edges between `v` and the set `X`.
    pub fn edges_to(&self, v: usize, set: VertexSet) -> u32 {
        set.iter().map(|u| self.mult(v, u)).sum()
    }

    /// `d(X)`.
    pub fn cut_size(&self, set: VertexSet) -> u32 {
        let outside = set.complement(self.n);
        set.iter().map(|u| self.edges_to(u, outside)).sum()
    }

    pub fn cut(&self, set: VertexSet) -> CutReport {
        let set = set.intersection(VertexSet::full(self.n));
        let outside = set.complement(self.n);
        let mut delta = Vec::new();
        for u in set.iter() {
            for v in outside.iter() {
                let k = self.mult(u, v);
                if k > 0 {
                    delta.push((u, v, k));
                }
            }
        }
        let size = delta.iter().map(|t| t.2).sum();
        CutReport { side: set, delta, size }
    }

    /// `d(X)` for every `X ⊆ V`, indexed by bitmask.
    pub fn all_cut_sizes(&self) -> Result<Vec<u32>> {
        if self.n > MAX_CUT_ENUMERATION {
            return Err(Error::TooLarge { n: self.n, max: MAX_CUT_ENUMERATION });
        }
        let size = 1usize << self.n;
        let mut d = vec![0u32; size];
        let degrees = self.degrees();
        for mask in 1..size {
            let v = (usize::BITS - 1 - mask.leading_zeros()) as usize;
            let rest = mask & !(1 << v);
            let inner = self.edges_to(v, VertexSet(rest as u32));
            d[mask] = d[rest] + degrees[v] - 2 * inner;
        }
        Ok(d)
    }

    /// Tests `d(X) ≥ k` over all proper nonempty `X`; with `internal`, only over
    /// `X` with at least two vertices on each side.
    pub fn edge_connectivity_at_least(&self, k: u32, internal: bool) -> Result<bool> {
        if self.n > MAX_CUT_ENUMERATION {
            return Err(Error::TooLarge { n: self.n, max: MAX_CUT_ENUMERATION });
        }
        if k >= 1 && !internal && !self.is_connected() {
            return Ok(false);
        }
        Ok(self.first_cut_below(k, internal).is_none())
    }

    /// Least `X` (as a bitmask over `0..n-1`, never containing `n-1`) with `d(X) < k`.
    pub fn first_cut_below(&self, k: u32, internal: bool) -> Option<VertexSet> {
        self.first_cut_where(|set, d| {
            let ok_side = !internal || (set.len() >= 2 && self.n - set.len() >= 2);
            ok_side && d < k
        })
    }

    /// Least `X` (never containing `n-1`) with `d(X) == k`, subject to side-size bounds.
    pub fn first_cut_of_size(&self, k: u32, min_side: usize) -> Option<VertexSet> {
        self.first_cut_where(|set, d| d == k && set.len() >= min_side && self.n - set.len() >= min_side)
    }

    fn first_cut_where(&self, pred: impl Fn(VertexSet, u32) -> bool) -> Option<VertexSet> {
        if self.n < 2 {
            return None;
        }
        let half = 1u32 << (self.n - 1);
        let degrees = self.degrees();
        let mut d = vec![0u32; half as usize];
        for mask in 1..half {
            let v = (u32::BITS - 1 - mask.leading_zeros()) as usize;
            let rest = mask & !(1 << v);
            d[mask as usize] = d[rest as usize] + degrees[v] - 2 * self.edges_to(v, VertexSet(rest));
            if pred(VertexSet(mask), d[mask as usize]) {
                return Some(VertexSet(mask));
            }
        }
        None
    }

    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen.contains(s) {
                continue;
            }
            let comp = self.reach(s, VertexSet::full(self.n));
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    /// Vertices reachable from `s` inside `within`.
    pub fn reach(&self, s: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(s);
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for w in self.neighbors(u) {
                if within.contains(w) && !seen.contains(w) {
                    seen = seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reach(0, VertexSet::full(self.n)).len() == self.n
    }

    /// Induced subgraph on `keep`, renumbered in increasing vertex order.
    pub fn induced(&self, keep: VertexSet) -> Multigraph {
        let verts = keep.intersection(VertexSet::full(self.n)).to_vec();
        let mut g = Multigraph { n: verts.len(), mult: vec![0; verts.len() * verts.len()] };
        for (i, &u) in verts.iter().enumerate() {
            for (j, &v) in verts.iter().enumerate() {
                g.mult[i * verts.len() + j] = self.mult(u, v);
            }
        }
        g
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Multigraph> {
        self.check_vertex(v)?;
        Ok(self.induced(VertexSet::full(self.n).remove(v)))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Multigraph {
        let mut g = Multigraph { n: self.n, mult: vec![0; self.n * self.n] };
        for u in 0..self.n {
            for v in 0..self.n {
                g.mult[perm[u] * self.n + perm[v]] = self.mult(u, v);
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Result<Multigraph> {
        let mut g = Multigraph::empty(self.n + other.n)?;
        for (u, v, k) in self.pairs() {
            g.set(u, v, k);
        }
        for (u, v, k) in other.pairs() {
            g.set(u + self.n, v + self.n, k);
        }
        Ok(g)
    }

    /// Adds a fresh isolated vertex at index `n`.
    pub fn add_vertex(&self) -> Result<Multigraph> {
        let mut g = Multigraph::empty(self.n + 1)?;
        for (u, v, k) in self.pairs() {
            g.set(u, v, k);
        }
        Ok(g)
    }

    /// `G.X`: identifies `X` into one vertex, dropping loops. The merged vertex
    /// takes the place of `min(X)`; the result is rooted there.
    pub fn identify(&self, set: VertexSet) -> Result<RootedMultigraph> {
        let (graph, map) = self.identify_with_map(set)?;
        let root = map[set.min().unwrap()];
        Ok(RootedMultigraph { graph, roots: vec![root] })
    }

    /// Like [`identify`](Self::identify) but also returns the old-to-new vertex map.
    pub fn identify_with_map(&self, set: VertexSet) -> Result<(Multigraph, Vec<usize>)> {
        let set = set.intersection(VertexSet::full(self.n));
        let rep = set.min().ok_or(Error::EmptySet)?;
        let mut map = vec![0usize; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if set.contains(v) && v != rep {
                continue;
            }
            map[v] = next;
            next += 1;
        }
        for v in set.iter() {
            map[v] = map[rep];
        }
        let mut g = Multigraph::empty(next)?;
        for (u, v, k) in self.pairs() {
            let (a, b) = (map[u], map[v]);
            if a != b {
                g.add(a, b, k);
            }
        }
        Ok((g, map))
    }

    /// Splits off the pair `xy`, `yz` at `y`, replacing them by an edge `xz`.
    pub fn split_off(&self, x: usize, y: usize, z: usize) -> Result<Multigraph> {
        for v in [x, y, z] {
            self.check_vertex(v)?;
        }
        if x == z {
            return Err(Error::SplitLoop { x, y });
        }
        if x == y || y == z {
            return Err(Error::Loop(y));
        }
        if self.mult(x, y) == 0 {
            return Err(Error::MissingEdge(x, y));
        }
        if self.mult(y, z) == 0 {
            return Err(Error::MissingEdge(y, z));
        }
        let mut g = self.clone();
        g.set(x, y, self.mult(x, y) - 1);
        g.set(y, z, self.mult(y, z) - 1);
        g.add(x, z, 1);
        Ok(g)
    }

    /// Suppresses a degree-two vertex. Two edges to a single neighbour would form
    /// a loop, so they are dropped together with the vertex.
    pub fn suppress(&self, v: usize) -> Result<Multigraph> {
        self.check_vertex(v)?;
        let degree = self.degree(v);
        if degree != 2 {
            return Err(Error::NotDegreeTwo { v, degree });
        }
        let nbrs: Vec<usize> = self.neighbors(v).collect();
        let mut g = self.clone();
        for &u in &nbrs {
            g.set(u, v, 0);
        }
        if let [u, w] = nbrs[..] {
            g.add(u, w, 1);
        }
        g.delete_vertex(v)
    }
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Multigraph(n={}, [", self.n)?;
        let mut first = true;
        for (u, v, k) in self.pairs() {
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if k == 1 {
                write!(f, "{u}-{v}")?;
            } else {
                write!(f, "{u}-{v}x{k}")?;
            }
        }
        write!(f, "])")
    }
}

impl RootedMultigraph {
    pub fn new(graph: Multigraph, roots: Vec<usize>) -> Result<Self> {
        let set = VertexSet::from_slice(&roots);
        if roots.iter().any(|&r| r >= graph.n()) || set.len() != roots.len() {
            return Err(Error::InvalidRoots);
        }
        Ok(RootedMultigraph { graph, roots })
    }
}

/// Named small graphs used throughout tests and the CLI.
pub mod families {
    use super::Multigraph;

    pub fn complete(n: usize) -> Multigraph {
        let mut g = Multigraph::empty(n).unwrap();
        for u in 0..n {
            for v in u + 1..n {
                g.set(u, v, 1);
            }
        }
        g
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Multigraph {
        let mut g = Multigraph::empty(a + b).unwrap();
        for u in 0..a {
            for v in a..a + b {
                g.set(u, v, 1);
            }
        }
        g
    }

    pub fn k33() -> Multigraph {
        complete_bipartite(3, 3)
    }

    pub fn cycle(n: usize) -> Multigraph {
        doubled_cycle_with(n, 1)
    }

    pub fn doubled_cycle(n: usize) -> Multigraph {
        doubled_cycle_with(n, 2)
    }

    fn doubled_cycle_with(n: usize, k: u32) -> Multigraph {
        let mut g = Multigraph::empty(n).unwrap();
        for i in 0..n {
            let j = (i + 1) % n;
            if i != j {
                g.add(i, j, k);
            }
        }
        if n == 2 {
            // a 2-cycle is a pair of parallel edges
            g.set(0, 1, 2 * k);
        }
        g
    }

    pub fn path(n: usize) -> Multigraph {
        let mut g = Multigraph::empty(n).unwrap();
        for i in 1..n {
            g.set(i - 1, i, 1);
        }
        g
    }

    pub fn doubled_path(n: usize) -> Multigraph {
        let mut g = Multigraph::empty(n).unwrap();
        for i in 1..n {
            g.set(i - 1, i, 2);
        }
        g
    }

    /// Wheel with hub 0 and rim `1..=rim` in cyclic order.
    pub fn wheel(rim: usize) -> Multigraph {
        let mut g = Multigraph::empty(rim + 1).unwrap();
        for i in 1..=rim {
            g.set(0, i, 1);
            let j = if i == rim { 1 } else { i + 1 };
            g.set(i, j, 1);
        }
        g
    }

    pub fn octahedron() -> Multigraph {
        // K6 minus the perfect matching {0,1}, {2,3}, {4,5}
        let mut g = complete(6);
        for (u, v) in [(0, 1), (2, 3), (4, 5)] {
            g.set(u, v, 0);
        }
        g
    }

    pub fn cube() -> Multigraph {
        let mut g = Multigraph::empty(8).unwrap();
        for u in 0..8usize {
            for b in 0..3 {
                let v = u ^ (1 << b);
                if u < v {
                    g.set(u, v, 1);
                }
            }
        }
        g
    }

    /// Triangles `0,1,2` and `3,4,5` joined by `0-3`, `1-4`, `2-5`.
    pub fn prism() -> Multigraph {
        Multigraph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3), (1, 4), (2, 5)]).unwrap()
    }

    pub fn petersen() -> Multigraph {
        let mut edges = Vec::new();
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Multigraph::from_edges(10, &edges).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::families::*;
    use super::*;

    #[test]
    fn build_accumulates_and_validates() {
        let g = Multigraph::build(2, &[(0, 1, 2)]).unwrap();
        assert_eq!((g.degree(0), g.degree(1)), (2, 2));
        let g = Multigraph::build(2, &[(0, 1, 1), (1, 0, 2)]).unwrap();
        assert_eq!(g.mult(0, 1), 3);
        assert_eq!(Multigraph::build(3, &[(0, 0, 1)]), Err(Error::Loop(0)));
        assert!(matches!(Multigraph::build(3, &[(0, 3, 1)]), Err(Error::VertexOutOfRange { v: 3, n: 3 })));
        assert!(Multigraph::empty(33).is_err());
    }

    #[test]
    fn k33_basics() {
        let g = k33();
        assert_eq!(g.edge_count(), 9);
        assert!(g.is_cubic());
        assert_eq!(g.cut(VertexSet::from_slice(&[0, 1, 2])).size, 9);
        assert_eq!(g.cut(VertexSet::from_slice(&[0, 1, 3])).size, 5);
        assert_eq!(g.cut(VertexSet::full(6)).size, 0);
        assert_eq!(g.cut(VertexSet::EMPTY).size, 0);
        assert!(g.edge_connectivity_at_least(3, false).unwrap());
    }

    #[test]
    fn cut_report_lists_crossing_pairs() {
        let g = doubled_cycle(4);
        let r = g.cut(VertexSet::from_slice(&[0, 1]));
        assert_eq!(r.size, 4);
        assert_eq!(r.delta, vec![(0, 3, 2), (1, 2, 2)]);
    }

    #[test]
    fn identify_doubled_cycle() {
        let g = doubled_cycle(6);
        let r = g.identify(VertexSet::from_slice(&[0, 1, 2])).unwrap();
        assert_eq!(r.graph.n(), 4);
        assert_eq!(r.graph.degree(r.roots[0]), 4);
        assert!(crate::canon::is_isomorphic(&r.graph, &doubled_cycle(4)));

        let s = g.identify(VertexSet::singleton(3)).unwrap();
        assert_eq!(s.graph, g);
        assert_eq!(s.roots, vec![3]);

        let k = k33().identify(VertexSet::from_slice(&[0, 1, 2])).unwrap();
        assert_eq!(k.graph.n(), 4);
        assert_eq!(k.graph.degree(k.roots[0]), 9);
        for v in 1..4 {
            assert_eq!(k.graph.mult(k.roots[0], v), 3);
        }
        assert_eq!(g.identify(VertexSet::EMPTY), Err(Error::EmptySet));
    }

    #[test]
    fn split_off_cases() {
        let p = path(3);
        let s = p.split_off(0, 1, 2).unwrap();
        assert_eq!(s.mult(0, 2), 1);
        assert_eq!(s.degree(1), 0);

        let dc = doubled_cycle(4);
        let s = dc.split_off(3, 0, 1).unwrap();
        assert_eq!(s.degree(0), 2);
        assert_eq!(s.mult(1, 3), 1);
        assert_eq!(s.degree(1), 4);
        assert_eq!(s.degree(3), 4);

        assert_eq!(dc.split_off(1, 0, 1), Err(Error::SplitLoop { x: 1, y: 0 }));
        assert_eq!(p.split_off(0, 2, 1), Err(Error::MissingEdge(0, 2)));
    }

    #[test]
    fn suppress_cases() {
        let s = path(3).suppress(1).unwrap();
        assert_eq!(s.n(), 2);
        assert_eq!(s.mult(0, 1), 1);

        let d = Multigraph::build(2, &[(0, 1, 2)]).unwrap().suppress(1).unwrap();
        assert_eq!(d.n(), 1);
        assert_eq!(d.degree(0), 0);

        let t = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let t = t.add_edges(0, 2, 1).unwrap().suppress(3).unwrap();
        assert_eq!(t.mult(0, 2), 2);

        let c4 = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert!(matches!(c4.add_edges(0, 2, 1).unwrap().suppress(0), Err(Error::NotDegreeTwo { v: 0, degree: 3 })));
    }

    #[test]
    fn subdivided_triangle_suppresses_to_triangle() {
        let g = Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        // 0-1-2 plus 2-3-0 with 3 a subdivision vertex of the edge 2-0
        let g = g.suppress(3).unwrap();
        assert!(crate::canon::is_isomorphic(&g, &cycle(3)));
    }

    #[test]
    fn connectivity_examples() {
        assert!(!prism().edge_connectivity_at_least(4, true).unwrap());
        assert!(cube().edge_connectivity_at_least(4, true).unwrap());
        assert!(!Multigraph::empty(3).unwrap().edge_connectivity_at_least(1, false).unwrap());
        let big = Multigraph::empty(25).unwrap();
        assert!(matches!(big.edge_connectivity_at_least(1, false), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn all_cut_sizes_matches_direct() {
        let g = petersen();
        let d = g.all_cut_sizes().unwrap();
        for mask in [0u32, 1, 7, 0x155, 0x3ff, 0x2a3] {
            assert_eq!(d[mask as usize], g.cut_size(VertexSet(mask)));
        }
    }

    #[test]
    fn families_shapes() {
        assert_eq!(octahedron().degrees(), vec![4; 6]);
        assert_eq!(cube().edge_count(), 12);
        assert_eq!(petersen().edge_count(), 15);
        assert!(petersen().is_cubic());
        assert_eq!(wheel(4).degree(0), 4);
        assert_eq!(doubled_cycle(5).degrees(), vec![4; 5]);
    }
}
