//! Canonical forms for small vertex-coloured multigraphs.
//!
//! Individualization-refinement: the initial partition is seeded by colour and
//! degree, refined to an equitable-style partition using neighbour-cell
//! multiplicity signatures, and the search tree over individualized vertices is
//! explored completely. The canonical code is the least upper-triangle
//! multiplicity vector over all discrete leaves. Automorphisms found at leaves
//! prune sibling branches in the same orbit.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::graph::{Multigraph, RootedMultigraph};

/// Total-order key identifying a (coloured) multigraph up to isomorphism.
/// Serializes as its compact string form.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct CanonicalCode {
    pub n: usize,
    /// Vertex colours in canonical order; all zero for uncoloured graphs.
    pub colors: Vec<u32>,
    /// Upper-triangle multiplicities of the canonically relabeled graph.
    pub upper: Vec<u32>,
}

impl CanonicalCode {
    pub fn to_graph(&self) -> Multigraph {
        Multigraph::from_upper(self.n, &self.upper).expect("code holds a valid upper triangle")
    }
}

impl From<CanonicalCode> for String {
    fn from(code: CanonicalCode) -> String {
        crate::format::code_to_string(&code)
    }
}

impl TryFrom<String> for CanonicalCode {
    type Error = crate::error::Error;

    fn try_from(s: String) -> crate::error::Result<Self> {
        crate::format::code_from_string(&s)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::code_to_string(self))
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", crate::format::code_to_string(self))
    }
}

pub fn canonical(g: &Multigraph) -> CanonicalCode {
    canonical_labeling(g, &vec![0; g.n()]).1
}

/// Canonical code of a rooted graph: root `i` carries colour `i + 1`.
pub fn canonical_rooted(r: &RootedMultigraph) -> CanonicalCode {
    let mut colors = vec![0u32; r.graph.n()];
    for (i, &v) in r.roots.iter().enumerate() {
        colors[v] = i as u32 + 1;
    }
    canonical_labeling(&r.graph, &colors).1
}

pub fn is_isomorphic(g: &Multigraph, h: &Multigraph) -> bool {
    g.n() == h.n() && g.edge_count() == h.edge_count() && canonical(g) == canonical(h)
}

/// Returns `perm` (old vertex `v` gets label `perm[v]`) and the canonical code.
pub fn canonical_labeling(g: &Multigraph, colors: &[u32]) -> (Vec<usize>, CanonicalCode) {
    let n = g.n();
    if n == 0 {
        return (Vec::new(), CanonicalCode { n: 0, colors: Vec::new(), upper: Vec::new() });
    }
    let degrees = g.degrees();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (colors[v], degrees[v]));
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for v in order {
        match cells.last_mut() {
            Some(cell) if (colors[cell[0]], degrees[cell[0]]) == (colors[v], degrees[v]) => cell.push(v),
            _ => cells.push(vec![v]),
        }
    }
    let cells = refine(g, cells);
    let mut search = Search { g, colors, best: None, autos: Vec::new() };
    search.descend(cells, &mut Vec::new());
    let (code, perm) = search.best.expect("search visits at least one leaf");
    (perm, code)
}

/// Relabels `g` into canonical order.
pub fn canonical_form(g: &Multigraph) -> Multigraph {
    canonical(g).to_graph()
}

fn refine(g: &Multigraph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut cell_of = vec![0usize; n];
    loop {
        for (i, cell) in cells.iter().enumerate() {
            for &v in cell {
                cell_of[v] = i;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(n);
        let mut split = false;
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<(usize, u32)>, usize)> = cell
                .iter()
                .map(|&v| {
                    let mut sig: Vec<(usize, u32)> =
                        (0..n).filter(|&u| g.mult(v, u) > 0).map(|u| (cell_of[u], g.mult(v, u))).collect();
                    sig.sort_unstable();
                    (sig, v)
                })
                .collect();
            keyed.sort();
            let start = next.len();
            for (i, (sig, v)) in keyed.iter().enumerate() {
                if i > 0 && keyed[i - 1].0 == *sig {
                    next.last_mut().unwrap().push(*v);
                } else {
                    next.push(vec![*v]);
                }
            }
            if next.len() - start > 1 {
                split = true;
            }
        }
        cells = next;
        if !split {
            return cells;
        }
    }
}

struct Search<'a> {
    g: &'a Multigraph,
    colors: &'a [u32],
    best: Option<(CanonicalCode, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<Vec<usize>>, prefix: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let mut explored: Vec<usize> = Vec::new();
        let mut candidates = cells[target].clone();
        candidates.sort_unstable();
        for v in candidates {
            if !explored.is_empty() && self.same_orbit(prefix, &explored, v) {
                continue;
            }
            let mut next = Vec::with_capacity(cells.len() + 1);
            next.extend_from_slice(&cells[..target]);
            next.push(vec![v]);
            next.push(cells[target].iter().copied().filter(|&u| u != v).collect());
            next.extend_from_slice(&cells[target + 1..]);
            let next = refine(self.g, next);
            prefix.push(v);
            self.descend(next, prefix);
            prefix.pop();
            explored.push(v);
        }
    }

    /// Whether `v` lies in the orbit of an explored vertex under the known
    /// automorphisms that fix `prefix` pointwise.
    fn same_orbit(&self, prefix: &[usize], explored: &[usize], v: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let next = p[y];
                p[y] = r;
                y = next;
            }
            r
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().any(|&p| a[p] != p) {
                continue;
            }
            any = true;
            for x in 0..n {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, a[x]));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&u| find(&mut parent, u) == rv)
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.g.n();
        let mut perm = vec![0usize; n];
        for (label, cell) in cells.iter().enumerate() {
            perm[cell[0]] = label;
        }
        let mut inv = vec![0usize; n];
        for v in 0..n {
            inv[perm[v]] = v;
        }
        let mut upper = Vec::with_capacity(n * (n - 1) / 2);
        for a in 0..n {
            for b in a + 1..n {
                upper.push(self.g.mult(inv[a], inv[b]));
            }
        }
        let colors: Vec<u32> = (0..n).map(|a| self.colors[inv[a]]).collect();
        let code = CanonicalCode { n, colors, upper };
        match &self.best {
            None => self.best = Some((code, perm)),
            Some((best, best_perm)) => match code.cmp(best) {
                std::cmp::Ordering::Less => self.best = Some((code, perm)),
                std::cmp::Ordering::Equal => {
                    // v ↦ the vertex holding v's label in the best leaf
                    let mut best_inv = vec![0usize; n];
                    for (v, &l) in best_perm.iter().enumerate() {
                        best_inv[l] = v;
                    }
                    let auto: Vec<usize> = (0..n).map(|v| best_inv[perm[v]]).collect();
                    if auto.iter().enumerate().any(|(v, &w)| v != w) {
                        self.autos.push(auto);
                    }
                }
                std::cmp::Ordering::Greater => {}
            },
        }
    }
}

/// All automorphisms of a coloured graph, by brute-force permutation search.
/// Intended for pattern graphs with at most a handful of vertices.
pub fn automorphisms(g: &Multigraph, colors: &[u32]) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut out = Vec::new();
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        g: &Multigraph,
        colors: &[u32],
        i: usize,
        perm: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
    ) {
        let n = g.n();
        if i == n {
            out.push(perm.clone());
            return;
        }
        for w in 0..n {
            if used[w] || colors[w] != colors[i] || g.degree(w) != g.degree(i) {
                continue;
            }
            if (0..i).any(|j| g.mult(i, j) != g.mult(w, perm[j])) {
                continue;
            }
            perm[i] = w;
            used[w] = true;
            rec(g, colors, i + 1, perm, used, out);
            used[w] = false;
        }
        perm[i] = usize::MAX;
    }
    rec(g, colors, 0, &mut perm, &mut used, &mut out);
    out
}
