//! Structural types of 3-edge-connected, internally 4-edge-connected graphs
//! without a K3,3 immersion.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::canon::{canonical, canonical_labeling, CanonicalCode};
use crate::error::{Error, Result};
use crate::format::{code_from_string, code_to_string};
use crate::graph::{Multigraph, VertexSet, MAX_CUT_ENUMERATION};
use crate::immersion::{immerses, ImmersionWitness};
use crate::pattern::PatternGraph;
use crate::planar::is_planar;
use crate::reduction::{is_doubled_cycle, sausage_reduce_tracked};
use crate::segment::{find_segmentation, Segmentation};

pub fn is_type0(g: &Multigraph) -> bool {
    g.is_cubic() && is_planar(g)
}

pub fn is_type1(g: &Multigraph) -> Option<Segmentation> {
    find_segmentation(g, 3, 3, 4)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CycleVariant {
    /// Ends not adjacent on the cycle, joined by one extra edge.
    A,
    /// Ends share a cycle neighbour `v`, joined to it by one extra edge each.
    B,
    /// Ends adjacent on the cycle, joined by one extra edge.
    C,
}

/// `W`, `W'` and the doubled cycle of the identified graph. Cycle entries are
/// vertex classes of `G` (a singleton, `W` or `W'`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Type2Witness {
    pub w: Vec<usize>,
    pub w_prime: Vec<usize>,
    pub variant: CycleVariant,
    pub cycle: Vec<Vec<usize>>,
    /// The common neighbour for variant B.
    pub middle: Option<Vec<usize>>,
}

impl Type2Witness {
    pub fn is_valid(&self, g: &Multigraph) -> bool {
        let (w, wp) = (VertexSet::from_slice(&self.w), VertexSet::from_slice(&self.w_prime));
        (1..=2).contains(&self.w.len())
            && (1..=2).contains(&self.w_prime.len())
            && w.len() == self.w.len()
            && wp.len() == self.w_prime.len()
            && self.w.iter().chain(&self.w_prime).all(|&v| v < g.n())
            && match_type2(g, w, wp).is_some_and(|t| t.variant == self.variant)
    }
}

/// Result of matching `C + extra` against a graph with distinguished `a`, `b`.
pub(crate) struct CycleMatch {
    pub variant: CycleVariant,
    /// Cycle vertex order, starting at `a`.
    pub cycle: Vec<usize>,
    pub middle: Option<usize>,
}

/// Whether `g` is a doubled Hamiltonian cycle `C` plus `ab` (A, C) or plus `av`, `vb` (B).
pub(crate) fn match_cycle_plus(g: &Multigraph, a: usize, b: usize) -> Option<CycleMatch> {
    if g.mult(a, b) > 0 {
        let mut c = g.clone();
        c.set(a, b, g.mult(a, b) - 1);
        if is_doubled_cycle(&c) {
            let variant = if c.mult(a, b) > 0 { CycleVariant::C } else { CycleVariant::A };
            return Some(CycleMatch { variant, cycle: cycle_order(&c, a), middle: None });
        }
    }
    for v in 0..g.n() {
        if v == a || v == b || g.mult(a, v) == 0 || g.mult(v, b) == 0 {
            continue;
        }
        let mut c = g.clone();
        c.set(a, v, g.mult(a, v) - 1);
        c.set(v, b, g.mult(v, b) - 1);
        if is_doubled_cycle(&c) && c.mult(a, v) > 0 && c.mult(v, b) > 0 {
            return Some(CycleMatch { variant: CycleVariant::B, cycle: cycle_order(&c, a), middle: Some(v) });
        }
    }
    None
}

fn cycle_order(c: &Multigraph, start: usize) -> Vec<usize> {
    let mut order = vec![start];
    let mut cur = start;
    while let Some(y) = c.neighbors(cur).find(|y| !order.contains(y)) {
        order.push(y);
        cur = y;
    }
    order
}

/// Identifies each listed class to one vertex; returns the quotient and the
/// old-to-new map.
pub(crate) fn quotient(g: &Multigraph, classes: &[VertexSet]) -> (Multigraph, Vec<usize>) {
    let mut cur = g.clone();
    let mut map: Vec<usize> = (0..g.n()).collect();
    for &c in classes {
        let img = VertexSet::from_slice(&c.iter().map(|v| map[v]).collect::<Vec<_>>());
        let (next, step) = cur.identify_with_map(img).expect("class nonempty");
        for m in map.iter_mut() {
            *m = step[*m];
        }
        cur = next;
    }
    (cur, map)
}

pub(crate) fn classes_of_map(map: &[usize], k: usize) -> Vec<Vec<usize>> {
    let mut classes = vec![Vec::new(); k];
    for (v, &m) in map.iter().enumerate() {
        classes[m].push(v);
    }
    classes
}

pub(crate) fn match_type2(g: &Multigraph, w: VertexSet, wp: VertexSet) -> Option<Type2Witness> {
    if !w.intersection(wp).is_empty() {
        return None;
    }
    let (star, map) = quotient(g, &[w, wp]);
    let (a, b) = (map[w.min()?], map[wp.min()?]);
    let m = match_cycle_plus(&star, a, b)?;
    let classes = classes_of_map(&map, star.n());
    Some(Type2Witness {
        w: w.to_vec(),
        w_prime: wp.to_vec(),
        variant: m.variant,
        cycle: m.cycle.iter().map(|&c| classes[c].clone()).collect(),
        middle: m.middle.map(|c| classes[c].clone()),
    })
}

/// All sets of one or two vertices avoiding `avoid`, in increasing order.
pub(crate) fn small_sets(n: usize, avoid: VertexSet) -> Vec<VertexSet> {
    let mut out = Vec::new();
    for u in 0..n {
        if avoid.contains(u) {
            continue;
        }
        out.push(VertexSet::singleton(u));
        for v in u + 1..n {
            if !avoid.contains(v) {
                out.push(VertexSet::from_slice(&[u, v]));
            }
        }
    }
    out
}

pub fn is_type2(g: &Multigraph) -> Option<Type2Witness> {
    // cheap filter: every vertex has degree 4 except W, W' and the 2B middle
    let odd = (0..g.n()).filter(|&v| g.degree(v) != 4).count();
    if odd > 5 || g.n() < 3 {
        return None;
    }
    let sets = small_sets(g.n(), VertexSet::EMPTY);
    for (i, &w) in sets.iter().enumerate() {
        for &wp in &sets[i + 1..] {
            if let Some(t) = match_type2(g, w, wp) {
                return Some(t);
            }
        }
    }
    None
}

/// A type-3 catalog graph in canonical labelling with its expandable pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub code: CanonicalCode,
    pub marked: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SporadicCatalog {
    pub t3: Vec<CatalogEntry>,
    pub t4: Vec<CanonicalCode>,
}

impl SporadicCatalog {
    /// One entry per line: `T3 <code> <a>-<b>,…` or `T4 <code>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# sporadic catalog: {} T3, {} T4", self.t3.len(), self.t4.len());
        for e in &self.t3 {
            let pairs: Vec<String> = e.marked.iter().map(|(a, b)| format!("{a}-{b}")).collect();
            let _ = writeln!(out, "T3 {} {}", code_to_string(&e.code), pairs.join(","));
        }
        for c in &self.t4 {
            let _ = writeln!(out, "T4 {}", code_to_string(c));
        }
        out
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut cat = SporadicCatalog::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: &str| Error::Parse { line: i + 1, msg: msg.to_string() };
            let mut parts = line.split_whitespace();
            let tag = parts.next().ok_or_else(|| err("empty entry"))?;
            let code = code_from_string(parts.next().ok_or_else(|| err("missing code"))?)
                .map_err(|_| err("bad canonical code"))?;
            match tag {
                "T3" => {
                    let mut marked = Vec::new();
                    if let Some(list) = parts.next() {
                        for p in list.split(',').filter(|p| !p.is_empty()) {
                            let (a, b) = p.split_once('-').ok_or_else(|| err("bad pair"))?;
                            let a: usize = a.parse().map_err(|_| err("bad pair"))?;
                            let b: usize = b.parse().map_err(|_| err("bad pair"))?;
                            if a >= code.n || b >= code.n || a == b {
                                return Err(err("pair out of range"));
                            }
                            marked.push((a.min(b), a.max(b)));
                        }
                    }
                    cat.t3.push(CatalogEntry { code, marked });
                }
                "T4" => cat.t4.push(code),
                _ => return Err(err("expected T3 or T4")),
            }
            if parts.next().is_some() {
                return Err(err("trailing fields"));
            }
        }
        Ok(cat)
    }

    fn t3_index(&self) -> BTreeMap<&CanonicalCode, &CatalogEntry> {
        self.t3.iter().map(|e| (&e.code, e)).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum Classification {
    HasK33 { witness: ImmersionWitness },
    Type0,
    Type1 { segmentation: Segmentation },
    Type2 { witness: Type2Witness },
    /// `expanded` lists catalog-labelled pairs that carry a longer chain in `G`.
    Type3 { code: CanonicalCode, expanded: Vec<(usize, usize)> },
    Type4 { code: CanonicalCode },
    /// No structural type matched, no witness found, and no catalog was supplied.
    K33FreeUnclassified,
}

impl Classification {
    pub fn label(&self) -> &'static str {
        match self {
            Classification::HasK33 { .. } => "K33",
            Classification::Type0 => "type0",
            Classification::Type1 { .. } => "type1",
            Classification::Type2 { .. } => "type2",
            Classification::Type3 { .. } => "type3",
            Classification::Type4 { .. } => "type4",
            Classification::K33FreeUnclassified => "k33-free",
        }
    }

    pub fn is_structural(&self) -> bool {
        !matches!(self, Classification::HasK33 { .. } | Classification::K33FreeUnclassified)
    }
}

/// Type 4 by membership, or type 3 when the sausage reduction is a catalog
/// graph and every shortened chain sits on a marked pair.
pub fn classify_sporadic(g: &Multigraph, catalog: &SporadicCatalog) -> Option<Classification> {
    let code = canonical(g);
    if catalog.t4.contains(&code) {
        return Some(Classification::Type4 { code });
    }
    let red = sausage_reduce_tracked(g);
    let (perm, rcode) = canonical_labeling(&red.graph, &vec![0; red.graph.n()]);
    let index = catalog.t3_index();
    let entry = index.get(&rcode)?;
    let mut expanded = Vec::new();
    for &(a, b) in &red.shortened {
        let (x, y) = (perm[a].min(perm[b]), perm[a].max(perm[b]));
        if !entry.marked.contains(&(x, y)) {
            return None;
        }
        expanded.push((x, y));
    }
    expanded.sort();
    Some(Classification::Type3 { code: rcode, expanded })
}

/// Rejects graphs outside the theorem's hypotheses.
pub fn check_hypotheses(g: &Multigraph) -> Result<()> {
    if g.n() > MAX_CUT_ENUMERATION {
        return Err(Error::TooLarge { n: g.n(), max: MAX_CUT_ENUMERATION });
    }
    if g.n() < 6 {
        return Err(Error::Precondition(format!("need at least 6 vertices, got {}", g.n())));
    }
    if !g.edge_connectivity_at_least(3, false)? {
        return Err(Error::Precondition("graph is not 3-edge-connected".into()));
    }
    if !g.edge_connectivity_at_least(4, true)? {
        return Err(Error::Precondition("graph is not internally 4-edge-connected".into()));
    }
    Ok(())
}

/// First structural type in the order 0, 1, 2, sporadic.
pub fn structural_type(g: &Multigraph, catalog: Option<&SporadicCatalog>) -> Option<Classification> {
    if is_type0(g) {
        return Some(Classification::Type0);
    }
    if let Some(s) = is_type1(g) {
        return Some(Classification::Type1 { segmentation: s });
    }
    if let Some(w) = is_type2(g) {
        return Some(Classification::Type2 { witness: w });
    }
    catalog.and_then(|c| classify_sporadic(g, c))
}

/// A structural type, or a K3,3 witness. Neither (with a catalog present) is
/// reported as a theorem violation.
pub fn classify(g: &Multigraph, catalog: Option<&SporadicCatalog>) -> Result<Classification> {
    check_hypotheses(g)?;
    if let Some(t) = structural_type(g, catalog) {
        return Ok(t);
    }
    if let Some(witness) = immerses(g, &PatternGraph::K33) {
        return Ok(Classification::HasK33 { witness });
    }
    if catalog.is_none() {
        return Ok(Classification::K33FreeUnclassified);
    }
    Err(Error::TheoremViolation(format!(
        "no K3,3 immersion and no structural type for {}",
        code_to_string(&canonical(g))
    )))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict")]
pub enum K33K5Verdict {
    HasK33 { witness: ImmersionWitness },
    HasK5 { witness: ImmersionWitness },
    Retained { classification: Classification },
}

/// Classification with K5 also forbidden: a structural graph that immerses K5
/// is excluded.
pub fn classify_no_k33_k5(g: &Multigraph, catalog: Option<&SporadicCatalog>) -> Result<K33K5Verdict> {
    match classify(g, catalog)? {
        Classification::HasK33 { witness } => Ok(K33K5Verdict::HasK33 { witness }),
        c => match immerses(g, &PatternGraph::K5) {
            Some(witness) => Ok(K33K5Verdict::HasK5 { witness }),
            None => Ok(K33K5Verdict::Retained { classification: c }),
        },
    }
}
