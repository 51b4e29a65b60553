//! Sporadic catalog derivation from census closures.

use serde::{Deserialize, Serialize};

use super::run::{census_level, CensusConfig, LevelResult};
use crate::canon::{canonical_labeling, CanonicalCode};
use crate::classify::{is_type0, is_type1, is_type2, CatalogEntry, SporadicCatalog};
use crate::error::Result;
use crate::graph::Multigraph;
use crate::immersion::immerses;
use crate::pattern::PatternGraph;
use crate::reduction::{expand_sausage, find_sausages, SausageChain};

/// Sausage reduced and none of types 0, 1, 2.
pub fn is_sporadic_candidate(g: &Multigraph) -> bool {
    find_sausages(g).iter().all(|c| c.order() <= 2)
        && !is_type0(g)
        && is_type1(g).is_none()
        && is_type2(g).is_none()
}

/// Per-order tallies of a derivation.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogLevel {
    pub n: usize,
    pub closure: usize,
    pub t3: usize,
    pub t4: usize,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct CatalogDerivation {
    pub catalog: SporadicCatalog,
    pub levels: Vec<CatalogLevel>,
}

/// Order-2 chains whose order-3 expansion stays K3,3-free, as canonical pairs.
fn marked_pairs(g: &Multigraph, perm: &[usize]) -> Vec<(usize, usize)> {
    let mut marked: Vec<(usize, usize)> = find_sausages(g)
        .into_iter()
        .filter(|c| c.order() == 2)
        .filter(|c| match expand_sausage(g, c, 3) {
            Ok(h) => immerses(&h, &PatternGraph::K33).is_none(),
            Err(_) => false,
        })
        .map(|c| {
            let (a, b) = (perm[c.vertices[0]], perm[c.vertices[1]]);
            (a.min(b), a.max(b))
        })
        .collect();
    marked.sort();
    marked.dedup();
    marked
}

/// Splits candidates into T3 (some marked pair) and T4, one entry per class.
pub fn split_candidates(candidates: &[Multigraph]) -> SporadicCatalog {
    let mut cat = SporadicCatalog::default();
    let mut seen: Vec<CanonicalCode> = Vec::new();
    for g in candidates {
        let (perm, code) = canonical_labeling(g, &vec![0; g.n()]);
        if seen.contains(&code) {
            continue;
        }
        seen.push(code.clone());
        let marked = marked_pairs(g, &perm);
        if marked.is_empty() {
            cat.t4.push(code);
        } else {
            cat.t3.push(CatalogEntry { code, marked });
        }
    }
    cat.t3.sort_by(|a, b| a.code.cmp(&b.code));
    cat.t4.sort();
    cat
}

/// Catalog from precomputed census levels.
pub fn catalog_from_levels(levels: &[LevelResult]) -> CatalogDerivation {
    let mut all = SporadicCatalog::default();
    let mut tallies = Vec::new();
    for level in levels {
        let candidates: Vec<Multigraph> =
            level.obstructions.iter().filter(|g| is_sporadic_candidate(g)).cloned().collect();
        let part = split_candidates(&candidates);
        tallies.push(CatalogLevel {
            n: level.counts.n,
            closure: level.obstructions.len(),
            t3: part.t3.len(),
            t4: part.t4.len(),
        });
        all.t3.extend(part.t3);
        all.t4.extend(part.t4);
    }
    CatalogDerivation { catalog: all, levels: tallies }
}

/// Runs the census over `cfg.n` and derives the catalog.
pub fn derive_catalog(cfg: &CensusConfig) -> Result<CatalogDerivation> {
    cfg.validate()?;
    let levels = cfg.install(|| cfg.n.clone().map(|n| census_level(n, cfg)).collect::<Result<Vec<_>>>())??;
    Ok(catalog_from_levels(&levels))
}

/// The canonical graph of `entry` with every marked pair expanded to the
/// given chain orders (`orders[i]` for `entry.marked[i]`, at least 2).
pub fn expand_marked(entry: &CatalogEntry, orders: &[usize]) -> Result<Multigraph> {
    let mut g = entry.code.to_graph();
    for (&(a, b), &k) in entry.marked.iter().zip(orders) {
        g = expand_sausage(&g, &SausageChain { vertices: vec![a, b] }, k)?;
    }
    Ok(g)
}
