//! Theorem check over census graphs: the oracle finds K3,3 exactly when no
//! structural type applies.

use std::collections::HashSet;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::run::{census_level, CensusConfig, LevelCounts, LevelResult};
use crate::canon::canonical;
use crate::classify::{structural_type, Classification, SporadicCatalog};
use crate::error::Result;
use crate::format::code_to_string;
use crate::graph::Multigraph;
use crate::immersion::{immerses, verify_witness};
use crate::pattern::PatternGraph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub code: String,
    /// Structural label found, if any.
    pub structural: Option<String>,
    pub immerses_k33: bool,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct LevelVerification {
    pub n: usize,
    pub census: LevelCounts,
    /// Distinct graphs checked: the K3,3-free closure plus its K3,3 frontier.
    pub qualifying: usize,
    pub has_k33: usize,
    pub type0: usize,
    pub type1: usize,
    pub type2: usize,
    pub type3: usize,
    pub type4: usize,
    pub violations: Vec<Violation>,
    pub seconds: f64,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct VerificationReport {
    pub levels: Vec<LevelVerification>,
    pub catalog_t3: usize,
    pub catalog_t4: usize,
    pub seconds: f64,
}

impl VerificationReport {
    pub fn violation_count(&self) -> usize {
        self.levels.iter().map(|l| l.violations.len()).sum()
    }
}

enum Outcome {
    K33,
    Structural(&'static str),
    Bad(Violation),
}

fn check_one(g: &Multigraph, catalog: &SporadicCatalog) -> Outcome {
    let st = structural_type(g, Some(catalog));
    let witness = immerses(g, &PatternGraph::K33);
    let certified = witness.as_ref().is_some_and(|w| verify_witness(g, &PatternGraph::K33, w));
    match (&st, witness.is_some()) {
        (None, true) if certified => Outcome::K33,
        (Some(t), false) => Outcome::Structural(t.label()),
        _ => Outcome::Bad(Violation {
            code: code_to_string(&canonical(g)),
            structural: st.as_ref().map(|t| Classification::label(t).to_string()),
            immerses_k33: witness.is_some(),
        }),
    }
}

/// Checks every distinct graph of the closure and frontier of `level`.
pub fn verify_level(level: &LevelResult, catalog: &SporadicCatalog) -> LevelVerification {
    let t = Instant::now();
    let mut seen = HashSet::new();
    let graphs: Vec<&Multigraph> =
        level.obstructions.iter().chain(&level.frontier).filter(|g| seen.insert(canonical(g))).collect();
    let outcomes: Vec<Outcome> = graphs.par_iter().map(|g| check_one(g, catalog)).collect();
    let mut out = LevelVerification {
        n: level.counts.n,
        census: level.counts.clone(),
        qualifying: graphs.len(),
        ..Default::default()
    };
    for o in outcomes {
        match o {
            Outcome::K33 => out.has_k33 += 1,
            Outcome::Structural("type0") => out.type0 += 1,
            Outcome::Structural("type1") => out.type1 += 1,
            Outcome::Structural("type2") => out.type2 += 1,
            Outcome::Structural("type3") => out.type3 += 1,
            Outcome::Structural(_) => out.type4 += 1,
            Outcome::Bad(v) => out.violations.push(v),
        }
    }
    out.violations.sort_by(|a, b| a.code.cmp(&b.code));
    out.seconds = t.elapsed().as_secs_f64();
    out
}

/// Verification from precomputed levels (which must carry their frontier).
pub fn verify_levels(levels: &[LevelResult], catalog: &SporadicCatalog) -> VerificationReport {
    let t = Instant::now();
    let levels = levels.iter().map(|l| verify_level(l, catalog)).collect();
    VerificationReport {
        levels,
        catalog_t3: catalog.t3.len(),
        catalog_t4: catalog.t4.len(),
        seconds: t.elapsed().as_secs_f64(),
    }
}

/// Runs the census over `cfg.n` with frontier collection and checks it.
pub fn verify_theorem(cfg: &CensusConfig, catalog: &SporadicCatalog) -> Result<VerificationReport> {
    cfg.validate()?;
    let cfg = CensusConfig { collect_frontier: true, ..cfg.clone() };
    cfg.install(|| {
        let levels = cfg.n.clone().map(|n| census_level(n, &cfg)).collect::<Result<Vec<_>>>()?;
        Ok(verify_levels(&levels, catalog))
    })?
}
