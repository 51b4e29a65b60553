//! Per-order census driver: simple graphs, K3,3 filter, repair, closure.

use std::collections::HashMap;
use std::fs::{self, OpenOptions};
use std::io::Write as _;
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::sync::Mutex;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::generate::{enumerate_simple_connected, read_graph6_list, MAX_GENERATED_N};
use super::repair::{minimal_assignments, obstruction_closure, repair, Skeleton, DEFAULT_CAP};
use crate::canon::canonical;
use crate::error::{Error, Result};
use crate::format::{code_from_string, code_to_string, write_graph6};
use crate::graph::Multigraph;
use crate::immersion::immerses;
use crate::pattern::PatternGraph;

#[derive(Clone, Debug)]
pub struct CensusConfig {
    pub n: RangeInclusive<usize>,
    pub cap: u32,
    /// graph6 list of simple graphs replacing the internal generator.
    pub input: Option<PathBuf>,
    pub jobs: Option<usize>,
    /// Directory for per-`(n, cap)` resumable result files.
    pub cache_dir: Option<PathBuf>,
    /// Also keep the K3,3-immersing graphs adjacent to the closure.
    pub collect_frontier: bool,
}

impl Default for CensusConfig {
    fn default() -> Self {
        CensusConfig { n: 6..=8, cap: DEFAULT_CAP, input: None, jobs: None, cache_dir: None, collect_frontier: false }
    }
}

impl CensusConfig {
    pub fn validate(&self) -> Result<()> {
        if *self.n.start() < 4 || *self.n.end() > MAX_GENERATED_N || self.n.is_empty() {
            return Err(Error::Precondition(format!(
                "census orders must lie in 4..={MAX_GENERATED_N}, got {:?}",
                self.n
            )));
        }
        if self.cap == 0 {
            return Err(Error::Precondition("multiplicity cap must be at least 1".into()));
        }
        Ok(())
    }

    /// Runs `f` on a pool with the configured worker count.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> Result<T> {
        match self.jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map(|p| p.install(f))
                .map_err(|e| Error::Precondition(format!("thread pool: {e}"))),
            None => Ok(f()),
        }
    }
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct LevelCounts {
    pub n: usize,
    pub connected: usize,
    pub k33_free: usize,
    /// K3,3-free simple graphs with a nonempty repair.
    pub repairable: usize,
    pub minimal: usize,
    pub obstructions: usize,
    pub frontier: usize,
    pub seconds_step1: f64,
    pub seconds_steps23: f64,
}

#[derive(Clone, Debug, Default)]
pub struct LevelResult {
    pub counts: LevelCounts,
    /// Every multigraph of the closure: census conditions, cap, no K3,3.
    pub obstructions: Vec<Multigraph>,
    pub frontier: Vec<Multigraph>,
}

/// The simple connected graphs of order `n` from the generator or `cfg.input`.
pub fn simple_graphs(n: usize, cfg: &CensusConfig) -> Result<Vec<Multigraph>> {
    match &cfg.input {
        Some(path) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Error::Precondition(format!("reading {}: {e}", path.display())))?;
            Ok(read_graph6_list(&text)?.into_iter().filter(|g| g.n() == n && g.is_connected()).collect())
        }
        None => enumerate_simple_connected(n),
    }
}

pub fn filter_k33_free(graphs: Vec<Multigraph>) -> Vec<Multigraph> {
    graphs.into_par_iter().filter(|g| immerses(g, &PatternGraph::K33).is_none()).collect()
}

struct Cache {
    done: HashMap<String, Vec<Multigraph>>,
    file: Mutex<Option<fs::File>>,
}

impl Cache {
    fn open(cfg: &CensusConfig, n: usize) -> Result<Option<Cache>> {
        let Some(dir) = &cfg.cache_dir else { return Ok(None) };
        let io = |e: std::io::Error| Error::Precondition(format!("cache: {e}"));
        fs::create_dir_all(dir).map_err(io)?;
        let path = dir.join(format!("census-n{n}-cap{}.txt", cfg.cap));
        let mut done = HashMap::new();
        if let Ok(text) = fs::read_to_string(&path) {
            for line in text.lines() {
                let mut parts = line.split('\t');
                let (Some(key), Some(list)) = (parts.next(), parts.next()) else { continue };
                let graphs: Result<Vec<Multigraph>> = list
                    .split(' ')
                    .filter(|s| !s.is_empty())
                    .map(|s| code_from_string(s).map(|c| c.to_graph()))
                    .collect();
                // a torn final line is recomputed
                if let Ok(gs) = graphs {
                    done.insert(key.to_string(), gs);
                }
            }
        }
        let file = OpenOptions::new().create(true).append(true).open(&path).map_err(io)?;
        Ok(Some(Cache { done, file: Mutex::new(Some(file)) }))
    }

    fn record(&self, key: &str, graphs: &[Multigraph]) {
        let codes: Vec<String> = graphs.iter().map(|g| code_to_string(&canonical(g))).collect();
        if let Some(f) = self.file.lock().expect("cache lock").as_mut() {
            // best effort: a failed append only costs recomputation
            let _ = writeln!(f, "{key}\t{}", codes.join(" "));
        }
    }
}

/// Steps 1 to 3 at one order.
pub fn census_level(n: usize, cfg: &CensusConfig) -> Result<LevelResult> {
    let t1 = Instant::now();
    let connected = simple_graphs(n, cfg)?;
    let n_connected = connected.len();
    let free = filter_k33_free(connected);
    let seconds_step1 = t1.elapsed().as_secs_f64();

    let cache = if cfg.collect_frontier { None } else { Cache::open(cfg, n)? };
    let t2 = Instant::now();
    let per_graph: Vec<(usize, usize, Vec<Multigraph>, Vec<Multigraph>)> = free
        .par_iter()
        .map(|g| {
            let key = write_graph6(g);
            if let Some(hit) = cache.as_ref().and_then(|c| c.done.get(&key)) {
                return (usize::from(!hit.is_empty()), 0, hit.clone(), Vec::new());
            }
            let minimal = if cfg.collect_frontier { minimal_assignments(g, cfg.cap) } else { Vec::new() };
            let rep = repair(g, cfg.cap);
            let (closed, mut frontier) = obstruction_closure(&rep, cfg.cap);
            if cfg.collect_frontier {
                let sk = Skeleton::new(g);
                frontier.extend(
                    minimal
                        .iter()
                        .map(|m| sk.realize(m))
                        .filter(|h| immerses(h, &PatternGraph::K33).is_some()),
                );
            }
            if let Some(c) = &cache {
                c.record(&key, &closed);
            }
            (usize::from(!rep.is_empty()), rep.len(), closed, frontier)
        })
        .collect();
    let seconds_steps23 = t2.elapsed().as_secs_f64();

    let mut result = LevelResult::default();
    let mut counts = LevelCounts { n, connected: n_connected, k33_free: free.len(), seconds_step1, seconds_steps23, ..Default::default() };
    for (r, m, closed, frontier) in per_graph {
        counts.repairable += r;
        counts.minimal += m;
        result.obstructions.extend(closed);
        result.frontier.extend(frontier);
    }
    result.obstructions.sort_by_cached_key(canonical);
    counts.obstructions = result.obstructions.len();
    counts.frontier = result.frontier.len();
    result.counts = counts;
    Ok(result)
}
