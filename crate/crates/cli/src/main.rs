//! `k33`: command-line access to the k33-core library.
//!
//! Exit codes: 0 success or affirmative answer, 1 negative answer or failed
//! verification, 2 usage or guard error.

use std::fs;
use std::io::{self, Read, Write};
use std::ops::RangeInclusive;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use k33_core::branch::{branchwidth_exact, caterpillar_decomposition, good_ordering, width};
use k33_core::census::{census_level, derive_catalog, is_sporadic_candidate, verify_theorem, CensusConfig, DEFAULT_CAP};
use k33_core::classify::{classify, SporadicCatalog};
use k33_core::format::{parse_graph_auto, parse_mgf, to_dot, write_mgf};
use k33_core::reduction::{decompose, sausage_reduce};
use k33_core::segment::find_segmentation;
use k33_core::{immerses_rooted, Error, Multigraph, PatternGraph, RootedMultigraph};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "k33", version, about = "K3,3 immersion search and structure tools for small multigraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether a pattern immerses in the graph; prints a witness or "none".
    Immerse {
        /// k33, k5, w4, eyeglasses, or file:<mgf>
        #[arg(long)]
        pattern: String,
        /// Host roots, matched in order to the pattern roots.
        #[arg(long, value_delimiter = ',')]
        roots: Vec<usize>,
        /// Roots of a file pattern.
        #[arg(long, value_delimiter = ',')]
        pattern_roots: Vec<usize>,
        graph: String,
    },
    /// Structural type or a K3,3 witness.
    Classify {
        #[arg(long)]
        catalog: Option<PathBuf>,
        graph: String,
    },
    /// Split into 3-edge-connected, internally 4-edge-connected components.
    Decompose { graph: String },
    /// Sausage reduction.
    Reduce { graph: String },
    /// Search for an (a,b)-segmentation of the given width.
    Segment {
        #[arg(long, default_value_t = 3)]
        a: usize,
        #[arg(long, default_value_t = 3)]
        b: usize,
        #[arg(long, default_value_t = 4)]
        width: u32,
        graph: String,
    },
    /// Branch-width: exact search or the segmentation caterpillar.
    Bw {
        mode: BwMode,
        /// Emit the constructed decomposition as DOT instead of JSON.
        #[arg(long)]
        dot: bool,
        graph: String,
    },
    /// Census steps 1 to 3 with per-order tallies.
    Census {
        #[command(flatten)]
        run: RunArgs,
    },
    /// Derive the sporadic catalog and write it to a file.
    DeriveCatalog {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        out: PathBuf,
    },
    /// Check the classification against the oracle on every census graph.
    Verify {
        #[command(flatten)]
        run: RunArgs,
        #[arg(long)]
        catalog: PathBuf,
    },
    /// Graphviz rendering.
    Export {
        #[arg(long)]
        dot: bool,
        graph: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BwMode {
    Exact,
    Construct,
}

#[derive(clap::Args)]
struct RunArgs {
    /// Order range such as 6..8, or a single order.
    #[arg(long, default_value = "6..8", value_parser = parse_range)]
    n: RangeInclusive<usize>,
    #[arg(long, default_value_t = DEFAULT_CAP)]
    cap: u32,
    /// graph6 list replacing the built-in generator.
    #[arg(long = "in")]
    input: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    /// Directory for resumable per-order results.
    #[arg(long)]
    cache: Option<PathBuf>,
}

impl RunArgs {
    fn config(&self) -> CensusConfig {
        CensusConfig {
            n: self.n.clone(),
            cap: self.cap,
            input: self.input.clone(),
            jobs: self.jobs,
            cache_dir: self.cache.clone(),
            collect_frontier: false,
        }
    }
}

fn parse_range(s: &str) -> Result<RangeInclusive<usize>, String> {
    let bad = |_| format!("expected N or A..B, got {s:?}");
    match s.split_once("..") {
        Some((a, b)) => {
            let b = b.strip_prefix('=').unwrap_or(b);
            Ok(a.trim().parse().map_err(bad)?..=b.trim().parse().map_err(bad)?)
        }
        None => {
            let n = s.trim().parse().map_err(bad)?;
            Ok(n..=n)
        }
    }
}

enum Failure {
    Negative,
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read_text(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("stdin: {e}")))?;
        Ok(s)
    } else {
        fs::read_to_string(arg).map_err(|e| Failure::Usage(format!("{arg}: {e}")))
    }
}

fn read_graph(arg: &str) -> Result<Multigraph, Failure> {
    Ok(parse_graph_auto(&read_text(arg)?)?)
}

/// Writes to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    let mut out = io::stdout().lock();
    let _ = out.write_all(text.as_bytes()).and_then(|()| out.flush());
}

fn print_json<T: Serialize>(value: &T) -> Outcome {
    let s = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(format!("json: {e}")))?;
    emit(&s);
    emit("\n");
    Ok(())
}

fn immerse(pattern: &str, roots: Vec<usize>, pattern_roots: Vec<usize>, graph: &str) -> Outcome {
    let g = read_graph(graph)?;
    let p = match pattern.strip_prefix("file:") {
        Some(path) => PatternGraph::custom(parse_mgf(&read_text(path)?)?, pattern_roots)?,
        None => PatternGraph::parse(pattern)?,
    };
    let host = RootedMultigraph::new(g, roots)?;
    match immerses_rooted(&host, &p)? {
        Some(w) => {
            emit(&w.describe(&p.graph()));
            Ok(())
        }
        None => {
            emit("none\n");
            Err(Failure::Negative)
        }
    }
}

fn load_catalog(path: &PathBuf) -> Result<SporadicCatalog, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    Ok(SporadicCatalog::parse(&text)?)
}

fn bw(mode: BwMode, dot: bool, graph: &str) -> Outcome {
    let g = read_graph(graph)?;
    match mode {
        BwMode::Exact => {
            emit(&format!("{}\n", branchwidth_exact(&g)?));
            Ok(())
        }
        BwMode::Construct => {
            let Some(seg) = find_segmentation(&g, 3, 3, 4) else {
                emit("none\n");
                return Err(Failure::Negative);
            };
            let bd = caterpillar_decomposition(&g, &good_ordering(&g, &seg)?)?;
            let w = width(&g, &bd)?;
            if dot {
                emit(&bd.to_dot(&g));
                Ok(())
            } else {
                #[derive(Serialize)]
                struct Built<'a> {
                    width: usize,
                    decomposition: &'a k33_core::branch::BranchDecomposition,
                }
                print_json(&Built { width: w, decomposition: &bd })
            }
        }
    }
}

#[derive(Serialize)]
struct CensusLine {
    #[serde(flatten)]
    counts: k33_core::census::LevelCounts,
    sporadic: usize,
}

fn census(run: &RunArgs) -> Outcome {
    let cfg = run.config();
    cfg.validate()?;
    let lines = cfg.install(|| {
        run.n
            .clone()
            .map(|n| {
                census_level(n, &cfg).map(|l| CensusLine {
                    sporadic: l.obstructions.iter().filter(|g| is_sporadic_candidate(g)).count(),
                    counts: l.counts,
                })
            })
            .collect::<k33_core::Result<Vec<_>>>()
    })??;
    print_json(&lines)
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Immerse { pattern, roots, pattern_roots, graph } => immerse(&pattern, roots, pattern_roots, &graph),
        Command::Classify { catalog, graph } => {
            let g = read_graph(&graph)?;
            let cat = catalog.as_ref().map(load_catalog).transpose()?;
            match classify(&g, cat.as_ref()) {
                Ok(c) => print_json(&c),
                Err(Error::TheoremViolation(msg)) => {
                    eprintln!("theorem violation: {msg}");
                    Err(Failure::Negative)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Decompose { graph } => {
            emit(&decompose(&read_graph(&graph)?)?.to_mgf());
            Ok(())
        }
        Command::Reduce { graph } => {
            emit(&write_mgf(&sausage_reduce(&read_graph(&graph)?)));
            Ok(())
        }
        Command::Segment { a, b, width, graph } => match find_segmentation(&read_graph(&graph)?, a, b, width) {
            Some(s) => print_json(&s),
            None => {
                emit("none\n");
                Err(Failure::Negative)
            }
        },
        Command::Bw { mode, dot, graph } => bw(mode, dot, &graph),
        Command::Census { run } => census(&run),
        Command::DeriveCatalog { run, out } => {
            let d = derive_catalog(&run.config())?;
            fs::write(&out, d.catalog.to_text()).map_err(|e| Failure::Usage(format!("{}: {e}", out.display())))?;
            print_json(&d.levels)
        }
        Command::Verify { run, catalog } => {
            let cat = load_catalog(&catalog)?;
            let report = verify_theorem(&run.config(), &cat)?;
            print_json(&report)?;
            if report.violation_count() == 0 {
                Ok(())
            } else {
                Err(Failure::Negative)
            }
        }
        Command::Export { dot, graph } => {
            let g = read_graph(&graph)?;
            if dot {
                emit(&to_dot(&g, "G"));
            } else {
                emit(&write_mgf(&g));
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Negative) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
