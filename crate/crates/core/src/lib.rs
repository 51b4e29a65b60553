pub mod branch;
pub mod canon;
pub mod census;
pub mod classify;
pub mod error;
pub mod format;
pub mod graph;
pub mod immersion;
pub mod pattern;
pub mod minor;
pub mod obstruction;
pub mod planar;
pub mod reduction;
pub mod segment;

pub use canon::{canonical, is_isomorphic, CanonicalCode};
pub use error::{Error, Result};
pub use graph::{CutReport, Multigraph, RootedMultigraph, VertexSet};
pub use immersion::{immerses, immerses_rooted, verify_witness, ImmersionWitness};
pub use pattern::PatternGraph;
