pub mod catalog;
pub mod generate;
pub mod repair;
pub mod run;
pub mod verify;

pub use catalog::{catalog_from_levels, derive_catalog, expand_marked, is_sporadic_candidate, CatalogDerivation, CatalogLevel};
pub use generate::{enumerate_simple, enumerate_simple_connected, read_graph6_list};
pub use repair::{meets_census_conditions, minimal_assignments, obstruction_closure, repair, DEFAULT_CAP};
pub use run::{census_level, filter_k33_free, CensusConfig, LevelCounts, LevelResult};
pub use verify::{verify_level, verify_levels, verify_theorem, LevelVerification, VerificationReport, Violation};
