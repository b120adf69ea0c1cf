//! Std companion to `rps-core`: end-to-end solving, webbooks, reports, JSON,
//! on-disk caching, sequence files and an OEIS client.

pub mod cache;
pub mod json;
pub mod oeis;
pub mod pipeline;
pub mod report;
pub mod seqfile;
pub mod webbook;

pub use pipeline::{solve_instance, Artifact, Proposition, SolveOptions, Status};
pub use webbook::{generate_webbook, Webbook};

/// Version string stamped into JSON output and cache keys.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
