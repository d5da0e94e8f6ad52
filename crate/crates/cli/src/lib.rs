//! Library half of the `monophonic` command: graph files, graph descriptors,
//! claim manifests, the result cache and report rendering.

pub mod cache;
pub mod claims;
pub mod cli;
pub mod corpus;
pub mod error;
pub mod format;
pub mod ops;
pub mod report;
pub mod spec;

pub use error::{CliError, Result};
