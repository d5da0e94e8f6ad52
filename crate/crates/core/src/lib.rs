//! Monophonic convexity on finite simple graphs: graph families, exact
//! interval search, constructive induced-path builders and structural checks.

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod engine;
pub mod error;
pub mod generators;
pub mod graph;
pub mod paths;
pub mod reference;
pub mod structure;
pub mod subset;

pub use error::{Error, Result};
pub use graph::{Graph, InducedPath, Labels, VertexId, VertexSet};
pub use subset::{ElementSet, OrderedBlock, SubsetVertex};
