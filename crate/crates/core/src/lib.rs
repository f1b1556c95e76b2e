//! Fully asynchronous dynamics of Boolean networks, and the embedding of any
//! network without negative loops into a monotone network on twice as many
//! components that preserves fixed points and doubles distances.
//!
//! Components are 0-based throughout the library; the command-line tool and
//! the DOT output number them from 1.

pub mod asyncdyn;
pub mod config;
pub mod constructions;
pub mod embed;
pub mod error;
pub mod format;
pub mod igraph;
pub mod network;
pub mod theorems;

pub use asyncdyn::{AsyncGraph, Distance, Schedule};
pub use config::{Configuration, MAX_COMPONENTS};
pub use embed::{embed, Layer, PairConfiguration};
pub use error::{Error, Result};
pub use igraph::{interaction_graph, Sign, SignedDigraph};
pub use network::BooleanNetwork;
pub use theorems::{Suite, SuiteSelection, VerificationReport};
