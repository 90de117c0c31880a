//! Independence and criticality invariants of finite simple graphs.
//!
//! The crate computes maximum independent sets, critical independent sets,
//! core, corona, ker, nucleus and diadem, Larson's independence
//! decomposition and the Gallai–Edmonds decomposition. Every object has an
//! exhaustive oracle (bounded by [`Caps`]) and, where one exists, a
//! matching-based polynomial route. The [`theorems`] registry turns the
//! known structural identities between these objects into checks that can
//! be run over whole graph corpora.
//!
//! The crate is `no_std` and only needs `alloc`; IO, JSON and the command
//! line live in the `indeplab` companion crate.

#![no_std]

extern crate alloc;

pub mod decomposition;
pub mod error;
pub mod exact;
pub mod fast;
pub mod generators;
pub mod graph;
pub mod graph6;
pub mod matching;
pub mod set;
pub mod theorems;

mod twosat;

pub use decomposition::{gallai_edmonds, larson, GallaiEdmondsParts, LarsonParts};
pub use error::{Error, Result};
pub use exact::{Caps, CriticalityProfile};
pub use graph::{EdgeCut, Graph, InducedSubgraph};
pub use matching::Matching;
pub use set::{SetFamily, VertexSet};
