//! Exact resistance-distance invariants of simple connected graphs.
//!
//! The crate computes the Kirchhoff index, the multiplicative
//! degree-Kirchhoff index, the Wiener and Gutman indices and the number of
//! spanning trees, exactly, for any connected graph. For the prism family
//! `G_n = P_2 ⊠ C_n` and its vertical-edge-deleted members it also provides
//! closed forms, the involution block split of the Laplacian spectrum, and a
//! sweep that checks all of them against each other.

pub mod cli;
pub mod closed_form;
pub mod error;
pub mod exact;
pub mod graph;
pub mod linalg;
pub mod render;
pub mod spectral;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{InvariantReport, Method, ResistanceMatrix, Tagged};
pub use graph::{cycle, path, prism_family, strong_product, Graph, PrismSpec};
