//! Triangulated orbit categories of type-A Dynkin quivers, computed exactly.

pub mod error;
pub mod exactlin;
pub mod quiverrep;
pub mod derivedcat;
pub mod dgkernel;
pub mod orbitcat;
pub mod clustergeom;
pub mod braidk0;
pub mod cli;

pub use error::{Error, Result};
