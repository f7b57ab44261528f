//! Set families on a finite ground set and their 1,2-inclusion graphs: the
//! subgraphs of halved cubes. The crate builds the graphs, applies twisting,
//! lifting and (double) shifting, computes the classical, clique, star and
//! 2-VC dimensions with witnesses, and checks the density bound
//! `|E|/|V| ≤ C(d, 2)` for `d` the clique-VC-dimension.

pub mod cli;
pub mod dims;
pub mod error;
pub mod family;
pub mod graph;
pub mod lab;
pub mod shifting;

pub use error::{Error, Result};
pub use family::{parse_family, GroundSet, SetFamily, SubsetWord};
