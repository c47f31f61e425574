//! Squares of edge ideals through the Stanley-Reisner lens.
//!
//! Given a finite simple graph `G`, this crate builds the Stanley-Reisner
//! complex of the polarization of `I(G)^2` in two independent ways:
//!
//! - the generic route: [`ideal::edge_ideal`] → [`ideal::ideal_power`] →
//!   [`ideal::polarize_ideal`] → [`complex::stanley_reisner_complex`];
//! - the facet catalog: [`catalog::catalog_to_complex`], which assembles the
//!   facets directly from independent sets, leaves, stars and triangles of `G`.
//!
//! Cohen-Macaulayness is then decided by Reisner's criterion
//! ([`cm::is_cohen_macaulay`]) with exact reduced homology over a prime field
//! ([`homology`]).
//!
//! The crate is `no_std` and only needs `alloc`. IO, file formats and the
//! command line live in the `edgesquare` companion crate.

#![no_std]
#![deny(rust_2018_idioms)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod catalog;
pub mod census;
pub mod cm;
pub mod complex;
mod error;
pub mod graph;
pub mod homology;
pub mod ideal;

pub use catalog::{catalog_facets, catalog_to_complex, FacetKind, FacetWitness};
pub use cm::{is_cohen_macaulay, square_is_cm, CmVerdict, FastFail, Witness};
pub use complex::{Face, SimplicialComplex};
pub use error::{Error, Result};
pub use graph::{Graph, VertexSet};
pub use homology::{reduced_betti_numbers, FieldSpec, HomologyProfile};
pub use ideal::{Monomial, MonomialIdeal, PolarizedIdeal, PolarizedVariable};
