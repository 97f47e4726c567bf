//! Quantum-walk-derived matrix representations of graphs and the spectral
//! signatures they induce.
//!
//! The pipeline: parse a graph ([`graph6`], [`edgelist`]), build the
//! arc-space walk operator or one of its support matrices in exact
//! arithmetic ([`walk`], [`srg`]), and reduce the result to a canonical,
//! comparable characteristic-polynomial signature ([`charpoly`]). Closed
//! forms for the walk spectra ([`spectrum`]) and a floating-point
//! eigensolver ([`eig`]) cross-validate the exact path, and [`iso`]
//! certifies whether signature collisions are genuine.

pub mod arcs;
pub mod charpoly;
pub mod edgelist;
pub mod eig;
pub mod family;
pub mod fixtures;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod matrix;
pub mod random;
pub mod spectrum;
pub mod srg;
pub mod walk;

pub use arcs::ArcSpace;
pub use charpoly::{
    signature, CharPolySignature, SignatureMode, EXACT_DIM_CUTOFF, SIGNATURE_PRIMES,
};
pub use family::{load_family, FamilyFormat, GraphFamily};
pub use graph::{Graph, GraphError};
pub use graph6::{encode_graph6, parse_graph6};
pub use iso::{is_isomorphic, IsoVerdict, Partition, DEFAULT_NODE_BUDGET};
pub use matrix::{BinaryMatrix, IntMatrix, RationalMatrix};
pub use spectrum::{multiset_eq, ComplexSpectrum};
pub use srg::{detect_srg, SrgParams};
