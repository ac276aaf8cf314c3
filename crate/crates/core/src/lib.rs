//! knotscope: combinatorial analysis of knot diagrams.
//!
//! The crate builds diagrams from planar diagram (PD) codes and computes the
//! pieces needed to recognize odd torus knots T(2g+1, 2) among alternating
//! knots: Seifert circles and the region tree, Murasugi decompositions into
//! special pieces, checkerboard graph fiberedness tests, the Alexander
//! polynomial, the signature from a Goeritz matrix, and the resulting
//! Heegaard Floer descriptors.
//!
//! # PD convention
//!
//! A crossing `X(a, b, c, d)` lists the four arc labels counterclockwise
//! starting at the incoming under-strand `a`; `c` is the outgoing
//! under-strand. Labels run `1..=2n` and increase along each strand,
//! wrapping within the component. The over-strand runs `d -> b` at a
//! positive crossing and `b -> d` at a negative one.

pub mod alexander;
pub mod analyze;
pub mod builder;
pub mod catalog;
pub mod corpus;
pub mod diagram;
pub mod error;
pub mod floer;
pub mod graphs;
pub mod invariants;
pub mod pd;
pub mod poly;
pub mod seifert;

pub use diagram::{Diagram, Sign};
pub use error::{Error, Result};
pub use pd::PdCode;
