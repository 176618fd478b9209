//! Strong (list) edge coloring of bounded-degree graphs, together with an
//! exact coefficient engine for products of linear difference factors.
//!
//! The crate is split into four layers:
//!
//! * [`graph`]: simple graphs, the "sees" relation (line-graph distance at
//!   most two), conflict graphs, configurations and random generators.
//! * [`coloring`]: verification and complete backtracking solvers for strong
//!   k-colorings and strong list colorings, plus forbidden/available sets for
//!   partial colorings.
//! * [`poly`]: sparse multivariate polynomials with arbitrary-precision
//!   integer coefficients and a capped expansion engine for factor products.
//! * [`certifier`]: Combinatorial Nullstellensatz certificates, the C6 and
//!   long-cycle coefficient computations, and randomized soundness trials.

pub mod certifier;
pub mod coloring;
pub mod error;
pub mod graph;
pub mod poly;

pub use error::{Error, Result};
