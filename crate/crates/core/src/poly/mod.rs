//! Exact sparse polynomials over the integers and products of difference
//! factors.

mod engine;
mod factor;
mod monomial;
mod polynomial;

pub use engine::{ExpansionStats, MAX_FAST_FACTORS};
pub use factor::{eliminate_variable, CapVector, FactorProduct};
pub use monomial::{Monomial, Var};
pub use polynomial::Polynomial;
