//! Exact polynomial arithmetic: sparse Laurent polynomials in `s, y, t`,
//! ordinary polynomials in `x, y`, reduction modulo a Riley polynomial,
//! resultants and numeric root finding.

mod matrix;
mod modulus;
mod mpoly;
mod resultant;
pub mod roots;
mod serial;
mod upoly;
mod xypoly;

use thiserror::Error;

pub use matrix::Mat2;
pub use modulus::{div_exact_t, reduce_mod, RileyModulus};
pub use mpoly::{Coeff, MPoly, Monomial};
pub(crate) use mpoly::coeff_to_f64;
pub use resultant::resultant_y;
pub use serial::complex_json;
pub use roots::{complex_roots, complex_roots_int, Root, RootError};
pub use upoly::UniPoly;
pub use xypoly::{to_xy, XYMonomial, XYPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("polynomial is not invariant under s -> 1/s")]
    NotSymmetric,
    #[error("polynomial unexpectedly depends on t")]
    UnexpectedT,
    #[error("degree of the zero polynomial")]
    ZeroPolynomial,
    #[error("modulus does not have leading y-coefficient +-1")]
    NonUnitLeading,
    #[error("denominator is not monic in t")]
    NotMonicInT,
    #[error("exact division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("evaluation at s = 0 of a polynomial with negative s-powers")]
    DivisionByZero,
}

/// Total degree in `x, y`.
pub fn total_degree_xy(p: &XYPoly) -> Result<u32, PolyError> {
    p.total_degree()
}
