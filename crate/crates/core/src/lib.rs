//! Riley polynomials and twisted Alexander polynomials of 2-bridge knots,
//! computed exactly over the nonabelian `SL(2, ℂ)` character variety.

pub mod polyring;
pub mod freegroup;
pub mod presentations;
pub mod report;
pub mod riley;
pub mod twisted;
pub mod charvariety;
