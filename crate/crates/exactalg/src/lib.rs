//! Exact arithmetic for the dimer pipeline: rationals, sparse bivariate
//! Laurent polynomials, lattice polygons, GF(2) elimination, polynomial
//! determinants and first-order jets.

pub mod det;
pub mod gf2;
pub mod jet;
pub mod laurent;
pub mod linalg;
pub mod polygon;
pub mod rat;
pub mod ring;

pub use det::{expansion_det, ff_det, DetError};
pub use gf2::{gf2_solve, verify_certificate, verify_solution, Gf2Error};
pub use jet::Jet;
pub use laurent::{lp_arith, ArithOp, LaurentPoly2, ZeroPolynomial};
pub use polygon::{Polygon, Pt};
pub use rat::{fmt_rat, int, parse_rat, pow_rat, rat, to_decimal, Rat};
pub use ring::{Coeff, Field};
