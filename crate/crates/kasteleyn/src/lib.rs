//! Kasteleyn signs, the Kasteleyn operator K(x, y), its determinant (the
//! spectral polynomial), pointwise corank, and a brute-force matching oracle.

mod error;
mod matchings;
mod operator;
mod orientation;

pub use error::KasteleynError;
pub use matchings::{enumerate_matchings, sign_theorem_check, ClassRow, Matching, SignReport};
pub use operator::{
    apply_gauge, check_weights, evaluate_corank, kasteleyn_matrix, normalize_spectral, operator_entries,
    spectral_polynomial, unit_weights, KasteleynData, Weighting,
};
pub use orientation::{face_sign_rule_holds, kasteleyn_orientation};
