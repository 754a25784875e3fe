//! Exact graded commutative algebra over prime fields: polynomials, Gröbner
//! bases, minimal free resolutions, rational surface constructions, the
//! adjunction classifier for degree-10 surfaces in P⁵, and matrix
//! factorizations over cubic hypersurfaces.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod classifier;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod mfcubic;
pub mod monomial;
pub mod poly;
pub mod random;
pub mod resolve;
pub mod surfacegen;
pub mod text;

pub use error::{Error, Result};
pub use field::{FieldScalar, PrimeField, DEFAULT_PRIME};
pub use monomial::{monomials_of_degree, Monomial};
pub use poly::{poly_evaluate, poly_multiply, GradedFreeModule, HomogPoly, Ring};
