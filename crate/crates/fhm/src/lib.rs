//! Exact computational algebra for centraliser analogues of class-sum
//! algebras of symmetric groups.
//!
//! The crate provides, over exact integer arithmetic throughout:
//!
//! - [`perm`]: finite-support permutations of the positive integers;
//! - [`shapes`]: marked cycle shapes, the monoid structure on them, class
//!   membership, enumeration, counting, and class sizes;
//! - [`intpoly`]: the ring of integer-valued polynomials in the binomial
//!   basis, with exact interpolation;
//! - [`symfunc`]: partitions, elementary/monomial symmetric polynomials, and
//!   the monomial-to-elementary basis change;
//! - [`grpalg`]: the integral group algebra of `S_n`, centraliser class sums,
//!   and Jucys-Murphy elements;
//! - [`fh`]: the interpolation algebra spanned by formal class sums with
//!   integer-valued polynomial coefficients;
//! - [`hecke`]: the degenerate affine Hecke algebra tensored with symmetric
//!   functions, with both directions of its isomorphism onto [`fh`];
//! - [`verify`]: executable verification suites used by the CLI and CI.

pub mod error;
pub mod fh;
pub mod grpalg;
pub mod hecke;
pub mod intpoly;
pub mod perm;
pub mod shapes;
pub mod symfunc;
pub mod verify;

pub use error::{Error, Result};
