//! Exact-arithmetic laboratory for the spin representation of Spin(9) on
//! R^16.
//!
//! The crate constructs the nine symmetric involutions realizing the
//! modified Clifford multiplication, computes the unique invariant 8-form
//! on R^16 together with its algebraic differential identities, verifies
//! the decomposition theory of spinor-valued forms, reproduces the
//! Pontrjagin-class identities of Spin(9)-manifolds by weight calculus,
//! and checks the twistor-space integrability conditions. Every identity
//! is verified exactly over the rationals; there are no tolerances.

pub mod charclass;
pub mod clifford;
pub mod exterior;
pub mod invariant;
pub mod liealg;
pub mod linalg;
pub mod rational;
pub mod report;
pub mod rng;
pub mod spinorforms;
pub mod suites;
pub mod twistor;

pub use rational::Rational;
