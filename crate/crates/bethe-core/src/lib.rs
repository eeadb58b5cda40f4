//! Exact-arithmetic construction and verification of populations of Bethe
//! Ansatz solutions (trigonometric, exponential, and difference/XXX
//! families), together with a numerical sl2 Gaudin module: Bethe vectors,
//! Gaudin Hamiltonians, and dynamical Weyl group operators.
//!
//! The exact side represents a solution by an r-tuple of monic polynomials
//! and realizes the Wronskian reproduction procedure as an exact linear
//! solve over arbitrary-precision rationals; populations are the closure of
//! a tuple under all simple reproductions, with weights transported by the
//! (shifted) Weyl action. The numerical side solves the Bethe equations by
//! multistart Newton iteration and tests eigenvector and dynamical Weyl
//! group claims on sl2 tensor products.

pub mod bethe;
pub mod cli;
pub mod exactmath;
pub mod fundop;
pub mod gaudin;
pub mod numeric;
pub mod population;
pub mod rational;
pub mod reproduce;
pub mod rootdata;

pub use rational::Rational;
