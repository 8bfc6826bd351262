//! Contraction algebras of quivers with relations.
//!
//! The crate computes noncommutative Gröbner bases in free and path algebras
//! over the rationals, contracts presentations at chosen vertices, and
//! studies the resulting finite-dimensional local algebras: dimension,
//! abelianization, commutativity, socle, tangent space and homomorphisms
//! into small test algebras. It also knits additive functions on marked
//! Dynkin diagrams.
//!
//! Everything here is `no_std` with `alloc`.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod defcheck;
pub mod error;
pub mod freealg;
pub mod knit;
pub mod linalg;
pub mod ncgb;
pub mod quiverpres;
pub mod structalg;

pub use error::{Error, Result};
pub use freealg::{Alphabet, Generator, MonomialOrder, NcPoly, Word};
pub use ncgb::{GroebnerBasis, Quotient, StandardMonomials, Verdict};
pub use quiverpres::{Builtin, KillSet, Presentation, Quiver};
pub use structalg::FiniteAlgebra;

/// Exact rational coefficients.
pub type Rational = num_rational::BigRational;
