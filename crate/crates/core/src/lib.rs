//! Exact computer algebra around the classical Nullstellensätze.
//!
//! - [`coeff`], [`poly`], [`parse`]: scalars over ℚ or 𝔽_p, sparse
//!   polynomials, resultants, axis tilting, grids, and the text/JSON forms.
//! - [`ideal`]: Buchberger, normal forms, radical membership, finiteness.
//! - [`stickel`]: solving zero-dimensional systems from multiplication matrices.
//! - [`combnull`]: grid membership, the coefficient formula over grids,
//!   the Dyson constant term, restricted sumsets.
//! - [`graded`]: Poincaré series, dimension and multiplicity, plus a
//!   numerical search for real zeros of odd-degree forms.
//! - [`realrad`]: real-radical certificates and the Motzkin polynomial.
//! - [`cli`]: the `nullkit` binary's frontend.

pub mod cli;
pub mod coeff;
pub mod combnull;
pub mod graded;
pub mod ideal;
pub mod matrix;
pub mod parse;
pub mod poly;
pub mod realrad;
pub mod stickel;
pub mod upoly;
