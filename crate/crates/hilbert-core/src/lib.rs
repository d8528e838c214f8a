//! Exact computation with Hilbert series of finitely generated monomial and
//! graded algebras.
//!
//! The crate is organized around a pipeline:
//!
//! - [`powseries`] — truncated power series and polynomials over
//!   arbitrary-precision integers, plus generators for a zoo of concrete
//!   coefficient series (partition numbers, lacunary series, multiplicative
//!   functions, Catalan numbers, ...).
//! - [`monoid`] — words over an alphabet `x_1, ..., x_d, y`, commutative
//!   monomials, and deterministic realizations of degree-wise monomial sets
//!   with prescribed cardinalities.
//! - [`presentations`] — forbidden-word presentations: finite explicit lists
//!   and the structured infinite families behind the built-in constructions.
//! - [`engine`] — counting of normal words (words avoiding all forbidden
//!   factors) by brute force, by automaton dynamic programming, and exact
//!   rationalization of finite presentations via transfer matrices.
//! - [`constructions`] — closed-form Hilbert series of the built-in algebra
//!   constructions, direct structured basis counting, and cross-method
//!   verification.
//! - [`analysis`] — coefficient analytics: growth classification,
//!   Gelfand-Kirillov dimension estimation, exact linear-recurrence detection,
//!   rational-vs-transcendental dichotomy verdicts, and the Hardy-Ramanujan
//!   comparison for partition numbers.
//!
//! All arithmetic is exact; no floating point enters any coefficient
//! computation (floats appear only in growth estimates and asymptotics).

pub mod analysis;
pub mod constructions;
pub mod engine;
pub mod monoid;
pub mod powseries;
pub mod presentations;

pub use powseries::{IntPoly, IntSeries, RationalFn, SeriesSpec};
