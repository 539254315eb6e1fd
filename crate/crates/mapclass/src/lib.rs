//! Exact-arithmetic linear representations of braid groups, mapping class
//! groups of punctured spheres, and the mapping class group of the closed
//! genus-2 surface.
//!
//! Everything is computed over the ring of bivariate Laurent polynomials in
//! `q` and `t` with big-integer coefficients and rational exponents, so
//! matrix equality is exact and decides word equality in each group:
//!
//! * [`lk::LkRep`]: the Lawrence–Krammer representation `L_n` of the braid
//!   group `B_n` (faithful), plus its rescaling `L'_n` that kills the center.
//! * [`sphere::SphereRep`]: the representation `K_n` of the mapping class
//!   group of the `n`-punctured sphere induced from `L'_{n-1}`.
//! * [`genus2::Genus2Rep`]: the 64-dimensional faithful representation
//!   `K_6 ⊕ H` of the genus-2 mapping class group, where `H` is the
//!   symplectic action on first homology.
//! * [`genus2::HyperellipticRep`]: the genus-`g` generalization for the
//!   hyperelliptic mapping class group.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `mapclass` binary exposes `eval`, `equal`, `verify`, `export` and `bench`
//! subcommands over the same API.

pub mod artin;
pub mod cli;
pub mod error;
pub mod export;
pub mod genus2;
pub mod laurent;
pub mod lk;
pub mod matrix;
pub mod sphere;
pub mod word;

pub use error::{Error, Result};
pub use genus2::{equal_words, Genus2Rep, HyperellipticRep};
pub use laurent::{Exponent, LaurentPoly, Monomial};
pub use lk::LkRep;
pub use matrix::RingMatrix;
pub use sphere::SphereRep;
pub use word::{Context, Letter, Word};
