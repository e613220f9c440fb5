//! Exact r-Whitney numbers, Stirling numbers and Cauchy polynomials with a `q`
//! parameter, computed as polynomials in `q` and `r` over the rationals.
//!
//! - [`arith`]: big integers, normalized rationals, factorials and binomials.
//! - [`poly`]: the bivariate ring [`BiPoly`] and polynomials in `x` over it.
//! - [`series`]: truncated power series and the exponential generating functions.
//! - [`triangle`]: r-Whitney, Stirling and r-Stirling triangles.
//! - [`cauchy`]: Cauchy polynomials by explicit formula and by integration.
//! - [`verify`]: identity checks grouped into named suites.
//! - [`render`]: text, LaTeX and JSON output.
//!
//! Nothing here uses floating point.

pub mod arith;
pub mod cauchy;
pub mod error;
pub mod poly;
pub mod render;
pub mod series;
pub mod triangle;
pub mod verify;

pub use arith::{binomial, factorial, BigInt, Rational};
pub use cauchy::CauchyKind;
pub use error::{Error, Result};
pub use poly::{BiPoly, Monomial, XPoly};
pub use render::OutputFormat;
pub use series::Series;
pub use triangle::{Triangle, TriangleKind};
