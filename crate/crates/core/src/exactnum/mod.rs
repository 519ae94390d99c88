//! Exact scalars and polynomials over the Gaussian rationals.

mod gauss;
mod poly;
mod roots;

pub use gauss::GaussRat;
pub use poly::Poly;
pub use roots::{linear_roots, splits};
