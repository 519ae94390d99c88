//! Exact decision procedures and witness constructions for adjoint reality
//! in the classical complex Lie algebras.
//!
//! An element `X` of a matrix Lie algebra is *real* for a group `G` when
//! `gXg⁻¹ = −X` for some `g ∈ G`, and *strongly real* when such a `g` can be
//! chosen with `g² = 1`. Everything here works over the Gaussian rationals
//! ℚ(i) with zero-tolerance arithmetic; every witness is a
//! [`ReverserCertificate`] that [`verify::verify_certificate`] re-checks from
//! scratch.
//!
//! The linear-algebra kernel ([`Matrix`], [`Poly`], Smith form, Jordan–
//! Chevalley) is generic over any exact [`Scalar`]; the Lie-theoretic layers
//! fix the scalar to [`GaussRat`].

pub mod error;
pub mod exactnum;
pub mod jc;
pub mod liecore;
pub mod matlin;
pub mod oracle;
mod scalar;
pub mod selftest;
pub mod spfull;
pub mod ssreal;
pub mod verify;

pub use error::{Error, Result};
pub use exactnum::{GaussRat, Poly};
pub use jc::{jordan_chevalley, JordanPair};
pub use liecore::{Algebra, CanonicalSemisimple, Group, LieContext};
pub use matlin::{Matrix, PolyMatrix};
pub use scalar::Scalar;
pub use spfull::{Sl2Triple, SymplecticChainData};

pub use ssreal::{RealityVerdict, Reason, ReverserCertificate, Tri};

/// Dense matrix over ℚ(i).
pub type ExactMatrix = Matrix<GaussRat>;
/// Polynomial over ℚ(i).
pub type ExactPoly = Poly<GaussRat>;
/// Matrix with entries in ℚ(i)[x].
pub type ExactPolyMatrix = PolyMatrix<GaussRat>;
/// Dense matrix over ℚ.
pub type RatMatrix = Matrix<num_rational::BigRational>;
/// Polynomial over ℚ.
pub type RatPoly = Poly<num_rational::BigRational>;
