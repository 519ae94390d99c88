//! Independent re-check of a [`ReverserCertificate`].
//!
//! Only matrix products, a determinant and the defining equations are used,
//! so a pass does not depend on any of the constructions that produced the
//! certificate.

use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::liecore::{algebra_member, group_member, is_group_involution};
use crate::matlin::det;
use crate::{ExactMatrix, ReverserCertificate};

/// The equation a failing certificate violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    /// Matrix sizes disagree with the context.
    Shape,
    /// The element is not in the context's algebra.
    AlgebraMembership,
    /// `det g = 0`.
    Invertibility,
    /// The reverser fails the group's defining equations.
    GroupMembership,
    /// `g·X ≠ −X·g`.
    Anticonjugation,
    /// Involution claimed but `g² ≠ I` (or not central for PSL/PSp).
    InvolutionClaim,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violation::Shape => "matrix sizes match the context",
            Violation::AlgebraMembership => "X lies in the algebra",
            Violation::Invertibility => "det g ≠ 0",
            Violation::GroupMembership => "g lies in the group",
            Violation::Anticonjugation => "g·X = −X·g",
            Violation::InvolutionClaim => "g² = I (central for projective groups)",
        })
    }
}

impl std::error::Error for Violation {}

/// `Ok(())` when every claim of `cert` holds exactly.
pub fn verify_certificate(cert: &ReverserCertificate) -> Result<(), Violation> {
    let ctx = &cert.context;
    let size = ctx.matrix_size();
    let (x, g) = (&cert.element, &cert.reverser);
    for m in [x, g] {
        if m.rows() != size || m.cols() != size {
            return Err(Violation::Shape);
        }
    }
    if !algebra_member(x, ctx).map_err(|_| Violation::Shape)? {
        return Err(Violation::AlgebraMembership);
    }
    if det(g).map_err(|_| Violation::Shape)?.is_zero() {
        return Err(Violation::Invertibility);
    }
    if !group_member(g, ctx).map_err(|_| Violation::Shape)? {
        return Err(Violation::GroupMembership);
    }
    let gx: ExactMatrix = g * x;
    if gx != -&(x * g) {
        return Err(Violation::Anticonjugation);
    }
    if cert.claims_involution && !is_group_involution(g, ctx.group()) {
        return Err(Violation::InvolutionClaim);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::forms::symplectic_form;
    use crate::{GaussRat, LieContext};

    fn cert(x: ExactMatrix, g: ExactMatrix, ctx: LieContext, inv: bool) -> ReverserCertificate {
        ReverserCertificate {
            element: x,
            reverser: g,
            context: ctx,
            claims_involution: inv,
        }
    }

    #[test]
    fn examples() {
        let h = ExactMatrix::diag(&[GaussRat::from(1), GaussRat::from(-1)]);
        let j1: ExactMatrix = symplectic_form(1);
        assert_eq!(
            verify_certificate(&cert(h.clone(), j1.clone(), LieContext::sl(2), false)),
            Ok(())
        );
        assert_eq!(
            verify_certificate(&cert(h, j1, LieContext::sl(2), true)),
            Err(Violation::InvolutionClaim)
        );
        let so2 = ExactMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]);
        let refl = ExactMatrix::from_i64_rows(&[&[1, 0], &[0, -1]]);
        assert_eq!(
            verify_certificate(&cert(so2.clone(), refl.clone(), LieContext::so(2), true)),
            Err(Violation::GroupMembership)
        );
        assert_eq!(
            verify_certificate(&cert(so2, refl, LieContext::o(2), true)),
            Ok(())
        );
    }

    #[test]
    fn failures_named() {
        let h = ExactMatrix::diag(&[GaussRat::from(1), GaussRat::from(-1)]);
        assert_eq!(
            verify_certificate(&cert(
                h.clone(),
                ExactMatrix::identity(2),
                LieContext::gl(2),
                false
            )),
            Err(Violation::Anticonjugation)
        );
        assert_eq!(
            verify_certificate(&cert(
                h.clone(),
                ExactMatrix::zeros(2, 2),
                LieContext::gl(2),
                false
            )),
            Err(Violation::Invertibility)
        );
        assert_eq!(
            verify_certificate(&cert(h, ExactMatrix::identity(3), LieContext::gl(2), false)),
            Err(Violation::Shape)
        );
    }
}
