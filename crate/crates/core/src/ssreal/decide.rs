use num_traits::Zero;

use crate::error::{Error, Result};
use crate::liecore::algebra_member;
use crate::matlin::{charpoly, det, is_semisimple, similar_to_negative};
use crate::{ExactMatrix, Group, LieContext};

use super::{RealityVerdict, Reason, Tri};

/// Every nonzero eigenvalue of `x` occurs with even multiplicity.
///
/// Decided without splitting the spectrum: after removing the factor `x^k`
/// the characteristic polynomial must be a perfect square, i.e. every
/// squarefree-decomposition exponent is even.
pub fn nonzero_multiplicities_even(x: &ExactMatrix) -> Result<bool> {
    let chi = charpoly(x)?;
    let rest = chi.shift_down(chi.x_valuation());
    Ok(rest
        .squarefree_decomposition()
        .iter()
        .all(|(_, k)| k % 2 == 0))
}

/// Reality and strong reality of a semisimple `x` in the context's group.
///
/// The returned verdict carries no witness; see
/// [`witness_general_semisimple`](super::witness_general_semisimple).
pub fn decide_semisimple(x: &ExactMatrix, ctx: &LieContext) -> Result<RealityVerdict> {
    if !algebra_member(x, ctx)? {
        return Err(Error::AlgebraMismatch);
    }
    if !is_semisimple(x)? {
        return Err(Error::NotSemisimple);
    }
    if x.is_zero() {
        return Ok(RealityVerdict::new(Tri::Yes, Tri::Yes, Reason::ZeroElement));
    }
    let size = ctx.matrix_size();
    let zero_eigen = det(x)?.is_zero();
    let size_allows = size % 4 != 2;

    let verdict = match ctx.group() {
        Group::Gl => {
            if similar_to_negative(x)? {
                RealityVerdict::new(Tri::Yes, Tri::Yes, Reason::SpectrumSymmetric)
            } else {
                RealityVerdict::new(Tri::No, Tri::No, Reason::SpectrumAsymmetric)
            }
        }
        Group::Sl => {
            if !similar_to_negative(x)? {
                RealityVerdict::new(Tri::No, Tri::No, Reason::SpectrumAsymmetric)
            } else if zero_eigen {
                RealityVerdict::new(Tri::Yes, Tri::Yes, Reason::ZeroEigenvalue)
            } else {
                RealityVerdict::new(Tri::Yes, Tri::from_bool(size_allows), Reason::NMod4)
            }
        }
        Group::Psl => {
            if similar_to_negative(x)? {
                RealityVerdict::new(Tri::Yes, Tri::Yes, Reason::ProjectiveAlwaysStrong)
            } else {
                RealityVerdict::new(Tri::No, Tri::No, Reason::SpectrumAsymmetric)
            }
        }
        Group::O => RealityVerdict::new(Tri::Yes, Tri::Yes, Reason::OrthogonalAlwaysStrong),
        Group::So => {
            if zero_eigen {
                RealityVerdict::new(Tri::Yes, Tri::Yes, Reason::ZeroEigenvalue)
            } else if size_allows {
                RealityVerdict::new(Tri::Yes, Tri::Yes, Reason::NMod4)
            } else if size == 2 {
                RealityVerdict::new(Tri::No, Tri::No, Reason::RotationPlane)
            } else {
                RealityVerdict::new(Tri::Undetermined, Tri::No, Reason::Unclassified)
            }
        }
        Group::Sp => {
            if nonzero_multiplicities_even(x)? {
                RealityVerdict::new(Tri::Yes, Tri::Yes, Reason::EvenMultiplicity)
            } else {
                RealityVerdict::new(Tri::Yes, Tri::No, Reason::OddMultiplicity)
            }
        }
        Group::Psp => RealityVerdict::new(Tri::Yes, Tri::Yes, Reason::ProjectiveAlwaysStrong),
    };
    Ok(verdict)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::{build_canonical, CanonicalSemisimple};
    use crate::GaussRat;

    fn g(k: i64) -> GaussRat {
        GaussRat::from(k)
    }

    #[test]
    fn sl2_real_not_strong() {
        let v = decide_semisimple(&ExactMatrix::diag(&[g(1), g(-1)]), &LieContext::sl(2)).unwrap();
        assert_eq!(
            (v.real, v.strongly_real, v.reason),
            (Tri::Yes, Tri::No, Reason::NMod4)
        );
    }

    #[test]
    fn sl4_paired_strong() {
        let v = decide_semisimple(
            &ExactMatrix::diag(&[g(1), g(3), g(-1), g(-3)]),
            &LieContext::sl(4),
        )
        .unwrap();
        assert_eq!((v.real, v.strongly_real), (Tri::Yes, Tri::Yes));
    }

    #[test]
    fn sp1_real_not_strong() {
        let v = decide_semisimple(&ExactMatrix::diag(&[g(2), g(-2)]), &LieContext::sp(1)).unwrap();
        assert_eq!(
            (v.real, v.strongly_real, v.reason),
            (Tri::Yes, Tri::No, Reason::OddMultiplicity)
        );
    }

    #[test]
    fn so6_not_strong() {
        let c =
            CanonicalSemisimple::orthogonal(LieContext::so(6), vec![g(1), g(2), g(3)], 0).unwrap();
        let v = decide_semisimple(&build_canonical(&c).unwrap(), &LieContext::so(6)).unwrap();
        assert_eq!(v.strongly_real, Tri::No);
        assert_eq!(v.real, Tri::Undetermined);
    }

    #[test]
    fn sp2_doubled_strong() {
        let v = decide_semisimple(
            &ExactMatrix::diag(&[g(3), g(3), g(-3), g(-3)]),
            &LieContext::sp(2),
        )
        .unwrap();
        assert_eq!(
            (v.real, v.strongly_real, v.reason),
            (Tri::Yes, Tri::Yes, Reason::EvenMultiplicity)
        );
    }

    #[test]
    fn sl_asymmetric_and_errors() {
        let v = decide_semisimple(&ExactMatrix::diag(&[g(1), g(1), g(-2)]), &LieContext::sl(3))
            .unwrap();
        assert_eq!(v.real, Tri::No);
        let nil = ExactMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert_eq!(
            decide_semisimple(&nil, &LieContext::sl(2)),
            Err(Error::NotSemisimple)
        );
        assert_eq!(
            decide_semisimple(&ExactMatrix::identity(2), &LieContext::sl(2)),
            Err(Error::AlgebraMismatch)
        );
    }

    #[test]
    fn so2_rotation_plane() {
        let x = ExactMatrix::from_i64_rows(&[&[0, 5], &[-5, 0]]);
        let v = decide_semisimple(&x, &LieContext::so(2)).unwrap();
        assert_eq!((v.real, v.strongly_real), (Tri::No, Tri::No));
        let v = decide_semisimple(&x, &LieContext::o(2)).unwrap();
        assert_eq!((v.real, v.strongly_real), (Tri::Yes, Tri::Yes));
    }

    #[test]
    fn zero_matrix() {
        let v = decide_semisimple(&ExactMatrix::zeros(2, 2), &LieContext::sp(1)).unwrap();
        assert_eq!(
            (v.real, v.strongly_real, v.reason),
            (Tri::Yes, Tri::Yes, Reason::ZeroElement)
        );
    }
}
