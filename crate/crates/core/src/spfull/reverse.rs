use crate::error::{Error, Result};
use crate::jc::jordan_chevalley;
use crate::liecore::{algebra_basis, algebra_member, centralizer_within};
use crate::ssreal::witness_general_semisimple;
use crate::{ExactMatrix, ReverserCertificate};

use super::triple::{sl2_triple_within, sp_context};
use super::{build_sigma, build_tau, chain_decomposition, restrict_semisimple};

/// A reverser in Sp(n) for any `x ∈ sp(n)` whose semisimple part has its
/// spectrum in ℚ(i).
///
/// With `X = X_s + X_n`, the sl2-triple through `X_n` is taken inside the
/// centralizer of `X_s`, so `X_s` preserves the chain decomposition. Then
/// `σ` reverses `X_n` and fixes `X_s`, `τ` reverses `X_s` and fixes `X_n`,
/// and `g = στ`. The certificate never claims an involution.
pub fn reverse_full(x: &ExactMatrix) -> Result<ReverserCertificate> {
    let ctx = sp_context(x)?;
    if !algebra_member(x, &ctx)? {
        return Err(Error::AlgebraMismatch);
    }
    let size = ctx.matrix_size();
    let certificate = |reverser| ReverserCertificate {
        element: x.clone(),
        reverser,
        context: ctx,
        claims_involution: false,
    };
    if x.is_zero() {
        return Ok(certificate(ExactMatrix::identity(size)));
    }
    let jp = jordan_chevalley(x)?;
    let (xs, xn) = (&jp.semisimple_part, &jp.nilpotent_part);
    if xn.is_zero() {
        return witness_general_semisimple(x, &ctx, false);
    }
    let levi = centralizer_within(xs, &algebra_basis(&ctx));
    let triple = sl2_triple_within(xn, &levi)?;
    let cd = chain_decomposition(&triple)?;
    let sigma = build_sigma(&cd)?;
    if xs.is_zero() {
        return Ok(certificate(sigma));
    }
    let tau = build_tau(&restrict_semisimple(xs, &cd)?, &cd)?;
    Ok(certificate(&sigma * &tau))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::forms::symplectic_form;
    use crate::verify::verify_certificate;
    use crate::GaussRat;

    #[test]
    fn nilpotent_uses_sigma() {
        let cert = reverse_full(&ExactMatrix::unit(2, 2, 0, 1)).unwrap();
        verify_certificate(&cert).unwrap();
        assert_eq!(
            cert.reverser,
            ExactMatrix::diag(&[-GaussRat::i(), GaussRat::i()])
        );
    }

    #[test]
    fn semisimple_uses_j1() {
        let x = ExactMatrix::diag(&[GaussRat::from(7), GaussRat::from(-7)]);
        let cert = reverse_full(&x).unwrap();
        verify_certificate(&cert).unwrap();
        assert_eq!(cert.reverser, symplectic_form(1));
    }

    #[test]
    fn mixed_two_chains() {
        let a = ExactMatrix::from_i64_rows(&[&[0, 3], &[-3, 0]]);
        let xs = ExactMatrix::block_diag(&[a.clone(), a]);
        let mut xn = ExactMatrix::zeros(4, 4);
        xn[(0, 2)] = GaussRat::from(1);
        xn[(1, 3)] = GaussRat::from(1);
        let cert = reverse_full(&(&xs + &xn)).unwrap();
        verify_certificate(&cert).unwrap();
        assert!(!cert.claims_involution);
    }

    #[test]
    fn rejects_non_members() {
        assert_eq!(
            reverse_full(&ExactMatrix::identity(2)),
            Err(Error::AlgebraMismatch)
        );
        assert!(matches!(
            reverse_full(&ExactMatrix::identity(3)),
            Err(Error::SizeMismatch { .. })
        ));
    }
}
