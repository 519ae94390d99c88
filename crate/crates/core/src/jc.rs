//! Additive Jordan–Chevalley decomposition without computing eigenvalues.
//!
//! With `χ` the characteristic polynomial and `q` its squarefree part, the
//! Newton iteration `P ← P − q(P)·q′(P)⁻¹` runs in `K[x]/(χ)` starting from
//! `P = x`. Each step squares the order of vanishing of `q(P)`, and the
//! limit `P` satisfies `q(P) ≡ 0`, so `X_s = P(X)` is semisimple and
//! `X − X_s` nilpotent. `q′(P)` stays a unit modulo `χ` because `q` is
//! squarefree.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matlin::charpoly;
use crate::{Matrix, Poly, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(bound = "T: Scalar")]
pub struct JordanPair<T: Scalar> {
    pub semisimple_part: Matrix<T>,
    pub nilpotent_part: Matrix<T>,
    /// `p` with `p(X) = X_s`.
    pub witness_poly: Poly<T>,
    pub newton_steps: usize,
}

pub fn jordan_chevalley<T: Scalar>(x: &Matrix<T>) -> Result<JordanPair<T>> {
    let n = x.require_square()?;
    let chi = charpoly(x)?;
    let q = chi.squarefree_part();
    let dq = q.derivative();
    let mut p = Poly::x().rem(&chi);
    let mut steps = 0;
    loop {
        let qp = q.compose(&p).rem(&chi);
        if qp.is_zero() {
            break;
        }
        let inv = dq
            .compose(&p)
            .inverse_mod(&chi)
            .ok_or_else(|| Error::Internal("q′(P) is not a unit modulo χ".into()))?;
        p = (&p - &(&qp * &inv)).rem(&chi);
        steps += 1;
        if steps > 64 {
            return Err(Error::Internal("Newton iteration did not converge".into()));
        }
    }
    let xs = if n == 0 { x.clone() } else { x.eval_poly(&p) };
    let xn = x - &xs;
    Ok(JordanPair {
        semisimple_part: xs,
        nilpotent_part: xn,
        witness_poly: p,
        newton_steps: steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlin::{is_nilpotent, is_semisimple};
    use crate::{ExactMatrix, GaussRat};

    fn check(x: &ExactMatrix) -> JordanPair<GaussRat> {
        let jp = jordan_chevalley(x).unwrap();
        assert_eq!(&jp.semisimple_part + &jp.nilpotent_part, *x);
        assert!(jp.semisimple_part.bracket(&jp.nilpotent_part).is_zero());
        assert!(is_semisimple(&jp.semisimple_part).unwrap());
        assert!(is_nilpotent(&jp.nilpotent_part).unwrap());
        assert_eq!(x.eval_poly(&jp.witness_poly), jp.semisimple_part);
        jp
    }

    #[test]
    fn unipotent_block() {
        let x = ExactMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        let jp = check(&x);
        assert_eq!(jp.semisimple_part, ExactMatrix::identity(2));
        assert_eq!(
            jp.nilpotent_part,
            ExactMatrix::from_i64_rows(&[&[0, 1], &[0, 0]])
        );
    }

    #[test]
    fn already_semisimple() {
        let x = ExactMatrix::diag(&[GaussRat::from(1), GaussRat::from(-1)]);
        let jp = check(&x);
        assert_eq!(jp.semisimple_part, x);
        assert!(jp.nilpotent_part.is_zero());
        assert_eq!(jp.newton_steps, 0);
    }

    #[test]
    fn gaussian_eigenvalue_block() {
        let i = GaussRat::i();
        let x = ExactMatrix::from_rows(vec![
            vec![i.clone(), GaussRat::from(1)],
            vec![GaussRat::from(0), i.clone()],
        ]);
        let jp = check(&x);
        assert_eq!(jp.semisimple_part, ExactMatrix::diag(&[i.clone(), i]));
        assert_eq!(jp.nilpotent_part, ExactMatrix::unit(2, 2, 0, 1));
    }

    #[test]
    fn rational_scalars_work_too() {
        use num_rational::BigRational;
        let x = Matrix::<BigRational>::from_i64_rows(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 3]]);
        let jp = jordan_chevalley(&x).unwrap();
        assert_eq!(
            jp.semisimple_part,
            Matrix::<BigRational>::from_i64_rows(&[&[2, 0, 0], &[0, 2, 0], &[0, 0, 3]])
        );
    }

    #[test]
    fn hidden_structure_after_conjugation() {
        // P · (J₃(2) ⊕ J₁(−1)) · P⁻¹
        let core = ExactMatrix::from_i64_rows(&[
            &[2, 1, 0, 0],
            &[0, 2, 1, 0],
            &[0, 0, 2, 0],
            &[0, 0, 0, -1],
        ]);
        let p = ExactMatrix::from_i64_rows(&[
            &[1, 2, 0, 1],
            &[0, 1, 1, 0],
            &[1, 0, 1, 1],
            &[0, 0, 1, 2],
        ]);
        let pinv = crate::matlin::inverse(&p).unwrap();
        let x = &(&p * &core) * &pinv;
        let jp = check(&x);
        let expect_s = &(&p * &ExactMatrix::diag(&[2, 2, 2, -1].map(GaussRat::from))) * &pinv;
        assert_eq!(jp.semisimple_part, expect_s);
        assert!(jp.newton_steps <= 2);
    }
}
