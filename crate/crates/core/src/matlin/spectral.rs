//! Polynomial invariants of a single square matrix.

use crate::error::Result;
use crate::{Matrix, Poly, Scalar};

use super::polymat::invariant_factors;

/// `det(xI − A)` by Berkowitz's division-free recurrence.
///
/// Independent of the Smith-form code, which makes it usable as a cross
/// check on the product of the invariant factors.
pub fn charpoly<T: Scalar>(a: &Matrix<T>) -> Result<Poly<T>> {
    let n = a.require_square()?;
    // Coefficients highest degree first.
    let mut v: Vec<T> = vec![T::one()];
    for r in 0..n {
        // A_{r+1} = [[A_r, S], [R, a_rr]] with A_r the leading r×r block.
        let s: Vec<T> = (0..r).map(|i| a[(i, r)].clone()).collect();
        let row: Vec<T> = (0..r).map(|j| a[(r, j)].clone()).collect();
        let lead = a.block(0, 0, r, r);
        let mut t = Vec::with_capacity(r + 2);
        t.push(T::one());
        t.push(-a[(r, r)].clone());
        let mut w = s;
        for _ in 0..r {
            let rw = row
                .iter()
                .zip(&w)
                .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone());
            t.push(-rw);
            w = lead.mul_vec(&w);
        }
        // v_new = T · v with T the (r+2)×(r+1) lower-triangular Toeplitz matrix.
        let next: Vec<T> = (0..r + 2)
            .map(|i| (0..=i.min(r)).fold(T::zero(), |acc, j| acc + t[i - j].clone() * v[j].clone()))
            .collect();
        v = next;
    }
    v.reverse();
    Ok(Poly::new(v))
}

/// Minimal polynomial, read off as the last invariant factor.
pub fn minimal_poly<T: Scalar>(a: &Matrix<T>) -> Result<Poly<T>> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(Poly::one());
    }
    Ok(invariant_factors(a).pop().expect("n ≥ 1"))
}

/// Diagonalizable over the algebraic closure: squarefree minimal polynomial.
pub fn is_semisimple<T: Scalar>(a: &Matrix<T>) -> Result<bool> {
    Ok(minimal_poly(a)?.is_squarefree())
}

/// Minimal polynomial is a power of `x`.
pub fn is_nilpotent<T: Scalar>(a: &Matrix<T>) -> Result<bool> {
    let m = minimal_poly(a)?;
    let k = m.degree().unwrap_or(0);
    Ok(m == Poly::monomial(T::one(), k))
}

/// Similarity over the ground field: identical invariant factors.
pub fn similar<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> Result<bool> {
    a.require_square()?;
    b.require_square()?;
    if a.rows() != b.rows() {
        return Ok(false);
    }
    Ok(invariant_factors(a) == invariant_factors(b))
}

/// Whether `X` and `−X` are similar; for semisimple `X` this is the
/// condition that `λ` and `−λ` occur with equal multiplicities.
pub fn similar_to_negative<T: Scalar>(x: &Matrix<T>) -> Result<bool> {
    similar(x, &-x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactMatrix, GaussRat};

    fn d(v: &[i64]) -> ExactMatrix {
        ExactMatrix::diag(&v.iter().map(|&k| GaussRat::from(k)).collect::<Vec<_>>())
    }

    #[test]
    fn negative_similarity_examples() {
        assert!(similar_to_negative(&d(&[1, -1])).unwrap());
        assert!(!similar_to_negative(&d(&[1, 1, -1])).unwrap());
        assert!(similar_to_negative(&d(&[1, 2, -1, -2])).unwrap());
    }

    #[test]
    fn semisimple_nilpotent_predicates() {
        assert!(is_semisimple(&d(&[1, 1])).unwrap());
        let n = ExactMatrix::from_i64_rows(&[&[0, 1], &[0, 0]]);
        assert!(is_nilpotent(&n).unwrap());
        assert!(!is_semisimple(&n).unwrap());
        let j = ExactMatrix::from_i64_rows(&[&[1, 1], &[0, 1]]);
        assert!(!is_semisimple(&j).unwrap());
        assert!(!is_nilpotent(&j).unwrap());
        assert_eq!(
            minimal_poly(&j).unwrap(),
            Poly::new(vec![
                GaussRat::from(1),
                GaussRat::from(-2),
                GaussRat::from(1)
            ])
        );
    }

    #[test]
    fn berkowitz_small() {
        let a = ExactMatrix::from_i64_rows(&[&[2, 1], &[3, 4]]);
        // x² − 6x + 5
        assert_eq!(
            charpoly(&a).unwrap(),
            Poly::new(vec![
                GaussRat::from(5),
                GaussRat::from(-6),
                GaussRat::from(1)
            ])
        );
        let z = ExactMatrix::zeros(0, 0);
        assert_eq!(charpoly(&z).unwrap(), Poly::one());
    }
}
