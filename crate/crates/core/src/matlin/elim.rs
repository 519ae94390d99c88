//! Gaussian elimination: reduced row echelon form, kernels, linear solves,
//! determinants and inverses. Pivots are always the first nonzero entry in
//! column order, so every output is a deterministic function of the input.

use crate::error::{Error, Result};
use crate::{Matrix, Scalar};

/// Reduced row echelon form and its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<T: Scalar> {
    pub reduced: Matrix<T>,
    pub pivots: Vec<usize>,
}

/// Result of [`solve_linear`]: one solution plus a basis of the kernel.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution<T: Scalar> {
    pub particular: Vec<T>,
    pub kernel: Vec<Vec<T>>,
}

pub fn rref<T: Scalar>(a: &Matrix<T>) -> Echelon<T> {
    let (rows, cols) = (a.rows(), a.cols());
    let mut m = a.clone();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[(i, c)].is_zero()) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(r, j)].clone();
                m[(r, j)] = tmp;
            }
        }
        let inv = m[(r, c)].inverse().expect("pivot is nonzero");
        for j in c..cols {
            m[(r, j)] = m[(r, j)].clone() * inv.clone();
        }
        for i in 0..rows {
            if i == r || m[(i, c)].is_zero() {
                continue;
            }
            let f = m[(i, c)].clone();
            for j in c..cols {
                if m[(r, j)].is_zero() {
                    continue;
                }
                m[(i, j)] = m[(i, j)].clone() - f.clone() * m[(r, j)].clone();
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { reduced: m, pivots }
}

pub fn rank<T: Scalar>(a: &Matrix<T>) -> usize {
    rref(a).pivots.len()
}

fn kernel_from_echelon<T: Scalar>(e: &Echelon<T>, cols: usize) -> Vec<Vec<T>> {
    let free: Vec<usize> = (0..cols).filter(|c| !e.pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (row, &p) in e.pivots.iter().enumerate() {
                v[p] = -e.reduced[(row, f)].clone();
            }
            v
        })
        .collect()
}

/// Basis of `{ x | A x = 0 }`, one vector per free column.
pub fn kernel<T: Scalar>(a: &Matrix<T>) -> Vec<Vec<T>> {
    kernel_from_echelon(&rref(a), a.cols())
}

/// Solves `A x = b`. The particular solution sets every free variable to zero.
pub fn solve_linear<T: Scalar>(a: &Matrix<T>, b: &[T]) -> Result<Solution<T>> {
    if a.rows() != b.len() {
        return Err(Error::SizeMismatch {
            expected: format!("right-hand side of length {}", a.rows()),
            found: format!("length {}", b.len()),
        });
    }
    let cols = a.cols();
    let augmented = Matrix::from_fn(a.rows(), cols + 1, |i, j| {
        if j < cols {
            a[(i, j)].clone()
        } else {
            b[i].clone()
        }
    });
    let e = rref(&augmented);
    if e.pivots.last() == Some(&cols) {
        return Err(Error::InconsistentSystem);
    }
    let mut particular = vec![T::zero(); cols];
    for (row, &p) in e.pivots.iter().enumerate() {
        particular[p] = e.reduced[(row, cols)].clone();
    }
    let kernel = kernel_from_echelon(&e, cols)
        .into_iter()
        .map(|mut v| {
            v.truncate(cols);
            v
        })
        .collect();
    Ok(Solution { particular, kernel })
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn det<T: Scalar>(a: &Matrix<T>) -> Result<T> {
    let n = a.require_square()?;
    if n == 0 {
        return Ok(T::one());
    }
    let mut m = a.clone();
    let mut sign = T::one();
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return Ok(T::zero());
            };
            for j in 0..n {
                let tmp = m[(p, j)].clone();
                m[(p, j)] = m[(k, j)].clone();
                m[(k, j)] = tmp;
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v =
                    m[(i, j)].clone() * m[(k, k)].clone() - m[(i, k)].clone() * m[(k, j)].clone();
                m[(i, j)] = v / prev.clone();
            }
        }
        prev = m[(k, k)].clone();
    }
    Ok(sign * m[(n - 1, n - 1)].clone())
}

pub fn inverse<T: Scalar>(a: &Matrix<T>) -> Result<Matrix<T>> {
    let n = a.require_square()?;
    let aug = Matrix::from_fn(n, 2 * n, |i, j| {
        if j < n {
            a[(i, j)].clone()
        } else if j - n == i {
            T::one()
        } else {
            T::zero()
        }
    });
    let e = rref(&aug);
    if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(e.reduced.block(0, n, n, n))
}

/// Maximal linearly independent subfamily, keeping the first occurrences.
pub fn independent_subset<T: Scalar>(vectors: &[Vec<T>]) -> Vec<usize> {
    let Some(len) = vectors.first().map(Vec::len) else {
        return Vec::new();
    };
    let m = Matrix::from_columns(len, vectors);
    rref(&m).pivots
}

/// Basis of the intersection of two subspaces given by spanning columns.
pub fn intersect_spans<T: Scalar>(dim: usize, a: &[Vec<T>], b: &[Vec<T>]) -> Vec<Vec<T>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve Σ αᵢ aᵢ − Σ βⱼ bⱼ = 0 and map the α part back.
    let mut cols: Vec<Vec<T>> = a.to_vec();
    cols.extend(b.iter().map(|v| v.iter().map(|x| -x.clone()).collect()));
    let sys = Matrix::from_columns(dim, &cols);
    let vecs: Vec<Vec<T>> = kernel(&sys)
        .into_iter()
        .map(|k| {
            let mut v = vec![T::zero(); dim];
            for (alpha, col) in k.iter().zip(a) {
                if alpha.is_zero() {
                    continue;
                }
                for (slot, x) in v.iter_mut().zip(col) {
                    *slot = slot.clone() + alpha.clone() * x.clone();
                }
            }
            v
        })
        .collect();
    let keep = independent_subset(&vecs);
    keep.into_iter().map(|k| vecs[k].clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactMatrix, GaussRat};

    fn g(k: i64) -> GaussRat {
        GaussRat::from(k)
    }

    #[test]
    fn solve_identity() {
        let a = ExactMatrix::identity(2);
        let s = solve_linear(&a, &[g(1), GaussRat::i()]).unwrap();
        assert_eq!(s.particular, vec![g(1), GaussRat::i()]);
        assert!(s.kernel.is_empty());
    }

    #[test]
    fn solve_zero_system() {
        let a = ExactMatrix::zeros(2, 2);
        let s = solve_linear(&a, &[g(0), g(0)]).unwrap();
        assert_eq!(s.particular, vec![g(0), g(0)]);
        assert_eq!(s.kernel.len(), 2);
    }

    #[test]
    fn solve_rank_one() {
        let a = ExactMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        let s = solve_linear(&a, &[g(2), g(2)]).unwrap();
        assert_eq!(s.particular, vec![g(2), g(0)]);
        assert_eq!(s.kernel, vec![vec![g(-1), g(1)]]);
        assert_eq!(a.mul_vec(&s.particular), vec![g(2), g(2)]);
    }

    #[test]
    fn inconsistent() {
        let a = ExactMatrix::from_i64_rows(&[&[1, 1], &[1, 1]]);
        assert_eq!(
            solve_linear(&a, &[g(1), g(2)]),
            Err(Error::InconsistentSystem)
        );
        assert!(matches!(
            solve_linear(&a, &[g(1)]),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn det_and_inverse() {
        let a = ExactMatrix::from_i64_rows(&[&[0, 2, 1], &[1, 0, 3], &[4, 1, 0]]);
        // cofactor expansion: 0·(0−3) − 2·(0−12) + 1·(1−0) = 25
        assert_eq!(det(&a).unwrap(), g(25));
        let inv = inverse(&a).unwrap();
        assert!((&a * &inv).is_identity());
        let sing = ExactMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]);
        assert_eq!(det(&sing).unwrap(), g(0));
        assert_eq!(inverse(&sing), Err(Error::Singular));
    }

    #[test]
    fn intersection() {
        let e = |k: usize| -> Vec<GaussRat> { (0..3).map(|i| g((i == k) as i64)).collect() };
        let a = vec![e(0), e(1)];
        let b = vec![e(1), e(2)];
        let meet = intersect_spans(3, &a, &b);
        assert_eq!(meet.len(), 1);
        assert_eq!(
            rank(&ExactMatrix::from_columns(3, &[meet[0].clone(), e(1)])),
            1
        );
    }
}
