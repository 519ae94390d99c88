//! Invariant factors by cyclic-vector (Krylov) decomposition.
//!
//! This route shares no code with the Smith-form computation in `matlin`:
//! it splits off one cyclic subspace at a time, each time choosing a vector
//! whose local minimal polynomial equals the minimal polynomial of the
//! remaining operator, and continues on an invariant complement cut out by a
//! dual vector.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matlin::{kernel, solve_linear};
use crate::{Matrix, Poly, Scalar};

/// Monic polynomial `m` of least degree with `m(A)v = 0`, and the Krylov
/// vectors `v, Av, …, A^{k−1}v` (`k = deg m`).
fn local_minimal<T: Scalar>(a: &Matrix<T>, v: &[T]) -> (Poly<T>, Vec<Vec<T>>) {
    let n = a.rows();
    let mut krylov: Vec<Vec<T>> = Vec::new();
    let mut current = v.to_vec();
    loop {
        if krylov.is_empty() {
            if current.iter().all(T::is_zero) {
                return (Poly::one(), krylov);
            }
        } else {
            let k = Matrix::from_columns(n, &krylov);
            if let Ok(sol) = solve_linear(&k, &current) {
                // A^k v = Σ cᵢ Aⁱ v
                let mut coeffs: Vec<T> = sol.particular.iter().map(|c| -c.clone()).collect();
                coeffs.push(T::one());
                return (Poly::new(coeffs), krylov);
            }
        }
        let next = a.mul_vec(&current);
        krylov.push(current);
        current = next;
    }
}

fn lcm<T: Scalar>(p: &Poly<T>, q: &Poly<T>) -> Poly<T> {
    let g = p.gcd(q);
    (p * q)
        .exact_div(&g)
        .expect("gcd divides the product")
        .monic()
}

fn minimal_polynomial<T: Scalar>(a: &Matrix<T>) -> Poly<T> {
    let n = a.rows();
    (0..n).fold(Poly::one(), |acc, i| {
        let e: Vec<T> = (0..n)
            .map(|j| if i == j { T::one() } else { T::zero() })
            .collect();
        lcm(&acc, &local_minimal(a, &e).0)
    })
}

/// Invariant factors of `a` in divisibility order, trivial factors omitted.
pub fn cyclic_invariant_factors<T: Scalar>(a: &Matrix<T>, rng: &mut ChaCha8Rng) -> Vec<Poly<T>> {
    let n = a.rows();
    if n == 0 {
        return Vec::new();
    }
    let m = minimal_polynomial(a);
    let k = m.degree().unwrap_or(0);
    let (v, krylov) = loop {
        let v: Vec<T> = (0..n)
            .map(|_| T::from_i64(rng.gen_range(-9..=9)).unwrap())
            .collect();
        let (mv, kr) = local_minimal(a, &v);
        if mv == m {
            break (v, kr);
        }
    };
    debug_assert_eq!(v.len(), n);
    if k == n {
        return vec![m];
    }
    // φ with φ(Aⁱv) = δ_{i,k−1}; W = {x | φ(Aⁱx) = 0, i < k} is an invariant complement.
    let kt = Matrix::from_columns(n, &krylov).transpose();
    let mut target = vec![T::zero(); k];
    target[k - 1] = T::one();
    let phi = solve_linear(&kt, &target)
        .expect("Krylov vectors are independent")
        .particular;
    let at = a.transpose();
    let mut rows = Vec::with_capacity(k);
    let mut cur = phi;
    for _ in 0..k {
        let next = at.mul_vec(&cur);
        rows.push(cur);
        cur = next;
    }
    let w = kernel(&Matrix::from_columns(n, &rows).transpose());
    let wb = Matrix::from_columns(n, &w);
    let restricted_cols: Vec<Vec<T>> = w
        .iter()
        .map(|col| {
            solve_linear(&wb, &a.mul_vec(col))
                .expect("complement is invariant")
                .particular
        })
        .collect();
    let restricted = Matrix::from_columns(w.len(), &restricted_cols);
    let mut out = cyclic_invariant_factors(&restricted, rng);
    out.push(m);
    out
}

/// Similarity test through cyclic decompositions of both matrices.
pub fn rcf_similar<T: Scalar>(a: &Matrix<T>, b: &Matrix<T>) -> bool {
    if !a.is_square() || !b.is_square() || a.rows() != b.rows() {
        return false;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    cyclic_invariant_factors(a, &mut rng) == cyclic_invariant_factors(b, &mut rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ExactMatrix, GaussRat};

    #[test]
    fn examples() {
        let d = ExactMatrix::diag(&[GaussRat::from(1), GaussRat::from(-1)]);
        let e = ExactMatrix::diag(&[GaussRat::from(-1), GaussRat::from(1)]);
        assert!(rcf_similar(&d, &e));
        let n2 = ExactMatrix::unit(2, 2, 0, 1);
        assert!(!rcf_similar(&n2, &ExactMatrix::zeros(2, 2)));
    }

    #[test]
    fn conjugates_are_similar() {
        let a = ExactMatrix::from_i64_rows(&[&[2, 1, 0], &[0, 2, 0], &[0, 0, 2]]);
        let p = ExactMatrix::from_i64_rows(&[&[1, 2, 3], &[0, 1, 4], &[5, 6, 0]]);
        let b = &(&p * &a) * &crate::matlin::inverse(&p).unwrap();
        assert!(rcf_similar(&a, &b));
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = cyclic_invariant_factors(&a, &mut rng);
        let x2 = Poly::linear(GaussRat::from(2));
        assert_eq!(f, vec![x2.clone(), &x2 * &x2]);
    }
}
