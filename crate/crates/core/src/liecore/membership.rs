use crate::error::{Error, Result};
use crate::matlin::{det, kernel};
use crate::{ExactMatrix, GaussRat};

use super::forms::symplectic_form;
use super::{Algebra, Group, LieContext};
use num_traits::{One, Zero};

fn check_size(x: &ExactMatrix, ctx: &LieContext) -> Result<usize> {
    let size = ctx.matrix_size();
    if x.rows() != size || x.cols() != size {
        return Err(Error::SizeMismatch {
            expected: format!("{size}x{size} for {ctx}"),
            found: format!("{}x{}", x.rows(), x.cols()),
        });
    }
    Ok(size)
}

/// Defining equations of the algebra: trace zero for sl, `Xᵗ + X = 0` for
/// so, `Xᵗ J_n + J_n X = 0` for sp.
pub fn algebra_member(x: &ExactMatrix, ctx: &LieContext) -> Result<bool> {
    check_size(x, ctx)?;
    Ok(match ctx.algebra() {
        Algebra::Gl => true,
        Algebra::Sl => x.trace().is_zero(),
        Algebra::So => (&x.transpose() + x).is_zero(),
        Algebra::Sp => {
            let j = symplectic_form(ctx.n());
            (&(&x.transpose() * &j) + &(&j * x)).is_zero()
        }
    })
}

/// Defining equations of the group. PSL/PSp are tested on the matrix
/// representative, which must lie in SL/Sp.
pub fn group_member(g: &ExactMatrix, ctx: &LieContext) -> Result<bool> {
    let n = check_size(g, ctx)?;
    Ok(match ctx.group() {
        Group::Gl => !det(g)?.is_zero(),
        Group::Sl | Group::Psl => det(g)?.is_one(),
        Group::O => (&g.transpose() * g).is_identity(),
        Group::So => (&g.transpose() * g).is_identity() && det(g)?.is_one(),
        Group::Sp | Group::Psp => {
            let j = symplectic_form(n / 2);
            &(&g.transpose() * &j) * g == j
        }
    })
}

/// Whether `g` is an involution of the acting group: `g² = I`, or for the
/// projective groups `g²` a scalar matrix.
pub fn is_group_involution(g: &ExactMatrix, group: Group) -> bool {
    let sq = g * g;
    if group.is_projective() {
        sq.scalar_value().is_some()
    } else {
        sq.is_identity()
    }
}

/// A basis of the algebra of `ctx`, as matrices.
pub fn algebra_basis(ctx: &LieContext) -> Vec<ExactMatrix> {
    let size = ctx.matrix_size();
    let e = |i, j| ExactMatrix::unit(size, size, i, j);
    let mut out = Vec::new();
    match ctx.algebra() {
        Algebra::Gl => {
            for i in 0..size {
                for j in 0..size {
                    out.push(e(i, j));
                }
            }
        }
        Algebra::Sl => {
            for i in 0..size {
                for j in 0..size {
                    if i != j {
                        out.push(e(i, j));
                    }
                }
            }
            for i in 0..size.saturating_sub(1) {
                out.push(&e(i, i) - &e(size - 1, size - 1));
            }
        }
        Algebra::So => {
            for i in 0..size {
                for j in i + 1..size {
                    out.push(&e(i, j) - &e(j, i));
                }
            }
        }
        Algebra::Sp => {
            let n = ctx.n();
            // [[A, 0], [0, −Aᵗ]]
            for i in 0..n {
                for j in 0..n {
                    out.push(&e(i, j) - &e(n + j, n + i));
                }
            }
            // [[0, B], [0, 0]] and [[0, 0], [C, 0]] with B, C symmetric
            for i in 0..n {
                for j in i..n {
                    let b = if i == j {
                        e(i, n + i)
                    } else {
                        &e(i, n + j) + &e(j, n + i)
                    };
                    let c = if i == j {
                        e(n + i, i)
                    } else {
                        &e(n + i, j) + &e(n + j, i)
                    };
                    out.push(b);
                    out.push(c);
                }
            }
        }
    }
    out
}

/// Kernel of `c ↦ L(Σ cₖ Bₖ)` given the images `L(Bₖ)`; returns the
/// coefficient vectors.
pub(crate) fn linear_relations(images: &[ExactMatrix]) -> Vec<Vec<GaussRat>> {
    let Some(first) = images.first() else {
        return Vec::new();
    };
    let len = first.rows() * first.cols();
    let cols: Vec<Vec<GaussRat>> = images.iter().map(|m| m.entries().to_vec()).collect();
    kernel(&ExactMatrix::from_columns(len, &cols))
}

pub(crate) fn combine(basis: &[ExactMatrix], coeffs: &[GaussRat]) -> ExactMatrix {
    let (r, c) = (basis[0].rows(), basis[0].cols());
    let mut acc = ExactMatrix::zeros(r, c);
    for (b, k) in basis.iter().zip(coeffs) {
        if !k.is_zero() {
            acc = &acc + &b.scale(k);
        }
    }
    acc
}

/// Basis of `{ A ∈ algebra | [A, X] = 0 }`.
pub fn centralizer_algebra(x: &ExactMatrix, ctx: &LieContext) -> Result<Vec<ExactMatrix>> {
    if !algebra_member(x, ctx)? {
        return Err(Error::AlgebraMismatch);
    }
    let basis = algebra_basis(ctx);
    Ok(centralizer_within(x, &basis))
}

/// Basis of the matrices in `span(basis)` commuting with `x`.
pub fn centralizer_within(x: &ExactMatrix, basis: &[ExactMatrix]) -> Vec<ExactMatrix> {
    if basis.is_empty() {
        return Vec::new();
    }
    let images: Vec<ExactMatrix> = basis.iter().map(|b| b.bracket(x)).collect();
    linear_relations(&images)
        .iter()
        .map(|c| combine(basis, c))
        .collect()
}

/// Basis of the anticommutant `{ r | rX + Xr = 0 }` in the full matrix space.
pub fn reverser_linear_space(x: &ExactMatrix) -> Result<Vec<ExactMatrix>> {
    let n = x.require_square()?;
    let basis: Vec<ExactMatrix> = (0..n)
        .flat_map(|i| (0..n).map(move |j| ExactMatrix::unit(n, n, i, j)))
        .collect();
    let images: Vec<ExactMatrix> = basis.iter().map(|b| b.anti_bracket(x)).collect();
    Ok(linear_relations(&images)
        .iter()
        .map(|c| combine(&basis, c))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlin::rank;

    fn g(k: i64) -> GaussRat {
        GaussRat::from(k)
    }

    fn span_dim(ms: &[ExactMatrix]) -> usize {
        if ms.is_empty() {
            return 0;
        }
        let len = ms[0].entries().len();
        let cols: Vec<Vec<GaussRat>> = ms.iter().map(|m| m.entries().to_vec()).collect();
        rank(&ExactMatrix::from_columns(len, &cols))
    }

    #[test]
    fn algebra_membership_examples() {
        assert!(algebra_member(&ExactMatrix::diag(&[g(1), g(-1)]), &LieContext::sl(2)).unwrap());
        let x = g(3);
        let so2 = ExactMatrix::from_rows(vec![vec![g(0), x.clone()], vec![-x, g(0)]]);
        assert!(algebra_member(&so2, &LieContext::so(2)).unwrap());
        assert!(!algebra_member(&ExactMatrix::identity(2), &LieContext::sl(2)).unwrap());
        assert!(matches!(
            algebra_member(&ExactMatrix::identity(3), &LieContext::sl(2)),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn group_membership_examples() {
        let j1: ExactMatrix = symplectic_form(1);
        assert!(group_member(&j1, &LieContext::sp(1)).unwrap());
        let refl = ExactMatrix::diag(&[g(1), g(-1)]);
        assert!(!group_member(&refl, &LieContext::so(2)).unwrap());
        assert!(group_member(&refl, &LieContext::o(2)).unwrap());
        let d = ExactMatrix::diag(&[GaussRat::i(), -GaussRat::i()]);
        assert!(group_member(&d, &LieContext::sl(2)).unwrap());
    }

    #[test]
    fn basis_dimensions() {
        assert_eq!(algebra_basis(&LieContext::sl(3)).len(), 8);
        assert_eq!(algebra_basis(&LieContext::so(4)).len(), 6);
        assert_eq!(algebra_basis(&LieContext::sp(2)).len(), 10);
        for ctx in [LieContext::sl(3), LieContext::so(4), LieContext::sp(2)] {
            let b = algebra_basis(&ctx);
            assert_eq!(span_dim(&b), b.len());
            assert!(b.iter().all(|m| algebra_member(m, &ctx).unwrap()));
        }
    }

    #[test]
    fn centralizer_examples() {
        let reg = ExactMatrix::diag(&[g(1), g(2), g(-3)]);
        assert_eq!(
            centralizer_algebra(&reg, &LieContext::sl(3)).unwrap().len(),
            2
        );
        assert_eq!(
            centralizer_algebra(&ExactMatrix::zeros(2, 2), &LieContext::sl(2))
                .unwrap()
                .len(),
            3
        );
        let h = ExactMatrix::diag(&[g(5), g(-5)]);
        // Unknowns a, b, c, d of [[a, b], [c, −a]] ∩ sp(1): [A, X] = 0 forces b = c = 0.
        let z = centralizer_algebra(&h, &LieContext::sp(1)).unwrap();
        assert_eq!(z.len(), 1);
        assert!(z[0].bracket(&h).is_zero());
    }

    #[test]
    fn anticommutant_examples() {
        let h = ExactMatrix::diag(&[g(2), g(-2)]);
        let r = reverser_linear_space(&h).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().all(|m| m[(0, 0)].is_zero() && m[(1, 1)].is_zero()));
        assert_eq!(
            reverser_linear_space(&ExactMatrix::zeros(2, 2))
                .unwrap()
                .len(),
            4
        );
        let so2 = ExactMatrix::from_i64_rows(&[&[0, 7], &[-7, 0]]);
        let r = reverser_linear_space(&so2).unwrap();
        let expected = [
            ExactMatrix::from_i64_rows(&[&[1, 0], &[0, -1]]),
            ExactMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]),
        ];
        assert_eq!(span_dim(&r), 2);
        let mut both = r.clone();
        both.extend(expected.iter().cloned());
        assert_eq!(span_dim(&both), 2);
    }
}
