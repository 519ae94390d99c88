use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liecore::{algebra_basis, algebra_member, combine};
use crate::matlin::{is_nilpotent, solve_linear};
use crate::{ExactMatrix, GaussRat, LieContext};

/// `{X, H, Y}` with `[H, X] = 2X`, `[H, Y] = −2Y`, `[X, Y] = H`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl2Triple {
    pub x: ExactMatrix,
    pub h: ExactMatrix,
    pub y: ExactMatrix,
}

impl Sl2Triple {
    /// The three bracket relations hold exactly and `X ≠ 0`.
    pub fn is_valid(&self) -> bool {
        let two = GaussRat::from(2);
        !self.x.is_zero()
            && self.h.bracket(&self.x) == self.x.scale(&two)
            && self.h.bracket(&self.y) == self.y.scale(&-two)
            && self.x.bracket(&self.y) == self.h
    }
}

fn flatten(ms: &[ExactMatrix]) -> ExactMatrix {
    let len = ms[0].entries().len();
    let cols: Vec<Vec<GaussRat>> = ms.iter().map(|m| m.entries().to_vec()).collect();
    ExactMatrix::from_columns(len, &cols)
}

fn stack(top: &ExactMatrix, bottom: &ExactMatrix) -> ExactMatrix {
    let r = top.rows();
    ExactMatrix::from_fn(r + bottom.rows(), top.cols(), |i, j| {
        if i < r {
            top[(i, j)].clone()
        } else {
            bottom[(i - r, j)].clone()
        }
    })
}

/// An sl2-triple through the nilpotent `x` with `H` and `Y` in `span(basis)`.
///
/// `H = [X, Z]` for any `Z` in the span solving `[[X, Z], X] = 2X`; then `Y`
/// solves `[X, Y] = H` and `[H, Y] = −2Y` jointly. Both steps are linear.
/// The span must be a subalgebra containing `x` that is closed enough for
/// a triple to exist, e.g. a centralizer of a semisimple element.
pub fn sl2_triple_within(x: &ExactMatrix, basis: &[ExactMatrix]) -> Result<Sl2Triple> {
    if x.is_zero() {
        return Err(Error::ZeroElement);
    }
    if !is_nilpotent(x)? {
        return Err(Error::NotNilpotent);
    }
    let no_triple = || Error::Internal("no sl2-triple inside the given span".into());
    let two = GaussRat::from(2);

    let images: Vec<ExactMatrix> = basis.iter().map(|b| x.bracket(b).bracket(x)).collect();
    let rhs = x.scale(&two);
    let z = solve_linear(&flatten(&images), rhs.entries()).map_err(|_| no_triple())?;
    let h = x.bracket(&combine(basis, &z.particular));

    // [X, Y] = H and [H, Y] + 2Y = 0
    let top: Vec<ExactMatrix> = basis.iter().map(|b| x.bracket(b)).collect();
    let bottom: Vec<ExactMatrix> = basis
        .iter()
        .map(|b| &h.bracket(b) + &b.scale(&two))
        .collect();
    let system = stack(&flatten(&top), &flatten(&bottom));
    let mut target = h.entries().to_vec();
    target.extend(std::iter::repeat_n(GaussRat::from(0), h.entries().len()));
    let ys = solve_linear(&system, &target).map_err(|_| no_triple())?;
    let y = combine(basis, &ys.particular);

    let t = Sl2Triple { x: x.clone(), h, y };
    if !t.is_valid() {
        return Err(no_triple());
    }
    Ok(t)
}

/// An sl2-triple inside sp(n) through the nilpotent `x ∈ sp(n)`.
pub fn sl2_triple(x: &ExactMatrix) -> Result<Sl2Triple> {
    let ctx = sp_context(x)?;
    if !algebra_member(x, &ctx)? {
        return Err(Error::AlgebraMismatch);
    }
    sl2_triple_within(x, &algebra_basis(&ctx))
}

/// sp(n) context for a `2n × 2n` matrix.
pub(crate) fn sp_context(x: &ExactMatrix) -> Result<LieContext> {
    let size = x.require_square()?;
    if size == 0 || size % 2 == 1 {
        return Err(Error::SizeMismatch {
            expected: "even positive size for sp(n)".into(),
            found: format!("{size}x{size}"),
        });
    }
    Ok(LieContext::sp(size / 2))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp1_generator() {
        let x = ExactMatrix::unit(2, 2, 0, 1);
        let t = sl2_triple(&x).unwrap();
        assert_eq!(
            t.h,
            ExactMatrix::diag(&[GaussRat::from(1), GaussRat::from(-1)])
        );
        assert_eq!(t.y, ExactMatrix::unit(2, 2, 1, 0));
    }

    #[test]
    fn sp2_two_chains() {
        // [[0, I], [0, 0]] has partition [2, 2]
        let mut x = ExactMatrix::zeros(4, 4);
        x[(0, 2)] = GaussRat::from(1);
        x[(1, 3)] = GaussRat::from(1);
        let t = sl2_triple(&x).unwrap();
        assert!(t.is_valid());
        let ctx = LieContext::sp(2);
        assert!(algebra_member(&t.h, &ctx).unwrap() && algebra_member(&t.y, &ctx).unwrap());
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(
            sl2_triple(&ExactMatrix::zeros(2, 2)),
            Err(Error::ZeroElement)
        );
        let h = ExactMatrix::diag(&[GaussRat::from(1), GaussRat::from(-1)]);
        assert_eq!(sl2_triple(&h), Err(Error::NotNilpotent));
    }
}
