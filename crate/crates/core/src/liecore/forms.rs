//! Structural constants: the symplectic form, `I_{1,1}`, block embeddings
//! and concatenation of ordered bases.

use crate::{ExactMatrix, GaussRat, Matrix, Scalar};

/// `J_n = [[0, −I_n], [I_n, 0]]`, the form matrix of `⟨x, y⟩ = xᵗ J_n y`.
pub fn symplectic_form<T: Scalar>(n: usize) -> Matrix<T> {
    let i = Matrix::<T>::identity(n);
    let z = Matrix::<T>::zeros(n, n);
    Matrix::from_blocks(&z, &-&i, &i, &z)
}

/// `I_{1,1} = diag(1, −1)`.
pub fn i11() -> ExactMatrix {
    ExactMatrix::diag(&[GaussRat::from(1), GaussRat::from(-1)])
}

/// `A ⊕ A ⊕ ⋯ ⊕ A` with `copies` summands.
pub fn diagonal_embedding<T: Scalar>(a: &Matrix<T>, copies: usize) -> Matrix<T> {
    Matrix::block_diag(&vec![a.clone(); copies])
}

/// Block anti-diagonal matrix: `blocks[0]` in the top-right corner,
/// `blocks[k−1]` in the bottom-left. All blocks square of one size.
pub fn antidiag_blocks<T: Scalar>(blocks: &[Matrix<T>]) -> Matrix<T> {
    let k = blocks.len();
    let b = blocks.first().map_or(0, Matrix::rows);
    let mut m = Matrix::zeros(k * b, k * b);
    for (idx, blk) in blocks.iter().enumerate() {
        m.set_block(idx * b, (k - 1 - idx) * b, blk);
    }
    m
}

/// Concatenation `(v₁, …, v_n) ∨ (w₁, …, w_m)` of ordered bases.
pub fn join_bases<T: Clone>(parts: &[Vec<Vec<T>>]) -> Vec<Vec<T>> {
    parts.iter().flatten().cloned().collect()
}

/// `⟨x, y⟩ = xᵗ J_n y`.
pub fn symplectic_pairing<T: Scalar>(x: &[T], y: &[T]) -> T {
    let n = x.len() / 2;
    // xᵗ J y = Σ_j (x_{n+j} y_j − x_j y_{n+j})
    (0..n).fold(T::zero(), |acc, j| {
        acc + x[n + j].clone() * y[j].clone() - x[j].clone() * y[n + j].clone()
    })
}

/// `xᵗ y`.
pub fn dot<T: Scalar>(x: &[T], y: &[T]) -> T {
    x.iter()
        .zip(y)
        .fold(T::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}

/// `xᵗ G y`.
pub fn bilinear<T: Scalar>(g: &Matrix<T>, x: &[T], y: &[T]) -> T {
    dot(x, &g.mul_vec(y))
}
