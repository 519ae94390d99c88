use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liecore::forms::{bilinear, symplectic_form};
use crate::matlin::{intersect_spans, inverse, kernel, rank};
use crate::ssreal::{orthogonal_basis, symplectic_basis};
use crate::{ExactMatrix, GaussRat};

use super::Sl2Triple;

/// Chains of one length `d`: heads `v_1, …, v_t` of weight `1 − d` and the
/// Gram matrix of `(v, u)_d = ⟨v, X^{d−1} u⟩` on them.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainBlock {
    pub d: usize,
    pub t: usize,
    /// `2n × t`, one head per column.
    pub heads: ExactMatrix,
    pub gram: ExactMatrix,
}

/// Isotypical decomposition of `ℂ^{2n}` under an sl2-triple in sp(n).
///
/// `basis` lists, for each block in ascending `d`, the vectors `X^l v_j`
/// for `l = 0..d` (outer) and `j = 1..t` (inner).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymplecticChainData {
    pub x: ExactMatrix,
    pub blocks: Vec<ChainBlock>,
    pub basis: ExactMatrix,
}

impl SymplecticChainData {
    /// The multiset of chain lengths, ascending.
    pub fn parts(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .flat_map(|b| std::iter::repeat_n(b.d, b.t))
            .collect()
    }

    /// Column offset of block `k` inside `basis`.
    pub(crate) fn offset(&self, k: usize) -> usize {
        self.blocks[..k].iter().map(|b| b.d * b.t).sum()
    }

    /// Checks the structural invariants: `Σ d·t_d = 2n`, `basis` invertible,
    /// every Gram matrix nondegenerate with `(u, v)_d = (−1)^{d−1}(v, u)_d`,
    /// `t_d` even for odd `d`, and `X^d v = 0` on every head.
    pub fn check(&self) -> std::result::Result<(), String> {
        let size = self.x.rows();
        let total: usize = self.blocks.iter().map(|b| b.d * b.t).sum();
        if total != size {
            return Err(format!("Σ d·t_d = {total} ≠ {size}"));
        }
        if rank(&self.basis) != size {
            return Err("chain vectors are not a basis".into());
        }
        for b in &self.blocks {
            if rank(&b.gram) != b.t {
                return Err(format!("gram for d = {} is degenerate", b.d));
            }
            let gt = b.gram.transpose();
            let expected = if b.d % 2 == 0 {
                b.gram.clone()
            } else {
                -&b.gram
            };
            if gt != expected {
                return Err(format!("gram for d = {} violates the parity law", b.d));
            }
            if b.d % 2 == 1 && b.t % 2 == 1 {
                return Err(format!("t_{} = {} is odd", b.d, b.t));
            }
            if !(&self.x.pow(b.d) * &b.heads).is_zero() {
                return Err(format!("X^{} does not kill the heads", b.d));
            }
        }
        Ok(())
    }
}

fn pairing_gram(x_pow: &ExactMatrix, heads: &[Vec<GaussRat>]) -> ExactMatrix {
    let j: ExactMatrix = symplectic_form(x_pow.rows() / 2);
    let form = &j * x_pow;
    ExactMatrix::from_fn(heads.len(), heads.len(), |a, b| {
        bilinear(&form, &heads[a], &heads[b])
    })
}

/// Chain heads, their forms, and the ordered basis `B` for a triple in sp(n).
pub fn chain_decomposition(t: &Sl2Triple) -> Result<SymplecticChainData> {
    let size = t.x.rows();
    let j: ExactMatrix = symplectic_form(size / 2);
    let mut blocks = Vec::new();
    let mut columns = Vec::new();
    for d in 1..=size {
        let weight = GaussRat::from(1 - d as i64);
        let weight_space = kernel(&(&t.h - &ExactMatrix::scalar(size, weight)));
        if weight_space.is_empty() {
            continue;
        }
        let xd = t.x.pow(d);
        let heads = intersect_spans(size, &weight_space, &kernel(&xd));
        if heads.is_empty() {
            continue;
        }
        let xd1 = t.x.pow(d - 1);
        let form = &j * &xd1;
        let pair = |a: &[GaussRat], b: &[GaussRat]| bilinear(&form, a, b);
        let heads = if d % 2 == 0 {
            orthogonal_basis(&heads, &pair)?
        } else {
            let (mut ps, qs) = symplectic_basis(&heads, &pair)?;
            ps.extend(qs);
            ps
        };
        let gram = pairing_gram(&xd1, &heads);
        let mut level = heads.clone();
        for _ in 0..d {
            columns.extend(level.iter().cloned());
            level = level.iter().map(|v| t.x.mul_vec(v)).collect();
        }
        blocks.push(ChainBlock {
            d,
            t: heads.len(),
            heads: ExactMatrix::from_columns(size, &heads),
            gram,
        });
    }
    let data = SymplecticChainData {
        x: t.x.clone(),
        blocks,
        basis: ExactMatrix::from_columns(size, &columns),
    };
    data.check().map_err(Error::Internal)?;
    Ok(data)
}

/// `σ` acting on `X^l v_j^d` by `(−1)^l`, times `i` when `d` is even.
pub fn build_sigma(cd: &SymplecticChainData) -> Result<ExactMatrix> {
    let mut scale = Vec::with_capacity(cd.basis.cols());
    for b in &cd.blocks {
        for l in 0..b.d {
            let sign = GaussRat::from(if l % 2 == 0 { 1 } else { -1 });
            let c = if b.d % 2 == 0 {
                sign * GaussRat::i()
            } else {
                sign
            };
            scale.extend(std::iter::repeat_n(c, b.t));
        }
    }
    let d = ExactMatrix::diag(&scale);
    Ok(&(&cd.basis * &d) * &inverse(&cd.basis)?)
}

/// Matrices `X_{sd}` of `X_s` on the heads of each block, in block order.
///
/// Fails with `NotInCentralizer` unless `X_s` acts on `B` as the same block
/// on every level of every chain block.
pub fn restrict_semisimple(xs: &ExactMatrix, cd: &SymplecticChainData) -> Result<Vec<ExactMatrix>> {
    if xs.rows() != cd.basis.rows() || !xs.is_square() {
        return Err(Error::SizeMismatch {
            expected: format!("{0}x{0}", cd.basis.rows()),
            found: format!("{}x{}", xs.rows(), xs.cols()),
        });
    }
    let m = &(&inverse(&cd.basis)? * xs) * &cd.basis;
    let mut expected = ExactMatrix::zeros(m.rows(), m.cols());
    let mut out = Vec::with_capacity(cd.blocks.len());
    for (k, b) in cd.blocks.iter().enumerate() {
        let off = cd.offset(k);
        let head = m.block(off, off, b.t, b.t);
        for l in 0..b.d {
            expected.set_block(off + l * b.t, off + l * b.t, &head);
        }
        out.push(head);
    }
    if m != expected {
        return Err(Error::NotInCentralizer);
    }
    Ok(out)
}

/// `τ = χ(τ_d)`: on each block, the form-preserving reverser `τ_d` of `X_{sd}`
/// repeated on every level.
pub fn build_tau(xsd: &[ExactMatrix], cd: &SymplecticChainData) -> Result<ExactMatrix> {
    if xsd.len() != cd.blocks.len() {
        return Err(Error::SizeMismatch {
            expected: format!("{} blocks", cd.blocks.len()),
            found: format!("{}", xsd.len()),
        });
    }
    let size = cd.basis.rows();
    let mut in_basis = ExactMatrix::zeros(size, size);
    for (k, (b, a)) in cd.blocks.iter().zip(xsd).enumerate() {
        let tau_d = crate::ssreal::form_reverser(a, &b.gram, b.d % 2 == 0)?;
        let off = cd.offset(k);
        for l in 0..b.d {
            in_basis.set_block(off + l * b.t, off + l * b.t, &tau_d);
        }
    }
    Ok(&(&cd.basis * &in_basis) * &inverse(&cd.basis)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::group_member;
    use crate::spfull::sl2_triple;
    use crate::LieContext;
    use num_traits::Zero;

    fn nil_sp2_22() -> ExactMatrix {
        let mut x = ExactMatrix::zeros(4, 4);
        x[(0, 2)] = GaussRat::from(1);
        x[(1, 3)] = GaussRat::from(1);
        x
    }

    fn nil_sp3_33() -> ExactMatrix {
        // diag(N, −Nᵗ) with N the 3×3 shift: partition [3, 3]
        let mut x = ExactMatrix::zeros(6, 6);
        x[(0, 1)] = GaussRat::from(1);
        x[(1, 2)] = GaussRat::from(1);
        x[(4, 3)] = GaussRat::from(-1);
        x[(5, 4)] = GaussRat::from(-1);
        x
    }

    #[test]
    fn sp1_single_chain() {
        let cd = chain_decomposition(&sl2_triple(&ExactMatrix::unit(2, 2, 0, 1)).unwrap()).unwrap();
        assert_eq!(cd.parts(), vec![2]);
        assert_eq!(cd.blocks[0].t, 1);
        assert!(!cd.blocks[0].gram[(0, 0)].is_zero());
        let sigma = build_sigma(&cd).unwrap();
        assert_eq!(sigma, ExactMatrix::diag(&[-GaussRat::i(), GaussRat::i()]));
    }

    #[test]
    fn sp3_odd_chains() {
        let x = nil_sp3_33();
        let cd = chain_decomposition(&sl2_triple(&x).unwrap()).unwrap();
        assert_eq!(cd.parts(), vec![3, 3]);
        let g = &cd.blocks[0].gram;
        assert_eq!(g.transpose(), -g);
        let sigma = build_sigma(&cd).unwrap();
        assert!(group_member(&sigma, &LieContext::sp(3)).unwrap());
        assert_eq!(&(&sigma * &x) * &inverse(&sigma).unwrap(), -&x);
    }

    #[test]
    fn sp2_single_long_chain() {
        // [[A, E₂₂], [0, −Aᵗ]] with A the 2×2 shift: partition [4]
        let mut x = ExactMatrix::zeros(4, 4);
        x[(0, 1)] = GaussRat::from(1);
        x[(3, 2)] = GaussRat::from(-1);
        x[(1, 3)] = GaussRat::from(1);
        let cd = chain_decomposition(&sl2_triple(&x).unwrap()).unwrap();
        assert_eq!(cd.parts(), vec![4]);
        assert_eq!(cd.blocks[0].t, 1);
    }

    #[test]
    fn restriction_and_tau() {
        let x = nil_sp2_22();
        let cd = chain_decomposition(&sl2_triple(&x).unwrap()).unwrap();
        assert_eq!(
            restrict_semisimple(&ExactMatrix::zeros(4, 4), &cd).unwrap(),
            vec![ExactMatrix::zeros(2, 2)]
        );
        // diag(A, A) with A = −Aᵗ commutes with x and lies in sp(2)
        let a = ExactMatrix::from_i64_rows(&[&[0, 3], &[-3, 0]]);
        let xs = ExactMatrix::block_diag(&[a.clone(), a]);
        assert!(xs.bracket(&x).is_zero());
        let parts = restrict_semisimple(&xs, &cd).unwrap();
        let (sd, gram) = (&parts[0], &cd.blocks[0].gram);
        assert!((&(&sd.transpose() * gram) + &(gram * sd)).is_zero());
        let tau = build_tau(&parts, &cd).unwrap();
        assert!(group_member(&tau, &LieContext::sp(2)).unwrap());
        assert_eq!(&tau * &xs, -&(&xs * &tau));
        assert_eq!(&tau * &x, &x * &tau);

        let bad = ExactMatrix::diag(&[1, 2, -1, -2].map(GaussRat::from));
        assert_eq!(restrict_semisimple(&bad, &cd), Err(Error::NotInCentralizer));
    }
}
