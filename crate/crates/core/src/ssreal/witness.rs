use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::liecore::forms::{i11, symplectic_form};
use crate::liecore::{build_canonical, CanonicalData};
use crate::matlin::inverse;
use crate::{CanonicalSemisimple, ExactMatrix, GaussRat, Group, LieContext};

use super::{decide_semisimple, Reason, ReverserCertificate, Tri};

/// Index pairs `(p, q)` and the zero indices.
type Pairing = (Vec<(usize, usize)>, Vec<usize>);

/// Indices paired as `(p, q)` with `λ_q = −λ_p ≠ 0`, plus the zero indices.
/// Pairs are formed greedily in index order.
fn pair_indices(ev: &[GaussRat]) -> Option<Pairing> {
    let mut used = vec![false; ev.len()];
    let mut pairs = Vec::new();
    let mut zeros = Vec::new();
    for p in 0..ev.len() {
        if used[p] {
            continue;
        }
        used[p] = true;
        if ev[p].is_zero() {
            zeros.push(p);
            continue;
        }
        let neg = -ev[p].clone();
        let q = (p + 1..ev.len()).find(|&q| !used[q] && ev[q] == neg)?;
        used[q] = true;
        pairs.push((p, q));
    }
    Some((pairs, zeros))
}

/// `e_p ↔ e_q`.
fn put_swap(g: &mut ExactMatrix, p: usize, q: usize) {
    g[(q, p)] = GaussRat::one();
    g[(p, q)] = GaussRat::one();
}

/// `e_p ↦ e_q`, `e_q ↦ −e_p`; the pattern of `J₁`.
fn put_rotation(g: &mut ExactMatrix, p: usize, q: usize) {
    g[(q, p)] = GaussRat::one();
    g[(p, q)] = -GaussRat::one();
}

fn diagonal_witness(ev: &[GaussRat], group: Group, involution: bool) -> Result<ExactMatrix> {
    let n = ev.len();
    let (pairs, zeros) =
        pair_indices(ev).ok_or(Error::NotRealizable(Reason::SpectrumAsymmetric))?;
    let mut g = ExactMatrix::zeros(n, n);
    for &z in &zeros {
        g[(z, z)] = GaussRat::one();
    }
    match group {
        Group::Gl => pairs.iter().for_each(|&(p, q)| put_swap(&mut g, p, q)),
        Group::Sl if involution => {
            pairs.iter().for_each(|&(p, q)| put_swap(&mut g, p, q));
            // each swap has determinant −1
            if pairs.len() % 2 == 1 {
                let &z = zeros.last().ok_or(Error::NotRealizable(Reason::NMod4))?;
                g[(z, z)] = -GaussRat::one();
            }
        }
        Group::Sl => pairs.iter().for_each(|&(p, q)| put_rotation(&mut g, p, q)),
        Group::Psl => {
            if zeros.len() % 4 == 0 {
                // diag(J, …, J, i·I_s): determinant i^s = 1, square −I
                pairs.iter().for_each(|&(p, q)| put_rotation(&mut g, p, q));
                for &z in &zeros {
                    g[(z, z)] = GaussRat::i();
                }
            } else {
                return diagonal_witness(ev, Group::Sl, true);
            }
        }
        _ => return Err(Error::Internal(format!("diagonal data in group {group}"))),
    }
    Ok(g)
}

fn orthogonal_witness(params: &[GaussRat], zeros: usize, group: Group) -> Result<ExactMatrix> {
    let mut blocks: Vec<ExactMatrix> = params.iter().map(|_| i11()).collect();
    if zeros > 0 {
        blocks.push(ExactMatrix::identity(zeros));
    }
    let mut g = ExactMatrix::block_diag(&blocks);
    if group == Group::So && params.len() % 2 == 1 {
        let size = g.rows();
        if zeros > 0 {
            g[(size - 1, size - 1)] = -GaussRat::one();
        } else if let Some(j) = params.iter().position(Zero::is_zero) {
            g.set_block(2 * j, 2 * j, &ExactMatrix::identity(2));
        } else {
            return Err(Error::NotRealizable(Reason::NMod4));
        }
    }
    Ok(g)
}

/// Involutive reverser of `diag(h, −h)` in Sp(n).
///
/// First conjugates by a symplectic `S` so that every nonzero `h_k` is the
/// larger of `±h_k` and equal values sit in adjacent slots, zeros last. On
/// that form `[[0, B], [−B⁻ᵗ, 0]]` with `B` a block sum of `J₁` reverses,
/// extended by the identity on zero slots.
fn symplectic_involution(h: &[GaussRat]) -> Result<ExactMatrix> {
    let n = h.len();
    let size = 2 * n;
    let mut flip = ExactMatrix::identity(size);
    let mut hh: Vec<GaussRat> = h.to_vec();
    for k in 0..n {
        let neg = -hh[k].clone();
        if !hh[k].is_zero() && hh[k] < neg {
            put_rotation(&mut flip, k, n + k);
            flip[(k, k)] = GaussRat::zero();
            flip[(n + k, n + k)] = GaussRat::zero();
            hh[k] = neg;
        }
    }
    // order: nonzero values ascending, zeros last
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| (hh[a].is_zero(), &hh[a]).cmp(&(hh[b].is_zero(), &hh[b])));
    let mut perm = ExactMatrix::zeros(size, size);
    for (new, &old) in order.iter().enumerate() {
        perm[(new, old)] = GaussRat::one();
        perm[(n + new, n + old)] = GaussRat::one();
    }
    let s = &perm * &flip;
    let sorted: Vec<GaussRat> = order.iter().map(|&k| hh[k].clone()).collect();

    let mut g = ExactMatrix::zeros(size, size);
    let mut a = 0;
    while a < n {
        if sorted[a].is_zero() {
            g[(a, a)] = GaussRat::one();
            g[(n + a, n + a)] = GaussRat::one();
            a += 1;
            continue;
        }
        if a + 1 >= n || sorted[a + 1] != sorted[a] {
            return Err(Error::NotRealizable(Reason::OddMultiplicity));
        }
        // B = J₁ on rows (a, a+1) × cols (n+a, n+a+1); C = −J₁ below
        g[(a, n + a + 1)] = -GaussRat::one();
        g[(a + 1, n + a)] = GaussRat::one();
        g[(n + a, a + 1)] = GaussRat::one();
        g[(n + a + 1, a)] = -GaussRat::one();
        a += 2;
    }
    let s_inv = inverse(&s)?;
    Ok(&(&s_inv * &g) * &s)
}

/// Reverser for the canonical element `c` in the group of `ctx`.
///
/// `ctx` must carry the same algebra and rank as `c.context`; its group
/// selects the construction.
pub fn witness_semisimple(
    c: &CanonicalSemisimple,
    ctx: &LieContext,
    want_involution: bool,
) -> Result<ReverserCertificate> {
    if ctx.algebra() != c.context.algebra() || ctx.n() != c.context.n() {
        return Err(Error::MalformedCanonical(format!(
            "canonical data for {} used with {ctx}",
            c.context
        )));
    }
    let x = build_canonical(c)?;
    let verdict = decide_semisimple(&x, ctx)?;
    let granted = if want_involution {
        verdict.strongly_real
    } else {
        verdict.real
    };
    if granted != Tri::Yes {
        return Err(Error::NotRealizable(verdict.reason));
    }
    let size = ctx.matrix_size();
    let group = ctx.group();
    let reverser = if x.is_zero() {
        ExactMatrix::identity(size)
    } else {
        match &c.data {
            CanonicalData::Diagonal(ev) => diagonal_witness(ev, group, want_involution)?,
            CanonicalData::Orthogonal { params, zeros } => {
                orthogonal_witness(params, *zeros, group)?
            }
            CanonicalData::Symplectic(h) => {
                if want_involution && group == Group::Sp {
                    symplectic_involution(h)?
                } else {
                    symplectic_form(h.len())
                }
            }
        }
    };
    Ok(ReverserCertificate {
        element: x,
        reverser,
        context: *ctx,
        claims_involution: want_involution,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlin::det;
    use crate::verify::verify_certificate;

    fn g(k: i64) -> GaussRat {
        GaussRat::from(k)
    }

    fn ok(c: &CanonicalSemisimple, ctx: &LieContext, inv: bool) -> ReverserCertificate {
        let cert = witness_semisimple(c, ctx, inv).unwrap();
        verify_certificate(&cert).unwrap();
        cert
    }

    #[test]
    fn sl2_rotation() {
        let c = CanonicalSemisimple::diagonal(LieContext::sl(2), vec![g(5), g(-5)]).unwrap();
        let cert = ok(&c, &LieContext::sl(2), false);
        assert_eq!(
            cert.reverser,
            ExactMatrix::from_i64_rows(&[&[0, -1], &[1, 0]])
        );
        assert!(matches!(
            witness_semisimple(&c, &LieContext::sl(2), true),
            Err(Error::NotRealizable(Reason::NMod4))
        ));
    }

    #[test]
    fn sl_involutions() {
        let c = CanonicalSemisimple::diagonal(LieContext::sl(4), vec![g(1), g(3), g(-1), g(-3)])
            .unwrap();
        ok(&c, &LieContext::sl(4), true);
        let c = CanonicalSemisimple::diagonal(LieContext::sl(3), vec![g(2), g(0), g(-2)]).unwrap();
        let cert = ok(&c, &LieContext::sl(3), true);
        assert!(det(&cert.reverser).unwrap().is_one());
    }

    #[test]
    fn psl_variants() {
        let c = CanonicalSemisimple::diagonal(LieContext::psl(2), vec![g(1), g(-1)]).unwrap();
        let cert = ok(&c, &LieContext::psl(2), true);
        assert_eq!(
            (&cert.reverser * &cert.reverser).scalar_value(),
            Some(g(-1))
        );
        let c = CanonicalSemisimple::diagonal(LieContext::psl(3), vec![g(1), g(0), g(-1)]).unwrap();
        ok(&c, &LieContext::psl(3), true);
    }

    #[test]
    fn so3_reflection() {
        let c = CanonicalSemisimple::orthogonal(LieContext::so(3), vec![g(2)], 1).unwrap();
        let cert = ok(&c, &LieContext::so(3), true);
        assert_eq!(cert.reverser, ExactMatrix::diag(&[g(1), g(-1), g(-1)]));
        let cert = ok(&c, &LieContext::o(3), true);
        assert_eq!(cert.reverser, ExactMatrix::diag(&[g(1), g(-1), g(1)]));
    }

    #[test]
    fn so2_needs_o2() {
        let c = CanonicalSemisimple::orthogonal(LieContext::so(2), vec![g(3)], 0).unwrap();
        assert!(witness_semisimple(&c, &LieContext::so(2), false).is_err());
        let cert = ok(&c, &LieContext::o(2), true);
        assert_eq!(det(&cert.reverser).unwrap(), g(-1));
    }

    #[test]
    fn sp_constructions() {
        let c = CanonicalSemisimple::symplectic(LieContext::sp(2), vec![g(4), g(4)]).unwrap();
        let cert = ok(&c, &LieContext::sp(2), true);
        let expect = ExactMatrix::from_i64_rows(&[
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
            &[0, 1, 0, 0],
            &[-1, 0, 0, 0],
        ]);
        assert_eq!(cert.reverser, expect);

        let c = CanonicalSemisimple::symplectic(LieContext::sp(1), vec![g(4)]).unwrap();
        let cert = ok(&c, &LieContext::sp(1), false);
        assert_eq!(cert.reverser, symplectic_form(1));
        assert!(matches!(
            witness_semisimple(&c, &LieContext::sp(1), true),
            Err(Error::NotRealizable(Reason::OddMultiplicity))
        ));
    }

    #[test]
    fn sp_mixed_signs_and_zeros() {
        let h = vec![g(2), g(0), g(-2), GaussRat::i(), -GaussRat::i()];
        let c = CanonicalSemisimple::symplectic(LieContext::sp(5), h).unwrap();
        ok(&c, &LieContext::sp(5), true);
        ok(&c, &LieContext::psp(5), true);
    }
}
