use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactnum::linear_roots;
use crate::liecore::forms::{bilinear, dot, symplectic_pairing};
use crate::matlin::{charpoly, inverse, kernel};
use crate::{Algebra, CanonicalSemisimple, ExactMatrix, GaussRat, LieContext};

use super::{decide_semisimple, witness_semisimple, ReverserCertificate};

type Vector = Vec<GaussRat>;

/// Distinct eigenvalues in ascending order with a basis of each eigenspace.
pub fn eigenspaces(x: &ExactMatrix) -> Result<Vec<(GaussRat, Vec<Vector>)>> {
    let n = x.require_square()?;
    let (mut roots, rest) = linear_roots(&charpoly(x)?);
    if rest.degree().unwrap_or(0) > 0 {
        return Err(Error::SpectrumNotSplit);
    }
    roots.dedup();
    let mut out = Vec::with_capacity(roots.len());
    let mut total = 0;
    for mu in roots {
        let shifted = x - &ExactMatrix::scalar(n, mu.clone());
        let basis = kernel(&shifted);
        total += basis.len();
        out.push((mu, basis));
    }
    if total != n {
        return Err(Error::NotSemisimple);
    }
    Ok(out)
}

fn is_representative(mu: &GaussRat) -> bool {
    !mu.is_zero() && *mu > -mu.clone()
}

fn space_of<'a>(spaces: &'a [(GaussRat, Vec<Vector>)], mu: &GaussRat) -> &'a [Vector] {
    spaces
        .iter()
        .find(|(m, _)| m == mu)
        .map_or(&[], |(_, b)| b.as_slice())
}

fn axpy(y: &mut [GaussRat], a: &GaussRat, x: &[GaussRat]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi = yi.clone() + a.clone() * xi.clone();
    }
}

fn scaled(v: &[GaussRat], a: &GaussRat) -> Vector {
    v.iter().map(|c| c.clone() * a.clone()).collect()
}

/// Pairs a basis `U` of `V_μ` with a basis `W'` of `V_{−μ}` normalized so
/// that `form(u_j, w'_k) = target·δ_jk`.
fn dual_pair(
    u: &[Vector],
    w: &[Vector],
    form: &dyn Fn(&[GaussRat], &[GaussRat]) -> GaussRat,
    target: &GaussRat,
) -> Result<Vec<Vector>> {
    if u.len() != w.len() {
        return Err(Error::Internal(
            "eigenspaces of ±μ differ in dimension".into(),
        ));
    }
    let k = u.len();
    let m = ExactMatrix::from_fn(k, k, |i, j| form(&u[i], &w[j]));
    // W' = W · M⁻¹ · target
    let minv = inverse(&m).map_err(|_| Error::Internal("degenerate pairing of ±μ".into()))?;
    Ok((0..k)
        .map(|c| {
            let mut v = vec![GaussRat::zero(); w[0].len()];
            for (r, wr) in w.iter().enumerate() {
                axpy(&mut v, &(minv[(r, c)].clone() * target.clone()), wr);
            }
            v
        })
        .collect())
}

/// Orthogonal basis of `span(vs)` for the symmetric form `form`, with no
/// isotropic member. Needs the form to be nondegenerate on the span.
pub(crate) fn orthogonal_basis(
    vs: &[Vector],
    form: &dyn Fn(&[GaussRat], &[GaussRat]) -> GaussRat,
) -> Result<Vec<Vector>> {
    let mut rest: Vec<Vector> = vs.to_vec();
    let mut out = Vec::new();
    while !rest.is_empty() {
        let pivot = match rest.iter().position(|v| !form(v, v).is_zero()) {
            Some(p) => p,
            None => {
                // all isotropic: u + v is not when form(u, v) ≠ 0
                let j = (1..rest.len())
                    .find(|&j| !form(&rest[0], &rest[j]).is_zero())
                    .ok_or_else(|| Error::Internal("degenerate symmetric form".into()))?;
                let other = rest[j].clone();
                axpy(&mut rest[0], &GaussRat::one(), &other);
                0
            }
        };
        let p = rest.remove(pivot);
        let pp = form(&p, &p);
        for v in rest.iter_mut() {
            let c = -(form(&p, v) / pp.clone());
            axpy(v, &c, &p);
        }
        out.push(p);
    }
    Ok(out)
}

/// Symplectic basis `(p_j), (q_j)` of `span(vs)` with `form(p_j, q_k) = −δ_jk`
/// and all other pairings zero.
pub(crate) fn symplectic_basis(
    vs: &[Vector],
    form: &dyn Fn(&[GaussRat], &[GaussRat]) -> GaussRat,
) -> Result<(Vec<Vector>, Vec<Vector>)> {
    let mut rest: Vec<Vector> = vs.to_vec();
    let (mut ps, mut qs) = (Vec::new(), Vec::new());
    while !rest.is_empty() {
        let p = rest.remove(0);
        let j = rest
            .iter()
            .position(|v| !form(&p, v).is_zero())
            .ok_or_else(|| Error::Internal("degenerate alternating form".into()))?;
        let q0 = rest.remove(j);
        let q = scaled(&q0, &(-(GaussRat::one() / form(&p, &q0))));
        for z in rest.iter_mut() {
            // z ← z − ω(q, z)·p + ω(p, z)·q
            let a = -form(&q, z);
            let b = form(&p, z);
            axpy(z, &a, &p);
            axpy(z, &b, &q);
        }
        ps.push(p);
        qs.push(q);
    }
    Ok((ps, qs))
}

/// Reverser of an arbitrary semisimple `x` whose spectrum lies in ℚ(i).
///
/// Builds `P` with `P⁻¹XP` canonical (and `P` inside the form's group for
/// so and sp), takes the canonical witness `g′` and returns `P g′ P⁻¹`.
pub fn witness_general_semisimple(
    x: &ExactMatrix,
    ctx: &LieContext,
    want_involution: bool,
) -> Result<ReverserCertificate> {
    decide_semisimple(x, ctx)?;
    let size = ctx.matrix_size();
    if x.is_zero() {
        return Ok(ReverserCertificate {
            element: x.clone(),
            reverser: ExactMatrix::identity(size),
            context: *ctx,
            claims_involution: want_involution,
        });
    }
    let spaces = eigenspaces(x)?;
    let (columns, canonical) = match ctx.algebra() {
        Algebra::Gl | Algebra::Sl => {
            let mut cols = Vec::new();
            let mut ev = Vec::new();
            for (mu, basis) in &spaces {
                for v in basis {
                    cols.push(v.clone());
                    ev.push(mu.clone());
                }
            }
            (cols, CanonicalSemisimple::diagonal(*ctx, ev)?)
        }
        Algebra::So => {
            let form = |a: &[GaussRat], b: &[GaussRat]| dot(a, b);
            let two = GaussRat::from(2);
            let half = GaussRat::from_fracs(1, 2, 0, 1);
            let inv_2i = GaussRat::from_fracs(0, 1, -1, 2);
            let mut cols = Vec::new();
            let mut params = Vec::new();
            for (mu, u) in spaces.iter().filter(|(m, _)| is_representative(m)) {
                let w = dual_pair(u, space_of(&spaces, &-mu.clone()), &form, &two)?;
                for (uj, wj) in u.iter().zip(&w) {
                    let mut a = scaled(uj, &half);
                    axpy(&mut a, &half, wj);
                    let mut b = scaled(uj, &inv_2i);
                    axpy(&mut b, &-inv_2i.clone(), wj);
                    cols.push(a);
                    cols.push(b);
                    params.push(-(GaussRat::i() * mu.clone()));
                }
            }
            let zeros = orthogonal_basis(space_of(&spaces, &GaussRat::zero()), &form)?;
            let r = zeros.len();
            cols.extend(zeros);
            (cols, CanonicalSemisimple::orthogonal(*ctx, params, r)?)
        }
        Algebra::Sp => {
            let form = |a: &[GaussRat], b: &[GaussRat]| symplectic_pairing(a, b);
            let minus_one = -GaussRat::one();
            let (mut first, mut second, mut h) = (Vec::new(), Vec::new(), Vec::new());
            for (mu, u) in spaces.iter().filter(|(m, _)| is_representative(m)) {
                let w = dual_pair(u, space_of(&spaces, &-mu.clone()), &form, &minus_one)?;
                first.extend(u.iter().cloned());
                second.extend(w);
                h.extend(std::iter::repeat_n(mu.clone(), u.len()));
            }
            let (ps, qs) = symplectic_basis(space_of(&spaces, &GaussRat::zero()), &form)?;
            h.extend(std::iter::repeat_n(GaussRat::zero(), ps.len()));
            first.extend(ps);
            second.extend(qs);
            first.extend(second);
            (first, CanonicalSemisimple::symplectic(*ctx, h)?)
        }
    };
    let p = ExactMatrix::from_columns(size, &columns);
    let cert = witness_semisimple(&canonical, ctx, want_involution)?;
    let reverser = &(&p * &cert.reverser) * &inverse(&p)?;
    Ok(ReverserCertificate {
        element: x.clone(),
        reverser,
        context: *ctx,
        claims_involution: want_involution,
    })
}

/// Reverser of `a` preserving the nondegenerate form `gram`, which is
/// symmetric or alternating; `a` must be semisimple and infinitesimally
/// preserve the form (`aᵗG + Ga = 0`).
///
/// `V_μ` is paired with `V_{−μ}` through a dual basis; the map swaps them
/// (symmetric case) or rotates them (alternating case) and fixes `V_0`.
/// No square roots are taken.
pub fn form_reverser(a: &ExactMatrix, gram: &ExactMatrix, symmetric: bool) -> Result<ExactMatrix> {
    let t = a.require_square()?;
    if (&(&a.transpose() * gram) + &(gram * a)) != ExactMatrix::zeros(t, t) {
        return Err(Error::NotInCentralizer);
    }
    if a.is_zero() {
        return Ok(ExactMatrix::identity(t));
    }
    let spaces = eigenspaces(a)?;
    let form = |x: &[GaussRat], y: &[GaussRat]| bilinear(gram, x, y);
    let one = GaussRat::one();
    let mut src = Vec::new();
    let mut dst = Vec::new();
    for (mu, u) in spaces.iter().filter(|(m, _)| is_representative(m)) {
        let w = dual_pair(u, space_of(&spaces, &-mu.clone()), &form, &one)?;
        for (uj, wj) in u.iter().zip(&w) {
            src.push(uj.clone());
            dst.push(wj.clone());
            src.push(wj.clone());
            dst.push(if symmetric {
                uj.clone()
            } else {
                scaled(uj, &-one.clone())
            });
        }
    }
    for z in space_of(&spaces, &GaussRat::zero()) {
        src.push(z.clone());
        dst.push(z.clone());
    }
    let q = ExactMatrix::from_columns(t, &src);
    let image = ExactMatrix::from_columns(t, &dst);
    Ok(&image * &inverse(&q)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlin::det;
    use crate::verify::verify_certificate;

    fn check(x: &ExactMatrix, ctx: &LieContext, inv: bool) -> ReverserCertificate {
        let cert = witness_general_semisimple(x, ctx, inv).unwrap();
        verify_certificate(&cert).unwrap();
        cert
    }

    #[test]
    fn gl2_swap_conjugate() {
        let x = ExactMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        check(&x, &LieContext::gl(2), true);
    }

    #[test]
    fn o2_reflection() {
        let x = ExactMatrix::from_i64_rows(&[&[0, 3], &[-3, 0]]);
        let cert = check(&x, &LieContext::o(2), true);
        assert_eq!(det(&cert.reverser).unwrap(), GaussRat::from(-1));
        let g = &cert.reverser;
        assert_eq!(g[(0, 0)], -g[(1, 1)].clone());
        assert_eq!(g[(0, 1)], g[(1, 0)]);
    }

    #[test]
    fn unsplit_spectrum() {
        let x = ExactMatrix::from_i64_rows(&[&[0, 2], &[1, 0]]);
        assert_eq!(
            witness_general_semisimple(&x, &LieContext::gl(2), false),
            Err(Error::SpectrumNotSplit)
        );
    }

    #[test]
    fn so_with_kernel() {
        // a rotation generator plus a zero block, conjugated by an orthogonal matrix
        let core = ExactMatrix::from_i64_rows(&[&[0, 2, 0], &[-2, 0, 0], &[0, 0, 0]]);
        let o = ExactMatrix::from_rows(vec![
            vec![
                GaussRat::from_fracs(3, 5, 0, 1),
                GaussRat::from_fracs(4, 5, 0, 1),
                GaussRat::zero(),
            ],
            vec![
                GaussRat::from_fracs(-4, 5, 0, 1),
                GaussRat::from_fracs(3, 5, 0, 1),
                GaussRat::zero(),
            ],
            vec![GaussRat::zero(), GaussRat::zero(), GaussRat::one()],
        ]);
        let perm = ExactMatrix::from_i64_rows(&[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]]);
        let q = &perm * &o;
        let x = &(&q * &core) * &q.transpose();
        check(&x, &LieContext::so(3), true);
        check(&x, &LieContext::o(3), false);
    }

    #[test]
    fn sp_general() {
        // conjugate diag(1, 1, 0, −1, −1, 0) by a symplectic transvection
        let h = ExactMatrix::diag(&[1, 1, 0, -1, -1, 0].map(GaussRat::from));
        let mut s = ExactMatrix::identity(6);
        s[(0, 4)] = GaussRat::from(1);
        s[(1, 3)] = GaussRat::from(1);
        s[(2, 5)] = GaussRat::from(2);
        let x = &(&s * &h) * &inverse(&s).unwrap();
        check(&x, &LieContext::sp(3), true);
        check(&x, &LieContext::sp(3), false);
    }

    #[test]
    fn form_reverser_both_parities() {
        let a = ExactMatrix::diag(&[GaussRat::from(2), GaussRat::from(-2)]);
        let sym = ExactMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        let t = form_reverser(&a, &sym, true).unwrap();
        assert_eq!(&(&t.transpose() * &sym) * &t, sym);
        assert_eq!(&t * &a, -&(&a * &t));
        let alt: ExactMatrix = crate::liecore::forms::symplectic_form(1);
        let t = form_reverser(&a, &alt, false).unwrap();
        assert_eq!(&(&t.transpose() * &alt) * &t, alt);
        assert_eq!(&t * &a, -&(&a * &t));
    }
}
