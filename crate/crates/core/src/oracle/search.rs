//! Bounded-height enumeration of reversers inside the anticommutant.
//!
//! Results are evidence only: an exhausted search says nothing about
//! coefficients outside the pool.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::liecore::forms::symplectic_form;
use crate::liecore::reverser_linear_space;
use crate::verify::verify_certificate;
use crate::{ExactMatrix, GaussRat, Group, LieContext, ReverserCertificate};

/// Outcome of [`search_reverser`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum SearchOutcome {
    Found { certificate: ReverserCertificate },
    Exhausted { height: u32 },
}

/// Rationals `p/q` with `|p|, |q| ≤ h`, ordered by height then value.
fn rational_pool(h: u32) -> Vec<BigRational> {
    let h = h as i64;
    let mut set = BTreeSet::new();
    for p in -h..=h {
        for q in 1..=h {
            set.insert(BigRational::new(BigInt::from(p), BigInt::from(q)));
        }
    }
    let height = |r: &BigRational| r.numer().abs().max(r.denom().abs());
    let mut v: Vec<BigRational> = set.into_iter().collect();
    v.sort_by(|a, b| {
        height(a)
            .cmp(&height(b))
            .then(a.abs().cmp(&b.abs()))
            .then(a.cmp(b))
    });
    v
}

/// Gaussian rationals `p/q + (r/s)i` with all of `|p|, |q|, |r|, |s| ≤ h`.
pub fn coefficient_pool(h: u32) -> Vec<GaussRat> {
    let rs = rational_pool(h);
    let mut out = Vec::with_capacity(rs.len() * rs.len());
    // enumerate by the larger of the two component ranks so small values come first
    let len = rs.len();
    for level in 0..len {
        for a in 0..=level {
            for b in 0..=level {
                if a.max(b) == level {
                    out.push(GaussRat::new(rs[a].clone(), rs[b].clone()));
                }
            }
        }
    }
    out
}

/// A quadratic entry condition on `g`, checked once every coefficient it
/// involves is assigned.
struct Constraint {
    vars: BTreeSet<usize>,
    check: Box<dyn Fn(&ExactMatrix) -> bool>,
}

fn entry_vars(basis: &[ExactMatrix], i: usize, j: usize) -> Vec<usize> {
    (0..basis.len())
        .filter(|&k| !basis[k][(i, j)].is_zero())
        .collect()
}

/// Variables of the products `u·v` that are not identically zero.
fn product_vars(terms: impl Iterator<Item = (Vec<usize>, Vec<usize>)>) -> BTreeSet<usize> {
    terms
        .filter(|(u, v)| !u.is_empty() && !v.is_empty())
        .flat_map(|(u, v)| u.into_iter().chain(v))
        .collect()
}

fn constraints(basis: &[ExactMatrix], ctx: &LieContext, involution: bool) -> Vec<Constraint> {
    let size = ctx.matrix_size();
    let group = ctx.group();
    let mut out = Vec::new();
    for i in 0..size {
        for j in 0..size {
            // (g²)_{ij} involves row i and column j of g
            if involution {
                let vars = product_vars(
                    (0..size).map(|l| (entry_vars(basis, i, l), entry_vars(basis, l, j))),
                );
                let projective = group.is_projective();
                if !(projective && i == j) && (!vars.is_empty() || i == j) {
                    out.push(Constraint {
                        vars,
                        check: Box::new(move |g: &ExactMatrix| {
                            let v = (0..size)
                                .filter(|&l| !g[(i, l)].is_zero() && !g[(l, j)].is_zero())
                                .fold(GaussRat::zero(), |acc, l| {
                                    acc + g[(i, l)].clone() * g[(l, j)].clone()
                                });
                            if i == j {
                                v == GaussRat::from(1)
                            } else {
                                v.is_zero()
                            }
                        }),
                    });
                }
            }
            // (gᵗ F g)_{ij} involves columns i and j of g
            let form = match group {
                Group::O | Group::So => Some(ExactMatrix::identity(size)),
                Group::Sp | Group::Psp => Some(symplectic_form(size / 2)),
                _ => None,
            };
            if let Some(f) = form {
                let terms = (0..size).flat_map(|a| (0..size).map(move |b| (a, b)));
                let vars = product_vars(
                    terms
                        .filter(|&(a, b)| !f[(a, b)].is_zero())
                        .map(|(a, b)| (entry_vars(basis, a, i), entry_vars(basis, b, j))),
                );
                let target = f[(i, j)].clone();
                if !vars.is_empty() || !target.is_zero() {
                    out.push(Constraint {
                        vars,
                        check: Box::new(move |g: &ExactMatrix| {
                            let mut acc = GaussRat::zero();
                            for a in 0..size {
                                if g[(a, i)].is_zero() {
                                    continue;
                                }
                                for b in 0..size {
                                    if !f[(a, b)].is_zero() && !g[(b, j)].is_zero() {
                                        acc = acc
                                            + g[(a, i)].clone()
                                                * f[(a, b)].clone()
                                                * g[(b, j)].clone();
                                    }
                                }
                            }
                            acc == target
                        }),
                    });
                }
            }
        }
    }
    out
}

/// Greedy assignment order: next the variable that completes the most
/// constraints, ties broken by how many constraints it shares with the
/// variables already placed.
fn variable_order(count: usize, cons: &[Constraint]) -> Vec<usize> {
    let mut placed = vec![false; count];
    let mut order = Vec::with_capacity(count);
    for _ in 0..count {
        let score = |v: usize| {
            let mut completes = 0;
            let mut touches = 0;
            for c in cons.iter().filter(|c| c.vars.contains(&v)) {
                if c.vars.iter().all(|&w| w == v || placed[w]) {
                    completes += 1;
                }
                if c.vars.iter().any(|&w| placed[w]) {
                    touches += 1;
                }
            }
            (completes, touches)
        };
        let best = (0..count)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| score(a).cmp(&score(b)).then(b.cmp(&a)))
            .expect("an unplaced variable remains");
        placed[best] = true;
        order.push(best);
    }
    order
}

/// Nonzero entries of a basis element.
type Support = Vec<((usize, usize), GaussRat)>;

fn support(m: &ExactMatrix) -> Support {
    (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .filter(|&p| !m[p].is_zero())
        .map(|p| (p, m[p].clone()))
        .collect()
}

/// Depth-first over coefficient choices; `partial` is updated in place and
/// restored before returning.
fn dfs(
    depth: usize,
    partial: &mut ExactMatrix,
    basis: &[Support],
    pool: &[GaussRat],
    by_depth: &[Vec<&Constraint>],
    leaf: &mut dyn FnMut(&ExactMatrix) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if depth == basis.len() {
        return leaf(partial);
    }
    let saved: Vec<GaussRat> = basis[depth]
        .iter()
        .map(|(p, _)| partial[*p].clone())
        .collect();
    let mut flow = ControlFlow::Continue(());
    for c in pool {
        for ((p, b), old) in basis[depth].iter().zip(&saved) {
            partial[*p] = old.clone() + b.clone() * c.clone();
        }
        if by_depth[depth].iter().all(|k| (k.check)(partial)) {
            flow = dfs(depth + 1, partial, basis, pool, by_depth, leaf);
            if flow.is_break() {
                break;
            }
        }
    }
    for ((p, _), old) in basis[depth].iter().zip(saved) {
        partial[*p] = old;
    }
    flow
}

/// Calls `leaf` on every anticommutant element with coefficients from the
/// height-`h` pool that passes the entry constraints of `ctx`'s group (and
/// of `g² = I` when `involution`), in deterministic order.
fn enumerate(
    x: &ExactMatrix,
    ctx: &LieContext,
    height: u32,
    involution: bool,
    leaf: &mut dyn FnMut(&ExactMatrix) -> ControlFlow<()>,
) {
    let Ok(basis) = reverser_linear_space(x) else {
        return;
    };
    if basis.is_empty() {
        return;
    }
    let pool = coefficient_pool(height);
    let cons = constraints(&basis, ctx, involution);
    let order = variable_order(basis.len(), &cons);
    let mut position = vec![0; basis.len()];
    for (depth, &v) in order.iter().enumerate() {
        position[v] = depth;
    }
    let basis: Vec<ExactMatrix> = order.iter().map(|&v| basis[v].clone()).collect();
    let mut by_depth: Vec<Vec<&Constraint>> = vec![Vec::new(); basis.len()];
    for c in &cons {
        // a constraint without variables is constant, and false here
        let last = c.vars.iter().map(|&v| position[v]).max().unwrap_or(0);
        by_depth[last].push(c);
    }
    let supports: Vec<Support> = basis.iter().map(support).collect();
    let mut partial = ExactMatrix::zeros(x.rows(), x.cols());
    let _ = dfs(0, &mut partial, &supports, &pool, &by_depth, leaf);
}

/// First certificate (in pool order) for `x` in `ctx`, or exhaustion.
pub fn search_reverser(
    x: &ExactMatrix,
    ctx: &LieContext,
    height: u32,
    require_involution: bool,
) -> SearchOutcome {
    let mut found = None;
    enumerate(x, ctx, height, require_involution, &mut |g| {
        let cert = ReverserCertificate {
            element: x.clone(),
            reverser: g.clone(),
            context: *ctx,
            claims_involution: require_involution,
        };
        if verify_certificate(&cert).is_ok() {
            found = Some(cert);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    match found {
        Some(certificate) => SearchOutcome::Found { certificate },
        None => SearchOutcome::Exhausted { height },
    }
}

/// Every `g` in the anticommutant of `x` with pool coefficients and `g² = I`,
/// with no determinant condition; at most `limit` of them.
pub fn anticommutant_involutions(x: &ExactMatrix, height: u32, limit: usize) -> Vec<ExactMatrix> {
    let mut out = Vec::new();
    let Ok(size) = x.require_square() else {
        return out;
    };
    let ctx = LieContext::gl(size);
    enumerate(x, &ctx, height, true, &mut |g| {
        if (g * g).is_identity() {
            out.push(g.clone());
        }
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matlin::det;

    fn g(k: i64) -> GaussRat {
        GaussRat::from(k)
    }

    #[test]
    fn pool_sizes() {
        assert_eq!(rational_pool(1).len(), 3);
        assert_eq!(rational_pool(2).len(), 7);
        assert_eq!(coefficient_pool(2).len(), 49);
        assert!(coefficient_pool(2)[0].is_zero());
    }

    #[test]
    fn sp1_involution_exhausts() {
        let x = ExactMatrix::diag(&[g(2), g(-2)]);
        assert_eq!(
            search_reverser(&x, &LieContext::sp(1), 3, true),
            SearchOutcome::Exhausted { height: 3 }
        );
    }

    #[test]
    fn sl2_finds_antidiagonal() {
        let x = ExactMatrix::diag(&[g(2), g(-2)]);
        let SearchOutcome::Found { certificate } =
            search_reverser(&x, &LieContext::sl(2), 2, false)
        else {
            panic!("expected a reverser");
        };
        let r = &certificate.reverser;
        assert!(r[(0, 0)].is_zero() && r[(1, 1)].is_zero());
    }

    #[test]
    fn o2_finds_reflection_so2_exhausts() {
        let x = ExactMatrix::from_i64_rows(&[&[0, 3], &[-3, 0]]);
        let SearchOutcome::Found { certificate } = search_reverser(&x, &LieContext::o(2), 2, true)
        else {
            panic!("expected a reverser");
        };
        assert_eq!(det(&certificate.reverser).unwrap(), g(-1));
        assert_eq!(
            search_reverser(&x, &LieContext::so(2), 2, true),
            SearchOutcome::Exhausted { height: 2 }
        );
        assert_eq!(
            search_reverser(&x, &LieContext::so(2), 2, false),
            SearchOutcome::Exhausted { height: 2 }
        );
    }

    #[test]
    fn involutions_in_sl2_anticommutant_have_det_minus_one() {
        let x = ExactMatrix::diag(&[g(1), g(-1)]);
        let invs = anticommutant_involutions(&x, 2, 1000);
        assert!(!invs.is_empty());
        assert!(invs.iter().all(|m| det(m).unwrap() == g(-1)));
    }
}
