//! Closed-form obstructions in rank one, checked as polynomial identities.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::liecore::forms::symplectic_form;
use crate::liecore::group_member;
use crate::matlin::det;
use crate::{ExactMatrix, GaussRat, LieContext};

const VARS: usize = 5;
const X: usize = 0;
const A: usize = 1;
const B: usize = 2;
const C: usize = 3;
const D: usize = 4;

/// Polynomial in `x, a, b, c, d` over ℚ(i); zero terms are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
struct MPoly(BTreeMap<[u32; VARS], GaussRat>);

impl MPoly {
    fn constant(c: i64) -> Self {
        let mut m = BTreeMap::new();
        if c != 0 {
            m.insert([0; VARS], GaussRat::from(c));
        }
        MPoly(m)
    }

    fn var(v: usize) -> Self {
        let mut e = [0; VARS];
        e[v] = 1;
        MPoly(BTreeMap::from([(e, GaussRat::from(1))]))
    }

    fn insert(&mut self, e: [u32; VARS], c: GaussRat) {
        let entry = self.0.entry(e).or_insert_with(GaussRat::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.0.remove(&e);
        }
    }

    fn eval(&self, point: &[GaussRat; VARS]) -> GaussRat {
        self.0.iter().fold(GaussRat::zero(), |acc, (e, c)| {
            let mono = (0..VARS).fold(c.clone(), |m, v| m * point[v].pow(e[v]));
            acc + mono
        })
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.0 {
            out.insert(*e, c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly(self.0.iter().map(|(e, c)| (*e, -c.clone())).collect())
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self + &-rhs
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::default();
        for (e1, c1) in &self.0 {
            for (e2, c2) in &rhs.0 {
                let mut e = [0; VARS];
                for v in 0..VARS {
                    e[v] = e1[v] + e2[v];
                }
                out.insert(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

type M2 = [[MPoly; 2]; 2];

fn m2(e: [[i64; 2]; 2]) -> M2 {
    e.map(|r| r.map(MPoly::constant))
}

fn mm(p: &M2, q: &M2) -> M2 {
    std::array::from_fn(|i| {
        std::array::from_fn(|j| &(&p[i][0] * &q[0][j]) + &(&p[i][1] * &q[1][j]))
    })
}

fn ma(p: &M2, q: &M2) -> M2 {
    std::array::from_fn(|i| std::array::from_fn(|j| &p[i][j] + &q[i][j]))
}

fn ms(s: &MPoly, p: &M2) -> M2 {
    std::array::from_fn(|i| std::array::from_fn(|j| s * &p[i][j]))
}

fn mt(p: &M2) -> M2 {
    std::array::from_fn(|i| std::array::from_fn(|j| p[j][i].clone()))
}

fn mdet(p: &M2) -> MPoly {
    &(&p[0][0] * &p[1][1]) - &(&p[0][1] * &p[1][0])
}

fn is_zero(p: &M2) -> bool {
    p.iter().flatten().all(|e| e.0.is_empty())
}

fn eval_m2(p: &M2, point: &[GaussRat; VARS]) -> ExactMatrix {
    ExactMatrix::from_fn(2, 2, |i, j| p[i][j].eval(point))
}

/// One verified statement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub holds: bool,
}

/// Outcome of a symbolic obstruction argument.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofRecord {
    pub statement: String,
    /// Polynomial identities in the free variables.
    pub identities: Vec<Check>,
    /// Spot evaluations of the family.
    pub evaluations: Vec<Check>,
    pub proved: bool,
}

impl ProofRecord {
    fn new(statement: &str, identities: Vec<Check>, evaluations: Vec<Check>) -> Self {
        let proved = identities.iter().chain(&evaluations).all(|c| c.holds);
        ProofRecord {
            statement: statement.into(),
            identities,
            evaluations,
            proved,
        }
    }
}

fn check(name: &str, holds: bool) -> Check {
    Check {
        name: name.into(),
        holds,
    }
}

fn point(a: GaussRat, b: GaussRat, c: GaussRat) -> [GaussRat; VARS] {
    [GaussRat::from(5), a, b, c, GaussRat::zero()]
}

/// No involution of Sp(1) reverses `diag(x, −x)`, `x ≠ 0`.
///
/// For general `g`, `gX + Xg = diag(2ax, −2dx)`, so reversers are
/// `g = bE₁₂ + cE₂₁`. On that family `det g = −bc` and `g² = bc·I`, i.e.
/// `g² = −det(g)·I`; and `gᵗJg = det(g)·J` for every 2×2 `g`. Membership in
/// Sp(1) therefore forces `g² = −I`.
pub fn sp1_involution_obstruction() -> ProofRecord {
    let (x, a, b, c, d) = (
        MPoly::var(X),
        MPoly::var(A),
        MPoly::var(B),
        MPoly::var(C),
        MPoly::var(D),
    );
    let zero = MPoly::default();
    let xm: M2 = [[x.clone(), zero.clone()], [zero.clone(), -&x]];
    let general: M2 = [[a.clone(), b.clone()], [c.clone(), d.clone()]];
    let two_x = &MPoly::constant(2) * &x;
    let expected: M2 = [[&two_x * &a, zero.clone()], [zero.clone(), -&(&two_x * &d)]];
    let anti = ma(&mm(&general, &xm), &mm(&xm, &general));

    let family: M2 = [[zero.clone(), b.clone()], [c.clone(), zero.clone()]];
    let bc = &b * &c;
    let id = m2([[1, 0], [0, 1]]);
    let j = m2([[0, -1], [1, 0]]);
    let sq = mm(&family, &family);
    let det_f = mdet(&family);

    let identities = vec![
        check(
            "gX + Xg = diag(2ax, −2dx) for general g",
            is_zero(&ma(&anti, &ms(&MPoly::constant(-1), &expected))),
        ),
        check(
            "gX + Xg = 0 on g = bE12 + cE21",
            is_zero(&ma(&mm(&family, &xm), &mm(&xm, &family))),
        ),
        check("det g = −bc", det_f == -&bc),
        check("g² = bc·I", is_zero(&ma(&sq, &ms(&-&bc, &id)))),
        check("g² + det(g)·I = 0", is_zero(&ma(&sq, &ms(&det_f, &id)))),
        check(
            "gᵗJg = det(g)·J for general g",
            is_zero(&ma(
                &mm(&mm(&mt(&general), &j), &general),
                &ms(&-&mdet(&general), &j),
            )),
        ),
    ];

    let sp1 = LieContext::sp(1);
    let one = GaussRat::from(1);
    let p1 = point(GaussRat::zero(), one.clone(), -one.clone());
    let g1 = eval_m2(&family, &p1);
    let p2 = point(GaussRat::zero(), GaussRat::from(2), one.clone());
    let g2 = eval_m2(&family, &p2);
    let j1: ExactMatrix = symplectic_form(1);
    let evaluations = vec![
        check(
            "(b, c) = (1, −1): g ∈ Sp(1)",
            group_member(&g1, &sp1).unwrap_or(false),
        ),
        check(
            "(b, c) = (1, −1): g² = −I",
            &g1 * &g1 == -&ExactMatrix::identity(2),
        ),
        check("(b, c) = (1, −1): g = −J₁", g1 == -&j1),
        check(
            "(b, c) = (2, 1): det g = −2",
            det(&g2).ok() == Some(GaussRat::from(-2)),
        ),
        check(
            "(b, c) = (2, 1): g ∉ Sp(1)",
            !group_member(&g2, &sp1).unwrap_or(true),
        ),
    ];
    ProofRecord::new(
        "no involution of Sp(1) reverses diag(x, −x) for x ≠ 0",
        identities,
        evaluations,
    )
}

/// No element of SO(2) reverses `[[0, x], [−x, 0]]`, `x ≠ 0`; O(2) does, with
/// determinant −1.
///
/// For general `g`, `gX + Xg = x·[[c − b, a + d], [−(a + d), c − b]]`, so
/// reversers are `[[a, b], [b, −a]]`, where `gᵗg = (a² + b²)·I` and
/// `det g = −(a² + b²)`.
pub fn so2_obstruction() -> ProofRecord {
    let (x, a, b, c, d) = (
        MPoly::var(X),
        MPoly::var(A),
        MPoly::var(B),
        MPoly::var(C),
        MPoly::var(D),
    );
    let zero = MPoly::default();
    let xm: M2 = [[zero.clone(), x.clone()], [-&x, zero.clone()]];
    let general: M2 = [[a.clone(), b.clone()], [c.clone(), d.clone()]];
    let cb = &c - &b;
    let ad = &a + &d;
    let expected: M2 = [[&x * &cb, &x * &ad], [-&(&x * &ad), &x * &cb]];
    let anti = ma(&mm(&general, &xm), &mm(&xm, &general));

    let family: M2 = [[a.clone(), b.clone()], [b.clone(), -&a]];
    let norm = &(&a * &a) + &(&b * &b);
    let id = m2([[1, 0], [0, 1]]);
    let identities = vec![
        check(
            "gX + Xg = x·[[c−b, a+d], [−(a+d), c−b]] for general g",
            is_zero(&ma(&anti, &ms(&MPoly::constant(-1), &expected))),
        ),
        check(
            "gX + Xg = 0 on g = [[a, b], [b, −a]]",
            is_zero(&ma(&mm(&family, &xm), &mm(&xm, &family))),
        ),
        check(
            "gᵗg = (a² + b²)·I",
            is_zero(&ma(&mm(&mt(&family), &family), &ms(&-&norm, &id))),
        ),
        check("det g = −(a² + b²)", mdet(&family) == -&norm),
    ];

    let o2 = LieContext::o(2);
    let so2 = LieContext::so(2);
    let xval = ExactMatrix::from_i64_rows(&[&[0, 5], &[-5, 0]]);
    let mut evaluations = Vec::new();
    for (label, av, bv) in [
        ("(a, b) = (1, 0)", GaussRat::from(1), GaussRat::zero()),
        (
            "(a, b) = (3/5, 4/5)",
            GaussRat::from_fracs(3, 5, 0, 1),
            GaussRat::from_fracs(4, 5, 0, 1),
        ),
    ] {
        let g = eval_m2(&family, &point(av, bv, GaussRat::zero()));
        let reverses = &g * &xval == -&(&xval * &g);
        evaluations.push(check(
            &format!("{label}: g reverses X and g ∈ O(2)"),
            reverses && group_member(&g, &o2).unwrap_or(false),
        ));
        evaluations.push(check(
            &format!("{label}: g ∉ SO(2)"),
            !group_member(&g, &so2).unwrap_or(true),
        ));
    }
    ProofRecord::new(
        "no element of SO(2) reverses a nonzero element of so(2)",
        identities,
        evaluations,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sp1_record_proves() {
        let r = sp1_involution_obstruction();
        assert!(r.proved, "{r:?}");
        assert_eq!(r.identities.len(), 6);
    }

    #[test]
    fn so2_record_proves() {
        let r = so2_obstruction();
        assert!(r.proved, "{r:?}");
    }

    #[test]
    fn mpoly_arithmetic() {
        let (a, b) = (MPoly::var(A), MPoly::var(B));
        let lhs = &(&a + &b) * &(&a - &b);
        let rhs = &(&a * &a) - &(&b * &b);
        assert_eq!(lhs, rhs);
        assert!((&lhs - &rhs).0.is_empty());
    }
}
