//! Roots of ℚ(i)-polynomials that lie in ℚ(i) itself.
//!
//! After clearing denominators a root `u/v` (in lowest terms over ℤ[i]) of
//! `c_n x^n + … + c_0` has `u | c_0` and `v | c_n`. Divisors of a Gaussian
//! integer are enumerated from the rational factorisation of its norm.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{GaussRat, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
struct GaussInt {
    re: BigInt,
    im: BigInt,
}

impl GaussInt {
    fn new(re: BigInt, im: BigInt) -> Self {
        GaussInt { re, im }
    }

    fn one() -> Self {
        GaussInt::new(BigInt::one(), BigInt::zero())
    }

    fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    fn mul(&self, o: &GaussInt) -> GaussInt {
        GaussInt::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    /// `self / d` when the quotient lies in ℤ[i].
    fn exact_div(&self, d: &GaussInt) -> Option<GaussInt> {
        let n = d.norm();
        let re = &self.re * &d.re + &self.im * &d.im;
        let im = &self.im * &d.re - &self.re * &d.im;
        (re.is_multiple_of(&n) && im.is_multiple_of(&n)).then(|| GaussInt::new(re / &n, im / &n))
    }

    fn to_gauss_rat(&self) -> GaussRat {
        GaussRat::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

fn factor_integer(mut n: BigInt) -> Vec<BigInt> {
    let mut primes = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= n {
        if n.is_multiple_of(&p) {
            primes.push(p.clone());
            while n.is_multiple_of(&p) {
                n /= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if n > BigInt::one() {
        primes.push(n);
    }
    primes
}

/// Gaussian primes (up to associates) lying over the rational prime `p`.
fn gaussian_primes_over(p: &BigInt) -> Vec<GaussInt> {
    let four = BigInt::from(4);
    if p == &BigInt::from(2) {
        return vec![GaussInt::new(BigInt::one(), BigInt::one())];
    }
    if p.mod_floor(&four) == BigInt::from(3) {
        return vec![GaussInt::new(p.clone(), BigInt::zero())];
    }
    let mut a = BigInt::one();
    while &a * &a < *p {
        let rest = p - &a * &a;
        let b = rest.sqrt();
        if &b * &b == rest {
            return vec![GaussInt::new(a.clone(), b.clone()), GaussInt::new(a, -b)];
        }
        a += 1;
    }
    unreachable!("a prime ≡ 1 (mod 4) is a sum of two squares")
}

/// All divisors of `z` up to multiplication by units.
fn divisors_up_to_units(z: &GaussInt) -> Vec<GaussInt> {
    let mut prime_powers: Vec<(GaussInt, usize)> = Vec::new();
    let mut rest = z.clone();
    for p in factor_integer(z.norm()) {
        for pi in gaussian_primes_over(&p) {
            let mut e = 0;
            while let Some(q) = rest.exact_div(&pi) {
                rest = q;
                e += 1;
            }
            if e > 0 {
                prime_powers.push((pi, e));
            }
        }
    }
    let mut divisors = vec![GaussInt::one()];
    for (pi, e) in prime_powers {
        let mut next = Vec::with_capacity(divisors.len() * (e + 1));
        for d in &divisors {
            let mut acc = d.clone();
            next.push(acc.clone());
            for _ in 0..e {
                acc = acc.mul(&pi);
                next.push(acc.clone());
            }
        }
        divisors = next;
    }
    divisors
}

/// Scales `p` to a primitive polynomial with ℤ[i] coefficients.
fn integral_coefficients(p: &Poly<GaussRat>) -> Vec<GaussInt> {
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(&c.denom_lcm()));
    let scaled: Vec<GaussInt> = p
        .coeffs()
        .iter()
        .map(|c| {
            let re = c.re() * BigRational::from_integer(lcm.clone());
            let im = c.im() * BigRational::from_integer(lcm.clone());
            GaussInt::new(re.to_integer(), im.to_integer())
        })
        .collect();
    let content = scaled
        .iter()
        .fold(BigInt::zero(), |acc, g| acc.gcd(&g.re).gcd(&g.im));
    scaled
        .into_iter()
        .map(|g| GaussInt::new(g.re / &content, g.im / &content))
        .collect()
}

/// Distinct roots in ℚ(i) of a squarefree polynomial with nonzero constant term.
fn distinct_roots(sq: &Poly<GaussRat>) -> Vec<GaussRat> {
    let deg = sq.degree().unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        return vec![-sq.coeff(0) / sq.coeff(1)];
    }
    let c = integral_coefficients(sq);
    let numerators = divisors_up_to_units(&c[0]);
    let denominators = divisors_up_to_units(&c[deg]);
    let units = [
        GaussRat::from_ints(1, 0),
        GaussRat::from_ints(-1, 0),
        GaussRat::from_ints(0, 1),
        GaussRat::from_ints(0, -1),
    ];
    let mut seen = BTreeSet::new();
    let mut found = Vec::new();
    for v in &denominators {
        let v = v.to_gauss_rat();
        for u in &numerators {
            let base = u.to_gauss_rat() / v.clone();
            for unit in &units {
                let cand = &base * unit;
                if !seen.insert(cand.clone()) {
                    continue;
                }
                if sq.eval(&cand).is_zero() {
                    found.push(cand);
                    if found.len() == deg {
                        return found;
                    }
                }
            }
        }
    }
    found
}

/// Roots of `p` lying in ℚ(i), with multiplicity and sorted, together with
/// the cofactor: `Π (x − r) · cofactor = p` exactly, and the cofactor has no
/// root in ℚ(i). The zero polynomial yields no roots and a zero cofactor.
pub fn linear_roots(p: &Poly<GaussRat>) -> (Vec<GaussRat>, Poly<GaussRat>) {
    if p.is_zero() {
        return (Vec::new(), Poly::zero());
    }
    let v = p.x_valuation();
    let mut roots = vec![GaussRat::zero(); v];
    let mut cofactor = p.shift_down(v);
    for r in distinct_roots(&cofactor.squarefree_part()) {
        let lin = Poly::linear(r.clone());
        while let Some(q) = cofactor.exact_div(&lin) {
            cofactor = q;
            roots.push(r.clone());
        }
    }
    roots.sort();
    (roots, cofactor)
}

/// True when every root of `p` lies in ℚ(i).
pub fn splits(p: &Poly<GaussRat>) -> bool {
    let (_, cof) = linear_roots(p);
    cof.degree() == Some(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn is_square(n: &BigInt) -> bool {
        !n.is_negative() && {
            let r = n.sqrt();
            &r * &r == *n
        }
    }

    fn p(c: &[i64]) -> Poly<GaussRat> {
        Poly::new(c.iter().map(|&k| GaussRat::from(k)).collect())
    }

    #[test]
    fn examples() {
        let (r, cof) = linear_roots(&p(&[-1, 0, 1]));
        assert_eq!(r, vec![GaussRat::from(-1), GaussRat::from(1)]);
        assert_eq!(cof, p(&[1]));

        let (r, cof) = linear_roots(&p(&[1, 0, 1]));
        assert_eq!(r, vec![-GaussRat::i(), GaussRat::i()]);
        assert_eq!(cof, p(&[1]));

        let (r, cof) = linear_roots(&p(&[-2, 0, 1]));
        assert!(r.is_empty());
        assert_eq!(cof, p(&[-2, 0, 1]));
    }

    /// Independent check that x² − 2 has no root in ℚ(i): a root a + bi
    /// forces ab = 0 and then a² = 2 or b² = −2, neither solvable in ℚ.
    /// Searched here by brute force over small heights as corroboration.
    #[test]
    fn no_rational_sqrt_two_bruteforce() {
        for q in 1..=12i64 {
            for a in -30..=30i64 {
                assert_ne!(a * a, 2 * q * q);
            }
        }
        assert!(!is_square(&BigInt::from(2)));
    }

    #[test]
    fn multiplicities_and_fractions() {
        // 6(x − 1/2)²(x + 2i/3)x
        let roots = [
            GaussRat::from_fracs(1, 2, 0, 1),
            GaussRat::from_fracs(1, 2, 0, 1),
            GaussRat::from_fracs(0, 1, -2, 3),
            GaussRat::from(0),
        ];
        let f = Poly::from_roots(roots.iter()).scale(&GaussRat::from(6));
        let (mut found, cof) = linear_roots(&f);
        let mut expected = roots.to_vec();
        expected.sort();
        found.sort();
        assert_eq!(found, expected);
        assert_eq!(cof, Poly::constant(GaussRat::from(6)));
    }

    #[test]
    fn mixed_split_and_irreducible() {
        // (x − (1+i))(x² + x + 1)
        let f = &Poly::linear(GaussRat::from_ints(1, 1)) * &p(&[1, 1, 1]);
        let (r, cof) = linear_roots(&f);
        assert_eq!(r, vec![GaussRat::from_ints(1, 1)]);
        assert_eq!(cof, p(&[1, 1, 1]));
        assert!(!splits(&f));
    }
}
