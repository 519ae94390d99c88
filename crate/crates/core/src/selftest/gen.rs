//! Random generators for the acceptance suites.

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use crate::liecore::forms::symplectic_form;
use crate::matlin::inverse;
use crate::oracle::coefficient_pool;
use crate::{ExactMatrix, GaussRat};

/// Nonzero draws from the height-`h` Gaussian pool.
pub struct Pool(Vec<GaussRat>);

impl Pool {
    pub fn new(h: u32) -> Self {
        Pool(
            coefficient_pool(h)
                .into_iter()
                .filter(|c| !c.is_zero())
                .collect(),
        )
    }

    pub fn draw(&self, rng: &mut ChaCha8Rng) -> GaussRat {
        self.0.choose(rng).expect("pool is nonempty").clone()
    }

    /// `k` values, no two equal or opposite.
    pub fn draw_distinct(&self, rng: &mut ChaCha8Rng, k: usize) -> Vec<GaussRat> {
        let mut out: Vec<GaussRat> = Vec::with_capacity(k);
        while out.len() < k {
            let v = self.draw(rng);
            if !out.iter().any(|w| *w == v || *w == -v.clone()) {
                out.push(v);
            }
        }
        out
    }
}

fn small(rng: &mut ChaCha8Rng) -> GaussRat {
    let v: i64 = rng.gen_range(1..=2);
    GaussRat::from(if rng.gen_bool(0.5) { v } else { -v })
}

/// Product of elementary row operations: integral with determinant 1.
pub fn random_unimodular(n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut m = ExactMatrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let j = (i + rng.gen_range(1..n)) % n;
        let mut e = ExactMatrix::identity(n);
        e[(i, j)] = small(rng);
        m = &e * &m;
    }
    m
}

/// Product of symplectic transvections `x ↦ x + c⟨v, x⟩v`.
pub fn random_symplectic(n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let size = 2 * n;
    let j: ExactMatrix = symplectic_form(n);
    let mut m = ExactMatrix::identity(size);
    for _ in 0..3 {
        let v: Vec<GaussRat> = (0..size)
            .map(|_| GaussRat::from(rng.gen_range(-1..=1)))
            .collect();
        let vv = ExactMatrix::from_fn(size, size, |a, b| v[a].clone() * v[b].clone());
        let t = &ExactMatrix::identity(size) + &(&vv * &j).scale(&small(rng));
        m = &t * &m;
    }
    m
}

/// Cayley transform `(I − S)(I + S)⁻¹` of a random rational skew `S`.
pub fn random_orthogonal(n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut s = ExactMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(0.4) {
                let v = GaussRat::from(rng.gen_range(-2..=2));
                s[(i, j)] = v.clone();
                s[(j, i)] = -v;
            }
        }
    }
    let id = ExactMatrix::identity(n);
    &(&id - &s) * &inverse(&(&id + &s)).expect("I + S is invertible for real skew S")
}

pub fn conjugate(p: &ExactMatrix, x: &ExactMatrix) -> ExactMatrix {
    &(p * x) * &inverse(p).expect("conjugator is invertible")
}

/// Places `sp(k_b)` blocks into `sp(Σ k_b)`: the first half of each block's
/// coordinates joins the first half of the big space, the second half the
/// second.
pub fn sp_direct_sum(blocks: &[ExactMatrix]) -> ExactMatrix {
    let n: usize = blocks.iter().map(|b| b.rows() / 2).sum();
    let mut out = ExactMatrix::zeros(2 * n, 2 * n);
    let mut off = 0;
    for b in blocks {
        let k = b.rows() / 2;
        let map = |i: usize| if i < k { off + i } else { n + off + (i - k) };
        for i in 0..2 * k {
            for j in 0..2 * k {
                out[(map(i), map(j))] = b[(i, j)].clone();
            }
        }
        off += k;
    }
    out
}

/// `k × k` upper shift.
fn shift(k: usize) -> ExactMatrix {
    ExactMatrix::from_fn(k, k, |i, j| {
        if j == i + 1 {
            GaussRat::one()
        } else {
            GaussRat::zero()
        }
    })
}

/// Single Jordan chain of even length `d` in sp(d/2): `[[A, E_kk], [0, −Aᵗ]]`.
pub fn even_chain(d: usize) -> ExactMatrix {
    let k = d / 2;
    let a = shift(k);
    ExactMatrix::from_blocks(
        &a,
        &ExactMatrix::unit(k, k, k - 1, k - 1),
        &ExactMatrix::zeros(k, k),
        &-&a.transpose(),
    )
}

/// Two Jordan chains of odd length `d` in sp(d): `diag(N, −Nᵗ)`.
pub fn odd_chain_pair(d: usize) -> ExactMatrix {
    let a = shift(d);
    ExactMatrix::from_blocks(
        &a,
        &ExactMatrix::zeros(d, d),
        &ExactMatrix::zeros(d, d),
        &-&a.transpose(),
    )
}

/// Partitions of `total` with odd parts of even multiplicity, parts descending.
pub fn symplectic_partitions(total: usize) -> Vec<Vec<usize>> {
    fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if rest == 0 {
            let ok = cur
                .iter()
                .filter(|&&p| p % 2 == 1)
                .all(|&p| cur.iter().filter(|&&q| q == p).count() % 2 == 0);
            if ok {
                out.push(cur.clone());
            }
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), &mut out);
    out
}

/// Nilpotent of sp(total/2) with the given symplectic partition.
pub fn nilpotent_of_partition(parts: &[usize]) -> ExactMatrix {
    let mut blocks = Vec::new();
    let mut odd_seen: Vec<usize> = Vec::new();
    for &p in parts {
        if p % 2 == 0 {
            blocks.push(even_chain(p));
        } else if let Some(pos) = odd_seen.iter().position(|&q| q == p) {
            odd_seen.remove(pos);
            blocks.push(odd_chain_pair(p));
        } else {
            odd_seen.push(p);
        }
    }
    sp_direct_sum(&blocks)
}

/// Building blocks of mixed elements `X_s + X_n` with `[X_s, X_n] = 0`.
#[derive(Clone, Debug)]
pub enum Piece {
    /// `diag(h, −h)` in sp(1).
    Semisimple(GaussRat),
    /// One even chain of length `d`, `X_s = 0`.
    Even(usize),
    /// Two odd chains of length `d` with `X_s = diag(aI, −aI)`.
    OddPair(usize, GaussRat),
    /// Two even chains of length `d` rotated into each other by `c`.
    EvenPair(usize, GaussRat),
}

impl Piece {
    pub fn rank(&self) -> usize {
        match self {
            Piece::Semisimple(_) => 1,
            Piece::Even(d) => d / 2,
            Piece::OddPair(d, _) | Piece::EvenPair(d, _) => *d,
        }
    }

    /// `(X_s, X_n)` in sp(rank).
    pub fn parts(&self) -> (ExactMatrix, ExactMatrix) {
        match self {
            Piece::Semisimple(h) => (
                ExactMatrix::diag(&[h.clone(), -h.clone()]),
                ExactMatrix::zeros(2, 2),
            ),
            Piece::Even(d) => (ExactMatrix::zeros(*d, *d), even_chain(*d)),
            Piece::OddPair(d, a) => {
                let id = ExactMatrix::identity(*d);
                let xs = ExactMatrix::block_diag(&[id.scale(a), id.scale(&-a.clone())]);
                (xs, odd_chain_pair(*d))
            }
            Piece::EvenPair(d, c) => {
                let k = d / 2;
                let id = ExactMatrix::identity(k);
                let z = ExactMatrix::zeros(k, k);
                let rot = ExactMatrix::from_blocks(&z, &id.scale(c), &id.scale(&-c.clone()), &z);
                let xs = ExactMatrix::block_diag(&[rot.clone(), rot]);
                let xn = sp_direct_sum(&[even_chain(*d), even_chain(*d)]);
                (xs, xn)
            }
        }
    }
}

/// Random pieces of total rank `n`.
pub fn random_pieces(n: usize, pool: &Pool, rng: &mut ChaCha8Rng) -> Vec<Piece> {
    let mut out = Vec::new();
    let mut left = n;
    while left > 0 {
        let mut options: Vec<Piece> = vec![Piece::Semisimple(pool.draw(rng)), Piece::Even(2)];
        if left >= 2 {
            options.push(Piece::Even(4));
            options.push(Piece::EvenPair(2, pool.draw(rng)));
        }
        if left >= 3 {
            options.push(Piece::Even(6));
            options.push(Piece::OddPair(3, pool.draw(rng)));
        }
        options.push(Piece::OddPair(1, pool.draw(rng)));
        let p = options.choose(rng).expect("options nonempty").clone();
        left -= p.rank();
        out.push(p);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore::{algebra_member, group_member};
    use crate::LieContext;
    use rand::SeedableRng;

    #[test]
    fn partitions_of_six() {
        let ps = symplectic_partitions(6);
        assert!(ps.contains(&vec![3, 3]));
        assert!(!ps.contains(&vec![3, 2, 1]));
        assert!(ps.contains(&vec![2, 2, 1, 1]));
        assert_eq!(ps.len(), 8);
    }

    #[test]
    fn generators_land_in_their_groups() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        assert!(group_member(&random_symplectic(3, &mut rng), &LieContext::sp(3)).unwrap());
        assert!(group_member(&random_orthogonal(4, &mut rng), &LieContext::o(4)).unwrap());
        assert!(group_member(&random_unimodular(4, &mut rng), &LieContext::sl(4)).unwrap());
        for parts in symplectic_partitions(8) {
            let x = nilpotent_of_partition(&parts);
            assert!(algebra_member(&x, &LieContext::sp(4)).unwrap());
        }
        let pool = Pool::new(2);
        for _ in 0..20 {
            let pieces = random_pieces(3, &pool, &mut rng);
            for p in &pieces {
                let (xs, xn) = p.parts();
                let ctx = LieContext::sp(p.rank());
                assert!(algebra_member(&xs, &ctx).unwrap() && algebra_member(&xn, &ctx).unwrap());
                assert!(xs.bracket(&xn).is_zero());
            }
        }
    }
}
