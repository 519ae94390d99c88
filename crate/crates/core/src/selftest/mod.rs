//! The acceptance suites, shared by the `selftest` command and the
//! `acceptance` test target. Every suite is deterministic for a given seed.

pub mod gen;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::jc::jordan_chevalley;
use crate::liecore::{build_canonical, group_member, is_group_involution, CanonicalSemisimple};
use crate::matlin::{charpoly, det, invariant_factors, similar_to_negative};
use crate::oracle::{
    anticommutant_involutions, cyclic_invariant_factors, rcf_similar, search_reverser,
    so2_obstruction, sp1_involution_obstruction, SearchOutcome,
};
use crate::spfull::{build_sigma, chain_decomposition, reverse_full, sl2_triple};
use crate::ssreal::{decide_semisimple, witness_general_semisimple, witness_semisimple, Tri};
use crate::verify::verify_certificate;
use crate::{ExactMatrix, GaussRat, LieContext, Poly, ReverserCertificate};

use gen::Pool;

/// Outcome of one acceptance criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub index: usize,
    pub title: String,
    pub cases: usize,
    /// First few failure descriptions; empty on success.
    pub failures: Vec<String>,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// `PASS [3] O/SO suite (212 cases)`-style summary line.
    pub fn line(&self) -> String {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let mut s = format!(
            "{status} [{}] {} ({} cases)",
            self.index, self.title, self.cases
        );
        if let Some(f) = self.failures.first() {
            s.push_str(&format!(": {f}"));
        }
        s
    }
}

struct Tally {
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn case(&mut self) {
        self.cases += 1;
    }

    fn ensure(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if !ok && self.failures.len() < 8 {
            self.failures.push(what());
        }
    }

    fn report(self, index: usize, title: &str) -> CriterionReport {
        CriterionReport {
            index,
            title: title.into(),
            cases: self.cases,
            failures: self.failures,
        }
    }
}

fn rng_for(seed: u64, criterion: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ criterion)
}

/// Seed from the `SEED` environment variable, 0 when unset or unparsable.
pub fn seed_from_env() -> u64 {
    std::env::var("SEED")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .unwrap_or(0)
}

fn verifies(cert: &ReverserCertificate) -> bool {
    verify_certificate(cert).is_ok()
}

fn fmt_list(v: &[GaussRat]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("[{}]", items.join(", "))
}

/// Paired spectrum of length `n` with `zeros` zero entries, shuffled.
fn paired_spectrum(n: usize, zeros: usize, pool: &Pool, rng: &mut ChaCha8Rng) -> Vec<GaussRat> {
    let m = (n - zeros) / 2;
    let mut ev = Vec::with_capacity(n);
    for _ in 0..m {
        let v = pool.draw(rng);
        ev.push(-v.clone());
        ev.push(v);
    }
    ev.extend(std::iter::repeat_n(GaussRat::zero(), zeros));
    ev.shuffle(rng);
    ev
}

/// SL: decisions match the zero-eigenvalue / size criterion and every
/// granted witness verifies, involutions with `g² = I` and `det g = 1`.
pub fn criterion_sl(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 1);
    let pool = Pool::new(3);
    let mut t = Tally::new();
    for n in 2..=8usize {
        let ctx = LieContext::sl(n);
        for trial in 0..50 {
            t.case();
            let zeros = if trial % 2 == 0 && n % 2 == 0 {
                0
            } else {
                let z = rng.gen_range(1..=n);
                if (n - z) % 2 == 0 {
                    z
                } else {
                    z - 1 + usize::from(z == 1) * 2
                }
            };
            let zeros = zeros.min(n);
            let ev = paired_spectrum(n, zeros, &pool, &mut rng);
            let tag = || format!("SL({n}) spectrum {}", fmt_list(&ev));
            let c = match CanonicalSemisimple::diagonal(ctx, ev.clone()) {
                Ok(c) => c,
                Err(e) => {
                    t.ensure(false, || format!("{}: {e}", tag()));
                    continue;
                }
            };
            let x = build_canonical(&c).expect("validated");
            let has_zero = ev.iter().any(Zero::is_zero);
            let strong = has_zero || n % 4 != 2;
            match decide_semisimple(&x, &ctx) {
                Ok(v) => {
                    t.ensure(v.real == Tri::Yes, || format!("{}: not real", tag()));
                    t.ensure(v.strongly_real == Tri::from_bool(strong), || {
                        format!(
                            "{}: strongly_real {:?}, expected {strong}",
                            tag(),
                            v.strongly_real
                        )
                    });
                }
                Err(e) => t.ensure(false, || format!("{}: {e}", tag())),
            }
            let plain = witness_semisimple(&c, &ctx, false);
            t.ensure(plain.as_ref().is_ok_and(verifies), || {
                format!("{}: plain witness failed", tag())
            });
            match witness_semisimple(&c, &ctx, true) {
                Ok(cert) => {
                    let g = &cert.reverser;
                    t.ensure(strong, || {
                        format!("{}: involution granted unexpectedly", tag())
                    });
                    t.ensure(verifies(&cert), || {
                        format!("{}: involution witness fails verify", tag())
                    });
                    t.ensure((g * g).is_identity(), || format!("{}: g² ≠ I", tag()));
                    t.ensure(det(g).is_ok_and(|d| d.is_one()), || {
                        format!("{}: det g ≠ 1", tag())
                    });
                }
                Err(Error::NotRealizable(_)) => {
                    t.ensure(!strong, || format!("{}: involution refused", tag()));
                }
                Err(e) => t.ensure(false, || format!("{}: {e}", tag())),
            }
            if trial % 5 == 0 {
                // same element hidden by a unimodular change of basis
                let p = gen::random_unimodular(n, &mut rng);
                let y = gen::conjugate(&p, &x);
                let cert = witness_general_semisimple(&y, &ctx, strong);
                t.ensure(cert.as_ref().is_ok_and(verifies), || {
                    format!("{}: conjugated witness failed", tag())
                });
            }
        }
    }
    t.report(1, "SL semisimple suite")
}

/// SL parity obstruction for sizes 2 and 6 without zero eigenvalue.
pub fn criterion_sl_obstruction(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 2);
    let pool = Pool::new(3);
    let mut t = Tally::new();
    for n in [2usize, 6] {
        for _ in 0..2 {
            t.case();
            let vals = pool.draw_distinct(&mut rng, n / 2);
            let mut ev = vals.clone();
            ev.extend(vals.iter().map(|v| -v.clone()));
            let x = ExactMatrix::diag(&ev);
            let ctx = LieContext::sl(n);
            let tag = || format!("SL({n}) spectrum {}", fmt_list(&ev));
            let outcome = search_reverser(&x, &ctx, 2, true);
            t.ensure(outcome == SearchOutcome::Exhausted { height: 2 }, || {
                format!("{}: involutive search found {outcome:?}", tag())
            });
            let invs = anticommutant_involutions(&x, 2, 100_000);
            t.ensure(!invs.is_empty(), || {
                format!("{}: no involutions in the anticommutant", tag())
            });
            let all_minus = invs
                .iter()
                .all(|g| det(g).is_ok_and(|d| d == GaussRat::from(-1)));
            t.ensure(all_minus, || {
                format!("{}: an involution has det ≠ −1", tag())
            });
        }
    }
    t.report(2, "SL parity obstruction")
}

/// O/SO: always strong under O(n); under SO(n) strong iff zero eigenvalue or
/// size ≢ 2 (mod 4); the rank-one dichotomy at n = 2.
pub fn criterion_orthogonal(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 3);
    let pool = Pool::new(3);
    let mut t = Tally::new();
    for n in 2..=9usize {
        let (o, so) = (LieContext::o(n), LieContext::so(n));
        for trial in 0..12 {
            t.case();
            let m = rng.gen_range(0..=n / 2);
            let params: Vec<GaussRat> = (0..m)
                .map(|_| {
                    if rng.gen_bool(0.1) {
                        GaussRat::zero()
                    } else {
                        pool.draw(&mut rng)
                    }
                })
                .collect();
            let r = n - 2 * m;
            let tag = || format!("so({n}) params {} zeros {r}", fmt_list(&params));
            let c = CanonicalSemisimple::orthogonal(so, params.clone(), r).expect("valid shape");
            let x = build_canonical(&c).expect("validated");
            let zero_eigen = r > 0 || params.iter().any(Zero::is_zero);
            let strong = zero_eigen || n % 4 != 2;

            let vo = decide_semisimple(&x, &o);
            t.ensure(
                vo.as_ref().is_ok_and(|v| v.strongly_real == Tri::Yes),
                || format!("{}: O verdict", tag()),
            );
            let wo = witness_semisimple(&c, &o, true);
            t.ensure(wo.as_ref().is_ok_and(verifies), || {
                format!("{}: O witness", tag())
            });

            match decide_semisimple(&x, &so) {
                Ok(v) => {
                    t.ensure(v.strongly_real == Tri::from_bool(strong), || {
                        format!("{}: SO strong {:?}", tag(), v.strongly_real)
                    });
                    let real_expected = if strong {
                        Tri::Yes
                    } else if n == 2 {
                        Tri::No
                    } else {
                        Tri::Undetermined
                    };
                    t.ensure(v.real == real_expected, || {
                        format!("{}: SO real {:?}", tag(), v.real)
                    });
                }
                Err(e) => t.ensure(false, || format!("{}: {e}", tag())),
            }
            let ws = witness_semisimple(&c, &so, true);
            if strong {
                t.ensure(ws.as_ref().is_ok_and(verifies), || {
                    format!("{}: SO witness", tag())
                });
            } else {
                t.ensure(matches!(ws, Err(Error::NotRealizable(_))), || {
                    format!("{}: SO witness granted", tag())
                });
            }
            if trial % 4 == 0 && !x.is_zero() {
                let q = gen::random_orthogonal(n, &mut rng);
                let y = gen::conjugate(&q, &x);
                let cert = witness_general_semisimple(&y, &o, true);
                t.ensure(cert.as_ref().is_ok_and(verifies), || {
                    format!("{}: conjugated O witness", tag())
                });
                if strong {
                    let cert = witness_general_semisimple(&y, &so, true);
                    t.ensure(cert.as_ref().is_ok_and(verifies), || {
                        format!("{}: conjugated SO witness", tag())
                    });
                }
            }
        }
    }
    // n = 2: O(2) reverses with det −1, SO(2) cannot
    t.case();
    let x = ExactMatrix::from_i64_rows(&[&[0, 3], &[-3, 0]]);
    let proof = so2_obstruction();
    t.ensure(proof.proved, || "so(2) symbolic obstruction failed".into());
    let wo = witness_general_semisimple(&x, &LieContext::o(2), true);
    t.ensure(
        wo.as_ref()
            .is_ok_and(|c| verifies(c) && det(&c.reverser).is_ok_and(|d| d == GaussRat::from(-1))),
        || "O(2) witness with det −1 missing".into(),
    );
    let s = search_reverser(&x, &LieContext::so(2), 2, true);
    t.ensure(s == SearchOutcome::Exhausted { height: 2 }, || {
        format!("SO(2) involution search: {s:?}")
    });
    t.report(3, "O/SO semisimple suite")
}

/// Sp: strong reality iff every nonzero eigenvalue has even multiplicity.
pub fn criterion_sp(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 4);
    let mut t = Tally::new();
    let pool = Pool::new(2);
    for n in 1..=4usize {
        let sp = LieContext::sp(n);
        for trial in 0..30 {
            t.case();
            // few distinct values so repeated eigenvalues are common
            let palette: Vec<GaussRat> = (0..rng.gen_range(1..=2))
                .map(|_| pool.draw(&mut rng))
                .collect();
            let h: Vec<GaussRat> = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.2) {
                        GaussRat::zero()
                    } else {
                        let v = palette.choose(&mut rng).expect("palette nonempty").clone();
                        if rng.gen_bool(0.5) {
                            v
                        } else {
                            -v
                        }
                    }
                })
                .collect();
            let spectrum: Vec<GaussRat> = h
                .iter()
                .cloned()
                .chain(h.iter().map(|v| -v.clone()))
                .collect();
            let even = spectrum
                .iter()
                .filter(|v| !v.is_zero())
                .all(|v| spectrum.iter().filter(|w| *w == v).count() % 2 == 0);
            let tag = || format!("sp({n}) h = {}", fmt_list(&h));
            let c = CanonicalSemisimple::symplectic(sp, h.clone()).expect("valid shape");
            let x = build_canonical(&c).expect("validated");
            match decide_semisimple(&x, &sp) {
                Ok(v) => {
                    t.ensure(v.real == Tri::Yes, || format!("{}: not real", tag()));
                    t.ensure(v.strongly_real == Tri::from_bool(even), || {
                        format!("{}: strong {:?}", tag(), v.strongly_real)
                    });
                }
                Err(e) => t.ensure(false, || format!("{}: {e}", tag())),
            }
            let plain = witness_semisimple(&c, &sp, false);
            t.ensure(plain.as_ref().is_ok_and(verifies), || {
                format!("{}: plain witness", tag())
            });
            match witness_semisimple(&c, &sp, true) {
                Ok(cert) => {
                    t.ensure(even, || format!("{}: involution granted", tag()));
                    t.ensure(
                        verifies(&cert) && (&cert.reverser * &cert.reverser).is_identity(),
                        || format!("{}: involution witness", tag()),
                    );
                }
                Err(Error::NotRealizable(_)) => {
                    t.ensure(!even, || format!("{}: involution refused", tag()))
                }
                Err(e) => t.ensure(false, || format!("{}: {e}", tag())),
            }
            if trial % 3 == 0 {
                let s = gen::random_symplectic(n, &mut rng);
                let y = gen::conjugate(&s, &x);
                let cert = witness_general_semisimple(&y, &sp, even);
                t.ensure(cert.as_ref().is_ok_and(verifies), || {
                    format!("{}: conjugated witness", tag())
                });
            }
        }
    }
    t.case();
    let proof = sp1_involution_obstruction();
    t.ensure(proof.proved, || "sp(1) symbolic obstruction failed".into());
    let x = ExactMatrix::diag(&[GaussRat::from(2), GaussRat::from(-2)]);
    let s = search_reverser(&x, &LieContext::sp(1), 3, true);
    t.ensure(s == SearchOutcome::Exhausted { height: 3 }, || {
        format!("Sp(1) involution search: {s:?}")
    });
    t.report(4, "Sp semisimple suite")
}

/// Every symplectic partition of `2n ≤ 10`: triple, chain data, and `σ`.
pub fn criterion_nilpotent(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 5);
    let mut t = Tally::new();
    for n in 1..=5usize {
        let sp = LieContext::sp(n);
        for parts in gen::symplectic_partitions(2 * n) {
            t.case();
            let tag = || format!("partition {parts:?}");
            let s = gen::random_symplectic(n, &mut rng);
            let x = gen::conjugate(&s, &gen::nilpotent_of_partition(&parts));
            if x.is_zero() {
                // all parts 1: nothing to reverse, the identity does
                t.ensure(matches!(sl2_triple(&x), Err(Error::ZeroElement)), || {
                    format!("{}: zero element", tag())
                });
                continue;
            }
            let triple = match sl2_triple(&x) {
                Ok(tr) => tr,
                Err(e) => {
                    t.ensure(false, || format!("{}: triple: {e}", tag()));
                    continue;
                }
            };
            t.ensure(triple.is_valid(), || {
                format!("{}: bracket relations", tag())
            });
            let cd = match chain_decomposition(&triple) {
                Ok(cd) => cd,
                Err(e) => {
                    t.ensure(false, || format!("{}: chains: {e}", tag()));
                    continue;
                }
            };
            let mut got = cd.parts();
            got.sort_unstable_by(|a, b| b.cmp(a));
            let mut want: Vec<usize> = parts.iter().copied().filter(|&p| p > 0).collect();
            want.sort_unstable_by(|a, b| b.cmp(a));
            t.ensure(got == want, || format!("{}: chain lengths {got:?}", tag()));
            t.ensure(cd.check().is_ok(), || {
                format!("{}: {:?}", tag(), cd.check())
            });
            let sum: usize = cd.blocks.iter().map(|b| b.d * b.t).sum();
            t.ensure(sum == 2 * n, || format!("{}: Σ d·t_d = {sum}", tag()));
            match build_sigma(&cd) {
                Ok(sigma) => {
                    t.ensure(group_member(&sigma, &sp).unwrap_or(false), || {
                        format!("{}: σ ∉ Sp", tag())
                    });
                    t.ensure(&sigma * &x == -&(&x * &sigma), || {
                        format!("{}: σX ≠ −Xσ", tag())
                    });
                }
                Err(e) => t.ensure(false, || format!("{}: σ: {e}", tag())),
            }
        }
    }
    t.report(5, "nilpotent σ suite")
}

/// Mixed elements of sp(n ≤ 3): Jordan–Chevalley recovery and `στ`.
pub fn criterion_mixed(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 6);
    let pool = Pool::new(2);
    let mut t = Tally::new();
    for k in 0..100 {
        t.case();
        let n = 1 + k % 3;
        let pieces = gen::random_pieces(n, &pool, &mut rng);
        let (xs_parts, xn_parts): (Vec<_>, Vec<_>) = pieces.iter().map(gen::Piece::parts).unzip();
        let s = gen::random_symplectic(n, &mut rng);
        let xs = gen::conjugate(&s, &gen::sp_direct_sum(&xs_parts));
        let xn = gen::conjugate(&s, &gen::sp_direct_sum(&xn_parts));
        let x = &xs + &xn;
        let tag = || format!("sp({n}) pieces {pieces:?}");
        match jordan_chevalley(&x) {
            Ok(jp) => {
                t.ensure(jp.semisimple_part == xs && jp.nilpotent_part == xn, || {
                    format!("{}: parts differ", tag())
                });
                t.ensure(x.eval_poly(&jp.witness_poly) == xs, || {
                    format!("{}: p(X) ≠ X_s", tag())
                });
            }
            Err(e) => t.ensure(false, || format!("{}: JC: {e}", tag())),
        }
        match reverse_full(&x) {
            Ok(cert) => {
                t.ensure(verifies(&cert), || format!("{}: στ fails verify", tag()));
                t.ensure(!cert.claims_involution, || {
                    format!("{}: claims involution", tag())
                });
            }
            Err(e) => t.ensure(false, || format!("{}: reverse_full: {e}", tag())),
        }
    }
    t.report(6, "mixed sp(n) suite")
}

fn random_matrix(n: usize, rng: &mut ChaCha8Rng) -> ExactMatrix {
    ExactMatrix::from_fn(n, n, |_, _| {
        if rng.gen_bool(0.4) {
            GaussRat::zero()
        } else {
            GaussRat::from_ints(
                rng.gen_range(-2..=2),
                if rng.gen_bool(0.2) {
                    rng.gen_range(-1..=1)
                } else {
                    0
                },
            )
        }
    })
}

fn jordan_block(lambda: &GaussRat, k: usize) -> ExactMatrix {
    ExactMatrix::from_fn(k, k, |i, j| {
        if i == j {
            lambda.clone()
        } else if j == i + 1 {
            GaussRat::one()
        } else {
            GaussRat::zero()
        }
    })
}

/// Jordan blocks paired with their negatives; with `break_pair` one block
/// of the last pair is shortened, which destroys the symmetry.
fn structured_matrix(n: usize, break_pair: bool, rng: &mut ChaCha8Rng) -> ExactMatrix {
    let mut blocks = Vec::new();
    let mut left = n;
    while left >= 2 {
        let k = rng.gen_range(1..=left / 2);
        let lambda = GaussRat::from_ints(rng.gen_range(-2..=2), rng.gen_range(-1..=1));
        blocks.push(jordan_block(&lambda, k));
        blocks.push(jordan_block(&-lambda.clone(), k));
        left -= 2 * k;
    }
    if left == 1 {
        blocks.push(ExactMatrix::zeros(1, 1));
    }
    if break_pair {
        if let Some(last) = blocks.iter().rposition(|b| b.rows() >= 2) {
            let k = blocks[last].rows();
            let lambda = blocks[last][(0, 0)].clone();
            blocks[last] = jordan_block(&lambda, k - 1);
            blocks.push(ExactMatrix::diag(&[lambda]));
        }
    }
    let m = ExactMatrix::block_diag(&blocks);
    let p = gen::random_unimodular(n, rng);
    gen::conjugate(&p, &m)
}

/// Cross-oracle: Smith-form similarity against cyclic decompositions.
pub fn criterion_cross_oracle(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 7);
    let mut t = Tally::new();
    let mut positives = 0;
    for k in 0..500 {
        t.case();
        let n = 1 + k % 5;
        let a = match k % 4 {
            0 | 1 => random_matrix(n, &mut rng),
            2 => structured_matrix(n, false, &mut rng),
            _ => structured_matrix(n, true, &mut rng),
        };
        let tag = || format!("case {k} (size {n})");
        let neg = -&a;
        let smith = similar_to_negative(&a).unwrap_or(false);
        let cyclic = rcf_similar(&a, &neg);
        positives += usize::from(smith);
        t.ensure(smith == cyclic, || {
            format!("{}: similar_to_negative {smith}, rcf {cyclic}", tag())
        });

        let f = invariant_factors(&a);
        let chain_ok = f.windows(2).all(|w| w[0].divides(&w[1]));
        t.ensure(chain_ok, || format!("{}: divisibility chain broken", tag()));
        let product = f.iter().fold(Poly::one(), |acc, p| &acc * p);
        t.ensure(charpoly(&a).is_ok_and(|c| c == product), || {
            format!("{}: Π fᵢ ≠ χ", tag())
        });
        let nontrivial: Vec<_> = f.into_iter().filter(|p| !p.is_one()).collect();
        let mut r = rng_for(seed, 1000 + k as u64);
        t.ensure(cyclic_invariant_factors(&a, &mut r) == nontrivial, || {
            format!("{}: factor lists differ", tag())
        });
    }
    t.ensure(positives >= 100, || {
        format!("only {positives} symmetric cases")
    });
    t.report(7, "cross-oracle similarity")
}

/// PSL/PSp: strong verdicts with witnesses whose squares are central.
pub fn criterion_projective(seed: u64) -> CriterionReport {
    let mut rng = rng_for(seed, 8);
    let pool = Pool::new(3);
    let mut t = Tally::new();
    let mut minus_identity_seen = false;
    let mut check = |t: &mut Tally, c: &CanonicalSemisimple, ctx: &LieContext, tag: String| {
        t.case();
        let x = build_canonical(c).expect("validated");
        let v = decide_semisimple(&x, ctx);
        t.ensure(
            v.as_ref()
                .is_ok_and(|v| v.real == Tri::Yes && v.strongly_real == Tri::Yes),
            || format!("{tag}: verdict {v:?}"),
        );
        match witness_semisimple(c, ctx, true) {
            Ok(cert) => {
                let sq = &cert.reverser * &cert.reverser;
                let central = sq.scalar_value();
                minus_identity_seen |= central == Some(-GaussRat::one());
                t.ensure(verifies(&cert), || format!("{tag}: witness fails verify"));
                t.ensure(central.is_some(), || format!("{tag}: g² not central"));
                t.ensure(is_group_involution(&cert.reverser, ctx.group()), || {
                    format!("{tag}: not an involution")
                });
            }
            Err(e) => t.ensure(false, || format!("{tag}: {e}")),
        }
    };
    for n in 2..=7usize {
        let ctx = LieContext::psl(n);
        for trial in 0..10 {
            let zeros = if trial % 2 == 0 {
                n % 2
            } else {
                (n % 2) + 2 * rng.gen_range(0..=(n / 2))
            }
            .min(n);
            let zeros = if (n - zeros) % 2 == 0 {
                zeros
            } else {
                zeros + 1
            };
            let ev = paired_spectrum(n, zeros.min(n), &pool, &mut rng);
            let c = CanonicalSemisimple::diagonal(ctx, ev.clone()).expect("paired spectrum");
            check(&mut t, &c, &ctx, format!("PSL({n}) {}", fmt_list(&ev)));
        }
    }
    for n in 1..=4usize {
        let ctx = LieContext::psp(n);
        for _ in 0..10 {
            let h: Vec<GaussRat> = (0..n)
                .map(|_| {
                    if rng.gen_bool(0.2) {
                        GaussRat::zero()
                    } else {
                        pool.draw(&mut rng)
                    }
                })
                .collect();
            let c = CanonicalSemisimple::symplectic(ctx, h.clone()).expect("valid shape");
            check(&mut t, &c, &ctx, format!("PSp({n}) {}", fmt_list(&h)));
        }
    }
    t.ensure(minus_identity_seen, || {
        "no witness with g² = −I exercised".into()
    });
    t.report(8, "PSL/PSp suite")
}

/// Runs all eight criteria in order.
pub fn run_all(seed: u64) -> Vec<CriterionReport> {
    vec![
        criterion_sl(seed),
        criterion_sl_obstruction(seed),
        criterion_orthogonal(seed),
        criterion_sp(seed),
        criterion_nilpotent(seed),
        criterion_mixed(seed),
        criterion_cross_oracle(seed),
        criterion_projective(seed),
    ]
}

/// Runs one criterion by its 1-based index.
pub fn run_one(index: usize, seed: u64) -> Option<CriterionReport> {
    let f: fn(u64) -> CriterionReport = match index {
        1 => criterion_sl,
        2 => criterion_sl_obstruction,
        3 => criterion_orthogonal,
        4 => criterion_sp,
        5 => criterion_nilpotent,
        6 => criterion_mixed,
        7 => criterion_cross_oracle,
        8 => criterion_projective,
        _ => return None,
    };
    Some(f(seed))
}
