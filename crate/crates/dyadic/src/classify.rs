//! Odd and chiral partitions: classification, counting, enumeration, and
//! exact uniform sampling.
//!
//! A partition is *odd* when `f_λ` is odd, which happens exactly when its
//! 2-core tower has at most one cell per row (`e₂(λ) = 0`). It is *chiral*
//! when `g_λ` is odd. Chirality is decided here through 2-adic valuations
//! (`v₂(g_λ) = e₂(λ) + v₂(C(n,2) − C(λ)) − 1 − v₂(C(n,2))`), so no big-integer
//! arithmetic is needed even for partitions of several thousand.
//!
//! Counting comes in two independently implemented flavours per family, a
//! closed form over the binary expansion of `n` and a recursion over its top
//! bit; the verification suites require them to agree with each other and
//! with brute force.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::abacus::{add_rim_hook_unique, core2, from_core_quotient2};
use crate::partition::{partitions_of, Partition};
use crate::tower::e2;

/// Default bound below which full-support chiral enumeration and sampling are
/// allowed; beyond it, only the structural odd-chiral path stays exact.
pub const DEFAULT_CHIRAL_THRESHOLD: u32 = 40;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountError {
    #[error("the chiral count is undefined for n = 0")]
    UndefinedForZero,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SampleError {
    #[error("no partition of {0} has the requested property")]
    NoSupport(u32),
    #[error(
        "full-support chiral sampling at n = {n} exceeds the fallback threshold {threshold}; \
         raise the threshold or sample the odd chiral family instead"
    )]
    ThresholdExceeded { n: u32, threshold: u32 },
}

/// True iff `f_λ` is odd, decided from the 2-core tower.
pub fn is_odd(p: &Partition) -> bool {
    e2(p) == 0
}

/// True iff `g_λ` is odd, decided from 2-adic valuations.
pub fn is_chiral(p: &Partition) -> bool {
    let n = p.size() as i128;
    if n < 2 {
        return false;
    }
    let choose2 = n * (n - 1) / 2;
    let diff = choose2 - p.content_sum() as i128;
    if diff == 0 {
        return false; // λ = (n), the only shape with maximal content sum
    }
    e2(p) + diff.trailing_zeros() as u64 == 1 + choose2.trailing_zeros() as u64
}

/// Which structural family a chiral partition belongs to. Chiral partitions
/// have 2-core `∅`, `(1)`, or `(2,1)`; odd ones are reported first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChiralClass {
    /// Chiral and odd-dimensional (2-core `∅` or `(1)` with one-cell rows).
    OddChiral,
    /// Chiral, not odd, 2-core `∅` or `(1)`.
    CoreEmptyOr1,
    /// Chiral with 2-core `(2,1)`.
    Core21,
    Achiral,
}

impl ChiralClass {
    pub fn is_chiral(&self) -> bool {
        *self != ChiralClass::Achiral
    }
}

pub fn chiral_class(p: &Partition) -> ChiralClass {
    if !is_chiral(p) {
        return ChiralClass::Achiral;
    }
    if is_odd(p) {
        return ChiralClass::OddChiral;
    }
    let core = core2(p);
    match core.parts() {
        [] | [1] => ChiralClass::CoreEmptyOr1,
        [2, 1] => ChiralClass::Core21,
        _ => unreachable!("chiral partition {p} with unexpected 2-core {core}"),
    }
}

/// `a(n)`, the number of odd partitions of `n`: two to the sum of the binary
/// digit positions of `n` above the units place.
pub fn count_odd(n: u64) -> BigUint {
    let shift: u64 = (1u64..64).filter(|&k| n >> k & 1 == 1).sum();
    BigUint::one() << shift
}

/// `a(n)` by the top-bit recursion `a(n) = 2^k a(n − 2^k)`, `a(0) = 1`.
pub fn count_odd_recursive(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let k = n.ilog2();
    count_odd_recursive(n - (1 << k)) << k
}

fn pow2_rational(exp: i64) -> BigRational {
    if exp >= 0 {
        BigRational::from_integer(BigInt::one() << exp)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-exp))
    }
}

// Binary expansion n = ε + 2^{k_1} + ⋯ + 2^{k_r} with 0 < k_1 < ⋯ < k_r.
fn eps_and_high_bits(n: u64) -> (u64, Vec<i64>) {
    let eps = n & 1;
    let ks = (1..64)
        .filter(|&k| n >> k & 1 == 1)
        .map(|k| k as i64)
        .collect();
    (eps, ks)
}

/// `b(n)`, the number of chiral partitions of `n`.
///
/// The closed form multiplies `a(n)` by a dyadic-rational bracket over the
/// binary expansion of `n`; the rational arithmetic is exact and always
/// collapses to an integer. `n = 1` has an empty bracket and `b(1) = 0`.
pub fn count_chiral(n: u64) -> Result<BigUint, CountError> {
    if n == 0 {
        return Err(CountError::UndefinedForZero);
    }
    let (eps, ks) = eps_and_high_bits(n);
    let Some(&k1) = ks.first() else {
        return Ok(BigUint::zero()); // n = 1
    };
    let mut bracket = BigRational::new(BigInt::one(), BigInt::from(2));
    for v in 1..k1 {
        bracket += pow2_rational(v * k1 - (v * v + 3 * v + 4) / 2);
    }
    if eps == 1 {
        bracket += pow2_rational(k1 * (k1 - 1) / 2 - k1);
    }
    let b = BigRational::from_integer(BigInt::from(count_odd(n))) * bracket;
    assert!(b.is_integer() && !b.is_negative());
    Ok(b.to_integer().to_biguint().unwrap())
}

/// `b_v(n)`, the number of chiral partitions of `n` whose dimension has
/// 2-adic valuation exactly `v`. Requires `n ≥ 1`.
pub fn count_chiral_by_valuation(n: u64, v: u32) -> BigUint {
    assert!(n >= 1);
    let (eps, ks) = eps_and_high_bits(n);
    let Some(&k1) = ks.first() else {
        return BigUint::zero(); // n = 1
    };
    let v = v as i64;
    let prefix: i64 = ks[1..].iter().sum();
    let exp = if v == 0 {
        k1 - 1
    } else if v < k1 {
        (v + 1) * (k1 - 2) - v * (v - 1) / 2
    } else if v == k1 && eps == 1 {
        k1 * (k1 - 1) / 2
    } else {
        return BigUint::zero();
    };
    debug_assert!(exp >= 0);
    BigUint::one() << (prefix + exp) as u64
}

/// All odd partitions of `n`, streamed in the canonical order: recurse on the
/// `2^k`-core, then legs in increasing order.
pub fn enumerate_odd(n: u32) -> Box<dyn Iterator<Item = Partition>> {
    if n == 0 {
        return Box::new(std::iter::once(Partition::empty()));
    }
    let k = n.ilog2();
    let hook = 1u32 << k;
    Box::new(enumerate_odd(n - hook).flat_map(move |mu| {
        (0..hook).map(move |leg| {
            add_rim_hook_unique(&mu, hook, leg).expect("odd core is smaller than the hook")
        })
    }))
}

// Unbiased uniform draw in 0..bound by rejection.
pub(crate) fn uniform_below<R: RngCore>(rng: &mut R, bound: u64) -> u64 {
    assert!(bound > 0);
    let range = u64::MAX as u128 + 1;
    let cutoff = range - range % bound as u128;
    loop {
        let x = rng.next_u64();
        if (x as u128) < cutoff {
            return x % bound;
        }
    }
}

/// A uniformly random odd partition of `n`, deterministic in the seed.
pub fn sample_odd(n: u32, seed: u64) -> Partition {
    sample_odd_with_rng(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// As [`sample_odd`] with a caller-supplied generator: one uniform leg choice
/// per binary digit of `n`.
pub fn sample_odd_with_rng<R: RngCore>(n: u32, rng: &mut R) -> Partition {
    if n == 0 {
        return Partition::empty();
    }
    let k = n.ilog2();
    let hook = 1u32 << k;
    let mu = sample_odd_with_rng(n - hook, rng);
    let leg = uniform_below(rng, hook as u64) as u32;
    add_rim_hook_unique(&mu, hook, leg).expect("odd core is smaller than the hook")
}

// Splits (a, b) of m whose binary expansions intersect exactly in the common
// lowest bit: the quotient-size condition for non-odd chiral partitions with
// 2-core ∅ or (1).
fn shared_low_bit_splits(m: u64) -> impl Iterator<Item = (u64, u64)> {
    (1..m).filter_map(move |a| {
        let b = m - a;
        let j = a.trailing_zeros();
        (b != 0 && b.trailing_zeros() == j && a & b == 1 << j).then_some((a, b))
    })
}

/// All chiral partitions of `n`, streamed, each exactly once.
///
/// Three disjoint structural families, in order: odd chiral partitions (from
/// the odd enumeration, parity-filtered), non-odd partitions with 2-core `∅`
/// or `(1)` (reconstructed from odd quotient pairs whose sizes share exactly
/// their lowest binary digit), and partitions with 2-core `(2,1)`
/// (reconstructed from all quotient pairs, parity-filtered, since no closed
/// description of that family is available). The last family makes the cost
/// grow with the number of bipartitions of `(n−3)/2`, which is why
/// full-support sampling is gated by a threshold.
pub fn enumerate_chiral(n: u32) -> Box<dyn Iterator<Item = Partition>> {
    let odd_chiral = enumerate_odd(n).filter(is_chiral as fn(&Partition) -> bool);

    let core = if n.is_multiple_of(2) {
        Partition::empty()
    } else {
        Partition::new(vec![1])
    };
    let m = (n as u64 - core.size()) / 2;
    let tame = shared_low_bit_splits(m).flat_map(move |(a, b)| {
        let core = core.clone();
        enumerate_odd(a as u32).flat_map(move |alpha| {
            let core = core.clone();
            enumerate_odd(b as u32).map(move |beta| {
                let lam = from_core_quotient2(&core, &alpha, &beta);
                debug_assert!(!is_odd(&lam));
                lam
            })
        })
    });

    let wild: Box<dyn Iterator<Item = Partition>> = if n % 2 == 1 && n >= 3 {
        let m3 = (n - 3) / 2;
        Box::new((0..=m3).flat_map(move |a| {
            partitions_of(a).flat_map(move |alpha| {
                partitions_of(m3 - a).filter_map(move |beta| {
                    let lam = from_core_quotient2(&Partition::new(vec![2, 1]), &alpha, &beta);
                    is_chiral(&lam).then_some(lam)
                })
            })
        }))
    } else {
        Box::new(std::iter::empty())
    };

    Box::new(
        odd_chiral
            .chain(tame.filter(is_chiral as fn(&Partition) -> bool))
            .chain(wild),
    )
}

/// A uniformly random chiral partition of `n`. Exact but enumeration-backed,
/// so it refuses to run above the threshold; use [`sample_odd_chiral`] there.
pub fn sample_chiral(n: u32, seed: u64, threshold: u32) -> Result<Partition, SampleError> {
    if n < 2 {
        return Err(SampleError::NoSupport(n));
    }
    if n > threshold {
        return Err(SampleError::ThresholdExceeded { n, threshold });
    }
    let all: Vec<Partition> = enumerate_chiral(n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let idx = uniform_below(&mut rng, all.len() as u64) as usize;
    Ok(all[idx].clone())
}

/// A uniformly random *odd* chiral partition of `n`, exact at any size:
/// exactly half of the odd partitions of `n ≥ 2` are chiral, so rejection
/// from the uniform odd sampler terminates after two draws on average.
pub fn sample_odd_chiral(n: u32, seed: u64) -> Result<Partition, SampleError> {
    if n < 2 {
        return Err(SampleError::NoSupport(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let lam = sample_odd_with_rng(n, &mut rng);
        if is_chiral(&lam) {
            return Ok(lam);
        }
    }
}

/// The exact ratio `a(n) / b(n+2)` in lowest terms. Lies in `[2/5, 1]` and
/// equals 1 exactly when `4 | n`.
pub fn ratio_bounds_check(n: u64) -> BigRational {
    assert!(n >= 1);
    let a = BigInt::from(count_odd(n));
    let b = BigInt::from(count_chiral(n + 2).expect("n + 2 > 0"));
    BigRational::new(a, b)
}
