//! Bipartitions and the representation combinatorics of the hyperoctahedral
//! group and its index-two subgroup.
//!
//! Irreducible representations of the rank-`n` hyperoctahedral group are
//! indexed by ordered pairs of partitions with total size `n`, with dimension
//! `f_{αβ} = C(n, a) f_α f_β`. Their determinants land in the Klein four-group
//! of multiplicative characters `{1, ε, sgn⁰, sgn¹}`, and are computed here by
//! parity arithmetic alone: dimensions enter only through the oddness of
//! `f` and `g` and of binomial coefficients (Lucas).
//!
//! The demihyperoctahedral group appears through its two kinds of irreducible
//! representations: restrictions of the off-diagonal pairs (taken up to
//! swap), and the two halves `ρ±` of each diagonal pair.

use std::fmt;
use std::ops::Mul;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use thiserror::Error;

use crate::classify::{count_odd, is_chiral, is_odd, uniform_below};
use crate::partition::{partition_counts, partitions_of, Partition};
use crate::tower::v2;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolomonError {
    #[error("dimension {dim} and character value {chi} have different parities")]
    ParityMismatch { dim: BigInt, chi: BigInt },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClosedFormError {
    #[error("closed form requires n ≥ {min}, got {n}")]
    BelowRange { n: u64, min: u64 },
}

/// An ordered pair of partitions with total size `|α| + |β|`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BiPartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl BiPartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        BiPartition { alpha, beta }
    }

    pub fn size(&self) -> u64 {
        self.alpha.size() + self.beta.size()
    }

    pub fn swapped(&self) -> BiPartition {
        BiPartition::new(self.beta.clone(), self.alpha.clone())
    }

    /// A hook bipartition: exactly one component is non-empty, and it is a
    /// hook.
    pub fn is_hook(&self) -> bool {
        match (self.alpha.is_empty(), self.beta.is_empty()) {
            (true, false) => self.beta.is_hook(),
            (false, true) => self.alpha.is_hook(),
            _ => false,
        }
    }
}

/// Canonical text form `α|β`, each side as the partition text form.
impl fmt::Display for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.alpha, self.beta)
    }
}

impl fmt::Debug for BiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPartition({self})")
    }
}

/// All bipartitions of `n`, smaller first component first.
pub fn bipartitions_of(n: u32) -> impl Iterator<Item = BiPartition> {
    (0..=n).flat_map(move |a| {
        partitions_of(a).flat_map(move |alpha| {
            partitions_of(n - a).map(move |beta| BiPartition::new(alpha.clone(), beta))
        })
    })
}

fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

// Lucas: C(m, k) is odd iff the binary digits of k sit inside those of m.
// Zero for out-of-range or negative arguments, matching the convention that
// a multinomial with a negative lower index vanishes.
fn binomial_is_odd(m: i64, k: i64) -> bool {
    m >= 0 && k >= 0 && k <= m && (k & (m - k)) == 0
}

/// `f_{αβ} = C(n, a) f_α f_β`, the dimension of the representation indexed
/// by the bipartition.
pub fn dim_f2(bp: &BiPartition) -> BigUint {
    binomial(bp.size(), bp.alpha.size()) * bp.alpha.dim_f() * bp.beta.dim_f()
}

/// True iff `f_{αβ}` is odd: both components odd and the binary expansions of
/// their sizes disjoint.
pub fn is_odd_bipartition(bp: &BiPartition) -> bool {
    bp.alpha.size() & bp.beta.size() == 0 && is_odd(&bp.alpha) && is_odd(&bp.beta)
}

/// `a₂(n)`, the number of odd bipartitions of `n`: equals `a(2n)`.
pub fn count_odd_bipartitions(n: u64) -> BigUint {
    count_odd(2 * n)
}

/// `a₂(n)` by the recursion `a₂(n) = 2^{k+1} a₂(n − 2^k)`, `a₂(0) = 1`.
pub fn count_odd_bipartitions_recursive(n: u64) -> BigUint {
    if n == 0 {
        return BigUint::one();
    }
    let k = n.ilog2();
    count_odd_bipartitions_recursive(n - (1 << k)) << (k + 1)
}

/// All odd bipartitions of `n`, streamed: recurse on the hook-removed pair,
/// then add the `2^k`-hook to `α` with legs ascending, then to `β`.
pub fn enumerate_odd_bipartitions(n: u32) -> Box<dyn Iterator<Item = BiPartition>> {
    if n == 0 {
        return Box::new(std::iter::once(BiPartition::new(
            Partition::empty(),
            Partition::empty(),
        )));
    }
    let k = n.ilog2();
    let hook = 1u32 << k;
    Box::new(
        enumerate_odd_bipartitions(n - hook).flat_map(move |bp| {
            (0..2 * hook).map(move |choice| grow_bipartition(&bp, hook, choice))
        }),
    )
}

// Adds a rim `hook`-hook to one component: choices 0..hook grow α by legs
// 0..hook, choices hook..2·hook grow β.
fn grow_bipartition(bp: &BiPartition, hook: u32, choice: u32) -> BiPartition {
    use crate::abacus::add_rim_hook_unique;
    let leg = choice % hook;
    if choice < hook {
        let alpha = add_rim_hook_unique(&bp.alpha, hook, leg).expect("component smaller than hook");
        BiPartition::new(alpha, bp.beta.clone())
    } else {
        let beta = add_rim_hook_unique(&bp.beta, hook, leg).expect("component smaller than hook");
        BiPartition::new(bp.alpha.clone(), beta)
    }
}

/// A uniformly random odd bipartition of `n`, deterministic in the seed.
pub fn sample_odd_bipartition(n: u32, seed: u64) -> BiPartition {
    sample_odd_bipartition_with_rng(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn sample_odd_bipartition_with_rng<R: RngCore>(n: u32, rng: &mut R) -> BiPartition {
    if n == 0 {
        return BiPartition::new(Partition::empty(), Partition::empty());
    }
    let k = n.ilog2();
    let hook = 1u32 << k;
    let bp = sample_odd_bipartition_with_rng(n - hook, rng);
    let choice = uniform_below(rng, 2 * hook as u64) as u32;
    grow_bipartition(&bp, hook, choice)
}

/// An element of the Klein four-group of multiplicative characters
/// `{1, ε, sgn⁰, sgn¹}`; multiplication is bitwise XOR on the two exponents.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BCharacter {
    pub e_bit: bool,
    pub s_bit: bool,
}

impl BCharacter {
    pub const ONE: BCharacter = BCharacter {
        e_bit: false,
        s_bit: false,
    };
    pub const EPSILON: BCharacter = BCharacter {
        e_bit: true,
        s_bit: false,
    };
    pub const SGN0: BCharacter = BCharacter {
        e_bit: false,
        s_bit: true,
    };
    pub const SGN1: BCharacter = BCharacter {
        e_bit: true,
        s_bit: true,
    };

    pub const ALL: [BCharacter; 4] = [Self::ONE, Self::EPSILON, Self::SGN0, Self::SGN1];

    pub fn name(&self) -> &'static str {
        match (self.e_bit, self.s_bit) {
            (false, false) => "1",
            (true, false) => "eps",
            (false, true) => "sgn0",
            (true, true) => "sgn1",
        }
    }
}

impl Mul for BCharacter {
    type Output = BCharacter;
    fn mul(self, rhs: BCharacter) -> BCharacter {
        BCharacter {
            e_bit: self.e_bit ^ rhs.e_bit,
            s_bit: self.s_bit ^ rhs.s_bit,
        }
    }
}

impl fmt::Display for BCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Debug for BCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Determinant of a representation of a Coxeter group with two multiplicative
/// characters, from its dimension and character value at a simple reflection:
/// `det ρ = ε_W^b` with `b = (dim ρ − χ_ρ(s)) / 2`. Returns whether the
/// determinant is the non-trivial character.
pub fn solomon_det(dim: &BigInt, chi_s: &BigInt) -> Result<bool, SolomonError> {
    assert!(dim.is_positive() && chi_s.abs() <= *dim);
    let diff = dim - chi_s;
    if diff.bit(0) {
        return Err(SolomonError::ParityMismatch {
            dim: dim.clone(),
            chi: chi_s.clone(),
        });
    }
    Ok((diff / BigInt::from(2)).bit(0))
}

/// The Klein-four analogue: `det ρ = ω₁^{x₁} ω₂^{x₂}` with
/// `x_i = (dim ρ − χ_ρ(s_i)) / 2` for non-conjugate simple reflections.
pub fn solomon_det2(
    dim: &BigInt,
    chi_s1: &BigInt,
    chi_s2: &BigInt,
) -> Result<BCharacter, SolomonError> {
    Ok(BCharacter {
        e_bit: solomon_det(dim, chi_s1)?,
        s_bit: solomon_det(dim, chi_s2)?,
    })
}

/// Determinant of the irreducible representation indexed by `(α, β)`:
/// `ε^x (sgn⁰)^y` with `x = f_α f_β C(n−1; a, b−1)` and
/// `y = f_α f_β C(n−2; a−1, b−1) + f_β g_α C(n−2; a−2, b) + f_α g_β C(n−2; a, b−2)`,
/// evaluated in parity arithmetic (multinomials with a negative lower index
/// vanish).
pub fn det_b(bp: &BiPartition) -> BCharacter {
    let a = bp.alpha.size() as i64;
    let b = bp.beta.size() as i64;
    let n = a + b;
    let fa = is_odd(&bp.alpha);
    let fb = is_odd(&bp.beta);
    let ga = is_chiral(&bp.alpha);
    let gb = is_chiral(&bp.beta);

    let x = fa && fb && b >= 1 && binomial_is_odd(n - 1, a);
    let t1 = fa && fb && a >= 1 && b >= 1 && binomial_is_odd(n - 2, a - 1);
    let t2 = fb && ga && a >= 2 && binomial_is_odd(n - 2, b);
    let t3 = fa && gb && b >= 2 && binomial_is_odd(n - 2, a);
    BCharacter {
        e_bit: x,
        s_bit: t1 ^ t2 ^ t3,
    }
}

/// `N_ω(a, b)`: bipartitions with first component of size `a`, second of size
/// `b`, and determinant `ω`, counted by evaluating [`det_b`] on each.
pub fn count_det_b_brute_ab(a: u32, b: u32, w: BCharacter) -> BigUint {
    let mut count = BigUint::zero();
    for alpha in partitions_of(a) {
        for beta in partitions_of(b) {
            if det_b(&BiPartition::new(alpha.clone(), beta)) == w {
                count += BigUint::one();
            }
        }
    }
    count
}

/// `N_ω(n) = Σ_{a+b=n} N_ω(a, b)`, the brute-force count.
pub fn count_det_b_brute(n: u32, w: BCharacter) -> BigUint {
    (0..=n).map(|a| count_det_b_brute_ab(a, n - a, w)).sum()
}

fn pow2_rational(exp: i64) -> BigRational {
    if exp >= 0 {
        BigRational::from_integer(BigInt::one() << exp)
    } else {
        BigRational::new(BigInt::one(), BigInt::one() << (-exp))
    }
}

fn choose2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// `N_ω(n)` for `n ≥ 2` by the closed forms; `N₁(n)` is derived as
/// `p₂(n)` minus the three non-trivial counts.
pub fn count_det_b_closed(n: u64, w: BCharacter) -> Result<BigUint, ClosedFormError> {
    if n < 2 {
        return Err(ClosedFormError::BelowRange { n, min: 2 });
    }
    if w == BCharacter::ONE {
        let others: BigUint = [BCharacter::EPSILON, BCharacter::SGN0, BCharacter::SGN1]
            .into_iter()
            .map(|w| count_det_b_closed(n, w).expect("n ≥ 2"))
            .sum();
        return Ok(p2(n) - others);
    }

    let a2 = BigRational::from_integer(BigInt::from(count_odd_bipartitions(n)));
    // The even-n bracket shared by ε and sgn⁰.
    let even_bracket = |k: i64| {
        let mut sum = BigRational::from_integer(BigInt::from(2));
        for j in 1..k {
            sum += pow2_rational(choose2(k) - choose2(j));
        }
        sum
    };

    let value = match w {
        BCharacter::EPSILON => {
            if n % 2 == 1 {
                a2 / BigInt::from(4)
            } else {
                let k = v2(n).unwrap() as i64;
                a2 / BigInt::from(8) * even_bracket(k)
            }
        }
        BCharacter::SGN0 => match n % 4 {
            1 => {
                let k = v2(n - 1).unwrap() as i64;
                let mut bracket = BigRational::one()
                    + BigRational::from_integer(BigInt::from(3)) * pow2_rational(choose2(k) - 1)
                    + pow2_rational(choose2(k) - k + 1);
                for j in 2..k {
                    bracket +=
                        pow2_rational(choose2(k) - choose2(j)) + pow2_rational(choose2(k) - j);
                }
                a2 / BigInt::from(4) * bracket
            }
            3 => a2 / BigInt::from(2),
            _ => {
                let k = v2(n).unwrap() as i64;
                a2 / BigInt::from(8) * even_bracket(k)
            }
        },
        BCharacter::SGN1 => {
            if n % 2 == 1 {
                a2 / BigInt::from(4)
            } else {
                let k = v2(n).unwrap() as i64;
                let mut bracket = BigRational::from_integer(BigInt::from(2)) + pow2_rational(k);
                for j in 1..k {
                    bracket += pow2_rational(choose2(k) - choose2(j))
                        * BigRational::from_integer((BigInt::one() << j) - BigInt::one());
                }
                a2 / BigInt::from(8) * bracket
            }
        }
        BCharacter::ONE => unreachable!(),
    };
    assert!(value.is_integer() && !value.is_negative());
    Ok(value.to_integer().to_biguint().unwrap())
}

/// All four counts `(N₁, N_ε, N_{sgn⁰}, N_{sgn¹})` by closed form, `n ≥ 2`.
pub fn det_b_table(n: u64) -> Result<[BigUint; 4], ClosedFormError> {
    Ok([
        count_det_b_closed(n, BCharacter::ONE)?,
        count_det_b_closed(n, BCharacter::EPSILON)?,
        count_det_b_closed(n, BCharacter::SGN0)?,
        count_det_b_closed(n, BCharacter::SGN1)?,
    ])
}

/// `p₂(0), …, p₂(max)`: bipartition counts by self-convolution of the
/// partition counting table.
pub fn p2_table(max: usize) -> Vec<BigUint> {
    let p = partition_counts(max);
    (0..=max)
        .map(|n| (0..=n).map(|a| &p[a] * &p[n - a]).sum())
        .collect()
}

/// `p₂(n)`, the number of bipartitions of `n`.
pub fn p2(n: u64) -> BigUint {
    p2_table(n as usize).pop().unwrap()
}

/// Number of irreducible representations of the rank-`n` demihyperoctahedral
/// group: `p₂(n)/2` for odd `n`, plus `3/2 p(n/2)` for even `n`. `n ≥ 1`.
pub fn irr_count_d(n: u64) -> BigUint {
    assert!(n >= 1);
    let p2n = p2(n);
    let total = if n.is_multiple_of(2) {
        p2n + BigUint::from(3u32) * partition_counts(n as usize / 2).pop().unwrap()
    } else {
        p2n
    };
    let (half, rem) = num_integer::Integer::div_rem(&total, &BigUint::from(2u32));
    assert!(rem.is_zero());
    half
}

/// An irreducible representation of the rank-`n` demihyperoctahedral group:
/// either the restriction of an off-diagonal pair (stored with the
/// lexicographically smaller component first, one representative per swap
/// class), or one of the two halves of a diagonal pair.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DIrrep {
    Restricted { first: Partition, second: Partition },
    Split { base: Partition, positive: bool },
}

impl DIrrep {
    /// Canonicalizes the unordered pair; requires `a ≠ b` except for the
    /// rank-0 convention pair `(∅, ∅)`.
    pub fn restricted(a: Partition, b: Partition) -> DIrrep {
        assert!(a != b || a.is_empty(), "off-diagonal pairs only");
        let (first, second) = if a <= b { (a, b) } else { (b, a) };
        DIrrep::Restricted { first, second }
    }

    pub fn rank(&self) -> u64 {
        match self {
            DIrrep::Restricted { first, second } => first.size() + second.size(),
            DIrrep::Split { base, .. } => 2 * base.size(),
        }
    }

    pub fn dim(&self) -> BigUint {
        match self {
            DIrrep::Restricted { first, second } => {
                dim_f2(&BiPartition::new(first.clone(), second.clone()))
            }
            DIrrep::Split { base, .. } => {
                let full = dim_f2(&BiPartition::new(base.clone(), base.clone()));
                let (half, rem) = num_integer::Integer::div_rem(&full, &BigUint::from(2u32));
                assert!(rem.is_zero());
                half
            }
        }
    }
}

impl fmt::Display for DIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DIrrep::Restricted { first, second } => write!(f, "{first}|{second}"),
            DIrrep::Split { base, positive } => {
                write!(f, "{base}{}", if *positive { "+" } else { "-" })
            }
        }
    }
}

impl fmt::Debug for DIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DIrrep({self})")
    }
}

/// All irreducible representations of rank `n`, in a deterministic order.
/// Rank 0 is the conventional pair `(∅, ∅)`.
pub fn irreps_d(n: u32) -> Vec<DIrrep> {
    if n == 0 {
        return vec![DIrrep::Restricted {
            first: Partition::empty(),
            second: Partition::empty(),
        }];
    }
    let mut out = Vec::new();
    for a in 0..=n {
        for alpha in partitions_of(a) {
            for beta in partitions_of(n - a) {
                if alpha < beta {
                    out.push(DIrrep::Restricted {
                        first: alpha.clone(),
                        second: beta,
                    });
                }
            }
        }
    }
    if n.is_multiple_of(2) {
        for base in partitions_of(n / 2) {
            for positive in [true, false] {
                out.push(DIrrep::Split {
                    base: base.clone(),
                    positive,
                });
            }
        }
    }
    out
}

/// Determinant of a demihyperoctahedral irreducible: `true` means the sign
/// character.
///
/// Restrictions keep the `sgn⁰` exponent of [`det_b`] (`ε` restricts
/// trivially). A split half is sign exactly when `n` is a power of two and
/// the base is odd and achiral, or `n − 2` is a power of two (and `n` is not)
/// and the base is odd; otherwise trivial.
pub fn det_d(r: &DIrrep) -> bool {
    match r {
        DIrrep::Restricted { first, second } => {
            det_b(&BiPartition::new(first.clone(), second.clone())).s_bit
        }
        DIrrep::Split { base, .. } => {
            let n = 2 * base.size();
            if n.is_power_of_two() {
                is_odd(base) && !is_chiral(base)
            } else if n >= 4 && (n - 2).is_power_of_two() {
                is_odd(base)
            } else {
                false
            }
        }
    }
}

/// Closed form for the number of rank-`n` demihyperoctahedral irreducibles
/// with sign determinant, `n ≥ 4`.
pub fn count_det_d_sgn(n: u64) -> Result<BigUint, ClosedFormError> {
    if n < 4 {
        return Err(ClosedFormError::BelowRange { n, min: 4 });
    }
    let total = count_det_b_closed(n, BCharacter::SGN0)? + count_det_b_closed(n, BCharacter::SGN1)?;
    let (half, rem) = num_integer::Integer::div_rem(&total, &BigUint::from(2u32));
    assert!(rem.is_zero());
    let extra = if n.is_power_of_two() {
        n / 2
    } else if (n - 2).is_power_of_two() {
        n - 2
    } else {
        0
    };
    Ok(half + BigUint::from(extra))
}

/// The same count by exhaustive enumeration of the irreducibles.
pub fn count_det_d_sgn_brute(n: u32) -> BigUint {
    BigUint::from(irreps_d(n).iter().filter(|r| det_d(r)).count())
}
