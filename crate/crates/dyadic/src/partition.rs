//! Integer partitions and their Young-lattice chain counts.
//!
//! Cells are addressed `(row, column)`, 1-indexed, in English convention, so
//! the arm of a cell extends to the right and the leg extends downward.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A partition of a non-negative integer: weakly decreasing positive parts.
/// The empty list is the unique partition of 0.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from weakly decreasing positive parts.
    ///
    /// Panics if the parts increase anywhere or contain a zero.
    pub fn new(parts: Vec<u32>) -> Self {
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "partition parts must be weakly decreasing: {parts:?}"
        );
        assert!(!parts.contains(&0), "partition parts must be positive");
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned, `|λ|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// Number of parts (rows of the Young diagram).
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 0-indexed; 0 beyond the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        if self.is_empty() {
            return Partition::empty();
        }
        let cols = self.parts[0] as usize;
        let mut parts = Vec::with_capacity(cols);
        for j in 1..=cols {
            parts.push(self.parts.iter().take_while(|&&p| p as usize >= j).count() as u32);
        }
        Partition { parts }
    }

    /// Partitions obtained by removing one corner cell (`λ⁻`).
    pub fn covered_by(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.parts.len() {
            if i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1] {
                let mut parts = self.parts.clone();
                if parts[i] == 1 {
                    parts.remove(i);
                } else {
                    parts[i] -= 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Partitions obtained by adding one addable cell (`λ⁺`).
    pub fn covers(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.parts.len() {
            let can_add = i == 0 || self.parts[i - 1] > self.part(i);
            if can_add {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }

    /// Hook lengths per cell, row by row: arm + leg + 1.
    pub fn hook_lengths(&self) -> Vec<Vec<u32>> {
        let conj = self.conjugate();
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &row)| {
                (1..=row as usize)
                    .map(|j| {
                        let arm = row - j as u32;
                        let leg = conj.parts[j - 1] - (i as u32 + 1);
                        arm + leg + 1
                    })
                    .collect()
            })
            .collect()
    }

    /// First-column hook lengths, largest first.
    pub fn first_column_hooks(&self) -> Vec<u64> {
        let rows = self.parts.len() as u64;
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| p as u64 + rows - 1 - i as u64)
            .collect()
    }

    /// `f_λ`: the number of standard tableaux of shape `λ`, equivalently the
    /// number of saturated chains `∅ → λ` in Young's lattice, by the
    /// hook-length formula. `f_∅ = 1` (the empty chain).
    pub fn dim_f(&self) -> BigUint {
        let n = self.size();
        let mut num = BigUint::one();
        for k in 2..=n {
            num *= BigUint::from(k);
        }
        let mut den = BigUint::one();
        for row in self.hook_lengths() {
            for h in row {
                den *= BigUint::from(h);
            }
        }
        let (q, r) = num.div_rem(&den);
        debug_assert!(r.is_zero());
        q
    }

    /// `C(λ) = Σ_{(i,j)∈λ} (j−i)`, the sum of contents of the cells.
    pub fn content_sum(&self) -> i64 {
        self.parts
            .iter()
            .enumerate()
            .map(|(i, &p)| {
                let p = p as i64;
                let row = i as i64 + 1;
                p * (p + 1) / 2 - row * p
            })
            .sum()
    }

    /// `g_λ`: the number of saturated chains `(1,1) → λ` in Young's lattice,
    /// equivalently the number of standard tableaux of shape `λ` with 2 in the
    /// first column. Zero when `|λ| < 2`.
    ///
    /// Computed as `f_λ (C(n,2) − C(λ)) / (2 C(n,2))`; the division is exact.
    pub fn g_count(&self) -> BigUint {
        let n = self.size();
        if n < 2 {
            return BigUint::zero();
        }
        let choose2 = BigInt::from(n) * BigInt::from(n - 1) / BigInt::from(2);
        let diff = &choose2 - BigInt::from(self.content_sum());
        let num = BigInt::from(self.dim_f()) * diff;
        let den = BigInt::from(2) * choose2;
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero() && !q.is_negative());
        q.to_biguint().unwrap()
    }

    /// True for the shapes `(k, 1^{n−k})` with `n ≥ 1`; the empty partition
    /// is not a hook.
    pub fn is_hook(&self) -> bool {
        !self.parts.is_empty() && self.parts[1..].iter().all(|&p| p == 1)
    }

    /// True when `f_λ = 1`: the empty, one-row, and one-column shapes.
    pub fn is_one_dimensional(&self) -> bool {
        self.parts.len() <= 1 || self.parts[0] == 1
    }

    /// Frobenius coordinates: arm and leg lengths along the main diagonal.
    pub fn frobenius(&self) -> (Vec<u64>, Vec<u64>) {
        let conj = self.conjugate();
        let d = self
            .parts
            .iter()
            .enumerate()
            .take_while(|&(i, &p)| p as usize > i)
            .count();
        let arms = (0..d)
            .map(|i| (self.parts[i] - 1 - i as u32) as u64)
            .collect();
        let legs = (0..d)
            .map(|i| (conj.parts[i] - 1 - i as u32) as u64)
            .collect();
        (arms, legs)
    }
}

impl From<Vec<u32>> for Partition {
    fn from(parts: Vec<u32>) -> Self {
        Partition::new(parts)
    }
}

impl From<&[u32]> for Partition {
    fn from(parts: &[u32]) -> Self {
        Partition::new(parts.to_vec())
    }
}

/// Canonical text form: comma-separated parts, `-` for the empty partition.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "-");
        }
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition({self})")
    }
}

/// All partitions of `n` in descending lexicographic order, `(n)` first.
pub fn partitions_of(n: u32) -> PartitionIter {
    PartitionIter {
        current: if n == 0 { Vec::new() } else { vec![n] },
        started: false,
        done: false,
    }
}

pub struct PartitionIter {
    current: Vec<u32>,
    started: bool,
    done: bool,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(Partition {
                parts: self.current.clone(),
            });
        }
        // Find the last part > 1, decrement it, and redistribute the tail
        // greedily.
        let a = &mut self.current;
        let Some(i) = a.iter().rposition(|&p| p > 1) else {
            self.done = true;
            return None;
        };
        let cap = a[i] - 1;
        let mut rest = (a.len() - i) as u32 + cap;
        a.truncate(i);
        while rest > 0 {
            let take = rest.min(cap);
            a.push(take);
            rest -= take;
        }
        Some(Partition {
            parts: self.current.clone(),
        })
    }
}

/// The table `p(0), …, p(max)` of partition counts, by Euler's
/// pentagonal-number recurrence.
pub fn partition_counts(max: usize) -> Vec<BigUint> {
    let mut table: Vec<BigInt> = Vec::with_capacity(max + 1);
    table.push(BigInt::one());
    for n in 1..=max {
        let mut sum = BigInt::zero();
        let mut k: i64 = 1;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > n {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            sum += sign * &table[n - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= n {
                sum += sign * &table[n - g2];
            }
            k += 1;
        }
        table.push(sum);
    }
    table
        .into_iter()
        .map(|v| v.to_biguint().expect("partition counts are non-negative"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn hook_lengths_of_small_shapes() {
        assert_eq!(p(&[2, 1]).hook_lengths(), vec![vec![3, 1], vec![1]]);
        assert_eq!(p(&[1]).hook_lengths(), vec![vec![1]]);
    }

    #[test]
    fn first_column_hooks_match_fig4_shape() {
        assert_eq!(
            p(&[5, 4, 2, 2, 1, 1]).first_column_hooks(),
            vec![10, 8, 5, 4, 2, 1]
        );
    }

    #[test]
    fn dim_f_values() {
        assert_eq!(p(&[3, 1]).dim_f(), BigUint::from(3u32));
        assert_eq!(p(&[7]).dim_f(), BigUint::one());
        assert_eq!(Partition::empty().dim_f(), BigUint::one());
        assert_eq!(p(&[2, 2]).dim_f(), BigUint::from(2u32));
    }

    #[test]
    fn content_sums() {
        assert_eq!(p(&[2, 1]).content_sum(), 0);
        assert_eq!(p(&[1, 1]).content_sum(), -1);
        assert_eq!(p(&[4]).content_sum(), 6);
    }

    #[test]
    fn g_count_values() {
        assert_eq!(p(&[2, 1]).g_count(), BigUint::one());
        assert_eq!(p(&[1, 1]).g_count(), BigUint::one());
        for n in 1..=8u32 {
            assert!(p(&[n]).g_count().is_zero());
        }
        assert!(p(&[1]).g_count().is_zero());
        assert!(Partition::empty().g_count().is_zero());
    }

    #[test]
    fn covers_and_covered_by() {
        let covered: Vec<_> = p(&[2, 1]).covered_by();
        assert_eq!(covered, vec![p(&[1, 1]), p(&[2])]);
        let covers: Vec<_> = p(&[1]).covers();
        assert_eq!(covers, vec![p(&[2]), p(&[1, 1])]);
        assert!(Partition::empty().covered_by().is_empty());
    }

    #[test]
    fn conjugate_is_involutive() {
        let lam = p(&[5, 4, 2, 2, 1, 1]);
        assert_eq!(lam.conjugate().conjugate(), lam);
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn partitions_of_small_n() {
        let all: Vec<_> = partitions_of(4).collect();
        assert_eq!(
            all,
            vec![
                p(&[4]),
                p(&[3, 1]),
                p(&[2, 2]),
                p(&[2, 1, 1]),
                p(&[1, 1, 1, 1])
            ]
        );
        assert_eq!(partitions_of(0).count(), 1);
        assert_eq!(partitions_of(1).count(), 1);
    }

    #[test]
    fn partition_counts_match_enumeration() {
        let table = partition_counts(12);
        for n in 0..=12u32 {
            assert_eq!(
                table[n as usize],
                BigUint::from(partitions_of(n).count()),
                "p({n})"
            );
        }
    }

    #[test]
    fn frobenius_coordinates() {
        assert_eq!(p(&[2, 1]).frobenius(), (vec![1], vec![1]));
        assert_eq!(Partition::empty().frobenius(), (vec![], vec![]));
        let (a, b) = p(&[5, 4, 2, 2, 1, 1]).frobenius();
        assert_eq!((a.as_slice(), b.as_slice()), (&[4, 2][..], &[5, 2][..]));
        let total: u64 = a.iter().sum::<u64>() + b.iter().sum::<u64>() + a.len() as u64;
        assert_eq!(total, 15);
    }

    #[test]
    fn display_form() {
        assert_eq!(p(&[5, 4, 2, 2, 1, 1]).to_string(), "5,4,2,2,1,1");
        assert_eq!(Partition::empty().to_string(), "-");
    }
}
