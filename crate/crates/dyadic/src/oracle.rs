//! Brute-force reference implementations.
//!
//! Everything here computes the slow, definitional way: chain counts by
//! dynamic programming over Young's graph, rim hooks by walking the diagram,
//! and classifications by exhaustive enumeration. The verification suites
//! compare the fast paths in the other modules against these.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::partition::{partitions_of, Partition};

/// Saturated chain counts `∅ → λ` for all `|λ| ≤ max_n`, by dynamic
/// programming over cover relations. Independent of the hook-length formula.
pub fn chain_counts_from_empty(max_n: u32) -> HashMap<Partition, BigUint> {
    let mut counts = HashMap::new();
    counts.insert(Partition::empty(), BigUint::one());
    propagate(&mut counts, 0, max_n);
    counts
}

/// Saturated chain counts `(1,1) → λ` for all `2 ≤ |λ| ≤ max_n`.
pub fn chain_counts_from_column(max_n: u32) -> HashMap<Partition, BigUint> {
    let mut counts = HashMap::new();
    for lam in partitions_of(2) {
        let seed = if lam.parts() == [1, 1] {
            BigUint::one()
        } else {
            BigUint::zero()
        };
        counts.insert(lam, seed);
    }
    propagate(&mut counts, 2, max_n);
    counts
}

fn propagate(counts: &mut HashMap<Partition, BigUint>, from: u32, max_n: u32) {
    for n in from + 1..=max_n {
        for lam in partitions_of(n) {
            let total = lam
                .covered_by()
                .into_iter()
                .map(|mu| counts.get(&mu).cloned().unwrap_or_default())
                .sum();
            counts.insert(lam, total);
        }
    }
}

/// Rim `h`-hook removals found by walking the diagram: all `μ ⊢ |λ| − h` with
/// `μ ⊆ λ` such that `λ/μ` is a connected border strip containing no 2×2
/// block. The leg-length is the number of rows the strip spans, minus one.
pub fn rim_hooks_by_diagram(lam: &Partition, h: u32) -> Vec<(Partition, u32)> {
    let n = lam.size();
    if n < h as u64 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for mu in partitions_of((n - h as u64) as u32) {
        if let Some(leg) = strip_leg(lam, &mu) {
            out.push((mu, leg));
        }
    }
    out
}

// Checks that lam/mu is a rim hook and returns its leg-length.
fn strip_leg(lam: &Partition, mu: &Partition) -> Option<u32> {
    if mu.len() > lam.len() {
        return None;
    }
    let rows = lam.len();
    if (0..rows).any(|i| mu.part(i) > lam.part(i)) {
        return None;
    }
    let strip_rows: Vec<usize> = (0..rows).filter(|&i| mu.part(i) < lam.part(i)).collect();
    if strip_rows.is_empty() {
        return None;
    }
    // Rows touched by the strip must be contiguous.
    let (&first, &last) = (strip_rows.first().unwrap(), strip_rows.last().unwrap());
    if strip_rows.len() != last - first + 1 {
        return None;
    }
    // Connected with no 2×2 block: consecutive rows of the strip overlap in
    // exactly one column.
    for i in first + 1..=last {
        if mu.part(i - 1) + 1 != lam.part(i) {
            return None;
        }
    }
    Some((last - first) as u32)
}

/// All partitions of `n` with odd dimension, by exact hook-length dimensions.
pub fn odd_partitions_brute(n: u32) -> Vec<Partition> {
    partitions_of(n).filter(|lam| lam.dim_f().bit(0)).collect()
}

/// All chiral partitions of `n`, by exact chain counts `g_λ`.
pub fn chiral_partitions_brute(n: u32) -> Vec<Partition> {
    partitions_of(n)
        .filter(|lam| lam.g_count().bit(0))
        .collect()
}
