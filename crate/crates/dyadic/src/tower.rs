//! Binary expansions and 2-core towers.
//!
//! The 2-core tower of a partition records, row by row, the 2-cores produced
//! by recursively splitting off 2-quotients: row 0 holds the 2-core of `λ`
//! itself, and row `i+1` holds the cores of the quotient components of the
//! row-`i` entries, so row `i` has `2^i` entries. Every entry is a staircase
//! `(k, k−1, …, 1)` and is stored by its side length `k`.
//!
//! The row weights satisfy `Σ_i w_i(λ) 2^i = |λ|`, and the deviation
//! `e₂(λ) = w(λ) − ν(|λ|)` equals the 2-adic valuation of the dimension `f_λ`.

use crate::abacus::{core2, quotient2};
use crate::partition::Partition;

/// The binary expansion of `n`: set bit positions, their count `ν(n)`, and
/// the 2-adic valuation (`None` for `n = 0`, which is infinitely divisible).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinaryProfile {
    pub n: u64,
    pub bits: Vec<u32>,
    pub nu: u32,
    pub v2: Option<u32>,
}

pub fn binary_profile(n: u64) -> BinaryProfile {
    let bits: Vec<u32> = (0..64).filter(|&k| n >> k & 1 == 1).collect();
    BinaryProfile {
        n,
        nu: bits.len() as u32,
        v2: bits.first().copied(),
        bits,
    }
}

/// Number of ones in the binary expansion.
pub fn nu(n: u64) -> u32 {
    n.count_ones()
}

/// 2-adic valuation; `None` for 0.
pub fn v2(n: u64) -> Option<u32> {
    (n != 0).then(|| n.trailing_zeros())
}

/// The 2-core tower of a partition. Rows list staircase side lengths, so the
/// entry `k` stands for the 2-core `(k, k−1, …, 1)` of size `k(k+1)/2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreTower {
    rows: Vec<Vec<u32>>,
    row_weights: Vec<u64>,
    total_weight: u64,
}

impl CoreTower {
    /// Rows of staircase side lengths; row `i` has `2^i` entries. Rows are
    /// listed until the recursion is exhausted, so trailing rows of a
    /// non-empty tower carry non-zero weight only while quotients remain.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// `w_i(λ)`: the total number of cells in row `i`.
    pub fn row_weights(&self) -> &[u64] {
        &self.row_weights
    }

    /// `w(λ) = Σ_i w_i(λ)`.
    pub fn total_weight(&self) -> u64 {
        self.total_weight
    }
}

fn staircase_side(core: &Partition) -> u32 {
    let k = core.len() as u32;
    debug_assert!(
        core.parts()
            .iter()
            .enumerate()
            .all(|(i, &p)| p == k - i as u32),
        "2-core must be a staircase, got {core}"
    );
    k
}

pub fn core_tower2(p: &Partition) -> CoreTower {
    let mut rows = Vec::new();
    let mut row_weights = Vec::new();
    let mut level = vec![p.clone()];
    while level.iter().any(|q| !q.is_empty()) {
        let mut sides = Vec::with_capacity(level.len());
        let mut weight = 0u64;
        let mut next = Vec::with_capacity(level.len() * 2);
        for q in &level {
            let core = core2(q);
            weight += core.size();
            sides.push(staircase_side(&core));
            let (a, b) = quotient2(q);
            next.push(a);
            next.push(b);
        }
        rows.push(sides);
        row_weights.push(weight);
        level = next;
    }
    CoreTower {
        total_weight: row_weights.iter().sum(),
        rows,
        row_weights,
    }
}

/// The 2-deviation `e₂(λ) = w(λ) − ν(|λ|)`, which equals `v₂(f_λ)`.
pub fn e2(p: &Partition) -> u64 {
    let w = core_tower_weight(p);
    let nu = nu(p.size()) as u64;
    debug_assert!(w >= nu);
    w - nu
}

// Total tower weight without materializing the rows.
fn core_tower_weight(p: &Partition) -> u64 {
    if p.is_empty() {
        return 0;
    }
    let core = core2(p);
    let (a, b) = quotient2(p);
    core.size() + core_tower_weight(&a) + core_tower_weight(&b)
}
