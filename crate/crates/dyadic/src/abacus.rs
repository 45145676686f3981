//! Beta-sets and the abacus model for rim-hook calculus.
//!
//! A beta-set of length `L` for a partition lists `λ_i + L − i` for
//! `i = 1, …, L` (parts beyond the last row count as 0): the first-column hook
//! lengths of the diagram padded with empty rows. Removing a rim `h`-hook is a
//! single bead move `b → b − h`, and the leg-length of the removed hook is the
//! number of beads strictly between the old and new positions.
//!
//! The 2-quotient convention used throughout the crate: the beta-set length is
//! always even, runner `r` collects the beads congruent to `r` mod 2, and the
//! quotient pair is `(runner 0, runner 1)`.

use thiserror::Error;

use crate::partition::Partition;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HookError {
    #[error("leg {leg} out of range for hook size {hook}")]
    LegOutOfRange { hook: u32, leg: u32 },
    #[error("core of size {core} is not smaller than the hook size {hook}")]
    CoreTooLarge { core: u64, hook: u32 },
}

/// A beta-set: strictly decreasing distinct non-negative bead positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetaSet {
    beads: Vec<u64>,
}

impl BetaSet {
    /// The beta-set of `p` with `length` beads; `length ≥ p.len()` required.
    pub fn of(p: &Partition, length: usize) -> BetaSet {
        assert!(
            length >= p.len(),
            "beta-set length {length} shorter than partition with {} parts",
            p.len()
        );
        let beads = (0..length)
            .map(|i| p.part(i) as u64 + (length - 1 - i) as u64)
            .collect();
        BetaSet { beads }
    }

    pub fn from_beads(mut beads: Vec<u64>) -> BetaSet {
        beads.sort_unstable_by(|a, b| b.cmp(a));
        assert!(
            beads.windows(2).all(|w| w[0] > w[1]),
            "beads must be distinct"
        );
        BetaSet { beads }
    }

    pub fn beads(&self) -> &[u64] {
        &self.beads
    }

    pub fn len(&self) -> usize {
        self.beads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.beads.is_empty()
    }

    pub fn contains(&self, bead: u64) -> bool {
        self.beads.binary_search_by(|x| bead.cmp(x)).is_ok()
    }

    /// Number of beads strictly between `lo` and `hi`.
    fn count_between(&self, lo: u64, hi: u64) -> u32 {
        self.beads.iter().filter(|&&b| lo < b && b < hi).count() as u32
    }

    pub fn to_partition(&self) -> Partition {
        let l = self.beads.len();
        let parts: Vec<u32> = self
            .beads
            .iter()
            .enumerate()
            .map(|(i, &b)| (b - (l - 1 - i) as u64) as u32)
            .filter(|&p| p > 0)
            .collect();
        Partition::new(parts)
    }
}

/// All ways to remove one rim hook of size `h` from `p`, each with the
/// leg-length of the removed hook. Empty when no rim `h`-hook exists.
pub fn removable_rim_hooks(p: &Partition, h: u32) -> Vec<(Partition, u32)> {
    assert!(h >= 1);
    let beta = BetaSet::of(p, p.len());
    let h = h as u64;
    let mut out = Vec::new();
    for &b in beta.beads() {
        if b >= h && !beta.contains(b - h) {
            let leg = beta.count_between(b - h, b);
            let beads = beta
                .beads()
                .iter()
                .map(|&x| if x == b { b - h } else { x })
                .collect();
            out.push((BetaSet::from_beads(beads).to_partition(), leg));
        }
    }
    out
}

/// The unique partition of `|core| + h` whose `h`-core is `core` and whose
/// single rim `h`-hook has the given leg-length.
///
/// Requires `|core| < h` (so `core` is trivially an `h`-core) and
/// `0 ≤ leg < h`; inverse to [`removable_rim_hooks`] on such inputs.
pub fn add_rim_hook_unique(core: &Partition, h: u32, leg: u32) -> Result<Partition, HookError> {
    if leg >= h {
        return Err(HookError::LegOutOfRange { hook: h, leg });
    }
    if core.size() >= h as u64 {
        return Err(HookError::CoreTooLarge {
            core: core.size(),
            hook: h,
        });
    }
    // With h extra beads of padding the bottom h positions 0..h−1 are all
    // occupied, so every runner of the h-runner abacus has a movable top bead;
    // the h candidate moves realize each leg in 0..h exactly once.
    let beta = BetaSet::of(core, core.len() + h as usize);
    let h64 = h as u64;
    let mut found = None;
    for &b in beta.beads() {
        if !beta.contains(b + h64) && beta.count_between(b, b + h64) == leg {
            assert!(found.is_none(), "leg {leg} matched twice for hook {h}");
            found = Some(b);
        }
    }
    let b = found.expect("every leg in 0..h is realized exactly once");
    let beads = beta
        .beads()
        .iter()
        .map(|&x| if x == b { b + h64 } else { x })
        .collect();
    Ok(BetaSet::from_beads(beads).to_partition())
}

fn two_runners(p: &Partition) -> [Vec<u64>; 2] {
    let len = p.len() + (p.len() % 2);
    let beta = BetaSet::of(p, len);
    let mut runners: [Vec<u64>; 2] = [Vec::new(), Vec::new()];
    for &b in beta.beads() {
        runners[(b % 2) as usize].push(b / 2);
    }
    runners
}

/// The 2-core of `p`: the staircase left after removing rim 2-hooks greedily.
pub fn core2(p: &Partition) -> Partition {
    let runners = two_runners(p);
    let mut beads: Vec<u64> = Vec::new();
    for (r, runner) in runners.iter().enumerate() {
        beads.extend((0..runner.len() as u64).map(|q| 2 * q + r as u64));
    }
    BetaSet::from_beads(beads).to_partition()
}

/// The 2-quotient `(α, β)` of `p` under the crate's runner convention.
pub fn quotient2(p: &Partition) -> (Partition, Partition) {
    let runners = two_runners(p);
    let comp = |runner: &Vec<u64>| BetaSet::from_beads(runner.clone()).to_partition();
    (comp(&runners[0]), comp(&runners[1]))
}

/// Rebuilds the unique partition with the given 2-core and 2-quotient;
/// inverse to [`core2`] and [`quotient2`].
pub fn from_core_quotient2(core: &Partition, alpha: &Partition, beta: &Partition) -> Partition {
    let mut len = core.len() + (core.len() % 2);
    // Growing the beta-set by two adds one bead to each runner.
    let runner_count = |len: usize, r: u64| -> usize {
        BetaSet::of(core, len)
            .beads()
            .iter()
            .filter(|&&b| b % 2 == r)
            .count()
    };
    loop {
        if runner_count(len, 0) >= alpha.len() && runner_count(len, 1) >= beta.len() {
            break;
        }
        len += 2;
    }
    let mut beads = Vec::with_capacity(len);
    for (r, comp) in [alpha, beta].into_iter().enumerate() {
        let n_r = runner_count(len, r as u64);
        for &q in BetaSet::of(comp, n_r).beads() {
            beads.push(2 * q + r as u64);
        }
    }
    BetaSet::from_beads(beads).to_partition()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn beta_set_round_trip() {
        let lam = p(&[5, 4, 2, 2, 1, 1]);
        for pad in 0..5 {
            let beta = BetaSet::of(&lam, lam.len() + pad);
            assert_eq!(beta.to_partition(), lam);
        }
        assert_eq!(
            BetaSet::of(&lam, 6).beads(),
            &[10, 8, 5, 4, 2, 1],
            "first-column hooks at minimal length"
        );
    }

    #[test]
    fn unique_rim_8_hook_of_fig4_partition() {
        // The size-8 rim hook of (5,4,2,2,1,1) is unique; removing it leaves
        // (5,1,1) with leg-length 4 (the hook spans rows 2 through 6).
        let hooks = removable_rim_hooks(&p(&[5, 4, 2, 2, 1, 1]), 8);
        assert_eq!(hooks, vec![(p(&[5, 1, 1]), 4)]);
    }

    #[test]
    fn no_rim_hook_in_single_cell() {
        assert!(removable_rim_hooks(&p(&[1]), 2).is_empty());
    }

    #[test]
    fn rim_2_hooks_of_square() {
        let hooks = removable_rim_hooks(&p(&[2, 2]), 2);
        assert_eq!(hooks.len(), 2);
        assert!(hooks.contains(&(p(&[2]), 0)));
        assert!(hooks.contains(&(p(&[1, 1]), 1)));
    }

    #[test]
    fn add_hook_to_empty() {
        assert_eq!(add_rim_hook_unique(&Partition::empty(), 2, 0), Ok(p(&[2])));
        assert_eq!(
            add_rim_hook_unique(&Partition::empty(), 2, 1),
            Ok(p(&[1, 1]))
        );
    }

    #[test]
    fn add_hook_to_one_cell() {
        // Among partitions of 3, only (3) and (1,1,1) have a 2-hook with core
        // (1); legs 0 and 1 respectively. (2,1) is its own 2-core.
        assert_eq!(add_rim_hook_unique(&p(&[1]), 2, 0), Ok(p(&[3])));
        assert_eq!(add_rim_hook_unique(&p(&[1]), 2, 1), Ok(p(&[1, 1, 1])));
        assert!(removable_rim_hooks(&p(&[2, 1]), 2).is_empty());
    }

    #[test]
    fn add_hook_errors() {
        assert_eq!(
            add_rim_hook_unique(&p(&[1]), 2, 2),
            Err(HookError::LegOutOfRange { hook: 2, leg: 2 })
        );
        assert_eq!(
            add_rim_hook_unique(&p(&[2, 1]), 2, 0),
            Err(HookError::CoreTooLarge { core: 3, hook: 2 })
        );
    }

    #[test]
    fn fig4_reconstruction_by_successive_hooks() {
        // (5,4,2,1,1,1) reduces to the empty 2-core by removing rim hooks of
        // sizes 8, 4, 2 with legs 4, 0, 1; adding them back in reverse order
        // rebuilds it.
        let mut lam = Partition::empty();
        for (h, leg) in [(2, 1), (4, 0), (8, 4)] {
            lam = add_rim_hook_unique(&lam, h, leg).unwrap();
        }
        assert_eq!(lam, p(&[5, 4, 2, 1, 1, 1]));
    }

    #[test]
    fn cores_of_fig4_partitions() {
        assert_eq!(core2(&p(&[5, 4, 2, 2, 1, 1])), p(&[1]));
        assert_eq!(core2(&p(&[5, 4, 2, 1, 1, 1])), Partition::empty());
        assert_eq!(core2(&p(&[2, 1])), p(&[2, 1]));
        assert_eq!(
            quotient2(&p(&[2, 1])),
            (Partition::empty(), Partition::empty())
        );
    }

    #[test]
    fn quotient_weight_identity() {
        for n in 0..=12u32 {
            for lam in crate::partition::partitions_of(n) {
                let core = core2(&lam);
                let (a, b) = quotient2(&lam);
                assert_eq!(
                    lam.size(),
                    core.size() + 2 * (a.size() + b.size()),
                    "weight identity for {lam}"
                );
                assert_eq!(
                    from_core_quotient2(&core, &a, &b),
                    lam,
                    "round trip for {lam}"
                );
            }
        }
    }

    #[test]
    fn legs_biject_with_hook_additions() {
        // For any core smaller than h, every leg in 0..h yields a distinct
        // partition whose unique h-hook recovers the pair.
        for core in crate::partition::partitions_of(5) {
            let h = 8u32;
            let mut seen = std::collections::HashSet::new();
            for leg in 0..h {
                let lam = add_rim_hook_unique(&core, h, leg).unwrap();
                assert!(seen.insert(lam.clone()));
                let hooks = removable_rim_hooks(&lam, h);
                assert_eq!(hooks, vec![(core.clone(), leg)]);
            }
        }
    }
}
