//! Exact arithmetic of odd and chiral partitions.
//!
//! A partition is *odd* when the irreducible symmetric-group representation it
//! labels has odd dimension, and *chiral* when that representation has
//! non-trivial determinant. Both properties are governed by dyadic data: the
//! binary expansion of `n` and the 2-core tower of the partition. This crate
//! implements that machinery exactly (no floating point anywhere):
//!
//! - [`partition`]: partitions, hooks, chain counts `f` and `g`, and the
//!   pentagonal-number partition counting table;
//! - [`abacus`]: beta-sets (first-column hook lengths), rim-hook removal and
//!   reconstruction, 2-cores and 2-quotients;
//! - [`tower`]: binary expansions and 2-core towers, including the 2-adic
//!   valuation of dimensions via the tower deviation;
//! - [`classify`]: odd/chiral classification, closed-form and recursive
//!   counting, streaming enumeration, and exact uniform random sampling;
//! - [`hyperoct`]: bipartitions for the hyperoctahedral group, determinants of
//!   its irreducible representations via Solomon's principle, and the
//!   demihyperoctahedral counts;
//! - [`bratteli`]: graded (level-by-level) graphs for Young's graph, its
//!   square, Pascal's graph, and the trees induced by odd-dimensional
//!   representations, with DOT/JSON export;
//! - [`oracle`]: brute-force reference implementations used by the
//!   verification suites.
//!
//! All values are immutable after construction and every operation is a pure
//! function of its inputs, so everything here is safe to call concurrently.

pub mod abacus;
pub mod bratteli;
pub mod classify;
pub mod decimal;
pub mod hyperoct;
pub mod oracle;
pub mod partition;
pub mod tower;

pub use abacus::{add_rim_hook_unique, core2, quotient2, removable_rim_hooks, BetaSet};
pub use classify::{
    count_chiral, count_chiral_by_valuation, count_odd, count_odd_recursive, enumerate_chiral,
    enumerate_odd, is_chiral, is_odd, sample_odd, ChiralClass,
};
pub use hyperoct::{BCharacter, BiPartition, DIrrep};
pub use partition::Partition;
pub use tower::{binary_profile, core_tower2, e2, BinaryProfile, CoreTower};
