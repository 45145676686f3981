//! Browser bindings for the interactive demo page in `www/`.
//!
//! Three operations are exposed: uniform random sampling (rendered as Young
//! diagrams), graded-tree construction (rendered level by level), and the
//! growth data behind the odd-versus-chiral comparison plot. Everything is
//! computed exactly on the wasm side; the page only draws.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use dyadic::bratteli::{build_hyper_macdonald, build_macdonald, build_pascal};
use dyadic::classify::{
    enumerate_chiral, is_chiral, sample_odd_with_rng, DEFAULT_CHIRAL_THRESHOLD,
};
use dyadic::decimal::ratio_to_f64;
use dyadic::hyperoct::sample_odd_bipartition_with_rng;
use dyadic::partition::Partition;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

#[derive(Serialize)]
struct PartitionDto {
    text: String,
    parts: Vec<u32>,
    frobenius: (Vec<u64>, Vec<u64>),
    odd: bool,
    chiral: bool,
}

impl PartitionDto {
    fn of(lam: &Partition) -> PartitionDto {
        PartitionDto {
            text: lam.to_string(),
            parts: lam.parts().to_vec(),
            frobenius: lam.frobenius(),
            odd: dyadic::classify::is_odd(lam),
            chiral: is_chiral(lam),
        }
    }
}

#[derive(Serialize)]
struct SampleDto {
    kind: String,
    n: u32,
    seed: u64,
    components: Vec<PartitionDto>,
}

/// Draws one uniform sample. Kinds: `odd` (any n), `chiral` (full support,
/// bounded by the fallback threshold), `odd-chiral` (any n), and
/// `odd-bipartition` (any n). Returns JSON.
#[wasm_bindgen]
pub fn sample_json(kind: &str, n: u32, seed: u64) -> Result<String, JsError> {
    sample_impl(kind, n, seed).map_err(|e| JsError::new(&e))
}

fn sample_impl(kind: &str, n: u32, seed: u64) -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let components = match kind {
        "odd" => vec![PartitionDto::of(&sample_odd_with_rng(n, &mut rng))],
        "odd-chiral" => {
            if n < 2 {
                return Err("no chiral partitions below n = 2".to_string());
            }
            let lam = loop {
                let lam = sample_odd_with_rng(n, &mut rng);
                if is_chiral(&lam) {
                    break lam;
                }
            };
            vec![PartitionDto::of(&lam)]
        }
        "chiral" => {
            if n < 2 {
                return Err("no chiral partitions below n = 2".to_string());
            }
            if n > DEFAULT_CHIRAL_THRESHOLD {
                return Err(
                    "full-support chiral sampling is enumeration-backed and capped at n = 40; \
                     use odd-chiral for large n"
                        .to_string(),
                );
            }
            let all: Vec<Partition> = enumerate_chiral(n).collect();
            let idx = (rng.next_u64() % all.len() as u64) as usize;
            vec![PartitionDto::of(&all[idx])]
        }
        "odd-bipartition" => {
            let bp = sample_odd_bipartition_with_rng(n, &mut rng);
            vec![PartitionDto::of(&bp.alpha), PartitionDto::of(&bp.beta)]
        }
        other => return Err(format!("unknown sample kind `{other}`")),
    };
    let dto = SampleDto {
        kind: kind.to_string(),
        n,
        seed,
        components,
    };
    Ok(serde_json::to_string(&dto).expect("serializable"))
}

/// Builds a tree and returns its graph JSON (levels, nodes with hook and
/// dimension annotations, edges). Which: `macdonald` (N ≤ 24),
/// `hyper-macdonald` (N ≤ 12), `pascal` (N ≤ 64, odd pairs only).
#[wasm_bindgen]
pub fn tree_json(which: &str, max_rank: u32) -> Result<String, JsError> {
    tree_impl(which, max_rank).map_err(|e| JsError::new(&e))
}

fn tree_impl(which: &str, max_rank: u32) -> Result<String, String> {
    let graph = match which {
        "macdonald" => {
            if max_rank > 24 {
                return Err("macdonald demo is capped at rank 24".to_string());
            }
            build_macdonald(max_rank).to_json()
        }
        "hyper-macdonald" => {
            if max_rank > 12 {
                return Err("hyper-macdonald demo is capped at rank 12".to_string());
            }
            build_hyper_macdonald(max_rank).to_json()
        }
        "pascal" => {
            if max_rank > 64 {
                return Err("pascal demo is capped at rank 64".to_string());
            }
            build_pascal(max_rank).induced_odd().to_json()
        }
        other => return Err(format!("unknown tree `{other}`")),
    };
    Ok(graph)
}

#[derive(Serialize)]
struct GrowthRow {
    n: u64,
    odd: String,
    chiral_shifted: String,
    log10_odd: f64,
    log10_chiral_shifted: f64,
    ratio: f64,
}

/// Rows `(n, a(n), b(n+2))` with decimal logs for the comparison plot.
/// Capped at N = 512.
#[wasm_bindgen]
pub fn growth_json(max_n: u64) -> Result<String, JsError> {
    growth_impl(max_n).map_err(|e| JsError::new(&e))
}

fn growth_impl(max_n: u64) -> Result<String, String> {
    if max_n > 512 {
        return Err("growth demo is capped at N = 512".to_string());
    }
    let one = num_bigint::BigUint::from(1u32);
    let rows: Vec<GrowthRow> = (1..=max_n)
        .map(|n| {
            let a = dyadic::classify::count_odd(n);
            let b = dyadic::classify::count_chiral(n + 2).expect("n + 2 > 0");
            GrowthRow {
                n,
                odd: a.to_string(),
                chiral_shifted: b.to_string(),
                log10_odd: ratio_to_f64(&a, &one).log10(),
                log10_chiral_shifted: ratio_to_f64(&b, &one).log10(),
                ratio: ratio_to_f64(&a, &b),
            }
        })
        .collect();
    Ok(serde_json::to_string(&rows).expect("serializable"))
}
