//! Command-line front end: counting tables, enumeration, sampling, tree
//! export with verification, CSV emitters for growth/determinant figures,
//! and the brute-force verification suites.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or range error.

mod output;
mod verify;

use std::fmt;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use serde::Deserialize;

use dyadic::bratteli::{
    build_hyper_macdonald, build_macdonald, build_pascal, build_y2, build_y2d, build_young,
    find_split_twin_cycles, GraphPayload, LeveledGraph,
};
use dyadic::classify::{
    count_chiral, count_chiral_by_valuation, count_odd, enumerate_chiral, enumerate_odd,
    ratio_bounds_check, sample_odd_with_rng, DEFAULT_CHIRAL_THRESHOLD,
};
use dyadic::decimal::ratio_to_f64;
use dyadic::hyperoct::{
    count_det_d_sgn, count_odd_bipartitions, det_b_table, enumerate_odd_bipartitions, irr_count_d,
    p2, sample_odd_bipartition_with_rng,
};
use dyadic::partition::Partition;

use output::{Record, Sink};

#[derive(Parser)]
#[command(
    name = "dyadic",
    about = "Exact arithmetic of odd and chiral partitions, hyperoctahedral determinants, and Macdonald trees",
    version
)]
struct Cli {
    /// Output format (tree export accepts dot/json; figures emit csv)
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for the sampling commands; identical seeds reproduce output
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Optional TOML config file (`chiral_fallback_threshold = <n>`)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Jsonl,
    Csv,
    Dot,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Group {
    Sym,
    Hyp,
    Demi,
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::Sym => "sym",
            Group::Hyp => "hyp",
            Group::Demi => "demi",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Odd,
    Chiral,
    DetTable,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Odd => "odd",
            Kind::Chiral => "chiral",
            Kind::DetTable => "det-table",
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Macdonald,
    HyperMacdonald,
    Pascal,
    Young,
    Y2,
    Y2d,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Figure {
    Growth,
    BnPlot,
}

#[derive(Subcommand)]
enum Command {
    /// Counting formulas: odd/chiral partition counts and determinant tables
    Count {
        group: Group,
        kind: Kind,
        n: u64,
        /// Count only chiral partitions with this 2-adic dimension valuation
        #[arg(long)]
        valuation: Option<u32>,
    },
    /// Uniform random objects, deterministic in the seed
    Sample {
        group: Group,
        kind: Kind,
        n: u32,
        /// Number of samples to draw
        #[arg(long, default_value_t = 1)]
        count: u32,
        /// Print partitions in Frobenius coordinates
        #[arg(long)]
        frobenius: bool,
        /// Restrict chiral sampling to the odd chiral family (exact at any n)
        #[arg(long)]
        clause1: bool,
    },
    /// Stream every object of the requested family, one per line
    Enumerate { group: Group, kind: Kind, n: u32 },
    /// Export a graded graph (DOT or JSON), optionally verifying its shape
    Tree {
        which: Which,
        n: u32,
        /// Check tree/counting claims and print a verdict block
        #[arg(long)]
        verify: bool,
    },
    /// CSV data behind the growth and determinant-count figures
    Figures { which: Figure, n: u64 },
    /// Run the brute-force verification suites
    Verify {
        /// Bound for the exhaustive scans
        #[arg(long, default_value_t = 16)]
        max_n: u64,
        /// Comma-separated suite names (default: all); see `verify --help`
        #[arg(long, value_delimiter = ',')]
        suites: Vec<String>,
    },
}

#[derive(Debug)]
enum CliError {
    Usage(String),
    Verification(String),
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Verification(msg) => write!(f, "{msg}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e)
    }
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Verification(_) => 1,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Deserialize, Default)]
struct Config {
    chiral_fallback_threshold: Option<u32>,
}

fn load_config(path: Option<&PathBuf>) -> Result<Config, CliError> {
    match path {
        None => Ok(Config::default()),
        Some(path) => {
            let text = std::fs::read_to_string(path)?;
            toml::from_str(&text).map_err(|e| usage(format!("bad config file: {e}")))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.code())
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    let config = load_config(cli.config.as_ref())?;
    let threshold = config
        .chiral_fallback_threshold
        .unwrap_or(DEFAULT_CHIRAL_THRESHOLD);
    let mut sink = Sink::open(cli.out.as_ref())?;
    match cli.command {
        Command::Count {
            group,
            kind,
            n,
            valuation,
        } => cmd_count(&mut sink, cli.format, group, kind, n, valuation)?,
        Command::Sample {
            group,
            kind,
            n,
            count,
            frobenius,
            clause1,
        } => cmd_sample(
            &mut sink, cli.format, group, kind, n, count, frobenius, clause1, cli.seed, threshold,
        )?,
        Command::Enumerate { group, kind, n } => {
            cmd_enumerate(&mut sink, cli.format, group, kind, n, threshold)?
        }
        Command::Tree { which, n, verify } => cmd_tree(&mut sink, cli.format, which, n, verify)?,
        Command::Figures { which, n } => cmd_figures(&mut sink, cli.format, which, n)?,
        Command::Verify { max_n, suites } => {
            verify::cmd_verify(&mut sink, max_n, &suites, cli.seed)?
        }
    }
    sink.finish()?;
    Ok(())
}

fn emit_count(sink: &mut Sink, format: Format, record: Record, text: &str) -> Result<(), CliError> {
    match format {
        Format::Jsonl => sink.line(record.to_line())?,
        _ => sink.line(text)?,
    }
    Ok(())
}

fn cmd_count(
    sink: &mut Sink,
    format: Format,
    group: Group,
    kind: Kind,
    n: u64,
    valuation: Option<u32>,
) -> Result<(), CliError> {
    match (group, kind) {
        (Group::Sym, Kind::Odd) => {
            let a = count_odd(n);
            let record = Record::new("count")
                .param("group", "sym")
                .param("kind", "odd")
                .param("n", n)
                .payload(a.to_string());
            emit_count(sink, format, record, &a.to_string())
        }
        (Group::Sym, Kind::Chiral) => {
            let value = match valuation {
                None => count_chiral(n).map_err(|e| usage(format!("count sym chiral {n}: {e}")))?,
                Some(v) => {
                    if n == 0 {
                        return Err(usage("count sym chiral 0: undefined for n = 0"));
                    }
                    count_chiral_by_valuation(n, v)
                }
            };
            let mut record = Record::new("count")
                .param("group", "sym")
                .param("kind", "chiral")
                .param("n", n);
            if let Some(v) = valuation {
                record = record.param("valuation", v);
            }
            emit_count(
                sink,
                format,
                record.payload(value.to_string()),
                &value.to_string(),
            )
        }
        (Group::Hyp, Kind::Odd) => {
            let a2 = count_odd_bipartitions(n);
            let record = Record::new("count")
                .param("group", "hyp")
                .param("kind", "odd")
                .param("n", n)
                .payload(a2.to_string());
            emit_count(sink, format, record, &a2.to_string())
        }
        (Group::Hyp, Kind::DetTable) => {
            let [n1, ne, n0, ns1] =
                det_b_table(n).map_err(|e| usage(format!("count hyp det-table {n}: {e}")))?;
            let total = p2(n);
            match format {
                Format::Jsonl => {
                    let record = Record::new("count")
                        .param("group", "hyp")
                        .param("kind", "det-table")
                        .param("n", n)
                        .payload(serde_json::json!({
                            "N1": n1.to_string(),
                            "Neps": ne.to_string(),
                            "Nsgn0": n0.to_string(),
                            "Nsgn1": ns1.to_string(),
                            "p2": total.to_string(),
                        }));
                    sink.line(record.to_line())?;
                }
                Format::Csv => {
                    sink.line("n,N1,Neps,Nsgn0,Nsgn1")?;
                    sink.line(format!("{n},{n1},{ne},{n0},{ns1}"))?;
                }
                _ => {
                    sink.line(format!("N1 = {n1}"))?;
                    sink.line(format!("Neps = {ne}"))?;
                    sink.line(format!("Nsgn0 = {n0}"))?;
                    sink.line(format!("Nsgn1 = {ns1}"))?;
                    sink.line(format!("p2 = {total}"))?;
                }
            }
            Ok(())
        }
        (Group::Demi, Kind::DetTable) => {
            let sgn =
                count_det_d_sgn(n).map_err(|e| usage(format!("count demi det-table {n}: {e}")))?;
            let irr = irr_count_d(n);
            let trivial = &irr - &sgn;
            match format {
                Format::Jsonl => {
                    let record = Record::new("count")
                        .param("group", "demi")
                        .param("kind", "det-table")
                        .param("n", n)
                        .payload(serde_json::json!({
                            "N1": trivial.to_string(),
                            "Nsgn": sgn.to_string(),
                            "irr": irr.to_string(),
                        }));
                    sink.line(record.to_line())?;
                }
                Format::Csv => {
                    sink.line("n,N1,Nsgn")?;
                    sink.line(format!("{n},{trivial},{sgn}"))?;
                }
                _ => {
                    sink.line(format!("N1 = {trivial}"))?;
                    sink.line(format!("Nsgn = {sgn}"))?;
                    sink.line(format!("irr = {irr}"))?;
                }
            }
            Ok(())
        }
        (group, kind) => Err(usage(format!(
            "count {group} {kind} is not a supported combination"
        ))),
    }
}

fn partition_text(lam: &Partition, frobenius: bool) -> String {
    if frobenius {
        let (arms, legs) = lam.frobenius();
        let fmt_list = |xs: &[u64]| {
            let items: Vec<String> = xs.iter().map(u64::to_string).collect();
            format!("[{}]", items.join(", "))
        };
        format!("({}, {})", fmt_list(&arms), fmt_list(&legs))
    } else {
        lam.to_string()
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_sample(
    sink: &mut Sink,
    format: Format,
    group: Group,
    kind: Kind,
    n: u32,
    count: u32,
    frobenius: bool,
    clause1: bool,
    seed: u64,
    threshold: u32,
) -> Result<(), CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for index in 0..count {
        let text = match (group, kind) {
            (Group::Sym, Kind::Odd) => partition_text(&sample_odd_with_rng(n, &mut rng), frobenius),
            (Group::Sym, Kind::Chiral) => {
                if clause1 {
                    let lam = sample_odd_chiral_with_rng(n, &mut rng)
                        .map_err(|e| usage(format!("sample sym chiral {n}: {e}")))?;
                    partition_text(&lam, frobenius)
                } else if n > threshold {
                    return Err(usage(format!(
                        "sample sym chiral {n}: full-support sampling exceeds the fallback \
                         threshold {threshold}; raise `chiral_fallback_threshold` in the config \
                         file or pass --clause1 (odd chiral partitions are sampled exactly at \
                         any n)"
                    )));
                } else if n < 2 {
                    return Err(usage(format!(
                        "sample sym chiral {n}: no chiral partitions exist"
                    )));
                } else {
                    let all: Vec<Partition> = enumerate_chiral(n).collect();
                    let idx = sample_index(&mut rng, all.len());
                    partition_text(&all[idx], frobenius)
                }
            }
            (Group::Hyp, Kind::Odd) => {
                if frobenius {
                    return Err(usage("--frobenius applies to partitions, not bipartitions"));
                }
                sample_odd_bipartition_with_rng(n, &mut rng).to_string()
            }
            (group, kind) => {
                return Err(usage(format!(
                    "sample {group} {kind} is not a supported combination"
                )))
            }
        };
        match format {
            Format::Jsonl => {
                let record = Record::new("sample")
                    .param("group", group.to_string())
                    .param("kind", kind.to_string())
                    .param("n", n)
                    .param("seed", seed)
                    .param("index", index)
                    .payload(text);
                sink.line(record.to_line())?;
            }
            _ => sink.line(&text)?,
        }
    }
    Ok(())
}

// Rejection sampling over the odd family; exactly half of the odd partitions
// of n ≥ 2 are chiral.
fn sample_odd_chiral_with_rng(
    n: u32,
    rng: &mut ChaCha8Rng,
) -> Result<Partition, dyadic::classify::SampleError> {
    if n < 2 {
        return Err(dyadic::classify::SampleError::NoSupport(n));
    }
    loop {
        let lam = sample_odd_with_rng(n, rng);
        if dyadic::classify::is_chiral(&lam) {
            return Ok(lam);
        }
    }
}

fn sample_index(rng: &mut ChaCha8Rng, len: usize) -> usize {
    use rand_core::RngCore;
    assert!(len > 0);
    let bound = len as u64;
    let range = u64::MAX as u128 + 1;
    let cutoff = range - range % bound as u128;
    loop {
        let x = rng.next_u64();
        if (x as u128) < cutoff {
            return (x % bound) as usize;
        }
    }
}

fn cmd_enumerate(
    sink: &mut Sink,
    format: Format,
    group: Group,
    kind: Kind,
    n: u32,
    threshold: u32,
) -> Result<(), CliError> {
    let items: Box<dyn Iterator<Item = String>> = match (group, kind) {
        (Group::Sym, Kind::Odd) => {
            if n > 64 {
                return Err(usage(format!("enumerate sym odd {n}: bound is n ≤ 64")));
            }
            Box::new(enumerate_odd(n).map(|p| p.to_string()))
        }
        (Group::Sym, Kind::Chiral) => {
            if n > threshold {
                return Err(usage(format!(
                    "enumerate sym chiral {n}: bound is the fallback threshold {threshold}"
                )));
            }
            Box::new(enumerate_chiral(n).map(|p| p.to_string()))
        }
        (Group::Hyp, Kind::Odd) => {
            if n > 32 {
                return Err(usage(format!("enumerate hyp odd {n}: bound is n ≤ 32")));
            }
            Box::new(enumerate_odd_bipartitions(n).map(|bp| bp.to_string()))
        }
        (group, kind) => {
            return Err(usage(format!(
                "enumerate {group} {kind} is not a supported combination"
            )))
        }
    };
    for (index, text) in items.enumerate() {
        match format {
            Format::Jsonl => {
                let record = Record::new("enumerate")
                    .param("group", group.to_string())
                    .param("kind", kind.to_string())
                    .param("n", n)
                    .param("index", index)
                    .payload(text);
                sink.line(record.to_line())?;
            }
            _ => sink.line(&text)?,
        }
    }
    Ok(())
}

fn export_graph<P: GraphPayload>(
    sink: &mut Sink,
    format: Format,
    graph: &LeveledGraph<P>,
) -> Result<(), CliError> {
    match format {
        Format::Text | Format::Dot => sink.line(graph.to_dot().trim_end())?,
        Format::Json | Format::Jsonl => sink.line(graph.to_json())?,
        Format::Csv => return Err(usage("tree export supports --format dot or json")),
    }
    Ok(())
}

fn check(sink: &mut Sink, failures: &mut u32, ok: bool, what: &str) -> Result<(), CliError> {
    if ok {
        sink.line(format!("  ok   {what}"))?;
    } else {
        *failures += 1;
        sink.line(format!("  FAIL {what}"))?;
    }
    Ok(())
}

fn cmd_tree(
    sink: &mut Sink,
    format: Format,
    which: Which,
    n: u32,
    verify: bool,
) -> Result<(), CliError> {
    let bound = |limit: u32, name: &str| -> Result<(), CliError> {
        if n > limit {
            Err(usage(format!("tree {name} {n}: bound is N ≤ {limit}")))
        } else {
            Ok(())
        }
    };
    match which {
        Which::Macdonald => {
            bound(70, "macdonald")?;
            let m = build_macdonald(n);
            if verify {
                verify_macdonald_like(sink, &m, n, MacdonaldKind::Symmetric)
            } else {
                export_graph(sink, format, &m)
            }
        }
        Which::HyperMacdonald => {
            bound(34, "hyper-macdonald")?;
            let m2 = build_hyper_macdonald(n);
            if verify {
                verify_macdonald_like(sink, &m2, n, MacdonaldKind::Hyperoctahedral)
            } else {
                export_graph(sink, format, &m2)
            }
        }
        Which::Pascal => {
            bound(128, "pascal")?;
            let l = build_pascal(n).induced_odd();
            if verify {
                let mut failures = 0;
                sink.line(format!("pascal odd subgraph through rank {n}"))?;
                sink.line("  n  l(n)  2^nu(n)")?;
                for (rank, &size) in l.level_sizes().iter().enumerate() {
                    let expected = 1u64 << (rank as u64).count_ones();
                    sink.line(format!("  {rank}  {size}  {expected}"))?;
                    if size as u64 != expected {
                        failures += 1;
                    }
                }
                check(
                    sink,
                    &mut failures,
                    l.is_tree().is_tree,
                    "odd Pascal subgraph is a tree",
                )?;
                finish_verdict(sink, failures)
            } else {
                export_graph(sink, format, &l)
            }
        }
        Which::Young => {
            bound(32, "young")?;
            let g = build_young(n);
            if verify {
                let mut failures = 0;
                let counts = dyadic::partition::partition_counts(n as usize);
                let sizes_ok = g
                    .level_sizes()
                    .iter()
                    .enumerate()
                    .all(|(rank, &size)| BigUint::from(size) == counts[rank]);
                check(sink, &mut failures, sizes_ok, "level sizes match p(n)")?;
                finish_verdict(sink, failures)
            } else {
                export_graph(sink, format, &g)
            }
        }
        Which::Y2 => {
            bound(20, "y2")?;
            let g = build_y2(n);
            if verify {
                let mut failures = 0;
                let counts = dyadic::hyperoct::p2_table(n as usize);
                let sizes_ok = g
                    .level_sizes()
                    .iter()
                    .enumerate()
                    .all(|(rank, &size)| BigUint::from(size) == counts[rank]);
                check(sink, &mut failures, sizes_ok, "level sizes match p2(n)")?;
                finish_verdict(sink, failures)
            } else {
                export_graph(sink, format, &g)
            }
        }
        Which::Y2d => {
            bound(20, "y2d")?;
            let g = build_y2d(n);
            if verify {
                verify_y2d(sink, &g, n)
            } else {
                export_graph(sink, format, &g)
            }
        }
    }
}

enum MacdonaldKind {
    Symmetric,
    Hyperoctahedral,
}

fn verify_macdonald_like<P: GraphPayload>(
    sink: &mut Sink,
    graph: &LeveledGraph<P>,
    n: u32,
    kind: MacdonaldKind,
) -> Result<(), CliError> {
    let mut failures = 0;
    let name = match kind {
        MacdonaldKind::Symmetric => "macdonald",
        MacdonaldKind::Hyperoctahedral => "hyper-macdonald",
    };
    sink.line(format!(
        "{name} tree through rank {n}: {} nodes",
        graph.node_count()
    ))?;
    let counts_ok = graph.level_sizes().iter().enumerate().all(|(rank, &size)| {
        let expected = match kind {
            MacdonaldKind::Symmetric => count_odd(rank as u64),
            MacdonaldKind::Hyperoctahedral => count_odd_bipartitions(rank as u64),
        };
        BigUint::from(size) == expected
    });
    check(
        sink,
        &mut failures,
        counts_ok,
        "level sizes match the counting formula",
    )?;
    check(
        sink,
        &mut failures,
        graph.is_tree().is_tree,
        "unique parent above the root",
    )?;
    let mut k = 2u32;
    while (1u64 << k) <= n as u64 + 1 {
        let (nodes, hooks, ones) = graph.top_row_stats(k);
        let (want_nodes, want_hooks, want_ones) = match kind {
            MacdonaldKind::Symmetric => (1u64 << (k * (k - 1) / 2), 1u64 << (k - 1), 2),
            MacdonaldKind::Hyperoctahedral => (1u64 << (k * (k + 1) / 2), 1u64 << k, 4),
        };
        check(
            sink,
            &mut failures,
            (nodes, hooks, ones) == (want_nodes, want_hooks, want_ones),
            &format!("top row of the first 2^{k} ranks: {nodes} nodes, {hooks} hooks, {ones} one-dimensional"),
        )?;
        if (1u64 << (k + 1)) <= n as u64 + 1 {
            check(
                sink,
                &mut failures,
                graph.self_similarity_check(k),
                &format!("self-similarity: two copies above each hook at rank 2^{k}-1"),
            )?;
        }
        k += 1;
    }
    finish_verdict(sink, failures)
}

fn verify_y2d(
    sink: &mut Sink,
    g: &LeveledGraph<dyadic::hyperoct::DIrrep>,
    n: u32,
) -> Result<(), CliError> {
    let mut failures = 0;
    sink.line(format!(
        "demihyperoctahedral branching graph through rank {n}"
    ))?;
    let counts_ok = (1..=n as u64)
        .all(|rank| BigUint::from(g.level_sizes()[rank as usize]) == irr_count_d(rank));
    check(
        sink,
        &mut failures,
        counts_ok,
        "level sizes match the representation count",
    )?;
    let odd = g.induced_odd();
    let tree_check = odd.is_tree();
    check(
        sink,
        &mut failures,
        !tree_check.is_tree,
        "odd subgraph is NOT-A-TREE",
    )?;
    let cycles = find_split_twin_cycles(&odd);
    if cycles.is_empty() {
        failures += 1;
        sink.line("  FAIL no split-twin 4-cycle found")?;
    }
    for cycle in &cycles {
        let labels: Vec<String> = cycle
            .iter()
            .map(|&id| odd.node(id).payload.label())
            .collect();
        sink.line(format!(
            "  ok   split-twin 4-cycle: {}",
            labels.join(" -- ")
        ))?;
    }
    finish_verdict(sink, failures)
}

fn finish_verdict(sink: &mut Sink, failures: u32) -> Result<(), CliError> {
    if failures == 0 {
        sink.line("verdict: PASS")?;
        Ok(())
    } else {
        sink.line(format!("verdict: FAIL ({failures} checks)"))?;
        Err(CliError::Verification(format!(
            "{failures} verification checks failed"
        )))
    }
}

fn cmd_figures(sink: &mut Sink, format: Format, which: Figure, n: u64) -> Result<(), CliError> {
    match which {
        Figure::Growth => {
            if format == Format::Jsonl {
                for m in 1..=n {
                    let a = count_odd(m);
                    let b = count_chiral(m + 2).expect("m + 2 > 0");
                    let ratio = ratio_to_f64(&a, &b);
                    let record = Record::new("figures")
                        .param("which", "growth")
                        .param("n", m)
                        .payload(serde_json::json!({
                            "a_n": a.to_string(),
                            "b_n_plus_2": b.to_string(),
                            "ratio": ratio,
                        }));
                    sink.line(record.to_line())?;
                }
            } else {
                sink.line("n,a_n,b_n_plus_2,ratio")?;
                for m in 1..=n {
                    let ratio = ratio_bounds_check(m);
                    let a = count_odd(m);
                    let b = count_chiral(m + 2).expect("m + 2 > 0");
                    let approx = ratio_to_f64(
                        &ratio.numer().to_biguint().unwrap(),
                        &ratio.denom().to_biguint().unwrap(),
                    );
                    sink.line(format!("{m},{a},{b},{approx}"))?;
                }
            }
            Ok(())
        }
        Figure::BnPlot => {
            if n < 2 {
                return Err(usage("figures bn-plot requires N ≥ 2"));
            }
            if format == Format::Jsonl {
                for m in 2..=n {
                    let [n1, ne, n0, ns1] = det_b_table(m).expect("m ≥ 2");
                    let record = Record::new("figures")
                        .param("which", "bn-plot")
                        .param("n", m)
                        .payload(serde_json::json!({
                            "N1": n1.to_string(),
                            "Neps": ne.to_string(),
                            "Nsgn0": n0.to_string(),
                            "Nsgn1": ns1.to_string(),
                        }));
                    sink.line(record.to_line())?;
                }
            } else {
                sink.line("n,N1,Neps,Nsgn0,Nsgn1")?;
                for m in 2..=n {
                    let [n1, ne, n0, ns1] = det_b_table(m).expect("m ≥ 2");
                    sink.line(format!("{m},{n1},{ne},{n0},{ns1}"))?;
                }
            }
            Ok(())
        }
    }
}
