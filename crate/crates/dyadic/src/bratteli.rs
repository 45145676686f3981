//! Graded graphs and the trees induced by odd-dimensional representations.
//!
//! A [`LeveledGraph`] keeps its nodes in ranked levels with edges only
//! between consecutive ranks: Young's graph, the bipartition graph, the
//! demihyperoctahedral branching graph, and Pascal's graph are all built
//! here, together with the subgraphs induced by odd dimensions. Tree
//! verification reads the branching meaning directly: every node above the
//! root must have exactly one downward edge. Self-similarity of the induced
//! trees is checked through canonical rooted-tree forms obtained by interning
//! sorted child form lists, which is exact (no hash collisions to handle).

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;
use std::hash::Hash;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::classify::enumerate_odd;
use crate::hyperoct::{
    bipartitions_of, dim_f2, enumerate_odd_bipartitions, irreps_d, BiPartition, DIrrep,
};
use crate::partition::{partitions_of, Partition};

pub type NodeId = usize;

#[derive(Debug, Error)]
pub enum ImportError {
    #[error("invalid graph JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("malformed graph: {0}")]
    Malformed(String),
}

/// Node payloads: anything with a canonical text form usable as a label.
pub trait GraphPayload: Clone + Eq + Hash + Ord {
    fn label(&self) -> String;
}

impl GraphPayload for Partition {
    fn label(&self) -> String {
        self.to_string()
    }
}

impl GraphPayload for BiPartition {
    fn label(&self) -> String {
        self.to_string()
    }
}

impl GraphPayload for DIrrep {
    fn label(&self) -> String {
        self.to_string()
    }
}

impl GraphPayload for String {
    fn label(&self) -> String {
        self.clone()
    }
}

/// A node of Pascal's graph: a pair of non-negative integers at rank `a + b`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct PascalPair {
    pub a: u32,
    pub b: u32,
}

impl fmt::Display for PascalPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

impl GraphPayload for PascalPair {
    fn label(&self) -> String {
        self.to_string()
    }
}

#[derive(Clone, Debug)]
pub struct NodeData<P> {
    pub payload: P,
    pub level: u32,
    pub dim: BigUint,
    pub is_hook: bool,
    pub is_one_dimensional: bool,
    down: Vec<NodeId>,
    up: Vec<NodeId>,
}

/// A graded graph: nodes ranked by level, edges between adjacent levels only.
#[derive(Clone, Debug)]
pub struct LeveledGraph<P> {
    name: String,
    levels: Vec<Vec<NodeId>>,
    nodes: Vec<NodeData<P>>,
}

/// Why a graph failed the tree check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeWitness {
    /// Level 0 does not consist of a single root.
    NotSingleRoot(Vec<NodeId>),
    /// A node above level 0 with no downward edge.
    Orphan(NodeId),
    /// A closed walk through a node with two downward edges.
    Cycle(Vec<NodeId>),
}

#[derive(Clone, Debug)]
pub struct TreeCheck {
    pub is_tree: bool,
    pub witness: Option<TreeWitness>,
}

impl<P: GraphPayload> LeveledGraph<P> {
    pub fn new(name: impl Into<String>) -> Self {
        LeveledGraph {
            name: name.into(),
            levels: Vec::new(),
            nodes: Vec::new(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    pub fn levels(&self) -> &[Vec<NodeId>] {
        &self.levels
    }

    pub fn level_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(Vec::len).collect()
    }

    pub fn node(&self, id: NodeId) -> &NodeData<P> {
        &self.nodes[id]
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.nodes.iter().map(|n| n.down.len()).sum()
    }

    /// Neighbors one level below, in insertion order.
    pub fn down(&self, id: NodeId) -> &[NodeId] {
        &self.nodes[id].down
    }

    /// Neighbors one level above, in insertion order.
    pub fn up(&self, id: NodeId) -> &[NodeId] {
        &self.nodes[id].up
    }

    pub fn add_node(
        &mut self,
        level: u32,
        payload: P,
        dim: BigUint,
        is_hook: bool,
        is_one_dimensional: bool,
    ) -> NodeId {
        while self.levels.len() <= level as usize {
            self.levels.push(Vec::new());
        }
        let id = self.nodes.len();
        self.nodes.push(NodeData {
            payload,
            level,
            dim,
            is_hook,
            is_one_dimensional,
            down: Vec::new(),
            up: Vec::new(),
        });
        self.levels[level as usize].push(id);
        id
    }

    pub fn add_edge(&mut self, lower: NodeId, upper: NodeId) {
        assert_eq!(
            self.nodes[lower].level + 1,
            self.nodes[upper].level,
            "edges connect consecutive levels"
        );
        self.nodes[lower].up.push(upper);
        self.nodes[upper].down.push(lower);
    }

    pub fn find(&self, level: u32, payload: &P) -> Option<NodeId> {
        self.levels
            .get(level as usize)?
            .iter()
            .copied()
            .find(|&id| &self.nodes[id].payload == payload)
    }

    /// The subgraph induced by the nodes satisfying `keep`, with edges
    /// restricted to surviving endpoints. Node order is preserved.
    pub fn induced(&self, keep: impl Fn(&NodeData<P>) -> bool) -> LeveledGraph<P> {
        let mut out = LeveledGraph::new(self.name.clone());
        let mut remap: HashMap<NodeId, NodeId> = HashMap::new();
        for level in &self.levels {
            for &id in level {
                let node = &self.nodes[id];
                if keep(node) {
                    let new_id = out.add_node(
                        node.level,
                        node.payload.clone(),
                        node.dim.clone(),
                        node.is_hook,
                        node.is_one_dimensional,
                    );
                    remap.insert(id, new_id);
                }
            }
        }
        for level in &self.levels {
            for &id in level {
                if let Some(&new_upper) = remap.get(&id) {
                    for &lower in &self.nodes[id].down {
                        if let Some(&new_lower) = remap.get(&lower) {
                            out.add_edge(new_lower, new_upper);
                        }
                    }
                }
            }
        }
        out
    }

    /// Keeps the nodes whose annotated dimension is odd.
    pub fn induced_odd(&self) -> LeveledGraph<P> {
        self.induced(|node| node.dim.bit(0))
    }

    /// The first `levels` levels.
    pub fn truncate(&self, levels: usize) -> LeveledGraph<P> {
        self.induced(|node| (node.level as usize) < levels)
    }

    /// Removes the first `count` levels, which must be empty, and re-ranks
    /// the remainder. Used to align graphs whose gradings differ by a shift.
    pub fn drop_levels(&self, count: usize) -> LeveledGraph<P> {
        assert!(
            self.levels.iter().take(count).all(Vec::is_empty),
            "dropped levels must be empty"
        );
        let mut out = LeveledGraph::new(self.name.clone());
        let mut remap: HashMap<NodeId, NodeId> = HashMap::new();
        for level in self.levels.iter().skip(count) {
            for &id in level {
                let node = &self.nodes[id];
                let new_id = out.add_node(
                    node.level - count as u32,
                    node.payload.clone(),
                    node.dim.clone(),
                    node.is_hook,
                    node.is_one_dimensional,
                );
                remap.insert(id, new_id);
            }
        }
        for level in self.levels.iter().skip(count) {
            for &id in level {
                for &lower in &self.nodes[id].down {
                    out.add_edge(remap[&lower], remap[&id]);
                }
            }
        }
        out
    }

    /// True iff the graph has a unique level-0 root and every higher node has
    /// exactly one downward edge (so it is connected and acyclic). On failure
    /// the witness exhibits the violation.
    pub fn is_tree(&self) -> TreeCheck {
        if self.levels.is_empty() {
            return TreeCheck {
                is_tree: true,
                witness: None,
            };
        }
        if self.levels[0].len() != 1 {
            return TreeCheck {
                is_tree: false,
                witness: Some(TreeWitness::NotSingleRoot(self.levels[0].clone())),
            };
        }
        for level in &self.levels[1..] {
            for &id in level {
                if self.nodes[id].down.is_empty() {
                    return TreeCheck {
                        is_tree: false,
                        witness: Some(TreeWitness::Orphan(id)),
                    };
                }
            }
        }
        for level in &self.levels[1..] {
            for &id in level {
                let down = &self.nodes[id].down;
                if down.len() > 1 {
                    return TreeCheck {
                        is_tree: false,
                        witness: Some(TreeWitness::Cycle(self.cycle_through(id, down[0], down[1]))),
                    };
                }
            }
        }
        TreeCheck {
            is_tree: true,
            witness: None,
        }
    }

    // A closed walk through `top` and its two distinct parents: follow first
    // parents downward from each until the paths meet (they must, since no
    // orphans exist below `top` when this is called).
    fn cycle_through(&self, top: NodeId, left: NodeId, right: NodeId) -> Vec<NodeId> {
        let walk = |start: NodeId| {
            let mut path = vec![start];
            let mut cur = start;
            while let Some(&next) = self.nodes[cur].down.first() {
                path.push(next);
                cur = next;
            }
            path
        };
        let left_path = walk(left);
        let right_path = walk(right);
        let positions: HashMap<NodeId, usize> = left_path
            .iter()
            .enumerate()
            .map(|(i, &id)| (id, i))
            .collect();
        let (meet_right, meet_left) = right_path
            .iter()
            .enumerate()
            .find_map(|(j, id)| positions.get(id).map(|&i| (j, i)))
            .expect("downward paths meet at the root");
        let mut cycle = vec![top];
        cycle.extend(&left_path[..=meet_left]);
        cycle.extend(right_path[..meet_right].iter().rev());
        cycle
    }

    /// `(nodes, hooks, one-dimensional)` counts in the top row of the first
    /// `2^k` levels, i.e. at rank `2^k − 1`.
    pub fn top_row_stats(&self, k: u32) -> (u64, u64, u64) {
        let rank = (1usize << k) - 1;
        let row = self
            .levels
            .get(rank)
            .unwrap_or_else(|| panic!("graph has no rank {rank}"));
        let hooks = row.iter().filter(|&&id| self.nodes[id].is_hook).count();
        let ones = row
            .iter()
            .filter(|&&id| self.nodes[id].is_one_dimensional)
            .count();
        (row.len() as u64, hooks as u64, ones as u64)
    }

    /// Verifies the self-similar growth step from the first `2^k` levels to
    /// the first `2^{k+1}`: every hook at rank `2^k − 1` carries exactly two
    /// children, and the subtree above each child (spanning the next `2^k`
    /// ranks) has the same canonical rooted-tree form as the truncation to
    /// the first `2^k` levels.
    pub fn self_similarity_check(&self, k: u32) -> bool {
        let span = 1usize << k;
        assert!(
            self.levels.len() >= 2 * span,
            "need {} levels, have {}",
            2 * span,
            self.levels.len()
        );
        if self.levels[0].len() != 1 {
            return false;
        }
        let mut interner = Interner::default();
        let target = self.canon(self.levels[0][0], span, &mut interner);
        for &id in &self.levels[span - 1] {
            if !self.nodes[id].is_hook {
                continue;
            }
            let children = &self.nodes[id].up;
            if children.len() != 2 {
                return false;
            }
            if children
                .iter()
                .any(|&child| self.canon(child, span, &mut interner) != target)
            {
                return false;
            }
        }
        true
    }

    // Canonical form of the subtree hanging above `id`, spanning `height`
    // ranks including the root's own.
    fn canon(&self, id: NodeId, height: usize, interner: &mut Interner) -> u64 {
        let mut child_forms: Vec<u64> = if height <= 1 {
            Vec::new()
        } else {
            self.nodes[id]
                .up
                .iter()
                .map(|&child| self.canon(child, height - 1, interner))
                .collect()
        };
        child_forms.sort_unstable();
        interner.intern(child_forms)
    }

    /// DOT text: one labeled node per graph node, one undirected edge per
    /// cover, in deterministic order.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "graph \"{}\" {{", self.name).unwrap();
        for level in &self.levels {
            for &id in level {
                writeln!(
                    out,
                    "  v{id} [label=\"{}\"];",
                    self.nodes[id].payload.label()
                )
                .unwrap();
            }
        }
        for level in &self.levels {
            for &upper in level {
                for &lower in &self.nodes[upper].down {
                    writeln!(out, "  v{lower} -- v{upper};").unwrap();
                }
            }
        }
        out.push_str("}\n");
        out
    }

    /// Compact single-line JSON with levels, annotated nodes, and edges.
    pub fn to_json(&self) -> String {
        let dto = GraphDto {
            name: self.name.clone(),
            levels: self.levels.clone(),
            nodes: self
                .nodes
                .iter()
                .enumerate()
                .map(|(id, n)| NodeDto {
                    id,
                    level: n.level,
                    label: n.payload.label(),
                    dim: n.dim.to_string(),
                    hook: n.is_hook,
                    one_dim: n.is_one_dimensional,
                })
                .collect(),
            edges: self
                .nodes
                .iter()
                .enumerate()
                .flat_map(|(upper, n)| n.down.iter().map(move |&lower| (lower, upper)))
                .collect(),
        };
        serde_json::to_string(&dto).expect("graph serialization cannot fail")
    }
}

#[derive(Default)]
struct Interner {
    map: HashMap<Vec<u64>, u64>,
}

impl Interner {
    fn intern(&mut self, child_forms: Vec<u64>) -> u64 {
        let next = self.map.len() as u64;
        *self.map.entry(child_forms).or_insert(next)
    }
}

/// True iff two graded trees are isomorphic as rooted trees (levels are
/// preserved automatically). Both graphs must pass [`LeveledGraph::is_tree`].
pub fn rooted_trees_isomorphic<P: GraphPayload, Q: GraphPayload>(
    a: &LeveledGraph<P>,
    b: &LeveledGraph<Q>,
) -> bool {
    if a.level_sizes() != b.level_sizes() {
        return false;
    }
    if a.levels.is_empty() {
        return true;
    }
    let height = a.levels.len();
    let mut interner = Interner::default();
    let fa = a.canon(a.levels[0][0], height, &mut interner);
    let fb = b.canon(b.levels[0][0], height, &mut interner);
    fa == fb
}

#[derive(Serialize, Deserialize)]
struct GraphDto {
    name: String,
    levels: Vec<Vec<usize>>,
    nodes: Vec<NodeDto>,
    edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct NodeDto {
    id: usize,
    level: u32,
    label: String,
    dim: String,
    hook: bool,
    one_dim: bool,
}

/// Rebuilds a graph from its JSON export, with string labels as payloads.
/// Exporting the result reproduces the input text.
pub fn from_json(text: &str) -> Result<LeveledGraph<String>, ImportError> {
    let dto: GraphDto = serde_json::from_str(text)?;
    let mut graph = LeveledGraph::new(dto.name);
    for (expected, level) in dto.levels.iter().enumerate() {
        for &id in level {
            let node = dto
                .nodes
                .get(id)
                .ok_or_else(|| ImportError::Malformed(format!("node {id} out of range")))?;
            if node.id != id || node.level as usize != expected {
                return Err(ImportError::Malformed(format!("node {id} misplaced")));
            }
            let dim: BigUint = node
                .dim
                .parse()
                .map_err(|_| ImportError::Malformed(format!("bad dimension for node {id}")))?;
            let new_id =
                graph.add_node(node.level, node.label.clone(), dim, node.hook, node.one_dim);
            if new_id != id {
                return Err(ImportError::Malformed(
                    "levels do not list every node".into(),
                ));
            }
        }
    }
    for (lower, upper) in dto.edges {
        if lower >= graph.node_count() || upper >= graph.node_count() {
            return Err(ImportError::Malformed("edge endpoint out of range".into()));
        }
        if graph.nodes[lower].level + 1 != graph.nodes[upper].level {
            return Err(ImportError::Malformed(
                "edge does not connect adjacent levels".into(),
            ));
        }
        graph.add_edge(lower, upper);
    }
    Ok(graph)
}

/// Young's graph up to rank `max_n`: all partitions with cover edges.
pub fn build_young(max_n: u32) -> LeveledGraph<Partition> {
    let mut graph = LeveledGraph::new("young");
    let mut prev: HashMap<Partition, NodeId> = HashMap::new();
    for n in 0..=max_n {
        let mut current = HashMap::new();
        for lam in partitions_of(n) {
            let id = graph.add_node(
                n,
                lam.clone(),
                lam.dim_f(),
                lam.is_hook(),
                lam.is_one_dimensional(),
            );
            for mu in lam.covered_by() {
                graph.add_edge(prev[&mu], id);
            }
            current.insert(lam, id);
        }
        prev = current;
    }
    graph
}

/// The tree induced by odd partitions in Young's graph, built directly from
/// the streaming odd enumeration (no ambient graph is materialized).
pub fn build_macdonald(max_n: u32) -> LeveledGraph<Partition> {
    let mut graph = LeveledGraph::new("macdonald");
    let mut prev: HashMap<Partition, NodeId> = HashMap::new();
    for n in 0..=max_n {
        let mut current = HashMap::new();
        for lam in enumerate_odd(n) {
            let id = graph.add_node(
                n,
                lam.clone(),
                lam.dim_f(),
                lam.is_hook(),
                lam.is_one_dimensional(),
            );
            for mu in lam.covered_by() {
                if let Some(&parent) = prev.get(&mu) {
                    graph.add_edge(parent, id);
                }
            }
            current.insert(lam, id);
        }
        prev = current;
    }
    graph
}

/// The bipartition graph (covers add one box to either component) up to rank
/// `max_n`.
pub fn build_y2(max_n: u32) -> LeveledGraph<BiPartition> {
    let mut graph = LeveledGraph::new("y2");
    let mut prev: HashMap<BiPartition, NodeId> = HashMap::new();
    for n in 0..=max_n {
        let mut current = HashMap::new();
        for bp in bipartitions_of(n) {
            let dim = dim_f2(&bp);
            let one = dim.is_one();
            let id = graph.add_node(n, bp.clone(), dim, bp.is_hook(), one);
            for parent in bipartition_covered_by(&bp) {
                graph.add_edge(prev[&parent], id);
            }
            current.insert(bp, id);
        }
        prev = current;
    }
    graph
}

fn bipartition_covered_by(bp: &BiPartition) -> Vec<BiPartition> {
    let mut out = Vec::new();
    for alpha in bp.alpha.covered_by() {
        out.push(BiPartition::new(alpha, bp.beta.clone()));
    }
    for beta in bp.beta.covered_by() {
        out.push(BiPartition::new(bp.alpha.clone(), beta));
    }
    out
}

/// The tree induced by odd bipartitions in the bipartition graph, built
/// directly from the streaming enumeration.
pub fn build_hyper_macdonald(max_n: u32) -> LeveledGraph<BiPartition> {
    let mut graph = LeveledGraph::new("hyper-macdonald");
    let mut prev: HashMap<BiPartition, NodeId> = HashMap::new();
    for n in 0..=max_n {
        let mut current = HashMap::new();
        for bp in enumerate_odd_bipartitions(n) {
            let dim = dim_f2(&bp);
            let one = dim.is_one();
            let id = graph.add_node(n, bp.clone(), dim, bp.is_hook(), one);
            for parent in bipartition_covered_by(&bp) {
                if let Some(&pid) = prev.get(&parent) {
                    graph.add_edge(pid, id);
                }
            }
            current.insert(bp, id);
        }
        prev = current;
    }
    graph
}

/// Pascal's graph up to rank `max_n`: pairs `(a, b)` with the binomial
/// `C(a+b, a)` as dimension. Every pair counts as a hook; the
/// one-dimensional pairs are those on the boundary.
pub fn build_pascal(max_n: u32) -> LeveledGraph<PascalPair> {
    let mut graph = LeveledGraph::new("pascal");
    let mut prev: Vec<(BigUint, NodeId)> = Vec::new();
    for n in 0..=max_n {
        let mut current = Vec::with_capacity(n as usize + 1);
        for a in 0..=n {
            let b = n - a;
            // C(a+b, a) by Pascal's rule from the previous level.
            let dim = if n == 0 {
                BigUint::one()
            } else {
                let mut d = if a > 0 {
                    prev[a as usize - 1].0.clone()
                } else {
                    BigUint::ZERO
                };
                if (a as usize) < prev.len() {
                    d += &prev[a as usize].0;
                }
                d
            };
            let id = graph.add_node(n, PascalPair { a, b }, dim.clone(), true, a == 0 || b == 0);
            if a > 0 {
                graph.add_edge(prev[a as usize - 1].1, id);
            }
            if (a as usize) < prev.len() {
                graph.add_edge(prev[a as usize].1, id);
            }
            current.push((dim, id));
        }
        prev = current;
    }
    graph
}

/// Number of pairs `(a, b)` with `a + b = n` and `C(a+b, a)` odd; equals
/// `2^{ν(n)}` by Lucas.
pub fn pascal_odd_count(n: u64) -> u64 {
    (0..=n).filter(|&a| a & (n - a) == 0).count() as u64
}

/// The demihyperoctahedral branching graph up to rank `max_n`. Rank 0 is the
/// conventional trivial node; claims about this graph are meaningful from
/// rank 2 upward.
pub fn build_y2d(max_n: u32) -> LeveledGraph<DIrrep> {
    let mut graph = LeveledGraph::new("y2d");
    let mut prev: HashMap<DIrrep, NodeId> = HashMap::new();
    for n in 0..=max_n {
        let mut current = HashMap::new();
        for irrep in irreps_d(n) {
            let dim = irrep.dim();
            let one = dim.is_one();
            let hook = match &irrep {
                DIrrep::Restricted { first, second } => {
                    BiPartition::new(first.clone(), second.clone()).is_hook()
                }
                DIrrep::Split { .. } => false,
            };
            let id = graph.add_node(n, irrep.clone(), dim, hook, one);
            for parent in d_irrep_covered_by(&irrep) {
                graph.add_edge(prev[&parent], id);
            }
            current.insert(irrep, id);
        }
        prev = current;
    }
    graph
}

// Restriction rules: corner removals inside an off-diagonal pair, splitting
// when the removal lands on the diagonal; split halves restrict to the pairs
// below their base.
fn d_irrep_covered_by(irrep: &DIrrep) -> Vec<DIrrep> {
    let mut out = Vec::new();
    match irrep {
        DIrrep::Restricted { first, second } => {
            if first.is_empty() && second.is_empty() {
                return out; // conventional rank-0 root
            }
            let mut push_removal = |kept: &Partition, removed_from: &Partition| {
                for smaller in removed_from.covered_by() {
                    if smaller == *kept {
                        if kept.is_empty() {
                            out.push(DIrrep::Restricted {
                                first: Partition::empty(),
                                second: Partition::empty(),
                            });
                        } else {
                            for positive in [true, false] {
                                out.push(DIrrep::Split {
                                    base: kept.clone(),
                                    positive,
                                });
                            }
                        }
                    } else {
                        out.push(DIrrep::restricted(kept.clone(), smaller));
                    }
                }
            };
            push_removal(second, first);
            push_removal(first, second);
        }
        DIrrep::Split { base, .. } => {
            for alpha in base.covered_by() {
                out.push(DIrrep::restricted(alpha, base.clone()));
            }
        }
    }
    out
}

/// The four-cycle patterns created by split pairs: two halves of the same
/// base sharing an upper and a lower neighbor. Each cycle is listed as
/// `[upper, plus, lower, minus]`, in level order.
pub fn find_split_twin_cycles(graph: &LeveledGraph<DIrrep>) -> Vec<[NodeId; 4]> {
    let mut out = Vec::new();
    for level in graph.levels() {
        for &id in level {
            let DIrrep::Split {
                base,
                positive: true,
            } = &graph.node(id).payload
            else {
                continue;
            };
            let twin_payload = DIrrep::Split {
                base: base.clone(),
                positive: false,
            };
            let Some(twin) = graph.find(graph.node(id).level, &twin_payload) else {
                continue;
            };
            let shared = |xs: &[NodeId], ys: &[NodeId]| -> Vec<NodeId> {
                xs.iter().copied().filter(|x| ys.contains(x)).collect()
            };
            for upper in shared(graph.up(id), graph.up(twin)) {
                for &lower in &shared(graph.down(id), graph.down(twin)) {
                    out.push([upper, id, lower, twin]);
                }
            }
        }
    }
    out
}
