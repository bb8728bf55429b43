//! The four-color predicate at desk scale: simple graphs standing in for
//! maps, planarity by exhaustive minor search (no K5, no K3,3), 4-coloring
//! by backtracking, and P(n) = "every planar graph on n vertices is
//! four-colorable" with its (empty) counterexample set made listable.

use std::collections::{BTreeSet, HashMap};

use crate::sets::{Enumerator, Pull, PullError};

/// A simple undirected graph on `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Graph {
    vertex_count: u32,
    edges: BTreeSet<(u32, u32)>,
}

/// Error constructing or parsing a graph.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(u32),
    #[error("vertex {vertex} out of range (count {count})")]
    VertexOutOfRange { vertex: u32, count: u32 },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
}

/// A desk-scale guard was exceeded.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{operation} supports at most {limit} vertices, got {got}")]
pub struct GuardViolation {
    pub operation: &'static str,
    pub limit: u32,
    pub got: u32,
}

impl Graph {
    pub fn new(
        vertex_count: u32,
        edges: impl IntoIterator<Item = (u32, u32)>,
    ) -> Result<Graph, GraphError> {
        let mut set = BTreeSet::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::Loop(a));
            }
            for v in [a, b] {
                if v >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: v,
                        count: vertex_count,
                    });
                }
            }
            set.insert((a.min(b), a.max(b)));
        }
        Ok(Graph {
            vertex_count,
            edges: set,
        })
    }

    pub fn complete(n: u32) -> Graph {
        let edges = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b)));
        Graph::new(n, edges).unwrap()
    }

    pub fn complete_bipartite(a: u32, b: u32) -> Graph {
        let edges = (0..a).flat_map(|x| (a..a + b).map(move |y| (x, y)));
        Graph::new(a + b, edges).unwrap()
    }

    pub fn cycle(n: u32) -> Graph {
        assert!(n >= 3);
        let edges = (0..n).map(|i| (i, (i + 1) % n));
        Graph::new(n, edges).unwrap()
    }

    pub fn vertex_count(&self) -> u32 {
        self.vertex_count
    }

    pub fn edges(&self) -> &BTreeSet<(u32, u32)> {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn has_edge(&self, a: u32, b: u32) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }
}

/// Parse the graph text format: first line the vertex count, then one
/// `i j` edge per line.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (first_line, head) = lines.next().ok_or(GraphError::Format {
        line: 1,
        message: "missing vertex count".to_string(),
    })?;
    let vertex_count: u32 = head.parse().map_err(|_| GraphError::Format {
        line: first_line,
        message: format!("bad vertex count {head:?}"),
    })?;
    let mut edges = Vec::new();
    for (lineno, line) in lines {
        let mut parts = line.split_whitespace();
        let mut next = |what: &str| {
            parts
                .next()
                .ok_or(GraphError::Format {
                    line: lineno,
                    message: format!("missing {what}"),
                })?
                .parse::<u32>()
                .map_err(|_| GraphError::Format {
                    line: lineno,
                    message: format!("bad {what}"),
                })
        };
        let a = next("edge endpoint")?;
        let b = next("edge endpoint")?;
        if parts.next().is_some() {
            return Err(GraphError::Format {
                line: lineno,
                message: "trailing tokens after edge".to_string(),
            });
        }
        edges.push((a, b));
    }
    Graph::new(vertex_count, edges)
}

/// Inverse of [`parse_graph`], edges in sorted order.
pub fn render_graph(g: &Graph) -> String {
    let mut out = format!("{}\n", g.vertex_count());
    for (a, b) in g.edges() {
        out.push_str(&format!("{a} {b}\n"));
    }
    out
}

/// An assignment of one of four colors to each vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u8>,
}

impl Coloring {
    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    /// No edge joins two vertices of the same color.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.vertex_count() as usize
            && g.edges()
                .iter()
                .all(|&(a, b)| self.colors[a as usize] != self.colors[b as usize])
    }
}

/// Backtracking search for a proper 4-coloring; the returned coloring is
/// re-verified before being handed out.
pub fn four_colorable(g: &Graph) -> Option<Coloring> {
    let n = g.vertex_count() as usize;
    let mut colors = vec![0u8; n];
    if color_from(g, 0, &mut colors) {
        let coloring = Coloring { colors };
        assert!(coloring.is_proper(g), "coloring failed verification");
        Some(coloring)
    } else {
        None
    }
}

fn color_from(g: &Graph, v: usize, colors: &mut Vec<u8>) -> bool {
    if v == colors.len() {
        return true;
    }
    'next_color: for c in 0..4u8 {
        for u in 0..v {
            if colors[u] == c && g.has_edge(u as u32, v as u32) {
                continue 'next_color;
            }
        }
        colors[v] = c;
        if color_from(g, v + 1, colors) {
            return true;
        }
    }
    false
}

/// Compact adjacency form used by the minor search; rows are bitmasks.
#[derive(Clone, PartialEq, Eq, Hash)]
struct Compact {
    n: u8,
    adj: [u16; 8],
}

impl Compact {
    fn from_graph(g: &Graph) -> Compact {
        let mut adj = [0u16; 8];
        for &(a, b) in g.edges() {
            adj[a as usize] |= 1 << b;
            adj[b as usize] |= 1 << a;
        }
        Compact {
            n: g.vertex_count() as u8,
            adj,
        }
    }

    fn edge_count(&self) -> u32 {
        self.adj[..self.n as usize]
            .iter()
            .map(|r| r.count_ones())
            .sum::<u32>()
            / 2
    }

    fn edges(&self) -> Vec<(u8, u8)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            let row = self.adj[a as usize] >> (a + 1);
            for b in a + 1..self.n {
                if row >> (b - a - 1) & 1 == 1 {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Merge b into a, delete b, shift higher labels down.
    fn contract(&self, a: u8, b: u8) -> Compact {
        let mut merged = [0u16; 8];
        for v in 0..self.n as usize {
            merged[v] = self.adj[v];
        }
        merged[a as usize] |= merged[b as usize];
        for v in 0..self.n as usize {
            if merged[v] >> b & 1 == 1 {
                merged[v] |= 1 << a;
            }
        }
        merged[a as usize] &= !(1 << a);
        // Drop vertex b: remove its row and squeeze its column out.
        let mut out = [0u16; 8];
        let mut w = 0;
        for v in 0..self.n as usize {
            if v == b as usize {
                continue;
            }
            let row = merged[v];
            let low = row & ((1 << b) - 1);
            let high = row >> (b + 1) << b;
            out[w] = (low | high) & !(1 << w);
            w += 1;
        }
        let mut c = Compact {
            n: self.n - 1,
            adj: out,
        };
        // Contraction must not introduce loops.
        for v in 0..c.n as usize {
            c.adj[v] &= !(1 << v);
        }
        c
    }

    fn has_k5_subgraph(&self) -> bool {
        let n = self.n;
        if n < 5 {
            return false;
        }
        subsets_of_size(n, 5).any(|vs| {
            vs.iter().all(|&a| {
                vs.iter()
                    .all(|&b| a == b || self.adj[a as usize] >> b & 1 == 1)
            })
        })
    }

    fn has_k33_subgraph(&self) -> bool {
        let n = self.n;
        if n < 6 {
            return false;
        }
        subsets_of_size(n, 6).any(|vs| {
            // Split the six chosen vertices three against three.
            subsets_of_size(6, 3).any(|side_idx| {
                if !side_idx.contains(&0) {
                    return false; // fix vertex 0's side to halve the work
                }
                let left: Vec<u8> = side_idx.iter().map(|&i| vs[i as usize]).collect();
                let right: Vec<u8> = (0..6)
                    .filter(|i| !side_idx.contains(i))
                    .map(|i| vs[i as usize])
                    .collect();
                left.iter().all(|&a| {
                    right
                        .iter()
                        .all(|&b| self.adj[a as usize] >> b & 1 == 1)
                })
            })
        })
    }
}

fn subsets_of_size(n: u8, k: u8) -> impl Iterator<Item = Vec<u8>> {
    (0u16..1 << n)
        .filter(move |m| m.count_ones() == k as u32)
        .map(move |m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
}

/// Shared memo so that a batch of planarity queries (the P(n) scan) reuses
/// contraction subresults.
pub struct PlanarityTester {
    k5_memo: HashMap<Compact, bool>,
    k33_memo: HashMap<Compact, bool>,
}

impl PlanarityTester {
    pub fn new() -> PlanarityTester {
        PlanarityTester {
            k5_memo: HashMap::new(),
            k33_memo: HashMap::new(),
        }
    }

    /// Wagner's characterization: planar iff no K5 minor and no K3,3 minor.
    /// Guard: at most 8 vertices.
    pub fn is_planar(&mut self, g: &Graph) -> Result<bool, GuardViolation> {
        if g.vertex_count() > 8 {
            return Err(GuardViolation {
                operation: "is_planar",
                limit: 8,
                got: g.vertex_count(),
            });
        }
        let n = g.vertex_count();
        let e = g.edge_count() as u32;
        if n <= 4 {
            return Ok(true);
        }
        // A minor never has more edges than its host.
        if e < 9 {
            return Ok(true);
        }
        if n >= 3 && e > 3 * n - 6 {
            return Ok(false);
        }
        let c = Compact::from_graph(g);
        Ok(!self.has_minor(&c, MinorTarget::K5) && !self.has_minor(&c, MinorTarget::K33))
    }

    fn has_minor(&mut self, g: &Compact, target: MinorTarget) -> bool {
        let (needed_n, needed_e) = match target {
            MinorTarget::K5 => (5, 10),
            MinorTarget::K33 => (6, 9),
        };
        if (g.n as u32) < needed_n || g.edge_count() < needed_e {
            return false;
        }
        let memo = match target {
            MinorTarget::K5 => &self.k5_memo,
            MinorTarget::K33 => &self.k33_memo,
        };
        if let Some(&v) = memo.get(g) {
            return v;
        }
        let found = match target {
            MinorTarget::K5 => g.has_k5_subgraph(),
            MinorTarget::K33 => g.has_k33_subgraph(),
        } || g
            .edges()
            .into_iter()
            .any(|(a, b)| self.has_minor(&g.contract(a, b), target));
        let memo = match target {
            MinorTarget::K5 => &mut self.k5_memo,
            MinorTarget::K33 => &mut self.k33_memo,
        };
        memo.insert(g.clone(), found);
        found
    }
}

impl Default for PlanarityTester {
    fn default() -> Self {
        PlanarityTester::new()
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum MinorTarget {
    K5,
    K33,
}

/// One-off planarity query. Guard: at most 8 vertices.
pub fn is_planar(g: &Graph) -> Result<bool, GuardViolation> {
    PlanarityTester::new().is_planar(g)
}

/// All labeled planar graphs on `n` vertices, in edge-bitmask order over
/// the sorted edge list. Guard: n <= 7.
pub fn enumerate_planar_graphs(n: u32) -> Result<Vec<Graph>, GuardViolation> {
    if n > 7 {
        return Err(GuardViolation {
            operation: "enumerate_planar_graphs",
            limit: 7,
            got: n,
        });
    }
    let all_edges: Vec<(u32, u32)> =
        (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    let mut tester = PlanarityTester::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << all_edges.len() {
        let edges = all_edges
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::new(n, edges).unwrap();
        if tester.is_planar(&g).unwrap() {
            out.push(g);
        }
    }
    Ok(out)
}

/// Relabel by the permutation minimizing the edge set, then group: the
/// number of isomorphism classes among `graphs` (all on one vertex count).
pub fn isomorphism_classes(graphs: &[Graph]) -> usize {
    let mut canon = BTreeSet::new();
    for g in graphs {
        canon.insert(canonical_edges(g));
    }
    canon.len()
}

fn canonical_edges(g: &Graph) -> BTreeSet<(u32, u32)> {
    let n = g.vertex_count();
    let mut perm: Vec<u32> = (0..n).collect();
    let mut best: Option<BTreeSet<(u32, u32)>> = None;
    permute(&mut perm, 0, &mut |p| {
        let relabeled: BTreeSet<(u32, u32)> = g
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (x, y) = (p[a as usize], p[b as usize]);
                (x.min(y), x.max(y))
            })
            .collect();
        if best.as_ref().is_none_or(|b| relabeled < *b) {
            best = Some(relabeled);
        }
    });
    best.unwrap_or_default()
}

fn permute(perm: &mut Vec<u32>, k: usize, visit: &mut impl FnMut(&[u32])) {
    if k == perm.len() {
        visit(perm);
        return;
    }
    for i in k..perm.len() {
        perm.swap(k, i);
        permute(perm, k + 1, visit);
        perm.swap(k, i);
    }
}

/// P(n): every labeled planar graph on `n` vertices is four-colorable.
/// Guard: n <= 7.
pub fn p_of_n(n: u32) -> Result<bool, GuardViolation> {
    if n > 7 {
        return Err(GuardViolation {
            operation: "p_of_n",
            limit: 7,
            got: n,
        });
    }
    Ok(enumerate_planar_graphs(n)?
        .iter()
        .all(|g| four_colorable(g).is_some()))
}

/// Emits each n in `1..=max_n` with P(n) false — by the four-color theorem,
/// nothing. One work unit per n examined.
pub struct CounterexampleEnumerator {
    next_n: u32,
    max_n: u32,
    work: u64,
}

impl Enumerator for CounterexampleEnumerator {
    fn pull(&mut self, budget: u64) -> Result<Pull, PullError> {
        for _ in 0..budget {
            if self.next_n > self.max_n {
                return Ok(Pull::Exhausted);
            }
            let n = self.next_n;
            self.next_n += 1;
            self.work += 1;
            if !p_of_n(n).expect("max_n within guard") {
                return Ok(Pull::Item(n as u64));
            }
        }
        Ok(Pull::BudgetExceeded)
    }

    fn work_done(&self) -> u64 {
        self.work
    }
}

/// The counterexample set of the four-color statement, restricted to
/// `n <= max_n`. Guard: max_n <= 7.
pub fn fourcolor_counterexample_enumerator(
    max_n: u32,
) -> Result<CounterexampleEnumerator, GuardViolation> {
    if max_n > 7 {
        return Err(GuardViolation {
            operation: "fourcolor_counterexample_enumerator",
            limit: 7,
            got: max_n,
        });
    }
    Ok(CounterexampleEnumerator {
        next_n: 1,
        max_n,
        work: 0,
    })
}

impl std::fmt::Debug for Compact {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Compact(n={}, adj={:?})", self.n, &self.adj[..self.n as usize])
    }
}
