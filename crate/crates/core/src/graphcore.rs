//! Tropical matrices, bipartite support graphs, recession graphs, and the
//! graph invariants built on them: strong connectivity, recession
//! connectivity, matching numbers, and spanning tree / forest counts.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use crate::rat::ExtRat;
use crate::{Error, Result, DEFAULT_LAMBDA_CAP};

/// An edge of a bipartite graph, `(left, right)`, zero-based.
pub type Edge = (usize, usize);

/// A `d x n` grid over the rationals extended by `inf`.
///
/// Every column must have at least one finite entry so that each column
/// defines a tropical hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TropicalMatrix {
    d: usize,
    n: usize,
    entries: Vec<Vec<ExtRat>>,
}

impl TropicalMatrix {
    pub fn new(entries: Vec<Vec<ExtRat>>) -> Result<Self> {
        let d = entries.len();
        if d == 0 {
            return Err(Error::InvalidMatrix("matrix has no rows".into()));
        }
        let n = entries[0].len();
        if n == 0 {
            return Err(Error::InvalidMatrix("matrix has no columns".into()));
        }
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        if let Some(k) = (0..n).find(|&k| !(0..d).any(|i| entries[i][k].is_finite())) {
            return Err(Error::InvalidMatrix(format!(
                "column {} has no finite entry",
                k + 1
            )));
        }
        Ok(TropicalMatrix { d, n, entries })
    }

    /// Builds a matrix from `i64` entries with `None` as `inf`.
    pub fn from_ints(rows: &[&[Option<i64>]]) -> Result<Self> {
        let entries = rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| match e {
                        Some(v) => ExtRat::from_int(*v),
                        None => ExtRat::Infinity,
                    })
                    .collect()
            })
            .collect();
        TropicalMatrix::new(entries)
    }

    pub fn rows(&self) -> usize {
        self.d
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, k: usize) -> &ExtRat {
        &self.entries[i][k]
    }

    pub fn is_supported(&self, i: usize, k: usize) -> bool {
        self.entries[i][k].is_finite()
    }

    /// Row indices with finite entry in column `k`.
    pub fn column_support(&self, k: usize) -> Vec<usize> {
        (0..self.d).filter(|&i| self.is_supported(i, k)).collect()
    }

    /// Transpose; fails if some row is all-`inf`, since that row would become
    /// an unsupported column.
    pub fn transpose(&self) -> Result<TropicalMatrix> {
        for i in 0..self.d {
            if !(0..self.n).any(|k| self.is_supported(i, k)) {
                return Err(Error::InvalidTranspose);
            }
        }
        let entries = (0..self.n)
            .map(|k| (0..self.d).map(|i| self.entries[i][k].clone()).collect())
            .collect();
        TropicalMatrix::new(entries)
    }
}

/// A bipartite graph on `[d] + [n]` given by its edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    d: usize,
    n: usize,
    edges: BTreeSet<Edge>,
}

impl BipartiteGraph {
    pub fn new(d: usize, n: usize, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let edges: BTreeSet<Edge> = edges.into_iter().collect();
        for &(i, j) in &edges {
            if i >= d || j >= n {
                return Err(Error::InvalidSubgraph(format!(
                    "edge ({}, {}) out of range for K_{{{d},{n}}}",
                    i + 1,
                    j + 1
                )));
            }
        }
        Ok(BipartiteGraph { d, n, edges })
    }

    pub fn complete(d: usize, n: usize) -> Self {
        let edges = (0..d).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
        BipartiteGraph { d, n, edges }
    }

    pub fn left_count(&self) -> usize {
        self.d
    }

    pub fn right_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    /// Neighbours of right node `j`, i.e. the support of column `j`.
    pub fn right_neighbors(&self, j: usize) -> Vec<usize> {
        (0..self.d).filter(|&i| self.contains((i, j))).collect()
    }

    pub fn left_neighbors(&self, i: usize) -> Vec<usize> {
        (0..self.n).filter(|&j| self.contains((i, j))).collect()
    }

    /// Connected components over all `d + n` nodes; isolated nodes count.
    pub fn component_count(&self) -> usize {
        component_count(self.d + self.n, self.edges.iter().map(|&(i, j)| (i, self.d + j)))
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }
}

/// Left and right node degree tuples of a bipartite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVectors {
    pub left: Vec<usize>,
    pub right: Vec<usize>,
}

/// The mixed digraph `R(S; B)`: edges of `S` are bidirected, the remaining
/// edges of `B` are directed from the left side to the right side.
#[derive(Debug, Clone)]
pub struct RecessionGraph {
    base: BipartiteGraph,
    bidirected: BTreeSet<Edge>,
}

impl RecessionGraph {
    pub fn base(&self) -> &BipartiteGraph {
        &self.base
    }

    pub fn bidirected(&self) -> &BTreeSet<Edge> {
        &self.bidirected
    }

    pub fn forward_only(&self) -> BTreeSet<Edge> {
        self.base
            .edges()
            .filter(|e| !self.bidirected.contains(e))
            .collect()
    }
}

/// An undirected graph on `[n]`, parallel edges allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

/// The bipartite graph of finite entries.
pub fn support_graph(a: &TropicalMatrix) -> BipartiteGraph {
    let edges = (0..a.rows())
        .flat_map(|i| (0..a.cols()).map(move |k| (i, k)))
        .filter(|&(i, k)| a.is_supported(i, k));
    BipartiteGraph::new(a.rows(), a.cols(), edges).expect("support edges are in range")
}

pub fn degree_vectors(b: &BipartiteGraph) -> DegreeVectors {
    let mut left = vec![0usize; b.left_count()];
    let mut right = vec![0usize; b.right_count()];
    for (i, j) in b.edges() {
        left[i] += 1;
        right[j] += 1;
    }
    DegreeVectors { left, right }
}

pub fn recession_graph(
    s: &BTreeSet<Edge>,
    b: &BipartiteGraph,
) -> Result<RecessionGraph> {
    for &e in s {
        if !b.contains(e) {
            return Err(Error::InvalidSubgraph(format!(
                "edge ({}, {}) not in the base graph",
                e.0 + 1,
                e.1 + 1
            )));
        }
    }
    Ok(RecessionGraph {
        base: b.clone(),
        bidirected: s.clone(),
    })
}

/// Strong connectivity of `R(S; B)` over all `d + n` nodes.
pub fn is_strongly_connected(r: &RecessionGraph) -> bool {
    let d = r.base.left_count();
    let n = r.base.right_count();
    let mut adj = vec![Vec::new(); d + n];
    for (i, j) in r.base.edges() {
        adj[i].push(d + j);
        if r.bidirected.contains(&(i, j)) {
            adj[d + j].push(i);
        }
    }
    strongly_connected(&adj)
}

fn strongly_connected(adj: &[Vec<usize>]) -> bool {
    let v = adj.len();
    if v <= 1 {
        return true;
    }
    if !reaches_all(adj, 0) {
        return false;
    }
    let mut rev = vec![Vec::new(); v];
    for (u, outs) in adj.iter().enumerate() {
        for &w in outs {
            rev[w].push(u);
        }
    }
    reaches_all(&rev, 0)
}

fn reaches_all(adj: &[Vec<usize>], start: usize) -> bool {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![start];
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                stack.push(w);
            }
        }
    }
    count == adj.len()
}

fn component_count(v: usize, edges: impl Iterator<Item = (usize, usize)>) -> usize {
    let mut dsu = Dsu::new(v);
    for (a, b) in edges {
        dsu.union(a, b);
    }
    dsu.components()
}

/// Union-find with component counting.
pub(crate) struct Dsu {
    parent: Vec<usize>,
    comps: usize,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n).collect(),
            comps: n,
        }
    }

    pub(crate) fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    /// Returns false if `a` and `b` were already connected.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            return false;
        }
        self.parent[ra] = rb;
        self.comps -= 1;
        true
    }

    pub(crate) fn components(&self) -> usize {
        self.comps
    }
}

/// Recession connectivity with the default size cap.
pub fn recession_connectivity(b: &BipartiteGraph) -> Result<usize> {
    recession_connectivity_capped(b, DEFAULT_LAMBDA_CAP)
}

/// Largest component count of a subgraph `S` with `R(S; B)` strongly
/// connected.
///
/// Any minimal such `S` is a forest covering every node, so a forest with
/// `c` components has exactly `d + n - c` edges. The search looks for the
/// smallest strongly connecting forest, branching over edges with the
/// matching number as the starting bound on `c`.
pub fn recession_connectivity_capped(b: &BipartiteGraph, cap: usize) -> Result<usize> {
    if !b.is_connected() {
        return Err(Error::NotConnected);
    }
    if b.edge_count() > cap {
        return Err(Error::TooLarge {
            what: "edge set for recession connectivity",
            size: b.edge_count(),
            cap,
        });
    }
    let ub = b
        .left_count()
        .min(b.right_count())
        .min(matching_number(b));
    for c in (1..=ub).rev() {
        if find_connecting_forest(b, c) {
            return Ok(c);
        }
    }
    // c = 1 always succeeds with a spanning tree of a connected graph
    unreachable!("a spanning tree strongly connects R(S; B)")
}

/// Searches for a forest with exactly `c` components whose recession graph
/// is strongly connected.
fn find_connecting_forest(b: &BipartiteGraph, c: usize) -> bool {
    let d = b.left_count();
    let n = b.right_count();
    let v = d + n;
    if c > v / 2 {
        return false;
    }
    let needed = v - c;
    let edges: Vec<Edge> = b.edges().collect();
    let m = edges.len();
    if needed > m {
        return false;
    }
    // remaining_incident[x] counts edges with index >= current cursor at x
    let mut remaining = vec![0usize; v];
    for &(i, j) in &edges {
        remaining[i] += 1;
        remaining[d + j] += 1;
    }
    let mut covered = vec![0usize; v];
    let mut chosen: Vec<Edge> = Vec::with_capacity(needed);

    struct Ctx<'a> {
        b: &'a BipartiteGraph,
        edges: &'a [Edge],
        d: usize,
        needed: usize,
    }

    fn dfs(
        ctx: &Ctx,
        idx: usize,
        parent: &mut Vec<usize>,
        covered: &mut [usize],
        remaining: &mut [usize],
        chosen: &mut Vec<Edge>,
    ) -> bool {
        if chosen.len() == ctx.needed {
            let s: BTreeSet<Edge> = chosen.iter().copied().collect();
            let r = RecessionGraph {
                base: ctx.b.clone(),
                bidirected: s,
            };
            return is_strongly_connected(&r);
        }
        if idx == ctx.edges.len() || ctx.needed - chosen.len() > ctx.edges.len() - idx {
            return false;
        }
        let (i, j) = ctx.edges[idx];
        let (u, w) = (i, ctx.d + j);

        // branch 1: take the edge if it keeps the selection a forest
        let ru = find(parent, u);
        let rw = find(parent, w);
        if ru != rw {
            parent[ru] = rw;
            covered[u] += 1;
            covered[w] += 1;
            chosen.push((i, j));
            if dfs(ctx, idx + 1, parent, covered, remaining, chosen) {
                return true;
            }
            chosen.pop();
            covered[u] -= 1;
            covered[w] -= 1;
            parent[ru] = ru;
        }

        // branch 2: skip it, unless that strands an uncovered endpoint
        remaining[u] -= 1;
        remaining[w] -= 1;
        let stranded = (covered[u] == 0 && remaining[u] == 0)
            || (covered[w] == 0 && remaining[w] == 0);
        let found = !stranded && dfs(ctx, idx + 1, parent, covered, remaining, chosen);
        remaining[u] += 1;
        remaining[w] += 1;
        found
    }

    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }

    let ctx = Ctx {
        b,
        edges: &edges,
        d,
        needed,
    };
    let mut parent: Vec<usize> = (0..v).collect();
    dfs(&ctx, 0, &mut parent, &mut covered, &mut remaining, &mut chosen)
}

/// Maximum matching cardinality, by augmenting paths.
pub fn matching_number(b: &BipartiteGraph) -> usize {
    let d = b.left_count();
    let adj: Vec<Vec<usize>> = (0..d).map(|i| b.left_neighbors(i)).collect();
    let mut match_right = vec![usize::MAX; b.right_count()];
    let mut size = 0;
    for i in 0..d {
        let mut seen = vec![false; b.right_count()];
        if augment(i, &adj, &mut match_right, &mut seen) {
            size += 1;
        }
    }
    size
}

fn augment(
    i: usize,
    adj: &[Vec<usize>],
    match_right: &mut [usize],
    seen: &mut [bool],
) -> bool {
    for &j in &adj[i] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if match_right[j] == usize::MAX || augment(match_right[j], adj, match_right, seen) {
            match_right[j] = i;
            return true;
        }
    }
    false
}

/// Number of spanning trees, as the determinant of a reduced Laplacian.
pub fn count_spanning_trees(g: &SimpleGraph) -> BigInt {
    if g.vertices == 0 {
        return BigInt::zero();
    }
    if g.vertices == 1 {
        return BigInt::one();
    }
    let k = g.vertices - 1;
    let mut lap = vec![vec![BigInt::zero(); k]; k];
    for &(a, b) in &g.edges {
        if a == b {
            continue;
        }
        if a < k {
            lap[a][a] += 1;
        }
        if b < k {
            lap[b][b] += 1;
        }
        if a < k && b < k {
            lap[a][b] -= 1;
            lap[b][a] -= 1;
        }
    }
    integer_determinant(lap)
}

/// Number of acyclic edge subsets, by direct enumeration.
pub fn count_forests(g: &SimpleGraph) -> BigInt {
    let m = g.edges.len();
    assert!(m <= 26, "forest enumeration is meant for desk-scale graphs");
    let mut count = BigInt::zero();
    for mask in 0u64..(1u64 << m) {
        let mut dsu = Dsu::new(g.vertices);
        let mut acyclic = true;
        for (t, &(a, b)) in g.edges.iter().enumerate() {
            if mask >> t & 1 == 1 && !dsu.union(a, b) {
                acyclic = false;
                break;
            }
        }
        if acyclic {
            count += 1;
        }
    }
    count
}

/// Exact determinant by fraction-free Bareiss elimination.
fn integer_determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let swap = (k + 1..n).find(|&r| !m[r][k].is_zero());
            match swap {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone() * sign;
    debug_assert!(!det.is_negative(), "Laplacian minors are nonnegative");
    det
}
