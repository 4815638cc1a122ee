//! Exact simplicial homology over GF(2) and the rationals, the Hochster
//! subset-scan Betti oracle, Betti tables read off the bounded complex,
//! regularity / projective / Krull dimension, regularity bounds, the linear
//! resolution classifier, and downset acyclicity checks.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet};

use num::bigint::BigInt;
use num::{One, Zero};

use crate::covector::{bounded_complex, random_generic_lift, TropicalComplex};
use crate::graphcore::{
    degree_vectors, matching_number, recession_connectivity, BipartiteGraph, Edge,
};
use crate::ideals::{
    alexander_dual, fine_cotype_ideal_of, monomial_initial_ideal_of, toric_edge_ideal,
    MonomialIdeal, Variable,
};
use crate::subdiv::SimplicialComplex;
use crate::{Error, Result, HOCHSTER_VAR_CAP};

/// Coefficient field for homology ranks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    GF2,
    QQ,
}

/// Reduced homology ranks by dimension; only nonzero ranks are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChainComplexRanks {
    pub gf2: BTreeMap<i64, usize>,
    pub rational: Option<BTreeMap<i64, usize>>,
}

impl ChainComplexRanks {
    pub fn is_acyclic(&self) -> bool {
        self.gf2.is_empty() && self.rational.as_ref().is_none_or(|r| r.is_empty())
    }

    pub fn rank(&self, dim: i64) -> usize {
        self.gf2.get(&dim).copied().unwrap_or(0)
    }
}

// ---------------------------------------------------------------------------
// rank computations

fn gf2_rank(mut rows: Vec<Vec<u64>>, cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let (w, b) = (col / 64, col % 64);
        let Some(p) = (rank..rows.len()).find(|&r| rows[r][w] >> b & 1 == 1) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && row[w] >> b & 1 == 1 {
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x ^= y;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Fraction-free rank over the rationals; i128 fast path with a BigInt
/// rerun on overflow.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    match rational_rank_i128(rows) {
        Some(r) => r,
        None => rational_rank_big(rows),
    }
}

fn rational_rank_i128(rows: &[Vec<i64>]) -> Option<usize> {
    let mut m: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev: i128 = 1;
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let a = m[r][c].checked_mul(m[rank][col])?;
                let b = m[r][col].checked_mul(m[rank][c])?;
                m[r][c] = a.checked_sub(b)? / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    Some(rank)
}

fn rational_rank_big(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let nrows = m.len();
    let ncols = m.first().map_or(0, |r| r.len());
    let mut prev = BigInt::one();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let num = &m[r][c] * &m[rank][col] - &m[r][col] * &m[rank][c];
                m[r][c] = num / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
        if rank == nrows {
            break;
        }
    }
    rank
}

// ---------------------------------------------------------------------------
// simplicial chain complexes

/// Reduced homology ranks of a set of simplices given as sorted vertex
/// lists. The empty face must be included whenever the complex is nonvoid.
fn reduced_ranks_of_faces(faces: &[Vec<u32>], field: Field) -> BTreeMap<i64, usize> {
    let mut by_dim: BTreeMap<i64, Vec<&Vec<u32>>> = BTreeMap::new();
    for f in faces {
        by_dim.entry(f.len() as i64 - 1).or_default().push(f);
    }
    let mut out = BTreeMap::new();
    if by_dim.is_empty() {
        return out;
    }
    let top = *by_dim.keys().max().unwrap();
    // index maps per dimension
    let mut index: BTreeMap<i64, HashMap<&Vec<u32>, usize>> = BTreeMap::new();
    for (&d, fs) in &by_dim {
        let mut map = HashMap::new();
        let mut sorted: Vec<&Vec<u32>> = fs.clone();
        sorted.sort();
        for (t, f) in sorted.into_iter().enumerate() {
            map.insert(f, t);
        }
        index.insert(d, map);
    }
    // boundary ranks, dim j -> rank of C_j -> C_{j-1}
    let mut boundary_rank: BTreeMap<i64, usize> = BTreeMap::new();
    for j in 0..=top {
        let (Some(rows_faces), Some(cols_index)) = (by_dim.get(&j), index.get(&(j - 1))) else {
            continue;
        };
        let ncols = cols_index.len();
        let rank = match field {
            Field::GF2 => {
                let words = ncols.div_ceil(64).max(1);
                let rows: Vec<Vec<u64>> = rows_faces
                    .iter()
                    .map(|f| {
                        let mut row = vec![0u64; words];
                        for t in 0..f.len() {
                            let mut sub = (*f).clone();
                            sub.remove(t);
                            let c = cols_index[&sub];
                            row[c / 64] |= 1 << (c % 64);
                        }
                        row
                    })
                    .collect();
                gf2_rank(rows, ncols)
            }
            Field::QQ => {
                let rows: Vec<Vec<i64>> = rows_faces
                    .iter()
                    .map(|f| {
                        let mut row = vec![0i64; ncols];
                        for t in 0..f.len() {
                            let mut sub = (*f).clone();
                            sub.remove(t);
                            row[cols_index[&sub]] = if t % 2 == 0 { 1 } else { -1 };
                        }
                        row
                    })
                    .collect();
                rational_rank(&rows)
            }
        };
        boundary_rank.insert(j, rank);
    }
    for (&j, fs) in &by_dim {
        let rank_j = boundary_rank.get(&j).copied().unwrap_or(0);
        let rank_above = boundary_rank.get(&(j + 1)).copied().unwrap_or(0);
        let h = fs.len() - rank_j - rank_above;
        if h > 0 {
            out.insert(j, h);
        }
    }
    out
}

/// All faces of the complex including the empty face, as sorted index lists.
fn closure_faces<V>(complex: &SimplicialComplex<V>) -> Vec<Vec<u32>> {
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    for facet in complex.facets() {
        let verts: Vec<u32> = facet.iter().map(|&v| v as u32).collect();
        assert!(verts.len() <= 25, "facet too large for subset closure");
        for mask in 0u32..(1 << verts.len()) {
            let face: Vec<u32> = verts
                .iter()
                .enumerate()
                .filter(|(t, _)| mask >> t & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            seen.insert(face);
        }
    }
    let mut faces: Vec<Vec<u32>> = seen.into_iter().collect();
    faces.sort();
    faces
}

/// Reduced homology of a simplicial complex over GF(2), optionally
/// cross-checked over the rationals.
pub fn reduced_homology<V>(
    complex: &SimplicialComplex<V>,
    with_rational: bool,
) -> ChainComplexRanks {
    let faces = closure_faces(complex);
    ranks_with_fields(&faces, with_rational)
}

fn ranks_with_fields(faces: &[Vec<u32>], with_rational: bool) -> ChainComplexRanks {
    let gf2 = reduced_ranks_of_faces(faces, Field::GF2);
    let rational = with_rational.then(|| reduced_ranks_of_faces(faces, Field::QQ));
    ChainComplexRanks { gf2, rational }
}

// ---------------------------------------------------------------------------
// polyhedral homology via the order complex of the face poset

/// Chains of the face poset of the given cells; a regular cell complex is
/// homeomorphic to this barycentric subdivision.
fn order_complex_faces(masks: &[u64]) -> Vec<Vec<u32>> {
    if masks.is_empty() {
        return Vec::new();
    }
    // sort by decreasing covector so a chain comparison against the last
    // element suffices
    let mut order: Vec<usize> = (0..masks.len()).collect();
    order.sort_by_key(|&t| (std::cmp::Reverse(masks[t].count_ones()), masks[t]));

    fn extend(
        masks: &[u64],
        order: &[usize],
        from: usize,
        chain: &mut Vec<usize>,
        faces: &mut Vec<Vec<u32>>,
    ) {
        for pos in from..order.len() {
            if let Some(&last) = chain.last() {
                let (a, b) = (masks[order[last]], masks[order[pos]]);
                if a == b || a & b != b {
                    continue;
                }
            }
            chain.push(pos);
            let mut face: Vec<u32> = chain.iter().map(|&p| order[p] as u32).collect();
            face.sort_unstable();
            faces.push(face);
            extend(masks, order, pos + 1, chain, faces);
            chain.pop();
        }
    }

    let mut faces: Vec<Vec<u32>> = vec![Vec::new()];
    let mut chain: Vec<usize> = Vec::new();
    extend(masks, &order, 0, &mut chain, &mut faces);
    faces
}

fn type_masks(complex: &TropicalComplex, cells: &[usize]) -> Vec<u64> {
    let index: BTreeMap<Edge, usize> = complex
        .base()
        .edges()
        .enumerate()
        .map(|(t, e)| (e, t))
        .collect();
    cells
        .iter()
        .map(|&c| {
            complex.cells()[c]
                .type_graph
                .selected()
                .iter()
                .fold(0u64, |m, e| m | 1 << index[e])
        })
        .collect()
}

/// Reduced homology of a downward-closed family of cells of a bounded
/// complex, computed on the barycentric subdivision.
pub fn cell_family_homology(
    complex: &TropicalComplex,
    cells: &[usize],
    with_rational: bool,
) -> ChainComplexRanks {
    let masks = type_masks(complex, cells);
    let faces = order_complex_faces(&masks);
    ranks_with_fields(&faces, with_rational)
}

/// True when the bounded cells with cotype below `bound` form an empty or
/// acyclic subcomplex over GF(2).
pub fn downset_acyclic(bounded: &TropicalComplex, bound: &BTreeSet<Edge>) -> bool {
    let cells: Vec<usize> = bounded
        .cells()
        .iter()
        .enumerate()
        .filter(|(_, c)| c.type_graph.cotype().is_subset(bound))
        .map(|(t, _)| t)
        .collect();
    if cells.is_empty() {
        return true;
    }
    cell_family_homology(bounded, &cells, false).is_acyclic()
}

// ---------------------------------------------------------------------------
// Betti tables

/// Graded Betti numbers of a monomial ideal: `(i, degree) -> count` plus the
/// squarefree multidegree refinement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BettiTable<V: Variable> {
    coarse: BTreeMap<(usize, usize), usize>,
    fine: BTreeMap<(usize, Vec<V>), usize>,
}

impl<V: Variable> Default for BettiTable<V> {
    fn default() -> Self {
        BettiTable {
            coarse: BTreeMap::new(),
            fine: BTreeMap::new(),
        }
    }
}

impl<V: Variable> BettiTable<V> {
    pub fn add(&mut self, i: usize, multidegree: Vec<V>, count: usize) {
        if count == 0 {
            return;
        }
        *self.coarse.entry((i, multidegree.len())).or_default() += count;
        *self.fine.entry((i, multidegree)).or_default() += count;
    }

    pub fn coarse_entries(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.coarse
    }

    pub fn fine_entries(&self) -> &BTreeMap<(usize, Vec<V>), usize> {
        &self.fine
    }

    pub fn is_empty(&self) -> bool {
        self.coarse.is_empty()
    }

    pub fn entry(&self, i: usize, j: usize) -> usize {
        self.coarse.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Largest homological index, the projective dimension of the ideal.
    pub fn top_index(&self) -> Option<usize> {
        self.coarse.keys().map(|&(i, _)| i).max()
    }

    /// `max { j - i }` over nonzero entries.
    pub fn regularity(&self) -> Option<usize> {
        self.coarse.keys().map(|&(i, j)| j - i).max()
    }

    /// When all entries sit on a single diagonal `j = q + i`, returns `q`.
    pub fn linear_diagonal(&self) -> Option<usize> {
        let mut diag = None;
        for &(i, j) in self.coarse.keys() {
            match diag {
                None => diag = Some(j - i),
                Some(q) if q == j - i => {}
                Some(_) => return None,
            }
        }
        diag
    }
}

/// Betti table of a squarefree ideal by Hochster's restriction scan: for
/// each subset of the active variables, the reduced homology of the induced
/// Stanley-Reisner subcomplex.
pub fn hochster_betti<V: Variable>(
    ideal: &MonomialIdeal<V>,
    field: Field,
) -> Result<BettiTable<V>> {
    if !ideal.gens().iter().all(|g| g.is_squarefree()) {
        return Err(Error::NotSquarefree);
    }
    let mut table = BettiTable::default();
    if ideal.is_zero() {
        return Ok(table);
    }
    if ideal.is_unit() {
        table.add(0, Vec::new(), 1);
        return Ok(table);
    }
    let vars: Vec<V> = ideal
        .gens()
        .iter()
        .flat_map(|g| g.support())
        .collect::<BTreeSet<V>>()
        .into_iter()
        .collect();
    let m = vars.len();
    if m > HOCHSTER_VAR_CAP {
        return Err(Error::TooLarge {
            what: "variable universe for the Betti oracle",
            size: m,
            cap: HOCHSTER_VAR_CAP,
        });
    }
    let var_index: BTreeMap<V, usize> = vars.iter().enumerate().map(|(t, &v)| (v, t)).collect();
    let gen_masks: Vec<u64> = ideal
        .gens()
        .iter()
        .map(|g| g.support().iter().fold(0u64, |m, v| m | 1 << var_index[v]))
        .collect();

    for sigma in 1u64..(1 << m) {
        let size = sigma.count_ones() as usize;
        // faces of the restriction: subsets of sigma containing no generator
        let mut faces: Vec<Vec<u32>> = Vec::new();
        let mut tau = sigma;
        loop {
            if gen_masks.iter().all(|&g| g & tau != g) {
                faces.push((0..m as u32).filter(|&t| tau >> t & 1 == 1).collect());
            }
            if tau == 0 {
                break;
            }
            tau = (tau - 1) & sigma;
        }
        if faces.is_empty() {
            continue;
        }
        let ranks = reduced_ranks_of_faces(&faces, field);
        for (&j, &rank) in &ranks {
            let i = size as i64 - j - 2;
            if i < 0 {
                continue;
            }
            let multidegree: Vec<V> = (0..m)
                .filter(|&t| sigma >> t & 1 == 1)
                .map(|t| vars[t])
                .collect();
            table.add(i as usize, multidegree, rank);
        }
    }
    Ok(table)
}

/// Betti table of the fine cotype ideal read off the bounded complex: each
/// `i`-cell contributes its cotype label in homological index `i`.
pub fn cellular_betti(a: &crate::graphcore::TropicalMatrix) -> Result<BettiTable<Edge>> {
    Ok(cellular_betti_of(&bounded_complex(a)?))
}

pub fn cellular_betti_of(bounded: &TropicalComplex) -> BettiTable<Edge> {
    let mut table = BettiTable::default();
    for cell in bounded.cells() {
        let label: Vec<Edge> = cell.type_graph.cotype().into_iter().collect();
        table.add(cell.dim, label, 1);
    }
    table
}

// ---------------------------------------------------------------------------
// ring invariants of the edge ring

/// Castelnuovo-Mumford regularity of the edge ring, as recession
/// connectivity minus one.
pub fn regularity(b: &BipartiteGraph) -> Result<usize> {
    Ok(recession_connectivity(b)? - 1)
}

/// The three independent routes to the regularity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityEvidence {
    /// recession connectivity minus one
    pub lambda_route: usize,
    /// dimension of the bounded complex of a generic lift
    pub complex_route: usize,
    /// top homological index of the cotype ideal's Betti oracle, when the
    /// variable universe is small enough to scan
    pub homological_route: Option<usize>,
}

/// Recomputes the regularity along every available route and checks they
/// agree.
pub fn regularity_verified(b: &BipartiteGraph, seed: u64) -> Result<RegularityEvidence> {
    let lambda_route = regularity(b)?;
    let lift = random_generic_lift(b, seed)?;
    let complex = crate::covector::enumerate_cells(&lift)?;
    let bounded = complex.bounded();
    let complex_route = bounded.dim().ok_or(Error::NotConnected)?;
    let homological_route = if b.edge_count() <= 12 {
        let cotype = fine_cotype_ideal_of(&complex);
        let table = hochster_betti(&cotype, Field::GF2)?;
        Some(table.top_index().ok_or(Error::NotConnected)?)
    } else {
        None
    };
    if lambda_route != complex_route
        || homological_route.is_some_and(|h| h != lambda_route)
    {
        return Err(Error::InvalidMatrix(format!(
            "regularity routes disagree: lambda {lambda_route}, complex {complex_route}, homological {homological_route:?}"
        )));
    }
    Ok(RegularityEvidence {
        lambda_route,
        complex_route,
        homological_route,
    })
}

/// Krull dimension of the edge ring of a bipartite graph on `d + n` nodes.
pub fn krull_dimension(b: &BipartiteGraph) -> usize {
    b.left_count() + b.right_count() - 1
}

/// Upper bounds on the regularity from leaves and from the matching number.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularityBounds {
    /// `min(n - r, d - s) - 1` with `r`, `s` the leaf counts of the right
    /// and left sides; degenerates to `-1` only for single-row or
    /// single-column stars.
    pub leaf_bound: i64,
    /// matching number minus one
    pub matching_bound: usize,
}

pub fn regularity_bounds(b: &BipartiteGraph) -> Result<RegularityBounds> {
    if !b.is_connected() {
        return Err(Error::NotConnected);
    }
    let dv = degree_vectors(b);
    let r = dv.right.iter().filter(|&&x| x == 1).count();
    let s = dv.left.iter().filter(|&&x| x == 1).count();
    let leaf_bound =
        (b.right_count() - r).min(b.left_count() - s) as i64 - 1;
    Ok(RegularityBounds {
        leaf_bound,
        matching_bound: matching_number(b) - 1,
    })
}

/// Outcome of the linear resolution classifier.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LinearClass {
    /// the edge ring has a 2-linear resolution (complete bipartite core with
    /// a side of two, or no cycles at all)
    TwoLinear,
    /// principal edge ideal with a generator of this degree
    Hypersurface(usize),
    NotLinear,
}

/// Classifies the resolution shape by peeling leaves down to the core.
pub fn linear_resolution_class(b: &BipartiteGraph) -> Result<LinearClass> {
    if !b.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut edges: BTreeSet<Edge> = b.edge_set().clone();
    loop {
        let mut left_deg: BTreeMap<usize, usize> = BTreeMap::new();
        let mut right_deg: BTreeMap<usize, usize> = BTreeMap::new();
        for &(i, j) in &edges {
            *left_deg.entry(i).or_default() += 1;
            *right_deg.entry(j).or_default() += 1;
        }
        let before = edges.len();
        edges.retain(|&(i, j)| left_deg[&i] > 1 && right_deg[&j] > 1);
        if edges.len() == before {
            break;
        }
    }
    if edges.is_empty() {
        return Ok(LinearClass::TwoLinear);
    }
    let lefts: BTreeSet<usize> = edges.iter().map(|&(i, _)| i).collect();
    let rights: BTreeSet<usize> = edges.iter().map(|&(_, j)| j).collect();
    let complete = edges.len() == lefts.len() * rights.len();
    if complete && (lefts.len() == 2 || rights.len() == 2) {
        return Ok(LinearClass::TwoLinear);
    }
    let gens = toric_edge_ideal(b);
    if gens.len() == 1 {
        let q = gens[0].plus.degree() as usize;
        if q >= 3 {
            return Ok(LinearClass::Hypersurface(q));
        }
    }
    Ok(LinearClass::NotLinear)
}

/// Checks the Eagon-Reiner style consequence on a generic lift: the dual of
/// the monomial initial ideal has a linear resolution.
pub fn cohen_macaulay_check(b: &BipartiteGraph, seed: u64) -> Result<bool> {
    let lift = random_generic_lift(b, seed)?;
    let complex = crate::covector::enumerate_cells(&lift)?;
    let initial = monomial_initial_ideal_of(&complex);
    let dual = alexander_dual(&initial)?;
    if dual.is_zero() || dual.is_unit() {
        // no cycles: the edge ring is a polynomial ring
        return Ok(true);
    }
    let table = hochster_betti(&dual, Field::GF2)?;
    Ok(table.linear_diagonal().is_some())
}
