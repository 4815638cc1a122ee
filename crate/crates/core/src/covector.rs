//! Covector types of points, cell feasibility through difference constraints
//! with strict edges, enumeration of the tropical complex and its bounded
//! subcomplex, genericity testing, and seeded generic lifts.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{Integer, One, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::graphcore::{
    self, support_graph, BipartiteGraph, Edge, RecessionGraph, TropicalMatrix,
};
use crate::rat::ExtRat;
use crate::{Error, Result, DEFAULT_ENUM_CAP};

/// A covector: the subgraph of the support graph selected by a point, one
/// nonempty set of rows per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypeGraph {
    base: BipartiteGraph,
    selected: BTreeSet<Edge>,
}

impl TypeGraph {
    pub fn new(base: BipartiteGraph, selected: impl IntoIterator<Item = Edge>) -> Result<Self> {
        let selected: BTreeSet<Edge> = selected.into_iter().collect();
        for &e in &selected {
            if !base.contains(e) {
                return Err(Error::InvalidSubgraph(format!(
                    "selected edge ({}, {}) is outside the support",
                    e.0 + 1,
                    e.1 + 1
                )));
            }
        }
        Ok(TypeGraph { base, selected })
    }

    pub fn base(&self) -> &BipartiteGraph {
        &self.base
    }

    pub fn selected(&self) -> &BTreeSet<Edge> {
        &self.selected
    }

    /// Rows selected in column `j`.
    pub fn column_selection(&self, j: usize) -> Vec<usize> {
        self.selected
            .iter()
            .filter(|&&(_, k)| k == j)
            .map(|&(i, _)| i)
            .collect()
    }

    /// True when every column has at least one selected edge.
    pub fn covers_columns(&self) -> bool {
        (0..self.base.right_count()).all(|j| self.selected.iter().any(|&(_, k)| k == j))
    }

    /// Complementary edge set inside the support graph.
    pub fn cotype(&self) -> BTreeSet<Edge> {
        self.base
            .edges()
            .filter(|e| !self.selected.contains(e))
            .collect()
    }

    /// Row sums of the selection table; the left degree vector of the
    /// selected subgraph.
    pub fn coarse(&self) -> Vec<usize> {
        let mut t = vec![0usize; self.base.left_count()];
        for &(i, _) in &self.selected {
            t[i] += 1;
        }
        t
    }

    /// Row sums of the complementary table.
    pub fn coarse_cotype(&self) -> Vec<usize> {
        let mut t = vec![0usize; self.base.left_count()];
        for (i, _) in self.cotype() {
            t[i] += 1;
        }
        t
    }

    /// Right degree vector of the selected subgraph.
    pub fn right_degrees(&self) -> Vec<usize> {
        let mut r = vec![0usize; self.base.right_count()];
        for &(_, j) in &self.selected {
            r[j] += 1;
        }
        r
    }

    /// Connected components of the selected subgraph over all `d + n` nodes.
    pub fn component_count(&self) -> usize {
        let d = self.base.left_count();
        let mut dsu = graphcore::Dsu::new(d + self.base.right_count());
        for &(i, j) in &self.selected {
            dsu.union(i, d + j);
        }
        dsu.components()
    }

    /// The mixed digraph with the selected edges bidirected.
    pub fn recession_graph(&self) -> RecessionGraph {
        graphcore::recession_graph(&self.selected, &self.base).expect("selection is a subgraph")
    }
}

/// The coarse type of a covector.
pub fn coarse_type(t: &TypeGraph) -> Vec<usize> {
    t.coarse()
}

/// Covector of a rational point: edge `(i, k)` is selected when row `i`
/// attains the column maximum of `p_i - a_{ik}`.
pub fn type_at_point(a: &TropicalMatrix, p: &[BigRational]) -> TypeGraph {
    assert_eq!(p.len(), a.rows(), "point dimension must match row count");
    let base = support_graph(a);
    let mut selected = BTreeSet::new();
    for k in 0..a.cols() {
        let mut best: Option<BigRational> = None;
        let mut arg: Vec<usize> = Vec::new();
        for i in a.column_support(k) {
            let v = &p[i] - a.entry(i, k).finite().expect("support entry is finite");
            match &best {
                Some(b) if v < *b => {}
                Some(b) if v == *b => arg.push(i),
                _ => {
                    best = Some(v);
                    arg = vec![i];
                }
            }
        }
        for i in arg {
            selected.insert((i, k));
        }
    }
    TypeGraph { base, selected }
}

/// Whether a cell is tested as a relatively open set (covector exactly `T`)
/// or as a closed cell (covector contains `T`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FeasMode {
    RelativelyOpen,
    Closed,
}

// Difference constraints are solved over integers after clearing
// denominators. A strict inequality carries an infinitesimal penalty, so
// weights are pairs (w, s) standing for w - s*eps, compared
// lexicographically. Small instances stay on i128; anything larger falls
// back to BigInt.
enum Weights {
    Small(Vec<i128>),
    Big(Vec<BigInt>),
}

struct ScaledMatrix {
    scale: BigInt,
    // entries[i][k] = a[i][k] * scale for finite entries
    entries: Vec<Vec<Option<BigInt>>>,
    small: bool,
}

fn scale_matrix(a: &TropicalMatrix) -> ScaledMatrix {
    let mut scale = BigInt::one();
    for i in 0..a.rows() {
        for k in 0..a.cols() {
            if let Some(q) = a.entry(i, k).finite() {
                scale = scale.lcm(q.denom());
            }
        }
    }
    let entries: Vec<Vec<Option<BigInt>>> = (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|k| {
                    a.entry(i, k)
                        .finite()
                        .map(|q| q.numer() * &scale / q.denom())
                })
                .collect()
        })
        .collect();
    let bound = BigInt::from(1i128 << 60) / BigInt::from((a.rows() + 2) as i64);
    let small = entries
        .iter()
        .flatten()
        .flatten()
        .all(|w| w.magnitude() < bound.magnitude());
    ScaledMatrix {
        scale,
        entries,
        small,
    }
}

#[derive(Clone)]
struct Constraint {
    from: usize,
    to: usize,
    weight: BigInt,
    strict: bool,
}

/// Shortest-path potentials for `x_to - x_from <= weight - strict*eps`,
/// or `None` when some cycle is negative in the lexicographic order.
fn solve_difference_system(
    n: usize,
    constraints: &[Constraint],
    small: bool,
) -> Option<(Weights, Vec<u64>)> {
    if small {
        let cs: Vec<(usize, usize, i128, u64)> = constraints
            .iter()
            .map(|c| {
                let w = i128::try_from(&c.weight).expect("weight fits i128 in small mode");
                (c.from, c.to, w, c.strict as u64)
            })
            .collect();
        let mut dist: Vec<(i128, u64)> = vec![(0, 0); n];
        for sweep in 0..=n {
            let mut changed = false;
            for &(from, to, w, s) in &cs {
                let cand = (dist[from].0 + w, dist[from].1 + s);
                // cand < dist[to] in the order of w - s*eps
                if cand.0 < dist[to].0 || (cand.0 == dist[to].0 && cand.1 > dist[to].1) {
                    dist[to] = cand;
                    changed = true;
                }
            }
            if !changed {
                let (ws, ss) = dist.into_iter().unzip();
                return Some((Weights::Small(ws), ss));
            }
            if sweep == n {
                return None;
            }
        }
        unreachable!()
    } else {
        let mut dist: Vec<(BigInt, u64)> = vec![(BigInt::zero(), 0); n];
        for sweep in 0..=n {
            let mut changed = false;
            for c in constraints {
                let cand_w = &dist[c.from].0 + &c.weight;
                let cand_s = dist[c.from].1 + c.strict as u64;
                let better = cand_w < dist[c.to].0
                    || (cand_w == dist[c.to].0 && cand_s > dist[c.to].1);
                if better {
                    dist[c.to] = (cand_w, cand_s);
                    changed = true;
                }
            }
            if !changed {
                let (ws, ss) = dist.into_iter().unzip();
                return Some((Weights::Big(ws), ss));
            }
            if sweep == n {
                return None;
            }
        }
        unreachable!()
    }
}

/// Constraints forcing the covector of `x` to contain the given selection in
/// column `k`; strict edges additionally exclude the unselected rows.
fn column_constraints(
    sm: &ScaledMatrix,
    support: &[usize],
    selection: &[usize],
    k: usize,
    strict_outside: bool,
    out: &mut Vec<Constraint>,
) {
    for &j in selection {
        let aj = sm.entries[j][k].as_ref().expect("selected row is finite");
        for &i in support {
            if i == j {
                continue;
            }
            let ai = sm.entries[i][k].as_ref().expect("supported row is finite");
            out.push(Constraint {
                from: j,
                to: i,
                weight: ai - aj,
                strict: strict_outside && !selection.contains(&i),
            });
        }
    }
}

fn system_for_type(
    a: &TropicalMatrix,
    sm: &ScaledMatrix,
    t: &TypeGraph,
    mode: FeasMode,
) -> Result<Vec<Constraint>> {
    for j in 0..a.cols() {
        if !t.selected.iter().any(|&(_, k)| k == j) {
            return Err(Error::InvalidType(j));
        }
    }
    let strict = matches!(mode, FeasMode::RelativelyOpen);
    let mut out = Vec::new();
    for k in 0..a.cols() {
        let support = a.column_support(k);
        let selection = t.column_selection(k);
        column_constraints(sm, &support, &selection, k, strict, &mut out);
    }
    Ok(out)
}

/// Satisfiability of the cell of covector `T`, relatively open or closed.
pub fn cell_feasible(a: &TropicalMatrix, t: &TypeGraph, mode: FeasMode) -> Result<bool> {
    let sm = scale_matrix(a);
    let cs = system_for_type(a, &sm, t, mode)?;
    Ok(solve_difference_system(a.rows(), &cs, sm.small).is_some())
}

/// Satisfiability of the union of the two closed systems, used to probe
/// intersections of closed cells.
pub fn joint_closed_feasible(a: &TropicalMatrix, s: &TypeGraph, t: &TypeGraph) -> Result<bool> {
    let sm = scale_matrix(a);
    let mut cs = system_for_type(a, &sm, s, FeasMode::Closed)?;
    cs.extend(system_for_type(a, &sm, t, FeasMode::Closed)?);
    Ok(solve_difference_system(a.rows(), &cs, sm.small).is_some())
}

/// A rational point whose covector is exactly `T`, normalized so the first
/// coordinate is zero.
pub fn witness_point(a: &TropicalMatrix, t: &TypeGraph) -> Result<Vec<BigRational>> {
    let sm = scale_matrix(a);
    let cs = system_for_type(a, &sm, t, FeasMode::RelativelyOpen)?;
    let (weights, stricts) =
        solve_difference_system(a.rows(), &cs, sm.small).ok_or(Error::NoWitness)?;
    let w: Vec<BigRational> = match weights {
        Weights::Small(ws) => ws
            .into_iter()
            .map(|v| BigRational::new(BigInt::from(v), sm.scale.clone()))
            .collect(),
        Weights::Big(ws) => ws
            .into_iter()
            .map(|v| BigRational::new(v, sm.scale.clone()))
            .collect(),
    };
    // realize w_v - eps * s_v for a small rational eps, shrinking until the
    // covector round-trips
    let mut eps = BigRational::one();
    for _ in 0..256 {
        let point: Vec<BigRational> = w
            .iter()
            .zip(&stricts)
            .map(|(wv, &sv)| wv - &eps * BigRational::from_integer(BigInt::from(sv)))
            .collect();
        let normalized: Vec<BigRational> = point.iter().map(|x| x - &point[0]).collect();
        if type_at_point(a, &normalized).selected == t.selected {
            return Ok(normalized);
        }
        eps /= BigInt::from(2);
    }
    Err(Error::NoWitness)
}

/// One cell of the tropical complex.
#[derive(Debug, Clone)]
pub struct CellRecord {
    pub type_graph: TypeGraph,
    pub dim: usize,
    pub bounded: bool,
    pub witness: Vec<BigRational>,
}

/// The polyhedral decomposition induced by an arrangement, as the list of
/// its cells plus the covering relation of the face order.
#[derive(Debug, Clone)]
pub struct TropicalComplex {
    matrix: TropicalMatrix,
    base: BipartiteGraph,
    cells: Vec<CellRecord>,
    /// Covering pairs `(face, cell)` of the order `C_S <= C_T  iff  B_S >= B_T`.
    hasse: Vec<(usize, usize)>,
}

impl TropicalComplex {
    pub fn matrix(&self) -> &TropicalMatrix {
        &self.matrix
    }

    pub fn base(&self) -> &BipartiteGraph {
        &self.base
    }

    pub fn cells(&self) -> &[CellRecord] {
        &self.cells
    }

    pub fn hasse(&self) -> &[(usize, usize)] {
        &self.hasse
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Largest cell dimension, `None` when empty.
    pub fn dim(&self) -> Option<usize> {
        self.cells.iter().map(|c| c.dim).max()
    }

    /// Cell counts by dimension.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0usize; self.dim().map_or(0, |d| d + 1)];
        for c in &self.cells {
            f[c.dim] += 1;
        }
        f
    }

    /// The subcomplex of bounded cells.
    pub fn bounded(&self) -> TropicalComplex {
        let cells: Vec<CellRecord> = self.cells.iter().filter(|c| c.bounded).cloned().collect();
        let hasse = covering_pairs(&self.base, &cells);
        TropicalComplex {
            matrix: self.matrix.clone(),
            base: self.base.clone(),
            cells,
            hasse,
        }
    }

    pub fn find_cell(&self, selected: &BTreeSet<Edge>) -> Option<&CellRecord> {
        self.cells
            .iter()
            .find(|c| c.type_graph.selected() == selected)
    }
}

fn edge_masks(base: &BipartiteGraph, cells: &[CellRecord]) -> Vec<u64> {
    let index: std::collections::BTreeMap<Edge, usize> = base
        .edges()
        .enumerate()
        .map(|(t, e)| (e, t))
        .collect();
    cells
        .iter()
        .map(|c| {
            c.type_graph
                .selected()
                .iter()
                .fold(0u64, |m, e| m | 1 << index[e])
        })
        .collect()
}

fn covering_pairs(base: &BipartiteGraph, cells: &[CellRecord]) -> Vec<(usize, usize)> {
    let masks = edge_masks(base, cells);
    let superset = |a: u64, b: u64| a != b && a & b == b;
    let mut pairs = Vec::new();
    for (s, &ms) in masks.iter().enumerate() {
        for (t, &mt) in masks.iter().enumerate() {
            // C_s is a proper face of C_t when the type of s contains the type of t
            if !superset(ms, mt) {
                continue;
            }
            let intermediate = masks
                .iter()
                .any(|&mk| superset(ms, mk) && superset(mk, mt));
            if !intermediate {
                pairs.push((s, t));
            }
        }
    }
    pairs
}

/// Enumerates the cells of the tropical complex with the default cap.
pub fn enumerate_cells(a: &TropicalMatrix) -> Result<TropicalComplex> {
    enumerate_cells_capped(a, DEFAULT_ENUM_CAP)
}

/// Enumerates all covectors with every column covered whose relatively open
/// cell is nonempty, depth-first over columns with incremental infeasibility
/// pruning.
pub fn enumerate_cells_capped(a: &TropicalMatrix, cap: usize) -> Result<TropicalComplex> {
    let base = support_graph(a);
    // covectors are stored as u64 bit masks over the support edges
    let cap = cap.min(63);
    if base.edge_count() > cap {
        return Err(Error::TooLarge {
            what: "support for cell enumeration",
            size: base.edge_count(),
            cap,
        });
    }
    let sm = scale_matrix(a);
    let supports: Vec<Vec<usize>> = (0..a.cols()).map(|k| a.column_support(k)).collect();

    let mut found: Vec<Vec<Vec<usize>>> = Vec::new();
    let mut stack: Vec<Vec<usize>> = Vec::new();
    let mut constraints: Vec<Constraint> = Vec::new();
    let mut marks: Vec<usize> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        a: &TropicalMatrix,
        sm: &ScaledMatrix,
        supports: &[Vec<usize>],
        k: usize,
        stack: &mut Vec<Vec<usize>>,
        constraints: &mut Vec<Constraint>,
        marks: &mut Vec<usize>,
        found: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if k == a.cols() {
            found.push(stack.clone());
            return;
        }
        let support = &supports[k];
        for mask in 1u32..(1 << support.len()) {
            let selection: Vec<usize> = support
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            marks.push(constraints.len());
            column_constraints(sm, support, &selection, k, true, constraints);
            if solve_difference_system(a.rows(), constraints, sm.small).is_some() {
                stack.push(selection);
                dfs(a, sm, supports, k + 1, stack, constraints, marks, found);
                stack.pop();
            }
            let mark = marks.pop().unwrap();
            constraints.truncate(mark);
        }
    }

    dfs(
        a,
        &sm,
        &supports,
        0,
        &mut stack,
        &mut constraints,
        &mut marks,
        &mut found,
    );

    let mut cells: Vec<CellRecord> = Vec::with_capacity(found.len());
    for selections in found {
        let selected: BTreeSet<Edge> = selections
            .iter()
            .enumerate()
            .flat_map(|(k, rows)| rows.iter().map(move |&i| (i, k)))
            .collect();
        let t = TypeGraph {
            base: base.clone(),
            selected,
        };
        let dim = t.component_count() - 1;
        let bounded = graphcore::is_strongly_connected(&t.recession_graph());
        let witness = witness_point(a, &t)?;
        cells.push(CellRecord {
            type_graph: t,
            dim,
            bounded,
            witness,
        });
    }
    cells.sort_by(|x, y| {
        (x.dim, x.type_graph.selected()).cmp(&(y.dim, y.type_graph.selected()))
    });
    let hasse = covering_pairs(&base, &cells);
    Ok(TropicalComplex {
        matrix: a.clone(),
        base,
        cells,
        hasse,
    })
}

/// The bounded subcomplex; empty exactly when the support is disconnected.
pub fn bounded_complex(a: &TropicalMatrix) -> Result<TropicalComplex> {
    Ok(enumerate_cells(a)?.bounded())
}

pub fn bounded_complex_capped(a: &TropicalMatrix, cap: usize) -> Result<TropicalComplex> {
    Ok(enumerate_cells_capped(a, cap)?.bounded())
}

/// True when every vertex of the complex has a spanning tree as its
/// covector, i.e. the dual subdivision is a triangulation.
pub fn is_sufficiently_generic(a: &TropicalMatrix) -> Result<bool> {
    is_sufficiently_generic_capped(a, DEFAULT_ENUM_CAP)
}

pub fn is_sufficiently_generic_capped(a: &TropicalMatrix, cap: usize) -> Result<bool> {
    let base = support_graph(a);
    if !base.is_connected() {
        return Err(Error::NotConnected);
    }
    let complex = enumerate_cells_capped(a, cap)?;
    let tree_size = base.left_count() + base.right_count() - 1;
    Ok(complex
        .cells()
        .iter()
        .filter(|c| c.dim == 0)
        .all(|c| c.type_graph.selected().len() == tree_size))
}

/// Generic check computed on an already enumerated complex.
pub fn complex_is_generic(complex: &TropicalComplex) -> bool {
    let tree_size = complex.base().left_count() + complex.base().right_count() - 1;
    complex
        .cells()
        .iter()
        .filter(|c| c.dim == 0)
        .all(|c| c.type_graph.selected().len() == tree_size)
}

/// A random integer matrix with support exactly `b` that passes the
/// genericity test; deterministic per seed, retrying with fresh draws.
pub fn random_generic_lift(b: &BipartiteGraph, seed: u64) -> Result<TropicalMatrix> {
    random_generic_lift_capped(b, seed, DEFAULT_ENUM_CAP)
}

pub fn random_generic_lift_capped(
    b: &BipartiteGraph,
    seed: u64,
    cap: usize,
) -> Result<TropicalMatrix> {
    if !b.is_connected() {
        return Err(Error::NotConnected);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..64 {
        let entries: Vec<Vec<ExtRat>> = (0..b.left_count())
            .map(|i| {
                (0..b.right_count())
                    .map(|j| {
                        if b.contains((i, j)) {
                            ExtRat::from_int(rng.gen_range(0..1 << 20))
                        } else {
                            ExtRat::Infinity
                        }
                    })
                    .collect()
            })
            .collect();
        let a = TropicalMatrix::new(entries)?;
        if is_sufficiently_generic_capped(&a, cap)? {
            return Ok(a);
        }
    }
    Err(Error::GenericityFailure)
}
