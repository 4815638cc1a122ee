//! The dual picture: root polytopes, their regular subdivisions read off the
//! tropical complex, crosscut complexes, Minkowski-cell mixed subdivisions,
//! lattice points and normalized volumes, draconian sequences, and the
//! zonotope statistics of graphic arrangements.

use std::collections::BTreeSet;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};

use crate::covector::{complex_is_generic, enumerate_cells, TropicalComplex};
use crate::graphcore::{BipartiteGraph, Edge, SimpleGraph, TropicalMatrix};
use crate::{Error, Result};

/// Convex hull of `e_i - e_{d+j}` over the edges of a bipartite graph,
/// with one vertex per edge in sorted edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootPolytope {
    pub base: BipartiteGraph,
    pub vertices: Vec<Vec<i64>>,
}

/// A cell of the regular subdivision, identified with a subgraph of the
/// support.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct SubdivisionCell {
    pub edges: BTreeSet<Edge>,
}

impl SubdivisionCell {
    /// Maximal cells of a subdivision of the root polytope of a connected
    /// graph have spanning-subgraph covectors.
    pub fn is_spanning_tree(&self, b: &BipartiteGraph) -> bool {
        let v = b.left_count() + b.right_count();
        if self.edges.len() != v - 1 {
            return false;
        }
        let mut dsu = crate::graphcore::Dsu::new(v);
        self.edges
            .iter()
            .all(|&(i, j)| dsu.union(i, b.left_count() + j))
    }
}

/// A Minkowski summand tuple `(I_1, ..., I_n)` with `I_j` the rows selected
/// in column `j`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct MixedCell {
    pub summands: Vec<BTreeSet<usize>>,
}

impl MixedCell {
    /// Dimension of the Minkowski sum of the summand simplices.
    pub fn dim(&self) -> usize {
        self.summands.iter().map(|s| s.len() - 1).sum()
    }
}

/// An abstract simplicial complex with labelled vertices, stored by its
/// inclusion-maximal facets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicialComplex<V> {
    pub vertices: Vec<V>,
    facets: Vec<BTreeSet<usize>>,
}

impl<V> SimplicialComplex<V> {
    /// Builds the complex generated by the given faces, discarding faces
    /// contained in another.
    pub fn from_facets(vertices: Vec<V>, faces: Vec<BTreeSet<usize>>) -> Self {
        let mut facets: Vec<BTreeSet<usize>> = Vec::new();
        for f in faces {
            if facets.iter().any(|g| f.is_subset(g)) {
                continue;
            }
            facets.retain(|g| !g.is_subset(&f));
            facets.push(f);
        }
        facets.sort();
        SimplicialComplex { vertices, facets }
    }

    pub fn facets(&self) -> &[BTreeSet<usize>] {
        &self.facets
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }
}

pub fn root_polytope(b: &BipartiteGraph) -> RootPolytope {
    let d = b.left_count();
    let n = b.right_count();
    let vertices = b
        .edges()
        .map(|(i, j)| {
            let mut v = vec![0i64; d + n];
            v[i] = 1;
            v[d + j] = -1;
            v
        })
        .collect();
    RootPolytope {
        base: b.clone(),
        vertices,
    }
}

/// The subdivision cell dual to each cell of the tropical complex; the
/// maximal cells are dual to the vertices.
pub fn regular_subdivision(a: &TropicalMatrix) -> Result<Vec<SubdivisionCell>> {
    Ok(regular_subdivision_of(&enumerate_cells(a)?))
}

pub fn regular_subdivision_of(complex: &TropicalComplex) -> Vec<SubdivisionCell> {
    complex
        .cells()
        .iter()
        .map(|c| SubdivisionCell {
            edges: c.type_graph.selected().clone(),
        })
        .collect()
}

/// The simplicial complex with the same vertices-in-facet incidences as the
/// subdivision: vertices are support edges, facets the inclusion-maximal
/// cells. Over a connected support these are exactly the vertex covectors.
pub fn crosscut_complex(a: &TropicalMatrix) -> Result<SimplicialComplex<Edge>> {
    Ok(crosscut_complex_of(&enumerate_cells(a)?))
}

pub fn crosscut_complex_of(complex: &TropicalComplex) -> SimplicialComplex<Edge> {
    let vertices: Vec<Edge> = complex.base().edges().collect();
    let index: std::collections::BTreeMap<Edge, usize> = vertices
        .iter()
        .enumerate()
        .map(|(t, &e)| (e, t))
        .collect();
    let faces = complex
        .cells()
        .iter()
        .map(|c| c.type_graph.selected().iter().map(|e| index[e]).collect())
        .collect();
    SimplicialComplex::from_facets(vertices, faces)
}

/// The Minkowski summand tuple of every cell, in complex order.
pub fn mixed_subdivision(a: &TropicalMatrix) -> Result<Vec<MixedCell>> {
    Ok(mixed_subdivision_of(&enumerate_cells(a)?))
}

pub fn mixed_subdivision_of(complex: &TropicalComplex) -> Vec<MixedCell> {
    let n = complex.base().right_count();
    complex
        .cells()
        .iter()
        .map(|c| {
            let mut summands = vec![BTreeSet::new(); n];
            for &(i, j) in c.type_graph.selected() {
                summands[j].insert(i);
            }
            MixedCell { summands }
        })
        .collect()
}

/// All points `sum_j e_{k_j}` with `k_j` ranging over the neighbours of
/// column `j`, deduplicated.
pub fn lattice_points(b: &BipartiteGraph) -> BTreeSet<Vec<usize>> {
    let d = b.left_count();
    let mut points = BTreeSet::new();
    let neighborhoods: Vec<Vec<usize>> = (0..b.right_count())
        .map(|j| b.right_neighbors(j))
        .collect();
    let mut choice = vec![0usize; neighborhoods.len()];
    loop {
        let mut p = vec![0usize; d];
        for (j, &c) in choice.iter().enumerate() {
            p[neighborhoods[j][c]] += 1;
        }
        points.insert(p);
        // odometer over the neighbourhood choices
        let mut j = 0;
        loop {
            if j == choice.len() {
                return points;
            }
            choice[j] += 1;
            if choice[j] < neighborhoods[j].len() {
                break;
            }
            choice[j] = 0;
            j += 1;
        }
    }
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Normalized volume of the Minkowski sum dual to the arrangement: each
/// vertex covector `T` contributes `prod_j 1/(RD(T)_j - 1)!`.
pub fn volume(a: &TropicalMatrix) -> Result<BigRational> {
    volume_of(&enumerate_cells(a)?)
}

pub fn volume_of(complex: &TropicalComplex) -> Result<BigRational> {
    if !complex_is_generic(complex) {
        return Err(Error::RequiresGeneric);
    }
    let mut total = BigRational::zero();
    for cell in complex.cells().iter().filter(|c| c.dim == 0) {
        let mut term = BigRational::one();
        for rd in cell.type_graph.right_degrees() {
            term /= BigRational::from_integer(factorial(rd - 1));
        }
        total += term;
    }
    Ok(total)
}

/// The set `{RD(T) - 1 : T a vertex covector}`.
pub fn draconian_sequences(a: &TropicalMatrix) -> Result<BTreeSet<Vec<usize>>> {
    draconian_sequences_of(&enumerate_cells(a)?)
}

pub fn draconian_sequences_of(complex: &TropicalComplex) -> Result<BTreeSet<Vec<usize>>> {
    if !complex_is_generic(complex) {
        return Err(Error::RequiresGeneric);
    }
    Ok(complex
        .cells()
        .iter()
        .filter(|c| c.dim == 0)
        .map(|c| c.type_graph.right_degrees().iter().map(|r| r - 1).collect())
        .collect())
}

/// True when every column has exactly two finite entries.
pub fn is_graphic(a: &TropicalMatrix) -> bool {
    (0..a.cols()).all(|k| a.column_support(k).len() == 2)
}

/// The graph on the rows with one edge per column.
pub fn zonotope_graph(a: &TropicalMatrix) -> Result<SimpleGraph> {
    let mut edges = Vec::with_capacity(a.cols());
    for k in 0..a.cols() {
        let support = a.column_support(k);
        if support.len() != 2 {
            return Err(Error::NotGraphic(k));
        }
        edges.push((support[0], support[1]));
    }
    Ok(SimpleGraph {
        vertices: a.rows(),
        edges,
    })
}
