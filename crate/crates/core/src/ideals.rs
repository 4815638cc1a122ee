//! Monomial ideal algebra over the two variable universes of an arrangement
//! (support edges and rows), Alexander duality via minimal transversals,
//! type/cotype ideals read off the complex, cycle binomials of the toric
//! edge ideal, weight-order leading terms, and the monomial part of the
//! initial ideal through the crosscut complex.

use std::collections::BTreeSet;
use std::fmt;

use num::rational::BigRational;
use num::Zero;

use crate::covector::{enumerate_cells, TropicalComplex};
use crate::graphcore::{BipartiteGraph, Edge, TropicalMatrix};
use crate::subdiv::{crosscut_complex_of, SimplicialComplex};
use crate::{Error, Result};

/// A variable in some fixed polynomial ring.
pub trait Variable: Copy + Ord + fmt::Debug {
    fn var_name(&self) -> String;
}

impl Variable for Edge {
    fn var_name(&self) -> String {
        format!("x_{}_{}", self.0 + 1, self.1 + 1)
    }
}

impl Variable for usize {
    fn var_name(&self) -> String {
        format!("x_{}", self + 1)
    }
}

/// A monomial with strictly positive exponents on its support.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monomial<V: Variable> {
    exps: std::collections::BTreeMap<V, u32>,
}

impl<V: Variable> Monomial<V> {
    pub fn one() -> Self {
        Monomial {
            exps: Default::default(),
        }
    }

    pub fn squarefree(vars: impl IntoIterator<Item = V>) -> Self {
        Monomial {
            exps: vars.into_iter().map(|v| (v, 1)).collect(),
        }
    }

    pub fn from_exponents(pairs: impl IntoIterator<Item = (V, u32)>) -> Self {
        Monomial {
            exps: pairs.into_iter().filter(|&(_, e)| e > 0).collect(),
        }
    }

    pub fn exponents(&self) -> impl Iterator<Item = (V, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn support(&self) -> BTreeSet<V> {
        self.exps.keys().copied().collect()
    }

    pub fn degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.values().all(|&e| e == 1)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .all(|(v, e)| other.exps.get(v).is_some_and(|f| f >= e))
    }
}

impl<V: Variable> fmt::Display for Monomial<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .exps
            .iter()
            .map(|(v, &e)| {
                if e == 1 {
                    v.var_name()
                } else {
                    format!("{}^{}", v.var_name(), e)
                }
            })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// A monomial ideal stored by its unique minimal generating antichain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal<V: Variable> {
    gens: Vec<Monomial<V>>,
}

impl<V: Variable> MonomialIdeal<V> {
    pub fn zero() -> Self {
        MonomialIdeal { gens: Vec::new() }
    }

    pub fn gens(&self) -> &[Monomial<V>] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    pub fn generator_degrees(&self) -> Vec<u32> {
        self.gens.iter().map(|g| g.degree()).collect()
    }
}

/// Reduces a generating set to the divisibility-minimal antichain.
pub fn minimalize<V: Variable>(gens: Vec<Monomial<V>>) -> MonomialIdeal<V> {
    let mut unique: Vec<Monomial<V>> = Vec::new();
    for g in gens {
        if !unique.contains(&g) {
            unique.push(g);
        }
    }
    let mut minimal: Vec<Monomial<V>> = Vec::new();
    for g in &unique {
        if unique.iter().any(|h| h != g && h.divides(g)) {
            continue;
        }
        minimal.push(g.clone());
    }
    minimal.sort();
    minimal.dedup();
    MonomialIdeal { gens: minimal }
}

/// Fine type ideal: covector monomials of all cells, minimalized.
pub fn fine_type_ideal_of(complex: &TropicalComplex) -> MonomialIdeal<Edge> {
    minimalize(
        complex
            .cells()
            .iter()
            .map(|c| Monomial::squarefree(c.type_graph.selected().iter().copied()))
            .collect(),
    )
}

/// Coarse type ideal in the row variables.
pub fn coarse_type_ideal_of(complex: &TropicalComplex) -> MonomialIdeal<usize> {
    minimalize(
        complex
            .cells()
            .iter()
            .map(|c| {
                Monomial::from_exponents(
                    c.type_graph
                        .coarse()
                        .into_iter()
                        .enumerate()
                        .map(|(i, e)| (i, e as u32)),
                )
            })
            .collect(),
    )
}

/// Fine cotype ideal: complements of covectors inside the support.
pub fn fine_cotype_ideal_of(complex: &TropicalComplex) -> MonomialIdeal<Edge> {
    minimalize(
        complex
            .cells()
            .iter()
            .map(|c| Monomial::squarefree(c.type_graph.cotype()))
            .collect(),
    )
}

pub fn coarse_cotype_ideal_of(complex: &TropicalComplex) -> MonomialIdeal<usize> {
    minimalize(
        complex
            .cells()
            .iter()
            .map(|c| {
                Monomial::from_exponents(
                    c.type_graph
                        .coarse_cotype()
                        .into_iter()
                        .enumerate()
                        .map(|(i, e)| (i, e as u32)),
                )
            })
            .collect(),
    )
}

pub fn fine_type_ideal(a: &TropicalMatrix) -> Result<MonomialIdeal<Edge>> {
    Ok(fine_type_ideal_of(&enumerate_cells(a)?))
}

pub fn coarse_type_ideal(a: &TropicalMatrix) -> Result<MonomialIdeal<usize>> {
    Ok(coarse_type_ideal_of(&enumerate_cells(a)?))
}

pub fn fine_cotype_ideal(a: &TropicalMatrix) -> Result<MonomialIdeal<Edge>> {
    Ok(fine_cotype_ideal_of(&enumerate_cells(a)?))
}

pub fn coarse_cotype_ideal(a: &TropicalMatrix) -> Result<MonomialIdeal<usize>> {
    Ok(coarse_cotype_ideal_of(&enumerate_cells(a)?))
}

/// All minimal hitting sets of a family of nonempty sets.
///
/// An empty family has the empty transversal; a family containing the empty
/// set has none.
pub(crate) fn minimal_transversals<V: Variable>(sets: &[BTreeSet<V>]) -> Vec<BTreeSet<V>> {
    fn rec<V: Variable>(
        sets: &[BTreeSet<V>],
        current: &mut BTreeSet<V>,
        out: &mut Vec<BTreeSet<V>>,
    ) {
        match sets.iter().find(|s| s.is_disjoint(current)) {
            None => out.push(current.clone()),
            Some(unhit) => {
                if unhit.is_empty() {
                    return;
                }
                for v in unhit.iter().copied().collect::<Vec<_>>() {
                    current.insert(v);
                    rec(sets, current, out);
                    current.remove(&v);
                }
            }
        }
    }
    let mut raw = Vec::new();
    rec(sets, &mut BTreeSet::new(), &mut raw);
    raw.sort();
    raw.dedup();
    let minimal: Vec<BTreeSet<V>> = raw
        .iter()
        .filter(|t| !raw.iter().any(|u| u.len() < t.len() && u.is_subset(t)))
        .cloned()
        .collect();
    minimal
}

/// Alexander dual of a squarefree ideal: minimal transversals of the
/// generator supports.
pub fn alexander_dual<V: Variable>(ideal: &MonomialIdeal<V>) -> Result<MonomialIdeal<V>> {
    if !ideal.gens.iter().all(|g| g.is_squarefree()) {
        return Err(Error::NotSquarefree);
    }
    let supports: Vec<BTreeSet<V>> = ideal.gens.iter().map(|g| g.support()).collect();
    let gens = minimal_transversals(&supports)
        .into_iter()
        .map(Monomial::squarefree)
        .collect();
    Ok(minimalize(gens))
}

/// A difference of two monomials with disjoint supports.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Binomial {
    pub plus: Monomial<Edge>,
    pub minus: Monomial<Edge>,
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} - {}", self.plus, self.minus)
    }
}

/// Induced (chordless) cycles as cyclic edge sequences.
fn chordless_cycles(b: &BipartiteGraph) -> Vec<Vec<Edge>> {
    let d = b.left_count();
    let v = d + b.right_count();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); v];
    for (i, j) in b.edges() {
        adj[i].insert(d + j);
        adj[d + j].insert(i);
    }
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    let mut path: Vec<usize> = Vec::new();

    fn extend(
        adj: &[BTreeSet<usize>],
        path: &mut Vec<usize>,
        cycles: &mut Vec<Vec<usize>>,
    ) {
        let v0 = path[0];
        let last = *path.last().unwrap();
        for &u in &adj[last] {
            if u <= v0 || path.contains(&u) {
                continue;
            }
            // chordlessness: u may touch only the path tail and possibly v0
            let middle = path
                .get(1..path.len().saturating_sub(1))
                .unwrap_or_default();
            if middle.iter().any(|&w| adj[u].contains(&w)) {
                continue;
            }
            if path.len() >= 2 && adj[u].contains(&v0) {
                // closing edge; extending past u would leave a chord behind
                if path.len() >= 3 && path[1] < u {
                    let mut cycle = path.clone();
                    cycle.push(u);
                    cycles.push(cycle);
                }
                continue;
            }
            path.push(u);
            extend(adj, path, cycles);
            path.pop();
        }
    }

    for v0 in 0..v {
        path.clear();
        path.push(v0);
        extend(&adj, &mut path, &mut cycles);
    }

    cycles
        .into_iter()
        .map(|cycle| {
            let len = cycle.len();
            (0..len)
                .map(|t| {
                    let (x, y) = (cycle[t], cycle[(t + 1) % len]);
                    if x < d {
                        (x, y - d)
                    } else {
                        (y, x - d)
                    }
                })
                .collect()
        })
        .collect()
}

/// Splits a cyclic edge sequence into its two alternating monomials; the
/// plus side starts at the lexicographically least edge, walking towards its
/// smaller neighbour.
fn cycle_binomial(cycle: &[Edge]) -> Binomial {
    let len = cycle.len();
    let p = (0..len).min_by_key(|&t| cycle[t]).unwrap();
    let next = cycle[(p + 1) % len];
    let prev = cycle[(p + len - 1) % len];
    let walk: Vec<Edge> = if next < prev {
        (0..len).map(|t| cycle[(p + t) % len]).collect()
    } else {
        (0..len).map(|t| cycle[(p + len - t) % len]).collect()
    };
    let plus = Monomial::squarefree(walk.iter().copied().step_by(2));
    let minus = Monomial::squarefree(walk.iter().copied().skip(1).step_by(2));
    Binomial { plus, minus }
}

/// One binomial per chordless cycle, deduplicated and sorted.
pub fn toric_edge_ideal(b: &BipartiteGraph) -> Vec<Binomial> {
    let mut out: Vec<Binomial> = chordless_cycles(b)
        .iter()
        .map(|c| cycle_binomial(c))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// The heavier side of a binomial under the entry weights, or a tie.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LeadingTerm {
    Monomial(Monomial<Edge>),
    Tie,
}

pub fn leading_monomial(f: &Binomial, a: &TropicalMatrix) -> Result<LeadingTerm> {
    let weight = |m: &Monomial<Edge>| -> Result<BigRational> {
        let mut w = BigRational::zero();
        for ((i, j), e) in m.exponents() {
            if i >= a.rows() || j >= a.cols() {
                return Err(Error::WeightUndefined(i, j));
            }
            let entry = a
                .entry(i, j)
                .finite()
                .ok_or(Error::WeightUndefined(i, j))?;
            w += entry * BigRational::from_integer(e.into());
        }
        Ok(w)
    };
    let wp = weight(&f.plus)?;
    let wm = weight(&f.minus)?;
    Ok(match wp.cmp(&wm) {
        std::cmp::Ordering::Greater => LeadingTerm::Monomial(f.plus.clone()),
        std::cmp::Ordering::Less => LeadingTerm::Monomial(f.minus.clone()),
        std::cmp::Ordering::Equal => LeadingTerm::Tie,
    })
}

/// Minimal non-faces of a simplicial complex, i.e. the Stanley-Reisner
/// generators: the minimal transversals of the facet complements.
pub fn stanley_reisner_ideal<V: Variable>(
    complex: &SimplicialComplex<V>,
) -> MonomialIdeal<V> {
    let all: BTreeSet<usize> = (0..complex.vertex_count()).collect();
    let complements: Vec<BTreeSet<V>> = complex
        .facets()
        .iter()
        .map(|f| {
            all.difference(f)
                .map(|&t| complex.vertices[t])
                .collect()
        })
        .collect();
    minimalize(
        minimal_transversals(&complements)
            .into_iter()
            .map(Monomial::squarefree)
            .collect(),
    )
}

/// Largest monomial ideal inside the weight-order initial ideal of the
/// lattice binomials, computed as the Stanley-Reisner ideal of the crosscut
/// complex.
pub fn monomial_initial_ideal(a: &TropicalMatrix) -> Result<MonomialIdeal<Edge>> {
    Ok(monomial_initial_ideal_of(&enumerate_cells(a)?))
}

pub fn monomial_initial_ideal_of(complex: &TropicalComplex) -> MonomialIdeal<Edge> {
    stanley_reisner_ideal(&crosscut_complex_of(complex))
}

/// One binomial `x_{ij} x_{hk} - x_{ik} x_{hj}` per fully supported 2x2
/// submatrix.
pub fn distinguished_minors(a: &TropicalMatrix) -> Vec<Binomial> {
    let mut out = Vec::new();
    for i in 0..a.rows() {
        for h in i + 1..a.rows() {
            for j in 0..a.cols() {
                for k in j + 1..a.cols() {
                    if a.is_supported(i, j)
                        && a.is_supported(i, k)
                        && a.is_supported(h, j)
                        && a.is_supported(h, k)
                    {
                        out.push(Binomial {
                            plus: Monomial::squarefree([(i, j), (h, k)]),
                            minus: Monomial::squarefree([(i, k), (h, j)]),
                        });
                    }
                }
            }
        }
    }
    out.sort();
    out
}

/// No induced cycle longer than four.
pub fn is_chordal_bipartite(b: &BipartiteGraph) -> bool {
    chordless_cycles(b).iter().all(|c| c.len() == 4)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graphcore::support_graph;

    fn fine<const N: usize>(edges: [(usize, usize); N]) -> Monomial<Edge> {
        Monomial::squarefree(edges.map(|(i, j)| (i - 1, j - 1)))
    }

    fn ideal<const N: usize>(gens: [Monomial<Edge>; N]) -> MonomialIdeal<Edge> {
        minimalize(gens.to_vec())
    }

    #[test]
    fn minimalize_cases() {
        let i = minimalize(vec![
            Monomial::squarefree([0usize]),
            Monomial::from_exponents([(0usize, 1), (1, 1)]),
        ]);
        assert_eq!(i.gens().len(), 1);

        let running = fixtures::running_matrix();
        let cotype = fine_cotype_ideal(&running).unwrap();
        assert_eq!(cotype.gens().len(), 6);

        assert!(minimalize::<usize>(vec![]).is_zero());
    }

    #[test]
    fn running_cotype_ideal_generators() {
        let a = fixtures::running_matrix();
        let got = fine_cotype_ideal(&a).unwrap();
        let expected = ideal([
            fine([(1, 2), (2, 3), (2, 4)]),
            fine([(1, 1), (1, 2), (2, 3)]),
            fine([(1, 1), (3, 1), (1, 2)]),
            fine([(3, 1), (1, 2), (2, 4)]),
            fine([(2, 1), (3, 1), (2, 4)]),
            fine([(2, 1), (2, 3), (2, 4)]),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn nongeneric_cotype_ideal_generators() {
        let a = fixtures::nongeneric_matrix();
        let got = fine_cotype_ideal(&a).unwrap();
        let expected = ideal([
            fine([(2, 3), (2, 4)]),
            fine([(2, 4), (3, 1)]),
            fine([(1, 1), (3, 1), (1, 2)]),
            fine([(1, 1), (1, 2), (2, 3)]),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn alexander_duals_of_the_corpus() {
        let a = fixtures::running_matrix();
        let dual = alexander_dual(&fine_cotype_ideal(&a).unwrap()).unwrap();
        let expected = ideal([
            fine([(2, 1), (1, 2)]),
            fine([(3, 1), (2, 3)]),
            fine([(1, 1), (2, 4)]),
            fine([(1, 2), (2, 4)]),
        ]);
        assert_eq!(dual, expected);

        let a2 = fixtures::nongeneric_matrix();
        let dual2 = alexander_dual(&fine_cotype_ideal(&a2).unwrap()).unwrap();
        let expected2 = ideal([
            fine([(1, 1), (2, 4)]),
            fine([(1, 2), (2, 4)]),
            fine([(2, 3), (3, 1)]),
        ]);
        assert_eq!(dual2, expected2);
    }

    #[test]
    fn dual_is_an_involution() {
        for (_, a) in fixtures::matrix_corpus() {
            let i = fine_cotype_ideal(&a).unwrap();
            let dd = alexander_dual(&alexander_dual(&i).unwrap()).unwrap();
            assert_eq!(dd, i);
        }
    }

    #[test]
    fn dual_rejects_non_squarefree() {
        let i = minimalize(vec![Monomial::from_exponents([(0usize, 2)])]);
        assert!(matches!(alexander_dual(&i), Err(Error::NotSquarefree)));
    }

    #[test]
    fn toric_edge_ideal_of_running_graph() {
        let b = support_graph(&fixtures::running_matrix());
        let got = toric_edge_ideal(&b);
        let expected = vec![
            Binomial {
                plus: fine([(1, 1), (2, 2)]),
                minus: fine([(1, 2), (2, 1)]),
            },
            Binomial {
                plus: fine([(1, 1), (2, 4)]),
                minus: fine([(1, 4), (2, 1)]),
            },
            Binomial {
                plus: fine([(1, 2), (2, 4)]),
                minus: fine([(1, 4), (2, 2)]),
            },
            Binomial {
                plus: fine([(2, 1), (3, 3)]),
                minus: fine([(2, 3), (3, 1)]),
            },
        ];
        let mut expected = expected;
        expected.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn forest_has_empty_edge_ideal() {
        assert!(toric_edge_ideal(&fixtures::path_graph(4)).is_empty());
    }

    #[test]
    fn six_cycle_has_one_cubic_binomial() {
        let b = support_graph(&fixtures::nonladder_matrix());
        let got = toric_edge_ideal(&b);
        assert_eq!(
            got,
            vec![Binomial {
                plus: fine([(1, 1), (2, 3), (3, 2)]),
                minus: fine([(2, 1), (3, 3), (1, 2)]),
            }]
        );
    }

    #[test]
    fn leading_terms_of_running_binomials() {
        let a = fixtures::running_matrix();
        let f = Binomial {
            plus: fine([(1, 1), (2, 2)]),
            minus: fine([(1, 2), (2, 1)]),
        };
        assert_eq!(
            leading_monomial(&f, &a).unwrap(),
            LeadingTerm::Monomial(fine([(1, 2), (2, 1)]))
        );
        let g = Binomial {
            plus: fine([(2, 1), (3, 3)]),
            minus: fine([(2, 3), (3, 1)]),
        };
        assert_eq!(
            leading_monomial(&g, &a).unwrap(),
            LeadingTerm::Monomial(fine([(2, 3), (3, 1)]))
        );
        // under the degenerate lift the first binomial becomes balanced
        let a2 = fixtures::nongeneric_matrix();
        assert_eq!(leading_monomial(&f, &a2).unwrap(), LeadingTerm::Tie);
    }

    #[test]
    fn leading_term_outside_support_errors() {
        let a = fixtures::running_matrix();
        let f = Binomial {
            plus: fine([(3, 2)]),
            minus: fine([(1, 1)]),
        };
        assert!(matches!(
            leading_monomial(&f, &a),
            Err(Error::WeightUndefined(2, 1))
        ));
    }

    #[test]
    fn initial_ideal_of_running_matrix() {
        let a = fixtures::running_matrix();
        let got = monomial_initial_ideal(&a).unwrap();
        let expected = ideal([
            fine([(2, 1), (1, 2)]),
            fine([(3, 1), (2, 3)]),
            fine([(1, 1), (2, 4)]),
            fine([(1, 2), (2, 4)]),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn initial_ideal_of_nongeneric_matrix() {
        let a = fixtures::nongeneric_matrix();
        let got = monomial_initial_ideal(&a).unwrap();
        let expected = ideal([
            fine([(1, 1), (2, 4)]),
            fine([(1, 2), (2, 4)]),
            fine([(2, 3), (3, 1)]),
        ]);
        assert_eq!(got, expected);
    }

    #[test]
    fn forest_initial_ideal_is_zero() {
        let b = fixtures::path_graph(3);
        let a = crate::covector::random_generic_lift(&b, 0).unwrap();
        assert!(monomial_initial_ideal(&a).unwrap().is_zero());
    }

    #[test]
    fn cotype_dual_equals_initial_ideal_everywhere() {
        for (name, a) in fixtures::matrix_corpus() {
            let complex = enumerate_cells(&a).unwrap();
            let dual = alexander_dual(&fine_cotype_ideal_of(&complex)).unwrap();
            let init = monomial_initial_ideal_of(&complex);
            assert_eq!(dual, init, "{name}");
        }
    }

    #[test]
    fn distinguished_minors_of_running_matrix() {
        let a = fixtures::running_matrix();
        let minors = distinguished_minors(&a);
        assert_eq!(minors.len(), 4);
        let b = support_graph(&a);
        assert_eq!(minors, toric_edge_ideal(&b));
    }

    #[test]
    fn six_cycle_has_no_minors_and_is_not_chordal() {
        let a = fixtures::nonladder_matrix();
        assert!(distinguished_minors(&a).is_empty());
        assert!(!is_chordal_bipartite(&support_graph(&a)));
    }

    #[test]
    fn two_by_n_full_support_minors() {
        let a = TropicalMatrix::from_ints(&[
            &[Some(0), Some(1), Some(3), Some(7)],
            &[Some(0), Some(0), Some(1), Some(2)],
        ])
        .unwrap();
        let minors = distinguished_minors(&a);
        assert_eq!(minors.len(), 6);
        assert_eq!(minors, toric_edge_ideal(&support_graph(&a)));
    }

    #[test]
    fn chordal_iff_quadratic_generators() {
        for (name, b) in fixtures::graph_corpus() {
            let quadratic = toric_edge_ideal(&b)
                .iter()
                .all(|f| f.plus.degree() == 2);
            assert_eq!(is_chordal_bipartite(&b), quadratic, "{name}");
        }
    }

    #[test]
    fn generic_cotype_generator_degrees_match_tree_complements() {
        let a = fixtures::running_matrix();
        let b = support_graph(&a);
        let expected = b.edge_count() as u32
            - (b.left_count() + b.right_count() - 1) as u32;
        let cotype = fine_cotype_ideal(&a).unwrap();
        assert!(cotype.generator_degrees().iter().all(|&d| d == expected));
    }

    #[test]
    fn generic_leading_terms_live_in_initial_ideal() {
        let a = fixtures::running_matrix();
        let b = support_graph(&a);
        let init = monomial_initial_ideal(&a).unwrap();
        for f in toric_edge_ideal(&b) {
            match leading_monomial(&f, &a).unwrap() {
                LeadingTerm::Monomial(m) => {
                    assert!(init.gens().iter().any(|g| g.divides(&m)));
                }
                LeadingTerm::Tie => panic!("generic weights cannot tie"),
            }
        }
    }

    #[test]
    fn coarse_type_ideal_is_lattice_points_when_generic() {
        let a = fixtures::running_matrix();
        let coarse = coarse_type_ideal(&a).unwrap();
        let points = crate::subdiv::lattice_points(&support_graph(&a));
        let expected = minimalize(
            points
                .iter()
                .map(|p| {
                    Monomial::from_exponents(
                        p.iter().enumerate().map(|(i, &e)| (i, e as u32)),
                    )
                })
                .collect(),
        );
        assert_eq!(coarse, expected);
        assert_eq!(coarse.gens().len(), 11);
    }

    #[test]
    fn one_hyperplane_fine_type_ideal_is_the_column() {
        let a = TropicalMatrix::from_ints(&[&[Some(0)], &[Some(0)], &[Some(0)]]).unwrap();
        let i = fine_type_ideal(&a).unwrap();
        let expected = ideal([fine([(1, 1)]), fine([(2, 1)]), fine([(3, 1)])]);
        assert_eq!(i, expected);
    }

    #[test]
    fn generic_full_support_coarse_type_ideal_is_all_degree_n() {
        let b = BipartiteGraph::complete(3, 2);
        let a = crate::covector::random_generic_lift(&b, 5).unwrap();
        let coarse = coarse_type_ideal(&a).unwrap();
        // lattice points of the twice-dilated triangle
        assert_eq!(coarse.gens().len(), 6);
        assert!(coarse.gens().iter().all(|g| g.degree() == 2));
    }
}
