//! Acceptance suite: one test per criterion, each printing a PASS line with
//! the values it verified. All comparisons are exact.

use std::collections::BTreeSet;

use num::rational::BigRational;
use num::BigInt;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use troprez::covector::{
    complex_is_generic, enumerate_cells, is_sufficiently_generic, random_generic_lift,
};
use troprez::fixtures;
use troprez::graphcore::{
    count_forests, count_spanning_trees, degree_vectors, matching_number,
    recession_connectivity, support_graph, BipartiteGraph, Edge,
};
use troprez::homalg::{
    cellular_betti_of, downset_acyclic, hochster_betti, krull_dimension, regularity,
    regularity_bounds, Field, LinearClass,
};
use troprez::ideals::{
    alexander_dual, fine_cotype_ideal_of, leading_monomial, minimalize,
    monomial_initial_ideal_of, toric_edge_ideal, Binomial, LeadingTerm, Monomial,
    MonomialIdeal,
};
use troprez::subdiv::{draconian_sequences_of, lattice_points, volume_of, zonotope_graph};

fn fine<const N: usize>(edges: [(usize, usize); N]) -> Monomial<Edge> {
    Monomial::squarefree(edges.map(|(i, j)| (i - 1, j - 1)))
}

fn ideal(gens: Vec<Monomial<Edge>>) -> MonomialIdeal<Edge> {
    minimalize(gens)
}

fn binomial<const N: usize, const M: usize>(
    plus: [(usize, usize); N],
    minus: [(usize, usize); M],
) -> Binomial {
    Binomial {
        plus: fine(plus),
        minus: fine(minus),
    }
}

#[test]
fn criterion_1_running_example_end_to_end() {
    let a = fixtures::running_matrix();
    let b = support_graph(&a);
    assert_eq!(b.edge_count(), 9);
    let dv = degree_vectors(&b);
    assert_eq!(dv.left, vec![3, 4, 2]);
    assert_eq!(dv.right, vec![3, 2, 2, 2]);

    assert_eq!(recession_connectivity(&b).unwrap(), 3);
    let complex = enumerate_cells(&a).unwrap();
    let bounded = complex.bounded();
    assert_eq!(bounded.dim(), Some(2));
    assert_eq!(regularity(&b).unwrap(), 2);
    assert_eq!(krull_dimension(&b), 6);

    let expected_edge_ideal = {
        let mut v = vec![
            binomial([(1, 1), (2, 2)], [(1, 2), (2, 1)]),
            binomial([(1, 1), (2, 4)], [(1, 4), (2, 1)]),
            binomial([(1, 2), (2, 4)], [(1, 4), (2, 2)]),
            binomial([(2, 1), (3, 3)], [(2, 3), (3, 1)]),
        ];
        v.sort();
        v
    };
    assert_eq!(toric_edge_ideal(&b), expected_edge_ideal);

    let initial = monomial_initial_ideal_of(&complex);
    let expected_initial = ideal(vec![
        fine([(2, 1), (1, 2)]),
        fine([(3, 1), (2, 3)]),
        fine([(1, 1), (2, 4)]),
        fine([(1, 2), (2, 4)]),
    ]);
    assert_eq!(initial, expected_initial);

    let cotype = fine_cotype_ideal_of(&complex);
    let expected_cotype = ideal(vec![
        fine([(1, 2), (2, 3), (2, 4)]),
        fine([(1, 1), (1, 2), (2, 3)]),
        fine([(1, 1), (3, 1), (1, 2)]),
        fine([(3, 1), (1, 2), (2, 4)]),
        fine([(2, 1), (3, 1), (2, 4)]),
        fine([(2, 1), (2, 3), (2, 4)]),
    ]);
    assert_eq!(cotype, expected_cotype);

    assert_eq!(alexander_dual(&cotype).unwrap(), initial);
    assert_eq!(alexander_dual(&initial).unwrap(), cotype);

    println!(
        "ACCEPTANCE PASS criterion-1: running example (9 edges, LD=(3,4,2), RD=(3,2,2,2), \
         lambda=3, dim=2, reg=2, krull=6, 4 binomials, ideals and duality exact)"
    );
}

#[test]
fn criterion_2_nongeneric_example() {
    let a = fixtures::nongeneric_matrix();
    assert!(!is_sufficiently_generic(&a).unwrap());

    let complex = enumerate_cells(&a).unwrap();
    let cotype = fine_cotype_ideal_of(&complex);
    let expected_cotype = ideal(vec![
        fine([(2, 3), (2, 4)]),
        fine([(2, 4), (3, 1)]),
        fine([(1, 1), (3, 1), (1, 2)]),
        fine([(1, 1), (1, 2), (2, 3)]),
    ]);
    assert_eq!(cotype, expected_cotype);

    let expected_dual = ideal(vec![
        fine([(1, 1), (2, 4)]),
        fine([(1, 2), (2, 4)]),
        fine([(2, 3), (3, 1)]),
    ]);
    assert_eq!(alexander_dual(&cotype).unwrap(), expected_dual);
    assert_eq!(monomial_initial_ideal_of(&complex), expected_dual);

    let ties = toric_edge_ideal(&support_graph(&a))
        .iter()
        .filter(|f| matches!(leading_monomial(f, &a).unwrap(), LeadingTerm::Tie))
        .count();
    assert_eq!(ties, 1);

    println!(
        "ACCEPTANCE PASS criterion-2: degenerate lift (generic=false, 4 cotype generators, \
         3 dual generators, exactly one balanced binomial)"
    );
}

#[test]
fn criterion_3_complete_bipartite_sweep() {
    for d in 2..=4usize {
        for n in 2..=4usize {
            let b = BipartiteGraph::complete(d, n);
            let m = d.min(n);
            assert_eq!(recession_connectivity(&b).unwrap(), m, "lambda K_{d},{n}");
            assert_eq!(regularity(&b).unwrap(), m - 1, "reg K_{d},{n}");
            assert_eq!(krull_dimension(&b), d + n - 1, "krull K_{d},{n}");

            let a = random_generic_lift(&b, (d * 10 + n) as u64).unwrap();
            let complex = enumerate_cells(&a).unwrap();
            let table = cellular_betti_of(&complex.bounded());
            assert_eq!(table.top_index(), Some(m - 1), "top index K_{d},{n}");
            let cotype = fine_cotype_ideal_of(&complex);
            let expected_degree = ((d - 1) * (n - 1)) as u32;
            assert!(
                cotype
                    .generator_degrees()
                    .iter()
                    .all(|&deg| deg == expected_degree),
                "generator degrees K_{d},{n}"
            );
        }
    }
    println!(
        "ACCEPTANCE PASS criterion-3: complete bipartite sweep 2<=d,n<=4 \
         (lambda=min, reg=min-1, top index=min-1, degrees=(d-1)(n-1), krull=d+n-1)"
    );
}

#[test]
fn criterion_4_volume_checks() {
    let a = fixtures::k32_matrix();
    let complex = enumerate_cells(&a).unwrap();
    assert_eq!(
        volume_of(&complex).unwrap(),
        BigRational::from_integer(2.into())
    );
    let expected: BTreeSet<Vec<usize>> =
        [vec![1, 1], vec![0, 2], vec![2, 0]].into_iter().collect();
    assert_eq!(draconian_sequences_of(&complex).unwrap(), expected);

    let z = fixtures::zonotope_matrix();
    let complex = enumerate_cells(&z).unwrap();
    assert!(complex_is_generic(&complex));
    let g = zonotope_graph(&z).unwrap();
    let trees = count_spanning_trees(&g);
    assert_eq!(trees, BigInt::from(4));
    assert_eq!(
        volume_of(&complex).unwrap(),
        BigRational::from_integer(trees)
    );
    let forests = count_forests(&g);
    assert_eq!(forests, BigInt::from(15));
    let coarse = troprez::ideals::coarse_type_ideal_of(&complex);
    assert_eq!(BigInt::from(coarse.gens().len()), forests);
    assert_eq!(
        BigInt::from(lattice_points(&support_graph(&z)).len()),
        forests
    );

    println!(
        "ACCEPTANCE PASS criterion-4: volumes (K_32 lift has volume 2 with draconian set \
         {{(1,1),(0,2),(2,0)}}; graphic 4-cycle has volume 4 = trees and 15 generators = forests)"
    );
}

#[test]
fn criterion_5_betti_oracle_equivalence() {
    let mut checked = 0;
    let mut instances: Vec<(String, troprez::graphcore::TropicalMatrix)> = fixtures::matrix_corpus()
        .into_iter()
        .map(|(n, a)| (n.to_string(), a))
        .collect();
    for (name, b) in fixtures::graph_corpus() {
        instances.push((format!("{name}-lift"), random_generic_lift(&b, 77).unwrap()));
    }
    for (name, a) in instances {
        assert!(support_graph(&a).edge_count() <= 22, "{name}");
        let complex = enumerate_cells(&a).unwrap();
        let cellular = cellular_betti_of(&complex.bounded());
        let cotype = fine_cotype_ideal_of(&complex);
        let gf2 = hochster_betti(&cotype, Field::GF2).unwrap();
        let qq = hochster_betti(&cotype, Field::QQ).unwrap();
        assert_eq!(cellular, gf2, "{name}: cellular vs GF(2) oracle");
        assert_eq!(gf2, qq, "{name}: GF(2) vs rational oracle");
        checked += 1;
    }
    println!(
        "ACCEPTANCE PASS criterion-5: Betti oracle equivalence on {checked} fixtures \
         (cellular = Hochster over GF(2) and over the rationals, entrywise with multidegrees)"
    );
}

fn random_connected_bipartite(rng: &mut ChaCha8Rng) -> BipartiteGraph {
    loop {
        let d = rng.gen_range(2..=4);
        let n = rng.gen_range(2..=4);
        // random spanning tree, then random extra edges up to twelve total
        let mut edges: BTreeSet<Edge> = BTreeSet::new();
        let mut left_in: Vec<usize> = vec![0];
        let mut right_in: Vec<usize> = vec![];
        for step in 1..d + n {
            if right_in.is_empty() || (left_in.len() < d && rng.gen_bool(0.5)) {
                let i = left_in.len();
                if i < d {
                    let j = if right_in.is_empty() {
                        // no right node yet; attach the first one instead
                        right_in.push(0);
                        0
                    } else {
                        right_in[rng.gen_range(0..right_in.len())]
                    };
                    edges.insert((i, j));
                    left_in.push(i);
                    continue;
                }
            }
            if right_in.len() < n {
                let j = right_in.len();
                let i = left_in[rng.gen_range(0..left_in.len())];
                edges.insert((i, j));
                right_in.push(j);
            }
            let _ = step;
        }
        for i in 0..d {
            for j in 0..n {
                if edges.len() >= 12 {
                    break;
                }
                if rng.gen_bool(0.35) {
                    edges.insert((i, j));
                }
            }
        }
        let Ok(b) = BipartiteGraph::new(d, n, edges) else {
            continue;
        };
        if b.left_count() == d && b.right_count() == n && b.is_connected() && b.edge_count() <= 12
        {
            return b;
        }
    }
}

fn random_connected_subgraph(b: &BipartiteGraph, rng: &mut ChaCha8Rng) -> BipartiteGraph {
    let d = b.left_count();
    let mut edges: Vec<Edge> = b.edges().collect();
    for t in (1..edges.len()).rev() {
        edges.swap(t, rng.gen_range(0..=t));
    }
    let mut dsu_edges: BTreeSet<Edge> = BTreeSet::new();
    let mut parent: Vec<usize> = (0..d + b.right_count()).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &(i, j) in &edges {
        let (ri, rj) = (find(&mut parent, i), find(&mut parent, d + j));
        if ri != rj {
            parent[ri] = rj;
            dsu_edges.insert((i, j));
        } else if rng.gen_bool(0.4) {
            dsu_edges.insert((i, j));
        }
    }
    BipartiteGraph::new(d, b.right_count(), dsu_edges).unwrap()
}

#[test]
fn criterion_6_structural_invariants_on_random_graphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(20_260_809);
    for trial in 0..50u64 {
        let b = random_connected_bipartite(&mut rng);
        let lam = recession_connectivity(&b).unwrap();
        let a1 = random_generic_lift(&b, trial).unwrap();
        let a2 = random_generic_lift(&b, trial + 1_000).unwrap();
        let c1 = enumerate_cells(&a1).unwrap();
        let c2 = enumerate_cells(&a2).unwrap();
        let bounded = c1.bounded();

        assert_eq!(bounded.dim(), Some(lam - 1), "dim = lambda - 1 (trial {trial})");

        let ft = enumerate_cells(&a1.transpose().unwrap())
            .unwrap()
            .bounded()
            .f_vector();
        assert_eq!(bounded.f_vector(), ft, "transpose f-vector (trial {trial})");

        let coarse = troprez::ideals::coarse_type_ideal_of(&c1);
        let gens: BTreeSet<Vec<usize>> = coarse
            .gens()
            .iter()
            .map(|g| {
                let mut v = vec![0usize; b.left_count()];
                for (i, e) in g.exponents() {
                    v[i] = e as usize;
                }
                v
            })
            .collect();
        assert_eq!(gens, lattice_points(&b), "lattice points (trial {trial})");

        let census = |complex: &troprez::covector::TropicalComplex| {
            let mut counts: std::collections::BTreeMap<(usize, Vec<usize>), usize> =
                Default::default();
            for c in complex.cells() {
                *counts
                    .entry((c.type_graph.selected().len(), c.type_graph.coarse()))
                    .or_default() += 1;
            }
            counts
        };
        assert_eq!(census(&c1), census(&c2), "equidecomposability (trial {trial})");

        let sub = random_connected_subgraph(&b, &mut rng);
        assert!(
            recession_connectivity(&sub).unwrap() <= lam,
            "lambda monotone (trial {trial})"
        );
        assert!(lam <= matching_number(&b), "lambda vs matching (trial {trial})");

        let reg = (lam - 1) as i64;
        let bounds = regularity_bounds(&b).unwrap();
        assert!(reg <= bounds.leaf_bound, "leaf bound (trial {trial})");
        assert!(
            reg <= bounds.matching_bound as i64,
            "matching bound (trial {trial})"
        );
    }
    println!(
        "ACCEPTANCE PASS criterion-6: 50 random connected bipartite graphs (<=12 edges): \
         dim=lambda-1, transpose f-vectors, lattice points, equidecomposability, \
         lambda monotone/<=matching, leaf and matching bounds"
    );
}

#[test]
fn criterion_7_classifier_fixtures() {
    for q in 2..=4usize {
        let b = fixtures::even_cycle(q);
        assert_eq!(regularity(&b).unwrap(), q - 1, "reg C_{}", 2 * q);
        let class = troprez::homalg::linear_resolution_class(&b).unwrap();
        if q == 2 {
            assert_eq!(class, LinearClass::TwoLinear);
        } else {
            assert_eq!(class, LinearClass::Hypersurface(q));
        }
    }

    assert_eq!(
        troprez::homalg::linear_resolution_class(&fixtures::k23_with_pendants()).unwrap(),
        LinearClass::TwoLinear
    );

    for k in 2..=3usize {
        let open = fixtures::chained_four_cycles(k, false);
        assert_eq!(recession_connectivity(&open).unwrap(), k + 1, "chain k={k}");
        let closed = fixtures::chained_four_cycles(k, true);
        assert_eq!(
            recession_connectivity(&closed).unwrap(),
            2 * k,
            "closed chain k={k}"
        );
    }

    println!(
        "ACCEPTANCE PASS criterion-7: classifiers (C_2q regularity q-1 and hypersurface for \
         q>=3; trees on K_2,n two-linear; chained 4-cycles lambda k+1 open and 2k closed)"
    );
}

#[test]
fn criterion_8_acyclicity_sampling() {
    let mut rng = ChaCha8Rng::seed_from_u64(88);
    for (name, a) in fixtures::matrix_corpus() {
        let bounded = enumerate_cells(&a).unwrap().bounded();
        let edges: Vec<Edge> = bounded.base().edges().collect();
        let mut bounds: Vec<BTreeSet<Edge>> = Vec::new();
        bounds.push(edges.iter().copied().collect());
        for cell in bounded.cells().iter().filter(|c| c.dim == 0) {
            bounds.push(cell.type_graph.cotype());
        }
        while bounds.len() < 20 {
            bounds.push(
                edges
                    .iter()
                    .copied()
                    .filter(|_| rng.gen_bool(0.5))
                    .collect(),
            );
        }
        for (t, bound) in bounds.iter().enumerate() {
            assert!(
                downset_acyclic(&bounded, bound),
                "{name}: downset {t} not acyclic"
            );
        }
    }
    println!(
        "ACCEPTANCE PASS criterion-8: 20 sampled cotype downsets per fixture \
         (vertex labels, the full bound, and random bounds) are all acyclic"
    );
}
