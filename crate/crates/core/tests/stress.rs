//! A heavier randomized audit, ignored by default:
//!
//! ```sh
//! cargo test -p troprez --test stress --release -- --ignored --nocapture
//! ```

use num::bigint::BigInt;
use num::rational::BigRational;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use troprez::covector::{complex_is_generic, enumerate_cells, type_at_point};
use troprez::graphcore::{recession_connectivity, support_graph, TropicalMatrix};
use troprez::homalg::{cellular_betti_of, hochster_betti, Field};
use troprez::ideals::{alexander_dual, fine_cotype_ideal_of, monomial_initial_ideal_of};
use troprez::rat::ExtRat;

#[test]
#[ignore = "slow randomized audit; run with --ignored"]
fn random_arrangement_audit() {
    let mut rng = ChaCha8Rng::seed_from_u64(424_242);
    let mut tested = 0u64;
    let mut generic_count = 0u64;
    for trial in 0..4000u64 {
        let d = rng.gen_range(1..=3usize);
        let n = rng.gen_range(1..=4usize);
        let entries: Vec<Vec<ExtRat>> = (0..d)
            .map(|_| {
                (0..n)
                    .map(|_| {
                        if rng.gen_bool(0.25) {
                            ExtRat::Infinity
                        } else if rng.gen_bool(0.2) {
                            ExtRat::parse(&format!(
                                "{}/{}",
                                rng.gen_range(-9i64..9),
                                rng.gen_range(1i64..5)
                            ))
                            .unwrap()
                        } else {
                            ExtRat::from_int(rng.gen_range(-6i64..6))
                        }
                    })
                    .collect()
            })
            .collect();
        let Ok(a) = TropicalMatrix::new(entries) else {
            continue;
        };
        let complex = enumerate_cells(&a).unwrap();
        tested += 1;

        // compactly supported Euler characteristic of the torus
        let chi: i64 = complex
            .cells()
            .iter()
            .map(|c| if c.dim % 2 == 0 { 1 } else { -1 })
            .sum();
        assert_eq!(chi, if d % 2 == 1 { 1 } else { -1 }, "trial {trial} chi");

        for cell in complex.cells() {
            let t = type_at_point(&a, &cell.witness);
            assert_eq!(
                t.selected(),
                cell.type_graph.selected(),
                "trial {trial} witness"
            );
            assert_eq!(cell.witness[0], BigRational::from_integer(BigInt::from(0)));
        }

        let dual = alexander_dual(&fine_cotype_ideal_of(&complex)).unwrap();
        assert_eq!(dual, monomial_initial_ideal_of(&complex), "trial {trial} duality");

        let b = support_graph(&a);
        let bounded = complex.bounded();
        let chi_b: i64 = bounded
            .cells()
            .iter()
            .map(|c| if c.dim % 2 == 0 { 1 } else { -1 })
            .sum();
        assert_eq!(chi_b, i64::from(b.is_connected()), "trial {trial} bounded chi");

        if b.is_connected() {
            let lam = recession_connectivity(&b).unwrap();
            let dim = bounded.dim().unwrap();
            assert!(dim < lam, "trial {trial} dim bound");
            if complex_is_generic(&complex) {
                generic_count += 1;
                assert_eq!(dim, lam - 1, "trial {trial} generic equality");
            }

            let cellular = cellular_betti_of(&bounded);
            let cotype = fine_cotype_ideal_of(&complex);
            let gf2 = hochster_betti(&cotype, Field::GF2).unwrap();
            let qq = hochster_betti(&cotype, Field::QQ).unwrap();
            assert_eq!(cellular, gf2, "trial {trial} cellular vs gf2");
            assert_eq!(gf2, qq, "trial {trial} gf2 vs qq");

            if let Ok(at) = a.transpose() {
                let bt = enumerate_cells(&at).unwrap().bounded();
                assert_eq!(bounded.f_vector(), bt.f_vector(), "trial {trial} transpose");
            }
        }
    }
    println!("audited {tested} matrices, {generic_count} of them generic; all invariants held");
}
