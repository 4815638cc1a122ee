//! The analysis report: one JSON document per input matrix with the support
//! data, complex f-vectors, ring invariants, ideals, Betti tables, and the
//! volume data. Keys and nesting are fixed; all numbers are exact, with
//! rationals rendered as `p/q` strings.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::covector::{complex_is_generic, enumerate_cells_capped, TropicalComplex};
use crate::graphcore::{degree_vectors, support_graph, TropicalMatrix};
use crate::homalg::{cellular_betti_of, regularity_bounds, BettiTable};
use crate::ideals::{
    alexander_dual, coarse_cotype_ideal_of, coarse_type_ideal_of, fine_cotype_ideal_of,
    fine_type_ideal_of, monomial_initial_ideal_of, toric_edge_ideal, MonomialIdeal, Variable,
};
use crate::rat::rational_string;
use crate::subdiv::{draconian_sequences_of, is_graphic, volume_of, zonotope_graph};
use crate::{graphcore, Result};

#[derive(Debug, Serialize)]
pub struct InputEcho {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

#[derive(Debug, Serialize)]
pub struct SupportInfo {
    pub edges: Vec<(usize, usize)>,
    pub left_degrees: Vec<usize>,
    pub right_degrees: Vec<usize>,
    pub connected: bool,
}

#[derive(Debug, Serialize)]
pub struct BoundsInfo {
    pub leaf_bound: i64,
    pub matching_bound: usize,
}

#[derive(Debug, Serialize)]
pub struct IdealsInfo {
    pub fine_type: Vec<Vec<(String, u32)>>,
    pub coarse_type: Vec<Vec<(String, u32)>>,
    pub fine_cotype: Vec<Vec<(String, u32)>>,
    pub coarse_cotype: Vec<Vec<(String, u32)>>,
    pub initial_ideal_monomial_part: Vec<Vec<(String, u32)>>,
    pub cotype_dual: Vec<Vec<(String, u32)>>,
    pub edge_ideal: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub count: usize,
}

#[derive(Debug, Serialize)]
pub struct FineBettiEntry {
    pub i: usize,
    pub degree: String,
    pub count: usize,
}

#[derive(Debug, Serialize)]
pub struct BettiInfo {
    pub cellular: Vec<BettiEntry>,
    pub cellular_fine: Vec<FineBettiEntry>,
}

#[derive(Debug, Serialize)]
pub struct ZonotopeInfo {
    pub graph_edges: Vec<(usize, usize)>,
    pub spanning_trees: String,
    pub forests: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub input: InputEcho,
    pub support: SupportInfo,
    pub generic: Option<bool>,
    pub f_vector: Vec<usize>,
    pub bounded_f_vector: Vec<usize>,
    pub bounded_dim: Option<usize>,
    pub lambda: Option<usize>,
    pub regularity: Option<usize>,
    pub krull_dim: usize,
    pub bounds: Option<BoundsInfo>,
    pub ideals: IdealsInfo,
    pub betti: BettiInfo,
    pub volume: Option<String>,
    pub draconian: Option<Vec<Vec<usize>>>,
    pub zonotope: Option<ZonotopeInfo>,
    pub omitted: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

fn monomials_json<V: Variable>(ideal: &MonomialIdeal<V>) -> Vec<Vec<(String, u32)>> {
    ideal
        .gens()
        .iter()
        .map(|g| g.exponents().map(|(v, e)| (v.var_name(), e)).collect())
        .collect()
}

fn betti_json(table: &BettiTable<graphcore::Edge>) -> BettiInfo {
    let cellular = table
        .coarse_entries()
        .iter()
        .map(|(&(i, j), &count)| BettiEntry { i, j, count })
        .collect();
    let cellular_fine = table
        .fine_entries()
        .iter()
        .map(|(&(i, ref deg), &count)| FineBettiEntry {
            i,
            degree: deg
                .iter()
                .map(|v| v.var_name())
                .collect::<Vec<_>>()
                .join("*"),
            count,
        })
        .collect();
    BettiInfo {
        cellular,
        cellular_fine,
    }
}

/// Builds the full report for a matrix, with enumeration capped at `cap`.
pub fn analyze(a: &TropicalMatrix, cap: usize) -> Result<Report> {
    let complex = enumerate_cells_capped(a, cap)?;
    Ok(report_from_complex(a, &complex))
}

fn report_from_complex(a: &TropicalMatrix, complex: &TropicalComplex) -> Report {
    let b = support_graph(a);
    let dv = degree_vectors(&b);
    let connected = b.is_connected();
    let mut omitted = BTreeMap::new();

    let bounded = complex.bounded();
    let generic = if connected {
        Some(complex_is_generic(complex))
    } else {
        omitted.insert(
            "generic".into(),
            "support graph is disconnected".into(),
        );
        None
    };

    let lambda = if connected {
        match crate::graphcore::recession_connectivity(&b) {
            Ok(l) => Some(l),
            Err(e) => {
                omitted.insert("lambda".into(), e.to_string());
                None
            }
        }
    } else {
        omitted.insert(
            "lambda".into(),
            "recession connectivity needs a connected support graph".into(),
        );
        None
    };
    let regularity = lambda.map(|l| l - 1);
    let bounds = if connected {
        regularity_bounds(&b).ok().map(|r| BoundsInfo {
            leaf_bound: r.leaf_bound,
            matching_bound: r.matching_bound,
        })
    } else {
        omitted.insert(
            "bounds".into(),
            "regularity bounds need a connected support graph".into(),
        );
        None
    };

    let fine_cotype = fine_cotype_ideal_of(complex);
    let cotype_dual = alexander_dual(&fine_cotype).expect("cotype ideals are squarefree");
    let ideals = IdealsInfo {
        fine_type: monomials_json(&fine_type_ideal_of(complex)),
        coarse_type: monomials_json(&coarse_type_ideal_of(complex)),
        fine_cotype: monomials_json(&fine_cotype),
        coarse_cotype: monomials_json(&coarse_cotype_ideal_of(complex)),
        initial_ideal_monomial_part: monomials_json(&monomial_initial_ideal_of(complex)),
        cotype_dual: monomials_json(&cotype_dual),
        edge_ideal: toric_edge_ideal(&b).iter().map(|f| f.to_string()).collect(),
    };

    let betti = betti_json(&cellular_betti_of(&bounded));

    let (volume, draconian) = if generic == Some(true) {
        (
            volume_of(complex).ok().map(|v| rational_string(&v)),
            draconian_sequences_of(complex)
                .ok()
                .map(|s| s.into_iter().collect()),
        )
    } else {
        omitted.insert(
            "volume".into(),
            "volume needs a sufficiently generic matrix".into(),
        );
        omitted.insert(
            "draconian".into(),
            "draconian sequences need a sufficiently generic matrix".into(),
        );
        (None, None)
    };

    let zonotope = if is_graphic(a) {
        let g = zonotope_graph(a).expect("graphic matrix");
        Some(ZonotopeInfo {
            graph_edges: g.edges.iter().map(|&(x, y)| (x + 1, y + 1)).collect(),
            spanning_trees: graphcore::count_spanning_trees(&g).to_string(),
            forests: graphcore::count_forests(&g).to_string(),
        })
    } else {
        None
    };

    Report {
        input: InputEcho {
            rows: a.rows(),
            cols: a.cols(),
            entries: (0..a.rows())
                .map(|i| (0..a.cols()).map(|k| a.entry(i, k).to_string()).collect())
                .collect(),
        },
        support: SupportInfo {
            edges: b.edges().map(|(i, j)| (i + 1, j + 1)).collect(),
            left_degrees: dv.left,
            right_degrees: dv.right,
            connected,
        },
        generic,
        f_vector: complex.f_vector(),
        bounded_f_vector: bounded.f_vector(),
        bounded_dim: bounded.dim(),
        lambda,
        regularity,
        krull_dim: crate::homalg::krull_dimension(&b),
        bounds,
        ideals,
        betti,
        volume,
        draconian,
        zonotope,
        omitted,
        timing_ms: None,
    }
}
