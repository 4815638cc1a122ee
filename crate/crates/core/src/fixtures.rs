//! Named matrices and graph families used by the test corpus, the `check`
//! command, and the acceptance suite.

use crate::graphcore::{BipartiteGraph, TropicalMatrix};

/// `[[0,3,inf,0],[0,0,2,3],[0,inf,0,inf]]`, the 3x4 working example.
pub fn running_matrix() -> TropicalMatrix {
    TropicalMatrix::from_ints(&[
        &[Some(0), Some(3), None, Some(0)],
        &[Some(0), Some(0), Some(2), Some(3)],
        &[Some(0), None, Some(0), None],
    ])
    .unwrap()
}

/// Same support as [`running_matrix`] but with two hyperplanes coinciding,
/// so the induced subdivision is not a triangulation.
pub fn nongeneric_matrix() -> TropicalMatrix {
    TropicalMatrix::from_ints(&[
        &[Some(0), Some(0), None, Some(0)],
        &[Some(0), Some(0), Some(2), Some(3)],
        &[Some(0), None, Some(0), None],
    ])
    .unwrap()
}

/// `[[0,0],[0,1],[0,2]]`: its bounded complex and that of the transpose are
/// both a path with three vertices and two edges.
pub fn duality_matrix() -> TropicalMatrix {
    TropicalMatrix::from_ints(&[&[Some(0), Some(0)], &[Some(0), Some(1)], &[Some(0), Some(2)]])
        .unwrap()
}

/// A generic lift of `K_{3,2}` whose Minkowski sum has volume 2.
pub fn k32_matrix() -> TropicalMatrix {
    TropicalMatrix::from_ints(&[&[Some(0), Some(0)], &[Some(0), Some(2)], &[Some(0), Some(1)]])
        .unwrap()
}

/// A graphic 4x4 arrangement whose column supports trace a 4-cycle.
pub fn zonotope_matrix() -> TropicalMatrix {
    TropicalMatrix::from_ints(&[
        &[Some(0), None, None, Some(0)],
        &[Some(0), Some(1), None, None],
        &[None, Some(2), Some(4), None],
        &[None, None, Some(6), Some(9)],
    ])
    .unwrap()
}

/// A 3x3 matrix whose support is a 6-cycle; its edge ideal is principal
/// with a cubic generator.
pub fn nonladder_matrix() -> TropicalMatrix {
    TropicalMatrix::from_ints(&[
        &[Some(0), Some(1), None],
        &[Some(0), None, Some(0)],
        &[None, Some(0), Some(1)],
    ])
    .unwrap()
}

/// Path on `2n` vertices: `l_0 - r_0 - l_1 - r_1 - ... - r_{n-1}`.
pub fn path_graph(n: usize) -> BipartiteGraph {
    assert!(n >= 1);
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push((i, i));
        if i + 1 < n {
            edges.push((i + 1, i));
        }
    }
    BipartiteGraph::new(n, n, edges).unwrap()
}

/// The even cycle `C_{2q}`, `q >= 2`.
pub fn even_cycle(q: usize) -> BipartiteGraph {
    assert!(q >= 2);
    let mut edges = Vec::new();
    for i in 0..q {
        edges.push((i, i));
        edges.push(((i + 1) % q, i));
    }
    BipartiteGraph::new(q, q, edges).unwrap()
}

/// `k` four-cycles joined in a chain by single edges; `closed` adds one more
/// edge from the last cycle back to the first, turning the chain into a ring.
///
/// Cycle `t` has left nodes `2t, 2t+1` and right nodes `2t, 2t+1`; the
/// connector from cycle `t` to cycle `t+1` is `(2t+1, 2t+2)`.
pub fn chained_four_cycles(k: usize, closed: bool) -> BipartiteGraph {
    assert!(k >= 2);
    let mut edges = Vec::new();
    for t in 0..k {
        let (a, b) = (2 * t, 2 * t + 1);
        let (x, y) = (2 * t, 2 * t + 1);
        edges.extend([(a, x), (a, y), (b, x), (b, y)]);
        if t + 1 < k {
            edges.push((b, 2 * (t + 1)));
        }
    }
    if closed {
        edges.push((2 * k - 1, 0));
    }
    BipartiteGraph::new(2 * k, 2 * k, edges).unwrap()
}

/// Two 6-cycles sharing a single edge; girth 6 with two hexagons.
pub fn two_hexagons() -> BipartiteGraph {
    let edges = [
        (0, 0),
        (1, 0),
        (1, 1),
        (2, 1),
        (2, 2),
        (0, 2),
        (3, 0),
        (3, 3),
        (4, 3),
        (4, 4),
        (0, 4),
    ];
    BipartiteGraph::new(5, 5, edges).unwrap()
}

/// `K_{2,3}` with a pendant edge hung on each side.
pub fn k23_with_pendants() -> BipartiteGraph {
    let mut edges: Vec<(usize, usize)> = (0..2).flat_map(|i| (0..3).map(move |j| (i, j))).collect();
    edges.push((2, 0));
    edges.push((0, 3));
    BipartiteGraph::new(3, 4, edges).unwrap()
}

/// The named matrices exercised by the invariant suites.
pub fn matrix_corpus() -> Vec<(&'static str, TropicalMatrix)> {
    vec![
        ("running", running_matrix()),
        ("nongeneric", nongeneric_matrix()),
        ("duality", duality_matrix()),
        ("k32", k32_matrix()),
        ("zonotope", zonotope_matrix()),
        ("nonladder", nonladder_matrix()),
    ]
}

/// Connected graphs paired with seeds for generic lifts.
pub fn graph_corpus() -> Vec<(&'static str, BipartiteGraph)> {
    vec![
        ("k22", BipartiteGraph::complete(2, 2)),
        ("k33", BipartiteGraph::complete(3, 3)),
        ("path3", path_graph(3)),
        ("cycle6", even_cycle(3)),
        ("cycle8", even_cycle(4)),
        ("chain2", chained_four_cycles(2, false)),
        ("chain2-closed", chained_four_cycles(2, true)),
        ("k23-pendants", k23_with_pendants()),
        ("two-hexagons", two_hexagons()),
    ]
}
