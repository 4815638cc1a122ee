//! File ingestion.
//!
//! Matrix files: one row per line, whitespace-separated tokens, each an
//! integer, a fraction `p/q`, or `inf`; `#` starts a comment and blank lines
//! are skipped.
//!
//! Graph files: one edge per line as `u v` with 1-based vertex ids. The
//! graph must be bipartite; sides are inferred by 2-coloring, with the class
//! of the smallest vertex of each component on the left.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use troprez::graphcore::{BipartiteGraph, TropicalMatrix};
use troprez::rat::ExtRat;
use troprez::Error;

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

pub fn parse_matrix(text: &str) -> Result<TropicalMatrix, Error> {
    let mut rows = Vec::new();
    for line in content_lines(text) {
        let row: Result<Vec<ExtRat>, Error> =
            line.split_whitespace().map(ExtRat::parse).collect();
        rows.push(row?);
    }
    if rows.is_empty() {
        return Err(Error::Parse("no matrix rows found".into()));
    }
    TropicalMatrix::new(rows)
}

pub fn parse_graph(text: &str) -> Result<BipartiteGraph, Error> {
    let mut raw_edges: Vec<(u64, u64)> = Vec::new();
    for line in content_lines(text) {
        let mut it = line.split_whitespace();
        let (Some(u), Some(v), None) = (it.next(), it.next(), it.next()) else {
            return Err(Error::Parse(format!("expected two vertex ids: {line:?}")));
        };
        let u: u64 = u
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex id {u:?}")))?;
        let v: u64 = v
            .parse()
            .map_err(|_| Error::Parse(format!("bad vertex id {v:?}")))?;
        if u == v {
            return Err(Error::NotBipartite);
        }
        raw_edges.push((u, v));
    }
    if raw_edges.is_empty() {
        return Err(Error::Parse("no edges found".into()));
    }

    let vertices: BTreeSet<u64> = raw_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let mut adj: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for &(u, v) in &raw_edges {
        adj.entry(u).or_default().push(v);
        adj.entry(v).or_default().push(u);
    }

    // 2-color; the smallest vertex of each component sits on the left
    let mut color: BTreeMap<u64, bool> = BTreeMap::new();
    for &start in &vertices {
        if color.contains_key(&start) {
            continue;
        }
        color.insert(start, true);
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let cu = color[&u];
            for &w in &adj[&u] {
                match color.get(&w) {
                    None => {
                        color.insert(w, !cu);
                        queue.push_back(w);
                    }
                    Some(&cw) if cw == cu => return Err(Error::NotBipartite),
                    Some(_) => {}
                }
            }
        }
    }

    let lefts: Vec<u64> = vertices.iter().copied().filter(|v| color[v]).collect();
    let rights: Vec<u64> = vertices.iter().copied().filter(|v| !color[v]).collect();
    let left_index: BTreeMap<u64, usize> =
        lefts.iter().enumerate().map(|(t, &v)| (v, t)).collect();
    let right_index: BTreeMap<u64, usize> =
        rights.iter().enumerate().map(|(t, &v)| (v, t)).collect();
    let edges: BTreeSet<(usize, usize)> = raw_edges
        .iter()
        .map(|&(u, v)| {
            if color[&u] {
                (left_index[&u], right_index[&v])
            } else {
                (left_index[&v], right_index[&u])
            }
        })
        .collect();
    BipartiteGraph::new(lefts.len(), rights.len(), edges)
}
