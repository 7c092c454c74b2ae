//! Exhaustive graph enumeration.
//!
//! Labeled enumeration walks every subset of the `n(n−1)/2` vertex pairs.
//! Unlabeled enumeration of connected graphs by edge count grows graphs one
//! edge at a time and deduplicates with a canonical form computed by
//! individualisation–refinement.

use std::collections::HashSet;

use crate::graph::Graph;

/// Labeled enumeration is capped here: `2^21` graphs at `n = 7`.
pub const MAX_EXHAUSTIVE_N: usize = 7;

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

/// Every labeled simple graph on `n` vertices. Bit `k` of the index selects
/// the `k`-th pair in lexicographic order; graphs are yielded by increasing
/// index.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    assert!(
        (1..=MAX_EXHAUSTIVE_N).contains(&n),
        "exhaustive enumeration supports 1 <= n <= {MAX_EXHAUSTIVE_N}"
    );
    let pairs = pairs(n);
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(k, _)| mask >> k & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).expect("pairs are distinct and in range")
    })
}

pub fn connected_labeled(n: usize) -> impl Iterator<Item = Graph> {
    all_labeled(n).filter(Graph::is_connected)
}

/// Canonical adjacency rows: two graphs have equal forms iff they are
/// isomorphic.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    assert!(g.order() <= 64, "canonical form limited to 64 vertices");
    let mut colours = vec![0; g.order()];
    let mut best = None;
    search(g, &mut colours, &mut best);
    best.expect("search visits at least one leaf")
}

/// Re-ranks `(colour, sorted neighbour colours)` until stable.
fn refine(g: &Graph, colours: &mut [usize]) {
    let n = g.order();
    let mut classes = distinct(colours);
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|&w| colours[w]).collect();
                nb.sort_unstable();
                (colours[v], nb)
            })
            .collect();
        let mut sorted = signatures.clone();
        sorted.sort();
        sorted.dedup();
        for (v, sig) in signatures.iter().enumerate() {
            colours[v] = sorted.binary_search(sig).expect("present");
        }
        if sorted.len() == classes {
            return;
        }
        classes = sorted.len();
    }
}

fn distinct(colours: &[usize]) -> usize {
    let mut c = colours.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let strip = |a: usize, b: usize| g.neighbors(a).iter().copied().filter(move |&w| w != b);
    strip(u, v).eq(strip(v, u))
}

fn search(g: &Graph, colours: &mut [usize], best: &mut Option<Vec<u64>>) {
    let n = g.order();
    refine(g, colours);
    let mut counts = vec![0usize; n];
    for &c in colours.iter() {
        counts[c] += 1;
    }
    let Some(target) = counts.iter().position(|&k| k > 1) else {
        let rows = leaf_form(g, colours);
        if best.as_ref().is_none_or(|b| rows < *b) {
            *best = Some(rows);
        }
        return;
    };
    let cell: Vec<usize> = (0..n).filter(|&v| colours[v] == target).collect();
    let mut tried: Vec<usize> = Vec::new();
    for &v in &cell {
        // Swapping twins is an automorphism fixing everything else, so their
        // subtrees produce the same leaves.
        if tried.iter().any(|&u| twins(g, u, v)) {
            continue;
        }
        tried.push(v);
        let mut next: Vec<usize> = colours.iter().map(|&c| 2 * c + 1).collect();
        next[v] = 2 * colours[v];
        search(g, &mut next, best);
    }
}

fn leaf_form(g: &Graph, position: &[usize]) -> Vec<u64> {
    let mut rows = vec![0u64; g.order()];
    for &(u, v) in g.edges() {
        rows[position[u]] |= 1 << position[v];
        rows[position[v]] |= 1 << position[u];
    }
    rows
}

/// Connected graphs with exactly `m` edges, one per isomorphism class,
/// in canonical-form order.
pub fn connected_by_edges(m: usize) -> Vec<Graph> {
    connected_by_edges_up_to(m).pop().unwrap_or_default()
}

/// Index `i` holds the connected graphs with `i + 1` edges, for `i < max_m`.
pub fn connected_by_edges_up_to(max_m: usize) -> Vec<Vec<Graph>> {
    let mut levels: Vec<Vec<Graph>> = Vec::new();
    if max_m == 0 {
        return levels;
    }
    levels.push(vec![Graph::new(2, [(0, 1)]).expect("K2")]);
    for _ in 1..max_m {
        let mut seen: HashSet<(usize, Vec<u64>)> = HashSet::new();
        let mut next = Vec::new();
        for g in levels.last().expect("non-empty") {
            let n = g.order();
            let mut children = Vec::new();
            for (u, v) in pairs(n) {
                if !g.has_edge(u, v) {
                    children.push((n, (u, v)));
                }
            }
            if n < 64 {
                for u in 0..n {
                    children.push((n + 1, (u, n)));
                }
            }
            for (order, extra) in children {
                let child = Graph::new(order, g.edges().iter().copied().chain([extra]))
                    .expect("new edge is absent");
                if seen.insert((order, canonical_form(&child))) {
                    next.push(child);
                }
            }
        }
        next.sort_by_cached_key(|g| (g.order(), canonical_form(g)));
        levels.push(next);
    }
    levels
}
