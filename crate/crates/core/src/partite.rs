//! Exact clique number, the generalised r-partite number `φ(G)`, degree
//! domination and the complete multipartite graph that dominates `G`.
//!
//! `φ(G)` is the least `r` such that `V(G)` splits into `r` non-empty parts
//! with `d(v) ≤ n − |V_i|` for every `v ∈ V_i`.

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{y_clique_ratio, BoundEntry, Side, Target, STRICT_EPS};
use crate::graph::{DegreeSequence, Graph};

/// Default vertex limit for the clique search (bitset width).
pub const DEFAULT_CLIQUE_LIMIT: usize = 64;
/// Default vertex limit for the `φ` search.
pub const DEFAULT_PHI_LIMIT: usize = 14;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartiteError {
    #[error("{what} search limited to n <= {limit}, graph has n = {n}; use corpus-scale graphs")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("degree sequences have different lengths ({0} vs {1})")]
    LengthMismatch(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CliqueCertificate {
    /// Sorted clique vertices.
    pub vertices: Vec<usize>,
    pub size: usize,
}

impl CliqueCertificate {
    pub fn is_clique_of(&self, g: &Graph) -> bool {
        self.vertices.len() == self.size
            && self.vertices.iter().enumerate().all(|(i, &u)| {
                self.vertices[i + 1..].iter().all(|&v| g.has_edge(u, v))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PartitionCertificate {
    /// Parts in non-decreasing size order, each sorted.
    pub parts: Vec<Vec<usize>>,
    pub r: usize,
    pub sizes: Vec<usize>,
}

impl PartitionCertificate {
    /// Disjoint, covering, non-empty, and `d(v) ≤ n − |V_i|` throughout.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        let n = g.order();
        let mut seen = vec![false; n];
        for part in &self.parts {
            if part.is_empty() {
                return false;
            }
            for &v in part {
                if v >= n || seen[v] || g.degree(v) + part.len() > n {
                    return false;
                }
                seen[v] = true;
            }
        }
        self.r == self.parts.len()
            && seen.iter().all(|&s| s)
            && self.sizes == self.parts.iter().map(Vec::len).collect::<Vec<_>>()
    }

    pub fn part_of(&self, n: usize) -> Vec<usize> {
        let mut part_of = vec![0; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                part_of[v] = i;
            }
        }
        part_of
    }
}

fn check_limit(what: &'static str, n: usize, limit: usize) -> Result<(), PartiteError> {
    if n > limit {
        return Err(PartiteError::TooLarge { what, n, limit });
    }
    Ok(())
}

/// Maximum clique by branch and bound with greedy-colouring bounds.
pub fn clique_number(g: &Graph) -> Result<CliqueCertificate, PartiteError> {
    clique_number_with_limit(g, DEFAULT_CLIQUE_LIMIT)
}

pub fn clique_number_with_limit(g: &Graph, limit: usize) -> Result<CliqueCertificate, PartiteError> {
    let n = g.order();
    check_limit("clique", n, limit.min(DEFAULT_CLIQUE_LIMIT))?;
    // Position i in the search holds vertex order[i]: degree descending,
    // index ascending.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let adj: Vec<u64> = order
        .iter()
        .map(|&v| g.neighbors(v).iter().fold(0u64, |acc, &w| acc | 1 << pos[w]))
        .collect();

    let mut search = CliqueSearch {
        adj: &adj,
        current: Vec::new(),
        best: Vec::new(),
    };
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    search.expand(all);
    let mut vertices: Vec<usize> = search.best.iter().map(|&i| order[i]).collect();
    vertices.sort_unstable();
    Ok(CliqueCertificate {
        size: vertices.len(),
        vertices,
    })
}

struct CliqueSearch<'a> {
    adj: &'a [u64],
    current: Vec<usize>,
    best: Vec<usize>,
}

impl CliqueSearch<'_> {
    /// Greedy sequential colouring of `candidates`; returns vertices with
    /// their colour, ascending by colour.
    fn colour(&self, candidates: u64) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(candidates.count_ones() as usize);
        let mut uncoloured = candidates;
        let mut colour = 0;
        while uncoloured != 0 {
            colour += 1;
            let mut available = uncoloured;
            while available != 0 {
                let v = available.trailing_zeros() as usize;
                available &= !(1 << v) & !self.adj[v];
                uncoloured &= !(1 << v);
                out.push((v, colour));
            }
        }
        out
    }

    fn expand(&mut self, mut candidates: u64) {
        if candidates == 0 {
            if self.current.len() > self.best.len() {
                self.best = self.current.clone();
            }
            return;
        }
        let coloured = self.colour(candidates);
        for &(v, colour) in coloured.iter().rev() {
            if self.current.len() + colour <= self.best.len() {
                return;
            }
            self.current.push(v);
            self.expand(candidates & self.adj[v]);
            self.current.pop();
            candidates &= !(1 << v);
        }
    }
}

/// `⌈n / (n − d)⌉ = ⌈n² / (n² − 2m)⌉`, a lower bound on `φ`.
pub fn phi_lower_bound(g: &Graph) -> usize {
    let n2 = (g.order() * g.order()) as u64;
    let den = n2 - 2 * g.size() as u64;
    n2.div_ceil(den) as usize
}

/// Exact `φ(G)` with a witnessing partition.
///
/// The degree condition only limits each part's size by the largest degree
/// it contains, and the admissible sizes for a vertex shrink as its degree
/// grows. For a fixed multiset of part sizes, filling the smallest parts
/// with the highest-degree vertices is therefore feasible whenever any
/// assignment is. The search raises `r` from [`phi_lower_bound`] and, for
/// each `r`, tries size vectors in lexicographic order; the first feasible
/// one is returned together with that greedy assignment (vertices ordered by
/// degree descending, then index).
pub fn phi_number(g: &Graph) -> Result<PartitionCertificate, PartiteError> {
    phi_number_with_limit(g, DEFAULT_PHI_LIMIT)
}

pub fn phi_number_with_limit(
    g: &Graph,
    limit: usize,
) -> Result<PartitionCertificate, PartiteError> {
    let n = g.order();
    check_limit("phi", n, limit)?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let sorted_degrees: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();

    for r in phi_lower_bound(g)..=n {
        let mut sizes = Vec::with_capacity(r);
        if let Some(sizes) = first_feasible(&sorted_degrees, n, r, 1, &mut sizes) {
            let mut parts = Vec::with_capacity(r);
            let mut next = 0;
            for &s in &sizes {
                let mut part = order[next..next + s].to_vec();
                part.sort_unstable();
                parts.push(part);
                next += s;
            }
            return Ok(PartitionCertificate { parts, r, sizes });
        }
    }
    unreachable!("singleton parts always satisfy d(v) <= n - 1")
}

/// Depth-first over non-decreasing size vectors summing to `n`, in
/// lexicographic order. `prefix` holds the sizes chosen so far.
fn first_feasible(
    degrees: &[usize],
    n: usize,
    r: usize,
    min_size: usize,
    prefix: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let used: usize = prefix.iter().sum();
    let remaining = n - used;
    let slots = r - prefix.len();
    if slots == 0 {
        return (remaining == 0).then(|| prefix.clone());
    }
    // The part about to be filled starts at vertex `used`, the largest
    // degree it will hold.
    let cap = n - degrees[used];
    let max_size = (remaining / slots).min(cap);
    for size in min_size..=max_size {
        if slots == 1 && size != remaining {
            continue;
        }
        prefix.push(size);
        if let Some(found) = first_feasible(degrees, n, r, size, prefix) {
            return Some(found);
        }
        prefix.pop();
    }
    None
}

/// `h_star` dominates `h` when `h[i] ≤ h_star[i]` position by position.
pub fn dominates(h_star: &DegreeSequence, h: &DegreeSequence) -> Result<bool, PartiteError> {
    if h_star.len() != h.len() {
        return Err(PartiteError::LengthMismatch(h_star.len(), h.len()));
    }
    Ok(h
        .as_slice()
        .iter()
        .zip(h_star.as_slice())
        .all(|(a, b)| a <= b))
}

/// The complete multipartite graph on the vertex set of `g` whose parts are
/// those of `cert`; every vertex `v ∈ V_i` gets degree `n − |V_i| ≥ d(v)`.
pub fn multipartite_on(g: &Graph, cert: &PartitionCertificate) -> Graph {
    let n = g.order();
    let part_of = cert.part_of(n);
    let edges: Vec<_> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .filter(|&(u, v)| part_of[u] != part_of[v])
        .collect();
    Graph::new(n, edges).expect("valid multipartite edges")
}

/// `φ(G)` and the complete `φ`-partite graph on its partition.
pub fn dominating_multipartite(
    g: &Graph,
    limit: usize,
) -> Result<(Graph, PartitionCertificate), PartiteError> {
    let cert = phi_number_with_limit(g, limit)?;
    Ok((multipartite_on(g, &cert), cert))
}

/// The relations between `φ`, `ω`, `d`, `y` and `μ` for one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PartiteInequalities {
    pub phi: usize,
    pub omega: usize,
    /// `n / (n − d)`.
    pub turan_ratio: f64,
    /// `n / (n − y + 1)`.
    pub y_ratio: f64,
    /// `n / (n − μ)`.
    pub mu_ratio: f64,
    /// `φ ≤ ω`.
    pub phi_at_most_omega: bool,
    /// `n/(n − d) ≤ φ`.
    pub turan_holds: bool,
    /// `n/(n − y + 1) < φ + 1/3`.
    pub y_holds: bool,
    /// `n/(n − μ) < φ + 1/3`.
    pub mu_holds: bool,
    /// `n/(n − μ) ≤ n/(n − y + 1)`.
    pub chain_holds: bool,
}

impl PartiteInequalities {
    pub fn all_hold(&self) -> bool {
        self.phi_at_most_omega && self.turan_holds && self.y_holds && self.mu_holds && self.chain_holds
    }

    /// Lower bounds on `φ` as report entries, annotated against `phi`.
    pub fn entries(&self, tol: f64) -> Vec<BoundEntry> {
        let third = 1.0 / 3.0;
        let mut out = vec![
            BoundEntry::new("phi_turan", self.turan_ratio, Side::Lower, Target::Phi),
            BoundEntry::new("phi_y", self.y_ratio - third, Side::Lower, Target::Phi),
            BoundEntry::new("phi_wilf", self.mu_ratio - third, Side::Lower, Target::Phi),
            BoundEntry::new("phi_upper_omega", self.omega as f64, Side::Upper, Target::Phi),
        ];
        out[1].strict = true;
        out[2].strict = true;
        for e in &mut out {
            e.annotate(self.phi as f64, tol);
        }
        out
    }
}

/// Evaluates the `φ` relations given exact `φ`, `ω`, `y` and `μ`.
pub fn partite_inequalities(
    g: &Graph,
    phi: usize,
    omega: usize,
    y: f64,
    mu: f64,
) -> PartiteInequalities {
    let n = g.order();
    let nf = n as f64;
    let d = 2.0 * g.size() as f64 / nf;
    let turan_ratio = nf / (nf - d);
    let y_ratio = y_clique_ratio(n, y);
    let mu_ratio = if nf - mu <= STRICT_EPS { nf } else { nf / (nf - mu) };
    let phi_f = phi as f64;
    PartiteInequalities {
        phi,
        omega,
        turan_ratio,
        y_ratio,
        mu_ratio,
        phi_at_most_omega: phi <= omega,
        turan_holds: turan_ratio <= phi_f + STRICT_EPS,
        y_holds: y_ratio < phi_f + 1.0 / 3.0 + STRICT_EPS,
        mu_holds: mu_ratio < phi_f + 1.0 / 3.0 + STRICT_EPS,
        chain_holds: mu_ratio <= y_ratio + STRICT_EPS,
    }
}
