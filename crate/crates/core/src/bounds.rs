//! Closed-form degree bounds on `μ`, `q` and `ω`.
//!
//! Upper bounds on `μ` (the `φ_k` family) and on `q` (the `ψ_k` family, the
//! same family evaluated on line-graph degrees) take degree sequences, not
//! graphs. Discriminants are formed in exact integer arithmetic before the
//! square root.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{DegreeSequence, LineDegreeSequence};
use crate::spectral::SpectralValue;
use crate::y_solver::YSolution;

/// Slack used for strict inequalities and near-zero denominators.
pub const STRICT_EPS: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BoundError {
    #[error("index k = {k} outside 1..={len}")]
    IndexOutOfRange { k: usize, len: usize },
    #[error("bound needs at least {needed} vertices, graph has {n}")]
    TooFewVertices { needed: usize, n: usize },
    #[error("bound is undefined for a graph without edges")]
    NoEdges,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Upper,
    Lower,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Target {
    Mu,
    Q,
    Omega,
    Phi,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub value: f64,
    pub side: Side,
    pub target: Target,
    /// The bound is a strict inequality (`<` or `>`).
    pub strict: bool,
    /// `|value − target| ≤ tol`, once the target is known.
    pub exact: Option<bool>,
    /// The inequality holds for the computed target, once known.
    pub holds: Option<bool>,
}

impl BoundEntry {
    pub fn new(name: impl Into<String>, value: f64, side: Side, target: Target) -> Self {
        BoundEntry {
            name: name.into(),
            value,
            side,
            target,
            strict: false,
            exact: None,
            holds: None,
        }
    }

    fn strict(mut self) -> Self {
        self.strict = true;
        self
    }

    /// Fills `exact` and `holds` against the true target value.
    pub fn annotate(&mut self, target: f64, tol: f64) {
        self.exact = Some((self.value - target).abs() <= tol);
        let holds = match (self.side, self.strict) {
            (Side::Upper, false) => target <= self.value + tol,
            (Side::Lower, false) => self.value <= target + tol,
            (Side::Upper, true) => target < self.value + STRICT_EPS,
            (Side::Lower, true) => self.value < target + STRICT_EPS,
        };
        self.holds = Some(holds);
    }
}

/// Named bound values for one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundReport {
    pub graph_id: String,
    pub entries: Vec<BoundEntry>,
}

impl BoundReport {
    pub fn new(graph_id: impl Into<String>) -> Self {
        BoundReport {
            graph_id: graph_id.into(),
            entries: Vec::new(),
        }
    }

    pub fn get(&self, name: &str) -> Option<&BoundEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    pub fn value(&self, name: &str) -> Option<f64> {
        self.get(name).map(|e| e.value)
    }

    /// Annotates every entry whose target has a known value.
    pub fn annotate(&mut self, targets: &Targets, tol: f64) {
        for e in &mut self.entries {
            let t = match e.target {
                Target::Mu => targets.mu,
                Target::Q => targets.q,
                Target::Omega => targets.omega.map(|w| w as f64),
                Target::Phi => targets.phi.map(|p| p as f64),
            };
            if let Some(t) = t {
                e.annotate(t, tol);
            }
        }
    }

    /// Entries whose inequality was checked and failed.
    pub fn violations(&self) -> impl Iterator<Item = &BoundEntry> {
        self.entries.iter().filter(|e| e.holds == Some(false))
    }
}

/// True values the bounds are compared against.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct Targets {
    pub mu: Option<f64>,
    pub q: Option<f64>,
    pub omega: Option<usize>,
    pub phi: Option<usize>,
}

/// Irregularity `ν = n Σd_i² / (4m²)`; `ν ≥ 1` with equality iff regular.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Irregularity {
    pub nu: f64,
}

/// The minimising index of a bound family and its value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FamilyMinimum {
    pub ell: usize,
    pub value: f64,
}

fn check_index(k: usize, len: usize) -> Result<(), BoundError> {
    if k == 0 || k > len {
        return Err(BoundError::IndexOutOfRange { k, len });
    }
    Ok(())
}

/// `(s_k − 1 + √((s_k + 1)² + 4 Σ_{i<k} (s_i − s_k))) / 2` for 1-based `k`.
fn family_value(seq: &[usize], k: usize) -> f64 {
    let sk = seq[k - 1] as i128;
    let excess: i128 = seq[..k - 1].iter().map(|&s| s as i128 - sk).sum();
    let disc = (sk + 1) * (sk + 1) + 4 * excess;
    family_root(sk, disc)
}

fn family_root(sk: i128, disc: i128) -> f64 {
    ((sk - 1) as f64 + (disc as f64).sqrt()) / 2.0
}

/// Every family value in one pass over a running prefix sum.
fn family_values(seq: &[usize]) -> Vec<f64> {
    let mut prefix: i128 = 0;
    let mut out = Vec::with_capacity(seq.len());
    for (i, &s) in seq.iter().enumerate() {
        let sk = s as i128;
        let excess = prefix - i as i128 * sk;
        out.push(family_root(sk, (sk + 1) * (sk + 1) + 4 * excess));
        prefix += sk;
    }
    out
}

/// Smallest `3 ≤ ℓ ≤ len` with `Σ_{i≤ℓ} s_i < ℓ(ℓ − 1)`; `len` when there is none.
fn characterised_minimiser(seq: &[usize]) -> usize {
    let len = seq.len();
    let mut prefix: u64 = seq.iter().take(2).map(|&s| s as u64).sum();
    for ell in 3..=len {
        prefix += seq[ell - 1] as u64;
        if prefix < (ell * (ell - 1)) as u64 {
            return ell;
        }
    }
    len
}

/// Equality condition shared by both families, with the sequence length
/// `len` standing for `n` or `m`: constant sequence, or some `2 ≤ t ≤ k` with
/// `len − 1 = s_1 = s_{t−1} > s_t = s_last`.
fn family_equality(seq: &[usize], k: usize) -> bool {
    let len = seq.len();
    let last = seq[len - 1];
    if seq[0] == last {
        return true;
    }
    if seq[0] != len - 1 {
        return false;
    }
    (2..=k).any(|t| seq[t - 2] == len - 1 && seq[t - 1] == last)
}

/// `μ ≤ φ_k`; `φ_1 = Δ`, `φ_n` is Nikiforov's bound in `n, m, δ`.
pub fn phi_k(ds: &DegreeSequence, k: usize) -> Result<f64, BoundError> {
    check_index(k, ds.len())?;
    Ok(family_value(ds.as_slice(), k))
}

/// All of `φ_1..φ_n`.
pub fn phi_all(ds: &DegreeSequence) -> Vec<f64> {
    family_values(ds.as_slice())
}

/// The minimiser of `φ_k`, located by the prefix-sum condition rather than
/// by scanning.
pub fn phi_min(ds: &DegreeSequence) -> FamilyMinimum {
    let ell = characterised_minimiser(ds.as_slice());
    let value = family_value(ds.as_slice(), ell);
    debug_assert!(phi_all(ds).iter().all(|&v| value <= v + 1e-9));
    FamilyMinimum { ell, value }
}

/// Whether `μ = φ_k` according to the degree-sequence characterisation
/// (stated for connected graphs).
pub fn phi_equality_holds(ds: &DegreeSequence, k: usize) -> Result<bool, BoundError> {
    check_index(k, ds.len())?;
    Ok(family_equality(ds.as_slice(), k))
}

/// `q ≤ ψ_k = 2 + φ_k(line-graph degrees)`.
pub fn psi_k(lds: &LineDegreeSequence, k: usize) -> Result<f64, BoundError> {
    check_index(k, lds.len())?;
    Ok(2.0 + family_value(lds.as_slice(), k))
}

pub fn psi_all(lds: &LineDegreeSequence) -> Vec<f64> {
    family_values(lds.as_slice()).into_iter().map(|v| 2.0 + v).collect()
}

pub fn psi_min(lds: &LineDegreeSequence) -> FamilyMinimum {
    let ell = characterised_minimiser(lds.as_slice());
    let value = 2.0 + family_value(lds.as_slice(), ell);
    debug_assert!(psi_all(lds).iter().all(|&v| value <= v + 1e-9));
    FamilyMinimum { ell, value }
}

/// `q = ψ_k` characterisation: `Δ_1 = Δ_m`, or some `2 ≤ t ≤ k` with
/// `m − 1 = Δ_1 = Δ_{t−1} > Δ_t = Δ_m`.
pub fn psi_equality_holds(lds: &LineDegreeSequence, k: usize) -> Result<bool, BoundError> {
    check_index(k, lds.len())?;
    Ok(family_equality(lds.as_slice(), k))
}

/// `q ≤ 2 + Δ_1`.
pub fn max_line_degree_q_bound(lds: &LineDegreeSequence) -> f64 {
    2.0 + lds.max() as f64
}

/// `q ≤ 2 + (Δ_2 − 1 + √((Δ_2 − 1)² + 4Δ_1)) / 2`; needs `m ≥ 2`.
pub fn top_two_line_degree_q_bound(lds: &LineDegreeSequence) -> Result<f64, BoundError> {
    let s = lds.as_slice();
    if s.len() < 2 {
        return Err(BoundError::IndexOutOfRange { k: 2, len: s.len() });
    }
    Ok(2.0 + top_two(s[0], s[1]))
}

fn top_two(first: usize, second: usize) -> f64 {
    let (d1, d2) = (first as i128, second as i128);
    let disc = (d2 - 1) * (d2 - 1) + 4 * d1;
    ((d2 - 1) as f64 + (disc as f64).sqrt()) / 2.0
}

/// `μ ≤ (d_2 − 1 + √((d_2 − 1)² + 4d_1)) / 2`, algebraically equal to `φ_2`.
pub fn top_two_degree_bound(ds: &DegreeSequence) -> Result<f64, BoundError> {
    let s = ds.as_slice();
    if s.len() < 2 {
        return Err(BoundError::TooFewVertices {
            needed: 2,
            n: s.len(),
        });
    }
    Ok(top_two(s[0], s[1]))
}

/// Nikiforov's Q-index bound
/// `min(2Δ, (Δ + 2δ − 1 + √((Δ + 2δ − 1)² + 16m − 8(n − 1 + Δ)δ)) / 2)`.
pub fn nikiforov_q_bound(ds: &DegreeSequence) -> Result<f64, BoundError> {
    let m = ds.edge_count() as i128;
    if m == 0 {
        return Err(BoundError::NoEdges);
    }
    let n = ds.len() as i128;
    let (big, small) = (ds.max() as i128, ds.min() as i128);
    let b = big + 2 * small - 1;
    let disc = b * b + 16 * m - 8 * (n - 1 + big) * small;
    assert!(disc >= 0, "negative discriminant {disc} for {ds:?}");
    let second = (b as f64 + (disc as f64).sqrt()) / 2.0;
    Ok(((2 * big) as f64).min(second))
}

pub fn irregularity(ds: &DegreeSequence) -> Result<Irregularity, BoundError> {
    let m = ds.edge_count();
    if m == 0 {
        return Err(BoundError::NoEdges);
    }
    let nu = ds.len() as f64 * ds.sum_of_squares() as f64 / (4.0 * (m * m) as f64);
    debug_assert!(nu >= 1.0 - 1e-12);
    Ok(Irregularity { nu })
}

/// `n / (n − y + 1)`, the quantity whose value minus 1/3 bounds `ω` strictly.
pub fn y_clique_ratio(n: usize, y: f64) -> f64 {
    guarded_ratio(n as f64, n as f64 - y + 1.0, n)
}

fn guarded_ratio(num: f64, den: f64, n: usize) -> f64 {
    if den <= STRICT_EPS {
        n as f64
    } else {
        num / den
    }
}

fn integer_floor(x: f64) -> f64 {
    (x - STRICT_EPS).ceil()
}

/// Lower bounds on `ω`: Turán `n/(n − d)`, the strict `y`-bound
/// `n/(n − y + 1) − 1/3`, Wilf `n/(n − μ)` and Nikiforov `2m/(2m − μ²)`,
/// each followed by its integer strengthening.
pub fn clique_lower_bounds(
    ds: &DegreeSequence,
    y: &YSolution,
    mu: &SpectralValue,
) -> Result<Vec<BoundEntry>, BoundError> {
    let m = ds.edge_count();
    if m == 0 {
        return Err(BoundError::NoEdges);
    }
    let n = ds.len();
    let nf = n as f64;
    let two_m = 2.0 * m as f64;
    let turan = guarded_ratio(nf, nf - ds.average(), n);
    let y_bound = y_clique_ratio(n, y.y) - 1.0 / 3.0;
    let wilf = guarded_ratio(nf, nf - mu.value, n);
    let nikiforov = guarded_ratio(two_m, two_m - mu.value * mu.value, n);
    let lower = |name: &str, v: f64| BoundEntry::new(name, v, Side::Lower, Target::Omega);
    Ok(vec![
        lower("clique_turan", turan),
        lower("clique_turan_int", integer_floor(turan)),
        lower("clique_y", y_bound).strict(),
        lower("clique_y_int", integer_floor(y_bound)),
        lower("clique_wilf", wilf),
        lower("clique_wilf_int", integer_floor(wilf)),
        lower("clique_nikiforov", nikiforov),
        lower("clique_nikiforov_int", integer_floor(nikiforov)),
    ])
}

/// `q ≥ 2μ ≥ 4m√ν/n` and `q ≥ 4mν/n = Σd_i²/m`.
pub fn q_lower_bounds(
    ds: &DegreeSequence,
    mu: &SpectralValue,
) -> Result<Vec<BoundEntry>, BoundError> {
    let nu = irregularity(ds)?.nu;
    let m = ds.edge_count() as f64;
    let n = ds.len() as f64;
    let hofmeister = 4.0 * m * nu.sqrt() / n;
    let degree_squares = ds.sum_of_squares() as f64 / m;
    debug_assert!((4.0 * m * nu / n - degree_squares).abs() <= 1e-9 * degree_squares);
    let lower = |name: &str, v: f64| BoundEntry::new(name, v, Side::Lower, Target::Q);
    Ok(vec![
        lower("q_two_mu", 2.0 * mu.value),
        lower("q_sqrt_irregularity", hofmeister),
        lower("q_irregularity", degree_squares),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;
    use crate::graph::Graph;

    #[test]
    fn single_pass_matches_per_index() {
        let g = Family::Random { n: 40, p: 0.3, seed: 5 }.build().unwrap();
        let seq = g.degree_sequence();
        let all = phi_all(&seq);
        for k in 1..=seq.len() {
            assert_eq!(all[k - 1], phi_k(&seq, k).unwrap());
        }
    }

    fn ds(f: Family) -> DegreeSequence {
        f.build().unwrap().degree_sequence()
    }

    fn lds(f: Family) -> LineDegreeSequence {
        f.build().unwrap().line_degree_sequence().unwrap()
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn phi_examples() {
        let p3 = ds(Family::Path(3));
        assert!(close(phi_k(&p3, 2).unwrap(), 2f64.sqrt()));
        assert_eq!(phi_k(&p3, 1).unwrap(), 2.0);
        assert_eq!(
            phi_k(&p3, 4),
            Err(BoundError::IndexOutOfRange { k: 4, len: 3 })
        );
        assert!(phi_k(&p3, 0).is_err());
        let k79 = ds(Family::CompleteBipartite(7, 9));
        assert!(close(phi_k(&k79, 16).unwrap(), 3.0 + 30f64.sqrt()));
    }

    #[test]
    fn phi_min_examples() {
        let p3 = ds(Family::Path(3));
        let min = phi_min(&p3);
        assert_eq!(min.ell, 3);
        assert!(close(min.value, 2f64.sqrt()));
        let k5 = ds(Family::Complete(5));
        assert!(phi_all(&k5).iter().all(|&v| close(v, 4.0)));
        assert!(close(phi_min(&ds(Family::Star(10))).value, 3.0));
    }

    #[test]
    fn phi_equality_examples() {
        let c5 = ds(Family::Cycle(5));
        assert!((1..=5).all(|k| phi_equality_holds(&c5, k).unwrap()));
        assert!(phi_equality_holds(&ds(Family::Path(3)), 2).unwrap());
        assert!(!phi_equality_holds(&ds(Family::Path(4)), 2).unwrap());
        // t must be at least 2, so k = 1 never certifies an irregular graph.
        assert!(!phi_equality_holds(&ds(Family::Star(5)), 1).unwrap());
    }

    #[test]
    fn psi_examples() {
        let p3 = lds(Family::Path(3));
        assert_eq!(psi_k(&p3, 1).unwrap(), 3.0);
        let k13 = lds(Family::K13Plus);
        assert_eq!(k13.as_slice(), &[3, 3, 2, 2]);
        assert!(close(psi_k(&k13, 3).unwrap(), 1.0 + (3.0 + 17f64.sqrt()) / 2.0));
        let c6 = lds(Family::Cycle(6));
        assert!(psi_all(&c6).iter().all(|&v| close(v, 4.0)));
        let star = lds(Family::Star(6));
        assert_eq!(psi_min(&star).value, 6.0);
        assert!(psi_k(&p3, 3).is_err());
    }

    #[test]
    fn psi_subsumes_named_bounds() {
        for f in [
            Family::K13Plus,
            Family::Wheel(7),
            Family::DoubleStar(3),
            Family::CompleteBipartite(2, 5),
        ] {
            let l = lds(f);
            assert!(close(psi_k(&l, 1).unwrap(), max_line_degree_q_bound(&l)));
            assert!(close(psi_k(&l, 2).unwrap(), top_two_line_degree_q_bound(&l).unwrap()));
        }
    }

    #[test]
    fn top_two_degree_examples() {
        assert!(close(top_two_degree_bound(&ds(Family::Path(3))).unwrap(), 2f64.sqrt()));
        assert!(close(top_two_degree_bound(&ds(Family::Cycle(8))).unwrap(), 2.0));
        assert!(close(top_two_degree_bound(&ds(Family::Star(10))).unwrap(), 3.0));
        assert!(top_two_degree_bound(&ds(Family::Empty(1))).is_err());
    }

    #[test]
    fn nikiforov_examples() {
        assert!(close(nikiforov_q_bound(&ds(Family::Star(5))).unwrap(), 5.0));
        assert!(close(nikiforov_q_bound(&ds(Family::Cycle(9))).unwrap(), 4.0));
        assert_eq!(
            nikiforov_q_bound(&ds(Family::Empty(3))),
            Err(BoundError::NoEdges)
        );
    }

    #[test]
    fn irregularity_examples() {
        assert_eq!(irregularity(&ds(Family::Cycle(6))).unwrap().nu, 1.0);
        assert!(close(irregularity(&ds(Family::Star(5))).unwrap().nu, 1.5625));
        let k34 = irregularity(&ds(Family::CompleteBipartite(3, 4))).unwrap().nu;
        assert!(close(k34, 7.0 * 84.0 / 576.0));
        assert!(irregularity(&ds(Family::Empty(2))).is_err());
    }

    #[test]
    fn clique_bounds_on_pentagon() {
        let g = Family::Cycle(5).build().unwrap();
        let d = g.degree_sequence();
        let y = crate::y_solver::solve_y(&d);
        let mu = crate::spectral::mu(&g, 1e-12).unwrap();
        let entries = clique_lower_bounds(&d, &y, &mu).unwrap();
        let get = |n: &str| entries.iter().find(|e| e.name == n).unwrap().value;
        assert!((get("clique_turan") - 5.0 / 3.0).abs() < 1e-12);
        assert!((get("clique_wilf") - 5.0 / 3.0).abs() < 1e-9);
        assert!((get("clique_nikiforov") - 5.0 / 3.0).abs() < 1e-9);
        assert_eq!(get("clique_turan_int"), 2.0);
        assert!(entries.iter().find(|e| e.name == "clique_y").unwrap().strict);
    }

    #[test]
    fn complete_graph_denominators() {
        let g = Family::Complete(6).build().unwrap();
        let d = g.degree_sequence();
        let y = crate::y_solver::solve_y(&d);
        let mu = crate::spectral::mu(&g, 1e-12).unwrap();
        for e in clique_lower_bounds(&d, &y, &mu).unwrap() {
            assert!(e.value <= 6.0 + 1e-9, "{e:?}");
        }
        assert_eq!(y_clique_ratio(6, 6.0), 6.0);
    }

    #[test]
    fn q_lower_bounds_exact_on_complete_bipartite() {
        let g = Family::CompleteBipartite(3, 4).build().unwrap();
        let mu = crate::spectral::mu(&g, 1e-12).unwrap();
        let entries = q_lower_bounds(&g.degree_sequence(), &mu).unwrap();
        assert!(close(entries[2].value, 7.0));
        assert!(entries[1].value <= entries[0].value + 1e-9);
    }

    #[test]
    fn annotate_flags() {
        let mut report = BoundReport::new("x");
        report
            .entries
            .push(BoundEntry::new("u", 3.0, Side::Upper, Target::Mu));
        report
            .entries
            .push(BoundEntry::new("l", 2.5, Side::Lower, Target::Omega).strict());
        report.annotate(
            &Targets {
                mu: Some(3.0),
                omega: Some(2),
                ..Targets::default()
            },
            1e-7,
        );
        assert_eq!(report.get("u").unwrap().exact, Some(true));
        assert_eq!(report.get("l").unwrap().holds, Some(false));
        assert_eq!(report.violations().count(), 1);
    }

    #[test]
    fn equality_condition_needs_full_first_degree() {
        // d_1 = n − 1 but the tail is not constant.
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]).unwrap();
        let d = g.degree_sequence();
        assert!(!(1..=5).any(|k| phi_equality_holds(&d, k).unwrap()));
    }
}
