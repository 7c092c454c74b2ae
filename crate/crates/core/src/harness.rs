//! Corpora, comparison tables, the invariant suite and the `φ` vs
//! `n/(n − μ)` scan.
//!
//! Per-graph work runs on the rayon pool; results are always gathered in
//! corpus order so output is reproducible.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::bounds::{self, STRICT_EPS};
use crate::enumerate;
use crate::families::{random_graph, Family, FamilyError, SplitMix64};
use crate::graph::{DegreeSequence, Graph, GraphError, LineDegreeSequence};
use crate::graph6::{parse_graph6, write_graph6};
use crate::partite::{self, CliqueCertificate, PartitionCertificate};
use crate::spectral::{self, SpectralConfig, SpectralError, SpectralValue};
use crate::y_solver::{self, YSolution, RESIDUAL_LIMIT};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum HarnessError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("exhaustive corpus needs 1 <= n <= {max}, got {n}", max = enumerate::MAX_EXHAUSTIVE_N)]
    ExhaustiveTooLarge { n: usize },
    #[error("edge-count corpus supports 1 <= m <= 12, got {0}..={1}")]
    EdgeRange(usize, usize),
    #[error("random corpus: {0}")]
    Random(String),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

/// Where corpus graphs come from.
#[derive(Debug, Clone, PartialEq)]
pub enum CorpusSource {
    /// Pre-parsed graphs with their ids, e.g. from a graph6 file.
    Graphs(Vec<CorpusGraph>),
    /// Every labeled graph on `n` vertices.
    Exhaustive { n: usize, connected: bool },
    /// Connected graphs up to isomorphism with `min_m..=max_m` edges.
    ConnectedByEdges { min_m: usize, max_m: usize },
    /// `count` draws of `G(n, p)` from one SplitMix64 stream.
    Random {
        n: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
    Named(Vec<Family>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusSpec {
    pub source: CorpusSource,
    /// Keep only graphs with `Δ ≠ δ`.
    pub irregular_only: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct CorpusGraph {
    pub id: String,
    pub graph: Graph,
}

impl CorpusGraph {
    pub fn new(id: impl Into<String>, graph: Graph) -> Self {
        CorpusGraph {
            id: id.into(),
            graph,
        }
    }
}

impl CorpusSpec {
    pub fn new(source: CorpusSource) -> Self {
        CorpusSpec {
            source,
            irregular_only: false,
        }
    }

    pub fn irregular_only(mut self, yes: bool) -> Self {
        self.irregular_only = yes;
        self
    }

    pub fn materialize(&self) -> Result<Vec<CorpusGraph>, HarnessError> {
        let graphs = match &self.source {
            CorpusSource::Graphs(gs) => gs.clone(),
            &CorpusSource::Exhaustive { n, connected } => {
                if !(1..=enumerate::MAX_EXHAUSTIVE_N).contains(&n) {
                    return Err(HarnessError::ExhaustiveTooLarge { n });
                }
                enumerate::all_labeled(n)
                    .enumerate()
                    .filter(|(_, g)| !connected || g.is_connected())
                    .map(|(i, g)| CorpusGraph::new(format!("n{n}#{i}"), g))
                    .collect()
            }
            &CorpusSource::ConnectedByEdges { min_m, max_m } => {
                if min_m == 0 || min_m > max_m || max_m > 12 {
                    return Err(HarnessError::EdgeRange(min_m, max_m));
                }
                enumerate::connected_by_edges_up_to(max_m)
                    .into_iter()
                    .enumerate()
                    .skip(min_m - 1)
                    .flat_map(|(i, level)| {
                        level
                            .into_iter()
                            .enumerate()
                            .map(move |(j, g)| CorpusGraph::new(format!("m{}#{j}", i + 1), g))
                    })
                    .collect()
            }
            &CorpusSource::Random { n, p, count, seed } => {
                if n == 0 || !(0.0..=1.0).contains(&p) {
                    return Err(HarnessError::Random(format!(
                        "needs n >= 1 and 0 <= p <= 1, got n = {n}, p = {p}"
                    )));
                }
                let mut rng = SplitMix64::new(seed);
                let mut out = Vec::with_capacity(count);
                for i in 0..count {
                    out.push(CorpusGraph::new(
                        format!("random:{n}:{p}:{seed}#{i}"),
                        random_graph(n, p, &mut rng)?,
                    ));
                }
                out
            }
            CorpusSource::Named(families) => families
                .iter()
                .map(|f| Ok(CorpusGraph::new(f.to_string(), f.build()?)))
                .collect::<Result<_, HarnessError>>()?,
        };
        Ok(if self.irregular_only {
            graphs
                .into_iter()
                .filter(|c| !c.graph.is_regular())
                .collect()
        } else {
            graphs
        })
    }
}

/// One row of the Q-index comparison table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub q: f64,
    pub thm1: f64,
    pub psi1: f64,
    /// Undefined for a single edge.
    pub psi2: Option<f64>,
    pub psi_min: f64,
    pub ell: usize,
    pub z_plus_1: f64,
}

impl ComparisonRow {
    pub fn compute(id: &str, g: &Graph, config: &SpectralConfig) -> Result<Option<Self>, HarnessError> {
        let Ok(lds) = g.line_degree_sequence() else {
            return Ok(None);
        };
        let ds = g.degree_sequence();
        let q = spectral::q_index_with(g, config)?.value;
        let psi_min = bounds::psi_min(&lds);
        Ok(Some(ComparisonRow {
            graph_id: id.to_string(),
            n: g.order(),
            m: g.size(),
            q,
            thm1: bounds::nikiforov_q_bound(&ds).expect("m >= 1"),
            psi1: bounds::max_line_degree_q_bound(&lds),
            psi2: bounds::top_two_line_degree_q_bound(&lds).ok(),
            psi_min: psi_min.value,
            ell: psi_min.ell,
            z_plus_1: y_solver::z_upper_bound_q(&lds),
        }))
    }

    /// Bound columns, in table order, that are present.
    pub fn bound_columns(&self) -> impl Iterator<Item = f64> + '_ {
        [Some(self.thm1), Some(self.psi1), self.psi2, Some(self.psi_min), Some(self.z_plus_1)]
            .into_iter()
            .flatten()
    }
}

/// Column means over the table rows.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableMeans {
    pub q: f64,
    pub thm1: f64,
    pub psi1: f64,
    /// Over rows where `ψ_2` is defined.
    pub psi2: f64,
    pub psi_min: f64,
    pub z_plus_1: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonTable {
    pub rows: Vec<ComparisonRow>,
    pub means: Option<TableMeans>,
    /// Graphs without edges, left out of the table.
    pub skipped_edgeless: usize,
    /// Rows with `thm1 < ψ_min` (beyond 1e-9), and the first such id.
    pub thm1_wins: usize,
    pub first_thm1_win: Option<String>,
    /// Rows with `ψ_min < thm1` (beyond 1e-9), and the first such id.
    pub psi_min_wins: usize,
    pub first_psi_min_win: Option<String>,
}

fn mean(values: impl Iterator<Item = f64>) -> f64 {
    let (sum, count) = values.fold((0.0, 0usize), |(s, c), v| (s + v, c + 1));
    if count == 0 {
        f64::NAN
    } else {
        sum / count as f64
    }
}

pub fn comparison_table(
    corpus: &[CorpusGraph],
    config: &SpectralConfig,
) -> Result<ComparisonTable, HarnessError> {
    let computed: Vec<Option<ComparisonRow>> = corpus
        .par_iter()
        .map(|c| ComparisonRow::compute(&c.id, &c.graph, config))
        .collect::<Result<_, _>>()?;
    let skipped_edgeless = computed.iter().filter(|r| r.is_none()).count();
    let rows: Vec<ComparisonRow> = computed.into_iter().flatten().collect();
    let means = (!rows.is_empty()).then(|| TableMeans {
        q: mean(rows.iter().map(|r| r.q)),
        thm1: mean(rows.iter().map(|r| r.thm1)),
        psi1: mean(rows.iter().map(|r| r.psi1)),
        psi2: mean(rows.iter().filter_map(|r| r.psi2)),
        psi_min: mean(rows.iter().map(|r| r.psi_min)),
        z_plus_1: mean(rows.iter().map(|r| r.z_plus_1)),
    });
    let thm1_better: Vec<&ComparisonRow> = rows
        .iter()
        .filter(|r| r.thm1 < r.psi_min - STRICT_EPS)
        .collect();
    let psi_better: Vec<&ComparisonRow> = rows
        .iter()
        .filter(|r| r.psi_min < r.thm1 - STRICT_EPS)
        .collect();
    Ok(ComparisonTable {
        thm1_wins: thm1_better.len(),
        first_thm1_win: thm1_better.first().map(|r| r.graph_id.clone()),
        psi_min_wins: psi_better.len(),
        first_psi_min_win: psi_better.first().map(|r| r.graph_id.clone()),
        rows,
        means,
        skipped_edgeless,
    })
}

/// Settings for [`verify`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub spectral: SpectralConfig,
    /// Slack for every bound comparison.
    pub check_tol: f64,
    /// Slack for the `q = 2 + μ(line graph)` identity.
    pub identity_tol: f64,
    /// Largest `n` for exact `φ`; `ω` is limited to 64.
    pub max_exact_n: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            spectral: SpectralConfig::default(),
            check_tol: 1e-7,
            identity_tol: 1e-8,
            max_exact_n: partite::DEFAULT_PHI_LIMIT,
        }
    }
}

/// Quantities shared by the checks for one graph.
pub struct Facts {
    pub graph: Graph,
    pub graph6: String,
    pub ds: DegreeSequence,
    pub lds: Option<LineDegreeSequence>,
    pub mu: SpectralValue,
    pub q: SpectralValue,
    /// `μ` of the line graph.
    pub line_mu: Option<SpectralValue>,
    pub y: YSolution,
    pub z: Option<YSolution>,
    pub omega: Option<CliqueCertificate>,
    pub phi: Option<PartitionCertificate>,
    /// The complete multipartite graph on the `φ` partition.
    pub dominating: Option<Graph>,
}

impl Facts {
    pub fn compute(g: &Graph, config: &VerifyConfig) -> Result<Self, HarnessError> {
        let ds = g.degree_sequence();
        let lds = g.line_degree_sequence().ok();
        let mu = spectral::mu_with(g, &config.spectral)?;
        let q = spectral::q_index_with(g, &config.spectral)?;
        let line_mu = match g.line_graph() {
            Ok(l) => Some(spectral::mu_with(&l, &config.spectral)?),
            Err(_) => None,
        };
        let phi = partite::phi_number_with_limit(g, config.max_exact_n).ok();
        let dominating = phi.as_ref().map(|c| partite::multipartite_on(g, c));
        Ok(Facts {
            graph6: write_graph6(g),
            y: y_solver::solve_y(&ds),
            z: lds.as_ref().map(y_solver::solve_z),
            omega: partite::clique_number(g).ok(),
            graph: g.clone(),
            ds,
            lds,
            mu,
            q,
            line_mu,
            phi,
            dominating,
        })
    }

    pub fn n(&self) -> usize {
        self.graph.order()
    }

    pub fn m(&self) -> usize {
        self.graph.size()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Pass,
    Fail(String),
    /// Not applicable to this graph (no edges, over a search limit, ...).
    Skip,
}

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Outcome {
    if ok {
        Outcome::Pass
    } else {
        Outcome::Fail(detail())
    }
}

/// A named invariant evaluated on each corpus graph.
#[derive(Clone, Copy)]
pub struct Check {
    pub name: &'static str,
    pub run: fn(&Facts, &VerifyConfig) -> Outcome,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CheckTally {
    pub name: &'static str,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    /// graph6 string and detail of the first failure.
    pub first_counterexample: Option<(String, String)>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifySummary {
    pub graphs: usize,
    pub checks: Vec<CheckTally>,
}

impl VerifySummary {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.failed == 0)
    }

    pub fn tally(&self, name: &str) -> Option<&CheckTally> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Runs `checks` on every corpus graph.
pub fn verify(corpus: &[CorpusGraph], checks: &[Check], config: &VerifyConfig) -> VerifySummary {
    let per_graph: Vec<(String, Vec<Outcome>)> = corpus
        .par_iter()
        .map(|c| match Facts::compute(&c.graph, config) {
            Ok(facts) => (
                facts.graph6.clone(),
                checks.iter().map(|chk| (chk.run)(&facts, config)).collect(),
            ),
            Err(e) => (
                write_graph6(&c.graph),
                vec![Outcome::Fail(format!("{}: {e}", c.id)); checks.len()],
            ),
        })
        .collect();
    let mut tallies: Vec<CheckTally> = checks
        .iter()
        .map(|c| CheckTally {
            name: c.name,
            passed: 0,
            failed: 0,
            skipped: 0,
            first_counterexample: None,
        })
        .collect();
    for (g6, outcomes) in per_graph {
        for (t, o) in tallies.iter_mut().zip(outcomes) {
            match o {
                Outcome::Pass => t.passed += 1,
                Outcome::Skip => t.skipped += 1,
                Outcome::Fail(detail) => {
                    t.failed += 1;
                    t.first_counterexample.get_or_insert((g6.clone(), detail));
                }
            }
        }
    }
    VerifySummary {
        graphs: corpus.len(),
        checks: tallies,
    }
}

macro_rules! check {
    ($name:literal, |$f:ident, $c:ident| $body:expr) => {
        Check {
            name: $name,
            run: |$f: &Facts, $c: &VerifyConfig| -> Outcome {
                let _ = &$c;
                $body
            },
        }
    };
}

/// The invariant suite. Every library operation is exercised by at least
/// one check.
pub fn standard_checks() -> Vec<Check> {
    vec![
        check!("graph_well_formed", |f, c| {
            let g = &f.graph;
            let symmetric = (0..g.order()).all(|u| {
                g.neighbors(u).iter().all(|&v| v != u && g.has_edge(v, u))
            });
            ensure(symmetric && f.ds.sum() == 2 * g.size(), || {
                "degree sum or symmetry broken".into()
            })
        }),
        check!("graph6_round_trip", |f, c| {
            ensure(
                parse_graph6(&f.graph6).as_ref() == Ok(&f.graph),
                || "parse(write(g)) != g".into(),
            )
        }),
        check!("line_degrees_match_line_graph", |f, c| {
            let Some(lds) = &f.lds else { return Outcome::Skip };
            let l = f.graph.line_graph().expect("m >= 1");
            let sq: usize = f.ds.sum_of_squares();
            ensure(
                l.degree_sequence().as_slice() == lds.as_slice()
                    && l.order() == f.m()
                    && 2 * l.size() == sq - 2 * f.m(),
                || "line graph disagrees with line-degree sequence".into(),
            )
        }),
        check!("spectral_residuals", |f, c| {
            let tol = c.spectral.tol;
            ensure(
                f.mu.residual <= tol && f.q.residual <= tol && f.mu.value >= 0.0,
                || format!("residuals {} {}", f.mu.residual, f.q.residual),
            )
        }),
        check!("q_equals_two_plus_line_mu", |f, c| {
            let Some(lm) = f.line_mu else { return Outcome::Skip };
            let gap = (f.q.value - 2.0 - lm.value).abs();
            ensure(gap <= c.identity_tol, || format!("|q - 2 - mu(L)| = {gap:e}"))
        }),
        check!("q_at_least_two_mu", |f, c| {
            ensure(f.q.value >= 2.0 * f.mu.value - c.check_tol, || {
                format!("q = {} < 2mu = {}", f.q.value, 2.0 * f.mu.value)
            })
        }),
        check!("mu_squared_at_least_mean_square_degree", |f, c| {
            let rhs = f.ds.sum_of_squares() as f64 / f.n() as f64;
            ensure(f.mu.value * f.mu.value >= rhs - c.check_tol, || {
                format!("mu^2 = {} < {rhs}", f.mu.value * f.mu.value)
            })
        }),
        check!("mu_at_least_average_degree", |f, c| {
            ensure(f.ds.average() <= f.mu.value + c.check_tol, || {
                format!("d = {} > mu = {}", f.ds.average(), f.mu.value)
            })
        }),
        check!("y_solution_valid", |f, c| {
            let y = f.y;
            ensure(
                y.residual <= RESIDUAL_LIMIT && y.y >= 1.0 && y.y <= f.n() as f64,
                || format!("{y:?}"),
            )
        }),
        check!("mu_at_most_y_minus_one", |f, c| {
            ensure(f.mu.value <= f.y.y - 1.0 + c.check_tol, || {
                format!("mu = {} > y - 1 = {}", f.mu.value, f.y.y - 1.0)
            })
        }),
        check!("y_minus_one_equals_phi_min", |f, c| {
            let pm = bounds::phi_min(&f.ds).value;
            ensure((f.y.y - 1.0 - pm).abs() <= 1e-9, || {
                format!("y - 1 = {} vs phi_min = {pm}", f.y.y - 1.0)
            })
        }),
        check!("phi_k_upper_bounds_mu", |f, c| {
            let phis = bounds::phi_all(&f.ds);
            match phis.iter().position(|&p| f.mu.value > p + c.check_tol) {
                None => Outcome::Pass,
                Some(i) => Outcome::Fail(format!("mu = {} > phi_{} = {}", f.mu.value, i + 1, phis[i])),
            }
        }),
        check!("phi_min_at_characterised_index", |f, c| {
            let phis = bounds::phi_all(&f.ds);
            let scan = phis.iter().copied().fold(f64::INFINITY, f64::min);
            let pm = bounds::phi_min(&f.ds);
            ensure((pm.value - scan).abs() <= 1e-12, || {
                format!("phi_{} = {} but scan min = {scan}", pm.ell, pm.value)
            })
        }),
        check!("top_two_degree_equals_phi_2", |f, c| {
            let Ok(b) = bounds::top_two_degree_bound(&f.ds) else { return Outcome::Skip };
            let p2 = bounds::phi_k(&f.ds, 2).expect("n >= 2");
            ensure((b - p2).abs() <= 1e-12, || format!("{b} vs {p2}"))
        }),
        check!("phi_equality_condition_implies_equality", |f, c| {
            first_failure((1..=f.n()).map(|k| {
                let holds = bounds::phi_equality_holds(&f.ds, k).expect("k in range");
                let gap = (f.mu.value - bounds::phi_k(&f.ds, k).expect("k in range")).abs();
                ensure(!holds || gap <= c.check_tol, || format!("k = {k}: gap {gap:e}"))
            }))
        }),
        check!("phi_equality_implies_condition_connected", |f, c| {
            if !f.graph.is_connected() {
                return Outcome::Skip;
            }
            first_failure((1..=f.n()).map(|k| {
                let holds = bounds::phi_equality_holds(&f.ds, k).expect("k in range");
                let gap = (f.mu.value - bounds::phi_k(&f.ds, k).expect("k in range")).abs();
                ensure(holds || gap > c.check_tol, || format!("k = {k}: mu = phi_k without condition"))
            }))
        }),
        check!("psi_k_upper_bounds_q", |f, c| {
            let Some(lds) = &f.lds else { return Outcome::Skip };
            let psis = bounds::psi_all(lds);
            match psis.iter().position(|&p| f.q.value > p + c.check_tol) {
                None => Outcome::Pass,
                Some(i) => Outcome::Fail(format!("q = {} > psi_{} = {}", f.q.value, i + 1, psis[i])),
            }
        }),
        check!("psi_min_at_characterised_index", |f, c| {
            let Some(lds) = &f.lds else { return Outcome::Skip };
            let scan = bounds::psi_all(lds).into_iter().fold(f64::INFINITY, f64::min);
            let pm = bounds::psi_min(lds);
            ensure((pm.value - scan).abs() <= 1e-12, || {
                format!("psi_{} = {} but scan min = {scan}", pm.ell, pm.value)
            })
        }),
        check!("psi_1_psi_2_match_named_bounds", |f, c| {
            let Some(lds) = &f.lds else { return Outcome::Skip };
            let p1 = bounds::psi_k(lds, 1).expect("m >= 1");
            let mut ok = (p1 - bounds::max_line_degree_q_bound(lds)).abs() <= 1e-12;
            if let Ok(t5) = bounds::top_two_line_degree_q_bound(lds) {
                ok &= (bounds::psi_k(lds, 2).expect("m >= 2") - t5).abs() <= 1e-12;
            }
            ensure(ok, || "psi_1/psi_2 disagree with 2 + Delta_1 / two-degree form".into())
        }),
        check!("psi_equality_condition_implies_equality", |f, c| {
            let Some(lds) = &f.lds else { return Outcome::Skip };
            first_failure((1..=lds.len()).map(|k| {
                let holds = bounds::psi_equality_holds(lds, k).expect("k in range");
                let gap = (f.q.value - bounds::psi_k(lds, k).expect("k in range")).abs();
                ensure(!holds || gap <= c.check_tol, || format!("k = {k}: gap {gap:e}"))
            }))
        }),
        check!("psi_equality_implies_condition_connected", |f, c| {
            let Some(lds) = &f.lds else { return Outcome::Skip };
            if !f.graph.is_connected() {
                return Outcome::Skip;
            }
            first_failure((1..=lds.len()).map(|k| {
                let holds = bounds::psi_equality_holds(lds, k).expect("k in range");
                let gap = (f.q.value - bounds::psi_k(lds, k).expect("k in range")).abs();
                ensure(holds || gap > c.check_tol, || format!("k = {k}: q = psi_k without condition"))
            }))
        }),
        check!("first_exact_psi_index_at_most_3", |f, c| {
            let Some(lds) = &f.lds else { return Outcome::Skip };
            match first_exact_psi_index(f.q.value, lds, c.check_tol) {
                Some(k) if k >= 4 => Outcome::Fail(format!("q first attains psi_{k}")),
                _ => Outcome::Pass,
            }
        }),
        check!("z_plus_one_upper_bounds_q", |f, c| {
            let Some(z) = f.z else { return Outcome::Skip };
            ensure(
                f.q.value <= z.y + 1.0 + c.check_tol && z.residual <= RESIDUAL_LIMIT,
                || format!("q = {} > z + 1 = {}", f.q.value, z.y + 1.0),
            )
        }),
        check!("nikiforov_upper_bounds_q", |f, c| {
            let Ok(b) = bounds::nikiforov_q_bound(&f.ds) else { return Outcome::Skip };
            ensure(f.q.value <= b + c.check_tol, || format!("q = {} > {b}", f.q.value))
        }),
        check!("irregularity_at_least_one", |f, c| {
            let Ok(nu) = bounds::irregularity(&f.ds) else { return Outcome::Skip };
            let regular = f.ds.is_regular();
            ensure(
                nu.nu >= 1.0 - 1e-12 && (regular == ((nu.nu - 1.0).abs() <= 1e-12)),
                || format!("nu = {}", nu.nu),
            )
        }),
        check!("q_lower_bounds_hold", |f, c| {
            let Ok(entries) = bounds::q_lower_bounds(&f.ds, &f.mu) else { return Outcome::Skip };
            let (two_mu, sqrt_nu, nu) = (entries[0].value, entries[1].value, entries[2].value);
            ensure(
                nu <= f.q.value + c.check_tol
                    && two_mu <= f.q.value + c.check_tol
                    && sqrt_nu <= two_mu + c.check_tol,
                || format!("q = {}, 2mu = {two_mu}, 4m sqrt(nu)/n = {sqrt_nu}, 4m nu/n = {nu}", f.q.value),
            )
        }),
        check!("clique_certificate_valid", |f, c| {
            let Some(w) = &f.omega else { return Outcome::Skip };
            ensure(w.is_clique_of(&f.graph) && w.size >= 1, || format!("{w:?}"))
        }),
        check!("clique_lower_bounds_hold", |f, c| {
            let Some(w) = &f.omega else { return Outcome::Skip };
            let Ok(entries) = bounds::clique_lower_bounds(&f.ds, &f.y, &f.mu) else {
                return Outcome::Skip;
            };
            let omega = w.size as f64;
            first_failure(entries.iter().map(|e| {
                let ok = if e.strict {
                    e.value < omega + STRICT_EPS
                } else {
                    e.value <= omega + STRICT_EPS
                };
                ensure(ok, || format!("{} = {} vs omega = {omega}", e.name, e.value))
            }))
        }),
        check!("phi_certificate_valid", |f, c| {
            let Some(p) = &f.phi else { return Outcome::Skip };
            ensure(
                p.is_valid_for(&f.graph) && p.r >= partite::phi_lower_bound(&f.graph),
                || format!("{p:?}"),
            )
        }),
        check!("phi_inequalities", |f, c| {
            let (Some(p), Some(w)) = (&f.phi, &f.omega) else { return Outcome::Skip };
            let ineq = partite::partite_inequalities(&f.graph, p.r, w.size, f.y.y, f.mu.value);
            ensure(ineq.all_hold(), || format!("{ineq:?}"))
        }),
        check!("dominating_multipartite", |f, c| {
            let (Some(p), Some(g_star)) = (&f.phi, &f.dominating) else { return Outcome::Skip };
            let dominated = (0..f.n()).all(|v| f.graph.degree(v) <= g_star.degree(v))
                && partite::dominates(&g_star.degree_sequence(), &f.ds) == Ok(true);
            let omega_star = partite::clique_number(g_star).map(|c| c.size);
            ensure(dominated && omega_star == Ok(p.r), || {
                format!("omega(G*) = {omega_star:?}, phi = {}", p.r)
            })
        }),
        check!("y_monotone_under_domination", |f, c| {
            let Some(g_star) = &f.dominating else { return Outcome::Skip };
            let y_star = y_solver::solve_y(&g_star.degree_sequence()).y;
            ensure(y_star >= f.y.y - 1e-12, || format!("y(G*) = {y_star} < y(G) = {}", f.y.y))
        }),
    ]
}

fn first_failure(outcomes: impl Iterator<Item = Outcome>) -> Outcome {
    for o in outcomes {
        if let Outcome::Fail(_) = o {
            return o;
        }
    }
    Outcome::Pass
}

/// Smallest `k` with `|q − ψ_k| ≤ tol`, if any.
pub fn first_exact_psi_index(q: f64, lds: &LineDegreeSequence, tol: f64) -> Option<usize> {
    bounds::psi_all(lds)
        .iter()
        .position(|&p| (q - p).abs() <= tol)
        .map(|i| i + 1)
}

/// A graph with `n/(n − μ) > φ`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhiMuWitness {
    pub graph_id: String,
    pub graph6: String,
    pub phi: usize,
    pub mu_ratio: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PhiMuScan {
    pub examined: usize,
    /// Graphs over the exact-search limit.
    pub skipped: usize,
    pub witnesses: Vec<PhiMuWitness>,
}

/// Looks for graphs where Wilf's ratio `n/(n − μ)` exceeds `φ`. Finding
/// none is not an error.
pub fn scan_phi_mu(
    corpus: &[CorpusGraph],
    config: &VerifyConfig,
) -> Result<PhiMuScan, HarnessError> {
    let results: Vec<Option<Option<PhiMuWitness>>> = corpus
        .par_iter()
        .map(|c| {
            let Ok(cert) = partite::phi_number_with_limit(&c.graph, config.max_exact_n) else {
                return Ok(None);
            };
            let mu = spectral::mu_with(&c.graph, &config.spectral)?.value;
            let n = c.graph.order() as f64;
            let ratio = if n - mu <= STRICT_EPS { n } else { n / (n - mu) };
            Ok(Some((ratio > cert.r as f64 + STRICT_EPS).then(|| PhiMuWitness {
                graph_id: c.id.clone(),
                graph6: write_graph6(&c.graph),
                phi: cert.r,
                mu_ratio: ratio,
            })))
        })
        .collect::<Result<_, HarnessError>>()?;
    Ok(PhiMuScan {
        examined: results.iter().filter(|r| r.is_some()).count(),
        skipped: results.iter().filter(|r| r.is_none()).count(),
        witnesses: results.into_iter().flatten().flatten().collect(),
    })
}
