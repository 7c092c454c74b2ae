//! Full bound report for one graph.

use serde::Serialize;
use thiserror::Error;

use crate::bounds::{
    self, BoundEntry, BoundReport, FamilyMinimum, Irregularity, Side, Target, Targets,
};
use crate::graph::Graph;
use crate::graph6::write_graph6;
use crate::partite::{self, CliqueCertificate, PartitionCertificate};
use crate::spectral::{self, SpectralConfig, SpectralError, SpectralValue};
use crate::y_solver::{self, YSolution};

/// Tolerance for the `exact` flags in reports.
pub const EXACT_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AnalysisConfig {
    pub spectral: SpectralConfig,
    pub exact_tol: f64,
    /// Largest `n` for the exact `φ` search; the clique search also stops
    /// at 64 vertices.
    pub max_exact_n: usize,
}

impl Default for AnalysisConfig {
    fn default() -> Self {
        AnalysisConfig {
            spectral: SpectralConfig::default(),
            exact_tol: EXACT_TOL,
            max_exact_n: partite::DEFAULT_PHI_LIMIT,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AnalysisError {
    #[error("spectral computation failed: {0}")]
    Spectral(#[from] SpectralError),
}

/// Everything computed about one graph.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Analysis {
    pub graph_id: String,
    pub graph6: String,
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub mu: SpectralValue,
    pub q: SpectralValue,
    pub y: YSolution,
    pub z: Option<YSolution>,
    pub phi_min: FamilyMinimum,
    pub psi_min: Option<FamilyMinimum>,
    pub irregularity: Option<Irregularity>,
    pub omega: Option<CliqueCertificate>,
    pub phi: Option<PartitionCertificate>,
    /// Fields not computed, with the reason.
    pub skipped: Vec<String>,
    pub bounds: BoundReport,
}

impl Analysis {
    pub fn value(&self, name: &str) -> Option<f64> {
        self.bounds.value(name)
    }
}

pub fn analyze(
    graph_id: &str,
    g: &Graph,
    config: &AnalysisConfig,
) -> Result<Analysis, AnalysisError> {
    let ds = g.degree_sequence();
    let n = g.order();
    let m = g.size();
    let mu = spectral::mu_with(g, &config.spectral)?;
    let q = spectral::q_index_with(g, &config.spectral)?;
    let y = y_solver::solve_y(&ds);
    let phi_min = bounds::phi_min(&ds);
    let mut skipped = Vec::new();

    let mut report = BoundReport::new(graph_id);
    let upper = |name: &str, v: f64, t: Target| BoundEntry::new(name, v, Side::Upper, t);
    let phis = bounds::phi_all(&ds);
    report.entries.push(upper("mu_max_degree", phis[0], Target::Mu));
    if n >= 2 {
        report.entries.push(upper("mu_top_two", phis[1], Target::Mu));
    }
    report.entries.push(upper("mu_phi_last", phis[n - 1], Target::Mu));
    report.entries.push(upper("mu_phi_min", phi_min.value, Target::Mu));
    report.entries.push(upper("mu_y", y.y - 1.0, Target::Mu));

    let (mut z, mut psi_min, mut irregularity) = (None, None, None);
    if let Ok(lds) = g.line_degree_sequence() {
        let zs = y_solver::solve_z(&lds);
        let pm = bounds::psi_min(&lds);
        let psis = bounds::psi_all(&lds);
        let thm1 = bounds::nikiforov_q_bound(&ds).expect("m >= 1");
        report.entries.push(upper("q_nikiforov", thm1, Target::Q));
        report.entries.push(upper("q_psi_1", psis[0], Target::Q));
        if psis.len() >= 2 {
            report.entries.push(upper("q_psi_2", psis[1], Target::Q));
        }
        report.entries.push(upper("q_psi_min", pm.value, Target::Q));
        report.entries.push(upper("q_z", zs.y + 1.0, Target::Q));
        report
            .entries
            .extend(bounds::q_lower_bounds(&ds, &mu).expect("m >= 1"));
        report
            .entries
            .extend(bounds::clique_lower_bounds(&ds, &y, &mu).expect("m >= 1"));
        z = Some(zs);
        psi_min = Some(pm);
        irregularity = Some(bounds::irregularity(&ds).expect("m >= 1"));
    } else {
        skipped.push("q and clique bounds: graph has no edges".to_string());
    }

    let omega = match partite::clique_number(g) {
        Ok(c) => Some(c),
        Err(e) => {
            skipped.push(format!("omega: {e}"));
            None
        }
    };
    let phi = match partite::phi_number_with_limit(g, config.max_exact_n) {
        Ok(c) => Some(c),
        Err(e) => {
            skipped.push(format!("phi: {e}"));
            None
        }
    };
    if let (Some(w), Some(p)) = (&omega, &phi) {
        let ineq = partite::partite_inequalities(g, p.r, w.size, y.y, mu.value);
        report.entries.extend(ineq.entries(config.exact_tol));
    }

    report.annotate(
        &Targets {
            mu: Some(mu.value),
            q: Some(q.value),
            omega: omega.as_ref().map(|c| c.size),
            phi: phi.as_ref().map(|c| c.r),
        },
        config.exact_tol,
    );

    Ok(Analysis {
        graph_id: graph_id.to_string(),
        graph6: write_graph6(g),
        n,
        m,
        degrees: ds.as_slice().to_vec(),
        mu,
        q,
        y,
        z,
        phi_min,
        psi_min,
        irregularity,
        omega,
        phi,
        skipped,
        bounds: report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    fn run(f: Family) -> Analysis {
        analyze(&f.to_string(), &f.build().unwrap(), &AnalysisConfig::default()).unwrap()
    }

    #[test]
    fn wheel_four_is_exact_for_y() {
        let a = run(Family::Wheel(4));
        assert!((a.mu.value - 3.0).abs() < 1e-9);
        let e = a.bounds.get("mu_y").unwrap();
        assert!((e.value - 3.0).abs() < 1e-12);
        assert_eq!(e.exact, Some(true));
    }

    #[test]
    fn complete_bipartite_three_four() {
        let a = run(Family::CompleteBipartite(3, 4));
        assert!((a.q.value - 7.0).abs() < 1e-9);
        assert_eq!(a.bounds.get("q_psi_1").unwrap().exact, Some(true));
        assert_eq!(a.bounds.get("q_irregularity").unwrap().exact, Some(true));
        assert_eq!(a.bounds.violations().count(), 0);
    }

    #[test]
    fn path_three() {
        let a = run(Family::Path(3));
        let e = a.bounds.get("mu_top_two").unwrap();
        assert!((e.value - 2f64.sqrt()).abs() < 1e-12);
        assert_eq!(e.exact, Some(true));
        assert_eq!(a.omega.unwrap().size, 2);
        assert_eq!(a.phi.unwrap().r, 2);
    }

    #[test]
    fn edgeless_and_oversized_are_skipped() {
        let a = run(Family::Empty(3));
        assert!(a.z.is_none());
        assert_eq!(a.skipped.len(), 1);
        let big = run(Family::Cycle(20));
        assert!(big.phi.is_none());
        assert!(big.omega.is_some());
        assert!(big.skipped.iter().any(|s| s.starts_with("phi")));
    }
}
