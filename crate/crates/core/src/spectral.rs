//! Spectral radius of the adjacency matrix `A` and of the signless
//! Laplacian `D + A`.
//!
//! Each connected component is handled separately by power iteration from
//! the all-ones vector. For `A` the iteration runs on `A + I`, which removes
//! the `±μ` oscillation of bipartite components; `D + A` is positive
//! semidefinite and needs no shift. Convergence is declared when the
//! residual `‖Mv − λv‖_∞ ≤ tol` with `‖v‖_∞ = 1`, so the returned residual
//! certifies the value. The graph's spectral radius is the maximum over
//! components.

use serde::Serialize;
use thiserror::Error;

use crate::graph::Graph;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITERATIONS: usize = 200_000;

/// A converged eigenvalue estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralValue {
    pub value: f64,
    /// `‖Mv − value·v‖_∞` for the returned eigenvector, normalised to `‖v‖_∞ = 1`.
    pub residual: f64,
    pub iterations: usize,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SpectralError {
    #[error("tolerance must be positive and finite, got {0}")]
    BadTolerance(f64),
    #[error(
        "power iteration did not converge after {iterations} iterations \
         (estimate {estimate}, residual {residual:e})"
    )]
    NoConvergence {
        estimate: f64,
        residual: f64,
        iterations: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralConfig {
    pub tol: f64,
    pub max_iterations: usize,
}

impl Default for SpectralConfig {
    fn default() -> Self {
        SpectralConfig {
            tol: DEFAULT_TOL,
            max_iterations: DEFAULT_MAX_ITERATIONS,
        }
    }
}

impl SpectralConfig {
    pub fn with_tol(tol: f64) -> Self {
        SpectralConfig {
            tol,
            ..Self::default()
        }
    }
}

#[derive(Clone, Copy)]
enum Operator {
    Adjacency,
    SignlessLaplacian,
}

/// Adjacency spectral radius `μ(G)`.
pub fn mu(g: &Graph, tol: f64) -> Result<SpectralValue, SpectralError> {
    mu_with(g, &SpectralConfig::with_tol(tol))
}

pub fn mu_with(g: &Graph, config: &SpectralConfig) -> Result<SpectralValue, SpectralError> {
    spectral_radius(g, Operator::Adjacency, config)
}

/// Signless Laplacian spectral radius `q(G)`, the largest eigenvalue of `D + A`.
pub fn q_index(g: &Graph, tol: f64) -> Result<SpectralValue, SpectralError> {
    q_index_with(g, &SpectralConfig::with_tol(tol))
}

pub fn q_index_with(g: &Graph, config: &SpectralConfig) -> Result<SpectralValue, SpectralError> {
    spectral_radius(g, Operator::SignlessLaplacian, config)
}

fn spectral_radius(
    g: &Graph,
    op: Operator,
    config: &SpectralConfig,
) -> Result<SpectralValue, SpectralError> {
    if !(config.tol > 0.0 && config.tol.is_finite()) {
        return Err(SpectralError::BadTolerance(config.tol));
    }
    let mut best = SpectralValue {
        value: 0.0,
        residual: 0.0,
        iterations: 0,
    };
    let mut total_iterations = 0;
    for comp in g.components() {
        if comp.len() == 1 {
            continue;
        }
        let local = component_adjacency(g, &comp);
        let sv = component_radius(&local, op, config)?;
        total_iterations += sv.iterations;
        if sv.value > best.value {
            best = sv;
        }
    }
    best.iterations = total_iterations;
    Ok(best)
}

/// Neighbor lists of the component relabelled to `0..comp.len()`.
fn component_adjacency(g: &Graph, comp: &[usize]) -> Vec<Vec<usize>> {
    comp.iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .map(|w| comp.binary_search(w).expect("neighbor in same component"))
                .collect()
        })
        .collect()
}

fn apply(adj: &[Vec<usize>], op: Operator, v: &[f64], out: &mut [f64]) {
    for (i, nbrs) in adj.iter().enumerate() {
        let s: f64 = nbrs.iter().map(|&j| v[j]).sum();
        out[i] = match op {
            Operator::Adjacency => s,
            Operator::SignlessLaplacian => s + nbrs.len() as f64 * v[i],
        };
    }
}

fn component_radius(
    adj: &[Vec<usize>],
    op: Operator,
    config: &SpectralConfig,
) -> Result<SpectralValue, SpectralError> {
    let size = adj.len();
    let shift = match op {
        Operator::Adjacency => 1.0,
        Operator::SignlessLaplacian => 0.0,
    };
    let mut v = vec![1.0; size];
    let mut mv = vec![0.0; size];
    let mut estimate = 0.0;
    let mut residual = f64::INFINITY;
    for iteration in 1..=config.max_iterations {
        apply(adj, op, &v, &mut mv);
        // Rayleigh quotient; `v` is nonnegative and non-zero throughout.
        let num: f64 = v.iter().zip(&mv).map(|(a, b)| a * b).sum();
        let den: f64 = v.iter().map(|a| a * a).sum();
        estimate = num / den;
        residual = v
            .iter()
            .zip(&mv)
            .map(|(a, b)| (b - estimate * a).abs())
            .fold(0.0, f64::max);
        if residual <= config.tol {
            return Ok(SpectralValue {
                value: estimate.max(0.0),
                residual,
                iterations: iteration,
            });
        }
        let mut norm = 0.0f64;
        for (x, y) in v.iter_mut().zip(&mv) {
            *x = y + shift * *x;
            norm = norm.max(x.abs());
        }
        for x in &mut v {
            *x /= norm;
        }
    }
    Err(SpectralError::NoConvergence {
        estimate,
        residual,
        iterations: config.max_iterations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Family;

    const TOL: f64 = 1e-10;

    fn mu_of(f: Family) -> f64 {
        mu(&f.build().unwrap(), TOL).unwrap().value
    }

    fn q_of(f: Family) -> f64 {
        q_index(&f.build().unwrap(), TOL).unwrap().value
    }

    #[test]
    fn closed_forms() {
        assert!((mu_of(Family::Star(10)) - 3.0).abs() < 1e-9);
        assert!((mu_of(Family::Wheel(4)) - 3.0).abs() < 1e-9);
        assert!((mu_of(Family::Cycle(7)) - 2.0).abs() < 1e-9);
        let p5 = 2.0 * (std::f64::consts::PI / 6.0).cos();
        assert!((mu_of(Family::Path(5)) - p5).abs() < 1e-9);
        assert!((q_of(Family::CompleteBipartite(3, 4)) - 7.0).abs() < 1e-9);
        assert!((q_of(Family::Cycle(5)) - 4.0).abs() < 1e-9);
    }

    #[test]
    fn degenerate_graphs_are_zero() {
        let single = Graph::empty(1).unwrap();
        let edgeless = Graph::empty(5).unwrap();
        for g in [&single, &edgeless] {
            let m = mu(g, TOL).unwrap();
            assert_eq!((m.value, m.residual, m.iterations), (0.0, 0.0, 0));
            assert_eq!(q_index(g, TOL).unwrap().value, 0.0);
        }
    }

    #[test]
    fn disconnected_takes_max_component() {
        // K_4 plus a disjoint path on three vertices.
        let mut edges: Vec<_> = (0..4)
            .flat_map(|u| (u + 1..4).map(move |v| (u, v)))
            .collect();
        edges.extend([(4, 5), (5, 6)]);
        let g = Graph::new(7, edges).unwrap();
        assert!((mu(&g, TOL).unwrap().value - 3.0).abs() < 1e-9);
        assert!((q_index(&g, TOL).unwrap().value - 6.0).abs() < 1e-9);
    }

    #[test]
    fn residual_is_certified() {
        let g = Family::Random {
            n: 30,
            p: 0.2,
            seed: 7,
        }
        .build()
        .unwrap();
        let sv = mu(&g, TOL).unwrap();
        assert!(sv.residual <= TOL);
        assert!(sv.iterations > 0);
    }

    #[test]
    fn rejects_bad_tolerance_and_reports_non_convergence() {
        let g = Family::Path(12).build().unwrap();
        assert!(matches!(mu(&g, 0.0), Err(SpectralError::BadTolerance(_))));
        let cfg = SpectralConfig {
            tol: 1e-14,
            max_iterations: 3,
        };
        match mu_with(&g, &cfg) {
            Err(SpectralError::NoConvergence { iterations, .. }) => assert_eq!(iterations, 3),
            other => panic!("expected non-convergence, got {other:?}"),
        }
    }
}
