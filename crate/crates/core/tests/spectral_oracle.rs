//! μ and q against a dense cyclic Jacobi eigenvalue solver, which shares no
//! code with the power iteration under test.

use degspec::enumerate::all_labeled;
use degspec::families::{random_graph, SplitMix64};
use degspec::{mu, q_index, write_graph6, Graph, DEFAULT_TOL};

/// Largest eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
fn jacobi_max(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-26 {
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (akp, akq) = (row[p], row[q]);
                    row[p] = c * akp - s * akq;
                    row[q] = s * akp + c * akq;
                }
                let (head, tail) = a.split_at_mut(q);
                for (apk, aqk) in head[p].iter_mut().zip(tail[0].iter_mut()) {
                    let (x, y) = (*apk, *aqk);
                    *apk = c * x - s * y;
                    *aqk = s * x + c * y;
                }
            }
        }
    }
    (0..n).map(|i| a[i][i]).fold(f64::NEG_INFINITY, f64::max)
}

fn matrices(g: &Graph) -> (Vec<Vec<f64>>, Vec<Vec<f64>>) {
    let n = g.order();
    let mut a = vec![vec![0.0; n]; n];
    for &(u, v) in g.edges() {
        a[u][v] = 1.0;
        a[v][u] = 1.0;
    }
    let mut q = a.clone();
    for (v, row) in q.iter_mut().enumerate() {
        row[v] = g.degree(v) as f64;
    }
    (a, q)
}

fn compare(g: &Graph) {
    let (a, q) = matrices(g);
    let (mu_ref, q_ref) = (jacobi_max(a), jacobi_max(q));
    let mu_got = mu(g, DEFAULT_TOL).unwrap().value;
    let q_got = q_index(g, DEFAULT_TOL).unwrap().value;
    assert!((mu_got - mu_ref).abs() < 1e-8, "{}: mu {mu_got} vs {mu_ref}", write_graph6(g));
    assert!((q_got - q_ref).abs() < 1e-8, "{}: q {q_got} vs {q_ref}", write_graph6(g));
}

#[test]
fn jacobi_reproduces_known_spectra() {
    let petersen = degspec::parse_graph6("IheA@GUAo").unwrap();
    let (a, q) = matrices(&petersen);
    assert!((jacobi_max(a) - 3.0).abs() < 1e-10);
    assert!((jacobi_max(q) - 6.0).abs() < 1e-10);
}

#[test]
fn every_graph_on_five_vertices() {
    for g in all_labeled(5) {
        compare(&g);
    }
}

#[test]
fn random_graphs_up_to_thirty_vertices() {
    let mut rng = SplitMix64::new(7);
    for n in (8..=30).step_by(2) {
        for p in [0.1, 0.3, 0.6, 0.9] {
            compare(&random_graph(n, p, &mut rng).unwrap());
        }
    }
}
