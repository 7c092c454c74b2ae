//! Hand-derived and externally computed values for named graphs.

use degspec::bounds::{self, y_clique_ratio};
use degspec::graph6::{parse_graph6, write_graph6};
use degspec::partite::{clique_number, phi_number, phi_number_with_limit};
use degspec::report::{analyze, AnalysisConfig};
use degspec::{mu, q_index, solve_y, solve_z, Family, Graph, DEFAULT_TOL};

fn build(f: Family) -> Graph {
    f.build().unwrap()
}

#[test]
fn graph6_matches_external_encoder() {
    // Strings produced by networkx.to_graph6_bytes.
    assert_eq!(write_graph6(&build(Family::Complete(5))), "D~{");
    assert_eq!(write_graph6(&build(Family::Cycle(7))), "FhCKG");
    let petersen = parse_graph6("IheA@GUAo").unwrap();
    assert_eq!(petersen.order(), 10);
    assert!(petersen.is_regular() && petersen.size() == 15);
    let p70 = write_graph6(&build(Family::Path(70)));
    assert_eq!(p70.len(), 407);
    assert!(p70.starts_with("~?@EhCGGC@"));
    assert_eq!(parse_graph6(&p70).unwrap(), build(Family::Path(70)));
}

#[test]
fn small_irregular_graph_against_dense_eigensolver() {
    // numpy.linalg.eigvalsh on the adjacency and signless Laplacian.
    let g = parse_graph6("E|CG").unwrap();
    assert!((mu(&g, DEFAULT_TOL).unwrap().value - 2.6554423815498307).abs() < 1e-9);
    assert!((q_index(&g, DEFAULT_TOL).unwrap().value - 5.489288571810079).abs() < 1e-9);
}

#[test]
fn complete_bipartite_seven_nine() {
    let g = build(Family::CompleteBipartite(7, 9));
    let y = solve_y(&g.degree_sequence());
    assert!((y.y - (4.0 + 30f64.sqrt())).abs() < 1e-12);
    let ratio = y_clique_ratio(16, y.y);
    assert!((ratio - 2.13).abs() < 0.01);
    assert_eq!(clique_number(&g).unwrap().size, 2);
    // Over the default search limit unless raised.
    assert!(phi_number(&g).is_err());
    let cert = phi_number_with_limit(&g, 16).unwrap();
    assert_eq!(cert.sizes, vec![7, 9]);
}

#[test]
fn complete_tripartite_three_three_four() {
    let g = build(Family::CompleteMultipartite(vec![3, 3, 4]));
    let ratio = y_clique_ratio(10, solve_y(&g.degree_sequence()).y);
    assert!((ratio - 3.1).abs() < 0.05);
    assert_eq!(clique_number(&g).unwrap().size, 3);
    assert_eq!(phi_number(&g).unwrap().r, 3);
}

#[test]
fn k13_plus_first_exact_at_psi_3() {
    let g = build(Family::K13Plus);
    let lds = g.line_degree_sequence().unwrap();
    assert_eq!(lds.as_slice(), &[3, 3, 2, 2]);
    let q = q_index(&g, DEFAULT_TOL).unwrap().value;
    let psi = bounds::psi_all(&lds);
    assert!((q - psi[2]).abs() < 1e-9);
    assert!(q < psi[0] - 1e-3 && q < psi[1] - 1e-3);
    // z + 1 coincides with the smallest psi.
    assert!((solve_z(&lds).y + 1.0 - bounds::psi_min(&lds).value).abs() < 1e-12);
}

#[test]
fn wheels_are_exact_for_nikiforov_and_stars_for_psi_1() {
    for n in [5, 8, 13] {
        let g = build(Family::Wheel(n));
        let q = q_index(&g, DEFAULT_TOL).unwrap().value;
        let thm1 = bounds::nikiforov_q_bound(&g.degree_sequence()).unwrap();
        assert!((q - thm1).abs() < 1e-8, "wheel({n}): {q} vs {thm1}");
    }
    for n in [4, 9] {
        let g = build(Family::Star(n));
        let q = q_index(&g, DEFAULT_TOL).unwrap().value;
        assert!((q - n as f64).abs() < 1e-8);
        let lds = g.line_degree_sequence().unwrap();
        assert!((bounds::max_line_degree_q_bound(&lds) - q).abs() < 1e-8);
    }
}

#[test]
fn report_flags_match_equality_claims() {
    let config = AnalysisConfig::default();
    let exact = |f: Family, name: &str| {
        let a = analyze(&f.to_string(), &f.build().unwrap(), &config).unwrap();
        assert_eq!(a.bounds.violations().count(), 0, "{f}");
        a.bounds.get(name).unwrap().exact.unwrap()
    };
    assert!(exact(Family::Star(7), "mu_y"));
    assert!(exact(Family::Wheel(9), "mu_y"));
    assert!(exact(Family::CompleteBipartite(2, 5), "q_psi_1"));
    assert!(exact(Family::Circulant { n: 9, degree: 4 }, "q_psi_1"));
    assert!(exact(Family::K13Plus, "q_psi_min"));
    assert!(!exact(Family::K13Plus, "q_psi_1"));
    assert!(!exact(Family::K13Plus, "q_psi_2"));
    assert!(exact(Family::DoubleStar(4), "q_psi_2"));
}

#[test]
fn wilf_ratio_can_exceed_phi() {
    use degspec::harness::{scan_phi_mu, CorpusGraph, VerifyConfig};
    // K5 minus an edge, plus two isolated vertices: phi = 2 via parts
    // {0,1,2} and {3,4,5,6}, while n/(n - mu) = 7/(7 - 3.6458) = 2.087
    // (mu checked with numpy).
    let g = parse_graph6("F~w??").unwrap();
    assert!((mu(&g, DEFAULT_TOL).unwrap().value - 3.6457513110645903).abs() < 1e-9);
    assert_eq!(phi_number(&g).unwrap().sizes, vec![3, 4]);
    let scan = scan_phi_mu(&[CorpusGraph::new("w", g)], &VerifyConfig::default()).unwrap();
    assert_eq!(scan.witnesses.len(), 1);
    assert!((scan.witnesses[0].mu_ratio - 2.0869054888776595).abs() < 1e-8);
    // The smallest: the diamond plus an isolated vertex.
    let diamond = parse_graph6("DB[").unwrap();
    let scan = scan_phi_mu(&[CorpusGraph::new("d", diamond)], &VerifyConfig::default()).unwrap();
    assert_eq!(scan.witnesses[0].phi, 2);
    assert!((scan.witnesses[0].mu_ratio - 2.05048525400276).abs() < 1e-8);
}
