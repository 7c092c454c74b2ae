//! The full invariant suite over exhaustive and random corpora.

use degspec::families::Family;
use degspec::harness::{standard_checks, verify, CorpusSource, CorpusSpec, VerifyConfig};

fn run(source: CorpusSource) {
    let corpus = CorpusSpec::new(source).materialize().unwrap();
    let summary = verify(&corpus, &standard_checks(), &VerifyConfig::default());
    for t in &summary.checks {
        assert_eq!(t.failed, 0, "{t:?}");
    }
}

#[test]
fn all_graphs_on_six_vertices() {
    let corpus = CorpusSpec::new(CorpusSource::Exhaustive { n: 6, connected: false })
        .materialize()
        .unwrap();
    let summary = verify(&corpus, &standard_checks(), &VerifyConfig::default());
    assert_eq!(summary.graphs, 32768);
    for t in &summary.checks {
        assert_eq!(t.failed, 0, "{t:?}");
        // Every check applies to some graph.
        assert!(t.passed > 0, "{} never ran", t.name);
    }
}

#[test]
fn connected_graphs_by_edge_count() {
    run(CorpusSource::ConnectedByEdges { min_m: 1, max_m: 8 });
}

#[test]
fn random_graphs() {
    for (n, p) in [(10, 0.2), (12, 0.5), (14, 0.8)] {
        run(CorpusSource::Random { n, p, count: 40, seed: n as u64 });
    }
}

#[test]
fn named_families() {
    run(CorpusSource::Named(vec![
        Family::Star(20),
        Family::Wheel(12),
        Family::CompleteBipartite(4, 9),
        Family::CompleteMultipartite(vec![1, 2, 3, 4]),
        Family::DoubleStar(5),
        Family::K13Plus,
        Family::Circulant { n: 12, degree: 5 },
        Family::Path(14),
        Family::Cycle(9),
        Family::Empty(4),
    ]));
}
